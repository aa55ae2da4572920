#ifndef LFMRA_MRA_HPP
#define LFMRA_MRA_HPP

#include <map>
#include <optional>
#include <vector>

#include "lfmra/characters.hpp"
#include "lfmra/trees.hpp"

namespace lfmra {

/// 1-elementary mask table: lambda(i,j) is a p-th root-of-unity exponent, or
/// -1 for the zero entry. Row i of a tree mask has its single nonzero entry
/// at j = parent(i) (and lambda(0,0) = 1).
struct MaskTable {
    int q = 0;
    std::vector<int> lam; // q*q entries, lam[i*q+j]

    int at(int i, int j) const { return lam[static_cast<size_t>(i) * q + j]; }
    int& at(int i, int j) { return lam[static_cast<size_t>(i) * q + j]; }
};

/// Spectrum of the scaling function on cosets of (K_{-1}^+)^perp inside
/// (K_M^+)^perp. Keys are digit vectors (a_{-1}, ..., a_{M-1}) of length
/// M+1; the mapped value is a root-of-unity exponent. Absent key = 0.
struct SpectrumTable {
    int M = 0;
    std::map<std::vector<int>, int> vals;

    /// Value on the coset named by an arbitrary-length digit vector starting
    /// at index -1 (zero-padded or zero-checked beyond M).
    std::optional<int> value(const std::vector<int>& digits) const;
};

/// Refinement coefficients beta_h for shifts of depth <= N+1, keyed by the
/// untrimmed digit vector (a_{-1}, ..., a_{-N-1}).
struct CoeffTable {
    int N = 1;
    std::map<std::vector<int>, Cyclo> beta;
};

/// Optional per-edge root-of-unity exponents, keyed by the child vertex.
using LambdaAssignment = std::map<int, int>;

MaskTable mask_from_tree(const FieldParams& f, const RootedTree& t,
                         const LambdaAssignment& assignment = {});

/// m0 on the named coset: depends only on the digits at indices -1 and 0
/// (constant below -1, periodic above 0). Returns the root exponent or
/// nullopt for a zero of the mask.
std::optional<int> mask_eval(const MaskTable& m, const CosetId& coset);

SpectrumTable spectrum_from_tree(const FieldParams& f, const RootedTree& t,
                                 const MaskTable& m);

/// Independent construction: truncated product of mask values over dilated
/// cosets, restricted to (K_M^+)^perp. Throws MaskInvalidError if the product
/// fails to vanish on (K_{M+1}^+)^perp \ (K_M^+)^perp.
SpectrumTable spectrum_from_product(const FieldParams& f, const MaskTable& m, int M);

/// Solves the mask/coefficient linear system exactly by applying the
/// conjugate transpose of the unitary character matrix.
CoeffTable mask_to_coefficients(const FieldParams& f, const MaskTable& m, int N = 1);

/// Mask value on coset k reconstructed from the coefficients (the inverse
/// direction of mask_to_coefficients), for round-trip checks.
Cyclo coeffs_to_mask_value(const FieldParams& f, const CoeffTable& c, const CosetId& coset);

/// Character pairing (chi_coset, A^{-1} h) used by the coefficient system.
Cyclo coset_shift_pairing(const FieldParams& f, const CosetId& coset, const ShiftH0& h);

} // namespace lfmra

#endif
