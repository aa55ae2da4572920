#ifndef LFMRA_CHARACTERS_HPP
#define LFMRA_CHARACTERS_HPP

#include <optional>
#include <vector>

#include "lfmra/cyclo.hpp"
#include "lfmra/localfield.hpp"

namespace lfmra {

/// Character of F^(s)+ as a finite exponent window: the exponent of the
/// Rademacher block r_k is exps[k - lo] (a GF(p^s) index), zero outside.
/// Canonical form trims zero exponents at both ends.
struct Character {
    int lo = 0;
    std::vector<int> exps;

    bool is_identity() const { return exps.empty(); }
    int hi() const { return lo + static_cast<int>(exps.size()); }
    int at(int k) const {
        return (k >= lo && k < hi()) ? exps[k - lo] : 0;
    }
    bool operator==(const Character&) const = default;
};

/// Names the coset (K_{-N}^+)^perp r_{-N}^{d_0} ... r_{M-1}^{d_{N+M-1}};
/// digits are ordered lowest index first.
struct CosetId {
    int N = 1;
    int M = 0;
    std::vector<int> digits; // size N+M
    bool operator<(const CosetId& o) const {
        if (N != o.N) return N < o.N;
        if (M != o.M) return M < o.M;
        return digits < o.digits;
    }
    bool operator==(const CosetId&) const = default;
};

Character make_character(int lo, std::vector<int> exps);
/// r_k^u
Character rademacher(int k, int u = 1);

/// Pairing (chi, x): p-th root of unity with exponent
/// sum_k <a_k, x_k> mod p over the overlap window.
RootOfUnity char_eval(const FieldParams& f, const Character& chi, const LocalElem& x);
Cyclo char_eval_cyclo(const FieldParams& f, const Character& chi, const LocalElem& x);

Character char_mul(const FieldParams& f, const Character& a, const Character& b);
Character char_inv(const FieldParams& f, const Character& a);
/// chi^b, exponent-wise multiplication by b in GF(p^s)
Character char_pow(const FieldParams& f, const Character& chi, int b);
/// chi A^k: exponent indices shifted up by k (adjoint of field dilation)
Character dilate_char(const Character& chi, int k = 1);

/// Requires chi in (K_M^+)^perp, i.e. no exponents at indices >= M.
CosetId coset_of(const Character& chi, int N, int M);
Character coset_rep(const CosetId& c);

/// Level n with chi in (K_n^+)^perp \ (K_{n-1}^+)^perp; nullopt for the
/// identity character.
std::optional<int> annihilator_level(const Character& chi);

} // namespace lfmra

#endif
