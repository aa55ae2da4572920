#ifndef LFMRA_APPROX_HPP
#define LFMRA_APPROX_HPP

#include <complex>
#include <map>
#include <vector>

#include "lfmra/trees.hpp"

namespace lfmra {

/// Floating-complex mask for arbitrary unimodular lambda values. This pathway
/// is numeric (absolute tolerance) and never certifies anything; the exact
/// cyclotomic pathway is the authoritative one.
struct ApproxMask {
    int q = 0;
    std::vector<std::complex<double>> lam; // q*q entries, 0 for a zero entry

    std::complex<double> at(int i, int j) const {
        return lam[static_cast<size_t>(i) * q + j];
    }
    std::complex<double>& at(int i, int j) {
        return lam[static_cast<size_t>(i) * q + j];
    }
};

/// Phase per child vertex, as a fraction of a full turn: lambda = e^{2 pi i t}.
using PhaseAssignment = std::map<int, double>;

ApproxMask approx_mask_from_tree(const FieldParams& f, const RootedTree& t,
                                 const PhaseAssignment& phases);

/// Spectrum values on the nonzero cosets, keyed like the exact table.
std::map<std::vector<int>, std::complex<double>>
approx_spectrum_from_tree(const FieldParams& f, const RootedTree& t,
                          const ApproxMask& m);

/// Unimodularity of the nonzero entries, the per-row sum condition and the
/// per-xi spectral sum condition, all within an absolute tolerance.
bool approx_check(const FieldParams& f, const ApproxMask& m,
                  const std::map<std::vector<int>, std::complex<double>>& spec,
                  double tol = 1e-9);

} // namespace lfmra

#endif
