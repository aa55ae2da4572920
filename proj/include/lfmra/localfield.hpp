#ifndef LFMRA_LOCALFIELD_HPP
#define LFMRA_LOCALFIELD_HPP

#include <map>
#include <optional>
#include <vector>

#include "lfmra/gf.hpp"

namespace lfmra {

/// Truncated element of F^(s): digit at index lo+i is digits[i] (a GF(p^s)
/// element index), zero outside the window. Canonical form has no zero digits
/// at either end; the zero element is the empty window.
struct LocalElem {
    int lo = 0;
    std::vector<int> digits;

    bool is_zero() const { return digits.empty(); }
    int hi() const { return lo + static_cast<int>(digits.size()); }
    /// digit at arbitrary index (0 outside the window)
    int at(int n) const {
        return (n >= lo && n < hi()) ? digits[n - lo] : 0;
    }
    bool operator==(const LocalElem&) const = default;
};

/// Build from a possibly non-canonical window.
LocalElem make_local(int lo, std::vector<int> digits);
/// Single digit u at index n.
LocalElem unit_local(int n, int u = 1);

LocalElem lf_add(const FieldParams& f, const LocalElem& a, const LocalElem& b);
LocalElem lf_neg(const FieldParams& f, const LocalElem& a);
LocalElem lf_mul(const FieldParams& f, const LocalElem& a, const LocalElem& b);
LocalElem scalar_mul(const FieldParams& f, int lambda, const LocalElem& a);

/// Norm as p^{-s*n} with n the leading index; nullopt for the zero element
/// (whose norm is 0 by convention).
std::optional<int> lf_norm_exponent(const LocalElem& a);
double lf_norm(const FieldParams& f, const LocalElem& a);

/// Dilation A: digit index n -> n-1 (k applications; negative k inverts).
LocalElem dilate_field(const LocalElem& a, int k = 1);

/// Coefficients lambda_n of a = sum lambda_n basic[n] over the window of a,
/// by greedy leading-digit elimination. basic maps index n to an element with
/// leading index exactly n.
std::map<int, int> basis_expand(const FieldParams& f, const LocalElem& a,
                                const std::map<int, LocalElem>& basic);

/// Shift lattice element: digits[i] is the GF index at position -1-i.
/// Canonical form trims trailing zeros.
struct ShiftH0 {
    std::vector<int> digits;
    int depth() const { return static_cast<int>(digits.size()); }
    int at_neg(int n) const { // digit at index -n, n >= 1
        return (n >= 1 && n <= depth()) ? digits[n - 1] : 0;
    }
    bool operator==(const ShiftH0&) const = default;
};

ShiftH0 make_shift(std::vector<int> digits);
LocalElem shift_to_local(const ShiftH0& h);

/// All p^{sL} shifts of depth <= L, ordered by the base-p^s integer of
/// (a_{-1}, ..., a_{-L}) with a_{-1} least significant.
std::vector<ShiftH0> h0_enumerate(const FieldParams& f, int L);

} // namespace lfmra

#endif
