#include "lfmra/localfield.hpp"

#include <algorithm>
#include <cmath>

namespace lfmra {

LocalElem make_local(int lo, std::vector<int> digits) {
    LocalElem a;
    a.lo = lo;
    a.digits = std::move(digits);
    while (!a.digits.empty() && a.digits.back() == 0) a.digits.pop_back();
    size_t lead = 0;
    while (lead < a.digits.size() && a.digits[lead] == 0) ++lead;
    if (lead > 0) {
        a.digits.erase(a.digits.begin(), a.digits.begin() + lead);
        a.lo += static_cast<int>(lead);
    }
    if (a.digits.empty()) a.lo = 0;
    return a;
}

LocalElem unit_local(int n, int u) {
    return make_local(n, {u});
}

LocalElem lf_add(const FieldParams& f, const LocalElem& a, const LocalElem& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo, b.lo), hi = std::max(a.hi(), b.hi());
    std::vector<int> d(hi - lo);
    for (int n = lo; n < hi; ++n) d[n - lo] = f.add(a.at(n), b.at(n));
    return make_local(lo, std::move(d));
}

LocalElem lf_neg(const FieldParams& f, const LocalElem& a) {
    std::vector<int> d(a.digits.size());
    for (size_t i = 0; i < d.size(); ++i) d[i] = f.neg(a.digits[i]);
    return make_local(a.lo, std::move(d));
}

LocalElem lf_mul(const FieldParams& f, const LocalElem& a, const LocalElem& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<int> d(a.digits.size() + b.digits.size() - 1, 0);
    for (size_t i = 0; i < a.digits.size(); ++i)
        for (size_t j = 0; j < b.digits.size(); ++j)
            d[i + j] = f.add(d[i + j], f.mul(a.digits[i], b.digits[j]));
    return make_local(a.lo + b.lo, std::move(d));
}

LocalElem scalar_mul(const FieldParams& f, int lambda, const LocalElem& a) {
    std::vector<int> d(a.digits.size());
    for (size_t i = 0; i < d.size(); ++i) d[i] = f.mul(lambda, a.digits[i]);
    return make_local(a.lo, std::move(d));
}

std::optional<int> lf_norm_exponent(const LocalElem& a) {
    if (a.is_zero()) return std::nullopt;
    return a.lo;
}

double lf_norm(const FieldParams& f, const LocalElem& a) {
    auto n = lf_norm_exponent(a);
    if (!n) return 0.0;
    return std::pow(static_cast<double>(f.p()), -static_cast<double>(f.s()) * *n);
}

LocalElem dilate_field(const LocalElem& a, int k) {
    if (a.is_zero()) return a;
    LocalElem r = a;
    r.lo -= k;
    return r;
}

std::map<int, int> basis_expand(const FieldParams& f, const LocalElem& a,
                                const std::map<int, LocalElem>& basic) {
    std::map<int, int> lambda;
    LocalElem rest = a;
    // the true expansion is an infinite series; coefficients are produced for
    // the window of a, and the re-sum agrees with a on that window
    while (!rest.is_zero() && rest.lo < a.hi()) {
        int n = rest.lo;
        auto it = basic.find(n);
        if (it == basic.end())
            throw ValidationError("basis_expand: no basic element at index " + std::to_string(n));
        const LocalElem& g = it->second;
        if (g.lo != n)
            throw ValidationError("basis_expand: basic element has wrong leading index");
        int coeff = f.mul(rest.digits[0], f.inv(g.digits[0]));
        lambda[n] = coeff;
        rest = lf_add(f, rest, lf_neg(f, scalar_mul(f, coeff, g)));
        if (!rest.is_zero() && rest.lo <= n)
            throw Error("basis_expand: leading digit did not cancel");
    }
    return lambda;
}

ShiftH0 make_shift(std::vector<int> digits) {
    ShiftH0 h;
    h.digits = std::move(digits);
    while (!h.digits.empty() && h.digits.back() == 0) h.digits.pop_back();
    return h;
}

LocalElem shift_to_local(const ShiftH0& h) {
    std::vector<int> d(h.digits.rbegin(), h.digits.rend());
    return make_local(-h.depth(), std::move(d));
}

std::vector<ShiftH0> h0_enumerate(const FieldParams& f, int L) {
    if (L < 0) throw ValidationError("h0_enumerate: negative depth");
    long long q = f.order(), total = 1;
    for (int i = 0; i < L; ++i) total *= q;
    std::vector<ShiftH0> r;
    r.reserve(total);
    for (long long v = 0; v < total; ++v) {
        std::vector<int> d(L);
        long long t = v;
        for (int i = 0; i < L; ++i) {
            d[i] = static_cast<int>(t % q);
            t /= q;
        }
        r.push_back(make_shift(std::move(d)));
    }
    return r;
}

} // namespace lfmra
