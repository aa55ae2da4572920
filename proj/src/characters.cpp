#include "lfmra/characters.hpp"

#include <algorithm>

namespace lfmra {

Character make_character(int lo, std::vector<int> exps) {
    Character c;
    c.lo = lo;
    c.exps = std::move(exps);
    while (!c.exps.empty() && c.exps.back() == 0) c.exps.pop_back();
    size_t lead = 0;
    while (lead < c.exps.size() && c.exps[lead] == 0) ++lead;
    if (lead > 0) {
        c.exps.erase(c.exps.begin(), c.exps.begin() + lead);
        c.lo += static_cast<int>(lead);
    }
    if (c.exps.empty()) c.lo = 0;
    return c;
}

Character rademacher(int k, int u) {
    return make_character(k, {u});
}

RootOfUnity char_eval(const FieldParams& f, const Character& chi, const LocalElem& x) {
    int e = 0;
    int lo = std::max(chi.lo, x.lo), hi = std::min(chi.hi(), x.hi());
    for (int k = lo; k < hi; ++k)
        e = (e + f.dot(chi.at(k), x.at(k))) % f.p();
    return RootOfUnity{f.p(), e};
}

Cyclo char_eval_cyclo(const FieldParams& f, const Character& chi, const LocalElem& x) {
    return Cyclo::from_root(char_eval(f, chi, x));
}

Character char_mul(const FieldParams& f, const Character& a, const Character& b) {
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    int lo = std::min(a.lo, b.lo), hi = std::max(a.hi(), b.hi());
    std::vector<int> e(hi - lo);
    for (int k = lo; k < hi; ++k) e[k - lo] = f.add(a.at(k), b.at(k));
    return make_character(lo, std::move(e));
}

Character char_inv(const FieldParams& f, const Character& a) {
    std::vector<int> e(a.exps.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = f.neg(a.exps[i]);
    return make_character(a.lo, std::move(e));
}

Character char_pow(const FieldParams& f, const Character& chi, int b) {
    std::vector<int> e(chi.exps.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = f.mul(chi.exps[i], b);
    return make_character(chi.lo, std::move(e));
}

Character dilate_char(const Character& chi, int k) {
    if (chi.is_identity()) return chi;
    Character r = chi;
    r.lo += k;
    return r;
}

CosetId coset_of(const Character& chi, int N, int M) {
    if (N < 1 || M < 0) throw ValidationError("coset_of: need N >= 1, M >= 0");
    if (chi.hi() > M)
        throw ValidationError("coset_of: character has exponents at indices >= M");
    CosetId c;
    c.N = N;
    c.M = M;
    c.digits.resize(N + M);
    for (int k = -N; k < M; ++k) c.digits[k + N] = chi.at(k);
    return c;
}

Character coset_rep(const CosetId& c) {
    return make_character(-c.N, c.digits);
}

std::optional<int> annihilator_level(const Character& chi) {
    if (chi.is_identity()) return std::nullopt;
    return chi.hi(); // highest nonzero index + 1
}

} // namespace lfmra
