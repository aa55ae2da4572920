#include "lfmra/mra.hpp"

#include <algorithm>
#include <functional>

namespace lfmra {

std::optional<int> SpectrumTable::value(const std::vector<int>& digits) const {
    std::vector<int> key(M + 1, 0);
    for (size_t t = 0; t < digits.size(); ++t) {
        if (static_cast<int>(t) <= M) {
            key[t] = digits[t];
        } else if (digits[t] != 0) {
            return std::nullopt; // outside (K_M^+)^perp
        }
    }
    auto it = vals.find(key);
    if (it == vals.end()) return std::nullopt;
    return it->second;
}

MaskTable mask_from_tree(const FieldParams& f, const RootedTree& t,
                         const LambdaAssignment& assignment) {
    int q = f.order();
    MaskTable m;
    m.q = q;
    m.lam.assign(static_cast<size_t>(q) * q, -1);
    m.at(0, 0) = 0;
    for (int v = 1; v < q; ++v) m.at(v, t.parent[v]) = 0;
    for (auto [v, e] : assignment) {
        if (v <= 0 || v >= q)
            throw ValidationError("lambda assignment: key is not a nonzero vertex");
        if (e < 0 || e >= f.p())
            throw ValidationError("lambda assignment: exponent out of range");
        m.at(v, t.parent[v]) = e;
    }
    return m;
}

std::optional<int> mask_eval(const MaskTable& m, const CosetId& coset) {
    if (coset.N != 1) throw ValidationError("mask_eval: coset must have N = 1");
    if (coset.digits.size() != static_cast<size_t>(coset.N + coset.M))
        throw ValidationError("mask_eval: malformed coset digits");
    int a1 = coset.digits[0];
    int a0 = coset.digits.size() > 1 ? coset.digits[1] : 0;
    int e = m.at(a1, a0);
    if (e < 0) return std::nullopt;
    return e;
}

SpectrumTable spectrum_from_tree(const FieldParams& f, const RootedTree& t,
                                 const MaskTable& m) {
    if (m.q != f.order()) throw ValidationError("spectrum_from_tree: tree/mask mismatch");
    SpectrumTable s;
    s.M = t.height - 2;
    s.vals[std::vector<int>(s.M + 1, 0)] = 0;
    for (int v = 1; v < f.order(); ++v) {
        auto path = tree_path(t, v);
        std::vector<int> digits(s.M + 1, 0);
        int e = 0;
        // path = (0, u_j, ..., v); coset digits are the reversed tail
        for (size_t i = 1; i < path.size(); ++i) {
            digits[path.size() - 1 - i] = path[i];
            int lam = m.at(path[i], t.parent[path[i]]);
            if (lam < 0) throw ValidationError("spectrum_from_tree: mask misses a tree edge");
            e = (e + lam) % f.p();
        }
        s.vals[digits] = e;
    }
    return s;
}

SpectrumTable spectrum_from_product(const FieldParams& f, const MaskTable& m, int M) {
    if (M < 0) throw ValidationError("spectrum_from_product: M must be >= 0");
    int q = f.order();
    SpectrumTable s;
    s.M = M;
    // digits[t] is the exponent at index t-1, for t = 0..M+1; the telescoped
    // product is prod_{n=0}^{M+1} lambda(d_{n-1}, d_n) with d_{M+1} = 0.
    std::vector<int> digits(M + 2, 0);
    std::function<void(int, int, int)> dfs = [&](int pos, int above, int acc) {
        if (pos < 0) {
            if (digits[M + 1] != 0)
                throw MaskInvalidError(
                    "mask product does not vanish on the (K_{M+1})^perp annulus");
            s.vals[std::vector<int>(digits.begin(), digits.begin() + M + 1)] = acc;
            return;
        }
        for (int d = 0; d < q; ++d) {
            int lam = m.at(d, above);
            if (lam < 0) continue; // zero factor kills the whole branch
            digits[pos] = d;
            dfs(pos - 1, d, (acc + lam) % f.p());
        }
        digits[pos] = 0;
    };
    dfs(M + 1, 0, 0);
    return s;
}

Cyclo coset_shift_pairing(const FieldParams& f, const CosetId& coset, const ShiftH0& h) {
    LocalElem x = dilate_field(shift_to_local(h), -1); // A^{-1} h
    return char_eval_cyclo(f, coset_rep(coset), x);
}

CoeffTable mask_to_coefficients(const FieldParams& f, const MaskTable& m, int N) {
    int q = f.order();
    CoeffTable c;
    c.N = N;
    auto shifts = h0_enumerate(f, N + 1);
    // all cosets (K_{-N})^perp r_{-N}^{a_{-N}} ... r_0^{a_0}
    std::vector<CosetId> cosets;
    long long total = 1;
    for (int i = 0; i <= N; ++i) total *= q;
    for (long long k = 0; k < total; ++k) {
        CosetId id;
        id.N = N;
        id.M = 1;
        id.digits.resize(N + 1);
        long long t = k;
        for (int i = N; i >= 0; --i) { // a_0 least significant per the k-index
            id.digits[i] = static_cast<int>(t % q);
            t /= q;
        }
        cosets.push_back(std::move(id));
    }
    for (const auto& h : shifts) {
        Cyclo beta(f.p());
        for (const auto& id : cosets) {
            // m0 depends on the digits at indices -1 and 0 only
            int a1 = id.digits[N - 1], a0 = id.digits[N];
            int lam = m.at(a1, a0);
            if (lam < 0) continue;
            Cyclo mv = Cyclo::from_root(RootOfUnity{f.p(), lam});
            beta = beta + coset_shift_pairing(f, id, h) * mv;
        }
        std::vector<int> key(N + 1, 0);
        std::copy(h.digits.begin(), h.digits.end(), key.begin());
        c.beta.emplace(std::move(key), beta.scaled(f.s() * N));
    }
    return c;
}

Cyclo coeffs_to_mask_value(const FieldParams& f, const CoeffTable& c, const CosetId& coset) {
    Cyclo sum(f.p());
    for (const auto& [key, beta] : c.beta) {
        ShiftH0 h = make_shift(key);
        sum = sum + beta * coset_shift_pairing(f, coset, h).conj();
    }
    return sum.scaled(f.s());
}

} // namespace lfmra
