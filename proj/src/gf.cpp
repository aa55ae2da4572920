#include "lfmra/gf.hpp"

#include <algorithm>

namespace lfmra {

namespace {

// polynomials over GF(p), ascending coefficients, no leading zeros
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// remainder of a modulo monic m
Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    while (a.size() >= m.size()) {
        int c = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            int& t = a[shift + i];
            t = ((t - c * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_from_value(long long v, int p) {
    Poly r;
    while (v > 0) {
        r.push_back(static_cast<int>(v % p));
        v /= p;
    }
    return r;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_irreducible(const std::vector<int>& coeffs, int p) {
    if (!is_prime(p)) throw ValidationError("is_irreducible: p is not prime");
    Poly a = coeffs;
    trim(a);
    if (a.size() < 2) throw ValidationError("is_irreducible: degree must be >= 1");
    for (int c : a)
        if (c < 0 || c >= p) throw ValidationError("is_irreducible: coefficient out of range");
    int deg = static_cast<int>(a.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        // all monic divisors of degree d
        for (long long v = 0; v < ipow(p, d); ++v) {
            Poly m = poly_from_value(v, p);
            m.resize(d + 1, 0);
            m[d] = 1;
            if (poly_mod(a, m, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> find_irreducible(int p, int s) {
    if (!is_prime(p)) throw ValidationError("find_irreducible: p is not prime");
    if (s < 1) throw ValidationError("find_irreducible: s must be >= 1");
    for (long long v = 0; v < ipow(p, s); ++v) {
        Poly m = poly_from_value(v, p);
        m.resize(s + 1, 0);
        m[s] = 1;
        if (is_irreducible(m, p)) return m;
    }
    throw Error("find_irreducible: no irreducible polynomial found"); // unreachable
}

FieldParams::FieldParams(int p, int s, std::vector<int> modulus)
    : p_(p), s_(s), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw ValidationError("FieldParams: p is not prime");
    if (s_ < 1) throw ValidationError("FieldParams: s must be >= 1");
    if (static_cast<int>(modulus_.size()) != s_ + 1)
        throw ValidationError("FieldParams: modulus must have s+1 coefficients");
    if (modulus_.back() != 1)
        throw ValidationError("FieldParams: modulus must be monic");
    if (!is_irreducible(modulus_, p_))
        throw ValidationError("FieldParams: modulus is reducible");
    long long q = ipow(p_, s_);
    if (q > (1 << 16))
        throw ValidationError("FieldParams: p^s too large for this build");
    q_ = static_cast<int>(q);
    if (q_ <= 4096) {
        mul_table_.resize(static_cast<size_t>(q_) * q_);
        inv_table_.assign(q_, 0);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b <= a; ++b) {
                int m = mul_poly(a, b);
                mul_table_[static_cast<size_t>(a) * q_ + b] = static_cast<uint16_t>(m);
                mul_table_[static_cast<size_t>(b) * q_ + a] = static_cast<uint16_t>(m);
                if (m == 1) {
                    inv_table_[a] = static_cast<uint16_t>(b);
                    inv_table_[b] = static_cast<uint16_t>(a);
                }
            }
    }
}

FieldParams FieldParams::make(int p, int s) {
    return FieldParams(p, s, find_irreducible(p, s));
}

int FieldParams::add(int a, int b) const {
    int r = 0;
    for (int pw = 1; pw < q_; pw *= p_) {
        int da = (a / pw) % p_, db = (b / pw) % p_;
        r += ((da + db) % p_) * pw;
    }
    return r;
}

int FieldParams::neg(int a) const {
    int r = 0;
    for (int pw = 1; pw < q_; pw *= p_) {
        int da = (a / pw) % p_;
        r += ((p_ - da) % p_) * pw;
    }
    return r;
}

int FieldParams::sub(int a, int b) const { return add(a, neg(b)); }

int FieldParams::mul_poly(int a, int b) const {
    Poly pa = poly_from_value(a, p_), pb = poly_from_value(b, p_);
    Poly r = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
    long long v = 0;
    for (size_t i = r.size(); i-- > 0;) v = v * p_ + r[i];
    return static_cast<int>(v);
}

int FieldParams::mul(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
    return mul_poly(a, b);
}

int FieldParams::inv(int a) const {
    if (a == 0) throw ZeroDivisionError("gf_inv: zero has no inverse");
    if (!inv_table_.empty()) return inv_table_[a];
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw Error("gf_inv: no inverse found"); // unreachable in a field
}

GFElem FieldParams::elem(int index) const {
    GFElem e;
    e.d.resize(s_);
    for (int j = 0; j < s_; ++j) {
        e.d[j] = index % p_;
        index /= p_;
    }
    return e;
}

int FieldParams::index(const GFElem& a) const {
    if (static_cast<int>(a.d.size()) != s_)
        throw ValidationError("GFElem: expected exactly s digits");
    int v = 0;
    for (int j = s_ - 1; j >= 0; --j) {
        if (a.d[j] < 0 || a.d[j] >= p_)
            throw ValidationError("GFElem: digit out of range");
        v = v * p_ + a.d[j];
    }
    return v;
}

int FieldParams::dot(int a, int b) const {
    int r = 0;
    for (int pw = 1; pw < q_; pw *= p_)
        r += ((a / pw) % p_) * ((b / pw) % p_);
    return r % p_;
}

GFElem gf_add(const FieldParams& f, const GFElem& a, const GFElem& b) {
    return f.elem(f.add(f.index(a), f.index(b)));
}

GFElem gf_mul(const FieldParams& f, const GFElem& a, const GFElem& b) {
    return f.elem(f.mul(f.index(a), f.index(b)));
}

GFElem gf_inv(const FieldParams& f, const GFElem& a) {
    return f.elem(f.inv(f.index(a)));
}

std::vector<GFElem> enumerate_gf(const FieldParams& f) {
    std::vector<GFElem> r;
    r.reserve(f.order());
    for (int i = 0; i < f.order(); ++i) r.push_back(f.elem(i));
    return r;
}

} // namespace lfmra
