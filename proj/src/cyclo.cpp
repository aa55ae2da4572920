#include "lfmra/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lfmra {

Cyclo::Cyclo(int p) : p_(p), c_(p, 0) {
    if (p < 2) throw ValidationError("Cyclo: p must be >= 2");
}

Cyclo Cyclo::integer(int p, long long n) {
    Cyclo z(p);
    z.c_[0] = n;
    z.canonicalize();
    return z;
}

Cyclo Cyclo::from_root(const RootOfUnity& r) {
    if (r.exponent < 0 || r.exponent >= r.p)
        throw ValidationError("RootOfUnity: exponent out of range");
    Cyclo z(r.p);
    z.c_[r.exponent] = 1;
    z.canonicalize();
    return z;
}

Cyclo Cyclo::p_power_rational(int p, long long n, int m) {
    Cyclo z = integer(p, n);
    z.scale_ += m;
    z.canonicalize();
    return z;
}

bool Cyclo::coeffs_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long long v) { return v == 0; });
}

void Cyclo::canonicalize() {
    // pin coefficient of zeta^{p-1} to zero
    long long top = c_[p_ - 1];
    if (top != 0) {
        for (int j = 0; j < p_ - 1; ++j) c_[j] -= top;
        c_[p_ - 1] = 0;
    }
    if (coeffs_zero()) {
        scale_ = 0;
        return;
    }
    for (;;) {
        bool divisible = std::all_of(c_.begin(), c_.end(),
                                     [this](long long v) { return v % p_ == 0; });
        if (!divisible) break;
        for (auto& v : c_) v /= p_;
        --scale_;
    }
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    if (p_ != o.p_) throw FieldMismatchError("Cyclo: mismatched p");
    Cyclo r(p_);
    int m = std::max(scale_, o.scale_);
    long long fa = 1, fb = 1;
    for (int k = scale_; k < m; ++k) fa *= p_;
    for (int k = o.scale_; k < m; ++k) fb *= p_;
    for (int j = 0; j < p_; ++j) r.c_[j] = c_[j] * fa + o.c_[j] * fb;
    r.scale_ = m;
    r.canonicalize();
    return r;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    if (p_ != o.p_) throw FieldMismatchError("Cyclo: mismatched p");
    Cyclo r(p_);
    for (int i = 0; i < p_; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < p_; ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[(i + j) % p_] += c_[i] * o.c_[j];
        }
    }
    r.scale_ = scale_ + o.scale_;
    r.canonicalize();
    return r;
}

Cyclo Cyclo::conj() const {
    Cyclo r(p_);
    for (int j = 0; j < p_; ++j) r.c_[(p_ - j) % p_] = c_[j];
    r.scale_ = scale_;
    r.canonicalize();
    return r;
}

Cyclo Cyclo::scaled(int m) const {
    Cyclo r = *this;
    r.scale_ += m;
    r.canonicalize();
    return r;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (p_ != o.p_) return false;
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return scale_ == o.scale_ && c_ == o.c_;
}

bool Cyclo::equals_rational(long long n, int m) const {
    return *this == p_power_rational(p_, n, m);
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> z = 0;
    for (int j = 0; j < p_; ++j) {
        double ang = 2.0 * std::numbers::pi * j / p_;
        z += static_cast<double>(c_[j]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z * std::pow(static_cast<double>(p_), -scale_);
}

} // namespace lfmra
