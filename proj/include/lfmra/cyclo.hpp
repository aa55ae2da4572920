#ifndef LFMRA_CYCLO_HPP
#define LFMRA_CYCLO_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "lfmra/common.hpp"

namespace lfmra {

/// e^{2 pi i exponent / p}
struct RootOfUnity {
    int p = 2;
    int exponent = 0; // in [0,p)
    bool operator==(const RootOfUnity&) const = default;
};

/// Exact value in Z[zeta_p] scaled by a power of p:
///   p^{-scale} * sum_j coeffs[j] zeta^j.
/// Canonical form keeps coeffs[p-1] == 0 (via 1+zeta+...+zeta^{p-1} = 0) and
/// the coeffs not all divisible by p unless the value is zero.
class Cyclo {
  public:
    explicit Cyclo(int p); // zero
    static Cyclo integer(int p, long long n);
    static Cyclo from_root(const RootOfUnity& r);
    /// n * p^{-m}
    static Cyclo p_power_rational(int p, long long n, int m);

    int p() const { return p_; }
    int scale() const { return scale_; }
    const std::vector<long long>& coeffs() const { return c_; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo conj() const;
    /// |z|^2 = z * conj(z)
    Cyclo norm2() const { return *this * conj(); }

    /// multiply by p^{-m}
    Cyclo scaled(int m) const;

    bool is_zero() const { return c_.empty() || coeffs_zero(); }
    bool operator==(const Cyclo& o) const;
    bool equals_rational(long long n, int m) const; // value == n * p^{-m}

    std::complex<double> to_complex() const;

  private:
    void canonicalize();
    bool coeffs_zero() const;

    int p_;
    std::vector<long long> c_; // size p, c_[p-1] == 0 after canonicalization
    int scale_ = 0;
};

inline Cyclo cyclo_add(const Cyclo& a, const Cyclo& b) { return a + b; }
inline Cyclo cyclo_mul(const Cyclo& a, const Cyclo& b) { return a * b; }
inline Cyclo cyclo_conj(const Cyclo& a) { return a.conj(); }
inline Cyclo cyclo_from_root(const RootOfUnity& r) { return Cyclo::from_root(r); }
inline bool cyclo_is_zero(const Cyclo& a) { return a.is_zero(); }
inline bool cyclo_equals_rational(const Cyclo& a, long long n, int m) {
    return a.equals_rational(n, m);
}

} // namespace lfmra

#endif
