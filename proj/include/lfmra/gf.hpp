#ifndef LFMRA_GF_HPP
#define LFMRA_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "lfmra/common.hpp"

namespace lfmra {

/// Element of GF(p^s): s base-p digits, constant coefficient first.
struct GFElem {
    std::vector<int> d;
    bool operator==(const GFElem&) const = default;
};

bool is_prime(int p);

/// True iff the monic polynomial (ascending coefficients) has no monic factor
/// of degree 1..deg/2 over GF(p).
bool is_irreducible(const std::vector<int>& coeffs, int p);

/// Lexicographically smallest monic irreducible of degree s over GF(p),
/// coefficients constant-first, compared as base-p integers.
std::vector<int> find_irreducible(int p, int s);

/// Arithmetic context for GF(p^s). Immutable after construction; elements are
/// addressed either as GFElem digit vectors or as their base-p integer index.
class FieldParams {
  public:
    FieldParams(int p, int s, std::vector<int> modulus);
    static FieldParams make(int p, int s); // modulus by exhaustion

    int p() const { return p_; }
    int s() const { return s_; }
    int order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    bool operator==(const FieldParams& o) const {
        return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_;
    }

    // index-based arithmetic (hot path)
    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const; // throws ZeroDivisionError on 0

    int one() const { return 1; } // digits (1,0,...,0)

    GFElem elem(int index) const;
    int index(const GFElem& a) const;

    /// GF(p) dot product of the digit vectors, reduced mod p.
    int dot(int a, int b) const;

  private:
    int mul_poly(int a, int b) const;

    int p_, s_, q_;
    std::vector<int> modulus_;
    // precomputed when q <= 4096; the tree construction hits these in loops
    std::vector<uint16_t> mul_table_;
    std::vector<uint16_t> inv_table_;
};

// GFElem-level operations (spec surface; they validate digit shape)
GFElem gf_add(const FieldParams& f, const GFElem& a, const GFElem& b);
GFElem gf_mul(const FieldParams& f, const GFElem& a, const GFElem& b);
GFElem gf_inv(const FieldParams& f, const GFElem& a);

/// All p^s elements ordered by base-p integer value (a^(0) least significant).
std::vector<GFElem> enumerate_gf(const FieldParams& f);

} // namespace lfmra

#endif
