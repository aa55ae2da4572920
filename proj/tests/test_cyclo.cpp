#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lfmra/cyclo.hpp"

using namespace lfmra;

namespace {

Cyclo root(int p, int e) { return Cyclo::from_root(RootOfUnity{p, e}); }

Cyclo random_value(int p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-10, 10), count(1, 6), exp(0, p - 1),
        sc(0, 3);
    Cyclo v(p);
    int terms = count(rng);
    for (int i = 0; i < terms; ++i)
        v = v + Cyclo::integer(p, coeff(rng)) * root(p, exp(rng));
    return v.scaled(sc(rng));
}

} // namespace

TEST_CASE("real case p=2: (1-zeta)^2 = 4") {
    Cyclo d = Cyclo::integer(2, 1) - root(2, 1);
    CHECK((d * d).equals_rational(4, 0));
    CHECK(root(2, 1).equals_rational(-1, 0)); // zeta_2 = -1
}

TEST_CASE("root-of-unity sum identity and conjugation, p=3") {
    Cyclo sum = root(3, 0) + root(3, 1) + root(3, 2);
    CHECK(sum.is_zero());
    CHECK(root(3, 1).conj() == root(3, 2));
    // zeta^2 reduces to -1 - zeta in the pinned basis
    CHECK(root(3, 2).coeffs() == std::vector<long long>{-1, -1, 0});
}

TEST_CASE("from_root basics") {
    CHECK(root(5, 0).equals_rational(1, 0));
    CHECK(Cyclo::integer(7, 1) == root(7, 0));
}

TEST_CASE("exact rational comparisons") {
    CHECK(Cyclo::integer(2, 4).scaled(2).equals_rational(1, 0)); // (1/4)*4 = 1
    CHECK(Cyclo::p_power_rational(3, 5, 2).equals_rational(5, 2));
    CHECK(Cyclo::p_power_rational(3, 9, 2).equals_rational(1, 0));
    CHECK_FALSE(root(5, 1).equals_rational(1, 0));
    CHECK(Cyclo(11).is_zero());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int p : {2, 3, 5, 7}) {
        for (int it = 0; it < 200; ++it) {
            Cyclo a = random_value(p, rng), b = random_value(p, rng),
                  c = random_value(p, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK(a - a == Cyclo(p));
            CHECK(a + (-a) == Cyclo(p));
            CHECK(a * Cyclo::integer(p, 1) == a);
        }
    }
}

TEST_CASE("z * conj(z) is fixed by conjugation") {
    std::mt19937_64 rng(7);
    for (int p : {2, 3, 5, 7})
        for (int it = 0; it < 100; ++it) {
            Cyclo z = random_value(p, rng);
            Cyclo n = z.norm2();
            CHECK(n == n.conj());
        }
}

TEST_CASE("numeric embedding matches a direct complex evaluation") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 1000) {
        std::uniform_int_distribution<int> pick(0, 3);
        int p = std::vector<int>{2, 3, 5, 7}[pick(rng)];
        std::uniform_int_distribution<int> coeff(-10, 10), count(1, 6),
            exp(0, p - 1), sc(0, 3);
        // track an independent complex shadow while building the value
        Cyclo v(p);
        std::complex<double> shadow = 0;
        int terms = count(rng);
        int scale = sc(rng);
        for (int i = 0; i < terms; ++i) {
            int c = coeff(rng), e = exp(rng);
            v = v + Cyclo::integer(p, c) * root(p, e);
            shadow += static_cast<double>(c) *
                      std::polar(1.0, 2.0 * std::numbers::pi * e / p);
        }
        v = v.scaled(scale);
        shadow /= std::pow(static_cast<double>(p), scale);
        CHECK(std::abs(v.to_complex() - shadow) < 1e-12);
        ++checked;
    }
}

TEST_CASE("canonical form invariants") {
    std::mt19937_64 rng(5);
    for (int p : {2, 3, 5})
        for (int it = 0; it < 100; ++it) {
            Cyclo v = random_value(p, rng);
            CHECK(v.coeffs()[p - 1] == 0); // pinned basis coefficient
            if (!v.is_zero()) {
                bool all_div = true;
                for (long long c : v.coeffs())
                    if (c % p != 0) all_div = false;
                CHECK_FALSE(all_div); // scale fully normalized
            }
            CHECK(v.scaled(2).scaled(-2) == v);
        }
}

TEST_CASE("mismatched p is rejected") {
    CHECK_THROWS_AS(Cyclo::integer(2, 1) + Cyclo::integer(3, 1), FieldMismatchError);
    CHECK_THROWS_AS(Cyclo::integer(2, 1) * Cyclo::integer(5, 1), FieldMismatchError);
}
