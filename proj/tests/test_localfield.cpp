#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lfmra/localfield.hpp"

using namespace lfmra;

namespace {

LocalElem random_elem(const FieldParams& f, std::mt19937_64& rng, int span = 3) {
    std::uniform_int_distribution<int> lo(-3, 2), digit(0, f.order() - 1);
    std::vector<int> d(span);
    for (auto& v : d) v = digit(rng);
    return make_local(lo(rng), d);
}

// independent re-summation oracle
LocalElem resum(const FieldParams& f, const std::map<int, int>& coeffs,
                const std::map<int, LocalElem>& basic) {
    LocalElem acc;
    for (auto [n, lam] : coeffs)
        acc = lf_add(f, acc, scalar_mul(f, lam, basic.at(n)));
    return acc;
}

} // namespace

TEST_CASE("addition") {
    FieldParams f22(2, 2, {1, 1, 1});
    LocalElem a = unit_local(0, 3); // digit (1,1) at index 0
    CHECK(lf_add(f22, a, LocalElem{}) == a);
    CHECK(lf_add(f22, a, a).is_zero());
    FieldParams f31 = FieldParams::make(3, 1);
    CHECK(lf_add(f31, unit_local(-1, 2), unit_local(-1, 2)) == unit_local(-1, 1));
}

TEST_CASE("convolution product") {
    FieldParams f22(2, 2, {1, 1, 1});
    CHECK(lf_mul(f22, unit_local(-1), unit_local(1)) == unit_local(0));
    CHECK(lf_mul(f22, unit_local(0, 2), unit_local(0, 2)) == unit_local(0, 3));
    CHECK(lf_mul(f22, unit_local(2, 3), LocalElem{}).is_zero());
}

TEST_CASE("norm") {
    FieldParams f22(2, 2, {1, 1, 1});
    CHECK(lf_norm(f22, unit_local(2, 3)) == 1.0 / 16);
    CHECK(lf_norm_exponent(unit_local(2, 3)) == 2);
    CHECK(lf_norm(f22, LocalElem{}) == 0.0);
    CHECK_FALSE(lf_norm_exponent(LocalElem{}).has_value());
    FieldParams f31 = FieldParams::make(3, 1);
    CHECK(lf_norm(f31, unit_local(-1, 2)) == 3.0);
}

TEST_CASE("scalar action") {
    FieldParams f(2, 2, {1, 1, 1});
    LocalElem a = make_local(4, {2, 1, 3});
    CHECK(scalar_mul(f, f.one(), a) == a);
    CHECK(scalar_mul(f, 0, a).is_zero());
    CHECK(scalar_mul(f, 2, unit_local(5, 2)) == unit_local(5, 3)); // (0,1)^2=(1,1)
}

TEST_CASE("dilation shifts indices down") {
    FieldParams f(2, 2, {1, 1, 1});
    CHECK(dilate_field(unit_local(0)) == unit_local(-1));
    CHECK(dilate_field(LocalElem{}).is_zero());
    std::mt19937_64 rng(1);
    for (int it = 0; it < 50; ++it) {
        LocalElem a = random_elem(f, rng);
        CHECK(dilate_field(dilate_field(a, -1)) == a);
        if (!a.is_zero())
            CHECK(*lf_norm_exponent(dilate_field(a)) == *lf_norm_exponent(a) - 1);
    }
}

TEST_CASE("ultrametric and multiplicative norm, exhaustive 3-digit windows") {
    for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
                        {3, 2}}) {
        FieldParams f = FieldParams::make(p, s);
        int q = f.order();
        long long bad = 0;
        for (int lo = -1; lo <= 0; ++lo)
            for (int x = 0; x < q * q * q; ++x)
                for (int y = 0; y < q * q * q; ++y) {
                    auto digs = [&](int v) {
                        return std::vector<int>{v % q, (v / q) % q, (v / q / q) % q};
                    };
                    LocalElem a = make_local(lo, digs(x));
                    LocalElem b = make_local(lo, digs(y));
                    auto na = lf_norm_exponent(a), nb = lf_norm_exponent(b);
                    auto ns = lf_norm_exponent(lf_add(f, a, b));
                    if (na && nb) {
                        if (ns && *ns < std::min(*na, *nb)) ++bad;
                        if (*na != *nb &&
                            (!ns || *ns != std::min(*na, *nb))) ++bad;
                        auto nm = lf_norm_exponent(lf_mul(f, a, b));
                        if (!nm || *nm != *na + *nb) ++bad;
                    }
                }
        CHECK(bad == 0);
    }
}

TEST_CASE("windowed ring axioms on random triples") {
    std::mt19937_64 rng(9);
    for (auto [p, s] : {std::pair{2, 2}, {3, 1}, {5, 1}, {3, 2}}) {
        FieldParams f = FieldParams::make(p, s);
        for (int it = 0; it < 100; ++it) {
            LocalElem a = random_elem(f, rng), b = random_elem(f, rng),
                      c = random_elem(f, rng);
            CHECK(lf_add(f, a, b) == lf_add(f, b, a));
            CHECK(lf_mul(f, a, b) == lf_mul(f, b, a));
            CHECK(lf_mul(f, lf_mul(f, a, b), c) == lf_mul(f, a, lf_mul(f, b, c)));
            CHECK(lf_mul(f, a, lf_add(f, b, c)) ==
                  lf_add(f, lf_mul(f, a, b), lf_mul(f, a, c)));
        }
    }
}

TEST_CASE("basis expansion and re-summation") {
    FieldParams f(2, 2, {1, 1, 1});
    SUBCASE("canonical basis returns the digits") {
        std::map<int, LocalElem> basic;
        for (int n = -3; n <= 3; ++n) basic[n] = unit_local(n);
        LocalElem a = make_local(-1, {2, 0, 3});
        auto coeffs = basis_expand(f, a, basic);
        CHECK(coeffs == std::map<int, int>{{-1, 2}, {1, 3}});
        CHECK(basis_expand(f, LocalElem{}, basic).empty());
    }
    SUBCASE("leading digit (1,1) basis round-trips on the window") {
        std::map<int, LocalElem> basic;
        for (int n = -3; n <= 5; ++n)
            basic[n] = make_local(n, {3, 1, 2}); // leading digit (1,1) at n
        std::mt19937_64 rng(17);
        for (int it = 0; it < 50; ++it) {
            LocalElem a = random_elem(f, rng);
            LocalElem back = resum(f, basis_expand(f, a, basic), basic);
            for (int n = -4; n < a.hi(); ++n) CHECK(back.at(n) == a.at(n));
        }
    }
    SUBCASE("wrong leading index is rejected") {
        std::map<int, LocalElem> basic;
        basic[0] = unit_local(1); // leading index 1, claimed 0
        CHECK_THROWS_AS(basis_expand(f, unit_local(0), basic), ValidationError);
    }
}

TEST_CASE("exhaustive 2-digit expansion round-trip") {
    for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
                        {3, 2}}) {
        FieldParams f = FieldParams::make(p, s);
        int q = f.order();
        std::map<int, LocalElem> basic;
        for (int n = -2; n <= 2; ++n)
            basic[n] = make_local(n, {q - 1, 1 % q}); // leading digit q-1
        for (int d0 = 0; d0 < q; ++d0)
            for (int d1 = 0; d1 < q; ++d1) {
                LocalElem a = make_local(-1, {d0, d1});
                LocalElem back = resum(f, basis_expand(f, a, basic), basic);
                for (int n = -2; n < a.hi(); ++n) CHECK(back.at(n) == a.at(n));
            }
    }
}

TEST_CASE("shift lattice enumeration") {
    FieldParams f22(2, 2, {1, 1, 1});
    CHECK(h0_enumerate(f22, 0).size() == 1);
    CHECK(h0_enumerate(f22, 0)[0].depth() == 0);
    auto one = h0_enumerate(f22, 1);
    REQUIRE(one.size() == 4);
    for (int a = 0; a < 4; ++a) {
        CHECK(one[a].at_neg(1) == a);
        CHECK(one[a].at_neg(2) == 0);
    }
    FieldParams f31 = FieldParams::make(3, 1);
    auto two = h0_enumerate(f31, 2);
    REQUIRE(two.size() == 9);
    // ordered with a_{-1} least significant
    CHECK(two[5].at_neg(1) == 2);
    CHECK(two[5].at_neg(2) == 1);
    // shifts convert to elements supported on negative indices
    for (const auto& h : two) {
        LocalElem x = shift_to_local(h);
        if (!x.is_zero()) CHECK(x.hi() <= 0);
    }
}
