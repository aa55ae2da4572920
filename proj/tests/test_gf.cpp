#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lfmra/gf.hpp"

using namespace lfmra;

namespace {

// independent schoolbook multiply + long-division oracle
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& mod, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    int deg = static_cast<int>(mod.size()) - 1;
    for (int k = static_cast<int>(prod.size()) - 1; k >= deg; --k) {
        int c = prod[k];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) {
            int idx = k - deg + j;
            prod[idx] = ((prod[idx] - c * mod[j]) % p + p) % p;
        }
    }
    prod.resize(deg);
    return prod;
}

GFElem E(std::vector<int> d) { return GFElem{std::move(d)}; }

} // namespace

TEST_CASE("addition is coordinatewise mod p") {
    FieldParams f32 = FieldParams::make(3, 2);
    CHECK(gf_add(f32, E({2, 1}), E({2, 2})) == E({1, 0}));
    FieldParams f22 = FieldParams::make(2, 2);
    CHECK(gf_add(f22, E({1, 1}), E({1, 1})) == E({0, 0}));
    for (const auto& a : enumerate_gf(f32))
        CHECK(gf_add(f32, a, E({0, 0})) == a);
}

TEST_CASE("multiplication modulo t^2+t+1 over GF(2)") {
    FieldParams f(2, 2, {1, 1, 1});
    CHECK(gf_mul(f, E({1, 1}), E({1, 1})) == E({0, 1}));
    CHECK(gf_mul(f, E({0, 1}), E({0, 1})) == E({1, 1}));
    for (const auto& a : enumerate_gf(f))
        CHECK(gf_mul(f, a, E({1, 0})) == a);
}

TEST_CASE("inverses") {
    FieldParams f22(2, 2, {1, 1, 1});
    CHECK(gf_inv(f22, E({1, 0})) == E({1, 0}));
    CHECK(gf_inv(f22, E({0, 1})) == E({1, 1}));
    FieldParams f31 = FieldParams::make(3, 1);
    CHECK(gf_inv(f31, E({2})) == E({2}));
    CHECK_THROWS_AS(gf_inv(f22, E({0, 0})), ZeroDivisionError);
}

TEST_CASE("irreducibility testing") {
    CHECK(is_irreducible({1, 1, 1}, 2));       // t^2+t+1
    CHECK_FALSE(is_irreducible({1, 0, 1}, 2)); // (t+1)^2
    CHECK(is_irreducible({2, 1}, 3));          // degree 1
    CHECK_THROWS_AS(is_irreducible({1, 1, 1}, 4), ValidationError);
}

TEST_CASE("smallest monic irreducible, determinism contract") {
    CHECK(find_irreducible(2, 2) == std::vector<int>{1, 1, 1});
    CHECK(find_irreducible(2, 3) == std::vector<int>{1, 1, 0, 1});
    CHECK(find_irreducible(5, 1) == std::vector<int>{0, 1});
    // minimality: every lexicographically smaller monic fails the test
    for (auto [p, s] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
        auto best = find_irreducible(p, s);
        CHECK(is_irreducible(best, p));
        long long bound = 0;
        for (int i = s - 1; i >= 0; --i) bound = bound * p + best[i];
        for (long long n = 0; n < bound; ++n) {
            std::vector<int> cand(s + 1, 0);
            cand[s] = 1;
            long long t = n;
            for (int i = 0; i < s; ++i) {
                cand[i] = static_cast<int>(t % p);
                t /= p;
            }
            CHECK_FALSE(is_irreducible(cand, p));
        }
    }
}

TEST_CASE("enumeration order") {
    FieldParams f22 = FieldParams::make(2, 2);
    auto all = enumerate_gf(f22);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == E({0, 0}));
    CHECK(all[1] == E({1, 0}));
    CHECK(all[2] == E({0, 1}));
    CHECK(all[3] == E({1, 1}));
    auto f23 = FieldParams::make(2, 3);
    auto all8 = enumerate_gf(f23);
    REQUIRE(all8.size() == 8);
    CHECK(all8.front() == E({0, 0, 0}));
    CHECK(all8.back() == E({1, 1, 1}));
    auto f31 = FieldParams::make(3, 1);
    REQUIRE(enumerate_gf(f31).size() == 3);
}

TEST_CASE("exhaustive field axioms up to order 256") {
    for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2},
                        {7, 1}, {2, 4}, {3, 3}, {5, 2}, {2, 8}}) {
        FieldParams f = FieldParams::make(p, s);
        int q = f.order();
        long long bad = 0;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                if (f.add(a, b) != f.add(b, a)) ++bad;
                if (f.mul(a, b) != f.mul(b, a)) ++bad;
                for (int c = 0; c < q; ++c) {
                    if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) ++bad;
                    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ++bad;
                    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
                        ++bad;
                }
            }
        CHECK(bad == 0);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
        }
    }
}

TEST_CASE("multiplication agrees with the polynomial-division oracle") {
    for (auto [p, s] : {std::pair{2, 2}, {3, 1}, {5, 1}, {2, 3}, {3, 2}, {7, 2},
                        {2, 6}}) {
        FieldParams f = FieldParams::make(p, s);
        int q = f.order();
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                auto want = poly_mul_mod(f.elem(a).d, f.elem(b).d, f.modulus(), p);
                CHECK(f.elem(f.mul(a, b)).d == want);
            }
    }
}

TEST_CASE("Frobenius x -> x^p is additive") {
    for (auto [p, s] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 6}, {7, 2}}) {
        FieldParams f = FieldParams::make(p, s);
        int q = f.order();
        auto frob = [&](int x) {
            int r = f.one();
            for (int i = 0; i < p; ++i) r = f.mul(r, x);
            return r;
        };
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(frob(f.add(a, b)) == f.add(frob(a), frob(b)));
    }
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(FieldParams(4, 1, {0, 1}), ValidationError);   // p not prime
    CHECK_THROWS_AS(FieldParams(2, 2, {1, 0, 1}), ValidationError); // reducible
    CHECK_THROWS_AS(FieldParams(2, 2, {1, 1, 0}), ValidationError); // not monic
}
