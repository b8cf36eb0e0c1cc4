#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "lmrd/galois.hpp"

using lmrd::Error;
using lmrd::ErrorKind;
using lmrd::FieldElement;
using lmrd::FieldPtr;
using lmrd::FieldSpec;

namespace {

// Independent oracle for small moduli: a monic quadratic over GF(p) is
// irreducible iff it has no root.
bool quadratic_irreducible_by_roots(std::uint64_t p, std::uint64_t c0, std::uint64_t c1) {
    for (std::uint64_t x = 0; x < p; ++x)
        if ((x * x + c1 * x + c0) % p == 0) return false;
    return true;
}

std::vector<std::uint32_t> first_irreducible_quadratic(std::uint64_t p) {
    for (std::uint64_t v = 0;; ++v) {
        const std::uint64_t c0 = v % p, c1 = v / p;
        if (c1 >= p) break;
        if (quadratic_irreducible_by_roots(p, c0, c1))
            return {static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1), 1};
    }
    FAIL("no irreducible quadratic found");
    return {};
}

FieldElement elem(const FieldPtr& f, std::uint64_t digit) { return {f, digit}; }

}  // namespace

TEST_CASE("field_create picks the smallest irreducible modulus") {
    auto gf2 = FieldSpec::create(2, 1);
    CHECK(gf2->q() == 2);
    CHECK(gf2->modulus() == std::vector<std::uint32_t>{0, 1});  // x

    auto gf4 = FieldSpec::create(2, 2);
    CHECK(gf4->q() == 4);
    CHECK(gf4->modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1

    auto gf9 = FieldSpec::create(3, 2);
    CHECK(gf9->q() == 9);
    CHECK(gf9->modulus() == first_irreducible_quadratic(3));
    CHECK(gf9->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2+1

    // oracle cross-check for a few more primes
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL})
        CHECK(FieldSpec::create(p, 2)->modulus() == first_irreducible_quadratic(p));
}

TEST_CASE("field_create is deterministic and cached") {
    auto a = FieldSpec::create(3, 2);
    auto b = FieldSpec::create(3, 2);
    CHECK(a.get() == b.get());
    CHECK(a->modulus() == b->modulus());
}

TEST_CASE("field_create rejects bad parameters") {
    CHECK_THROWS_WITH_AS(FieldSpec::create(4, 1), doctest::Contains("prime"), Error);
    CHECK_THROWS_AS(FieldSpec::create(1, 1), Error);
    CHECK_THROWS_AS(FieldSpec::create(2, 21), Error);  // 2^21 past the guard
    try {
        FieldSpec::create(2, 21);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeTooLarge);
    }
    CHECK_THROWS_AS(FieldSpec::for_size(6), Error);  // not a prime power
}

TEST_CASE("arithmetic examples") {
    auto gf2 = FieldSpec::create(2, 1);
    CHECK(add(elem(gf2, 1), elem(gf2, 1)) == elem(gf2, 0));

    auto gf4 = FieldSpec::create(2, 2);
    const FieldElement alpha(gf4, std::vector<std::uint32_t>{0, 1});
    const FieldElement alpha_plus_1(gf4, std::vector<std::uint32_t>{1, 1});
    CHECK(mul(alpha, alpha) == alpha_plus_1);

    auto gf9 = FieldSpec::create(3, 1);
    CHECK(inv(elem(gf9, 2)) == elem(gf9, 2));  // 2*2 = 4 = 1 mod 3
}

TEST_CASE("arithmetic error paths") {
    auto gf2 = FieldSpec::create(2, 1);
    auto gf3 = FieldSpec::create(3, 1);
    CHECK_THROWS_AS(add(elem(gf2, 1), elem(gf3, 1)), Error);
    try {
        mul(elem(gf2, 1), elem(gf3, 2));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SpecMismatch);
    }
    try {
        inv(elem(gf3, 0));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("frobenius examples") {
    auto gf4 = FieldSpec::create(2, 2);
    const FieldElement alpha(gf4, std::vector<std::uint32_t>{0, 1});
    const FieldElement alpha_plus_1(gf4, std::vector<std::uint32_t>{1, 1});
    CHECK(frobenius(alpha, 2, 1) == alpha_plus_1);  // alpha^2 reduced mod x^2+x+1
    CHECK(frobenius(alpha, 2, 2) == alpha);         // x^{q^m} = x
    CHECK(frobenius(elem(gf4, 0), 2, 1) == elem(gf4, 0));
    CHECK(frobenius(elem(gf4, 1), 2, 1) == elem(gf4, 1));

    try {
        frobenius(alpha, 3, 1);
        FAIL("expected InvalidBase");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidBase);
    }
    CHECK_THROWS_AS(frobenius(alpha, 8, 1), Error);  // 2^3, 3 does not divide m=2
}

TEST_CASE("expand examples and bijection") {
    auto gf4 = FieldSpec::create(2, 2);
    CHECK(expand(elem(gf4, 0)) == std::vector<std::uint32_t>{0, 0});
    CHECK(expand(FieldElement(gf4, std::vector<std::uint32_t>{1, 1})) == std::vector<std::uint32_t>{1, 1});

    auto gf9 = FieldSpec::create(3, 2);
    const FieldElement alpha(gf9, std::vector<std::uint32_t>{0, 1});
    const FieldElement two(gf9, std::vector<std::uint32_t>{2, 0});
    CHECK(expand(mul(alpha, two)) == std::vector<std::uint32_t>{0, 2});

    // expand is a bijection onto all digit vectors, and linear
    for (auto f : {gf4, gf9}) {
        std::set<std::vector<std::uint32_t>> seen;
        for (std::uint64_t a = 0; a < f->q(); ++a) {
            auto coords = f->expand(a);
            CHECK(f->compose(coords) == a);
            seen.insert(coords);
        }
        CHECK(seen.size() == f->q());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(12345);
    for (std::uint64_t q : {2ULL, 3ULL, 4ULL, 5ULL, 8ULL, 9ULL}) {
        auto f = FieldSpec::for_size(q);
        std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
        for (int trial = 0; trial < 400; ++trial) {
            const std::uint64_t a = dist(rng), b = dist(rng), c = dist(rng);
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        }
    }
}

TEST_CASE("frobenius is a homomorphism over the prime subfield") {
    std::mt19937 rng(777);
    for (std::uint64_t q : {4ULL, 8ULL, 9ULL}) {
        auto f = FieldSpec::for_size(q);
        const std::uint64_t p = f->p();
        std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
        for (int trial = 0; trial < 300; ++trial) {
            const std::uint64_t a = dist(rng), b = dist(rng);
            CHECK(f->frobenius(f->add(a, b), p, 1) == f->add(f->frobenius(a, p, 1), f->frobenius(b, p, 1)));
            CHECK(f->frobenius(f->mul(a, b), p, 1) == f->mul(f->frobenius(a, p, 1), f->frobenius(b, p, 1)));
            // expand is additive in the coordinates
            const auto ea = f->expand(a), eb = f->expand(b), es = f->expand(f->add(a, b));
            for (std::size_t i = 0; i < ea.size(); ++i) CHECK(es[i] == (ea[i] + eb[i]) % p);
        }
    }
}
