#include <catch2/catch_amalgamated.hpp>

#include "patchalg/ring.hpp"
#include "patchalg/subring.hpp"

using namespace patchalg;

TEST_CASE("zmod construction") {
    FiniteRing R = ring_zmod(4);
    CHECK(R.n() == 4);
    CHECK(R.add(3, 2) == 1);
    CHECK(R.mul(2, 2) == 0);
    CHECK(R.characteristic() == 4);
    CHECK_THROWS_AS(ring_zmod(1), Error);
    CHECK_THROWS_AS(ring_zmod(0), Error);
}

TEST_CASE("Galois fields") {
    SECTION("gf(4): labels and arithmetic in x") {
        FiniteRing F = ring_gf(2, 2); // modulus x^2 + x + 1
        REQUIRE(F.n() == 4);
        CHECK(F.label(0) == "0");
        CHECK(F.label(1) == "1");
        CHECK(F.label(2) == "x");
        CHECK(F.label(3) == "x+1");
        CHECK(F.mul(2, 2) == 3); // x^2 = x + 1
        CHECK(F.mul(2, 3) == 1); // x (x+1) = 1
        CHECK(F.characteristic() == 2);
        for (elem_t a = 1; a < 4; ++a) CHECK(F.is_unit(a));
    }
    SECTION("gf(8), gf(16), gf(64) sizes") {
        CHECK(ring_gf(2, 3).n() == 8);
        CHECK(ring_gf(2, 4).n() == 16);
        CHECK(ring_gf(2, 6).n() == 64);
    }
    SECTION("prime subring of gf(4) is the only proper subring") {
        FiniteRing F = ring_gf(2, 2);
        Subring prime = subring_closure(F, {});
        CHECK(prime.elements() == std::vector<elem_t>{0, 1});
        CHECK(subring_closure(F, {2}).size() == 4);
        CHECK(subring_closure(F, {3}).size() == 4);
    }
    SECTION("reducible modulus is rejected") {
        CHECK_THROWS_AS(ring_gf(2, 2, {1, 0, 1}), Error); // x^2 + 1 = (x+1)^2
        CHECK_THROWS_AS(ring_gf(4, 2), Error);            // 4 is not prime
    }
    SECTION("gf(9) over two different irreducible moduli is still a field of 9 elements") {
        FiniteRing A = ring_gf(3, 2, {1, 0, 1}); // x^2 + 1
        FiniteRing B = ring_gf(3, 2, {2, 2, 1}); // x^2 + 2x + 2
        CHECK(A.n() == 9);
        CHECK(B.n() == 9);
    }
}

TEST_CASE("dual numbers over gf(2)") {
    FiniteRing D = ring_polyquot(2, {0, 0, 1}); // x^2
    REQUIRE(D.n() == 4);
    CHECK(D.mul(2, 2) == 0); // x^2 = 0
    CHECK(D.characteristic() == 2);
    CHECK(D.is_unit(3)); // (x+1)^2 = 1
    CHECK_FALSE(D.is_unit(2));
}

TEST_CASE("products") {
    FiniteRing P = ring_product(ring_gf(2, 2), ring_gf(2, 1));
    CHECK(P.n() == 8);
    CHECK(P.label(P.one()) == "(1,1)");
    FiniteRing Q = ring_product({ring_gf(2, 1), ring_gf(2, 1), ring_gf(2, 1)});
    CHECK(Q.n() == 8);
}

TEST_CASE("broken tables are rejected with the violated axiom named") {
    // 2-element "ring" with a bad multiplication table: 0*1 = 1
    std::vector<elem_t> add{0, 1, 1, 0};
    std::vector<elem_t> mul{0, 1, 1, 1};
    try {
        ring_from_tables(add, mul, 0, 1);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::admissibility);
        CHECK(std::string(e.what()).find("identity") != std::string::npos);
    }
    // 4-element table breaking associativity of multiplication:
    // start from Z/4 and poke one entry off the diagonal symmetrically
    FiniteRing z4 = ring_zmod(4);
    std::vector<elem_t> add4(16), mul4(16);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            add4[a * 4 + b] = z4.add(static_cast<elem_t>(a), static_cast<elem_t>(b));
            mul4[a * 4 + b] = z4.mul(static_cast<elem_t>(a), static_cast<elem_t>(b));
        }
    mul4[2 * 4 + 3] = 1;
    mul4[3 * 4 + 2] = 1; // keeps commutativity, breaks associativity
    try {
        ring_from_tables(add4, mul4, 0, 1);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::admissibility);
        CHECK((std::string(e.what()).find("associative") != std::string::npos ||
               std::string(e.what()).find("distributivity") != std::string::npos));
    }
}

TEST_CASE("quotients") {
    FiniteRing R = ring_zmod(6);
    RingIdeal I(R, {0, 2, 4});
    QuotientRing q = ring_quotient(R, I);
    CHECK(q.ring.n() == 2);
    CHECK(q.coset_of[5] == q.coset_of[1]);
    CHECK_THROWS_AS(ring_quotient(R, RingIdeal(R, {0, 1, 2, 3, 4, 5})), Error);
}

TEST_CASE("subring verification") {
    FiniteRing R = ring_zmod(6);
    CHECK_THROWS_AS(Subring(R, {0, 2, 4}), Error); // misses 1
    CHECK_THROWS_AS(Subring(R, {0, 1, 2}), Error); // not closed
    CHECK(Subring(R, {0, 1, 2, 3, 4, 5}).is_full());
    FiniteRing F = ring_gf(2, 2);
    Subring prime(F, {0, 1});
    CHECK(intersect(prime, full_subring(F)) == prime);
}

TEST_CASE("subset rings and ideals") {
    FiniteRing R = ring_zmod(6);
    // 3R = {0, 3} with identity 3
    SubsetRing e3 = ring_from_subset(R, {0, 3}, 3, "3Z/6");
    CHECK(e3.ring.n() == 2);
    CHECK(e3.ring.one() == e3.index_of[3]);
    RingIdeal gen = ideal_generated_ring(R, {2});
    CHECK(gen.elements() == std::vector<elem_t>{0, 2, 4});
    CHECK(principal_ideal_set(R, 3).elements() == std::vector<elem_t>{0, 3});
}

TEST_CASE("ring homomorphisms") {
    FiniteRing R2 = ring_zmod(2);
    FiniteRing R6 = ring_zmod(6);
    // reduction Z/6 -> Z/2
    std::vector<elem_t> red{0, 1, 0, 1, 0, 1};
    RingHom h(R6, R2, red);
    CHECK(h.is_surjective());
    CHECK_FALSE(h.is_injective());
    CHECK(h.kernel() == std::vector<elem_t>{0, 2, 4});
    CHECK_THROWS_AS(RingHom(R6, R2, std::vector<elem_t>{0, 1, 1, 1, 0, 1}), Error);
}
