#include <catch2/catch_amalgamated.hpp>

#include "patchalg/topo.hpp"

using namespace patchalg;

namespace {

// Oracle: filter all 2^n subsets for subring-ness. Only viable for tiny rings.
std::vector<std::vector<elem_t>> brute_force_subrings(const FiniteRing& R) {
    REQUIRE(R.n() <= 16);
    std::vector<std::vector<elem_t>> out;
    for (std::uint32_t sub = 0; sub < (1u << R.n()); ++sub) {
        auto in = [&](elem_t x) { return (sub >> x) & 1u; };
        if (!in(R.zero()) || !in(R.one())) continue;
        bool closed = true;
        for (elem_t a = 0; a < R.n() && closed; ++a) {
            if (!in(a)) continue;
            if (!in(R.neg(a))) closed = false;
            for (elem_t b = 0; b < R.n() && closed; ++b) {
                if (!in(b)) continue;
                if (!in(R.add(a, b)) || !in(R.mul(a, b))) closed = false;
            }
        }
        if (!closed) continue;
        std::vector<elem_t> elems;
        for (elem_t x = 0; x < R.n(); ++x)
            if (in(x)) elems.push_back(x);
        out.push_back(std::move(elems));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<elem_t>> member_lists(const SubringSpace& X) {
    std::vector<std::vector<elem_t>> out;
    for (const Subring& s : X.members()) out.push_back(s.elements());
    return out;
}

} // namespace

TEST_CASE("subring enumeration") {
    SECTION("prime field: only itself") {
        SubringSpace X = enumerate_subrings(ring_gf(5, 1));
        CHECK(X.size() == 1);
    }
    SECTION("closure enumeration matches the brute-force oracle on small rings") {
        for (const FiniteRing& R :
             {ring_gf(2, 2), ring_zmod(6), ring_zmod(12), ring_gf(2, 4),
              ring_product(ring_gf(2, 1), ring_gf(2, 1)),
              ring_product(ring_gf(2, 2), ring_gf(2, 1)), ring_polyquot(2, {0, 0, 1})}) {
            CHECK(member_lists(enumerate_subrings(R)) == brute_force_subrings(R));
        }
    }
    SECTION("gf(16): the three subfields, one per divisor of 4") {
        FiniteRing F = ring_gf(2, 4);
        SubringSpace X = enumerate_subrings(F);
        REQUIRE(X.size() == 3);
        // second oracle: subfields are fixed sets of iterated squaring
        for (int d : {1, 2, 4}) {
            std::vector<elem_t> fixed;
            for (elem_t a = 0; a < F.n(); ++a) {
                elem_t powed = a;
                for (int i = 0; i < d; ++i) powed = F.mul(powed, powed);
                if (powed == a) fixed.push_back(a);
            }
            CHECK(X.index_of(Subring(F, fixed)) >= 0);
        }
        std::vector<std::size_t> sizes;
        for (const Subring& s : X.members()) sizes.push_back(s.size());
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<std::size_t>{2, 4, 16});
    }
    SECTION("gf(64): subfield diamond with incomparable gf(4) and gf(8)") {
        SubringSpace X = enumerate_subrings(ring_gf(2, 6));
        REQUIRE(X.size() == 4);
        std::vector<std::size_t> sizes;
        for (const Subring& s : X.members()) sizes.push_back(s.size());
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<std::size_t>{2, 4, 8, 64});
    }
    SECTION("gf(2) x gf(2): the diagonal and the whole ring") {
        SubringSpace X = enumerate_subrings(ring_product(ring_gf(2, 1), ring_gf(2, 1)));
        REQUIRE(X.size() == 2);
        CHECK(X.member(0).size() == 4);
        CHECK(X.member(1).elements() == std::vector<elem_t>{0, 3}); // the diagonal
    }
}

TEST_CASE("Zariski opens and V-sets") {
    FiniteRing F = ring_gf(2, 4);
    SubringSpace X = enumerate_subrings(F);
    SECTION("no constraints: everything") { CHECK(X.u_set({}) == X.all_mask()); }
    SECTION("a generator of gf(16) pins down the full field") {
        // element 2 is x, which generates the degree-4 extension
        xmask_t m = X.u_set({2});
        CHECK(__builtin_popcountll(m) == 1);
        int i = __builtin_ctzll(m);
        CHECK(X.member(static_cast<std::size_t>(i)).is_full());
    }
    SECTION("V(1) is empty") { CHECK(X.v_set(1) == 0); }
    SECTION("U-sets are closed under intersection by construction") {
        CHECK((X.u_set({2}) & X.u_set({1})) == X.u_set({1, 2}));
    }
}

TEST_CASE("patch closure collapses to the identity at finite scale") {
    FiniteRing F = ring_gf(2, 6);
    SubringSpace X = enumerate_subrings(F);
    for (xmask_t Y = 0; Y <= X.all_mask(); ++Y) {
        CHECK(patch_closure(X, Y) == Y);
        auto check = is_patch_space(X, Y);
        CHECK(check.is_patch_space);
        CHECK(check.finite_collapse);
    }
}

TEST_CASE("single-complement neighborhoods are not a basis on incomparable subfields") {
    // In the subfield diamond of gf(64), every neighborhood of gf(2) carved
    // out with only one excluded element still meets {gf(4), gf(8)}; the
    // correct basic neighborhoods (finitely many exclusions) separate it.
    FiniteRing F = ring_gf(2, 6);
    SubringSpace X = enumerate_subrings(F);
    int i_prime = -1, i_four = -1, i_eight = -1;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (X.member(i).size() == 2) i_prime = static_cast<int>(i);
        if (X.member(i).size() == 4) i_four = static_cast<int>(i);
        if (X.member(i).size() == 8) i_eight = static_cast<int>(i);
    }
    REQUIRE(i_prime >= 0);
    xmask_t Y = (xmask_t(1) << i_four) | (xmask_t(1) << i_eight);
    CHECK(meets_every_single_v_neighborhood(X, X.member(i_prime), Y));
    CHECK((finest_neighborhood_trace(X, X.member(i_prime)) & Y) == 0);
    CHECK(patch_closure(X, Y) == Y);
}

TEST_CASE("spectral subspace test") {
    SubringSpace X = enumerate_subrings(ring_gf(2, 4));
    CHECK(is_spectral_subspace(X, X.all_mask()));
    CHECK(is_spectral_subspace(X, 0));
    for (xmask_t Y = 0; Y <= X.all_mask(); ++Y) CHECK(is_spectral_subspace(X, Y));
}

TEST_CASE("section rings") {
    FiniteRing F = ring_gf(2, 4);
    SubringSpace X = enumerate_subrings(F);
    SECTION("empty set of members gives the whole ring") {
        CHECK(sections(X, 0).is_full());
    }
    SECTION("singleton gives the member itself") {
        for (std::size_t i = 0; i < X.size(); ++i)
            CHECK(sections(X, xmask_t(1) << i) == X.member(i));
    }
    SECTION("gf(4) and gf(16) intersect in gf(4)") {
        int i4 = -1, i16 = -1;
        for (std::size_t i = 0; i < X.size(); ++i) {
            if (X.member(i).size() == 4) i4 = static_cast<int>(i);
            if (X.member(i).size() == 16) i16 = static_cast<int>(i);
        }
        xmask_t U = (xmask_t(1) << i4) | (xmask_t(1) << i16);
        CHECK(sections(X, U) == X.member(static_cast<std::size_t>(i4)));
    }
    SECTION("sections are antitone and turn unions into intersections") {
        for (xmask_t U = 0; U <= X.all_mask(); ++U)
            for (xmask_t V = 0; V <= X.all_mask(); ++V) {
                Subring su = sections(X, U), sv = sections(X, V);
                CHECK(sections(X, U | V) == intersect(su, sv));
                if ((U & ~V) == 0) CHECK(sv.subset_of(su));
            }
    }
}
