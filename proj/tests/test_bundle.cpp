#include <catch2/catch_amalgamated.hpp>

#include "patchalg/bundle.hpp"

using namespace patchalg;

namespace {

std::vector<PatchBundle> all_bundles(const SubringSpace& sigma, std::size_t max_points) {
    std::vector<PatchBundle> out;
    out.emplace_back(sigma.ring(), std::vector<Subring>{}); // empty domain
    std::vector<std::size_t> pick;
    for (std::size_t pts = 1; pts <= max_points; ++pts) {
        pick.assign(pts, 0);
        while (true) {
            std::vector<Subring> fibers;
            for (std::size_t i : pick) fibers.push_back(sigma.member(i));
            out.emplace_back(sigma.ring(), std::move(fibers));
            std::size_t i = 0;
            while (i < pts && ++pick[i] == sigma.size()) pick[i++] = 0;
            if (i == pts) break;
        }
    }
    return out;
}

} // namespace

TEST_CASE("bundles and the presheaf functor") {
    FiniteRing F = ring_gf(2, 2);
    SubringSpace sigma = enumerate_subrings(F);
    REQUIRE(sigma.size() == 2);
    Subring prime(F, {0, 1});
    Subring whole = full_subring(F);

    SECTION("single point: presheaf over one atom with the fiber on top") {
        PatchBundle f(F, {prime});
        PatchPresheaf P = functor_R(f);
        CHECK(P.algebra().atoms() == 1);
        CHECK(P.section(1) == prime);
        CHECK(P.section(0).is_full());
    }
    SECTION("two points with distinct fibers: top section is the intersection") {
        PatchBundle f(F, {whole, prime});
        PatchPresheaf P = functor_R(f);
        CHECK(P.section(0b11) == prime);
    }
    SECTION("the image equals the stalk set of the induced presheaf") {
        for (const PatchBundle& f : all_bundles(sigma, 3))
            CHECK(f.image() == all_stalks(functor_R(f)));
    }
    SECTION("continuity is checkable") {
        PatchBundle f(F, {whole, prime, prime});
        CHECK(f.continuity_check());
    }
}

TEST_CASE("the bundle functor") {
    FiniteRing F = ring_gf(2, 2);
    Subring prime(F, {0, 1});
    SECTION("one atom gives a one-point bundle onto the top section") {
        PatchPresheaf P = presheaf_from_atoms(F, {prime});
        PatchBundle f = functor_B(P);
        REQUIRE(f.points() == 1);
        CHECK(f.fiber(0) == prime);
    }
    SECTION("gf(4)/gf(2) example: two points onto two distinct stalks") {
        PatchPresheaf P = presheaf_from_atoms(F, {full_subring(F), prime});
        PatchBundle f = functor_B(P);
        REQUIRE(f.points() == 2);
        CHECK(f.fiber(0).is_full());
        CHECK(f.fiber(1) == prime);
    }
    SECTION("constant presheaf: two points onto a singleton image") {
        PatchPresheaf P = presheaf_from_atoms(F, {full_subring(F), full_subring(F)});
        PatchBundle f = functor_B(P);
        CHECK(f.points() == 2);
        CHECK(f.image().size() == 1);
    }
}

TEST_CASE("round trips: every bundle with at most 3 points over small spaces") {
    for (const FiniteRing& R : {ring_gf(2, 4), ring_product(ring_gf(2, 2), ring_gf(2, 1))}) {
        SubringSpace sigma = enumerate_subrings(R);
        for (const PatchBundle& f : all_bundles(sigma, 3)) {
            CHECK(bundle_roundtrip_exact(f));
            CHECK(presheaf_roundtrip_exact(functor_R(f)));
        }
    }
}

TEST_CASE("morphism functoriality") {
    FiniteRing F = ring_gf(2, 4);
    SubringSpace sigma = enumerate_subrings(F);
    // the three subfields form a chain
    Subring small = sigma.member(0), mid = sigma.member(1), big = sigma.member(2);
    if (small.size() > mid.size()) std::swap(small, mid);
    if (mid.size() > big.size()) std::swap(mid, big);
    if (small.size() > mid.size()) std::swap(small, mid);

    PatchBundle f1(F, {big, big, mid});
    PatchBundle f2(F, {mid, mid});
    PatchBundle f3(F, {small});
    BundleMorphism g1(f1, f2, {0, 1, 1});
    BundleMorphism g2(f2, f3, {0, 0});

    SECTION("identities are preserved") {
        CHECK(functor_R_mor(BundleMorphism::identity(f1)) ==
              PresheafMorphism::identity(functor_R(f1)));
        PresheafMorphism idp = PresheafMorphism::identity(functor_R(f2));
        CHECK(functor_B_mor(idp) == BundleMorphism::identity(functor_B(functor_R(f2))));
    }
    SECTION("composition is preserved by both functors") {
        CHECK(functor_R_preserves_composition(g2, g1));
        PresheafMorphism h1 = functor_R_mor(g1);
        PresheafMorphism h2 = functor_R_mor(g2);
        CHECK(functor_B_preserves_composition(h2, h1));
    }
    SECTION("equivalence report on a small corpus") {
        std::vector<PatchBundle> bundles{f1, f2, f3};
        std::vector<PatchPresheaf> presheaves{functor_R(f1), functor_R(f2), functor_R(f3)};
        std::vector<std::pair<BundleMorphism, BundleMorphism>> bpairs{{g1, g2}};
        std::vector<std::pair<PresheafMorphism, PresheafMorphism>> ppairs{
            {functor_R_mor(g1), functor_R_mor(g2)}};
        CheckReport rep = equivalence_check(bundles, presheaves, bpairs, ppairs);
        INFO((rep.failures.empty() ? std::string() : rep.failures[0]));
        CHECK(rep.pass);
    }
}

TEST_CASE("correspondence between subsets and distinguished presheaves") {
    FiniteRing F = ring_gf(2, 4);
    SubringSpace sigma = enumerate_subrings(F);
    std::vector<PatchPresheaf> corpus;
    for (xmask_t Y = 0; Y <= sigma.all_mask(); ++Y)
        corpus.push_back(presheaf_of_space(subspace(sigma, Y)));
    CheckReport rep = correspondence_check(sigma, corpus);
    INFO((rep.failures.empty() ? std::string() : rep.failures[0]));
    CHECK(rep.pass);
    CHECK(rep.cases > 0);
}

TEST_CASE("empty space edge") {
    FiniteRing F = ring_gf(2, 2);
    PatchBundle empty(F, {});
    PatchPresheaf P = functor_R(empty);
    CHECK(P.algebra().is_degenerate());
    CHECK(P.section(0).is_full());
    CHECK(bundle_roundtrip_exact(empty));
    CHECK(presheaf_roundtrip_exact(P));
    CHECK(all_stalks(P).size() == 0);
}
