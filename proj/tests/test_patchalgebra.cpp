#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "patchalg/patchalgebra.hpp"

using namespace patchalg;

namespace {

PatchPresheaf gf4_example(const FiniteRing& F) {
    return presheaf_from_atoms(F, {full_subring(F), Subring(F, {0, 1})});
}

// Oracle for decomposition uniqueness: enumerate every full orthogonal
// decomposition with distinct coefficients in the section rings, evaluate
// each to a coefficient tuple, and count hits per element.
void enumerate_decompositions(const PatchAlgebra& A, bmask_t remaining,
                              std::vector<std::pair<elem_t, bmask_t>>& acc,
                              std::map<elem_t, std::size_t>& hits) {
    if (remaining == 0) {
        std::vector<elem_t> coeffs(A.atoms(), 0);
        for (auto& [t, e] : acc)
            for (int i = 0; i < A.atoms(); ++i)
                if (e & A.algebra().atom(i)) coeffs[i] = t;
        ++hits[A.index_of_tuple(coeffs)];
        return;
    }
    // choose the block containing the lowest remaining atom
    int lowest = __builtin_ctz(remaining);
    bmask_t rest = remaining & ~(bmask_t(1) << lowest);
    for (bmask_t sub = rest;; sub = (sub - 1) & rest) {
        bmask_t block = sub | (bmask_t(1) << lowest);
        for (elem_t t : A.presheaf().section(block).elements()) {
            bool distinct = true;
            for (auto& [s, e] : acc)
                if (s == t) distinct = false;
            if (!distinct) continue;
            acc.emplace_back(t, block);
            enumerate_decompositions(A, remaining & ~block, acc, hits);
            acc.pop_back();
        }
        if (sub == 0) break;
    }
}

} // namespace

TEST_CASE("building patch algebras") {
    SECTION("one atom: the algebra is the top section") {
        FiniteRing F = ring_gf(2, 2);
        PatchPresheaf P = presheaf_from_atoms(F, {Subring(F, {0, 1})});
        PatchAlgebra A = PatchAlgebra::build(P);
        CHECK(A.size() == 2);
        CHECK(ring_isomorphic(A.oracle(), ring_gf(2, 1)).has_value());
    }
    SECTION("gf(4)/gf(2) example: eight elements, the product of the stalks") {
        FiniteRing F = ring_gf(2, 2);
        PatchAlgebra A = PatchAlgebra::build(gf4_example(F));
        CHECK(A.size() == 8);
        CHECK(ring_isomorphic(A.oracle(), ring_product(ring_gf(2, 2), ring_gf(2, 1)))
                  .has_value());
    }
    SECTION("constant presheaf: the full idempotent-function algebra") {
        FiniteRing F = ring_gf(2, 1);
        PatchPresheaf P = presheaf_from_atoms(F, {full_subring(F), full_subring(F)});
        PatchAlgebra A = PatchAlgebra::build(P);
        CHECK(A.size() == 4);
        SpeckerAlgebra sp = specker(F, BoolAlg(2));
        CHECK(ring_isomorphic(A.oracle(), sp.ring).has_value());
    }
    SECTION("bundle route composes the presheaf functor with the build") {
        FiniteRing F = ring_gf(2, 2);
        PatchBundle f(F, {full_subring(F), Subring(F, {0, 1})});
        PatchAlgebra A = PatchAlgebra::build_from_bundle(f);
        CHECK(A.size() == 8);
    }
    SECTION("degenerate presheaf is rejected") {
        CHECK_THROWS_AS(PatchAlgebra::build(degenerate_presheaf(ring_gf(2, 2))), Error);
    }
}

TEST_CASE("canonical-form arithmetic") {
    FiniteRing F = ring_gf(2, 2);
    PatchAlgebra A = PatchAlgebra::build(gf4_example(F));
    const BoolAlg& B = A.algebra();

    SECTION("neutral elements") {
        PAElem zero = A.element(A.oracle().zero());
        PAElem one = A.element(A.oracle().one());
        for (std::size_t x = 0; x < A.size(); ++x) {
            PAElem xe = A.element(static_cast<elem_t>(x));
            CHECK(pa_add(A, xe, zero) == xe);
            CHECK(pa_mul(A, xe, one) == xe);
        }
    }
    SECTION("the worked square: (x a + 1 b)^2 = (x+1) a + 1 b") {
        // in gf(4), element 2 is x and 3 is x + 1
        PAElem v = pa_normalize(A, {{2, B.atom(0)}, {1, B.atom(1)}});
        PAElem sq = pa_mul(A, v, v);
        std::vector<std::pair<elem_t, bmask_t>> expected{{1, B.atom(1)}, {3, B.atom(0)}};
        CHECK(sq.terms == expected);
    }
    SECTION("normalization merges, pads and sorts") {
        // x on atom a only: pad with zero on atom b
        PAElem v = pa_normalize(A, {{2, B.atom(0)}});
        std::vector<std::pair<elem_t, bmask_t>> expected{{0, B.atom(1)}, {2, B.atom(0)}};
        CHECK(v.terms == expected);
        // equal coefficients merge into one block
        PAElem w = pa_normalize(A, {{1, B.atom(0)}, {1, B.atom(1)}});
        std::vector<std::pair<elem_t, bmask_t>> merged{{1, B.top()}};
        CHECK(w.terms == merged);
    }
    SECTION("coefficients escaping their section ring are rejected") {
        CHECK_THROWS_AS(pa_normalize(A, {{2, B.atom(1)}}), Error); // x is not in gf(2)
    }
    SECTION("non-orthogonal input is rejected") {
        CHECK_THROWS_AS(pa_normalize(A, {{1, B.top()}, {2, B.atom(0)}}), Error);
    }
    SECTION("splitting blocks and renormalizing gives back the canonical form") {
        for (std::size_t x = 0; x < A.size(); ++x) {
            PAElem c = A.element(static_cast<elem_t>(x));
            std::vector<std::pair<elem_t, bmask_t>> split;
            for (auto& [t, e] : c.terms)
                for (int i = 0; i < A.atoms(); ++i)
                    if (e & B.atom(i)) split.emplace_back(t, B.atom(i));
            CHECK(pa_normalize(A, split) == c);
        }
    }
}

TEST_CASE("decomposition uniqueness by brute enumeration") {
    FiniteRing F = ring_gf(2, 2);
    for (const PatchPresheaf& P :
         {gf4_example(F), presheaf_from_atoms(F, {full_subring(F), full_subring(F)}),
          presheaf_from_atoms(F, {Subring(F, {0, 1}), Subring(F, {0, 1}), full_subring(F)})}) {
        PatchAlgebra A = PatchAlgebra::build(P);
        std::map<elem_t, std::size_t> hits;
        std::vector<std::pair<elem_t, bmask_t>> acc;
        enumerate_decompositions(A, A.algebra().top(), acc, hits);
        REQUIRE(hits.size() == A.size());
        for (auto& [x, count] : hits) CHECK(count == 1);
    }
}

TEST_CASE("colon recovery") {
    FiniteRing F = ring_gf(2, 2);
    PatchAlgebra A = PatchAlgebra::build(gf4_example(F));
    CHECK(colon(A, 0).is_full());
    CHECK(colon(A, A.algebra().atom(1)).elements() == std::vector<elem_t>{0, 1});
    CHECK(colon(A, A.algebra().top()).elements() == std::vector<elem_t>{0, 1});
    CHECK(colon(A, A.algebra().atom(0)).is_full());
}

TEST_CASE("projections onto stalks") {
    FiniteRing F = ring_gf(2, 2);
    PatchAlgebra A = PatchAlgebra::build(gf4_example(F));
    auto maxi = maximal_ideals(A.algebra());

    SECTION("surviving coefficient extraction") {
        PsiData p0 = psi(A, maxi[0]);
        PsiData p1 = psi(A, maxi[1]);
        CHECK(p0.atom == 0);
        CHECK(p1.atom == 1);
        // v = x a + 1 b projects to x on the a side and 1 on the b side
        PAElem v = pa_normalize(A, {{2, A.algebra().atom(0)}, {1, A.algebra().atom(1)}});
        elem_t idx = A.index_of(v);
        CHECK(p0.stalk.elems[p0.hom.apply(idx)] == 2);
        CHECK(p1.stalk.elems[p1.hom.apply(idx)] == 1);
    }
    SECTION("kernel equals the embedded-ideal union") {
        PsiData p0 = psi(A, maxi[0]);
        // kernel = elements with zero coordinate at atom 0 = b A
        elem_t b_embed = A.embed(A.algebra().atom(1));
        ElemSet expected(A.size());
        for (std::size_t x = 0; x < A.size(); ++x)
            expected.set(A.oracle().mul(b_embed, static_cast<elem_t>(x)));
        CHECK(p0.kernel.members() == expected);
    }
    SECTION("one atom: the projection is an isomorphism onto the top section") {
        PatchPresheaf P = presheaf_from_atoms(F, {Subring(F, {0, 1})});
        PatchAlgebra A1 = PatchAlgebra::build(P);
        PsiData pd = psi(A1, maximal_ideals(A1.algebra())[0]);
        CHECK(pd.hom.is_isomorphism());
    }
    SECTION("well-definedness across alternative decompositions") {
        PsiData p0 = psi(A, maxi[0]);
        for (std::size_t x = 0; x < A.size(); ++x) {
            PAElem c = A.element(static_cast<elem_t>(x));
            // refine into atom blocks (a legal, non-canonical decomposition)
            std::vector<std::pair<elem_t, bmask_t>> split;
            for (auto& [t, e] : c.terms)
                for (int i = 0; i < A.atoms(); ++i)
                    if (e & A.algebra().atom(i)) split.emplace_back(t, A.algebra().atom(i));
            // coefficient at the surviving atom agrees with the projection
            for (auto& [t, e] : split)
                if (!maxi[0].contains(e))
                    CHECK(p0.stalk.elems[p0.hom.apply(static_cast<elem_t>(x))] == t);
        }
    }
    SECTION("non-maximal ideals are rejected") {
        BoolIdeal zero(A.algebra(), {0});
        CHECK_THROWS_AS(psi(A, zero), Error);
    }
}

TEST_CASE("negative membership: coefficients outside their sections") {
    FiniteRing F = ring_gf(2, 2);
    PatchAlgebra A = PatchAlgebra::build(gf4_example(F));
    // any tuple whose b-coordinate is x or x+1 must fall outside A
    CHECK_FALSE(A.contains_tuple({0, 2}));
    CHECK_FALSE(A.contains_tuple({3, 3}));
    CHECK(A.contains_tuple({3, 1}));
}

TEST_CASE("Pierce reports") {
    SECTION("gf(16) over its full subring space: three stalks, certified twice") {
        FiniteRing F = ring_gf(2, 4);
        SubringSpace sigma = enumerate_subrings(F);
        PatchAlgebra A = PatchAlgebra::build_from_bundle(identity_bundle(sigma));
        CHECK(A.size() == 2 * 4 * 16);
        PierceReport rep = pierce_report(A);
        CHECK(rep.ambient_indecomposable);
        CHECK(rep.idempotents_are_embedded_algebra);
        CHECK(rep.spectrum_matches_atoms);
        REQUIRE(rep.stalk_iso_via_projection.size() == 3);
        CHECK(rep.certified());
    }
    SECTION("decomposable ambient ring trips the hypothesis flag") {
        FiniteRing P2 = ring_product(ring_gf(2, 1), ring_gf(2, 1));
        PatchPresheaf P = presheaf_from_atoms(P2, {full_subring(P2), full_subring(P2)});
        PatchAlgebra A = PatchAlgebra::build(P);
        PierceReport rep = pierce_report(A);
        CHECK_FALSE(rep.ambient_indecomposable);
        CHECK(rep.idempotent_count == 16);
        CHECK(rep.embedded_count == 4);
        CHECK_FALSE(rep.idempotents_are_embedded_algebra);
        CHECK_FALSE(rep.certified());
    }
    SECTION("repeated fibers: stalks still certified, image overcounted") {
        FiniteRing F = ring_gf(2, 4);
        SubringSpace sigma = enumerate_subrings(F);
        Subring gf4 = sigma.member(1).size() == 4 ? sigma.member(1) : sigma.member(0);
        PatchBundle f(F, {gf4, gf4});
        PatchAlgebra A = PatchAlgebra::build_from_bundle(f);
        PierceReport rep = pierce_report(A);
        CHECK(rep.certified());
        CHECK(f.image().size() == 1);
        CHECK(rep.stalk_iso_via_projection.size() == 2);
    }
}

TEST_CASE("structure reports") {
    SECTION("gf(16) over its full subring space") {
        FiniteRing F = ring_gf(2, 4);
        SubringSpace sigma = enumerate_subrings(F);
        PatchAlgebra A = PatchAlgebra::build_from_bundle(identity_bundle(sigma));
        StructureReport rep = structure_report(A);
        CHECK(rep.preds.rickart);
        CHECK(rep.preds.clean);
        CHECK(rep.preds.gelfand);
        CHECK(rep.preds.semihereditary);
        CHECK(rep.minimal_primes_biject_with_pierce);
        CHECK(rep.quotients_match_stalks);
        CHECK(rep.max_bijects_with_pierce);
        CHECK(rep.localizations_match_stalks);
        CHECK(rep.max_equals_min);
    }
    SECTION("singleton space: the algebra is the ring itself") {
        FiniteRing F = ring_gf(2, 2);
        PatchPresheaf P = presheaf_from_atoms(F, {full_subring(F)});
        PatchAlgebra A = PatchAlgebra::build(P);
        CHECK(A.size() == 4);
        StructureReport rep = structure_report(A);
        CHECK(rep.preds.field);
        CHECK(rep.preds.rickart);
    }
    SECTION("dual numbers ambient: clean but not Rickart") {
        FiniteRing D = ring_polyquot(2, {0, 0, 1});
        SubringSpace sigma = enumerate_subrings(D);
        REQUIRE(sigma.size() == 2); // the prime subring and D itself
        PatchAlgebra A = PatchAlgebra::build_from_bundle(identity_bundle(sigma));
        StructureReport rep = structure_report(A);
        CHECK(rep.preds.clean);
        CHECK_FALSE(rep.preds.rickart);
        CHECK_FALSE(rep.preds.semihereditary);
    }
}
