#include <catch2/catch_amalgamated.hpp>

#include "patchalg/presheaf.hpp"

using namespace patchalg;

namespace {

// Standing example: gf(4) with sections gf(4) on atom a, gf(2) on atom b.
PatchPresheaf gf4_example(const FiniteRing& F) {
    return presheaf_from_atoms(F, {full_subring(F), Subring(F, {0, 1})});
}

} // namespace

TEST_CASE("validation") {
    FiniteRing F = ring_gf(2, 2);
    SECTION("constant assignment is valid") {
        PatchPresheaf P = presheaf_from_atoms(F, {full_subring(F), full_subring(F)});
        CHECK(validate(P).ok);
        CHECK(validate_orthogonal(P).ok);
    }
    SECTION("the gf(4)/gf(2) example is valid") {
        CHECK(validate(gf4_example(F)).ok);
    }
    SECTION("breaking the top section is caught with a pair witness") {
        // sections: R_a = gf(4), R_b = gf(2), but R_{ab} forced to gf(4)
        std::vector<Subring> secs{full_subring(F), full_subring(F), Subring(F, {0, 1}),
                                  full_subring(F)};
        PatchPresheaf bad(F, BoolAlg(2), secs);
        PresheafDiagnostics d = validate(bad);
        REQUIRE_FALSE(d.ok);
        CHECK((d.witness_e | d.witness_f) == 3);
        CHECK_FALSE(validate_orthogonal(bad).ok);
        CHECK_THROWS_AS(require_valid(bad), Error);
    }
    SECTION("bottom section must be the whole ring") {
        std::vector<Subring> secs{Subring(F, {0, 1}), Subring(F, {0, 1})};
        PatchPresheaf bad(F, BoolAlg(1), secs);
        CHECK_FALSE(validate(bad).ok);
        CHECK_FALSE(validate_orthogonal(bad).ok);
    }
    SECTION("orthogonal-pair validation agrees with full validation") {
        // positive instances and single-entry mutants over a small corpus
        Rng rng(7);
        FiniteRing R = ring_gf(2, 4);
        SubringSpace sigma = enumerate_subrings(R);
        for (int trial = 0; trial < 50; ++trial) {
            int k = 1 + static_cast<int>(rng.below(3));
            std::vector<Subring> atoms;
            for (int i = 0; i < k; ++i) atoms.push_back(rng.pick(sigma.members()));
            PatchPresheaf P = presheaf_from_atoms(R, atoms);
            CHECK(validate(P).ok == validate_orthogonal(P).ok);
            // mutate one entry
            std::vector<Subring> secs = P.sections();
            bmask_t e = static_cast<bmask_t>(rng.below(P.algebra().size()));
            Subring replacement = rng.pick(sigma.members());
            if (!(secs[e] == replacement)) {
                secs[e] = replacement;
                PatchPresheaf mutant(R, P.algebra(), secs);
                CHECK(validate(mutant).ok == validate_orthogonal(mutant).ok);
            }
        }
    }
}

TEST_CASE("stalks") {
    SECTION("one atom: the stalk is the top section") {
        FiniteRing F = ring_gf(2, 2);
        PatchPresheaf P = presheaf_from_atoms(F, {Subring(F, {0, 1})});
        auto maxi = maximal_ideals(P.algebra());
        REQUIRE(maxi.size() == 1);
        CHECK(stalk(P, maxi[0]) == P.section(1));
    }
    SECTION("gf(4) example: stalks are gf(4) and gf(2)") {
        FiniteRing F2 = ring_gf(2, 2);
        PatchPresheaf P = gf4_example(F2);
        SubringSpace st = all_stalks(P);
        REQUIRE(st.size() == 2);
        CHECK(st.member(0).size() == 2);
        CHECK(st.member(1).size() == 4);
    }
    SECTION("constant presheaf: every stalk is the whole ring") {
        FiniteRing F = ring_gf(2, 2);
        PatchPresheaf P = presheaf_from_atoms(F, {full_subring(F), full_subring(F)});
        CHECK(all_stalks(P).size() == 1);
        CHECK(all_stalks(P).member(0).is_full());
    }
    SECTION("stalks reject non-maximal ideals") {
        FiniteRing F2 = ring_gf(2, 2);
        PatchPresheaf P = gf4_example(F2);
        BoolIdeal zero(P.algebra(), {0});
        CHECK_THROWS_AS(stalk(P, zero), Error);
    }
}

TEST_CASE("section recovery from stalks") {
    SECTION("gf(4) example, all indices") {
        FiniteRing F2 = ring_gf(2, 2);
        PatchPresheaf P = gf4_example(F2);
        for (bmask_t e = 0; e < P.algebra().size(); ++e)
            CHECK(recover_section(P, e) == P.section(e));
    }
    SECTION("the empty intersection at the bottom index is the whole ring") {
        FiniteRing F2 = ring_gf(2, 2);
        PatchPresheaf P = gf4_example(F2);
        CHECK(recover_section(P, 0).is_full());
    }
}

TEST_CASE("distinguished structure") {
    SECTION("presheaf of a space is distinguished, with largest index U(t)") {
        FiniteRing F = ring_gf(2, 4);
        SubringSpace X = enumerate_subrings(F);
        PatchPresheaf P = presheaf_of_space(X);
        DistinguishedResult dr = distinguished(P);
        REQUIRE(dr.ok);
        for (std::size_t t = 0; t < F.n(); ++t) {
            bmask_t expected = 0;
            for (std::size_t i = 0; i < X.size(); ++i)
                if (X.member(i).contains(static_cast<elem_t>(t)))
                    expected |= P.algebra().atom(static_cast<int>(i));
            CHECK(dr.e_t[t] == expected);
        }
    }
    SECTION("constant presheaf over two atoms is not distinguished") {
        FiniteRing F = ring_gf(2, 2);
        PatchPresheaf P = presheaf_from_atoms(F, {full_subring(F), full_subring(F)});
        DistinguishedResult dr = distinguished(P);
        REQUIRE_FALSE(dr.ok);
        CHECK(dr.witness_m1 >= 0);
    }
    SECTION("one atom: always distinguished") {
        FiniteRing F = ring_gf(2, 2);
        PatchPresheaf Q = presheaf_from_atoms(F, {Subring(F, {0, 1})});
        CHECK(distinguished(Q).ok);
    }
    SECTION("degenerate presheaf is distinguished vacuously") {
        CHECK(distinguished(degenerate_presheaf(ring_gf(2, 2))).ok);
    }
}

TEST_CASE("morphisms") {
    FiniteRing F = ring_gf(2, 2);
    PatchPresheaf P = gf4_example(F);
    SECTION("identity is valid and composes to itself") {
        PresheafMorphism id = PresheafMorphism::identity(P);
        CHECK(compose(id, id) == id);
    }
    SECTION("coarsening along an atom collapse") {
        // target over one atom with section gf(2); the hom runs from the
        // target algebra to the source algebra and its atom map sends both
        // source atoms onto the single target atom
        PatchPresheaf Q = presheaf_from_atoms(F, {Subring(F, {0, 1})});
        PresheafMorphism m(P, Q, BoolHom(Q.algebra(), P.algebra(), std::vector<int>{0, 0}));
        // the target section over its atom lands in the source top section
        CHECK(m.target().section(1).subset_of(m.source().section(P.algebra().top())));
    }
    SECTION("containment violation is rejected") {
        // target section gf(4) cannot sit inside the source top section gf(2)
        PatchPresheaf Q = presheaf_from_atoms(F, {full_subring(F)});
        try {
            PresheafMorphism bad(P, Q, BoolHom(Q.algebra(), P.algebra(), std::vector<int>{0, 0}));
            FAIL("expected containment failure");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("containment") != std::string::npos);
        }
    }
    SECTION("composition re-verifies containments") {
        PatchPresheaf Q = presheaf_from_atoms(F, {Subring(F, {0, 1})});
        PresheafMorphism m1(P, Q, BoolHom(Q.algebra(), P.algebra(), std::vector<int>{0, 0}));
        PresheafMorphism m2 = PresheafMorphism::identity(Q);
        PresheafMorphism c = compose(m2, m1);
        CHECK(c.source() == P);
        CHECK(c.target() == Q);
    }
}
