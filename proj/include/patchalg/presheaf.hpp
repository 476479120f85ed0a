#pragma once

// Patch presheaves: families of subrings indexed by a Boolean algebra, with
// R_0 the whole ring and R_e cap R_f = R_{e v f}. Sections are stored for
// every index, not only atoms, since the intersection law constrains all of
// them.

#include <optional>
#include <string>
#include <vector>

#include "boolalg.hpp"
#include "ring.hpp"
#include "subring.hpp"
#include "topo.hpp"
#include "util.hpp"

namespace patchalg {

class PatchPresheaf {
public:
    /// Sections indexed by mask; entry 0 must be the full ring. Construction
    /// does not validate the intersection law: validators below report
    /// diagnostics instead of refusing, so invalid candidates can be studied.
    PatchPresheaf(FiniteRing ring, BoolAlg alg, std::vector<Subring> sections)
        : ring_(std::move(ring)), alg_(alg), sections_(std::move(sections)) {
        require(sections_.size() == alg_.size(), ErrorKind::structural,
                "presheaf needs one section per algebra element");
        for (const Subring& s : sections_)
            require(s.ring().same_ring(ring_), ErrorKind::structural,
                    "section of a different ambient ring");
    }

    const FiniteRing& ring() const { return ring_; }
    const BoolAlg& algebra() const { return alg_; }
    const Subring& section(bmask_t e) const { return sections_[e]; }
    const std::vector<Subring>& sections() const { return sections_; }

    bool operator==(const PatchPresheaf& o) const {
        return ring_.same_ring(o.ring_) && alg_ == o.alg_ && sections_ == o.sections_;
    }

private:
    FiniteRing ring_;
    BoolAlg alg_;
    std::vector<Subring> sections_;
};

/// Validation outcome; on failure names the first offending pair.
struct PresheafDiagnostics {
    bool ok = true;
    std::string message;
    bmask_t witness_e = 0, witness_f = 0;
};

namespace presheaf_detail {

// Intersection law on one pair, without re-verifying subring closure: the
// sorted element lists are intersected directly.
inline bool law_holds(const PatchPresheaf& P, bmask_t e, bmask_t f) {
    const auto& a = P.section(e).elements();
    const auto& b = P.section(f).elements();
    std::vector<elem_t> meet;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
    return meet == P.section(e | f).elements();
}

} // namespace presheaf_detail

/// Full validation: R_0 = R and the intersection law over all pairs.
inline PresheafDiagnostics validate(const PatchPresheaf& P) {
    const BoolAlg& B = P.algebra();
    if (!P.section(0).is_full())
        return {false, "bottom section must be the whole ring", 0, 0};
    for (bmask_t e = 0; e < B.size(); ++e)
        for (bmask_t f = e; f < B.size(); ++f)
            if (!presheaf_detail::law_holds(P, e, f))
                return {false, "intersection law fails", e, f};
    return {};
}

/// Fast path: the law checked on orthogonal pairs only. Agreement with the
/// full validator on every input is itself one of the tested theorems.
inline PresheafDiagnostics validate_orthogonal(const PatchPresheaf& P) {
    const BoolAlg& B = P.algebra();
    if (!P.section(0).is_full())
        return {false, "bottom section must be the whole ring", 0, 0};
    for (bmask_t e = 0; e < B.size(); ++e)
        for (bmask_t f = e; f < B.size(); ++f) {
            if (e & f) continue;
            if (!presheaf_detail::law_holds(P, e, f))
                return {false, "intersection law fails on an orthogonal pair", e, f};
        }
    return {};
}

inline void require_valid(const PatchPresheaf& P) {
    auto d = validate(P);
    require(d.ok, ErrorKind::admissibility, "invalid patch presheaf: " + d.message + " at pair (" +
                                                std::to_string(d.witness_e) + "," +
                                                std::to_string(d.witness_f) + ")");
}

/// Presheaf generated by atom sections: R_e is the intersection of the
/// chosen subrings over the atoms below e, and R_0 = R. Always satisfies the
/// intersection law; this is the positive-instance generator.
inline PatchPresheaf presheaf_from_atoms(const FiniteRing& R, const std::vector<Subring>& atoms) {
    require(!atoms.empty(), ErrorKind::structural, "need at least one atom section");
    BoolAlg B(static_cast<int>(atoms.size()));
    std::vector<Subring> sections;
    sections.reserve(B.size());
    for (bmask_t e = 0; e < B.size(); ++e) {
        Subring s = full_subring(R);
        for (int i = 0; i < B.atoms(); ++i)
            if (e & B.atom(i)) s = intersect(s, atoms[i]);
        sections.push_back(std::move(s));
    }
    return PatchPresheaf(R, B, std::move(sections));
}

/// The degenerate presheaf over the one-element algebra; it is the presheaf
/// of the empty space.
inline PatchPresheaf degenerate_presheaf(const FiniteRing& R) {
    return PatchPresheaf(R, BoolAlg::degenerate(), {full_subring(R)});
}

/// Presheaf of a space: index algebra = clopens of X (= its powerset, atom i
/// standing for member i), sections = intersections over the clopen.
inline PatchPresheaf presheaf_of_space(const SubringSpace& X) {
    if (X.size() == 0) return degenerate_presheaf(X.ring());
    std::vector<Subring> atoms;
    for (const Subring& s : X.members()) atoms.push_back(s);
    return presheaf_from_atoms(X.ring(), atoms);
}

// ---------------------------------------------------------------------------
// Stalks

/// Stalk at a maximal ideal: the union of sections over indices outside the
/// ideal. The union is certified to be a subring (it is directed because the
/// complement of a maximal ideal is a filter).
inline Subring stalk(const PatchPresheaf& P, const BoolIdeal& m) {
    require(m.algebra() == P.algebra(), ErrorKind::structural, "ideal of a different algebra");
    require(is_maximal(m), ErrorKind::structural, "stalks are defined at maximal ideals only");
    ElemSet u(P.ring().n());
    for (bmask_t e = 0; e < P.algebra().size(); ++e) {
        if (m.contains(e)) continue;
        for (elem_t x : P.section(e).elements()) u.set(x);
    }
    return Subring(P.ring(), u.elements()); // construction re-verifies closure
}

/// All stalks, as a space (duplicates collapse).
inline SubringSpace all_stalks(const PatchPresheaf& P) {
    std::vector<Subring> st;
    if (!P.algebra().is_degenerate())
        for (const BoolIdeal& m : maximal_ideals(P.algebra())) st.push_back(stalk(P, m));
    return SubringSpace(P.ring(), std::move(st));
}

/// Recovery of a section from the stalks: R_e must equal the intersection of
/// the stalks at the maximal ideals not containing e. For e = 0 no maximal
/// ideal qualifies and the empty intersection is the whole ring, matching
/// R_0. Inequality is an internal error: it would contradict validation.
inline Subring recover_section(const PatchPresheaf& P, bmask_t e) {
    require(P.algebra().contains(e), ErrorKind::structural, "index outside algebra");
    Subring acc = full_subring(P.ring());
    if (!P.algebra().is_degenerate())
        for (const BoolIdeal& m : maximal_ideals(P.algebra()))
            if (!m.contains(e)) acc = intersect(acc, stalk(P, m));
    require(acc == P.section(e), ErrorKind::internal,
            "section recovery from stalks failed at index " + std::to_string(e));
    return acc;
}

/// Bulk form of the recovery check: stalks are computed once and every index
/// is compared against the matching intersection. Used by the suites, where
/// per-index recomputation would dominate.
inline bool sections_recoverable(const PatchPresheaf& P) {
    if (P.algebra().is_degenerate()) return P.section(0).is_full();
    auto maxi = maximal_ideals(P.algebra());
    std::vector<Subring> stalks;
    for (const BoolIdeal& m : maxi) stalks.push_back(stalk(P, m));
    for (bmask_t e = 0; e < P.algebra().size(); ++e) {
        std::vector<elem_t> acc;
        bool started = false;
        for (std::size_t i = 0; i < maxi.size(); ++i) {
            if (maxi[i].contains(e)) continue;
            if (!started) {
                acc = stalks[i].elements();
                started = true;
            } else {
                std::vector<elem_t> meet;
                std::set_intersection(acc.begin(), acc.end(), stalks[i].elements().begin(),
                                      stalks[i].elements().end(), std::back_inserter(meet));
                acc = std::move(meet);
            }
        }
        if (!started) {
            if (!P.section(e).is_full()) return false;
        } else if (acc != P.section(e).elements()) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Distinguished presheaves

/// Distinguished structure: for each ring element t, the set of indices whose
/// section contains t must be a principal downset, with top e_t; and the e_t
/// must separate the maximal ideals. A negative outcome is a value carrying
/// the violated condition, not an error.
struct DistinguishedResult {
    bool ok = false;
    std::vector<bmask_t> e_t;     ///< per ring element, when ok
    std::string violated;         ///< which condition failed
    elem_t witness_t = 0;         ///< offending element, for condition (a)
    int witness_m1 = -1, witness_m2 = -1; ///< unseparated ideal pair, condition (b)
};

inline DistinguishedResult distinguished(const PatchPresheaf& P) {
    const BoolAlg& B = P.algebra();
    DistinguishedResult res;
    res.e_t.assign(P.ring().n(), 0);
    for (std::size_t t = 0; t < P.ring().n(); ++t) {
        bmask_t join = 0;
        for (bmask_t e = 0; e < B.size(); ++e)
            if (P.section(e).contains(static_cast<elem_t>(t))) join |= e;
        // the candidate largest index is the join of all indices containing t
        for (bmask_t e = 0; e < B.size(); ++e) {
            bool contains = P.section(e).contains(static_cast<elem_t>(t));
            if (contains != bool((e & ~join) == 0)) {
                res.violated = "no largest index: membership set is not a principal downset";
                res.witness_t = static_cast<elem_t>(t);
                return res;
            }
        }
        res.e_t[t] = join;
    }
    if (!B.is_degenerate()) {
        auto maxi = maximal_ideals(B);
        for (std::size_t i = 0; i < maxi.size(); ++i)
            for (std::size_t j = i + 1; j < maxi.size(); ++j) {
                bool separated = false;
                for (std::size_t t = 0; t < P.ring().n() && !separated; ++t)
                    if (maxi[i].contains(res.e_t[t]) != maxi[j].contains(res.e_t[t]))
                        separated = true;
                if (!separated) {
                    res.violated = "largest indices do not separate a pair of maximal ideals";
                    res.witness_m1 = static_cast<int>(i);
                    res.witness_m2 = static_cast<int>(j);
                    return res;
                }
            }
        // membership in a stalk is controlled by the largest index
        for (const BoolIdeal& m : maxi) {
            Subring st = stalk(P, m);
            for (std::size_t t = 0; t < P.ring().n(); ++t)
                require(st.contains(static_cast<elem_t>(t)) == !m.contains(res.e_t[t]),
                        ErrorKind::internal, "stalk membership disagrees with largest index");
        }
    }
    res.ok = true;
    return res;
}

// ---------------------------------------------------------------------------
// Morphisms

/// Morphism of presheaves from source to target. The data is a Boolean
/// homomorphism running backwards, from the target's algebra to the source's,
/// with each target section contained in the source section it is carried to.
class PresheafMorphism {
public:
    PresheafMorphism(PatchPresheaf source, PatchPresheaf target, BoolHom h)
        : src_(std::move(source)), dst_(std::move(target)), h_(std::move(h)) {
        require(h_.domain() == dst_.algebra() && h_.codomain() == src_.algebra(),
                ErrorKind::structural, "hom endpoints do not match the presheaves");
        require(src_.ring().same_ring(dst_.ring()), ErrorKind::structural,
                "presheaves over different rings");
        validate_containments();
    }

    const PatchPresheaf& source() const { return src_; }
    const PatchPresheaf& target() const { return dst_; }
    const BoolHom& hom() const { return h_; }

    static PresheafMorphism identity(const PatchPresheaf& P) {
        return PresheafMorphism(P, P, BoolHom::identity(P.algebra()));
    }

    bool operator==(const PresheafMorphism& o) const {
        return src_ == o.src_ && dst_ == o.dst_ && h_ == o.h_;
    }

private:
    void validate_containments() const {
        for (bmask_t f = 0; f < dst_.algebra().size(); ++f) {
            require(dst_.section(f).subset_of(src_.section(h_.apply(f))), ErrorKind::admissibility,
                    "morphism containment fails at target index " + std::to_string(f));
            // the square over f' <= f commutes by transitivity of containment;
            // asserted all the same
            for (bmask_t fp = f;; fp = (fp - 1) & f) {
                require(dst_.section(f).subset_of(src_.section(h_.apply(fp))),
                        ErrorKind::internal, "containment square does not commute");
                if (fp == 0) break;
            }
        }
    }

    PatchPresheaf src_, dst_;
    BoolHom h_;
};

inline PresheafMorphism compose(const PresheafMorphism& later, const PresheafMorphism& first) {
    require(first.target() == later.source(), ErrorKind::structural,
            "presheaf morphisms not composable");
    // hom of the composite runs target-to-source: first.h after later.h
    return PresheafMorphism(first.source(), later.target(), compose(first.hom(), later.hom()));
}

} // namespace patchalg
