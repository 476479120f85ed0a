#pragma once

// Patch algebras. Elements are kept in two interchangeable shapes: the
// canonical full orthogonal form (pairwise orthogonal nonzero idempotents
// joining to 1, with distinct coefficients constrained to the section rings)
// and a coordinate tuple in the product of the atom stalks. The product is
// materialized as a table ring and serves as the independent oracle for the
// symbolic arithmetic; a verified evaluation bijection ties the two.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "boolalg.hpp"
#include "bundle.hpp"
#include "presheaf.hpp"
#include "ring.hpp"
#include "ringprops.hpp"
#include "subring.hpp"
#include "util.hpp"

namespace patchalg {

struct PAElem; // below

namespace detail {

struct PatchAlgebraImpl {
    PatchPresheaf presheaf;
    int atoms;
    std::vector<Subring> atom_sections;
    FiniteRing oracle;
    std::vector<std::size_t> radix;          // multiplier per atom coordinate
    std::vector<elem_t> coord_elem;          // n * atoms: ambient element per coordinate
    std::vector<std::vector<elem_t>> pos_in; // per atom: ambient element -> position (npos absent)
    std::vector<elem_t> embed;               // per algebra mask: oracle index of the indicator

    PatchAlgebraImpl(PatchPresheaf p) : presheaf(std::move(p)), atoms(presheaf.algebra().atoms()) {}
};

} // namespace detail

/// Canonical full orthogonal form. Terms are (coefficient, idempotent mask)
/// pairs sorted by coefficient index; masks are pairwise disjoint, nonzero,
/// and join to the top of the index algebra; coefficients are distinct and
/// each lies in the section ring of its mask.
struct PAElem {
    std::shared_ptr<const detail::PatchAlgebraImpl> alg;
    std::vector<std::pair<elem_t, bmask_t>> terms;

    bool operator==(const PAElem& o) const { return alg == o.alg && terms == o.terms; }
};

class PatchAlgebra {
public:
    /// Build from a validated presheaf. The oracle product of the atom stalks
    /// is materialized with full tables; canonical forms are checked to
    /// round-trip through it, and the embedded index algebra is certified to
    /// consist of faithful idempotents.
    static PatchAlgebra build(const PatchPresheaf& P, std::size_t cap = kDefaultOpCap) {
        require_valid(P);
        require(!P.algebra().is_degenerate(), ErrorKind::admissibility,
                "patch algebra of the degenerate presheaf is the zero ring, which is rejected");
        auto impl = std::make_shared<detail::PatchAlgebraImpl>(P);
        const FiniteRing& R = P.ring();
        int k = impl->atoms;
        std::size_t n = 1;
        for (int i = 0; i < k; ++i) {
            impl->atom_sections.push_back(P.section(P.algebra().atom(i)));
            n *= impl->atom_sections.back().size();
            require(n <= cap, ErrorKind::cap_exceeded,
                    "patch algebra size exceeds cap " + std::to_string(cap));
        }
        impl->radix.resize(k);
        std::size_t mult = 1;
        for (int i = 0; i < k; ++i) {
            impl->radix[i] = mult;
            mult *= impl->atom_sections[i].size();
        }
        impl->pos_in.assign(k, std::vector<elem_t>(R.n(), SubsetRing::npos));
        for (int i = 0; i < k; ++i) {
            const auto& es = impl->atom_sections[i].elements();
            for (std::size_t p = 0; p < es.size(); ++p)
                impl->pos_in[i][es[p]] = static_cast<elem_t>(p);
        }
        impl->coord_elem.resize(n * k);
        for (std::size_t a = 0; a < n; ++a) {
            std::size_t rest = a;
            for (int i = 0; i < k; ++i) {
                std::size_t sz = impl->atom_sections[i].size();
                impl->coord_elem[a * k + i] = impl->atom_sections[i].elements()[rest % sz];
                rest /= sz;
            }
        }

        FiniteRing::Data d;
        d.n = n;
        d.add.resize(n * n);
        d.mul.resize(n * n);
        d.labels.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            std::string lab = "(";
            for (int i = 0; i < k; ++i) {
                if (i) lab += ",";
                lab += R.label(impl->coord_elem[a * k + i]);
            }
            d.labels[a] = lab + ")";
            for (std::size_t b = 0; b < n; ++b) {
                std::size_t s = 0, p = 0;
                for (int i = 0; i < k; ++i) {
                    elem_t xa = impl->coord_elem[a * k + i];
                    elem_t xb = impl->coord_elem[b * k + i];
                    s += static_cast<std::size_t>(impl->pos_in[i][R.add(xa, xb)]) *
                         impl->radix[i];
                    p += static_cast<std::size_t>(impl->pos_in[i][R.mul(xa, xb)]) *
                         impl->radix[i];
                }
                d.add[a * n + b] = static_cast<elem_t>(s);
                d.mul[a * n + b] = static_cast<elem_t>(p);
            }
        }
        std::size_t one = 0, zero = 0;
        for (int i = 0; i < k; ++i) {
            one += static_cast<std::size_t>(impl->pos_in[i][R.one()]) * impl->radix[i];
            zero += static_cast<std::size_t>(impl->pos_in[i][R.zero()]) * impl->radix[i];
        }
        d.zero = static_cast<elem_t>(zero);
        d.one = static_cast<elem_t>(one);
        d.name = "patch algebra over " + R.name();
        impl->oracle = FiniteRing::from_data(std::move(d));

        impl->embed.resize(P.algebra().size());
        for (bmask_t e = 0; e < P.algebra().size(); ++e) {
            std::size_t idx = 0;
            for (int i = 0; i < k; ++i) {
                elem_t c = (e & P.algebra().atom(i)) ? R.one() : R.zero();
                idx += static_cast<std::size_t>(impl->pos_in[i][c]) * impl->radix[i];
            }
            impl->embed[e] = static_cast<elem_t>(idx);
        }

        PatchAlgebra A(std::move(impl));
        A.verify_construction();
        return A;
    }

    static PatchAlgebra build_from_bundle(const PatchBundle& f, std::size_t cap = kDefaultOpCap) {
        return build(functor_R(f), cap);
    }

    const PatchPresheaf& presheaf() const { return impl_->presheaf; }
    const BoolAlg& algebra() const { return impl_->presheaf.algebra(); }
    const FiniteRing& ambient() const { return impl_->presheaf.ring(); }
    const FiniteRing& oracle() const { return impl_->oracle; }
    std::size_t size() const { return impl_->oracle.n(); }
    int atoms() const { return impl_->atoms; }
    const Subring& atom_section(int i) const { return impl_->atom_sections[i]; }
    elem_t embed(bmask_t e) const { return impl_->embed[e]; }

    /// Ambient coordinate of an oracle element at an atom.
    elem_t coord(elem_t x, int atom) const { return impl_->coord_elem[std::size_t(x) * impl_->atoms + atom]; }

    /// Membership of an ambient coefficient tuple in the algebra: every
    /// coordinate must lie in its atom's section ring.
    bool contains_tuple(const std::vector<elem_t>& coeffs) const {
        require(coeffs.size() == static_cast<std::size_t>(impl_->atoms), ErrorKind::structural,
                "tuple arity mismatch");
        for (int i = 0; i < impl_->atoms; ++i)
            if (impl_->pos_in[i][coeffs[i]] == SubsetRing::npos) return false;
        return true;
    }

    elem_t index_of_tuple(const std::vector<elem_t>& coeffs) const {
        require(contains_tuple(coeffs), ErrorKind::structural, "tuple outside the algebra");
        std::size_t idx = 0;
        for (int i = 0; i < impl_->atoms; ++i)
            idx += static_cast<std::size_t>(impl_->pos_in[i][coeffs[i]]) * impl_->radix[i];
        return static_cast<elem_t>(idx);
    }

    /// Canonical form of an oracle element: group coordinates by coefficient.
    PAElem element(elem_t x) const {
        std::map<elem_t, bmask_t> blocks;
        for (int i = 0; i < impl_->atoms; ++i)
            blocks[coord(x, i)] |= algebra().atom(i);
        PAElem out{impl_, {}};
        for (auto& [t, e] : blocks) out.terms.emplace_back(t, e);
        return out;
    }

    /// Oracle index of a canonical (or any valid full orthogonal) form.
    elem_t index_of(const PAElem& x) const {
        require(x.alg == impl_, ErrorKind::structural, "element of a different algebra");
        std::vector<elem_t> coeffs(impl_->atoms, ambient().zero());
        bmask_t seen = 0;
        for (auto& [t, e] : x.terms) {
            require((seen & e) == 0, ErrorKind::structural, "terms not orthogonal");
            seen |= e;
            for (int i = 0; i < impl_->atoms; ++i)
                if (e & algebra().atom(i)) coeffs[i] = t;
        }
        require(seen == algebra().top(), ErrorKind::structural, "decomposition not full");
        return index_of_tuple(coeffs);
    }

    bool same_algebra(const PatchAlgebra& o) const { return impl_ == o.impl_; }
    std::shared_ptr<const detail::PatchAlgebraImpl> impl() const { return impl_; }

private:
    explicit PatchAlgebra(std::shared_ptr<const detail::PatchAlgebraImpl> impl)
        : impl_(std::move(impl)) {}

    void verify_construction() const;

    std::shared_ptr<const detail::PatchAlgebraImpl> impl_;
};

// ---------------------------------------------------------------------------
// Canonical-form arithmetic

/// Normalize an orthogonal decomposition: drop zero idempotents, merge equal
/// coefficients, pad the uncovered part with a zero coefficient (merging into
/// an existing zero block), sort by coefficient. Rejects non-orthogonal input
/// and coefficients escaping their section rings.
inline PAElem pa_normalize(const PatchAlgebra& A,
                           const std::vector<std::pair<elem_t, bmask_t>>& pairs) {
    const BoolAlg& B = A.algebra();
    bmask_t seen = 0;
    std::map<elem_t, bmask_t> blocks;
    for (auto& [t, e] : pairs) {
        require(B.contains(e), ErrorKind::structural, "idempotent outside algebra");
        require(t < A.ambient().n(), ErrorKind::structural, "coefficient outside ambient ring");
        if (e == 0) continue;
        require((seen & e) == 0, ErrorKind::structural, "idempotents not pairwise orthogonal");
        seen |= e;
        blocks[t] |= e;
    }
    if (seen != B.top()) blocks[A.ambient().zero()] |= B.top() & ~seen;
    PAElem out{A.impl(), {}};
    for (auto& [t, e] : blocks) {
        require(A.presheaf().section(e).contains(t), ErrorKind::structural,
                "coefficient escapes its section ring");
        out.terms.emplace_back(t, e);
    }
    return out;
}

inline void check_invariants(const PatchAlgebra& A, const PAElem& x) {
    require(x.alg == A.impl(), ErrorKind::structural, "element of a different algebra");
    bmask_t seen = 0;
    elem_t prev = 0;
    bool first = true;
    for (auto& [t, e] : x.terms) {
        require(e != 0, ErrorKind::internal, "zero idempotent in canonical form");
        require((seen & e) == 0, ErrorKind::internal, "overlapping idempotents in canonical form");
        require(first || t > prev, ErrorKind::internal, "terms not sorted by distinct coefficients");
        require(A.presheaf().section(e).contains(t), ErrorKind::internal,
                "coefficient escapes its section ring");
        seen |= e;
        prev = t;
        first = false;
    }
    require(seen == A.algebra().top(), ErrorKind::internal, "canonical form not full");
}

/// Arithmetic by common refinement: pair up the two partitions, operate on
/// coefficients blockwise, then normalize.
template <typename Op>
inline PAElem pa_combine(const PatchAlgebra& A, const PAElem& x, const PAElem& y, Op op) {
    require(x.alg == A.impl() && y.alg == A.impl(), ErrorKind::structural,
            "elements of different algebras");
    std::vector<std::pair<elem_t, bmask_t>> refined;
    for (auto& [t, e] : x.terms)
        for (auto& [s, f] : y.terms) {
            bmask_t m = e & f;
            if (m) refined.emplace_back(op(t, s), m);
        }
    return pa_normalize(A, refined);
}

inline PAElem pa_add(const PatchAlgebra& A, const PAElem& x, const PAElem& y) {
    return pa_combine(A, x, y, [&](elem_t t, elem_t s) { return A.ambient().add(t, s); });
}

inline PAElem pa_mul(const PatchAlgebra& A, const PAElem& x, const PAElem& y) {
    return pa_combine(A, x, y, [&](elem_t t, elem_t s) { return A.ambient().mul(t, s); });
}

inline void PatchAlgebra::verify_construction() const {
    // canonical forms round-trip through the oracle and satisfy the invariants
    for (std::size_t a = 0; a < size(); ++a) {
        PAElem x = element(static_cast<elem_t>(a));
        check_invariants(*this, x);
        require(index_of(x) == a, ErrorKind::internal, "evaluation round trip failed");
    }
    // embedded algebra: faithful idempotents realizing join and meet
    const FiniteRing& A = impl_->oracle;
    for (bmask_t e = 0; e < algebra().size(); ++e) {
        elem_t ee = impl_->embed[e];
        require(A.mul(ee, ee) == ee, ErrorKind::internal, "embedded element not idempotent");
        for (bmask_t f = 0; f < algebra().size(); ++f) {
            elem_t ff = impl_->embed[f];
            require(A.mul(ee, ff) == impl_->embed[e & f], ErrorKind::internal,
                    "embedding breaks meets");
            require(A.sub(A.add(ee, ff), A.mul(ee, ff)) == impl_->embed[e | f],
                    ErrorKind::internal, "embedding breaks joins");
        }
        if (e != 0) {
            // faithfulness: for t in the top section, t on the atoms of e and
            // 0 elsewhere is an element of A, and it vanishes only for t = 0
            for (elem_t t : presheaf().section(algebra().top()).elements()) {
                std::vector<elem_t> coeffs(atoms(), ambient().zero());
                for (int i = 0; i < atoms(); ++i)
                    if (e & algebra().atom(i)) coeffs[i] = t;
                require(contains_tuple(coeffs), ErrorKind::internal,
                        "top-section multiple of an idempotent escaped the algebra");
                bool vanishes = index_of_tuple(coeffs) == A.zero();
                require(vanishes == (t == ambient().zero()), ErrorKind::internal,
                        "embedded idempotent not faithful");
            }
        }
    }
    // symbolic arithmetic agrees with the oracle; exhaustive when small,
    // seeded sample otherwise (the acceptance suite runs the exhaustive
    // comparison on every corpus algebra)
    std::size_t n = size();
    auto check_pair = [&](elem_t a, elem_t b) {
        PAElem xa = element(a), xb = element(b);
        require(index_of(pa_add(*this, xa, xb)) == A.add(a, b), ErrorKind::internal,
                "symbolic addition disagrees with the oracle");
        require(index_of(pa_mul(*this, xa, xb)) == A.mul(a, b), ErrorKind::internal,
                "symbolic multiplication disagrees with the oracle");
    };
    if (n <= 128) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b)
                check_pair(static_cast<elem_t>(a), static_cast<elem_t>(b));
    } else {
        Rng rng(0xa15u + n);
        for (int i = 0; i < 5000; ++i)
            check_pair(static_cast<elem_t>(rng.below(n)), static_cast<elem_t>(rng.below(n)));
    }
}

// ---------------------------------------------------------------------------
// Colon recovery

/// (A :_R e) = { r in R : r e in A }, by scanning the ambient ring through
/// the oracle membership test. Certified equal to the section ring at e.
inline Subring colon(const PatchAlgebra& A, bmask_t e) {
    require(A.algebra().contains(e), ErrorKind::structural, "index outside algebra");
    std::vector<elem_t> found;
    for (std::size_t r = 0; r < A.ambient().n(); ++r) {
        std::vector<elem_t> coeffs(A.atoms(), A.ambient().zero());
        for (int i = 0; i < A.atoms(); ++i)
            if (e & A.algebra().atom(i)) coeffs[i] = static_cast<elem_t>(r);
        if (A.contains_tuple(coeffs)) found.push_back(static_cast<elem_t>(r));
    }
    Subring got(A.ambient(), std::move(found));
    require(got == A.presheaf().section(e), ErrorKind::internal,
            "colon recovery disagrees with the section ring at index " + std::to_string(e));
    return got;
}

// ---------------------------------------------------------------------------
// Quotient maps onto stalks

/// The projection onto the stalk at a maximal ideal of the index algebra:
/// send an element to the coefficient of the unique term whose idempotent
/// survives. Packaged with its target stalk (as a ring), certified to be a
/// surjective homomorphism, and its kernel certified to equal the ideal
/// generated by the embedded maximal ideal.
struct PsiData {
    int atom = -1;           ///< surviving atom
    SubsetRing stalk;        ///< the stalk R_{atom} as a standalone ring
    RingHom hom;             ///< oracle -> stalk ring
    RingIdeal kernel;        ///< of the oracle
    RingIdeal ideal_mA;      ///< union of eA over e in the maximal ideal
};

inline PsiData psi(const PatchAlgebra& A, const BoolIdeal& m) {
    require(m.algebra() == A.algebra(), ErrorKind::structural, "ideal of a different algebra");
    require(is_maximal(m), ErrorKind::structural,
            "quotient maps are defined at maximal ideals only");
    int atom = surviving_atom(m);
    SubsetRing st = subring_as_ring(A.atom_section(atom));
    std::size_t n = A.size();
    std::vector<elem_t> map(n);
    for (std::size_t x = 0; x < n; ++x) {
        // coefficient of the surviving term = coordinate at the surviving atom
        PAElem cf = A.element(static_cast<elem_t>(x));
        elem_t t = A.ambient().zero();
        bool found = false;
        for (auto& [tt, e] : cf.terms)
            if (!m.contains(e)) {
                require(!found, ErrorKind::internal, "two surviving terms at a maximal ideal");
                t = tt;
                found = true;
            }
        require(found, ErrorKind::internal, "no surviving term at a maximal ideal");
        map[x] = st.index_of[t];
        require(map[x] != SubsetRing::npos, ErrorKind::internal,
                "surviving coefficient escapes the stalk");
    }
    RingHom hom(A.oracle(), st.ring, std::move(map));
    require(hom.is_surjective(), ErrorKind::internal, "stalk projection not surjective");
    RingIdeal kernel(A.oracle(), hom.kernel());

    // mA = union of eA over e in m
    ElemSet mA(n);
    for (bmask_t e : m.elements()) {
        elem_t ee = A.embed(e);
        for (std::size_t x = 0; x < n; ++x) mA.set(A.oracle().mul(ee, static_cast<elem_t>(x)));
    }
    RingIdeal ideal_mA(A.oracle(), mA.elements());
    require(kernel == ideal_mA, ErrorKind::internal,
            "kernel of the stalk projection is not the embedded maximal ideal");
    return PsiData{atom, std::move(st), std::move(hom), std::move(kernel), std::move(ideal_mA)};
}

// ---------------------------------------------------------------------------
// Pierce data of the algebra

/// Certificate bundle for the Pierce structure of a patch algebra. When the
/// ambient ring is indecomposable the idempotents of the algebra must be
/// exactly the embedded index algebra, the Pierce spectrum must biject with
/// the atom set, and every Pierce stalk must be isomorphic to the matching
/// fiber by two independent routes (the projection factorization and a
/// from-scratch isomorphism search). A decomposable ambient ring downgrades
/// the report to raw data with the hypothesis flag set.
struct PierceReport {
    bool ambient_indecomposable = false;
    std::size_t idempotent_count = 0;
    std::size_t embedded_count = 0;
    bool idempotents_are_embedded_algebra = false;
    bool spectrum_matches_atoms = false;
    std::vector<bool> stalk_iso_via_projection;
    std::vector<bool> stalk_iso_via_search;
    bool certified() const {
        if (!(ambient_indecomposable && idempotents_are_embedded_algebra &&
              spectrum_matches_atoms))
            return false;
        for (bool b : stalk_iso_via_projection)
            if (!b) return false;
        for (bool b : stalk_iso_via_search)
            if (!b) return false;
        return true;
    }
};

inline PierceReport pierce_report(const PatchAlgebra& A, std::size_t cap = kDefaultOpCap) {
    PierceReport rep;
    rep.ambient_indecomposable = is_indecomposable(A.ambient());
    std::vector<elem_t> idems = idempotents(A.oracle());
    rep.idempotent_count = idems.size();
    rep.embedded_count = A.algebra().size();
    {
        std::vector<elem_t> embedded;
        for (bmask_t e = 0; e < A.algebra().size(); ++e) embedded.push_back(A.embed(e));
        std::sort(embedded.begin(), embedded.end());
        rep.idempotents_are_embedded_algebra = embedded == idems;
    }
    // Pierce spectrum of the oracle vs the atoms of the index algebra
    IdempotentAlgebra ia = idempotent_algebra(A.oracle());
    rep.spectrum_matches_atoms =
        rep.idempotents_are_embedded_algebra && ia.alg.atoms() == A.atoms();

    auto maxi = maximal_ideals(A.algebra());
    for (const BoolIdeal& m : maxi) {
        PsiData pdata = psi(A, m);
        // route 1: first-isomorphism factorization through the quotient
        QuotientRing q = ring_quotient(A.oracle(), pdata.ideal_mA);
        std::vector<elem_t> induced(q.ring.n());
        for (std::size_t c = 0; c < q.ring.n(); ++c) induced[c] = pdata.hom.apply(q.rep_of[c]);
        bool proj_ok = false;
        try {
            RingHom factor(q.ring, pdata.stalk.ring, std::move(induced));
            proj_ok = factor.is_isomorphism();
        } catch (const Error&) {
            proj_ok = false;
        }
        rep.stalk_iso_via_projection.push_back(proj_ok);
        // route 2: isomorphism search, independent of the projection
        bool search_ok = false;
        if (q.ring.n() <= 64)
            search_ok = ring_isomorphic(q.ring, pdata.stalk.ring).has_value();
        rep.stalk_iso_via_search.push_back(search_ok);
        (void)cap;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Structure certificates

/// Ring-theoretic structure of the algebra, evaluated on the oracle and tied
/// back to the stalk space: Rickart/clean/Gelfand flags, the bijection
/// between minimal primes and the Pierce spectrum (idempotent trace one way,
/// generated ideal back), quotients modulo minimal primes and localizations
/// at maximal ideals isomorphic to the stalks, and the coincidence of the
/// maximal and minimal spectra.
struct StructureReport {
    Predicates preds;
    bool minimal_primes_biject_with_pierce = false;
    bool quotients_match_stalks = false;
    bool max_bijects_with_pierce = false;
    bool localizations_match_stalks = false;
    bool max_equals_min = false;
};

inline StructureReport structure_report(const PatchAlgebra& A, std::size_t cap = kDefaultOpCap) {
    const FiniteRing& R = A.oracle();
    check_cap(R, cap, "structure report");
    StructureReport rep;
    Spectra sp = spectra(R, cap);
    IdempotentAlgebra ia = idempotent_algebra(R);

    rep.preds.field = is_field(R);
    rep.preds.local = is_local(R);
    rep.preds.domain = is_domain(R);
    rep.preds.rickart = is_rickart(R);
    rep.preds.clean = is_clean(R);
    rep.preds.gelfand = gelfand_from(sp);
    rep.preds.arithmetical = arithmetical_from(R, sp, cap);
    rep.preds.indecomposable = is_indecomposable(R);
    {
        PierceData pd = pierce(R, cap);
        bool stalks_ok = true;
        for (const auto& q : pd.stalks)
            if (!(is_domain(q.ring) && is_arithmetical(q.ring, cap))) stalks_ok = false;
        rep.preds.semihereditary = rep.preds.rickart && stalks_ok;
    }

    // minimal primes <-> Pierce spectrum of the oracle
    auto pierce_max = maximal_ideals(ia.alg);
    std::vector<bool> hit(pierce_max.size(), false);
    bool biject = sp.minimal.size() == pierce_max.size();
    bool quotients_ok = true;
    for (const RingIdeal& p : sp.minimal) {
        // trace on the idempotents
        std::vector<bmask_t> trace;
        for (bmask_t e = 0; e < ia.alg.size(); ++e)
            if (p.contains(ia.elem_of_mask[e])) trace.push_back(e);
        BoolIdeal traced(ia.alg, std::move(trace));
        int which = -1;
        for (std::size_t i = 0; i < pierce_max.size(); ++i)
            if (pierce_max[i] == traced) which = static_cast<int>(i);
        if (which < 0 || hit[which]) {
            biject = false;
            continue;
        }
        hit[which] = true;
        // inverse: the ideal generated by the traced idempotents is p again
        std::vector<elem_t> gens;
        for (bmask_t e : traced.elements()) gens.push_back(ia.elem_of_mask[e]);
        if (!(ideal_generated_ring(R, gens) == p)) biject = false;
        // quotient modulo the minimal prime is a ring of the stalk space
        QuotientRing q = ring_quotient(R, p);
        bool matched = false;
        for (int i = 0; i < A.atoms() && !matched; ++i) {
            SubsetRing st = subring_as_ring(A.atom_section(i));
            if (q.ring.n() == st.ring.n() && q.ring.n() <= 64 &&
                ring_isomorphic(q.ring, st.ring).has_value())
                matched = true;
        }
        if (!matched) quotients_ok = false;
    }
    rep.minimal_primes_biject_with_pierce = biject;
    rep.quotients_match_stalks = quotients_ok;

    // maximal ideals <-> Pierce spectrum, with localizations matching stalks
    bool max_biject = sp.maximal.size() == pierce_max.size();
    bool localizations_ok = true;
    for (const RingIdeal& M : sp.maximal) {
        int count = 0, which = -1;
        for (std::size_t i = 0; i < pierce_max.size(); ++i) {
            // mA contained in M?
            bool contained = true;
            for (bmask_t e : pierce_max[i].elements())
                if (!M.contains(ia.elem_of_mask[e])) contained = false;
            if (contained) {
                ++count;
                which = static_cast<int>(i);
            }
        }
        if (count != 1) {
            max_biject = false;
            continue;
        }
        SubsetRing loc = localize_at_max_known(R, M, cap);
        bool matched = false;
        for (int i = 0; i < A.atoms() && !matched; ++i) {
            SubsetRing st = subring_as_ring(A.atom_section(i));
            if (loc.ring.n() == st.ring.n() && loc.ring.n() <= 64 &&
                ring_isomorphic(loc.ring, st.ring).has_value())
                matched = true;
        }
        if (!matched) localizations_ok = false;
        (void)which;
    }
    rep.max_bijects_with_pierce = max_biject;
    rep.localizations_match_stalks = localizations_ok;

    rep.max_equals_min = sp.maximal.size() == sp.minimal.size();
    if (rep.max_equals_min)
        for (std::size_t i = 0; i < sp.maximal.size(); ++i)
            if (!(sp.maximal[i] == sp.minimal[i])) rep.max_equals_min = false;

    return rep;
}

} // namespace patchalg
