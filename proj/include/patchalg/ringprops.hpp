#pragma once

// Idempotent machinery, spectra and the ring-theoretic predicates of finite
// commutative rings. Everything here is exhaustive by definition-chasing,
// guarded by an operation cap: instances past the cap raise cap_exceeded
// rather than silently sampling.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boolalg.hpp"
#include "ring.hpp"
#include "subring.hpp"
#include "util.hpp"

namespace patchalg {

/// Default bound on ring sizes for the exhaustive operations below.
constexpr std::size_t kDefaultOpCap = 4096;

inline void check_cap(const FiniteRing& R, std::size_t cap, const char* what) {
    require(R.n() <= cap, ErrorKind::cap_exceeded,
            std::string(what) + ": ring size " + std::to_string(R.n()) + " exceeds cap " +
                std::to_string(cap));
}

// ---------------------------------------------------------------------------
// Idempotents

inline std::vector<elem_t> idempotents(const FiniteRing& R) {
    std::vector<elem_t> out;
    for (std::size_t e = 0; e < R.n(); ++e)
        if (R.mul(static_cast<elem_t>(e), static_cast<elem_t>(e)) == e)
            out.push_back(static_cast<elem_t>(e));
    return out;
}

inline bool is_indecomposable(const FiniteRing& R) { return idempotents(R).size() == 2; }

/// The idempotents of R as a Boolean algebra in atom form, together with the
/// embedding back into R. Join is e + f - ef and meet is ef; atoms are the
/// minimal nonzero idempotents, and each idempotent is matched to the mask of
/// atoms below it. Boolean laws and the bijectivity of the matching are
/// verified on construction.
struct IdempotentAlgebra {
    BoolAlg alg;
    std::vector<elem_t> atom_elem;     ///< ring idempotent per algebra atom
    std::vector<elem_t> elem_of_mask;  ///< ring idempotent per mask
    std::map<elem_t, bmask_t> mask_of; ///< inverse of elem_of_mask
};

inline IdempotentAlgebra idempotent_algebra(const FiniteRing& R) {
    std::vector<elem_t> idems = idempotents(R);
    auto leq = [&](elem_t e, elem_t f) { return R.mul(e, f) == e; };
    std::vector<elem_t> atoms;
    for (elem_t e : idems) {
        if (e == R.zero()) continue;
        bool minimal = true;
        for (elem_t f : idems)
            if (f != R.zero() && f != e && leq(f, e)) minimal = false;
        if (minimal) atoms.push_back(e);
    }
    require(!atoms.empty(), ErrorKind::internal, "no atomic idempotents");
    IdempotentAlgebra ia{BoolAlg(static_cast<int>(atoms.size())), atoms, {}, {}};
    ia.elem_of_mask.resize(ia.alg.size());
    for (bmask_t m = 0; m < ia.alg.size(); ++m) {
        elem_t sum = R.zero();
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (m & (bmask_t(1) << i)) sum = R.add(sum, atoms[i]); // orthogonal: sum = join
        ia.elem_of_mask[m] = sum;
        require(ia.mask_of.emplace(sum, m).second, ErrorKind::internal,
                "atom sums collide; idempotents do not form a Boolean algebra");
    }
    require(ia.elem_of_mask.size() == idems.size(), ErrorKind::internal,
            "idempotent count is not a power of two");
    require(ia.elem_of_mask[ia.alg.top()] == R.one(), ErrorKind::internal,
            "atoms do not join to 1");
    // verify the Boolean laws against the ring formulas
    auto join = [&](elem_t e, elem_t f) { return R.sub(R.add(e, f), R.mul(e, f)); };
    for (bmask_t a = 0; a < ia.alg.size(); ++a)
        for (bmask_t b = 0; b < ia.alg.size(); ++b) {
            require(join(ia.elem_of_mask[a], ia.elem_of_mask[b]) == ia.elem_of_mask[a | b],
                    ErrorKind::internal, "idempotent join law fails");
            require(R.mul(ia.elem_of_mask[a], ia.elem_of_mask[b]) == ia.elem_of_mask[a & b],
                    ErrorKind::internal, "idempotent meet law fails");
        }
    return ia;
}

// ---------------------------------------------------------------------------
// Annihilators

inline RingIdeal annihilator(const FiniteRing& R, elem_t a) {
    std::vector<elem_t> elems;
    for (std::size_t r = 0; r < R.n(); ++r)
        if (R.mul(static_cast<elem_t>(r), a) == R.zero()) elems.push_back(static_cast<elem_t>(r));
    return RingIdeal(R, std::move(elems));
}

// ---------------------------------------------------------------------------
// Ideal enumeration and spectra

/// All ideals, as element sets: breadth-first closure of the distinct
/// principal ideals under ideal sum. Exact; capped on ring size and on the
/// number of ideals discovered.
inline std::vector<ElemSet> enumerate_ideal_sets(const FiniteRing& R,
                                                 std::size_t cap = kDefaultOpCap) {
    check_cap(R, cap, "ideal enumeration");
    std::map<std::vector<std::uint64_t>, ElemSet> seen;
    std::vector<ElemSet> principals;
    for (std::size_t a = 0; a < R.n(); ++a) {
        ElemSet p = principal_ideal_set(R, static_cast<elem_t>(a));
        if (seen.emplace(p.words(), p).second) principals.push_back(p);
    }
    std::vector<ElemSet> work(principals);
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (work[i].count() == R.n()) continue; // already the whole ring
        for (const ElemSet& p : principals) {
            if (p.subset_of(work[i])) continue;
            ElemSet sum(R.n());
            for (std::size_t x = 0; x < R.n(); ++x) {
                if (!work[i].test(x)) continue;
                for (std::size_t y = 0; y < R.n(); ++y)
                    if (p.test(y)) sum.set(R.add(static_cast<elem_t>(x), static_cast<elem_t>(y)));
            }
            if (seen.emplace(sum.words(), sum).second) work.push_back(sum);
        }
        require(work.size() <= 65536, ErrorKind::cap_exceeded, "too many ideals to enumerate");
    }
    std::vector<ElemSet> out;
    for (auto& [key, s] : seen) out.push_back(s);
    std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
        auto ea = a.elements(), eb = b.elements();
        return ea.size() != eb.size() ? ea.size() < eb.size() : ea < eb;
    });
    return out;
}

inline bool ideal_set_is_prime(const FiniteRing& R, const ElemSet& I) {
    if (I.test(R.one())) return false;
    for (std::size_t a = 0; a < R.n(); ++a) {
        if (I.test(a)) continue;
        for (std::size_t b = a; b < R.n(); ++b) {
            if (I.test(b)) continue;
            if (I.test(R.mul(static_cast<elem_t>(a), static_cast<elem_t>(b)))) return false;
        }
    }
    return true;
}

/// Prime, maximal and minimal spectra. The three are computed by separate
/// filters (primality; inclusion-maximality among proper ideals;
/// inclusion-minimality among primes) and, for a finite commutative ring,
/// come out equal as sets; the agreement is asserted rather than assumed.
struct Spectra {
    std::vector<RingIdeal> primes;
    std::vector<RingIdeal> maximal;
    std::vector<RingIdeal> minimal;
};

inline Spectra spectra(const FiniteRing& R, std::size_t cap = kDefaultOpCap) {
    auto ideal_sets = enumerate_ideal_sets(R, cap);
    std::vector<ElemSet> primes, proper;
    for (const auto& I : ideal_sets) {
        if (!I.test(R.one())) proper.push_back(I);
        if (ideal_set_is_prime(R, I)) primes.push_back(I);
    }
    Spectra sp;
    for (const auto& I : primes) sp.primes.emplace_back(R, I.elements());
    for (const auto& I : proper) {
        bool maximal = true;
        for (const auto& J : proper)
            if (I != J && I.subset_of(J)) maximal = false;
        if (maximal) sp.maximal.emplace_back(R, I.elements());
    }
    for (const auto& I : primes) {
        bool minimal = true;
        for (const auto& J : primes)
            if (I != J && J.subset_of(I)) minimal = false;
        if (minimal) sp.minimal.emplace_back(R, I.elements());
    }
    // finite collapse: every prime is both maximal and minimal
    require(sp.primes == sp.maximal && sp.primes == sp.minimal, ErrorKind::internal,
            "finite ring spectra did not collapse to a single antichain");
    return sp;
}

// ---------------------------------------------------------------------------
// Pierce spectrum and stalks

/// Pierce spectrum Max(Id(R)) with its stalks R/mR. Each stalk is certified
/// indecomposable, and R is certified to embed into the product of stalks.
struct PierceData {
    IdempotentAlgebra id_alg;
    std::vector<BoolIdeal> spectrum;      ///< maximal ideals of Id(R), atom order
    std::vector<QuotientRing> stalks;     ///< R / mR per spectrum point
    std::vector<RingIdeal> stalk_kernels; ///< mR per spectrum point
};

inline PierceData pierce(const FiniteRing& R, std::size_t cap = kDefaultOpCap) {
    check_cap(R, cap, "Pierce spectrum");
    IdempotentAlgebra ia = idempotent_algebra(R);
    PierceData pd{ia, maximal_ideals(ia.alg), {}, {}};
    for (const BoolIdeal& m : pd.spectrum) {
        std::vector<elem_t> gens;
        for (bmask_t e : m.elements()) gens.push_back(pd.id_alg.elem_of_mask[e]);
        RingIdeal mR = ideal_generated_ring(R, gens);
        QuotientRing q = ring_quotient(R, mR);
        require(is_indecomposable(q.ring), ErrorKind::internal, "Pierce stalk is decomposable");
        pd.stalk_kernels.push_back(std::move(mR));
        pd.stalks.push_back(std::move(q));
    }
    // R embeds in the product of its stalks: the coordinate vectors are
    // pairwise distinct.
    {
        std::map<std::vector<elem_t>, elem_t> seen;
        for (std::size_t a = 0; a < R.n(); ++a) {
            std::vector<elem_t> coords;
            for (const auto& q : pd.stalks) coords.push_back(q.coset_of[a]);
            require(seen.emplace(std::move(coords), static_cast<elem_t>(a)).second,
                    ErrorKind::internal, "ring does not embed into product of stalks");
        }
    }
    return pd;
}

/// Support of an element: the Pierce spectrum points m with a not in mR.
inline std::vector<bool> support(const FiniteRing& R, const PierceData& pd, elem_t a) {
    std::vector<bool> out;
    for (const auto& k : pd.stalk_kernels) out.push_back(!k.contains(a));
    return out;
}

// ---------------------------------------------------------------------------
// Predicates

inline bool is_field(const FiniteRing& R) {
    for (std::size_t a = 0; a < R.n(); ++a)
        if (a != R.zero() && !R.is_unit(static_cast<elem_t>(a))) return false;
    return true;
}

inline bool is_domain(const FiniteRing& R) {
    for (std::size_t a = 0; a < R.n(); ++a) {
        if (a == R.zero()) continue;
        for (std::size_t b = a; b < R.n(); ++b) {
            if (b == R.zero()) continue;
            if (R.mul(static_cast<elem_t>(a), static_cast<elem_t>(b)) == R.zero()) return false;
        }
    }
    return true;
}

/// Local: the non-units form an ideal; for a finite commutative ring it is
/// enough that they are closed under addition.
inline bool is_local(const FiniteRing& R) {
    for (std::size_t a = 0; a < R.n(); ++a) {
        if (R.is_unit(static_cast<elem_t>(a))) continue;
        for (std::size_t b = a; b < R.n(); ++b) {
            if (R.is_unit(static_cast<elem_t>(b))) continue;
            if (R.is_unit(R.add(static_cast<elem_t>(a), static_cast<elem_t>(b)))) return false;
        }
    }
    return true;
}

/// Clean: every element is an idempotent plus a unit.
inline bool is_clean(const FiniteRing& R) {
    auto idems = idempotents(R);
    for (std::size_t a = 0; a < R.n(); ++a) {
        bool ok = false;
        for (elem_t e : idems)
            if (R.is_unit(R.sub(static_cast<elem_t>(a), e))) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

/// Rickart: every annihilator is generated by an idempotent.
inline bool is_rickart(const FiniteRing& R) {
    auto idems = idempotents(R);
    std::vector<ElemSet> idem_ideals;
    for (elem_t e : idems) idem_ideals.push_back(principal_ideal_set(R, e));
    for (std::size_t a = 0; a < R.n(); ++a) {
        ElemSet ann(R.n());
        for (std::size_t r = 0; r < R.n(); ++r)
            if (R.mul(static_cast<elem_t>(r), static_cast<elem_t>(a)) == R.zero()) ann.set(r);
        bool ok = false;
        for (const auto& eI : idem_ideals)
            if (ann == eI) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

/// Gelfand: every prime ideal lies in exactly one maximal ideal.
inline bool is_gelfand(const FiniteRing& R, std::size_t cap = kDefaultOpCap) {
    Spectra sp = spectra(R, cap);
    for (const auto& p : sp.primes) {
        int count = 0;
        for (const auto& m : sp.maximal)
            if (p.members().subset_of(m.members())) ++count;
        if (count != 1) return false;
    }
    return true;
}

/// Localization at a maximal ideal, through the splitting of R into its
/// idempotent factors: the factor eR for the unique atomic idempotent e
/// outside M. Certified against the kernel of the localization map, computed
/// by brute force as { r : sr = 0 for some s outside M }.
/// The _known variant trusts the caller that M is maximal (it still certifies
/// everything downstream); the public form re-derives the maximal spectrum.
inline SubsetRing localize_at_max_known(const FiniteRing& R, const RingIdeal& M,
                                        std::size_t cap = kDefaultOpCap) {
    check_cap(R, cap, "localization");
    require(M.is_proper(), ErrorKind::structural, "localization needs a maximal ideal");
    IdempotentAlgebra ia = idempotent_algebra(R);
    int atom = -1;
    for (std::size_t i = 0; i < ia.atom_elem.size(); ++i)
        if (!M.contains(ia.atom_elem[i])) {
            require(atom < 0, ErrorKind::internal, "two atomic idempotents outside maximal ideal");
            atom = static_cast<int>(i);
        }
    require(atom >= 0, ErrorKind::internal, "all atomic idempotents inside maximal ideal");
    elem_t e = ia.atom_elem[atom];

    // kernel route: K = { r : sr = 0 for some s outside M } must be ann(e)
    ElemSet kernel(R.n());
    for (std::size_t r = 0; r < R.n(); ++r) {
        for (std::size_t s = 0; s < R.n(); ++s) {
            if (M.contains(static_cast<elem_t>(s))) continue;
            if (R.mul(static_cast<elem_t>(s), static_cast<elem_t>(r)) == R.zero()) {
                kernel.set(r);
                break;
            }
        }
    }
    require(kernel == annihilator(R, e).members(), ErrorKind::internal,
            "localization kernel disagrees with idempotent splitting");

    std::vector<elem_t> factor;
    for (std::size_t r = 0; r < R.n(); ++r) factor.push_back(R.mul(e, static_cast<elem_t>(r)));
    SubsetRing loc = ring_from_subset(R, factor, e, R.name() + " localized");
    require(is_local(loc.ring), ErrorKind::internal, "localization at maximal ideal not local");
    return loc;
}

inline SubsetRing localize_at_max(const FiniteRing& R, const RingIdeal& M,
                                  std::size_t cap = kDefaultOpCap) {
    bool found = false;
    for (const auto& m : spectra(R, cap).maximal)
        if (m == M) found = true;
    require(found, ErrorKind::structural, "ideal is not maximal");
    return localize_at_max_known(R, M, cap);
}

/// The full predicate bundle. Semihereditary is decided only through the
/// stalk criterion (Rickart with arithmetical-domain Pierce stalks); finite
/// domains are fields, so at this scale the stalk test reduces to a field
/// test, which the suite documents rather than hides.
struct Predicates {
    bool field = false;
    bool local = false;
    bool domain = false;
    bool rickart = false;
    bool clean = false;
    bool gelfand = false;
    bool arithmetical = false;
    bool semihereditary = false;
    bool indecomposable = false;
};

inline bool gelfand_from(const Spectra& sp) {
    for (const auto& p : sp.primes) {
        int count = 0;
        for (const auto& m : sp.maximal)
            if (p.members().subset_of(m.members())) ++count;
        if (count != 1) return false;
    }
    return true;
}

/// Arithmetical: the ideals of every localization at a maximal ideal form a
/// chain.
inline bool arithmetical_from(const FiniteRing& R, const Spectra& sp,
                              std::size_t cap = kDefaultOpCap) {
    for (const auto& M : sp.maximal) {
        SubsetRing loc = localize_at_max_known(R, M, cap);
        auto ideals = enumerate_ideal_sets(loc.ring, cap);
        for (const auto& I : ideals)
            for (const auto& J : ideals)
                if (!I.subset_of(J) && !J.subset_of(I)) return false;
    }
    return true;
}

inline bool is_arithmetical(const FiniteRing& R, std::size_t cap = kDefaultOpCap) {
    return arithmetical_from(R, spectra(R, cap), cap);
}

inline Predicates predicates(const FiniteRing& R, std::size_t cap = kDefaultOpCap) {
    check_cap(R, cap, "predicates");
    Spectra sp = spectra(R, cap);
    Predicates p;
    p.field = is_field(R);
    p.local = is_local(R);
    p.domain = is_domain(R);
    p.rickart = is_rickart(R);
    p.clean = is_clean(R);
    p.gelfand = gelfand_from(sp);
    p.arithmetical = arithmetical_from(R, sp, cap);
    p.indecomposable = is_indecomposable(R);
    PierceData pd = pierce(R, cap);
    bool stalks_ok = true;
    for (const auto& q : pd.stalks)
        if (!(is_domain(q.ring) && is_arithmetical(q.ring, cap))) stalks_ok = false;
    p.semihereditary = p.rickart && stalks_ok;
    return p;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace detail {

struct ElemInvariant {
    std::uint32_t additive_order;
    std::uint32_t mult_order; // 0 when not a unit
    bool idempotent;
    std::uint32_t nilpotency; // 0 when not nilpotent
    bool operator==(const ElemInvariant& o) const {
        return additive_order == o.additive_order && mult_order == o.mult_order &&
               idempotent == o.idempotent && nilpotency == o.nilpotency;
    }
    bool operator<(const ElemInvariant& o) const {
        return std::tie(additive_order, mult_order, idempotent, nilpotency) <
               std::tie(o.additive_order, o.mult_order, o.idempotent, o.nilpotency);
    }
};

inline ElemInvariant elem_invariant(const FiniteRing& R, elem_t a) {
    ElemInvariant inv{1, 0, false, 0};
    for (elem_t x = a; x != R.zero(); x = R.add(x, a)) ++inv.additive_order;
    if (a == R.zero()) inv.additive_order = 1;
    if (R.is_unit(a)) {
        inv.mult_order = 1;
        for (elem_t x = a; x != R.one(); x = R.mul(x, a)) ++inv.mult_order;
    }
    inv.idempotent = R.mul(a, a) == a;
    elem_t x = a;
    for (std::uint32_t i = 1; i <= R.n(); ++i) {
        if (x == R.zero()) {
            inv.nilpotency = i;
            break;
        }
        x = R.mul(x, a);
    }
    return inv;
}

} // namespace detail

/// Backtracking isomorphism search. Returns a verified isomorphism or an
/// empty optional as a definitive negative. Prunes on global profiles first
/// (size, characteristic, unit and idempotent counts, per-element invariant
/// multisets), then maps a small generating set with invariant-respecting
/// images, extending each candidate by closure.
inline std::optional<RingHom> ring_isomorphic(const FiniteRing& R1, const FiniteRing& R2,
                                              std::size_t cap = 64) {
    require(R1.n() <= cap && R2.n() <= cap, ErrorKind::cap_exceeded,
            "isomorphism search capped at " + std::to_string(cap) + " elements");
    if (R1.n() != R2.n() || R1.characteristic() != R2.characteristic()) return std::nullopt;

    std::vector<detail::ElemInvariant> inv1, inv2;
    for (std::size_t a = 0; a < R1.n(); ++a)
        inv1.push_back(detail::elem_invariant(R1, static_cast<elem_t>(a)));
    for (std::size_t a = 0; a < R2.n(); ++a)
        inv2.push_back(detail::elem_invariant(R2, static_cast<elem_t>(a)));
    {
        auto s1 = inv1;
        auto s2 = inv2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (!(s1 == s2)) return std::nullopt;
    }

    // generating set of R1 by greedy closure growth
    std::vector<elem_t> gens;
    Subring closed = subring_closure(R1, {});
    while (closed.size() < R1.n()) {
        elem_t pick = 0;
        std::size_t best = closed.size();
        for (std::size_t a = 0; a < R1.n(); ++a) {
            if (closed.contains(static_cast<elem_t>(a))) continue;
            std::vector<elem_t> seed = gens;
            seed.push_back(static_cast<elem_t>(a));
            std::size_t grown = subring_closure(R1, seed).size();
            if (grown > best) {
                best = grown;
                pick = static_cast<elem_t>(a);
            }
        }
        gens.push_back(pick);
        closed = subring_closure(R1, gens);
    }

    std::size_t n = R1.n();
    std::vector<elem_t> image(n, SubsetRing::npos);
    std::vector<bool> used(n, false);

    // seed with 0, 1 and close
    struct Frame {
        std::vector<elem_t> image;
        std::vector<bool> used;
    };

    // Propagate: close the currently mapped set under + and *; detect clashes.
    auto propagate = [&](std::vector<elem_t>& img, std::vector<bool>& usd) -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t a = 0; a < n; ++a) {
                if (img[a] == SubsetRing::npos) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    if (img[b] == SubsetRing::npos) continue;
                    struct Pair {
                        elem_t src, dst;
                    } ops[2] = {
                        {R1.add(static_cast<elem_t>(a), static_cast<elem_t>(b)),
                         R2.add(img[a], img[b])},
                        {R1.mul(static_cast<elem_t>(a), static_cast<elem_t>(b)),
                         R2.mul(img[a], img[b])},
                    };
                    for (auto [src, dst] : ops) {
                        if (img[src] == SubsetRing::npos) {
                            if (usd[dst]) return false;
                            img[src] = dst;
                            usd[dst] = true;
                            changed = true;
                        } else if (img[src] != dst) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    };

    std::vector<elem_t> base_img(n, SubsetRing::npos);
    std::vector<bool> base_used(n, false);
    base_img[R1.zero()] = R2.zero();
    base_used[R2.zero()] = true;
    if (R1.one() != R1.zero()) {
        base_img[R1.one()] = R2.one();
        base_used[R2.one()] = true;
    }
    if (!propagate(base_img, base_used)) return std::nullopt;

    std::optional<RingHom> found;
    auto search = [&](auto&& self, std::vector<elem_t> img, std::vector<bool> usd,
                      std::size_t gi) -> bool {
        if (gi == gens.size()) {
            for (std::size_t a = 0; a < n; ++a)
                if (img[a] == SubsetRing::npos) return false;
            RingHom h(R1, R2, img);
            if (h.is_isomorphism()) {
                found = std::move(h);
                return true;
            }
            return false;
        }
        elem_t g = gens[gi];
        if (img[g] != SubsetRing::npos) return self(self, std::move(img), std::move(usd), gi + 1);
        for (std::size_t c = 0; c < n; ++c) {
            if (usd[c] || !(inv1[g] == inv2[c])) continue;
            auto img2 = img;
            auto usd2 = usd;
            img2[g] = static_cast<elem_t>(c);
            usd2[c] = true;
            if (!propagate(img2, usd2)) continue;
            if (self(self, std::move(img2), std::move(usd2), gi + 1)) return true;
        }
        return false;
    };
    search(search, base_img, base_used, 0);
    return found;
}

// ---------------------------------------------------------------------------
// Specker construction

/// R[B] realized as the ring of functions atoms(B) -> R with pointwise
/// operations, together with the embedding of B as indicator idempotents.
/// Faithfulness (te = 0 only for t = 0 or e = 0) and spanning (every element
/// is an R-combination of the embedded idempotents) are verified.
struct SpeckerAlgebra {
    FiniteRing ring;
    BoolAlg alg;
    FiniteRing base;
    std::vector<elem_t> embed; ///< ring element per mask of B
    // index layout: mixed radix, coordinate of atom i = (idx / base^i) % |R|
    std::vector<elem_t> coord_table; ///< n * atoms: coordinate per element
};

inline elem_t specker_coord(const SpeckerAlgebra& sp, elem_t x, int atom) {
    return sp.coord_table[static_cast<std::size_t>(x) * sp.alg.atoms() + atom];
}

inline SpeckerAlgebra specker(const FiniteRing& R, const BoolAlg& B,
                              std::size_t cap = kDefaultOpCap) {
    require(!B.is_degenerate(), ErrorKind::structural, "Specker construction needs atoms");
    std::size_t n = 1;
    for (int i = 0; i < B.atoms(); ++i) {
        n *= R.n();
        require(n <= cap, ErrorKind::cap_exceeded, "Specker algebra exceeds cap");
    }
    int k = B.atoms();
    auto coord = [&](std::size_t idx, int i) {
        for (int j = 0; j < i; ++j) idx /= R.n();
        return static_cast<elem_t>(idx % R.n());
    };
    FiniteRing::Data d;
    d.n = n;
    d.add.resize(n * n);
    d.mul.resize(n * n);
    d.labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::string lab = "(";
        for (int i = 0; i < k; ++i) {
            if (i) lab += ",";
            lab += R.label(coord(a, i));
        }
        d.labels[a] = lab + ")";
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t s = 0, p = 0, mult = 1;
            for (int i = 0; i < k; ++i) {
                s += static_cast<std::size_t>(R.add(coord(a, i), coord(b, i))) * mult;
                p += static_cast<std::size_t>(R.mul(coord(a, i), coord(b, i))) * mult;
                mult *= R.n();
            }
            d.add[a * n + b] = static_cast<elem_t>(s);
            d.mul[a * n + b] = static_cast<elem_t>(p);
        }
    }
    std::size_t one = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
        one += static_cast<std::size_t>(R.one()) * mult;
        mult *= R.n();
    }
    d.zero = 0;
    d.one = static_cast<elem_t>(one);
    d.name = R.name() + "[" + std::to_string(k) + " atoms]";
    SpeckerAlgebra sp{FiniteRing::from_data(std::move(d)), B, R, {}, {}};
    sp.embed.resize(B.size());
    for (bmask_t e = 0; e < B.size(); ++e) {
        std::size_t idx = 0;
        std::size_t m = 1;
        for (int i = 0; i < k; ++i) {
            if (e & B.atom(i)) idx += static_cast<std::size_t>(R.one()) * m;
            m *= R.n();
        }
        sp.embed[e] = static_cast<elem_t>(idx);
    }
    sp.coord_table.resize(n * k);
    for (std::size_t a = 0; a < n; ++a)
        for (int i = 0; i < k; ++i) sp.coord_table[a * k + i] = coord(a, i);

    // faithfulness: t * embed(e) = 0 iff t = 0 or e = 0
    for (std::size_t t = 0; t < R.n(); ++t)
        for (bmask_t e = 0; e < B.size(); ++e) {
            // t * alpha(e): coordinate t on atoms of e
            std::size_t idx = 0, m = 1;
            for (int i = 0; i < k; ++i) {
                if (e & B.atom(i)) idx += static_cast<std::size_t>(t) * m;
                m *= R.n();
            }
            bool zero = idx == 0;
            require(zero == (t == R.zero() || e == 0), ErrorKind::internal,
                    "embedded idempotents are not faithful");
        }
    // spanning: every element equals the sum of coefficient * atom indicator
    for (std::size_t a = 0; a < n; ++a) {
        elem_t acc = sp.ring.zero();
        for (int i = 0; i < k; ++i) {
            elem_t t = coord(a, i);
            // scalar t on atom i
            std::size_t idx = 0, m = 1;
            for (int j = 0; j < k; ++j) {
                if (j == i) idx += static_cast<std::size_t>(t) * m;
                m *= R.n();
            }
            acc = sp.ring.add(acc, static_cast<elem_t>(idx));
        }
        require(acc == a, ErrorKind::internal, "element not spanned by embedded idempotents");
    }
    return sp;
}

} // namespace patchalg
