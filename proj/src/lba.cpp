#include "locba/lba.hpp"

#include <algorithm>

namespace locba {

namespace {

// Elements of the ideal in canonical order; position = pseudolattice index
// under Pseudolat::from_ideal (which sorts by code).
std::vector<EIdx> ideal_members_in_order(const BoolAlg& A, const Subset& I) {
    std::vector<EIdx> mem = subset_members(I);
    std::sort(mem.begin(), mem.end(),
              [&](EIdx x, EIdx y) { return A.code(x) < A.code(y); });
    return mem;
}

}  // namespace

PairClassification classify_pair(const BoolAlg& A, const Subset& I) {
    if (I.size() != A.size()) throw Error::validation("ideal subset size mismatch");
    PairClassification r;

    // ideal laws with a first-failure witness
    r.ideal_ok = true;
    if (!I[A.zero()]) {
        r.ideal_ok = false;
        r.ideal_witness = {A.zero(), A.zero()};
        r.note = "bounded set misses 0";
    }
    for (EIdx a = 0; a < A.size() && r.ideal_ok; ++a) {
        if (!I[a]) continue;
        for (EIdx b = 0; b < A.size(); ++b) {
            if (A.leq(b, a) && !I[b]) {
                r.ideal_ok = false;
                r.ideal_witness = {a, b};
                r.note = "bounded set not downward closed at " + A.elem_name(b) +
                         " <= " + A.elem_name(a);
                break;
            }
            if (I[b] && !I[A.join(a, b)]) {
                r.ideal_ok = false;
                r.ideal_witness = {a, b};
                r.note = "bounded set not closed under join of " + A.elem_name(a) +
                         " and " + A.elem_name(b);
                break;
            }
        }
    }

    DensityReport d = dense_subset_check(A, I);
    r.dense_ok = d.dense;
    if (!d.dense) {
        r.density_witness = d.witness;
        if (r.note.empty())
            r.note = "bounded set not dense: no nonzero minorant below " +
                     A.elem_name(d.witness);
    }
    r.local = r.ideal_ok && r.dense_ok;

    r.proper = subset_count(I) != A.size();
    if (r.ideal_ok && r.proper) {
        r.prime = true;
        for (EIdx a = 0; a < A.size() && r.prime; ++a) {
            if (I[a]) continue;
            for (EIdx b = 0; b < A.size(); ++b) {
                if (I[b]) continue;
                if (I[A.meet(a, b)]) {
                    r.prime = false;
                    r.prime_witness = {a, b};
                    break;
                }
            }
        }
    }
    r.prime_local = r.local && (!r.proper || r.prime);

    if (r.local) {
        // joins of simple ideals of I, searched as least upper bounds in A
        r.join_complete = true;
        Pseudolat P = Pseudolat::from_ideal(A, I);
        std::vector<EIdx> mem = ideal_members_in_order(A, I);
        for (IdxMask jm : simple_ideals(P)) {
            std::vector<EIdx> ub;
            for (EIdx u = 0; u < A.size(); ++u) {
                bool all = true;
                for (std::size_t i = 0; i < mem.size() && all; ++i)
                    if (jm & (IdxMask{1} << i)) all = A.leq(mem[i], u);
                if (all) ub.push_back(u);
            }
            EIdx low = A.meet_all(ub);
            if (std::find(ub.begin(), ub.end(), low) == ub.end()) {
                r.join_complete = false;
                r.join_witness = jm;
                break;
            }
        }

        // interpolation in the overlap triple of the pair: well-inside means
        // disjoint-from-complement, so it collapses to <=; the literal
        // quantifier scan is kept so the flag reports the real condition
        r.interpolating = true;
        for (EIdx a = 0; a < A.size() && r.interpolating; ++a) {
            if (!I[a]) continue;
            for (EIdx b = 0; b < A.size() && r.interpolating; ++b) {
                if (!I[b]) continue;
                if (A.meet(a, A.complement(b)) != A.zero()) continue;  // a not well inside b
                bool found = false;
                for (EIdx c = 0; c < A.size() && !found; ++c) {
                    if (!I[c]) continue;
                    if (A.meet(c, A.complement(c)) != A.zero()) continue;
                    if (A.leq(a, c) && A.leq(c, b)) found = true;
                }
                r.interpolating = found;
            }
        }
    }
    return r;
}

PrimeDenseReport prime_dense_criterion(const BoolAlg& A, const Subset& I) {
    PairClassification c = classify_pair(A, I);
    if (!c.ideal_ok) throw Error::validation("not an ideal: " + c.note);
    PrimeDenseReport r;
    if (!c.proper) {
        // I = A: principal at the top yet trivially dense; the criterion
        // concerns proper primes only
        r.degenerate = true;
        r.dense = true;
        r.non_principal = false;
        r.equivalent = false;
        r.generator = A.one();
        return r;
    }
    if (!c.prime) throw Error::validation("ideal must be prime for this criterion");
    r.dense = c.dense_ok;
    if (!r.dense) r.density_witness = c.density_witness;
    std::optional<EIdx> g = principal_generator(A, I);
    r.non_principal = !g.has_value();
    r.generator = g;
    r.equivalent = (r.dense == r.non_principal);
    if (!r.equivalent)
        throw Error::validation("internal: dense/non-principal split on a prime ideal");
    return r;
}

MorphismReport check_morphism(const LocalPair& src, const LocalPair& dst,
                              const BoolHom& phi) {
    if (!(phi.src == src.algebra) || !(phi.dst == dst.algebra))
        throw Error::validation("morphism endpoints do not match the given pairs");
    MorphismReport r;
    r.hom_ok = hom_check(phi).ok;
    const BoolAlg& B = dst.algebra;

    r.bounded_cover = true;
    for (EIdx b = 0; b < B.size(); ++b) {
        if (!dst.bounded[b]) continue;
        bool covered = false;
        for (EIdx a = 0; a < src.algebra.size() && !covered; ++a)
            if (src.bounded[a] && B.leq(b, phi(a))) covered = true;
        if (!covered) {
            r.bounded_cover = false;
            r.cover_witness = b;
            break;
        }
    }

    r.bounded_image = true;
    for (EIdx a = 0; a < src.algebra.size(); ++a) {
        if (!src.bounded[a]) continue;
        if (!dst.bounded[phi(a)]) {
            r.bounded_image = false;
            r.image_witness = a;
            break;
        }
    }
    return r;
}

std::vector<BoolHom> all_homs(const BoolAlg& src, const BoolAlg& dst,
                              std::size_t cap) {
    const unsigned k = src.atom_count();
    std::size_t total = 1;
    for (unsigned i = 0; i < k; ++i) {
        total *= dst.size();
        if (total > cap)
            throw Error::scope("homomorphism enumeration cap exceeded");
    }
    std::vector<BoolHom> out;
    std::vector<EIdx> pattern(k, 0);
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t rest = t;
        for (unsigned i = 0; i < k; ++i) {
            pattern[i] = static_cast<EIdx>(rest % dst.size());
            rest /= dst.size();
        }
        BoolHom h = hom_from_atom_images(src, dst, pattern);
        if (hom_check(h).ok) out.push_back(std::move(h));
    }
    return out;
}

ExtensionReport extend_poset_iso(const LocalPair& src, const LocalPair& dst,
                                 const std::vector<std::optional<EIdx>>& psi) {
    const BoolAlg& B = src.algebra;
    const BoolAlg& A = dst.algebra;
    PairClassification cs = classify_pair(src);
    if (!cs.prime_local)
        throw Error::validation("source must be a prime local pair: " +
                                (cs.note.empty() ? std::string("ideal not prime") : cs.note));
    PairClassification cd = classify_pair(dst);
    if (!cd.local)
        throw Error::validation("target must be a local pair: " + cd.note);
    if (psi.size() != B.size())
        throw Error::validation("psi must assign every source element slot");

    // psi: defined exactly on the source ideal, an order isomorphism onto
    // the target ideal
    std::vector<EIdx> jm = subset_members(src.bounded);
    std::vector<bool> hit(A.size(), false);
    for (EIdx b = 0; b < B.size(); ++b) {
        if (src.bounded[b] != psi[b].has_value())
            throw Error::validation("psi must be defined exactly on the source ideal");
        if (!psi[b]) continue;
        EIdx img = *psi[b];
        if (img >= A.size() || !dst.bounded[img])
            throw Error::validation("psi image escapes the target ideal");
        if (hit[img]) throw Error::validation("psi is not injective");
        hit[img] = true;
    }
    for (EIdx a = 0; a < A.size(); ++a)
        if (dst.bounded[a] && !hit[a])
            throw Error::validation("psi is not onto the target ideal");
    for (EIdx x : jm)
        for (EIdx y : jm)
            if (B.leq(x, y) != A.leq(*psi[x], *psi[y]))
                throw Error::validation("psi does not preserve and reflect order");

    // extension: on the ideal use psi; elsewhere the complement lies in the
    // ideal (primeness), so extend by φ(b) = psi(b*)*
    std::vector<EIdx> map(B.size());
    for (EIdx b = 0; b < B.size(); ++b) {
        if (src.bounded[b]) {
            map[b] = *psi[b];
        } else {
            EIdx bc = B.complement(b);
            if (!src.bounded[bc])
                throw Error::validation("internal: complement escapes a prime ideal");
            map[b] = A.complement(*psi[bc]);
        }
    }
    BoolHom phi{B, A, map};
    HomReport hr = hom_check(phi);
    if (!hr.ok)
        throw Error::validation("extension is not a homomorphism: " + hr.violated_law);

    ExtensionReport out{std::move(phi), hr.injective, false, false, false, false};

    // image must be the bounded hull I ∪ I*
    Subset hull(A.size(), false);
    for (EIdx a = 0; a < A.size(); ++a)
        if (dst.bounded[a]) {
            hull[a] = true;
            hull[A.complement(a)] = true;
        }
    Subset image(A.size(), false);
    for (EIdx b = 0; b < B.size(); ++b) image[out.embedding(b)] = true;
    out.image_is_bounded_hull = (image == hull);

    // uniqueness among all homomorphisms agreeing with psi on the ideal
    std::size_t total = 1;
    bool fits = true;
    for (unsigned i = 0; i < B.atom_count() && fits; ++i) {
        total *= A.size();
        if (total > (1u << 20)) fits = false;
    }
    if (fits) {
        std::size_t count = 0;
        for (const BoolHom& h : all_homs(B, A)) {
            bool agrees = true;
            for (EIdx b = 0; b < B.size() && agrees; ++b)
                if (src.bounded[b] && h(b) != *psi[b]) agrees = false;
            if (agrees) ++count;
        }
        out.uniqueness_checked = true;
        out.unique = (count == 1);
    }

    if (cd.prime_local && hr.injective && hr.surjective) {
        bool ideal_onto = true;
        for (EIdx b = 0; b < B.size() && ideal_onto; ++b)
            if (src.bounded[b] && !dst.bounded[out.embedding(b)]) ideal_onto = false;
        out.pair_iso = ideal_onto;
    }
    return out;
}

// --- functors -------------------------------------------------------------

LocalPair functor_ez(const LocalPair& p) {
    PairClassification c = classify_pair(p);
    if (!c.local || !c.join_complete)
        throw Error::validation("input must be a join-complete local pair" +
                                (c.note.empty() ? std::string() : ": " + c.note));
    const BoolAlg& B = p.algebra;
    Subset hull(B.size(), false);
    for (EIdx a = 0; a < B.size(); ++a)
        if (p.bounded[a]) {
            hull[a] = true;
            hull[B.complement(a)] = true;
        }
    if (subset_count(hull) == B.size()) return p;  // hull is everything: same pair
    std::vector<EIdx> back;
    BoolAlg sub = subalgebra_as_algebra(B, subset_members(hull), &back);
    Subset ideal(sub.size(), false);
    for (std::size_t i = 0; i < back.size(); ++i)
        if (p.bounded[back[i]]) ideal[i] = true;
    LocalPair out{std::move(sub), std::move(ideal)};
    if (!classify_pair(out).prime_local)
        throw Error::validation("internal: bounded hull failed to be prime local");
    return out;
}

LocalPair functor_ep(const LocalPair& p) {
    PairClassification c = classify_pair(p);
    if (!c.prime_local)
        throw Error::validation("input must be a prime local pair" +
                                (c.note.empty() ? std::string() : ": " + c.note));
    Pseudolat P = Pseudolat::from_ideal(p.algebra, p.bounded);
    EmbedE em = embed_e(P);
    Subset ideal(em.si.algebra.size(), false);
    for (EIdx i : em.map) ideal[i] = true;
    LocalPair out{em.si.algebra, std::move(ideal)};
    PairClassification co = classify_pair(out);
    if (!co.local || !co.join_complete)
        throw Error::validation("internal: simple-ideal pair failed to be join-complete");
    return out;
}

Pseudolat functor_el(const LocalPair& p) {
    PairClassification c = classify_pair(p);
    if (!c.prime_local)
        throw Error::validation("input must be a prime local pair" +
                                (c.note.empty() ? std::string() : ": " + c.note));
    Pseudolat P = Pseudolat::from_ideal(p.algebra, p.bounded);
    GbplReport g = is_gbpl(P);
    if (!g.gbpl)
        throw Error::validation("internal: ideal of a prime local pair must be a GBPL");
    return P;
}

LocalPair functor_eg(const Pseudolat& P) {
    GbplReport g = is_gbpl(P);
    if (!g.gbpl)
        throw Error::validation(
            "input must be a GBPL: element " + P.elem_name(g.a) +
            " has no relative complement in [" + P.elem_name(g.b) + ", " +
            P.elem_name(g.c) + "]");
    EmbedE em = embed_e(P);
    const BoolAlg& Si = em.si.algebra;
    Subset hull(Si.size(), false);
    for (EIdx i : em.map) {
        hull[i] = true;
        hull[Si.complement(i)] = true;
    }
    std::vector<EIdx> back;
    BoolAlg sub = subalgebra_as_algebra(Si, subset_members(hull), &back);
    Subset ideal(sub.size(), false);
    for (std::size_t i = 0; i < back.size(); ++i)
        if (std::find(em.map.begin(), em.map.end(), back[i]) != em.map.end())
            ideal[i] = true;
    LocalPair out{std::move(sub), std::move(ideal)};
    if (!classify_pair(out).prime_local)
        throw Error::validation("internal: down-set pair failed to be prime local");
    return out;
}

// --- morphism parts -------------------------------------------------------

BoolHom functor_ez_mor(const LocalPair& src, const LocalPair& dst,
                       const BoolHom& phi) {
    MorphismReport m = check_morphism(src, dst, phi);
    if (!m.hom_ok || !m.bounded_cover || !m.bounded_image)
        throw Error::validation("map is not a pair morphism with bounded image");
    LocalPair e1 = functor_ez(src);
    LocalPair e2 = functor_ez(dst);
    std::vector<EIdx> map(e1.algebra.size());
    for (EIdx i = 0; i < e1.algebra.size(); ++i) {
        EIdx a = *src.algebra.index_of_code(e1.algebra.code(i));
        std::optional<EIdx> j = e2.algebra.index_of_code(dst.algebra.code(phi(a)));
        if (!j)
            throw Error::validation("internal: image escapes the target bounded hull");
        map[i] = *j;
    }
    return BoolHom{e1.algebra, e2.algebra, std::move(map)};
}

BoolHom functor_ep_mor(const LocalPair& src, const LocalPair& dst,
                       const BoolHom& phi) {
    MorphismReport m = check_morphism(src, dst, phi);
    if (!m.hom_ok || !m.bounded_cover || !m.bounded_image)
        throw Error::validation("map is not a pair morphism with bounded image");
    LocalPair e1 = functor_ep(src);
    LocalPair e2 = functor_ep(dst);
    std::vector<EIdx> mem1 = ideal_members_in_order(src.algebra, src.bounded);
    std::vector<EIdx> mem2 = ideal_members_in_order(dst.algebra, dst.bounded);

    std::vector<EIdx> map(e1.algebra.size());
    for (EIdx i = 0; i < e1.algebra.size(); ++i) {
        IdxMask jm = static_cast<IdxMask>(e1.algebra.code(i));
        // ideal of the target generated by the φ-image: down-closure of the
        // join inside the target ideal
        std::vector<EIdx> imgs;
        for (std::size_t k = 0; k < mem1.size(); ++k)
            if (jm & (IdxMask{1} << k)) imgs.push_back(phi(mem1[k]));
        EIdx g = dst.algebra.join_all(imgs);
        IdxMask out = 0;
        for (std::size_t k = 0; k < mem2.size(); ++k)
            if (dst.algebra.leq(mem2[k], g)) out |= IdxMask{1} << k;
        std::optional<EIdx> j = e2.algebra.index_of_code(static_cast<Mask>(out));
        if (!j)
            throw Error::validation("internal: generated ideal is not simple");
        map[i] = *j;
    }
    return BoolHom{e1.algebra, e2.algebra, std::move(map)};
}

std::vector<EIdx> functor_el_mor(const LocalPair& src, const LocalPair& dst,
                                 const BoolHom& phi) {
    MorphismReport m = check_morphism(src, dst, phi);
    if (!m.hom_ok || !m.bounded_cover || !m.bounded_image)
        throw Error::validation("map is not a pair morphism with bounded image");
    std::vector<EIdx> mem1 = ideal_members_in_order(src.algebra, src.bounded);
    std::vector<EIdx> mem2 = ideal_members_in_order(dst.algebra, dst.bounded);
    std::vector<EIdx> out(mem1.size());
    for (std::size_t i = 0; i < mem1.size(); ++i) {
        EIdx img = phi(mem1[i]);
        auto it = std::find(mem2.begin(), mem2.end(), img);
        if (it == mem2.end())
            throw Error::validation("internal: bounded image escapes the target ideal");
        out[i] = static_cast<EIdx>(it - mem2.begin());
    }
    return out;
}

LatticeMorphismReport check_lattice_morphism(const Pseudolat& P1, const Pseudolat& P2,
                                             const std::vector<EIdx>& phi) {
    if (phi.size() != P1.size())
        throw Error::validation("lattice map must assign every element");
    LatticeMorphismReport r;
    r.hom_ok = (phi[P1.zero()] == P2.zero());
    for (EIdx a = 0; a < P1.size() && r.hom_ok; ++a)
        for (EIdx b = 0; b < P1.size() && r.hom_ok; ++b) {
            if (phi[P1.meet(a, b)] != P2.meet(phi[a], phi[b])) r.hom_ok = false;
            if (phi[P1.join(a, b)] != P2.join(phi[a], phi[b])) r.hom_ok = false;
        }
    r.bounded_cover = true;
    for (EIdx b = 0; b < P2.size(); ++b) {
        bool covered = false;
        for (EIdx a = 0; a < P1.size() && !covered; ++a)
            if (P2.leq(b, phi[a])) covered = true;
        if (!covered) {
            r.bounded_cover = false;
            r.cover_witness = b;
            break;
        }
    }
    return r;
}

BoolHom functor_eg_mor(const Pseudolat& P1, const Pseudolat& P2,
                       const std::vector<EIdx>& phi) {
    LatticeMorphismReport lm = check_lattice_morphism(P1, P2, phi);
    if (!lm.hom_ok || !lm.bounded_cover)
        throw Error::validation("map is not a covering lattice morphism");
    LocalPair g1 = functor_eg(P1);
    LocalPair g2 = functor_eg(P2);
    EmbedE em1 = embed_e(P1);
    EmbedE em2 = embed_e(P2);

    // position of each down-set ↓a inside the packaged pairs
    auto down_code = [&](const EmbedE& em, EIdx a) {
        return em.si.algebra.code(em.map[a]);
    };
    const EIdx none = static_cast<EIdx>(g2.algebra.size());
    std::vector<EIdx> map(g1.algebra.size(), none);
    for (EIdx a = 0; a < P1.size(); ++a) {
        EIdx i = *g1.algebra.index_of_code(down_code(em1, a));
        EIdx j = *g2.algebra.index_of_code(down_code(em2, phi[a]));
        if (map[i] != none && map[i] != j)
            throw Error::validation("internal: down-set image conflict");
        map[i] = j;
    }
    for (EIdx i = 0; i < g1.algebra.size(); ++i) {
        if (map[i] != none) continue;
        EIdx ic = g1.algebra.complement(i);
        if (map[ic] == none)
            throw Error::validation("internal: hull element is neither a down-set "
                                    "nor the complement of one");
        map[i] = g2.algebra.complement(map[ic]);
    }
    return BoolHom{g1.algebra, g2.algebra, std::move(map)};
}

// --- round trips ----------------------------------------------------------

RoundTripPrime roundtrip_prime(const LocalPair& p) {
    LocalPair image = functor_ez(functor_ep(p));
    Pseudolat P = Pseudolat::from_ideal(p.algebra, p.bounded);
    EmbedE em = embed_e(P);
    std::vector<EIdx> mem = ideal_members_in_order(p.algebra, p.bounded);

    // a ∈ I goes to ↓a; other elements have a* ∈ I and go to the complement
    const BoolAlg& A = p.algebra;
    std::vector<EIdx> map(A.size());
    auto down_index = [&](EIdx a) {
        auto it = std::find(mem.begin(), mem.end(), a);
        EIdx pi = static_cast<EIdx>(it - mem.begin());
        Mask code = em.si.algebra.code(em.map[pi]);
        return *image.algebra.index_of_code(code);
    };
    for (EIdx a = 0; a < A.size(); ++a) {
        if (p.bounded[a]) map[a] = down_index(a);
        else map[a] = image.algebra.complement(down_index(A.complement(a)));
    }
    BoolHom nat{A, image.algebra, std::move(map)};
    HomReport hr = hom_check(nat);

    bool ideal_matches = true;
    for (EIdx a = 0; a < A.size() && ideal_matches; ++a)
        if (p.bounded[a] != image.bounded[nat(a)]) ideal_matches = false;
    bool iso = hr.ok && hr.injective && hr.surjective;
    return RoundTripPrime{std::move(image), std::move(nat), iso, ideal_matches};
}

RoundTripSimple roundtrip_simple(const LocalPair& p) {
    LocalPair image = functor_ep(functor_ez(p));
    // Σ maps each simple ideal of I to its join; nat is its inverse
    SigmaZlba sg = sigma_zlba(p.algebra, p.bounded);
    if (!sg.report.ok || !sg.bijective)
        throw Error::validation("internal: join map failed to be an isomorphism");
    std::vector<EIdx> inv(p.algebra.size());
    for (EIdx j = 0; j < sg.map.src.size(); ++j) inv[sg.map(j)] = j;
    // reindex through image.algebra (same codes as sg.map.src)
    std::vector<EIdx> map(p.algebra.size());
    for (EIdx b = 0; b < p.algebra.size(); ++b)
        map[b] = *image.algebra.index_of_code(sg.map.src.code(inv[b]));
    BoolHom nat{p.algebra, image.algebra, std::move(map)};
    HomReport hr = hom_check(nat);
    bool ideal_matches = true;
    for (EIdx b = 0; b < p.algebra.size() && ideal_matches; ++b)
        if (p.bounded[b] != image.bounded[nat(b)]) ideal_matches = false;
    bool iso = hr.ok && hr.injective && hr.surjective;
    return RoundTripSimple{std::move(image), std::move(nat), iso, ideal_matches};
}

RoundTripLattice roundtrip_lattice(const Pseudolat& P) {
    LocalPair g = functor_eg(P);
    Pseudolat image = functor_el(g);
    EmbedE em = embed_e(P);
    std::vector<EIdx> nat(P.size());
    for (EIdx a = 0; a < P.size(); ++a) {
        Mask code = em.si.algebra.code(em.map[a]);
        std::optional<EIdx> j = image.index_of_code(code);
        if (!j) throw Error::validation("internal: down-set missing from the image");
        nat[a] = *j;
    }
    bool iso = true;
    std::vector<bool> hit(image.size(), false);
    for (EIdx a = 0; a < P.size(); ++a) {
        if (hit[nat[a]]) iso = false;
        hit[nat[a]] = true;
    }
    for (bool h : hit) iso = iso && h;
    for (EIdx a = 0; a < P.size() && iso; ++a)
        for (EIdx b = 0; b < P.size() && iso; ++b) {
            if (nat[P.meet(a, b)] != image.meet(nat[a], nat[b])) iso = false;
            if (nat[P.join(a, b)] != image.join(nat[a], nat[b])) iso = false;
        }
    return RoundTripLattice{std::move(image), std::move(nat), iso};
}

}  // namespace locba
