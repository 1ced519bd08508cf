#include "locba/duality.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace locba {

namespace {

std::vector<Subset> sort_points(std::vector<Subset> pts) {
    // lexicographic member order; shared by every point-producing functor so
    // cross-functor comparisons can use strict equality
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<Subset> dual_points(const LocalPair& p) {
    return sort_points(bounded_ultrafilters(p.algebra, p.bounded));
}

std::vector<Subset> cluster_points(const ContactTriple& T) {
    std::vector<Cluster> cs = bounded_clusters(T);
    std::vector<Subset> pts;
    pts.reserve(cs.size());
    for (const Cluster& c : cs) pts.push_back(c.members);
    return sort_points(std::move(pts));
}

// Points whose member set contains a.
Mask member_mask(const std::vector<Subset>& pts, EIdx a) {
    Mask m = 0;
    for (std::size_t k = 0; k < pts.size(); ++k)
        if (pts[k][a]) m |= Mask{1} << k;
    return m;
}

void require_local_pair(const LocalPair& p, const std::string& who) {
    if (p.bounded.size() != p.algebra.size())
        throw Error::validation(who +
                                " needs a local pair: bounded flags must match the carrier size");
    if (p.algebra.size() <= 16) {
        PairClassification c = classify_pair(p.algebra, p.bounded);
        if (!c.local)
            throw Error::validation(who + " needs a local pair: " + c.note);
        return;
    }
    // larger carriers skip the full classification (its simple-ideal sweep is
    // exponential); the two defining laws are checked directly, and every
    // join exists in a finite algebra, so join-completeness cannot fail
    if (!is_ideal(p.algebra, p.bounded))
        throw Error::validation(who + " needs a local pair: the bounded part is not an ideal");
    DensityReport d = dense_subset_check(p.algebra, p.bounded);
    if (!d.dense)
        throw Error::validation(who + " needs a local pair: " + p.algebra.elem_name(d.witness) +
                                " has no nonzero bounded minorant");
}

std::vector<Mask> close_under_union(std::vector<Mask> fam) {
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    std::set<Mask> seen(fam.begin(), fam.end());
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Mask u = fam[i] | fam[j];
            if (seen.insert(u).second) fam.push_back(u);
        }
        if (fam.size() > FinSpace::kMaxOpens)
            throw Error::scope("the generated topology needs more than " +
                               std::to_string(FinSpace::kMaxOpens) + " open sets");
    }
    std::sort(fam.begin(), fam.end());
    return fam;
}

std::vector<Mask> close_under_union_intersection(std::vector<Mask> fam) {
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    std::set<Mask> seen(fam.begin(), fam.end());
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            for (Mask v : {fam[i] | fam[j], fam[i] & fam[j]})
                if (seen.insert(v).second) fam.push_back(v);
        }
        if (fam.size() > FinSpace::kMaxOpens)
            throw Error::scope("the generated topology needs more than " +
                               std::to_string(FinSpace::kMaxOpens) + " closed sets");
    }
    std::sort(fam.begin(), fam.end());
    return fam;
}

// Completes a witness whose forward_points are already filled: bijectivity,
// continuity both ways, the inverse map, and the round trip.
void finish_point_witness(DualityWitness& w, const FinSpace& src, const FinSpace& dst) {
    std::vector<unsigned> hits(dst.points(), 0);
    for (unsigned v : w.forward_points) ++hits[v];
    bool injective = true;
    bool surjective = true;
    for (unsigned h : hits) {
        if (h > 1) injective = false;
        if (h == 0) surjective = false;
    }
    w.bijective = injective && surjective;
    if (!injective) {
        for (unsigned i = 0; i < w.forward_points.size() && w.note.empty(); ++i)
            for (unsigned j = i + 1; j < w.forward_points.size(); ++j)
                if (w.forward_points[i] == w.forward_points[j]) {
                    w.note = "points " + std::to_string(i) + " and " + std::to_string(j) +
                             " collapse onto one target point";
                    break;
                }
    } else if (!surjective) {
        for (unsigned k = 0; k < hits.size(); ++k)
            if (hits[k] == 0) {
                w.note = "target point " + std::to_string(k) + " is not reached";
                break;
            }
    }
    w.forward_ok = true;
    for (Mask O : dst.opens()) {
        Mask pre = 0;
        for (unsigned x = 0; x < src.points(); ++x)
            if ((O >> w.forward_points[x]) & 1) pre |= Mask{1} << x;
        if (!src.is_open(pre)) {
            w.forward_ok = false;
            if (w.note.empty())
                w.note = "the open set " + dst.set_name(O) + " pulls back to a non-open set";
            break;
        }
    }
    if (w.bijective) {
        w.backward_points.assign(dst.points(), 0);
        for (unsigned x = 0; x < src.points(); ++x) w.backward_points[w.forward_points[x]] = x;
        w.backward_ok = true;
        for (Mask U : src.opens()) {
            Mask img = 0;
            for (unsigned x = 0; x < src.points(); ++x)
                if ((U >> x) & 1) img |= Mask{1} << w.forward_points[x];
            if (!dst.is_open(img)) {
                w.backward_ok = false;
                if (w.note.empty())
                    w.note = "the open set " + src.set_name(U) + " pushes forward to a non-open set";
                break;
            }
        }
        w.roundtrip_identity = true;
        for (unsigned x = 0; x < src.points(); ++x)
            if (w.backward_points[w.forward_points[x]] != x) w.roundtrip_identity = false;
        for (unsigned k = 0; k < dst.points(); ++k)
            if (w.forward_points[w.backward_points[k]] != k) w.roundtrip_identity = false;
    }
    w.iso = w.bijective && w.forward_ok && w.backward_ok;
}

}  // namespace

LocalPair theta_t(const FinSpace& X) {
    BoolAlg co = co_algebra(X);
    std::vector<Mask> ck = ck_family(X);
    Subset bounded(co.size(), false);
    for (EIdx i = 0; i < co.size(); ++i)
        bounded[i] = std::find(ck.begin(), ck.end(), co.code(i)) != ck.end();
    LocalPair p{std::move(co), std::move(bounded)};
    if (p.algebra.size() <= 16) {
        PairClassification c = classify_pair(p.algebra, p.bounded);
        if (!c.local || !c.join_complete)
            throw Error::validation("internal: the clopen pair fails the local-pair laws");
    } else {
        if (!is_ideal(p.algebra, p.bounded))
            throw Error::validation("internal: the compact clopens fail the ideal laws");
        if (!dense_subset_check(p.algebra, p.bounded).dense)
            throw Error::validation("internal: the compact clopens are not dense");
    }
    return p;
}

BoolHom theta_t_mor(const SpaceMap& f) {
    MapClassification mc = classify_map(f);
    if (!mc.continuous)
        throw Error::validation("the clopen functor needs a continuous map");
    LocalPair from = theta_t(f.dst);
    LocalPair to = theta_t(f.src);
    std::vector<EIdx> map(from.algebra.size(), 0);
    for (EIdx g = 0; g < from.algebra.size(); ++g) {
        std::optional<EIdx> i = to.algebra.index_of_code(preimage_of(f, from.algebra.code(g)));
        if (!i) throw Error::validation("internal: a clopen preimage is not clopen");
        map[g] = *i;
    }
    BoolHom h{from.algebra, to.algebra, std::move(map)};
    MorphismReport r = check_morphism(from, to, h);
    if (!r.hom_ok || !r.bounded_cover)
        throw Error::validation("internal: the preimage map fails the morphism conditions");
    if (mc.perfect && !r.bounded_image)
        throw Error::validation("internal: a perfect map must keep bounded images bounded");
    return h;
}

FinSpace theta_a(const LocalPair& p) {
    require_local_pair(p, "the dual-space functor");
    std::vector<Subset> pts = dual_points(p);
    std::vector<Mask> base{0};
    for (EIdx a = 0; a < p.algebra.size(); ++a)
        if (p.bounded[a]) base.push_back(member_mask(pts, a));
    return FinSpace::from_opens(static_cast<unsigned>(pts.size()),
                                close_under_union(std::move(base)));
}

SpaceMap theta_a_mor(const LocalPair& src, const LocalPair& dst, const BoolHom& phi) {
    require_local_pair(src, "the dual-map functor");
    require_local_pair(dst, "the dual-map functor");
    MorphismReport r = check_morphism(src, dst, phi);
    if (!r.hom_ok)
        throw Error::validation("the dual-map functor needs a homomorphism between the carriers");
    if (!r.bounded_cover)
        throw Error::validation(
            "the dual-map functor needs the bounded-cover condition; no bounded source element "
            "covers " +
            (r.cover_witness ? dst.algebra.elem_name(*r.cover_witness) : std::string("?")));
    std::vector<Subset> lpts = dual_points(src);
    std::vector<Subset> mpts = dual_points(dst);
    std::vector<unsigned> map(mpts.size(), 0);
    for (std::size_t k = 0; k < mpts.size(); ++k) {
        Subset u(src.algebra.size(), false);
        for (EIdx a = 0; a < src.algebra.size(); ++a) u[a] = mpts[k][phi(a)];
        auto it = std::find(lpts.begin(), lpts.end(), u);
        if (it == lpts.end())
            throw Error::validation("internal: an inverse-image ultrafilter is not bounded");
        map[k] = static_cast<unsigned>(it - lpts.begin());
    }
    // the image of the member set of phi(a) must land inside the member set
    // of a; this containment is exactly continuity on the open base
    for (EIdx a = 0; a < src.algebra.size(); ++a) {
        Mask am = member_mask(lpts, a);
        Mask pm = member_mask(mpts, phi(a));
        for (std::size_t k = 0; k < mpts.size(); ++k)
            if (((pm >> k) & 1) != 0 && ((am >> map[k]) & 1) == 0)
                throw Error::validation("internal: the continuity containment fails at " +
                                        src.algebra.elem_name(a));
    }
    SpaceMap out{theta_a(dst), theta_a(src), std::move(map)};
    if (!classify_map(out).continuous)
        throw Error::validation("internal: a dual map must be continuous");
    return out;
}

DualityWitness unit_tx(const FinSpace& X) {
    LocalPair pair = theta_t(X);
    std::vector<Subset> pts = dual_points(pair);
    FinSpace L = theta_a(pair);
    DualityWitness w;
    w.forward_points.resize(X.points(), 0);
    for (unsigned x = 0; x < X.points(); ++x) {
        Subset ux(pair.algebra.size(), false);
        for (EIdx i = 0; i < pair.algebra.size(); ++i)
            ux[i] = ((pair.algebra.code(i) >> x) & 1) != 0;
        auto it = std::find(pts.begin(), pts.end(), ux);
        if (it == pts.end())
            throw Error::validation("internal: a point filter is missing from the dual space");
        w.forward_points[x] = static_cast<unsigned>(it - pts.begin());
    }
    finish_point_witness(w, X, L);
    return w;
}

DualityWitness counit_lambda(const LocalPair& p) {
    require_local_pair(p, "the counit");
    std::vector<Subset> pts = dual_points(p);
    FinSpace L = theta_a(p);
    LocalPair dual = theta_t(L);
    DualityWitness w;
    w.forward_elements.resize(p.algebra.size(), 0);
    for (EIdx b = 0; b < p.algebra.size(); ++b) {
        std::optional<EIdx> i = dual.algebra.index_of_code(member_mask(pts, b));
        if (!i) throw Error::validation("internal: a member set is not clopen in the dual space");
        w.forward_elements[b] = *i;
    }
    BoolHom h{p.algebra, dual.algebra, w.forward_elements};
    HomReport hr = hom_check(h);
    MorphismReport mr = check_morphism(p, dual, h);
    w.forward_ok = hr.ok && mr.bounded_cover && mr.bounded_image;
    w.bijective = hr.injective && hr.surjective;
    Subset image(dual.algebra.size(), false);
    for (EIdx b = 0; b < p.algebra.size(); ++b)
        if (p.bounded[b]) image[w.forward_elements[b]] = true;
    w.ideal_onto = (image == dual.bounded);
    if (!hr.surjective) {
        Subset hit(dual.algebra.size(), false);
        for (EIdx v : w.forward_elements) hit[v] = true;
        for (EIdx i = 0; i < dual.algebra.size(); ++i)
            if (!hit[i]) {
                w.note = "no element has member set " + dual.algebra.elem_name(i);
                break;
            }
    } else if (!hr.injective) {
        w.note = "two elements share a member set";
    }
    if (w.bijective && w.forward_ok) {
        w.backward_elements.resize(dual.algebra.size(), 0);
        for (EIdx b = 0; b < p.algebra.size(); ++b)
            w.backward_elements[w.forward_elements[b]] = b;
        BoolHom inv{dual.algebra, p.algebra, w.backward_elements};
        MorphismReport ir = check_morphism(dual, p, inv);
        w.backward_ok = hom_check(inv).ok && ir.bounded_cover && ir.bounded_image;
        w.roundtrip_identity = true;
        for (EIdx b = 0; b < p.algebra.size(); ++b)
            if (w.backward_elements[w.forward_elements[b]] != b) w.roundtrip_identity = false;
        for (EIdx i = 0; i < dual.algebra.size(); ++i)
            if (w.forward_elements[w.backward_elements[i]] != i) w.roundtrip_identity = false;
    }
    w.iso = w.bijective && w.forward_ok && w.backward_ok && w.ideal_onto;
    return w;
}

ContactTriple psi_t(const FinSpace& X) { return rc_algebra(X); }

std::vector<Subset> cluster_member_order(const ContactTriple& T) { return cluster_points(T); }

FinSpace psi_a(const ContactTriple& T) {
    AxiomReport ax = check_axioms(T);
    if (!ax.lca) {
        std::string which =
            ax.violations.empty() ? std::string("(unknown)") : ax.violations.front().axiom;
        throw Error::validation(
            "the cluster-space functor needs the local contact axioms; first failure: " + which);
    }
    std::vector<Subset> pts = cluster_points(T);
    const unsigned n = static_cast<unsigned>(pts.size());
    const Mask full = n ? (Mask{1} << n) - 1 : 0;
    std::vector<Mask> closed{full};
    for (EIdx a = 0; a < T.algebra.size(); ++a) closed.push_back(member_mask(pts, a));
    closed = close_under_union_intersection(std::move(closed));
    std::vector<Mask> opens;
    opens.reserve(closed.size());
    for (Mask c : closed) opens.push_back(full & ~c);
    FinSpace L = FinSpace::from_opens(n, std::move(opens));
    std::vector<Mask> base;
    for (EIdx a = 0; a < T.algebra.size(); ++a)
        if (T.bounded[a]) base.push_back(L.interior(member_mask(pts, a)));
    if (!is_base_family(L, base))
        throw Error::validation("internal: the bounded member interiors do not form an open base");
    return L;
}

PerfectDualityReport perfect_duality_check(const LocalPair& src, const LocalPair& dst,
                                           const BoolHom& phi) {
    require_local_pair(src, "the perfect-duality check");
    require_local_pair(dst, "the perfect-duality check");
    MorphismReport r = check_morphism(src, dst, phi);
    if (!r.hom_ok)
        throw Error::validation("the perfect-duality check needs a homomorphism between the carriers");
    if (!r.bounded_cover)
        throw Error::validation(
            "the perfect-duality check needs the bounded-cover condition; no bounded source "
            "element covers " +
            (r.cover_witness ? dst.algebra.elem_name(*r.cover_witness) : std::string("?")));
    if (!r.bounded_image)
        throw Error::validation(
            "the morphism does not keep bounded elements bounded; witness " +
            (r.image_witness ? src.algebra.elem_name(*r.image_witness) : std::string("?")));
    PerfectDualityReport rep{theta_a_mor(src, dst, phi)};
    rep.perfect = classify_map(rep.dual_map).perfect;
    std::vector<Subset> lpts = dual_points(src);
    std::vector<Subset> mpts = dual_points(dst);
    rep.preimage_law = true;
    for (EIdx a = 0; a < src.algebra.size(); ++a) {
        if (!src.bounded[a]) continue;
        if (member_mask(mpts, phi(a)) != preimage_of(rep.dual_map, member_mask(lpts, a))) {
            rep.preimage_law = false;
            break;
        }
    }
    return rep;
}

FinSpace stone_dual(const BoolAlg& B) {
    std::vector<EIdx> mins = minimal_nonzero(B);
    const unsigned n = static_cast<unsigned>(mins.size());
    std::vector<Mask> base;
    base.reserve(B.size());
    for (EIdx b = 0; b < B.size(); ++b) {
        Mask m = 0;
        for (unsigned t = 0; t < n; ++t)
            if (B.leq(mins[t], b)) m |= Mask{1} << t;
        base.push_back(m);
    }
    return FinSpace::from_opens(n, close_under_union(std::move(base)));
}

FinSpace sum_space(const std::vector<FinSpace>& parts) {
    unsigned total = 0;
    std::vector<Mask> opens{0};
    for (const FinSpace& part : parts) {
        if (total + part.points() > FinSpace::kMaxPoints)
            throw Error::scope("a disjoint sum supports at most " +
                               std::to_string(FinSpace::kMaxPoints) + " points");
        std::vector<Mask> next;
        next.reserve(opens.size() * part.opens().size());
        for (Mask acc : opens)
            for (Mask o : part.opens()) next.push_back(acc | (o << total));
        opens = std::move(next);
        total += part.points();
    }
    return FinSpace::from_opens(total, std::move(opens));
}

DualityWitness product_sum_check(const std::vector<ContactTriple>& factors) {
    ContactTriple prod = product(factors);
    FinSpace P = psi_a(prod);
    std::vector<FinSpace> duals;
    duals.reserve(factors.size());
    for (const ContactTriple& F : factors) duals.push_back(psi_a(F));
    FinSpace S = sum_space(duals);
    std::vector<Subset> ppts = cluster_points(prod);
    DualityWitness w;
    w.forward_points.resize(S.points(), 0);
    unsigned pt_off = 0;
    unsigned bit_off = 0;
    for (std::size_t gi = 0; gi < factors.size(); ++gi) {
        const ContactTriple& F = factors[gi];
        std::vector<Subset> fpts = cluster_points(F);
        const unsigned g = F.algebra.ground_bits();
        const Mask gmask = g ? (Mask{1} << g) - 1 : 0;
        for (std::size_t k = 0; k < fpts.size(); ++k) {
            // lift the factor cluster to its slice: all elements whose
            // coordinate at this factor belongs to the cluster
            Subset slice(prod.algebra.size(), false);
            for (EIdx idx = 0; idx < prod.algebra.size(); ++idx) {
                Mask coord = (prod.algebra.code(idx) >> bit_off) & gmask;
                std::optional<EIdx> ci = F.algebra.index_of_code(coord);
                if (!ci)
                    throw Error::validation("internal: a product code has no coordinate in factor " +
                                            std::to_string(gi));
                slice[idx] = fpts[k][*ci];
            }
            auto it = std::find(ppts.begin(), ppts.end(), slice);
            if (it == ppts.end())
                throw Error::validation("internal: a factor cluster does not lift to a product cluster");
            w.forward_points[pt_off + static_cast<unsigned>(k)] =
                static_cast<unsigned>(it - ppts.begin());
        }
        pt_off += static_cast<unsigned>(fpts.size());
        bit_off += g;
    }
    finish_point_witness(w, S, P);
    return w;
}

FcDualSpace fc_theta_a() {
    FcDualSpace d;
    d.discrete = true;
    d.countable = true;
    d.description =
        "one isolated point per natural number: the bounded ultrafilters are exactly the "
        "principal ones, and the member set of the singleton {i} isolates the point at i";
    return d;
}

FcCounit fc_counit_lambda() {
    FcCounit c;
    c.embedding = true;
    c.ideal_onto = true;
    c.iso = false;
    c.missing_clopen =
        "the set of even-indexed points: clopen in the countable discrete space, but it is "
        "neither finite nor cofinite";
    return c;
}

FcEmbeddingReport fc_two_embedding_report() {
    FcEmbeddingReport r;
    r.witness = fc_one();  // the top lands on a cofinite element
    r.bounded_cover = true;
    r.bounded_image = fc_in_fin(r.witness);
    return r;
}

}  // namespace locba
