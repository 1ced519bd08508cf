#include "locba/completion.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locba/duality.hpp"
#include "locba/error.hpp"
#include "locba/topo.hpp"

namespace locba {

namespace {

void require_triple_shape(const ContactTriple& T, const std::string& who) {
    if (T.rho.n != static_cast<EIdx>(T.algebra.size()))
        throw Error::validation(who + " needs a relation matching the carrier size");
    if (T.bounded.size() != T.algebra.size())
        throw Error::validation(who + " needs bounded flags matching the carrier size");
}

bool subset_contains(const Subset& big, const Subset& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if (small[i] && !big[i]) return false;
    return true;
}

// The top of the frame is the member containing every other, when one exists.
bool is_frame_top(const std::vector<Subset>& frame, const Subset& J) {
    for (const Subset& K : frame)
        if (!subset_contains(J, K)) return false;
    return true;
}

bool prime_in_frame(const std::vector<Subset>& frame, const Subset& J) {
    if (is_frame_top(frame, J)) return false;
    for (const Subset& j1 : frame)
        for (const Subset& j2 : frame) {
            bool meet_inside = true;
            for (std::size_t i = 0; i < J.size() && meet_inside; ++i)
                if (j1[i] && j2[i] && !J[i]) meet_inside = false;
            if (!meet_inside) continue;
            if (!subset_contains(J, j1) && !subset_contains(J, j2)) return false;
        }
    return true;
}

Subset image_of_bounded(const ContactTriple& src, const BoolAlg& target, const BoolHom& phi) {
    Subset img(target.size(), false);
    for (EIdx a = 0; a < src.algebra.size(); ++a)
        if (src.bounded[a]) img[phi(a)] = true;
    return img;
}

// Down-closure in `target` of the phi-image of the flagged source elements.
Subset image_downset(const Subset& flags, const BoolAlg& target, const BoolHom& phi) {
    Subset out(target.size(), false);
    for (EIdx b = 0; b < target.size(); ++b)
        for (EIdx a = 0; a < flags.size(); ++a)
            if (flags[a] && target.leq(b, phi(a))) {
                out[b] = true;
                break;
            }
    return out;
}

void require_completion_embedding(const ContactTriple& src, const ContactTriple& dst,
                                  const BoolHom& phi, const std::string& who) {
    if (!is_ideal(src.algebra, src.bounded))
        throw Error::validation(who + " needs an ideal as the source bounded part");
    if (!is_ideal(dst.algebra, dst.bounded))
        throw Error::validation(who + " needs an ideal as the target bounded part");
    ContactEmbeddingReport rep = check_contact_embedding(src, dst, phi);
    if (!rep.dense_embedding)
        throw Error::validation(who + " needs a dense embedding; " + rep.note);
    if (!is_dv_dense(dst, image_of_bounded(src, dst.algebra, phi)))
        throw Error::validation(who + " needs a dV-dense bounded image");
}

}  // namespace

bool is_delta_ideal(const ContactTriple& T, const Subset& J) {
    require_triple_shape(T, "the delta-ideal test");
    if (J.size() != T.algebra.size())
        throw Error::validation("the delta-ideal test needs flags matching the carrier size");
    if (!is_ideal(T.algebra, J)) return false;
    for (EIdx a = 0; a < T.algebra.size(); ++a) {
        if (!J[a]) continue;
        if (!T.bounded[a]) return false;
        bool interpolated = false;
        for (EIdx b = 0; b < T.algebra.size() && !interpolated; ++b)
            if (J[b] && well_inside(T, a, b)) interpolated = true;
        if (!interpolated) return false;
    }
    return true;
}

std::vector<Subset> delta_ideals(const ContactTriple& T) {
    require_triple_shape(T, "the delta-ideal frame");
    std::vector<Subset> out;
    for (IdxMask m : enumerate_ideal_masks(T.algebra)) {
        Subset J = subset_from_mask(T.algebra.size(), m);
        if (is_delta_ideal(T, J)) out.push_back(std::move(J));
    }
    return out;
}

bool is_prime_element(const ContactTriple& T, const Subset& J) {
    if (!is_delta_ideal(T, J))
        throw Error::validation("the prime test needs a delta ideal of the triple");
    return prime_in_frame(delta_ideals(T), J);
}

ContactEmbeddingReport check_contact_embedding(const ContactTriple& src,
                                               const ContactTriple& dst, const BoolHom& phi) {
    require_triple_shape(src, "the embedding check");
    require_triple_shape(dst, "the embedding check");
    if (!(phi.src == src.algebra) || !(phi.dst == dst.algebra))
        throw Error::validation("the embedding check needs a map between the two carriers");
    ContactEmbeddingReport rep;
    HomReport hr = hom_check(phi);
    rep.hom_ok = hr.ok;
    rep.injective = hr.injective;
    rep.contact_agree = true;
    EIdx ca = 0, cb = 0;
    for (EIdx a = 0; a < src.algebra.size() && rep.contact_agree; ++a)
        for (EIdx b = 0; b < src.algebra.size(); ++b)
            if (src.rho.at(a, b) != dst.rho.at(phi(a), phi(b))) {
                rep.contact_agree = false;
                ca = a;
                cb = b;
                break;
            }
    rep.bounded_into_bounded = true;
    rep.bounded_reflected = true;
    EIdx bi = 0, br = 0;
    for (EIdx a = 0; a < src.algebra.size(); ++a) {
        if (src.bounded[a] && !dst.bounded[phi(a)] && rep.bounded_into_bounded) {
            rep.bounded_into_bounded = false;
            bi = a;
        }
        if (!src.bounded[a] && dst.bounded[phi(a)] && rep.bounded_reflected) {
            rep.bounded_reflected = false;
            br = a;
        }
    }
    Subset image(dst.algebra.size(), false);
    for (EIdx a = 0; a < src.algebra.size(); ++a) image[phi(a)] = true;
    DensityReport dr = dense_subset_check(dst.algebra, image);
    rep.dense_image = dr.dense;
    rep.embedding =
        rep.hom_ok && rep.injective && rep.contact_agree && rep.bounded_into_bounded;
    rep.dense_embedding = rep.embedding && rep.dense_image;
    if (!rep.hom_ok)
        rep.note = "the map is not a homomorphism: it breaks " + hr.violated_law;
    else if (!rep.injective)
        rep.note = "the map is not injective";
    else if (!rep.contact_agree)
        rep.note = "contact disagrees at " + src.algebra.elem_name(ca) + ", " +
                   src.algebra.elem_name(cb);
    else if (!rep.bounded_into_bounded)
        rep.note = "the bounded element " + src.algebra.elem_name(bi) +
                   " lands on an unbounded image";
    else if (!rep.bounded_reflected)
        rep.note = "the unbounded element " + src.algebra.elem_name(br) +
                   " lands on a bounded image";
    else if (!rep.dense_image)
        rep.note = "the image is not dense: nothing nonzero in it sits below " +
                   dst.algebra.elem_name(dr.witness);
    return rep;
}

bool is_dv_dense(const ContactTriple& T, const Subset& members) {
    return is_base(T, members);
}

Subset restrict_delta(const ContactTriple& src, const ContactTriple& dst, const BoolHom& phi,
                      const Subset& J) {
    require_completion_embedding(src, dst, phi, "restriction of a delta ideal");
    if (!is_delta_ideal(dst, J))
        throw Error::validation("restriction needs a delta ideal of the target");
    Subset out(src.algebra.size(), false);
    for (EIdx a = 0; a < src.algebra.size(); ++a) out[a] = J[phi(a)];
    if (!is_delta_ideal(src, out))
        throw Error::validation("internal: the restricted set is not a delta ideal");
    return out;
}

Subset extend_delta(const ContactTriple& src, const ContactTriple& dst, const BoolHom& phi,
                    const Subset& J) {
    require_completion_embedding(src, dst, phi, "extension of a delta ideal");
    if (!is_delta_ideal(src, J))
        throw Error::validation("extension needs a delta ideal of the source");
    Subset out = image_downset(J, dst.algebra, phi);
    if (!is_delta_ideal(dst, out))
        throw Error::validation("internal: the extended set is not a delta ideal");
    return out;
}

CompletionPair lca_completion(const ContactTriple& T) {
    FinSpace X = psi_a(T);  // validates the local contact axioms
    ContactTriple target = psi_t(X);
    std::vector<Subset> pts = cluster_member_order(T);
    std::vector<EIdx> map(T.algebra.size());
    for (EIdx a = 0; a < T.algebra.size(); ++a) {
        Mask m = 0;
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (pts[k][a]) m |= Mask{1} << k;
        std::optional<EIdx> i = target.algebra.index_of_code(m);
        if (!i)
            throw Error::validation(
                "internal: a member set is not regular closed in the cluster space");
        map[a] = *i;
    }
    BoolHom phi{T.algebra, target.algebra, std::move(map)};
    ContactEmbeddingReport rep = check_contact_embedding(T, target, phi);
    bool dv = is_dv_dense(target, image_of_bounded(T, target.algebra, phi));
    AxiomReport ax = check_axioms(target);
    bool complete_ok = ax.clca && ax.complete;
    if (!rep.dense_embedding || !rep.bounded_reflected || !dv || !complete_ok)
        throw Error::validation("internal: the completion certificates fail" +
                                (rep.note.empty() ? std::string() : "; " + rep.note));
    return CompletionPair{std::move(phi), std::move(target), rep, dv, complete_ok};
}

EquivalenceReport completions_equivalent(const ContactTriple& T, const CompletionPair& c1,
                                         const CompletionPair& c2) {
    require_triple_shape(T, "the equivalence check");
    if (!(c1.embedding.src == T.algebra) || !(c2.embedding.src == T.algebra))
        throw Error::validation("the equivalence check needs completions of the given triple");
    if (!(c1.embedding.dst == c1.target.algebra) || !(c2.embedding.dst == c2.target.algebra))
        throw Error::validation(
            "the equivalence check needs embeddings landing in the completion targets");
    EquivalenceReport out;
    if (c1.target.algebra.size() != c2.target.algebra.size()) {
        out.note = "the targets have different sizes (" +
                   std::to_string(c1.target.algebra.size()) + " and " +
                   std::to_string(c2.target.algebra.size()) + ")";
        return out;
    }
    if (c1.target.algebra.atom_count() != c2.target.algebra.atom_count()) {
        out.note = "the targets have different atom counts (" +
                   std::to_string(c1.target.algebra.atom_count()) + " and " +
                   std::to_string(c2.target.algebra.atom_count()) + ")";
        return out;
    }
    const unsigned k = c1.target.algebra.atom_count();
    if (k > kMaxEquivalenceAtoms)
        throw Error::scope("the equivalence search supports at most " +
                           std::to_string(kMaxEquivalenceAtoms) + " atoms; the targets have " +
                           std::to_string(k));
    const ContactTriple& t1 = c1.target;
    const ContactTriple& t2 = c2.target;
    auto accept = [&](const BoolHom& h) {
        for (EIdx a = 0; a < T.algebra.size(); ++a)
            if (h.map[c1.embedding(a)] != c2.embedding(a)) return false;
        for (EIdx a = 0; a < t1.algebra.size(); ++a) {
            if (t1.bounded[a] != t2.bounded[h.map[a]]) return false;
            for (EIdx b = 0; b < t1.algebra.size(); ++b)
                if (t1.rho.at(a, b) != t2.rho.at(h.map[a], h.map[b])) return false;
        }
        return true;
    };
    std::optional<BoolHom> iso = find_isomorphism(t1.algebra, t2.algebra, accept);
    if (!iso) {
        std::size_t perms = 1;
        for (unsigned i = 2; i <= k; ++i) perms *= i;
        out.note = "no connecting isomorphism among the " + std::to_string(perms) +
                   " atom bijections";
        return out;
    }
    out.equivalent = true;
    out.iso = std::move(iso->map);
    return out;
}

ContactExtensionReport extend_contact(const ContactTriple& src, const BoolAlg& target,
                                      const BoolHom& phi) {
    require_triple_shape(src, "the contact extension");
    if (!(phi.src == src.algebra) || !(phi.dst == target))
        throw Error::validation("the contact extension needs a map of the two carriers");
    if (!is_ideal(src.algebra, src.bounded))
        throw Error::validation("the contact extension needs an ideal as the bounded part");
    HomReport hr = hom_check(phi);
    if (!hr.ok)
        throw Error::validation("the contact extension needs a homomorphism: the map breaks " +
                                hr.violated_law);
    if (!hr.injective)
        throw Error::validation("the contact extension needs an injective embedding");
    Subset image(target.size(), false);
    for (EIdx a = 0; a < src.algebra.size(); ++a) image[phi(a)] = true;
    DensityReport dr = dense_subset_check(target, image);
    if (!dr.dense)
        throw Error::validation("the contact extension needs a dense image; nothing nonzero "
                                "in it sits below " +
                                target.elem_name(dr.witness));
    const EIdx n = static_cast<EIdx>(target.size());
    const EIdx m = static_cast<EIdx>(src.algebra.size());
    Subset bprime = image_downset(src.bounded, target, phi);
    // x well inside y through a bounded source pair sitting between them
    auto bounded_ll = [&](EIdx x, EIdx y) {
        for (EIdx a = 0; a < m; ++a) {
            if (!src.bounded[a] || !target.leq(x, phi(a))) continue;
            for (EIdx b = 0; b < m; ++b)
                if (src.bounded[b] && well_inside(src, a, b) && target.leq(phi(b), y))
                    return true;
        }
        return false;
    };
    std::vector<Subset> frame = delta_ideals(src);
    std::vector<Subset> prime_downs;
    for (const Subset& J : frame)
        if (prime_in_frame(frame, J)) prime_downs.push_back(image_downset(J, target, phi));
    ContactExtensionReport out{Relation::empty(n), std::move(bprime), 0, 0};
    auto ll = [&](EIdx x, EIdx y) {
        if (out.target_bounded[x]) {
            ++out.case1_pairs;
            return bounded_ll(x, y);
        }
        ++out.case2_pairs;
        for (const Subset& dj : prime_downs) {
            bool witnessed = false;
            for (EIdx e = 0; e < n && !witnessed; ++e)
                if (out.target_bounded[e] && !dj[e] &&
                    (bounded_ll(e, target.complement(x)) || bounded_ll(e, y)))
                    witnessed = true;
            if (!witnessed) return false;
        }
        return true;
    };
    for (EIdx x = 0; x < n; ++x)
        for (EIdx y = 0; y < n; ++y)
            if (!ll(x, target.complement(y)))
                out.eta.bits[static_cast<std::size_t>(x) * n + y] = true;
    return out;
}

}  // namespace locba
