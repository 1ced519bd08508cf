#include "locba/pseudolat.hpp"

#include <algorithm>

namespace locba {

std::optional<EIdx> Pseudolat::index_of_code(Mask c) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
    if (it == codes_.end() || *it != c) return std::nullopt;
    return static_cast<EIdx>(it - codes_.begin());
}

void Pseudolat::finalize() {
    const std::size_t n = codes_.size();
    if (n == 0) throw Error::validation("empty carrier");
    if (names_.empty())
        for (Mask c : codes_) names_.push_back(std::to_string(c));

    auto idx = [&](EIdx a, EIdx b) { return a * n + b; };
    // commutativity is structural in the tables
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b) {
            if (meet_[idx(a, b)] != meet_[idx(b, a)])
                throw Error::validation("pseudolattice law broken: commutativity(meet)");
            if (join_[idx(a, b)] != join_[idx(b, a)])
                throw Error::validation("pseudolattice law broken: commutativity(join)");
        }
    for (EIdx a = 0; a < n; ++a) {
        if (meet_[idx(a, a)] != a)
            throw Error::validation("pseudolattice law broken: idempotence(meet)");
        if (join_[idx(a, a)] != a)
            throw Error::validation("pseudolattice law broken: idempotence(join)");
    }
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b) {
            if (meet_[idx(a, join_[idx(a, b)])] != a)
                throw Error::validation("pseudolattice law broken: absorption");
            if (join_[idx(a, meet_[idx(a, b)])] != a)
                throw Error::validation("pseudolattice law broken: absorption");
        }
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b)
            for (EIdx c = 0; c < n; ++c) {
                if (meet_[idx(a, meet_[idx(b, c)])] != meet_[idx(meet_[idx(a, b)], c)])
                    throw Error::validation("pseudolattice law broken: associativity(meet)");
                if (join_[idx(a, join_[idx(b, c)])] != join_[idx(join_[idx(a, b)], c)])
                    throw Error::validation("pseudolattice law broken: associativity(join)");
                if (meet_[idx(a, join_[idx(b, c)])] !=
                    join_[idx(meet_[idx(a, b)], meet_[idx(a, c)])])
                    throw Error::validation("pseudolattice law broken: distributivity");
            }

    // bottom and top exist in a finite lattice: fold the ops
    EIdx z = 0, o = 0;
    for (EIdx a = 1; a < n; ++a) {
        z = meet_[idx(z, a)];
        o = join_[idx(o, a)];
    }
    zero_ = z;
    one_ = o;
    for (EIdx a = 0; a < n; ++a) {
        if (meet_[idx(zero_, a)] != zero_)
            throw Error::validation("pseudolattice law broken: 0 not bottom");
        if (join_[idx(one_, a)] != one_)
            throw Error::validation("pseudolattice law broken: top not top");
    }
}

Pseudolat Pseudolat::from_boolalg(const BoolAlg& A) {
    Pseudolat P;
    const std::size_t n = A.size();
    for (EIdx i = 0; i < n; ++i) {
        P.codes_.push_back(A.code(i));
        P.names_.push_back(A.elem_name(i));
    }
    P.meet_.resize(n * n);
    P.join_.resize(n * n);
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b) {
            P.meet_[a * n + b] = A.meet(a, b);
            P.join_[a * n + b] = A.join(a, b);
        }
    P.finalize();
    return P;
}

Pseudolat Pseudolat::chain(unsigned n) {
    if (n == 0) throw Error::validation("chain needs at least one level");
    if (n > BoolAlg::kMaxTableSize) throw Error::scope("chain length exceeds table cap");
    Pseudolat P;
    for (unsigned i = 0; i < n; ++i) {
        P.codes_.push_back(i);
        P.names_.push_back(std::to_string(i));
    }
    P.meet_.resize(std::size_t{n} * n);
    P.join_.resize(std::size_t{n} * n);
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b) {
            P.meet_[a * n + b] = std::min(a, b);
            P.join_[a * n + b] = std::max(a, b);
        }
    P.finalize();
    return P;
}

Pseudolat Pseudolat::from_ideal(const BoolAlg& A, const Subset& ideal) {
    if (!is_ideal(A, ideal)) throw Error::validation("subset is not an ideal");
    std::vector<EIdx> members = subset_members(ideal);
    Pseudolat P;
    std::vector<EIdx> local(A.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        local[members[i]] = static_cast<EIdx>(i);
        P.codes_.push_back(A.code(members[i]));
        P.names_.push_back(A.elem_name(members[i]));
    }
    const std::size_t n = members.size();
    P.meet_.resize(n * n);
    P.join_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // ideals are closed under meet (downward) and join
            P.meet_[a * n + b] = local[A.meet(members[a], members[b])];
            P.join_[a * n + b] = local[A.join(members[a], members[b])];
        }
    P.finalize();
    return P;
}

Pseudolat Pseudolat::from_ops(std::vector<Mask> carrier,
                              const std::function<Mask(Mask, Mask)>& meet_op,
                              const std::function<Mask(Mask, Mask)>& join_op) {
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    if (carrier.size() > BoolAlg::kMaxTableSize)
        throw Error::scope("carrier exceeds table cap");
    Pseudolat P;
    P.codes_ = carrier;
    const std::size_t n = carrier.size();
    auto locate = [&](Mask c, const char* op) -> EIdx {
        auto it = std::lower_bound(carrier.begin(), carrier.end(), c);
        if (it == carrier.end() || *it != c)
            throw Error::validation(std::string("carrier not closed under ") + op);
        return static_cast<EIdx>(it - carrier.begin());
    };
    P.meet_.resize(n * n);
    P.join_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            P.meet_[a * n + b] = locate(meet_op(carrier[a], carrier[b]), "meet");
            P.join_[a * n + b] = locate(join_op(carrier[a], carrier[b]), "join");
        }
    P.finalize();
    return P;
}

// --- ideal-lattice operations -------------------------------------------

Subset pseudocomplement(const Pseudolat& P, const Subset& J) {
    if (!is_ideal(P, J)) throw Error::validation("subset is not an ideal");
    Subset out(P.size(), false);
    for (EIdx a = 0; a < P.size(); ++a) {
        bool disjoint = true;
        for (EIdx b = 0; b < P.size() && disjoint; ++b)
            if (J[b] && P.meet(a, b) != P.zero()) disjoint = false;
        out[a] = disjoint;
    }
    if (!is_ideal(P, out))
        throw Error::validation("internal: pseudocomplement is not an ideal");
    return out;
}

Subset ideal_lattice_join(const Pseudolat& P, const Subset& J1, const Subset& J2) {
    std::vector<EIdx> gens = subset_members(J1);
    for (EIdx m : subset_members(J2)) gens.push_back(m);
    return ideal_generated_by(P, gens);
}

bool is_simple(const Pseudolat& P, const Subset& J) {
    Subset join = ideal_lattice_join(P, J, pseudocomplement(P, J));
    return subset_count(join) == P.size();
}

std::vector<IdxMask> simple_ideals(const Pseudolat& P) {
    std::vector<IdxMask> out;
    for (IdxMask m : enumerate_ideal_masks(P))
        if (is_simple(P, subset_from_mask(P.size(), m))) out.push_back(m);
    return out;
}

SiAlgebra si_algebra(const Pseudolat& P) {
    std::vector<IdxMask> simples = simple_ideals(P);
    auto find = [&](IdxMask m, const char* what) -> IdxMask {
        if (!std::binary_search(simples.begin(), simples.end(), m))
            throw Error::validation(std::string("internal: simple ideals not closed under ") + what);
        return m;
    };
    const std::size_t n = P.size();
    auto meet_op = [&, n](Mask a, Mask b) {
        return static_cast<Mask>(find(static_cast<IdxMask>(a) & static_cast<IdxMask>(b),
                                      "intersection"));
    };
    auto join_op = [&, n](Mask a, Mask b) {
        Subset j = ideal_lattice_join(P, subset_from_mask(n, static_cast<IdxMask>(a)),
                                      subset_from_mask(n, static_cast<IdxMask>(b)));
        return static_cast<Mask>(find(mask_from_subset(j), "ideal join"));
    };
    auto compl_op = [&, n](Mask a) {
        Subset c = pseudocomplement(P, subset_from_mask(n, static_cast<IdxMask>(a)));
        return static_cast<Mask>(find(mask_from_subset(c), "pseudocomplement"));
    };
    std::vector<Mask> carrier(simples.begin(), simples.end());
    BoolAlg alg = BoolAlg::from_ops(carrier, meet_op, join_op, compl_op,
                                    static_cast<unsigned>(n));
    if (auto v = boolean_law_violation(alg))
        throw Error::validation("internal: simple-ideal algebra breaks " + v->law);
    return SiAlgebra{std::move(alg), std::move(simples)};
}

// --- GBPL ----------------------------------------------------------------

GbplReport is_gbpl(const Pseudolat& P) {
    GbplReport rep;
    for (EIdx a = 0; a < P.size() && rep.gbpl; ++a)
        for (EIdx b = 0; b < P.size() && rep.gbpl; ++b) {
            if (!P.leq(b, a)) continue;
            for (EIdx c = 0; c < P.size() && rep.gbpl; ++c) {
                if (!P.leq(a, c)) continue;
                bool found = false;
                for (EIdx x = 0; x < P.size() && !found; ++x)
                    if (P.meet(a, x) == b && P.join(a, x) == c) found = true;
                if (!found) {
                    rep.gbpl = false;
                    rep.has_witness = true;
                    rep.a = a;
                    rep.b = b;
                    rep.c = c;
                }
            }
        }
    // cross-check: every principal ideal simple
    bool all_principal_simple = true;
    for (EIdx g = 0; g < P.size() && all_principal_simple; ++g)
        if (!is_simple(P, downset_of(P, g))) all_principal_simple = false;
    if (all_principal_simple != rep.gbpl)
        throw Error::validation("internal: GBPL criteria disagree");
    return rep;
}

// --- the e embedding -----------------------------------------------------

EmbedE embed_e(const Pseudolat& P) {
    GbplReport g = is_gbpl(P);
    if (!g.gbpl)
        throw Error::validation("not a GBPL: element " + P.elem_name(g.a) +
                                " has no relative complement in [" + P.elem_name(g.b) +
                                ", " + P.elem_name(g.c) + "]");
    EmbedE out{si_algebra(P), {}, true, true, false, false};
    const BoolAlg& si = out.si.algebra;
    for (EIdx a = 0; a < P.size(); ++a) {
        IdxMask down = mask_from_subset(downset_of(P, a));
        auto it = si.index_of_code(static_cast<Mask>(down));
        if (!it) throw Error::validation("internal: principal ideal not simple in a GBPL");
        out.map.push_back(*it);
    }
    // injectivity
    for (EIdx a = 0; a < P.size() && out.injective; ++a)
        for (EIdx b = a + 1; b < P.size() && out.injective; ++b)
            if (out.map[a] == out.map[b]) out.injective = false;
    // {0}-pseudolattice preservation: 0, meet, join
    if (out.map[P.zero()] != si.zero()) out.preserves_ops = false;
    for (EIdx a = 0; a < P.size() && out.preserves_ops; ++a)
        for (EIdx b = 0; b < P.size() && out.preserves_ops; ++b) {
            if (si.meet(out.map[a], out.map[b]) != out.map[P.meet(a, b)])
                out.preserves_ops = false;
            if (si.join(out.map[a], out.map[b]) != out.map[P.join(a, b)])
                out.preserves_ops = false;
        }
    Subset image(si.size(), false);
    for (EIdx m : out.map) image[m] = true;
    out.dense_image = dense_subset_check(si, image).dense;
    out.image_is_ideal = is_ideal(si, image);
    return out;
}

// --- B_A(I) --------------------------------------------------------------

BofResult b_of(const BoolAlg& A, const Subset& I) {
    if (!is_ideal(A, I)) throw Error::validation("subset is not an ideal");
    if (subset_count(I) == A.size())
        throw Error::validation("ideal must be proper for this construction");
    Subset members(A.size(), false);
    for (EIdx a = 0; a < A.size(); ++a)
        if (I[a]) {
            members[a] = true;
            members[A.complement(a)] = true;
        }
    std::vector<EIdx> back;
    std::vector<EIdx> mem = subset_members(members);
    BoolAlg sub = subalgebra_as_algebra(A, mem, &back);
    Subset ideal_in_sub(sub.size(), false);
    for (EIdx i = 0; i < sub.size(); ++i)
        if (I[back[i]]) ideal_in_sub[i] = true;
    if (!is_ideal(sub, ideal_in_sub))
        throw Error::validation("internal: I fails to be an ideal of B_A(I)");
    // primality: proper, and every element or its complement lies in I
    bool prime = subset_count(ideal_in_sub) < sub.size();
    for (EIdx i = 0; i < sub.size() && prime; ++i)
        if (!ideal_in_sub[i] && !ideal_in_sub[sub.complement(i)]) prime = false;
    return BofResult{std::move(sub), std::move(mem), std::move(ideal_in_sub), prime};
}

// --- Sigma ---------------------------------------------------------------

SigmaZlba sigma_zlba(const BoolAlg& B, const Subset& I) {
    if (!is_ideal(B, I)) throw Error::validation("subset is not an ideal");
    DensityReport d = dense_subset_check(B, I);
    if (!d.dense)
        throw Error::validation("ideal is not dense: no nonzero minorant for " +
                                B.elem_name(d.witness));
    SiAlgebra si = si_algebra(Pseudolat::from_ideal(B, I));
    std::vector<EIdx> members = subset_members(I);
    std::vector<EIdx> map;
    for (IdxMask m : si.members) {
        // the join of the ideal's members, taken in B
        std::vector<EIdx> in_b;
        Subset s = subset_from_mask(members.size(), m);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i]) in_b.push_back(members[i]);
        map.push_back(B.join_all(in_b));
    }
    BoolHom hom{si.algebra, B, std::move(map)};
    HomReport rep = hom_check(hom);
    bool bij = rep.ok && rep.injective && rep.surjective;
    return SigmaZlba{std::move(si), std::move(hom), rep, bij};
}

}  // namespace locba
