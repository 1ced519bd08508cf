#include "locba/contact.hpp"

#include <algorithm>

#include "locba/lba.hpp"

namespace locba {

namespace {

void require_contact_size(const BoolAlg& A) {
    if (A.size() > kMaxContactSize)
        throw Error::scope("algebra size " + std::to_string(A.size()) +
                           " exceeds contact cap " + std::to_string(kMaxContactSize));
}

}  // namespace

Relation Relation::empty(EIdx n) {
    Relation r;
    r.n = n;
    r.bits.assign(static_cast<std::size_t>(n) * n, false);
    return r;
}

void Relation::set_pair(EIdx a, EIdx b, bool v) {
    bits[static_cast<std::size_t>(a) * n + b] = v;
    bits[static_cast<std::size_t>(b) * n + a] = v;
}

std::size_t Relation::pair_count() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

bool well_inside(const ContactTriple& T, EIdx a, EIdx b) {
    return !T.rho.at(a, T.algebra.complement(b));
}

Relation overlap_relation(const BoolAlg& A) {
    require_contact_size(A);
    Relation r = Relation::empty(static_cast<EIdx>(A.size()));
    for (EIdx a = 0; a < A.size(); ++a)
        for (EIdx b = a; b < A.size(); ++b)
            if (A.meet(a, b) != A.zero()) r.set_pair(a, b, true);
    return r;
}

ContactTriple triple_from_atom_relation(const BoolAlg& A,
                                        const std::vector<std::pair<unsigned, unsigned>>& pairs,
                                        const Subset& bounded) {
    require_contact_size(A);
    if (bounded.size() != A.size())
        throw Error::validation("bounded set size does not match the algebra");
    const unsigned k = A.atom_count();
    // reflexive symmetric closure on atoms
    std::vector<bool> R(static_cast<std::size_t>(k) * k, false);
    for (unsigned x = 0; x < k; ++x) R[static_cast<std::size_t>(x) * k + x] = true;
    for (auto [x, y] : pairs) {
        if (x >= k || y >= k)
            throw Error::validation("atom index " + std::to_string(std::max(x, y)) +
                                    " out of range");
        R[static_cast<std::size_t>(x) * k + y] = true;
        R[static_cast<std::size_t>(y) * k + x] = true;
    }
    std::vector<EIdx> atom = A.atoms();
    Relation rho = Relation::empty(static_cast<EIdx>(A.size()));
    for (EIdx a = 0; a < A.size(); ++a)
        for (EIdx b = a; b < A.size(); ++b) {
            bool hit = false;
            for (unsigned x = 0; x < k && !hit; ++x) {
                if (!A.leq(atom[x], a)) continue;
                for (unsigned y = 0; y < k && !hit; ++y)
                    if (A.leq(atom[y], b) && R[static_cast<std::size_t>(x) * k + y]) hit = true;
            }
            if (hit) rho.set_pair(a, b, true);
        }
    return ContactTriple{A, std::move(rho), bounded};
}

AxiomReport check_axioms(const ContactTriple& T) {
    const BoolAlg& A = T.algebra;
    require_contact_size(A);
    if (T.rho.n != A.size()) throw Error::validation("relation size does not match the algebra");
    if (T.bounded.size() != A.size())
        throw Error::validation("bounded set size does not match the algebra");
    const EIdx n = static_cast<EIdx>(A.size());
    AxiomReport r;
    auto fail = [&](std::string name, EIdx a, EIdx b, std::optional<EIdx> c = std::nullopt) {
        for (const AxiomWitness& w : r.violations)
            if (w.axiom == name) return;  // first witness per axiom
        AxiomWitness w{std::move(name), a, b, c.value_or(0), c.has_value()};
        r.violations.push_back(std::move(w));
    };

    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b) {
            if (T.rho.at(a, b) && (a == A.zero() || b == A.zero())) fail("C1", a, b);
            if (T.rho.at(a, b) != T.rho.at(b, a)) fail("C2", a, b);
            if (A.meet(a, b) != A.zero() && !T.rho.at(a, b)) fail("C4", a, b);
        }
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b)
            for (EIdx c = 0; c < n; ++c)
                if (T.rho.at(a, A.join(b, c)) != (T.rho.at(a, b) || T.rho.at(a, c))) {
                    fail("C3", a, b, c);
                    b = c = n - 1;  // one witness is enough
                }
    bool c14 = r.violations.empty();
    r.contact = c14;

    auto ll = [&](EIdx a, EIdx b) { return well_inside(T, a, b); };

    if (r.contact) {
        // interpolation: a ≪ b admits a middle term
        for (EIdx a = 0; a < n; ++a)
            for (EIdx b = 0; b < n; ++b) {
                if (!ll(a, b)) continue;
                bool mid = false;
                for (EIdx c = 0; c < n && !mid; ++c)
                    if (ll(a, c) && ll(c, b)) mid = true;
                if (!mid) fail("C5", a, b);
            }
        // density of ≪: below any nonzero element sits a nonzero one well inside
        for (EIdx a = 0; a < n; ++a) {
            if (a == A.zero()) continue;
            bool found = false;
            for (EIdx b = 0; b < n && !found; ++b)
                if (b != A.zero() && ll(b, a)) found = true;
            if (!found) fail("C6", a, a);
        }
        bool c56 = true;
        for (const AxiomWitness& w : r.violations)
            if (w.axiom == "C5" || w.axiom == "C6") c56 = false;
        r.nca = c56;
    }

    bool lca_ok = r.contact;
    if (auto w = [&]() -> std::optional<EIdx> {
            if (!T.bounded[A.zero()]) return A.zero();
            for (EIdx a = 0; a < n; ++a) {
                if (!T.bounded[a]) continue;
                for (EIdx b = 0; b < n; ++b) {
                    if (b != a && A.leq(b, a) && !T.bounded[b]) return b;
                    if (T.bounded[b] && !T.bounded[A.join(a, b)]) return A.join(a, b);
                }
            }
            return std::nullopt;
        }()) {
        fail("bounded-not-ideal", *w, *w);
        lca_ok = false;
    }
    if (lca_ok) {
        for (EIdx a = 0; a < n && lca_ok; ++a) {
            if (!T.bounded[a]) continue;
            for (EIdx c = 0; c < n; ++c) {
                if (!ll(a, c)) continue;
                bool mid = false;
                for (EIdx b = 0; b < n && !mid; ++b)
                    if (T.bounded[b] && ll(a, b) && ll(b, c)) mid = true;
                if (!mid) {
                    fail("BC1", a, c);
                    lca_ok = false;
                    break;
                }
            }
        }
        for (EIdx a = 0; a < n && lca_ok; ++a)
            for (EIdx b = 0; b < n; ++b) {
                if (!T.rho.at(a, b)) continue;
                bool found = false;
                for (EIdx bp = 0; bp < n && !found; ++bp)
                    if (T.bounded[bp] && A.leq(bp, b) && T.rho.at(a, bp)) found = true;
                if (!found) {
                    fail("BC2", a, b);
                    lca_ok = false;
                    b = n - 1;
                }
            }
        for (EIdx a = 0; a < n && lca_ok; ++a) {
            if (a == A.zero()) continue;
            bool found = false;
            for (EIdx b = 0; b < n && !found; ++b)
                if (b != A.zero() && T.bounded[b] && ll(b, a)) found = true;
            if (!found) {
                fail("BC3", a, a);
                lca_ok = false;
            }
        }
    }
    r.lca = lca_ok;
    r.complete = true;  // finite algebras are complete
    r.clca = r.lca && r.complete;
    return r;
}

ContactTriple rho_s(const BoolAlg& A, const Subset& bounded) {
    PairClassification c = classify_pair(A, bounded);
    if (!c.local)
        throw Error::validation("overlap contact needs a local pair" +
                                (c.note.empty() ? std::string() : ": " + c.note));
    ContactTriple T{A, overlap_relation(A), bounded};
    AxiomReport rep = check_axioms(T);
    if (!rep.lca)
        throw Error::validation("internal: overlap contact failed axiom " +
                                (rep.violations.empty() ? std::string("?")
                                                        : rep.violations.front().axiom));
    return T;
}

ContactTriple contact_from_dense_subalgebra(const BoolAlg& A, const Subset& sub) {
    require_contact_size(A);
    if (sub.size() != A.size()) throw Error::validation("subset size does not match the algebra");
    if (!sub[A.zero()] || !sub[A.one()])
        throw Error::validation("subalgebra must contain 0 and 1");
    for (EIdx a = 0; a < A.size(); ++a) {
        if (!sub[a]) continue;
        if (!sub[A.complement(a)])
            throw Error::validation("not closed under complement at " + A.elem_name(a));
        for (EIdx b = 0; b < A.size(); ++b) {
            if (!sub[b]) continue;
            if (!sub[A.meet(a, b)] || !sub[A.join(a, b)])
                throw Error::validation("not closed under meet/join at " + A.elem_name(a) +
                                        ", " + A.elem_name(b));
        }
    }
    DensityReport d = dense_subset_check(A, sub);
    if (!d.dense)
        throw Error::validation("subalgebra is not dense; nothing below " +
                                A.elem_name(d.witness));

    const EIdx n = static_cast<EIdx>(A.size());
    auto separated = [&](EIdx a, EIdx b) {  // a ≪ b via a member between them
        for (EIdx c = 0; c < n; ++c)
            if (sub[c] && A.leq(a, c) && A.leq(c, b)) return true;
        return false;
    };
    Relation rho = Relation::empty(n);
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = a; b < n; ++b)
            if (!separated(a, A.complement(b))) rho.set_pair(a, b, true);
    ContactTriple T{A, std::move(rho), Subset(A.size(), true)};
    AxiomReport rep = check_axioms(T);
    if (!rep.nca)
        throw Error::validation("internal: induced contact failed axiom " +
                                (rep.violations.empty() ? std::string("?")
                                                        : rep.violations.front().axiom));
    if (a_s(T) != sub) throw Error::validation("internal: self-well-inside set is not the subalgebra");
    return T;
}

Subset a_s(const ContactTriple& T) {
    Subset s(T.algebra.size(), false);
    for (EIdx a = 0; a < T.algebra.size(); ++a)
        if (well_inside(T, a, a)) s[a] = true;
    return s;
}

namespace {

// Both base criteria; they provably agree on LCAs, and disagreement means
// the axiom checks and this search have drifted apart.
bool base_check(const ContactTriple& T, const std::vector<EIdx>& members) {
    const BoolAlg& A = T.algebra;
    const EIdx n = static_cast<EIdx>(A.size());
    bool sandwich = true, doubled = true;
    for (EIdx a = 0; a < n && (sandwich || doubled); ++a) {
        if (!T.bounded[a]) continue;
        for (EIdx c = 0; c < n; ++c) {
            if (!T.bounded[c] || !well_inside(T, a, c)) continue;
            bool s1 = false, s2 = false;
            for (EIdx b : members) {
                if (!s1 && A.leq(a, b) && A.leq(b, c)) s1 = true;
                if (!s2 && well_inside(T, a, b) && well_inside(T, b, c)) s2 = true;
                if (s1 && s2) break;
            }
            sandwich = sandwich && s1;
            doubled = doubled && s2;
            if (!sandwich && !doubled) break;
        }
    }
    if (sandwich != doubled)
        throw Error::validation("internal: base criteria disagree on a candidate");
    return sandwich;
}

void require_lca(const ContactTriple& T, const char* who) {
    AxiomReport rep = check_axioms(T);
    if (rep.lca) return;
    std::string axiom;  // name an axiom the LCA check actually needs
    for (const AxiomWitness& w : rep.violations)
        if (w.axiom != "C5" && w.axiom != "C6") {
            axiom = w.axiom;
            break;
        }
    throw Error::validation(std::string(who) + " needs a triple passing every axiom" +
                            (axiom.empty() ? std::string() : "; failed " + axiom));
}

}  // namespace

bool is_base(const ContactTriple& T, const Subset& candidate) {
    if (candidate.size() != T.algebra.size())
        throw Error::validation("candidate size does not match the algebra");
    for (EIdx a = 0; a < T.algebra.size(); ++a)
        if (candidate[a] && !T.bounded[a])
            throw Error::validation("base member " + T.algebra.elem_name(a) +
                                    " is outside the bounded ideal");
    require_lca(T, "is_base");
    return base_check(T, subset_members(candidate));
}

WeightResult weight(const ContactTriple& T) {
    require_lca(T, "weight");
    std::vector<EIdx> dd = subset_members(T.bounded);
    if (dd.size() > 16)
        throw Error::scope("bounded ideal has " + std::to_string(dd.size()) +
                           " elements; weight search cap is 16");
    const std::size_t m = dd.size();
    // increasing cardinality, lexicographic within it, over the bounded members
    for (std::size_t k = 0; k <= m; ++k) {
        std::vector<bool> pick(m, false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
        while (true) {
            std::vector<EIdx> cand;
            for (std::size_t i = 0; i < m; ++i)
                if (pick[i]) cand.push_back(dd[i]);
            if (base_check(T, cand)) return WeightResult{k, std::move(cand)};
            // previous permutation of the selector walks subsets in lex order
            if (!std::prev_permutation(pick.begin(), pick.end())) break;
        }
    }
    throw Error::validation("internal: the whole bounded ideal failed to be a base");
}

ContactTriple product(const std::vector<ContactTriple>& factors) {
    BoolAlg triv = BoolAlg::powerset(0);
    ContactTriple acc{std::move(triv), Relation::empty(1), Subset(1, true)};
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
        const ContactTriple& F = factors[fi];
        AxiomReport rep = check_axioms(F);
        if (!rep.lca)
            throw Error::validation("product factor " + std::to_string(fi) +
                                    " fails axiom " +
                                    (rep.violations.empty() ? std::string("?")
                                                            : rep.violations.front().axiom));
        const BoolAlg& A1 = acc.algebra;
        const BoolAlg& A2 = F.algebra;
        BoolAlg prod = [&]() {
            if (A1.ground_bits() + A2.ground_bits() > 16)
                throw Error::scope("product ground exceeds 16 bits");
            if (A1.kind() == BoolAlg::Kind::powerset && A2.kind() == BoolAlg::Kind::powerset)
                return BoolAlg::powerset(A1.atom_count() + A2.atom_count());
            if (A1.size() > BoolAlg::kMaxTableSize / A2.size())
                throw Error::scope("product size exceeds cap " +
                                   std::to_string(BoolAlg::kMaxTableSize));
            unsigned g1 = A1.ground_bits();
            std::vector<Mask> carrier;
            carrier.reserve(A1.size() * A2.size());
            for (EIdx i = 0; i < A1.size(); ++i)
                for (EIdx j = 0; j < A2.size(); ++j)
                    carrier.push_back(A1.code(i) | (A2.code(j) << g1));
            auto lo = [&](Mask x) { return x & ((Mask{1} << g1) - 1); };
            auto coordwise = [&](auto op1, auto op2) {
                return [&, op1, op2](Mask x, Mask y) {
                    EIdx x1 = *A1.index_of_code(lo(x)), y1 = *A1.index_of_code(lo(y));
                    EIdx x2 = *A2.index_of_code(x >> g1), y2 = *A2.index_of_code(y >> g1);
                    return A1.code((A1.*op1)(x1, y1)) | (A2.code((A2.*op2)(x2, y2)) << g1);
                };
            };
            auto cp = [&](Mask x) {
                EIdx x1 = *A1.index_of_code(lo(x)), x2 = *A2.index_of_code(x >> g1);
                return A1.code(A1.complement(x1)) | (A2.code(A2.complement(x2)) << g1);
            };
            return BoolAlg::from_ops(carrier, coordwise(&BoolAlg::meet, &BoolAlg::meet),
                                     coordwise(&BoolAlg::join, &BoolAlg::join), cp,
                                     g1 + A2.ground_bits());
        }();
        require_contact_size(prod);
        unsigned g1 = A1.ground_bits();
        auto split = [&](EIdx p) {
            Mask c = prod.code(p);
            return std::pair<EIdx, EIdx>{*A1.index_of_code(c & ((Mask{1} << g1) - 1)),
                                         *A2.index_of_code(c >> g1)};
        };
        Relation rho = Relation::empty(static_cast<EIdx>(prod.size()));
        Subset bounded(prod.size(), false);
        for (EIdx p = 0; p < prod.size(); ++p) {
            auto [p1, p2] = split(p);
            bounded[p] = acc.bounded[p1] && F.bounded[p2];
            for (EIdx q = p; q < prod.size(); ++q) {
                auto [q1, q2] = split(q);
                if (acc.rho.at(p1, q1) || F.rho.at(p2, q2)) rho.set_pair(p, q, true);
            }
        }
        acc = ContactTriple{std::move(prod), std::move(rho), std::move(bounded)};
    }
    require_lca(acc, "product result (internal)");
    return acc;
}

Relation alexandroff_extension(const ContactTriple& T) {
    Relation C = T.rho;
    for (EIdx a = 0; a < T.algebra.size(); ++a) {
        if (T.bounded[a]) continue;
        for (EIdx b = 0; b < T.algebra.size(); ++b)
            if (!T.bounded[b]) C.set_pair(a, b, true);
    }
    return C;
}

Subset sigma_of_ultrafilter(const ContactTriple& T, const Subset& u) {
    Relation C = alexandroff_extension(T);
    Subset sigma(T.algebra.size(), false);
    for (EIdx a = 0; a < T.algebra.size(); ++a) {
        bool all = true;
        for (EIdx b = 0; b < T.algebra.size() && all; ++b)
            if (u[b] && !C.at(a, b)) all = false;
        sigma[a] = all;
    }
    return sigma;
}

std::optional<std::string> cluster_violation(const ContactTriple& T, const Subset& sigma) {
    const BoolAlg& A = T.algebra;
    Relation C = alexandroff_extension(T);
    const EIdx n = static_cast<EIdx>(A.size());
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b) {
            if (sigma[a] && sigma[b] && !C.at(a, b)) return "K1";
            if (sigma[A.join(a, b)] && !sigma[a] && !sigma[b]) return "K2";
        }
    for (EIdx a = 0; a < n; ++a) {
        if (sigma[a]) continue;
        bool all = true;
        for (EIdx b = 0; b < n && all; ++b)
            if (sigma[b] && !C.at(a, b)) all = false;
        if (all) return "K3";
    }
    return std::nullopt;
}

std::vector<Cluster> clusters(const ContactTriple& T) {
    const BoolAlg& A = T.algebra;
    if (A.size() > 16)
        throw Error::scope("cluster scan supports at most 16 elements, got " +
                           std::to_string(A.size()));
    std::vector<Cluster> out;
    const IdxMask all = (IdxMask{1} << A.size()) - 1;
    for (IdxMask m = 0; m <= all; ++m) {
        Subset sigma = subset_from_mask(A.size(), m);
        if (cluster_violation(T, sigma)) continue;
        bool bnd = false;
        for (EIdx a = 0; a < A.size(); ++a)
            if (sigma[a] && T.bounded[a]) bnd = true;
        out.push_back(Cluster{std::move(sigma), bnd});
    }
    // candidates from ultrafilters always reappear in the exhaustive scan
    for (const Subset& u : ultrafilters(A)) {
        Subset s = sigma_of_ultrafilter(T, u);
        if (cluster_violation(T, s)) continue;
        bool found = false;
        for (const Cluster& c : out)
            if (c.members == s) found = true;
        if (!found) throw Error::validation("internal: ultrafilter cluster missed by the scan");
    }
    return out;
}

std::vector<Cluster> bounded_clusters(const ContactTriple& T) {
    std::vector<Cluster> out;
    for (Cluster& c : clusters(T))
        if (c.bounded) out.push_back(std::move(c));
    return out;
}

}  // namespace locba
