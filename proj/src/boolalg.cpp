#include "locba/boolalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace locba {

// --- construction --------------------------------------------------------

BoolAlg BoolAlg::powerset(unsigned atom_count) {
    if (atom_count > kMaxAtoms)
        throw Error::scope("powerset atom count " + std::to_string(atom_count) +
                           " exceeds cap " + std::to_string(kMaxAtoms));
    BoolAlg A;
    A.kind_ = Kind::powerset;
    A.pow_atoms_ = atom_count;
    A.ground_bits_ = atom_count;
    A.zero_ = 0;
    A.one_ = static_cast<EIdx>((Mask{1} << atom_count) - 1);
    A.atoms_.resize(atom_count);
    for (unsigned i = 0; i < atom_count; ++i) A.atoms_[i] = EIdx{1} << i;
    return A;
}

BoolAlg BoolAlg::from_ops(std::vector<Mask> carrier,
                          const std::function<Mask(Mask, Mask)>& meet_op,
                          const std::function<Mask(Mask, Mask)>& join_op,
                          const std::function<Mask(Mask)>& compl_op,
                          unsigned ground_bits) {
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    if (carrier.empty()) throw Error::validation("algebra carrier is empty");
    if (carrier.size() > kMaxTableSize)
        throw Error::scope("table algebra carrier size " + std::to_string(carrier.size()) +
                           " exceeds cap " + std::to_string(kMaxTableSize));

    BoolAlg A;
    A.kind_ = Kind::table;
    A.ground_bits_ = ground_bits;
    A.carrier_ = carrier;
    const std::size_t n = carrier.size();

    auto locate = [&](Mask m, const char* op) -> EIdx {
        auto it = std::lower_bound(carrier.begin(), carrier.end(), m);
        if (it == carrier.end() || *it != m)
            throw Error::validation(std::string("carrier not closed under ") + op);
        return static_cast<EIdx>(it - carrier.begin());
    };

    A.meet_.resize(n * n);
    A.join_.resize(n * n);
    A.compl_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        A.compl_[i] = locate(compl_op(carrier[i]), "complement");
        for (std::size_t j = 0; j < n; ++j) {
            A.meet_[i * n + j] = locate(meet_op(carrier[i], carrier[j]), "meet");
            A.join_[i * n + j] = locate(join_op(carrier[i], carrier[j]), "join");
        }
    }

    // Bounds: fold the whole carrier.
    EIdx z = 0, o = 0;
    for (std::size_t i = 1; i < n; ++i) {
        z = A.meet_[z * n + i];
        o = A.join_[o * n + i];
    }
    A.zero_ = z;
    A.one_ = o;
    A.compute_atoms();
    return A;
}

void BoolAlg::compute_atoms() {
    atoms_.clear();
    for (EIdx a = 0; a < size(); ++a) {
        if (a == zero_) continue;
        bool minimal = true;
        for (EIdx b = 0; b < size() && minimal; ++b) {
            if (b == zero_ || b == a) continue;
            if (leq(b, a)) minimal = false;
        }
        if (minimal) atoms_.push_back(a);
    }
}

// --- ops -----------------------------------------------------------------

std::size_t BoolAlg::size() const {
    if (kind_ == Kind::powerset) return std::size_t{1} << pow_atoms_;
    return carrier_.size();
}

EIdx BoolAlg::meet(EIdx a, EIdx b) const {
    if (kind_ == Kind::powerset) return a & b;
    return meet_[static_cast<std::size_t>(a) * carrier_.size() + b];
}

EIdx BoolAlg::join(EIdx a, EIdx b) const {
    if (kind_ == Kind::powerset) return a | b;
    return join_[static_cast<std::size_t>(a) * carrier_.size() + b];
}

EIdx BoolAlg::complement(EIdx a) const {
    if (kind_ == Kind::powerset) return one_ & ~a;
    return compl_[a];
}

std::vector<unsigned> BoolAlg::atoms_below(EIdx a) const {
    std::vector<unsigned> out;
    for (unsigned k = 0; k < atoms_.size(); ++k)
        if (leq(atoms_[k], a)) out.push_back(k);
    return out;
}

Mask BoolAlg::code(EIdx a) const {
    if (kind_ == Kind::powerset) return a;
    return carrier_.at(a);
}

std::optional<EIdx> BoolAlg::index_of_code(Mask m) const {
    if (kind_ == Kind::powerset) {
        if (m >= size()) return std::nullopt;
        return static_cast<EIdx>(m);
    }
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), m);
    if (it == carrier_.end() || *it != m) return std::nullopt;
    return static_cast<EIdx>(it - carrier_.begin());
}

std::string BoolAlg::elem_name(EIdx a) const {
    if (a == zero_) return "0";
    if (a == one_) return "1";
    Mask m = code(a);
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (unsigned i = 0; i < 64; ++i) {
        if (m & (Mask{1} << i)) {
            if (!first) os << ',';
            os << i;
            first = false;
        }
    }
    os << '}';
    return os.str();
}

EIdx BoolAlg::join_all(const std::vector<EIdx>& xs) const {
    EIdx r = zero_;
    for (EIdx x : xs) r = join(r, x);
    return r;
}

EIdx BoolAlg::meet_all(const std::vector<EIdx>& xs) const {
    EIdx r = one_;
    for (EIdx x : xs) r = meet(r, x);
    return r;
}

bool BoolAlg::operator==(const BoolAlg& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::powerset) return pow_atoms_ == o.pow_atoms_;
    return carrier_ == o.carrier_ && meet_ == o.meet_ && join_ == o.join_ &&
           compl_ == o.compl_;
}

// --- law verification ----------------------------------------------------

std::optional<LawViolation> boolean_law_violation(const BoolAlg& A) {
    const EIdx n = static_cast<EIdx>(A.size());
    const EIdx z = A.zero(), o = A.one();
    for (EIdx a = 0; a < n; ++a) {
        if (A.meet(a, o) != a) return LawViolation{"identity(meet with 1)", a, o, 0};
        if (A.join(a, z) != a) return LawViolation{"identity(join with 0)", a, z, 0};
        if (A.meet(a, A.complement(a)) != z) return LawViolation{"complement(meet)", a, A.complement(a), 0};
        if (A.join(a, A.complement(a)) != o) return LawViolation{"complement(join)", a, A.complement(a), 0};
        if (A.complement(A.complement(a)) != a) return LawViolation{"involution", a, 0, 0};
    }
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b) {
            if (A.meet(a, b) != A.meet(b, a)) return LawViolation{"commutativity(meet)", a, b, 0};
            if (A.join(a, b) != A.join(b, a)) return LawViolation{"commutativity(join)", a, b, 0};
            if (A.meet(a, A.join(a, b)) != a) return LawViolation{"absorption(meet-join)", a, b, 0};
            if (A.join(a, A.meet(a, b)) != a) return LawViolation{"absorption(join-meet)", a, b, 0};
            if (A.complement(A.meet(a, b)) != A.join(A.complement(a), A.complement(b)))
                return LawViolation{"de-morgan(meet)", a, b, 0};
            if (A.complement(A.join(a, b)) != A.meet(A.complement(a), A.complement(b)))
                return LawViolation{"de-morgan(join)", a, b, 0};
        }
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b)
            for (EIdx c = 0; c < n; ++c) {
                if (A.meet(A.meet(a, b), c) != A.meet(a, A.meet(b, c)))
                    return LawViolation{"associativity(meet)", a, b, c};
                if (A.join(A.join(a, b), c) != A.join(a, A.join(b, c)))
                    return LawViolation{"associativity(join)", a, b, c};
                if (A.meet(a, A.join(b, c)) != A.join(A.meet(a, b), A.meet(a, c)))
                    return LawViolation{"distributivity(meet over join)", a, b, c};
                if (A.join(a, A.meet(b, c)) != A.meet(A.join(a, b), A.join(a, c)))
                    return LawViolation{"distributivity(join over meet)", a, b, c};
            }
    return std::nullopt;
}

// --- homomorphisms -------------------------------------------------------

HomReport hom_check(const BoolHom& h) {
    HomReport r;
    const BoolAlg& A = h.src;
    const BoolAlg& B = h.dst;
    if (h.map.size() != A.size()) throw Error::validation("hom map size does not match source carrier");
    for (EIdx v : h.map)
        if (v >= B.size()) throw Error::validation("hom map image out of target range");

    auto fail = [&](const std::string& law, EIdx a, EIdx b) {
        r.ok = false;
        r.violated_law = law;
        r.a = a;
        r.b = b;
    };

    if (h.map[A.zero()] != B.zero()) {
        fail("preserve-zero", A.zero(), 0);
    } else if (h.map[A.one()] != B.one()) {
        fail("preserve-one", A.one(), 0);
    } else {
        for (EIdx a = 0; r.ok && a < A.size(); ++a)
            if (h.map[A.complement(a)] != B.complement(h.map[a])) fail("preserve-compl", a, 0);
        for (EIdx a = 0; r.ok && a < A.size(); ++a)
            for (EIdx b = 0; r.ok && b < A.size(); ++b) {
                if (h.map[A.meet(a, b)] != B.meet(h.map[a], h.map[b])) {
                    fail("preserve-meet", a, b);
                } else if (h.map[A.join(a, b)] != B.join(h.map[a], h.map[b])) {
                    fail("preserve-join", a, b);
                }
            }
    }

    std::vector<bool> hit(B.size(), false);
    bool inj = true;
    for (EIdx a = 0; a < A.size(); ++a) {
        if (hit[h.map[a]]) inj = false;
        hit[h.map[a]] = true;
    }
    r.injective = inj;
    r.surjective = std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
    return r;
}

BoolHom hom_compose(const BoolHom& g, const BoolHom& f) {
    if (!(f.dst == g.src)) throw Error::validation("hom composition endpoint mismatch");
    BoolHom h{f.src, g.dst, {}};
    h.map.resize(f.src.size());
    for (EIdx a = 0; a < f.src.size(); ++a) h.map[a] = g.map[f.map[a]];
    return h;
}

BoolHom hom_identity(const BoolAlg& A) {
    BoolHom h{A, A, {}};
    h.map.resize(A.size());
    std::iota(h.map.begin(), h.map.end(), 0);
    return h;
}

BoolHom hom_from_atom_images(const BoolAlg& src, const BoolAlg& dst,
                             const std::vector<EIdx>& pattern) {
    if (pattern.size() != src.atom_count())
        throw Error::validation("atom image pattern size mismatch");
    BoolHom h{src, dst, {}};
    h.map.resize(src.size());
    for (EIdx a = 0; a < src.size(); ++a) {
        EIdx img = dst.zero();
        for (unsigned k : src.atoms_below(a)) img = dst.join(img, pattern[k]);
        h.map[a] = img;
    }
    return h;
}

std::optional<BoolHom> find_isomorphism(
    const BoolAlg& A, const BoolAlg& B,
    const std::function<bool(const BoolHom&)>& accept) {
    if (A.size() != B.size()) return std::nullopt;
    if (A.atom_count() != B.atom_count()) return std::nullopt;
    const unsigned k = A.atom_count();
    if (k == 0) {
        BoolHom h{A, B, std::vector<EIdx>(A.size(), B.zero())};
        // trivial algebras: the only map
        if (A.size() == 1 && (!accept || accept(h))) return h;
        return std::nullopt;
    }
    std::vector<unsigned> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<EIdx> pattern(k);
        for (unsigned i = 0; i < k; ++i) pattern[i] = B.atoms()[perm[i]];
        BoolHom h = hom_from_atom_images(A, B, pattern);
        HomReport rep = hom_check(h);
        if (rep.ok && rep.injective && rep.surjective && (!accept || accept(h)))
            return h;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::vector<EIdx> generated_subalgebra(const BoolAlg& A, const std::vector<EIdx>& gens) {
    std::vector<bool> in(A.size(), false);
    in[A.zero()] = true;
    in[A.one()] = true;
    for (EIdx g : gens) {
        if (g >= A.size()) throw Error::validation("generator out of range");
        in[g] = true;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<EIdx> cur;
        for (EIdx a = 0; a < A.size(); ++a)
            if (in[a]) cur.push_back(a);
        for (EIdx a : cur) {
            EIdx ca = A.complement(a);
            if (!in[ca]) { in[ca] = true; grew = true; }
            for (EIdx b : cur) {
                EIdx m = A.meet(a, b), j = A.join(a, b);
                if (!in[m]) { in[m] = true; grew = true; }
                if (!in[j]) { in[j] = true; grew = true; }
            }
        }
    }
    std::vector<EIdx> out;
    for (EIdx a = 0; a < A.size(); ++a)
        if (in[a]) out.push_back(a);
    return out;
}

BoolAlg subalgebra_as_algebra(const BoolAlg& A, const std::vector<EIdx>& members,
                              std::vector<EIdx>* back) {
    std::vector<EIdx> ms = members;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<bool> in(A.size(), false);
    for (EIdx m : ms) {
        if (m >= A.size()) throw Error::validation("subalgebra member out of range");
        in[m] = true;
    }
    if (!in[A.zero()] || !in[A.one()])
        throw Error::validation("subalgebra must contain 0 and 1");
    for (EIdx a : ms) {
        if (!in[A.complement(a)]) throw Error::validation("subalgebra not closed under complement");
        for (EIdx b : ms)
            if (!in[A.meet(a, b)] || !in[A.join(a, b)])
                throw Error::validation("subalgebra not closed under meet/join");
    }

    // Codes carry over from A, so ops can be phrased on codes.
    std::vector<Mask> codes;
    codes.reserve(ms.size());
    for (EIdx m : ms) codes.push_back(A.code(m));
    auto by_code = [&](Mask c) -> EIdx {
        return *A.index_of_code(c);
    };
    BoolAlg S = BoolAlg::from_ops(
        codes,
        [&](Mask x, Mask y) { return A.code(A.meet(by_code(x), by_code(y))); },
        [&](Mask x, Mask y) { return A.code(A.join(by_code(x), by_code(y))); },
        [&](Mask x) { return A.code(A.complement(by_code(x))); },
        A.ground_bits());
    if (back) {
        back->clear();
        for (EIdx i = 0; i < S.size(); ++i) back->push_back(by_code(S.code(i)));
    }
    return S;
}

}  // namespace locba
