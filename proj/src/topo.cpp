#include "locba/topo.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace locba {

namespace {

void require_valid_map(const SpaceMap& f) {
    if (f.map.size() != f.src.points())
        throw Error::validation("point map has " + std::to_string(f.map.size()) +
                                " entries for a " + std::to_string(f.src.points()) +
                                "-point source");
    for (unsigned p = 0; p < f.map.size(); ++p)
        if (f.map[p] >= f.dst.points())
            throw Error::validation("point " + std::to_string(p) + " maps to " +
                                    std::to_string(f.map[p]) +
                                    ", outside the target space");
}

}  // namespace

// --- FinSpace -------------------------------------------------------------

FinSpace FinSpace::from_opens(unsigned points, std::vector<Mask> opens) {
    if (points > kMaxPoints)
        throw Error::scope("a space has at most " + std::to_string(kMaxPoints) +
                           " points; got " + std::to_string(points));
    FinSpace X;
    X.points_ = points;

    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    if (opens.size() > kMaxOpens)
        throw Error::scope("the open family holds at most " + std::to_string(kMaxOpens) +
                           " sets; got " + std::to_string(opens.size()));

    const Mask full = X.full();
    for (Mask u : opens)
        if (u & ~full)
            throw Error::validation("open set " + X.set_name(u) + " lies outside a " +
                                    std::to_string(points) + "-point space");
    auto has = [&opens](Mask s) {
        return std::binary_search(opens.begin(), opens.end(), s);
    };
    if (!has(0))
        throw Error::validation("the open family must contain the empty set");
    if (!has(full))
        throw Error::validation("the open family must contain the whole point set");
    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (!has(opens[i] | opens[j]))
                throw Error::validation("the open family is not closed under union: " +
                                        X.set_name(opens[i]) + " and " +
                                        X.set_name(opens[j]));
            if (!has(opens[i] & opens[j]))
                throw Error::validation(
                    "the open family is not closed under intersection: " +
                    X.set_name(opens[i]) + " and " + X.set_name(opens[j]));
        }

    X.opens_ = std::move(opens);
    X.is_open_.assign(std::size_t{1} << points, false);
    for (Mask u : X.opens_) X.is_open_[static_cast<std::size_t>(u)] = true;
    return X;
}

FinSpace FinSpace::discrete(unsigned points) {
    if (points > kMaxPoints)
        throw Error::scope("a space has at most " + std::to_string(kMaxPoints) +
                           " points; got " + std::to_string(points));
    const Mask full = points ? (Mask{1} << points) - 1 : 0;
    std::vector<Mask> opens;
    for (Mask s = 0; s <= full; ++s) opens.push_back(s);
    return from_opens(points, std::move(opens));
}

FinSpace FinSpace::indiscrete(unsigned points) {
    const Mask full = points && points <= kMaxPoints ? (Mask{1} << points) - 1 : 0;
    return from_opens(points, {0, full});
}

FinSpace FinSpace::sierpinski() { return from_opens(2, {0b00, 0b01, 0b11}); }

void FinSpace::require_in_range(Mask s) const {
    if (s & ~full())
        throw Error::validation("point set " + set_name(s) + " lies outside a " +
                                std::to_string(points_) + "-point space");
}

std::vector<Mask> FinSpace::closed_sets() const {
    std::vector<Mask> out;
    out.reserve(opens_.size());
    for (Mask u : opens_) out.push_back(full() & ~u);
    std::sort(out.begin(), out.end());
    return out;
}

bool FinSpace::is_open(Mask s) const {
    require_in_range(s);
    return is_open_[static_cast<std::size_t>(s)];
}

bool FinSpace::is_closed(Mask s) const {
    require_in_range(s);
    return is_open_[static_cast<std::size_t>(full() & ~s)];
}

bool FinSpace::is_clopen(Mask s) const { return is_open(s) && is_closed(s); }

Mask FinSpace::interior(Mask s) const {
    require_in_range(s);
    Mask out = 0;
    for (Mask u : opens_)
        if (!(u & ~s)) out |= u;
    return out;
}

Mask FinSpace::closure(Mask s) const {
    require_in_range(s);
    return full() & ~interior(full() & ~s);
}

Mask FinSpace::min_nbhd(unsigned point) const {
    if (point >= points_)
        throw Error::validation("point " + std::to_string(point) + " is outside a " +
                                std::to_string(points_) + "-point space");
    Mask out = full();
    for (Mask u : opens_)
        if (u & (Mask{1} << point)) out &= u;
    return out;
}

std::vector<Mask> FinSpace::regular_opens() const {
    std::vector<Mask> out;
    for (Mask u : opens_)
        if (interior(closure(u)) == u) out.push_back(u);
    return out;
}

std::vector<Mask> FinSpace::regular_closeds() const {
    std::vector<Mask> out;
    out.reserve(opens_.size());
    for (Mask u : opens_) out.push_back(closure(u));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string FinSpace::set_name(Mask s) const {
    std::string out = "{";
    bool first = true;
    for (unsigned p = 0; p < 64; ++p)
        if (s & (Mask{1} << p)) {
            if (!first) out += ",";
            out += std::to_string(p);
            first = false;
        }
    return out + "}";
}

// --- set algebras ---------------------------------------------------------

ContactTriple rc_algebra(const FinSpace& X) {
    const Mask full = X.full();
    BoolAlg A = BoolAlg::from_ops(
        X.regular_closeds(),
        [&X](Mask f, Mask g) { return X.closure(X.interior(f & g)); },
        [](Mask f, Mask g) { return f | g; },
        [&X, full](Mask f) { return X.closure(full & ~f); },
        X.points());
    const EIdx n = static_cast<EIdx>(A.size());
    Relation rho = Relation::empty(n);
    for (EIdx i = 0; i < n; ++i)
        for (EIdx j = i; j < n; ++j)
            if (A.code(i) & A.code(j)) rho.set_pair(i, j, true);
    Subset bounded(A.size(), true);  // finite space: every subset is compact
    return ContactTriple{std::move(A), std::move(rho), std::move(bounded)};
}

BoolAlg ro_algebra(const FinSpace& X) {
    const Mask full = X.full();
    return BoolAlg::from_ops(
        X.regular_opens(),
        [](Mask u, Mask v) { return u & v; },
        [&X](Mask u, Mask v) { return X.interior(X.closure(u | v)); },
        [&X, full](Mask u) { return X.interior(full & ~u); },
        X.points());
}

BoolAlg co_algebra(const FinSpace& X) {
    const Mask full = X.full();
    std::vector<Mask> clopens;
    for (Mask u : X.opens())
        if (X.is_closed(u)) clopens.push_back(u);
    return BoolAlg::from_ops(
        clopens,
        [](Mask u, Mask v) { return u & v; },
        [](Mask u, Mask v) { return u | v; },
        [full](Mask u) { return full & ~u; },
        X.points());
}

namespace {

// Any open cover drawn from a finite topology is already finite, so it is
// its own finite subcover.
bool compact_subset(const FinSpace&, Mask) { return true; }

}  // namespace

std::vector<Mask> ck_family(const FinSpace& X) {
    std::vector<Mask> out;
    for (Mask u : X.opens())
        if (X.is_closed(u) && compact_subset(X, u)) out.push_back(u);
    return out;
}

std::vector<Mask> cr_family(const FinSpace& X) {
    std::vector<Mask> out;
    for (Mask f : X.regular_closeds())
        if (compact_subset(X, f)) out.push_back(f);
    return out;
}

// --- maps -----------------------------------------------------------------

Mask image_of(const SpaceMap& f, Mask s) {
    require_valid_map(f);
    f.src.require_in_range(s);
    Mask out = 0;
    for (unsigned p = 0; p < f.src.points(); ++p)
        if (s & (Mask{1} << p)) out |= Mask{1} << f.map[p];
    return out;
}

Mask preimage_of(const SpaceMap& f, Mask t) {
    require_valid_map(f);
    f.dst.require_in_range(t);
    Mask out = 0;
    for (unsigned p = 0; p < f.src.points(); ++p)
        if (t & (Mask{1} << f.map[p])) out |= Mask{1} << p;
    return out;
}

Mask f_sharp(const SpaceMap& f, Mask s) {
    require_valid_map(f);
    f.src.require_in_range(s);
    Mask direct = 0;
    for (unsigned y = 0; y < f.dst.points(); ++y) {
        Mask fiber = preimage_of(f, Mask{1} << y);
        if (!(fiber & ~s)) direct |= Mask{1} << y;
    }
    Mask via_image = f.dst.full() & ~image_of(f, f.src.full() & ~s);
    if (direct != via_image)
        throw Error::validation("internal: the two f_sharp forms disagree at " +
                                f.src.set_name(s));
    return direct;
}

MapClassification classify_map(const SpaceMap& f) {
    require_valid_map(f);
    MapClassification out;

    out.continuous = true;
    for (Mask v : f.dst.opens())
        if (!f.src.is_open(preimage_of(f, v))) {
            out.continuous = false;
            break;
        }
    if (!out.continuous) return out;

    const Mask fullx = f.src.full();
    const Mask fully = f.dst.full();
    const std::vector<Mask> closed_x = f.src.closed_sets();

    out.closed = true;
    for (Mask c : closed_x)
        if (!f.dst.is_closed(image_of(f, c))) {
            out.closed = false;
            break;
        }
    out.perfect = out.closed;  // continuity and compact fibers already hold

    out.irreducible = image_of(f, fullx) == fully;
    for (Mask c : closed_x) {
        if (!out.irreducible) break;
        if (c != fullx && image_of(f, c) == fully) out.irreducible = false;
    }

    const bool dense_image = f.dst.closure(image_of(f, fullx)) == fully;

    // quasi-pi two ways: f_sharp interiors vs images of proper closed sets
    bool quasi_sharp = dense_image;
    for (Mask u : f.src.opens()) {
        if (!quasi_sharp) break;
        if (u != 0 && f.dst.interior(f_sharp(f, u)) == 0) quasi_sharp = false;
    }
    bool quasi_closed = dense_image;
    for (Mask c : closed_x) {
        if (!quasi_closed) break;
        if (c != fullx && f.dst.closure(image_of(f, c)) == fully) quasi_closed = false;
    }
    if (quasi_sharp != quasi_closed)
        throw Error::validation("internal: the two quasi-pi criteria disagree");
    out.quasi_pi = quasi_sharp;

    const std::vector<Mask> ro = f.src.regular_opens();
    bool mr_sharp = dense_image;
    for (Mask u : ro) {
        if (!mr_sharp) break;
        if (u != 0 && f.dst.interior(f_sharp(f, u)) == 0) mr_sharp = false;
    }
    bool mr_closed = dense_image;
    for (Mask c : f.src.regular_closeds()) {
        if (!mr_closed) break;
        if (c != fullx && f.dst.closure(image_of(f, c)) == fully) mr_closed = false;
    }
    if (mr_sharp != mr_closed)
        throw Error::validation("internal: the two MR criteria disagree");
    out.mr = mr_sharp;

    out.skeletal = true;
    for (Mask u : ro)
        if (u != 0 && f.dst.interior(f.dst.closure(image_of(f, u))) == 0) {
            out.skeletal = false;
            break;
        }

    out.pi = out.closed && out.irreducible;

    if (out.pi && !out.quasi_pi)
        throw Error::validation("internal: a pi-map must be quasi-pi");
    if (out.quasi_pi && !out.mr)
        throw Error::validation("internal: a quasi-pi map must be an MR-map");
    return out;
}

// --- weight and pi-weight -------------------------------------------------

bool is_base_family(const FinSpace& X, const std::vector<Mask>& fam) {
    for (Mask v : fam)
        if (!X.is_open(v))
            throw Error::validation("base candidate member " + X.set_name(v) +
                                    " is not open");
    for (Mask u : X.opens()) {
        Mask covered = 0;
        for (Mask v : fam)
            if (!(v & ~u)) covered |= v;
        if (covered != u) return false;
    }
    return true;
}

bool is_pi_base_family(const FinSpace& X, const std::vector<Mask>& fam) {
    for (Mask v : fam)
        if (!X.is_open(v))
            throw Error::validation("pi-base candidate member " + X.set_name(v) +
                                    " is not open");
    for (Mask u : X.opens()) {
        if (u == 0) continue;
        bool found = false;
        for (Mask v : fam)
            if (v != 0 && !(v & ~u)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

namespace {

template <class Check>
SpaceWeightResult minimal_family(const FinSpace& X, const Check& good) {
    const std::vector<Mask>& opens = X.opens();
    if (opens.size() > 32)
        throw Error::scope("the space has " + std::to_string(opens.size()) +
                           " open sets; the weight search cap is 32");
    const std::size_t m = opens.size();
    // increasing cardinality, lexicographic within it, over the open family
    for (std::size_t k = 0; k <= m; ++k) {
        std::vector<bool> pick(m, false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
        while (true) {
            std::vector<Mask> cand;
            for (std::size_t i = 0; i < m; ++i)
                if (pick[i]) cand.push_back(opens[i]);
            if (good(cand)) return SpaceWeightResult{k, std::move(cand)};
            // previous permutation of the selector walks subsets in lex order
            if (!std::prev_permutation(pick.begin(), pick.end())) break;
        }
    }
    throw Error::validation("internal: the whole topology failed to be a base");
}

}  // namespace

SpaceWeightResult space_weight(const FinSpace& X) {
    return minimal_family(
        X, [&X](const std::vector<Mask>& fam) { return is_base_family(X, fam); });
}

SpaceWeightResult space_pi_weight(const FinSpace& X) {
    return minimal_family(
        X, [&X](const std::vector<Mask>& fam) { return is_pi_base_family(X, fam); });
}

bool is_semiregular(const FinSpace& X) {
    return is_base_family(X, X.regular_opens());
}

bool is_pi_semiregular(const FinSpace& X) {
    return is_pi_base_family(X, X.regular_opens());
}

// --- space corpus ---------------------------------------------------------

std::vector<FinSpace> all_topologies(unsigned points) {
    if (points > 4)
        throw Error::scope("topology enumeration walks 2^(2^n) families; cap is 4 "
                           "points, got " +
                           std::to_string(points));
    const unsigned m = 1u << points;  // number of point subsets
    const Mask full = m - 1;
    std::vector<FinSpace> out;
    // families of point subsets, encoded as bitsets over the 2^points masks
    const std::uint32_t limit =
        (m == 32) ? 0 : (std::uint32_t{1} << m);  // unreachable guard: m <= 16
    for (std::uint32_t fam = 0; fam < limit; ++fam) {
        if (!(fam & 1u)) continue;                        // empty set present
        if (!(fam & (std::uint32_t{1} << full))) continue;  // whole set present
        bool closed_family = true;
        for (Mask a = 0; a <= full && closed_family; ++a) {
            if (!(fam & (std::uint32_t{1} << a))) continue;
            for (Mask b = a + 1; b <= full; ++b) {
                if (!(fam & (std::uint32_t{1} << b))) continue;
                if (!(fam & (std::uint32_t{1} << (a | b))) ||
                    !(fam & (std::uint32_t{1} << (a & b)))) {
                    closed_family = false;
                    break;
                }
            }
        }
        if (!closed_family) continue;
        std::vector<Mask> opens;
        for (Mask a = 0; a <= full; ++a)
            if (fam & (std::uint32_t{1} << a)) opens.push_back(a);
        out.push_back(FinSpace::from_opens(points, std::move(opens)));
    }
    return out;
}

std::optional<std::vector<unsigned>> find_homeomorphism(const FinSpace& A,
                                                        const FinSpace& B) {
    if (A.points() != B.points()) return std::nullopt;
    if (A.opens().size() != B.opens().size()) return std::nullopt;
    if (A.points() > 8)
        throw Error::scope("homeomorphism search is factorial; cap is 8 points, got " +
                           std::to_string(A.points()));
    std::vector<unsigned> perm(A.points());
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<Mask> moved;
    moved.reserve(A.opens().size());
    do {
        moved.clear();
        for (Mask u : A.opens()) {
            Mask v = 0;
            for (unsigned p = 0; p < A.points(); ++p)
                if (u & (Mask{1} << p)) v |= Mask{1} << perm[p];
            moved.push_back(v);
        }
        std::sort(moved.begin(), moved.end());
        if (moved == B.opens()) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace locba
