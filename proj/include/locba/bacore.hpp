// Order-theoretic core: ideals, filters, density, pi-weight, ultrafilters.
//
// Everything here is generic over any carrier L exposing
//     size(), zero(), one(), meet(a,b), join(a,b), leq(a,b)
// so it serves both BoolAlg and Pseudolat.  Brute-force searches carry
// documented caps; callers can raise them explicitly where the spec of an
// experiment justifies it.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locba/boolalg.hpp"
#include "locba/error.hpp"

namespace locba {

// Subset of carrier indices packed as a 64-bit mask; only valid for
// carriers of size <= 64.  Used by exhaustive enumerations.
using IdxMask = std::uint64_t;

inline Subset subset_from_mask(std::size_t n, IdxMask m) {
    Subset s(n, false);
    for (std::size_t i = 0; i < n; ++i)
        if (m & (IdxMask{1} << i)) s[i] = true;
    return s;
}

inline IdxMask mask_from_subset(const Subset& s) {
    if (s.size() > 64) throw Error::scope("subset too large for mask form");
    IdxMask m = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) m |= IdxMask{1} << i;
    return m;
}

inline std::vector<EIdx> subset_members(const Subset& s) {
    std::vector<EIdx> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) out.push_back(static_cast<EIdx>(i));
    return out;
}

inline std::size_t subset_count(const Subset& s) {
    std::size_t c = 0;
    for (bool b : s) c += b;
    return c;
}

// --- ideal / filter predicates ------------------------------------------

template <class L>
bool is_ideal(const L& A, const Subset& S) {
    if (S.size() != A.size()) throw Error::validation("subset size mismatch");
    if (!S[A.zero()]) return false;
    for (EIdx a = 0; a < A.size(); ++a) {
        if (!S[a]) continue;
        for (EIdx b = 0; b < A.size(); ++b) {
            if (A.leq(b, a) && !S[b]) return false;       // downward closed
            if (S[b] && !S[A.join(a, b)]) return false;   // join closed
        }
    }
    return true;
}

template <class L>
bool is_filter(const L& A, const Subset& S) {
    if (S.size() != A.size()) throw Error::validation("subset size mismatch");
    if (!S[A.one()]) return false;
    for (EIdx a = 0; a < A.size(); ++a) {
        if (!S[a]) continue;
        for (EIdx b = 0; b < A.size(); ++b) {
            if (A.leq(a, b) && !S[b]) return false;       // upward closed
            if (S[b] && !S[A.meet(a, b)]) return false;   // meet closed
        }
    }
    return true;
}

// Proper filter: a filter not containing 0.
template <class L>
bool is_proper_filter(const L& A, const Subset& S) {
    return is_filter(A, S) && !S[A.zero()];
}

template <class L>
Subset downset_of(const L& A, EIdx a) {
    Subset s(A.size(), false);
    for (EIdx b = 0; b < A.size(); ++b)
        if (A.leq(b, a)) s[b] = true;
    return s;
}

template <class L>
Subset upset_of(const L& A, EIdx a) {
    Subset s(A.size(), false);
    for (EIdx b = 0; b < A.size(); ++b)
        if (A.leq(a, b)) s[b] = true;
    return s;
}

// Ideal generated by a set of elements (downward closure of all finite joins).
template <class L>
Subset ideal_generated_by(const L& A, const std::vector<EIdx>& gens) {
    Subset s(A.size(), false);
    s[A.zero()] = true;
    for (EIdx g : gens) s[g] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (EIdx a = 0; a < A.size(); ++a) {
            if (!s[a]) continue;
            for (EIdx b = 0; b < A.size(); ++b) {
                if (s[b] && !s[A.join(a, b)]) { s[A.join(a, b)] = true; grew = true; }
                if (A.leq(b, a) && !s[b]) { s[b] = true; grew = true; }
            }
        }
    }
    return s;
}

// Principal test: S == downset(a) for some a.
template <class L>
std::optional<EIdx> principal_generator(const L& A, const Subset& S) {
    // the generator must be a maximum of S
    for (EIdx a = 0; a < A.size(); ++a) {
        if (!S[a]) continue;
        bool is_max = true;
        for (EIdx b = 0; b < A.size() && is_max; ++b)
            if (S[b] && !A.leq(b, a)) is_max = false;
        if (is_max) {
            if (downset_of(A, a) == S) return a;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// --- density -------------------------------------------------------------

// S is dense in A iff every nonzero a in A has a nonzero minorant in S.
// Returns the first failing element in canonical order as witness.
struct DensityReport {
    bool dense = true;
    EIdx witness = 0;  // meaningful when !dense
};

template <class L>
DensityReport dense_subset_check(const L& A, const Subset& S) {
    if (S.size() != A.size()) throw Error::validation("subset size mismatch");
    for (EIdx a = 0; a < A.size(); ++a) {
        if (a == A.zero()) continue;
        bool found = false;
        for (EIdx s = 0; s < A.size() && !found; ++s)
            if (S[s] && s != A.zero() && A.leq(s, a)) found = true;
        if (!found) return DensityReport{false, a};
    }
    return DensityReport{true, 0};
}

// --- pi-weight -----------------------------------------------------------

// Minimal nonzero elements of the carrier (atoms, for a Boolean algebra).
template <class L>
std::vector<EIdx> minimal_nonzero(const L& A) {
    std::vector<EIdx> out;
    for (EIdx a = 0; a < A.size(); ++a) {
        if (a == A.zero()) continue;
        bool minimal = true;
        for (EIdx b = 0; b < A.size() && minimal; ++b)
            if (b != A.zero() && b != a && A.leq(b, a)) minimal = false;
        if (minimal) out.push_back(a);
    }
    return out;
}

// pi-weight of a finite carrier = least size of a dense subset, found by
// exhaustive reasoning: every dense subset must contain each minimal
// nonzero element (its only nonzero minorant is itself), and the minimal
// nonzero elements are themselves dense, so they are the unique minimum.
// Both halves are verified computationally rather than assumed.
struct PiWeightResult {
    std::size_t value = 0;
    std::vector<EIdx> witness;  // a dense subset of that size
};

inline constexpr std::size_t kPiWeightCap = 4096;

template <class L>
PiWeightResult pi_weight_finite(const L& A, std::size_t cap = kPiWeightCap) {
    if (A.size() > cap)
        throw Error::scope("pi-weight search cap exceeded: carrier size " +
                           std::to_string(A.size()) + " > " + std::to_string(cap));
    std::vector<EIdx> mins = minimal_nonzero(A);
    // lower bound: each m in mins has itself as only nonzero minorant
    for (EIdx m : mins)
        for (EIdx s = 0; s < A.size(); ++s)
            if (s != A.zero() && s != m && A.leq(s, m))
                throw Error::validation("internal: non-minimal element in minimal set");
    // upper bound: mins is dense
    Subset S(A.size(), false);
    for (EIdx m : mins) S[m] = true;
    DensityReport d = dense_subset_check(A, S);
    if (!d.dense)
        throw Error::validation("internal: minimal elements fail to be dense at " +
                                std::to_string(d.witness));
    return PiWeightResult{mins.size(), mins};
}

// --- ultrafilters --------------------------------------------------------

// Principal ultrafilter at an atom.
template <class L>
Subset principal_ultrafilter(const L& A, EIdx atom) {
    return upset_of(A, atom);
}

// All ultrafilters of a finite Boolean algebra: principal filters at atoms,
// in canonical atom order.  (The exhaustive maximal-proper-filter scan in
// the tests independently confirms this list.)
std::vector<Subset> ultrafilters(const BoolAlg& A);

// Ultrafilters meeting the ideal I ("bounded" ultrafilters).
std::vector<Subset> bounded_ultrafilters(const BoolAlg& A, const Subset& I);

// Exhaustive oracle: all maximal proper filters by scanning every subset.
// Only for carriers of size <= 16 (2^16 subsets).
std::vector<Subset> maximal_proper_filters_bruteforce(const BoolAlg& A);

// --- ideal enumeration ---------------------------------------------------

// All ideals of a finite carrier, as subset masks, canonically ordered.
// Exhaustive over 2^|L| subsets; requires |L| <= cap (default 16).
template <class L>
std::vector<IdxMask> enumerate_ideal_masks(const L& A, std::size_t cap = 16) {
    const std::size_t n = A.size();
    if (n > cap)
        throw Error::scope("ideal enumeration cap exceeded: carrier size " +
                           std::to_string(n) + " > " + std::to_string(cap));
    // precompute down-closure masks and join table
    std::vector<IdxMask> down(n, 0);
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b)
            if (A.leq(b, a)) down[a] |= IdxMask{1} << b;
    std::vector<EIdx> jt(n * n);
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b) jt[a * n + b] = A.join(a, b);

    std::vector<IdxMask> out;
    const IdxMask all = (n == 64) ? ~IdxMask{0} : ((IdxMask{1} << n) - 1);
    for (IdxMask m = 0; m <= all; ++m) {
        if (!(m & (IdxMask{1} << A.zero()))) continue;
        bool ok = true;
        for (EIdx a = 0; a < n && ok; ++a) {
            if (!(m & (IdxMask{1} << a))) continue;
            if ((down[a] & m) != down[a]) { ok = false; break; }
            for (EIdx b = a; b < n && ok; ++b) {
                if (!(m & (IdxMask{1} << b))) continue;
                if (!(m & (IdxMask{1} << jt[a * n + b]))) ok = false;
            }
        }
        if (ok) out.push_back(m);
        if (m == all) break;  // avoid wrap-around when n == 64
    }
    return out;
}

// Dense ideals only (the interesting inputs for local pairs).
std::vector<Subset> enumerate_dense_ideals(const BoolAlg& A, std::size_t cap = 16);

}  // namespace locba
