// Finite topological spaces and their set algebras.
//
// A space is a point set {0..n-1} together with an explicit open family,
// every set stored as a point bitmask.  On top of that sit interior and
// closure, the regular-open / regular-closed / clopen algebras, the contact
// relation "the closed sets meet" on regular-closed sets, a taxonomy of
// continuous maps (closed, perfect, irreducible, skeletal, quasi-pi, MR,
// pi), weight and pi-weight by exhaustive minimal-family search, and an
// exhaustive generator for all topologies on up to four points.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locba/boolalg.hpp"
#include "locba/contact.hpp"
#include "locba/error.hpp"

namespace locba {

class FinSpace {
public:
    static constexpr unsigned kMaxPoints = 16;      // point sets live in 16-bit masks
    static constexpr std::size_t kMaxOpens = 1024;  // family validation is quadratic

    // Validates: every open inside the point range, empty set and whole set
    // present, family closed under pairwise union and intersection.
    static FinSpace from_opens(unsigned points, std::vector<Mask> opens);

    static FinSpace discrete(unsigned points);
    static FinSpace indiscrete(unsigned points);
    static FinSpace sierpinski();  // two points; {0} open, {1} closed

    unsigned points() const { return points_; }
    Mask full() const { return points_ ? (Mask{1} << points_) - 1 : 0; }
    const std::vector<Mask>& opens() const { return opens_; }
    std::vector<Mask> closed_sets() const;

    bool is_open(Mask s) const;
    bool is_closed(Mask s) const;
    bool is_clopen(Mask s) const;

    Mask interior(Mask s) const;  // union of the opens inside s
    Mask closure(Mask s) const;   // complement of the interior of the complement

    // Smallest open set around a point: the intersection of all opens
    // containing it (open again, since the family is intersection-closed).
    Mask min_nbhd(unsigned point) const;

    std::vector<Mask> regular_opens() const;    // u == int(cl(u))
    std::vector<Mask> regular_closeds() const;  // cl(u) for u open, deduplicated

    std::string set_name(Mask s) const;  // "{0,2}"; "{}" for the empty set

    // Validation error unless s is a subset of the point set.
    void require_in_range(Mask s) const;

    bool operator==(const FinSpace& o) const {
        return points_ == o.points_ && opens_ == o.opens_;
    }

private:
    FinSpace() = default;

    unsigned points_ = 0;
    std::vector<Mask> opens_;      // sorted ascending, deduplicated
    std::vector<bool> is_open_;    // 2^points membership table
};

// --- set algebras of a space ---------------------------------------------

// Regular-closed algebra with its contact structure: elements are the sets
// cl(u) for u open, with f \/ g = f u g, f /\ g = cl(int(f n g)),
// f* = cl(X \ f); two sets are in contact when they meet as point sets.
// Every subset of a finite space is compact (an open cover is finite
// outright), so the bounded part is the whole carrier.
ContactTriple rc_algebra(const FinSpace& X);

// Regular-open algebra: u /\ v = u n v, u \/ v = int(cl(u u v)),
// u* = int(X \ u).
BoolAlg ro_algebra(const FinSpace& X);

// Clopen sets under the plain set operations.
BoolAlg co_algebra(const FinSpace& X);

// Compact clopen sets and compact regular-closed sets, as mask families.
// Finiteness makes every subset compact, so the compact qualifier never
// filters anything here; the families still go through it member by member.
std::vector<Mask> ck_family(const FinSpace& X);
std::vector<Mask> cr_family(const FinSpace& X);

// --- maps between spaces --------------------------------------------------

struct SpaceMap {
    FinSpace src;
    FinSpace dst;
    std::vector<unsigned> map;  // size == src.points(), values < dst.points()
};

Mask image_of(const SpaceMap& f, Mask s);
Mask preimage_of(const SpaceMap& f, Mask t);

// {y : the whole fiber over y lies inside s}.  Also computed as
// Y \ f(X \ s); the two forms must agree.
Mask f_sharp(const SpaceMap& f, Mask s);

struct MapClassification {
    bool continuous = false;
    bool closed = false;                 // images of closed sets are closed
    bool compact_point_inverses = true;  // finite fibers are always compact
    bool perfect = false;                // continuous + closed + compact fibers
    bool irreducible = false;  // onto, and no proper closed subset maps onto
    bool skeletal = false;     // nonempty regular opens have somewhere-dense images
    bool quasi_pi = false;     // dense image, int(f_sharp(u)) != {} for open u != {}
    bool mr = false;           // the same over regular open u only
    bool pi = false;           // closed + irreducible
};

// Flags beyond continuity presuppose a continuous map; a non-continuous one
// reports continuous=false and leaves the taxonomy flags false.  The
// quasi-pi and MR flags are evaluated both through f_sharp interiors and
// through images of (regular) closed sets, and the two routes must agree;
// pi => quasi-pi => MR is checked on every call.
MapClassification classify_map(const SpaceMap& f);

// --- weight and pi-weight -------------------------------------------------

// Base: every open is the union of the members below it.  Pi-base: every
// nonempty open contains a nonempty member.  Members must be open.
bool is_base_family(const FinSpace& X, const std::vector<Mask>& fam);
bool is_pi_base_family(const FinSpace& X, const std::vector<Mask>& fam);

struct SpaceWeightResult {
    std::size_t value = 0;
    std::vector<Mask> base;  // first minimal family in the deterministic order
};

// Exhaustive search over subfamilies of the topology, by increasing
// cardinality and lexicographically within each cardinality.  Scope: at
// most 32 open sets.
SpaceWeightResult space_weight(const FinSpace& X);
SpaceWeightResult space_pi_weight(const FinSpace& X);

bool is_semiregular(const FinSpace& X);     // regular opens form a base
bool is_pi_semiregular(const FinSpace& X);  // regular opens form a pi-base

// --- space corpus ---------------------------------------------------------

// Every topology on the given point set, in a fixed generation order.
// Scope: at most 4 points (the scan walks all 2^(2^n) set families).
std::vector<FinSpace> all_topologies(unsigned points);

// Point bijection carrying the opens of A exactly onto the opens of B.
// Scope: at most 8 points (factorial search).
std::optional<std::vector<unsigned>> find_homeomorphism(const FinSpace& A,
                                                        const FinSpace& B);

}  // namespace locba
