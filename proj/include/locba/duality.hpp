// The dual adjunction between finite spaces and local pairs: the clopen
// pair of a space, the bounded-ultrafilter space of a pair, the unit and
// counit witnesses, the cluster space of a contact triple, perfect
// morphisms, the Stone special case, and the product/sum comparison.

#pragma once

#include <string>
#include <vector>

#include "locba/bacore.hpp"
#include "locba/boolalg.hpp"
#include "locba/contact.hpp"
#include "locba/error.hpp"
#include "locba/fincofin.hpp"
#include "locba/lba.hpp"
#include "locba/topo.hpp"

namespace locba {

// --- the two functors -----------------------------------------------------

// The clopen pair of a space.  Every clopen subset of a finite space is
// compact, so the bounded part is the whole algebra; the pair is verified
// to satisfy the local-pair laws (and join-completeness, when the
// simple-ideal enumeration fits) before it is returned.
LocalPair theta_t(const FinSpace& X);

// Contravariant morphism part: G -> f^{-1}(G), from the clopen pair of the
// target space to the clopen pair of the source space.  f must be
// continuous.  The bounded-cover condition is verified; when f is perfect
// the bounded-image condition is verified as well.
BoolHom theta_t_mor(const SpaceMap& f);

// The dual space of a local pair: one point per bounded ultrafilter,
// listed in lexicographic member order, topologized by the sets
// {u : a in u} for bounded a as an open base.
FinSpace theta_a(const LocalPair& p);

// Contravariant morphism part: u' -> phi^{-1}(u'), from the dual space of
// dst to the dual space of src.  phi must be a homomorphism satisfying
// the bounded-cover condition.  The containment witnessing continuity
// (the image of the member set of phi(a) lies in the member set of a) is
// checked for every source element, and the finished map is rechecked.
SpaceMap theta_a_mor(const LocalPair& src, const LocalPair& dst,
                     const BoolHom& phi);

// --- unit and counit ------------------------------------------------------

// Evidence that one leg of the adjunction is an isomorphism.  Space-side
// legs (the unit, the product/sum comparison) fill the point maps and read
// the structure flags as continuity; the algebra-side counit fills the
// element maps and reads them as the morphism conditions.  Unused maps
// stay empty.
struct DualityWitness {
    std::vector<unsigned> forward_points;
    std::vector<unsigned> backward_points;  // set when bijective
    std::vector<EIdx> forward_elements;
    std::vector<EIdx> backward_elements;  // set when bijective
    bool bijective = false;
    bool forward_ok = false;   // continuity resp. morphism conditions
    bool backward_ok = false;  // likewise for the inverse
    bool ideal_onto = false;   // counit only: the bounded part fills the dual ideal
    bool iso = false;          // homeomorphism resp. pair isomorphism
    bool roundtrip_identity = false;  // both composites are identities
    std::string note;                 // first failure; empty when iso
};

// x -> {clopen sets containing x}, into the dual space of the clopen pair.
// Always continuous and onto; a homeomorphism exactly when the clopen sets
// separate points (for finite spaces: exactly the discrete ones).
DualityWitness unit_tx(const FinSpace& X);

// b -> {bounded ultrafilters containing b}, into the clopen pair of the
// dual space.  For every finite local pair this is an isomorphism carrying
// the bounded part onto the dual ideal; the witness records the missing
// clopen set should surjectivity ever fail.
DualityWitness counit_lambda(const LocalPair& p);

// --- contact-side functors ------------------------------------------------

// The contact dual of a space is its regular-closed triple.
ContactTriple psi_t(const FinSpace& X);

// The cluster space of a contact triple: one point per bounded cluster,
// listed in lexicographic member order; the sets {sigma : a in sigma} form
// a closed subbase.  The triple must satisfy the local contact axioms.
// The interiors of the bounded member sets are verified to form an open
// base of the result.
FinSpace psi_a(const ContactTriple& T);

// The bounded clusters in the exact point order psi_a uses, so callers can
// address the cluster space through their member sets.
std::vector<Subset> cluster_member_order(const ContactTriple& T);

// --- perfect morphisms ----------------------------------------------------

struct PerfectDualityReport {
    SpaceMap dual_map;
    bool perfect = false;       // dual map closed with compact fibers
    bool preimage_law = false;  // member set of phi(a) = preimage of member
                                // set of a, for every bounded a
};

// Requires phi to satisfy both side conditions (bounded-cover and
// bounded-image); reports whether the dual map is perfect and whether the
// preimage law holds across the source ideal.
PerfectDualityReport perfect_duality_check(const LocalPair& src,
                                           const LocalPair& dst,
                                           const BoolHom& phi);

// --- the Stone special case -----------------------------------------------

// Direct Stone dual of a finite Boolean algebra: the space on its minimal
// nonzero elements, assembled from the principal downsets {t : t <= b} and
// their unions.  Kept free of the ultrafilter machinery so it can
// cross-check the dual space of a full pair.
FinSpace stone_dual(const BoolAlg& B);

// --- products and sums ----------------------------------------------------

// Disjoint topological sum: opens are the unions of one open per summand,
// with point k of summand g renumbered to (points of earlier summands) + k.
FinSpace sum_space(const std::vector<FinSpace>& parts);

// Compares the cluster space of a product of triples against the disjoint
// sum of the factor cluster spaces.  The point map lifts a factor cluster
// c at coordinate g to the slice {a : coordinate g of a lies in c}; the
// witness records whether this is a homeomorphism.
DualityWitness product_sum_check(const std::vector<ContactTriple>& factors);

// --- the symbolic countable case ------------------------------------------

// Dual of the finite-or-cofinite pair, described symbolically: the bounded
// ultrafilters are exactly the principal ones, and the member set of the
// singleton {i} isolates the point at i, so the space is the countable
// discrete space.
struct FcDualSpace {
    bool discrete = true;
    bool countable = true;
    std::string description;
};
FcDualSpace fc_theta_a();

// Counit on the finite-or-cofinite pair: the member-set map embeds the
// carrier into the clopens of the countable discrete space and carries the
// finite part onto the compact opens, but no carrier element matches the
// set of even-indexed points, so the embedding is not onto — the same
// defect as the simple ideal with no join.
struct FcCounit {
    bool embedding = true;
    bool ideal_onto = true;
    bool iso = false;
    std::string missing_clopen;
};
FcCounit fc_counit_lambda();

// The embedding of the two-element pair into the finite-or-cofinite pair:
// the bounded-cover condition holds (the top dominates every finite set),
// but the top lands on a cofinite element, so the bounded-image condition
// fails with that witness.
struct FcEmbeddingReport {
    bool bounded_cover = true;
    bool bounded_image = false;
    FcElem witness;
};
FcEmbeddingReport fc_two_embedding_report();

}  // namespace locba
