// Local pairs (algebra + dense ideal), their subclasses, morphism
// conditions, and the four equivalence functors between the prime pairs,
// the join-complete pairs, and generalized Boolean pseudolattices.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locba/bacore.hpp"
#include "locba/boolalg.hpp"
#include "locba/error.hpp"
#include "locba/pseudolat.hpp"

namespace locba {

// An algebra together with a distinguished ideal of "bounded" elements.
// Plain data: validation lives in classify_pair so that defective pairs
// can be diagnosed rather than rejected at construction.
struct LocalPair {
    BoolAlg algebra;
    Subset bounded;  // over algebra's element indices
};

// Full classification of a candidate pair.
//   local:  bounded is an ideal and dense (a local pair).
//   prime_local: local and (I = A or I prime).
//   join_complete: local and every simple ideal of I has a join in A.
//   interpolating: the overlap triple of the pair satisfies the clopen
//     interpolation condition: for bounded a, b with a well inside b there
//     is a bounded c, well inside itself, with a <= c <= b.
struct PairClassification {
    bool ideal_ok = false;
    bool dense_ok = false;
    bool proper = false;  // I != A
    bool prime = false;   // proper and a∧b in I forces a or b in I
    bool local = false;
    bool prime_local = false;
    bool join_complete = false;
    bool interpolating = false;
    std::optional<std::pair<EIdx, EIdx>> ideal_witness;  // pair breaking ideal laws
    std::optional<EIdx> density_witness;                 // element with no minorant in I
    std::optional<std::pair<EIdx, EIdx>> prime_witness;  // meet lands in I, parts do not
    std::optional<IdxMask> join_witness;                 // simple ideal of I lacking a join
    std::string note;                                    // first-failure description
};

PairClassification classify_pair(const BoolAlg& A, const Subset& I);
inline PairClassification classify_pair(const LocalPair& p) {
    return classify_pair(p.algebra, p.bounded);
}

// For a prime ideal: dense iff non-principal.  Finite proper primes are
// principal and never dense, so both sides are false; I = A is reported as
// degenerate (the equivalence is about proper primes).
struct PrimeDenseReport {
    bool degenerate = false;
    bool dense = false;
    bool non_principal = false;
    bool equivalent = false;  // dense == non_principal (when not degenerate)
    std::optional<EIdx> generator;        // when principal
    std::optional<EIdx> density_witness;  // when not dense
};
PrimeDenseReport prime_dense_criterion(const BoolAlg& A, const Subset& I);

// --- morphism conditions --------------------------------------------------

// A homomorphism between local pairs, with the two side conditions:
//   (bounded-cover) every b in the target ideal sits below some φ(a), a
//     in the source ideal;
//   (bounded-image) φ maps the source ideal into the target ideal.
struct MorphismReport {
    bool hom_ok = false;
    bool bounded_cover = false;
    bool bounded_image = false;
    std::optional<EIdx> cover_witness;  // target-ideal element no φ(a) dominates
    std::optional<EIdx> image_witness;  // source-ideal element mapped outside
};
MorphismReport check_morphism(const LocalPair& src, const LocalPair& dst,
                              const BoolHom& phi);

// All homomorphisms src -> dst, enumerated through atom-image patterns and
// filtered by hom_check.  Throws a scope error if |dst|^atoms(src) exceeds
// the cap.
std::vector<BoolHom> all_homs(const BoolAlg& src, const BoolAlg& dst,
                              std::size_t cap = 1u << 20);

// --- extension of a poset isomorphism between ideals ----------------------

// Given a poset isomorphism psi from the ideal of a prime local pair onto
// the ideal of a local pair, the unique Boolean embedding extending it.
// psi is given per source element; entries must be set exactly on the
// source ideal.
struct ExtensionReport {
    BoolHom embedding;             // src.algebra -> dst.algebra
    bool injective = false;
    bool image_is_bounded_hull = false;  // image = I ∪ I*
    bool unique = false;                 // no other hom extends psi
    bool uniqueness_checked = false;     // exhaustive search ran
    bool pair_iso = false;  // dst also prime local: bijective with φ(J) = I
};
ExtensionReport extend_poset_iso(const LocalPair& src, const LocalPair& dst,
                                 const std::vector<std::optional<EIdx>>& psi);

// --- equivalence functors -------------------------------------------------

// Object parts.  Preconditions are the declared classes; violations raise
// a validation error carrying the classification note.
//
//   ez(B, I) = (B_B(I), I)        join-complete -> prime pairs
//   ep(A, I) = (Si(I), e(I))      prime -> join-complete pairs
//   el(A, I) = I                  prime pairs -> GBPLs
//   eg(P)    = (B_Si(e(P)), e(P)) GBPLs -> prime pairs
LocalPair functor_ez(const LocalPair& p);
LocalPair functor_ep(const LocalPair& p);
Pseudolat functor_el(const LocalPair& p);
LocalPair functor_eg(const Pseudolat& P);

// Morphism parts.  Each takes the source/target objects and the underlying
// map, validates the input morphism class, and returns the image morphism.
//   ez: restriction of φ to the bounded hulls (codes are preserved).
//   ep: J ↦ ideal generated by φ(J).
//   el: restriction of φ to the ideals, as pseudolattice indices.
//   eg: ↓a ↦ ↓φ(a), extended to complements.
BoolHom functor_ez_mor(const LocalPair& src, const LocalPair& dst,
                       const BoolHom& phi);
BoolHom functor_ep_mor(const LocalPair& src, const LocalPair& dst,
                       const BoolHom& phi);
std::vector<EIdx> functor_el_mor(const LocalPair& src, const LocalPair& dst,
                                 const BoolHom& phi);
BoolHom functor_eg_mor(const Pseudolat& P1, const Pseudolat& P2,
                       const std::vector<EIdx>& phi);

// Pseudolattice morphism check: preserves 0, meets, joins, plus the
// bounded-cover condition (every b has b <= φ(a) for some a).
struct LatticeMorphismReport {
    bool hom_ok = false;
    bool bounded_cover = false;
    std::optional<EIdx> cover_witness;
};
LatticeMorphismReport check_lattice_morphism(const Pseudolat& P1, const Pseudolat& P2,
                                             const std::vector<EIdx>& phi);

// --- round-trip natural isomorphisms -------------------------------------

// (ez ∘ ep)(A, I) against (A, I): the embedding a ↦ ↓a on the ideal,
// extended by complementation.  Same construction as eg(el(A, I)) — the
// two composites coincide.
struct RoundTripPrime {
    LocalPair image;
    BoolHom nat;  // (A, I) -> image, the extended down-set map
    bool iso = false;
    bool ideal_matches = false;  // nat(I) equals the image ideal
};
RoundTripPrime roundtrip_prime(const LocalPair& p);

// (ep ∘ ez)(B, I) against (B, I): the inverse of the join map.
struct RoundTripSimple {
    LocalPair image;
    BoolHom nat;  // (B, I) -> image, Σ^{-1}
    bool iso = false;
    bool ideal_matches = false;
};
RoundTripSimple roundtrip_simple(const LocalPair& p);

// el(eg(P)) against P: a ↦ ↓a as an index map.
struct RoundTripLattice {
    Pseudolat image;
    std::vector<EIdx> nat;  // P index -> image index
    bool iso = false;       // bijective, preserves meet/join/0
};
RoundTripLattice roundtrip_lattice(const Pseudolat& P);

}  // namespace locba
