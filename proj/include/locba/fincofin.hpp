// The finite–cofinite algebra over a countable index family, handled
// symbolically: each element is either a finite set of indices or the
// complement of one.  This is the one infinite carrier in the library; it
// exists because a prime dense ideal is necessarily non-principal, which no
// finite algebra can exhibit.  All answers about it are descriptor-level
// with constructive witnesses, never enumerations.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locba/error.hpp"

namespace locba {

// A finite index set, or the complement of one ("cofinite").
struct FcElem {
    std::vector<unsigned> set;  // sorted, unique
    bool cofinite = false;
    bool operator==(const FcElem&) const = default;
};

FcElem fc_fin(std::vector<unsigned> s);
FcElem fc_cof(std::vector<unsigned> s);
inline FcElem fc_zero() { return FcElem{{}, false}; }
inline FcElem fc_one() { return FcElem{{}, true}; }
inline bool fc_is_zero(const FcElem& a) { return !a.cofinite && a.set.empty(); }

FcElem fc_meet(const FcElem& a, const FcElem& b);
FcElem fc_join(const FcElem& a, const FcElem& b);
inline FcElem fc_complement(FcElem a) {
    a.cofinite = !a.cofinite;
    return a;
}
bool fc_leq(const FcElem& a, const FcElem& b);
std::string fc_name(const FcElem& a);  // "{1,2}" / "~{0}" / "0" / "1"

// --- the ideal Fin of finite elements ------------------------------------

inline bool fc_in_fin(const FcElem& a) { return !a.cofinite; }

// Density of Fin: a nonzero singleton below any nonzero element.
FcElem fc_dense_minorant(const FcElem& a);

// Fin is not the down-set of any single element: for a finite candidate g
// the returned element lies in Fin but not below g; for a cofinite g the
// candidate itself is below g yet outside Fin (the function returns g).
FcElem fc_fin_not_downset_of(const FcElem& g);

// --- relative complements inside Fin --------------------------------------

// For finite b <= a <= c: the x in Fin with a∧x=b and a∨x=c.
FcElem fc_relative_complement(const FcElem& a, const FcElem& b, const FcElem& c);

// --- ultrafilters ----------------------------------------------------------

// Either the principal ultrafilter at one index, or the ultrafilter of all
// cofinite elements.  These are exactly the ultrafilters of this carrier.
struct FcUltrafilter {
    bool principal = true;
    unsigned index = 0;  // meaningful when principal
    bool operator==(const FcUltrafilter&) const = default;
};

bool fc_uf_contains(const FcUltrafilter& u, const FcElem& a);
// Bounded = meets Fin.  Principal ultrafilters are bounded (the singleton
// witnesses it); the cofinite ultrafilter contains only cofinite elements.
inline bool fc_uf_bounded(const FcUltrafilter& u) { return u.principal; }
// Witness for a bounded ultrafilter: a member lying in Fin.
FcElem fc_uf_bounded_witness(const FcUltrafilter& u);
std::string fc_ultrafilter_family_description();

// --- simple ideals of Fin --------------------------------------------------

// The representable simple ideals of the pseudolattice Fin are the families
// Fin(S) = {finite subsets of S} for S itself finite or cofinite; S is
// carried as an FcElem.  Their Boolean structure mirrors the element
// operations on the regions, which is how the double-dual of Fin recovers
// the finite–cofinite pair.
struct FcSimpleIdeal {
    FcElem region;
    bool operator==(const FcSimpleIdeal&) const = default;
};

bool fc_si_contains(const FcSimpleIdeal& J, const FcElem& a);
inline FcSimpleIdeal fc_si_meet(const FcSimpleIdeal& a, const FcSimpleIdeal& b) {
    return {fc_meet(a.region, b.region)};
}
inline FcSimpleIdeal fc_si_join(const FcSimpleIdeal& a, const FcSimpleIdeal& b) {
    return {fc_join(a.region, b.region)};
}
inline FcSimpleIdeal fc_si_complement(const FcSimpleIdeal& a) {
    return {fc_complement(a.region)};
}
inline bool fc_si_principal(const FcSimpleIdeal& a) { return !a.region.cofinite; }

// --- the simple ideal with no join ----------------------------------------

// Fin(evens) = {finite sets of even indices} is simple but has no join in
// the carrier: its upper bounds are the cofinite elements whose complement
// is all odd, and every such bound strictly exceeds another one.
bool fc_evens_upper_bound(const FcElem& u);
FcElem fc_evens_smaller_upper_bound(const FcElem& u);
std::string fc_evens_description();

// --- cardinal bookkeeping --------------------------------------------------

struct FcCardinal {
    bool finite = true;
    std::size_t value = 0;  // meaningful when finite; otherwise aleph_0
};

// pi-weight of the carrier: countable, witnessed by the singletons.
inline FcCardinal fc_pi_weight() { return FcCardinal{false, 0}; }

}  // namespace locba
