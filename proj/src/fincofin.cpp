#include "locba/fincofin.hpp"

#include <algorithm>

namespace locba {

namespace {

std::vector<unsigned> normalize(std::vector<unsigned> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<unsigned> set_and(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<unsigned> set_or(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<unsigned> set_minus(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_subset(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

unsigned first_not_in(const std::vector<unsigned>& s) {
    unsigned x = 0;
    for (unsigned v : s) {
        if (v != x) break;
        ++x;
    }
    return x;
}

}  // namespace

FcElem fc_fin(std::vector<unsigned> s) { return FcElem{normalize(std::move(s)), false}; }
FcElem fc_cof(std::vector<unsigned> s) { return FcElem{normalize(std::move(s)), true}; }

FcElem fc_meet(const FcElem& a, const FcElem& b) {
    if (!a.cofinite && !b.cofinite) return {set_and(a.set, b.set), false};
    if (!a.cofinite && b.cofinite) return {set_minus(a.set, b.set), false};
    if (a.cofinite && !b.cofinite) return {set_minus(b.set, a.set), false};
    return {set_or(a.set, b.set), true};
}

FcElem fc_join(const FcElem& a, const FcElem& b) {
    if (!a.cofinite && !b.cofinite) return {set_or(a.set, b.set), false};
    if (!a.cofinite && b.cofinite) return {set_minus(b.set, a.set), true};
    if (a.cofinite && !b.cofinite) return {set_minus(a.set, b.set), true};
    return {set_and(a.set, b.set), true};
}

bool fc_leq(const FcElem& a, const FcElem& b) { return fc_meet(a, b) == a; }

std::string fc_name(const FcElem& a) {
    if (fc_is_zero(a)) return "0";
    if (a.cofinite && a.set.empty()) return "1";
    std::string out = a.cofinite ? "~{" : "{";
    for (std::size_t i = 0; i < a.set.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a.set[i]);
    }
    return out + "}";
}

FcElem fc_dense_minorant(const FcElem& a) {
    if (fc_is_zero(a)) throw Error::validation("zero has no nonzero minorant");
    if (!a.cofinite) return fc_fin({a.set.front()});
    return fc_fin({first_not_in(a.set)});
}

FcElem fc_fin_not_downset_of(const FcElem& g) {
    if (g.cofinite) return g;  // below itself, outside Fin
    return fc_fin({first_not_in(g.set)});
}

FcElem fc_relative_complement(const FcElem& a, const FcElem& b, const FcElem& c) {
    if (a.cofinite || b.cofinite || c.cofinite)
        throw Error::validation("relative complements are taken inside Fin");
    if (!fc_leq(b, a) || !fc_leq(a, c))
        throw Error::validation("interval violation: need b <= a <= c");
    return fc_fin(set_or(b.set, set_minus(c.set, a.set)));
}

bool fc_uf_contains(const FcUltrafilter& u, const FcElem& a) {
    if (!u.principal) return a.cofinite;
    bool listed = std::binary_search(a.set.begin(), a.set.end(), u.index);
    return a.cofinite ? !listed : listed;
}

FcElem fc_uf_bounded_witness(const FcUltrafilter& u) {
    if (!u.principal) throw Error::validation("the cofinite ultrafilter misses Fin");
    return fc_fin({u.index});
}

std::string fc_ultrafilter_family_description() {
    return "principal ultrafilter at each index (all bounded) plus the "
           "ultrafilter of cofinite elements (unbounded)";
}

bool fc_si_contains(const FcSimpleIdeal& J, const FcElem& a) {
    if (a.cofinite) return false;
    if (!J.region.cofinite) return set_subset(a.set, J.region.set);
    // region is the complement of a finite set: stay disjoint from it
    return set_and(a.set, J.region.set).empty();
}

bool fc_evens_upper_bound(const FcElem& u) {
    if (!u.cofinite) return false;  // must exceed unboundedly large finite sets
    for (unsigned v : u.set)
        if (v % 2 == 0) return false;  // an even index escapes u
    return true;
}

FcElem fc_evens_smaller_upper_bound(const FcElem& u) {
    if (!fc_evens_upper_bound(u))
        throw Error::validation("not an upper bound of the even-index family");
    unsigned odd = 1;
    while (std::binary_search(u.set.begin(), u.set.end(), odd)) odd += 2;
    std::vector<unsigned> bigger = u.set;
    bigger.push_back(odd);
    return fc_cof(std::move(bigger));
}

std::string fc_evens_description() {
    return "finite sets of even indices: a simple ideal whose upper bounds "
           "form a strictly descending family with no least member";
}

}  // namespace locba
