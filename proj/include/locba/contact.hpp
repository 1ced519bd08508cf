#pragma once

// Contact relations on finite Boolean algebras: axiom checking, the overlap
// contact, contact from a dense subalgebra, bases and weight, products,
// the Alexandroff extension, and clusters.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locba/bacore.hpp"
#include "locba/boolalg.hpp"
#include "locba/error.hpp"
#include "locba/fincofin.hpp"

namespace locba {

inline constexpr EIdx kMaxContactSize = 256;  // axiom scans are cubic

// Symmetric relation over element indices, stored extensionally.
struct Relation {
    EIdx n = 0;
    std::vector<bool> bits;  // n*n, kept symmetric through set_pair

    static Relation empty(EIdx n);
    bool at(EIdx a, EIdx b) const { return bits[static_cast<std::size_t>(a) * n + b]; }
    void set_pair(EIdx a, EIdx b, bool v);
    std::size_t pair_count() const;  // ordered pairs currently related
    bool operator==(const Relation&) const = default;
};

// (algebra, contact relation, bounded ideal ⅅ)
struct ContactTriple {
    BoolAlg algebra;
    Relation rho;
    Subset bounded;
};

struct Cluster {
    Subset members;
    bool bounded = false;  // meets the bounded ideal
};

// One failed axiom with its first witness; c is meaningful only when has_c.
struct AxiomWitness {
    std::string axiom;
    EIdx a = 0, b = 0, c = 0;
    bool has_c = false;
};

struct AxiomReport {
    bool contact = false;  // C1-C4
    bool nca = false;      // contact + interpolation + density of ≪
    bool lca = false;      // contact + bounded ideal + BC1-BC3
    bool clca = false;     // lca + complete algebra (finite: always complete)
    bool complete = true;
    std::vector<AxiomWitness> violations;
};

// a is well inside b: a not in contact with the complement of b.
bool well_inside(const ContactTriple& T, EIdx a, EIdx b);

// The overlap relation a∧b ≠ 0 (the smallest contact relation).
Relation overlap_relation(const BoolAlg& A);

// Reflexive symmetric closure of atom pairs, lifted to elements:
// aρb iff some atom of a relates to some atom of b.
ContactTriple triple_from_atom_relation(const BoolAlg& A,
                                        const std::vector<std::pair<unsigned, unsigned>>& pairs,
                                        const Subset& bounded);

AxiomReport check_axioms(const ContactTriple& T);

// Overlap contact on a local pair; the result passes every LCA axiom.
ContactTriple rho_s(const BoolAlg& A, const Subset& bounded);

// Symbolic overlap contact on the finite-or-cofinite carrier.
inline bool fc_rho_s(const FcElem& a, const FcElem& b) {
    return !fc_is_zero(fc_meet(a, b));
}

// Contact induced by a dense subalgebra: a is well inside b iff some
// member of the subalgebra separates them; ⅅ is everything.
ContactTriple contact_from_dense_subalgebra(const BoolAlg& A, const Subset& sub);

// Elements well inside themselves.
Subset a_s(const ContactTriple& T);

// Base: every well-inside pair a ≪ c inside ⅅ is separated by a member.
// The sandwich (a ≤ b ≤ c) and double-well-inside (a ≪ b ≪ c) criteria
// are both evaluated and must agree.
bool is_base(const ContactTriple& T, const Subset& candidate);

struct WeightResult {
    std::size_t value = 0;
    std::vector<EIdx> base;  // first minimal base in the deterministic order
};

// Minimum base cardinality; increasing cardinality, then lexicographic on
// element order.
WeightResult weight(const ContactTriple& T);

// Coordinatewise product; contact holds when it holds in some coordinate.
ContactTriple product(const std::vector<ContactTriple>& factors);

// Adds contact between every two unbounded elements.
Relation alexandroff_extension(const ContactTriple& T);

// σ_u = everything in extended contact with all of u.
Subset sigma_of_ultrafilter(const ContactTriple& T, const Subset& u);

// First violated cluster axiom of σ under the extended contact, if any.
std::optional<std::string> cluster_violation(const ContactTriple& T, const Subset& sigma);

// All clusters, found by exhaustive subset scan (|A| ≤ 16).
std::vector<Cluster> clusters(const ContactTriple& T);
std::vector<Cluster> bounded_clusters(const ContactTriple& T);

}  // namespace locba
