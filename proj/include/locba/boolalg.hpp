// Finite Boolean algebras with value semantics.
//
// Two carrier kinds cover everything the library touches:
//
//  * powerset  -- Powerset(n) for n atoms (n <= 16).  An element IS its
//                 characteristic bitmask over the atom set, and the element
//                 index equals that mask, so no tables are stored and the
//                 canonical element order is the numeric order of the mask.
//  * table     -- any other finite Boolean algebra (clopen algebras,
//                 regular-closed algebras, subalgebras, simple-ideal
//                 algebras, products).  Elements are arbitrary 64-bit codes
//                 over some ground set; ops are tabulated at construction.
//
// Either way elements are addressed by index 0..size()-1, sorted by code,
// and all algorithms in the library speak indices.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "locba/error.hpp"

namespace locba {

using EIdx = std::uint32_t;  // element index inside one algebra
using Mask = std::uint64_t;  // element code over a ground set (bit i = ground point i)

// Subset of an algebra's carrier, indexed by element index.
using Subset = std::vector<bool>;

class BoolAlg {
public:
    enum class Kind { powerset, table };

    static constexpr unsigned kMaxAtoms = 16;          // powerset construction cap
    static constexpr std::size_t kMaxTableSize = 4096; // table construction cap

    // Powerset(atom_count); atom_count == 0 gives the trivial algebra {0=1}.
    static BoolAlg powerset(unsigned atom_count);

    // General finite algebra from element codes and code-level operations.
    // `carrier` is deduplicated and sorted; ops must be closed over it.
    static BoolAlg from_ops(std::vector<Mask> carrier,
                            const std::function<Mask(Mask, Mask)>& meet_op,
                            const std::function<Mask(Mask, Mask)>& join_op,
                            const std::function<Mask(Mask)>& compl_op,
                            unsigned ground_bits);

    Kind kind() const { return kind_; }
    bool is_trivial() const { return size() == 1; }
    std::size_t size() const;

    EIdx zero() const { return zero_; }
    EIdx one() const { return one_; }
    EIdx meet(EIdx a, EIdx b) const;
    EIdx join(EIdx a, EIdx b) const;
    EIdx complement(EIdx a) const;
    bool leq(EIdx a, EIdx b) const { return meet(a, b) == a; }
    // Relative difference a \ b = a /\ b*.
    EIdx diff(EIdx a, EIdx b) const { return meet(a, complement(b)); }

    // Atoms = minimal nonzero elements, in canonical order.
    const std::vector<EIdx>& atoms() const { return atoms_; }
    unsigned atom_count() const { return static_cast<unsigned>(atoms_.size()); }

    // Atoms below an element, as positions into atoms().
    std::vector<unsigned> atoms_below(EIdx a) const;

    Mask code(EIdx a) const;
    std::optional<EIdx> index_of_code(Mask code) const;
    unsigned ground_bits() const { return ground_bits_; }

    // "{0,2}" over ground-point labels; the two bounds print as "0" and "1".
    std::string elem_name(EIdx a) const;

    // Join of a list (empty -> 0) and meet of a list (empty -> 1).
    EIdx join_all(const std::vector<EIdx>& xs) const;
    EIdx meet_all(const std::vector<EIdx>& xs) const;

    bool operator==(const BoolAlg& o) const;

private:
    BoolAlg() = default;

    Kind kind_ = Kind::powerset;
    unsigned pow_atoms_ = 0;   // powerset kind
    unsigned ground_bits_ = 0;

    // table kind only:
    std::vector<Mask> carrier_;
    std::vector<EIdx> meet_, join_;  // n*n, row-major
    std::vector<EIdx> compl_;
    EIdx zero_ = 0, one_ = 0;
    std::vector<EIdx> atoms_;

    void compute_atoms();
};

// --- Boolean-law verification -------------------------------------------
//
// Exhaustive check of the Boolean algebra laws on an explicit carrier.
// Meaningful for table-kind algebras whose ops were given set-theoretically
// (e.g. the regular-closed algebra of a space).

struct LawViolation {
    std::string law;  // e.g. "distributivity(meet over join)"
    EIdx a = 0, b = 0, c = 0;
};

// Empty optional = all laws hold.  Checks triples, so O(n^3).
std::optional<LawViolation> boolean_law_violation(const BoolAlg& A);

// --- Homomorphisms -------------------------------------------------------

// Element-level map between two finite algebras, with both endpoints owned.
struct BoolHom {
    BoolAlg src;
    BoolAlg dst;
    std::vector<EIdx> map;  // size == src.size()

    EIdx operator()(EIdx a) const { return map.at(a); }
};

// First violated preservation law under the canonical scan order:
// zero, one, then compl per element, then meet/join per lexicographic pair.
struct HomReport {
    bool ok = true;
    bool injective = false;
    bool surjective = false;
    std::string violated_law;  // empty when ok
    EIdx a = 0, b = 0;         // witnesses for the violation
};

HomReport hom_check(const BoolHom& h);

// Composition g . f (requires f.dst and g.src to be the same algebra).
BoolHom hom_compose(const BoolHom& g, const BoolHom& f);

BoolHom hom_identity(const BoolAlg& A);

// Extend an assignment of atoms to a (candidate) homomorphism:
// pattern[k] = image of the k-th atom of src.  The image of x is the join
// of the images of the atoms below x.
BoolHom hom_from_atom_images(const BoolAlg& src, const BoolAlg& dst,
                             const std::vector<EIdx>& pattern);

// Boolean isomorphism search via atom bijections; nullopt if none exists.
// `accept` (optional) filters candidate isomorphisms by extra conditions.
std::optional<BoolHom> find_isomorphism(
    const BoolAlg& A, const BoolAlg& B,
    const std::function<bool(const BoolHom&)>& accept = nullptr);

// Subalgebra of A generated by `gens`: returned as carrier subset of A
// (element indices, canonically sorted).
std::vector<EIdx> generated_subalgebra(const BoolAlg& A, const std::vector<EIdx>& gens);

// Package a subset of A's carrier (must be op-closed and contain 0,1) as a
// table-kind algebra; `back` receives, for each new element, its index in A.
BoolAlg subalgebra_as_algebra(const BoolAlg& A, const std::vector<EIdx>& members,
                              std::vector<EIdx>* back = nullptr);

}  // namespace locba
