// Distributive {0}-pseudolattices and their ideal theory: pseudocomplements
// of ideals, simple ideals and the Boolean algebra they form, relative
// complements (the GBPL condition), the down-set embedding e, the subalgebra
// B_A(I), and the join map Sigma from simple ideals back to the algebra.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locba/bacore.hpp"
#include "locba/boolalg.hpp"
#include "locba/error.hpp"

namespace locba {

// Finite distributive pseudolattice with 0 (finiteness also gives a top).
// Exposes the same carrier API as BoolAlg minus complement, so the generic
// helpers in bacore.hpp (ideals, density, pi-weight, enumeration) apply.
// Construction validates closure, the lattice laws, distributivity, and
// that 0 is the bottom; a violation is a validation error naming the law.
class Pseudolat {
public:
    static Pseudolat from_boolalg(const BoolAlg& A);
    // Total order 0 < 1 < ... < n-1 on n >= 1 levels; element names are the
    // level numbers.
    static Pseudolat chain(unsigned n);
    // Restriction of A to one of its ideals (subset over A's indices).
    static Pseudolat from_ideal(const BoolAlg& A, const Subset& ideal);
    // General finite pseudolattice from element codes and code-level ops.
    static Pseudolat from_ops(std::vector<Mask> carrier,
                              const std::function<Mask(Mask, Mask)>& meet_op,
                              const std::function<Mask(Mask, Mask)>& join_op);

    std::size_t size() const { return codes_.size(); }
    EIdx zero() const { return zero_; }
    EIdx one() const { return one_; }
    EIdx meet(EIdx a, EIdx b) const { return meet_[a * size() + b]; }
    EIdx join(EIdx a, EIdx b) const { return join_[a * size() + b]; }
    bool leq(EIdx a, EIdx b) const { return meet(a, b) == a; }

    Mask code(EIdx i) const { return codes_[i]; }
    std::optional<EIdx> index_of_code(Mask c) const;
    const std::string& elem_name(EIdx i) const { return names_[i]; }

    bool operator==(const Pseudolat& o) const {
        return codes_ == o.codes_ && meet_ == o.meet_ && join_ == o.join_;
    }

private:
    Pseudolat() = default;
    void finalize();  // tables assumed filled; validates everything

    std::vector<Mask> codes_;        // sorted, unique
    std::vector<EIdx> meet_, join_;  // n*n tables
    std::vector<std::string> names_;
    EIdx zero_ = 0, one_ = 0;
};

// --- ideal-lattice operations -------------------------------------------

// ¬J = {a | a∧b = 0 for all b in J}; always an ideal over a distributive
// carrier (verified defensively).  J must be an ideal.
Subset pseudocomplement(const Pseudolat& P, const Subset& J);

// Join of two ideals inside Idl(P): the ideal generated by their union.
Subset ideal_lattice_join(const Pseudolat& P, const Subset& J1, const Subset& J2);

// J is simple iff J ∨ ¬J = P in the ideal lattice.
bool is_simple(const Pseudolat& P, const Subset& J);

// All simple ideals as index masks, canonically ordered (numeric mask order).
std::vector<IdxMask> simple_ideals(const Pseudolat& P);

// The simple ideals packaged as a Boolean algebra: element codes are the
// ideal masks over P's indices; meet = intersection, join = ideal-lattice
// join, complement = pseudocomplement.  Closure under all three and the
// full Boolean laws are verified at construction.
struct SiAlgebra {
    BoolAlg algebra;               // table kind, codes = ideal masks
    std::vector<IdxMask> members;  // members[i] = ideal mask of element i
};
SiAlgebra si_algebra(const Pseudolat& P);

// --- GBPL ----------------------------------------------------------------

// Relative-complement condition: every a in [b,c] has x with a∧x=b, a∨x=c.
// Checked against the equivalent criterion "every principal ideal is
// simple"; disagreement would be an internal invariant failure.  The
// witness is the first failing triple (a, b, c) in canonical scan order.
struct GbplReport {
    bool gbpl = true;
    bool has_witness = false;
    EIdx a = 0, b = 0, c = 0;  // a in [b,c] lacking a relative complement
};
GbplReport is_gbpl(const Pseudolat& P);

// --- the e embedding and B_A(I) -----------------------------------------

// e(a) = ↓a, a {0}-pseudolattice embedding of a GBPL into Si(P) with dense
// image; the image together with Si(P) forms a local pair (dense ideal).
// Precondition: is_gbpl(P); otherwise a validation error.
struct EmbedE {
    SiAlgebra si;
    std::vector<EIdx> map;  // P index -> index into si.algebra
    bool injective = false;
    bool preserves_ops = false;  // 0, meet, join
    bool dense_image = false;
    bool image_is_ideal = false;  // downward closed, join closed in Si
};
EmbedE embed_e(const Pseudolat& P);

// B_A(I) = I ∪ {a* | a in I} as a subalgebra of A, for a proper ideal I.
// I is verified to be a prime ideal of the result.
struct BofResult {
    BoolAlg sub;                  // table kind, codes inherited from A
    std::vector<EIdx> members;    // indices in A, canonical order
    Subset ideal_in_sub;          // I as a subset of sub's carrier
    bool ideal_prime_in_sub = false;
};
BofResult b_of(const BoolAlg& A, const Subset& I);

// --- Sigma ---------------------------------------------------------------

// Sigma_(B,I): Si(I) -> B, J ↦ ⋁_B J.  Requires (B, I) to be a local pair
// (I a dense ideal of B); on finite carriers every simple ideal has a join,
// so the map is total and is verified to be a Boolean isomorphism.  (The
// no-join failure mode exists only over symbolic carriers and is exercised
// in the finite–cofinite module.)
struct SigmaZlba {
    SiAlgebra si;    // Si of I viewed as a pseudolattice
    BoolHom map;     // si.algebra -> B
    HomReport report;
    bool bijective = false;
};
SigmaZlba sigma_zlba(const BoolAlg& B, const Subset& I);

}  // namespace locba
