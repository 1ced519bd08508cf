#pragma once

// Completions of local contact algebras at desk scale: the frame of delta
// ideals and its prime elements, embeddings between contact triples, moving
// delta ideals along a dense embedding, the canonical completion through the
// cluster space, equivalence of two completions, and the extension of a
// contact relation along a dense Boolean embedding.

#include <cstddef>
#include <string>
#include <vector>

#include "locba/bacore.hpp"
#include "locba/boolalg.hpp"
#include "locba/contact.hpp"

namespace locba {

// The equivalence search permutes target atoms.
inline constexpr unsigned kMaxEquivalenceAtoms = 8;

// --- the frame of delta ideals --------------------------------------------

// J is a delta ideal: an ideal inside the bounded part, every member of
// which is well inside some other member.
bool is_delta_ideal(const ContactTriple& T, const Subset& J);

// Every delta ideal of the triple, in ascending mask order.  Ordered by
// inclusion they form the frame of the triple.
std::vector<Subset> delta_ideals(const ContactTriple& T);

// J is a prime element of the frame: whenever the intersection of two delta
// ideals lands inside J, one of them already sits inside J.  The top of the
// frame (the delta ideal containing every other) never counts as prime.
// Throws when J is not a delta ideal at all.
bool is_prime_element(const ContactTriple& T, const Subset& J);

// --- embeddings between contact triples -----------------------------------

struct ContactEmbeddingReport {
    bool hom_ok = false;
    bool injective = false;
    bool contact_agree = false;         // a rho b iff phi(a) rho' phi(b)
    bool bounded_into_bounded = false;  // bounded elements land on bounded images
    bool bounded_reflected = false;     // and only they do
    bool dense_image = false;           // every nonzero target sits above an image
    bool embedding = false;        // hom_ok, injective, contact_agree, bounded_into_bounded
    bool dense_embedding = false;  // embedding with a dense image
    std::string note;              // first failed requirement, empty when dense_embedding
};

ContactEmbeddingReport check_contact_embedding(const ContactTriple& src,
                                               const ContactTriple& dst,
                                               const BoolHom& phi);

// The members sit between every well-inside pair of the triple (they must
// all be bounded, and the triple must pass the local contact axioms).
bool is_dv_dense(const ContactTriple& T, const Subset& members);

// --- moving delta ideals along a dense embedding --------------------------

// Pre for both: phi is a dense embedding of src into dst whose bounded image
// is dV-dense.  restrict pulls a delta ideal of dst back to src; extend
// pushes a delta ideal of src to the down-closure of its image.  The two are
// mutually inverse and carry prime elements to prime elements.
Subset restrict_delta(const ContactTriple& src, const ContactTriple& dst,
                      const BoolHom& phi, const Subset& J);
Subset extend_delta(const ContactTriple& src, const ContactTriple& dst,
                    const BoolHom& phi, const Subset& J);

// --- the canonical completion ---------------------------------------------

struct CompletionPair {
    BoolHom embedding;     // source algebra into the target's
    ContactTriple target;  // complete triple receiving the source
    ContactEmbeddingReport certificate;
    bool dv_dense = false;         // the embedded bounded part is dV-dense
    bool target_complete = false;  // the target passes the complete local axioms
};

// Embeds the triple into the regular-closed algebra of its own cluster
// space.  Every certificate is re-checked on the result.
CompletionPair lca_completion(const ContactTriple& T);

struct EquivalenceReport {
    bool equivalent = false;
    std::vector<EIdx> iso;  // first target's elements onto the second's
    std::string note;       // exhaustion certificate when not equivalent
};

// Two completions of the same triple are equivalent when an isomorphism of
// the targets connects the embeddings.  The search runs over atom bijections
// of the targets.
EquivalenceReport completions_equivalent(const ContactTriple& T, const CompletionPair& c1,
                                         const CompletionPair& c2);

// --- extending the contact relation ---------------------------------------

struct ContactExtensionReport {
    Relation eta;
    Subset target_bounded;        // down-closure of the embedded bounded part
    std::size_t case1_pairs = 0;  // well-inside queries answered in the bounded case
    std::size_t case2_pairs = 0;  // well-inside queries routed through the primes
};

// Extends the contact of src along a dense injective homomorphism phi into
// target.  A well-inside query with a bounded left side is answered by a
// source well-inside pair sitting between the two elements; an unbounded
// left side is answered against every prime of the source frame.  Extending
// along the identity returns the source contact unchanged.
ContactExtensionReport extend_contact(const ContactTriple& src, const BoolAlg& target,
                                      const BoolHom& phi);

}  // namespace locba
