#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "locba/completion.hpp"
#include "locba/duality.hpp"
#include "locba/lba.hpp"

using namespace locba;

namespace {

Subset all_of(const BoolAlg& A) { return Subset(A.size(), true); }

Subset only(const BoolAlg& A, const std::vector<EIdx>& members) {
    Subset s(A.size(), false);
    for (EIdx m : members) s[m] = true;
    return s;
}

bool triple_eq(const ContactTriple& a, const ContactTriple& b) {
    return a.algebra == b.algebra && a.rho == b.rho && a.bounded == b.bounded;
}

// Every local triple the desk scale reaches: overlap contacts on powerset
// and table carriers plus regular-closed triples of small spaces.
std::vector<ContactTriple> lca_corpus() {
    std::vector<ContactTriple> out;
    for (unsigned n = 0; n <= 4; ++n) {
        BoolAlg A = BoolAlg::powerset(n);
        Subset b = all_of(A);
        out.push_back(rho_s(A, b));
    }
    BoolAlg table = co_algebra(FinSpace::discrete(2));
    out.push_back(rho_s(table, all_of(table)));
    out.push_back(psi_t(FinSpace::sierpinski()));
    out.push_back(psi_t(FinSpace::discrete(2)));
    return out;
}

Subset bounded_image(const ContactTriple& src, const ContactTriple& dst, const BoolHom& phi) {
    Subset img(dst.algebra.size(), false);
    for (EIdx a = 0; a < src.algebra.size(); ++a)
        if (src.bounded[a]) img[phi(a)] = true;
    return img;
}

}  // namespace

TEST_CASE("delta ideals of the overlap contact") {
    for (unsigned n = 1; n <= 4; ++n) {
        BoolAlg A = BoolAlg::powerset(n);
        ContactTriple T = rho_s(A, all_of(A));
        std::vector<Subset> frame = delta_ideals(T);
        // overlap makes every element well inside itself, so the frame is
        // exactly the principal ideals
        CHECK(frame.size() == A.size());
        for (EIdx c = 0; c < A.size(); ++c)
            CHECK(std::find(frame.begin(), frame.end(), downset_of(A, c)) != frame.end());
        // ascending mask order is the published order
        for (std::size_t i = 1; i < frame.size(); ++i)
            CHECK(mask_from_subset(frame[i - 1]) < mask_from_subset(frame[i]));
        // primes are the ideals below a complemented atom, one per atom
        std::size_t primes = 0;
        for (const Subset& J : frame)
            if (is_prime_element(T, J)) ++primes;
        CHECK(primes == A.atom_count());
        for (EIdx at : A.atoms())
            CHECK(is_prime_element(T, downset_of(A, A.complement(at))));
        CHECK_FALSE(is_prime_element(T, downset_of(A, A.one())));
        CHECK(is_prime_element(T, downset_of(A, A.zero())) == (n == 1));
    }
    BoolAlg A2 = BoolAlg::powerset(2);
    ContactTriple T2 = rho_s(A2, all_of(A2));
    CHECK_THROWS_WITH_AS(is_delta_ideal(T2, Subset(3, false)),
                         doctest::Contains("flags matching the carrier size"), Error);
}

TEST_CASE("delta ideals filtered by interpolation") {
    BoolAlg A = BoolAlg::powerset(2);
    const EIdx p = *A.index_of_code(1);
    const EIdx q = *A.index_of_code(2);
    // linked atoms put every nonzero pair in contact, so only the top is
    // well inside anything and most ideals lose the interpolation property
    ContactTriple TL = triple_from_atom_relation(A, {{0, 1}}, all_of(A));
    CHECK_FALSE(is_delta_ideal(TL, downset_of(A, p)));
    CHECK_FALSE(is_delta_ideal(TL, downset_of(A, q)));
    CHECK(is_delta_ideal(TL, downset_of(A, A.zero())));
    CHECK(is_delta_ideal(TL, all_of(A)));
    std::vector<Subset> frame = delta_ideals(TL);
    REQUIRE(frame.size() == 2);
    CHECK(frame[0] == downset_of(A, A.zero()));
    CHECK(frame[1] == all_of(A));
    CHECK(is_prime_element(TL, frame[0]));
    CHECK_FALSE(is_prime_element(TL, frame[1]));
    CHECK_THROWS_WITH_AS(is_prime_element(TL, downset_of(A, p)),
                         doctest::Contains("needs a delta ideal"), Error);

    // a proper bounded ideal turns the frame into a two-element chain, and
    // the bottom of a chain is prime
    ContactTriple Tp{A, overlap_relation(A), downset_of(A, p)};
    std::vector<Subset> chain = delta_ideals(Tp);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == downset_of(A, A.zero()));
    CHECK(chain[1] == downset_of(A, p));
    CHECK(is_prime_element(Tp, chain[0]));
    CHECK_FALSE(is_prime_element(Tp, chain[1]));
}

TEST_CASE("the embedding checker") {
    BoolAlg A1 = BoolAlg::powerset(1);
    BoolAlg A2 = BoolAlg::powerset(2);
    ContactTriple T1 = rho_s(A1, all_of(A1));
    ContactTriple T2 = rho_s(A2, all_of(A2));
    const EIdx p = *A2.index_of_code(1);

    ContactEmbeddingReport idrep = check_contact_embedding(T2, T2, hom_identity(A2));
    CHECK(idrep.dense_embedding);
    CHECK(idrep.bounded_reflected);
    CHECK(idrep.note.empty());

    // the unit interval embedding of the two-element algebra is everything
    // but dense
    BoolHom unit = hom_from_atom_images(A1, A2, {A2.one()});
    ContactEmbeddingReport urep = check_contact_embedding(T1, T2, unit);
    CHECK(urep.embedding);
    CHECK_FALSE(urep.dense_image);
    CHECK_FALSE(urep.dense_embedding);
    CHECK(urep.note.find("dense") != std::string::npos);

    // a character collapses the two atoms and cannot be injective
    BoolHom chi = hom_from_atom_images(A2, A1, {A1.one(), A1.zero()});
    ContactEmbeddingReport crep = check_contact_embedding(T2, T1, chi);
    CHECK(crep.hom_ok);
    CHECK_FALSE(crep.injective);
    CHECK_FALSE(crep.embedding);
    CHECK(crep.note == "the map is not injective");

    // same carrier, different contact
    ContactTriple TL = triple_from_atom_relation(A2, {{0, 1}}, all_of(A2));
    ContactEmbeddingReport lrep = check_contact_embedding(TL, T2, hom_identity(A2));
    CHECK_FALSE(lrep.contact_agree);
    CHECK(lrep.note.find("contact disagrees") != std::string::npos);

    // a smaller bounded part on the source is an embedding whose bounded
    // flags are not reflected
    ContactTriple Tp{A2, overlap_relation(A2), downset_of(A2, p)};
    ContactEmbeddingReport prep = check_contact_embedding(Tp, T2, hom_identity(A2));
    CHECK(prep.embedding);
    CHECK_FALSE(prep.bounded_reflected);
    CHECK(prep.note.find("lands on a bounded image") != std::string::npos);

    CHECK_THROWS_WITH_AS(check_contact_embedding(T2, T2, unit),
                         doctest::Contains("between the two carriers"), Error);

    // dV-density through the well-inside sandwich
    WeightResult w = weight(T2);
    CHECK(is_dv_dense(T2, only(A2, w.base)));
    CHECK_FALSE(is_dv_dense(T2, only(A2, {A2.zero(), p})));
    CHECK_THROWS_WITH_AS(is_dv_dense(Tp, all_of(A2)),
                         doctest::Contains("outside the bounded ideal"), Error);
}

TEST_CASE("moving delta ideals along the identity") {
    for (const ContactTriple& T : lca_corpus()) {
        BoolHom id = hom_identity(T.algebra);
        for (const Subset& J : delta_ideals(T)) {
            CHECK(restrict_delta(T, T, id, J) == J);
            CHECK(extend_delta(T, T, id, J) == J);
        }
    }
}

TEST_CASE("moving delta ideals along an atom swap") {
    BoolAlg A = BoolAlg::powerset(2);
    ContactTriple T = rho_s(A, all_of(A));
    const EIdx p = *A.index_of_code(1);
    const EIdx q = *A.index_of_code(2);
    BoolHom swap = hom_from_atom_images(A, A, {A.atoms()[1], A.atoms()[0]});
    CHECK(restrict_delta(T, T, swap, downset_of(A, p)) == downset_of(A, q));
    CHECK(extend_delta(T, T, swap, downset_of(A, p)) == downset_of(A, q));
    for (const Subset& J : delta_ideals(T)) {
        // the two moves undo each other and carry primes to primes
        CHECK(restrict_delta(T, T, swap, extend_delta(T, T, swap, J)) == J);
        CHECK(extend_delta(T, T, swap, restrict_delta(T, T, swap, J)) == J);
        CHECK(is_prime_element(T, extend_delta(T, T, swap, J)) == is_prime_element(T, J));
    }
}

TEST_CASE("preconditions for moving delta ideals") {
    BoolAlg A1 = BoolAlg::powerset(1);
    BoolAlg A2 = BoolAlg::powerset(2);
    ContactTriple T1 = rho_s(A1, all_of(A1));
    ContactTriple T2 = rho_s(A2, all_of(A2));
    const EIdx p = *A2.index_of_code(1);
    BoolHom unit = hom_from_atom_images(A1, A2, {A2.one()});
    CHECK_THROWS_WITH_AS(restrict_delta(T1, T2, unit, downset_of(A2, A2.zero())),
                         doctest::Contains("needs a dense embedding"), Error);

    ContactTriple Tp{A2, overlap_relation(A2), downset_of(A2, p)};
    CHECK_THROWS_WITH_AS(extend_delta(Tp, T2, hom_identity(A2), downset_of(A2, A2.zero())),
                         doctest::Contains("dV-dense bounded image"), Error);

    BoolHom id2 = hom_identity(A2);
    const EIdx q = *A2.index_of_code(2);
    CHECK_THROWS_WITH_AS(restrict_delta(T2, T2, id2, only(A2, {A2.zero(), p, q})),
                         doctest::Contains("delta ideal of the target"), Error);
    CHECK_THROWS_WITH_AS(extend_delta(T2, T2, id2, only(A2, {A2.zero(), p, q})),
                         doctest::Contains("delta ideal of the source"), Error);

    ContactTriple bad{A2, overlap_relation(A2), only(A2, {p})};
    CHECK_THROWS_WITH_AS(extend_delta(bad, T2, id2, downset_of(A2, A2.zero())),
                         doctest::Contains("ideal as the source bounded part"), Error);
}

TEST_CASE("the canonical completion of the corpus") {
    for (const ContactTriple& T : lca_corpus()) {
        CompletionPair c = lca_completion(T);
        CHECK(c.certificate.dense_embedding);
        CHECK(c.certificate.bounded_reflected);
        CHECK(c.certificate.note.empty());
        CHECK(c.dv_dense);
        CHECK(c.target_complete);
        CHECK(check_axioms(c.target).clca);
        // a finite triple is already complete, so its completion cannot
        // properly enlarge it
        HomReport hr = hom_check(c.embedding);
        CHECK(hr.ok);
        CHECK(hr.injective);
        CHECK(hr.surjective);
        CHECK(c.target.algebra.size() == T.algebra.size());
    }
    BoolAlg A0 = BoolAlg::powerset(0);
    CompletionPair trivial = lca_completion(rho_s(A0, all_of(A0)));
    CHECK(trivial.target.algebra.size() == 1);

    // the target is the regular-closed triple of the cluster space
    BoolAlg A2 = BoolAlg::powerset(2);
    ContactTriple T2 = rho_s(A2, all_of(A2));
    CompletionPair c2 = lca_completion(T2);
    CHECK(triple_eq(c2.target, psi_t(psi_a(T2))));
}

TEST_CASE("equivalence of completions") {
    BoolAlg A2 = BoolAlg::powerset(2);
    ContactTriple T2 = rho_s(A2, all_of(A2));
    CompletionPair c = lca_completion(T2);

    EquivalenceReport self = completions_equivalent(T2, c, c);
    CHECK(self.equivalent);
    CHECK(self.iso == hom_identity(c.target.algebra).map);

    // the triple embedded into itself by the identity is also a completion,
    // and the two are connected by an isomorphism
    CompletionPair plain{hom_identity(A2), T2, check_contact_embedding(T2, T2, hom_identity(A2)),
                         true, true};
    EquivalenceReport back = completions_equivalent(T2, c, plain);
    CHECK(back.equivalent);

    // relabeling the target atoms gives an equivalent completion whose
    // connecting isomorphism is exactly the relabeling
    BoolAlg TA = c.target.algebra;
    BoolHom psi = hom_from_atom_images(TA, TA, {TA.atoms()[1], TA.atoms()[0]});
    Relation r2 = Relation::empty(static_cast<EIdx>(TA.size()));
    for (EIdx a = 0; a < TA.size(); ++a)
        for (EIdx b = 0; b < TA.size(); ++b)
            if (c.target.rho.at(a, b)) r2.set_pair(psi.map[a], psi.map[b], true);
    Subset b2(TA.size(), false);
    for (EIdx a = 0; a < TA.size(); ++a)
        if (c.target.bounded[a]) b2[psi.map[a]] = true;
    ContactTriple relabeled{TA, r2, b2};
    CompletionPair moved{hom_compose(psi, c.embedding), relabeled,
                         check_contact_embedding(T2, relabeled, hom_compose(psi, c.embedding)),
                         true, true};
    EquivalenceReport rel = completions_equivalent(T2, c, moved);
    CHECK(rel.equivalent);
    CHECK(rel.iso == psi.map);

    // a target of the wrong cardinality is exhausted without a search
    BoolAlg A1 = BoolAlg::powerset(1);
    ContactTriple T1 = rho_s(A1, all_of(A1));
    CompletionPair c1 = lca_completion(T1);
    BoolHom unit = hom_from_atom_images(A1, A2, {A2.one()});
    CompletionPair fat{unit, T2, check_contact_embedding(T1, T2, unit), false, true};
    EquivalenceReport no = completions_equivalent(T1, c1, fat);
    CHECK_FALSE(no.equivalent);
    CHECK(no.note.find("different sizes") != std::string::npos);

    CHECK_THROWS_WITH_AS(completions_equivalent(T2, c, c1),
                         doctest::Contains("completions of the given triple"), Error);
    CompletionPair astray{hom_identity(A2), c.target, c.certificate, true, true};
    CHECK_THROWS_WITH_AS(completions_equivalent(T2, c, astray),
                         doctest::Contains("landing in the completion targets"), Error);
}

TEST_CASE("the contact extension is idempotent on the corpus") {
    for (const ContactTriple& T : lca_corpus()) {
        ContactExtensionReport r = extend_contact(T, T.algebra, hom_identity(T.algebra));
        CHECK(r.eta == T.rho);
        CHECK(r.target_bounded == all_of(T.algebra));
        CHECK(r.case2_pairs == 0);
        CHECK(r.case1_pairs == T.algebra.size() * static_cast<std::size_t>(T.algebra.size()));
    }
}

TEST_CASE("the contact extension routes unbounded elements through the primes") {
    BoolAlg A = BoolAlg::powerset(2);
    const EIdx p = *A.index_of_code(1);
    ContactTriple Tp{A, overlap_relation(A), downset_of(A, p)};
    ContactExtensionReport r = extend_contact(Tp, A, hom_identity(A));
    CHECK(r.target_bounded == downset_of(A, p));
    CHECK(r.case1_pairs == 8);
    CHECK(r.case2_pairs == 8);
    // the extension keeps exactly the pairs that share the bounded atom:
    // symmetric, and never touching zero
    for (EIdx x = 0; x < A.size(); ++x)
        for (EIdx y = 0; y < A.size(); ++y) {
            CHECK(r.eta.at(x, y) == (A.leq(p, x) && A.leq(p, y)));
            CHECK(r.eta.at(x, y) == r.eta.at(y, x));
            if (r.eta.at(x, y)) {
                CHECK(x != A.zero());
                CHECK(y != A.zero());
            }
        }
    CHECK(r.eta.pair_count() == 4);

    // with no primes at all the unbounded side loses every contact
    BoolAlg A1 = BoolAlg::powerset(1);
    ContactTriple T0{A1, overlap_relation(A1), only(A1, {A1.zero()})};
    ContactExtensionReport r0 = extend_contact(T0, A1, hom_identity(A1));
    CHECK(r0.eta.pair_count() == 0);
    CHECK(r0.case2_pairs == 2);
    CHECK(r0.target_bounded == only(A1, {A1.zero()}));

    ContactTriple T1 = rho_s(A1, all_of(A1));
    BoolHom unit = hom_from_atom_images(A1, A, {A.one()});
    CHECK_THROWS_WITH_AS(extend_contact(T1, A, unit), doctest::Contains("dense image"), Error);
    ContactTriple T2 = rho_s(A, all_of(A));
    BoolHom chi = hom_from_atom_images(A, A1, {A1.one(), A1.zero()});
    CHECK_THROWS_WITH_AS(extend_contact(T2, A1, chi),
                         doctest::Contains("injective embedding"), Error);
    ContactTriple bad{A, overlap_relation(A), only(A, {p})};
    CHECK_THROWS_WITH_AS(extend_contact(bad, A, hom_identity(A)),
                         doctest::Contains("ideal as the bounded part"), Error);
    CHECK_THROWS_WITH_AS(extend_contact(T2, A, unit),
                         doctest::Contains("map of the two carriers"), Error);
}

TEST_CASE("the completion corollary in both directions") {
    // two cluster spaces are homeomorphic exactly when one triple embeds
    // into the completion of the other with a dV-dense bounded image
    std::vector<ContactTriple> corpus;
    for (unsigned n = 1; n <= 3; ++n) {
        BoolAlg A = BoolAlg::powerset(n);
        corpus.push_back(rho_s(A, all_of(A)));
    }
    BoolAlg table = co_algebra(FinSpace::discrete(2));
    corpus.push_back(rho_s(table, all_of(table)));
    corpus.push_back(psi_t(FinSpace::sierpinski()));
    corpus.push_back(psi_t(FinSpace::discrete(2)));
    for (const ContactTriple& T : corpus)
        for (const ContactTriple& S : corpus) {
            bool homeo = find_homeomorphism(psi_a(T), psi_a(S)).has_value();
            ContactTriple tgt = lca_completion(S).target;
            bool embeds = false;
            for (const BoolHom& phi : all_homs(T.algebra, tgt.algebra)) {
                ContactEmbeddingReport rep = check_contact_embedding(T, tgt, phi);
                if (rep.embedding && is_dv_dense(tgt, bounded_image(T, tgt, phi))) {
                    embeds = true;
                    break;
                }
            }
            CHECK(homeo == embeds);
        }
}

TEST_CASE("scope walls and determinism") {
    BoolAlg A5 = BoolAlg::powerset(5);
    ContactTriple big{A5, Relation::empty(static_cast<EIdx>(A5.size())), all_of(A5)};
    CHECK_THROWS_WITH_AS(delta_ideals(big), doctest::Contains("ideal enumeration cap"), Error);
    try {
        delta_ideals(big);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::scope);
    }

    BoolAlg A9 = BoolAlg::powerset(9);
    ContactTriple T9{A9, Relation::empty(static_cast<EIdx>(A9.size())), all_of(A9)};
    CompletionPair c9{hom_identity(A9), T9, ContactEmbeddingReport{}, true, true};
    CHECK_THROWS_WITH_AS(completions_equivalent(T9, c9, c9),
                         doctest::Contains("at most 8 atoms"), Error);

    BoolAlg A2 = BoolAlg::powerset(2);
    ContactTriple T2 = rho_s(A2, all_of(A2));
    CHECK(delta_ideals(T2) == delta_ideals(T2));
    CompletionPair once = lca_completion(T2);
    CompletionPair again = lca_completion(T2);
    CHECK(once.embedding.map == again.embedding.map);
    CHECK(triple_eq(once.target, again.target));
    const EIdx p = *A2.index_of_code(1);
    ContactTriple Tp{A2, overlap_relation(A2), downset_of(A2, p)};
    ContactExtensionReport e1 = extend_contact(Tp, A2, hom_identity(A2));
    ContactExtensionReport e2 = extend_contact(Tp, A2, hom_identity(A2));
    CHECK(e1.eta == e2.eta);
}
