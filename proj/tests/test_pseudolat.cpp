#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "locba/pseudolat.hpp"

using namespace locba;

namespace {

Subset downset_subset(const Pseudolat& P, EIdx a) { return downset_of(P, a); }

Subset ideal_at(const BoolAlg& A, Mask code) {
    return downset_of(A, *A.index_of_code(code));
}

}  // namespace

TEST_CASE("pseudolattice from a boolean algebra keeps order and bounds") {
    BoolAlg A = BoolAlg::powerset(3);
    Pseudolat P = Pseudolat::from_boolalg(A);
    CHECK(P.size() == 8);
    CHECK(P.zero() == A.zero());
    CHECK(P.one() == A.one());
    for (EIdx a = 0; a < P.size(); ++a)
        for (EIdx b = 0; b < P.size(); ++b) CHECK(P.leq(a, b) == A.leq(a, b));
    CHECK(P.elem_name(*P.index_of_code(0b101)) == "{0,2}");
}

TEST_CASE("chains are distributive pseudolattices with min/max operations") {
    Pseudolat C = Pseudolat::chain(4);
    CHECK(C.size() == 4);
    CHECK(C.zero() == 0);
    CHECK(C.one() == 3);
    CHECK(C.meet(1, 3) == 1);
    CHECK(C.join(1, 2) == 2);
    CHECK(C.elem_name(2) == "2");
    CHECK_THROWS_AS(Pseudolat::chain(0), Error);
}

TEST_CASE("pentagon fails distributivity at construction") {
    // N5: 0 < a < c < 1 and b incomparable, a∨b = c∨b = 1, a∧b = c∧b = 0.
    // codes: 0=0, 1=a, 2=b, 3=c, 4=1
    auto rank = [](Mask x) { return x; };
    auto mt = [&](Mask x, Mask y) -> Mask {
        if (x == y) return x;
        if (x > y) std::swap(x, y);
        if (x == 0) return 0;
        if (y == 4) return x;
        if (x == 1 && y == 3) return 1;  // a < c
        return 0;                        // b vs a, b vs c
    };
    auto jn = [&](Mask x, Mask y) -> Mask {
        if (x == y) return x;
        if (x > y) std::swap(x, y);
        if (x == 0) return y;
        if (y == 4) return 4;
        if (x == 1 && y == 3) return 3;
        return 4;
    };
    (void)rank;
    CHECK_THROWS_WITH_AS(Pseudolat::from_ops({0, 1, 2, 3, 4}, mt, jn),
                         "pseudolattice law broken: distributivity", Error);
}

TEST_CASE("from_ops rejects carriers that are not closed") {
    auto mt = [](Mask a, Mask b) { return a & b; };
    auto jn = [](Mask a, Mask b) { return a | b; };
    CHECK_THROWS_WITH_AS(Pseudolat::from_ops({0b01, 0b10, 0b11}, mt, jn),
                         "carrier not closed under meet", Error);
}

TEST_CASE("pseudocomplement of ideals in a powerset") {
    BoolAlg A = BoolAlg::powerset(3);
    Pseudolat P = Pseudolat::from_boolalg(A);

    // ¬↓({0}) = ↓({1,2})
    Subset J = downset_subset(P, *P.index_of_code(0b001));
    CHECK(pseudocomplement(P, J) == downset_subset(P, *P.index_of_code(0b110)));

    // ¬{0} = P
    Subset zero_only(P.size(), false);
    zero_only[P.zero()] = true;
    CHECK(subset_count(pseudocomplement(P, zero_only)) == P.size());

    // ¬P = {0}
    Subset all(P.size(), true);
    CHECK(pseudocomplement(P, all) == zero_only);

    // not an ideal -> validation error
    Subset bad(P.size(), false);
    bad[P.one()] = true;
    CHECK_THROWS_AS(pseudocomplement(P, bad), Error);
}

TEST_CASE("all four ideals of the 2-atom powerset are simple and Si is isomorphic to it") {
    BoolAlg A = BoolAlg::powerset(2);
    Pseudolat P = Pseudolat::from_boolalg(A);
    std::vector<IdxMask> simples = simple_ideals(P);
    CHECK(simples.size() == 4);
    CHECK(simples == enumerate_ideal_masks(P));  // every ideal simple

    SiAlgebra si = si_algebra(P);
    CHECK(si.algebra.size() == 4);
    CHECK(!boolean_law_violation(si.algebra));
    CHECK(find_isomorphism(si.algebra, A).has_value());
}

TEST_CASE("the middle of a 3-chain generates a non-simple principal ideal") {
    Pseudolat C = Pseudolat::chain(3);
    Subset down_m = downset_subset(C, 1);
    CHECK(!is_simple(C, down_m));
    // ¬↓m = {0}, and the ideal join misses the top
    Subset neg = pseudocomplement(C, down_m);
    CHECK(subset_count(neg) == 1);
    CHECK(neg[C.zero()]);
    CHECK(subset_count(ideal_lattice_join(C, down_m, neg)) == 2);

    std::vector<IdxMask> simples = simple_ideals(C);
    CHECK(simples.size() == 2);  // {0} and the whole chain
    SiAlgebra si = si_algebra(C);
    CHECK(find_isomorphism(si.algebra, BoolAlg::powerset(1)).has_value());
}

TEST_CASE("simple equals principal across all ideals of small powersets") {
    for (unsigned n = 0; n <= 4; ++n) {
        BoolAlg A = BoolAlg::powerset(n);
        Pseudolat P = Pseudolat::from_boolalg(A);
        std::vector<IdxMask> ideals = enumerate_ideal_masks(P);
        CHECK(ideals.size() == P.size());  // finite lattice: all principal
        for (IdxMask m : ideals) {
            Subset J = subset_from_mask(P.size(), m);
            bool simple = is_simple(P, J);
            bool principal = principal_generator(P, J).has_value();
            CHECK(simple == principal);
            CHECK(simple);
        }
    }
}

TEST_CASE("pseudocomplement is antitone and triple application stabilizes") {
    for (unsigned n = 1; n <= 3; ++n) {
        Pseudolat P = Pseudolat::from_boolalg(BoolAlg::powerset(n));
        std::vector<IdxMask> ideals = enumerate_ideal_masks(P);
        for (IdxMask m1 : ideals) {
            Subset J1 = subset_from_mask(P.size(), m1);
            Subset n1 = pseudocomplement(P, J1);
            CHECK(pseudocomplement(P, pseudocomplement(P, n1)) == n1);
            for (IdxMask m2 : ideals) {
                if ((m1 & m2) != m1) continue;  // J1 ⊆ J2
                Subset n2 = pseudocomplement(P, subset_from_mask(P.size(), m2));
                for (EIdx i = 0; i < P.size(); ++i)
                    if (n2[i]) CHECK(n1[i]);  // ¬J2 ⊆ ¬J1
            }
        }
    }
}

TEST_CASE("relative complements exist exactly when principal ideals are simple") {
    for (unsigned n = 0; n <= 4; ++n) CHECK(is_gbpl(Pseudolat::from_boolalg(BoolAlg::powerset(n))).gbpl);
    CHECK(is_gbpl(Pseudolat::chain(2)).gbpl);

    GbplReport r = is_gbpl(Pseudolat::chain(3));
    CHECK(!r.gbpl);
    CHECK(r.has_witness);
    CHECK(r.a == 1);  // the middle element
    CHECK(r.b == 0);
    CHECK(r.c == 2);  // in the full interval

    // an ideal of a powerset is again relatively complemented
    BoolAlg A = BoolAlg::powerset(3);
    Pseudolat I = Pseudolat::from_ideal(A, ideal_at(A, 0b011));
    CHECK(I.size() == 4);
    CHECK(is_gbpl(I).gbpl);
}

TEST_CASE("down-set embedding into the simple-ideal algebra") {
    // on a finite relatively-complemented carrier, e is an isomorphism
    EmbedE e = embed_e(Pseudolat::from_boolalg(BoolAlg::powerset(2)));
    CHECK(e.injective);
    CHECK(e.preserves_ops);
    CHECK(e.dense_image);
    CHECK(e.image_is_ideal);
    CHECK(e.map.size() == e.si.algebra.size());  // onto

    // trivial carrier: single element to single ideal
    EmbedE t = embed_e(Pseudolat::from_boolalg(BoolAlg::powerset(0)));
    CHECK(t.si.algebra.size() == 1);
    CHECK(t.map == std::vector<EIdx>{0});

    CHECK_THROWS_AS(embed_e(Pseudolat::chain(3)), Error);
}

TEST_CASE("dense image and ideal image of e across the corpus") {
    std::vector<Pseudolat> corpus;
    for (unsigned n = 0; n <= 3; ++n) corpus.push_back(Pseudolat::from_boolalg(BoolAlg::powerset(n)));
    BoolAlg A = BoolAlg::powerset(3);
    corpus.push_back(Pseudolat::from_ideal(A, ideal_at(A, 0b011)));
    corpus.push_back(Pseudolat::chain(2));
    for (const Pseudolat& P : corpus) {
        EmbedE e = embed_e(P);
        CHECK(e.injective);
        CHECK(e.preserves_ops);
        CHECK(e.dense_image);
        CHECK(e.image_is_ideal);
    }
}

TEST_CASE("the subalgebra generated by an ideal and its complements") {
    BoolAlg A = BoolAlg::powerset(3);

    BofResult b1 = b_of(A, ideal_at(A, 0b011));  // ↓{0,1}
    CHECK(b1.sub.size() == 8);
    CHECK(b1.ideal_prime_in_sub);

    BofResult b2 = b_of(A, ideal_at(A, 0b001));  // ↓{0}
    CHECK(b2.sub.size() == 4);
    std::vector<Mask> codes;
    for (EIdx i = 0; i < b2.sub.size(); ++i) codes.push_back(b2.sub.code(i));
    CHECK(codes == std::vector<Mask>{0b000, 0b001, 0b110, 0b111});
    CHECK(b2.ideal_prime_in_sub);

    Subset full(A.size(), true);
    CHECK_THROWS_WITH_AS(b_of(A, full), "ideal must be proper for this construction", Error);
}

TEST_CASE("join map from simple ideals back to the algebra is an isomorphism") {
    BoolAlg B = BoolAlg::powerset(2);
    Subset full(B.size(), true);
    SigmaZlba s = sigma_zlba(B, full);
    CHECK(s.report.ok);
    CHECK(s.bijective);
    // J ↦ ⋁J inverts a ↦ ↓a
    for (EIdx a = 0; a < B.size(); ++a) {
        IdxMask down = mask_from_subset(downset_of(B, a));
        auto idx = s.si.algebra.index_of_code(static_cast<Mask>(down));
        REQUIRE(idx.has_value());
        CHECK(s.map.map[*idx] == a);
    }

    BoolAlg T = BoolAlg::powerset(0);
    Subset triv(T.size(), true);
    SigmaZlba st = sigma_zlba(T, triv);
    CHECK(st.bijective);
    CHECK(st.si.algebra.size() == 1);

    // a non-dense ideal is rejected
    BoolAlg A = BoolAlg::powerset(2);
    CHECK_THROWS_AS(sigma_zlba(A, ideal_at(A, 0b01)), Error);
}

TEST_CASE("join map is an isomorphism for every dense ideal up to four atoms") {
    for (unsigned n = 0; n <= 4; ++n) {
        BoolAlg B = BoolAlg::powerset(n);
        for (const Subset& I : enumerate_dense_ideals(B)) {
            SigmaZlba s = sigma_zlba(B, I);
            CHECK(s.report.ok);
            CHECK(s.bijective);
        }
    }
}
