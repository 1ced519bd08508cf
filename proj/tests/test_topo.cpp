#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstddef>
#include <vector>

#include "locba/bacore.hpp"
#include "locba/contact.hpp"
#include "locba/topo.hpp"

using namespace locba;

namespace {

Subset all_of(const BoolAlg& A) { return Subset(A.size(), true); }

bool has_violation(const AxiomReport& r, const std::string& axiom) {
    for (const AxiomWitness& w : r.violations)
        if (w.axiom == axiom) return true;
    return false;
}

// The three-point space whose regular closed algebra has four elements but
// no way to sit a nonzero element well inside another.
FinSpace three_point_example() { return FinSpace::from_opens(3, {0, 1, 2, 3, 7}); }

std::vector<FinSpace> corpus_upto(unsigned nmax) {
    std::vector<FinSpace> out;
    for (unsigned n = 0; n <= nmax; ++n) {
        std::vector<FinSpace> layer = all_topologies(n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<std::vector<unsigned>> all_point_maps(unsigned a, unsigned b) {
    std::vector<std::vector<unsigned>> out;
    if (a == 0) {
        out.push_back({});
        return out;
    }
    if (b == 0) return out;
    std::vector<unsigned> cur(a, 0);
    while (true) {
        out.push_back(cur);
        unsigned i = 0;
        while (i < a && ++cur[i] == b) {
            cur[i] = 0;
            ++i;
        }
        if (i == a) break;
    }
    return out;
}

// Independent re-derivations of the taxonomy flags, used to cross-examine
// classify_map from the outside.
bool dense_image_probe(const SpaceMap& f) {
    return f.dst.closure(image_of(f, f.src.full())) == f.dst.full();
}

bool quasi_pi_probe(const SpaceMap& f) {
    if (!dense_image_probe(f)) return false;
    for (Mask c : f.src.closed_sets())
        if (c != f.src.full() && f.dst.closure(image_of(f, c)) == f.dst.full())
            return false;
    return true;
}

bool mr_probe(const SpaceMap& f) {
    if (!dense_image_probe(f)) return false;
    for (Mask c : f.src.regular_closeds())
        if (c != f.src.full() && f.dst.closure(image_of(f, c)) == f.dst.full())
            return false;
    return true;
}

bool skeletal_all_opens_probe(const SpaceMap& f) {
    for (Mask u : f.src.opens())
        if (u != 0 && f.dst.interior(f.dst.closure(image_of(f, u))) == 0) return false;
    return true;
}

// Closed irreducible surjections are exactly the surjections pushing
// nonempty opens to nonempty opens through f_sharp.
bool sharp_open_probe(const SpaceMap& f) {
    if (image_of(f, f.src.full()) != f.dst.full()) return false;
    for (Mask u : f.src.opens()) {
        if (u == 0) continue;
        Mask s = f_sharp(f, u);
        if (s == 0 || !f.dst.is_open(s)) return false;
    }
    return true;
}

std::vector<Mask> min_nbhd_family(const FinSpace& X) {
    std::vector<Mask> out;
    for (unsigned p = 0; p < X.points(); ++p) out.push_back(X.min_nbhd(p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Mask> minimal_nonzero_opens(const FinSpace& X) {
    std::vector<Mask> out;
    for (Mask u : X.opens()) {
        if (u == 0) continue;
        bool minimal = true;
        for (Mask v : X.opens())
            if (v != 0 && v != u && !(v & ~u)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(u);
    }
    return out;
}

bool has_sub_pi_base_of_size(const FinSpace& X, const std::vector<Mask>& fam,
                             std::size_t k) {
    if (k > fam.size()) return false;
    std::vector<bool> pick(fam.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    while (true) {
        std::vector<Mask> cand;
        for (std::size_t i = 0; i < fam.size(); ++i)
            if (pick[i]) cand.push_back(fam[i]);
        if (is_pi_base_family(X, cand)) return true;
        if (!std::prev_permutation(pick.begin(), pick.end())) break;
    }
    return false;
}

}  // namespace

TEST_CASE("open families are validated with witnesses") {
    CHECK_THROWS_WITH_AS(FinSpace::from_opens(2, {0b01, 0b11}),
                         doctest::Contains("empty set"), Error);
    CHECK_THROWS_WITH_AS(FinSpace::from_opens(2, {0b00, 0b01}),
                         doctest::Contains("whole point set"), Error);
    CHECK_THROWS_WITH_AS(FinSpace::from_opens(2, {0b000, 0b100, 0b11}),
                         doctest::Contains("{2}"), Error);
    // {0} and {1} without their union {0,1}
    CHECK_THROWS_WITH_AS(FinSpace::from_opens(3, {0, 1, 2, 7}),
                         doctest::Contains("union"), Error);
    // {0,1} and {1,2} without their intersection {1}
    CHECK_THROWS_WITH_AS(FinSpace::from_opens(3, {0, 3, 6, 7}),
                         doctest::Contains("intersection"), Error);
    CHECK_THROWS_WITH_AS(FinSpace::discrete(17), doctest::Contains("16"), Error);
    CHECK_THROWS_AS(FinSpace::discrete(11), Error);  // 2048 opens exceed the cap

    FinSpace dup = FinSpace::from_opens(2, {3, 0, 1, 1, 3});
    CHECK(dup.opens() == std::vector<Mask>{0, 1, 3});
    CHECK(dup == FinSpace::sierpinski());
    CHECK_FALSE(dup == FinSpace::discrete(2));

    CHECK(FinSpace::discrete(0) == FinSpace::indiscrete(0));
    CHECK(FinSpace::discrete(1) == FinSpace::indiscrete(1));
    CHECK(FinSpace::discrete(3).opens().size() == 8);
    CHECK(FinSpace::indiscrete(3).opens() == std::vector<Mask>{0, 7});
    CHECK(three_point_example().points() == 3);
}

TEST_CASE("interior closure and minimal neighborhoods on the two point spaces") {
    FinSpace S = FinSpace::sierpinski();
    CHECK(S.interior(0) == 0);
    CHECK(S.interior(1) == 1);
    CHECK(S.interior(2) == 0);
    CHECK(S.interior(3) == 3);
    CHECK(S.closure(0) == 0);
    CHECK(S.closure(1) == 3);  // the open point is dense
    CHECK(S.closure(2) == 2);
    CHECK(S.closure(3) == 3);
    CHECK(S.min_nbhd(0) == 1);
    CHECK(S.min_nbhd(1) == 3);
    CHECK(S.is_open(1));
    CHECK_FALSE(S.is_closed(1));
    CHECK(S.is_closed(2));
    CHECK(S.is_clopen(0));
    CHECK(S.is_clopen(3));
    CHECK_FALSE(S.is_clopen(1));
    CHECK(S.closed_sets() == std::vector<Mask>{0, 2, 3});
    CHECK(S.set_name(0) == "{}");
    CHECK(S.set_name(3) == "{0,1}");
    CHECK_THROWS_WITH_AS(S.closure(0b100), doctest::Contains("outside"), Error);
    CHECK_THROWS_WITH_AS(S.min_nbhd(2), doctest::Contains("outside"), Error);

    FinSpace I = FinSpace::indiscrete(2);
    CHECK(I.closure(1) == 3);
    CHECK(I.closure(2) == 3);
    CHECK(I.interior(1) == 0);
    CHECK(I.min_nbhd(0) == 3);
}

TEST_CASE("closure laws hold on every small space") {
    for (const FinSpace& X : corpus_upto(4)) {
        const Mask full = X.full();
        CHECK(X.closure(0) == 0);
        CHECK(X.interior(full) == full);
        for (Mask s = 0; s <= full; ++s) {
            Mask cs = X.closure(s);
            CHECK((s & ~cs) == 0);                      // extensive
            CHECK(X.closure(cs) == cs);                 // idempotent
            CHECK(X.interior(s) == (full & ~X.closure(full & ~s)));  // duality
            for (Mask t = 0; t <= full; ++t)
                CHECK(X.closure(s | t) == (cs | X.closure(t)));  // additive
        }
    }
}

TEST_CASE("regular and clopen families of the named examples") {
    FinSpace D2 = FinSpace::discrete(2);
    CHECK(D2.regular_closeds() == std::vector<Mask>{0, 1, 2, 3});
    CHECK(D2.regular_opens() == std::vector<Mask>{0, 1, 2, 3});
    CHECK(ck_family(D2) == std::vector<Mask>{0, 1, 2, 3});
    CHECK(cr_family(D2) == std::vector<Mask>{0, 1, 2, 3});

    FinSpace S = FinSpace::sierpinski();
    CHECK(S.regular_closeds() == std::vector<Mask>{0, 3});  // cl({0}) is everything
    CHECK(S.regular_opens() == std::vector<Mask>{0, 3});
    CHECK(ck_family(S) == std::vector<Mask>{0, 3});
    CHECK(co_algebra(S).size() == 2);

    FinSpace E = three_point_example();
    CHECK(E.regular_closeds() == std::vector<Mask>{0, 0b101, 0b110, 0b111});
    CHECK(E.regular_opens() == std::vector<Mask>{0, 1, 2, 7});
    CHECK(ck_family(E) == std::vector<Mask>{0, 7});

    FinSpace I = FinSpace::indiscrete(2);
    CHECK(I.regular_closeds() == std::vector<Mask>{0, 3});
    CHECK(I.regular_opens() == std::vector<Mask>{0, 3});

    // the compact families never lose members on a finite space
    for (const FinSpace& X : corpus_upto(3)) {
        CHECK(cr_family(X) == X.regular_closeds());
        std::vector<Mask> clopens;
        for (Mask u : X.opens())
            if (X.is_closed(u)) clopens.push_back(u);
        CHECK(ck_family(X) == clopens);
    }
}

TEST_CASE("the derived set algebras satisfy the boolean laws") {
    for (const FinSpace& X : corpus_upto(4)) {
        ContactTriple rc = rc_algebra(X);
        CHECK_FALSE(boolean_law_violation(rc.algebra).has_value());
        BoolAlg ro = ro_algebra(X);
        CHECK_FALSE(boolean_law_violation(ro).has_value());
        BoolAlg co = co_algebra(X);
        CHECK_FALSE(boolean_law_violation(co).has_value());
        // clopen operations are the plain set operations
        for (EIdx a = 0; a < co.size(); ++a) {
            CHECK(co.code(co.complement(a)) == (X.full() & ~co.code(a)));
            for (EIdx b = 0; b < co.size(); ++b) {
                CHECK(co.code(co.meet(a, b)) == (co.code(a) & co.code(b)));
                CHECK(co.code(co.join(a, b)) == (co.code(a) | co.code(b)));
            }
        }
    }
    // three-point example: the two nontrivial regular closed sets meet in a
    // point with empty interior, so their algebra meet is zero
    ContactTriple rc = rc_algebra(three_point_example());
    REQUIRE(rc.algebra.size() == 4);
    EIdx f = *rc.algebra.index_of_code(0b101);
    EIdx g = *rc.algebra.index_of_code(0b110);
    CHECK(rc.algebra.meet(f, g) == rc.algebra.zero());
    CHECK(rc.algebra.complement(f) == g);
}

TEST_CASE("closure is an isomorphism from regular opens onto regular closeds") {
    for (const FinSpace& X : corpus_upto(4)) {
        BoolAlg ro = ro_algebra(X);
        ContactTriple rc = rc_algebra(X);
        REQUIRE(ro.size() == rc.algebra.size());
        BoolHom cl_hom{ro, rc.algebra, {}};
        cl_hom.map.resize(ro.size());
        for (EIdx u = 0; u < ro.size(); ++u) {
            auto idx = rc.algebra.index_of_code(X.closure(ro.code(u)));
            REQUIRE(idx.has_value());
            cl_hom.map[u] = *idx;
            // interior runs straight back
            CHECK(X.interior(X.closure(ro.code(u))) == ro.code(u));
        }
        HomReport rep = hom_check(cl_hom);
        CHECK(rep.ok);
        CHECK(rep.injective);
        CHECK(rep.surjective);
    }
}

TEST_CASE("the regular closed contact triple") {
    // contact axioms hold on every small space
    for (const FinSpace& X : corpus_upto(4)) {
        ContactTriple rc = rc_algebra(X);
        AxiomReport rep = check_axioms(rc);
        CHECK(rep.contact);
        CHECK(subset_count(rc.bounded) == rc.algebra.size());
    }
    // discrete spaces reproduce the overlap triple of the powerset
    for (unsigned n = 0; n <= 4; ++n) {
        ContactTriple rc = rc_algebra(FinSpace::discrete(n));
        BoolAlg P = BoolAlg::powerset(n);
        ContactTriple over = rho_s(P, all_of(P));
        CHECK(check_axioms(rc).lca);
        CHECK(rc.rho == over.rho);
        CHECK(rc.bounded == over.bounded);
        REQUIRE(rc.algebra.size() == P.size());
        for (EIdx a = 0; a < P.size(); ++a) {
            CHECK(rc.algebra.code(a) == P.code(a));
            for (EIdx b = 0; b < P.size(); ++b) {
                CHECK(rc.algebra.meet(a, b) == P.meet(a, b));
                CHECK(rc.algebra.join(a, b) == P.join(a, b));
            }
        }
    }
    // the sierpinski space collapses to the two-element overlap triple
    ContactTriple s = rc_algebra(FinSpace::sierpinski());
    BoolAlg P1 = BoolAlg::powerset(1);
    CHECK(check_axioms(s).lca);
    CHECK(s.rho == rho_s(P1, all_of(P1)).rho);
    // the three-point example has contact without overlap and no way to
    // squeeze anything well inside: not even the bounded axioms survive
    ContactTriple e = rc_algebra(three_point_example());
    EIdx f = *e.algebra.index_of_code(0b101);
    EIdx g = *e.algebra.index_of_code(0b110);
    CHECK(e.rho.at(f, g));  // the closed sets share a point
    CHECK(e.algebra.meet(f, g) == e.algebra.zero());
    AxiomReport rep = check_axioms(e);
    CHECK(rep.contact);
    CHECK_FALSE(rep.lca);
    CHECK(has_violation(rep, "BC3"));
}

TEST_CASE("f_sharp agrees with its image form") {
    FinSpace D3 = FinSpace::discrete(3);
    SpaceMap id{D3, D3, {0, 1, 2}};
    for (Mask s = 0; s <= D3.full(); ++s) CHECK(f_sharp(id, s) == s);

    SpaceMap collapse{FinSpace::discrete(2), FinSpace::discrete(1), {0, 0}};
    CHECK(f_sharp(collapse, 0b01) == 0);  // the fiber pokes out of {0}
    CHECK(f_sharp(collapse, 0b11) == 1);
    CHECK(f_sharp(collapse, 0) == 0);

    SpaceMap embed{FinSpace::discrete(1), FinSpace::sierpinski(), {0}};
    CHECK(f_sharp(embed, 1) == 3);  // the empty fiber over the closed point counts

    CHECK_THROWS_WITH_AS(f_sharp(id, 0b1000), doctest::Contains("outside"), Error);
    SpaceMap short_map{D3, D3, {0, 1}};
    CHECK_THROWS_WITH_AS(f_sharp(short_map, 0), doctest::Contains("entries"), Error);
    SpaceMap wild{D3, FinSpace::discrete(2), {0, 1, 2}};
    CHECK_THROWS_WITH_AS(classify_map(wild), doctest::Contains("target"), Error);
}

TEST_CASE("map classification on the named examples") {
    FinSpace S = FinSpace::sierpinski();

    MapClassification id = classify_map({S, S, {0, 1}});
    CHECK(id.continuous);
    CHECK(id.closed);
    CHECK(id.compact_point_inverses);
    CHECK(id.perfect);
    CHECK(id.irreducible);
    CHECK(id.skeletal);
    CHECK(id.quasi_pi);
    CHECK(id.mr);
    CHECK(id.pi);

    // dense embedding of the open point: quasi-pi without being closed
    MapClassification embed = classify_map({FinSpace::discrete(1), S, {0}});
    CHECK(embed.continuous);
    CHECK_FALSE(embed.closed);
    CHECK_FALSE(embed.perfect);
    CHECK_FALSE(embed.irreducible);
    CHECK(embed.quasi_pi);
    CHECK(embed.mr);
    CHECK(embed.skeletal);
    CHECK_FALSE(embed.pi);

    // the same point dropped into the indiscrete plane is again dense
    MapClassification into_blob =
        classify_map({FinSpace::discrete(1), FinSpace::indiscrete(2), {0}});
    CHECK(into_blob.continuous);
    CHECK_FALSE(into_blob.closed);
    CHECK(into_blob.quasi_pi);

    // collapsing two discrete points: closed and perfect, but the proper
    // closed subset {0} already covers the target
    MapClassification collapse =
        classify_map({FinSpace::discrete(2), FinSpace::discrete(1), {0, 0}});
    CHECK(collapse.continuous);
    CHECK(collapse.closed);
    CHECK(collapse.perfect);
    CHECK_FALSE(collapse.irreducible);
    CHECK_FALSE(collapse.quasi_pi);
    CHECK_FALSE(collapse.mr);
    CHECK(collapse.skeletal);  // skeletal without being an MR-map
    CHECK_FALSE(collapse.pi);

    // swapping the sierpinski points is not continuous; nothing else is rated
    MapClassification swap = classify_map({S, S, {1, 0}});
    CHECK_FALSE(swap.continuous);
    CHECK(swap.compact_point_inverses);
    CHECK_FALSE(swap.closed);
    CHECK_FALSE(swap.skeletal);
    CHECK_FALSE(swap.pi);
}

TEST_CASE("map taxonomy properties across the small corpus") {
    std::vector<FinSpace> spaces = corpus_upto(3);
    REQUIRE(spaces.size() == 35);

    std::size_t continuous_count = 0, noncontinuous_count = 0, pi_count = 0;
    std::size_t mr_not_closed = 0, skeletal_not_mr = 0;
    for (const FinSpace& X : spaces) {
        for (const FinSpace& Y : spaces) {
            for (const std::vector<unsigned>& mv : all_point_maps(X.points(), Y.points())) {
                SpaceMap f{X, Y, mv};
                MapClassification c = classify_map(f);
                if (!c.continuous) {
                    ++noncontinuous_count;
                    continue;
                }
                ++continuous_count;

                // flag re-derivations from the closed-set side
                CHECK(c.quasi_pi == quasi_pi_probe(f));
                CHECK(c.mr == mr_probe(f));
                CHECK(c.skeletal == skeletal_all_opens_probe(f));
                // closed irreducible surjections via open f_sharp images
                CHECK((c.closed && c.irreducible) == sharp_open_probe(f));

                // containment chain and the closed-map collapse
                if (c.pi) CHECK(c.quasi_pi);
                if (c.quasi_pi) CHECK(c.mr);
                if (c.mr) CHECK(c.skeletal);
                if (c.closed) CHECK(c.quasi_pi == c.pi);
                CHECK(c.perfect == c.closed);
                CHECK(c.compact_point_inverses);

                if (c.pi) ++pi_count;
                if (c.mr && !c.closed) ++mr_not_closed;
                if (c.skeletal && !c.mr) ++skeletal_not_mr;
            }
        }
    }
    CHECK(noncontinuous_count > 0);
    CHECK(pi_count >= spaces.size());  // at least every identity map
    CHECK(mr_not_closed > 0);          // dense embeddings reach into the corpus
    CHECK(skeletal_not_mr > 0);

    // hand count: continuous self-maps of the sierpinski space
    FinSpace S = FinSpace::sierpinski();
    std::size_t s_cont = 0;
    for (const std::vector<unsigned>& mv : all_point_maps(2, 2))
        if (classify_map({S, S, mv}).continuous) ++s_cont;
    CHECK(s_cont == 3);  // both constants and the identity; the swap fails
}

TEST_CASE("weights of the named examples") {
    for (unsigned n = 0; n <= 4; ++n) {
        SpaceWeightResult w = space_weight(FinSpace::discrete(n));
        SpaceWeightResult pw = space_pi_weight(FinSpace::discrete(n));
        CHECK(w.value == n);
        CHECK(pw.value == n);
        std::vector<Mask> singletons;
        for (unsigned p = 0; p < n; ++p) singletons.push_back(Mask{1} << p);
        CHECK(w.base == singletons);
        CHECK(pw.base == singletons);
    }
    CHECK(space_weight(FinSpace::discrete(5)).value == 5);
    CHECK(space_pi_weight(FinSpace::discrete(5)).value == 5);

    FinSpace S = FinSpace::sierpinski();
    CHECK(space_weight(S).value == 2);
    CHECK(space_weight(S).base == std::vector<Mask>{1, 3});
    CHECK(space_pi_weight(S).value == 1);
    CHECK(space_pi_weight(S).base == std::vector<Mask>{1});

    FinSpace I = FinSpace::indiscrete(2);
    CHECK(space_weight(I).value == 1);
    CHECK(space_weight(I).base == std::vector<Mask>{3});
    CHECK(space_pi_weight(I).value == 1);

    FinSpace E = three_point_example();
    CHECK(space_weight(E).value == 3);
    CHECK(space_weight(E).base == std::vector<Mask>{1, 2, 7});
    CHECK(space_pi_weight(E).value == 2);
    CHECK(space_pi_weight(E).base == std::vector<Mask>{1, 2});

    FinSpace empty = FinSpace::discrete(0);
    CHECK(space_weight(empty).value == 0);
    CHECK(space_weight(empty).base.empty());
    CHECK(space_pi_weight(empty).value == 0);

    CHECK_THROWS_WITH_AS(is_base_family(S, {2}), doctest::Contains("not open"), Error);
    CHECK_THROWS_WITH_AS(space_weight(FinSpace::discrete(6)),
                         doctest::Contains("cap is 32"), Error);
}

TEST_CASE("minimal bases are exactly the minimal neighborhoods") {
    // Every base must contain each minimal point neighborhood, and those
    // neighborhoods already form a base; dually every pi-base must contain
    // each minimal nonempty open, and those form a pi-base.  The exhaustive
    // search must therefore land on exactly these families.
    std::vector<FinSpace> spaces = corpus_upto(4);
    spaces.push_back(FinSpace::discrete(5));
    for (const FinSpace& X : spaces) {
        std::vector<Mask> nb = min_nbhd_family(X);
        SpaceWeightResult w = space_weight(X);
        CHECK(w.value == nb.size());
        CHECK(w.base == nb);
        CHECK(is_base_family(X, nb));

        std::vector<Mask> mo = minimal_nonzero_opens(X);
        SpaceWeightResult pw = space_pi_weight(X);
        CHECK(pw.value == mo.size());
        CHECK(pw.base == mo);
        CHECK(is_pi_base_family(X, mo));
    }
}

TEST_CASE("semiregularity flags") {
    CHECK(is_semiregular(FinSpace::discrete(3)));
    CHECK(is_pi_semiregular(FinSpace::discrete(3)));

    // the regular opens of the sierpinski space are {} and the whole space:
    // they miss the open point entirely
    FinSpace S = FinSpace::sierpinski();
    CHECK_FALSE(is_semiregular(S));
    CHECK_FALSE(is_pi_semiregular(S));

    // the indiscrete plane's regular opens are its whole topology
    FinSpace I = FinSpace::indiscrete(2);
    CHECK(is_semiregular(I));
    CHECK(is_pi_semiregular(I));

    CHECK(is_semiregular(three_point_example()));
    CHECK(is_pi_semiregular(three_point_example()));

    std::size_t pi_semi = 0;
    for (const FinSpace& X : all_topologies(2))
        if (is_pi_semiregular(X)) ++pi_semi;
    CHECK(pi_semi == 2);  // discrete and indiscrete; both sierpinski labelings fail

    for (const FinSpace& X : corpus_upto(4))
        if (is_semiregular(X)) CHECK(is_pi_semiregular(X));
}

TEST_CASE("pi weight transfers to the regular closed algebra") {
    for (const FinSpace& X : corpus_upto(4)) {
        ContactTriple rc = rc_algebra(X);
        std::size_t alg_pw = pi_weight_finite(rc.algebra).value;
        if (is_pi_semiregular(X)) CHECK(space_pi_weight(X).value == alg_pw);
        // on finite spaces the equation needs no hypothesis: closing a
        // minimal nonempty open yields an atom of the regular closed algebra
        CHECK(space_pi_weight(X).value == alg_pw);
        for (Mask u : minimal_nonzero_opens(X)) {
            auto idx = rc.algebra.index_of_code(X.closure(u));
            REQUIRE(idx.has_value());
            bool is_atom = false;
            for (EIdx a : rc.algebra.atoms())
                if (a == *idx) is_atom = true;
            CHECK(is_atom);
        }
    }
}

TEST_CASE("all topologies on up to four points are generated") {
    const std::size_t expected[] = {1, 1, 4, 29, 355};
    for (unsigned n = 0; n <= 4; ++n) {
        std::vector<FinSpace> layer = all_topologies(n);
        CHECK(layer.size() == expected[n]);
        std::vector<std::vector<Mask>> families;
        for (const FinSpace& X : layer) {
            CHECK(X.points() == n);
            families.push_back(X.opens());
        }
        std::sort(families.begin(), families.end());
        CHECK(std::adjacent_find(families.begin(), families.end()) == families.end());
    }
    // fixed generation order on two points
    std::vector<FinSpace> two = all_topologies(2);
    REQUIRE(two.size() == 4);
    CHECK(two[0] == FinSpace::indiscrete(2));
    CHECK(two[1] == FinSpace::sierpinski());
    CHECK(two[2].opens() == std::vector<Mask>{0, 2, 3});
    CHECK(two[3] == FinSpace::discrete(2));

    CHECK_THROWS_WITH_AS(all_topologies(5), doctest::Contains("cap is 4"), Error);
}

TEST_CASE("homeomorphism census of the corpus") {
    const std::size_t classes[] = {1, 1, 3, 9, 33};
    for (unsigned n = 0; n <= 4; ++n) {
        std::vector<FinSpace> layer = all_topologies(n);
        std::vector<std::size_t> rep_of(layer.size());
        std::vector<std::size_t> reps;
        for (std::size_t i = 0; i < layer.size(); ++i) {
            bool placed = false;
            for (std::size_t r : reps)
                if (find_homeomorphism(layer[i], layer[r])) {
                    rep_of[i] = r;
                    placed = true;
                    break;
                }
            if (!placed) {
                reps.push_back(i);
                rep_of[i] = i;
            }
        }
        CHECK(reps.size() == classes[n]);

        // homeomorphic spaces share every invariant we compute
        if (n == 3) {
            for (std::size_t i = 0; i < layer.size(); ++i) {
                const FinSpace& X = layer[i];
                const FinSpace& R = layer[rep_of[i]];
                CHECK(space_weight(X).value == space_weight(R).value);
                CHECK(space_pi_weight(X).value == space_pi_weight(R).value);
                CHECK(X.regular_opens().size() == R.regular_opens().size());
                CHECK(rc_algebra(X).algebra.size() == rc_algebra(R).algebra.size());
                CHECK(co_algebra(X).size() == co_algebra(R).size());
                CHECK(is_semiregular(X) == is_semiregular(R));
                CHECK(is_pi_semiregular(X) == is_pi_semiregular(R));
            }
        }
    }

    CHECK_FALSE(find_homeomorphism(FinSpace::discrete(2), FinSpace::sierpinski()));
    FinSpace flipped = FinSpace::from_opens(2, {0, 2, 3});
    auto h = find_homeomorphism(FinSpace::sierpinski(), flipped);
    REQUIRE(h.has_value());
    CHECK(*h == std::vector<unsigned>{1, 0});
    // transport check in both directions
    FinSpace sier = FinSpace::sierpinski();
    for (Mask u : sier.opens()) {
        Mask v = 0;
        for (unsigned p = 0; p < 2; ++p)
            if (u & (Mask{1} << p)) v |= Mask{1} << (*h)[p];
        CHECK(flipped.is_open(v));
    }
    CHECK_THROWS_WITH_AS(find_homeomorphism(FinSpace::discrete(9), FinSpace::discrete(9)),
                         doctest::Contains("8 points"), Error);
}

TEST_CASE("every pi base refines to a minimum size pi base") {
    for (const FinSpace& X : corpus_upto(3)) {
        std::size_t pw = space_pi_weight(X).value;
        CHECK(has_sub_pi_base_of_size(X, X.opens(), pw));
        if (is_pi_semiregular(X))
            CHECK(has_sub_pi_base_of_size(X, X.regular_opens(), pw));
        // nothing smaller can work
        if (pw > 0) CHECK_FALSE(has_sub_pi_base_of_size(X, X.opens(), pw - 1));
    }
}
