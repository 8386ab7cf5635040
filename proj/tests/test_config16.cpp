#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kummer/config16.hpp"

using namespace kummer;
using namespace kummer::config16;
using f2geom::TetradKind;
using f2geom::ThetaChar;
using f2geom::TwoTorsion;

namespace {

f2geom::WeberHexad canonical_w() {
    std::array<TwoTorsion, 6> elems = {TwoTorsion::duad(1, 2), TwoTorsion::duad(2, 3),
                                       TwoTorsion::duad(1, 3), TwoTorsion::duad(1, 4),
                                       TwoTorsion::duad(2, 5), TwoTorsion::duad(3, 6)};
    auto w = f2geom::is_weber_hexad(elems);
    REQUIRE(w.has_value());
    return *w;
}

IntVec unit(int i) {
    IntVec v{};
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("gram presentation: blocks and incidence row sums") {
    const auto& g = gram();
    for (int i = 0; i < 16; ++i) {
        CHECK(g[i][i] == -2);
        CHECK(g[16 + i][16 + i] == -2);
        for (int j = 0; j < 16; ++j) {
            if (i != j) {
                CHECK(g[i][j] == 0);
                CHECK(g[16 + i][16 + j] == 0);
            }
            CHECK(g[i][j] == g[j][i]);
        }
    }
    for (int i = 0; i < 16; ++i) {
        int row = 0, col = 0;
        for (int j = 16; j < 32; ++j) row += g[i][j];
        for (int j = 0; j < 16; ++j) col += g[j][16 + i];
        CHECK(row == 6);
        CHECK(col == 6);
    }
}

TEST_CASE("class H pairings: (H,H)=4, (H,N)=0, (H,T)=2") {
    IntVec h = class_H();
    CHECK(pair(h, h) == 4);
    for (const auto& a : TwoTorsion::all()) CHECK(pair(h, unit(node_index(a))) == 0);
    for (const auto& b : ThetaChar::all()) CHECK(pair(h, unit(trope_index(b))) == 2);
}

TEST_CASE("the sixteen trope relations for H hold as classes") {
    auto rels = check_H_relations();
    CHECK(rels.size() == 16);
    for (const auto& [beta, ok] : rels) CHECK(ok);

    // summed relation: 16H - 2 sum T - 6 sum N is in the radical
    IntVec h = class_H();
    IntVec v;
    for (int i = 0; i < kGenerators; ++i) v[i] = 16 * h[i];
    for (int i = 0; i < 16; ++i) v[i] -= 6;
    for (int i = 16; i < 32; ++i) v[i] -= 2;
    CHECK(in_radical(v));
}

TEST_CASE("rank 17, radical dimension 15") {
    CHECK(lattice_rank() == 17);
    CHECK(kGenerators - lattice_rank() == 15);
}

TEST_CASE("hessian class: self-pairing 4, node pairings 2 on W and 0 off W") {
    for (const auto& w : f2geom::enumerate_weber_hexads()) {
        IntVec l = hessian_class(w);
        CHECK(pair(l, l) == 4);
        for (const auto& a : TwoTorsion::all()) {
            long long expected = w.contains(a) ? 2 : 0;
            CHECK(pair(l, unit(node_index(a))) == expected);
        }
    }
}

TEST_CASE("the five printed divisors all lie in |L| with multiplicities 2 and 3") {
    auto rep = check_S_divisors();
    for (bool ok : rep.equals_L) CHECK(ok);
    CHECK(rep.trope_multiplicities_two);
    CHECK(rep.node_multiplicities_three);

    // spot values: T_134 appears twice, N_56 three times
    auto t134 = ThetaChar::parse("134");
    auto n56 = TwoTorsion::parse("56");
    REQUIRE(t134.has_value());
    REQUIRE(n56.has_value());
    int mt = 0, mn = 0;
    for (const auto& d : rep.divisors) {
        mt += static_cast<int>(d[trope_index(*t134)]);
        mn += static_cast<int>(d[node_index(*n56)]);
    }
    CHECK(mt == 2);
    CHECK(mn == 3);

    // nodes covered by the S_i are exactly the complement of W
    auto coverage = node_coverage(rep.hexad);
    CHECK(rep.covered_nodes == coverage);
}

TEST_CASE("node coverage partitions the sixteen classes") {
    for (const auto& w : f2geom::enumerate_weber_hexads()) {
        auto cov = node_coverage(w);
        CHECK(cov.size() == 10);
        std::set<int> seen;
        for (const auto& a : cov) {
            CHECK_FALSE(w.contains(a));
            seen.insert(a.index());
        }
        for (const auto& e : w.elements) seen.insert(e.index());
        CHECK(seen.size() == 16);
    }
}

TEST_CASE("eleventh node class: pairings, norm -3/4, dual membership") {
    auto w = canonical_w();
    RatVec e = eleventh_node_class(w);
    CHECK(pair(e, class_H()) == 3);
    CHECK(pair(e, e) == Rational(-3, 4));
    for (const auto& a : TwoTorsion::all()) {
        Rational expected = w.contains(a) ? 1 : 0;
        CHECK(pair(e, unit(node_index(a))) == expected);
    }
    CHECK(dual_member(e));
    // complementary transcendental norm: -2 - (-3/4) = -5/4
    CHECK(Rational(-2) - pair(e, e) == Rational(-5, 4));
}

TEST_CASE("switch obstruction has norm -7/4 for all 80 Rosenhain tetrads") {
    for (const auto& r : f2geom::enumerate_tetrads(TetradKind::Rosenhain)) {
        RatVec e = switch_obstruction(r);
        CHECK(pair(e, e) == Rational(-7, 4));
        CHECK(Rational(-2) - pair(e, e) == Rational(-1, 4));
        CHECK(dual_member(e));
    }
    auto goepels = f2geom::enumerate_tetrads(TetradKind::Goepel);
    CHECK_THROWS_AS((void)switch_obstruction(goepels.front()), f2geom::WrongKind);
}

TEST_CASE("translations and switches preserve the gram form") {
    for (const auto& a : TwoTorsion::all()) CHECK(translation_action(a).preserves_gram());
    for (const auto& b : ThetaChar::all()) CHECK(switch_action(b).preserves_gram());
    CHECK(translation_action(TwoTorsion::zero()).is_identity());
    for (const auto& b : ThetaChar::all()) {
        auto s = switch_action(b);
        CHECK(s.compose(s).is_identity());
    }
}

TEST_CASE("translation fixes H; switch sends H to 3H - sum N") {
    IntVec h = class_H();
    for (const auto& a : TwoTorsion::all()) {
        IntVec img = translation_action(a)(h);
        IntVec diff;
        for (int i = 0; i < kGenerators; ++i) diff[i] = img[i] - h[i];
        CHECK(in_radical(diff));
    }
    IntVec target;
    for (int i = 0; i < kGenerators; ++i) target[i] = 3 * h[i];
    for (int i = 0; i < 16; ++i) target[i] -= 1;
    CHECK(pair(target, target) == 4);  // (3H - sum N)^2 = (H)^2
    for (const auto& b : ThetaChar::all()) {
        IntVec img = switch_action(b)(h);
        IntVec diff;
        for (int i = 0; i < kGenerators; ++i) diff[i] = img[i] - target[i];
        CHECK(in_radical(diff));
    }
}

TEST_CASE("translation intertwines the hessian and eleventh-node classes") {
    auto w = canonical_w();
    for (const auto& a : TwoTorsion::all()) {
        std::array<TwoTorsion, 6> moved;
        for (int i = 0; i < 6; ++i) moved[i] = w.elements[i] + a;
        auto wa = f2geom::is_weber_hexad(moved);
        REQUIRE(wa.has_value());

        IntVec img = translation_action(a)(hessian_class(w));
        IntVec expect = hessian_class(*wa);
        IntVec diff;
        for (int i = 0; i < kGenerators; ++i) diff[i] = img[i] - expect[i];
        CHECK(in_radical(diff));

        RatVec rimg = translation_action(a)(eleventh_node_class(w));
        RatVec rexpect = eleventh_node_class(*wa);
        RatVec rdiff;
        for (int i = 0; i < kGenerators; ++i) rdiff[i] = rimg[i] - rexpect[i];
        CHECK(in_radical(rdiff));
    }
}

TEST_CASE("no four nodes of a hexad lie on a common trope hyperplane (lattice form)") {
    auto w = canonical_w();
    const auto& g = gram();
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                for (int d = c + 1; d < 6; ++d) {
                    int idx[4] = {node_index(w.elements[a]), node_index(w.elements[b]),
                                  node_index(w.elements[c]), node_index(w.elements[d])};
                    bool witness = false;
                    for (const auto& beta : ThetaChar::all()) {
                        int inc = 0;
                        for (int k = 0; k < 4; ++k) inc += g[idx[k]][trope_index(beta)];
                        if (inc == 3) witness = true;
                    }
                    CHECK(witness);
                }
}
