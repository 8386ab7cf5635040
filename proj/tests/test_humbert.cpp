#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <set>

#include "kummer/humbert.hpp"
#include "kummer/roots.hpp"
#include "oracles.hpp"

using namespace kummer;
using namespace kummer::humbert;

namespace {

P1 p1(int p, int q = 1) { return P1::of(Rational(p, q)); }

BranchSextuple sextuple(std::array<int, 6> values) {
    std::array<P1, 6> t;
    for (int i = 0; i < 6; ++i) t[i] = p1(values[i]);
    return BranchSextuple(t);
}

BranchSextuple random_sextuple(std::mt19937_64& rng) {
    while (true) {
        std::array<P1, 6> t;
        std::set<std::pair<Int, Int>> seen;
        bool ok = true;
        for (int i = 0; i < 6; ++i) {
            t[i] = P1::of(testing::random_rational(rng, 12, 5, false));
            if (!seen.insert({t[i].p, t[i].q}).second) ok = false;
        }
        if (ok) return BranchSextuple(t);
    }
}

PentagonLabeling identity_labeling() { return PentagonLabeling::canonical({1, 2, 3, 4, 5}, 6); }

using testing::rational_root_near;

}  // namespace

TEST_CASE("veronese embedding hits the conic xz = y^2") {
    CHECK(veronese(p1(0)) == ProjPoint::make({1, 0, 0}));
    CHECK(veronese(p1(2)) == ProjPoint::make({1, 2, 4}));
    CHECK(veronese(P1::infinity()) == ProjPoint::make({0, 0, 1}));
    Conic c = veronese_conic();
    std::mt19937_64 rng(8101);
    for (int i = 0; i < 20; ++i) {
        P1 t = P1::of(testing::random_rational(rng, 20, 7, false));
        CHECK(c.apply(veronese(t)) == 0);
    }
    CHECK(c.apply(veronese(P1::infinity())) == 0);
}

TEST_CASE("conic through five points: veronese fiver, residuals, rank drop") {
    std::array<ProjPoint, 5> pts = {veronese(p1(0)), veronese(p1(1)), veronese(p1(-1)),
                                    veronese(p1(2)), veronese(P1::infinity())};
    Conic c = conic_through_five(pts);
    CHECK(c == veronese_conic());
    for (const auto& p : pts) CHECK(c.apply(p) == 0);

    // four collinear points leave a pencil
    std::array<ProjPoint, 5> collinear = {
        ProjPoint::make({1, 0, 0}), ProjPoint::make({0, 1, 0}), ProjPoint::make({1, 1, 0}),
        ProjPoint::make({1, 2, 0}), ProjPoint::make({0, 0, 1})};
    CHECK_THROWS_AS((void)conic_through_five(collinear), NotUnique);
}

TEST_CASE("adjugate: involutive up to scale, detects degeneracy") {
    Conic circle = Conic::make({{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}});
    CHECK(circle.adjugate().adjugate() == circle);
    CHECK(veronese_conic().adjugate().adjugate() == veronese_conic());
    CHECK(circle.nondegenerate());
}

TEST_CASE("tangency: dual relation agrees with the restriction discriminant") {
    Conic circle = Conic::make({{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}});
    std::mt19937_64 rng(8102);
    for (int i = 0; i < 25; ++i) {
        // rational circle point from the u-parametrization
        Rational u = testing::random_rational(rng, 9, 5, false);
        ProjPoint p = ProjPoint::make({1 - u * u, 2 * u, 1 + u * u});
        REQUIRE(circle.apply(p) == 0);
        ProjLine tl = tangent_line(circle, p);
        CHECK(is_tangent(circle, tl));
        // dual relation for the same line
        Int dual = 0;
        Conic adj = circle.adjugate();
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) dual += tl.c[a] * adj.m[a][b] * tl.c[b];
        CHECK(dual == 0);
    }
    // a secant is not tangent
    ProjLine secant = ProjLine::make({0, 0, 1});  // z = 0 misses, x axis...
    CHECK_FALSE(is_tangent(circle, ProjLine::make({0, 1, 0})));  // y = 0 crosses at (1,0,+-1)
    (void)secant;
}

TEST_CASE("inscribed conic of a circumscribing pentagon recovers the circle") {
    Conic circle = Conic::make({{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}});
    std::array<Rational, 5> us = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(3)};
    std::array<ProjLine, 5> tangents;
    for (int i = 0; i < 5; ++i) {
        Rational u = us[i];
        tangents[i] = tangent_line(circle, ProjPoint::make({1 - u * u, 2 * u, 1 + u * u}));
    }
    std::array<ProjPoint, 5> pentagon;
    for (int i = 0; i < 5; ++i) pentagon[i] = meet(tangents[i], tangents[(i + 1) % 5]);
    Conic inscribed = inscribed_conic(pentagon);
    CHECK(inscribed == circle);
}

TEST_CASE("three concurrent sides make the pentagon degenerate") {
    // sides l1,l2,l4 meet at (1:1:1)
    ProjLine l1 = ProjLine::make({1, -1, 0});
    ProjLine l2 = ProjLine::make({0, 1, -1});
    ProjLine l3 = ProjLine::make({1, 1, -1});
    ProjLine l4 = ProjLine::make({1, 0, -1});
    ProjLine l5 = ProjLine::make({1, 2, 5});
    std::array<ProjPoint, 5> pentagon = {meet(l5, l1), meet(l1, l2), meet(l2, l3), meet(l3, l4),
                                         meet(l4, l5)};
    CHECK_THROWS_AS((void)inscribed_conic(pentagon), DegeneratePentagon);
}

TEST_CASE("labelings: 72 dihedral classes, canonical form") {
    const auto& labs = all_labelings();
    CHECK(labs.size() == 72);
    std::set<PentagonLabeling> distinct(labs.begin(), labs.end());
    CHECK(distinct.size() == 72);
    CHECK(PentagonLabeling::canonical({2, 3, 4, 5, 1}, 6) == identity_labeling());
    CHECK(PentagonLabeling::canonical({1, 5, 4, 3, 2}, 6) == identity_labeling());
    int with_sixth_6 = 0;
    for (const auto& l : labs)
        if (l.sixth == 6) ++with_sixth_6;
    CHECK(with_sixth_6 == 12);
}

TEST_CASE("generic sextuples fail the check everywhere") {
    BranchSextuple b = sextuple({0, 1, 2, 3, 4, 5});
    CHECK_FALSE(humbert_check(b, identity_labeling()));
    CHECK(humbert_check_all(b).empty());

    std::mt19937_64 rng(8103);
    for (int i = 0; i < 3; ++i) CHECK(humbert_check_all(random_sextuple(rng)).empty());
}

TEST_CASE("humbert check is dihedral invariant in the labeling") {
    std::mt19937_64 rng(8104);
    BranchSextuple b = random_sextuple(rng);
    std::array<int, 5> cycle = {1, 2, 3, 4, 5};
    bool base = humbert_check(b, PentagonLabeling{cycle, 6});
    for (int r = 0; r < 5; ++r) {
        std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
        CHECK(humbert_check(b, PentagonLabeling{cycle, 6}) == base);
        std::array<int, 5> rev;
        std::reverse_copy(cycle.begin(), cycle.end(), rev.begin());
        CHECK(humbert_check(b, PentagonLabeling{rev, 6}) == base);
    }
}

TEST_CASE("humbert check is invariant under moebius maps of the branch values") {
    std::mt19937_64 rng(8105);
    for (int trial = 0; trial < 10; ++trial) {
        BranchSextuple b = random_sextuple(rng);
        const auto& lab = all_labelings()[trial * 7 % 72];
        bool base = humbert_check(b, lab);

        std::uniform_int_distribution<int> entry(-4, 4);
        int a, bb, c, d;
        do {
            a = entry(rng);
            bb = entry(rng);
            c = entry(rng);
            d = entry(rng);
        } while (a * d - bb * c == 0);
        std::array<P1, 6> moved;
        for (int i = 0; i < 6; ++i) {
            Int p = a * b.t[i].p + bb * b.t[i].q;
            Int q = c * b.t[i].p + d * b.t[i].q;
            Int g = gcd(p, q);
            if (g != 0) {
                p /= g;
                q /= g;
            }
            if (q < 0 || (q == 0 && p < 0)) {
                p = -p;
                q = -q;
            }
            moved[i] = P1{p, q};
        }
        CHECK(humbert_check(BranchSextuple(moved), lab) == base);
    }
}

TEST_CASE("the core check is invariant under projectivities of the plane") {
    std::mt19937_64 rng(8106);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        BranchSextuple b = random_sextuple(rng);
        std::array<ProjPoint, 6> pts;
        for (int i = 0; i < 6; ++i) pts[i] = veronese(b.t[i]);
        std::array<ProjPoint, 5> pentagon;
        for (int i = 0; i < 5; ++i) pentagon[i] = pts[i];
        bool base = conic_pentagon_check(pentagon, pts[5]);

        std::array<std::array<int, 3>, 3> m;
        long long det = 0;
        while (det == 0) {
            for (auto& row : m)
                for (auto& x : row) x = entry(rng);
            det = (long long)m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        }
        auto transform = [&](const ProjPoint& p) {
            std::array<Rational, 3> out{};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) out[i] += Rational(m[i][j]) * Rational(p.c[j]);
            return ProjPoint::make(out);
        };
        std::array<ProjPoint, 5> moved;
        for (int i = 0; i < 5; ++i) moved[i] = transform(pentagon[i]);
        CHECK(conic_pentagon_check(moved, transform(pts[5])) == base);
    }
}

TEST_CASE("locus quartic: degree, leading term, vertex values, root back-substitution") {
    std::mt19937_64 rng(8107);
    int rational_roots_checked = 0, numeric_roots_checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        std::array<P1, 5> t;
        std::set<std::pair<Int, Int>> seen;
        for (int i = 0; i < 5; ++i) {
            do {
                t[i] = P1::of(testing::random_rational(rng, 8, 3, false));
            } while (!seen.insert({t[i].p, t[i].q}).second);
        }
        PentagonLabeling lab = PentagonLabeling::canonical({1, 2, 3, 4, 5}, 6);
        std::vector<Rational> q;
        try {
            q = humbert_locus_quartic(t, lab);
        } catch (const DegeneratePentagon&) {
            continue;
        }
        REQUIRE(q.size() <= 5);

        // the inscribed conic pins the leading coefficient to its (3,3) entry
        std::array<ProjPoint, 5> pentagon;
        for (int i = 0; i < 5; ++i) pentagon[i] = veronese(t[lab.cycle[i] - 1]);
        Conic d = inscribed_conic(pentagon);
        if (q.size() == 5) CHECK(q[4] == Rational(d.m[2][2]));

        // value at a pentagon parameter is the conic evaluated at the vertex
        Rational t1 = Rational(t[0].p, t[0].q);
        CHECK((testing::eval_poly(q, t1) == 0) == (d.apply(veronese(t[0])) == 0));
        if (d.apply(veronese(t[0])) != 0) CHECK(testing::eval_poly(q, t1) != 0);

        // roots are the humbert-compatible sixth values
        for (const auto& root : poly_roots(q)) {
            if (std::abs(root.imag()) < 1e-10) {
                auto cand = rational_root_near(q, root.real());
                if (cand) {
                    bool distinct = true;
                    for (const auto& ti : t)
                        if (P1::of(*cand) == ti) distinct = false;
                    if (distinct) {
                        std::array<P1, 6> full;
                        for (int i = 0; i < 5; ++i) full[i] = t[i];
                        full[5] = P1::of(*cand);
                        CHECK(humbert_check(BranchSextuple(full), lab));
                        ++rational_roots_checked;
                        continue;
                    }
                }
            }
            // numeric back-substitution at 1e-9 after normalization
            std::complex<double> v[3] = {1.0, root, root * root};
            double dmax = 0, vmax = 0;
            for (int i = 0; i < 3; ++i) {
                vmax = std::max(vmax, std::abs(v[i]));
                for (int j = 0; j < 3; ++j)
                    dmax = std::max(dmax, std::abs(to_double(Rational(d.m[i][j]))));
            }
            std::complex<double> res = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    res += (v[i] / vmax) * (to_double(Rational(d.m[i][j])) / dmax) * (v[j] / vmax);
            CHECK(std::abs(res) < 1e-9);
            ++numeric_roots_checked;
        }
    }
    CHECK(numeric_roots_checked > 10);
}

TEST_CASE("a rational positive instance, found by bounded search") {
    // branch values (-6,-5,-4,-3,2,4): the conic inscribed in the pentagon
    // t1 t2 t4 t5 t3 passes through the sixth Veronese point exactly
    BranchSextuple b = sextuple({-6, -5, -4, -3, 2, 4});
    PentagonLabeling lab = PentagonLabeling::canonical({1, 2, 4, 5, 3}, 6);
    CHECK(humbert_check(b, lab));
    auto satisfied = humbert_check_all(b);
    CHECK_FALSE(satisfied.empty());
    CHECK(std::find(satisfied.begin(), satisfied.end(), lab) != satisfied.end());
    // closed under the dihedral identification by construction of the set
    for (const auto& l : satisfied) CHECK(PentagonLabeling::canonical(l.cycle, l.sixth) == l);

    // the same instance in the dual six-line picture
    Conic k = veronese_conic();
    std::array<ProjLine, 6> lines;
    for (int i = 0; i < 6; ++i) lines[i] = tangent_line(k, veronese(b.t[i]));
    CHECK(line_picture_check(k, lines, lab));
}

TEST_CASE("point picture and line picture agree through duality") {
    std::mt19937_64 rng(8108);
    Conic k = veronese_conic();
    for (int trial = 0; trial < 15; ++trial) {
        BranchSextuple b = random_sextuple(rng);
        std::array<ProjLine, 6> lines;
        bool degenerate = false;
        for (int i = 0; i < 6; ++i) lines[i] = tangent_line(k, veronese(b.t[i]));
        const auto& lab = all_labelings()[(trial * 11) % 72];
        bool point_side, line_side;
        try {
            point_side = humbert_check(b, lab);
            line_side = line_picture_check(k, lines, lab);
        } catch (const DegeneratePentagon&) {
            degenerate = true;
        }
        if (!degenerate) CHECK(point_side == line_side);
    }
}

TEST_CASE("line picture input validation") {
    Conic k = veronese_conic();
    std::array<ProjLine, 6> lines;
    for (int i = 0; i < 6; ++i) lines[i] = tangent_line(k, veronese(p1(i)));
    PentagonLabeling lab = identity_labeling();

    auto bad = lines;
    bad[5] = ProjLine::make({1, 1, 1});  // not tangent to xz - y^2
    CHECK_THROWS_AS((void)line_picture_check(k, bad, lab), NotTangent);

    auto dup = lines;
    dup[5] = lines[0];
    CHECK_THROWS_AS((void)line_picture_check(k, dup, lab), DegeneratePentagon);
}

TEST_CASE("pentagon convention extracted from a hexad") {
    using f2geom::TwoTorsion;
    auto w = f2geom::is_weber_hexad({TwoTorsion::zero(), TwoTorsion::duad(1, 2),
                                     TwoTorsion::duad(2, 3), TwoTorsion::duad(3, 4),
                                     TwoTorsion::duad(4, 5), TwoTorsion::duad(1, 5)});
    REQUIRE(w.has_value());
    auto lab = hexad_pentagon_convention(*w, TwoTorsion::zero());
    CHECK(lab == PentagonLabeling::canonical({1, 2, 3, 4, 5}, 6));

    auto w2 = f2geom::is_weber_hexad({TwoTorsion::duad(1, 2), TwoTorsion::duad(2, 3),
                                      TwoTorsion::duad(1, 3), TwoTorsion::duad(1, 4),
                                      TwoTorsion::duad(2, 6), TwoTorsion::duad(3, 5)});
    REQUIRE(w2.has_value());
    auto lab2 = hexad_pentagon_convention(*w2, TwoTorsion::duad(1, 2));
    CHECK(lab2 == PentagonLabeling::canonical({1, 3, 2, 4, 6}, 5));

    CHECK_THROWS_AS((void)hexad_pentagon_convention(*w, TwoTorsion::duad(1, 6)), NotInHexad);
}
