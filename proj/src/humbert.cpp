#include "kummer/humbert.hpp"

#include <algorithm>
#include <set>

namespace kummer::humbert {

std::array<Int, 3> normalize_triple(std::array<Rational, 3> c) {
    Int d = 1;
    for (const auto& x : c) d = lcm(d, den(x));
    std::array<Int, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = num(c[i] * Rational(d));
    Int g = 0;
    for (const auto& x : out) g = gcd(g, x);
    if (g == 0) throw std::invalid_argument("zero triple is not projective");
    for (auto& x : out) x /= g;
    for (int i = 0; i < 3; ++i) {
        if (out[i] == 0) continue;
        if (out[i] < 0)
            for (auto& x : out) x = -x;
        break;
    }
    return out;
}

ProjPoint ProjPoint::make(const std::array<Rational, 3>& coords) {
    return ProjPoint{normalize_triple(coords)};
}

ProjLine ProjLine::make(const std::array<Rational, 3>& coords) {
    return ProjLine{normalize_triple(coords)};
}

namespace {

std::array<Rational, 3> cross(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
    return {Rational(a[1] * b[2] - a[2] * b[1]), Rational(a[2] * b[0] - a[0] * b[2]),
            Rational(a[0] * b[1] - a[1] * b[0])};
}

}  // namespace

ProjLine join(const ProjPoint& a, const ProjPoint& b) { return ProjLine::make(cross(a.c, b.c)); }

ProjPoint meet(const ProjLine& a, const ProjLine& b) { return ProjPoint::make(cross(a.c, b.c)); }

Int incidence(const ProjPoint& p, const ProjLine& l) {
    return p.c[0] * l.c[0] + p.c[1] * l.c[1] + p.c[2] * l.c[2];
}

P1 P1::of(const Rational& t) { return P1{num(t), den(t)}; }

P1 P1::infinity() { return P1{1, 0}; }

std::optional<P1> P1::parse(std::string_view s) {
    if (s == "inf") return infinity();
    auto r = parse_rational(s);
    if (!r) return std::nullopt;
    return of(*r);
}

std::string P1::str() const {
    if (is_infinity()) return "inf";
    return format_rational(Rational(p, q));
}

Conic Conic::make(const std::array<std::array<Rational, 3>, 3>& sym) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (sym[i][j] != sym[j][i]) throw std::invalid_argument("conic matrix must be symmetric");
    Int d = 1;
    for (const auto& row : sym)
        for (const auto& x : row) d = lcm(d, den(x));
    std::array<std::array<Int, 3>, 3> m;
    Int g = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m[i][j] = num(sym[i][j] * Rational(d));
            g = gcd(g, m[i][j]);
        }
    if (g == 0) throw std::invalid_argument("zero matrix is not a conic");
    for (auto& row : m)
        for (auto& x : row) x /= g;
    for (int i = 0; i < 3 * 3; ++i) {
        Int v = m[i / 3][i % 3];
        if (v == 0) continue;
        if (v < 0)
            for (auto& row : m)
                for (auto& x : row) x = -x;
        break;
    }
    return Conic{m};
}

Int Conic::apply(const ProjPoint& p) const {
    Int out = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out += p.c[i] * m[i][j] * p.c[j];
    return out;
}

Int Conic::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Conic Conic::adjugate() const {
    std::array<std::array<Rational, 3>, 3> a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            // cofactor transpose; symmetric input keeps it symmetric
            a[j][i] = Rational(m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]);
        }
    return Conic::make(a);
}

std::array<Int, 6> Conic::upper_triangle() const {
    return {m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2]};
}

ProjPoint veronese(const P1& t) {
    return ProjPoint::make({Rational(t.q * t.q), Rational(t.p * t.q), Rational(t.p * t.p)});
}

Conic veronese_conic() {
    std::array<std::array<Rational, 3>, 3> m{};
    m[0][2] = m[2][0] = 1;
    m[1][1] = -2;
    return Conic::make(m);
}

ProjLine tangent_line(const Conic& k, const ProjPoint& p) {
    if (k.apply(p) != 0) throw std::invalid_argument("point is not on the conic");
    std::array<Rational, 3> l{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) l[i] += Rational(k.m[i][j] * p.c[j]);
    return ProjLine::make(l);
}

namespace {

// two distinct points spanning the line
std::pair<ProjPoint, ProjPoint> span_points(const ProjLine& l) {
    std::vector<ProjPoint> pts;
    for (int i = 0; i < 3 && pts.size() < 2; ++i) {
        std::array<Int, 3> e{};
        e[i] = 1;
        auto c = cross(l.c, e);
        if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
        ProjPoint p = ProjPoint::make(c);
        if (pts.empty() || !(pts[0] == p)) pts.push_back(p);
    }
    if (pts.size() < 2) throw std::invalid_argument("degenerate line");
    return {pts[0], pts[1]};
}

Int bilinear(const Conic& d, const ProjPoint& a, const ProjPoint& b) {
    Int out = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out += a.c[i] * d.m[i][j] * b.c[j];
    return out;
}

}  // namespace

Int tangency_discriminant(const Conic& d, const ProjLine& l) {
    auto [a, b] = span_points(l);
    Int ab = bilinear(d, a, b);
    return ab * ab - d.apply(a) * d.apply(b);
}

bool is_tangent(const Conic& d, const ProjLine& l) { return tangency_discriminant(d, l) == 0; }

Conic conic_through_five(const std::array<ProjPoint, 5>& pts) {
    // row per point: coefficients of (a,b,c,d,e,f) in
    // a x^2 + b xy + c y^2 + d xz + e yz + f z^2
    std::array<std::array<Rational, 6>, 5> rows;
    for (int k = 0; k < 5; ++k) {
        const auto& p = pts[k].c;
        rows[k] = {Rational(p[0] * p[0]), Rational(p[0] * p[1]), Rational(p[1] * p[1]),
                   Rational(p[0] * p[2]), Rational(p[1] * p[2]), Rational(p[2] * p[2])};
    }
    // rational elimination to row echelon, tracking pivot columns
    std::array<int, 5> pivot_col{-1, -1, -1, -1, -1};
    int r = 0;
    for (int col = 0; col < 6 && r < 5; ++col) {
        int pr = -1;
        for (int i = r; i < 5; ++i)
            if (rows[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        for (int i = 0; i < 5; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[r][col];
            for (int c = col; c < 6; ++c) rows[i][c] -= f * rows[r][c];
        }
        pivot_col[r] = col;
        ++r;
    }
    if (r < 5) throw NotUnique("five points do not determine a unique conic");
    int free_col = 0;
    for (int col = 0; col < 6; ++col)
        if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) free_col = col;
    std::array<Rational, 6> sol{};
    sol[free_col] = 1;
    for (int i = 4; i >= 0; --i) {
        Rational rhs = -rows[i][free_col];
        for (int c = pivot_col[i] + 1; c < 6; ++c)
            if (c != free_col) rhs -= rows[i][c] * sol[c];
        sol[pivot_col[i]] = rhs / rows[i][pivot_col[i]];
    }
    // matrix of the doubled form keeps everything integral
    std::array<std::array<Rational, 3>, 3> m;
    m[0] = {2 * sol[0], sol[1], sol[3]};
    m[1] = {sol[1], 2 * sol[2], sol[4]};
    m[2] = {sol[3], sol[4], 2 * sol[5]};
    Conic out = Conic::make(m);
    for (const auto& p : pts)
        if (out.apply(p) != 0) throw std::logic_error("conic must pass through its five points");
    return out;
}

Conic inscribed_conic(const std::array<ProjPoint, 5>& pentagon) {
    std::array<ProjLine, 5> sides;
    for (int i = 0; i < 5; ++i) {
        if (pentagon[i] == pentagon[(i + 1) % 5])
            throw DegeneratePentagon("consecutive pentagon points coincide");
        sides[i] = join(pentagon[i], pentagon[(i + 1) % 5]);
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (sides[i] == sides[j]) throw DegeneratePentagon("pentagon sides coincide");
    std::array<ProjPoint, 5> duals;
    for (int i = 0; i < 5; ++i) duals[i] = ProjPoint{sides[i].c};
    Conic dual;
    try {
        dual = conic_through_five(duals);
    } catch (const NotUnique&) {
        throw DegeneratePentagon("dual side system is rank deficient");
    }
    if (dual.det() == 0) throw DegeneratePentagon("pentagon sides admit no inscribed conic");
    Conic out = dual.adjugate();
    for (const auto& side : sides)
        if (!is_tangent(out, side)) throw std::logic_error("inscribed conic must touch every side");
    return out;
}

PentagonLabeling PentagonLabeling::canonical(std::array<int, 5> cycle, int sixth) {
    std::array<int, 5> best = cycle;
    auto consider = [&](const std::array<int, 5>& c) {
        if (c < best) best = c;
    };
    std::array<int, 5> fwd = cycle, rev;
    for (int r = 0; r < 5; ++r) {
        std::rotate(fwd.begin(), fwd.begin() + 1, fwd.end());
        consider(fwd);
    }
    std::reverse_copy(cycle.begin(), cycle.end(), rev.begin());
    for (int r = 0; r < 5; ++r) {
        std::rotate(rev.begin(), rev.begin() + 1, rev.end());
        consider(rev);
    }
    return PentagonLabeling{best, sixth};
}

const std::vector<PentagonLabeling>& all_labelings() {
    static const std::vector<PentagonLabeling> labelings = [] {
        std::set<PentagonLabeling> out;
        for (int sixth = 1; sixth <= 6; ++sixth) {
            std::array<int, 5> rest;
            int n = 0;
            for (int i = 1; i <= 6; ++i)
                if (i != sixth) rest[n++] = i;
            std::sort(rest.begin(), rest.end());
            do {
                out.insert(PentagonLabeling::canonical(rest, sixth));
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        return std::vector<PentagonLabeling>(out.begin(), out.end());
    }();
    return labelings;
}

BranchSextuple::BranchSextuple(std::array<P1, 6> values) : t(std::move(values)) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (t[i] == t[j]) throw std::invalid_argument("branch values must be distinct");
}

bool conic_pentagon_check(const std::array<ProjPoint, 5>& pentagon, const ProjPoint& sixth) {
    Conic d = inscribed_conic(pentagon);
    return d.apply(sixth) == 0;
}

bool humbert_check(const BranchSextuple& b, const PentagonLabeling& lab) {
    std::array<ProjPoint, 5> pentagon;
    for (int i = 0; i < 5; ++i) pentagon[i] = veronese(b.t[lab.cycle[i] - 1]);
    return conic_pentagon_check(pentagon, veronese(b.t[lab.sixth - 1]));
}

std::vector<PentagonLabeling> humbert_check_all(const BranchSextuple& b) {
    std::vector<PentagonLabeling> out;
    for (const auto& lab : all_labelings()) {
        bool ok = false;
        try {
            ok = humbert_check(b, lab);
        } catch (const DegeneratePentagon&) {
            ok = false;
        }
        if (ok) out.push_back(lab);
    }
    return out;
}

std::vector<Rational> humbert_locus_quartic(const std::array<P1, 5>& t,
                                            const PentagonLabeling& lab) {
    std::array<ProjPoint, 5> pentagon;
    for (int i = 0; i < 5; ++i) pentagon[i] = veronese(t[lab.cycle[i] - 1]);
    Conic d = inscribed_conic(pentagon);
    const auto& m = d.m;
    std::vector<Rational> q = {Rational(m[0][0]), Rational(2 * m[0][1]),
                               Rational(m[1][1] + 2 * m[0][2]), Rational(2 * m[1][2]),
                               Rational(m[2][2])};
    while (!q.empty() && q.back() == 0) q.pop_back();
    return q;
}

bool line_picture_check(const Conic& k, const std::array<ProjLine, 6>& lines,
                        const PentagonLabeling& lab) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (lines[i] == lines[j]) throw DegeneratePentagon("branch lines coincide");
    for (const auto& l : lines)
        if (!is_tangent(k, l)) throw NotTangent("line is not tangent to the base conic");
    std::array<ProjLine, 5> sides;
    for (int i = 0; i < 5; ++i) sides[i] = lines[lab.cycle[i] - 1];
    std::array<ProjPoint, 5> vertices;
    for (int i = 0; i < 5; ++i) vertices[i] = meet(sides[i], sides[(i + 1) % 5]);
    Conic e;
    try {
        e = conic_through_five(vertices);
    } catch (const NotUnique&) {
        throw DegeneratePentagon("pentagon vertices do not determine a conic");
    }
    return is_tangent(e, lines[lab.sixth - 1]);
}

PentagonLabeling hexad_pentagon_convention(const f2geom::WeberHexad& w, f2geom::TwoTorsion w0) {
    if (!w.contains(w0)) throw NotInHexad("translation element must belong to the hexad");
    std::array<f2geom::TwoTorsion, 6> moved;
    for (int i = 0; i < 6; ++i) moved[i] = w.elements[i] + w0;
    auto t1 = f2geom::is_weber_hexad(moved);
    if (!t1 || t1->form != f2geom::HexadForm::Type1)
        throw std::logic_error("translate by a member must be a Type1 hexad");
    std::array<int, 5> cycle;
    for (int i = 0; i < 5; ++i) cycle[i] = t1->letters[i];
    return PentagonLabeling::canonical(cycle, t1->letters[5]);
}

}  // namespace kummer::humbert
