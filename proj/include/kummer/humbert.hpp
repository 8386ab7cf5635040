// Exact projective conic geometry over Q for the inscribed-conic criterion:
// the branch-point picture (conic inscribed in the pentagon of five Veronese
// points and passing through the sixth) and the dual six-line picture.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/f2geom.hpp"
#include "kummer/rational.hpp"

namespace kummer::humbert {

struct NotUnique : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegeneratePentagon : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotTangent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotInHexad : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Primitive integer homogeneous triple, first nonzero entry positive.
std::array<Int, 3> normalize_triple(std::array<Rational, 3> c);

struct ProjPoint {
    std::array<Int, 3> c;

    static ProjPoint make(const std::array<Rational, 3>& coords);
    bool operator==(const ProjPoint& o) const = default;
    auto operator<=>(const ProjPoint& o) const = default;
};

struct ProjLine {
    std::array<Int, 3> c;

    static ProjLine make(const std::array<Rational, 3>& coords);
    bool operator==(const ProjLine& o) const = default;
    auto operator<=>(const ProjLine& o) const = default;
};

ProjLine join(const ProjPoint& a, const ProjPoint& b);   // zero input pair -> throws
ProjPoint meet(const ProjLine& a, const ProjLine& b);
Int incidence(const ProjPoint& p, const ProjLine& l);

// Element of P^1 over Q as a primitive pair (p:q), q >= 0; (1:0) is infinity.
struct P1 {
    Int p, q;

    static P1 of(const Rational& t);
    static P1 infinity();
    static std::optional<P1> parse(std::string_view s);  // "p/q" or "inf"
    std::string str() const;
    bool is_infinity() const { return q == 0; }
    bool operator==(const P1& o) const = default;
};

// Symmetric primitive integer matrix; p on the conic iff p^T m p = 0.
struct Conic {
    std::array<std::array<Int, 3>, 3> m;

    static Conic make(const std::array<std::array<Rational, 3>, 3>& sym);
    Int apply(const ProjPoint& p) const;  // p^T m p
    Int det() const;
    bool nondegenerate() const { return det() != 0; }
    Conic adjugate() const;
    std::array<Int, 6> upper_triangle() const;  // m00,m01,m02,m11,m12,m22
    bool operator==(const Conic& o) const = default;
};

// t -> (1 : t : t^2), infinity -> (0 : 0 : 1); the image lies on xz-y^2 = 0.
ProjPoint veronese(const P1& t);
Conic veronese_conic();

// Tangent line of a nondegenerate conic at one of its points.
ProjLine tangent_line(const Conic& k, const ProjPoint& p);

// Discriminant of the restriction of the conic to the line (exact); zero
// iff tangent.
Int tangency_discriminant(const Conic& d, const ProjLine& l);
bool is_tangent(const Conic& d, const ProjLine& l);

// Unique conic through five points; throws NotUnique when the linear
// system drops rank.
Conic conic_through_five(const std::array<ProjPoint, 5>& pts);

// Unique conic tangent to the five sides of the pentagon (consecutive
// joins), computed through the dual conic.  Throws DegeneratePentagon.
Conic inscribed_conic(const std::array<ProjPoint, 5>& pentagon);

// Cyclic order on five of the indices 1..6 plus the distinguished sixth.
struct PentagonLabeling {
    std::array<int, 5> cycle;
    int sixth;

    static PentagonLabeling canonical(std::array<int, 5> cycle, int sixth);
    bool operator==(const PentagonLabeling& o) const = default;
    auto operator<=>(const PentagonLabeling& o) const = default;
};

// The 72 dihedral-reduced labelings, sorted.
const std::vector<PentagonLabeling>& all_labelings();

struct BranchSextuple {
    std::array<P1, 6> t;

    explicit BranchSextuple(std::array<P1, 6> values);  // must be pairwise distinct
};

// Core of the criterion on explicit points: the conic inscribed in the
// pentagon passes through the sixth point.
bool conic_pentagon_check(const std::array<ProjPoint, 5>& pentagon, const ProjPoint& sixth);

bool humbert_check(const BranchSextuple& b, const PentagonLabeling& lab);

// All satisfied labelings out of the 72; labelings whose pentagon is
// degenerate count as unsatisfied.
std::vector<PentagonLabeling> humbert_check_all(const BranchSextuple& b);

// q(t) = (1,t,t^2) D (1,t,t^2)^T for the inscribed conic of the labeled
// pentagon; roots are the compatible sixth branch values.  Coefficients
// ascending, degree <= 4.
std::vector<Rational> humbert_locus_quartic(const std::array<P1, 5>& t,
                                            const PentagonLabeling& lab);

// Dual picture: six lines tangent to k; the conic through the five pentagon
// vertices must be tangent to the remaining line.
bool line_picture_check(const Conic& k, const std::array<ProjLine, 6>& lines,
                        const PentagonLabeling& lab);

// Extracts the pentagon convention from the Type1 translate of w by w0.
PentagonLabeling hexad_pentagon_convention(const f2geom::WeberHexad& w, f2geom::TwoTorsion w0);

}  // namespace kummer::humbert
