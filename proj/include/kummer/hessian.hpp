// The Hessian quartic model in lambda-space: the exact degeneration
// criterion through the square-root algebra, the quartic equation and its
// coordinate nodes, and the coordinates of the extra node fixed by the
// coordinate involution s_i -> lambda_i / s_i.
#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer::hessian {

struct ZeroLambda : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotDegenerate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoRationalSquareRoots : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Five nonzero rationals.  Throws ZeroLambda otherwise.
struct LambdaVector {
    std::array<Rational, 5> values;

    explicit LambdaVector(std::array<Rational, 5> v);
    const Rational& operator[](int i) const { return values[i]; }
};

// Z[lambda]-style arithmetic in Q[s_1..s_5]/(s_i^2 - lambda_i): coefficients
// are indexed by exponent masks in {0,1}^5; multiplication reduces squares.
class SqrtAlgebra {
  public:
    using Elem = std::array<Rational, 32>;

    explicit SqrtAlgebra(const LambdaVector& lambda) : lambda_(lambda.values) {}

    static Elem zero() { return Elem{}; }
    static Elem one();
    // sum_i signs[i] * s_i
    static Elem linear_form(const std::array<int, 5>& signs);
    Elem mul(const Elem& a, const Elem& b) const;

    static bool is_rational(const Elem& a);

  private:
    std::array<Rational, 5> lambda_;
};

// Product of (sqrt(l1) + e2 sqrt(l2) + ... + e5 sqrt(l5)) over the 16 sign
// patterns with the first sign fixed; a homogeneous degree-8 polynomial in
// lambda, zero exactly when some signed sum of the roots vanishes.
Rational degeneration_polynomial(const LambdaVector& lambda);

bool is_degenerate(const LambdaVector& lambda);

// min over the 16 patterns of |sum of signed square roots| after scaling by
// max lambda; meaningful for positive lambda only (floating companion).
double min_sign_sum(const LambdaVector& lambda);

// Sparse polynomial in the affine chart s_1..s_4 (s_5 eliminated).
class Poly4 {
  public:
    using Monomial = std::array<int, 4>;

    static Poly4 variable(int i);  // 0..3
    static Poly4 constant(const Rational& c);

    Poly4 operator+(const Poly4& o) const;
    Poly4 operator-(const Poly4& o) const;
    Poly4 operator*(const Poly4& o) const;
    Poly4 operator*(const Rational& c) const;
    bool operator==(const Poly4& o) const { return terms_ == o.terms_; }

    Poly4 derivative(int var) const;
    Rational eval(const std::array<Rational, 4>& x) const;
    std::complex<double> eval(const std::array<std::complex<double>, 4>& x) const;
    Poly4 substitute_zero(int var) const;
    // coefficients of var as a univariate polynomial after fixing the others
    std::vector<Rational> univariate(int var, const std::array<Rational, 4>& fixed) const;

    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

  private:
    std::map<Monomial, Rational> terms_;
    void prune();
};

// f = sum_i lambda_i * prod_{j != i} s_j with s_5 = -(s_1+...+s_4).
Poly4 quartic_equation(const LambdaVector& lambda);

// The same form evaluated at a point of P^4 (no elimination).
Rational eval_surface(const LambdaVector& lambda, const std::array<Rational, 5>& s);

// Gradient of the eliminated quartic at an affine representative.
std::array<Rational, 4> quartic_gradient(const LambdaVector& lambda,
                                         const std::array<Rational, 4>& x);

// Number of triple coordinate points P_ijk that are singular on the quartic
// (always 10 for nonzero lambda).
int count_coordinate_nodes(const LambdaVector& lambda);

struct ExactQuarticPoint {
    std::array<Rational, 5> s;  // sum zero, all coordinates nonzero
};
struct FloatQuarticPoint {
    std::array<std::complex<double>, 5> s;
};

// All fixed points of s_i -> lambda_i/s_i on the surface, i.e. the sign
// patterns with vanishing signed root sum (first sign positive).
// Exact form requires every lambda_i to be a rational square.
std::vector<ExactQuarticPoint> involution_fixed_points_exact(const LambdaVector& lambda);
std::vector<FloatQuarticPoint> involution_fixed_points_float(const LambdaVector& lambda,
                                                             double tol = 1e-9);

// First fixed point in pattern order; throws NotDegenerate when none exists.
ExactQuarticPoint eleventh_node_coordinates_exact(const LambdaVector& lambda);
std::optional<FloatQuarticPoint> eleventh_node_coordinates_float(const LambdaVector& lambda,
                                                                 double tol = 1e-9);

std::array<std::complex<double>, 5> hw_involution(const LambdaVector& lambda,
                                                  const std::array<std::complex<double>, 5>& s);

// residuals of the two defining equations, scale-normalized
double surface_residual(const LambdaVector& lambda, const std::array<std::complex<double>, 5>& s);

// max normalized cross-difference; zero iff the points agree projectively
double projective_distance(const std::array<std::complex<double>, 5>& a,
                           const std::array<std::complex<double>, 5>& b);

}  // namespace kummer::hessian
