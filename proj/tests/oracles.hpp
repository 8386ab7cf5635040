// Test-only helpers: seeded random exact values and independent oracles.
// Everything here deliberately avoids the library code paths it is used to
// check.
#pragma once

#include <array>
#include <complex>
#include <random>
#include <vector>

#include "kummer/hessian.hpp"
#include "kummer/rational.hpp"
#include "kummer/roots.hpp"

namespace kummer::testing {

inline Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 9,
                                bool nonzero = true) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    while (true) {
        int p = num(rng);
        if (nonzero && p == 0) continue;
        return Rational(p, den(rng));
    }
}

inline Rational random_positive_rational(std::mt19937_64& rng, int max_num = 60, int max_den = 9) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
    Rational out = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * x + *it;
    return out;
}

// continued-fraction reconstruction of a rational root, verified exactly
inline std::optional<Rational> rational_root_near(const std::vector<Rational>& poly, double x) {
    double target = x;
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int depth = 0; depth < 30; ++depth) {
        double fl = std::floor(target);
        if (std::abs(fl) > 1e15) break;
        Int a(static_cast<long long>(fl));
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 != 0 && eval_poly(poly, Rational(p2, q2)) == 0) return Rational(p2, q2);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = target - fl;
        if (std::abs(frac) < 1e-12) break;
        target = 1.0 / frac;
    }
    return std::nullopt;
}

// Independent exact oracle for the degeneration polynomial when every
// lambda_i is a rational square: the plain product of the 16 signed sums.
inline Rational sign_sum_product_oracle(const std::array<Rational, 5>& sqrt_lambda) {
    Rational prod = 1;
    for (unsigned pattern = 0; pattern < 16; ++pattern) {
        Rational sum = sqrt_lambda[0];
        for (int i = 0; i < 4; ++i) {
            bool minus = (pattern & (1u << (3 - i))) != 0;
            sum += minus ? -sqrt_lambda[i + 1] : sqrt_lambda[i + 1];
        }
        prod *= sum;
    }
    return prod;
}

// A floating point of the Hessian surface with nonzero coordinates: three
// random rational coordinates and a numeric root of the resulting quartic.
inline std::optional<std::array<std::complex<double>, 5>> sample_surface_point(
    const hessian::LambdaVector& lambda, std::mt19937_64& rng) {
    using C = std::complex<double>;
    hessian::Poly4 f = hessian::quartic_equation(lambda);
    std::array<Rational, 4> fixed = {random_rational(rng), random_rational(rng),
                                     random_rational(rng), 0};
    auto coeffs = f.univariate(3, fixed);
    if (coeffs.size() < 2) return std::nullopt;
    for (const auto& root : poly_roots(coeffs)) {
        std::array<C, 5> s = {to_double(fixed[0]), to_double(fixed[1]), to_double(fixed[2]), root,
                              0.0};
        s[4] = -(s[0] + s[1] + s[2] + s[3]);
        bool ok = true;
        for (const auto& x : s)
            if (std::abs(x) < 1e-6) ok = false;
        if (ok && hessian::surface_residual(lambda, s) < 1e-8) return s;
    }
    return std::nullopt;
}

// Projective distance between the involution image of a surface point near
// the line {s_i = s_j = 0} and the opposite coordinate point.
inline std::optional<double> line_image_distance(const hessian::LambdaVector& lambda, int i, int j,
                                                 double eps, std::mt19937_64& rng) {
    using C = std::complex<double>;
    int rest[3], n = 0;
    for (int k = 0; k < 5; ++k)
        if (k != i && k != j) rest[n++] = k;

    // coordinates: s_i = eps, s_rest0 and s_rest1 random, s_j unknown,
    // s_rest2 = -(sum); choose the root branch with s_j -> 0
    hessian::Poly4 f = hessian::quartic_equation(lambda);
    // build the quartic in s_j by evaluating on the affine chart
    // numerically: substitute all but variable j
    std::array<C, 5> base{};
    base[i] = eps;
    base[rest[0]] = to_double(random_rational(rng));
    base[rest[1]] = to_double(random_rational(rng));

    // f as univariate in t = s_j via five complex evaluations and
    // interpolation-free direct expansion of the defining form
    auto eval_at = [&](C t) {
        std::array<C, 5> s = base;
        s[j] = t;
        s[rest[2]] = -(s[i] + s[j] + s[rest[0]] + s[rest[1]]);
        C out = 0;
        for (int a = 0; a < 5; ++a) {
            C term = to_double(lambda[a]);
            for (int b = 0; b < 5; ++b)
                if (b != a) term *= s[b];
            out += term;
        }
        return out;
    };
    // sample-based coefficients of the degree-4 univariate polynomial
    std::vector<std::complex<double>> samples(5), coef(5, 0.0);
    std::array<C, 5> nodes = {C(0, 0), C(1, 0), C(-1, 0), C(2, 0), C(-2, 0)};
    for (int k = 0; k < 5; ++k) samples[k] = eval_at(nodes[k]);
    // Lagrange -> monomial coefficients
    for (int k = 0; k < 5; ++k) {
        std::vector<C> basis = {1.0};
        C denom = 1.0;
        for (int m = 0; m < 5; ++m) {
            if (m == k) continue;
            denom *= nodes[k] - nodes[m];
            std::vector<C> next(basis.size() + 1, 0.0);
            for (size_t d = 0; d < basis.size(); ++d) {
                next[d] -= basis[d] * nodes[m];
                next[d + 1] += basis[d];
            }
            basis = next;
        }
        for (size_t d = 0; d < basis.size(); ++d) coef[d] += samples[k] * basis[d] / denom;
    }
    // roots of the complex quartic: reuse Durand-Kerner on doubles
    std::vector<C> roots;
    {
        std::vector<C> c = coef;
        while (!c.empty() && std::abs(c.back()) < 1e-13) c.pop_back();
        if (c.size() <= 1) return std::nullopt;
        int deg = static_cast<int>(c.size()) - 1;
        for (auto& x : c) x /= c[deg];
        std::vector<C> z(deg);
        C w(0.4, 0.9);
        z[0] = w;
        for (int k = 1; k < deg; ++k) z[k] = z[k - 1] * w;
        for (int iter = 0; iter < 400; ++iter) {
            double moved = 0;
            for (int k = 0; k < deg; ++k) {
                C d = 1.0;
                for (int m = 0; m < deg; ++m)
                    if (m != k) d *= z[k] - z[m];
                if (std::abs(d) == 0.0) continue;
                C v = 0;
                for (int m = deg; m >= 0; --m) v = v * z[k] + c[m];
                C delta = v / d;
                z[k] -= delta;
                moved = std::max(moved, std::abs(delta));
            }
            if (moved < 1e-15) break;
        }
        roots = z;
    }
    C best = roots[0];
    for (const auto& r : roots)
        if (std::abs(r) < std::abs(best)) best = r;

    std::array<C, 5> p = base;
    p[j] = best;
    p[rest[2]] = -(p[i] + p[j] + p[rest[0]] + p[rest[1]]);
    if (hessian::surface_residual(lambda, p) > 1e-6) return std::nullopt;
    for (const auto& x : p)
        if (std::abs(x) == 0.0) return std::nullopt;

    std::array<C, 5> target{};
    target[i] = 1.0;
    target[j] = -1.0;
    return hessian::projective_distance(hessian::hw_involution(lambda, p), target);
}

}  // namespace kummer::testing
