// Numeric root finding for exact univariate polynomials (Durand-Kerner with
// Newton polishing).  Used only as a floating companion to exact checks.
#pragma once

#include <complex>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

// coeffs[k] multiplies x^k; trailing zero coefficients are ignored.
inline std::vector<std::complex<double>> poly_roots(const std::vector<Rational>& coeffs) {
    using C = std::complex<double>;
    std::vector<C> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.push_back(C(to_double(r), 0.0));
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    int n = static_cast<int>(c.size()) - 1;
    for (auto& x : c) x /= c[n];

    auto eval = [&](C x) {
        C v = 0;
        for (int k = n; k >= 0; --k) v = v * x + c[k];
        return v;
    };

    std::vector<C> z(n);
    C seed(0.4, 0.9);
    z[0] = seed;
    for (int i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            C denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (std::abs(denom) == 0.0) {
                z[i] += C(1e-8, 1e-8);
                continue;
            }
            C delta = eval(z[i]) / denom;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-15) break;
    }
    // Newton polish
    for (auto& x : z)
        for (int k = 0; k < 8; ++k) {
            C v = 0, d = 0;
            for (int j = n; j >= 0; --j) {
                d = d * x + v;
                v = v * x + c[j];
            }
            if (std::abs(d) == 0.0) break;
            x -= v / d;
        }
    return z;
}

}  // namespace kummer
