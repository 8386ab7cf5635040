#include "kummer/hessian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kummer::hessian {

LambdaVector::LambdaVector(std::array<Rational, 5> v) : values(std::move(v)) {
    for (const auto& x : values)
        if (x == 0) throw ZeroLambda("lambda entries must be nonzero");
}

SqrtAlgebra::Elem SqrtAlgebra::one() {
    Elem e{};
    e[0] = 1;
    return e;
}

SqrtAlgebra::Elem SqrtAlgebra::linear_form(const std::array<int, 5>& signs) {
    Elem e{};
    for (int i = 0; i < 5; ++i) e[1u << i] = signs[i];
    return e;
}

SqrtAlgebra::Elem SqrtAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem out{};
    for (unsigned ma = 0; ma < 32; ++ma) {
        if (a[ma] == 0) continue;
        for (unsigned mb = 0; mb < 32; ++mb) {
            if (b[mb] == 0) continue;
            Rational c = a[ma] * b[mb];
            unsigned common = ma & mb;  // squared generators reduce to lambda
            for (int i = 0; i < 5; ++i)
                if (common & (1u << i)) c *= lambda_[i];
            out[ma ^ mb] += c;
        }
    }
    return out;
}

bool SqrtAlgebra::is_rational(const Elem& a) {
    for (unsigned m = 1; m < 32; ++m)
        if (a[m] != 0) return false;
    return true;
}

namespace {

// patterns in lexicographic order over (e2,e3,e4,e5) with + before -
std::array<int, 5> sign_pattern(unsigned pattern) {
    std::array<int, 5> signs = {1, 1, 1, 1, 1};
    for (int i = 0; i < 4; ++i)
        if (pattern & (1u << (3 - i))) signs[i + 1] = -1;
    return signs;
}

}  // namespace

Rational degeneration_polynomial(const LambdaVector& lambda) {
    SqrtAlgebra alg(lambda);
    SqrtAlgebra::Elem acc = SqrtAlgebra::one();
    for (unsigned pattern = 0; pattern < 16; ++pattern)
        acc = alg.mul(acc, SqrtAlgebra::linear_form(sign_pattern(pattern)));
    if (!SqrtAlgebra::is_rational(acc))
        throw std::logic_error("sign-sum product must be rational");
    return acc[0];
}

bool is_degenerate(const LambdaVector& lambda) { return degeneration_polynomial(lambda) == 0; }

double min_sign_sum(const LambdaVector& lambda) {
    double mx = 0;
    for (const auto& l : lambda.values) mx = std::max(mx, std::abs(to_double(l)));
    double r[5];
    for (int i = 0; i < 5; ++i) r[i] = std::sqrt(to_double(lambda[i]) / mx);
    double best = std::numeric_limits<double>::infinity();
    for (unsigned pattern = 0; pattern < 16; ++pattern) {
        auto signs = sign_pattern(pattern);
        double s = 0;
        for (int i = 0; i < 5; ++i) s += signs[i] * r[i];
        best = std::min(best, std::abs(s));
    }
    return best;
}

void Poly4::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Poly4 Poly4::variable(int i) {
    Poly4 p;
    Monomial m{};
    m[i] = 1;
    p.terms_[m] = 1;
    return p;
}

Poly4 Poly4::constant(const Rational& c) {
    Poly4 p;
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

Poly4 Poly4::operator+(const Poly4& o) const {
    Poly4 out = *this;
    for (const auto& [m, c] : o.terms_) out.terms_[m] += c;
    out.prune();
    return out;
}

Poly4 Poly4::operator-(const Poly4& o) const {
    Poly4 out = *this;
    for (const auto& [m, c] : o.terms_) out.terms_[m] -= c;
    out.prune();
    return out;
}

Poly4 Poly4::operator*(const Poly4& o) const {
    Poly4 out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (int i = 0; i < 4; ++i) m[i] = ma[i] + mb[i];
            out.terms_[m] += ca * cb;
        }
    out.prune();
    return out;
}

Poly4 Poly4::operator*(const Rational& c) const {
    Poly4 out;
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

Poly4 Poly4::derivative(int var) const {
    Poly4 out;
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        out.terms_[d] += c * m[var];
    }
    out.prune();
    return out;
}

Rational Poly4::eval(const std::array<Rational, 4>& x) const {
    Rational out = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < m[i]; ++k) t *= x[i];
        out += t;
    }
    return out;
}

std::complex<double> Poly4::eval(const std::array<std::complex<double>, 4>& x) const {
    std::complex<double> out = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = to_double(c);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < m[i]; ++k) t *= x[i];
        out += t;
    }
    return out;
}

Poly4 Poly4::substitute_zero(int var) const {
    Poly4 out;
    for (const auto& [m, c] : terms_)
        if (m[var] == 0) out.terms_[m] = c;
    return out;
}

std::vector<Rational> Poly4::univariate(int var, const std::array<Rational, 4>& fixed) const {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < 4; ++i) {
            if (i == var) continue;
            for (int k = 0; k < m[i]; ++k) t *= fixed[i];
        }
        if (static_cast<int>(coeffs.size()) <= m[var]) coeffs.resize(m[var] + 1, Rational(0));
        coeffs[m[var]] += t;
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

int Poly4::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2] + m[3]);
    return d;
}

Poly4 quartic_equation(const LambdaVector& lambda) {
    std::array<Poly4, 5> s;
    for (int i = 0; i < 4; ++i) s[i] = Poly4::variable(i);
    s[4] = Poly4::constant(0) - s[0] - s[1] - s[2] - s[3];
    Poly4 f;
    for (int i = 0; i < 5; ++i) {
        Poly4 term = Poly4::constant(lambda[i]);
        for (int j = 0; j < 5; ++j)
            if (j != i) term = term * s[j];
        f = f + term;
    }
    return f;
}

Rational eval_surface(const LambdaVector& lambda, const std::array<Rational, 5>& s) {
    Rational out = 0;
    for (int i = 0; i < 5; ++i) {
        Rational t = lambda[i];
        for (int j = 0; j < 5; ++j)
            if (j != i) t *= s[j];
        out += t;
    }
    return out;
}

std::array<Rational, 4> quartic_gradient(const LambdaVector& lambda,
                                         const std::array<Rational, 4>& x) {
    Poly4 f = quartic_equation(lambda);
    std::array<Rational, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = f.derivative(i).eval(x);
    return out;
}

int count_coordinate_nodes(const LambdaVector& lambda) {
    Poly4 f = quartic_equation(lambda);
    std::array<Poly4, 4> grad;
    for (int i = 0; i < 4; ++i) grad[i] = f.derivative(i);
    int count = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) {
                // P_abc: the two remaining coordinates are 1 and -1
                std::array<Rational, 5> p{};
                int rest[2], n = 0;
                for (int i = 0; i < 5; ++i)
                    if (i != a && i != b && i != c) rest[n++] = i;
                p[rest[0]] = 1;
                p[rest[1]] = -1;
                std::array<Rational, 4> x = {p[0], p[1], p[2], p[3]};
                bool singular = f.eval(x) == 0;
                for (int i = 0; i < 4 && singular; ++i)
                    if (grad[i].eval(x) != 0) singular = false;
                if (singular) ++count;
            }
    return count;
}

std::vector<ExactQuarticPoint> involution_fixed_points_exact(const LambdaVector& lambda) {
    if (!is_degenerate(lambda)) return {};
    std::array<Rational, 5> roots;
    for (int i = 0; i < 5; ++i) {
        auto r = exact_sqrt(lambda[i]);
        if (!r) throw NoRationalSquareRoots("lambda entries must be rational squares");
        roots[i] = *r;
    }
    std::vector<ExactQuarticPoint> out;
    for (unsigned pattern = 0; pattern < 16; ++pattern) {
        auto signs = sign_pattern(pattern);
        std::array<Rational, 5> s = roots;
        for (int i = 0; i < 5; ++i)
            if (signs[i] < 0) s[i] = -s[i];
        Rational sum = s[0] + s[1] + s[2] + s[3] + s[4];
        if (sum != 0) continue;
        if (eval_surface(lambda, s) != 0)
            throw std::logic_error("vanishing sign pattern must lie on the quartic");
        std::array<Rational, 4> x = {s[0], s[1], s[2], s[3]};
        for (const auto& g : quartic_gradient(lambda, x))
            if (g != 0) throw std::logic_error("fixed point must be singular");
        out.push_back(ExactQuarticPoint{s});
    }
    return out;
}

std::vector<FloatQuarticPoint> involution_fixed_points_float(const LambdaVector& lambda,
                                                             double tol) {
    using C = std::complex<double>;
    double mx = 0;
    for (const auto& l : lambda.values) mx = std::max(mx, std::abs(to_double(l)));
    std::array<C, 5> roots;
    for (int i = 0; i < 5; ++i) roots[i] = std::sqrt(C(to_double(lambda[i]), 0.0));
    double scale = std::sqrt(mx);
    std::vector<FloatQuarticPoint> out;
    for (unsigned pattern = 0; pattern < 16; ++pattern) {
        auto signs = sign_pattern(pattern);
        std::array<C, 5> s = roots;
        for (int i = 0; i < 5; ++i)
            if (signs[i] < 0) s[i] = -s[i];
        C sum = s[0] + s[1] + s[2] + s[3] + s[4];
        if (std::abs(sum) / scale < tol) out.push_back(FloatQuarticPoint{s});
    }
    return out;
}

ExactQuarticPoint eleventh_node_coordinates_exact(const LambdaVector& lambda) {
    if (!is_degenerate(lambda)) throw NotDegenerate("no signed root sum vanishes");
    auto pts = involution_fixed_points_exact(lambda);
    if (pts.empty()) throw std::logic_error("degenerate square lambda must yield a fixed point");
    return pts.front();
}

std::optional<FloatQuarticPoint> eleventh_node_coordinates_float(const LambdaVector& lambda,
                                                                 double tol) {
    auto pts = involution_fixed_points_float(lambda, tol);
    if (pts.empty()) return std::nullopt;
    return pts.front();
}

std::array<std::complex<double>, 5> hw_involution(const LambdaVector& lambda,
                                                  const std::array<std::complex<double>, 5>& s) {
    std::array<std::complex<double>, 5> out;
    for (int i = 0; i < 5; ++i) out[i] = to_double(lambda[i]) / s[i];
    return out;
}

double surface_residual(const LambdaVector& lambda, const std::array<std::complex<double>, 5>& s) {
    using C = std::complex<double>;
    double mx = 0;
    for (const auto& x : s) mx = std::max(mx, std::abs(x));
    std::array<C, 5> n;
    for (int i = 0; i < 5; ++i) n[i] = s[i] / mx;
    C lin = n[0] + n[1] + n[2] + n[3] + n[4];
    C quart = 0;
    double lmax = 0;
    for (const auto& l : lambda.values) lmax = std::max(lmax, std::abs(to_double(l)));
    for (int i = 0; i < 5; ++i) {
        C t = to_double(lambda[i]) / lmax;
        for (int j = 0; j < 5; ++j)
            if (j != i) t *= n[j];
        quart += t;
    }
    return std::max(std::abs(lin), std::abs(quart));
}

double projective_distance(const std::array<std::complex<double>, 5>& a,
                           const std::array<std::complex<double>, 5>& b) {
    double na = 0, nb = 0;
    for (int i = 0; i < 5; ++i) {
        na = std::max(na, std::abs(a[i]));
        nb = std::max(nb, std::abs(b[i]));
    }
    double out = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            out = std::max(out, std::abs(a[i] * b[j] - a[j] * b[i]) / (na * nb));
    return out;
}

}  // namespace kummer::hessian
