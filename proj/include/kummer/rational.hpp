// Exact arithmetic aliases and helpers shared by all modules.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kummer {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Reduce into [0, m) for a positive rational modulus m.
inline Rational mod_positive(Rational x, const Rational& m) {
    // floor division of rationals
    Int q = num(x) * den(m), d = den(x) * num(m);
    Int fl = q / d;
    if (fl * d > q) --fl;  // round toward -inf
    x -= Rational(fl) * m;
    if (x < 0) x += m;
    if (x >= m) x -= m;
    return x;
}

// q-values of discriminant forms live in Q/2Z, pairings in Q/Z.
inline Rational mod2(const Rational& x) { return mod_positive(x, 2); }
inline Rational mod1(const Rational& x) { return mod_positive(x, 1); }

inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// Nonnegative rational square root, when one exists.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    auto p = exact_sqrt(num(r));
    auto q = exact_sqrt(den(r));
    if (!p || !q) return std::nullopt;
    return Rational(*p, *q);
}

// "p/q" with the "/q" omitted for integers; the inverse of parse_rational.
inline std::string format_rational(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

inline std::optional<Rational> parse_rational(std::string_view s) {
    auto parse_int = [](std::string_view t) -> std::optional<Int> {
        if (t.empty()) return std::nullopt;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return std::nullopt;
        for (size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') return std::nullopt;
        return Int(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto p = parse_int(s);
        if (!p) return std::nullopt;
        return Rational(*p);
    }
    auto p = parse_int(s.substr(0, slash));
    auto q = parse_int(s.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return Rational(*p, *q);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace kummer
