#include "kummer/config16.hpp"

#include <algorithm>
#include <stdexcept>

namespace kummer::config16 {

using f2geom::TetradKind;
using f2geom::Tetrad;
using f2geom::ThetaChar;
using f2geom::TwoTorsion;
using f2geom::WeberHexad;

int node_index(TwoTorsion a) { return a.index(); }
int trope_index(ThetaChar b) { return 16 + b.index(); }

std::string generator_name(int i) {
    if (i < 16) return "N_" + TwoTorsion::all()[i].str();
    return "T_" + ThetaChar::all()[i - 16].str();
}

const std::array<std::array<int, kGenerators>, kGenerators>& gram() {
    static const auto g = [] {
        std::array<std::array<int, kGenerators>, kGenerators> m{};
        for (int i = 0; i < 16; ++i) m[i][i] = -2;
        for (int i = 16; i < 32; ++i) m[i][i] = -2;
        for (const auto& a : TwoTorsion::all())
            for (const auto& b : ThetaChar::all())
                if (b.incident(a)) {
                    m[node_index(a)][trope_index(b)] = 1;
                    m[trope_index(b)][node_index(a)] = 1;
                }
        return m;
    }();
    return g;
}

long long pair(const IntVec& x, const IntVec& y) {
    const auto& g = gram();
    long long out = 0;
    for (int i = 0; i < kGenerators; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < kGenerators; ++j)
            if (g[i][j] != 0) out += x[i] * g[i][j] * y[j];
    }
    return out;
}

Rational pair(const RatVec& x, const RatVec& y) {
    const auto& g = gram();
    Rational out = 0;
    for (int i = 0; i < kGenerators; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < kGenerators; ++j)
            if (g[i][j] != 0 && y[j] != 0) out += x[i] * g[i][j] * y[j];
    }
    return out;
}

Rational pair(const RatVec& x, const IntVec& y) { return pair(x, to_rational(y)); }

RatVec to_rational(const IntVec& x) {
    RatVec out;
    for (int i = 0; i < kGenerators; ++i) out[i] = x[i];
    return out;
}

bool in_radical(const IntVec& x) {
    const auto& g = gram();
    for (int i = 0; i < kGenerators; ++i) {
        long long s = 0;
        for (int j = 0; j < kGenerators; ++j) s += g[i][j] * x[j];
        if (s != 0) return false;
    }
    return true;
}

bool in_radical(const RatVec& x) {
    const auto& g = gram();
    for (int i = 0; i < kGenerators; ++i) {
        Rational s = 0;
        for (int j = 0; j < kGenerators; ++j)
            if (g[i][j] != 0) s += g[i][j] * x[j];
        if (s != 0) return false;
    }
    return true;
}

bool dual_member(const RatVec& x) {
    const auto& g = gram();
    for (int i = 0; i < kGenerators; ++i) {
        Rational s = 0;
        for (int j = 0; j < kGenerators; ++j)
            if (g[i][j] != 0) s += g[i][j] * x[j];
        if (den(s) != 1) return false;
    }
    return true;
}

IntVec class_H() {
    IntVec h{};
    h[trope_index(ThetaChar::singleton(1))] = 2;
    h[node_index(TwoTorsion::zero())] = 1;
    for (int j = 2; j <= 6; ++j) h[node_index(TwoTorsion::duad(1, j))] = 1;
    return h;
}

std::vector<std::pair<ThetaChar, bool>> check_H_relations() {
    IntVec h = class_H();
    std::vector<std::pair<ThetaChar, bool>> out;
    for (const auto& b : ThetaChar::all()) {
        IntVec rel{};
        rel[trope_index(b)] = 2;
        for (const auto& a : TwoTorsion::all())
            if (b.incident(a)) rel[node_index(a)] += 1;
        IntVec diff;
        for (int i = 0; i < kGenerators; ++i) diff[i] = h[i] - rel[i];
        out.emplace_back(b, in_radical(diff));
    }
    return out;
}

int lattice_rank() {
    // fraction-free elimination over the integers
    std::array<std::array<Int, kGenerators>, kGenerators> m;
    for (int i = 0; i < kGenerators; ++i)
        for (int j = 0; j < kGenerators; ++j) m[i][j] = gram()[i][j];
    int rank = 0;
    for (int col = 0; col < kGenerators && rank < kGenerators; ++col) {
        int pivot = -1;
        for (int r = rank; r < kGenerators; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < kGenerators; ++r) {
            if (m[r][col] == 0) continue;
            Int f = m[r][col], p = m[rank][col];
            for (int c = col; c < kGenerators; ++c) m[r][c] = m[r][c] * p - m[rank][c] * f;
        }
        ++rank;
    }
    return rank;
}

IntVec hessian_class(const WeberHexad& w) {
    IntVec h = class_H();
    IntVec out;
    for (int i = 0; i < kGenerators; ++i) out[i] = 2 * h[i];
    for (const auto& a : w.elements) out[node_index(a)] -= 1;
    return out;
}

namespace {

const WeberHexad& canonical_hexad() {
    static const WeberHexad w = [] {
        std::array<TwoTorsion, 6> elems = {TwoTorsion::duad(1, 2), TwoTorsion::duad(2, 3),
                                           TwoTorsion::duad(1, 3), TwoTorsion::duad(1, 4),
                                           TwoTorsion::duad(2, 5), TwoTorsion::duad(3, 6)};
        auto h = f2geom::is_weber_hexad(elems);
        if (!h) throw std::logic_error("canonical hexad must validate");
        return *h;
    }();
    return w;
}

IntVec divisor_from(std::initializer_list<const char*> tropes,
                    std::initializer_list<const char*> nodes) {
    IntVec out{};
    for (auto* t : tropes) {
        auto b = ThetaChar::parse(t);
        if (!b) throw std::logic_error("bad trope literal");
        out[trope_index(*b)] += 1;
    }
    for (auto* n : nodes) {
        auto a = TwoTorsion::parse(n);
        if (!a) throw std::logic_error("bad node literal");
        out[node_index(*a)] += 1;
    }
    return out;
}

}  // namespace

SDivisorReport check_S_divisors() {
    SDivisorReport rep;
    rep.hexad = canonical_hexad();
    rep.divisors = {
        divisor_from({"2", "3", "124", "134"}, {"0", "24", "26", "34", "35", "56"}),
        divisor_from({"123", "145", "134", "125"}, {"15", "26", "34", "45", "46", "56"}),
        divisor_from({"1", "3", "125", "146"}, {"0", "15", "16", "34", "35", "46"}),
        divisor_from({"123", "124", "146", "136"}, {"16", "24", "35", "45", "46", "56"}),
        divisor_from({"1", "2", "136", "145"}, {"0", "15", "16", "24", "26", "45"}),
    };

    IntVec l = hessian_class(rep.hexad);
    for (int i = 0; i < 5; ++i) {
        IntVec diff;
        for (int j = 0; j < kGenerators; ++j) diff[j] = rep.divisors[i][j] - l[j];
        rep.equals_L[i] = in_radical(diff);
    }

    IntVec mult{};
    for (const auto& d : rep.divisors)
        for (int j = 0; j < kGenerators; ++j) mult[j] += d[j];
    rep.trope_multiplicities_two = true;
    rep.node_multiplicities_three = true;
    for (int j = 0; j < 16; ++j) {
        if (mult[j] != 0 && mult[j] != 3) rep.node_multiplicities_three = false;
        if (mult[j] == 3) rep.covered_nodes.push_back(TwoTorsion::all()[j]);
    }
    for (int j = 16; j < 32; ++j)
        if (mult[j] != 0 && mult[j] != 2) rep.trope_multiplicities_two = false;
    return rep;
}

std::vector<TwoTorsion> node_coverage(const WeberHexad& w) {
    std::vector<TwoTorsion> out;
    for (const auto& a : TwoTorsion::all())
        if (!w.contains(a)) out.push_back(a);
    return out;
}

RatVec eleventh_node_class(const WeberHexad& w) {
    IntVec h = class_H();
    RatVec out;
    for (int i = 0; i < kGenerators; ++i) out[i] = Rational(3 * h[i], 4);
    for (const auto& a : w.elements) out[node_index(a)] -= Rational(1, 2);
    return out;
}

RatVec switch_obstruction(const Tetrad& r) {
    if (r.kind != TetradKind::Rosenhain) throw f2geom::WrongKind("tetrad must be Rosenhain");
    IntVec h = class_H();
    RatVec out;
    for (int i = 0; i < kGenerators; ++i) out[i] = Rational(h[i], 4);
    for (const auto& a : r.elements) out[node_index(a)] += Rational(1, 2);
    return out;
}

IntVec GeneratorMap::operator()(const IntVec& x) const {
    IntVec out{};
    for (int i = 0; i < kGenerators; ++i) out[image[i]] += x[i];
    return out;
}

RatVec GeneratorMap::operator()(const RatVec& x) const {
    RatVec out;
    for (int i = 0; i < kGenerators; ++i) out[image[i]] += x[i];
    return out;
}

GeneratorMap GeneratorMap::compose(const GeneratorMap& inner) const {
    GeneratorMap out;
    for (int i = 0; i < kGenerators; ++i) out.image[i] = image[inner.image[i]];
    return out;
}

bool GeneratorMap::preserves_gram() const {
    const auto& g = gram();
    for (int i = 0; i < kGenerators; ++i)
        for (int j = 0; j < kGenerators; ++j)
            if (g[image[i]][image[j]] != g[i][j]) return false;
    return true;
}

bool GeneratorMap::is_identity() const {
    for (int i = 0; i < kGenerators; ++i)
        if (image[i] != i) return false;
    return true;
}

GeneratorMap translation_action(TwoTorsion a) {
    GeneratorMap out;
    for (const auto& x : TwoTorsion::all()) out.image[node_index(x)] = node_index(x + a);
    for (const auto& b : ThetaChar::all()) out.image[trope_index(b)] = trope_index(b + a);
    return out;
}

GeneratorMap switch_action(ThetaChar b) {
    GeneratorMap out;
    for (const auto& x : TwoTorsion::all()) {
        ThetaChar img = ThetaChar::from_mask(x.mask() ^ b.mask());
        out.image[node_index(x)] = trope_index(img);
    }
    for (const auto& y : ThetaChar::all()) {
        TwoTorsion img = y - b;
        out.image[trope_index(y)] = node_index(img);
    }
    return out;
}

}  // namespace kummer::config16
