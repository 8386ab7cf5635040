#include "kummer/latticekit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kummer::latticekit {

IMat identity_matrix(int n) {
    IMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int p = k ? static_cast<int>(b[0].size()) : 0;
    IMat out(n, std::vector<Int>(p, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (int c = 0; c < p; ++c) out[i][c] += a[i][j] * b[j][c];
        }
    return out;
}

Int determinant(IMat m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    // Bareiss
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int rank(IMat m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Int f = m[i][col], p = m[r][col];
            for (int c = col; c < cols; ++c) m[i][c] = m[i][c] * p - m[r][c] * f;
        }
        ++r;
    }
    return r;
}

std::vector<Int> SnfResult::invariant_factors() const {
    std::vector<Int> out;
    size_t n = d.empty() ? 0 : std::min(d.size(), d[0].size());
    for (size_t i = 0; i < n; ++i)
        if (d[i][i] != 0) out.push_back(d[i][i]);
    return out;
}

SnfResult smith_normal_form(IMat m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    IMat u = identity_matrix(rows), v = identity_matrix(cols);

    auto row_sub = [&](int dst, int src, const Int& f) {
        for (int c = 0; c < cols; ++c) m[dst][c] -= f * m[src][c];
        for (int c = 0; c < rows; ++c) u[dst][c] -= f * u[src][c];
    };
    auto col_sub = [&](int dst, int src, const Int& f) {
        for (int r = 0; r < rows; ++r) m[r][dst] -= f * m[r][src];
        for (int r = 0; r < cols; ++r) v[r][dst] -= f * v[r][src];
    };
    auto row_swap = [&](int a, int b) {
        std::swap(m[a], m[b]);
        std::swap(u[a], u[b]);
    };
    auto col_swap = [&](int a, int b) {
        for (int r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
        for (int r = 0; r < cols; ++r) std::swap(v[r][a], v[r][b]);
    };
    auto row_negate = [&](int a) {
        for (int c = 0; c < cols; ++c) m[a][c] = -m[a][c];
        for (int c = 0; c < rows; ++c) u[a][c] = -u[a][c];
    };

    int t = 0;
    int limit = std::min(rows, cols);
    while (t < limit) {
        // smallest nonzero entry of the trailing submatrix as pivot
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                row_sub(i, t, q);
                if (m[i][t] != 0) {
                    row_swap(i, t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                col_sub(j, t, q);
                if (m[t][j] != 0) {
                    col_swap(j, t);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: pivot must divide the whole trailing block
            for (int i = t + 1; i < rows && clean; ++i)
                for (int j = t + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        row_sub(t, i, Int(-1));  // add row i to row t
                        clean = false;
                    }
        }
        if (m[t][t] < 0) row_negate(t);
        ++t;
    }
    return SnfResult{std::move(u), std::move(m), std::move(v)};
}

IMat hermite_normal_form(IMat m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        // Euclid on the column entries below r
        while (true) {
            int pivot = -1;
            for (int i = r; i < rows; ++i)
                if (m[i][col] != 0 && (pivot < 0 || abs(m[i][col]) < abs(m[pivot][col]))) pivot = i;
            if (pivot < 0) break;
            std::swap(m[r], m[pivot]);
            bool reduced = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][col] == 0) continue;
                Int q = m[i][col] / m[r][col];
                for (int c = 0; c < cols; ++c) m[i][c] -= q * m[r][c];
                if (m[i][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (m[r][col] == 0) continue;
        if (m[r][col] < 0)
            for (int c = 0; c < cols; ++c) m[r][c] = -m[r][c];
        for (int i = 0; i < r; ++i) {
            Int q = m[i][col] / m[r][col];
            if (m[i][col] % m[r][col] < 0) q -= 1;  // floor
            if (q != 0)
                for (int c = 0; c < cols; ++c) m[i][c] -= q * m[r][c];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

IntegralLattice lattice_U2() {
    IntegralLattice l;
    l.gram = {{Int(0), Int(2)}, {Int(2), Int(0)}};
    return l;
}

IntegralLattice lattice_minus4() {
    IntegralLattice l;
    l.gram = {{Int(-4)}};
    return l;
}

IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.dim();
    IntegralLattice out;
    out.gram.assign(n, std::vector<Int>(n, 0));
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.dim(); ++i)
            for (int j = 0; j < p.dim(); ++j) out.gram[off + i][off + j] = p.gram[i][j];
        out.even = out.even && p.even;
        off += p.dim();
    }
    return out;
}

IntegralLattice lattice_T() { return direct_sum({lattice_U2(), lattice_U2(), lattice_minus4()}); }

namespace {

// plain rational Gaussian elimination helpers

RMat rat_identity(int n) {
    RMat m(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RMat rat_inverse(RMat a) {
    int n = static_cast<int>(a.size());
    RMat inv = rat_identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw DegenerateForm("matrix is singular");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        Rational p = a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] /= p;
            inv[col][c] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

RMat rat_mul(const RMat& a, const RMat& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int p = k ? static_cast<int>(b[0].size()) : 0;
    RMat out(n, std::vector<Rational>(p, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (int c = 0; c < p; ++c) out[i][c] += a[i][j] * b[j][c];
        }
    return out;
}

std::vector<Rational> rat_matvec(const RMat& a, const std::vector<Rational>& x) {
    std::vector<Rational> out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) out[i] += a[i][j] * x[j];
    return out;
}

RMat to_rational(const IMat& m) {
    RMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        out[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) out[i][j] = m[i][j];
    }
    return out;
}

Rational gram_value(const IMat& g, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational out = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (g[i][j] != 0 && y[j] != 0) out += x[i] * g[i][j] * y[j];
    }
    return out;
}

}  // namespace

DiscGroup::DiscGroup(IntegralLattice host, std::vector<Int> factors,
                     std::vector<std::vector<Rational>> lifts, IMat u, std::vector<int> positions)
    : host_(std::move(host)),
      factors_(std::move(factors)),
      lifts_(std::move(lifts)),
      u_(std::move(u)),
      positions_(std::move(positions)) {}

Int DiscGroup::order() const {
    Int out = 1;
    for (const auto& f : factors_) out *= f;
    return out;
}

std::vector<DiscElem> DiscGroup::elements() const {
    std::vector<DiscElem> out;
    DiscElem cur = zero();
    while (true) {
        out.push_back(cur);
        int i = static_cast<int>(factors_.size()) - 1;
        while (i >= 0) {
            cur[i] += 1;
            if (cur[i] < factors_[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

DiscElem DiscGroup::reduce(DiscElem e) const {
    for (size_t i = 0; i < factors_.size(); ++i) {
        e[i] %= factors_[i];
        if (e[i] < 0) e[i] += factors_[i];
    }
    return e;
}

DiscElem DiscGroup::add(const DiscElem& a, const DiscElem& b) const {
    DiscElem out(a);
    for (size_t i = 0; i < factors_.size(); ++i) out[i] += b[i];
    return reduce(std::move(out));
}

DiscElem DiscGroup::neg(const DiscElem& a) const {
    DiscElem out(a);
    for (auto& c : out) c = -c;
    return reduce(std::move(out));
}

DiscElem DiscGroup::scale(const Int& k, const DiscElem& a) const {
    DiscElem out(a);
    for (auto& c : out) c *= k;
    return reduce(std::move(out));
}

Int DiscGroup::element_order(const DiscElem& a) const {
    Int out = 1;
    for (size_t i = 0; i < factors_.size(); ++i) {
        Int g = gcd(factors_[i], a[i]);
        out = lcm(out, factors_[i] / g);
    }
    return out;
}

std::vector<Rational> DiscGroup::lift(const DiscElem& a) const {
    std::vector<Rational> out(host_.dim(), 0);
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (a[i] == 0) continue;
        for (int c = 0; c < host_.dim(); ++c) out[c] += Rational(a[i]) * lifts_[i][c];
    }
    return out;
}

Rational DiscGroup::q(const DiscElem& a) const {
    return mod2(gram_value(host_.gram, lift(a), lift(a)));
}

Rational DiscGroup::b(const DiscElem& a, const DiscElem& o) const {
    return mod1(gram_value(host_.gram, lift(a), lift(o)));
}

DiscElem DiscGroup::class_of(const std::vector<Rational>& dual_coords) const {
    // x in L* has Gx integral; under U G V = D its class coefficients are
    // (U G x) mod d_i at the nontrivial positions
    int n = host_.dim();
    std::vector<Rational> k(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (host_.gram[i][j] != 0 && dual_coords[j] != 0)
                k[i] += Rational(host_.gram[i][j]) * dual_coords[j];
    for (const auto& r : k)
        if (den(r) != 1) throw std::invalid_argument("vector is not in the dual lattice");
    DiscElem out(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
        Int c = 0;
        for (int j = 0; j < n; ++j) c += u_[positions_[i]][j] * num(k[j]);
        out[i] = c;
    }
    return reduce(std::move(out));
}

DiscGroup discriminant_group(const IntegralLattice& l) {
    if (determinant(l.gram) == 0) throw DegenerateForm("lattice form is degenerate");
    auto snf = smith_normal_form(l.gram);
    int n = l.dim();
    // generator lifts: columns of V D^{-1} for the nontrivial factors
    std::vector<Int> factors;
    std::vector<std::vector<Rational>> lifts;
    std::vector<int> positions;
    for (int i = 0; i < n; ++i) {
        if (snf.d[i][i] == 1) continue;
        factors.push_back(snf.d[i][i]);
        positions.push_back(i);
        std::vector<Rational> lift(n);
        for (int r = 0; r < n; ++r) lift[r] = Rational(snf.v[r][i], snf.d[i][i]);
        lifts.push_back(std::move(lift));
    }
    return DiscGroup(l, std::move(factors), std::move(lifts), std::move(snf.u),
                     std::move(positions));
}

std::vector<CyclicSubgroup> six_subgroups(const DiscGroup& d) {
    std::map<DiscElem, CyclicSubgroup> found;
    const Rational target(3, 4);
    for (const auto& g : d.elements()) {
        if (d.element_order(g) != 4) continue;
        if (d.q(g) != target) continue;
        DiscElem canon = canonical_generator(d, g);
        if (found.count(canon)) continue;
        CyclicSubgroup sub;
        sub.generator = canon;
        for (Int k = 0; k < 4; ++k) sub.elements.push_back(d.scale(k, canon));
        std::sort(sub.elements.begin(), sub.elements.end());
        found.emplace(canon, std::move(sub));
    }
    std::vector<CyclicSubgroup> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    return out;
}

DiscElem canonical_generator(const DiscGroup& d, const DiscElem& g) {
    Int n = d.element_order(g);
    DiscElem best = d.reduce(g);
    for (Int k = 2; k < n; ++k) {
        if (gcd(k, n) != 1) continue;
        DiscElem cand = d.scale(k, g);
        if (cand < best) best = cand;
    }
    return best;
}

std::optional<DualVector> find_dual_vector(const DiscGroup& d, const Rational& target_norm,
                                           const std::optional<DiscElem>& target_class, int bound) {
    if (bound <= 0) throw std::invalid_argument("bound must be positive");
    const auto& l = d.host();
    int n = l.dim();
    RMat ginv = rat_inverse(to_rational(l.gram));
    std::vector<Int> k(n, -bound);
    while (true) {
        // norm of G^{-1} k is k^T G^{-1} k
        Rational norm = 0;
        for (int i = 0; i < n; ++i) {
            if (k[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (k[j] != 0) norm += Rational(k[i]) * ginv[i][j] * Rational(k[j]);
        }
        if (norm == target_norm) {
            std::vector<Rational> coords(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (k[j] != 0) coords[i] += ginv[i][j] * Rational(k[j]);
            bool ok = true;
            if (target_class) ok = d.class_of(coords) == *target_class;
            if (ok) return DualVector{coords, norm, d.class_of(coords)};
        }
        // odometer: increment the last coordinate first so that earlier
        // coordinates change slowest (lexicographic order of witnesses)
        int i = n - 1;
        while (i >= 0) {
            if (k[i] < bound) {
                ++k[i];
                break;
            }
            k[i] = -bound;
            --i;
        }
        if (i < 0) break;
    }
    return std::nullopt;
}

std::optional<DualVector> find_dual_vector(const IntegralLattice& l, const Rational& target_norm,
                                           int bound) {
    return find_dual_vector(discriminant_group(l), target_norm, std::nullopt, bound);
}

RadicalQuotient radical_quotient(const IMat& gram) {
    int n = static_cast<int>(gram.size());
    // greedily pick generators whose Gram columns are independent
    std::vector<int> frame;
    {
        IMat cols;  // rows of the transposed chosen-column matrix
        for (int j = 0; j < n; ++j) {
            std::vector<Int> col(n);
            for (int i = 0; i < n; ++i) col[i] = gram[i][j];
            cols.push_back(col);
            if (rank(cols) == static_cast<int>(cols.size()))
                frame.push_back(j);
            else
                cols.pop_back();
        }
    }
    int r = static_cast<int>(frame.size());

    // Gram of the frame and coordinates of every generator in it
    RMat f(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) f[i][j] = gram[frame[i]][frame[j]];
    RMat finv = rat_inverse(f);
    RMat coords(n, std::vector<Rational>(r));  // row j: generator j in frame coords
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> w(r);
        for (int i = 0; i < r; ++i) w[i] = gram[frame[i]][j];
        auto x = rat_matvec(finv, w);
        for (int i = 0; i < r; ++i) coords[j][i] = x[i];
    }

    // clear denominators, Hermite-reduce, scale back
    Int d = 1;
    for (const auto& row : coords)
        for (const auto& x : row) d = lcm(d, den(x));
    IMat scaled(n, std::vector<Int>(r));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < r; ++i) {
            Rational v = coords[j][i] * Rational(d);
            scaled[j][i] = num(v);
        }
    IMat hnf = hermite_normal_form(scaled);
    if (static_cast<int>(hnf.size()) != r)
        throw std::logic_error("generator lattice rank does not match the frame");
    RMat basis(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) basis[i][j] = Rational(hnf[i][j], d);

    // Gram on the basis: B F B^T, integral by construction
    RMat bf = rat_mul(basis, f);
    RMat bt(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) bt[i][j] = basis[j][i];
    RMat gq = rat_mul(bf, bt);
    IntegralLattice lat;
    lat.gram.assign(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (den(gq[i][j]) != 1) throw std::logic_error("basis Gram must be integral");
            lat.gram[i][j] = num(gq[i][j]);
        }
    for (int i = 0; i < r; ++i)
        if (lat.gram[i][i] % 2 != 0) lat.even = false;

    // generator coordinates in the basis: solve y B = x  =>  y = x B^{-1}
    RMat binv = rat_inverse(basis);
    RadicalQuotient out;
    out.lattice = std::move(lat);
    out.projection.assign(n, std::vector<Int>(r));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < r; ++i) {
            Rational y = 0;
            for (int c = 0; c < r; ++c) y += coords[j][c] * binv[c][i];
            if (den(y) != 1) throw std::logic_error("generator must be integral in the basis");
            out.projection[j][i] = num(y);
        }
    // rational classes x (generator coords) map to basis coords via
    // B^{-T} F^{-1} Gram[frame,:] x
    RMat gframe(r, std::vector<Rational>(n));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) gframe[i][j] = gram[frame[i]][j];
    RMat bti(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) bti[i][j] = binv[j][i];
    out.dual_projection = rat_mul(rat_mul(bti, finv), gframe);
    out.basis = std::move(basis);
    out.frame = std::move(frame);
    return out;
}

bool match_discriminant_forms(const DiscGroup& a, const DiscGroup& b) {
    auto ea = a.elements();
    auto eb = b.elements();
    if (ea.size() != eb.size()) return false;
    std::multiset<std::pair<Int, Rational>> ma, mb;
    for (const auto& x : ea) ma.emplace(a.element_order(x), a.q(x));
    for (const auto& x : eb) mb.emplace(b.element_order(x), mod2(-b.q(x)));
    return ma == mb;
}

const NsContext& ns_context() {
    static const NsContext ctx = [] {
        const auto& g32 = config16::gram();
        IMat gram(config16::kGenerators, std::vector<Int>(config16::kGenerators));
        for (int i = 0; i < config16::kGenerators; ++i)
            for (int j = 0; j < config16::kGenerators; ++j) gram[i][j] = g32[i][j];
        auto quotient = radical_quotient(gram);
        auto disc = discriminant_group(quotient.lattice);
        return NsContext{std::move(quotient), std::move(disc)};
    }();
    return ctx;
}

std::vector<Rational> NsContext::project(const config16::RatVec& cls) const {
    std::vector<Rational> x(cls.begin(), cls.end());
    return rat_matvec(quotient.dual_projection, x);
}

DiscElem patching_class(const f2geom::WeberHexad& w) {
    const auto& ctx = ns_context();
    return ctx.disc.class_of(ctx.project(config16::eleventh_node_class(w)));
}

}  // namespace kummer::latticekit
