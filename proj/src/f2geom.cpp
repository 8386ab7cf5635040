#include "kummer/f2geom.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace kummer::f2geom {

namespace {

constexpr unsigned kFull = 0x3f;

int popcount6(unsigned m) { return std::popcount(m & kFull); }

// index tables keyed by canonical mask
struct Tables {
    std::array<TwoTorsion, 16> two;
    std::array<int, 64> two_index;
    std::array<ThetaChar, 16> theta;
    std::array<int, 64> theta_index;

    Tables() {
        two_index.fill(-1);
        theta_index.fill(-1);
        int n = 0;
        two[n] = TwoTorsion::zero();
        two_index[0] = n++;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                two[n] = TwoTorsion::duad(i, j);
                two_index[two[n].mask()] = n;
                ++n;
            }
        n = 0;
        for (int i = 1; i <= 6; ++i) {
            theta[n] = ThetaChar::singleton(i);
            theta_index[theta[n].mask()] = n;
            ++n;
        }
        for (int j = 2; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k) {
                unsigned m = 1u | (1u << (j - 1)) | (1u << (k - 1));
                theta[n] = ThetaChar::from_mask(m);
                theta_index[m] = n;
                ++n;
            }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

std::vector<int> letters_of(unsigned mask) {
    std::vector<int> out;
    for (int i = 1; i <= 6; ++i)
        if (mask & (1u << (i - 1))) out.push_back(i);
    return out;
}

}  // namespace

TwoTorsion TwoTorsion::from_mask(unsigned mask) {
    mask &= kFull;
    if (popcount6(mask) % 2 != 0) throw std::invalid_argument("odd subset is not 2-torsion");
    if (popcount6(mask) > 2) mask ^= kFull;
    TwoTorsion t;
    t.mask_ = static_cast<std::uint8_t>(mask);
    return t;
}

TwoTorsion TwoTorsion::duad(int i, int j) {
    if (i < 1 || i > 6 || j < 1 || j > 6 || i == j) throw std::invalid_argument("bad duad");
    return from_mask((1u << (i - 1)) | (1u << (j - 1)));
}

const std::array<TwoTorsion, 16>& TwoTorsion::all() { return tables().two; }

int TwoTorsion::index() const { return tables().two_index[mask_]; }

int TwoTorsion::pairing(TwoTorsion o) const { return popcount6(mask_ & o.mask_) & 1; }

std::string TwoTorsion::str() const {
    if (mask_ == 0) return "0";
    auto ls = letters_of(mask_);
    return std::to_string(ls[0]) + std::to_string(ls[1]);
}

std::optional<TwoTorsion> TwoTorsion::parse(std::string_view s) {
    if (s == "0") return zero();
    if (s.size() != 2 || s[0] < '1' || s[0] > '6' || s[1] < '1' || s[1] > '6' || s[0] >= s[1])
        return std::nullopt;
    return duad(s[0] - '0', s[1] - '0');
}

ThetaChar ThetaChar::from_mask(unsigned mask) {
    mask &= kFull;
    if (popcount6(mask) % 2 != 1) throw std::invalid_argument("even subset is not a theta characteristic");
    if (popcount6(mask) == 5) mask ^= kFull;
    if (popcount6(mask) == 3 && !(mask & 1u)) mask ^= kFull;
    ThetaChar t;
    t.mask_ = static_cast<std::uint8_t>(mask);
    return t;
}

ThetaChar ThetaChar::singleton(int i) {
    if (i < 1 || i > 6) throw std::invalid_argument("bad letter");
    return from_mask(1u << (i - 1));
}

const std::array<ThetaChar, 16>& ThetaChar::all() { return tables().theta; }

int ThetaChar::index() const { return tables().theta_index[mask_]; }

bool ThetaChar::incident(TwoTorsion alpha) const {
    int pc = popcount6(mask_ ^ alpha.mask());
    return pc == 1 || pc == 5;
}

std::string ThetaChar::str() const {
    std::string out;
    for (int l : letters_of(mask_)) out += std::to_string(l);
    return out;
}

std::optional<ThetaChar> ThetaChar::parse(std::string_view s) {
    if (s.size() != 1 && s.size() != 3) return std::nullopt;
    unsigned m = 0;
    char prev = '0';
    for (char c : s) {
        if (c < '1' || c > '6' || c <= prev) return std::nullopt;
        m |= 1u << (c - '1');
        prev = c;
    }
    if (s.size() == 3 && !(m & 1u)) return std::nullopt;  // canonical 3-sets contain 1
    return from_mask(m);
}

bool Tetrad::contains(TwoTorsion a) const {
    return std::find(elements.begin(), elements.end(), a) != elements.end();
}

std::string Tetrad::str() const {
    std::string out;
    for (const auto& e : elements) {
        if (!out.empty()) out += ",";
        out += e.str();
    }
    return out;
}

std::optional<Tetrad> make_tetrad(std::array<TwoTorsion, 4> elements) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) return std::nullopt;
    // a 4-set is an affine plane iff its elements sum to zero
    unsigned s = 0;
    for (const auto& e : elements) s ^= e.mask();
    if (TwoTorsion::from_mask(s) != TwoTorsion::zero()) return std::nullopt;
    TwoTorsion d1 = elements[0] + elements[1];
    TwoTorsion d2 = elements[0] + elements[2];
    Tetrad t;
    t.elements = elements;
    t.kind = d1.pairing(d2) == 0 ? TetradKind::Goepel : TetradKind::Rosenhain;
    return t;
}

std::vector<Tetrad> enumerate_tetrads(TetradKind kind) {
    // linear 2-dimensional subspaces first, then their cosets
    const auto& all = TwoTorsion::all();
    std::set<std::array<TwoTorsion, 4>> seen;
    std::vector<Tetrad> out;
    for (int i = 1; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) {
            TwoTorsion d1 = all[i], d2 = all[j], d3 = d1 + d2;
            if (d3 == d1 || d3 == d2 || d3.is_zero()) continue;
            for (const auto& rep : all) {
                std::array<TwoTorsion, 4> coset = {rep, rep + d1, rep + d2, rep + d3};
                std::sort(coset.begin(), coset.end());
                if (!seen.insert(coset).second) continue;
                auto t = make_tetrad(coset);
                if (t && t->kind == kind) out.push_back(*t);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool WeberHexad::contains(TwoTorsion a) const {
    return std::find(elements.begin(), elements.end(), a) != elements.end();
}

std::string WeberHexad::str() const {
    std::string out;
    for (const auto& e : elements) {
        if (!out.empty()) out += ",";
        out += e.str();
    }
    return out;
}

namespace {

// Matches a sorted zero-sum 6-set against the two canonical forms.
std::optional<WeberHexad> classify_hexad(const std::array<TwoTorsion, 6>& sorted) {
    int deg[7] = {};
    bool adj[7][7] = {};
    bool has_zero = sorted[0].is_zero();
    for (const auto& e : sorted) {
        if (e.is_zero()) continue;
        auto ls = letters_of(e.mask());
        ++deg[ls[0]];
        ++deg[ls[1]];
        adj[ls[0]][ls[1]] = adj[ls[1]][ls[0]] = true;
    }
    WeberHexad w;
    w.elements = sorted;
    if (has_zero) {
        // five duads must trace a pentagon on five of the six letters
        int missing = 0;
        for (int l = 1; l <= 6; ++l) {
            if (deg[l] == 0) {
                if (missing) return std::nullopt;
                missing = l;
            } else if (deg[l] != 2) {
                return std::nullopt;
            }
        }
        if (!missing) return std::nullopt;
        int start = 1;
        while (deg[start] == 0) ++start;
        std::array<int, 6> cyc = {};
        cyc[0] = start;
        // walk from the smallest letter toward its smaller neighbour
        int prev = 0, cur = start;
        for (int step = 1; step < 5; ++step) {
            int next = 0;
            for (int l = 1; l <= 6 && next == 0; ++l)
                if (adj[cur][l] && l != prev) next = l;
            if (next == 0) return std::nullopt;
            prev = cur;
            cur = next;
            cyc[step] = cur;
        }
        if (!adj[cur][start]) return std::nullopt;  // close the pentagon
        cyc[5] = missing;
        w.form = HexadForm::Type1;
        w.letters = cyc;
        return w;
    }
    // triangle letters have degree 3, matched letters degree 1
    std::array<int, 3> tri{}, out{};
    int nt = 0, no = 0;
    for (int l = 1; l <= 6; ++l) {
        if (deg[l] == 3) {
            if (nt == 3) return std::nullopt;
            tri[nt++] = l;
        } else if (deg[l] == 1) {
            if (no == 3) return std::nullopt;
            out[no++] = l;
        } else {
            return std::nullopt;
        }
    }
    if (nt != 3 || no != 3) return std::nullopt;
    if (!adj[tri[0]][tri[1]] || !adj[tri[1]][tri[2]] || !adj[tri[0]][tri[2]]) return std::nullopt;
    std::array<int, 3> match{};
    for (int a = 0; a < 3; ++a) {
        int cnt = 0;
        for (int b = 0; b < 3; ++b)
            if (adj[tri[a]][out[b]]) {
                match[a] = out[b];
                ++cnt;
            }
        if (cnt != 1) return std::nullopt;
    }
    if (match[0] == match[1] || match[1] == match[2] || match[0] == match[2]) return std::nullopt;
    w.form = HexadForm::Type2;
    w.letters = {tri[0], tri[1], tri[2], match[0], match[1], match[2]};
    return w;
}

}  // namespace

std::vector<WeberHexad> enumerate_weber_hexads() {
    auto goepels = enumerate_tetrads(TetradKind::Goepel);
    auto rosenhains = enumerate_tetrads(TetradKind::Rosenhain);
    std::map<std::array<TwoTorsion, 6>, WeberHexad> found;
    for (const auto& g : goepels)
        for (const auto& r : rosenhains) {
            int common = 0;
            for (const auto& e : g.elements) common += r.contains(e) ? 1 : 0;
            if (common != 1) continue;
            std::array<TwoTorsion, 6> elems;
            int n = 0;
            for (const auto& e : g.elements)
                if (!r.contains(e)) elems[n++] = e;
            for (const auto& e : r.elements)
                if (!g.contains(e)) elems[n++] = e;
            std::sort(elems.begin(), elems.end());
            if (found.count(elems)) continue;
            auto w = classify_hexad(elems);
            if (!w) throw std::logic_error("G⊖R hexad does not match a canonical form");
            found.emplace(elems, *w);
        }
    std::vector<WeberHexad> out;
    out.reserve(found.size());
    for (auto& [k, v] : found) out.push_back(v);
    return out;
}

std::optional<WeberHexad> is_weber_hexad(const std::array<TwoTorsion, 6>& s) {
    auto sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DuplicateElements("hexad elements must be distinct");
    unsigned total = 0;
    for (const auto& e : sorted) total ^= e.mask();
    if (TwoTorsion::from_mask(total) != TwoTorsion::zero()) return std::nullopt;
    auto contains = [&](TwoTorsion a) {
        return std::find(sorted.begin(), sorted.end(), a) != sorted.end();
    };
    // split off the 3-subsets containing sorted[0]; the common partial sum x
    // completes both halves to affine planes
    for (int j = 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
            TwoTorsion x = sorted[0] + sorted[j] + sorted[k];
            if (contains(x)) continue;
            std::array<TwoTorsion, 4> ia = {x, sorted[0], sorted[j], sorted[k]};
            std::array<TwoTorsion, 4> ja = {x, TwoTorsion(), TwoTorsion(), TwoTorsion()};
            int n = 1;
            for (int m = 1; m < 6; ++m)
                if (m != j && m != k) ja[n++] = sorted[m];
            auto I = make_tetrad(ia);
            auto J = make_tetrad(ja);
            if (!I || !J) continue;
            if (I->kind == J->kind) continue;
            return classify_hexad(sorted);
        }
    return std::nullopt;
}

AffineMap AffineMap::identity() {
    AffineMap g;
    for (int i = 0; i < 6; ++i) g.perm[i] = static_cast<std::uint8_t>(i);
    g.translation = TwoTorsion::zero();
    return g;
}

TwoTorsion AffineMap::operator()(TwoTorsion a) const {
    unsigned m = 0;
    for (int i = 0; i < 6; ++i)
        if (a.mask() & (1u << i)) m |= 1u << perm[i];
    return TwoTorsion::from_mask(m) + translation;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
    AffineMap g;
    for (int i = 0; i < 6; ++i) g.perm[i] = perm[inner.perm[i]];
    // relabel inner's translation before adding ours
    unsigned m = 0;
    for (int i = 0; i < 6; ++i)
        if (inner.translation.mask() & (1u << i)) m |= 1u << perm[i];
    g.translation = TwoTorsion::from_mask(m) + translation;
    return g;
}

AffineMap AffineMap::inverse() const {
    AffineMap g;
    for (int i = 0; i < 6; ++i) g.perm[perm[i]] = static_cast<std::uint8_t>(i);
    unsigned m = 0;
    for (int i = 0; i < 6; ++i)
        if (translation.mask() & (1u << i)) m |= 1u << g.perm[i];
    g.translation = TwoTorsion::from_mask(m);
    return g;
}

const std::vector<AffineMap>& affine_group() {
    static const std::vector<AffineMap> group = [] {
        std::vector<AffineMap> out;
        out.reserve(11520);
        std::array<std::uint8_t, 6> p = {0, 1, 2, 3, 4, 5};
        do {
            for (const auto& t : TwoTorsion::all()) {
                AffineMap g;
                g.perm = p;
                g.translation = t;
                out.push_back(g);
            }
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return group;
}

WeberHexad apply(const AffineMap& g, const WeberHexad& w) {
    std::array<TwoTorsion, 6> elems;
    for (int i = 0; i < 6; ++i) elems[i] = g(w.elements[i]);
    std::sort(elems.begin(), elems.end());
    auto out = classify_hexad(elems);
    if (!out) throw std::logic_error("affine image of a Weber hexad must be a Weber hexad");
    return *out;
}

std::vector<AffineMap> stabilizer(const WeberHexad& w) {
    std::vector<AffineMap> out;
    for (const auto& g : affine_group()) {
        std::array<TwoTorsion, 6> elems;
        for (int i = 0; i < 6; ++i) elems[i] = g(w.elements[i]);
        std::sort(elems.begin(), elems.end());
        if (elems == w.elements) out.push_back(g);
    }
    return out;
}

std::string syntheme_str(const Syntheme& s) {
    std::string out;
    for (const auto& d : s) out += "(" + d.str() + ")";
    return out;
}

std::string Total::str() const {
    std::string out;
    for (const auto& s : synthemes) {
        if (!out.empty()) out += " ";
        out += syntheme_str(s);
    }
    return out;
}

Total hexad_to_total(const WeberHexad& w) {
    TwoTorsion shift = w.elements[0].is_zero() ? TwoTorsion::zero() : w.elements[0];
    std::array<TwoTorsion, 6> elems;
    for (int i = 0; i < 6; ++i) elems[i] = w.elements[i] + shift;
    std::sort(elems.begin(), elems.end());
    auto t1 = classify_hexad(elems);
    if (!t1 || t1->form != HexadForm::Type1)
        throw std::logic_error("translate of a Weber hexad by a member must be Type1");
    const auto& cyc = t1->letters;  // (a,b,c,d,e,f)
    Total total;
    for (int i = 0; i < 5; ++i) {
        Syntheme s = {
            TwoTorsion::duad(cyc[i], cyc[(i + 1) % 5]),
            TwoTorsion::duad(cyc[(i + 2) % 5], cyc[(i + 4) % 5]),
            TwoTorsion::duad(cyc[(i + 3) % 5], cyc[5]),
        };
        std::sort(s.begin(), s.end());
        total.synthemes[i] = s;
    }
    std::sort(total.synthemes.begin(), total.synthemes.end());
    return total;
}

std::vector<Total> enumerate_totals() {
    // the 15 synthemes
    std::vector<Syntheme> synthemes;
    for (int j = 2; j <= 6; ++j) {  // partner of letter 1
        std::vector<int> rest;
        for (int l = 2; l <= 6; ++l)
            if (l != j) rest.push_back(l);
        // pair rest[0] with each of the remaining three
        for (int k = 1; k < 4; ++k) {
            std::vector<int> left;
            for (int m = 1; m < 4; ++m)
                if (m != k) left.push_back(rest[m]);
            Syntheme s = {TwoTorsion::duad(1, j), TwoTorsion::duad(rest[0], rest[k]),
                          TwoTorsion::duad(left[0], left[1])};
            std::sort(s.begin(), s.end());
            synthemes.push_back(s);
        }
    }
    std::sort(synthemes.begin(), synthemes.end());
    std::vector<Total> out;
    const int n = static_cast<int>(synthemes.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    for (int e = d + 1; e < n; ++e) {
                        unsigned covered = 0;
                        bool clash = false;
                        for (int idx : {a, b, c, d, e})
                            for (const auto& duad : synthemes[idx]) {
                                unsigned bit = 1u << duad.index();
                                if (covered & bit) clash = true;
                                covered |= bit;
                            }
                        if (clash) continue;
                        Total t;
                        t.synthemes = {synthemes[a], synthemes[b], synthemes[c], synthemes[d],
                                       synthemes[e]};
                        out.push_back(t);
                    }
    std::sort(out.begin(), out.end());
    return out;
}

Tetrad rosenhain_perp(const Tetrad& r) {
    if (!r.is_linear()) throw NotLinear("tetrad must contain 0");
    if (r.kind != TetradKind::Rosenhain) throw WrongKind("tetrad must be Rosenhain");
    TwoTorsion d1 = r.elements[1], d2 = r.elements[2];
    std::array<TwoTorsion, 4> out;
    int n = 0;
    for (const auto& v : TwoTorsion::all())
        if (v.pairing(d1) == 0 && v.pairing(d2) == 0) {
            if (n == 4) throw std::logic_error("perp of a 2-dimensional space has 4 elements");
            out[n++] = v;
        }
    auto t = make_tetrad(out);
    if (!t || t->kind != TetradKind::Rosenhain)
        throw std::logic_error("perp of a Rosenhain plane is Rosenhain");
    return *t;
}

std::vector<std::vector<WeberHexad>> dual_six_classes() {
    auto hexads = enumerate_weber_hexads();
    std::map<std::array<TwoTorsion, 6>, int> id;
    for (int i = 0; i < static_cast<int>(hexads.size()); ++i) id[hexads[i].elements] = i;

    std::vector<int> parent(hexads.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    auto lookup = [&](std::array<TwoTorsion, 6> elems) {
        std::sort(elems.begin(), elems.end());
        auto it = id.find(elems);
        if (it == id.end()) throw std::logic_error("dual-six move left the set of Weber hexads");
        return it->second;
    };

    for (int i = 0; i < static_cast<int>(hexads.size()); ++i) {
        const auto& w = hexads[i];
        for (const auto& a : TwoTorsion::all()) {
            std::array<TwoTorsion, 6> elems;
            for (int k = 0; k < 6; ++k) elems[k] = w.elements[k] + a;
            unite(i, lookup(elems));
        }
        if (w.contains(TwoTorsion::zero())) continue;
        // decompositions G ⊖ R with G ∩ R = {0}
        for (int j1 = 0; j1 < 6; ++j1)
            for (int j2 = j1 + 1; j2 < 6; ++j2)
                for (int j3 = j2 + 1; j3 < 6; ++j3) {
                    TwoTorsion x = w.elements[j1] + w.elements[j2] + w.elements[j3];
                    if (!x.is_zero()) continue;
                    std::array<TwoTorsion, 4> ia = {TwoTorsion::zero(), w.elements[j1],
                                                    w.elements[j2], w.elements[j3]};
                    std::array<TwoTorsion, 4> ja = {TwoTorsion::zero(), TwoTorsion(), TwoTorsion(),
                                                    TwoTorsion()};
                    int n = 1;
                    for (int m = 0; m < 6; ++m)
                        if (m != j1 && m != j2 && m != j3) ja[n++] = w.elements[m];
                    auto I = make_tetrad(ia);
                    auto J = make_tetrad(ja);
                    if (!I || !J || I->kind == J->kind) continue;
                    const Tetrad& g = I->kind == TetradKind::Goepel ? *I : *J;
                    const Tetrad& r = I->kind == TetradKind::Goepel ? *J : *I;
                    Tetrad rp = rosenhain_perp(r);
                    std::array<TwoTorsion, 6> elems;
                    int c = 0;
                    for (const auto& e : g.elements)
                        if (!rp.contains(e)) elems[c++] = e;
                    for (const auto& e : rp.elements)
                        if (!g.contains(e)) elems[c++] = e;
                    if (c != 6) continue;  // |G ∩ R^perp| != 1
                    unite(i, lookup(elems));
                }
    }

    std::map<int, std::vector<WeberHexad>> groups;
    for (int i = 0; i < static_cast<int>(hexads.size()); ++i) groups[find(i)].push_back(hexads[i]);
    std::vector<std::vector<WeberHexad>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace kummer::f2geom
