// Affine symplectic geometry of the 2-torsion group of a genus-2 Jacobian,
// realized as even subsets of {1..6} modulo complement: tetrads, Weber
// hexads, the affine isometry group, totals of synthemes and the dual-six
// partition.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kummer::f2geom {

struct DuplicateElements : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotLinear : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WrongKind : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// One of the 16 elements of J(C)_2.  Stored as the canonical representative
// of the pair {S, S^c}: the empty set or a duad {i,j} of letters 1..6,
// packed into a 6-bit mask.
class TwoTorsion {
  public:
    constexpr TwoTorsion() = default;

    // Canonicalizes an arbitrary even subset (size-4 sets are complemented).
    static TwoTorsion from_mask(unsigned mask);
    static TwoTorsion duad(int i, int j);  // letters 1..6, i != j
    static TwoTorsion zero() { return TwoTorsion(); }

    // All 16 elements: "0" first, then duads in lexicographic order.
    static const std::array<TwoTorsion, 16>& all();

    unsigned mask() const { return mask_; }
    bool is_zero() const { return mask_ == 0; }
    int index() const;  // position in all()

    TwoTorsion operator+(TwoTorsion o) const { return from_mask(mask_ ^ o.mask_); }
    // Symplectic form |a ∩ b| mod 2; well-defined on canonical representatives.
    int pairing(TwoTorsion o) const;

    std::string str() const;  // "0" or "ij" with i<j
    static std::optional<TwoTorsion> parse(std::string_view s);

    bool operator==(const TwoTorsion& o) const = default;
    auto operator<=>(const TwoTorsion& o) const { return index() <=> o.index(); }

  private:
    std::uint8_t mask_ = 0;
};

// One of the 16 theta characteristics: odd subsets modulo complement,
// canonical representative a singleton or a 3-set containing the letter 1.
class ThetaChar {
  public:
    constexpr ThetaChar() : mask_(1) {}

    static ThetaChar from_mask(unsigned mask);
    static ThetaChar singleton(int i);
    // Singletons 1..6 first, then 3-sets 123 < 124 < ... < 156.
    static const std::array<ThetaChar, 16>& all();

    unsigned mask() const { return mask_; }
    int index() const;

    ThetaChar operator+(TwoTorsion a) const { return from_mask(mask_ ^ a.mask()); }
    // Difference of two theta characteristics is 2-torsion.
    TwoTorsion operator-(ThetaChar o) const { return TwoTorsion::from_mask(mask_ ^ o.mask_); }

    // Incidence with a node: alpha + beta is a singleton class.
    bool incident(TwoTorsion alpha) const;

    std::string str() const;  // "i" or "ijk"
    static std::optional<ThetaChar> parse(std::string_view s);

    bool operator==(const ThetaChar& o) const = default;
    auto operator<=>(const ThetaChar& o) const { return index() <=> o.index(); }

  private:
    std::uint8_t mask_;
};

enum class TetradKind { Goepel, Rosenhain };

// Affine 2-dimensional subspace of J(C)_2, i.e. a 4-set with zero sum.
struct Tetrad {
    std::array<TwoTorsion, 4> elements;  // sorted
    TetradKind kind;

    bool contains(TwoTorsion a) const;
    bool is_linear() const { return elements[0].is_zero(); }
    std::string str() const;
    bool operator==(const Tetrad& o) const { return elements == o.elements; }
    bool operator<(const Tetrad& o) const { return elements < o.elements; }
};

// Validates the affine-plane condition and classifies the direction space.
std::optional<Tetrad> make_tetrad(std::array<TwoTorsion, 4> elements);

std::vector<Tetrad> enumerate_tetrads(TetradKind kind);

enum class HexadForm { Type1, Type2 };

// A 6-set of the form G ⊖ R, G Goepel and R Rosenhain with |G ∩ R| = 1.
// The letters array witnesses the canonical form:
//   Type1 {0,ab,bc,cd,de,ea}: letters = (a,b,c,d,e,f), f the unused letter;
//   Type2 {ij,jk,ki,il,jm,kn}: letters = (i,j,k,l,m,n).
struct WeberHexad {
    std::array<TwoTorsion, 6> elements;  // sorted
    HexadForm form;
    std::array<int, 6> letters;

    bool contains(TwoTorsion a) const;
    std::string str() const;  // comma-separated sorted element strings
    bool operator==(const WeberHexad& o) const { return elements == o.elements; }
    bool operator<(const WeberHexad& o) const { return elements < o.elements; }
};

std::vector<WeberHexad> enumerate_weber_hexads();

// Partial-sum decomposition test.  Throws DuplicateElements on repeated
// entries; returns nullopt when s is not a Weber hexad.
std::optional<WeberHexad> is_weber_hexad(const std::array<TwoTorsion, 6>& s);

// Element of the affine isometry group J(C)_2 . S6 (order 11520), acting by
// relabeling letters and then translating.
struct AffineMap {
    std::array<std::uint8_t, 6> perm;  // 0-based images of letters
    TwoTorsion translation;

    static AffineMap identity();
    TwoTorsion operator()(TwoTorsion a) const;
    AffineMap compose(const AffineMap& inner) const;  // this ∘ inner
    AffineMap inverse() const;

    bool operator==(const AffineMap& o) const = default;
};

const std::vector<AffineMap>& affine_group();

// Setwise image; result re-validated as a Weber hexad.
WeberHexad apply(const AffineMap& g, const WeberHexad& w);

// All group elements fixing w setwise (order 60 for every hexad).
std::vector<AffineMap> stabilizer(const WeberHexad& w);

// A perfect matching of the six letters, stored as three duads sorted by
// smaller letter.
using Syntheme = std::array<TwoTorsion, 3>;

// Five synthemes covering all fifteen duads.
struct Total {
    std::array<Syntheme, 5> synthemes;  // sorted by first duad
    std::string str() const;            // "(ab)(cd)(ef)" per syntheme, space-joined
    bool operator==(const Total& o) const = default;
    bool operator<(const Total& o) const { return synthemes < o.synthemes; }
};

std::string syntheme_str(const Syntheme& s);

// Pentagon-edge rule on the Type1 translate of w; independent of the choice
// of translating element.
Total hexad_to_total(const WeberHexad& w);

// All six totals by exhaustive search over syntheme 5-subsets.
std::vector<Total> enumerate_totals();

// Transitive closure of W ~ W+alpha and G⊖R ~ G⊖R^perp (when G∩R = {0}).
// Classes are sorted by smallest member, members sorted.
std::vector<std::vector<WeberHexad>> dual_six_classes();

// Symplectic orthogonal complement of a linear Rosenhain tetrad.
// Throws NotLinear when 0 is not a member and WrongKind on Goepel input.
Tetrad rosenhain_perp(const Tetrad& r);

}  // namespace kummer::f2geom
