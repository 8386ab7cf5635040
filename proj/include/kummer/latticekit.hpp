// Integer quadratic-form machinery: Smith and Hermite normal forms, dual
// lattices, discriminant groups with their Q/2Z-valued quadratic forms, the
// transcendental lattice U(2)+U(2)+<-4> and the radical quotient of the
// (16)_6 presentation.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "kummer/config16.hpp"
#include "kummer/f2geom.hpp"
#include "kummer/rational.hpp"

namespace kummer::latticekit {

struct DegenerateForm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using IMat = std::vector<std::vector<Int>>;
using RMat = std::vector<std::vector<Rational>>;

IMat identity_matrix(int n);
IMat mat_mul(const IMat& a, const IMat& b);
Int determinant(IMat m);  // fraction-free elimination
int rank(IMat m);

// U m V = D with U, V unimodular and a divisibility chain on the diagonal.
struct SnfResult {
    IMat u, d, v;
    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
};
SnfResult smith_normal_form(IMat m);

// Basis of the row space over Z; returns rank rows, pivots positive,
// entries above pivots reduced.
IMat hermite_normal_form(IMat m);

struct IntegralLattice {
    IMat gram;
    bool even = true;

    int dim() const { return static_cast<int>(gram.size()); }
    Int det() const { return determinant(gram); }
};

IntegralLattice lattice_U2();      // [[0,2],[2,0]]
IntegralLattice lattice_minus4();  // [[-4]]
IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts);
IntegralLattice lattice_T();       // U(2) + U(2) + <-4>

// Element of a discriminant group as a coefficient tuple over the
// nontrivial invariant factors.
using DiscElem = std::vector<Int>;

class DiscGroup {
  public:
    DiscGroup() = default;
    DiscGroup(IntegralLattice host, std::vector<Int> factors,
              std::vector<std::vector<Rational>> lifts, IMat u, std::vector<int> positions);

    const IntegralLattice& host() const { return host_; }
    const std::vector<Int>& factors() const { return factors_; }
    Int order() const;

    std::vector<DiscElem> elements() const;  // lexicographic coefficient order
    DiscElem zero() const { return DiscElem(factors_.size(), 0); }
    DiscElem reduce(DiscElem e) const;
    DiscElem add(const DiscElem& a, const DiscElem& b) const;
    DiscElem neg(const DiscElem& a) const;
    DiscElem scale(const Int& k, const DiscElem& a) const;
    Int element_order(const DiscElem& a) const;

    // A rational lift into the dual lattice, in host basis coordinates.
    std::vector<Rational> lift(const DiscElem& a) const;
    Rational q(const DiscElem& a) const;                     // in [0,2)
    Rational b(const DiscElem& a, const DiscElem& o) const;  // in [0,1)

    // Class of a dual vector given in host basis coordinates.
    DiscElem class_of(const std::vector<Rational>& dual_coords) const;

  private:
    IntegralLattice host_;
    std::vector<Int> factors_;
    std::vector<std::vector<Rational>> lifts_;
    IMat u_;                      // row transform of the SNF of the host Gram
    std::vector<int> positions_;  // rows of u_ matching the nontrivial factors
};

// Throws DegenerateForm when det = 0.
DiscGroup discriminant_group(const IntegralLattice& l);

struct CyclicSubgroup {
    DiscElem generator;              // lexicographically smallest generator
    std::vector<DiscElem> elements;  // sorted
};

// Cyclic order-4 subgroups whose generators have q = 3/4 mod 2Z.
std::vector<CyclicSubgroup> six_subgroups(const DiscGroup& d);

struct DualVector {
    std::vector<Rational> coords;  // host basis coordinates
    Rational norm;
    DiscElem disc_class;
};

// Exhaustive search over the box [-bound,bound]^n of dual-basis coordinates;
// returns the lexicographically smallest witness with the exact norm (and,
// when given, the exact discriminant class).
std::optional<DualVector> find_dual_vector(const DiscGroup& d, const Rational& target_norm,
                                           const std::optional<DiscElem>& target_class, int bound);
std::optional<DualVector> find_dual_vector(const IntegralLattice& l, const Rational& target_norm,
                                           int bound);

// Integral basis extracted from a degenerate Gram presentation.
struct RadicalQuotient {
    IntegralLattice lattice;        // Gram on the extracted basis
    std::vector<int> frame;         // indices of the chosen independent generators
    RMat basis;                     // rows: basis vectors in frame coordinates
    IMat projection;                // generator -> integer basis coordinates
    RMat dual_projection;           // rational class in generator coords -> basis coords
};

RadicalQuotient radical_quotient(const IMat& gram);

// Necessary isometry check: multisets of (order, q) agree after negating
// the q-values of b mod 2Z.
bool match_discriminant_forms(const DiscGroup& a, const DiscGroup& b);

// The (16)_6 lattice NS' and its discriminant group, built once.
struct NsContext {
    RadicalQuotient quotient;
    DiscGroup disc;

    std::vector<Rational> project(const config16::RatVec& cls) const;
};
const NsContext& ns_context();

// Image of the eleventh-node class in disc(NS'); order 4, q = 5/4 mod 2Z.
DiscElem patching_class(const f2geom::WeberHexad& w);

// Lexicographically smallest generator of <g>; identifies the subgroup.
DiscElem canonical_generator(const DiscGroup& d, const DiscElem& g);

}  // namespace kummer::latticekit
