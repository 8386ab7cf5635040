// The (16)_6 configuration as a rank-17 integer lattice presented on 32
// generators: the 16 exceptional classes N_alpha and the 16 tropes T_beta,
// with the hyperplane class H, the Hessian class L, the printed S-divisor
// identities and the 11th-node class.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "kummer/f2geom.hpp"
#include "kummer/rational.hpp"

namespace kummer::config16 {

inline constexpr int kGenerators = 32;  // N_alpha (0..15) then T_beta (16..31)

using IntVec = std::array<long long, kGenerators>;
using RatVec = std::array<Rational, kGenerators>;

int node_index(f2geom::TwoTorsion a);
int trope_index(f2geom::ThetaChar b);
std::string generator_name(int i);  // "N_0", "N_12", "T_1", "T_123", ...

// Fixed generator Gram matrix: (N,N) and (T,T) blocks -2*id, (N,T) the
// 0/1 incidence.
const std::array<std::array<int, kGenerators>, kGenerators>& gram();

long long pair(const IntVec& x, const IntVec& y);
Rational pair(const RatVec& x, const RatVec& y);
Rational pair(const RatVec& x, const IntVec& y);

// Class equality is difference in the radical of the Gram form.
bool in_radical(const IntVec& x);
bool in_radical(const RatVec& x);

// Integral pairing with every generator.
bool dual_member(const RatVec& x);

RatVec to_rational(const IntVec& x);

// 2T_1 + N_0 + sum_j N_1j.
IntVec class_H();

// The relation H ~ 2T_beta + sum of incident N_alpha, for all 16 beta.
std::vector<std::pair<f2geom::ThetaChar, bool>> check_H_relations();

// Q-rank of the 32x32 Gram matrix (the Picard number 17).
int lattice_rank();

// L = 2H - sum_{alpha in W} N_alpha.
IntVec hessian_class(const f2geom::WeberHexad& w);

struct SDivisorReport {
    f2geom::WeberHexad hexad;
    std::array<IntVec, 5> divisors;
    std::array<bool, 5> equals_L;
    bool trope_multiplicities_two = false;
    bool node_multiplicities_three = false;
    std::vector<f2geom::TwoTorsion> covered_nodes;  // alpha with N_alpha in some S_i
};

// The five printed divisors for W = {12,23,31,14,25,36}.
SDivisorReport check_S_divisors();

// J(C)_2 - W: the classes contracted to the ten coordinate nodes.
std::vector<f2geom::TwoTorsion> node_coverage(const f2geom::WeberHexad& w);

// (3/4)H - (1/2) sum_{alpha in W} N_alpha.
RatVec eleventh_node_class(const f2geom::WeberHexad& w);

// H/4 + (sum_{alpha in R} N_alpha)/2 for a Rosenhain tetrad.
// Throws f2geom::WrongKind on Goepel input.
RatVec switch_obstruction(const f2geom::Tetrad& r);

// Lattice map permuting the 32 generators.
struct GeneratorMap {
    std::array<int, kGenerators> image;

    IntVec operator()(const IntVec& x) const;
    RatVec operator()(const RatVec& x) const;
    GeneratorMap compose(const GeneratorMap& inner) const;
    bool preserves_gram() const;
    bool is_identity() const;
};

// N_alpha -> N_{alpha+a}, T_beta -> T_{beta+a}.
GeneratorMap translation_action(f2geom::TwoTorsion a);

// N_alpha -> T_{alpha+b}, T_beta -> N_{beta+b}.
GeneratorMap switch_action(f2geom::ThetaChar b);

}  // namespace kummer::config16
