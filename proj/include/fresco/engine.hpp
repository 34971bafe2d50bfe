#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fresco/ab_algebra.hpp"
#include "fresco/setup.hpp"
#include "fresco/types.hpp"

namespace fresco {

// Order in which the exponent vector eta climbs from 0 to its target when the
// target has several nonzero components. Every order yields a valid operator;
// they may differ as factor sequences.
enum class PathStrategy { Lex, RevLex, Balanced };

const char* to_string(PathStrategy s);
PathStrategy path_strategy_from_string(const std::string& name);  // throws Error
std::vector<PathStrategy> all_path_strategies();

// Monomial index sequence realizing the climb to `target` under a strategy.
std::vector<Index> path_order(const ExpVector& target, PathStrategy strategy);

// State of one step of the factor recursion: Gamma_i = 1 + beta_i + (M.eta)_i.
struct StepContext {
    ExpVector beta;
    ExpVector eta;
    QVector gamma;
};

StepContext make_step_context(const MonomialSetup& setup, const ExpVector& beta,
                              const ExpVector& eta);

// Coefficients (u_j, v_j) with m_j.m^eta.x^beta.dx = (u_j.a + v_j.b)[m^eta.x^beta.dx]:
// the j-th row of the inverse of the square system assembled from the a-row and
// the Gamma-scaled b-rows.
std::pair<Rational, Rational> step(const MonomialSetup& setup, const StepContext& ctx, Index j);

// Iterated factor construction: climbs eta to `target`, prepending the monic
// factor (a - (-v_j/u_j).b) on the left and folding 1/u_j into the constant,
// so that Prod(a - r.b)[x^beta.dx] = constant.m^target.x^beta.dx.
FactorSequence build_operator(const MonomialSetup& setup, const ExpVector& beta,
                              const ExpVector& target, PathStrategy strategy);

struct AnnihilatorResult {
    FactorSequence Pdh;        // degree d+h, built over Delta
    FactorSequence Pd;         // degree d, built over delta
    Rational c;                // (P_{d+h} - c.lambda^r.P_d)[x^beta.dx] = 0
    long r = 0;                // lambda power in the constant bookkeeping
    std::vector<Rational> divisor_roots;  // sorted; divisor of the Bernstein polynomial
};

AnnihilatorResult annihilator(const MonomialSetup& setup, const ExpVector& beta,
                              PathStrategy strategy);

// Roots grouped by the fractional part of their negatives: each class residue
// identifies the lattice -residue + Z that those roots constrain.
struct PoleClass {
    Rational residue;   // in [0, 1)
    int multiplicity = 0;
    std::vector<Rational> roots;  // members, ascending
};
struct PoleReport {
    std::vector<PoleClass> classes;  // ascending residue
};

PoleReport pole_report(const std::vector<Rational>& roots);

}  // namespace fresco
