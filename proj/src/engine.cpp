#include "fresco/engine.hpp"

#include <algorithm>
#include <map>

#include "fresco/errors.hpp"

namespace fresco {

const char* to_string(PathStrategy s) {
    switch (s) {
        case PathStrategy::Lex: return "lex";
        case PathStrategy::RevLex: return "revlex";
        case PathStrategy::Balanced: return "balanced";
    }
    return "?";
}

PathStrategy path_strategy_from_string(const std::string& name) {
    if (name == "lex") return PathStrategy::Lex;
    if (name == "revlex") return PathStrategy::RevLex;
    if (name == "balanced") return PathStrategy::Balanced;
    throw Error("unknown path strategy '" + name + "' (expected lex, revlex or balanced)");
}

std::vector<PathStrategy> all_path_strategies() {
    return {PathStrategy::Lex, PathStrategy::RevLex, PathStrategy::Balanced};
}

std::vector<Index> path_order(const ExpVector& target, PathStrategy strategy) {
    std::vector<Index> order;
    order.reserve(static_cast<std::size_t>(target.sum()));
    switch (strategy) {
        case PathStrategy::Lex:
            for (Index j = 0; j < target.size(); ++j)
                for (std::int64_t c = 0; c < target(j); ++c) order.push_back(j);
            break;
        case PathStrategy::RevLex:
            for (Index j = target.size() - 1; j >= 0; --j)
                for (std::int64_t c = 0; c < target(j); ++c) order.push_back(j);
            break;
        case PathStrategy::Balanced: {
            ExpVector left = target;
            while (left.sum() > 0)
                for (Index j = 0; j < left.size(); ++j)
                    if (left(j) > 0) {
                        order.push_back(j);
                        --left(j);
                    }
            break;
        }
    }
    return order;
}

StepContext make_step_context(const MonomialSetup& setup, const ExpVector& beta,
                              const ExpVector& eta) {
    if (beta.size() != setup.nvars()) throw Error("beta has the wrong dimension");
    if (eta.size() != setup.nmono()) throw Error("eta has the wrong dimension");
    StepContext ctx{beta, eta, QVector(setup.nvars())};
    const ExpVector weights = setup.M * eta;
    for (Index i = 0; i < setup.nvars(); ++i)
        ctx.gamma(i) = Rational(static_cast<long>(1 + beta(i) + weights(i)));
    return ctx;
}

std::pair<Rational, Rational> step(const MonomialSetup& setup, const StepContext& ctx, Index j) {
    if (j < 0 || j >= setup.nmono()) throw Error("monomial index out of range");
    const Rational u = setup.Mtilde_inv(j, 0);
    Rational v(0);
    for (Index i = 0; i < setup.nvars(); ++i) v += setup.Mtilde_inv(j, i + 1) * ctx.gamma(i);
    return {u, v};
}

FactorSequence build_operator(const MonomialSetup& setup, const ExpVector& beta,
                              const ExpVector& target, PathStrategy strategy) {
    if (target.size() != setup.nmono()) throw Error("target has the wrong dimension");
    for (Index j : setup.H)
        if (target(j) != 0)
            throw UnreachableTargetError("target exponent touches H at monomial index " +
                                         std::to_string(j));
    for (Index j = 0; j < target.size(); ++j)
        if (target(j) < 0) throw Error("target exponents must be non-negative");

    FactorSequence fs;
    ExpVector eta = ExpVector::Zero(setup.nmono());
    for (Index j : path_order(target, strategy)) {
        const StepContext ctx = make_step_context(setup, beta, eta);
        const auto [u, v] = step(setup, ctx, j);
        if (u.is_zero())
            // Lemma-level impossibility off H; reaching this means the setup is corrupt.
            throw Error("zero pivot u_j off H at monomial index " + std::to_string(j));
        fs.roots.insert(fs.roots.begin(), -(v / u));
        fs.constant *= u.inverse();
        ++eta(j);
    }
    return fs;
}

AnnihilatorResult annihilator(const MonomialSetup& setup, const ExpVector& beta,
                              PathStrategy strategy) {
    AnnihilatorResult out;
    out.Pdh = build_operator(setup, beta, setup.Delta, strategy);
    out.Pd = build_operator(setup, beta, setup.delta, strategy);
    // (P_{d+h} - c.lambda^r.P_d)[x^beta.dx] = 0: the lambda power comes from the
    // lambda slot of the monomial relation, every other coefficient enters c.
    const Index ls = setup.poly.lambda_slot;
    out.r = setup.Delta(ls) - setup.delta(ls);
    out.c = out.Pdh.constant / out.Pd.constant;
    for (Index j = 0; j < setup.nmono(); ++j) {
        if (j == ls) continue;
        const long e = setup.Delta(j) - setup.delta(j);
        if (e != 0) out.c *= pow(setup.poly.coefficients[static_cast<std::size_t>(j)], e);
    }
    out.divisor_roots = roots_from_factors(out.Pd);
    return out;
}

PoleReport pole_report(const std::vector<Rational>& roots) {
    std::map<Rational, PoleClass> classes;
    for (const Rational& root : roots) {
        const Rational residue = (-root).frac();
        auto& cls = classes[residue];
        cls.residue = residue;
        cls.multiplicity += 1;
        cls.roots.push_back(root);
    }
    PoleReport report;
    for (auto& [residue, cls] : classes) {
        std::sort(cls.roots.begin(), cls.roots.end());
        report.classes.push_back(std::move(cls));
    }
    return report;
}

}  // namespace fresco
