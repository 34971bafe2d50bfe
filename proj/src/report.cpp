#include "fresco/report.hpp"

#include <map>
#include <sstream>

#include "fresco/errors.hpp"
#include "fresco/linalg.hpp"
#include "fresco/parse.hpp"

namespace fresco {

namespace {

Json rational_list(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const Rational& r : v) out.push_back(r.str());
    return out;
}

Json rational_list(const QVector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
    return out;
}

std::vector<Rational> rationals_from(const Json& j) {
    std::vector<Rational> out;
    for (const auto& item : j) out.emplace_back(item.get<std::string>());
    return out;
}

Json int_list(const ExpVector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

ExpVector exp_vector_from(const Json& j) {
    ExpVector v(static_cast<Index>(j.size()));
    Index i = 0;
    for (const auto& item : j) v(i++) = item.get<std::int64_t>();
    return v;
}

Json index_set(const std::vector<Index>& set) {
    Json out = Json::array();
    for (Index j : set) out.push_back(j + 1);  // 1-based in reports
    return out;
}

std::vector<Index> index_set_from(const Json& j) {
    std::vector<Index> out;
    for (const auto& item : j) out.push_back(item.get<Index>() - 1);
    return out;
}

std::string join_rationals(const QVector& v) {
    std::ostringstream os;
    for (Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
    return os.str();
}

std::string join_ints(const ExpVector& v) {
    std::ostringstream os;
    for (Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
    return os.str();
}

std::string join_set(const std::vector<Index>& set) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < set.size(); ++i) os << (i ? ", " : "") << set[i] + 1;
    os << "}";
    return os.str();
}

Json factor_sequence_json(const FactorSequence& fs) {
    return Json{{"factors", rational_list(fs.roots)}, {"constant", fs.constant.str()}};
}

FactorSequence factor_sequence_from(const Json& j) {
    FactorSequence fs;
    fs.roots = rationals_from(j.at("factors"));
    fs.constant = Rational(j.at("constant").get<std::string>());
    return fs;
}

std::string factor_sequence_text(const FactorSequence& fs) {
    if (fs.roots.empty()) return "1";
    std::ostringstream os;
    for (const Rational& r : fs.roots) {
        os << "(a";
        if (r.sign() < 0)
            os << " + " << -r;
        else if (!r.is_zero())
            os << " - " << r;
        if (!r.is_zero()) os << "*b";
        os << ")";
    }
    return os.str();
}

}  // namespace

std::string factored_divisor(const std::vector<Rational>& roots, const std::string& var) {
    if (roots.empty()) return "1";
    std::map<Rational, int> mult;  // keyed by q = -root, ascending
    for (const Rational& root : roots) mult[-root] += 1;
    std::ostringstream os;
    bool first = true;
    for (const auto& [q, m] : mult) {
        if (!first) os << "*";
        first = false;
        os << "(" << var;
        if (q.sign() > 0)
            os << " + " << q;
        else if (q.sign() < 0)
            os << " - " << -q;
        os << ")";
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

std::string render_ode(const AnnihilatorResult& ann) {
    auto side = [](const FactorSequence& fs) {
        if (fs.roots.empty()) return std::string("phi");
        std::ostringstream os;
        for (const Rational& r : fs.roots) {
            os << "(s";
            if (r.sign() < 0)
                os << " + " << -r;
            else if (!r.is_zero())
                os << " - " << r;
            if (!r.is_zero()) os << "*I";
            os << ")";
        }
        os << "[phi]";
        return os.str();
    };
    std::ostringstream os;
    os << side(ann.Pdh) << " = " << ann.c << " * L^" << ann.r << " * " << side(ann.Pd)
       << "   where (I g)(s) = int_0^s g(t) dt and phi is the period integral of x^beta.dx";
    return os.str();
}

DivisorReport make_divisor_report(const MonomialSetup& setup, const ExpVector& beta,
                                  const std::string& form_text, PathStrategy path) {
    DivisorReport rep;
    rep.setup = setup;
    rep.beta = beta;
    rep.form_text = form_text;
    rep.path = path;
    rep.ann = annihilator(setup, beta, path);
    rep.poles = pole_report(rep.ann.divisor_roots);
    rep.ode = render_ode(rep.ann);
    return rep;
}

Json to_json(const MonomialSetup& setup) {
    Json perm = Json::array();
    for (Index p : setup.permutation) perm.push_back(p + 1);
    Json m_rows = Json::array();
    for (Index i = 0; i < setup.M.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < setup.M.cols(); ++j) row.push_back(setup.M(i, j));
        m_rows.push_back(row);
    }
    QVector rho_v = setup.rho;
    Json coeffs = Json::array();
    for (const Rational& c : setup.poly.coefficients) coeffs.push_back(c.str());
    return Json{{"vars", setup.poly.var_names},
                {"poly", render_poly(setup.poly)},
                {"coefficients", coeffs},
                {"lambda_slot", setup.poly.lambda_slot + 1},
                {"lambda_explicit", setup.poly.lambda_explicit},
                {"permutation", perm},
                {"M", m_rows},
                {"rho", rational_list(rho_v)},
                {"rbar", setup.rbar},
                {"p", int_list(setup.p)},
                {"H", index_set(setup.H)},
                {"Jplus", index_set(setup.Jplus)},
                {"Jminus", index_set(setup.Jminus)},
                {"Delta", int_list(setup.Delta)},
                {"delta", int_list(setup.delta)},
                {"d", setup.d},
                {"h", setup.h},
                {"r", setup.r},
                {"u", rational_list(setup.u)}};
}

MonomialSetup setup_from_json(const Json& j) {
    MonomialSetup s;
    const Json& m_rows = j.at("M");
    const Index rows = static_cast<Index>(m_rows.size());
    const Index cols = rows > 0 ? static_cast<Index>(m_rows.at(0).size()) : 0;
    s.M = ExpMatrix(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index jj = 0; jj < cols; ++jj) s.M(i, jj) = m_rows.at(i).at(jj).get<std::int64_t>();

    s.poly.exponents = s.M;
    s.poly.var_names = j.at("vars").get<std::vector<std::string>>();
    s.poly.lambda_slot = j.at("lambda_slot").get<Index>() - 1;
    s.poly.lambda_explicit = j.at("lambda_explicit").get<bool>();
    for (const auto& c : j.at("coefficients")) s.poly.coefficients.emplace_back(c.get<std::string>());

    for (const auto& p : j.at("permutation")) s.permutation.push_back(p.get<Index>() - 1);

    QMatrix mt(rows + 1, cols);
    for (Index jj = 0; jj < cols; ++jj) {
        mt(0, jj) = Rational(1);
        for (Index i = 0; i < rows; ++i) mt(i + 1, jj) = Rational(static_cast<long>(s.M(i, jj)));
    }
    s.Mtilde = mt;
    s.Mtilde_inv = invert(mt);

    const std::vector<Rational> rho = rationals_from(j.at("rho"));
    s.rho = QVector(static_cast<Index>(rho.size()));
    for (std::size_t i = 0; i < rho.size(); ++i) s.rho(static_cast<Index>(i)) = rho[i];
    s.rbar = j.at("rbar").get<long>();
    s.p = exp_vector_from(j.at("p"));
    s.H = index_set_from(j.at("H"));
    s.Jplus = index_set_from(j.at("Jplus"));
    s.Jminus = index_set_from(j.at("Jminus"));
    s.Delta = exp_vector_from(j.at("Delta"));
    s.delta = exp_vector_from(j.at("delta"));
    s.d = j.at("d").get<long>();
    s.h = j.at("h").get<long>();
    s.r = j.at("r").get<long>();
    s.u = QVector(static_cast<Index>(j.at("u").size()));
    const std::vector<Rational> u = rationals_from(j.at("u"));
    for (std::size_t i = 0; i < u.size(); ++i) s.u(static_cast<Index>(i)) = u[i];
    return s;
}

Json to_json(const AnalyzeReport& r) {
    return Json{{"command", "analyze"}, {"setup", to_json(r.setup)}};
}

AnalyzeReport analyze_report_from_json(const Json& j) {
    return AnalyzeReport{setup_from_json(j.at("setup"))};
}

Json to_json(const DivisorReport& r) {
    Json poles = Json::array();
    for (const PoleClass& cls : r.poles.classes)
        poles.push_back(Json{{"residue", cls.residue.str()},
                             {"multiplicity", cls.multiplicity},
                             {"roots", rational_list(cls.roots)}});
    return Json{{"command", "bernstein"},
                {"setup", to_json(r.setup)},
                {"form", r.form_text},
                {"beta", int_list(r.beta)},
                {"path", to_string(r.path)},
                {"P_dh", factor_sequence_json(r.ann.Pdh)},
                {"P_d", factor_sequence_json(r.ann.Pd)},
                {"c", r.ann.c.str()},
                {"lambda_power", r.ann.r},
                {"divisor",
                 Json{{"roots", rational_list(r.ann.divisor_roots)},
                      {"factored", factored_divisor(r.ann.divisor_roots)},
                      {"degree", r.ann.divisor_roots.size()}}},
                {"pole_classes", poles},
                {"ode", r.ode}};
}

DivisorReport divisor_report_from_json(const Json& j) {
    DivisorReport r;
    r.setup = setup_from_json(j.at("setup"));
    r.form_text = j.at("form").get<std::string>();
    r.beta = exp_vector_from(j.at("beta"));
    r.path = path_strategy_from_string(j.at("path").get<std::string>());
    r.ann.Pdh = factor_sequence_from(j.at("P_dh"));
    r.ann.Pd = factor_sequence_from(j.at("P_d"));
    r.ann.c = Rational(j.at("c").get<std::string>());
    r.ann.r = j.at("lambda_power").get<long>();
    r.ann.divisor_roots = rationals_from(j.at("divisor").at("roots"));
    for (const auto& cls : j.at("pole_classes")) {
        PoleClass pc;
        pc.residue = Rational(cls.at("residue").get<std::string>());
        pc.multiplicity = cls.at("multiplicity").get<int>();
        pc.roots = rationals_from(cls.at("roots"));
        r.poles.classes.push_back(std::move(pc));
    }
    r.ode = j.at("ode").get<std::string>();
    return r;
}

Json to_json(const AbmodReport& r) {
    Json out{{"command", "abmod"},
             {"rank", r.rank},
             {"truncation", r.truncation},
             {"simple_pole", r.simple_pole}};
    if (r.simple_pole) {
        Json coeffs = Json::array();
        for (const Rational& c : r.bernstein.coeffs()) coeffs.push_back(c.str());
        out["bernstein"] = Json{{"coeffs", coeffs}, {"text", r.bernstein.str()}};
    }
    return out;
}

AbmodReport abmod_report_from_json(const Json& j) {
    AbmodReport r;
    r.rank = j.at("rank").get<Index>();
    r.truncation = j.at("truncation").get<Index>();
    r.simple_pole = j.at("simple_pole").get<bool>();
    if (r.simple_pole) {
        std::vector<Rational> coeffs = rationals_from(j.at("bernstein").at("coeffs"));
        r.bernstein = QPoly(std::move(coeffs));
    }
    return r;
}

std::string to_text(const MonomialSetup& setup) {
    std::ostringstream os;
    os << "f = " << render_poly(setup.poly);
    os << "   [vars: ";
    for (std::size_t i = 0; i < setup.poly.var_names.size(); ++i)
        os << (i ? ", " : "") << setup.poly.var_names[i];
    os << "]\n";
    bool identity = true;
    for (std::size_t i = 0; i < setup.permutation.size(); ++i)
        if (setup.permutation[i] != static_cast<Index>(i)) identity = false;
    if (identity) {
        os << "  monomial order unchanged\n";
    } else {
        os << "  monomials reordered (new <- old):";
        for (Index p : setup.permutation) os << " " << p + 1;
        os << "\n";
    }
    os << "  rho = (" << join_rationals(setup.rho) << ")   |r| = " << setup.rbar << "   p = ("
       << join_ints(setup.p) << ")\n";
    os << "  H = " << join_set(setup.H) << "   J+ = " << join_set(setup.Jplus)
       << "   J- = " << join_set(setup.Jminus) << "\n";
    os << "  Delta = (" << join_ints(setup.Delta) << ")   delta = (" << join_ints(setup.delta)
       << ")\n";
    os << "  d = " << setup.d << "   h = " << setup.h << "   r = " << setup.r << "\n";
    os << "  u = first column of inverse(M~) = (" << join_rationals(setup.u) << ")\n";
    return os.str();
}

std::string to_text(const AnalyzeReport& r) { return to_text(r.setup); }

std::string to_text(const DivisorReport& r) {
    std::ostringstream os;
    os << to_text(r.setup);
    os << "  omega = " << r.form_text << ".dx   path = " << to_string(r.path) << "\n";
    os << "  P_{d+h} = " << factor_sequence_text(r.ann.Pdh) << "   constant "
       << r.ann.Pdh.constant << "\n";
    os << "  P_d     = " << factor_sequence_text(r.ann.Pd) << "   constant " << r.ann.Pd.constant
       << "\n";
    os << "  c = " << r.ann.c << "   lambda power = " << r.ann.r << "\n";
    os << "  divisor candidate: B(xi) | " << factored_divisor(r.ann.divisor_roots) << "   (degree "
       << r.ann.divisor_roots.size() << ")\n";
    os << "  pole classes (by fractional part of -root):\n";
    for (const PoleClass& cls : r.poles.classes) {
        os << "    residue " << cls.residue << ": multiplicity " << cls.multiplicity << ", roots {";
        for (std::size_t i = 0; i < cls.roots.size(); ++i) os << (i ? ", " : "") << cls.roots[i];
        os << "}; candidate exponents in -" << cls.residue
           << " + Z beyond this count are excluded\n";
    }
    os << "  ode: " << r.ode << "\n";
    return os.str();
}

std::string to_text(const AbmodReport& r) {
    std::ostringstream os;
    os << "(a,b)-module presentation: rank " << r.rank << ", truncation order " << r.truncation
       << "\n";
    os << "  simple pole: " << (r.simple_pole ? "yes" : "no") << "\n";
    if (r.simple_pole) os << "  Bernstein polynomial: " << r.bernstein.str() << "\n";
    return os.str();
}

}  // namespace fresco
