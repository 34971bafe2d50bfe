#include "fresco/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "fresco/errors.hpp"

namespace fresco {

namespace {

enum class Tok { End, Plus, Minus, Star, Caret, Slash, Number, Ident };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= src_.size()) {
            cur_ = {Tok::End, "", start};
            return;
        }
        const char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            cur_ = {Tok::Number, src_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            cur_ = {Tok::Ident, src_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': cur_ = {Tok::Plus, "+", start}; return;
            case '-': cur_ = {Tok::Minus, "-", start}; return;
            case '*': cur_ = {Tok::Star, "*", start}; return;
            case '^': cur_ = {Tok::Caret, "^", start}; return;
            case '/': cur_ = {Tok::Slash, "/", start}; return;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token cur_;
};

bool is_lambda_name(const std::string& s) { return s == "L" || s == "lambda"; }

long parse_uint(Lexer& lx, const char* what) {
    if (lx.peek().kind != Tok::Number)
        throw SyntaxError(std::string("expected ") + what, lx.peek().pos);
    const Token t = lx.take();
    try {
        return std::stol(t.text);
    } catch (const std::exception&) {
        throw SyntaxError("integer literal out of range", t.pos);
    }
}

Rational parse_rational(Lexer& lx) {
    const Token num = lx.take();
    mpz_class n(num.text);
    if (lx.peek().kind == Tok::Slash) {
        lx.take();
        if (lx.peek().kind != Tok::Number)
            throw SyntaxError("expected denominator", lx.peek().pos);
        const Token den = lx.take();
        mpz_class d(den.text);
        if (sgn(d) == 0) throw SyntaxError("zero denominator", den.pos);
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(q);
    }
    return Rational(mpq_class(n));
}

struct RawTerm {
    Rational coeff{1};
    bool has_lambda = false;
    std::size_t lambda_pos = 0;
    std::map<std::string, long> exponents;  // by variable name (or x<k> in indexed mode)
    std::size_t pos = 0;
};

RawTerm parse_term(Lexer& lx, int sign) {
    RawTerm term;
    term.pos = lx.peek().pos;
    bool have_coeff = false;
    bool seen_var = false;
    while (true) {
        const Token atom = lx.peek();
        if (atom.kind == Tok::Number) {
            if (seen_var) throw SyntaxError("numeric coefficient must precede variables", atom.pos);
            if (term.has_lambda) throw SyntaxError("numeric coefficient must precede L", atom.pos);
            if (have_coeff) throw SyntaxError("repeated numeric coefficient", atom.pos);
            term.coeff = parse_rational(lx);
            have_coeff = true;
        } else if (atom.kind == Tok::Ident && is_lambda_name(atom.text)) {
            if (seen_var) throw SyntaxError("L must precede variables", atom.pos);
            if (term.has_lambda) throw SyntaxError("repeated L in one monomial", atom.pos);
            lx.take();
            if (lx.peek().kind == Tok::Caret) {
                lx.take();
                const std::size_t p = lx.peek().pos;
                if (parse_uint(lx, "exponent") != 1)
                    throw SyntaxError("only L^1 is supported", p);
            }
            term.has_lambda = true;
            term.lambda_pos = atom.pos;
        } else if (atom.kind == Tok::Ident) {
            lx.take();
            long e = 1;
            if (lx.peek().kind == Tok::Caret) {
                lx.take();
                e = parse_uint(lx, "exponent");
            }
            term.exponents[atom.text] += e;
            seen_var = true;
        } else {
            throw SyntaxError("expected coefficient or variable", atom.pos);
        }
        if (lx.peek().kind == Tok::Star) {
            lx.take();
            continue;
        }
        break;
    }
    if (!seen_var) throw SyntaxError("monomial must contain a variable", term.pos);
    if (sign < 0) term.coeff = -term.coeff;
    if (term.coeff.is_zero()) throw ZeroCoefficientError("zero coefficient", term.pos);
    return term;
}

Index indexed_var(const std::string& name, std::size_t pos) {
    if (name.size() < 2 || name[0] != 'x')
        throw SyntaxError("unknown variable '" + name + "' (no alphabet declared; expected x0, x1, ...)",
                          pos);
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw SyntaxError("unknown variable '" + name + "'", pos);
    try {
        return static_cast<Index>(std::stol(name.substr(1)));
    } catch (const std::exception&) {
        throw SyntaxError("variable index out of range", pos);
    }
}

}  // namespace

MonomialPoly parse_poly(const SourcePoly& src) {
    for (const std::string& v : src.vars)
        if (is_lambda_name(v)) throw Error("'" + v + "' is reserved for the parameter");
    std::map<std::string, Index> table;
    for (std::size_t i = 0; i < src.vars.size(); ++i)
        if (!table.emplace(src.vars[i], static_cast<Index>(i)).second)
            throw Error("duplicate variable name '" + src.vars[i] + "'");

    Lexer lx(src.text);
    std::vector<RawTerm> terms;
    int sign = 1;
    if (lx.peek().kind == Tok::Minus) {
        lx.take();
        sign = -1;
    }
    while (true) {
        terms.push_back(parse_term(lx, sign));
        if (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus) {
            sign = lx.take().kind == Tok::Plus ? 1 : -1;
            continue;
        }
        if (lx.peek().kind == Tok::End) break;
        throw SyntaxError("expected '+', '-' or end of input", lx.peek().pos);
    }

    // Resolve variables.
    const bool indexed = src.vars.empty();
    Index nvars = static_cast<Index>(src.vars.size());
    if (indexed) {
        Index max_index = -1;
        for (const RawTerm& t : terms)
            for (const auto& [name, e] : t.exponents)
                max_index = std::max(max_index, indexed_var(name, t.pos));
        nvars = max_index + 1;
    }
    if (static_cast<Index>(terms.size()) != nvars + 1)
        throw ArityError("expected " + std::to_string(nvars + 1) + " monomials, got " +
                             std::to_string(terms.size()),
                         0);

    // Lambda designation: at most one explicit carrier, stored last.
    Index lambda_at = -1;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!terms[i].has_lambda) continue;
        if (lambda_at >= 0)
            throw SyntaxError("only one monomial may carry L", terms[i].lambda_pos);
        lambda_at = static_cast<Index>(i);
    }
    const bool lambda_explicit = lambda_at >= 0;
    std::vector<const RawTerm*> ordered;
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (static_cast<Index>(i) != lambda_at) ordered.push_back(&terms[i]);
    if (lambda_explicit) ordered.push_back(&terms[static_cast<std::size_t>(lambda_at)]);

    MonomialPoly poly;
    poly.exponents = ExpMatrix::Zero(nvars, static_cast<Index>(terms.size()));
    poly.coefficients.resize(terms.size());
    poly.lambda_slot = static_cast<Index>(terms.size()) - 1;
    poly.lambda_explicit = lambda_explicit;
    if (indexed) {
        for (Index i = 0; i < nvars; ++i) poly.var_names.push_back("x" + std::to_string(i));
    } else {
        poly.var_names = src.vars;
    }

    for (std::size_t col = 0; col < ordered.size(); ++col) {
        const RawTerm& t = *ordered[col];
        poly.coefficients[col] = t.coeff;
        bool nonzero = false;
        for (const auto& [name, e] : t.exponents) {
            Index vi;
            if (indexed) {
                vi = indexed_var(name, t.pos);
            } else {
                auto it = table.find(name);
                if (it == table.end())
                    throw SyntaxError("unknown variable '" + name + "'", t.pos);
                vi = it->second;
            }
            poly.exponents(vi, static_cast<Index>(col)) += e;
            if (e != 0) nonzero = true;
        }
        if (!nonzero) throw SyntaxError("monomial has zero exponent vector", t.pos);
    }

    for (Index a = 0; a < poly.nmono(); ++a)
        for (Index b = a + 1; b < poly.nmono(); ++b)
            if (poly.exponents.col(a) == poly.exponents.col(b))
                throw DuplicateMonomialError("duplicate monomial (columns " + std::to_string(a) +
                                                 " and " + std::to_string(b) + ")",
                                             0);
    return poly;
}

std::string render_poly(const MonomialPoly& p) {
    std::ostringstream os;
    for (Index j = 0; j < p.nmono(); ++j) {
        const Rational& c = p.coefficients[static_cast<std::size_t>(j)];
        const Rational mag = c.sign() < 0 ? -c : c;
        if (j == 0) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool need_star = false;
        if (p.lambda_explicit && j == p.lambda_slot) {
            if (!mag.is_one()) os << mag << "*";
            os << "L";
            need_star = true;
        } else if (!mag.is_one()) {
            os << mag;
            need_star = true;
        }
        for (Index i = 0; i < p.nvars(); ++i) {
            const auto e = p.exponents(i, j);
            if (e == 0) continue;
            if (need_star) os << "*";
            os << p.var_names[static_cast<std::size_t>(i)];
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

ExpVector parse_form(const std::string& text, const std::vector<std::string>& vars) {
    std::map<std::string, Index> table;
    for (std::size_t i = 0; i < vars.size(); ++i) table.emplace(vars[i], static_cast<Index>(i));
    ExpVector beta = ExpVector::Zero(static_cast<Index>(vars.size()));

    Lexer lx(text);
    if (lx.peek().kind == Tok::Number && lx.peek().text == "1") {
        lx.take();
        if (lx.peek().kind != Tok::End) throw SyntaxError("expected end of input after '1'", lx.peek().pos);
        return beta;
    }
    while (true) {
        const Token t = lx.peek();
        if (t.kind != Tok::Ident) throw SyntaxError("expected variable", t.pos);
        lx.take();
        auto it = table.find(t.text);
        if (it == table.end()) throw SyntaxError("unknown variable '" + t.text + "'", t.pos);
        long e = 1;
        if (lx.peek().kind == Tok::Caret) {
            lx.take();
            e = parse_uint(lx, "exponent");
        }
        beta(it->second) += e;
        if (lx.peek().kind == Tok::Star) {
            lx.take();
            continue;
        }
        if (lx.peek().kind == Tok::End) break;
        throw SyntaxError("expected '*' or end of input", lx.peek().pos);
    }
    return beta;
}

std::string render_form(const ExpVector& beta, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool any = false;
    for (Index i = 0; i < beta.size(); ++i) {
        if (beta(i) == 0) continue;
        if (any) os << "*";
        os << vars[static_cast<std::size_t>(i)];
        if (beta(i) > 1) os << "^" << beta(i);
        any = true;
    }
    return any ? os.str() : "1";
}

QPoly parse_bpoly(const std::string& text) {
    Lexer lx(text);
    std::vector<Rational> coeffs;
    auto add = [&coeffs](long power, const Rational& c) {
        if (power >= static_cast<long>(coeffs.size()))
            coeffs.resize(static_cast<std::size_t>(power) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(power)] += c;
    };
    int sign = 1;
    if (lx.peek().kind == Tok::Minus) {
        lx.take();
        sign = -1;
    }
    while (true) {
        const Token t = lx.peek();
        Rational c(1);
        long power = 0;
        bool have_b = false;
        if (t.kind == Tok::Number) {
            c = parse_rational(lx);
            if (lx.peek().kind == Tok::Star) {
                lx.take();
                const Token bt = lx.peek();
                if (bt.kind != Tok::Ident || bt.text != "b")
                    throw SyntaxError("expected 'b'", bt.pos);
                lx.take();
                have_b = true;
            }
        } else if (t.kind == Tok::Ident && t.text == "b") {
            lx.take();
            have_b = true;
        } else {
            throw SyntaxError("expected coefficient or 'b'", t.pos);
        }
        if (have_b) {
            power = 1;
            if (lx.peek().kind == Tok::Caret) {
                lx.take();
                power = parse_uint(lx, "exponent");
            }
        }
        add(power, sign < 0 ? -c : c);
        if (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus) {
            sign = lx.take().kind == Tok::Plus ? 1 : -1;
            continue;
        }
        if (lx.peek().kind == Tok::End) break;
        throw SyntaxError("expected '+', '-' or end of input", lx.peek().pos);
    }
    return QPoly(std::move(coeffs));
}

ABModulePresentation parse_presentation(const std::string& text, Index truncation_order) {
    struct Line {
        std::string body;
        std::size_t offset;
    };
    std::vector<Line> lines;
    std::size_t offset = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string body = raw;
        if (auto hash = body.find('#'); hash != std::string::npos) body.erase(hash);
        bool blank = true;
        for (char ch : body)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (!blank) lines.push_back({body, offset});
        offset += raw.size() + 1;
    }
    if (lines.empty()) throw ParseError("empty presentation", 0);
    const Index k = static_cast<Index>(lines.size());

    ABModulePresentation pres(k, truncation_order);
    for (Index j = 0; j < k; ++j) {
        const Line& line = lines[static_cast<std::size_t>(j)];
        std::vector<std::string> entries;
        std::string cur;
        for (char ch : line.body) {
            if (ch == ',') {
                entries.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        entries.push_back(cur);
        if (static_cast<Index>(entries.size()) != k)
            throw ParseError("line " + std::to_string(j + 1) + " has " +
                                 std::to_string(entries.size()) + " entries, expected " +
                                 std::to_string(k),
                             line.offset);
        for (Index i = 0; i < k; ++i) {
            QPoly p;
            try {
                p = parse_bpoly(entries[static_cast<std::size_t>(i)]);
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(j + 1) + ", entry " + std::to_string(i + 1) +
                                     ": " + e.what(),
                                 line.offset);
            }
            if (p.degree() > static_cast<int>(truncation_order))
                throw ParseError("line " + std::to_string(j + 1) + ", entry " + std::to_string(i + 1) +
                                     " exceeds truncation order " + std::to_string(truncation_order),
                                 line.offset);
            pres.set_entry(i, j, BTruncSeries(p, truncation_order));
        }
    }
    return pres;
}

}  // namespace fresco
