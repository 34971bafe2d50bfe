#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace fresco;
using testutil::Q;
using testutil::evec;

TEST_CASE("parse_poly: the 4.3.1 polynomial") {
    const MonomialPoly p = parse_poly({"x^5 + y^5 + z^5 + L*x*y*z^2", {"x", "y", "z"}});
    REQUIRE(p.nvars() == 3);
    REQUIRE(p.nmono() == 4);
    CHECK(p.exponents.col(0) == evec({5, 0, 0}));
    CHECK(p.exponents.col(1) == evec({0, 5, 0}));
    CHECK(p.exponents.col(2) == evec({0, 0, 5}));
    CHECK(p.exponents.col(3) == evec({1, 1, 2}));
    CHECK(p.lambda_slot == 3);
    CHECK(p.lambda_explicit);
    CHECK(p.coefficients == std::vector<Rational>{Q("1"), Q("1"), Q("1"), Q("1")});
}

TEST_CASE("parse_poly: the 4.3.4 polynomial") {
    const MonomialPoly p =
        parse_poly({"x*y^2 + x^2*y + z*t^3 + t*z^3 + L*x*y*z*t", {"x", "y", "z", "t"}});
    REQUIRE(p.nmono() == 5);
    CHECK(p.exponents.col(0) == evec({1, 2, 0, 0}));
    CHECK(p.exponents.col(3) == evec({0, 0, 3, 1}));
    CHECK(p.exponents.col(4) == evec({1, 1, 1, 1}));
    CHECK(p.lambda_slot == 4);
}

TEST_CASE("parse_poly: arity errors") {
    CHECK_THROWS_AS(parse_poly({"x^5 + y^5 + z^5", {"x", "y", "z"}}), ArityError);
    CHECK_THROWS_AS(parse_poly({"x + y", {"x", "y", "z"}}), ArityError);
}

TEST_CASE("parse_poly: lambda handling") {
    // no explicit L: the last monomial is designated
    const MonomialPoly p = parse_poly({"x^2 + y^2 + 3*x*y", {"x", "y"}});
    CHECK(p.lambda_slot == 2);
    CHECK(!p.lambda_explicit);
    CHECK(p.coefficients[2] == Q("3"));

    // explicit L moves to the last slot
    const MonomialPoly q = parse_poly({"L*x*y + x^2 + y^2", {"x", "y"}});
    CHECK(q.lambda_explicit);
    CHECK(q.exponents.col(2) == evec({1, 1}));
    CHECK(q.exponents.col(0) == evec({2, 0}));

    // 'lambda' spelling, with a numeric stand-in
    const MonomialPoly r = parse_poly({"x^2 + y^2 + 5/2*lambda*x*y", {"x", "y"}});
    CHECK(r.lambda_explicit);
    CHECK(r.coefficients[2] == Q("5/2"));

    // L^1 allowed, L^2 not, two L-monomials not
    CHECK_NOTHROW(parse_poly({"x^2 + y^2 + L^1*x*y", {"x", "y"}}));
    CHECK_THROWS_AS(parse_poly({"x^2 + y^2 + L^2*x*y", {"x", "y"}}), SyntaxError);
    CHECK_THROWS_AS(parse_poly({"L*x^2 + y^2 + L*x*y", {"x", "y"}}), SyntaxError);
}

TEST_CASE("parse_poly: duplicate monomials and zero coefficients") {
    CHECK_THROWS_AS(parse_poly({"x*y + x*y + y^2", {"x", "y"}}), DuplicateMonomialError);
    CHECK_THROWS_AS(parse_poly({"0*x + y + x*y", {"x", "y"}}), ZeroCoefficientError);
}

TEST_CASE("parse_poly: syntax errors carry positions") {
    try {
        parse_poly({"x^5 + + y^5", {"x", "y"}});
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 6);
    }
    try {
        parse_poly({"x^5 + y$", {"x", "y"}});
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 7);
    }
    // implicit multiplication is rejected
    CHECK_THROWS_AS(parse_poly({"2x + y + x*y", {"x", "y"}}), SyntaxError);
    // unknown variable
    CHECK_THROWS_AS(parse_poly({"x + w + x*w", {"x", "y"}}), SyntaxError);
    // coefficient after variable
    CHECK_THROWS_AS(parse_poly({"x*2 + y + x*y", {"x", "y"}}), SyntaxError);
}

TEST_CASE("parse_poly: signs and rational coefficients") {
    const MonomialPoly p = parse_poly({"-x^2 + 3/4*y^2 - 2*x*y", {"x", "y"}});
    CHECK(p.coefficients[0] == Q("-1"));
    CHECK(p.coefficients[1] == Q("3/4"));
    CHECK(p.coefficients[2] == Q("-2"));
}

TEST_CASE("parse_poly: indexed variables when no alphabet is declared") {
    const MonomialPoly p = parse_poly({"x0^2 + x1^3 + L*x0*x1", {}});
    CHECK(p.nvars() == 2);
    CHECK(p.var_names == std::vector<std::string>{"x0", "x1"});
    CHECK(p.exponents.col(2) == evec({1, 1}));
    CHECK_THROWS_AS(parse_poly({"u^2 + v^3 + u*v", {}}), SyntaxError);
}

TEST_CASE("render/parse round trip on a corpus") {
    const std::vector<SourcePoly> corpus = {
        {"x^5 + y^5 + z^5 + L*x*y*z^2", {"x", "y", "z"}},
        {"x*y^3 + y*z^3 + z*x^3 + L*x*y*z", {"x", "y", "z"}},
        {"x*y^2*z^3 + y*z^2*t^3 + z*t^2*x^3 + t*x^2*y^3 + L*x*y*z*t", {"x", "y", "z", "t"}},
        {"x*y^2 + x^2*y + z*t^3 + t*z^3 + L*x*y*z*t", {"x", "y", "z", "t"}},
        {"-x^2 + 3/4*y^2 - 2*x*y", {"x", "y"}},
        {"x^2 + y^2 + 5/2*L*x*y", {"x", "y"}},
        {"-7/3*L*x*y + x^2 + y^2", {"x", "y"}},
        {"x0^2 + x1^3 + L*x0*x1", {}},
    };
    for (const SourcePoly& src : corpus) {
        const MonomialPoly once = parse_poly(src);
        const std::string rendered = render_poly(once);
        const MonomialPoly twice = parse_poly({rendered, once.var_names});
        CHECK(once == twice);
        CHECK(render_poly(twice) == rendered);
    }
}

TEST_CASE("parse_form examples") {
    const std::vector<std::string> vars{"x", "y", "z"};
    CHECK(parse_form("1", vars) == evec({0, 0, 0}));
    CHECK(parse_form("z", vars) == evec({0, 0, 1}));
    CHECK(parse_form("x*y*z", vars) == evec({1, 1, 1}));
    CHECK(parse_form("x^7", vars) == evec({7, 0, 0}));
    CHECK(parse_form(" x ^ 2 * z", vars) == evec({2, 0, 1}));
    CHECK_THROWS_AS(parse_form("w", vars), SyntaxError);
    CHECK_THROWS_AS(parse_form("x + y", vars), SyntaxError);
    CHECK(render_form(evec({0, 0, 0}), vars) == "1");
    CHECK(render_form(evec({2, 0, 1}), vars) == "x^2*z");
}

TEST_CASE("parse is total on fuzzed inputs") {
    std::mt19937 gen(20240809);
    const std::string alphabet = "xyzLt^*+-/ 0123456789()#,.bq$\\\"\n";
    for (int i = 0; i < 600; ++i) {
        std::string s;
        const int len = static_cast<int>(gen() % 40);
        for (int k = 0; k < len; ++k) s.push_back(alphabet[gen() % alphabet.size()]);
        try {
            parse_poly({s, {"x", "y", "z"}});
        } catch (const ParseError&) {
        }
        try {
            parse_form(s, {"x", "y", "z"});
        } catch (const ParseError&) {
        }
        try {
            parse_bpoly(s);
        } catch (const ParseError&) {
        }
    }
    // raw bytes, not just alphabet soup
    for (int i = 0; i < 300; ++i) {
        std::string s;
        const int len = static_cast<int>(gen() % 24);
        for (int k = 0; k < len; ++k) s.push_back(static_cast<char>(gen() % 256));
        try {
            parse_poly({s, {"x", "y"}});
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("parse_bpoly") {
    CHECK(parse_bpoly("b") == QPoly({Q("0"), Q("1")}));
    CHECK(parse_bpoly("-b") == QPoly({Q("0"), Q("-1")}));
    CHECK(parse_bpoly("0") == QPoly::zero());
    CHECK(parse_bpoly("1 + 2*b^2 - 3/2*b") == QPoly({Q("1"), Q("-3/2"), Q("2")}));
    CHECK(parse_bpoly("b + b") == QPoly({Q("0"), Q("2")}));
    CHECK_THROWS_AS(parse_bpoly("a"), SyntaxError);
    CHECK_THROWS_AS(parse_bpoly(""), SyntaxError);
}

TEST_CASE("parse_presentation") {
    const ABModulePresentation pres = parse_presentation("b, 0\n-b, b\n", 8);
    CHECK(pres.rank() == 2);
    CHECK(pres.entry(0, 0) == BTruncSeries(parse_bpoly("b"), 8));
    CHECK(pres.entry(0, 1) == BTruncSeries(parse_bpoly("-b"), 8));
    CHECK(pres.entry(1, 0).is_zero());

    // comments and blank lines
    const ABModulePresentation with_comments =
        parse_presentation("# title\n\nb, 0 # inline\n-b, b\n", 8);
    CHECK(with_comments.entry(0, 1) == BTruncSeries(parse_bpoly("-b"), 8));

    CHECK_THROWS_AS(parse_presentation("b, 0\n-b\n", 8), ParseError);
    CHECK_THROWS_AS(parse_presentation("", 8), ParseError);
    CHECK_THROWS_AS(parse_presentation("b^9\n", 8), ParseError);
}
