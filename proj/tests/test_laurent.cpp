#include <doctest.h>

#include <cmath>
#include <random>

#include "coamoeba/laurent.hpp"

using namespace coamoeba;

TEST_CASE("parse simple polynomials") {
    auto f = parse_polynomial("1 + x1 + x2", 2);
    REQUIRE(f.terms.size() == 3);
    CHECK(f.terms[0].exp == ExponentVector{Int(0), Int(0)});
    CHECK(f.terms[1].exp == ExponentVector{Int(0), Int(1)});
    CHECK(f.terms[2].exp == ExponentVector{Int(1), Int(0)});
    for (const auto& t : f.terms) {
        CHECK(t.coeff.re == doctest::Approx(1.0));
        CHECK(t.coeff.im == doctest::Approx(0.0));
    }
}

TEST_CASE("zeta3 coefficient carries its exact phase") {
    auto f = parse_polynomial("x1 + zeta3*x2", 2);
    REQUIRE(f.terms.size() == 2);
    const auto& zterm = f.terms[0];  // exponent (0,1) sorts first
    CHECK(zterm.exp == ExponentVector{Int(0), Int(1)});
    REQUIRE(zterm.coeff.exact);
    CHECK(zterm.coeff.exact->phase == Rat(1, 3));
    CHECK(zterm.coeff.re == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(zterm.coeff.im == doctest::Approx(0.8660254037844386).epsilon(1e-12));
}

TEST_CASE("cancellation yields the zero-polynomial error") {
    CHECK_THROWS_AS(parse_polynomial("x1 - x1", 1), InputError);
}

TEST_CASE("grammar errors carry positions") {
    CHECK_THROWS_AS(parse_polynomial("x3 + 1", 2), ParseError);   // dim mismatch
    CHECK_THROWS_AS(parse_polynomial("1 + + 2", 1), ParseError);  // syntax
    CHECK_THROWS_AS(parse_polynomial("(1 + x1", 1), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2x1", 1), ParseError);      // implicit product
}

TEST_CASE("letters map to x1..x4") {
    auto f = parse_polynomial("x + y + z + t", 4);
    CHECK(f.terms.size() == 4);
    auto g = parse_polynomial("x*y^2", 2);
    REQUIRE(g.terms.size() == 1);
    CHECK(g.terms[0].exp == ExponentVector{Int(1), Int(2)});
}

TEST_CASE("print-parse is idempotent") {
    for (const char* s :
         {"1 + x1 + x2", "x1 + zeta3*x2", "3/4*x1 - i*x2 + (1+i)",
          "(0.5+0.25*i)*x1^2 + x2^-1", "x1^-3 + 2*x1^2*x2^-1", "zeta3^2*x1 - 1"}) {
        auto f = parse_polynomial(s, 2);
        std::string once = print_polynomial(f);
        auto g = parse_polynomial(once, 2);
        std::string twice = print_polynomial(g);
        CHECK(once == twice);
    }
}

TEST_CASE("evaluate") {
    auto f = parse_polynomial("1 + x1 + x2", 2);
    CHECK(std::abs(evaluate(f, {Cplx(-1, 0), Cplx(0.5, 0)}) - Cplx(0.5, 0)) < 1e-14);

    auto g = parse_polynomial("x1^-1", 1);
    CHECK(std::abs(evaluate(g, {Cplx(2, 0)}) - Cplx(0.5, 0)) < 1e-14);

    // the classical unit-circle zero of 1 + x + y, by direct complex arithmetic
    Cplx w1 = std::polar(1.0, 2 * 3.14159265358979323846 / 3);
    Cplx w2 = std::conj(w1);
    CHECK(std::abs(evaluate(f, {w1, w2})) < 1e-12);

    CHECK_THROWS_AS(evaluate(f, {Cplx(0, 0), Cplx(1, 0)}), MathError);
}

TEST_CASE("evaluate is multiplicative over monomial factors") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ur(-2.0, 2.0);
    std::uniform_int_distribution<int> ue(-2, 2);
    auto f = parse_polynomial("1 + 2*x1 - x2 + x1*x2", 2);
    for (int trial = 0; trial < 50; ++trial) {
        ExponentVector alpha = {Int(ue(rng)), Int(ue(rng))};
        LaurentTerm mono;
        mono.coeff = ComplexScalar::from_rational(Rat(1));
        mono.exp = alpha;
        auto shifted = LaurentPolynomial::make(2, {mono}) * f;
        std::vector<Cplx> p = {Cplx(ur(rng), ur(rng)), Cplx(ur(rng), ur(rng))};
        if (std::abs(p[0]) < 0.1 || std::abs(p[1]) < 0.1) continue;
        Cplx lhs = evaluate(shifted, p);
        Cplx factor = std::pow(p[0], alpha[0].convert_to<int>()) *
                      std::pow(p[1], alpha[1].convert_to<int>());
        Cplx rhs = factor * evaluate(f, p);
        CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("newton polytope") {
    auto f = parse_polynomial("1 + x1 + x2", 2);
    Polytope p = newton_polytope(f);
    CHECK(p.vertices.size() == 3);

    auto g = parse_polynomial("1 + x1 + x1^2", 1);
    Polytope q = newton_polytope(g);
    REQUIRE(q.vertices.size() == 2);
    CHECK(q.vertices[0] == IntVec{Int(0)});
    CHECK(q.vertices[1] == IntVec{Int(2)});

    auto h = parse_polynomial("x1 + x2 + x3 + x1*x2*x3", 3);
    CHECK(newton_polytope(h).vertices.size() == 4);
}

namespace {
// brute-force Minkowski sum oracle on supports
std::vector<IntVec> minkowski_points(const LaurentPolynomial& f,
                                     const LaurentPolynomial& g) {
    std::vector<IntVec> pts;
    for (const auto& a : f.terms)
        for (const auto& b : g.terms) {
            IntVec s(a.exp.size());
            for (size_t i = 0; i < s.size(); ++i) s[i] = a.exp[i] + b.exp[i];
            pts.push_back(s);
        }
    return pts;
}
}  // namespace

TEST_CASE("newton polytope of a product is the Minkowski sum") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> ue(0, 2), uc(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<LaurentTerm> fts, gts;
        for (int i = 0; i < 3; ++i) {
            fts.push_back({ComplexScalar::from_rational(Rat(uc(rng))),
                           {Int(ue(rng)), Int(ue(rng))}});
            gts.push_back({ComplexScalar::from_rational(Rat(uc(rng))),
                           {Int(ue(rng)), Int(ue(rng))}});
        }
        auto f = LaurentPolynomial::make(2, fts);
        auto g = LaurentPolynomial::make(2, gts);
        if (f.is_zero() || g.is_zero()) continue;
        Polytope prod = newton_polytope(f * g);
        Polytope mink = convex_hull(minkowski_points(f, g), 2);
        CHECK(prod.vertices == mink.vertices);
    }
}

TEST_CASE("variety specs validate their class") {
    auto f = parse_polynomial("1 + x1 + x2", 2);
    auto spec = VarietySpec::make(2, InputClass::Hypersurface, {f});
    CHECK(spec.declared_codim == 1);

    auto l1 = parse_polynomial("x1 + x2 + 1", 3);
    auto l2 = parse_polynomial("x1 + x3 + 2", 3);
    auto line = VarietySpec::make(3, InputClass::Line, {l1, l2});
    CHECK(line.declared_codim == 2);

    CHECK_THROWS_AS(VarietySpec::make(3, InputClass::Line, {l1}), InputError);
    auto q = parse_polynomial("x1^2 + x2 + 1", 3);
    CHECK_THROWS_AS(VarietySpec::make(3, InputClass::Line, {q, l2}), InputError);
}
