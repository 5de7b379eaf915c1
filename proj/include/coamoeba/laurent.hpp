#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "coamoeba/polyhedral.hpp"

namespace coamoeba {

using Cplx = std::complex<double>;

// Exact polar form r * e^{2*pi*i*p/q} with rational modulus and phase.
struct ExactPolar {
    Rat modulus;  // >= 0
    Rat phase;    // reduced into [0,1)
};

// Complex coefficient: always carries a double value, plus an exact polar
// annotation when it was built from exact tokens and survived arithmetic.
struct ComplexScalar {
    double re = 0.0;
    double im = 0.0;
    std::optional<ExactPolar> exact;

    static ComplexScalar from_exact(const Rat& modulus, const Rat& phase);
    static ComplexScalar from_double(double re, double im);
    static ComplexScalar from_rational(const Rat& r);

    Cplx value() const { return {re, im}; }
    double abs() const { return std::hypot(re, im); }

    ComplexScalar operator*(const ComplexScalar& o) const;
    ComplexScalar operator+(const ComplexScalar& o) const;
    ComplexScalar operator-() const;
    ComplexScalar pow(long long e) const;
    ComplexScalar reciprocal() const;
};

using ExponentVector = IntVec;

struct LaurentTerm {
    ComplexScalar coeff;
    ExponentVector exp;
};

// Canonical form: distinct exponents, no (numerically) zero coefficients,
// terms sorted lexicographically by exponent.
struct LaurentPolynomial {
    int ambient_dim = 0;
    std::vector<LaurentTerm> terms;

    static LaurentPolynomial make(int n, std::vector<LaurentTerm> terms);

    bool is_zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;

    std::vector<ExponentVector> support() const;
    std::string str() const;
};

constexpr double kCoeffZeroTol = 1e-14;

// Parses the expression grammar over variables x1..xn (letters x,y,z,t map
// to x1..x4), constants i and zeta3, decimal/rational literals.
LaurentPolynomial parse_polynomial(const std::string& text, int ambient_dim);

// Prints a parseable canonical form; print . parse is idempotent.
std::string print_polynomial(const LaurentPolynomial& f);

Cplx evaluate(const LaurentPolynomial& f, const std::vector<Cplx>& point);

Polytope newton_polytope(const LaurentPolynomial& f);

enum class InputClass { Hypersurface, Line, CompleteIntersection };

struct VarietySpec {
    int ambient_dim = 0;
    InputClass input_class = InputClass::Hypersurface;
    int declared_codim = 1;
    std::vector<LaurentPolynomial> polynomials;

    static VarietySpec make(int n, InputClass cls,
                            std::vector<LaurentPolynomial> polys);
};

// True if every exponent vector is 0 or a standard basis vector.
bool is_affine_linear(const LaurentPolynomial& f);

std::string input_class_str(InputClass c);
InputClass input_class_from_str(const std::string& s);

}  // namespace coamoeba
