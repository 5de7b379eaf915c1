#pragma once

#include "coamoeba/coamoeba.hpp"

namespace coamoeba {

// Finite sums sum c_j t^{gamma_j} with rational exponents, modeling elements
// of the valued field K with residue field C. Terms are sorted by gamma and
// carry nonzero coefficients.
struct PuiseuxTerm {
    Rat gamma;
    ComplexScalar c;
};

struct PuiseuxScalar {
    std::vector<PuiseuxTerm> terms;

    static PuiseuxScalar make(std::vector<PuiseuxTerm> terms);
    static PuiseuxScalar from_complex(const ComplexScalar& c);
    static PuiseuxScalar t_power(const Rat& gamma);  // t^gamma

    bool is_zero() const { return terms.empty(); }

    PuiseuxScalar operator+(const PuiseuxScalar& o) const;
    PuiseuxScalar operator*(const PuiseuxScalar& o) const;
    PuiseuxScalar operator-() const;
};

// nu(a) = smallest exponent; throws MathError on zero (nu(0) = infinity).
Rat valuation(const PuiseuxScalar& a);

// Lowest-order complex coefficient (res of a * t^{-nu(a)}).
ComplexScalar residue(const PuiseuxScalar& a);

struct KLaurentTerm {
    PuiseuxScalar coeff;
    ExponentVector exp;
};

struct KLaurentPolynomial {
    int ambient_dim = 0;
    std::vector<KLaurentTerm> terms;

    static KLaurentPolynomial make(int n, std::vector<KLaurentTerm> terms);
};

struct KVarietySpec {
    int ambient_dim = 0;
    InputClass input_class = InputClass::Line;
    std::vector<KLaurentPolynomial> polynomials;
};

// Residues of the terms minimizing nu(a_alpha) + w.alpha (min convention).
LaurentPolynomial tropical_reduction(const KLaurentPolynomial& f, const RatVec& w);

// Circuits of an affine-K-linear system: minimal supports of row-space
// vectors, with determinantal (division-free) coefficient computation.
struct KCircuit {
    std::vector<ExponentVector> support;
    std::vector<PuiseuxScalar> coeffs;
};
std::vector<KCircuit> k_circuits(const KVarietySpec& spec);

struct NAmoebaComplex {
    int ambient = 0;
    TropicalComplex complex;  // faces carry per-generator reduction supports
    std::vector<std::vector<LaurentPolynomial>> reductions;  // per face
    std::vector<bool> minimal;                               // per face
};

// Nonarchimedean amoeba of a line over K: the 1-dimensional polyhedral
// complex of weights where every circuit's reduction keeps >= 2 terms.
NAmoebaComplex na_amoeba(const KVarietySpec& spec);

struct NACoamoebaStratum {
    int face = -1;
    int face_dim = 0;
    bool minimal_face = false;
    bool exact = false;
    std::vector<AffineSubgroupCoset> cosets;  // binomial reductions
    PointCloud cloud;                         // sampled reductions
};

struct NACoamoeba {
    int ambient = 0;
    std::vector<NACoamoebaStratum> strata;
};

// Union of archimedean coamoebas of the tropical reductions, one stratum per
// face of the nonarchimedean amoeba.
NACoamoeba na_coamoeba(const KVarietySpec& spec, const SampleParams& params);

}  // namespace coamoeba
