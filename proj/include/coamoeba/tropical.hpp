#pragma once

#include "coamoeba/laurent.hpp"

namespace coamoeba {

struct InitialForm {
    LaurentPolynomial source;
    RatVec weight;
    LaurentPolynomial result;
};

// Terms of in_w f are the argmax of w.alpha over the support (max convention).
InitialForm initial_form(const LaurentPolynomial& f, const RatVec& w);

// --- tie-pattern cell enumeration -------------------------------------------
//
// Shared engine for the archimedean fan (offsets 0, max convention) and the
// nonarchimedean amoeba (valuation offsets, min convention). A cell is the
// set of weights w where, for every listed support, the arg-opt set of
// offset_j + w.exp_j is exactly the given index subset (of size >= 2).

struct WeightedSupport {
    std::vector<Rat> offsets;
    std::vector<ExponentVector> exps;
};

enum class TieSense { Max, Min };

struct TieCell {
    std::vector<std::vector<int>> pattern;  // per support, sorted indices
    int dim = 0;
    AffineSubspace affine_hull;
    VRep closure;
    RatVec interior;
};

std::vector<TieCell> enumerate_tie_cells(const std::vector<WeightedSupport>& sys,
                                         int nvars, TieSense sense);

// --- tropical complexes ------------------------------------------------------

struct TropicalFace {
    int dim = 0;
    AffineSubspace affine_hull;
    std::vector<RatVec> vertices;
    std::vector<IntVec> rays;
    // Per input polynomial, the arg-opt exponent set on this face.
    std::vector<std::vector<ExponentVector>> tie_pattern;
    RatVec interior;
};

struct TropicalComplex {
    int ambient = 0;
    std::vector<TropicalFace> faces;
    // (i, j): face i is a proper face of the closure of face j.
    std::vector<std::pair<int, int>> incidence;

    std::vector<int> maximal_faces() const;
    std::vector<int> minimal_faces() const;
};

// Codimension-one skeleton of the normal fan of the Newton polytope, under
// the max convention, stratified by tie pattern.
TropicalComplex tropical_hypersurface(const LaurentPolynomial& f);

// Tropical prevariety of the circuit completion of an affine-linear system;
// for transverse inputs this is the tropical line (a one-dimensional fan).
TropicalComplex tropical_line(const VarietySpec& spec);

// Supports of the circuits of an affine-linear system over C (minimal
// supports of linear forms in the row space, numeric rank at desk scale).
std::vector<std::vector<ExponentVector>> complex_circuit_supports(
    const VarietySpec& spec);

struct TropicalFanCone {
    Cone cone;
    bool maximal = false;
    std::vector<LaurentPolynomial> initial_system;
    std::vector<std::vector<ExponentVector>> tie_pattern;
    RatVec interior;
};

struct TropicalFan {
    int ambient = 0;
    VarietySpec source;
    std::vector<TropicalFanCone> cones;
    std::vector<std::pair<int, int>> face_relations;

    std::vector<int> maximal_cones() const;
};

TropicalFan tropical_fan(const VarietySpec& spec);

}  // namespace coamoeba
