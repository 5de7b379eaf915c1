#pragma once

#include <array>
#include <map>

#include "coamoeba/chains.hpp"

namespace coamoeba {

// Brute-force cubical homology oracle over a small box: cells meeting the
// dilated removed set are deleted; the remaining downward-closed complex is
// collapsed by free faces, and integer questions are settled by Smith normal
// form on what survives.
struct CubicalComplex {
    int n = 0;
    std::vector<double> lo, hi;
    std::vector<int> res;           // cells per axis (<= 64)
    double cell = 0.0;              // uniform cell edge length per axis scale
    std::vector<double> step;       // per-axis cell size
    double dilation = 0.0;

    // kept[d] indexed by cell id; ids pack (axis mask, position).
    std::vector<std::vector<char>> kept;

    // collapse log: (dim of sigma, sigma id, tau id), in collapse order
    std::vector<std::array<long long, 3>> collapse_log;
    std::vector<std::vector<char>> kept_after_collapse;

    long long cell_count(int d) const;
    bool in_complex(int d, long long id) const;
};

CubicalComplex rasterize_complement(const std::vector<AffineSubspace>& members,
                                    const std::vector<std::vector<double>>& cloud,
                                    const Box& box, int resolution,
                                    double dilation);

struct BettiNumbers {
    long long components = 0;
    long long b0 = 0;  // reduced
    long long b1 = 0;
};

BettiNumbers betti_numbers(const CubicalComplex& k);

// Snapped integer edge-cycle on the grid; throws MathError on snapping
// failure (cycle within one cell of the removed region or ambiguous).
std::map<long long, Int> snap_cycle(const CubicalComplex& k, const Chain& c);

// True iff the snapped cycle bounds over the integers in the complex.
bool class_is_zero(const CubicalComplex& k, const Chain& cycle);

// Degree-0 query: are the two snapped points connected?
bool class_is_zero_points(const CubicalComplex& k, const RatVec& a,
                          const RatVec& b);

// dim-2 boundary-of-boundary check on sampled kept squares (exact).
bool boundary_squared_is_zero(const CubicalComplex& k);

}  // namespace coamoeba
