#pragma once

#include "coamoeba/torus.hpp"
#include "coamoeba/tropical.hpp"

namespace coamoeba {

// Certified sample cloud of a coamoeba: every stored point is the Arg image
// of a witness with |f| < kCloudResidual for all generators.
struct PointCloud {
    int ambient = 0;
    std::vector<std::vector<double>> points;  // turns, each coord in [0,1)
    std::vector<double> log_radius;  // max |log r| over the free parameters
    double resolution = 0.0;         // angular step in turns
    std::string source;

    size_t size() const { return points.size(); }
};

constexpr double kCloudResidual = 1e-9;

struct SampleParams {
    double log_radius = 8.0;   // r in [-R, R]
    int radial_steps = 65;
    int angular_steps = 400;   // 1/400 turn default
    // used instead of the above when there is more than one free parameter
    int multi_radial_steps = 17;
    int multi_angular_steps = 40;
    // solve the system as given even when a common exponent divisor would
    // allow sampling a reduced system and taking argument preimages
    bool no_reduction = false;
};

// Arg images of solution samples over a log-polar grid in the parameter
// domain. Supported classes: hypersurfaces solvable for a distinguished
// variable, and lines (explicit parameterization of the linear system).
PointCloud sample_coamoeba(const VarietySpec& spec, const SampleParams& params);

// Log images (debugging aid for the amoeba-sample subcommand).
std::vector<std::vector<double>> sample_amoeba(const VarietySpec& spec,
                                               const SampleParams& params);

struct ShellCoset {
    AffineSubgroupCoset coset;
    int cone_index = -1;
    std::vector<LaurentPolynomial> initial_system;
};

struct Shell {
    int ambient = 0;
    std::vector<ShellCoset> cosets;
};

// Exact coset list over the maximal cones of the tropical fan. Offsets are
// exact when coefficients carry exact phases; otherwise numeric phases are
// cleaned up to rationals with denominator <= 360 (flagged per offset).
Shell shell(const VarietySpec& spec);
Shell shell(const TropicalFan& fan);

// Arg-image cosets of an all-binomial system; the direction is the rational
// kernel of the exponent differences.
std::vector<AffineSubgroupCoset> binomial_system_cosets(
    const std::vector<LaurentPolynomial>& sys, int ambient);

struct PhaseLimitStratum {
    int cone_index = -1;
    int cone_dim = 0;
    bool exact = false;
    std::vector<AffineSubgroupCoset> cosets;  // exact strata (maximal cones)
    PointCloud cloud;                         // sampled strata
    RationalSubspace invariance;              // <sigma>, the stratum is T_<sigma>-invariant
};

struct PhaseLimitSet {
    int ambient = 0;
    std::vector<PhaseLimitStratum> strata;
};

PhaseLimitSet phase_limit_set(const VarietySpec& spec, const SampleParams& params);

// Implicit periodic lift of a shell.
LiftedArrangement lifted(const Shell& sh, const Box& box);

// Lift of a cloud: points replicated over the lattice offsets meeting box.
std::vector<std::vector<double>> lifted_cloud(const PointCloud& cloud,
                                              const Box& box);

// --- cloud metrics -----------------------------------------------------------

// max over a of min over b of the torus L2 distance (directed Hausdorff).
double directed_hausdorff(const std::vector<std::vector<double>>& a,
                          const std::vector<std::vector<double>>& b);

double torus_dist(const std::vector<double>& a, const std::vector<double>& b);

// Pullback of a variety spec under z -> z^m (exponent vectors scaled by m).
VarietySpec pullback_spec(const VarietySpec& spec, int m);

}  // namespace coamoeba
