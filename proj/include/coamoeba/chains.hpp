#pragma once

#include <cstdint>
#include <map>

#include "coamoeba/torus.hpp"

namespace coamoeba {

// Whitney polyhedral chains of degree <= 2 with rational vertices. The
// canonical form subdivides overlapping simplices within a common affine
// carrier to the refinement cut by all simplex edges, sums coefficients, and
// drops zero pieces; two chains are geometrically equal iff their difference
// canonicalizes to zero.

struct Simplex {
    std::vector<RatVec> v;  // degree+1 vertices
    int degree() const { return static_cast<int>(v.size()) - 1; }
};

struct ChainTerm {
    Int coeff;
    Simplex s;
};

struct Chain {
    int degree = 0;
    int ambient = 0;
    std::vector<ChainTerm> terms;  // canonical

    static Chain make(int degree, int ambient, std::vector<ChainTerm> terms);
    bool is_zero() const { return terms.empty(); }
    Chain operator+(const Chain& o) const;
    Chain scaled(const Int& c) const;
};

bool chains_equal(const Chain& a, const Chain& b);

Chain boundary(const Chain& c);

// For degree >= 1 this tests boundary(c) == 0; for degree 0 the reduced-cycle
// condition (coefficients sum to zero).
bool boundary_is_zero(const Chain& c);

// Canonical support: points / merged segments per line / cells per plane.
struct SupportSet {
    int degree = 0;
    std::map<std::string, std::vector<std::vector<RatVec>>> cells;
    bool operator==(const SupportSet& o) const {
        return degree == o.degree && cells == o.cells;
    }
};

SupportSet support(const Chain& c);
SupportSet support_union(const SupportSet& a, const SupportSet& b);
bool support_contains_point(const Chain& c, const RatVec& p);
bool support_meets_affine(const Chain& c, const AffineSubspace& m);

// lambda = lambda_plus - lambda_minus on a common oriented carrier; both
// parts are positive chains with supports meeting in dimension < degree.
std::pair<Chain, Chain> pm_decompose(const Chain& c);

// The unique (k+1)-chain in the (k+1)-plane bounding a k-cycle (cone over a
// generic rational base point, canonicalized).
Chain bounding_chain(const Chain& cycle, const AffineSubspace& plane);

// Signed intersection count of a cone bounding chain with an affine subspace
// of codimension degree+1. Positive when the oriented cone simplex followed
// by the canonical direction basis of m is positively oriented.
Int linking_number(const Chain& cycle, const AffineSubspace& m);

struct ConvexityCertificate {
    Chain cycle;
    Chain bounding;
    std::vector<std::pair<int, Int>> witnesses;  // (member index, linking)
    bool oracle_confirmed = false;
};

struct Counterexample {
    Chain cycle;
    std::string note;
};

struct CertifyOutcome {
    AffineSubspace plane;           // possibly perturbed
    bool plane_perturbed = false;
    std::vector<AffineSubspace> members;
    std::vector<ConvexityCertificate> certificates;
    std::vector<Counterexample> counterexamples;
    int trials = 0;
    int trivial_trials = 0;
    int oracle_escalations = 0;
};

struct CertifyParams {
    int trials = 100;
    std::uint64_t seed = 42;
    int oracle_resolution = 40;
    double oracle_dilation = 0.0;  // 0: one cell diagonal
};

CertifyOutcome certify_k_convexity(const std::vector<AffineSubspace>& members,
                                   const AffineSubspace& plane, int k,
                                   const CertifyParams& params, const Box& box);

CertifyOutcome certify_k_convexity(const LiftedArrangement& arr,
                                   const AffineSubspace& plane, int k,
                                   const CertifyParams& params);

// Runs the certificate workflow on the union of two arrangements.
CertifyOutcome intersect_convexity(const LiftedArrangement& a,
                                    const LiftedArrangement& b,
                                    const AffineSubspace& plane, int k,
                                    const CertifyParams& params);

}  // namespace coamoeba
