#pragma once

#include "coamoeba/polyhedral.hpp"

namespace coamoeba {

using IntMat = std::vector<IntVec>;

// Canonical row-style Hermite normal form of the lattice spanned by the rows:
// pivots positive, entries above a pivot reduced into [0, pivot). Zero rows
// dropped.
IntMat hermite_normal_form(IntMat a);

// Basis rows of the integer kernel {m in Z^n : a m = 0}. Integer kernels are
// saturated, so this is the canonical character lattice of a rational
// subspace when a's rows span it.
IntMat integer_kernel(const IntMat& a, int ncols);

// Smith normal form d = u a v with u, v unimodular; d diagonal with
// d_1 | d_2 | ... Returns the elementary divisors and the transforms.
struct SmithForm {
    IntMat d, u, v;
};
SmithForm smith_normal_form(IntMat a);

struct TorusPoint {
    std::vector<double> coords;     // each in [0,1)
    std::optional<RatVec> exact;    // rational-backed points carry the lift

    static TorusPoint from_doubles(std::vector<double> c);
    static TorusPoint from_rationals(const RatVec& c);
    int dim() const { return static_cast<int>(coords.size()); }
};

// Coset a*T_N of a connected subgroup of T^n, canonically encoded by the
// saturated character lattice M = N^perp cap Z^n (HNF rows A) and the offsets
// c = A a mod 1. Two cosets are equal iff these agree.
struct AffineSubgroupCoset {
    int ambient = 0;
    IntMat lattice;                 // HNF rows of M; the coset is {A theta = c mod 1}
    RatVec offsets;                 // in [0,1), one per lattice row
    std::vector<bool> offset_exact; // false when an offset came from cleanup fallback
    RationalSubspace direction;     // N = ker(A)

    static AffineSubgroupCoset make(const RationalSubspace& direction,
                                    const RatVec& offset_point,
                                    const std::vector<bool>* exact_flags = nullptr);

    int dim() const { return direction.dim(); }
    bool operator==(const AffineSubgroupCoset& o) const;
    std::string key() const;

    bool contains(const RatVec& theta) const;  // mod 1
    // Euclidean distance on the torus from theta (doubles) to the coset.
    double distance(const std::vector<double>& theta) const;
};

struct Box {
    RatVec lo, hi;
    int dim() const { return static_cast<int>(lo.size()); }
};

struct LiftedArrangement {
    int ambient = 0;
    std::vector<AffineSubgroupCoset> members;
    Box box;
};

// The Z^n-translate lifts of each member meeting the closed box, in a
// deterministic order.
std::vector<AffineSubspace> enumerate_in_box(const LiftedArrangement& arr,
                                             const Box& box);

// Pullback of the coset under theta -> m*theta: the m^rows cosets with
// offsets (c+k)/m on the same lattice.
std::vector<AffineSubgroupCoset> cover_pullback(const AffineSubgroupCoset& c,
                                                int m);

// Preimages of a torus point under multiplication by m.
std::vector<TorusPoint> cover_pullback(const TorusPoint& p, int m);

// Pushforward theta -> m*theta mod 1.
TorusPoint cover_pushforward(const TorusPoint& p, int m);

}  // namespace coamoeba
