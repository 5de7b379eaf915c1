#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coamoeba/linalg.hpp"

namespace coamoeba {

// A rational linear subspace of R^n in canonical form: the basis rows are in
// reduced row echelon form, so equal subspaces have byte-identical
// representations.
struct RationalSubspace {
    int ambient = 0;
    RatMat basis;  // RREF rows, linearly independent

    RationalSubspace() = default;
    static RationalSubspace span_of(int ambient, const RatMat& spanning);
    static RationalSubspace zero(int ambient);
    static RationalSubspace full(int ambient);

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const RatVec& v) const;
    bool operator==(const RationalSubspace& o) const;

    RationalSubspace orthogonal_complement() const;
    RationalSubspace sum(const RationalSubspace& o) const;
    RationalSubspace intersect(const RationalSubspace& o) const;

    // Orthogonal projection of v onto the subspace (exact Gram solve).
    RatVec project(const RatVec& v) const;

    std::string key() const;
};

// Affine subspace with canonical representation: the basepoint is the unique
// point of the subspace orthogonal to the direction space.
struct AffineSubspace {
    RatVec point;
    RationalSubspace direction;

    AffineSubspace() = default;
    AffineSubspace(RatVec p, RationalSubspace dir);

    int ambient() const { return direction.ambient; }
    int dim() const { return direction.dim(); }
    int codim() const { return direction.ambient - direction.dim(); }
    bool contains(const RatVec& v) const;
    bool operator==(const AffineSubspace& o) const;

    // Equation form: rows a with a.x = b, where the rows are the canonical
    // basis of the orthogonal complement of the direction.
    void equations(RatMat& rows, RatVec& rhs) const;

    std::string key() const;
};

std::optional<AffineSubspace> intersect_affine(const AffineSubspace& a,
                                               const AffineSubspace& b);

// Linear constraint a.x (rel) b.
enum class Rel { Eq, Le, Lt };

struct LinearConstraint {
    RatVec a;
    Rat b;
    Rel rel = Rel::Le;
};

// Exact Fourier-Motzkin feasibility over Q, with strict/non-strict tracking.
bool fm_feasible(std::vector<LinearConstraint> cons, int nvars);

// V-representation of the closed polyhedron {x : eqs hold, ineqs with <=}.
// points/rays are canononically sorted; lineality directions appear as +/-
// ray pairs. Assumes the polyhedron is nonempty.
struct VRep {
    std::vector<RatVec> points;
    std::vector<IntVec> rays;

    // A relative-interior point: centroid of points plus the sum of rays.
    RatVec interior_point() const;
};

VRep v_representation(const std::vector<LinearConstraint>& cons, int nvars);

// Facet description of a lattice polytope given by its points: outer facet
// normals are primitive integer vectors with hull <= offset.
struct Polytope {
    int ambient = 0;
    std::vector<IntVec> vertices;       // extreme points, sorted
    std::vector<IntVec> facet_normals;  // primitive, outer
    std::vector<Rat> facet_offsets;     // normal . x <= offset on the hull
    int dim = 0;
};

Polytope convex_hull(const std::vector<IntVec>& points, int ambient);

enum class ConeRegion { Interior, Boundary, Outside };

// Polyhedral cone spanned by integer rays. Rays are primitive and extreme;
// linear subspaces are represented by +/- ray pairs.
struct Cone {
    std::vector<IntVec> rays;
    RationalSubspace span;

    static Cone from_rays(int ambient, const std::vector<IntVec>& rays);
    int dim() const { return span.dim(); }
    ConeRegion membership(const RatVec& v) const;
};

struct Fan {
    int ambient = 0;
    std::vector<Cone> cones;
    // (i, j) with cone i a proper face of cone j.
    std::vector<std::pair<int, int>> face_relations;
};

}  // namespace coamoeba
