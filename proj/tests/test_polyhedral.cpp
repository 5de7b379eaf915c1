#include <doctest.h>

#include <random>

#include "coamoeba/polyhedral.hpp"

using namespace coamoeba;

namespace {
RatVec rv(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}
}  // namespace

TEST_CASE("subspace canonical form and operations") {
    auto s1 = RationalSubspace::span_of(3, {rv({1, 1, 0}), rv({0, 0, 1})});
    auto s2 = RationalSubspace::span_of(3, {rv({2, 2, 2}), rv({0, 0, 5})});
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(s1.contains(rv({3, 3, 7})));
    CHECK_FALSE(s1.contains(rv({1, 0, 0})));

    auto comp = s1.orthogonal_complement();
    CHECK(comp.dim() == 1);
    CHECK(comp.contains(rv({1, -1, 0})));

    auto inter = s1.intersect(RationalSubspace::span_of(3, {rv({0, 0, 1})}));
    CHECK(inter.dim() == 1);
    CHECK(inter.contains(rv({0, 0, 2})));
}

TEST_CASE("affine subspace canonicalization") {
    // same line through different basepoints
    AffineSubspace a(rv({0, 1}), RationalSubspace::span_of(2, {rv({1, 0})}));
    AffineSubspace b(rv({5, 1}), RationalSubspace::span_of(2, {rv({1, 0})}));
    CHECK(a == b);
    CHECK(a.point == rv({0, 1}));
    CHECK(a.contains(rv({-7, 1})));
    CHECK_FALSE(a.contains(rv({0, 0})));
}

TEST_CASE("intersect_affine examples") {
    auto line_dir = RationalSubspace::span_of(2, {rv({1, 0})});
    AffineSubspace l1(rv({0, 0}), line_dir);
    AffineSubspace l2(rv({0, 1}), line_dir);
    CHECK_FALSE(intersect_affine(l1, l2));  // parallel

    // plane z=0 in R^3 meets the diagonal line in the origin
    AffineSubspace plane(rv({0, 0, 0}),
                         RationalSubspace::span_of(3, {rv({1, 0, 0}), rv({0, 1, 0})}));
    AffineSubspace diag(rv({0, 0, 0}), RationalSubspace::span_of(3, {rv({1, 1, 1})}));
    auto pt = intersect_affine(plane, diag);
    REQUIRE(pt);
    CHECK(pt->dim() == 0);
    CHECK(pt->point == rv({0, 0, 0}));

    // {x=1/2} cap {y=x+1/2} -> (1/2, 1)
    AffineSubspace v(RatVec{Rat(1, 2), Rat(0)},
                     RationalSubspace::span_of(2, {rv({0, 1})}));
    AffineSubspace w(RatVec{Rat(0), Rat(1, 2)},
                     RationalSubspace::span_of(2, {rv({1, 1})}));
    auto p = intersect_affine(v, w);
    REQUIRE(p);
    CHECK(p->dim() == 0);
    CHECK(p->point == RatVec{Rat(1, 2), Rat(1)});
}

TEST_CASE("intersect_affine is symmetric on canonical forms") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        RatVec p1 = rv({d(rng), d(rng), d(rng)});
        RatVec p2 = rv({d(rng), d(rng), d(rng)});
        RatMat b1 = {rv({d(rng), d(rng), d(rng)})};
        RatMat b2 = {rv({d(rng), d(rng), d(rng)}), rv({d(rng), d(rng), d(rng)})};
        if (is_zero(b1[0])) continue;
        AffineSubspace a(p1, RationalSubspace::span_of(3, b1));
        AffineSubspace b(p2, RationalSubspace::span_of(3, b2));
        auto ab = intersect_affine(a, b);
        auto ba = intersect_affine(b, a);
        CHECK(static_cast<bool>(ab) == static_cast<bool>(ba));
        if (ab && ba) CHECK(ab->key() == ba->key());
    }
}

TEST_CASE("equal affine subspaces have identical keys") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        RatVec p = rv({d(rng), d(rng), d(rng)});
        RatVec dir = rv({d(rng), d(rng), d(rng)});
        if (is_zero(dir)) continue;
        AffineSubspace a(p, RationalSubspace::span_of(3, {dir}));
        // same subspace presented with a shifted basepoint and scaled basis
        RatVec p2 = vec_add(p, vec_scale(Rat(d(rng)), dir));
        RatVec dir2 = vec_scale(Rat(-3), dir);
        AffineSubspace b(p2, RationalSubspace::span_of(3, {dir2}));
        CHECK(a == b);
        CHECK(a.key() == b.key());
    }
}

TEST_CASE("fourier-motzkin feasibility") {
    // x >= 0, y >= 0, x + y <= 1 is feasible; adding x + y >= 2 is not
    std::vector<LinearConstraint> cons;
    cons.push_back({rv({-1, 0}), Rat(0), Rel::Le});
    cons.push_back({rv({0, -1}), Rat(0), Rel::Le});
    cons.push_back({rv({1, 1}), Rat(1), Rel::Le});
    CHECK(fm_feasible(cons, 2));
    cons.push_back({rv({-1, -1}), Rat(-2), Rel::Le});
    CHECK_FALSE(fm_feasible(cons, 2));

    // strict infeasibility: x > 0 and x < 0
    std::vector<LinearConstraint> strict;
    strict.push_back({rv({-1}), Rat(0), Rel::Lt});
    strict.push_back({rv({1}), Rat(0), Rel::Lt});
    CHECK_FALSE(fm_feasible(strict, 1));

    // x >= 0 and x <= 0 feasible (x = 0), but not with strictness
    std::vector<LinearConstraint> tight;
    tight.push_back({rv({-1}), Rat(0), Rel::Le});
    tight.push_back({rv({1}), Rat(0), Rel::Le});
    CHECK(fm_feasible(tight, 1));
    tight[0].rel = Rel::Lt;
    CHECK_FALSE(fm_feasible(tight, 1));
}

TEST_CASE("cone membership classification") {
    Cone q = Cone::from_rays(2, {{Int(1), Int(0)}, {Int(0), Int(1)}});
    CHECK(q.membership(rv({1, 1})) == ConeRegion::Interior);
    CHECK(q.membership(rv({1, 0})) == ConeRegion::Boundary);
    CHECK(q.membership(rv({-1, 0})) == ConeRegion::Outside);
    CHECK(q.membership(rv({0, 0})) == ConeRegion::Boundary);

    // a full line as a cone
    Cone l = Cone::from_rays(2, {{Int(1), Int(1)}, {Int(-1), Int(-1)}});
    CHECK(l.membership(rv({2, 2})) == ConeRegion::Interior);
    CHECK(l.membership(rv({-3, -3})) == ConeRegion::Interior);
    CHECK(l.membership(rv({1, 0})) == ConeRegion::Outside);
}

TEST_CASE("v-representation of simple polyhedra") {
    // quadrant: x,y >= 0
    std::vector<LinearConstraint> quad;
    quad.push_back({rv({-1, 0}), Rat(0), Rel::Le});
    quad.push_back({rv({0, -1}), Rat(0), Rel::Le});
    VRep v = v_representation(quad, 2);
    REQUIRE(v.points.size() == 1);
    CHECK(v.points[0] == rv({0, 0}));
    CHECK(v.rays.size() == 2);

    // line {x = y} in the plane: lineality
    std::vector<LinearConstraint> line;
    line.push_back({rv({1, -1}), Rat(0), Rel::Eq});
    VRep lv = v_representation(line, 2);
    REQUIRE(lv.points.size() == 1);
    CHECK(lv.points[0] == rv({0, 0}));
    CHECK(lv.rays.size() == 2);  // +/- direction

    // bounded segment x in [1/2, 2] on the x-axis
    std::vector<LinearConstraint> seg;
    seg.push_back({rv({0, 1}), Rat(0), Rel::Eq});
    seg.push_back({RatVec{Rat(1), Rat(0)}, Rat(2), Rel::Le});
    seg.push_back({RatVec{Rat(-1), Rat(0)}, Rat(-1, 2), Rel::Le});
    VRep sv = v_representation(seg, 2);
    CHECK(sv.points.size() == 2);
    CHECK(sv.rays.empty());
}

TEST_CASE("convex hull of lattice points") {
    // triangle
    Polytope t = convex_hull({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}}, 2);
    CHECK(t.dim == 2);
    CHECK(t.vertices.size() == 3);
    CHECK(t.facet_normals.size() == 3);

    // segment with an interior lattice point
    Polytope s = convex_hull({{Int(0)}, {Int(1)}, {Int(2)}}, 1);
    CHECK(s.dim == 1);
    REQUIRE(s.vertices.size() == 2);
    CHECK(s.vertices[0] == IntVec{Int(0)});
    CHECK(s.vertices[1] == IntVec{Int(2)});

    // tetrahedron from the 3-dim example
    Polytope tet = convex_hull({{Int(1), Int(0), Int(0)},
                                {Int(0), Int(1), Int(0)},
                                {Int(0), Int(0), Int(1)},
                                {Int(1), Int(1), Int(1)}},
                               3);
    CHECK(tet.dim == 3);
    CHECK(tet.vertices.size() == 4);
    CHECK(tet.facet_normals.size() == 4);

    // square with center: center is not a vertex
    Polytope sq = convex_hull({{Int(0), Int(0)},
                               {Int(2), Int(0)},
                               {Int(0), Int(2)},
                               {Int(2), Int(2)},
                               {Int(1), Int(1)}},
                              2);
    CHECK(sq.vertices.size() == 4);
}
