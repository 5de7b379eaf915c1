#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coamoeba/tropical.hpp"

using namespace coamoeba;

namespace {

RatVec rv(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

std::set<std::vector<long long>> ray_set(const TropicalComplex& t) {
    std::set<std::vector<long long>> rays;
    for (const auto& f : t.faces)
        for (const auto& r : f.rays) {
            std::vector<long long> v;
            for (const auto& x : r) v.push_back(x.convert_to<long long>());
            rays.insert(v);
        }
    return rays;
}

// random rational point in the relative interior of a face
RatVec relint_point(const TropicalFace& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9);
    const int n = static_cast<int>(f.interior.size());
    RatVec p(n, Rat(0));
    Rat total = 0;
    for (const auto& v : f.vertices) {
        Rat w = Rat(num(rng), 10);
        total += w;
        for (int i = 0; i < n; ++i) p[i] += w * v[i];
    }
    for (int i = 0; i < n; ++i) p[i] /= total;
    for (const auto& r : f.rays) {
        Rat w = Rat(num(rng), 7);
        for (int i = 0; i < n; ++i) p[i] += w * Rat(r[i]);
    }
    return p;
}

}  // namespace

TEST_CASE("initial forms") {
    auto f = parse_polynomial("1 + x1 + x2", 2);
    CHECK(initial_form(f, rv({1, 0})).result.support() ==
          std::vector<ExponentVector>{{Int(1), Int(0)}});
    auto tie = initial_form(f, rv({1, 1})).result.support();
    CHECK(tie == std::vector<ExponentVector>{{Int(0), Int(1)}, {Int(1), Int(0)}});
    CHECK(initial_form(f, rv({0, 0})).result.terms.size() == 3);
}

TEST_CASE("tropical hypersurface of the line 1+x+y") {
    auto f = parse_polynomial("1 + x1 + x2", 2);
    TropicalComplex t = tropical_hypersurface(f);
    REQUIRE(t.faces.size() == 4);
    CHECK(t.faces[0].dim == 0);  // the vertex, full tie
    CHECK(t.faces[0].vertices == std::vector<RatVec>{rv({0, 0})});
    CHECK(t.faces[0].tie_pattern[0].size() == 3);
    auto rays = ray_set(t);
    CHECK(rays.count({1, 1}));
    CHECK(rays.count({-1, 0}));
    CHECK(rays.count({0, -1}));
    CHECK(rays.size() == 3);

    // tie patterns on the rays
    for (size_t i = 1; i < t.faces.size(); ++i) {
        CHECK(t.faces[i].dim == 1);
        CHECK(t.faces[i].tie_pattern[0].size() == 2);
    }
    // incidence: the vertex is a face of each ray
    CHECK(t.incidence.size() == 3);
    for (auto [a, b] : t.incidence) CHECK(a == 0);
}

TEST_CASE("binomial tropical hypersurface is a full hyperplane") {
    auto f = parse_polynomial("x1 - x2", 2);
    TropicalComplex t = tropical_hypersurface(f);
    REQUIRE(t.faces.size() == 1);
    CHECK(t.faces[0].dim == 1);
    auto rays = ray_set(t);
    CHECK(rays.count({1, 1}));
    CHECK(rays.count({-1, -1}));
}

TEST_CASE("square support gives four rays") {
    auto f = parse_polynomial("1 + x1 + x2 + x1*x2", 2);
    TropicalComplex t = tropical_hypersurface(f);
    REQUIRE(t.faces.size() == 5);
    auto rays = ray_set(t);
    CHECK(rays == std::set<std::vector<long long>>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    // vertex ties all four monomials
    CHECK(t.faces[0].dim == 0);
    CHECK(t.faces[0].tie_pattern[0].size() == 4);
    // each ray ties exactly the expected pair
    for (size_t i = 1; i < t.faces.size(); ++i) {
        const auto& tp = t.faces[i].tie_pattern[0];
        REQUIRE(tp.size() == 2);
        const auto& r = t.faces[i].rays[0];
        // tie pair maximizes r . alpha
        Rat best;
        bool first = true;
        for (const auto& s : f.support()) {
            Rat v = 0;
            for (int j = 0; j < 2; ++j) v += Rat(r[j]) * Rat(s[j]);
            if (first || v > best) {
                best = v;
                first = false;
            }
        }
        for (const auto& e : tp) {
            Rat v = 0;
            for (int j = 0; j < 2; ++j) v += Rat(r[j]) * Rat(e[j]);
            CHECK(v == best);
        }
    }
}

TEST_CASE("monomial input is rejected") {
    auto f = parse_polynomial("3*x1*x2", 2);
    CHECK_THROWS_AS(tropical_hypersurface(f), MathError);
}

TEST_CASE("tropical line of a generic real line in three-space") {
    auto l1 = parse_polynomial("x1 + x2 + 1", 3);
    auto l2 = parse_polynomial("x1 + x3 + 2", 3);
    auto spec = VarietySpec::make(3, InputClass::Line, {l1, l2});
    TropicalComplex t = tropical_line(spec);
    REQUIRE(t.faces.size() == 5);
    CHECK(t.faces[0].dim == 0);
    CHECK(t.faces[0].vertices == std::vector<RatVec>{rv({0, 0, 0})});
    auto rays = ray_set(t);
    CHECK(rays == std::set<std::vector<long long>>{
                      {1, 1, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
}

TEST_CASE("the paper line's archimedean shadow has a single vertex and 4 rays") {
    auto f1 = parse_polynomial("x + zeta3*y + zeta3^2*2", 3);
    auto f2 = parse_polynomial("i*x + z - (1+i)", 3);
    auto spec = VarietySpec::make(3, InputClass::Line, {f1, f2});
    TropicalComplex t = tropical_line(spec);
    int vertices = 0, rays = 0;
    for (const auto& f : t.faces) {
        if (f.dim == 0) ++vertices;
        if (f.dim == 1) ++rays;
    }
    CHECK(vertices == 1);
    CHECK(rays == 4);
}

TEST_CASE("non-transverse complete intersection errors") {
    auto f1 = parse_polynomial("x1 + x2", 2);
    auto f2 = parse_polynomial("x1 + 2*x2", 2);
    auto spec = VarietySpec::make(2, InputClass::CompleteIntersection, {f1, f2});
    CHECK_THROWS_AS(tropical_fan(spec), MathError);
}

TEST_CASE("tropical fan of 1+x+y with initial data") {
    auto f = parse_polynomial("1 + x1 + x2", 2);
    auto spec = VarietySpec::make(2, InputClass::Hypersurface, {f});
    TropicalFan fan = tropical_fan(spec);
    REQUIRE(fan.cones.size() == 4);
    CHECK_FALSE(fan.cones[0].maximal);  // the zero cone
    int with_ray11 = -1;
    for (size_t i = 1; i < fan.cones.size(); ++i) {
        CHECK(fan.cones[i].maximal);
        REQUIRE(fan.cones[i].cone.rays.size() == 1);
        if (fan.cones[i].cone.rays[0] == IntVec{Int(1), Int(1)})
            with_ray11 = static_cast<int>(i);
    }
    REQUIRE(with_ray11 > 0);
    // in_(1,1) f = x1 + x2
    auto supp = fan.cones[with_ray11].initial_system[0].support();
    CHECK(supp == std::vector<ExponentVector>{{Int(0), Int(1)}, {Int(1), Int(0)}});
    CHECK(fan.face_relations.size() == 3);
}

TEST_CASE("binomial fan is a single maximal cone") {
    auto f = parse_polynomial("x1 - x2", 2);
    auto spec = VarietySpec::make(2, InputClass::Hypersurface, {f});
    TropicalFan fan = tropical_fan(spec);
    REQUIRE(fan.cones.size() == 1);
    CHECK(fan.cones[0].maximal);
    CHECK(fan.cones[0].cone.dim() == 1);
    CHECK(fan.cones[0].initial_system[0].terms.size() == 2);
}

TEST_CASE("line fan has 4 maximal ray cones, each with a binomial-or-linear system") {
    auto l1 = parse_polynomial("x1 + x2 + 1", 3);
    auto l2 = parse_polynomial("x1 + x3 + 2", 3);
    auto spec = VarietySpec::make(3, InputClass::Line, {l1, l2});
    TropicalFan fan = tropical_fan(spec);
    auto maximal = fan.maximal_cones();
    CHECK(maximal.size() == 4);
    for (int i : maximal) {
        CHECK(fan.cones[i].cone.dim() == 1);
        for (const auto& g : fan.cones[i].initial_system)
            CHECK(is_affine_linear(g));
    }
}

TEST_CASE("consistency: tie patterns match initial forms at random interior points") {
    std::mt19937_64 rng(17);
    auto f1 = parse_polynomial("x1 + x2 + 1", 3);
    auto f2 = parse_polynomial("x1 + x3 + 2", 3);
    auto spec = VarietySpec::make(3, InputClass::Line, {f1, f2});
    TropicalComplex t = tropical_line(spec);
    for (const auto& face : t.faces) {
        for (int rep = 0; rep < 10; ++rep) {
            RatVec w = relint_point(face, rng);
            for (size_t p = 0; p < spec.polynomials.size(); ++p) {
                auto in = initial_form(spec.polynomials[p], w);
                CHECK(in.result.support() == face.tie_pattern[p]);
            }
        }
    }
}

TEST_CASE("purity") {
    auto f = parse_polynomial("1 + x1 + x2 + x1*x2", 2);
    TropicalComplex t = tropical_hypersurface(f);
    for (int i : t.maximal_faces()) CHECK(t.faces[i].dim == 1);

    auto l1 = parse_polynomial("x1 + x2 + 1", 3);
    auto l2 = parse_polynomial("x1 + x3 + 2", 3);
    TropicalComplex lt = tropical_line(VarietySpec::make(3, InputClass::Line, {l1, l2}));
    for (int i : lt.maximal_faces()) CHECK(lt.faces[i].dim == 1);
}

TEST_CASE("balancing at every vertex of a tropical line") {
    auto f1 = parse_polynomial("x + zeta3*y + zeta3^2*2", 3);
    auto f2 = parse_polynomial("i*x + z - (1+i)", 3);
    TropicalComplex t =
        tropical_line(VarietySpec::make(3, InputClass::Line, {f1, f2}));
    for (size_t vi = 0; vi < t.faces.size(); ++vi) {
        if (t.faces[vi].dim != 0) continue;
        IntVec sum(3, Int(0));
        for (auto [a, b] : t.incidence) {
            if (a != static_cast<int>(vi)) continue;
            const auto& edge = t.faces[b];
            if (edge.dim != 1) continue;
            if (!edge.rays.empty()) {
                for (int j = 0; j < 3; ++j) sum[j] += edge.rays[0][j];
            } else {
                // bounded segment: direction away from this vertex
                RatVec other = edge.vertices[0] == t.faces[vi].vertices[0]
                                   ? edge.vertices[1]
                                   : edge.vertices[0];
                IntVec d = primitive(vec_sub(other, t.faces[vi].vertices[0]));
                for (int j = 0; j < 3; ++j) sum[j] += d[j];
            }
        }
        CHECK(sum == IntVec(3, Int(0)));
    }
}

TEST_CASE("fan cones intersect pairwise in common faces") {
    auto f = parse_polynomial("1 + x1 + x2 + x1*x2", 2);
    TropicalFan fan = tropical_fan(VarietySpec::make(2, InputClass::Hypersurface, {f}));
    for (size_t i = 0; i < fan.cones.size(); ++i)
        for (size_t j = i + 1; j < fan.cones.size(); ++j) {
            const Cone& a = fan.cones[i].cone;
            const Cone& b = fan.cones[j].cone;
            // shared generators
            std::vector<IntVec> common;
            for (const auto& r : a.rays)
                for (const auto& s : b.rays)
                    if (r == s) common.push_back(r);
            // every shared generator lies in both cones; generators not shared
            // lie outside the other cone (desk-scale common-face check)
            for (const auto& r : a.rays) {
                bool shared = false;
                for (const auto& c : common) shared |= (c == r);
                auto reg = b.membership(to_ratvec(r));
                if (shared)
                    CHECK(reg != ConeRegion::Outside);
                else
                    CHECK(reg == ConeRegion::Outside);
            }
            // interior points of the common span stay in both
            if (!common.empty()) {
                RatVec mid(2, Rat(0));
                for (const auto& c : common) mid = vec_add(mid, to_ratvec(c));
                CHECK(a.membership(mid) != ConeRegion::Outside);
                CHECK(b.membership(mid) != ConeRegion::Outside);
            }
        }
}

TEST_CASE("monotonicity of initial forms along the face order") {
    auto f = parse_polynomial("1 + x1 + x2 + x1*x2", 2);
    auto spec = VarietySpec::make(2, InputClass::Hypersurface, {f});
    TropicalFan fan = tropical_fan(spec);
    for (auto [i, j] : fan.face_relations) {
        // cone i is a face of cone j: in_j f is an initial form of in_i f
        const auto& small = fan.cones[i];
        const auto& big = fan.cones[j];
        auto in_ij = initial_form(small.initial_system[0], big.interior);
        CHECK(in_ij.result.support() == big.initial_system[0].support());
    }
}
