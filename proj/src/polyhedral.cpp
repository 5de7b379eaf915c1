#include "coamoeba/polyhedral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace coamoeba {

RationalSubspace RationalSubspace::span_of(int ambient, const RatMat& spanning) {
    RationalSubspace s;
    s.ambient = ambient;
    s.basis = spanning;
    rref(s.basis);
    return s;
}

RationalSubspace RationalSubspace::zero(int ambient) {
    RationalSubspace s;
    s.ambient = ambient;
    return s;
}

RationalSubspace RationalSubspace::full(int ambient) {
    RatMat id(ambient, RatVec(ambient, Rat(0)));
    for (int i = 0; i < ambient; ++i) id[i][i] = 1;
    return span_of(ambient, id);
}

bool RationalSubspace::contains(const RatVec& v) const {
    if (is_zero(v)) return true;
    RatMat m = basis;
    m.push_back(v);
    return rank(std::move(m)) == dim();
}

bool RationalSubspace::operator==(const RationalSubspace& o) const {
    return ambient == o.ambient && basis == o.basis;
}

RationalSubspace RationalSubspace::orthogonal_complement() const {
    if (basis.empty()) return full(ambient);
    RationalSubspace s;
    s.ambient = ambient;
    s.basis = kernel_basis(basis, ambient);
    return s;
}

RationalSubspace RationalSubspace::sum(const RationalSubspace& o) const {
    RatMat m = basis;
    m.insert(m.end(), o.basis.begin(), o.basis.end());
    return span_of(ambient, m);
}

RationalSubspace RationalSubspace::intersect(const RationalSubspace& o) const {
    RatMat eqs = orthogonal_complement().basis;
    RatMat eqs2 = o.orthogonal_complement().basis;
    eqs.insert(eqs.end(), eqs2.begin(), eqs2.end());
    if (eqs.empty()) return full(ambient);
    RationalSubspace s;
    s.ambient = ambient;
    s.basis = kernel_basis(eqs, ambient);
    return s;
}

RatVec RationalSubspace::project(const RatVec& v) const {
    const int d = dim();
    if (d == 0) return RatVec(ambient, Rat(0));
    // Solve G c = B v with G the Gram matrix of the basis rows.
    RatMat gram(d, RatVec(d));
    RatVec rhs(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) gram[i][j] = dot(basis[i], basis[j]);
        rhs[i] = dot(basis[i], v);
    }
    auto c = solve_linear(gram, rhs);
    RatVec p(ambient, Rat(0));
    for (int i = 0; i < d; ++i) p = vec_add(p, vec_scale((*c)[i], basis[i]));
    return p;
}

std::string RationalSubspace::key() const {
    std::string s = std::to_string(ambient) + ";";
    for (const auto& row : basis) s += ratvec_str(row);
    return s;
}

AffineSubspace::AffineSubspace(RatVec p, RationalSubspace dir)
    : point(std::move(p)), direction(std::move(dir)) {
    point = vec_sub(point, direction.project(point));
}

bool AffineSubspace::contains(const RatVec& v) const {
    return direction.contains(vec_sub(v, point));
}

bool AffineSubspace::operator==(const AffineSubspace& o) const {
    return point == o.point && direction == o.direction;
}

void AffineSubspace::equations(RatMat& rows, RatVec& rhs) const {
    rows = direction.orthogonal_complement().basis;
    rhs.resize(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) rhs[i] = dot(rows[i], point);
}

std::string AffineSubspace::key() const {
    return ratvec_str(point) + "|" + direction.key();
}

std::optional<AffineSubspace> intersect_affine(const AffineSubspace& a,
                                               const AffineSubspace& b) {
    if (a.ambient() != b.ambient())
        throw InputError("intersect_affine: ambient dimension mismatch");
    RatMat rows, rows_b;
    RatVec rhs, rhs_b;
    a.equations(rows, rhs);
    b.equations(rows_b, rhs_b);
    rows.insert(rows.end(), rows_b.begin(), rows_b.end());
    rhs.insert(rhs.end(), rhs_b.begin(), rhs_b.end());
    if (rows.empty())
        return AffineSubspace(RatVec(a.ambient(), Rat(0)),
                              RationalSubspace::full(a.ambient()));
    auto x = solve_linear(rows, rhs);
    if (!x) return std::nullopt;
    RationalSubspace dir;
    dir.ambient = a.ambient();
    dir.basis = kernel_basis(rows, a.ambient());
    return AffineSubspace(*x, dir);
}

// --- Fourier-Motzkin -------------------------------------------------------

namespace {

struct Ineq {
    RatVec a;  // a.x + b (rel) 0 with rel in {<=, <} after normalization
    Rat b;
    bool strict;
};

// Substitutes away equality constraints, returns false on inconsistency.
bool eliminate_equalities(std::vector<LinearConstraint>& cons, int nvars,
                          std::vector<Ineq>& out) {
    RatMat eqs;
    RatVec rhs;
    for (const auto& c : cons)
        if (c.rel == Rel::Eq) {
            eqs.push_back(c.a);
            rhs.push_back(c.b);
        }
    RatMat aug;
    for (size_t i = 0; i < eqs.size(); ++i) {
        aug.push_back(eqs[i]);
        aug.back().push_back(-rhs[i]);
    }
    std::vector<int> piv = rref(aug);
    for (int p : piv)
        if (p == nvars) return false;
    // x_piv = -(tail of row) . x_free - const
    for (const auto& c : cons) {
        if (c.rel == Rel::Eq) continue;
        RatVec a = c.a;
        Rat b = -c.b;  // a.x + b <= 0
        for (size_t i = 0; i < piv.size(); ++i) {
            Rat coeff = a[piv[i]];
            if (coeff == 0) continue;
            a[piv[i]] = 0;
            for (int j = 0; j < nvars; ++j)
                if (j != piv[i]) a[j] -= coeff * aug[i][j];
            b -= coeff * aug[i][nvars];
        }
        out.push_back({std::move(a), b, c.rel == Rel::Lt});
    }
    return true;
}

}  // namespace

bool fm_feasible(std::vector<LinearConstraint> cons, int nvars) {
    std::vector<Ineq> sys;
    if (!eliminate_equalities(cons, nvars, sys)) return false;
    for (int v = 0; v < nvars; ++v) {
        std::vector<Ineq> lower, upper, rest;
        for (auto& q : sys) {
            if (q.a[v] > 0)
                upper.push_back(std::move(q));
            else if (q.a[v] < 0)
                lower.push_back(std::move(q));
            else
                rest.push_back(std::move(q));
        }
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                // lo: a.x + b < 0 with a[v] < 0; up likewise with a[v] > 0.
                Rat s = up.a[v], t = -lo.a[v];
                Ineq comb;
                comb.a.resize(nvars, Rat(0));
                for (int j = 0; j < nvars; ++j)
                    comb.a[j] = t * up.a[j] + s * lo.a[j];
                comb.b = t * up.b + s * lo.b;
                comb.strict = lo.strict || up.strict;
                rest.push_back(std::move(comb));
            }
        sys = std::move(rest);
        // prune constant rows early
        std::vector<Ineq> keep;
        for (auto& q : sys) {
            if (is_zero(q.a)) {
                if (q.b > 0 || (q.strict && q.b == 0)) return false;
            } else {
                keep.push_back(std::move(q));
            }
        }
        sys = std::move(keep);
    }
    return true;
}

// --- V-representation ------------------------------------------------------

namespace {

void subsets_of_size(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (int i = start; i <= m - (k - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (k <= m) rec(0, 0);
}

}  // namespace

RatVec VRep::interior_point() const {
    if (points.empty()) throw MathError("interior_point of empty VRep");
    RatVec p(points[0].size(), Rat(0));
    for (const auto& q : points) p = vec_add(p, q);
    p = vec_scale(Rat(1, static_cast<int>(points.size())), p);
    for (const auto& r : rays) p = vec_add(p, to_ratvec(r));
    return p;
}

VRep v_representation(const std::vector<LinearConstraint>& cons, int nvars) {
    RatMat eq_rows;
    RatVec eq_rhs;
    RatMat le_rows;
    RatVec le_rhs;
    for (const auto& c : cons) {
        if (c.rel == Rel::Eq) {
            eq_rows.push_back(c.a);
            eq_rhs.push_back(c.b);
        } else {
            le_rows.push_back(c.a);
            le_rhs.push_back(c.b);
        }
    }

    // Lineality: directions with A u = 0, C u = 0.
    RatMat all_rows = eq_rows;
    all_rows.insert(all_rows.end(), le_rows.begin(), le_rows.end());
    RatMat lineality =
        all_rows.empty() ? RationalSubspace::full(nvars).basis
                         : kernel_basis(all_rows, nvars);

    // Pin the lineality directions to zero to get a pointed polyhedron; the
    // lifted representatives are the ones orthogonal to the lineality.
    RatMat pin_eq = eq_rows;
    RatVec pin_rhs = eq_rhs;
    for (const auto& l : lineality) {
        pin_eq.push_back(l);
        pin_rhs.push_back(Rat(0));
    }

    const int eqrank = pin_eq.empty() ? 0 : rank(pin_eq);
    const int d = nvars - eqrank;  // dimension of the pointed part

    auto satisfies = [&](const RatVec& x) {
        for (size_t i = 0; i < pin_eq.size(); ++i)
            if (dot(pin_eq[i], x) != pin_rhs[i]) return false;
        for (size_t i = 0; i < le_rows.size(); ++i)
            if (dot(le_rows[i], x) > le_rhs[i]) return false;
        return true;
    };

    std::set<std::string> seen_pts, seen_rays;
    VRep out;

    const int m = static_cast<int>(le_rows.size());
    // Vertices: d tight inequality rows on top of the equalities.
    subsets_of_size(m, std::min(d, m), [&](const std::vector<int>& J) {
        RatMat sys = pin_eq;
        RatVec rhs = pin_rhs;
        for (int j : J) {
            sys.push_back(le_rows[j]);
            rhs.push_back(le_rhs[j]);
        }
        if (rank(sys) != nvars) return;
        auto x = solve_linear(sys, rhs);
        if (!x || !satisfies(*x)) return;
        std::string k = ratvec_str(*x);
        if (seen_pts.insert(k).second) out.points.push_back(*x);
    });
    if (d == 0 || m == 0) {
        // No inequalities to make vertices from: the pointed part is the
        // solution of the equalities (a single point when d == 0; otherwise
        // handled by the ray pass below with a basepoint).
        if (out.points.empty()) {
            auto x = solve_linear(pin_eq, pin_rhs);
            if (x && satisfies(*x)) out.points.push_back(*x);
        }
    }

    // Extreme rays of the recession cone: d-1 tight rows, homogeneous.
    RatVec zero_rhs(pin_eq.size(), Rat(0));
    auto ray_ok = [&](const RatVec& u) {
        for (const auto& row : pin_eq)
            if (dot(row, u) != 0) return false;
        for (const auto& row : le_rows)
            if (dot(row, u) > 0) return false;
        return true;
    };
    if (d >= 1) {
        subsets_of_size(m, std::min(d - 1, m), [&](const std::vector<int>& J) {
            RatMat sys = pin_eq;
            for (int j : J) sys.push_back(le_rows[j]);
            RatMat ker = sys.empty() ? RationalSubspace::full(nvars).basis
                                     : kernel_basis(sys, nvars);
            if (ker.size() != 1) return;
            for (int sgn : {1, -1}) {
                RatVec u = vec_scale(Rat(sgn), ker[0]);
                if (!ray_ok(u)) continue;
                IntVec p = primitive(u);
                std::string k;
                for (const auto& c : p) k += c.str() + ",";
                if (seen_rays.insert(k).second) out.rays.push_back(p);
            }
        });
    }

    // Lineality directions re-enter as +/- ray pairs.
    for (const auto& l : lineality) {
        for (int sgn : {1, -1}) {
            IntVec p = primitive(vec_scale(Rat(sgn), l));
            std::string k;
            for (const auto& c : p) k += c.str() + ",";
            if (seen_rays.insert(k).second) out.rays.push_back(p);
        }
    }

    std::sort(out.points.begin(), out.points.end());
    std::sort(out.rays.begin(), out.rays.end());
    if (out.points.empty())
        throw MathError("v_representation: no basepoint found (empty or unbounded-degenerate input)");
    return out;
}

// --- convex hull of lattice points -----------------------------------------

Polytope convex_hull(const std::vector<IntVec>& pts, int ambient) {
    if (pts.empty()) throw MathError("convex_hull of empty point set");
    Polytope P;
    P.ambient = ambient;

    std::vector<IntVec> points = pts;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Affine hull dimension.
    RatMat diffs;
    for (size_t i = 1; i < points.size(); ++i) {
        RatVec d(ambient);
        for (int j = 0; j < ambient; ++j) d[j] = Rat(points[i][j] - points[0][j]);
        diffs.push_back(std::move(d));
    }
    P.dim = diffs.empty() ? 0 : rank(diffs);

    // Vertices: p is a vertex iff p is not a convex combination of the others.
    for (size_t i = 0; i < points.size(); ++i) {
        const int k = static_cast<int>(points.size()) - 1;
        if (k == 0) {
            P.vertices.push_back(points[i]);
            break;
        }
        // lambda >= 0, sum lambda = 1, sum lambda q_j = p_i
        std::vector<LinearConstraint> cons;
        LinearConstraint sum1;
        sum1.a.assign(k, Rat(1));
        sum1.b = 1;
        sum1.rel = Rel::Eq;
        cons.push_back(sum1);
        for (int c = 0; c < ambient; ++c) {
            LinearConstraint row;
            row.a.resize(k);
            int idx = 0;
            for (size_t j = 0; j < points.size(); ++j) {
                if (j == i) continue;
                row.a[idx++] = Rat(points[j][c]);
            }
            row.b = Rat(points[i][c]);
            row.rel = Rel::Eq;
            cons.push_back(row);
        }
        for (int j = 0; j < k; ++j) {
            LinearConstraint nn;
            nn.a.assign(k, Rat(0));
            nn.a[j] = -1;
            nn.b = 0;
            nn.rel = Rel::Le;
            cons.push_back(nn);
        }
        if (!fm_feasible(cons, k)) P.vertices.push_back(points[i]);
    }
    std::sort(P.vertices.begin(), P.vertices.end());

    // Facets: hyperplanes (within the affine hull) spanned by dim points with
    // everything on one side. Enumerate normal directions from subsets.
    if (P.dim >= 1) {
        const int nv = static_cast<int>(P.vertices.size());
        std::set<std::string> seen;
        subsets_of_size(nv, P.dim, [&](const std::vector<int>& J) {
            // Normal n: orthogonal to the affine span of the subset and lying
            // in the direction space of the polytope's affine hull.
            RatMat sys;
            for (size_t t = 1; t < J.size(); ++t) {
                RatVec d(ambient);
                for (int j = 0; j < ambient; ++j)
                    d[j] = Rat(P.vertices[J[t]][j] - P.vertices[J[0]][j]);
                sys.push_back(std::move(d));
            }
            // Also orthogonal to the orthogonal complement of the hull
            // directions, so the normal is parallel to the hull.
            RatMat dirs;
            for (size_t i = 1; i < P.vertices.size(); ++i) {
                RatVec d(ambient);
                for (int j = 0; j < ambient; ++j)
                    d[j] = Rat(P.vertices[i][j] - P.vertices[0][j]);
                dirs.push_back(std::move(d));
            }
            RatMat hull_orth = kernel_basis(dirs, ambient);
            for (auto& row : hull_orth) sys.push_back(row);
            RatMat ker = sys.empty() ? RationalSubspace::full(ambient).basis
                                     : kernel_basis(sys, ambient);
            if (ker.size() != 1) return;
            for (int sgn : {1, -1}) {
                RatVec nvec = vec_scale(Rat(sgn), ker[0]);
                Rat off = Rat(0);
                for (int j = 0; j < ambient; ++j)
                    off += nvec[j] * Rat(P.vertices[J[0]][j]);
                bool onesided = true, tightface = false;
                for (const auto& q : P.vertices) {
                    Rat val = 0;
                    for (int j = 0; j < ambient; ++j) val += nvec[j] * Rat(q[j]);
                    if (val > off) {
                        onesided = false;
                        break;
                    }
                    if (val < off) tightface = true;
                }
                if (!onesided || (!tightface && P.dim > 0)) continue;
                IntVec pn = primitive(nvec);
                Rat poff = Rat(0);
                for (int j = 0; j < ambient; ++j)
                    poff += Rat(pn[j]) * Rat(P.vertices[J[0]][j]);
                std::string k;
                for (const auto& c : pn) k += c.str() + ",";
                k += "|" + rat_str(poff);
                if (seen.insert(k).second) {
                    P.facet_normals.push_back(pn);
                    P.facet_offsets.push_back(poff);
                }
            }
        });
    }
    return P;
}

// --- cones ------------------------------------------------------------------

Cone Cone::from_rays(int ambient, const std::vector<IntVec>& rays_in) {
    Cone c;
    RatMat spanning;
    std::set<std::string> seen;
    for (const auto& r : rays_in) {
        std::string k;
        for (const auto& x : r) k += x.str() + ",";
        if (!seen.insert(k).second) continue;
        c.rays.push_back(r);
        spanning.push_back(to_ratvec(r));
    }
    std::sort(c.rays.begin(), c.rays.end());
    c.span = RationalSubspace::span_of(ambient, spanning);
    return c;
}

ConeRegion Cone::membership(const RatVec& v) const {
    const int m = static_cast<int>(rays.size());
    if (m == 0) return is_zero(v) ? ConeRegion::Interior : ConeRegion::Outside;
    const int n = span.ambient;
    // v = sum lambda_i r_i with lambda >= 0 (membership), lambda > 0 (relint).
    auto build = [&](bool strict) {
        std::vector<LinearConstraint> cons;
        for (int c = 0; c < n; ++c) {
            LinearConstraint row;
            row.a.resize(m);
            for (int i = 0; i < m; ++i) row.a[i] = Rat(rays[i][c]);
            row.b = v[c];
            row.rel = Rel::Eq;
            cons.push_back(row);
        }
        for (int i = 0; i < m; ++i) {
            LinearConstraint nn;
            nn.a.assign(m, Rat(0));
            nn.a[i] = -1;
            nn.b = 0;
            nn.rel = strict ? Rel::Lt : Rel::Le;
            cons.push_back(nn);
        }
        return cons;
    };
    if (!fm_feasible(build(false), m)) return ConeRegion::Outside;
    if (fm_feasible(build(true), m)) return ConeRegion::Interior;
    return ConeRegion::Boundary;
}

}  // namespace coamoeba
