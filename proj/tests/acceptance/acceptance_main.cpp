// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion enforces its stated tolerance and runtime budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "coamoeba/homology.hpp"
#include "coamoeba/json_io.hpp"
#include "coamoeba/nonarch.hpp"

using namespace coamoeba;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define REQUIRE_ACC(cond, msg)                                    \
    do {                                                          \
        if (!(cond)) throw Failure(std::string("FAILED: ") + msg); \
    } while (0)

RatVec rv(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

KVarietySpec paper_line() {
    auto zeta = ComplexScalar::from_exact(Rat(1), Rat(1, 3));
    auto zeta2 = ComplexScalar::from_exact(Rat(1), Rat(2, 3));
    auto iunit = ComplexScalar::from_exact(Rat(1), Rat(1, 4));
    auto one = ComplexScalar::from_rational(Rat(1));
    auto omega = ComplexScalar::from_double(1.0, 1.0);
    KLaurentTerm xt{PuiseuxScalar::from_complex(one), {Int(1), Int(0), Int(0)}};
    KLaurentTerm yt{PuiseuxScalar::from_complex(zeta), {Int(0), Int(1), Int(0)}};
    KLaurentTerm ct{PuiseuxScalar::make({{Rat(1), zeta2}}), {Int(0), Int(0), Int(0)}};
    auto f1 = KLaurentPolynomial::make(3, {xt, yt, ct});
    KLaurentTerm xt2{PuiseuxScalar::from_complex(iunit), {Int(1), Int(0), Int(0)}};
    KLaurentTerm zt{PuiseuxScalar::from_complex(one), {Int(0), Int(0), Int(1)}};
    KLaurentTerm wt{PuiseuxScalar::from_complex(-omega), {Int(0), Int(0), Int(0)}};
    auto f2 = KLaurentPolynomial::make(3, {xt2, zt, wt});
    KVarietySpec spec;
    spec.ambient_dim = 3;
    spec.input_class = InputClass::Line;
    spec.polynomials = {f1, f2};
    return spec;
}

VarietySpec classical_line_spec() {
    return VarietySpec::make(2, InputClass::Hypersurface,
                             {parse_polynomial("1 + x1 + x2", 2)});
}

VarietySpec generic_space_line() {
    return VarietySpec::make(3, InputClass::Line,
                             {parse_polynomial("x + zeta3*y + zeta3^2*2", 3),
                              parse_polynomial("i*x + z - (1+i)", 3)});
}

std::vector<std::vector<double>> coset_samples(const AffineSubgroupCoset& c,
                                               int count) {
    RatMat rows;
    for (const auto& r : c.lattice) rows.push_back(to_ratvec(r));
    auto base = solve_linear(rows, c.offsets);
    std::vector<std::vector<double>> pts;
    if (!base) return pts;
    const int n = c.ambient;
    const int d = c.direction.dim();
    std::vector<int> idx(d, 0);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == d) {
            RatVec p = *base;
            for (int t = 0; t < d; ++t)
                for (int j = 0; j < n; ++j)
                    p[j] += Rat(idx[t], count) * c.direction.basis[t][j];
            for (auto& x : p) x = rat_mod1(x);
            pts.push_back(to_doubles(p));
            return;
        }
        for (int i = 0; i < count; ++i) {
            idx[depth] = i;
            rec(depth + 1);
        }
    };
    rec(0);
    return pts;
}

Rat rand_rat(std::mt19937_64& rng, int den, double lo, double hi) {
    std::uniform_int_distribution<long long> d(static_cast<long long>(lo * den),
                                               static_cast<long long>(hi * den));
    return Rat(Int(d(rng)), Int(den));
}

// ---------------------------------------------------------------------------

void criterion1(std::ostringstream& note) {
    NAmoebaComplex na = na_amoeba(paper_line());
    REQUIRE_ACC(na.complex.faces.size() == 7, "expected 7 faces");
    std::set<std::string> vertex_keys, ray_keys;
    int segments = 0;
    for (const auto& f : na.complex.faces) {
        if (f.dim == 0) {
            vertex_keys.insert(ratvec_str(f.vertices[0]));
        } else if (f.rays.empty()) {
            ++segments;
            REQUIRE_ACC(f.vertices.size() == 2, "segment has two endpoints");
            REQUIRE_ACC(f.vertices[0] == rv({0, 0, 0}) &&
                            f.vertices[1] == rv({1, 1, 0}),
                        "segment endpoints (0,0,0)-(1,1,0)");
        } else {
            std::string d;
            for (const auto& x : f.rays[0]) d += x.str() + ",";
            ray_keys.insert(ratvec_str(f.vertices[0]) + "|" + d);
        }
    }
    REQUIRE_ACC((vertex_keys == std::set<std::string>{"(0,0,0)", "(1,1,0)"}),
                "vertices (0,0,0) and (1,1,0)");
    REQUIRE_ACC(segments == 1, "exactly one segment");
    REQUIRE_ACC((ray_keys == std::set<std::string>{
                     "(0,0,0)|0,0,1,", "(0,0,0)|-1,-1,-1,", "(1,1,0)|0,1,0,",
                     "(1,1,0)|1,0,0,"}),
                "ray directions (0,0,1), (-1,-1,-1) at the first vertex and "
                "(0,1,0), (1,0,0) at the second");
    note << "7 faces exact";
}

void criterion2(std::ostringstream& note) {
    SampleParams sp;  // defaults
    NACoamoeba coa = na_coamoeba(paper_line(), sp);
    REQUIRE_ACC(coa.strata.size() == 7, "expected 7 strata");
    std::vector<std::vector<double>> vertex_cloud;
    int minimal = 0;
    for (const auto& st : coa.strata)
        if (st.minimal_face) {
            ++minimal;
            for (const auto& p : st.cloud.points) vertex_cloud.push_back(p);
        }
    REQUIRE_ACC(minimal == 2, "two vertex strata");
    double worst = 0;
    for (const auto& st : coa.strata) {
        if (st.minimal_face) continue;
        REQUIRE_ACC(st.exact, "non-vertex strata are exact cosets");
        for (const auto& c : st.cosets) {
            auto pts = coset_samples(c, 160);
            worst = std::max(worst, directed_hausdorff(pts, vertex_cloud));
        }
    }
    REQUIRE_ACC(worst < 0.02, "Hausdorff tolerance 0.02 to the vertex clouds");
    note << "5 non-vertex strata within " << worst << " of the vertex clouds";
}

void criterion3(std::ostringstream& note) {
    auto spec = classical_line_spec();
    Shell sh = shell(spec);
    REQUIRE_ACC(sh.cosets.size() == 3, "three shell cosets");
    auto e1 = RationalSubspace::span_of(2, {rv({1, 0})});
    auto e2 = RationalSubspace::span_of(2, {rv({0, 1})});
    auto diag = RationalSubspace::span_of(2, {rv({1, 1})});
    auto want1 = AffineSubgroupCoset::make(e2, {Rat(1, 2), Rat(0)});
    auto want2 = AffineSubgroupCoset::make(e1, {Rat(0), Rat(1, 2)});
    auto want3 = AffineSubgroupCoset::make(diag, {Rat(0), Rat(1, 2)});
    int hits = 0;
    for (const auto& sc : sh.cosets)
        if (sc.coset == want1 || sc.coset == want2 || sc.coset == want3) ++hits;
    REQUIRE_ACC(hits == 3,
                "exact cosets {theta1=1/2}, {theta2=1/2}, {theta2=theta1+1/2}");

    SampleParams sp;  // log radius 8 default
    PointCloud cloud = sample_coamoeba(spec, sp);
    int far = 0;
    double worst = 0;
    for (size_t i = 0; i < cloud.size(); ++i) {
        if (cloud.log_radius[i] <= 6.0) continue;
        ++far;
        double best = 1e9;
        for (const auto& sc : sh.cosets)
            best = std::min(best, sc.coset.distance(cloud.points[i]));
        worst = std::max(worst, best);
    }
    REQUIRE_ACC(far > 500, "enough far samples");
    REQUIRE_ACC(worst < 0.02, "far samples within 0.02 of the shell");
    note << far << " far samples within " << worst << " of the shell";
}

void criterion4(std::ostringstream& note) {
    auto spec = classical_line_spec();
    Shell sh = shell(spec);
    Box box;
    box.lo = rv({0, 0});
    box.hi = rv({2, 2});
    LiftedArrangement arr = lifted(sh, box);
    auto members = enumerate_in_box(arr, box);

    SampleParams sp;  // default density; satellites cover the triangle corners
    PointCloud cloud = sample_coamoeba(spec, sp);
    Box padded;
    padded.lo = {Rat(-1, 2), Rat(-1, 2)};
    padded.hi = {Rat(5, 2), Rat(5, 2)};
    auto lifted_pts = lifted_cloud(cloud, padded);
    const double dil = 0.02;

    std::mt19937_64 rng(20240810);
    int pairs_zero = 0, pairs_nonzero = 0, counterexamples = 0;
    for (int li = 0; li < 50; ++li) {
        // random rational line through the box
        RatVec p = {rand_rat(rng, 37, 0.0, 2.0), rand_rat(rng, 41, 0.0, 2.0)};
        RatVec d = {Rat(1), rand_rat(rng, 43, -1.5, 1.5)};
        if (li % 5 == 4) std::swap(d[0], d[1]);  // include steep lines
        if (is_zero(d)) continue;
        AffineSubspace line(p, RationalSubspace::span_of(2, {d}));

        // exact shell crossings in line parameters
        std::vector<Rat> crossings;
        std::vector<int> crossing_member;
        bool degenerate = false;
        for (size_t mi = 0; mi < members.size(); ++mi) {
            auto inter = intersect_affine(line, members[mi]);
            if (!inter) continue;
            if (inter->dim() >= 1) {
                degenerate = true;
                break;
            }
            // parameter of the point
            RatVec off = vec_sub(inter->point, line.point);
            Rat t = dot(off, line.direction.basis[0]) /
                    dot(line.direction.basis[0], line.direction.basis[0]);
            crossings.push_back(t);
            crossing_member.push_back(static_cast<int>(mi));
        }
        if (degenerate) continue;  // line parallel to a family: skip

        // blocked intervals from the dilated cloud
        std::vector<double> pd = to_doubles(line.point);
        std::vector<double> dd = to_doubles(line.direction.basis[0]);
        double dn = std::sqrt(dd[0] * dd[0] + dd[1] * dd[1]);
        std::vector<std::pair<double, double>> blocked;
        for (const auto& q : lifted_pts) {
            double qx = q[0] - pd[0], qy = q[1] - pd[1];
            double tc = (qx * dd[0] + qy * dd[1]) / (dn * dn);
            double dist = std::abs(qx * dd[1] - qy * dd[0]) / dn;
            if (dist > dil) continue;
            double w = std::sqrt(dil * dil - dist * dist) / dn;
            blocked.push_back({tc - w, tc + w});
        }
        for (const Rat& t : crossings) {
            double tc = rat_double(t);
            blocked.push_back({tc - 1e-12, tc + 1e-12});
        }
        std::sort(blocked.begin(), blocked.end());
        std::vector<std::pair<double, double>> merged;
        for (const auto& [a, b] : blocked) {
            if (!merged.empty() && a <= merged.back().second)
                merged.back().second = std::max(merged.back().second, b);
            else
                merged.push_back({a, b});
        }
        // parameter range of the segment inside the box
        double t_lo = -1e18, t_hi = 1e18;
        for (int axis = 0; axis < 2; ++axis) {
            double lo = rat_double(box.lo[axis]), hi = rat_double(box.hi[axis]);
            if (std::abs(dd[axis]) < 1e-12) {
                if (pd[axis] < lo || pd[axis] > hi) t_lo = 1e18;
                continue;
            }
            double ta = (lo - pd[axis]) / dd[axis];
            double tb = (hi - pd[axis]) / dd[axis];
            if (ta > tb) std::swap(ta, tb);
            t_lo = std::max(t_lo, ta);
            t_hi = std::min(t_hi, tb);
        }
        if (t_lo >= t_hi) continue;
        // components: gaps between merged blocked intervals; two sample
        // parameters per component so same-component 0-cycles occur
        std::vector<Rat> reps;
        double prev = t_lo;
        auto push_rep = [&](double a, double b) {
            if (b - a < 1e-6) return;
            for (double frac : {1.0 / 3, 2.0 / 3}) {
                Rat r;
                if (!rationalize(a + (b - a) * frac, 100000, 1e-3, r)) continue;
                double rd = rat_double(r);
                if (rd <= a || rd >= b) continue;
                reps.push_back(r);
            }
        };
        for (const auto& [a, b] : merged) {
            if (a > prev) push_rep(prev, a);
            prev = std::max(prev, b);
        }
        if (t_hi > prev) push_rep(prev, t_hi);

        // map rep parameter -> component index
        auto component_of = [&](double t) {
            int comp = 0;
            for (const auto& [a, b] : merged) {
                if (t < a) break;
                if (t <= b) return -1;  // inside a blocked interval
                ++comp;
            }
            return comp;
        };

        auto point_at = [&](const Rat& t) {
            return vec_add(line.point, vec_scale(t, line.direction.basis[0]));
        };
        for (size_t i = 0; i < reps.size(); ++i) {
            for (size_t j = i + 1; j < reps.size(); ++j) {
                int ci = component_of(rat_double(reps[i]));
                int cj = component_of(rat_double(reps[j]));
                if (ci < 0 || cj < 0) continue;
                Chain cyc = Chain::make(
                    0, 2,
                    {{Int(-1), {{point_at(reps[i])}}}, {Int(1), {{point_at(reps[j])}}}});
                if (ci == cj) {
                    // certified zero: the bounding segment avoids every member
                    Chain bc = bounding_chain(cyc, line);
                    bool clean = true;
                    for (const auto& m : members)
                        if (support_meets_affine(bc, m)) clean = false;
                    REQUIRE_ACC(clean, "same-component 0-cycle certified zero");
                    ++pairs_zero;
                } else {
                    bool witness = false;
                    for (const auto& m : members) {
                        if (support_meets_affine(cyc, m)) {
                            witness = false;
                            break;
                        }
                        if (linking_number(cyc, m) != 0) witness = true;
                    }
                    if (witness)
                        ++pairs_nonzero;
                    else
                        ++counterexamples;
                }
            }
        }
    }
    REQUIRE_ACC(counterexamples == 0, "zero counterexamples");
    REQUIRE_ACC(pairs_zero >= 40 && pairs_nonzero >= 150,
                "enough pairs exercised (" + std::to_string(pairs_zero) + " zero, " +
                    std::to_string(pairs_nonzero) + " nonzero)");
    note << pairs_zero << " zero-certs, " << pairs_nonzero
         << " crossing witnesses, 0 counterexamples";
}

void criterion5(std::ostringstream& note) {
    auto spec = generic_space_line();
    Shell sh = shell(spec);
    REQUIRE_ACC(sh.cosets.size() == 4, "four shell cosets");
    Box box;
    box.lo = rv({0, 0, 0});
    box.hi = rv({2, 2, 2});
    LiftedArrangement arr = lifted(sh, box);

    std::mt19937_64 rng(5150);
    int total_trials = 0, certs = 0, trivial = 0, counterexamples = 0, oracle = 0;
    for (int pi = 0; pi < 25; ++pi) {
        RatVec base = {rand_rat(rng, 19, 0.2, 1.8), rand_rat(rng, 23, 0.2, 1.8),
                       rand_rat(rng, 29, 0.2, 1.8)};
        RatVec d1 = {Rat(1), Rat(0), rand_rat(rng, 31, -0.5, 0.5)};
        RatVec d2 = {Rat(0), Rat(1), rand_rat(rng, 37, -0.5, 0.5)};
        AffineSubspace plane(base, RationalSubspace::span_of(3, {d1, d2}));
        CertifyParams params;
        params.trials = 24;
        params.seed = 0xC0FFEE + pi;
        params.oracle_resolution = 32;
        auto out = certify_k_convexity(arr, plane, 1, params);
        total_trials += out.trials;
        certs += static_cast<int>(out.certificates.size());
        trivial += out.trivial_trials;
        oracle += out.oracle_escalations;
        counterexamples += static_cast<int>(out.counterexamples.size());
    }
    REQUIRE_ACC(total_trials >= 500, "at least 500 trial cycles");
    REQUIRE_ACC(counterexamples == 0, "zero counterexamples");
    REQUIRE_ACC(certs > 100, "certificates produced");
    note << total_trials << " trials, " << certs << " certificates, " << trivial
         << " trivially zero, " << oracle << " oracle escalations, 0 counterexamples";
}

void criterion6(std::ostringstream& note) {
    std::mt19937_64 rng(606);
    Box box;
    box.lo = rv({-1, -1, -1});
    box.hi = rv({1, 1, 1});

    auto random_member = [&](int salt) {
        RatVec offset = {rand_rat(rng, 8, -0.4, 0.4), rand_rat(rng, 8, -0.4, 0.4),
                         Rat(0)};
        RatMat dirs = {rv({0, 0, 1}), rv({0, 1, 2}), rv({1, 1, 1})};
        return AffineSubspace(offset,
                              RationalSubspace::span_of(3, {dirs[salt % 3]}));
    };
    auto square_cycle = [&](Rat cx, Rat cy, Rat h) {
        auto pt = [&](Rat x, Rat y) { return RatVec{x, y, Rat(0)}; };
        std::vector<ChainTerm> ts;
        auto seg = [&](RatVec a, RatVec b) {
            Simplex s;
            s.v = {a, b};
            ts.push_back({Int(1), s});
        };
        seg(pt(cx - h, cy - h), pt(cx + h, cy - h));
        seg(pt(cx + h, cy - h), pt(cx + h, cy + h));
        seg(pt(cx + h, cy + h), pt(cx - h, cy + h));
        seg(pt(cx - h, cy + h), pt(cx - h, cy - h));
        return Chain::make(1, 3, ts);
    };
    // alternately ring the member's z=0 trace (linking +-1) and sit far from
    // it (linking 0); both leave >= 2 cells of clearance from the tube
    auto random_cycle = [&](const AffineSubspace& m, int attempt) {
        Rat px = m.point[0], py = m.point[1];
        if (attempt % 2 == 0) {
            Rat h = rand_rat(rng, 16, 0.4, 0.55);
            Rat jx = rand_rat(rng, 64, -0.03, 0.03);
            Rat jy = rand_rat(rng, 64, -0.03, 0.03);
            return square_cycle(px + jx, py + jy, h);
        }
        Rat cx = px > 0 ? px - Rat(3, 5) : px + Rat(3, 5);
        Rat cy = py > 0 ? py - Rat(3, 5) : py + Rat(3, 5);
        Rat h = rand_rat(rng, 16, 0.1, 0.2);
        return square_cycle(cx + rand_rat(rng, 64, -0.05, 0.05),
                            cy + rand_rat(rng, 64, -0.05, 0.05), h);
    };

    // clearance pre-screen: keep snapped cycles away from the removed tubes
    auto clearance = [&](const Chain& c, const AffineSubspace& m) {
        std::vector<double> base = to_doubles(m.point);
        std::vector<double> dir = to_doubles(m.direction.basis[0]);
        double dn = 0;
        for (double v : dir) dn += v * v;
        double best = 1e18;
        for (const auto& t : c.terms)
            for (const auto& vert : t.s.v) {
                auto p = to_doubles(vert);
                double dotv = 0;
                for (int j = 0; j < 3; ++j) dotv += (p[j] - base[j]) * dir[j];
                double d2v = 0;
                for (int j = 0; j < 3; ++j) {
                    double off = p[j] - base[j] - dotv / dn * dir[j];
                    d2v += off * off;
                }
                best = std::min(best, std::sqrt(d2v));
            }
        return best;
    };

    int singles = 0, doubles_checked = 0;
    // single-subspace instances: one rasterization pair per member, several
    // candidate cycles against it
    for (int inst = 0; singles < 50 && inst < 60; ++inst) {
        AffineSubspace m = random_member(inst);
        CubicalComplex k32 = rasterize_complement({m}, {}, box, 32, 0.0);
        CubicalComplex k48 = rasterize_complement({m}, {}, box, 48, 0.0);
        auto b32 = betti_numbers(k32);
        auto b48 = betti_numbers(k48);
        if (b32.b1 != b48.b1 || b32.b0 != b48.b0) continue;  // unstable member
        for (int attempt = 0; attempt < 16 && singles < 50; ++attempt) {
            Chain c = random_cycle(m, attempt);
            if (clearance(c, m) < 0.3) continue;
            Int lk;
            bool z32, z48;
            try {
                lk = linking_number(c, m);
                z32 = class_is_zero(k32, c);
                z48 = class_is_zero(k48, c);
            } catch (const MathError&) {
                continue;
            }
            if (z32 != z48) continue;  // resolution-unstable instance
            REQUIRE_ACC(z32 == (lk == Int(0)), "oracle agrees with linking");
            ++singles;
        }
    }
    REQUIRE_ACC(singles >= 50, "at least 50 stable single-subspace instances");

    // two-member arrangements
    for (int inst = 0; doubles_checked < 20 && inst < 30; ++inst) {
        AffineSubspace m1 = random_member(inst);
        AffineSubspace m2 = random_member(inst + 1);
        if (m1.key() == m2.key()) continue;
        CubicalComplex k32 = rasterize_complement({m1, m2}, {}, box, 32, 0.0);
        CubicalComplex k48 = rasterize_complement({m1, m2}, {}, box, 48, 0.0);
        auto b32 = betti_numbers(k32);
        auto b48 = betti_numbers(k48);
        if (b32.b1 != b48.b1 || b32.b0 != b48.b0) continue;
        for (int attempt = 0; attempt < 12 && doubles_checked < 20; ++attempt) {
            Chain c = random_cycle(attempt % 2 ? m1 : m2, attempt);
            if (clearance(c, m1) < 0.3 || clearance(c, m2) < 0.3) continue;
            Int lk1, lk2;
            bool z32, z48;
            try {
                lk1 = linking_number(c, m1);
                lk2 = linking_number(c, m2);
                z32 = class_is_zero(k32, c);
                z48 = class_is_zero(k48, c);
            } catch (const MathError&) {
                continue;
            }
            if (z32 != z48) continue;
            REQUIRE_ACC(z32 == (lk1 == Int(0) && lk2 == Int(0)),
                        "oracle agrees with linking on the pair");
            ++doubles_checked;
        }
    }
    REQUIRE_ACC(doubles_checked >= 20, "at least 20 stable two-member instances");
    note << singles << " single + " << doubles_checked
         << " two-member stable instances, 100% agreement";
}

void criterion7(std::ostringstream& note) {
    std::mt19937_64 rng(707);
    std::uniform_int_distribution<int> d(-4, 4), coeff(-2, 2);
    auto random_chain2 = [&]() {
        std::vector<ChainTerm> terms;
        int count = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i) {
            Int c = coeff(rng);
            if (c == 0) c = 1;
            Simplex s;
            s.v = {rv({d(rng), d(rng)}), rv({d(rng), d(rng)}), rv({d(rng), d(rng)})};
            terms.push_back({c, s});
        }
        return Chain::make(2, 2, terms);
    };

    // boundary of boundary
    for (int i = 0; i < 50; ++i) {
        Chain c = random_chain2();
        REQUIRE_ACC(boundary(boundary(c)).is_zero(), "dd = 0");
    }
    // bounding chain uniqueness via two cone apexes
    AffineSubspace plane(rv({0, 0}), RationalSubspace::full(2));
    int uniq = 0;
    for (int i = 0; i < 70 && uniq < 50; ++i) {
        Chain t = random_chain2();
        if (t.is_zero()) continue;
        Chain c = boundary(t);
        Chain b1 = bounding_chain(c, plane);
        RatVec apex = {rand_rat(rng, 61, -5, 5), rand_rat(rng, 67, -5, 5)};
        std::vector<ChainTerm> cone;
        bool degenerate = false;
        for (const auto& term : c.terms) {
            Simplex s;
            s.v = {apex, term.s.v[0], term.s.v[1]};
            cone.push_back({term.coeff, s});
        }
        Chain b2 = Chain::make(2, 2, cone);
        if (!chains_equal(boundary(b2), c)) continue;  // degenerate apex
        REQUIRE_ACC(chains_equal(b1, b2), "bounding chain unique");
        REQUIRE_ACC(chains_equal(b1, t), "bounding chain equals the filler");
        ++uniq;
    }
    REQUIRE_ACC(uniq >= 50, "50 uniqueness instances");

    // pm support law
    int pm = 0;
    for (int i = 0; i < 80 && pm < 50; ++i) {
        Chain lambda = random_chain2();
        if (lambda.is_zero()) continue;
        auto [lp, lm] = pm_decompose(lambda);
        SupportSet lhs = support(boundary(lambda));
        SupportSet rhs = support_union(support(boundary(lp)), support(boundary(lm)));
        REQUIRE_ACC(lhs == rhs, "supp(d lambda) = supp(d lambda+) U supp(d lambda-)");
        ++pm;
    }
    REQUIRE_ACC(pm >= 50, "50 pm-decomposition instances");

    // linking is a homology invariant
    AffineSubspace zaxis(rv({0, 0, 0}), RationalSubspace::span_of(3, {rv({0, 0, 1})}));
    auto seg3 = [&](int x0, int y0, int x1, int y1) {
        Simplex s;
        s.v = {rv({x0, y0, 0}), rv({x1, y1, 0})};
        return s;
    };
    Chain base_cycle = Chain::make(1, 3,
                                   {{Int(1), seg3(-1, -1, 1, -1)},
                                    {Int(1), seg3(1, -1, 1, 1)},
                                    {Int(1), seg3(1, 1, -1, 1)},
                                    {Int(1), seg3(-1, 1, -1, -1)}});
    Int base_lk = linking_number(base_cycle, zaxis);
    std::uniform_int_distribution<int> far(2, 6), anyc(-4, 4);
    int inv = 0;
    for (int i = 0; i < 80 && inv < 50; ++i) {
        Simplex tr;
        tr.v = {rv({far(rng), anyc(rng), anyc(rng)}),
                rv({far(rng), anyc(rng), anyc(rng)}),
                rv({far(rng), anyc(rng), anyc(rng)})};
        Chain t = Chain::make(2, 3, {{Int(coeff(rng) == 0 ? 1 : coeff(rng)), tr}});
        if (t.is_zero()) continue;
        Chain c2 = base_cycle + boundary(t);
        REQUIRE_ACC(linking_number(c2, zaxis) == base_lk, "linking invariant");
        ++inv;
    }
    REQUIRE_ACC(inv >= 50, "50 invariance instances");
    note << "dd=0, uniqueness, pm support law, linking invariance: 50 each";
}

void criterion8(std::ostringstream& note) {
    // hypersurface: direct (unreduced) sampling of the pullback system
    auto spec = classical_line_spec();
    SampleParams sp;
    sp.log_radius = 6.0;
    sp.radial_steps = 49;
    sp.angular_steps = 240;
    PointCloud base = sample_coamoeba(spec, sp);
    std::vector<std::vector<double>> pulled;
    for (const auto& p : base.points)
        for (int k1 = 0; k1 < 2; ++k1)
            for (int k2 = 0; k2 < 2; ++k2)
                pulled.push_back({(p[0] + k1) / 2, (p[1] + k2) / 2});
    VarietySpec pb = pullback_spec(spec, 2);
    SampleParams direct_params = sp;
    direct_params.no_reduction = true;  // quadratic solver route
    PointCloud direct = sample_coamoeba(pb, direct_params);
    double d1 = directed_hausdorff(pulled, direct.points);
    double d2 = directed_hausdorff(direct.points, pulled);
    REQUIRE_ACC(d1 < 0.02 && d2 < 0.02, "hypersurface pullback within 0.02");

    // space line: pullback sampled on an independent grid
    auto lspec = generic_space_line();
    SampleParams lp1;
    lp1.log_radius = 6.0;
    lp1.radial_steps = 49;
    lp1.angular_steps = 200;
    PointCloud lbase = sample_coamoeba(lspec, lp1);
    std::vector<std::vector<double>> lpulled;
    for (const auto& p : lbase.points)
        for (int k1 = 0; k1 < 2; ++k1)
            for (int k2 = 0; k2 < 2; ++k2)
                for (int k3 = 0; k3 < 2; ++k3)
                    lpulled.push_back(
                        {(p[0] + k1) / 2, (p[1] + k2) / 2, (p[2] + k3) / 2});
    VarietySpec lpb = pullback_spec(lspec, 2);
    SampleParams lp2;
    lp2.log_radius = 6.3;  // different grid
    lp2.radial_steps = 57;
    lp2.angular_steps = 260;
    PointCloud ldirect = sample_coamoeba(lpb, lp2);
    double d3 = directed_hausdorff(lpulled, ldirect.points);
    double d4 = directed_hausdorff(ldirect.points, lpulled);
    REQUIRE_ACC(d3 < 0.02 && d4 < 0.02, "line pullback within 0.02");
    note << "hypersurface " << std::max(d1, d2) << ", line " << std::max(d3, d4);
}

void criterion9(std::ostringstream& note) {
    std::mt19937_64 rng(909);
    // two hypersurface shells in R^2, k = 0
    auto specA = classical_line_spec();
    auto specB = VarietySpec::make(2, InputClass::Hypersurface,
                                   {parse_polynomial("1 + x1 + i*x2", 2)});
    Box box2;
    box2.lo = rv({0, 0});
    box2.hi = rv({2, 2});
    LiftedArrangement arrA = lifted(shell(specA), box2);
    LiftedArrangement arrB = lifted(shell(specB), box2);
    int certs2 = 0;
    for (int li = 0; li < 8; ++li) {
        AffineSubspace line(RatVec{rand_rat(rng, 17, 0.0, 2.0),
                                   rand_rat(rng, 19, 0.0, 2.0)},
                            RationalSubspace::span_of(
                                2, {RatVec{Rat(1), rand_rat(rng, 23, -1.2, 1.2)}}));
        CertifyParams params;
        params.trials = 30;
        params.seed = 0xAB + li;
        auto out = intersect_convexity(arrA, arrB, line, 0, params);
        REQUIRE_ACC(out.counterexamples.empty(), "no counterexamples in R^2");
        certs2 += static_cast<int>(out.certificates.size());
    }
    REQUIRE_ACC(certs2 > 20, "union certified in R^2");

    // two line families in R^3, k = 1
    Box box3;
    box3.lo = rv({0, 0, 0});
    box3.hi = rv({1, 1, 1});
    LiftedArrangement arrC = lifted(shell(generic_space_line()), box3);
    LiftedArrangement arrD = lifted(
        shell(VarietySpec::make(3, InputClass::Line,
                                {parse_polynomial("x1 + x2 + 1", 3),
                                 parse_polynomial("x1 + x3 + 2", 3)})),
        box3);
    int certs3 = 0;
    for (int pi = 0; pi < 6; ++pi) {
        RatVec base = {rand_rat(rng, 19, 0.2, 0.8), rand_rat(rng, 23, 0.2, 0.8),
                       rand_rat(rng, 29, 0.2, 0.8)};
        RatVec d1 = {Rat(1), Rat(0), rand_rat(rng, 31, -0.4, 0.4)};
        RatVec d2 = {Rat(0), Rat(1), rand_rat(rng, 37, -0.4, 0.4)};
        AffineSubspace plane(base, RationalSubspace::span_of(3, {d1, d2}));
        CertifyParams params;
        params.trials = 20;
        params.seed = 0xCD + pi;
        params.oracle_resolution = 32;
        auto out = intersect_convexity(arrC, arrD, plane, 1, params);
        REQUIRE_ACC(out.counterexamples.empty(), "no counterexamples in R^3");
        certs3 += static_cast<int>(out.certificates.size());
    }
    REQUIRE_ACC(certs3 > 10, "union certified in R^3");
    note << certs2 << " + " << certs3 << " certificates, 0 counterexamples";
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void(std::ostringstream&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "nonarchimedean amoeba of the paper line (exact)", 1.0, criterion1},
        {2, "nonarchimedean coamoeba: 7 strata + closure", 60.0, criterion2},
        {3, "shell exactness and phase-limit distance for 1+x+y", 30.0, criterion3},
        {4, "0-convexity over 50 random lines", 120.0, criterion4},
        {5, "1-convexity of the lifted line shell over 25 planes", 600.0, criterion5},
        {6, "linking vs cubical oracle cross-validation", 300.0, criterion6},
        {7, "chain-calculus invariant suite", 120.0, criterion7},
        {8, "cover compatibility at m=2", 120.0, criterion8},
        {9, "intersection stability of unions", 180.0, criterion9},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::ostringstream detail;
        std::string verdict = "PASS";
        std::string message;
        try {
            c.run(detail);
        } catch (const std::exception& e) {
            verdict = "FAIL";
            message = e.what();
            ++failures;
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (verdict == "PASS" && secs > c.budget_seconds) {
            verdict = "FAIL";
            message = "runtime budget exceeded";
            ++failures;
        }
        std::cout << verdict << " criterion-" << c.id << " [" << c.name << "] ("
                  << secs << "s / budget " << c.budget_seconds << "s)";
        if (!detail.str().empty()) std::cout << " -- " << detail.str();
        if (!message.empty()) std::cout << " -- " << message;
        std::cout << std::endl;
    }
    if (failures) {
        std::cout << failures << " criteria FAILED" << std::endl;
        return 1;
    }
    std::cout << "all 9 criteria passed" << std::endl;
    return 0;
}
