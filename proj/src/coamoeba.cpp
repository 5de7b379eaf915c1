#include "coamoeba/coamoeba.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace coamoeba {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

double arg_turns(const Cplx& z) {
    double t = std::arg(z) / kTau;
    t -= std::floor(t);
    if (t >= 1.0) t = 0.0;
    return t;
}

// Rationalize a phase in turns; q <= 360 per the shell cleanup rule, falling
// back to a dyadic approximation flagged inexact.
std::pair<Rat, bool> cleanup_phase(double turns) {
    turns -= std::floor(turns);
    Rat r;
    if (rationalize(turns, 360, 1e-12, r)) return {rat_mod1(r), true};
    const long long den = 1LL << 40;
    return {rat_mod1(Rat(Int(static_cast<long long>(std::round(turns * den))), Int(den))),
            false};
}

std::pair<Rat, bool> phase_of(const ComplexScalar& c) {
    if (c.exact) return {c.exact->phase, true};
    return cleanup_phase(arg_turns(c.value()));
}

// --- complex linear systems --------------------------------------------------

struct LineParam {
    std::vector<Cplx> base;    // solution with the free variable = 0
    std::vector<Cplx> dir;     // kernel vector (free variable = 1)
    int free_col = -1;
};

// Solves an affine-linear system sum a_ij x_j = b_i of n-1 equations, rank
// n-1, over C. Throws MathError when rank-deficient.
LineParam solve_line_system(const std::vector<LaurentPolynomial>& polys, int n) {
    const int k = static_cast<int>(polys.size());
    std::vector<std::vector<Cplx>> a(k, std::vector<Cplx>(n, Cplx(0)));
    std::vector<Cplx> b(k, Cplx(0));
    for (int i = 0; i < k; ++i) {
        for (const auto& t : polys[i].terms) {
            int var = -1;
            for (int j = 0; j < n; ++j)
                if (t.exp[j] != 0) {
                    if (t.exp[j] != 1 || var >= 0)
                        throw MathError("system is not affine-linear");
                    var = j;
                }
            if (var < 0)
                b[i] -= t.coeff.value();
            else
                a[i][var] += t.coeff.value();
        }
    }
    double scale = 1e-30;
    for (const auto& row : a)
        for (const auto& v : row) scale = std::max(scale, std::abs(v));
    const double tol = 1e-10 * scale;

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < k; ++c) {
        int piv = -1;
        double best = tol;
        for (int i = r; i < k; ++i)
            if (std::abs(a[i][c]) > best) {
                best = std::abs(a[i][c]);
                piv = i;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        for (int i = 0; i < k; ++i) {
            if (i == r) continue;
            Cplx f = a[i][c] / a[r][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < k) throw MathError("rank-deficient linear system");

    LineParam lp;
    lp.base.assign(n, Cplx(0));
    lp.dir.assign(n, Cplx(0));
    std::vector<bool> is_piv(n, false);
    for (int c : pivot_col) is_piv[c] = true;
    for (int c = 0; c < n; ++c)
        if (!is_piv[c]) {
            lp.free_col = c;
            break;
        }
    if (lp.free_col < 0) throw MathError("linear system has no free variable");
    lp.dir[lp.free_col] = 1.0;
    for (int i = 0; i < r; ++i) {
        lp.base[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
        lp.dir[pivot_col[i]] = -a[i][lp.free_col] / a[i][pivot_col[i]];
    }
    return lp;
}

// --- univariate roots ----------------------------------------------------------

std::vector<Cplx> durand_kerner(const std::vector<Cplx>& coeffs) {
    // coeffs[j] multiplies u^j, degree = coeffs.size()-1, leading != 0
    const int d = static_cast<int>(coeffs.size()) - 1;
    std::vector<Cplx> monic(coeffs.begin(), coeffs.end());
    for (auto& c : monic) c /= coeffs[d];
    auto eval = [&](Cplx u) {
        Cplx acc = 0;
        for (int j = d; j >= 0; --j) acc = acc * u + monic[j];
        return acc;
    };
    std::vector<Cplx> x(d);
    Cplx seed(0.4, 0.9);
    Cplx p = 1.0;
    for (int i = 0; i < d; ++i) {
        p *= seed;
        x[i] = p;
    }
    for (int iter = 0; iter < 200; ++iter) {
        double delta = 0;
        for (int i = 0; i < d; ++i) {
            Cplx num = eval(x[i]);
            Cplx den = 1.0;
            for (int j = 0; j < d; ++j)
                if (j != i) den *= (x[i] - x[j]);
            Cplx step = num / den;
            x[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14) break;
    }
    return x;
}

std::vector<Cplx> nth_roots(const Cplx& w, int d) {
    std::vector<Cplx> out;
    double r = std::pow(std::abs(w), 1.0 / d);
    double t = std::arg(w) / d;
    for (int k = 0; k < d; ++k)
        out.push_back(std::polar(r, t + kTau * k / d));
    return out;
}

// Roots of sum coeffs[j] u^j with coeffs[0] != 0 and leading != 0; exact polar
// preserved for the linear (binomial) case.
std::vector<ComplexScalar> univariate_roots(const std::vector<ComplexScalar>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d == 1) {
        ComplexScalar u = -(coeffs[0] * coeffs[1].reciprocal());
        return {u};
    }
    std::vector<Cplx> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].value();
    std::vector<Cplx> roots;
    if (d == 2) {
        Cplx a = c[2], b = c[1], cc = c[0];
        Cplx disc = std::sqrt(b * b - 4.0 * a * cc);
        // stable form: pick the sign that avoids cancellation
        Cplx q = (std::norm(b + disc) >= std::norm(b - disc)) ? (b + disc) : (b - disc);
        if (std::abs(q) < 1e-300) {
            roots = {Cplx(0), Cplx(0)};
        } else {
            roots.push_back(-q / (2.0 * a));
            roots.push_back(-2.0 * cc / q);
        }
    } else {
        roots = durand_kerner(c);
    }
    // Newton polish
    auto eval = [&](Cplx u, Cplx& deriv) {
        Cplx acc = 0, dacc = 0;
        for (int j = d; j >= 0; --j) {
            dacc = dacc * u + acc;
            acc = acc * u + c[j];
        }
        deriv = dacc;
        return acc;
    };
    std::vector<ComplexScalar> out;
    for (auto u : roots) {
        for (int it = 0; it < 3; ++it) {
            Cplx dv;
            Cplx f = eval(u, dv);
            if (std::abs(dv) > 1e-300) u -= f / dv;
        }
        out.push_back(ComplexScalar::from_double(u.real(), u.imag()));
    }
    return out;
}

// --- sampling ------------------------------------------------------------------

struct GridIter {
    int params;
    int radial, angular;
    double R;
    std::vector<int> idx;  // 2 indices per parameter (radius, angle)
    bool done = false;

    GridIter(int params_, const SampleParams& sp) : params(params_) {
        if (params <= 1) {
            radial = sp.radial_steps;
            angular = sp.angular_steps;
        } else {
            radial = sp.multi_radial_steps;
            angular = sp.multi_angular_steps;
        }
        R = sp.log_radius;
        idx.assign(2 * params, 0);
        if (params == 0) done = false;
    }

    std::vector<Cplx> values(double& max_log_r) const {
        std::vector<Cplx> v(params);
        max_log_r = 0;
        for (int p = 0; p < params; ++p) {
            double r = radial == 1 ? 0.0
                                   : -R + 2.0 * R * idx[2 * p] / (radial - 1);
            double th = kTau * idx[2 * p + 1] / angular;
            v[p] = std::polar(std::exp(r), th);
            max_log_r = std::max(max_log_r, std::abs(r));
        }
        return v;
    }

    void advance() {
        if (params == 0) {
            done = true;
            return;
        }
        for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
            int lim = (i % 2 == 0) ? radial : angular;
            if (++idx[i] < lim) return;
            idx[i] = 0;
        }
        done = true;
    }
};

// Main log-polar grid around 0 plus satellite rings around each critical
// parameter value: boundary strata live near those points and a grid centered
// at the origin cannot resolve their 2d neighborhoods.
std::vector<std::pair<Cplx, double>> log_polar_samples(
    const SampleParams& sp, const std::vector<Cplx>& critical) {
    std::vector<std::pair<Cplx, double>> out;
    const int radial = sp.radial_steps;
    const int angular = sp.angular_steps;
    for (int ri = 0; ri < radial; ++ri) {
        double r = radial == 1
                       ? 0.0
                       : -sp.log_radius + 2.0 * sp.log_radius * ri / (radial - 1);
        for (int ai = 0; ai < angular; ++ai)
            out.push_back({std::polar(std::exp(r), kTau * ai / angular),
                           std::abs(r)});
    }
    // satellite radii share the main grid's log step so refined grids nest
    const int sat_radial = std::max(3, (radial + 1) / 2);
    for (const auto& star : critical) {
        if (std::abs(star) < 1e-9) continue;  // the main grid surrounds 0
        for (int ri = 0; ri < sat_radial; ++ri) {
            double r = -sp.log_radius + sp.log_radius * ri / (sat_radial - 1);
            double rho = std::exp(r) * std::abs(star);
            for (int ai = 0; ai < angular; ++ai)
                out.push_back(
                    {star + std::polar(rho, kTau * ai / angular), std::abs(r)});
        }
    }
    return out;
}

bool certify_point(const VarietySpec& spec, const std::vector<Cplx>& x) {
    for (const auto& z : x)
        if (!(std::abs(z) > 0)) return false;
    for (const auto& f : spec.polynomials)
        if (std::abs(evaluate(f, x)) >= kCloudResidual) return false;
    return true;
}

void push_sample(PointCloud& cloud, const VarietySpec& spec,
                 const std::vector<Cplx>& x, double log_r) {
    if (!certify_point(spec, x)) return;
    std::vector<double> theta(x.size());
    for (size_t i = 0; i < x.size(); ++i) theta[i] = arg_turns(x[i]);
    cloud.points.push_back(std::move(theta));
    cloud.log_radius.push_back(log_r);
}

// Common exponent divisor >= 2 lets us sample the reduced system and emit
// all arg-preimages (the pullback structure of Remark-style covers).
int common_exponent_divisor(const VarietySpec& spec) {
    Int g = 0;
    for (const auto& f : spec.polynomials)
        for (const auto& t : f.terms)
            for (const auto& e : t.exp) g = boost::multiprecision::gcd(g, e);
    if (g == 0) return 1;
    long long gg = g.convert_to<long long>();
    return gg > 1 ? static_cast<int>(gg) : 1;
}

VarietySpec divide_exponents(const VarietySpec& spec, int m) {
    VarietySpec out = spec;
    out.polynomials.clear();
    for (const auto& f : spec.polynomials) {
        LaurentPolynomial g;
        g.ambient_dim = f.ambient_dim;
        for (const auto& t : f.terms) {
            LaurentTerm u = t;
            for (auto& e : u.exp) e /= m;
            g.terms.push_back(std::move(u));
        }
        out.polynomials.push_back(LaurentPolynomial::make(f.ambient_dim, g.terms));
    }
    return out;
}

void sample_hypersurface(const VarietySpec& spec, const SampleParams& sp,
                         PointCloud& cloud);
void sample_line(const VarietySpec& spec, const SampleParams& sp,
                 PointCloud& cloud);

void sample_dispatch(const VarietySpec& spec, const SampleParams& sp,
                     PointCloud& cloud) {
    const int m = sp.no_reduction ? 1 : common_exponent_divisor(spec);
    if (m > 1) {
        VarietySpec reduced = divide_exponents(spec, m);
        PointCloud base;
        base.ambient = spec.ambient_dim;
        sample_dispatch(reduced, sp, base);
        // Preimages under z -> z^m; each preimage is certified against the
        // original system before insertion.
        for (size_t i = 0; i < base.points.size(); ++i) {
            const auto& th = base.points[i];
            std::vector<int> k(spec.ambient_dim, 0);
            std::function<void(int)> rec = [&](int j) {
                if (j == spec.ambient_dim) {
                    std::vector<double> q(spec.ambient_dim);
                    for (int t = 0; t < spec.ambient_dim; ++t)
                        q[t] = (th[t] + k[t]) / m;
                    cloud.points.push_back(q);
                    cloud.log_radius.push_back(base.log_radius[i] / m);
                    return;
                }
                for (int kk = 0; kk < m; ++kk) {
                    k[j] = kk;
                    rec(j + 1);
                }
            };
            rec(0);
        }
        return;
    }
    const int n = spec.ambient_dim;
    const int np = static_cast<int>(spec.polynomials.size());
    bool all_linear = true;
    for (const auto& f : spec.polynomials)
        if (!is_affine_linear(f)) all_linear = false;
    if (np == n - 1 && all_linear && n >= 2) {
        sample_line(spec, sp, cloud);
        return;
    }
    if (np == 1) {
        sample_hypersurface(spec, sp, cloud);
        return;
    }
    throw MathError("sampling unsupported for this input class");
}

void sample_line(const VarietySpec& spec, const SampleParams& sp,
                 PointCloud& cloud) {
    LineParam lp = solve_line_system(spec.polynomials, spec.ambient_dim);
    cloud.resolution = 1.0 / sp.angular_steps;
    // critical parameters: where a coordinate of the parameterization vanishes
    std::vector<Cplx> critical;
    double vmax = 0;
    for (const auto& z : lp.dir) vmax = std::max(vmax, std::abs(z));
    for (int j = 0; j < spec.ambient_dim; ++j)
        if (std::abs(lp.dir[j]) > 1e-12 * vmax)
            critical.push_back(-lp.base[j] / lp.dir[j]);
    for (const auto& [s, log_r] : log_polar_samples(sp, critical)) {
        std::vector<Cplx> x(spec.ambient_dim);
        for (int j = 0; j < spec.ambient_dim; ++j) x[j] = lp.base[j] + s * lp.dir[j];
        push_sample(cloud, spec, x, log_r);
    }
}

// Collects f by powers of variable `var`; returns exponent -> coefficient
// polynomial (in the other variables, exponent entry zeroed).
std::map<long long, LaurentPolynomial> collect_variable(const LaurentPolynomial& f,
                                                        int var) {
    std::map<long long, std::vector<LaurentTerm>> groups;
    for (const auto& t : f.terms) {
        LaurentTerm u = t;
        long long e = u.exp[var].convert_to<long long>();
        u.exp[var] = 0;
        groups[e].push_back(std::move(u));
    }
    std::map<long long, LaurentPolynomial> out;
    for (auto& [e, ts] : groups)
        out.emplace(e, LaurentPolynomial::make(f.ambient_dim, ts));
    return out;
}

void sample_hypersurface(const VarietySpec& spec, const SampleParams& sp,
                         PointCloud& cloud) {
    const auto& f = spec.polynomials[0];
    const int n = spec.ambient_dim;

    // Distinguished variable: at most two distinct powers (binomial in u) or
    // three in arithmetic progression (quadratic in u^step).
    int var = -1;
    std::map<long long, LaurentPolynomial> groups;
    for (int i = 0; i < n; ++i) {
        auto g = collect_variable(f, i);
        if (g.size() == 1) continue;  // variable does not really occur
        if (g.size() == 2) {
            var = i;
            groups = std::move(g);
            break;
        }
        if (g.size() == 3) {
            auto it = g.begin();
            long long e0 = it->first;
            long long e1 = (++it)->first;
            long long e2 = (++it)->first;
            if (e1 - e0 == e2 - e1) {
                var = i;
                groups = std::move(g);
                break;
            }
        }
    }
    if (var < 0)
        throw MathError(
            "hypersurface is not solvable for a distinguished variable");

    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != var) others.push_back(i);

    // grid over the free variables; with a single free variable, enrich it
    // with rings around the roots of the coefficient polynomials
    std::vector<std::vector<Cplx>> grid_vals;
    std::vector<double> grid_logr;
    if (n - 1 == 1) {
        std::vector<Cplx> critical;
        const int ov = others[0];
        for (const auto& [e, cf] : groups) {
            // univariate coefficients in the free variable
            long long lo = 0, hi = 0;
            bool first = true;
            for (const auto& t : cf.terms) {
                long long d2 = t.exp[ov].convert_to<long long>();
                if (first || d2 < lo) lo = d2;
                if (first || d2 > hi) hi = d2;
                first = false;
            }
            if (first || hi == lo) continue;
            std::vector<ComplexScalar> coeffs(
                hi - lo + 1, ComplexScalar::from_double(0, 0));
            for (const auto& t : cf.terms)
                coeffs[t.exp[ov].convert_to<long long>() - lo] = t.coeff;
            for (const auto& root : univariate_roots(coeffs))
                if (root.abs() > 1e-9) critical.push_back(root.value());
        }
        for (const auto& [s, lr] : log_polar_samples(sp, critical)) {
            grid_vals.push_back({s});
            grid_logr.push_back(lr);
        }
        cloud.resolution = 1.0 / sp.angular_steps;
    } else {
        GridIter g(n - 1, sp);
        cloud.resolution = 1.0 / g.angular;
        while (!g.done) {
            double lr;
            grid_vals.push_back(g.values(lr));
            grid_logr.push_back(lr);
            g.advance();
        }
    }

    for (size_t gi = 0; gi < grid_vals.size(); ++gi) {
        const auto& vals = grid_vals[gi];
        double log_r = grid_logr[gi];
        std::vector<Cplx> x(n, Cplx(1.0));
        bool on_axis = false;
        for (size_t i = 0; i < others.size(); ++i) {
            x[others[i]] = vals[i];
            if (std::abs(vals[i]) < 1e-300) on_axis = true;
        }
        if (on_axis) continue;

        // evaluate the coefficient polynomials
        std::vector<std::pair<long long, Cplx>> cs;
        bool bad = false;
        for (const auto& [e, cf] : groups) {
            Cplx v = evaluate(cf, x);
            cs.push_back({e, v});
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) bad = true;
        }
        if (bad) continue;
        long long e0 = cs.front().first;
        std::vector<Cplx> roots_u;
        if (cs.size() == 2) {
            long long d = cs[1].first - e0;
            if (std::abs(cs[1].second) > 1e-300) {
                Cplx w = -cs[0].second / cs[1].second;
                if (std::abs(w) > 1e-300)
                    roots_u = nth_roots(w, static_cast<int>(d));
            }
        } else {
            long long step = cs[1].first - e0;
            Cplx A = cs[2].second, B = cs[1].second, C = cs[0].second;
            std::vector<Cplx> vroots;
            if (std::abs(A) > 1e-12 * (std::abs(B) + std::abs(C) + 1e-300)) {
                auto rs = univariate_roots({ComplexScalar::from_double(C.real(), C.imag()),
                                            ComplexScalar::from_double(B.real(), B.imag()),
                                            ComplexScalar::from_double(A.real(), A.imag())});
                for (const auto& r : rs) vroots.push_back(r.value());
            } else if (std::abs(B) > 1e-300) {
                vroots.push_back(-C / B);
            }
            for (const auto& vr : vroots) {
                if (std::abs(vr) < 1e-300) continue;
                for (const auto& u : nth_roots(vr, static_cast<int>(step)))
                    roots_u.push_back(u);
            }
        }
        for (auto u : roots_u) {
            if (std::abs(u) < 1e-300) continue;
            // Newton polish on the full univariate in u
            for (int it = 0; it < 3; ++it) {
                Cplx fv = 0, dv = 0;
                for (const auto& [e, c] : cs) {
                    Cplx ue = std::pow(u, static_cast<double>(e));
                    fv += c * ue;
                    dv += c * static_cast<double>(e) * ue / u;
                }
                if (std::abs(dv) > 1e-300) u -= fv / dv;
            }
            x[var] = u;
            push_sample(cloud, spec, x, log_r);
        }
    }
}

}  // namespace

PointCloud sample_coamoeba(const VarietySpec& spec, const SampleParams& sp) {
    PointCloud cloud;
    cloud.ambient = spec.ambient_dim;
    cloud.source = "sample_coamoeba";
    sample_dispatch(spec, sp, cloud);
    return cloud;
}

std::vector<std::vector<double>> sample_amoeba(const VarietySpec& spec,
                                               const SampleParams& sp) {
    // Reuse the coamoeba solver but record log moduli: resample and track.
    // For the debugging subcommand we redo the sampling with the same grid and
    // collect Log images of certified points.
    struct Helper {
        static std::vector<std::vector<double>> run(const VarietySpec& spec,
                                                    const SampleParams& sp) {
            PointCloud dummy;
            dummy.ambient = spec.ambient_dim;
            std::vector<std::vector<double>> logs;
            // quick approach: sample coamoeba points' witnesses are not kept;
            // instead, directly reuse line/hypersurface paths via the public
            // cloud and a parallel log recording is not available. Sample the
            // line system directly here for supported classes.
            const int n = spec.ambient_dim;
            bool all_linear = true;
            for (const auto& f : spec.polynomials)
                if (!is_affine_linear(f)) all_linear = false;
            if (static_cast<int>(spec.polynomials.size()) == n - 1 && all_linear &&
                n >= 2) {
                LineParam lp = solve_line_system(spec.polynomials, n);
                GridIter g(1, sp);
                while (!g.done) {
                    double lr;
                    auto v = g.values(lr);
                    std::vector<Cplx> x(n);
                    bool ok = true;
                    for (int j = 0; j < n; ++j) {
                        x[j] = lp.base[j] + v[0] * lp.dir[j];
                        if (!(std::abs(x[j]) > 0)) ok = false;
                    }
                    if (ok && certify_point(spec, x)) {
                        std::vector<double> lg(n);
                        for (int j = 0; j < n; ++j) lg[j] = std::log(std::abs(x[j]));
                        logs.push_back(std::move(lg));
                    }
                    g.advance();
                }
                return logs;
            }
            throw MathError("amoeba-sample supports line systems only");
        }
    };
    return Helper::run(spec, sp);
}

// --- shell ---------------------------------------------------------------------

namespace {

// Initial form of a hypersurface at a maximal cone is supported on an edge of
// the Newton polytope: reduce to a univariate polynomial in u = x^gamma.
std::vector<AffineSubgroupCoset> cosets_of_edge_initial(
    const LaurentPolynomial& in_f, const RationalSubspace& cone_span) {
    const int n = in_f.ambient_dim;
    if (in_f.terms.size() < 2)
        throw MathError("initial form at a maximal cone has a single term");
    // direction of the support line
    IntVec gamma;
    RatVec d0(n);
    for (int j = 0; j < n; ++j)
        d0[j] = Rat(in_f.terms[1].exp[j] - in_f.terms[0].exp[j]);
    gamma = primitive(d0);
    Rat g2 = 0;
    for (int j = 0; j < n; ++j) g2 += Rat(gamma[j]) * Rat(gamma[j]);
    std::vector<std::pair<long long, ComplexScalar>> uni;
    for (const auto& t : in_f.terms) {
        Rat tpos = 0;
        RatVec diff(n);
        for (int j = 0; j < n; ++j) tpos += Rat(t.exp[j] - in_f.terms[0].exp[j]) * Rat(gamma[j]);
        Rat steps = tpos / g2;
        if (denominator(steps) != 1)
            throw MathError("initial support is not on a lattice line");
        // verify collinearity
        for (int j = 0; j < n; ++j)
            if (Rat(t.exp[j] - in_f.terms[0].exp[j]) != steps * Rat(gamma[j]))
                throw MathError("non-collinear initial support at a maximal cone");
        uni.push_back({steps.convert_to<long long>(), t.coeff});
    }
    std::sort(uni.begin(), uni.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    long long base = uni.front().first;
    long long deg = uni.back().first - base;
    std::vector<ComplexScalar> coeffs(deg + 1, ComplexScalar::from_double(0, 0));
    for (const auto& [e, c] : uni) coeffs[e - base] = c;
    auto roots = univariate_roots(coeffs);

    // direction N = gamma^perp must equal the cone span
    RatMat gm = {to_ratvec(gamma)};
    RationalSubspace N;
    N.ambient = n;
    N.basis = kernel_basis(gm, n);
    if (!(N == cone_span))
        throw MathError("edge direction does not match the cone span");

    std::vector<AffineSubgroupCoset> out;
    std::set<std::string> seen;
    for (const auto& u : roots) {
        auto [phase, exact] = phase_of(u);
        // coset {gamma . theta = phase}: offset point = phase * gamma / |gamma|^2
        RatVec theta0(n, Rat(0));
        for (int j = 0; j < n; ++j) theta0[j] = phase * Rat(gamma[j]) / g2;
        std::vector<bool> flags(n, exact);
        auto coset = AffineSubgroupCoset::make(N, theta0, &flags);
        if (seen.insert(coset.key()).second) out.push_back(std::move(coset));
    }
    return out;
}

// Initial system of a line at a maximal ray: solve the affine-linear system;
// the solution is p + C v with complementary supports, giving one coset.
std::vector<AffineSubgroupCoset> cosets_of_line_initial(
    const std::vector<LaurentPolynomial>& sys, int n,
    const RationalSubspace& cone_span) {
    LineParam lp = solve_line_system(sys, n);
    double vmax = 0;
    for (const auto& z : lp.dir) vmax = std::max(vmax, std::abs(z));
    std::vector<int> supp;
    for (int j = 0; j < n; ++j)
        if (std::abs(lp.dir[j]) > 1e-9 * vmax) supp.push_back(j);
    // shift the basepoint to vanish on the support of the direction
    int i0 = supp[0];
    for (int j : supp)
        if (std::abs(lp.dir[j]) > std::abs(lp.dir[i0])) i0 = j;
    Cplx s0 = -lp.base[i0] / lp.dir[i0];
    std::vector<Cplx> p(n);
    double scale = 1e-300;
    for (int j = 0; j < n; ++j) {
        p[j] = lp.base[j] + s0 * lp.dir[j];
        scale = std::max(scale, std::abs(lp.base[j]));
    }
    for (int j : supp)
        if (std::abs(p[j]) > 1e-7 * std::max(1.0, scale))
            throw MathError("initial variety of the line is not a torus coset");
    RatVec theta0(n, Rat(0));
    std::vector<bool> flags(n, true);
    RatVec ind(n, Rat(0));
    std::vector<bool> in_supp(n, false);
    for (int j : supp) in_supp[j] = true;
    for (int j = 0; j < n; ++j) {
        Cplx w = in_supp[j] ? lp.dir[j] : p[j];
        if (!in_supp[j] && std::abs(w) < 1e-12 * std::max(1.0, scale))
            throw MathError("initial variety misses the torus");
        auto [ph, exact] = cleanup_phase(arg_turns(w));
        theta0[j] = ph;
        flags[j] = exact;
        if (in_supp[j]) ind[j] = 1;
    }
    RationalSubspace N = RationalSubspace::span_of(n, {ind});
    if (!(N == cone_span))
        throw MathError("line initial system direction does not match the cone");
    return {AffineSubgroupCoset::make(N, theta0, &flags)};
}

// All-binomial initial system: solve Gamma theta = phi (mod 1) by Smith form.
std::vector<AffineSubgroupCoset> cosets_of_binomial_system(
    const std::vector<LaurentPolynomial>& sys, int n,
    const RationalSubspace& cone_span) {
    IntMat gamma_rows;
    std::vector<Rat> phis;
    std::vector<bool> exact_flags;
    for (const auto& f : sys) {
        if (f.terms.size() != 2)
            throw MathError("non-binomial maximal initial system");
        IntVec g(n);
        for (int j = 0; j < n; ++j) g[j] = f.terms[1].exp[j] - f.terms[0].exp[j];
        // a x^e0 + b x^e1 = 0  =>  x^(e1-e0) = -a/b
        ComplexScalar ratio = -(f.terms[0].coeff * f.terms[1].coeff.reciprocal());
        auto [ph, exact] = phase_of(ratio);
        gamma_rows.push_back(g);
        phis.push_back(ph);
        exact_flags.push_back(exact);
    }
    SmithForm sf = smith_normal_form(gamma_rows);
    const int k = static_cast<int>(gamma_rows.size());
    // eta = V^{-1} theta; d_i eta_i = (U phi)_i mod 1
    std::vector<Rat> uphi(k, Rat(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) uphi[i] += Rat(sf.u[i][j]) * phis[j];
    int r = 0;
    while (r < std::min(k, n) && sf.d[r][r] != 0) ++r;
    for (int i = r; i < k; ++i)
        if (rat_mod1(uphi[i]) != 0)
            throw MathError("binomial system has no torus solutions");
    // enumerate eta_i classes
    std::vector<AffineSubgroupCoset> out;
    std::vector<Int> counts(r);
    for (int i = 0; i < r; ++i) counts[i] = sf.d[i][i];
    std::vector<Int> pick(r, Int(0));
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            RatVec eta(n, Rat(0));
            for (int t = 0; t < r; ++t)
                eta[t] = rat_mod1((uphi[t] + Rat(pick[t])) / Rat(sf.d[t][t]));
            RatVec theta(n, Rat(0));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) theta[a] += Rat(sf.v[a][b]) * eta[b];
            bool all_exact = true;
            for (bool e : exact_flags) all_exact &= e;
            std::vector<bool> flags(n, all_exact);
            out.push_back(AffineSubgroupCoset::make(cone_span, theta, &flags));
            return;
        }
        for (Int kk = 0; kk < counts[i]; ++kk) {
            pick[i] = kk;
            rec(i + 1);
        }
    };
    rec(0);
    std::set<std::string> seen;
    std::vector<AffineSubgroupCoset> dedup;
    for (auto& c : out)
        if (seen.insert(c.key()).second) dedup.push_back(std::move(c));
    return dedup;
}

std::vector<AffineSubgroupCoset> cosets_of_initial_system(
    const std::vector<LaurentPolynomial>& sys, int n, InputClass cls,
    const RationalSubspace& cone_span) {
    if (cls == InputClass::Hypersurface)
        return cosets_of_edge_initial(sys[0], cone_span);
    bool all_binomial = true;
    for (const auto& f : sys) all_binomial &= (f.terms.size() == 2);
    if (all_binomial && static_cast<int>(sys.size()) >= 1 &&
        cls == InputClass::CompleteIntersection)
        return cosets_of_binomial_system(sys, n, cone_span);
    if (cls == InputClass::Line)
        return cosets_of_line_initial(sys, n, cone_span);
    if (all_binomial) return cosets_of_binomial_system(sys, n, cone_span);
    throw MathError("non-binomial maximal initial system");
}

}  // namespace

std::vector<AffineSubgroupCoset> binomial_system_cosets(
    const std::vector<LaurentPolynomial>& sys, int ambient) {
    RatMat rows;
    for (const auto& f : sys) {
        if (f.terms.size() != 2)
            throw MathError("binomial_system_cosets: non-binomial polynomial");
        RatVec g(ambient);
        for (int j = 0; j < ambient; ++j)
            g[j] = Rat(f.terms[1].exp[j] - f.terms[0].exp[j]);
        rows.push_back(std::move(g));
    }
    RationalSubspace dir;
    dir.ambient = ambient;
    dir.basis = kernel_basis(rows, ambient);
    return cosets_of_binomial_system(sys, ambient, dir);
}

Shell shell(const TropicalFan& fan) {
    Shell sh;
    sh.ambient = fan.ambient;
    const InputClass cls = fan.source.input_class;
    for (size_t i = 0; i < fan.cones.size(); ++i) {
        const auto& c = fan.cones[i];
        if (!c.maximal || c.cone.dim() == 0) continue;
        auto cosets =
            cosets_of_initial_system(c.initial_system, fan.ambient, cls, c.cone.span);
        for (auto& coset : cosets) {
            ShellCoset scs;
            scs.coset = std::move(coset);
            scs.cone_index = static_cast<int>(i);
            scs.initial_system = c.initial_system;
            sh.cosets.push_back(std::move(scs));
        }
    }
    return sh;
}

Shell shell(const VarietySpec& spec) { return shell(tropical_fan(spec)); }

PhaseLimitSet phase_limit_set(const VarietySpec& spec, const SampleParams& sp) {
    TropicalFan fan = tropical_fan(spec);
    PhaseLimitSet pls;
    pls.ambient = spec.ambient_dim;
    for (size_t i = 0; i < fan.cones.size(); ++i) {
        const auto& c = fan.cones[i];
        if (c.cone.dim() == 0) continue;  // sigma != 0 only
        PhaseLimitStratum st;
        st.cone_index = static_cast<int>(i);
        st.cone_dim = c.cone.dim();
        st.invariance = c.cone.span;
        if (c.maximal) {
            st.exact = true;
            st.cosets = cosets_of_initial_system(c.initial_system, fan.ambient,
                                                 spec.input_class, c.cone.span);
        } else {
            st.exact = false;
            VarietySpec sub =
                VarietySpec::make(spec.ambient_dim, spec.input_class, c.initial_system);
            st.cloud = sample_coamoeba(sub, sp);
        }
        pls.strata.push_back(std::move(st));
    }
    return pls;
}

LiftedArrangement lifted(const Shell& sh, const Box& box) {
    LiftedArrangement arr;
    arr.ambient = sh.ambient;
    for (const auto& c : sh.cosets) arr.members.push_back(c.coset);
    arr.box = box;
    return arr;
}

std::vector<std::vector<double>> lifted_cloud(const PointCloud& cloud,
                                              const Box& box) {
    std::vector<std::vector<double>> out;
    const int n = cloud.ambient;
    std::vector<long long> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        lo[j] = static_cast<long long>(std::floor(rat_double(box.lo[j]))) - 1;
        hi[j] = static_cast<long long>(std::ceil(rat_double(box.hi[j])));
    }
    for (const auto& p : cloud.points) {
        std::vector<long long> k(n, 0);
        std::function<void(int)> rec = [&](int j) {
            if (j == n) {
                std::vector<double> q(n);
                for (int t = 0; t < n; ++t) {
                    q[t] = p[t] + k[t];
                    if (q[t] < rat_double(box.lo[t]) || q[t] > rat_double(box.hi[t]))
                        return;
                }
                out.push_back(std::move(q));
                return;
            }
            for (long long kk = lo[j]; kk <= hi[j]; ++kk) {
                k[j] = kk;
                rec(j + 1);
            }
        };
        rec(0);
    }
    return out;
}

double torus_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = std::abs(a[i] - b[i]);
        d = std::min(d, 1.0 - d);
        s += d * d;
    }
    return std::sqrt(s);
}

double directed_hausdorff(const std::vector<std::vector<double>>& a,
                          const std::vector<std::vector<double>>& b) {
    if (a.empty()) return 0.0;
    if (b.empty()) return std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(a[0].size());
    const int g = 32;  // buckets per axis
    auto bucket_of = [&](const std::vector<double>& p) {
        long long key = 0;
        for (int i = 0; i < n; ++i) {
            int c = static_cast<int>(std::floor(p[i] * g)) % g;
            if (c < 0) c += g;
            key = key * g + c;
        }
        return key;
    };
    std::unordered_map<long long, std::vector<int>> buckets;
    for (size_t i = 0; i < b.size(); ++i)
        buckets[bucket_of(b[i])].push_back(static_cast<int>(i));

    double worst = 0;
    for (const auto& p : a) {
        double best = std::numeric_limits<double>::infinity();
        // expanding ring search
        for (int radius = 0; radius < g / 2; ++radius) {
            std::vector<int> cell(n);
            std::function<void(int)> rec = [&](int d) {
                if (d == n) {
                    bool on_ring = false;
                    for (int i = 0; i < n; ++i)
                        if (std::abs(cell[i]) == radius) on_ring = true;
                    if (!on_ring && radius > 0) return;
                    long long key = 0;
                    for (int i = 0; i < n; ++i) {
                        int c = (static_cast<int>(std::floor(p[i] * g)) + cell[i]) % g;
                        if (c < 0) c += g;
                        key = key * g + c;
                    }
                    auto it = buckets.find(key);
                    if (it == buckets.end()) return;
                    for (int idx : it->second)
                        best = std::min(best, torus_dist(p, b[idx]));
                    return;
                }
                for (int c = -radius; c <= radius; ++c) {
                    cell[d] = c;
                    rec(d + 1);
                }
            };
            rec(0);
            if (best <= static_cast<double>(radius) / g) break;
        }
        if (!std::isfinite(best)) {
            for (const auto& q : b) best = std::min(best, torus_dist(p, q));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

VarietySpec pullback_spec(const VarietySpec& spec, int m) {
    if (m < 1) throw InputError("cover degree must be >= 1");
    VarietySpec out = spec;
    out.polynomials.clear();
    for (const auto& f : spec.polynomials) {
        LaurentPolynomial g;
        g.ambient_dim = f.ambient_dim;
        std::vector<LaurentTerm> ts;
        for (const auto& t : f.terms) {
            LaurentTerm u = t;
            for (auto& e : u.exp) e *= m;
            ts.push_back(std::move(u));
        }
        out.polynomials.push_back(LaurentPolynomial::make(f.ambient_dim, ts));
    }
    if (m > 1 && out.input_class == InputClass::Line) {
        out.input_class = InputClass::CompleteIntersection;
        out.declared_codim = static_cast<int>(out.polynomials.size());
    }
    return out;
}

}  // namespace coamoeba
