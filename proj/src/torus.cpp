#include "coamoeba/torus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

namespace coamoeba {

IntMat hermite_normal_form(IntMat a) {
    if (a.empty()) return a;
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
        // gcd-reduce column c across rows >= r
        for (;;) {
            int piv = -1;
            for (size_t i = r; i < a.size(); ++i)
                if (a[i][c] != 0 && (piv < 0 ||
                                     boost::multiprecision::abs(a[i][c]) <
                                         boost::multiprecision::abs(a[piv][c])))
                    piv = static_cast<int>(i);
            if (piv < 0) break;
            std::swap(a[r], a[piv]);
            bool done = true;
            for (size_t i = r + 1; i < a.size(); ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (int j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q = a[i][c] / a[r][c];
            if (a[i][c] - q * a[r][c] < 0) q -= 1;
            if (q != 0)
                for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

IntMat integer_kernel(const IntMat& a_in, int ncols) {
    // Column-reduce [a] with unimodular column ops tracked in v.
    IntMat a = a_in;
    IntMat v(ncols, IntVec(ncols, Int(0)));
    for (int i = 0; i < ncols; ++i) v[i][i] = 1;  // v columns track combos
    const int rows = static_cast<int>(a.size());
    auto col_addmul = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
        for (int i = 0; i < ncols; ++i) v[i][dst] -= q * v[i][src];
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
        for (int i = 0; i < ncols; ++i) std::swap(v[i][x], v[i][y]);
    };
    int c = 0;
    for (int r = 0; r < rows && c < ncols; ++r) {
        for (;;) {
            int piv = -1;
            for (int j = c; j < ncols; ++j)
                if (a[r][j] != 0 &&
                    (piv < 0 || boost::multiprecision::abs(a[r][j]) <
                                    boost::multiprecision::abs(a[r][piv])))
                    piv = j;
            if (piv < 0) break;
            col_swap(c, piv);
            bool done = true;
            for (int j = c + 1; j < ncols; ++j) {
                if (a[r][j] == 0) continue;
                Int q = a[r][j] / a[r][c];
                col_addmul(j, c, q);
                if (a[r][j] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][c] != 0) ++c;
    }
    IntMat kernel;
    for (int j = c; j < ncols; ++j) {
        IntVec col(ncols);
        for (int i = 0; i < ncols; ++i) col[i] = v[i][j];
        kernel.push_back(std::move(col));
    }
    return hermite_normal_form(kernel);
}

SmithForm smith_normal_form(IntMat a) {
    SmithForm s;
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    s.u.assign(m, IntVec(m, Int(0)));
    s.v.assign(n, IntVec(n, Int(0)));
    for (int i = 0; i < m; ++i) s.u[i][i] = 1;
    for (int i = 0; i < n; ++i) s.v[i][i] = 1;

    auto row_addmul = [&](int dst, int src, const Int& q) {
        for (int j = 0; j < n; ++j) a[dst][j] -= q * a[src][j];
        for (int j = 0; j < m; ++j) s.u[dst][j] -= q * s.u[src][j];
    };
    auto col_addmul = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
        for (int i = 0; i < n; ++i) s.v[i][dst] -= q * s.v[i][src];
    };
    auto row_swap = [&](int x, int y) {
        std::swap(a[x], a[y]);
        std::swap(s.u[x], s.u[y]);
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < m; ++i) std::swap(a[i][x], a[i][y]);
        for (int i = 0; i < n; ++i) std::swap(s.v[i][x], s.v[i][y]);
    };
    auto row_negate = [&](int x) {
        for (int j = 0; j < n; ++j) a[x][j] = -a[x][j];
        for (int j = 0; j < m; ++j) s.u[x][j] = -s.u[x][j];
    };

    int t = 0;
    while (t < m && t < n) {
        // find smallest nonzero entry in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || boost::multiprecision::abs(a[i][j]) <
                                   boost::multiprecision::abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        bool clean = true;
        for (int i = t + 1; i < m; ++i)
            if (a[i][t] != 0) {
                Int q = a[i][t] / a[t][t];
                row_addmul(i, t, q);
                if (a[i][t] != 0) clean = false;
            }
        for (int j = t + 1; j < n; ++j)
            if (a[t][j] != 0) {
                Int q = a[t][j] / a[t][t];
                col_addmul(j, t, q);
                if (a[t][j] != 0) clean = false;
            }
        if (!clean) continue;
        // divisibility pass: a[t][t] must divide every later entry
        bool fixed = false;
        for (int i = t + 1; i < m && !fixed; ++i)
            for (int j = t + 1; j < n && !fixed; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_addmul(t, i, Int(-1));  // add row i into row t
                    fixed = true;
                }
        if (fixed) continue;
        if (a[t][t] < 0) row_negate(t);
        ++t;
    }
    s.d = std::move(a);
    return s;
}

TorusPoint TorusPoint::from_doubles(std::vector<double> c) {
    TorusPoint p;
    for (auto& x : c) {
        x -= std::floor(x);
        if (x >= 1.0) x = 0.0;
    }
    p.coords = std::move(c);
    return p;
}

TorusPoint TorusPoint::from_rationals(const RatVec& c) {
    TorusPoint p;
    RatVec red(c.size());
    for (size_t i = 0; i < c.size(); ++i) red[i] = rat_mod1(c[i]);
    p.coords = to_doubles(red);
    p.exact = red;
    return p;
}

AffineSubgroupCoset AffineSubgroupCoset::make(
    const RationalSubspace& direction, const RatVec& offset_point,
    const std::vector<bool>* exact_flags) {
    AffineSubgroupCoset c;
    c.ambient = direction.ambient;
    c.direction = direction;
    IntMat span_rows;
    for (const auto& row : direction.basis) span_rows.push_back(primitive(row));
    if (span_rows.empty())
        span_rows.push_back(IntVec(direction.ambient, Int(0)));
    c.lattice = integer_kernel(span_rows, direction.ambient);
    if (direction.dim() == 0) {
        // zero direction: kernel of the zero row is everything
        IntMat id(direction.ambient, IntVec(direction.ambient, Int(0)));
        for (int i = 0; i < direction.ambient; ++i) id[i][i] = 1;
        c.lattice = id;
    }
    c.offsets.resize(c.lattice.size());
    c.offset_exact.assign(c.lattice.size(), true);
    for (size_t i = 0; i < c.lattice.size(); ++i) {
        Rat v = 0;
        for (int j = 0; j < c.ambient; ++j) v += Rat(c.lattice[i][j]) * offset_point[j];
        c.offsets[i] = rat_mod1(v);
    }
    if (exact_flags) {
        // row offset inexact if it uses any inexact coordinate
        for (size_t i = 0; i < c.lattice.size(); ++i) {
            bool ok = true;
            for (int j = 0; j < c.ambient; ++j)
                if (c.lattice[i][j] != 0 && !(*exact_flags)[j]) ok = false;
            c.offset_exact[i] = ok;
        }
    }
    return c;
}

bool AffineSubgroupCoset::operator==(const AffineSubgroupCoset& o) const {
    return ambient == o.ambient && lattice == o.lattice && offsets == o.offsets;
}

std::string AffineSubgroupCoset::key() const {
    std::string s = std::to_string(ambient) + ":";
    for (const auto& row : lattice) {
        for (const auto& x : row) s += x.str() + ",";
        s += ";";
    }
    s += "|";
    for (const auto& r : offsets) s += rat_str(r) + ",";
    return s;
}

bool AffineSubgroupCoset::contains(const RatVec& theta) const {
    for (size_t i = 0; i < lattice.size(); ++i) {
        Rat v = 0;
        for (int j = 0; j < ambient; ++j) v += Rat(lattice[i][j]) * theta[j];
        if (rat_mod1(v - offsets[i]) != 0) return false;
    }
    return true;
}

double AffineSubgroupCoset::distance(const std::vector<double>& theta) const {
    // Euclidean distance in R^n to the nearest translate lift {A x = c + k}.
    // N^perp projector applied to the offset of theta from the coset, searched
    // over nearby lattice shifts.
    const int n = ambient;
    RatMat rows;
    for (const auto& r : lattice) rows.push_back(to_ratvec(r));
    // Base lift solution of A x = c.
    auto base = solve_linear(rows, offsets);
    if (!base) return std::numeric_limits<double>::infinity();
    std::vector<double> base_d = to_doubles(*base);
    // Orthonormal-ish projector onto the row space of A computed numerically.
    // d(theta) = | P (theta - base - z) | minimized over z in {-1,0,1}^n shifts
    // of the relevant lattice directions; since A theta is what matters, work
    // in character values: dist in value space mapped back by pseudoinverse.
    // We use: x = theta - base; for each row i, v_i = A_i . x - round(A_i . x).
    // Then distance = |A^+ v| with A^+ the pseudoinverse (A has full row rank).
    const int m = static_cast<int>(lattice.size());
    std::vector<double> v(m);
    for (int i = 0; i < m; ++i) {
        double s = 0;
        for (int j = 0; j < n; ++j)
            s += rat_double(Rat(lattice[i][j])) * (theta[j] - base_d[j]);
        v[i] = s - std::round(s);
    }
    // Solve (A A^T) y = v, distance = sqrt(v . y).
    std::vector<std::vector<double>> g(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double s = 0;
            for (int k = 0; k < n; ++k)
                s += rat_double(Rat(lattice[i][k])) * rat_double(Rat(lattice[j][k]));
            g[i][j] = s;
        }
    // gaussian solve
    std::vector<double> y = v;
    for (int c2 = 0; c2 < m; ++c2) {
        int piv = c2;
        for (int i = c2 + 1; i < m; ++i)
            if (std::abs(g[i][c2]) > std::abs(g[piv][c2])) piv = i;
        std::swap(g[c2], g[piv]);
        std::swap(y[c2], y[piv]);
        for (int i = 0; i < m; ++i) {
            if (i == c2 || g[i][c2] == 0) continue;
            double f = g[i][c2] / g[c2][c2];
            for (int j = c2; j < m; ++j) g[i][j] -= f * g[c2][j];
            y[i] -= f * y[c2];
        }
    }
    double d2 = 0;
    for (int i = 0; i < m; ++i) d2 += v[i] * (y[i] / g[i][i]);
    return std::sqrt(std::max(0.0, d2));
}

std::vector<AffineSubspace> enumerate_in_box(const LiftedArrangement& arr,
                                             const Box& box) {
    std::vector<AffineSubspace> out;
    const int n = box.dim();
    for (const auto& member : arr.members) {
        const int m = static_cast<int>(member.lattice.size());
        // Range of A_i . theta over the box.
        std::vector<Int> klo(m), khi(m);
        for (int i = 0; i < m; ++i) {
            Rat lo = 0, hi = 0;
            for (int j = 0; j < n; ++j) {
                Rat a = Rat(member.lattice[i][j]);
                if (a >= 0) {
                    lo += a * box.lo[j];
                    hi += a * box.hi[j];
                } else {
                    lo += a * box.hi[j];
                    hi += a * box.lo[j];
                }
            }
            // k in [lo - c, hi - c]
            Rat a = lo - member.offsets[i], b = hi - member.offsets[i];
            Int ka = numerator(a) >= 0 ? (numerator(a) + denominator(a) - 1) / denominator(a)
                                       : numerator(a) / denominator(a);
            while (Rat(ka) < a) ka += 1;
            while (Rat(ka - 1) >= a) ka -= 1;
            Int kb = numerator(b) / denominator(b);
            while (Rat(kb) > b) kb -= 1;
            while (Rat(kb + 1) <= b) kb += 1;
            klo[i] = ka;
            khi[i] = kb;
        }
        // Enumerate lattice shifts lexicographically.
        std::vector<Int> k(m);
        std::function<void(int)> rec = [&](int i) {
            if (i == m) {
                RatMat rows;
                RatVec rhs;
                for (int r = 0; r < m; ++r) {
                    rows.push_back(to_ratvec(member.lattice[r]));
                    rhs.push_back(member.offsets[r] + Rat(k[r]));
                }
                auto x = solve_linear(rows, rhs);
                if (!x) return;
                // check the affine subspace meets the closed box
                std::vector<LinearConstraint> cons;
                for (int r = 0; r < m; ++r)
                    cons.push_back({rows[r], rhs[r], Rel::Eq});
                for (int j = 0; j < n; ++j) {
                    LinearConstraint c1, c2;
                    c1.a.assign(n, Rat(0));
                    c1.a[j] = 1;
                    c1.b = box.hi[j];
                    c1.rel = Rel::Le;
                    c2.a.assign(n, Rat(0));
                    c2.a[j] = -1;
                    c2.b = -box.lo[j];
                    c2.rel = Rel::Le;
                    cons.push_back(c1);
                    cons.push_back(c2);
                }
                if (!fm_feasible(cons, n)) return;
                RationalSubspace dir;
                dir.ambient = n;
                dir.basis = kernel_basis(rows, n);
                out.emplace_back(*x, dir);
                return;
            }
            for (Int kk = klo[i]; kk <= khi[i]; ++kk) {
                k[i] = kk;
                rec(i + 1);
            }
        };
        if (m > 0) rec(0);
    }
    return out;
}

std::vector<AffineSubgroupCoset> cover_pullback(const AffineSubgroupCoset& c,
                                                int m) {
    if (m < 1) throw InputError("cover degree must be >= 1");
    std::vector<AffineSubgroupCoset> out;
    const int rows = static_cast<int>(c.lattice.size());
    std::vector<int> k(rows, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == rows) {
            AffineSubgroupCoset cc = c;
            for (int r = 0; r < rows; ++r)
                cc.offsets[r] = rat_mod1((c.offsets[r] + Rat(k[r])) / m);
            out.push_back(std::move(cc));
            return;
        }
        for (int kk = 0; kk < m; ++kk) {
            k[i] = kk;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<TorusPoint> cover_pullback(const TorusPoint& p, int m) {
    if (m < 1) throw InputError("cover degree must be >= 1");
    std::vector<TorusPoint> out;
    const int n = p.dim();
    std::vector<int> k(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            TorusPoint q;
            q.coords.resize(n);
            for (int j = 0; j < n; ++j)
                q.coords[j] = (p.coords[j] + k[j]) / m;
            if (p.exact) {
                RatVec e(n);
                for (int j = 0; j < n; ++j)
                    e[j] = rat_mod1(((*p.exact)[j] + k[j]) / m);
                q.exact = e;
            }
            out.push_back(std::move(q));
            return;
        }
        for (int kk = 0; kk < m; ++kk) {
            k[i] = kk;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

TorusPoint cover_pushforward(const TorusPoint& p, int m) {
    TorusPoint q;
    q.coords.resize(p.dim());
    for (int j = 0; j < p.dim(); ++j) {
        double v = p.coords[j] * m;
        q.coords[j] = v - std::floor(v);
    }
    if (p.exact) {
        RatVec e(p.dim());
        for (int j = 0; j < p.dim(); ++j) e[j] = rat_mod1((*p.exact)[j] * m);
        q.exact = e;
    }
    return q;
}

}  // namespace coamoeba
