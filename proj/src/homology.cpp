#include "coamoeba/homology.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>

namespace coamoeba {

namespace {

std::vector<int> masks_of_dim(int n, int d) {
    std::vector<int> out;
    for (int m = 0; m < (1 << n); ++m)
        if (__builtin_popcount(static_cast<unsigned>(m)) == d) out.push_back(m);
    return out;
}

struct Grid {
    int n;
    std::vector<int> res;
    // per dim: masks and per-mask offsets
    std::vector<std::vector<int>> masks;
    std::vector<std::vector<long long>> offsets;
    std::vector<long long> totals;

    explicit Grid(int n_, const std::vector<int>& res_) : n(n_), res(res_) {
        masks.resize(n + 1);
        offsets.resize(n + 1);
        totals.assign(n + 1, 0);
        for (int d = 0; d <= n; ++d) {
            masks[d] = masks_of_dim(n, d);
            long long off = 0;
            for (int m : masks[d]) {
                offsets[d].push_back(off);
                long long cnt = 1;
                for (int j = 0; j < n; ++j)
                    cnt *= (m >> j & 1) ? res[j] : res[j] + 1;
                off += cnt;
            }
            totals[d] = off;
        }
    }

    long long extent(int mask, int j) const {
        return (mask >> j & 1) ? res[j] : res[j] + 1;
    }

    long long encode(int d, int mask, const std::vector<int>& pos) const {
        int mi = static_cast<int>(std::lower_bound(masks[d].begin(), masks[d].end(),
                                                   mask) -
                                  masks[d].begin());
        long long id = 0;
        for (int j = 0; j < n; ++j) id = id * extent(mask, j) + pos[j];
        return offsets[d][mi] + id;
    }

    void decode(int d, long long id, int& mask, std::vector<int>& pos) const {
        int mi = 0;
        while (mi + 1 < static_cast<int>(masks[d].size()) &&
               offsets[d][mi + 1] <= id)
            ++mi;
        mask = masks[d][mi];
        long long rem = id - offsets[d][mi];
        pos.assign(n, 0);
        for (int j = n - 1; j >= 0; --j) {
            long long e = extent(mask, j);
            pos[j] = static_cast<int>(rem % e);
            rem /= e;
        }
    }

    // boundary faces with signs
    void faces(int mask, const std::vector<int>& pos,
               std::vector<std::pair<int, std::pair<int, std::vector<int>>>>& out)
        const {
        out.clear();
        int ord = 0;
        for (int a = 0; a < n; ++a) {
            if (!(mask >> a & 1)) continue;
            int fm = mask & ~(1 << a);
            std::vector<int> bottom = pos, top = pos;
            top[a] += 1;
            int sign = (ord % 2 == 0) ? 1 : -1;
            out.push_back({sign, {fm, top}});
            out.push_back({-sign, {fm, bottom}});
            ++ord;
        }
    }

    // cofacets (dim+1 cells having this cell as a face)
    void cofacets(int mask, const std::vector<int>& pos,
                  std::vector<std::pair<int, std::vector<int>>>& out) const {
        out.clear();
        for (int a = 0; a < n; ++a) {
            if (mask >> a & 1) continue;
            int cm = mask | (1 << a);
            if (pos[a] < res[a]) out.push_back({cm, pos});
            if (pos[a] - 1 >= 0) {
                std::vector<int> q = pos;
                q[a] -= 1;
                out.push_back({cm, q});
            }
        }
    }
};

struct UnionFind {
    std::vector<long long> parent;
    explicit UnionFind(long long n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0LL);
    }
    long long find(long long x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(long long a, long long b) { parent[find(a)] = find(b); }
};

Grid grid_of(const CubicalComplex& k) { return Grid(k.n, k.res); }

}  // namespace

long long CubicalComplex::cell_count(int d) const {
    return static_cast<long long>(kept[d].size());
}

bool CubicalComplex::in_complex(int d, long long id) const {
    return id >= 0 && id < static_cast<long long>(kept[d].size()) && kept[d][id];
}

CubicalComplex rasterize_complement(const std::vector<AffineSubspace>& members,
                                    const std::vector<std::vector<double>>& cloud,
                                    const Box& box, int resolution,
                                    double dilation) {
    CubicalComplex k;
    k.n = box.dim();
    if (k.n < 2 || k.n > 3)
        throw InputError("cubical oracle supports ambient dimension 2 or 3");
    if (resolution < 2 || resolution > 64)
        throw InputError("resolution must be in [2, 64]");
    k.res.assign(k.n, resolution);
    k.lo = to_doubles(box.lo);
    k.hi = to_doubles(box.hi);
    k.step.resize(k.n);
    double diag = 0;
    for (int j = 0; j < k.n; ++j) {
        k.step[j] = (k.hi[j] - k.lo[j]) / resolution;
        if (k.step[j] <= 0) throw InputError("degenerate box");
        diag += k.step[j] * k.step[j];
    }
    diag = std::sqrt(diag);
    k.cell = *std::max_element(k.step.begin(), k.step.end());
    k.dilation = dilation > 0 ? dilation : diag;

    Grid g(k.n, k.res);
    k.kept.resize(k.n + 1);
    for (int d = 0; d <= k.n; ++d) k.kept[d].assign(g.totals[d], 0);

    // member data: basepoint + orthonormal direction frame in doubles
    struct MemberFrame {
        std::vector<double> base;
        std::vector<std::vector<double>> dirs;  // orthonormal
    };
    std::vector<MemberFrame> frames;
    for (const auto& m : members) {
        MemberFrame f;
        f.base = to_doubles(m.point);
        for (const auto& row : m.direction.basis) {
            std::vector<double> d = to_doubles(row);
            for (const auto& prev : f.dirs) {
                double ip = 0;
                for (int j = 0; j < k.n; ++j) ip += d[j] * prev[j];
                for (int j = 0; j < k.n; ++j) d[j] -= ip * prev[j];
            }
            double nrm = 0;
            for (int j = 0; j < k.n; ++j) nrm += d[j] * d[j];
            nrm = std::sqrt(nrm);
            if (nrm > 1e-12) {
                for (int j = 0; j < k.n; ++j) d[j] /= nrm;
                f.dirs.push_back(std::move(d));
            }
        }
        frames.push_back(std::move(f));
    }
    auto member_dist = [&](const MemberFrame& f, const std::vector<double>& x) {
        std::vector<double> off(k.n);
        for (int j = 0; j < k.n; ++j) off[j] = x[j] - f.base[j];
        for (const auto& d : f.dirs) {
            double ip = 0;
            for (int j = 0; j < k.n; ++j) ip += off[j] * d[j];
            for (int j = 0; j < k.n; ++j) off[j] -= ip * d[j];
        }
        double s = 0;
        for (int j = 0; j < k.n; ++j) s += off[j] * off[j];
        return std::sqrt(s);
    };

    // removal half-diagonal: conservative (never under-removes)
    double half_diag = diag / 2;

    const int full = (1 << k.n) - 1;
    std::vector<int> pos(k.n, 0);
    std::vector<char>& cubes = k.kept[k.n];
    std::function<void(int)> rec = [&](int axis) {
        if (axis == k.n) {
            std::vector<double> center(k.n);
            for (int j = 0; j < k.n; ++j)
                center[j] = k.lo[j] + (pos[j] + 0.5) * k.step[j];
            bool removed = false;
            for (const auto& f : frames)
                if (member_dist(f, center) <= k.dilation + half_diag) {
                    removed = true;
                    break;
                }
            if (!removed)
                cubes[g.encode(k.n, full, pos)] = 1;
            return;
        }
        for (int i = 0; i < resolution; ++i) {
            pos[axis] = i;
            rec(axis + 1);
        }
    };
    rec(0);

    // cloud points remove nearby cubes
    for (const auto& p : cloud) {
        std::vector<int> lo_i(k.n), hi_i(k.n);
        bool any = true;
        for (int j = 0; j < k.n; ++j) {
            lo_i[j] = static_cast<int>(
                std::floor((p[j] - k.dilation - k.lo[j]) / k.step[j]));
            hi_i[j] = static_cast<int>(
                std::floor((p[j] + k.dilation - k.lo[j]) / k.step[j]));
            lo_i[j] = std::max(lo_i[j], 0);
            hi_i[j] = std::min(hi_i[j], resolution - 1);
            if (lo_i[j] > hi_i[j]) any = false;
        }
        if (!any) continue;
        std::vector<int> q(k.n);
        std::function<void(int)> mark = [&](int axis) {
            if (axis == k.n) {
                // exact point-to-cube distance
                double s = 0;
                for (int j = 0; j < k.n; ++j) {
                    double a = k.lo[j] + q[j] * k.step[j];
                    double b = a + k.step[j];
                    double c = std::min(std::max(p[j], a), b);
                    s += (p[j] - c) * (p[j] - c);
                }
                if (std::sqrt(s) <= k.dilation)
                    cubes[g.encode(k.n, full, q)] = 0;
                return;
            }
            for (int i = lo_i[axis]; i <= hi_i[axis]; ++i) {
                q[axis] = i;
                mark(axis + 1);
            }
        };
        mark(0);
    }

    // downward closure
    bool any_cube = false;
    for (int d = k.n; d >= 1; --d) {
        std::vector<std::pair<int, std::pair<int, std::vector<int>>>> fs;
        for (int mi = 0; mi < static_cast<int>(g.masks[d].size()); ++mi) {
            int mask = g.masks[d][mi];
            long long cnt = 1;
            for (int j = 0; j < k.n; ++j) cnt *= g.extent(mask, j);
            for (long long c = 0; c < cnt; ++c) {
                long long id = g.offsets[d][mi] + c;
                if (!k.kept[d][id]) continue;
                if (d == k.n) any_cube = true;
                int m2;
                std::vector<int> p2;
                g.decode(d, id, m2, p2);
                g.faces(m2, p2, fs);
                for (const auto& [sgn, cell] : fs)
                    k.kept[d - 1][g.encode(d - 1, cell.first, cell.second)] = 1;
            }
        }
    }
    if (!any_cube) throw MathError("removed set fills the box: empty complement");

    // free-face collapse, logging (dim sigma, sigma, tau)
    auto kept2 = k.kept;
    std::vector<std::vector<int>> cof_count(k.n);
    for (int d = 0; d < k.n; ++d) cof_count[d].assign(g.totals[d], 0);
    std::vector<std::pair<int, std::vector<int>>> cofs;
    for (int d = 0; d < k.n; ++d) {
        for (long long id = 0; id < g.totals[d]; ++id) {
            if (!kept2[d][id]) continue;
            int mask;
            std::vector<int> p;
            g.decode(d, id, mask, p);
            g.cofacets(mask, p, cofs);
            int cnt = 0;
            for (const auto& [cm, cp] : cofs)
                if (kept2[d + 1][g.encode(d + 1, cm, cp)]) ++cnt;
            cof_count[d][id] = cnt;
        }
    }
    std::deque<std::pair<int, long long>> queue;
    for (int d = 0; d < k.n; ++d)
        for (long long id = 0; id < g.totals[d]; ++id)
            if (kept2[d][id] && cof_count[d][id] == 1) queue.push_back({d, id});
    std::vector<std::pair<int, std::pair<int, std::vector<int>>>> fs2;
    while (!queue.empty()) {
        auto [d, tau] = queue.front();
        queue.pop_front();
        if (!kept2[d][tau] || cof_count[d][tau] != 1) continue;
        // locate the unique kept cofacet
        int mask;
        std::vector<int> p;
        g.decode(d, tau, mask, p);
        g.cofacets(mask, p, cofs);
        long long sigma = -1;
        for (const auto& [cm, cp] : cofs) {
            long long cid = g.encode(d + 1, cm, cp);
            if (kept2[d + 1][cid]) {
                sigma = cid;
                break;
            }
        }
        if (sigma < 0) continue;
        kept2[d][tau] = 0;
        kept2[d + 1][sigma] = 0;
        k.collapse_log.push_back({static_cast<long long>(d + 1), sigma, tau});
        // sigma's other faces lose a cofacet
        int sm;
        std::vector<int> sp;
        g.decode(d + 1, sigma, sm, sp);
        g.faces(sm, sp, fs2);
        for (const auto& [sgn, cell] : fs2) {
            long long fid = g.encode(d, cell.first, cell.second);
            if (!kept2[d][fid]) continue;
            if (--cof_count[d][fid] == 1) queue.push_back({d, fid});
        }
        // tau's faces lose a cofacet (tau removed)
        if (d >= 1) {
            g.faces(mask, p, fs2);
            for (const auto& [sgn, cell] : fs2) {
                long long fid = g.encode(d - 1, cell.first, cell.second);
                if (!kept2[d - 1][fid]) continue;
                if (--cof_count[d - 1][fid] == 1) queue.push_back({d - 1, fid});
            }
        }
        // sigma itself may have been queued as a free face of something higher
    }
    k.kept_after_collapse = std::move(kept2);
    return k;
}

namespace {

long long find_component(const CubicalComplex& k, UnionFind& uf) {
    Grid g(k.n, k.res);
    std::vector<std::pair<int, std::pair<int, std::vector<int>>>> fs;
    for (long long id = 0; id < g.totals[1]; ++id) {
        if (!k.kept[1][id]) continue;
        int mask;
        std::vector<int> p;
        g.decode(1, id, mask, p);
        g.faces(mask, p, fs);
        long long a = g.encode(0, fs[0].second.first, fs[0].second.second);
        long long b = g.encode(0, fs[1].second.first, fs[1].second.second);
        uf.unite(a, b);
    }
    long long comps = 0;
    for (long long id = 0; id < g.totals[0]; ++id)
        if (k.kept[0][id] && uf.find(id) == id) ++comps;
    return comps;
}

long long nearest_vertex(const CubicalComplex& k, const std::vector<double>& x,
                         Grid& g) {
    std::vector<int> pos(k.n);
    for (int j = 0; j < k.n; ++j) {
        double t = (x[j] - k.lo[j]) / k.step[j];
        double r = std::round(t);
        if (std::abs(t - r) > 0.5 - 1e-9 && std::abs(t - r) < 0.5 + 1e-9)
            throw MathError("snapping ambiguity");
        int i = static_cast<int>(r);
        if (i < 0 || i > k.res[j]) throw MathError("point outside oracle box");
        pos[j] = i;
    }
    return g.encode(0, 0, pos);
}

}  // namespace

BettiNumbers betti_numbers(const CubicalComplex& k) {
    Grid g(k.n, k.res);
    BettiNumbers b;
    UnionFind uf(g.totals[0]);
    long long comps = find_component(k, uf);
    b.components = comps;
    b.b0 = comps - 1;

    // collapsed complex counts
    long long v = 0, e = 0, s = 0;
    for (long long id = 0; id < g.totals[0]; ++id)
        if (k.kept_after_collapse[0][id]) ++v;
    for (long long id = 0; id < g.totals[1]; ++id)
        if (k.kept_after_collapse[1][id]) ++e;
    for (long long id = 0; id < g.totals[2]; ++id)
        if (k.kept_after_collapse[2][id]) ++s;

    // components of the collapsed complex (homotopy equivalent)
    UnionFind uf2(g.totals[0]);
    std::vector<std::pair<int, std::pair<int, std::vector<int>>>> fs;
    for (long long id = 0; id < g.totals[1]; ++id) {
        if (!k.kept_after_collapse[1][id]) continue;
        int mask;
        std::vector<int> p;
        g.decode(1, id, mask, p);
        g.faces(mask, p, fs);
        uf2.unite(g.encode(0, fs[0].second.first, fs[0].second.second),
                  g.encode(0, fs[1].second.first, fs[1].second.second));
    }
    long long comps2 = 0;
    for (long long id = 0; id < g.totals[0]; ++id)
        if (k.kept_after_collapse[0][id] && uf2.find(id) == id) ++comps2;

    // rank of the remaining boundary_2 over Q
    std::vector<long long> edge_index(g.totals[1], -1);
    long long ei = 0;
    for (long long id = 0; id < g.totals[1]; ++id)
        if (k.kept_after_collapse[1][id]) edge_index[id] = ei++;
    RatMat d2;
    for (long long id = 0; id < g.totals[2]; ++id) {
        if (!k.kept_after_collapse[2][id]) continue;
        int mask;
        std::vector<int> p;
        g.decode(2, id, mask, p);
        g.faces(mask, p, fs);
        RatVec col(ei, Rat(0));
        for (const auto& [sgn, cell] : fs) {
            long long eid = g.encode(1, cell.first, cell.second);
            col[edge_index[eid]] += sgn;
        }
        d2.push_back(std::move(col));
    }
    long long rank2 = d2.empty() ? 0 : rank(d2);
    b.b1 = e - v + comps2 - rank2;
    return b;
}

std::map<long long, Int> snap_cycle(const CubicalComplex& k, const Chain& c) {
    if (c.degree != 1) throw InputError("snap_cycle expects a 1-cycle");
    Grid g(k.n, k.res);
    std::map<long long, Int> out;
    for (const auto& t : c.terms) {
        std::vector<double> a = to_doubles(t.s.v[0]);
        std::vector<double> b = to_doubles(t.s.v[1]);
        std::vector<int> pa(k.n), pb(k.n);
        {
            long long va = nearest_vertex(k, a, g);
            long long vb = nearest_vertex(k, b, g);
            int mask;
            g.decode(0, va, mask, pa);
            g.decode(0, vb, mask, pb);
        }
        // balanced staircase walk from pa to pb
        std::vector<int> cur = pa;
        while (cur != pb) {
            // pick the axis whose step best tracks the straight segment
            int best_axis = -1;
            double best_err = std::numeric_limits<double>::infinity();
            for (int j = 0; j < k.n; ++j) {
                if (cur[j] == pb[j]) continue;
                std::vector<int> nxt = cur;
                nxt[j] += (pb[j] > cur[j]) ? 1 : -1;
                // distance from the new vertex to the segment a-b
                std::vector<double> x(k.n);
                for (int i = 0; i < k.n; ++i)
                    x[i] = k.lo[i] + nxt[i] * k.step[i];
                double t2 = 0, denom = 0;
                for (int i = 0; i < k.n; ++i) {
                    t2 += (x[i] - a[i]) * (b[i] - a[i]);
                    denom += (b[i] - a[i]) * (b[i] - a[i]);
                }
                double tt = denom > 0 ? std::min(1.0, std::max(0.0, t2 / denom)) : 0;
                double err = 0;
                for (int i = 0; i < k.n; ++i) {
                    double pdist = x[i] - (a[i] + tt * (b[i] - a[i]));
                    err += pdist * pdist;
                }
                if (err < best_err) {
                    best_err = err;
                    best_axis = j;
                }
            }
            if (best_axis < 0) throw MathError("snap walk stalled");
            if (std::sqrt(best_err) > 2.0 * k.cell)
                throw MathError("snapped path strays from the cycle");
            int dirn = (pb[best_axis] > cur[best_axis]) ? 1 : -1;
            std::vector<int> epos = cur;
            if (dirn < 0) epos[best_axis] -= 1;
            long long eid = g.encode(1, 1 << best_axis, epos);
            if (!k.kept[1][eid])
                throw MathError("snapping failure: cycle within one cell of removed region");
            out[eid] += t.coeff * dirn;
            cur[best_axis] += dirn;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

bool class_is_zero(const CubicalComplex& k, const Chain& cycle) {
    Grid g(k.n, k.res);
    auto c = snap_cycle(k, cycle);
    // verify closedness of the snapped cycle
    {
        std::map<long long, Int> dv;
        std::vector<std::pair<int, std::pair<int, std::vector<int>>>> fs;
        for (const auto& [eid, coeff] : c) {
            int mask;
            std::vector<int> p;
            g.decode(1, eid, mask, p);
            g.faces(mask, p, fs);
            for (const auto& [sgn, cell] : fs)
                dv[g.encode(0, cell.first, cell.second)] += sgn * coeff;
        }
        for (const auto& [vid, coeff] : dv)
            if (coeff != 0) throw MathError("snapped chain is not a cycle");
    }
    // replay collapses
    std::vector<std::pair<int, std::pair<int, std::vector<int>>>> fs;
    for (const auto& ev : k.collapse_log) {
        int d = static_cast<int>(ev[0]);
        long long sigma = ev[1], tau = ev[2];
        if (d != 2) continue;
        auto it = c.find(tau);
        if (it == c.end() || it->second == 0) continue;
        Int coeff = it->second;
        int mask;
        std::vector<int> p;
        g.decode(2, sigma, mask, p);
        g.faces(mask, p, fs);
        Int eps = 0;
        for (const auto& [sgn, cell] : fs)
            if (g.encode(1, cell.first, cell.second) == tau) eps = sgn;
        if (eps == 0) throw MathError("collapse log inconsistency");
        // c -= (coeff/eps) * boundary(sigma)
        Int q = coeff * eps;  // eps is +-1
        for (const auto& [sgn, cell] : fs)
            c[g.encode(1, cell.first, cell.second)] -= q * sgn;
        for (auto it2 = c.begin(); it2 != c.end();) {
            if (it2->second == 0)
                it2 = c.erase(it2);
            else
                ++it2;
        }
    }
    if (c.empty()) return true;
    // solve boundary_2 x = c over Z on the collapsed complex
    std::vector<long long> edge_ids;
    std::map<long long, int> edge_index;
    for (long long id = 0; id < g.totals[1]; ++id)
        if (k.kept_after_collapse[1][id]) {
            edge_index[id] = static_cast<int>(edge_ids.size());
            edge_ids.push_back(id);
        }
    for (const auto& [eid, coeff] : c)
        if (!edge_index.count(eid))
            throw MathError("rewritten cycle uses a collapsed edge");
    std::vector<long long> sq_ids;
    for (long long id = 0; id < g.totals[2]; ++id)
        if (k.kept_after_collapse[2][id]) sq_ids.push_back(id);
    const int ne = static_cast<int>(edge_ids.size());
    const int ns = static_cast<int>(sq_ids.size());
    if (ns > 5000)
        throw MathError("oracle complex too large after collapse");
    IntMat d2(ne, IntVec(ns, Int(0)));
    for (int j = 0; j < ns; ++j) {
        int mask;
        std::vector<int> p;
        g.decode(2, sq_ids[j], mask, p);
        g.faces(mask, p, fs);
        for (const auto& [sgn, cell] : fs) {
            long long eid = g.encode(1, cell.first, cell.second);
            auto it = edge_index.find(eid);
            if (it == edge_index.end())
                throw MathError("collapsed complex is not closed");
            d2[it->second][j] += sgn;
        }
    }
    IntVec rhs(ne, Int(0));
    for (const auto& [eid, coeff] : c) rhs[edge_index[eid]] = coeff;
    if (ns == 0) return false;  // nonzero cycle, no 2-cells to bound it
    SmithForm sf = smith_normal_form(d2);
    // solve d y = u rhs
    IntVec urhs(ne, Int(0));
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j) urhs[i] += sf.u[i][j] * rhs[j];
    int r = 0;
    while (r < std::min(ne, ns) && sf.d[r][r] != 0) ++r;
    for (int i = 0; i < ne; ++i) {
        if (i < r) {
            if (urhs[i] % sf.d[i][i] != 0) return false;
        } else {
            if (urhs[i] != 0) return false;
        }
    }
    return true;
}

bool class_is_zero_points(const CubicalComplex& k, const RatVec& a,
                          const RatVec& b) {
    Grid g(k.n, k.res);
    UnionFind uf(g.totals[0]);
    find_component(k, uf);
    long long va = nearest_vertex(k, to_doubles(a), g);
    long long vb = nearest_vertex(k, to_doubles(b), g);
    if (!k.kept[0][va] || !k.kept[0][vb])
        throw MathError("snapping failure: endpoint in removed region");
    return uf.find(va) == uf.find(vb);
}

bool boundary_squared_is_zero(const CubicalComplex& k) {
    Grid g(k.n, k.res);
    std::vector<std::pair<int, std::pair<int, std::vector<int>>>> fs, fs2;
    for (long long id = 0; id < g.totals[2]; ++id) {
        if (!k.kept[2][id]) continue;
        int mask;
        std::vector<int> p;
        g.decode(2, id, mask, p);
        g.faces(mask, p, fs);
        std::map<long long, int> acc;
        for (const auto& [sgn, cell] : fs) {
            g.faces(cell.first, cell.second, fs2);
            for (const auto& [sgn2, cell2] : fs2)
                acc[g.encode(0, cell2.first, cell2.second)] += sgn * sgn2;
        }
        for (const auto& [vid, coeff] : acc)
            if (coeff != 0) return false;
    }
    return true;
}

}  // namespace coamoeba
