#include "coamoeba/chains.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "coamoeba/homology.hpp"

namespace coamoeba {

namespace {

std::string point_key(const RatVec& p) { return ratvec_str(p); }

std::string simplex_key(const Simplex& s) {
    std::string k;
    for (const auto& p : s.v) k += point_key(p) + "/";
    return k;
}

// --- carrier frames ----------------------------------------------------------

// Affine line through two distinct points, canonical.
AffineSubspace line_through(const RatVec& a, const RatVec& b) {
    RatVec d = vec_sub(b, a);
    return AffineSubspace(a, RationalSubspace::span_of(static_cast<int>(a.size()),
                                                       {d}));
}

AffineSubspace plane_of_triangle(const RatVec& a, const RatVec& b,
                                 const RatVec& c) {
    RatMat dirs = {vec_sub(b, a), vec_sub(c, a)};
    return AffineSubspace(a, RationalSubspace::span_of(static_cast<int>(a.size()),
                                                       dirs));
}

// Exact coordinates of x in the frame (base; dirs) of an affine subspace.
RatVec frame_coords(const AffineSubspace& carrier, const RatVec& x) {
    const auto& dirs = carrier.direction.basis;
    const int d = static_cast<int>(dirs.size());
    RatMat gram(d, RatVec(d));
    RatVec rhs(d);
    RatVec off = vec_sub(x, carrier.point);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) gram[i][j] = dot(dirs[i], dirs[j]);
        rhs[i] = dot(dirs[i], off);
    }
    auto sol = solve_linear(gram, rhs);
    return *sol;
}

RatVec frame_point(const AffineSubspace& carrier, const RatVec& coords) {
    RatVec x = carrier.point;
    for (size_t i = 0; i < coords.size(); ++i)
        x = vec_add(x, vec_scale(coords[i], carrier.direction.basis[i]));
    return x;
}

// --- degree 1 canonicalization -------------------------------------------------

struct SegPiece {
    Rat t0, t1;
    Int coeff;
};

void canonicalize_deg1(std::vector<ChainTerm>& terms, int ambient,
                       std::vector<ChainTerm>& out) {
    struct LineData {
        AffineSubspace carrier;
        std::vector<SegPiece> segs;
    };
    std::map<std::string, LineData> lines;
    for (auto& t : terms) {
        const RatVec& a = t.s.v[0];
        const RatVec& b = t.s.v[1];
        if (a == b) continue;  // degenerate
        AffineSubspace carrier = line_through(a, b);
        auto [it, fresh] = lines.try_emplace(carrier.key());
        if (fresh) it->second.carrier = carrier;
        Rat ta = frame_coords(it->second.carrier, a)[0];
        Rat tb = frame_coords(it->second.carrier, b)[0];
        Int c = t.coeff;
        if (ta > tb) {
            std::swap(ta, tb);
            c = -c;
        }
        it->second.segs.push_back({ta, tb, c});
    }
    for (auto& [key, ld] : lines) {
        std::vector<Rat> cuts;
        for (const auto& s : ld.segs) {
            cuts.push_back(s.t0);
            cuts.push_back(s.t1);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            Int c = 0;
            for (const auto& s : ld.segs)
                if (s.t0 <= cuts[i] && cuts[i + 1] <= s.t1) c += s.coeff;
            if (c == 0) continue;
            Simplex piece;
            piece.v = {frame_point(ld.carrier, {cuts[i]}),
                       frame_point(ld.carrier, {cuts[i + 1]})};
            out.push_back({c, std::move(piece)});
        }
    }
}

// --- degree 2 canonicalization -------------------------------------------------

using P2 = std::array<Rat, 2>;

Rat cross2(const P2& o, const P2& a, const P2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::string p2_key(const P2& p) { return rat_str(p[0]) + "," + rat_str(p[1]); }

// Convex polygon with CCW vertices, no repeats.
using Poly = std::vector<P2>;

Rat poly_area2(const Poly& p) {
    Rat a = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        const P2& u = p[i];
        const P2& v = p[(i + 1) % p.size()];
        a += u[0] * v[1] - u[1] * v[0];
    }
    return a;
}

void dedupe_poly(Poly& p) {
    Poly q;
    for (const auto& v : p)
        if (q.empty() || !(q.back() == v)) q.push_back(v);
    while (q.size() > 1 && q.front() == q.back()) q.pop_back();
    p = std::move(q);
}

// Split a convex CCW polygon by the line a.x = c; returns the piece with
// a.x <= c when keep_le, else the piece with a.x >= c.
Poly clip_poly(const Poly& poly, const P2& a, const Rat& c, bool keep_le) {
    Poly out;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const P2& u = poly[i];
        const P2& v = poly[(i + 1) % n];
        Rat du = a[0] * u[0] + a[1] * u[1] - c;
        Rat dv = a[0] * v[0] + a[1] * v[1] - c;
        if (!keep_le) {
            du = -du;
            dv = -dv;
        }
        if (du <= 0) out.push_back(u);
        if ((du < 0 && dv > 0) || (du > 0 && dv < 0)) {
            Rat s = du / (du - dv);
            out.push_back({u[0] + s * (v[0] - u[0]), u[1] + s * (v[1] - u[1])});
        }
    }
    dedupe_poly(out);
    if (out.size() < 3) out.clear();
    if (!out.empty() && poly_area2(out) == 0) out.clear();
    return out;
}

struct Line2 {
    P2 a;
    Rat c;
};

std::string line2_key(const Line2& l) {
    return p2_key(l.a) + "|" + rat_str(l.c);
}

Line2 line2_through(const P2& p, const P2& q) {
    RatVec n = {q[1] - p[1], p[0] - q[0]};
    IntVec pn = primitive_normalized(n);
    Line2 l;
    l.a = {Rat(pn[0]), Rat(pn[1])};
    l.c = l.a[0] * p[0] + l.a[1] * p[1];
    return l;
}

std::string poly_key(Poly p) {
    std::vector<std::string> keys;
    for (const auto& v : p) keys.push_back(p2_key(v));
    std::sort(keys.begin(), keys.end());
    std::string k;
    for (const auto& s : keys) k += s + "/";
    return k;
}

void canonicalize_deg2(std::vector<ChainTerm>& terms, int ambient,
                       std::vector<ChainTerm>& out) {
    struct Tri2 {
        Poly p;  // CCW
        Int coeff;
    };
    struct PlaneData {
        AffineSubspace carrier;
        std::vector<Tri2> tris;
    };
    std::map<std::string, PlaneData> planes;
    for (auto& t : terms) {
        const RatVec& a = t.s.v[0];
        const RatVec& b = t.s.v[1];
        const RatVec& c = t.s.v[2];
        RatMat dirs = {vec_sub(b, a), vec_sub(c, a)};
        if (rank(dirs) < 2) continue;  // degenerate
        AffineSubspace carrier = plane_of_triangle(a, b, c);
        auto [it, fresh] = planes.try_emplace(carrier.key());
        if (fresh) it->second.carrier = carrier;
        RatVec fa = frame_coords(it->second.carrier, a);
        RatVec fb = frame_coords(it->second.carrier, b);
        RatVec fc = frame_coords(it->second.carrier, c);
        P2 pa = {fa[0], fa[1]}, pb = {fb[0], fb[1]}, pc = {fc[0], fc[1]};
        Rat orient = cross2(pa, pb, pc);
        Int coeff = t.coeff;
        if (orient == 0) continue;
        if (orient < 0) {
            std::swap(pb, pc);
            coeff = -coeff;
        }
        it->second.tris.push_back({{pa, pb, pc}, coeff});
    }

    for (auto& [key, pd] : planes) {
        // all cut lines in this plane
        std::map<std::string, Line2> lines;
        for (const auto& tri : pd.tris)
            for (int e = 0; e < 3; ++e) {
                Line2 l = line2_through(tri.p[e], tri.p[(e + 1) % 3]);
                lines.try_emplace(line2_key(l), l);
            }
        // split every triangle by every line; identical pieces share keys
        std::map<std::string, std::pair<Int, Poly>> pieces;
        for (const auto& tri : pd.tris) {
            std::vector<Poly> parts = {tri.p};
            for (const auto& [lk, l] : lines) {
                std::vector<Poly> next;
                for (const auto& part : parts) {
                    Poly lo = clip_poly(part, l.a, l.c, true);
                    Poly hi = clip_poly(part, l.a, l.c, false);
                    if (!lo.empty()) next.push_back(std::move(lo));
                    if (!hi.empty()) next.push_back(std::move(hi));
                }
                parts = std::move(next);
            }
            for (auto& part : parts) {
                if (poly_area2(part) < 0) std::reverse(part.begin(), part.end());
                auto [it, fresh] = pieces.try_emplace(poly_key(part), Int(0), part);
                it->second.first += tri.coeff;
            }
        }
        // triangulate surviving cells canonically: fan from the lex-min vertex
        for (auto& [pk, piece] : pieces) {
            if (piece.first == 0) continue;
            Poly p = piece.second;
            size_t lo = 0;
            for (size_t i = 1; i < p.size(); ++i)
                if (std::make_pair(p[i][0], p[i][1]) <
                    std::make_pair(p[lo][0], p[lo][1]))
                    lo = i;
            std::rotate(p.begin(), p.begin() + lo, p.end());
            for (size_t i = 1; i + 1 < p.size(); ++i) {
                Simplex s;
                s.v = {frame_point(pd.carrier, {p[0][0], p[0][1]}),
                       frame_point(pd.carrier, {p[i][0], p[i][1]}),
                       frame_point(pd.carrier, {p[i + 1][0], p[i + 1][1]})};
                out.push_back({piece.first, std::move(s)});
            }
        }
    }
}

}  // namespace

Chain Chain::make(int degree, int ambient, std::vector<ChainTerm> in) {
    Chain c;
    c.degree = degree;
    c.ambient = ambient;
    for (const auto& t : in) {
        if (t.s.degree() != degree)
            throw InputError("chain term degree mismatch");
        for (const auto& p : t.s.v)
            if (static_cast<int>(p.size()) != ambient)
                throw InputError("chain vertex dimension mismatch");
    }
    if (degree == 0) {
        std::map<std::string, std::pair<Int, Simplex>> acc;
        for (auto& t : in) {
            auto [it, fresh] =
                acc.try_emplace(point_key(t.s.v[0]), Int(0), t.s);
            it->second.first += t.coeff;
        }
        for (auto& [k, v] : acc)
            if (v.first != 0) c.terms.push_back({v.first, v.second});
    } else if (degree == 1) {
        canonicalize_deg1(in, ambient, c.terms);
    } else if (degree == 2) {
        canonicalize_deg2(in, ambient, c.terms);
    } else {
        throw InputError("chains of degree > 2 are out of scope");
    }
    std::sort(c.terms.begin(), c.terms.end(),
              [](const ChainTerm& a, const ChainTerm& b) {
                  return simplex_key(a.s) < simplex_key(b.s);
              });
    return c;
}

Chain Chain::operator+(const Chain& o) const {
    std::vector<ChainTerm> all = terms;
    all.insert(all.end(), o.terms.begin(), o.terms.end());
    return make(degree, ambient, std::move(all));
}

Chain Chain::scaled(const Int& c) const {
    std::vector<ChainTerm> all = terms;
    for (auto& t : all) t.coeff *= c;
    return make(degree, ambient, std::move(all));
}

bool chains_equal(const Chain& a, const Chain& b) {
    if (a.degree != b.degree || a.ambient != b.ambient) return false;
    return (a + b.scaled(Int(-1))).is_zero();
}

Chain boundary(const Chain& c) {
    if (c.degree < 1) throw InputError("boundary of a 0-chain");
    std::vector<ChainTerm> faces;
    for (const auto& t : c.terms) {
        for (size_t i = 0; i < t.s.v.size(); ++i) {
            Simplex f;
            for (size_t j = 0; j < t.s.v.size(); ++j)
                if (j != i) f.v.push_back(t.s.v[j]);
            Int sign = (i % 2 == 0) ? 1 : -1;
            faces.push_back({sign * t.coeff, std::move(f)});
        }
    }
    return Chain::make(c.degree - 1, c.ambient, std::move(faces));
}

SupportSet support(const Chain& c) {
    SupportSet s;
    s.degree = c.degree;
    if (c.degree == 0) {
        for (const auto& t : c.terms)
            s.cells[point_key(t.s.v[0])].push_back(t.s.v);
        return s;
    }
    if (c.degree == 1) {
        // merge touching segments per line
        struct LineData {
            AffineSubspace carrier;
            std::vector<std::pair<Rat, Rat>> iv;
        };
        std::map<std::string, LineData> lines;
        for (const auto& t : c.terms) {
            AffineSubspace carrier = line_through(t.s.v[0], t.s.v[1]);
            auto [it, fresh] = lines.try_emplace(carrier.key());
            if (fresh) it->second.carrier = carrier;
            Rat a = frame_coords(it->second.carrier, t.s.v[0])[0];
            Rat b = frame_coords(it->second.carrier, t.s.v[1])[0];
            if (a > b) std::swap(a, b);
            it->second.iv.push_back({a, b});
        }
        for (auto& [k, ld] : lines) {
            std::sort(ld.iv.begin(), ld.iv.end());
            std::vector<std::pair<Rat, Rat>> merged;
            for (const auto& [a, b] : ld.iv) {
                if (!merged.empty() && a <= merged.back().second)
                    merged.back().second = std::max(merged.back().second, b);
                else
                    merged.push_back({a, b});
            }
            for (const auto& [a, b] : merged)
                s.cells[ld.carrier.key()].push_back(
                    {frame_point(ld.carrier, {a}), frame_point(ld.carrier, {b})});
        }
        return s;
    }
    for (const auto& t : c.terms)
        s.cells[plane_of_triangle(t.s.v[0], t.s.v[1], t.s.v[2]).key()].push_back(
            t.s.v);
    return s;
}

SupportSet support_union(const SupportSet& a, const SupportSet& b) {
    if (a.degree != b.degree)
        throw InputError("support_union: degree mismatch");
    SupportSet u;
    u.degree = a.degree;
    u.cells = a.cells;
    for (const auto& [key, cells] : b.cells) {
        auto& dst = u.cells[key];
        dst.insert(dst.end(), cells.begin(), cells.end());
    }
    if (a.degree == 0) {
        for (auto& [key, cells] : u.cells)
            if (cells.size() > 1) cells.resize(1);
        return u;
    }
    if (a.degree == 1) {
        // re-merge intervals per line
        for (auto& [key, cells] : u.cells) {
            if (cells.size() <= 1) continue;
            AffineSubspace carrier = line_through(cells[0][0], cells[0][1]);
            std::vector<std::pair<Rat, Rat>> iv;
            for (const auto& seg : cells) {
                Rat t0 = frame_coords(carrier, seg[0])[0];
                Rat t1 = frame_coords(carrier, seg[1])[0];
                if (t0 > t1) std::swap(t0, t1);
                iv.push_back({t0, t1});
            }
            std::sort(iv.begin(), iv.end());
            std::vector<std::pair<Rat, Rat>> merged;
            for (const auto& [x, y] : iv) {
                if (!merged.empty() && x <= merged.back().second)
                    merged.back().second = std::max(merged.back().second, y);
                else
                    merged.push_back({x, y});
            }
            std::vector<std::vector<RatVec>> out;
            for (const auto& [x, y] : merged)
                out.push_back({frame_point(carrier, {x}), frame_point(carrier, {y})});
            cells = std::move(out);
        }
        return u;
    }
    // degree 2: keep cell lists deduplicated by vertex sets
    for (auto& [key, cells] : u.cells) {
        std::set<std::string> seen;
        std::vector<std::vector<RatVec>> out;
        for (auto& cell : cells) {
            std::string k;
            for (const auto& v : cell) k += point_key(v) + "/";
            if (seen.insert(k).second) out.push_back(cell);
        }
        cells = std::move(out);
    }
    return u;
}

namespace {

// Exact point-in-simplex via barycentric coordinates (closed simplex).
bool point_in_simplex(const Simplex& s, const RatVec& p) {
    const int k = s.degree();
    const int n = static_cast<int>(p.size());
    // solve sum l_i v_i = p, sum l_i = 1
    RatMat a(n + 1, RatVec(k + 1));
    RatVec b(n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= k; ++j) a[i][j] = s.v[j][i];
        b[i] = p[i];
    }
    for (int j = 0; j <= k; ++j) a[n][j] = 1;
    b[n] = 1;
    auto sol = solve_linear(a, b);
    if (!sol) return false;
    // verify (solve_linear gives one solution; simplices are nondegenerate so
    // it is the only one) and check nonnegativity
    for (int i = 0; i <= n; ++i) {
        Rat acc = 0;
        for (int j = 0; j <= k; ++j) acc += a[i][j] * (*sol)[j];
        if (acc != b[i]) return false;
    }
    for (int j = 0; j <= k; ++j)
        if ((*sol)[j] < 0) return false;
    return true;
}

}  // namespace

bool support_contains_point(const Chain& c, const RatVec& p) {
    for (const auto& t : c.terms)
        if (point_in_simplex(t.s, p)) return true;
    return false;
}

bool support_meets_affine(const Chain& c, const AffineSubspace& m) {
    RatMat rows;
    RatVec rhs;
    m.equations(rows, rhs);
    for (const auto& t : c.terms) {
        const int k = t.s.degree();
        // lambda >= 0, sum = 1, point in m
        std::vector<LinearConstraint> cons;
        LinearConstraint sum1;
        sum1.a.assign(k + 1, Rat(1));
        sum1.b = 1;
        sum1.rel = Rel::Eq;
        cons.push_back(sum1);
        for (size_t r = 0; r < rows.size(); ++r) {
            LinearConstraint c2;
            c2.a.resize(k + 1);
            for (int j = 0; j <= k; ++j) c2.a[j] = dot(rows[r], t.s.v[j]);
            c2.b = rhs[r];
            c2.rel = Rel::Eq;
            cons.push_back(c2);
        }
        for (int j = 0; j <= k; ++j) {
            LinearConstraint nn;
            nn.a.assign(k + 1, Rat(0));
            nn.a[j] = -1;
            nn.b = 0;
            nn.rel = Rel::Le;
            cons.push_back(nn);
        }
        if (fm_feasible(cons, k + 1)) return true;
    }
    return false;
}

std::pair<Chain, Chain> pm_decompose(const Chain& c) {
    if (c.degree >= 1) {
        // verify a common carrier
        std::set<std::string> carriers;
        for (const auto& t : c.terms) {
            if (c.degree == 1)
                carriers.insert(line_through(t.s.v[0], t.s.v[1]).key());
            else
                carriers.insert(
                    plane_of_triangle(t.s.v[0], t.s.v[1], t.s.v[2]).key());
        }
        if (carriers.size() > 1)
            throw MathError("pm_decompose: simplices are not coplanar");
    }
    std::vector<ChainTerm> plus, minus;
    for (const auto& t : c.terms) {
        if (t.coeff > 0)
            plus.push_back(t);
        else
            minus.push_back({-t.coeff, t.s});
    }
    return {Chain::make(c.degree, c.ambient, std::move(plus)),
            Chain::make(c.degree, c.ambient, std::move(minus))};
}

namespace {

// Deterministic pseudo-random rationals for cone apexes and perturbations.
struct RatGen {
    std::mt19937_64 rng;
    explicit RatGen(std::uint64_t seed) : rng(seed) {}
    Rat next(int den = 64, int span = 2) {
        std::uniform_int_distribution<long long> num(-span * den, span * den);
        return Rat(Int(num(rng)), Int(den + (rng() % den)));
    }
};

Rat gen_margin(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> d(5, 60);
    return Rat(Int(d(rng)), Int(101));
}

}  // namespace

bool boundary_is_zero(const Chain& c) {
    if (c.degree == 0) {
        Int s = 0;
        for (const auto& t : c.terms) s += t.coeff;
        return s == 0;
    }
    return boundary(c).is_zero();
}

Chain bounding_chain(const Chain& cycle, const AffineSubspace& plane) {
    if (plane.dim() != cycle.degree + 1)
        throw InputError("bounding_chain: plane dimension must be degree+1");
    if (!boundary_is_zero(cycle))
        throw MathError("bounding_chain: input is not a cycle");
    for (const auto& t : cycle.terms)
        for (const auto& v : t.s.v)
            if (!plane.contains(v))
                throw MathError("bounding_chain: cycle not contained in the plane");

    RatGen gen(0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt < 20; ++attempt) {
        RatVec coords(plane.dim());
        for (int i = 0; i < plane.dim(); ++i) coords[i] = gen.next();
        RatVec apex = plane.point;
        for (int i = 0; i < plane.dim(); ++i)
            apex = vec_add(apex, vec_scale(coords[i], plane.direction.basis[i]));
        std::vector<ChainTerm> cone;
        for (const auto& t : cycle.terms) {
            Simplex s;
            s.v.push_back(apex);
            for (const auto& v : t.s.v) s.v.push_back(v);
            cone.push_back({t.coeff, std::move(s)});
        }
        Chain c = Chain::make(cycle.degree + 1, cycle.ambient, std::move(cone));
        if (chains_equal(boundary(c), cycle)) return c;
    }
    throw MathError("bounding_chain: persistent degeneracy choosing an apex");
}

Int linking_number(const Chain& cycle, const AffineSubspace& m) {
    const int k = cycle.degree;
    const int n = cycle.ambient;
    if (m.codim() != k + 1)
        throw InputError("linking_number: subspace codimension must be k+1");
    if (support_meets_affine(cycle, m))
        throw MathError("linking_number: cycle touches the subspace");
    if (!boundary_is_zero(cycle))
        throw MathError("linking_number: input is not a cycle");

    RatMat mrows;
    RatVec mrhs;
    m.equations(mrows, mrhs);

    RatGen gen(0x2545f4914f6cdd1dULL);
    for (int attempt = 0; attempt < 20; ++attempt) {
        RatVec apex(n);
        for (int i = 0; i < n; ++i) apex[i] = gen.next(64, 3);
        bool degenerate = false;
        Int total = 0;
        for (const auto& t : cycle.terms) {
            std::vector<RatVec> verts;
            verts.push_back(apex);
            for (const auto& v : t.s.v) verts.push_back(v);
            const int kk = static_cast<int>(verts.size()) - 1;  // k+1
            // lambda: barycentric coords; solve sum = 1, A x = b
            RatMat sys(1 + mrows.size(), RatVec(kk + 1));
            RatVec rhs(1 + mrows.size());
            for (int j = 0; j <= kk; ++j) sys[0][j] = 1;
            rhs[0] = 1;
            for (size_t r = 0; r < mrows.size(); ++r) {
                for (int j = 0; j <= kk; ++j)
                    sys[1 + r][j] = dot(mrows[r], verts[j]);
                rhs[1 + r] = mrhs[r];
            }
            auto sol = solve_linear(sys, rhs);
            if (!sol) continue;  // simplex plane misses m
            RatMat chk = sys;
            if (rank(chk) < kk + 1) {
                // Underdetermined: the simplex plane meets m in a positive
                // dimensional set. Harmless when it avoids the closed simplex.
                std::vector<LinearConstraint> cons;
                for (size_t r = 0; r < sys.size(); ++r)
                    cons.push_back({sys[r], rhs[r], Rel::Eq});
                for (int j = 0; j <= kk; ++j) {
                    LinearConstraint nn;
                    nn.a.assign(kk + 1, Rat(0));
                    nn.a[j] = -1;
                    nn.b = 0;
                    nn.rel = Rel::Le;
                    cons.push_back(nn);
                }
                if (!fm_feasible(cons, kk + 1)) continue;
                degenerate = true;
                break;
            }
            bool inside = true, boundary_hit = false;
            for (int j = 0; j <= kk; ++j) {
                if ((*sol)[j] == 0) boundary_hit = true;
                if ((*sol)[j] < 0) inside = false;
            }
            if (!inside) continue;
            if (boundary_hit) {
                degenerate = true;
                break;
            }
            // orientation: [v1-v0, ..., v_{k+1}-v0 | direction basis of m]
            RatMat det_m(n, RatVec(n));
            int col = 0;
            for (int j = 1; j <= kk; ++j, ++col)
                for (int i = 0; i < n; ++i)
                    det_m[i][col] = verts[j][i] - verts[0][i];
            for (const auto& dir : m.direction.basis) {
                for (int i = 0; i < n; ++i) det_m[i][col] = dir[i];
                ++col;
            }
            Rat d = det(det_m);
            if (d == 0) {
                degenerate = true;
                break;
            }
            total += (d > 0 ? t.coeff : -t.coeff);
        }
        if (!degenerate) return total;
    }
    throw MathError("linking_number: persistent degeneracy after retries");
}

// --- certification -------------------------------------------------------------

namespace {

RatVec random_rat_vec(std::mt19937_64& rng, int n, int den, double lo, double hi) {
    RatVec v(n);
    std::uniform_int_distribution<long long> d(
        static_cast<long long>(lo * den), static_cast<long long>(hi * den));
    for (int i = 0; i < n; ++i) v[i] = Rat(Int(d(rng)), Int(den));
    return v;
}

}  // namespace

CertifyOutcome certify_k_convexity(const std::vector<AffineSubspace>& members_in,
                                   const AffineSubspace& plane_in, int k,
                                   const CertifyParams& params, const Box& box) {
    if (k != 0 && k != 1)
        throw InputError("certify_k_convexity supports k in {0,1}");
    const int n = plane_in.ambient();
    for (const auto& m : members_in)
        if (m.codim() != k + 1)
            throw MathError("arrangement member of wrong codimension");
    if (plane_in.dim() != k + 1)
        throw InputError("plane must have dimension k+1");

    CertifyOutcome out;
    out.members = members_in;
    std::mt19937_64 rng(params.seed);

    // generic plane: every member meets it in a point or not at all
    AffineSubspace plane = plane_in;
    for (int attempt = 0;; ++attempt) {
        bool ok = true;
        for (const auto& m : out.members) {
            auto inter = intersect_affine(plane, m);
            if (inter && inter->dim() >= 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
        if (attempt >= 20)
            throw MathError("no generic plane after 20 perturbations");
        RatVec shift = random_rat_vec(rng, n, 997, -0.01, 0.01);
        plane = AffineSubspace(vec_add(plane_in.point, shift), plane_in.direction);
        out.plane_perturbed = true;
    }
    out.plane = plane;

    // crossing points in frame coordinates
    std::vector<std::pair<int, RatVec>> crossings;  // (member, frame coords)
    for (size_t i = 0; i < out.members.size(); ++i) {
        auto inter = intersect_affine(plane, out.members[i]);
        if (!inter) continue;
        crossings.push_back(
            {static_cast<int>(i), frame_coords(plane, inter->point)});
    }

    auto emit_cycle_k0 = [&](const Rat& ta, const Rat& tb) {
        std::vector<ChainTerm> ts;
        Simplex sa, sb;
        sa.v = {frame_point(plane, {ta})};
        sb.v = {frame_point(plane, {tb})};
        ts.push_back({Int(-1), sa});
        ts.push_back({Int(1), sb});
        return Chain::make(0, n, std::move(ts));
    };
    auto emit_rect_k1 = [&](const Rat& x0, const Rat& y0, const Rat& x1,
                            const Rat& y1) {
        std::vector<ChainTerm> ts;
        RatVec c00 = frame_point(plane, {x0, y0});
        RatVec c10 = frame_point(plane, {x1, y0});
        RatVec c11 = frame_point(plane, {x1, y1});
        RatVec c01 = frame_point(plane, {x0, y1});
        auto seg = [&](const RatVec& a, const RatVec& b) {
            Simplex s;
            s.v = {a, b};
            ts.push_back({Int(1), s});
        };
        seg(c00, c10);
        seg(c10, c11);
        seg(c11, c01);
        seg(c01, c00);
        return Chain::make(1, n, std::move(ts));
    };

    // component midpoints for k=0
    std::vector<Rat> cross_params;
    if (k == 0)
        for (const auto& [mi, fc] : crossings) cross_params.push_back(fc[0]);
    std::sort(cross_params.begin(), cross_params.end());

    for (int trial = 0; trial < params.trials; ++trial) {
        ++out.trials;
        Chain cycle;
        if (k == 0) {
            // representatives: midpoints of components plus random params
            std::vector<Rat> reps;
            if (!cross_params.empty()) {
                reps.push_back(cross_params.front() - 1);
                for (size_t i = 0; i + 1 < cross_params.size(); ++i)
                    reps.push_back((cross_params[i] + cross_params[i + 1]) / 2);
                reps.push_back(cross_params.back() + 1);
            }
            Rat ta, tb;
            if (reps.size() >= 2 && trial % 2 == 0) {
                std::uniform_int_distribution<size_t> pick(0, reps.size() - 1);
                size_t ia = pick(rng), ib = pick(rng);
                if (ia == ib) ib = (ib + 1) % reps.size();
                ta = reps[ia];
                tb = reps[ib];
            } else {
                ta = random_rat_vec(rng, 1, 997, -3, 3)[0];
                tb = random_rat_vec(rng, 1, 997, -3, 3)[0];
            }
            if (ta == tb) continue;
            bool touches = false;
            for (const Rat& cp : cross_params)
                if (cp == ta || cp == tb) touches = true;
            if (touches) continue;
            cycle = emit_cycle_k0(ta, tb);
        } else {
            Rat x0, y0, x1, y1;
            if (!crossings.empty() && trial % 2 == 0) {
                std::uniform_int_distribution<size_t> pick(0, crossings.size() - 1);
                std::set<size_t> chosen;
                size_t count = 1 + (rng() % std::min<size_t>(3, crossings.size()));
                for (size_t i = 0; i < count; ++i) chosen.insert(pick(rng));
                bool first = true;
                for (size_t idx : chosen) {
                    const RatVec& fc = crossings[idx].second;
                    if (first) {
                        x0 = x1 = fc[0];
                        y0 = y1 = fc[1];
                        first = false;
                    } else {
                        x0 = std::min(x0, fc[0]);
                        x1 = std::max(x1, fc[0]);
                        y0 = std::min(y0, fc[1]);
                        y1 = std::max(y1, fc[1]);
                    }
                }
                x0 -= gen_margin(rng);
                y0 -= gen_margin(rng);
                x1 += gen_margin(rng);
                y1 += gen_margin(rng);
            } else {
                RatVec center = random_rat_vec(rng, 2, 499, -2, 2);
                Rat w = gen_margin(rng), h = gen_margin(rng);
                x0 = center[0] - w;
                x1 = center[0] + w;
                y0 = center[1] - h;
                y1 = center[1] + h;
            }
            // reject if a crossing lies on an edge line segment
            bool touches = false;
            for (const auto& [mi, fc] : crossings) {
                bool on_x = (fc[0] == x0 || fc[0] == x1) && fc[1] >= y0 && fc[1] <= y1;
                bool on_y = (fc[1] == y0 || fc[1] == y1) && fc[0] >= x0 && fc[0] <= x1;
                if (on_x || on_y) touches = true;
            }
            if (touches) continue;
            cycle = emit_rect_k1(x0, y0, x1, y1);
        }

        Chain bc = bounding_chain(cycle, plane);
        std::vector<std::pair<int, Int>> witnesses;
        bool nontrivial = false;
        for (const auto& [mi, fc] : crossings) {
            RatVec pt = frame_point(plane, fc);
            if (!support_contains_point(bc, pt)) continue;
            nontrivial = true;
            Int lk = linking_number(cycle, out.members[mi]);
            if (lk != 0) witnesses.push_back({mi, lk});
        }
        if (!nontrivial) {
            ++out.trivial_trials;
            continue;
        }
        if (!witnesses.empty()) {
            ConvexityCertificate cert;
            cert.cycle = cycle;
            cert.bounding = bc;
            cert.witnesses = std::move(witnesses);
            out.certificates.push_back(std::move(cert));
            continue;
        }
        // escalate to the cubical oracle
        ++out.oracle_escalations;
        double dil = params.oracle_dilation;
        CubicalComplex cx = rasterize_complement(out.members, {}, box,
                                                 params.oracle_resolution, dil);
        bool zero;
        try {
            if (k == 0) {
                RatVec pa, pb;
                for (const auto& t : cycle.terms)
                    (t.coeff < 0 ? pa : pb) = t.s.v[0];
                zero = class_is_zero_points(cx, pa, pb);
            } else {
                zero = class_is_zero(cx, cycle);
            }
        } catch (const MathError&) {
            // snapping failure: inconclusive, skip the trial
            continue;
        }
        if (!zero) {
            ConvexityCertificate cert;
            cert.cycle = cycle;
            cert.bounding = bc;
            cert.oracle_confirmed = true;
            out.certificates.push_back(std::move(cert));
        } else {
            Counterexample ce;
            ce.cycle = cycle;
            ce.note = "nontrivial in the plane but dies in the ambient complement";
            out.counterexamples.push_back(std::move(ce));
        }
    }
    return out;
}

CertifyOutcome certify_k_convexity(const LiftedArrangement& arr,
                                   const AffineSubspace& plane, int k,
                                   const CertifyParams& params) {
    auto members = enumerate_in_box(arr, arr.box);
    return certify_k_convexity(members, plane, k, params, arr.box);
}

CertifyOutcome intersect_convexity(const LiftedArrangement& a,
                                   const LiftedArrangement& b,
                                   const AffineSubspace& plane, int k,
                                   const CertifyParams& params) {
    auto members = enumerate_in_box(a, a.box);
    auto mb = enumerate_in_box(b, a.box);
    std::set<std::string> seen;
    std::vector<AffineSubspace> uni;
    for (const auto& m : members)
        if (seen.insert(m.key()).second) uni.push_back(m);
    for (const auto& m : mb)
        if (seen.insert(m.key()).second) uni.push_back(m);
    return certify_k_convexity(uni, plane, k, params, a.box);
}

}  // namespace coamoeba
