#include "coamoeba/tropical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace coamoeba {

InitialForm initial_form(const LaurentPolynomial& f, const RatVec& w) {
    if (f.is_zero()) throw MathError("initial form of the zero polynomial");
    if (static_cast<int>(w.size()) != f.ambient_dim)
        throw InputError("initial_form: weight dimension mismatch");
    Rat best;
    bool first = true;
    std::vector<Rat> vals(f.terms.size());
    for (size_t i = 0; i < f.terms.size(); ++i) {
        Rat v = 0;
        for (int j = 0; j < f.ambient_dim; ++j) v += w[j] * Rat(f.terms[i].exp[j]);
        vals[i] = v;
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    InitialForm out;
    out.source = f;
    out.weight = w;
    out.result.ambient_dim = f.ambient_dim;
    for (size_t i = 0; i < f.terms.size(); ++i)
        if (vals[i] == best) out.result.terms.push_back(f.terms[i]);
    return out;
}

// --- tie cells ---------------------------------------------------------------

namespace {

// Constraints for "arg-opt set of support s is exactly the subset".
void pattern_constraints(const WeightedSupport& s, const std::vector<int>& subset,
                         TieSense sense, bool strict,
                         std::vector<LinearConstraint>& cons, int nvars) {
    std::vector<bool> in(s.exps.size(), false);
    for (int i : subset) in[i] = true;
    const int a = subset[0];
    const Rat sign = sense == TieSense::Max ? Rat(1) : Rat(-1);
    for (size_t i = 1; i < subset.size(); ++i) {
        int b = subset[i];
        LinearConstraint c;
        c.a.resize(nvars);
        for (int j = 0; j < nvars; ++j)
            c.a[j] = Rat(s.exps[a][j]) - Rat(s.exps[b][j]);
        c.b = s.offsets[b] - s.offsets[a];
        c.rel = Rel::Eq;
        cons.push_back(std::move(c));
    }
    for (size_t g = 0; g < s.exps.size(); ++g) {
        if (in[g]) continue;
        // sense Max: value_a > value_g  <=>  (exp_g - exp_a).w <= offset_a - offset_g (strict)
        LinearConstraint c;
        c.a.resize(nvars);
        for (int j = 0; j < nvars; ++j)
            c.a[j] = sign * (Rat(s.exps[g][j]) - Rat(s.exps[a][j]));
        c.b = sign * (s.offsets[a] - s.offsets[g]);
        c.rel = strict ? Rel::Lt : Rel::Le;
        cons.push_back(std::move(c));
    }
}

std::string pattern_key(const std::vector<std::vector<int>>& p) {
    std::string k;
    for (const auto& s : p) {
        for (int i : s) k += std::to_string(i) + ",";
        k += ";";
    }
    return k;
}

}  // namespace

std::vector<TieCell> enumerate_tie_cells(const std::vector<WeightedSupport>& sys,
                                         int nvars, TieSense sense) {
    // Per support: subsets of size >= 2 that are feasible on their own.
    std::vector<std::vector<std::vector<int>>> options(sys.size());
    for (size_t p = 0; p < sys.size(); ++p) {
        const int m = static_cast<int>(sys[p].exps.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) subset.push_back(i);
            if (subset.size() < 2) continue;
            std::vector<LinearConstraint> cons;
            pattern_constraints(sys[p], subset, sense, true, cons, nvars);
            if (fm_feasible(cons, nvars)) options[p].push_back(subset);
        }
    }

    std::vector<TieCell> cells;
    std::vector<std::vector<int>> chosen(sys.size());
    std::function<void(size_t, std::vector<LinearConstraint>&)> rec =
        [&](size_t p, std::vector<LinearConstraint>& prefix) {
            if (p == sys.size()) {
                TieCell cell;
                cell.pattern = chosen;
                // Closure and affine hull of the cell.
                std::vector<LinearConstraint> closed;
                for (const auto& c : prefix) {
                    LinearConstraint cc = c;
                    if (cc.rel == Rel::Lt) cc.rel = Rel::Le;
                    closed.push_back(std::move(cc));
                }
                cell.closure = v_representation(closed, nvars);
                RatMat eqs;
                RatVec rhs;
                for (const auto& c : prefix)
                    if (c.rel == Rel::Eq) {
                        eqs.push_back(c.a);
                        rhs.push_back(c.b);
                    }
                RationalSubspace dir;
                dir.ambient = nvars;
                dir.basis = eqs.empty() ? RationalSubspace::full(nvars).basis
                                        : kernel_basis(eqs, nvars);
                RatVec base = eqs.empty() ? RatVec(nvars, Rat(0))
                                          : *solve_linear(eqs, rhs);
                cell.affine_hull = AffineSubspace(base, dir);
                cell.dim = dir.dim();
                cell.interior = cell.closure.interior_point();
                cells.push_back(std::move(cell));
                return;
            }
            for (const auto& subset : options[p]) {
                size_t mark = prefix.size();
                pattern_constraints(sys[p], subset, sense, true, prefix, nvars);
                if (fm_feasible(prefix, nvars)) {
                    chosen[p] = subset;
                    rec(p + 1, prefix);
                }
                prefix.resize(mark);
            }
        };
    std::vector<LinearConstraint> prefix;
    rec(0, prefix);

    // Deterministic order: by dimension, then by pattern key.
    std::sort(cells.begin(), cells.end(), [](const TieCell& a, const TieCell& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return pattern_key(a.pattern) < pattern_key(b.pattern);
    });
    return cells;
}

// --- tropical complexes ------------------------------------------------------

namespace {

// pattern containment per support, used for the face order: smaller faces tie
// more terms.
bool pattern_refines(const std::vector<std::vector<int>>& small,
                     const std::vector<std::vector<int>>& big) {
    for (size_t p = 0; p < small.size(); ++p) {
        if (!std::includes(small[p].begin(), small[p].end(), big[p].begin(),
                           big[p].end()))
            return false;
    }
    return true;
}

std::vector<std::pair<int, int>> incidence_from_patterns(
    const std::vector<TieCell>& cells) {
    std::vector<std::pair<int, int>> inc;
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = 0; j < cells.size(); ++j) {
            if (i == j || cells[i].dim >= cells[j].dim) continue;
            if (pattern_refines(cells[i].pattern, cells[j].pattern))
                inc.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    return inc;
}

TropicalFace face_from_cell(const TieCell& cell,
                            const std::vector<LaurentPolynomial>& inputs) {
    TropicalFace f;
    f.dim = cell.dim;
    f.affine_hull = cell.affine_hull;
    f.vertices = cell.closure.points;
    f.rays = cell.closure.rays;
    f.interior = cell.interior;
    for (const auto& g : inputs) {
        InitialForm in = initial_form(g, cell.interior);
        f.tie_pattern.push_back(in.result.support());
    }
    return f;
}

}  // namespace

std::vector<int> TropicalComplex::maximal_faces() const {
    std::vector<bool> is_face_of(faces.size(), false);
    for (auto [i, j] : incidence) is_face_of[i] = true;
    std::vector<int> out;
    for (size_t i = 0; i < faces.size(); ++i)
        if (!is_face_of[i]) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> TropicalComplex::minimal_faces() const {
    std::vector<bool> has_face(faces.size(), false);
    for (auto [i, j] : incidence) has_face[j] = true;
    std::vector<int> out;
    for (size_t i = 0; i < faces.size(); ++i)
        if (!has_face[i]) out.push_back(static_cast<int>(i));
    return out;
}

TropicalComplex tropical_hypersurface(const LaurentPolynomial& f) {
    if (f.terms.size() < 2)
        throw MathError("tropical hypersurface of a monomial is empty");
    WeightedSupport s;
    for (const auto& t : f.terms) {
        s.offsets.push_back(Rat(0));
        s.exps.push_back(t.exp);
    }
    auto cells = enumerate_tie_cells({s}, f.ambient_dim, TieSense::Max);
    TropicalComplex out;
    out.ambient = f.ambient_dim;
    for (const auto& c : cells) out.faces.push_back(face_from_cell(c, {f}));
    out.incidence = incidence_from_patterns(cells);
    return out;
}

// --- circuits of affine-linear systems ---------------------------------------

namespace {

int numeric_rank(std::vector<std::vector<Cplx>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    double scale = 0.0;
    for (const auto& row : m)
        for (const auto& v : row) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0;
    const double tol = 1e-9 * scale;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        double best = tol;
        for (int i = r; i < rows; ++i)
            if (std::abs(m[i][c]) > best) {
                best = std::abs(m[i][c]);
                piv = i;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            Cplx f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

std::vector<std::vector<ExponentVector>> complex_circuit_supports(
    const VarietySpec& spec) {
    // Columns: the union of the supports.
    std::map<ExponentVector, int> col_of;
    std::vector<ExponentVector> cols;
    for (const auto& f : spec.polynomials)
        for (const auto& t : f.terms)
            if (!col_of.count(t.exp)) {
                col_of[t.exp] = static_cast<int>(cols.size());
                cols.push_back(t.exp);
            }
    const int m = static_cast<int>(cols.size());
    const int k = static_cast<int>(spec.polynomials.size());
    std::vector<std::vector<Cplx>> b(k, std::vector<Cplx>(m, Cplx(0, 0)));
    for (int i = 0; i < k; ++i)
        for (const auto& t : spec.polynomials[i].terms)
            b[i][col_of[t.exp]] = t.coeff.value();
    const int r = numeric_rank(b);

    auto rank_of_complement = [&](const std::vector<int>& s) {
        std::vector<bool> in(m, false);
        for (int i : s) in[i] = true;
        std::vector<std::vector<Cplx>> sub(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < m; ++j)
                if (!in[j]) sub[i].push_back(b[i][j]);
        if (sub[0].empty()) return 0;
        return numeric_rank(sub);
    };

    // A singleton support would be a monomial in the ideal: the torus variety
    // is empty and so is its tropicalization.
    for (int j = 0; j < m; ++j)
        if (rank_of_complement({j}) < r)
            throw MathError("ideal contains a monomial; empty tropical variety");

    // Supports S with a row-space vector supported inside S are those with
    // rank(B restricted off S) < r; circuits are the minimal ones.
    std::vector<std::vector<int>> found;
    for (int size = 2; size <= m; ++size) {
        std::vector<int> idx(size);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == size) {
                for (const auto& c : found)
                    if (std::includes(idx.begin(), idx.end(), c.begin(), c.end()))
                        return;  // contains a smaller circuit
                if (rank_of_complement(idx) < r) found.push_back(idx);
                return;
            }
            for (int i = start; i < m; ++i) {
                idx[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    std::vector<std::vector<ExponentVector>> out;
    for (const auto& s : found) {
        std::vector<ExponentVector> supp;
        for (int i : s) supp.push_back(cols[i]);
        out.push_back(std::move(supp));
    }
    return out;
}

namespace {

std::string face_pattern_key(const TropicalFace& f) {
    std::string k;
    for (const auto& per_poly : f.tie_pattern) {
        auto sorted = per_poly;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& e : sorted) {
            for (const auto& x : e) k += x.str() + ",";
            k += "|";
        }
        k += ";";
    }
    return k;
}

TropicalComplex complex_from_cells(const std::vector<TieCell>& cells,
                                   const std::vector<LaurentPolynomial>& inputs,
                                   int ambient) {
    TropicalComplex out;
    out.ambient = ambient;
    for (const auto& c : cells) out.faces.push_back(face_from_cell(c, inputs));
    out.incidence = incidence_from_patterns(cells);
    std::set<std::string> seen;
    for (const auto& f : out.faces)
        if (!seen.insert(face_pattern_key(f)).second)
            throw MathError(
                "non-transverse input: two cells share the input tie pattern " +
                face_pattern_key(f));
    return out;
}

}  // namespace

TropicalComplex tropical_line(const VarietySpec& spec) {
    if (spec.input_class != InputClass::Line)
        throw InputError("tropical_line expects a line spec");
    auto circuits = complex_circuit_supports(spec);
    std::vector<WeightedSupport> sys;
    for (const auto& supp : circuits) {
        WeightedSupport s;
        for (const auto& e : supp) {
            s.offsets.push_back(Rat(0));
            s.exps.push_back(e);
        }
        sys.push_back(std::move(s));
    }
    auto cells = enumerate_tie_cells(sys, spec.ambient_dim, TieSense::Max);
    for (const auto& c : cells)
        if (c.dim > 1) {
            std::ostringstream os;
            os << "non-transverse line input: tie cell of dimension " << c.dim
               << " with pattern ";
            for (size_t p = 0; p < c.pattern.size(); ++p) {
                os << "{";
                for (size_t i = 0; i < c.pattern[p].size(); ++i) {
                    if (i) os << ",";
                    for (size_t j = 0; j < circuits[p][c.pattern[p][i]].size(); ++j)
                        os << circuits[p][c.pattern[p][i]][j]
                           << (j + 1 < circuits[p][c.pattern[p][i]].size() ? " " : "");
                }
                os << "}";
            }
            throw MathError(os.str());
        }
    return complex_from_cells(cells, spec.polynomials, spec.ambient_dim);
}

// --- tropical fan ------------------------------------------------------------

std::vector<int> TropicalFan::maximal_cones() const {
    std::vector<bool> is_face(cones.size(), false);
    for (auto [i, j] : face_relations) is_face[i] = true;
    std::vector<int> out;
    for (size_t i = 0; i < cones.size(); ++i)
        if (!is_face[i]) out.push_back(static_cast<int>(i));
    return out;
}

TropicalFan tropical_fan(const VarietySpec& spec) {
    std::vector<TieCell> cells;
    switch (spec.input_class) {
        case InputClass::Hypersurface: {
            const auto& f = spec.polynomials[0];
            if (f.terms.size() < 2)
                throw MathError("tropical fan of a monomial is empty");
            WeightedSupport s;
            for (const auto& t : f.terms) {
                s.offsets.push_back(Rat(0));
                s.exps.push_back(t.exp);
            }
            cells = enumerate_tie_cells({s}, spec.ambient_dim, TieSense::Max);
            break;
        }
        case InputClass::Line: {
            auto circuits = complex_circuit_supports(spec);
            std::vector<WeightedSupport> sys;
            for (const auto& supp : circuits) {
                WeightedSupport s;
                for (const auto& e : supp) {
                    s.offsets.push_back(Rat(0));
                    s.exps.push_back(e);
                }
                sys.push_back(std::move(s));
            }
            cells = enumerate_tie_cells(sys, spec.ambient_dim, TieSense::Max);
            for (const auto& c : cells)
                if (c.dim > 1)
                    throw MathError("non-transverse line input in tropical_fan");
            break;
        }
        case InputClass::CompleteIntersection: {
            std::vector<WeightedSupport> sys;
            for (const auto& f : spec.polynomials) {
                WeightedSupport s;
                for (const auto& t : f.terms) {
                    s.offsets.push_back(Rat(0));
                    s.exps.push_back(t.exp);
                }
                sys.push_back(std::move(s));
            }
            cells = enumerate_tie_cells(sys, spec.ambient_dim, TieSense::Max);
            const int expected = spec.ambient_dim - spec.declared_codim;
            for (const auto& c : cells)
                if (c.dim > expected)
                    throw MathError(
                        "complete intersection is not tropically transverse: cell "
                        "of dimension " + std::to_string(c.dim));
            break;
        }
    }

    TropicalFan fan;
    fan.ambient = spec.ambient_dim;
    fan.source = spec;
    for (const auto& c : cells) {
        TropicalFanCone fc;
        for (const auto& v : c.closure.points)
            if (!is_zero(v))
                throw MathError("tropical fan cell is not a cone");
        fc.cone = Cone::from_rays(spec.ambient_dim, c.closure.rays);
        fc.interior = c.interior;
        for (const auto& f : spec.polynomials) {
            InitialForm in = initial_form(f, c.interior);
            fc.initial_system.push_back(in.result);
            fc.tie_pattern.push_back(in.result.support());
        }
        fan.cones.push_back(std::move(fc));
    }
    fan.face_relations = incidence_from_patterns(cells);
    std::vector<bool> is_face(fan.cones.size(), false);
    for (auto [i, j] : fan.face_relations) is_face[i] = true;
    for (size_t i = 0; i < fan.cones.size(); ++i) fan.cones[i].maximal = !is_face[i];
    return fan;
}

}  // namespace coamoeba
