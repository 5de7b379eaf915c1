#include "coamoeba/nonarch.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace coamoeba {

PuiseuxScalar PuiseuxScalar::make(std::vector<PuiseuxTerm> in) {
    std::map<Rat, ComplexScalar> acc;
    for (auto& t : in) {
        auto it = acc.find(t.gamma);
        if (it == acc.end())
            acc.emplace(t.gamma, t.c);
        else
            it->second = it->second + t.c;
    }
    PuiseuxScalar s;
    for (auto& [g, c] : acc) {
        if (c.abs() <= kCoeffZeroTol) continue;
        s.terms.push_back({g, c});
    }
    return s;
}

PuiseuxScalar PuiseuxScalar::from_complex(const ComplexScalar& c) {
    return make({{Rat(0), c}});
}

PuiseuxScalar PuiseuxScalar::t_power(const Rat& gamma) {
    return make({{gamma, ComplexScalar::from_rational(Rat(1))}});
}

PuiseuxScalar PuiseuxScalar::operator+(const PuiseuxScalar& o) const {
    std::vector<PuiseuxTerm> all = terms;
    all.insert(all.end(), o.terms.begin(), o.terms.end());
    return make(std::move(all));
}

PuiseuxScalar PuiseuxScalar::operator*(const PuiseuxScalar& o) const {
    std::vector<PuiseuxTerm> all;
    for (const auto& a : terms)
        for (const auto& b : o.terms) all.push_back({a.gamma + b.gamma, a.c * b.c});
    return make(std::move(all));
}

PuiseuxScalar PuiseuxScalar::operator-() const {
    PuiseuxScalar s;
    for (const auto& t : terms) s.terms.push_back({t.gamma, -t.c});
    return s;
}

Rat valuation(const PuiseuxScalar& a) {
    if (a.is_zero()) throw MathError("valuation of zero is infinite");
    return a.terms.front().gamma;
}

ComplexScalar residue(const PuiseuxScalar& a) {
    if (a.is_zero()) throw MathError("residue of zero");
    return a.terms.front().c;
}

KLaurentPolynomial KLaurentPolynomial::make(int n, std::vector<KLaurentTerm> in) {
    std::map<ExponentVector, PuiseuxScalar> acc;
    for (auto& t : in) {
        if (static_cast<int>(t.exp.size()) != n)
            throw InputError("exponent vector has wrong dimension");
        auto it = acc.find(t.exp);
        if (it == acc.end())
            acc.emplace(t.exp, t.coeff);
        else
            it->second = it->second + t.coeff;
    }
    KLaurentPolynomial f;
    f.ambient_dim = n;
    for (auto& [e, c] : acc) {
        if (c.is_zero()) continue;
        f.terms.push_back({c, e});
    }
    return f;
}

LaurentPolynomial tropical_reduction(const KLaurentPolynomial& f, const RatVec& w) {
    if (f.terms.empty()) throw MathError("tropical reduction of zero");
    Rat best;
    bool first = true;
    std::vector<Rat> vals(f.terms.size());
    for (size_t i = 0; i < f.terms.size(); ++i) {
        Rat v = valuation(f.terms[i].coeff);
        for (int j = 0; j < f.ambient_dim; ++j) v += w[j] * Rat(f.terms[i].exp[j]);
        vals[i] = v;
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    std::vector<LaurentTerm> terms;
    for (size_t i = 0; i < f.terms.size(); ++i)
        if (vals[i] == best)
            terms.push_back({residue(f.terms[i].coeff), f.terms[i].exp});
    return LaurentPolynomial::make(f.ambient_dim, std::move(terms));
}

// --- circuits -----------------------------------------------------------------

namespace {

PuiseuxScalar puiseux_det(const std::vector<std::vector<PuiseuxScalar>>& m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return PuiseuxScalar::from_complex(ComplexScalar::from_rational(Rat(1)));
    if (k == 1) return m[0][0];
    PuiseuxScalar acc;
    for (int j = 0; j < k; ++j) {
        std::vector<std::vector<PuiseuxScalar>> minor;
        for (int i = 1; i < k; ++i) {
            std::vector<PuiseuxScalar> row;
            for (int c = 0; c < k; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        PuiseuxScalar term = m[0][j] * puiseux_det(minor);
        if (j % 2 == 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

int puiseux_rank(const std::vector<std::vector<PuiseuxScalar>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    // rank = largest k with a nonzero k x k minor (desk-scale dimensions)
    for (int k = std::min(rows, cols); k >= 1; --k) {
        std::vector<int> ri(k), ci(k);
        std::function<bool(int, int)> pick_rows = [&](int start, int depth) -> bool {
            if (depth == k) {
                std::function<bool(int, int)> pick_cols = [&](int s, int d) -> bool {
                    if (d == k) {
                        std::vector<std::vector<PuiseuxScalar>> sub(k);
                        for (int i = 0; i < k; ++i)
                            for (int j = 0; j < k; ++j)
                                sub[i].push_back(m[ri[i]][ci[j]]);
                        return !puiseux_det(sub).is_zero();
                    }
                    for (int j = s; j < cols; ++j) {
                        ci[d] = j;
                        if (pick_cols(j + 1, d + 1)) return true;
                    }
                    return false;
                };
                return pick_cols(0, 0);
            }
            for (int i = start; i < rows; ++i) {
                ri[depth] = i;
                if (pick_rows(i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) return k;
    }
    return 0;
}

}  // namespace

std::vector<KCircuit> k_circuits(const KVarietySpec& spec) {
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
    std::vector<std::vector<PuiseuxScalar>> b(k, std::vector<PuiseuxScalar>(m));
    for (int i = 0; i < k; ++i)
        for (const auto& t : spec.polynomials[i].terms)
            b[i][col_of[t.exp]] = b[i][col_of[t.exp]] + t.coeff;
    const int r = puiseux_rank(b);

    auto complement = [&](const std::vector<int>& s) {
        std::vector<bool> in(m, false);
        for (int i : s) in[i] = true;
        std::vector<std::vector<PuiseuxScalar>> sub(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < m; ++j)
                if (!in[j]) sub[i].push_back(b[i][j]);
        return sub;
    };

    for (int j = 0; j < m; ++j) {
        auto sub = complement({j});
        if ((sub[0].empty() ? 0 : puiseux_rank(sub)) < r)
            throw MathError("ideal contains a monomial; empty tropical variety");
    }

    std::vector<std::vector<int>> found;
    std::vector<KCircuit> out;
    for (int size = 2; size <= m; ++size) {
        std::vector<int> idx(size);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == size) {
                for (const auto& c : found)
                    if (std::includes(idx.begin(), idx.end(), c.begin(), c.end()))
                        return;
                auto sub = complement(idx);
                if (sub[0].empty() ? (0 < r) : (puiseux_rank(sub) < r)) {
                    // left kernel vector y of the complement, via minors of a
                    // full-rank (r-1)-column subset
                    std::vector<PuiseuxScalar> y(k);
                    const int c = static_cast<int>(sub[0].size());
                    bool got = false;
                    if (r - 1 == 0) {
                        // k = 1: y = (1)
                        y[0] = PuiseuxScalar::from_complex(
                            ComplexScalar::from_rational(Rat(1)));
                        got = true;
                    } else {
                        std::vector<int> cj(r - 1);
                        std::function<bool(int, int)> pick = [&](int s, int d) -> bool {
                            if (d == r - 1) {
                                // y_i = (-1)^i det(sub with row i removed, cols cj)
                                std::vector<std::vector<PuiseuxScalar>> mat(k);
                                for (int i = 0; i < k; ++i)
                                    for (int j = 0; j < r - 1; ++j)
                                        mat[i].push_back(sub[i][cj[j]]);
                                std::vector<PuiseuxScalar> cand(k);
                                bool nonzero = false;
                                for (int i = 0; i < k; ++i) {
                                    std::vector<std::vector<PuiseuxScalar>> minor;
                                    for (int i2 = 0; i2 < k; ++i2)
                                        if (i2 != i) minor.push_back(mat[i2]);
                                    PuiseuxScalar d2 = puiseux_det(minor);
                                    if (i % 2 == 1) d2 = -d2;
                                    cand[i] = d2;
                                    if (!d2.is_zero()) nonzero = true;
                                }
                                if (!nonzero) return false;
                                // verify y . sub == 0
                                for (int j = 0; j < c; ++j) {
                                    PuiseuxScalar dotv;
                                    for (int i = 0; i < k; ++i)
                                        dotv = dotv + cand[i] * sub[i][j];
                                    if (!dotv.is_zero()) return false;
                                }
                                y = cand;
                                return true;
                            }
                            for (int j = s; j < c; ++j) {
                                cj[d] = j;
                                if (pick(j + 1, d + 1)) return true;
                            }
                            return false;
                        };
                        got = c == 0 ? false : pick(0, 0);
                        if (c == 0 && k == r) {
                            // no complement columns: any left-kernel direction
                            // of nothing; take y with a single 1 only if k==1
                            got = false;
                        }
                    }
                    if (!got) return;
                    // v = y . b restricted to idx
                    KCircuit circ;
                    bool proper = true;
                    for (int j : idx) {
                        PuiseuxScalar v;
                        for (int i = 0; i < k; ++i) v = v + y[i] * b[i][j];
                        if (v.is_zero()) proper = false;
                        circ.support.push_back(cols[j]);
                        circ.coeffs.push_back(std::move(v));
                    }
                    if (!proper) return;  // support smaller; found elsewhere
                    found.push_back(idx);
                    out.push_back(std::move(circ));
                }
                return;
            }
            for (int i = start; i < m; ++i) {
                idx[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    return out;
}

NAmoebaComplex na_amoeba(const KVarietySpec& spec) {
    if (spec.input_class != InputClass::Line)
        throw InputError("na_amoeba expects a line spec over K");
    const int n = spec.ambient_dim;
    if (static_cast<int>(spec.polynomials.size()) != n - 1)
        throw InputError("line spec over K needs n-1 polynomials");

    auto circuits = k_circuits(spec);
    std::vector<WeightedSupport> sys;
    for (const auto& c : circuits) {
        WeightedSupport s;
        for (size_t i = 0; i < c.support.size(); ++i) {
            s.offsets.push_back(valuation(c.coeffs[i]));
            s.exps.push_back(c.support[i]);
        }
        sys.push_back(std::move(s));
    }
    auto cells = enumerate_tie_cells(sys, n, TieSense::Min);
    for (const auto& c : cells)
        if (c.dim > 1)
            throw MathError("non-transverse K-line: tie cell of dimension " +
                            std::to_string(c.dim));

    NAmoebaComplex out;
    out.ambient = n;
    out.complex.ambient = n;
    std::set<std::string> seen;
    for (const auto& cell : cells) {
        TropicalFace f;
        f.dim = cell.dim;
        f.affine_hull = cell.affine_hull;
        f.vertices = cell.closure.points;
        f.rays = cell.closure.rays;
        f.interior = cell.interior;
        std::vector<LaurentPolynomial> reds;
        std::string key;
        for (const auto& g : spec.polynomials) {
            LaurentPolynomial red = tropical_reduction(g, cell.interior);
            f.tie_pattern.push_back(red.support());
            for (const auto& e : red.support()) {
                for (const auto& x : e) key += x.str() + ",";
                key += "|";
            }
            key += ";";
            reds.push_back(std::move(red));
        }
        out.complex.faces.push_back(std::move(f));
        out.reductions.push_back(std::move(reds));
        if (!seen.insert(key).second)
            throw MathError("two faces share the reduction pattern; refine input");
    }
    // incidence from the circuit patterns
    {
        std::vector<TieCell> copy = cells;
        for (size_t i = 0; i < copy.size(); ++i)
            for (size_t j = 0; j < copy.size(); ++j) {
                if (i == j || copy[i].dim >= copy[j].dim) continue;
                bool refines = true;
                for (size_t p = 0; p < copy[i].pattern.size() && refines; ++p)
                    refines = std::includes(copy[i].pattern[p].begin(),
                                            copy[i].pattern[p].end(),
                                            copy[j].pattern[p].begin(),
                                            copy[j].pattern[p].end());
                if (refines)
                    out.complex.incidence.push_back(
                        {static_cast<int>(i), static_cast<int>(j)});
            }
    }
    auto minimal = out.complex.minimal_faces();
    out.minimal.assign(out.complex.faces.size(), false);
    for (int i : minimal) out.minimal[i] = true;
    return out;
}

NACoamoeba na_coamoeba(const KVarietySpec& spec, const SampleParams& sp) {
    NAmoebaComplex na = na_amoeba(spec);
    NACoamoeba out;
    out.ambient = spec.ambient_dim;
    for (size_t i = 0; i < na.complex.faces.size(); ++i) {
        NACoamoebaStratum st;
        st.face = static_cast<int>(i);
        st.face_dim = na.complex.faces[i].dim;
        st.minimal_face = na.minimal[i];
        const auto& reds = na.reductions[i];
        bool all_binomial = true;
        for (const auto& f : reds) all_binomial &= (f.terms.size() == 2);
        if (all_binomial) {
            st.exact = true;
            st.cosets = binomial_system_cosets(reds, spec.ambient_dim);
        } else {
            st.exact = false;
            VarietySpec sub = VarietySpec::make(spec.ambient_dim, InputClass::Line, reds);
            st.cloud = sample_coamoeba(sub, sp);
        }
        out.strata.push_back(std::move(st));
    }
    return out;
}

}  // namespace coamoeba
