#include "coamoeba/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace coamoeba {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw InputError("zero denominator in '" + s + "'");
        return Rat(p, q);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (neg) head = head.substr(1);
        if (head.empty()) head = "0";
        Int scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Int num = Int(head) * scale + (tail.empty() ? Int(0) : Int(tail));
        Rat r(num, scale);
        return neg ? -r : r;
    }
    return Rat(Int(s));
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

double rat_double(const Rat& r) { return r.convert_to<double>(); }

std::string ratvec_str(const RatVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s + ")";
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec to_ratvec(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

std::vector<double> to_doubles(const RatVec& v) {
    std::vector<double> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = rat_double(v[i]);
    return r;
}

IntVec primitive(const RatVec& v) {
    Int lcm_den = 1;
    for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    IntVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g == 0) throw MathError("primitive() on zero vector");
    for (auto& x : w) x /= g;
    return w;
}

IntVec primitive_normalized(const RatVec& v) {
    IntVec w = primitive(v);
    for (const auto& x : w) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
    }
    return w;
}

bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Rat rat_mod1(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    Rat m = r - q;
    if (m < 0) m += 1;
    return m;
}

bool rationalize(double x, int max_den, double tol, Rat& out) {
    for (int q = 1; q <= max_den; ++q) {
        double pq = x * q;
        double p = std::round(pq);
        if (std::abs(pq - p) <= tol * q) {
            out = Rat(Int(static_cast<long long>(p)), Int(q));
            return true;
        }
    }
    return false;
}

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat inv = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
    if (a.empty()) {
        return RatVec();  // no constraints on zero variables is consistent
    }
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    RatMat aug(rows, RatVec(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> piv = rref(aug);
    for (size_t i = 0; i < piv.size(); ++i)
        if (piv[i] == cols) return std::nullopt;  // 0 = 1 row
    RatVec x(cols, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
    return x;
}

RatMat kernel_basis(const RatMat& a, int ncols) {
    RatMat m = a;
    std::vector<int> piv = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : piv) is_pivot[c] = true;
    RatMat basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(ncols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

Rat det(RatMat m) {
    const int n = static_cast<int>(m.size());
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            std::swap(m[c], m[piv]);
            d = -d;
        }
        d *= m[c][c];
        Rat inv = m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / inv;
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

}  // namespace coamoeba
