#include "coamoeba/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace coamoeba {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;
}

ComplexScalar ComplexScalar::from_exact(const Rat& modulus, const Rat& phase) {
    ComplexScalar c;
    Rat m = modulus;
    Rat p = rat_mod1(phase);
    if (m < 0) {
        m = -m;
        p = rat_mod1(p + Rat(1, 2));
    }
    double ang = kTau * rat_double(p);
    double r = rat_double(m);
    c.re = r * std::cos(ang);
    c.im = r * std::sin(ang);
    // keep exact values crisp on the axes
    if (p == 0) { c.re = r; c.im = 0.0; }
    if (p == Rat(1, 4)) { c.re = 0.0; c.im = r; }
    if (p == Rat(1, 2)) { c.re = -r; c.im = 0.0; }
    if (p == Rat(3, 4)) { c.re = 0.0; c.im = -r; }
    c.exact = ExactPolar{m, p};
    return c;
}

ComplexScalar ComplexScalar::from_double(double re, double im) {
    ComplexScalar c;
    c.re = re;
    c.im = im;
    return c;
}

ComplexScalar ComplexScalar::from_rational(const Rat& r) {
    return from_exact(r < 0 ? Rat(-r) : r, r < 0 ? Rat(1, 2) : Rat(0));
}

ComplexScalar ComplexScalar::operator*(const ComplexScalar& o) const {
    ComplexScalar c;
    Cplx v = value() * o.value();
    c.re = v.real();
    c.im = v.imag();
    if (exact && o.exact) {
        Rat m = exact->modulus * o.exact->modulus;
        Rat p = rat_mod1(exact->phase + o.exact->phase);
        ComplexScalar e = from_exact(m, p);
        return e;
    }
    return c;
}

ComplexScalar ComplexScalar::operator+(const ComplexScalar& o) const {
    ComplexScalar c;
    c.re = re + o.re;
    c.im = im + o.im;
    if (exact && o.exact) {
        if (exact->modulus == 0) return o;
        if (o.exact->modulus == 0) return *this;
        if (exact->phase == o.exact->phase)
            return from_exact(exact->modulus + o.exact->modulus, exact->phase);
        if (rat_mod1(exact->phase - o.exact->phase) == Rat(1, 2)) {
            Rat m = exact->modulus - o.exact->modulus;
            return from_exact(m, exact->phase);  // from_exact flips if m < 0
        }
    }
    return c;
}

ComplexScalar ComplexScalar::operator-() const {
    ComplexScalar c;
    c.re = -re;
    c.im = -im;
    if (exact) c.exact = ExactPolar{exact->modulus, rat_mod1(exact->phase + Rat(1, 2))};
    return c;
}

ComplexScalar ComplexScalar::reciprocal() const {
    if (exact && exact->modulus != 0)
        return from_exact(Rat(1) / exact->modulus, rat_mod1(-exact->phase));
    Cplx v = 1.0 / value();
    return from_double(v.real(), v.imag());
}

ComplexScalar ComplexScalar::pow(long long e) const {
    if (e == 0) return from_rational(Rat(1));
    ComplexScalar base = e > 0 ? *this : reciprocal();
    unsigned long long k = static_cast<unsigned long long>(e > 0 ? e : -e);
    ComplexScalar acc = from_rational(Rat(1));
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

LaurentPolynomial LaurentPolynomial::make(int n, std::vector<LaurentTerm> in) {
    std::map<ExponentVector, ComplexScalar> acc;
    for (auto& t : in) {
        if (static_cast<int>(t.exp.size()) != n)
            throw InputError("exponent vector has wrong dimension");
        auto it = acc.find(t.exp);
        if (it == acc.end())
            acc.emplace(t.exp, t.coeff);
        else
            it->second = it->second + t.coeff;
    }
    LaurentPolynomial f;
    f.ambient_dim = n;
    for (auto& [e, c] : acc) {
        if (c.abs() <= kCoeffZeroTol) continue;
        f.terms.push_back({c, e});
    }
    return f;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    std::vector<LaurentTerm> all = terms;
    all.insert(all.end(), o.terms.begin(), o.terms.end());
    return make(ambient_dim, std::move(all));
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    std::vector<LaurentTerm> all;
    for (const auto& a : terms)
        for (const auto& b : o.terms) {
            ExponentVector e(ambient_dim);
            for (int i = 0; i < ambient_dim; ++i) e[i] = a.exp[i] + b.exp[i];
            all.push_back({a.coeff * b.coeff, std::move(e)});
        }
    return make(ambient_dim, std::move(all));
}

std::vector<ExponentVector> LaurentPolynomial::support() const {
    std::vector<ExponentVector> s;
    for (const auto& t : terms) s.push_back(t.exp);
    return s;
}

std::string LaurentPolynomial::str() const { return print_polynomial(*this); }

// --- parser -----------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    int n;
    size_t pos = 0;
    int line = 1, col = 1;

    Parser(const std::string& t, int n_) : text(t), n(n_) {}

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

    void advance() {
        if (pos < text.size()) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            advance();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    LaurentPolynomial constant(const Rat& r) {
        return LaurentPolynomial::make(
            n, {{ComplexScalar::from_rational(r), ExponentVector(n, Int(0))}});
    }

    LaurentPolynomial parse_expr() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        LaurentPolynomial acc = parse_term();
        if (neg) acc = constant(Rat(-1)) * acc;
        for (;;) {
            char c = peek();
            if (c == '+') {
                advance();
                acc = acc + parse_term();
            } else if (c == '-') {
                advance();
                acc = acc + constant(Rat(-1)) * parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    LaurentPolynomial parse_term() {
        LaurentPolynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    long long parse_int() {
        skip_ws();
        bool neg = accept('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            advance();
        }
        return neg ? -v : v;
    }

    LaurentPolynomial pow_poly(const LaurentPolynomial& base, long long e) {
        if (e >= 0) {
            LaurentPolynomial acc = constant(Rat(1));
            for (long long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        if (base.terms.size() != 1)
            fail("negative exponent of a non-monomial");
        LaurentTerm t = base.terms[0];
        LaurentTerm r;
        r.coeff = t.coeff.pow(e);  // handled via reciprocal
        r.exp.resize(n);
        for (int i = 0; i < n; ++i) r.exp[i] = t.exp[i] * e;
        // coeff^e: for monomial c*x^a, (c*x^a)^e = c^e x^{ae}
        r.coeff = t.coeff.pow(e);
        return LaurentPolynomial::make(n, {r});
    }

    LaurentPolynomial parse_factor() {
        LaurentPolynomial base = parse_atom();
        if (accept('^')) {
            long long e = parse_int();
            return pow_poly(base, e);
        }
        return base;
    }

    LaurentPolynomial var_poly(int index) {
        if (index < 1 || index > n)
            fail("variable index exceeds ambient dimension " + std::to_string(n));
        ExponentVector e(n, Int(0));
        e[index - 1] = 1;
        return LaurentPolynomial::make(n, {{ComplexScalar::from_rational(Rat(1)), e}});
    }

    LaurentPolynomial parse_atom() {
        char c = peek();
        if (c == '(') {
            advance();
            LaurentPolynomial e = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
                num += text[pos];
                advance();
            }
            // rational literal p/q: a slash directly after digits followed by digits
            if (pos < text.size() && text[pos] == '/' && pos + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[pos + 1])) &&
                num.find('.') == std::string::npos) {
                advance();
                std::string den;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    den += text[pos];
                    advance();
                }
                return constant(rat_parse(num + "/" + den));
            }
            return constant(rat_parse(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // keyword: zeta3
            if (text.compare(pos, 5, "zeta3") == 0) {
                for (int k = 0; k < 5; ++k) advance();
                return LaurentPolynomial::make(
                    n, {{ComplexScalar::from_exact(Rat(1), Rat(1, 3)),
                         ExponentVector(n, Int(0))}});
            }
            char letter = text[pos];
            advance();
            if (letter == 'i')
                return LaurentPolynomial::make(
                    n, {{ComplexScalar::from_exact(Rat(1), Rat(1, 4)),
                         ExponentVector(n, Int(0))}});
            if (letter == 'x' && pos < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[pos]))) {
                int idx = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    idx = idx * 10 + (text[pos] - '0');
                    advance();
                }
                return var_poly(idx);
            }
            switch (letter) {
                case 'x': return var_poly(1);
                case 'y': return var_poly(2);
                case 'z': return var_poly(3);
                case 't': return var_poly(4);
                default: fail(std::string("unexpected symbol '") + letter + "'");
            }
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

LaurentPolynomial parse_polynomial(const std::string& text, int ambient_dim) {
    if (ambient_dim < 1) throw InputError("ambient dimension must be >= 1");
    Parser p(text, ambient_dim);
    LaurentPolynomial f = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    if (f.is_zero())
        throw InputError("zero polynomial: all terms cancel");
    return f;
}

namespace {

// Phase p/q with q | 12 prints exactly via -1, i, zeta3 powers.
bool phase_as_tokens(const Rat& phase, std::string& suffix) {
    Rat p = rat_mod1(phase);
    if (denominator(p) == 1) {
        suffix.clear();
        return true;
    }
    if (12 % denominator(p) != 0) return false;
    long long num = (Rat(12) * p).convert_to<long long>();
    // num/12 = a/4 + b/3 (mod 1): 3a + 4b = num (mod 12)
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 3; ++b)
            if ((3 * a + 4 * b) % 12 == num) {
                std::string s;
                if (a == 1) s += "*i";
                if (a == 2) s += "*i^2";
                if (a == 3) s += "*i^3";
                if (b == 1) s += "*zeta3";
                if (b == 2) s += "*zeta3^2";
                suffix = s;
                return true;
            }
    return false;
}

std::string coeff_str(const ComplexScalar& c) {
    if (c.exact) {
        std::string suffix;
        if (phase_as_tokens(c.exact->phase, suffix)) {
            std::string mod = rat_str(c.exact->modulus);
            if (c.exact->modulus == 1 && !suffix.empty())
                return suffix.substr(1);  // drop leading '*'
            if (denominator(c.exact->modulus) != 1) mod = "(" + mod + ")";
            return mod + suffix;
        }
    }
    std::ostringstream os;
    os.precision(17);
    os << "(" << c.re;
    if (c.im >= 0)
        os << "+" << c.im << "*i)";
    else
        os << "-" << -c.im << "*i)";
    return os.str();
}

std::string monomial_str(const ExponentVector& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] != 1) s += "^" + e[i].str();
    }
    return s;
}

}  // namespace

std::string print_polynomial(const LaurentPolynomial& f) {
    if (f.terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < f.terms.size(); ++i) {
        const auto& t = f.terms[i];
        std::string cs = coeff_str(t.coeff);
        std::string ms = monomial_str(t.exp);
        std::string piece;
        if (ms.empty())
            piece = cs;
        else if (cs == "1")
            piece = ms;
        else
            piece = cs + "*" + ms;
        if (i) s += " + ";
        s += piece;
    }
    return s;
}

Cplx evaluate(const LaurentPolynomial& f, const std::vector<Cplx>& point) {
    if (static_cast<int>(point.size()) != f.ambient_dim)
        throw InputError("evaluate: point dimension mismatch");
    for (const auto& z : point)
        if (std::abs(z) == 0.0) throw MathError("evaluate: zero coordinate");
    Cplx acc = 0.0;
    for (const auto& t : f.terms) {
        Cplx m = t.coeff.value();
        for (int i = 0; i < f.ambient_dim; ++i) {
            long long e = t.exp[i].convert_to<long long>();
            if (e == 0) continue;
            Cplx base = e > 0 ? point[i] : 1.0 / point[i];
            unsigned long long k = static_cast<unsigned long long>(e > 0 ? e : -e);
            Cplx p = 1.0;
            while (k) {
                if (k & 1) p *= base;
                base *= base;
                k >>= 1;
            }
            m *= p;
        }
        acc += m;
    }
    return acc;
}

Polytope newton_polytope(const LaurentPolynomial& f) {
    if (f.is_zero()) throw MathError("newton_polytope of zero polynomial");
    return convex_hull(f.support(), f.ambient_dim);
}

VarietySpec VarietySpec::make(int n, InputClass cls,
                              std::vector<LaurentPolynomial> polys) {
    VarietySpec s;
    s.ambient_dim = n;
    s.input_class = cls;
    s.polynomials = std::move(polys);
    switch (cls) {
        case InputClass::Hypersurface:
            if (s.polynomials.size() != 1)
                throw InputError("hypersurface spec needs exactly one polynomial");
            s.declared_codim = 1;
            break;
        case InputClass::Line:
            if (static_cast<int>(s.polynomials.size()) != n - 1)
                throw InputError("line spec needs n-1 polynomials");
            for (const auto& f : s.polynomials)
                if (!is_affine_linear(f))
                    throw InputError("line spec polynomials must be affine-linear");
            s.declared_codim = n - 1;
            break;
        case InputClass::CompleteIntersection:
            s.declared_codim = static_cast<int>(s.polynomials.size());
            break;
    }
    for (const auto& f : s.polynomials)
        if (f.ambient_dim != n)
            throw InputError("polynomial ambient dimension mismatch");
    return s;
}

bool is_affine_linear(const LaurentPolynomial& f) {
    for (const auto& t : f.terms) {
        int nonzero = 0;
        for (const auto& e : t.exp) {
            if (e == 0) continue;
            if (e != 1) return false;
            ++nonzero;
        }
        if (nonzero > 1) return false;
    }
    return true;
}

std::string input_class_str(InputClass c) {
    switch (c) {
        case InputClass::Hypersurface: return "hypersurface";
        case InputClass::Line: return "line";
        case InputClass::CompleteIntersection: return "complete_intersection";
    }
    return "?";
}

InputClass input_class_from_str(const std::string& s) {
    if (s == "hypersurface") return InputClass::Hypersurface;
    if (s == "line") return InputClass::Line;
    if (s == "complete_intersection") return InputClass::CompleteIntersection;
    throw InputError("unknown input_class '" + s + "'");
}

}  // namespace coamoeba
