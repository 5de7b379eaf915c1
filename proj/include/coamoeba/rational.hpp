#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace coamoeba {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Math-precondition failure (non-transverse input, non-binomial initial
// system, degenerate geometry). CLI maps this to exit code 3.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) +
                             ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

// Accepts "p/q", integers, and decimal literals ("0.25" -> 1/4).
Rat rat_parse(const std::string& s);

// Prints "p" or "p/q" with positive denominator.
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

std::string ratvec_str(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);

RatVec to_ratvec(const IntVec& v);
std::vector<double> to_doubles(const RatVec& v);

// Scales a nonzero rational vector to coprime integers, preserving direction.
IntVec primitive(const RatVec& v);

// Sign-normalized primitive vector: first nonzero entry positive.
IntVec primitive_normalized(const RatVec& v);

bool is_zero(const RatVec& v);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& a);

// Reduces r into [0,1).
Rat rat_mod1(const Rat& r);

// Nearest rational p/q with q <= max_den within tol of x, if any.
bool rationalize(double x, int max_den, double tol, Rat& out);

}  // namespace coamoeba
