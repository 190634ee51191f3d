#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace afc::exactlin {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored in lowest terms with positive
// denominator. Arithmetic canonicalizes automatically.
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Rat>;

// Accepts "p" or "p/q" with optional leading '-' on either part and
// surrounding whitespace. Throws std::invalid_argument on anything else,
// including q = 0. The sign is normalized onto the numerator.
Rat parse_rat(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q" with q > 1.
std::string rat_str(const Rat& r);

bool is_integer(const Rat& r);

// Vector helpers. All throw std::invalid_argument on length mismatch.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
Rat vec_dot(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& a);
std::string vec_str(const Vec& a);
Vec parse_vec(const std::string& text);

}  // namespace afc::exactlin
