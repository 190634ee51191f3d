#include "afc/exactlin/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace afc::exactlin {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Int parse_int(const std::string& s) {
  std::string t = strip(s);
  std::size_t i = 0;
  if (i < t.size() && t[i] == '-') ++i;
  if (i == t.size()) throw std::invalid_argument("bad integer literal '" + s + "'");
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw std::invalid_argument("bad integer literal '" + s + "'");
  return Int(t);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string t = strip(text);
  std::size_t slash = t.find('/');
  if (slash == std::string::npos) return Rat(parse_int(t));
  if (t.find('/', slash + 1) != std::string::npos)
    throw std::invalid_argument("bad rational literal '" + text + "'");
  Int n = parse_int(t.substr(0, slash));
  Int d = parse_int(t.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  // cpp_rational rejects negative denominators; move the sign up front.
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

Rat vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const Vec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

std::string vec_str(const Vec& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ' ';
    os << rat_str(a[i]);
  }
  return os.str();
}

Vec parse_vec(const std::string& text) {
  Vec out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(parse_rat(tok));
  return out;
}

}  // namespace afc::exactlin
