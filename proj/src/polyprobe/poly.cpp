#include "afc/polyprobe/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "afc/exactlin/matfun.hpp"

namespace afc::polyprobe {

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::invalid_argument("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(e, Rat(1));
}

Poly Poly::monomial(const Exponents& e, const Rat& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);  // grlex: last term has max degree
}

Rat Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Poly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, a] : terms_) r.add_term(e, a * c);
  return r;
}

Poly Poly::partial(std::size_t var) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Rat(e[var]));
  }
  return r;
}

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (const std::string& n : names_)
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw std::invalid_argument("variable names must start with a letter");
}

namespace {

struct Token {
  enum Kind { number, name, caret, plus, minus, star, end } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      out.push_back({Token::number, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::name, s.substr(i, j - i)});
      i = j;
      continue;
    }
    switch (c) {
      case '^': out.push_back({Token::caret, "^"}); break;
      case '+': out.push_back({Token::plus, "+"}); break;
      case '-': out.push_back({Token::minus, "-"}); break;
      case '*': out.push_back({Token::star, "*"}); break;
      default: throw std::invalid_argument(std::string("unexpected character '") + c + "' in polynomial");
    }
    ++i;
  }
  out.push_back({Token::end, ""});
  return out;
}

}  // namespace

Poly PolyRing::parse(const std::string& text) const {
  std::vector<Token> toks = tokenize(text);
  std::size_t pos = 0;
  auto peek = [&]() -> const Token& { return toks[pos]; };
  auto var_index = [&](const std::string& n) -> std::size_t {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    throw std::invalid_argument("unknown variable '" + n + "'");
  };

  Poly result(nvars());
  bool first_term = true;
  while (peek().kind != Token::end) {
    Rat sign = 1;
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      if (peek().kind == Token::minus) sign = -sign;
      ++pos;
    }
    if (!first_term && sign == 1 && toks[pos - 1].kind != Token::plus && toks[pos - 1].kind != Token::minus)
      throw std::invalid_argument("missing '+' or '-' between terms");
    if (peek().kind == Token::end) throw std::invalid_argument("dangling sign in polynomial");

    Rat coef = sign;
    Exponents exps(nvars(), 0);
    bool saw_factor = false;
    for (;;) {
      if (peek().kind == Token::number) {
        coef *= exactlin::parse_rat(peek().text);
        ++pos;
        saw_factor = true;
      } else if (peek().kind == Token::name) {
        std::size_t v = var_index(peek().text);
        ++pos;
        int e = 1;
        if (peek().kind == Token::caret) {
          ++pos;
          if (peek().kind != Token::number) throw std::invalid_argument("exponent must be an integer");
          Rat r = exactlin::parse_rat(peek().text);
          if (!exactlin::is_integer(r) || r < 0) throw std::invalid_argument("exponent must be a nonnegative integer");
          e = static_cast<int>(numerator(r).convert_to<long>());
          ++pos;
        }
        exps[v] += e;
        saw_factor = true;
      } else if (peek().kind == Token::star) {
        ++pos;  // explicit multiplication; factors also juxtapose
        continue;
      } else {
        break;
      }
    }
    if (!saw_factor) throw std::invalid_argument("empty term in polynomial");
    result.add_term(exps, coef);
    first_term = false;
  }
  return result;
}

std::string PolyRing::str(const Poly& p) const {
  if (p.nvars() != nvars()) throw std::invalid_argument("polynomial from a different ring");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first: iterate grlex descending.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool has_vars = total_degree(it->first) > 0;
    if (!has_vars || c != 1) {
      os << exactlin::rat_str(c);
      if (has_vars) os << ' ';
    }
    bool first_var = true;
    for (std::size_t v = 0; v < nvars(); ++v) {
      int e = it->first[v];
      if (e == 0) continue;
      if (!first_var) os << ' ';
      first_var = false;
      os << names_[v];
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

MonomialBasis::MonomialBasis(std::size_t nvars, int cap) : nvars_(nvars), cap_(cap) {
  if (cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
  // Enumerate all exponent vectors of total degree <= cap, then sort by
  // grlex via the map.
  std::map<Exponents, std::size_t, GrlexLess> idx;
  Exponents e(nvars, 0);
  // Odometer enumeration over the simplex.
  for (;;) {
    idx.emplace(e, 0);
    std::size_t v = 0;
    for (; v < nvars; ++v) {
      e[v] += 1;
      if (total_degree(e) <= cap) break;
      e[v] = 0;
    }
    if (v == nvars) break;
  }
  if (nvars == 0) idx.emplace(Exponents{}, 0);
  for (auto& [mono, i] : idx) {
    i = monos_.size();
    monos_.push_back(mono);
  }
  index_ = std::move(idx);
}

std::size_t MonomialBasis::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw std::invalid_argument("monomial outside the degree cap");
  return it->second;
}

Vec MonomialBasis::to_vec(const Poly& p) const {
  if (p.nvars() != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Vec v(size(), Rat(0));
  for (const auto& [e, c] : p.terms()) v[index_of(e)] = c;
  return v;
}

Poly MonomialBasis::from_vec(const Vec& v) const {
  if (v.size() != size()) throw std::invalid_argument("coordinate length mismatch");
  Poly p(nvars_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p.add_term(monos_[i], v[i]);
  return p;
}

LinearAction::LinearAction(std::size_t nvars, Mat nilpotent) : nvars_(nvars), n_(std::move(nilpotent)) {
  if (n_.rows() != nvars || n_.cols() != nvars)
    throw std::invalid_argument("action generator must be nvars x nvars");
  if (!exactlin::is_nilpotent(n_)) throw std::invalid_argument("action generator must be nilpotent");
}

Poly LinearAction::derivation(const Poly& f) const {
  if (f.nvars() != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Poly out(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    Poly di = f.partial(i);
    if (di.is_zero()) continue;
    Poly form(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j)
      if (n_.at(i, j) != 0) form = form + Poly::variable(nvars_, j).scaled(n_.at(i, j));
    if (!form.is_zero()) out = out + di * form;
  }
  return out;
}

std::vector<Poly> LinearAction::orbit_span(const Poly& f) const {
  std::vector<Poly> out;
  Poly cur = f;
  for (long k = 1; !cur.is_zero(); ++k) {
    out.push_back(cur);
    if (out.size() > 4096) throw std::logic_error("orbit_span: derivation is not locally nilpotent here");
    cur = derivation(cur).scaled(Rat(1) / Rat(k));
  }
  return out;
}

std::vector<Poly> invariants_up_to_degree(const LinearAction& act, int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  MonomialBasis mb(act.nvars(), d);
  std::vector<Poly> out;
  for (int deg = 0; deg <= d; ++deg) {
    std::vector<Exponents> layer;
    for (const Exponents& e : mb.monomials())
      if (total_degree(e) == deg) layer.push_back(e);
    std::map<Exponents, std::size_t, GrlexLess> pos;
    for (std::size_t i = 0; i < layer.size(); ++i) pos.emplace(layer[i], i);
    // D preserves total degree, so its matrix on this graded piece closes.
    Mat m(layer.size(), layer.size());
    for (std::size_t j = 0; j < layer.size(); ++j) {
      Poly img = act.derivation(Poly::monomial(layer[j], Rat(1)));
      for (const auto& [e, c] : img.terms()) m.at(pos.at(e), j) = c;
    }
    for (const Vec& k : exactlin::kernel_basis(m)) {
      Poly p(act.nvars());
      for (std::size_t i = 0; i < layer.size(); ++i)
        if (k[i] != 0) p.add_term(layer[i], k[i]);
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace afc::polyprobe
