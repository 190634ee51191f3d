#include "afc/cli/input.hpp"

#include "afc/exactlin/rational.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace afc::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

const std::set<std::string> kSections = {
    "flags",       "group",       "subgroup",   "unipotent-radical",
    "torus",       "representation", "torus-orbit", "metabelian",
    "polynomial"};

const std::set<std::string> kCommands = {"structure", "decide", "orbit", "polyprobe"};

}  // namespace

InputDocument parse_document(const std::string& text) {
  InputDocument doc;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::string section;
  std::optional<polyprobe::PolyRing> ring;

  auto fail = [&](const std::string& m) { throw ParseError(m, lineno); };

  auto parse_long = [&](const std::string& s) -> long {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size()) fail("bad integer '" + s + "'");
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + s + "'", lineno);
    }
  };
  auto parse_longs = [&](const std::string& s) {
    std::vector<long> out;
    for (const std::string& t : split_ws(s)) out.push_back(parse_long(t));
    return out;
  };
  auto parse_bool = [&](const std::string& s) -> bool {
    if (s == "true") return true;
    if (s == "false") return false;
    fail("expected true or false, got '" + s + "'");
    return false;
  };
  auto parse_vector = [&](const std::string& s) -> Vec {
    try {
      return exactlin::parse_vec(s);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno);
    }
  };
  auto parse_matrix = [&](const std::string& s, bool ambient_sized) -> Mat {
    Mat m = Mat::zero(0, 0);
    try {
      m = Mat::parse(s);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno);
    }
    if (m.rows() != m.cols()) fail("matrix is not square");
    if (ambient_sized) {
      if (!doc.has_ambient) fail("matrix section before the ambient declaration");
      if (m.rows() != doc.ambient) fail("matrix is not of the ambient dimension");
    }
    return m;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (std::size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      section = line.substr(1, line.size() - 2);
      if (!kSections.count(section)) fail("unknown section [" + section + "]");
      if (section == "group" && !doc.group) doc.group.emplace();
      else if (section == "subgroup" && !doc.subgroup) doc.subgroup.emplace();
      else if (section == "unipotent-radical" && !doc.unipotent_radical) doc.unipotent_radical.emplace();
      else if (section == "torus" && !doc.torus) doc.torus.emplace();
      else if (section == "representation" && !doc.representation) doc.representation.emplace();
      else if (section == "torus-orbit" && !doc.torus_orbit) doc.torus_orbit.emplace();
      else if (section == "metabelian" && !doc.metabelian) doc.metabelian.emplace();
      else if (section == "polynomial" && !doc.polynomial) doc.polynomial.emplace();
      continue;
    }

    std::size_t sp = line.find_first_of(" \t");
    std::string key = sp == std::string::npos ? line : line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp + 1));

    if (section.empty()) {
      if (key == "version") {
        doc.version = static_cast<int>(parse_long(rest));
        if (doc.version != 1) fail("unsupported format version " + rest);
      } else if (key == "ambient") {
        long a = parse_long(rest);
        if (a < 0) fail("ambient dimension must be nonnegative");
        doc.ambient = static_cast<std::size_t>(a);
        doc.has_ambient = true;
      } else if (key == "run") {
        for (const std::string& c : split_ws(rest)) {
          if (!kCommands.count(c)) fail("unknown command '" + c + "' in run list");
          doc.run.push_back(c);
        }
      } else {
        fail("unknown directive '" + key + "' outside a section");
      }
    } else if (section == "flags") {
      if (key == "connected") doc.connected = parse_bool(rest);
      else if (key == "algebraic") doc.algebraic = parse_bool(rest);
      else fail("unknown flag '" + key + "'");
    } else if (section == "group" || section == "subgroup" ||
               section == "unipotent-radical" || section == "torus") {
      Mat m = parse_matrix(line, true);
      if (section == "group") doc.group->push_back(m);
      else if (section == "subgroup") doc.subgroup->push_back(m);
      else if (section == "unipotent-radical") doc.unipotent_radical->push_back(m);
      else doc.torus->push_back(m);
    } else if (section == "representation") {
      RepresentationBlock& rb = *doc.representation;
      if (key == "kind") {
        if (rest != "standard" && rest != "adjoint" && rest != "trivial" && rest != "explicit")
          fail("unknown representation kind '" + rest + "'");
        rb.kind = rest;
      } else if (key == "dim") {
        long d = parse_long(rest);
        if (d < 0) fail("representation dimension must be nonnegative");
        rb.dim = static_cast<std::size_t>(d);
      } else if (key == "action") {
        rb.action.push_back(parse_matrix(rest, false));
      } else if (key == "vector") {
        rb.vector = parse_vector(rest);
      } else if (key == "lambda") {
        rb.lambdas.push_back(parse_longs(rest));
      } else {
        fail("unknown representation key '" + key + "'");
      }
    } else if (section == "torus-orbit") {
      TorusOrbitBlock& tb = *doc.torus_orbit;
      if (key == "weight") tb.weights.push_back(parse_longs(rest));
      else if (key == "vector") tb.vector = parse_vector(rest);
      else fail("unknown torus-orbit key '" + key + "'");
    } else if (section == "metabelian") {
      MetabelianBlock& mb = *doc.metabelian;
      if (key == "p") mb.p = parse_long(rest);
      else if (key == "q") mb.q = parse_long(rest);
      else if (key == "vector") mb.vector = parse_vector(rest);
      else fail("unknown metabelian key '" + key + "'");
    } else if (section == "polynomial") {
      PolynomialBlock& pb = *doc.polynomial;
      if (key == "vars") {
        if (!pb.vars.empty()) fail("duplicate vars line");
        pb.vars = split_ws(rest);
        if (pb.vars.empty()) fail("vars line needs at least one name");
        try {
          ring.emplace(pb.vars);
        } catch (const std::exception& e) {
          throw ParseError(e.what(), lineno);
        }
      } else if (key == "nilpotent") {
        pb.nilpotent = parse_matrix(rest, false);
      } else if (key == "ideal") {
        if (!ring) fail("ideal line before vars");
        try {
          pb.ideal.push_back(ring->parse(rest));
        } catch (const std::exception& e) {
          throw ParseError(e.what(), lineno);
        }
      } else if (key == "cap") {
        long c = parse_long(rest);
        if (c < 1) fail("cap must be positive");
        pb.cap = static_cast<int>(c);
      } else if (key == "steps") {
        long s = parse_long(rest);
        if (s < 0) fail("steps must be nonnegative");
        pb.steps = static_cast<int>(s);
      } else if (key == "invariants") {
        long d = parse_long(rest);
        if (d < 0) fail("invariants degree must be nonnegative");
        pb.invariants = static_cast<int>(d);
      } else {
        fail("unknown polynomial key '" + key + "'");
      }
    }
  }
  return doc;
}

InputDocument load_document(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << f.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace afc::cli
