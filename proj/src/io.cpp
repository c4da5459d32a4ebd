#include "latkit/io.hpp"

#include <fstream>
#include <sstream>

#include "latkit/error.hpp"

namespace latkit {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw InputError("line " + std::to_string(l.number) + ": " + msg);
}

long parse_long(const Line& l, const std::string& tok) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) fail(l, "not an integer: " + tok);
    return v;
  } catch (const std::logic_error&) {
    fail(l, "not an integer: " + tok);
  }
}

Rat parse_rat(const Line& l, const std::string& tok) {
  try {
    return Rat::parse(tok);
  } catch (const Error& e) {
    fail(l, e.what());
  }
}

Cyc5 parse_cyc(const Line& l, const std::string& tok) {
  try {
    return Cyc5::parse(tok);
  } catch (const Error& e) {
    fail(l, e.what());
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

}  // namespace

IntegralLattice LatticeFile::base() const { return make_lattice(to_integer(gram, "Gram matrix")); }

IntegralLattice LatticeFile::effective() const {
  IntegralLattice l = base();
  if (glue.empty()) return l;
  return overlattice(l, glue).lattice;
}

LatticeFile parse_lattice(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw InputError("empty lattice file");
  const Line& head = lines.front();
  if (head.tokens[0] != "rank" || head.tokens.size() != 2) fail(head, "expected 'rank n'");
  long n = parse_long(head, head.tokens[1]);
  if (n < 0) fail(head, "rank must be nonnegative");
  const auto rank = static_cast<std::size_t>(n);
  if (lines.size() < rank + 1) throw InputError("expected " + std::to_string(rank) + " Gram rows");

  LatticeFile f;
  f.gram = Mat(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const Line& l = lines[i + 1];
    if (l.tokens.size() != rank) fail(l, "expected " + std::to_string(rank) + " entries");
    for (std::size_t j = 0; j < rank; ++j) f.gram(i, j) = parse_rat(l, l.tokens[j]);
  }
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (f.gram(i, j) != f.gram(j, i))
        fail(lines[i + 1], "Gram matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

  for (std::size_t k = rank + 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] != "glue") fail(l, "unexpected '" + l.tokens[0] + "'");
    if (l.tokens.size() != rank + 1) fail(l, "glue row needs " + std::to_string(rank) + " entries");
    GlueVector g;
    g.name = "glue" + std::to_string(f.glue.size() + 1) + " (line " + std::to_string(l.number) + ")";
    for (std::size_t j = 0; j < rank; ++j) g.coords.push_back(parse_rat(l, l.tokens[j + 1]));
    f.glue.push_back(std::move(g));
  }
  return f;
}

LatticeFile read_lattice_file(const std::string& path) {
  auto in = open(path);
  return parse_lattice(in);
}

std::vector<Poly> FamilyFile::sample_polynomials() const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < equations.size(); ++i) out.push_back(equations[i].polynomial(coeffs[i]));
  return out;
}

FamilyFile parse_family(std::istream& in) {
  auto lines = tokenize(in);
  FamilyFile f;
  auto need_vars = [&](const Line& l) {
    if (f.num_vars == 0) fail(l, "'vars' must come first");
  };
  auto ints = [&](const Line& l) {
    need_vars(l);
    if (l.tokens.size() != f.num_vars + 1) fail(l, "expected " + std::to_string(f.num_vars) + " entries");
    std::vector<int> v;
    for (std::size_t j = 1; j < l.tokens.size(); ++j) v.push_back(static_cast<int>(parse_long(l, l.tokens[j])));
    return v;
  };
  auto current = [&](const Line& l) -> MonomialFamily& {
    need_vars(l);
    if (f.equations.empty()) {
      MonomialFamily m;
      m.name = "F";
      f.equations.push_back(m);
      f.coeffs.emplace_back();
    }
    return f.equations.back();
  };

  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string& key = l.tokens[0];
    if (key == "vars") {
      if (l.tokens.size() != 2) fail(l, "expected 'vars n'");
      long n = parse_long(l, l.tokens[1]);
      if (n < 1) fail(l, "vars must be positive");
      f.num_vars = static_cast<std::size_t>(n);
    } else if (key == "weights") {
      f.weights = ints(l);
    } else if (key == "degrees") {
      f.degrees = ints(l);
    } else if (key == "equation") {
      need_vars(l);
      MonomialFamily m;
      m.name = l.tokens.size() > 1 ? l.tokens[1] : "F" + std::to_string(f.equations.size() + 1);
      f.equations.push_back(m);
      f.coeffs.emplace_back();
    } else if (key == "mono") {
      auto e = ints(l);
      current(l).monomials.push_back(e);
    } else if (key == "coeffs") {
      current(l);
      std::vector<Cyc5> c;
      for (std::size_t j = 1; j < l.tokens.size(); ++j) c.push_back(parse_cyc(l, l.tokens[j]));
      f.coeffs.back() = std::move(c);
    } else if (key == "map") {
      need_vars(l);
      if (l.tokens.size() != 2) fail(l, "expected 'map NAME'");
      CycMat m(f.num_vars, f.num_vars);
      for (std::size_t i = 0; i < f.num_vars; ++i) {
        if (k + 1 >= lines.size()) fail(l, "map " + l.tokens[1] + " is missing rows");
        const Line& row = lines[++k];
        if (row.tokens.size() != f.num_vars) fail(row, "expected " + std::to_string(f.num_vars) + " entries");
        for (std::size_t j = 0; j < f.num_vars; ++j) m(i, j) = parse_cyc(row, row.tokens[j]);
      }
      try {
        f.maps.insert_or_assign(l.tokens[1], ProjectiveMap(std::move(m)));
      } catch (const Error& e) {
        fail(l, e.what());
      }
    } else if (key == "redundancy") {
      if (l.tokens.size() != 2) fail(l, "expected 'redundancy r'");
      f.redundancy = static_cast<int>(parse_long(l, l.tokens[1]));
    } else if (key == "expect") {
      if (l.tokens.size() != 3) fail(l, "expected 'expect moduli|fixed-points K'");
      int v = static_cast<int>(parse_long(l, l.tokens[2]));
      if (l.tokens[1] == "moduli")
        f.expect_moduli = v;
      else if (l.tokens[1] == "fixed-points")
        f.expect_fixed_points = v;
      else
        fail(l, "unknown expectation '" + l.tokens[1] + "'");
    } else {
      fail(l, "unknown directive '" + key + "'");
    }
  }
  if (f.num_vars == 0) throw InputError("family file has no 'vars' line");
  if (f.weights.empty()) throw InputError("family file has no 'weights' line");
  if (f.equations.empty()) throw InputError("family file has no monomials");
  for (std::size_t i = 0; i < f.equations.size(); ++i) {
    auto& e = f.equations[i];
    e.num_vars = f.num_vars;
    e.weights = f.weights;
    e.degrees = f.degrees;
    if (e.monomials.empty()) throw InputError("equation " + e.name + " has no monomials");
    e.validate();
    if (!f.coeffs[i].empty() && f.coeffs[i].size() != e.monomials.size())
      throw InputError("equation " + e.name + ": expected one coefficient per monomial");
  }
  return f;
}

FamilyFile read_family_file(const std::string& path) {
  auto in = open(path);
  return parse_family(in);
}

}  // namespace latkit
