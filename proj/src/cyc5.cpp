#include "latkit/cyc5.hpp"

#include <cctype>

#include "latkit/error.hpp"

namespace latkit {
namespace {

// Folds a coefficient vector in powers w^0..w^4 onto the power basis.
Cyc5 reduce5(const std::array<Rat, 5>& e) {
  return {e[0] - e[4], e[1] - e[4], e[2] - e[4], e[3] - e[4]};
}

long mod5(long k) { return ((k % 5) + 5) % 5; }

}  // namespace

Cyc5 Cyc5::omega_pow(long k) {
  std::array<Rat, 5> e{};
  e[static_cast<std::size_t>(mod5(k))] = 1;
  return reduce5(e);
}

bool Cyc5::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Cyc5& Cyc5::operator+=(const Cyc5& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc5& Cyc5::operator-=(const Cyc5& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc5& Cyc5::operator*=(const Cyc5& o) {
  std::array<Rat, 5> e{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (o.c_[j].is_zero()) continue;
      e[(i + j) % 5] += c_[i] * o.c_[j];
    }
  }
  *this = reduce5(e);
  return *this;
}

Cyc5 Cyc5::galois(int k) const {
  if (mod5(k) == 0) throw ArithmeticError("galois: exponent must be coprime to 5");
  std::array<Rat, 5> e{};
  for (std::size_t i = 0; i < 4; ++i) e[static_cast<std::size_t>(mod5(static_cast<long>(i) * k))] += c_[i];
  return reduce5(e);
}

Rat Cyc5::norm() const {
  Cyc5 n = (*this) * galois(2) * galois(3) * galois(4);
  return n.c_[0];
}

Cyc5 Cyc5::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero in Q(w)");
  Cyc5 others = galois(2) * galois(3) * galois(4);
  Rat n = ((*this) * others).c_[0];
  return others * Cyc5(n.inverse());
}

Cyc5 Cyc5::pow(long k) const {
  Cyc5 base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Cyc5 result(1);
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1UL;
    if (e) base *= base;
  }
  return result;
}

std::string Cyc5::str() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    std::string mag = c.abs().str();
    std::string term;
    if (i == 0) {
      term = mag;
    } else {
      term = (mag == "1" ? std::string() : mag + "*") + "w" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (c.sign() < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Cyc5 Cyc5::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("empty Q(w) literal");

  std::array<Rat, 5> e{};
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw InputError("malformed Q(w) literal '" + std::string(text) + "'");

    Rat coef = 1;
    long power = 0;
    auto w = term.find('w');
    if (w == std::string::npos) {
      coef = Rat::parse(term);
    } else {
      std::string head = term.substr(0, w);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (!head.empty()) coef = Rat::parse(head);
      std::string tail = term.substr(w + 1);
      power = 1;
      if (!tail.empty()) {
        if (tail.front() != '^' || tail.size() < 2) throw InputError("malformed power in '" + std::string(text) + "'");
        power = parse_integer(tail.substr(1)).get_si();
      }
    }
    e[static_cast<std::size_t>(mod5(power))] += Rat(sign) * coef;
    pos = end;
  }
  return reduce5(e);
}

}  // namespace latkit
