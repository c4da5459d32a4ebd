#include "latkit/poly.hpp"

#include <numeric>

#include "latkit/error.hpp"

namespace latkit {

Poly Poly::constant(std::size_t num_vars, const Cyc5& c) {
  Poly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t i) {
  Exponents e(num_vars, 0);
  e.at(i) = 1;
  return monomial(e);
}

Poly Poly::monomial(const Exponents& e, const Cyc5& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int de = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && de != d) return false;
    d = de;
  }
  return true;
}

Cyc5 Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyc5(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Cyc5& c) {
  if (e.size() != nvars_) throw InputError("monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw InputError("polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw InputError("polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Cyc5& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw InputError("polynomials in different variable counts");
  Poly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.nvars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(nvars_, Cyc5(1));
  Poly base = *this;
  while (k) {
    if (k & 1U) r = r * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != nvars_) throw InputError("substitute: expected one image per variable");
  const std::size_t m = images.empty() ? 0 : images.front().num_vars();
  Poly r(m);
  // Cache powers of each image.
  std::vector<std::vector<Poly>> powers(nvars_);
  for (const auto& [e, c] : terms_) {
    Poly term = constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      while (cache.size() <= static_cast<std::size_t>(e[i]))
        cache.push_back(cache.empty() ? constant(m, Cyc5(1)) : cache.back() * images[i]);
      term = term * cache[static_cast<std::size_t>(e[i])];
    }
    r += term;
  }
  return r;
}

Poly Poly::compose(const CycMat& a) const {
  if (a.rows() != nvars_) throw InputError("compose: matrix size does not match variable count");
  std::vector<Poly> images;
  for (std::size_t i = 0; i < nvars_; ++i) {
    Poly lin(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Exponents e(a.cols(), 0);
      e[j] = 1;
      lin.add_term(e, a(i, j));
    }
    images.push_back(std::move(lin));
  }
  return substitute(images);
}

std::optional<Cyc5> Poly::scalar_ratio(const Poly& other) const {
  if (is_zero() || other.is_zero() || terms_.size() != other.terms_.size()) return std::nullopt;
  const auto& [e0, c0] = *other.terms_.begin();
  Cyc5 lambda = coeff(e0) / c0;
  if (lambda.is_zero()) return std::nullopt;
  for (const auto& [e, c] : other.terms_)
    if (!(coeff(e) == lambda * c)) return std::nullopt;
  return lambda;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.str();
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += "(" + cs + ")*" + mono;
  }
  return out;
}

UPoly::UPoly(std::vector<Cyc5> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::derivative() const {
  std::vector<Cyc5> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Cyc5(static_cast<int>(i)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Cyc5 inv = c_.back().inverse();
  std::vector<Cyc5> m;
  for (const auto& x : c_) m.push_back(x * inv);
  return UPoly(std::move(m));
}

UPoly UPoly::mod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<Cyc5> r = c_;
  const std::size_t dd = divisor.c_.size();
  Cyc5 lead_inv = divisor.c_.back().inverse();
  while (r.size() >= dd) {
    Cyc5 f = r.back() * lead_inv;
    std::size_t shift = r.size() - dd;
    for (std::size_t i = 0; i < dd; ++i) r[shift + i] -= f * divisor.c_[i];
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return UPoly(std::move(r));
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly dehomogenize(const Poly& form) {
  if (form.num_vars() != 2) throw InputError("binary form expected");
  std::vector<Cyc5> c;
  for (const auto& [e, coef] : form.terms()) {
    auto k = static_cast<std::size_t>(e[1]);
    if (c.size() <= k) c.resize(k + 1);
    c[k] += coef;
  }
  return UPoly(std::move(c));
}

int distinct_roots_binary(const Poly& form) {
  if (form.is_zero()) throw InputError("distinct_roots_binary: zero form");
  if (!form.is_homogeneous()) throw InputError("distinct_roots_binary: form is not homogeneous");
  const int d = form.degree();
  UPoly f = dehomogenize(form);
  int finite = f.degree() - gcd(f, f.derivative()).degree();
  int at_infinity = d > f.degree() ? 1 : 0;
  return finite + at_infinity;
}

}  // namespace latkit
