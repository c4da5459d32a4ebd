#include "latkit/lattice.hpp"

namespace latkit {

Signature signature_of(const Mat& symmetric) {
  if (!symmetric.is_symmetric()) throw ConstructionError("signature of a non-symmetric matrix");
  Mat a = symmetric;
  const std::size_t n = a.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, p).is_zero()) ++p;
      if (p < n) {
        a.swap_rows(k, p);
        a.swap_cols(k, p);
      } else {
        // All remaining diagonal entries vanish: add a row/column with a
        // nonzero off-diagonal entry so that the pivot becomes 2 a_kj.
        std::size_t j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) continue;  // row k is zero in the active block
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const Rat pivot = a(k, k);
    if (pivot.is_zero()) continue;
    // Congruence step: row_i -= f row_k, then col_i -= f col_k.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Rat f = a(i, k) / pivot;
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    if (pivot.sign() > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

IntegralLattice make_lattice(const ZMat& gram) {
  if (!gram.is_square()) throw ConstructionError("Gram matrix is not square");
  if (!gram.is_symmetric()) throw ConstructionError("Gram matrix is not symmetric");
  IntegralLattice l;
  l.det_ = det(gram);
  if (l.det_ == 0) throw ConstructionError("Gram matrix is degenerate");
  l.gram_ = gram;
  l.gram_q_ = to_rat(gram);
  l.signature_ = signature_of(l.gram_q_);
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0) l.even_ = false;
  return l;
}

IntegralLattice make_lattice(const Mat& gram) { return make_lattice(to_integer(gram, "Gram matrix")); }

Rat IntegralLattice::pair(std::span<const Rat> x, std::span<const Rat> y) const {
  if (x.size() != rank() || y.size() != rank()) throw InputError("pair: vector length does not match rank");
  return latkit::pair(gram_q_, x, y);
}

Integer IntegralLattice::norm(std::span<const Integer> x) const {
  if (x.size() != rank()) throw InputError("norm: vector length does not match rank");
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

IntegralLattice direct_sum(std::span<const IntegralLattice> parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  ZMat g(n, n);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g(off + i, off + j) = p.gram()(i, j);
    off += p.rank();
  }
  return make_lattice(g);
}

IntegralLattice direct_sum(std::initializer_list<IntegralLattice> parts) {
  return direct_sum(std::span<const IntegralLattice>(parts.begin(), parts.size()));
}

IntegralLattice direct_power(const IntegralLattice& l, std::size_t copies) {
  std::vector<IntegralLattice> parts(copies, l);
  return direct_sum(parts);
}

IntegralLattice rescale(const IntegralLattice& l, long s) {
  if (s == 0) throw InputError("rescale by zero");
  return make_lattice(l.gram() * Integer(s));
}

RatVec Overlattice::to_new_coords(std::span<const Rat> base_coords) const {
  // x = c * basis  =>  c = x * basis^-1
  Mat row(1, base_coords.size());
  for (std::size_t j = 0; j < base_coords.size(); ++j) row(0, j) = base_coords[j];
  Mat c = row * inverse(basis);
  return c.row_vector(0);
}

Overlattice overlattice(const IntegralLattice& l, std::span<const GlueVector> glue) {
  const std::size_t n = l.rank();
  const Mat& g = l.gram_q();
  std::vector<RatVec> paired;  // v G for each glue vector
  for (const auto& v : glue) {
    if (v.coords.size() != n)
      throw InputError("glue vector " + v.name + " has length " + std::to_string(v.coords.size()) +
                       ", expected " + std::to_string(n));
    RatVec vg(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rat s;
      for (std::size_t i = 0; i < n; ++i)
        if (!v.coords[i].is_zero()) s += v.coords[i] * g(i, j);
      if (!s.is_integer())
        throw GlueError("glue vector " + v.name + " pairs to " + s.str() + " with base vector " + std::to_string(j + 1) + " (1-based)");
      vg[j] = s;
    }
    paired.push_back(std::move(vg));
  }
  for (std::size_t a = 0; a < glue.size(); ++a) {
    for (std::size_t b = a; b < glue.size(); ++b) {
      Rat p = dot(paired[a], glue[b].coords);
      if (!p.is_integer()) {
        if (a == b) throw GlueError("glue vector " + glue[a].name + " has non-integral self-pairing " + p.str());
        throw GlueError("glue vectors " + glue[a].name + " and " + glue[b].name + " pair to " + p.str());
      }
      if (a == b && !(p.num() % 2 == 0))
        throw GlueError("glue vector " + glue[a].name + " has odd self-pairing " + p.str());
    }
  }

  Mat generators = Mat::identity(n);
  for (const auto& v : glue) {
    Mat row(1, n);
    for (std::size_t j = 0; j < n; ++j) row(0, j) = v.coords[j];
    generators = generators.stacked(row);
  }
  Mat basis = hnf_rowspan(generators);
  Mat new_gram = basis * g * basis.transpose();
  IntegralLattice big = make_lattice(new_gram);

  Integer ratio_num = l.det();
  const Integer& ratio_den = big.det();
  if (ratio_num % ratio_den != 0) throw Error("overlattice: determinant ratio is not an integer");
  Integer ratio = ratio_num / ratio_den;
  if (ratio < 0 || !mpz_perfect_square_p(ratio.get_mpz_t()))
    throw Error("overlattice: determinant ratio " + to_string(ratio) + " is not a square");
  Integer index = sqrt(ratio);
  return {std::move(big), std::move(index), std::move(basis)};
}

IntegralLattice sublattice(const IntegralLattice& l, const ZMat& rows) {
  if (rows.cols() != l.rank()) throw InputError("sublattice: row length does not match rank");
  if (rank(to_rat(rows)) != rows.rows()) throw RankError("sublattice: rows are linearly dependent");
  return make_lattice(rows * l.gram() * rows.transpose());
}

Saturation saturation(const IntegralLattice& l, const ZMat& rows) {
  if (rows.cols() != l.rank()) throw InputError("saturation: row length does not match rank");
  return saturate_rows(rows);
}

EmbeddedLattice embed(const IntegralLattice& l, const ZMat& basis) {
  if (basis.rows() && basis.cols() != l.rank()) throw InputError("embed: row length does not match rank");
  ZMat gram = basis.rows() ? ZMat(basis * l.gram() * basis.transpose()) : ZMat(0, 0);
  return {basis, gram};
}

EmbeddedLattice orthogonal_complement(const IntegralLattice& l, const ZMat& rows) {
  if (rows.rows() == 0) return embed(l, ZMat::identity(l.rank()));
  if (rows.cols() != l.rank()) throw InputError("orthogonal_complement: row length does not match rank");
  if (rank(to_rat(rows)) != rows.rows()) throw RankError("orthogonal_complement: rows are linearly dependent");
  return embed(l, integer_kernel(rows * l.gram()));
}

}  // namespace latkit
