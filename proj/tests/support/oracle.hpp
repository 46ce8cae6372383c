#pragma once

// Reference matrices built from Kronecker products of 2x2 blocks. Nothing
// here calls into the library beyond reading terms, so it can serve as an
// independent check of represent(), theta_prime() and the fermion algebra.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>

#include <complex>
#include <cstddef>
#include <vector>

#include "jwx/crossed.hpp"
#include "jwx/pauli.hpp"

namespace oracle {

using Cx = std::complex<double>;
using Dense = Eigen::MatrixXcd;
using Sparse = Eigen::SparseMatrix<Cx>;

inline Dense letter(jwx::PauliLetter p) {
  Dense m(2, 2);
  const Cx i(0.0, 1.0);
  switch (p) {
    case jwx::PauliLetter::I: m << 1, 0, 0, 1; break;
    case jwx::PauliLetter::X: m << 0, 1, 1, 0; break;
    case jwx::PauliLetter::Y: m << 0, -i, i, 0; break;
    case jwx::PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Dense lowering() {
  Dense m(2, 2);
  m << 0, 0, 1, 0;
  return m;
}

// Kronecker product of one 2x2 factor per window site, lowest site leftmost.
inline Dense chain(const std::vector<Dense>& factors) {
  Dense out = Dense::Identity(1, 1);
  for (const auto& f : factors) {
    Dense next = Eigen::kroneckerProduct(out, f).eval();
    out = std::move(next);
  }
  return out;
}

inline Dense spin(const jwx::SpinElement& a, const jwx::Window& w) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << w.size());
  Dense out = Dense::Zero(dim, dim);
  for (const auto& [p, c] : a.terms()) {
    std::vector<Dense> factors;
    for (jwx::Site x : w) factors.push_back(letter(p.at(x)));
    out += c * chain(factors);
  }
  return out;
}

// sigma_3 on every window site <= 0; conjugation by it is theta'.
inline Dense rotation_prime(const jwx::Window& w) {
  std::vector<Dense> factors;
  for (jwx::Site x : w) factors.push_back(letter(x <= 0 ? jwx::PauliLetter::Z : jwx::PauliLetter::I));
  return chain(factors);
}

inline Dense block(const Dense& a, const Dense& b, const Dense& c, const Dense& d) {
  Dense out(a.rows() * 2, a.cols() * 2);
  out << a, b, c, d;
  return out;
}

inline Dense hat(const jwx::HatElement& x, const jwx::Window& w) {
  const Dense u = rotation_prime(w);
  const Dense a = spin(x.a, w);
  const Dense b = spin(x.b, w);
  return block(a, b, u * b * u, u * a * u);
}

inline double opnorm(const Dense& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Dense> svd(m);
  return svd.singularValues()(0);
}

// Sparse single-site operator at position pos of an n-site window.
inline Sparse site_op(const Dense& m, std::size_t pos, std::size_t n) {
  Sparse left(Eigen::Index{1} << pos, Eigen::Index{1} << pos);
  left.setIdentity();
  Sparse right(Eigen::Index{1} << (n - pos - 1), Eigen::Index{1} << (n - pos - 1));
  right.setIdentity();
  const Sparse mid = m.sparseView();
  Sparse lm = Eigen::kroneckerProduct(left, mid).eval();
  return Eigen::kroneckerProduct(lm, right).eval();
}

inline Sparse sparse_identity(Eigen::Index dim) {
  Sparse id(dim, dim);
  id.setIdentity();
  return id;
}

// Annihilator at x on window w as a block operator of size 2 * 2^n, built
// from the anchor [[0, 1], [1, 0]] times diag(A, U A U) with A the
// sigma_3 string times the lowering matrix.
inline Sparse sparse_annihilator(jwx::Site x, const jwx::Window& w) {
  const std::size_t n = w.size();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Sparse a = sparse_identity(dim);
  Sparse u = sparse_identity(dim);
  const Dense z = letter(jwx::PauliLetter::Z);
  std::size_t pos = 0;
  for (jwx::Site y : w) {
    const bool in_string = (x >= 2 && y >= 1 && y <= x - 1) || (x <= 0 && y >= x && y <= 0);
    if (in_string) a = (a * site_op(z, pos, n)).eval();
    if (y == x) a = (a * site_op(lowering(), pos, n)).eval();
    if (y <= 0) u = (u * site_op(z, pos, n)).eval();
    ++pos;
  }
  const Sparse twisted = (u * a * u).eval();
  Dense e11(2, 2), e22(2, 2), flip(2, 2);
  e11 << 1, 0, 0, 0;
  e22 << 0, 0, 0, 1;
  flip << 0, 1, 1, 0;
  const Sparse s11 = e11.sparseView();
  const Sparse s22 = e22.sparseView();
  const Sparse sflip = flip.sparseView();
  Sparse diag = Eigen::kroneckerProduct(s11, a).eval();
  diag += Eigen::kroneckerProduct(s22, twisted).eval();
  const Sparse anchor = Eigen::kroneckerProduct(sflip, sparse_identity(dim)).eval();
  return (anchor * diag).eval();
}

inline double frobenius(const Sparse& m) { return m.norm(); }

}  // namespace oracle
