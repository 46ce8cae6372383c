#include "jwx/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "jwx/errors.hpp"

namespace jwx {

DenseMatrix pauli_matrix(PauliLetter p) {
  DenseMatrix m = DenseMatrix::Zero(2, 2);
  switch (p) {
    case PauliLetter::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case PauliLetter::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliLetter::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case PauliLetter::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseMatrix represent(const SpinElement& a, const Window& w) {
  const std::size_t n = w.size();
  if (n > kMaxDenseSites) {
    throw std::length_error("window of " + std::to_string(n) +
                            " sites is too large for a dense representation");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseMatrix out = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                      static_cast<Eigen::Index>(dim));
  for (const auto& [p, coeff] : a.terms()) {
    // Every Pauli string is a signed permutation: row r has its single entry
    // in column r ^ flip.
    std::uint64_t flip = 0;
    std::uint64_t sign_mask = 0;
    int y_count = 0;
    for (const auto& [x, letter] : p.entries()) {
      auto pos = w.position(x);
      if (!pos) {
        throw SupportExceedsWindow("site " + std::to_string(x) +
                                   " is outside the representation window");
      }
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - *pos);
      if (letter == PauliLetter::X || letter == PauliLetter::Y) flip |= bit;
      if (letter == PauliLetter::Y || letter == PauliLetter::Z) sign_mask |= bit;
      if (letter == PauliLetter::Y) ++y_count;
    }
    // Each Y contributes -i on its 0 row and +i on its 1 row.
    const Complex base = coeff * Phase{static_cast<std::uint8_t>((3 * y_count) & 3)}.value();
    for (std::uint64_t r = 0; r < dim; ++r) {
      const bool negative = std::popcount(r & sign_mask) % 2 == 1;
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r ^ flip)) +=
          negative ? -base : base;
    }
  }
  return out;
}

double spectral_norm(const DenseMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == m.cols() && m == m.adjoint()) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
  }
  DenseMatrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

double norm(const SpinElement& a) {
  return spectral_norm(represent(a, support(a)));
}

}  // namespace jwx
