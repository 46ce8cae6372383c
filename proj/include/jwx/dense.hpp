#pragma once

#include <Eigen/Dense>

#include "jwx/pauli.hpp"

namespace jwx {

using DenseMatrix = Eigen::MatrixXcd;

// Largest window represent() accepts (a 4096 x 4096 complex matrix).
inline constexpr std::size_t kMaxDenseSites = 12;

DenseMatrix pauli_matrix(PauliLetter p);

// (A kron B)(k + i*m, l + j*m) = a_ij * b_kl with 0-based indices and B of
// size m.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

// Kronecker factors run over w in increasing site order, identity on sites
// of w that a term does not touch. An empty window gives a 1x1 matrix.
DenseMatrix represent(const SpinElement& a, const Window& w);

// Largest singular value.
double spectral_norm(const DenseMatrix& m);

// C*-norm of a, computed on its support.
double norm(const SpinElement& a);

}  // namespace jwx
