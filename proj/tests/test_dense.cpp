#include <gtest/gtest.h>

#include <random>

#include "jwx/dense.hpp"
#include "jwx/errors.hpp"
#include "jwx/random.hpp"
#include "jwx/spin_ops.hpp"
#include "support/oracle.hpp"

using namespace jwx;

namespace {

DenseMatrix random_matrix(std::mt19937_64& g, int rows, int cols) {
  std::normal_distribution<double> d;
  DenseMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(d(g), d(g));
  return m;
}

SpinElement zstring(Site lo, Site hi) {
  std::vector<PauliString::Entry> entries;
  for (Site x = lo; x <= hi; ++x) entries.emplace_back(x, PauliLetter::Z);
  return SpinElement(PauliString::from_entries(std::move(entries)));
}

}  // namespace

TEST(Kron, ZTimesZIsDiagonal) {
  const DenseMatrix zz = kron(pauli_matrix(PauliLetter::Z), pauli_matrix(PauliLetter::Z));
  DenseMatrix expected = DenseMatrix::Zero(4, 4);
  expected.diagonal() << 1, -1, -1, 1;
  EXPECT_EQ(zz, expected);
}

TEST(Kron, IdentityLeftGivesBlockDiagonal) {
  std::mt19937_64 g(1);
  const DenseMatrix b = random_matrix(g, 3, 3);
  const DenseMatrix k = kron(DenseMatrix::Identity(2, 2), b);
  EXPECT_EQ(k.topLeftCorner(3, 3), b);
  EXPECT_EQ(k.bottomRightCorner(3, 3), b);
  EXPECT_EQ(k.topRightCorner(3, 3), DenseMatrix::Zero(3, 3));
}

TEST(Kron, MatchesEigenAndMixedProduct) {
  std::mt19937_64 g(2);
  for (int k = 0; k < 10; ++k) {
    const DenseMatrix a = random_matrix(g, 2, 2), b = random_matrix(g, 3, 3);
    const DenseMatrix c = random_matrix(g, 2, 2), d = random_matrix(g, 3, 3);
    const DenseMatrix ref = Eigen::kroneckerProduct(a, b);
    EXPECT_LT((kron(a, b) - ref).norm(), 1e-13);
    EXPECT_LT((kron(a, b) * kron(c, d) - kron(a * c, b * d)).norm(), 1e-11);
    EXPECT_NEAR(spectral_norm(kron(a, b)), spectral_norm(a) * spectral_norm(b), 1e-10);
  }
}

TEST(Represent, EmbedsIntoWindow) {
  const DenseMatrix m = represent(sigma(PauliLetter::Z, 1), Window{1, 2});
  EXPECT_EQ(m, kron(pauli_matrix(PauliLetter::Z), DenseMatrix::Identity(2, 2)));
  EXPECT_EQ(represent(SpinElement::identity(), Window{-1, 4, 6}), DenseMatrix::Identity(8, 8));
}

TEST(Represent, ThrowsOutsideWindow) {
  EXPECT_THROW(represent(sigma(PauliLetter::X, 3), Window{0, 1}), SupportExceedsWindow);
}

TEST(Represent, AgreesWithKroneckerOracle) {
  ElementSampler s(29);
  const Window w = Window::interval(-2, 2);
  for (int k = 0; k < 25; ++k) {
    const SpinElement a = s.spin_element(w, 5, 5);
    EXPECT_LT((represent(a, w) - oracle::spin(a, w)).norm(), 1e-12);
  }
}

TEST(Represent, StarHomomorphism) {
  ElementSampler s(31);
  const Window w{-3, -1, 0, 2};
  for (int k = 0; k < 25; ++k) {
    const SpinElement a = s.spin_element(w, 4, 4);
    const SpinElement b = s.spin_element(w, 4, 4);
    EXPECT_LT((represent(a * b, w) - represent(a, w) * represent(b, w)).norm(), 1e-11);
    EXPECT_LT((represent(a + b, w) - represent(a, w) - represent(b, w)).norm(), 1e-12);
    EXPECT_LT((represent(adjoint(a), w) - represent(a, w).adjoint()).norm(), 1e-12);
  }
}

TEST(Represent, PauliStringsAreHilbertSchmidtOrthogonal) {
  const Window w{0, 1, 2};
  std::vector<DenseMatrix> mats;
  for (int code = 0; code < 64; ++code) {
    std::vector<PauliString::Entry> entries;
    for (int i = 0; i < 3; ++i)
      entries.emplace_back(w.sites()[i], static_cast<PauliLetter>((code >> (2 * i)) & 3));
    mats.push_back(represent(SpinElement(PauliString::from_entries(entries)), w));
  }
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < mats.size(); ++j)
      EXPECT_NEAR(std::abs((mats[i].adjoint() * mats[j]).trace()), i == j ? 8.0 : 0.0, 1e-12);
}

TEST(SpectralNorm, Examples) {
  EXPECT_NEAR(spectral_norm(pauli_matrix(PauliLetter::Z)), 1.0, 1e-12);
  EXPECT_EQ(spectral_norm(DenseMatrix::Zero(4, 4)), 0.0);
  const DenseMatrix zz = kron(pauli_matrix(PauliLetter::Z), pauli_matrix(PauliLetter::Z));
  EXPECT_NEAR(spectral_norm(zz - DenseMatrix::Identity(4, 4)), 2.0, 1e-10);
}

TEST(SpectralNorm, MatchesSvdOnNonHermitian) {
  std::mt19937_64 g(3);
  for (int k = 0; k < 10; ++k) {
    const DenseMatrix m = random_matrix(g, 8, 8);
    EXPECT_NEAR(spectral_norm(m), oracle::opnorm(m), 1e-10);
  }
}

TEST(Norm, Examples) {
  EXPECT_NEAR(norm(zstring(1, 3) - zstring(1, 2)), 2.0, 1e-10);
  EXPECT_NEAR(norm(SpinElement::identity()), 1.0, 1e-12);
  EXPECT_EQ(norm(SpinElement()), 0.0);
}

TEST(Norm, WindowIndependenceAndCStar) {
  ElementSampler s(37);
  const Window w = Window::interval(0, 3);
  for (int k = 0; k < 20; ++k) {
    const SpinElement a = s.spin_element(w, 4, 3);
    const double n = norm(a);
    EXPECT_NEAR(n, spectral_norm(represent(a, support(a).unite(Window{-2, 5}))), 1e-10);
    EXPECT_NEAR(norm(adjoint(a) * a), n * n, 1e-10 * std::max(1.0, n * n));
  }
}
