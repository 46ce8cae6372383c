#include <gtest/gtest.h>

#include "jwx/car.hpp"
#include "jwx/errors.hpp"
#include "jwx/random.hpp"
#include "jwx/spin_ops.hpp"
#include "support/oracle.hpp"

using namespace jwx;

namespace {

MatrixUnitIndex idx(int a, int b) { return MatrixUnitIndex::make(a, b); }

}  // namespace

TEST(Annihilator, PairForm) {
  const HatElement a1 = annihilator(1);
  EXPECT_TRUE(a1.a.is_zero());
  EXPECT_EQ(a1.b, sigma_pm(Ladder::lowering, 1));
  for (Site x = -4; x <= 4; ++x) {
    const HatElement ax = annihilator(x);
    EXPECT_TRUE(ax.a.is_zero());
    EXPECT_FALSE(ax.b.is_zero());
    EXPECT_EQ(ax.b, static_cast<double>(value(sign_of(x - 1))) * s_string(x) *
                        sigma_pm(Ladder::lowering, x));
    EXPECT_EQ(creator(x), hat_adjoint(ax));
  }
}

TEST(Annihilator, DenseSingularValues) {
  const Eigen::JacobiSVD<DenseMatrix> svd(represent_hat(annihilator(0), Window{0}));
  const auto sv = svd.singularValues();
  EXPECT_NEAR(sv(0), 1.0, 1e-12);
  EXPECT_NEAR(sv(1), 1.0, 1e-12);
  EXPECT_NEAR(sv(2), 0.0, 1e-12);
  EXPECT_NEAR(sv(3), 0.0, 1e-12);
}

TEST(Annihilator, MatchesSparseOracle) {
  for (Site x = -3; x <= 3; ++x) {
    const Window w = hat_support(annihilator(x));
    const oracle::Dense ref = oracle::sparse_annihilator(x, w).toDense();
    EXPECT_LT((represent_hat(annihilator(x), w) - ref).norm(), 1e-14) << x;
  }
}

TEST(Car, Examples) {
  CarCheck c = car_check(0, 5);
  EXPECT_TRUE(c.anti_aa.is_zero());
  EXPECT_TRUE(c.anti_aad.is_zero());
  c = car_check(3, 3);
  EXPECT_TRUE(c.anti_aa.is_zero());
  EXPECT_EQ(c.anti_aad, HatElement::identity());
  c = car_check(-2, 1);
  EXPECT_TRUE(c.anti_aa.is_zero());
  EXPECT_TRUE(c.anti_aad.is_zero());
}

TEST(Car, ExhaustiveSymbolic) {
  for (Site x = -6; x <= 6; ++x) {
    for (Site y = -6; y <= 6; ++y) {
      const CarCheck c = car_check(x, y);
      EXPECT_TRUE(c.anti_aa.is_zero());
      EXPECT_EQ(c.anti_aad, x == y ? HatElement::identity() : HatElement{});
    }
  }
}

TEST(Car, ParityOfMonomials) {
  ElementSampler s(73);
  const Window w = Window::interval(-3, 3);
  for (int k = 0; k < 40; ++k) {
    const FermionMonomial m = s.fermion_monomial(w, 5);
    const HatElement h = monomial_to_hat(m);
    if (m.size() % 2 == 0) {
      EXPECT_TRUE(h.b.is_zero());
      EXPECT_EQ(hat_theta(h), h);
    } else {
      EXPECT_TRUE(h.a.is_zero());
      EXPECT_EQ(hat_theta(h), -h);
    }
  }
}

TEST(MonomialToHat, Examples) {
  EXPECT_EQ(monomial_to_hat({}), HatElement::identity());
  EXPECT_EQ(monomial_to_hat({{0, true}, {0, false}}), matrix_unit_f(0, idx(1, 1)));
}

TEST(MatrixUnitIndex, RejectsOutOfRange) {
  EXPECT_THROW(MatrixUnitIndex::make(0, 1), std::invalid_argument);
  EXPECT_THROW(MatrixUnitIndex::make(1, 3), std::invalid_argument);
}

TEST(MatrixUnits, SiteFamily) {
  for (Site x = -3; x <= 3; ++x) {
    EXPECT_EQ(matrix_unit_f(x, idx(1, 1)) + matrix_unit_f(x, idx(2, 2)), HatElement::identity());
    EXPECT_EQ(matrix_unit_f(x, idx(1, 2)) * matrix_unit_f(x, idx(2, 1)), matrix_unit_f(x, idx(1, 1)));
    EXPECT_EQ(hat_adjoint(matrix_unit_f(x, idx(1, 2))), matrix_unit_f(x, idx(2, 1)));
  }
}

TEST(MatrixUnits, WindowFamilyAxioms) {
  const Window w{-2, 0, 1, 4};
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        EXPECT_EQ(hat_adjoint(matrix_unit_e(i, w, idx(a, b))), matrix_unit_e(i, w, idx(b, a)));
        for (int c = 1; c <= 2; ++c)
          for (int d = 1; d <= 2; ++d) {
            const HatElement lhs = matrix_unit_e(i, w, idx(a, b)) * matrix_unit_e(i, w, idx(c, d));
            EXPECT_EQ(lhs, b == c ? matrix_unit_e(i, w, idx(a, d)) : HatElement{});
          }
      }
    EXPECT_EQ(matrix_unit_e(i, w, idx(1, 1)) + matrix_unit_e(i, w, idx(2, 2)), HatElement::identity());
    EXPECT_EQ(matrix_unit_e(i, w, idx(1, 1)) - matrix_unit_e(i, w, idx(2, 2)),
              psi(sigma(PauliLetter::Z, w.sites()[i])));
  }
}

TEST(MatrixUnits, FirstPositionIsSiteUnit) {
  const Window w{-1, 2, 3};
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      EXPECT_EQ(matrix_unit_e(0, w, idx(a, b)), matrix_unit_f(-1, idx(a, b)));
}

TEST(MatrixUnits, DifferentPositionsCommute) {
  const Window w{-2, 0, 1, 4};
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (i == j) continue;
      for (int code = 0; code < 16; ++code) {
        const HatElement ei = matrix_unit_e(i, w, idx(1 + (code & 1), 1 + ((code >> 1) & 1)));
        const HatElement ej = matrix_unit_e(j, w, idx(1 + ((code >> 2) & 1), 1 + ((code >> 3) & 1)));
        EXPECT_EQ(ei * ej, ej * ei);
      }
    }
}

TEST(MatrixUnits, IndexOutOfWindow) {
  EXPECT_THROW(matrix_unit_e(3, Window{0, 1, 2}, idx(1, 1)), IndexOutOfWindow);
}

TEST(ExpandInUnits, Examples) {
  const Window w{0, 2};
  for (const auto& g : all_unit_basis_elements(2)) {
    const UnitExpansion e = expand_in_units(unit_product(g, w), w);
    ASSERT_EQ(e.coefficients.size(), 1u);
    EXPECT_EQ(e.coefficients.begin()->first, g);
    EXPECT_EQ(e.coefficients.begin()->second, Complex(1.0));
  }
  const UnitExpansion a = expand_in_units(annihilator(5), Window{5});
  ASSERT_EQ(a.coefficients.size(), 1u);
  EXPECT_EQ(a.coefficients.begin()->first, (UnitBasisElement{idx(2, 1)}));
  const UnitExpansion one = expand_in_units(HatElement::identity(), w);
  EXPECT_EQ(one.coefficients.size(), 4u);
  for (const auto& [g, c] : one.coefficients) {
    for (const auto& u : g) EXPECT_FALSE(u.is_odd());
    EXPECT_EQ(c, Complex(1.0));
  }
}

TEST(ExpandInUnits, RejectsElementsOutsideLocalCar) {
  EXPECT_THROW(expand_in_units(t_element(), Window{0}), NotInLocalCar);
  EXPECT_THROW(expand_in_units(psi(sigma(PauliLetter::X, 3)), Window{3}), NotInLocalCar);
}

TEST(ExpandInUnits, ReconstructsRandomPolynomials) {
  ElementSampler s(79);
  const Window w{-1, 0, 2};
  for (int k = 0; k < 20; ++k) {
    const HatElement p = to_hat(s.fermion_polynomial(w, 3, 4));
    const UnitExpansion e = expand_in_units(p, w);
    HatElement rebuilt;
    for (const auto& [g, c] : e.coefficients) rebuilt += c * unit_product(g, w);
    EXPECT_LT(coefficient_distance(rebuilt, p), 1e-12);
  }
}

TEST(UnitProducts, AreLinearlyIndependent) {
  for (std::size_t n : {2u, 3u}) {
    const Window w = Window::interval(-1, static_cast<Site>(n) - 2);
    const auto basis = all_unit_basis_elements(n);
    std::vector<HatElement> products;
    for (const auto& g : basis) products.push_back(unit_product(g, w));
    const double scale = static_cast<double>(std::size_t{1} << n);
    for (std::size_t i = 0; i < products.size(); ++i) {
      const HatElement star = hat_adjoint(products[i]);
      for (std::size_t j = 0; j < products.size(); ++j)
        EXPECT_EQ(scale * hat_trace_product(star, products[j]), Complex(i == j ? 1.0 : 0.0));
    }
  }
}

TEST(FermionPolynomial, AddAndFormat) {
  FermionPolynomial p;
  p.add_term({{0, true}, {1, false}}, 2.0);
  p.add_term({{0, true}, {1, false}}, -2.0);
  EXPECT_TRUE(p.is_zero());
  p.add_term({}, -1.0);
  p.add_term({{0, true}, {0, false}}, 2.0);
  EXPECT_EQ(to_string(p), "-1 * 1 + 2 * a+(0) a(0)");
  EXPECT_EQ(to_hat(p), psi(sigma(PauliLetter::Z, 0)));
  EXPECT_EQ(fermion_support(p), Window{0});
}
