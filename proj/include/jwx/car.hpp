#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "jwx/crossed.hpp"

namespace jwx {

// a_x (dagger == false) or a_x^* (dagger == true).
struct FermionOperator {
  Site site = 0;
  bool dagger = false;

  friend auto operator<=>(const FermionOperator&, const FermionOperator&) = default;
};

// Ordered product of creation/annihilation operators; empty means 1.
using FermionMonomial = std::vector<FermionOperator>;

// (alpha, beta) with both entries in {1, 2}.
struct MatrixUnitIndex {
  int alpha = 1;
  int beta = 1;

  // Throws std::invalid_argument for entries outside {1, 2}.
  static MatrixUnitIndex make(int alpha, int beta);
  bool is_odd() const { return alpha != beta; }

  friend auto operator<=>(const MatrixUnitIndex&, const MatrixUnitIndex&) = default;
};

// One matrix-unit index per window site, in window order.
using UnitBasisElement = std::vector<MatrixUnitIndex>;
using UnitCoefficients = std::map<UnitBasisElement, Complex>;

// a_x = T psi(S_x sigma_-(x)).
HatElement annihilator(Site x);
// a_x^* = T psi(S_x sigma_+(x)).
HatElement creator(Site x);
HatElement fermion_operator(FermionOperator op);

struct CarCheck {
  HatElement anti_aa;   // {a_x, a_y}
  HatElement anti_aad;  // {a_x, a_y^*}
};
CarCheck car_check(Site x, Site y);

// Single-site units: f11 = a^*a, f12 = a^*, f21 = a, f22 = a a^*.
HatElement matrix_unit_f(Site x, MatrixUnitIndex idx);

// Window units at 0-based position i of w: e11 = a^*a, e12 = psi(R_i) a^*,
// e21 = psi(R_i) a, e22 = a a^*, where R_i is the sigma_3 string over the
// window sites before position i. Throws IndexOutOfWindow.
HatElement matrix_unit_e(std::size_t i, const Window& w, MatrixUnitIndex idx);

// e_G, the ordered product of matrix_unit_e over the window.
HatElement unit_product(const UnitBasisElement& gamma, const Window& w);

// Every UnitBasisElement on an n-site window, in lexicographic order.
std::vector<UnitBasisElement> all_unit_basis_elements(std::size_t n);

struct UnitExpansion {
  UnitCoefficients coefficients;
  double residual = 0.0;
};

inline constexpr double kLocalCarTolerance = 1e-10;
// Largest window expand_in_units enumerates (4^n basis products).
inline constexpr std::size_t kMaxExpansionSites = 7;

// Coefficients of p in the e_G basis, extracted with the trace as
// alpha_G = 2^n trace(e_G^* p). Throws NotInLocalCar when the remainder
// exceeds kLocalCarTolerance.
UnitExpansion expand_in_units(const HatElement& p, const Window& w);

HatElement monomial_to_hat(const FermionMonomial& m);

// Sum of coefficient-weighted monomials. Monomials are stored as given; the
// jw module produces them in normal order (creators by increasing site, then
// annihilators by decreasing site).
class FermionPolynomial {
 public:
  using TermMap = std::map<FermionMonomial, Complex>;

  FermionPolynomial& add_term(const FermionMonomial& m, Complex coeff);
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Complex coefficient(const FermionMonomial& m) const;

  friend bool operator==(const FermionPolynomial&, const FermionPolynomial&) = default;

 private:
  TermMap terms_;
};

HatElement to_hat(const FermionPolynomial& p);
Window fermion_support(const FermionPolynomial& p);

// Largest coefficient modulus of p - q.
double coefficient_distance(const FermionPolynomial& p, const FermionPolynomial& q);

std::string to_string(const FermionMonomial& m);
std::string to_string(const FermionPolynomial& p);

}  // namespace jwx
