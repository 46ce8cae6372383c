#pragma once

#include "jwx/dense.hpp"
#include "jwx/pauli.hpp"

namespace jwx {

// Element psi(a) + psi(b) T of the extended algebra, i.e. the 2x2 block
// matrix [[a, b], [theta'(b), theta'(a)]] over the spin algebra.
struct HatElement {
  SpinElement a;
  SpinElement b;

  HatElement& operator+=(const HatElement& o);
  HatElement& operator-=(const HatElement& o);
  HatElement& operator*=(Complex c);

  friend HatElement operator+(HatElement x, const HatElement& y) { return x += y; }
  friend HatElement operator-(HatElement x, const HatElement& y) { return x -= y; }
  friend HatElement operator-(HatElement x) { return x *= -1.0; }
  friend HatElement operator*(Complex c, HatElement x) { return x *= c; }
  friend HatElement operator*(HatElement x, Complex c) { return x *= c; }
  friend HatElement operator*(const HatElement& x, const HatElement& y);

  friend bool operator==(const HatElement&, const HatElement&) = default;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  static HatElement identity() { return {SpinElement::identity(), {}}; }
};

HatElement psi(const SpinElement& a);
HatElement t_element();
HatElement hat_mul(const HatElement& x, const HatElement& y);
HatElement hat_adjoint(const HatElement& x);
// Extension of theta acting on both components.
HatElement hat_theta(const HatElement& x);

struct EvenOddParts {
  HatElement even;
  HatElement odd;
};
EvenOddParts even_odd_split(const HatElement& x);

Window hat_support(const HatElement& x);
// Block matrix with the block index as the outermost tensor slot.
DenseMatrix represent_hat(const HatElement& x, const Window& w);
double hat_norm(const HatElement& x);
// Sum of coefficient moduli; an upper bound for hat_norm since every pure
// term psi(P) or psi(P)T is unitary.
double hat_l1_norm(const HatElement& x);
// hat_l1_norm when it is at most tol or the support is too large to
// represent, hat_norm otherwise.
double hat_residual_norm(const HatElement& x, double tol);

// Identity coefficient of the a-component. This is a tracial state on the
// extended algebra; on a local CAR algebra of n sites the matrix units
// satisfy trace(e_G^* e_G') = 2^-n delta.
Complex hat_trace(const HatElement& x);
// hat_trace(x * y) without forming the product.
Complex hat_trace_product(const HatElement& x, const HatElement& y);

double coefficient_distance(const HatElement& x, const HatElement& y);
std::string to_string(const HatElement& x);

// Functions Z2 -> spin algebra, f(1) and f(-1).
struct Z2Function {
  SpinElement at_plus;
  SpinElement at_minus;

  friend bool operator==(const Z2Function&, const Z2Function&) = default;
};

// Convolution with counting measure on Z2.
Z2Function z2_mul(const Z2Function& f, const Z2Function& g);
Z2Function z2_invo(const Z2Function& f);
HatElement phi_iso(const Z2Function& f);
Z2Function phi_inv(const HatElement& x);

struct ModuleVector {
  SpinElement v1;
  SpinElement v2;

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

SpinElement module_inner(const ModuleVector& v, const ModuleVector& w);
double module_norm(const ModuleVector& v);
// Applies the block matrix of x to v.
ModuleVector t_apply(const HatElement& x, const ModuleVector& v);

}  // namespace jwx
