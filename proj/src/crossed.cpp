#include "jwx/crossed.hpp"

#include <algorithm>
#include <cmath>

#include "jwx/spin_ops.hpp"

namespace jwx {

HatElement& HatElement::operator+=(const HatElement& o) {
  a += o.a;
  b += o.b;
  return *this;
}

HatElement& HatElement::operator-=(const HatElement& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

HatElement& HatElement::operator*=(Complex c) {
  a *= c;
  b *= c;
  return *this;
}

HatElement operator*(const HatElement& x, const HatElement& y) {
  return {x.a * y.a + x.b * theta_prime(y.b), x.a * y.b + x.b * theta_prime(y.a)};
}

HatElement psi(const SpinElement& a) { return {a, {}}; }

HatElement t_element() { return {{}, SpinElement::identity()}; }

HatElement hat_mul(const HatElement& x, const HatElement& y) { return x * y; }

HatElement hat_adjoint(const HatElement& x) {
  return {adjoint(x.a), theta_prime(adjoint(x.b))};
}

HatElement hat_theta(const HatElement& x) { return {theta(x.a), theta(x.b)}; }

EvenOddParts even_odd_split(const HatElement& x) {
  HatElement rotated = hat_theta(x);
  return {0.5 * (x + rotated), 0.5 * (x - rotated)};
}

Window hat_support(const HatElement& x) {
  return support(x.a).unite(support(x.b));
}

DenseMatrix represent_hat(const HatElement& x, const Window& w) {
  DenseMatrix top_left = represent(x.a, w);
  const Eigen::Index d = top_left.rows();
  DenseMatrix out(2 * d, 2 * d);
  out.topLeftCorner(d, d) = top_left;
  out.topRightCorner(d, d) = represent(x.b, w);
  out.bottomLeftCorner(d, d) = represent(theta_prime(x.b), w);
  out.bottomRightCorner(d, d) = represent(theta_prime(x.a), w);
  return out;
}

double hat_norm(const HatElement& x) {
  return spectral_norm(represent_hat(x, hat_support(x)));
}

double hat_l1_norm(const HatElement& x) {
  double sum = 0.0;
  for (const auto& [p, c] : x.a.terms()) sum += std::abs(c);
  for (const auto& [p, c] : x.b.terms()) sum += std::abs(c);
  return sum;
}

double hat_residual_norm(const HatElement& x, double tol) {
  const double bound = hat_l1_norm(x);
  if (bound <= tol || hat_support(x).size() > kMaxDenseSites) return bound;
  return hat_norm(x);
}

Complex hat_trace(const HatElement& x) { return x.a.coefficient(PauliString()); }

namespace {

// Identity coefficient of p * q, using that every Pauli string squares to 1.
Complex trace_product(const SpinElement& p, const SpinElement& q) {
  Complex sum = 0.0;
  const auto& small = p.size() <= q.size() ? p : q;
  const auto& large = p.size() <= q.size() ? q : p;
  for (const auto& [s, c] : small.terms()) {
    auto it = large.terms().find(s);
    if (it != large.terms().end()) sum += c * it->second;
  }
  return sum;
}

}  // namespace

Complex hat_trace_product(const HatElement& x, const HatElement& y) {
  return trace_product(x.a, y.a) + trace_product(x.b, theta_prime(y.b));
}

double coefficient_distance(const HatElement& x, const HatElement& y) {
  return std::max(coefficient_distance(x.a, y.a), coefficient_distance(x.b, y.b));
}

std::string to_string(const HatElement& x) {
  return "(" + to_string(x.a) + ") + (" + to_string(x.b) + ") T";
}

Z2Function z2_mul(const Z2Function& f, const Z2Function& g) {
  return {f.at_plus * g.at_plus + f.at_minus * theta_prime(g.at_minus),
          f.at_plus * g.at_minus + f.at_minus * theta_prime(g.at_plus)};
}

Z2Function z2_invo(const Z2Function& f) {
  return {adjoint(f.at_plus), theta_prime(adjoint(f.at_minus))};
}

HatElement phi_iso(const Z2Function& f) { return {f.at_plus, f.at_minus}; }

Z2Function phi_inv(const HatElement& x) { return {x.a, x.b}; }

SpinElement module_inner(const ModuleVector& v, const ModuleVector& w) {
  return adjoint(v.v1) * w.v1 + adjoint(v.v2) * w.v2;
}

double module_norm(const ModuleVector& v) {
  return std::sqrt(norm(module_inner(v, v)));
}

ModuleVector t_apply(const HatElement& x, const ModuleVector& v) {
  return {x.a * v.v1 + x.b * v.v2,
          theta_prime(x.b) * v.v1 + theta_prime(x.a) * v.v2};
}

}  // namespace jwx
