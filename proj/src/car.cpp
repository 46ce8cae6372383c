#include "jwx/car.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "jwx/errors.hpp"
#include "jwx/spin_ops.hpp"

namespace jwx {

MatrixUnitIndex MatrixUnitIndex::make(int alpha, int beta) {
  auto ok = [](int v) { return v == 1 || v == 2; };
  if (!ok(alpha) || !ok(beta)) {
    throw std::invalid_argument("matrix unit indices must be 1 or 2");
  }
  return {alpha, beta};
}

HatElement annihilator(Site x) {
  return t_element() * psi(s_string(x) * sigma_pm(Ladder::lowering, x));
}

HatElement creator(Site x) {
  return t_element() * psi(s_string(x) * sigma_pm(Ladder::raising, x));
}

HatElement fermion_operator(FermionOperator op) {
  return op.dagger ? creator(op.site) : annihilator(op.site);
}

CarCheck car_check(Site x, Site y) {
  const HatElement ax = annihilator(x);
  const HatElement ay = annihilator(y);
  const HatElement ay_star = creator(y);
  return {ax * ay + ay * ax, ax * ay_star + ay_star * ax};
}

HatElement matrix_unit_f(Site x, MatrixUnitIndex idx) {
  const HatElement a = annihilator(x);
  const HatElement a_star = creator(x);
  if (idx.alpha == 1 && idx.beta == 1) return a_star * a;
  if (idx.alpha == 1 && idx.beta == 2) return a_star;
  if (idx.alpha == 2 && idx.beta == 1) return a;
  return a * a_star;
}

HatElement matrix_unit_e(std::size_t i, const Window& w, MatrixUnitIndex idx) {
  if (i >= w.size()) {
    throw IndexOutOfWindow("position " + std::to_string(i) +
                           " is outside a window of " + std::to_string(w.size()) +
                           " sites");
  }
  const Site x = w.sites()[i];
  if (!idx.is_odd()) return matrix_unit_f(x, idx);
  std::vector<PauliString::Entry> before;
  for (std::size_t j = 0; j < i; ++j) before.emplace_back(w.sites()[j], PauliLetter::Z);
  const HatElement r = psi(SpinElement(PauliString::from_entries(std::move(before))));
  return r * matrix_unit_f(x, idx);
}

HatElement unit_product(const UnitBasisElement& gamma, const Window& w) {
  if (gamma.size() != w.size()) {
    throw std::invalid_argument("unit basis element does not match the window size");
  }
  HatElement out = HatElement::identity();
  for (std::size_t i = 0; i < gamma.size(); ++i) out = out * matrix_unit_e(i, w, gamma[i]);
  return out;
}

std::vector<UnitBasisElement> all_unit_basis_elements(std::size_t n) {
  static constexpr MatrixUnitIndex kUnits[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  std::vector<UnitBasisElement> out{UnitBasisElement{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<UnitBasisElement> next;
    next.reserve(out.size() * 4);
    for (const auto& g : out) {
      for (const auto& u : kUnits) {
        next.push_back(g);
        next.back().push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

UnitBasisElement transpose(const UnitBasisElement& g) {
  UnitBasisElement out = g;
  for (auto& u : out) std::swap(u.alpha, u.beta);
  return out;
}

}  // namespace

UnitExpansion expand_in_units(const HatElement& p, const Window& w) {
  const std::size_t n = w.size();
  if (n > kMaxExpansionSites) {
    throw std::length_error("window of " + std::to_string(n) +
                            " sites is too large to expand in matrix units");
  }
  std::vector<std::array<HatElement, 4>> units(n);
  static constexpr MatrixUnitIndex kUnits[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < 4; ++k) units[i][k] = matrix_unit_e(i, w, kUnits[k]);
  }

  const double scale = std::ldexp(1.0, static_cast<int>(n));
  std::map<UnitBasisElement, HatElement> products;
  UnitExpansion out;
  UnitBasisElement gamma;
  std::function<void(const HatElement&)> descend = [&](const HatElement& prefix) {
    if (gamma.size() == n) {
      // trace(e_D p) is the coefficient at the transpose of D.
      const Complex c = scale * hat_trace_product(prefix, p);
      if (std::abs(c) > SpinElement::kDefaultTolerance) out.coefficients[transpose(gamma)] = c;
      products.emplace(gamma, prefix);
      return;
    }
    const std::size_t i = gamma.size();
    for (std::size_t k = 0; k < 4; ++k) {
      gamma.push_back(kUnits[k]);
      descend(prefix * units[i][k]);
      gamma.pop_back();
    }
  };
  descend(HatElement::identity());

  HatElement remainder = p;
  for (const auto& [g, c] : out.coefficients) remainder -= c * products.at(g);
  out.residual = hat_residual_norm(remainder, kLocalCarTolerance);
  if (out.residual > kLocalCarTolerance) {
    throw NotInLocalCar("element is not in the local CAR algebra of the window",
                        out.residual);
  }
  return out;
}

HatElement monomial_to_hat(const FermionMonomial& m) {
  HatElement out = HatElement::identity();
  for (const auto& op : m) out = out * fermion_operator(op);
  return out;
}

FermionPolynomial& FermionPolynomial::add_term(const FermionMonomial& m, Complex coeff) {
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) <= SpinElement::kDefaultTolerance) terms_.erase(it);
  return *this;
}

Complex FermionPolynomial::coefficient(const FermionMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

HatElement to_hat(const FermionPolynomial& p) {
  HatElement out;
  for (const auto& [m, c] : p.terms()) out += c * monomial_to_hat(m);
  return out;
}

Window fermion_support(const FermionPolynomial& p) {
  std::vector<Site> sites;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& op : m) sites.push_back(op.site);
  }
  return Window(std::move(sites));
}

double coefficient_distance(const FermionPolynomial& p, const FermionPolynomial& q) {
  double dist = 0.0;
  for (const auto& [m, c] : p.terms()) dist = std::max(dist, std::abs(c - q.coefficient(m)));
  for (const auto& [m, c] : q.terms()) {
    if (p.terms().count(m) == 0) dist = std::max(dist, std::abs(c));
  }
  return dist;
}

std::string to_string(const FermionMonomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& op : m) {
    if (!out.empty()) out += ' ';
    out += op.dagger ? "a+(" : "a(";
    out += std::to_string(op.site) + ')';
  }
  return out;
}

std::string to_string(const FermionPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += format_complex(c) + " * " + to_string(m);
  }
  return out;
}

}  // namespace jwx
