#pragma once

#include <array>

#include "jwx/car.hpp"
#include "jwx/crossed.hpp"

namespace jwx {

// Per-site change of basis sigma_0 = E11 + E22, sigma_1 = E12 + E21,
// sigma_2 = i(E21 - E12), sigma_3 = E11 - E22. Throws SupportExceedsWindow.
UnitCoefficients pauli_to_units(const SpinElement& a, const Window& w);
SpinElement units_to_pauli(const UnitCoefficients& coeffs, const Window& w);

// The window-relative isomorphism onto the local CAR algebra, sending the
// matrix-unit tensor E_G to e_G. Throws SupportExceedsWindow.
HatElement vartheta(const SpinElement& a, const Window& w);

// Same map computed site by site from the images of single-site Pauli
// letters, without enumerating the 2^n unit tensors of each term.
HatElement vartheta_fast(const SpinElement& a, const Window& w);

// Preimage under vartheta. Every Pauli string maps to a single pure term, so
// each term of x is decoded on its own. Throws NotInLocalCar.
SpinElement vartheta_inverse(const HatElement& x, const Window& w);

// Whether vartheta(a, w) == vartheta(a, w_large). Requires w within w_large.
bool consistency_check(const SpinElement& a, const Window& w, const Window& w_large);

// vartheta(a, w) as a normal-ordered fermion polynomial. Throws
// SupportExceedsWindow.
FermionPolynomial fermion_polynomial(const SpinElement& a, const Window& w);

// Fermionic expression for psi(sigma_kappa(x)):
//   kappa = 0: 1
//   kappa = 1: T psi(S_x) (a_x + a_x^*)
//   kappa = 2: i T psi(S_x) (a_x - a_x^*)
//   kappa = 3: 2 a_x^* a_x - 1
HatElement psi_sigma(PauliLetter kappa, Site x);

enum class BilinearKind { hop_asym, pair_asym, pair_sym, hop_sym };

// Fermion side of the bond (x, x+n):
//   hop_asym:  a_x^* a_{x+n} - a_{x+n}^* a_x
//   pair_asym: a_x^* a_{x+n}^* - a_{x+n} a_x
//   pair_sym:  a_x^* a_{x+n}^* + a_{x+n} a_x
//   hop_sym:   a_x^* a_{x+n} + a_{x+n}^* a_x
HatElement bilinear(Site x, int n, BilinearKind kind);

// Spin string equal to psi^-1(bilinear(x, n, kind)), with the sigma_3
// string over the interior sites x+1 .. x+n-1.
SpinElement bilinear_to_spin(Site x, int n, BilinearKind kind);

struct XyTransform {
  SpinElement spin;
  HatElement fermion;
  FermionPolynomial fermion_terms;
  // c with psi(bond) = c * (hopping + gamma * pairing).
  Complex bond_prefactor;
  double bond_residual = 0.0;
  // Norm of psi(lambda sigma_3) - lambda (2 a^*a - 1).
  double field_residual = 0.0;
};

// (1+g) s1 s1 + (1-g) s2 s2 + l s3 on the bond (x, x+1).
XyTransform xy_transform(double gamma, double lambda, Site x);

struct ExchangeParts {
  SpinElement direct;
  SpinElement symmetric;
  SpinElement antisymmetric;
};

using Coupling = std::array<std::array<double, 3>, 3>;

// Splits sum_{k,l in {1,2}} J_kl s_k(x) s_l(x+1) into direct, symmetric and
// antisymmetric parts. The third spin component does not enter.
ExchangeParts exchange_decompose(const Coupling& j, Site x);

}  // namespace jwx
