#pragma once

#include "jwx/pauli.hpp"

namespace jwx {

enum class PrefactorSign : int { minus = -1, plus = 1 };

constexpr int value(PrefactorSign s) { return static_cast<int>(s); }

constexpr PrefactorSign operator*(PrefactorSign a, PrefactorSign b) {
  return value(a) == value(b) ? PrefactorSign::plus : PrefactorSign::minus;
}

// sign(x) = +1 for x >= 0 and -1 otherwise.
constexpr PrefactorSign sign_of(Site x) {
  return x >= 0 ? PrefactorSign::plus : PrefactorSign::minus;
}

enum class Ladder { raising, lowering };

SpinElement sigma(PauliLetter kappa, Site x);
// (sigma_1 +/- i sigma_2) / 2 at x.
SpinElement sigma_pm(Ladder which, Site x);

// Product of sigma_3 over [1, x-1] for x >= 2, over [x, 0] for x <= 0, and
// the identity for x = 1.
PauliString s_string_letters(Site x);
SpinElement s_string(Site x);

// -sign(y - x) * sign(-y). Satisfies S_x sigma_k(y) = eps_xy sigma_k(y) S_x
// for k in {1, 2}.
PrefactorSign epsilon(Site x, Site y);

// Rotation by pi about the 3-axis on every site.
SpinElement theta(const SpinElement& a);
// The same rotation restricted to sites <= 0.
SpinElement theta_prime(const SpinElement& a);

}  // namespace jwx
