#include "jwx/spin_ops.hpp"

namespace jwx {

SpinElement sigma(PauliLetter kappa, Site x) {
  return SpinElement(PauliString::single(x, kappa));
}

SpinElement sigma_pm(Ladder which, Site x) {
  const Complex i2(0.0, which == Ladder::raising ? 0.5 : -0.5);
  SpinElement out(PauliString::single(x, PauliLetter::X), 0.5);
  out.add_term(PauliString::single(x, PauliLetter::Y), i2);
  return out;
}

PauliString s_string_letters(Site x) {
  std::vector<PauliString::Entry> entries;
  if (x >= 2) {
    for (Site y = 1; y <= x - 1; ++y) entries.emplace_back(y, PauliLetter::Z);
  } else if (x <= 0) {
    for (Site y = x; y <= 0; ++y) entries.emplace_back(y, PauliLetter::Z);
  }
  return PauliString::from_entries(std::move(entries));
}

SpinElement s_string(Site x) { return SpinElement(s_string_letters(x)); }

PrefactorSign epsilon(Site x, Site y) {
  PrefactorSign s = sign_of(y - x) * sign_of(-y);
  return s * PrefactorSign::minus;
}

namespace {

template <typename Flips>
SpinElement rotate(const SpinElement& a, Flips flips) {
  SpinElement out;
  out.set_tolerance(a.tolerance());
  for (const auto& [p, c] : a.terms()) {
    std::size_t n = 0;
    for (const auto& [x, letter] : p.entries()) {
      if (is_odd(letter) && flips(x)) ++n;
    }
    out.add_term(p, n % 2 == 0 ? c : -c);
  }
  return out;
}

}  // namespace

SpinElement theta(const SpinElement& a) {
  return rotate(a, [](Site) { return true; });
}

SpinElement theta_prime(const SpinElement& a) {
  return rotate(a, [](Site x) { return x <= 0; });
}

}  // namespace jwx
