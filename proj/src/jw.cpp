#include "jwx/jw.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "jwx/errors.hpp"
#include "jwx/spin_ops.hpp"

namespace jwx {

namespace {

constexpr MatrixUnitIndex kE11{1, 1};
constexpr MatrixUnitIndex kE12{1, 2};
constexpr MatrixUnitIndex kE21{2, 1};
constexpr MatrixUnitIndex kE22{2, 2};
constexpr Complex kI(0.0, 1.0);

void require_within(const SpinElement& a, const Window& w) {
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [x, letter] : p.entries()) {
      if (!w.contains(x)) {
        throw SupportExceedsWindow("site " + std::to_string(x) + " is outside the window");
      }
    }
  }
}

std::array<std::pair<MatrixUnitIndex, Complex>, 2> letter_units(PauliLetter p) {
  switch (p) {
    case PauliLetter::I: return {{{kE11, 1.0}, {kE22, 1.0}}};
    case PauliLetter::X: return {{{kE12, 1.0}, {kE21, 1.0}}};
    case PauliLetter::Y: return {{{kE21, kI}, {kE12, -kI}}};
    case PauliLetter::Z: break;
  }
  return {{{kE11, 1.0}, {kE22, -1.0}}};
}

std::array<std::pair<PauliLetter, Complex>, 2> unit_letters(MatrixUnitIndex u) {
  if (u == kE11) return {{{PauliLetter::I, 0.5}, {PauliLetter::Z, 0.5}}};
  if (u == kE22) return {{{PauliLetter::I, 0.5}, {PauliLetter::Z, -0.5}}};
  if (u == kE12) return {{{PauliLetter::X, 0.5}, {PauliLetter::Y, 0.5 * kI}}};
  return {{{PauliLetter::X, 0.5}, {PauliLetter::Y, -0.5 * kI}}};
}

// units[i][k] is e^(i) for the k-th index in (11, 12, 21, 22) order.
using SiteUnits = std::vector<std::array<HatElement, 4>>;

std::size_t unit_slot(MatrixUnitIndex u) {
  return static_cast<std::size_t>(2 * (u.alpha - 1) + (u.beta - 1));
}

SiteUnits window_units(const Window& w) {
  SiteUnits units(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (MatrixUnitIndex u : {kE11, kE12, kE21, kE22}) {
      units[i][unit_slot(u)] = matrix_unit_e(i, w, u);
    }
  }
  return units;
}

// vartheta of a single-site letter at each window position.
std::vector<std::array<HatElement, 4>> letter_images(const Window& w) {
  const SiteUnits units = window_units(w);
  std::vector<std::array<HatElement, 4>> images(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& e = units[i];
    images[i][0] = HatElement::identity();
    images[i][1] = e[unit_slot(kE12)] + e[unit_slot(kE21)];
    images[i][2] = kI * (e[unit_slot(kE21)] - e[unit_slot(kE12)]);
    images[i][3] = e[unit_slot(kE11)] - e[unit_slot(kE22)];
  }
  return images;
}

HatElement string_image(const PauliString& p, const Window& w,
                        const std::vector<std::array<HatElement, 4>>& images) {
  HatElement out = HatElement::identity();
  for (const auto& [x, letter] : p.entries()) {
    out = out * images[*w.position(x)][static_cast<std::size_t>(letter)];
  }
  return out;
}

bool s_string_covers(Site x, Site y) {
  if (x >= 2) return y >= 1 && y <= x - 1;
  if (x <= 0) return y >= x && y <= 0;
  return false;
}

}  // namespace

UnitCoefficients pauli_to_units(const SpinElement& a, const Window& w) {
  require_within(a, w);
  UnitCoefficients out;
  for (const auto& [p, c] : a.terms()) {
    std::vector<std::pair<UnitBasisElement, Complex>> partial{{{}, c}};
    for (Site x : w) {
      std::vector<std::pair<UnitBasisElement, Complex>> next;
      next.reserve(partial.size() * 2);
      for (const auto& [gamma, coeff] : partial) {
        for (const auto& [u, f] : letter_units(p.at(x))) {
          next.emplace_back(gamma, coeff * f);
          next.back().first.push_back(u);
        }
      }
      partial = std::move(next);
    }
    for (auto& [gamma, coeff] : partial) {
      auto [it, inserted] = out.try_emplace(std::move(gamma), coeff);
      if (!inserted) it->second += coeff;
    }
  }
  std::erase_if(out, [](const auto& kv) {
    return std::abs(kv.second) <= SpinElement::kDefaultTolerance;
  });
  return out;
}

SpinElement units_to_pauli(const UnitCoefficients& coeffs, const Window& w) {
  SpinElement out;
  for (const auto& [gamma, c] : coeffs) {
    if (gamma.size() != w.size()) {
      throw std::invalid_argument("unit basis element does not match the window size");
    }
    std::vector<std::pair<std::vector<PauliString::Entry>, Complex>> partial{{{}, c}};
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::vector<std::pair<std::vector<PauliString::Entry>, Complex>> next;
      next.reserve(partial.size() * 2);
      for (const auto& [entries, coeff] : partial) {
        for (const auto& [letter, f] : unit_letters(gamma[i])) {
          next.emplace_back(entries, coeff * f);
          if (letter != PauliLetter::I) next.back().first.emplace_back(w.sites()[i], letter);
        }
      }
      partial = std::move(next);
    }
    for (auto& [entries, coeff] : partial) {
      out.add_term(PauliString::from_entries(std::move(entries)), coeff);
    }
  }
  return out;
}

HatElement vartheta(const SpinElement& a, const Window& w) {
  const UnitCoefficients coeffs = pauli_to_units(a, w);
  const SiteUnits units = window_units(w);
  HatElement out;
  for (const auto& [gamma, c] : coeffs) {
    HatElement e = HatElement::identity();
    for (std::size_t i = 0; i < gamma.size(); ++i) e = e * units[i][unit_slot(gamma[i])];
    out += c * e;
  }
  return out;
}

HatElement vartheta_fast(const SpinElement& a, const Window& w) {
  require_within(a, w);
  const auto images = letter_images(w);
  HatElement out;
  for (const auto& [p, c] : a.terms()) out += c * string_image(p, w, images);
  return out;
}

SpinElement vartheta_inverse(const HatElement& x, const Window& w) {
  const auto images = letter_images(w);
  const std::size_t n = w.size();
  SpinElement out;
  HatElement rejected;

  // The image of sigma_K carries T iff K has an odd number of letters 1, 2,
  // and its letter at window site i is kappa_i times sigma_3 raised to the
  // number of odd letters whose R or S string passes through site i.
  auto decode = [&](const PauliString& q, Complex c, bool with_t) {
    std::vector<bool> odd(n);
    std::size_t odd_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      odd[i] = is_odd(q.at(w.sites()[i]));
      if (odd[i]) ++odd_total;
    }
    std::vector<PauliString::Entry> entries;
    for (std::size_t i = 0; i < n; ++i) {
      const Site xi = w.sites()[i];
      std::size_t flips = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!odd[j]) continue;
        if (j > i) ++flips;
        if (s_string_covers(w.sites()[j], xi)) ++flips;
      }
      PauliLetter letter = q.at(xi);
      if (flips % 2 == 1) letter = letter_mul(letter, PauliLetter::Z).second;
      entries.emplace_back(xi, letter);
    }
    const PauliString k = PauliString::from_entries(std::move(entries));
    const HatElement image = string_image(k, w, images);
    const SpinElement& slot = with_t ? image.b : image.a;
    const Complex d = slot.coefficient(q);
    const bool pure = image.a.size() + image.b.size() == 1;
    if ((odd_total % 2 == 1) != with_t || !pure || d == Complex(0.0)) {
      (with_t ? rejected.b : rejected.a).add_term(q, c);
      return;
    }
    out.add_term(k, c / d);
  };

  for (const auto& [q, c] : x.a.terms()) decode(q, c, false);
  for (const auto& [q, c] : x.b.terms()) decode(q, c, true);

  const double residual = hat_residual_norm(rejected, kLocalCarTolerance);
  if (residual > kLocalCarTolerance) {
    throw NotInLocalCar("element is not in the local CAR algebra of the window", residual);
  }
  return out;
}

bool consistency_check(const SpinElement& a, const Window& w, const Window& w_large) {
  if (!w_large.includes(w)) {
    throw std::invalid_argument("consistency_check needs the first window inside the second");
  }
  return coefficient_distance(vartheta(a, w), vartheta(a, w_large)) <= 1e-12;
}

FermionPolynomial fermion_polynomial(const SpinElement& a, const Window& w) {
  require_within(a, w);
  const std::size_t n = w.size();
  const DenseMatrix z = pauli_matrix(PauliLetter::Z);
  FermionPolynomial out;

  // One entry per site-local word: 1, a^*, a, a^*a.
  enum class Word { one, create, annihilate, number };
  struct Partial {
    std::vector<std::pair<Site, Word>> words;
    Complex coeff;
  };

  for (const auto& [p, c] : a.terms()) {
    std::vector<std::size_t> odd_after(n, 0);
    for (std::size_t i = n; i-- > 1;) {
      odd_after[i - 1] = odd_after[i] + (is_odd(p.at(w.sites()[i])) ? 1 : 0);
    }
    std::vector<Partial> partial{{{}, c}};
    for (std::size_t i = 0; i < n; ++i) {
      const Site x = w.sites()[i];
      // The sigma_3 factors of later R strings land on this site.
      DenseMatrix local = pauli_matrix(p.at(x));
      if (odd_after[i] % 2 == 1) local = local * z;
      // f11 = a^*a, f12 = a^*, f21 = a, f22 = 1 - a^*a.
      const std::array<std::pair<Word, Complex>, 4> words = {{
          {Word::one, local(1, 1)},
          {Word::create, local(0, 1)},
          {Word::annihilate, local(1, 0)},
          {Word::number, local(0, 0) - local(1, 1)},
      }};
      std::vector<Partial> next;
      for (const auto& part : partial) {
        for (const auto& [word, f] : words) {
          if (f == Complex(0.0)) continue;
          next.push_back(part);
          next.back().coeff *= f;
          if (word != Word::one) next.back().words.emplace_back(x, word);
        }
      }
      partial = std::move(next);
    }

    for (const auto& part : partial) {
      // Site-ordered operators, then normal order with the permutation sign.
      std::vector<FermionOperator> ops;
      for (const auto& [x, word] : part.words) {
        if (word == Word::create || word == Word::number) ops.push_back({x, true});
        if (word == Word::annihilate || word == Word::number) ops.push_back({x, false});
      }
      std::vector<std::size_t> order;
      for (std::size_t k = 0; k < ops.size(); ++k) {
        if (ops[k].dagger) order.push_back(k);
      }
      for (std::size_t k = ops.size(); k-- > 0;) {
        if (!ops[k].dagger) order.push_back(k);
      }
      std::size_t inversions = 0;
      for (std::size_t s = 0; s < order.size(); ++s) {
        for (std::size_t t = s + 1; t < order.size(); ++t) {
          if (order[s] > order[t]) ++inversions;
        }
      }
      FermionMonomial m;
      m.reserve(ops.size());
      for (std::size_t k : order) m.push_back(ops[k]);
      out.add_term(m, inversions % 2 == 0 ? part.coeff : -part.coeff);
    }
  }
  return out;
}

HatElement psi_sigma(PauliLetter kappa, Site x) {
  const HatElement a = annihilator(x);
  const HatElement a_star = creator(x);
  const HatElement t_s = t_element() * psi(s_string(x));
  switch (kappa) {
    case PauliLetter::I:
      return HatElement::identity();
    case PauliLetter::X:
      return t_s * (a + a_star);
    case PauliLetter::Y:
      return kI * (t_s * (a - a_star));
    case PauliLetter::Z:
      break;
  }
  return 2.0 * (a_star * a) - HatElement::identity();
}

HatElement bilinear(Site x, int n, BilinearKind kind) {
  if (n < 1) throw std::invalid_argument("bond length must be positive");
  const Site y = x + n;
  const HatElement ax = annihilator(x);
  const HatElement ay = annihilator(y);
  const HatElement ax_star = creator(x);
  const HatElement ay_star = creator(y);
  switch (kind) {
    case BilinearKind::hop_asym: return ax_star * ay - ay_star * ax;
    case BilinearKind::pair_asym: return ax_star * ay_star - ay * ax;
    case BilinearKind::pair_sym: return ax_star * ay_star + ay * ax;
    case BilinearKind::hop_sym: break;
  }
  return ax_star * ay + ay_star * ax;
}

SpinElement bilinear_to_spin(Site x, int n, BilinearKind kind) {
  if (n < 1) throw std::invalid_argument("bond length must be positive");
  const Site y = x + n;
  auto bond = [&](PauliLetter k, PauliLetter l) {
    std::vector<PauliString::Entry> entries{{x, k}, {y, l}};
    for (Site s = x + 1; s < y; ++s) entries.emplace_back(s, PauliLetter::Z);
    return SpinElement(PauliString::from_entries(std::move(entries)));
  };
  const SpinElement xy = bond(PauliLetter::X, PauliLetter::Y);
  const SpinElement yx = bond(PauliLetter::Y, PauliLetter::X);
  const SpinElement xx = bond(PauliLetter::X, PauliLetter::X);
  const SpinElement yy = bond(PauliLetter::Y, PauliLetter::Y);
  switch (kind) {
    case BilinearKind::hop_asym: return (0.5 * kI) * (xy - yx);
    case BilinearKind::pair_asym: return (-0.5 * kI) * (xy + yx);
    case BilinearKind::pair_sym: return -0.5 * (xx - yy);
    case BilinearKind::hop_sym: break;
  }
  return -0.5 * (xx + yy);
}

XyTransform xy_transform(double gamma, double lambda, Site x) {
  const PauliString xx = PauliString::from_entries({{x, PauliLetter::X}, {x + 1, PauliLetter::X}});
  const PauliString yy = PauliString::from_entries({{x, PauliLetter::Y}, {x + 1, PauliLetter::Y}});
  SpinElement bond_spin(xx, 1.0 + gamma);
  bond_spin.add_term(yy, 1.0 - gamma);

  XyTransform out;
  out.spin = bond_spin + lambda * sigma(PauliLetter::Z, x);
  out.fermion = psi(out.spin);
  out.fermion_terms = fermion_polynomial(out.spin, Window{x, x + 1});

  const HatElement bond = psi(bond_spin);
  const HatElement density =
      bilinear(x, 1, BilinearKind::hop_sym) + gamma * bilinear(x, 1, BilinearKind::pair_sym);
  const HatElement density_star = hat_adjoint(density);
  out.bond_prefactor =
      hat_trace_product(density_star, bond) / hat_trace_product(density_star, density);
  out.bond_residual = hat_norm(bond - out.bond_prefactor * density);

  const HatElement a = annihilator(x);
  const HatElement number = creator(x) * a;
  const HatElement field = lambda * (2.0 * number - HatElement::identity());
  out.field_residual = hat_norm(psi(lambda * sigma(PauliLetter::Z, x)) - field);
  return out;
}

ExchangeParts exchange_decompose(const Coupling& j, Site x) {
  auto bond = [x](PauliLetter k, PauliLetter l) {
    return SpinElement(PauliString::from_entries({{x, k}, {x + 1, l}}));
  };
  const SpinElement xx = bond(PauliLetter::X, PauliLetter::X);
  const SpinElement yy = bond(PauliLetter::Y, PauliLetter::Y);
  const SpinElement xy = bond(PauliLetter::X, PauliLetter::Y);
  const SpinElement yx = bond(PauliLetter::Y, PauliLetter::X);
  ExchangeParts out;
  out.direct = 0.5 * (j[0][0] + j[1][1]) * (xx + yy) + 0.5 * (j[0][0] - j[1][1]) * (xx - yy);
  out.symmetric = 0.5 * (j[0][1] + j[1][0]) * (xy + yx);
  out.antisymmetric = 0.5 * (j[0][1] - j[1][0]) * (xy - yx);
  return out;
}

}  // namespace jwx
