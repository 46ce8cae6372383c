#include "jwx/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace jwx {

int ElementSampler::integer(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Complex ElementSampler::coefficient() {
  for (;;) {
    const int re = integer(-3, 3);
    const int im = integer(-3, 3);
    if (re != 0 || im != 0) return {static_cast<double>(re), static_cast<double>(im)};
  }
}

Site ElementSampler::site(const Window& sites) {
  if (sites.empty()) throw std::invalid_argument("cannot sample from an empty window");
  return sites.sites()[static_cast<std::size_t>(integer(0, static_cast<int>(sites.size()) - 1))];
}

PauliString ElementSampler::pauli_string(const Window& sites, std::size_t max_weight) {
  std::vector<Site> pool = sites.sites();
  std::shuffle(pool.begin(), pool.end(), engine_);
  const int weight = integer(0, static_cast<int>(std::min(max_weight, pool.size())));
  std::vector<PauliString::Entry> entries;
  for (int k = 0; k < weight; ++k) {
    entries.emplace_back(pool[static_cast<std::size_t>(k)],
                         static_cast<PauliLetter>(integer(1, 3)));
  }
  return PauliString::from_entries(std::move(entries));
}

SpinElement ElementSampler::spin_element(const Window& sites, std::size_t max_terms,
                                         std::size_t max_weight) {
  SpinElement out;
  const int terms = integer(1, static_cast<int>(max_terms));
  for (int k = 0; k < terms; ++k) out.add_term(pauli_string(sites, max_weight), coefficient());
  return out;
}

HatElement ElementSampler::hat_element(const Window& sites, std::size_t max_terms,
                                       std::size_t max_weight) {
  HatElement out{spin_element(sites, max_terms, max_weight),
                 spin_element(sites, max_terms, max_weight)};
  // Pure psi(a) and pure psi(b)T samples exercise the two summands alone.
  const int shape = integer(0, 5);
  if (shape == 0) out.b = SpinElement();
  if (shape == 1) out.a = SpinElement();
  return out;
}

FermionMonomial ElementSampler::fermion_monomial(const Window& sites, std::size_t max_length) {
  FermionMonomial m;
  const int length = integer(0, static_cast<int>(max_length));
  for (int k = 0; k < length; ++k) m.push_back({site(sites), integer(0, 1) == 1});
  return m;
}

FermionPolynomial ElementSampler::fermion_polynomial(const Window& sites, std::size_t max_terms,
                                                     std::size_t max_length) {
  FermionPolynomial out;
  const int terms = integer(1, static_cast<int>(max_terms));
  for (int k = 0; k < terms; ++k) out.add_term(fermion_monomial(sites, max_length), coefficient());
  return out;
}

}  // namespace jwx
