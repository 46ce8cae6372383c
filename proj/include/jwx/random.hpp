#pragma once

#include <cstdint>
#include <random>

#include "jwx/car.hpp"
#include "jwx/crossed.hpp"
#include "jwx/pauli.hpp"

namespace jwx {

// Random elements with small Gaussian-integer coefficients, so that sums and
// products of samples stay exact in double precision.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() { return engine_; }

  int integer(int lo, int hi);
  // Nonzero a + bi with |a|, |b| <= 3.
  Complex coefficient();
  Site site(const Window& sites);
  PauliString pauli_string(const Window& sites, std::size_t max_weight);
  SpinElement spin_element(const Window& sites, std::size_t max_terms, std::size_t max_weight);
  HatElement hat_element(const Window& sites, std::size_t max_terms, std::size_t max_weight);
  FermionMonomial fermion_monomial(const Window& sites, std::size_t max_length);
  FermionPolynomial fermion_polynomial(const Window& sites, std::size_t max_terms,
                                       std::size_t max_length);

 private:
  std::mt19937_64 engine_;
};

}  // namespace jwx
