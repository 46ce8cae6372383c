#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jwx {

using Site = std::int64_t;
using Complex = std::complex<double>;

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Letters 1 and 2 change sign under the pi rotation about the 3-axis.
constexpr bool is_odd(PauliLetter p) {
  return p == PauliLetter::X || p == PauliLetter::Y;
}

// A power of i, kept symbolic so that phases never accumulate rounding.
struct Phase {
  std::uint8_t power = 0;

  Complex value() const;
  friend Phase operator*(Phase a, Phase b) {
    return Phase{static_cast<std::uint8_t>((a.power + b.power) & 3U)};
  }
  friend bool operator==(Phase, Phase) = default;
};

std::pair<Phase, PauliLetter> letter_mul(PauliLetter p, PauliLetter q);

// Finite set of sites, kept sorted and duplicate-free.
class Window {
 public:
  Window() = default;
  explicit Window(std::vector<Site> sites);
  Window(std::initializer_list<Site> sites) : Window(std::vector<Site>(sites)) {}

  // All sites lo, lo+1, ..., hi. Empty when hi < lo.
  static Window interval(Site lo, Site hi);

  const std::vector<Site>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  bool contains(Site x) const;
  bool includes(const Window& other) const;
  std::optional<std::size_t> position(Site x) const;
  Window unite(const Window& other) const;
  // Smallest interval containing every site; empty for an empty window.
  Window hull() const;

  auto begin() const { return sites_.begin(); }
  auto end() const { return sites_.end(); }

  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::vector<Site> sites_;
};

// Product of single-site letters with identity letters omitted. Entries are
// strictly increasing in site, so the default ordering is the lexicographic
// (site, letter) order used for serialization.
class PauliString {
 public:
  using Entry = std::pair<Site, PauliLetter>;

  PauliString() = default;
  static PauliString single(Site x, PauliLetter p);
  // Throws std::invalid_argument when a site repeats.
  static PauliString from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  PauliLetter at(Site x) const;
  std::size_t weight() const { return entries_.size(); }
  bool is_identity() const { return entries_.empty(); }
  std::size_t odd_count() const;
  Window support() const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Entry> entries_;
};

std::pair<Phase, PauliString> string_mul(const PauliString& p,
                                         const PauliString& q);

// Finite linear combination of Pauli strings in canonical form: no zero
// coefficients, terms ordered by string.
class SpinElement {
 public:
  static constexpr double kDefaultTolerance = 1e-14;
  using TermMap = std::map<PauliString, Complex>;

  SpinElement() = default;
  explicit SpinElement(Complex scalar);
  explicit SpinElement(const PauliString& p, Complex coeff = 1.0);

  static SpinElement identity() { return SpinElement(Complex(1.0)); }

  const TermMap& terms() const { return terms_; }
  Complex coefficient(const PauliString& p) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  double tolerance() const { return tol_; }
  void set_tolerance(double tol);

  SpinElement& add_term(const PauliString& p, Complex coeff);

  SpinElement& operator+=(const SpinElement& other);
  SpinElement& operator-=(const SpinElement& other);
  SpinElement& operator*=(Complex c);

  friend SpinElement operator+(SpinElement a, const SpinElement& b) { return a += b; }
  friend SpinElement operator-(SpinElement a, const SpinElement& b) { return a -= b; }
  friend SpinElement operator-(SpinElement a) { return a *= -1.0; }
  friend SpinElement operator*(Complex c, SpinElement a) { return a *= c; }
  friend SpinElement operator*(SpinElement a, Complex c) { return a *= c; }
  friend SpinElement operator*(const SpinElement& a, const SpinElement& b);

  // Equality of canonical term maps; tolerances are not compared.
  friend bool operator==(const SpinElement& a, const SpinElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void prune();

  TermMap terms_;
  double tol_ = kDefaultTolerance;
};

SpinElement add(const SpinElement& a, const SpinElement& b);
SpinElement scale(Complex c, const SpinElement& a);
SpinElement mul(const SpinElement& a, const SpinElement& b);
SpinElement adjoint(const SpinElement& a);
SpinElement commutator(const SpinElement& a, const SpinElement& b);
SpinElement anticommutator(const SpinElement& a, const SpinElement& b);
Window support(const SpinElement& a);

// Largest coefficient modulus of a - b.
double coefficient_distance(const SpinElement& a, const SpinElement& b);

char letter_symbol(PauliLetter p);
std::string format_complex(Complex c);
std::string to_string(const PauliString& p);
// One term in the form `coeff * X(0) Y(3)`.
std::string term_to_string(const PauliString& p, Complex coeff);
std::string to_string(const SpinElement& a);

}  // namespace jwx
