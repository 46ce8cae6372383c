#include "jwx/pauli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace jwx {

Complex Phase::value() const {
  static constexpr std::array<Complex, 4> kUnits = {
      Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  return kUnits[power & 3U];
}

std::pair<Phase, PauliLetter> letter_mul(PauliLetter p, PauliLetter q) {
  if (p == PauliLetter::I) return {Phase{0}, q};
  if (q == PauliLetter::I) return {Phase{0}, p};
  if (p == q) return {Phase{0}, PauliLetter::I};
  auto r = static_cast<PauliLetter>(static_cast<std::uint8_t>(p) ^
                                    static_cast<std::uint8_t>(q));
  // (1,2), (2,3), (3,1) are the cyclic orders and carry +i.
  int pi = static_cast<int>(p);
  int qi = static_cast<int>(q);
  bool cyclic = (qi - pi + 3) % 3 == 1;
  return {Phase{static_cast<std::uint8_t>(cyclic ? 1 : 3)}, r};
}

Window::Window(std::vector<Site> sites) : sites_(std::move(sites)) {
  std::sort(sites_.begin(), sites_.end());
  sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
}

Window Window::interval(Site lo, Site hi) {
  std::vector<Site> sites;
  for (Site x = lo; x <= hi; ++x) sites.push_back(x);
  Window w;
  w.sites_ = std::move(sites);
  return w;
}

bool Window::contains(Site x) const {
  return std::binary_search(sites_.begin(), sites_.end(), x);
}

bool Window::includes(const Window& other) const {
  return std::includes(sites_.begin(), sites_.end(), other.sites_.begin(),
                       other.sites_.end());
}

std::optional<std::size_t> Window::position(Site x) const {
  auto it = std::lower_bound(sites_.begin(), sites_.end(), x);
  if (it == sites_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - sites_.begin());
}

Window Window::unite(const Window& other) const {
  std::vector<Site> merged;
  merged.reserve(sites_.size() + other.sites_.size());
  std::set_union(sites_.begin(), sites_.end(), other.sites_.begin(),
                 other.sites_.end(), std::back_inserter(merged));
  Window w;
  w.sites_ = std::move(merged);
  return w;
}

Window Window::hull() const {
  if (sites_.empty()) return {};
  return interval(sites_.front(), sites_.back());
}

PauliString PauliString::single(Site x, PauliLetter p) {
  PauliString s;
  if (p != PauliLetter::I) s.entries_.emplace_back(x, p);
  return s;
}

PauliString PauliString::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& l, const Entry& r) { return l.first < r.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].first == entries[i - 1].first) {
      throw std::invalid_argument("site " + std::to_string(entries[i].first) +
                                  " appears twice in a Pauli string");
    }
  }
  PauliString s;
  for (const auto& e : entries) {
    if (e.second != PauliLetter::I) s.entries_.push_back(e);
  }
  return s;
}

PauliLetter PauliString::at(Site x) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), x,
      [](const Entry& e, Site site) { return e.first < site; });
  if (it == entries_.end() || it->first != x) return PauliLetter::I;
  return it->second;
}

std::size_t PauliString::odd_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(),
      [](const Entry& e) { return is_odd(e.second); }));
}

Window PauliString::support() const {
  std::vector<Site> sites;
  sites.reserve(entries_.size());
  for (const auto& e : entries_) sites.push_back(e.first);
  return Window(std::move(sites));
}

std::pair<Phase, PauliString> string_mul(const PauliString& p,
                                         const PauliString& q) {
  const auto& lhs = p.entries();
  const auto& rhs = q.entries();
  std::vector<PauliString::Entry> out;
  out.reserve(lhs.size() + rhs.size());
  Phase phase;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].first < rhs[j].first)) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || rhs[j].first < lhs[i].first) {
      out.push_back(rhs[j++]);
    } else {
      auto [ph, r] = letter_mul(lhs[i].second, rhs[j].second);
      phase = phase * ph;
      if (r != PauliLetter::I) out.emplace_back(lhs[i].first, r);
      ++i;
      ++j;
    }
  }
  return {phase, PauliString::from_entries(std::move(out))};
}

SpinElement::SpinElement(Complex scalar) { add_term(PauliString(), scalar); }

SpinElement::SpinElement(const PauliString& p, Complex coeff) {
  add_term(p, coeff);
}

Complex SpinElement::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void SpinElement::set_tolerance(double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
  tol_ = tol;
  prune();
}

SpinElement& SpinElement::add_term(const PauliString& p, Complex coeff) {
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) <= tol_) terms_.erase(it);
  return *this;
}

SpinElement& SpinElement::operator+=(const SpinElement& other) {
  tol_ = std::max(tol_, other.tol_);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SpinElement& SpinElement::operator-=(const SpinElement& other) {
  tol_ = std::max(tol_, other.tol_);
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

SpinElement& SpinElement::operator*=(Complex c) {
  for (auto& [p, coeff] : terms_) coeff *= c;
  prune();
  return *this;
}

SpinElement operator*(const SpinElement& a, const SpinElement& b) {
  SpinElement out;
  out.tol_ = std::max(a.tol_, b.tol_);
  for (const auto& [p, cp] : a.terms_) {
    for (const auto& [q, cq] : b.terms_) {
      auto [phase, r] = string_mul(p, q);
      auto [it, inserted] = out.terms_.try_emplace(r, Complex(0.0));
      it->second += phase.value() * cp * cq;
    }
  }
  out.prune();
  return out;
}

void SpinElement::prune() {
  std::erase_if(terms_, [this](const auto& kv) { return std::abs(kv.second) <= tol_; });
}

SpinElement add(const SpinElement& a, const SpinElement& b) { return a + b; }

SpinElement scale(Complex c, const SpinElement& a) { return c * a; }

SpinElement mul(const SpinElement& a, const SpinElement& b) { return a * b; }

SpinElement adjoint(const SpinElement& a) {
  // Pauli strings are self-adjoint.
  SpinElement out;
  out.set_tolerance(a.tolerance());
  for (const auto& [p, c] : a.terms()) out.add_term(p, std::conj(c));
  return out;
}

SpinElement commutator(const SpinElement& a, const SpinElement& b) {
  return a * b - b * a;
}

SpinElement anticommutator(const SpinElement& a, const SpinElement& b) {
  return a * b + b * a;
}

Window support(const SpinElement& a) {
  Window w;
  for (const auto& [p, c] : a.terms()) w = w.unite(p.support());
  return w;
}

double coefficient_distance(const SpinElement& a, const SpinElement& b) {
  double dist = 0.0;
  for (const auto& [p, c] : a.terms()) {
    dist = std::max(dist, std::abs(c - b.coefficient(p)));
  }
  for (const auto& [p, c] : b.terms()) {
    if (a.terms().count(p) == 0) dist = std::max(dist, std::abs(c));
  }
  return dist;
}

char letter_symbol(PauliLetter p) {
  switch (p) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  return '?';
}

namespace {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  if (c.real() == 0.0) return format_double(c.imag()) + "i";
  std::string im = format_double(c.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return "(" + format_double(c.real()) + im + "i)";
}

std::string to_string(const PauliString& p) {
  if (p.is_identity()) return "I";
  std::string out;
  for (const auto& [x, letter] : p.entries()) {
    if (!out.empty()) out += ' ';
    out += letter_symbol(letter);
    out += '(' + std::to_string(x) + ')';
  }
  return out;
}

std::string term_to_string(const PauliString& p, Complex coeff) {
  return format_complex(coeff) + " * " + to_string(p);
}

std::string to_string(const SpinElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += term_to_string(p, c);
  }
  return out;
}

}  // namespace jwx
