#include "jwx/verify.hpp"

#include <algorithm>
#include <cmath>

#include "jwx/car.hpp"
#include "jwx/crossed.hpp"
#include "jwx/dense.hpp"
#include "jwx/errors.hpp"
#include "jwx/jw.hpp"
#include "jwx/random.hpp"
#include "jwx/spin_ops.hpp"

namespace jwx {

Suite parse_suite(const std::string& name) {
  if (name == "car") return Suite::car;
  if (name == "rotations") return Suite::rotations;
  if (name == "crossed") return Suite::crossed;
  if (name == "jw") return Suite::jw;
  if (name == "norms") return Suite::norms;
  if (name == "all") return Suite::all;
  throw ParseError("unknown suite \"" + name + "\"");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::car: return "car";
    case Suite::rotations: return "rotations";
    case Suite::crossed: return "crossed";
    case Suite::jw: return "jw";
    case Suite::norms: return "norms";
    case Suite::all: break;
  }
  return "all";
}

namespace {

struct Tally {
  double residual = 0.0;
  std::size_t cases = 0;

  void add(double r) {
    residual = std::max(residual, r);
    ++cases;
  }
};

class Recorder {
 public:
  Recorder(std::string suite, const VerifyOptions& options, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), options_(options), out_(out) {}

  void exact(const std::string& name, const Tally& t, std::string note = {}) {
    push(name, t, true, t.residual == 0.0, std::move(note));
  }

  void approx(const std::string& name, const Tally& t, std::string note = {}) {
    push(name, t, false, t.residual <= options_.tol, std::move(note));
  }

 private:
  void push(const std::string& name, const Tally& t, bool exact, bool passed, std::string note) {
    out_.push_back({suite_, name, exact, passed, t.residual, t.cases, std::move(note)});
  }

  std::string suite_;
  const VerifyOptions& options_;
  std::vector<CheckResult>& out_;
};

double distance(const SpinElement& a, const SpinElement& b) { return coefficient_distance(a, b); }
double distance(const HatElement& a, const HatElement& b) { return coefficient_distance(a, b); }

void car_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Recorder rec("car", o, out);
  Tally aa, aad, parity, pair_form;
  for (Site x = o.range_lo; x <= o.range_hi; ++x) {
    const HatElement a = annihilator(x);
    parity.add(hat_l1_norm(hat_theta(a) + a));
    const HatElement expected{
        {}, static_cast<double>(value(epsilon(x, x))) * s_string(x) * sigma_pm(Ladder::lowering, x)};
    pair_form.add(distance(a, expected));
    for (Site y = o.range_lo; y <= o.range_hi; ++y) {
      const CarCheck c = car_check(x, y);
      aa.add(hat_l1_norm(c.anti_aa));
      const HatElement delta = x == y ? HatElement::identity() : HatElement{};
      aad.add(hat_l1_norm(c.anti_aad - delta));
    }
  }
  rec.exact("anticommutator_a_a", aa);
  rec.exact("anticommutator_a_astar", aad);
  rec.exact("annihilator_is_odd", parity);
  rec.exact("annihilator_pair_form", pair_form);
}

void rotations_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Recorder rec("rotations", o, out);
  ElementSampler sampler(o.seed);
  const Window sites = Window::interval(-4, 4);
  Tally inv, inv_prime, commute, mul, mul_prime, adj;
  for (int k = 0; k < 50; ++k) {
    const SpinElement a = sampler.spin_element(sites, 4, 5);
    const SpinElement b = sampler.spin_element(sites, 4, 5);
    inv.add(distance(theta(theta(a)), a));
    inv_prime.add(distance(theta_prime(theta_prime(a)), a));
    commute.add(distance(theta(theta_prime(a)), theta_prime(theta(a))));
    mul.add(distance(theta(a * b), theta(a) * theta(b)));
    mul_prime.add(distance(theta_prime(a * b), theta_prime(a) * theta_prime(b)));
    adj.add(std::max(distance(theta(adjoint(a)), adjoint(theta(a))),
                     distance(theta_prime(adjoint(a)), adjoint(theta_prime(a)))));
  }
  rec.exact("theta_involution", inv);
  rec.exact("theta_prime_involution", inv_prime);
  rec.exact("theta_commutes_with_theta_prime", commute);
  rec.exact("theta_multiplicative", mul);
  rec.exact("theta_prime_multiplicative", mul_prime);
  rec.exact("rotations_preserve_adjoint", adj);

  Tally eps, s_props;
  for (Site x = o.range_lo; x <= o.range_hi; ++x) {
    const SpinElement sx = s_string(x);
    s_props.add(std::max(distance(adjoint(sx), sx), distance(sx * sx, SpinElement::identity())));
    for (Site y = o.range_lo; y <= o.range_hi; ++y) {
      const int lhs = value(epsilon(x, x) * epsilon(y, y) * epsilon(x, y) * epsilon(y, x));
      eps.add(std::abs(lhs - (x == y ? 1 : -1)));
      const SpinElement sy = s_string(y);
      s_props.add(std::max(distance(commutator(sx, sy), {}),
                           distance(commutator(sx, sigma(PauliLetter::Z, y)), {})));
    }
  }
  rec.exact("epsilon_product_identity", eps);
  rec.exact("s_string_properties", s_props);
}

void crossed_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Recorder rec("crossed", o, out);
  ElementSampler sampler(o.seed + 1);
  const Window sites = Window::interval(-2, 2);
  const HatElement t = t_element();
  Tally assoc, adj_inv, adj_anti, c_star, t_anchor, psi_hom, theta_hat, phi;
  for (int k = 0; k < 100; ++k) {
    const HatElement x = sampler.hat_element(sites, 3, 3);
    const HatElement y = sampler.hat_element(sites, 3, 3);
    const HatElement z = sampler.hat_element(sites, 3, 3);
    assoc.add(distance((x * y) * z, x * (y * z)));
    adj_inv.add(distance(hat_adjoint(hat_adjoint(x)), x));
    adj_anti.add(distance(hat_adjoint(x * y), hat_adjoint(y) * hat_adjoint(x)));
    const double nx = hat_norm(x);
    c_star.add(std::abs(hat_norm(hat_adjoint(x) * x) - nx * nx));
    const SpinElement a = sampler.spin_element(sites, 3, 3);
    const SpinElement b = sampler.spin_element(sites, 3, 3);
    t_anchor.add(distance(t * psi(a), psi(theta_prime(a)) * t));
    psi_hom.add(std::max(distance(psi(a * b), psi(a) * psi(b)),
                         distance(psi(adjoint(a)), hat_adjoint(psi(a)))));
    theta_hat.add(std::max({distance(hat_theta(hat_theta(x)), x),
                            distance(hat_theta(x * y), hat_theta(x) * hat_theta(y)),
                            distance(hat_theta(hat_adjoint(x)), hat_adjoint(hat_theta(x)))}));
    const Z2Function f = phi_inv(x);
    const Z2Function g = phi_inv(y);
    phi.add(std::max(distance(phi_iso(z2_mul(f, g)), phi_iso(f) * phi_iso(g)),
                     distance(phi_iso(z2_invo(f)), hat_adjoint(phi_iso(f)))));
  }
  Tally t_props;
  t_props.add(std::max({distance(t * t, HatElement::identity()), distance(hat_adjoint(t), t),
                        distance(phi_iso({SpinElement::identity(), {}}), HatElement::identity())}));
  rec.exact("associativity", assoc);
  rec.exact("adjoint_involution", adj_inv);
  rec.exact("adjoint_antidistributive", adj_anti);
  rec.approx("c_star_identity", c_star);
  rec.exact("anchor_squares_to_one_and_is_self_adjoint", t_props);
  rec.exact("anchor_implements_theta_prime", t_anchor);
  rec.exact("psi_star_homomorphism", psi_hom);
  rec.exact("extended_theta_automorphism", theta_hat);
  rec.exact("phi_star_homomorphism", phi, "counting-measure convolution");

  Tally bound, cauchy;
  for (int k = 0; k < 200; ++k) {
    const HatElement x = sampler.hat_element(sites, 2, 2);
    const ModuleVector v{sampler.spin_element(sites, 2, 2), sampler.spin_element(sites, 2, 2)};
    const ModuleVector w{sampler.spin_element(sites, 2, 2), sampler.spin_element(sites, 2, 2)};
    bound.add(std::max(0.0, module_norm(t_apply(x, v)) - hat_norm(x) * module_norm(v)));
    cauchy.add(std::max(0.0, norm(module_inner(v, w)) - module_norm(v) * module_norm(w)));
  }
  rec.approx("module_operator_bound", bound, "residual is the largest violation");
  rec.approx("module_cauchy_schwarz", cauchy, "residual is the largest violation");
}

Window centred_window(std::size_t n) {
  const Site lo = -static_cast<Site>(n / 2);
  return Window::interval(lo, lo + static_cast<Site>(n) - 1);
}

void jw_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Recorder rec("jw", o, out);
  ElementSampler sampler(o.seed + 2);
  const std::size_t n = std::clamp<std::size_t>(o.window, 1, 5);
  const Window w = centred_window(n);

  Tally mul, adj, unital, fast, inverse;
  for (int k = 0; k < 20; ++k) {
    const SpinElement a = sampler.spin_element(w, 3, n);
    const SpinElement b = sampler.spin_element(w, 3, n);
    const HatElement ta = vartheta(a, w);
    mul.add(distance(vartheta(a * b, w), ta * vartheta(b, w)));
    adj.add(distance(vartheta(adjoint(a), w), hat_adjoint(ta)));
    fast.add(distance(vartheta_fast(a, w), ta));
    inverse.add(distance(vartheta_inverse(ta, w), a));
  }
  unital.add(distance(vartheta(SpinElement::identity(), w), HatElement::identity()));
  rec.exact("vartheta_multiplicative", mul);
  rec.exact("vartheta_adjoint", adj);
  rec.exact("vartheta_unital", unital);
  rec.exact("vartheta_site_product_agrees", fast);
  rec.exact("vartheta_inverse_roundtrip", inverse);

  // Images of the 4^n Pauli strings are orthonormal for the trace.
  Tally basis;
  std::vector<PauliString> strings{PauliString()};
  for (Site x : w) {
    std::vector<PauliString> next;
    for (const auto& p : strings) {
      for (int l = 0; l < 4; ++l) {
        auto entries = p.entries();
        if (l != 0) entries.emplace_back(x, static_cast<PauliLetter>(l));
        next.push_back(PauliString::from_entries(std::move(entries)));
      }
    }
    strings = std::move(next);
  }
  std::vector<HatElement> images;
  for (const auto& p : strings) images.push_back(vartheta_fast(SpinElement(p), w));
  for (std::size_t i = 0; i < images.size(); ++i) {
    const HatElement star = hat_adjoint(images[i]);
    for (std::size_t j = 0; j < images.size(); ++j) {
      basis.add(std::abs(hat_trace_product(star, images[j]) - (i == j ? 1.0 : 0.0)));
    }
  }
  rec.exact("vartheta_basis_orthonormal", basis);

  Tally units;
  const Window small = centred_window(std::min<std::size_t>(n, 3));
  for (int k = 0; k < 3; ++k) {
    const SpinElement a = sampler.spin_element(small, 4, small.size());
    const UnitExpansion e = expand_in_units(vartheta(a, small), small);
    const UnitCoefficients direct = pauli_to_units(a, small);
    double d = 0.0;
    for (const auto& [g, c] : direct) {
      auto it = e.coefficients.find(g);
      d = std::max(d, std::abs(c - (it == e.coefficients.end() ? Complex(0.0) : it->second)));
    }
    d = std::max(d, direct.size() == e.coefficients.size() ? 0.0 : 1.0);
    units.add(d);
  }
  rec.exact("expand_in_units_matches_change_of_basis", units);

  Tally dictionary, secq, xy;
  for (Site x = o.range_lo; x <= o.range_hi; ++x) {
    for (int kappa = 0; kappa < 4; ++kappa) {
      const auto p = static_cast<PauliLetter>(kappa);
      dictionary.add(distance(psi_sigma(p, x), psi(sigma(p, x))));
    }
  }
  for (Site x : {-2, 0, 1}) {
    for (int len = 1; len <= 3; ++len) {
      for (auto kind : {BilinearKind::hop_asym, BilinearKind::pair_asym, BilinearKind::pair_sym,
                        BilinearKind::hop_sym}) {
        secq.add(distance(psi(bilinear_to_spin(x, len, kind)), bilinear(x, len, kind)));
      }
    }
  }
  for (double gamma : {0.0, 0.5, 1.0}) {
    const XyTransform t = xy_transform(gamma, 0.5, 0);
    xy.add(std::max({std::abs(t.bond_prefactor + 2.0), t.bond_residual, t.field_residual}));
  }
  rec.exact("psi_sigma_dictionary", dictionary);
  rec.exact("bilinear_string_identities", secq);
  rec.approx("xy_bond_prefactor_is_minus_two", xy);

  Tally right, left;
  for (int k = 0; k < 10; ++k) {
    const SpinElement a = sampler.spin_element(w, 3, n);
    const Window larger = w.unite(Window{w.sites().back() + 1, w.sites().back() + 2});
    right.add(consistency_check(a, w, larger) ? 0.0 : 1.0);
  }
  for (Site x : w) {
    const SpinElement lower = sigma_pm(Ladder::lowering, x);
    left.add(consistency_check(lower, Window{x}, Window{x - 1, x}) ? 1.0 : 0.0);
  }
  rec.exact("vartheta_consistent_under_right_extension", right);
  rec.exact("vartheta_changes_under_left_extension", left,
            "sigma_-(x) on {x} and {x-1, x} have different images");

  Tally nonpres;
  for (Site x = -3; x <= 3; ++x) {
    for (Site y = -3; y <= 3; ++y) {
      if (x == y) continue;
      const HatElement ax = annihilator(x);
      const HatElement ay = annihilator(y);
      const HatElement prod = ax * ay;
      double r = distance(ax * ay - ay * ax, 2.0 * prod);
      r = std::max(r, std::abs(hat_norm(prod) - 1.0) > o.tol ? 1.0 : 0.0);
      r = std::max(r, distance(commutator(sigma_pm(Ladder::lowering, x),
                                          sigma_pm(Ladder::lowering, y)), {}));
      const HatElement ay_star = creator(y);
      // [a_x a_y, a_y^*] = a_x, so a_x a_y = 0 would force a_x = 0.
      r = std::max(r, distance(prod * ay_star - ay_star * prod, ax));
      nonpres.add(r);
    }
  }
  rec.exact("nonpreservation_witness", nonpres);
}

void norms_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Recorder rec("norms", o, out);
  ElementSampler sampler(o.seed + 3);
  auto z_string = [](Site n) {
    std::vector<PauliString::Entry> entries;
    for (Site x = 1; x <= n; ++x) entries.emplace_back(x, PauliLetter::Z);
    return SpinElement(PauliString::from_entries(std::move(entries)));
  };
  Tally z_runs;
  for (auto [n, m] : {std::pair<Site, Site>{2, 3}, {3, 5}}) {
    z_runs.add(std::abs(norm(z_string(m) - z_string(n)) - 2.0));
  }
  rec.approx("z_string_difference_norm_is_two", z_runs);

  Tally identity;
  identity.add(std::abs(norm(SpinElement::identity()) - 1.0));
  rec.approx("identity_norm", identity);

  const Window sites = Window::interval(0, 3);
  Tally independence, c_star;
  for (int k = 0; k < 20; ++k) {
    const SpinElement a = sampler.spin_element(sites, 4, 3);
    const double on_support = norm(a);
    const Window larger = support(a).unite(Window{-1, 4, 5});
    independence.add(std::abs(on_support - spectral_norm(represent(a, larger))));
    c_star.add(std::abs(norm(adjoint(a) * a) - on_support * on_support));
  }
  rec.approx("norm_window_independent", independence);
  rec.approx("spin_c_star_identity", c_star);

  Tally fermions;
  for (Site x = -3; x <= 3; ++x) {
    fermions.add(std::abs(hat_norm(annihilator(x)) - 1.0));
    fermions.add(std::abs(hat_norm(annihilator(x) + creator(x)) - 1.0));
  }
  rec.approx("fermion_norms", fermions);
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  if (suite == Suite::car || suite == Suite::all) car_suite(options, out);
  if (suite == Suite::rotations || suite == Suite::all) rotations_suite(options, out);
  if (suite == Suite::crossed || suite == Suite::all) crossed_suite(options, out);
  if (suite == Suite::jw || suite == Suite::all) jw_suite(options, out);
  if (suite == Suite::norms || suite == Suite::all) norms_suite(options, out);
  return out;
}

}  // namespace jwx
