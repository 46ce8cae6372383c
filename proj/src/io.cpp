#include "jwx/io.hpp"

#include "jwx/errors.hpp"
#include "jwx/spin_ops.hpp"

namespace jwx {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  return v;
}

Site site_from_json(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("site must be an integer");
  return j.get<Site>();
}

}  // namespace

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("coefficient must be a number or [re, im]");
}

Json to_json(const SpinElement& a) {
  Json terms = Json::array();
  for (const auto& [p, c] : a.terms()) {
    Json factors = Json::array();
    for (const auto& [x, letter] : p.entries()) {
      factors.push_back({{"site", x}, {"axis", static_cast<int>(letter)}});
    }
    terms.push_back({{"coeff", complex_to_json(c)}, {"factors", factors}});
  }
  return terms;
}

SpinElement spin_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("spin terms must be an array");
  SpinElement out;
  for (const Json& term : j) {
    SpinElement product(complex_from_json(field(term, "coeff")));
    for (const Json& f : array_field(term, "factors")) {
      const Json& axis = field(f, "axis");
      if (!axis.is_number_integer() || axis.get<int>() < 0 || axis.get<int>() > 3) {
        throw ParseError("axis must be 0, 1, 2 or 3");
      }
      product = product * sigma(static_cast<PauliLetter>(axis.get<int>()),
                                site_from_json(field(f, "site")));
    }
    out += product;
  }
  return out;
}

Json to_json(const HatElement& x) { return {{"a", to_json(x.a)}, {"b", to_json(x.b)}}; }

HatElement hat_from_json(const Json& j) {
  return {spin_from_json(field(j, "a")), spin_from_json(field(j, "b"))};
}

Json to_json(const FermionPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json factors = Json::array();
    for (const auto& op : m) factors.push_back({{"site", op.site}, {"dagger", op.dagger}});
    terms.push_back({{"coeff", complex_to_json(c)}, {"factors", factors}});
  }
  return terms;
}

FermionPolynomial fermion_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("fermion terms must be an array");
  FermionPolynomial out;
  for (const Json& term : j) {
    FermionMonomial m;
    for (const Json& f : array_field(term, "factors")) {
      const Json& dagger = field(f, "dagger");
      if (!dagger.is_boolean()) throw ParseError("dagger must be a boolean");
      m.push_back({site_from_json(field(f, "site")), dagger.get<bool>()});
    }
    out.add_term(m, complex_from_json(field(term, "coeff")));
  }
  return out;
}

Json to_json(const Window& w) { return w.sites(); }

Window window_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("window must be an array of sites");
  std::vector<Site> sites;
  for (const Json& s : j) sites.push_back(site_from_json(s));
  return Window(std::move(sites));
}

HamiltonianSpec spec_from_json(const Json& j) {
  HamiltonianSpec spec;
  const Json& picture = field(j, "picture");
  if (picture == "spin") {
    spec.picture = Picture::spin;
    spec.spin = spin_from_json(array_field(j, "terms"));
  } else if (picture == "fermion") {
    spec.picture = Picture::fermion;
    spec.fermion = fermion_from_json(array_field(j, "terms"));
  } else {
    throw ParseError("picture must be \"spin\" or \"fermion\"");
  }
  if (j.contains("window_hint") && !j.at("window_hint").is_null()) {
    spec.window_hint = window_from_json(j.at("window_hint"));
  }
  return spec;
}

HamiltonianSpec parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return spec_from_json(j);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const HamiltonianSpec& spec) {
  Json j;
  if (spec.picture == Picture::spin) {
    j["picture"] = "spin";
    j["terms"] = to_json(spec.spin);
  } else {
    j["picture"] = "fermion";
    j["terms"] = to_json(spec.fermion);
  }
  if (spec.window_hint) j["window_hint"] = to_json(*spec.window_hint);
  return j;
}

std::string to_text(const HamiltonianSpec& spec) {
  std::string out;
  if (spec.picture == Picture::spin) {
    for (const auto& [p, c] : spec.spin.terms()) out += term_to_string(p, c) + '\n';
  } else {
    for (const auto& [m, c] : spec.fermion.terms()) {
      out += format_complex(c) + " * " + to_string(m) + '\n';
    }
  }
  return out;
}

}  // namespace jwx
