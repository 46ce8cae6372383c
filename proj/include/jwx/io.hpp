#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "jwx/car.hpp"
#include "jwx/crossed.hpp"
#include "jwx/pauli.hpp"

namespace jwx {

using Json = nlohmann::json;

// Spin terms: {"coeff":[re,im],"factors":[{"site":0,"axis":1},...]}.
Json to_json(const SpinElement& a);
SpinElement spin_from_json(const Json& j);

// {"a": <spin terms>, "b": <spin terms>}.
Json to_json(const HatElement& x);
HatElement hat_from_json(const Json& j);

// Fermion terms: {"coeff":[re,im],"factors":[{"site":0,"dagger":true},...]}.
Json to_json(const FermionPolynomial& p);
FermionPolynomial fermion_from_json(const Json& j);

Json to_json(const Window& w);
Window window_from_json(const Json& j);

Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

enum class Picture { spin, fermion };

struct HamiltonianSpec {
  Picture picture = Picture::spin;
  SpinElement spin;
  FermionPolynomial fermion;
  std::optional<Window> window_hint;
};

// {"picture": "spin"|"fermion", "terms": [...], "window_hint": [sites]}.
// Throws ParseError.
HamiltonianSpec parse_spec(const std::string& text);
HamiltonianSpec spec_from_json(const Json& j);
Json to_json(const HamiltonianSpec& spec);
// One term per line in the canonical text form.
std::string to_text(const HamiltonianSpec& spec);

}  // namespace jwx
