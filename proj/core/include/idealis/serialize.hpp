#pragma once

// JSON forms of every value and parameter type. Naturals are JSON numbers
// when they fit 64 bits and decimal strings otherwise; both forms load.
// Malformed documents raise nlohmann::json exceptions or
// std::invalid_argument; a foreign coding convention raises CodingMismatch.

#include "idealis/baire.hpp"
#include "idealis/countable.hpp"
#include "idealis/e_ideal.hpp"
#include "idealis/fubini.hpp"
#include "idealis/meager.hpp"
#include "idealis/null.hpp"
#include "idealis/space.hpp"
#include "idealis/tri.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace idealis::io {

using json = nlohmann::json;

inline constexpr std::string_view kCreatedBy = "idealis 0.1.0";

json to_json(const Nat& v);
json to_json(const BitWord& w);
json to_json(const BairePrefix& p);
json to_json(const Dyadic& d);
json to_json(const Clopen& c);
json to_json(Tri t);
json to_json(const meager::IntervalPartition& P);
json to_json(const null::CoverFamily& X);
json to_json(const baire::PhiMap& phi);
/// Bit i of the mask is character i.
json mask_to_json(const Mask& m);

Nat nat_from(const json& j);
std::size_t size_from(const json& j);
BitWord bits_from(const json& j);
BairePrefix baire_from(const json& j);
Dyadic dyadic_from(const json& j);
Clopen clopen_from(const json& j);
meager::IntervalPartition partition_from_json(const json& j);
null::CoverFamily covers_from(const json& j);
baire::PhiMap phi_from(const json& j);
Mask mask_from(const json& j);

// Parameter files: {"ideal", "coding", "created-by", "prefix", ...}.
json to_json(const countable::CountableParam& p);
json to_json(const meager::DenseOpenParam& p);
json to_json(const meager::MeagerParam& p);
json to_json(const null::NullParam& p);
json to_json(const e::ETripleParam& p);
json to_json(const e::EParam& p);
json to_json(const baire::KsigmaParam& p);
json to_json(const baire::LaverParam& p);
json to_json(const fubini::ProductParam& p);

countable::CountableParam countable_param_from(const json& j);
meager::DenseOpenParam dense_param_from(const json& j);
meager::MeagerParam meager_param_from(const json& j);
null::NullParam null_param_from(const json& j);
e::ETripleParam etriple_param_from(const json& j);
e::EParam e_param_from(const json& j);
baire::KsigmaParam ksigma_param_from(const json& j);
baire::LaverParam laver_param_from(const json& j);
fubini::ProductParam product_param_from(const json& j);

/// Parses text as JSON; text that is not valid JSON is taken as a string.
json parse_arg(std::string_view text);

}  // namespace idealis::io
