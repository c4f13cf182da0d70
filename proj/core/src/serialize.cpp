#include "idealis/serialize.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace idealis::io {

namespace {

json header(std::string_view ideal) {
  return {{"ideal", ideal}, {"coding", kCodingConvention}, {"created-by", kCreatedBy}};
}

void check_header(const json& j, std::string_view ideal) {
  if (!j.is_object()) throw std::invalid_argument("parameter file must be an object");
  const std::string coding = j.at("coding").get<std::string>();
  if (coding != kCodingConvention) {
    throw Error(ErrorKind::CodingMismatch, "coding '" + coding + "' is not " + std::string(kCodingConvention));
  }
  if (j.at("ideal").get<std::string>() != ideal) {
    throw std::invalid_argument("expected a parameter for '" + std::string(ideal) + "'");
  }
}

}  // namespace

json to_json(const Nat& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

json to_json(const BitWord& w) { return w.str(); }

json to_json(const BairePrefix& p) {
  json out = json::array();
  for (const auto& v : p.entries()) out.push_back(to_json(v));
  return out;
}

json to_json(const Dyadic& d) { return {{"num", to_json(d.numerator())}, {"exp", d.exponent()}}; }

json to_json(const Clopen& c) {
  json words = json::array();
  for (const auto& w : c.words()) words.push_back(w.str());
  return {{"level", c.level()}, {"words", words}};
}

json to_json(Tri t) { return std::string(to_string(t)); }

json to_json(const meager::IntervalPartition& P) {
  json out = json::array();
  for (const auto& I : P.intervals) out.push_back({I.begin, I.end});
  return out;
}

json to_json(const null::CoverFamily& X) {
  json covers = json::array();
  for (const auto& cover : X.covers) {
    json row = json::array();
    for (const auto& c : cover) row.push_back(to_json(c));
    covers.push_back(row);
  }
  return {{"covers", covers}};
}

json to_json(const baire::PhiMap& phi) {
  json out = json::array();
  for (const auto& [seq, val] : phi) out.push_back({{"seq", to_json(BairePrefix(seq))}, {"val", to_json(val)}});
  return out;
}

json mask_to_json(const Mask& m) {
  std::string s(m.size(), '0');
  for (std::size_t i = 0; i < m.size(); ++i) s[i] = m[i] ? '1' : '0';
  return s;
}

Nat nat_from(const json& j) {
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw std::invalid_argument("natural numbers must be non-negative");
    return Nat(v);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("not a decimal natural: " + s);
    }
    return Nat(s);
  }
  throw std::invalid_argument("expected a natural number");
}

std::size_t size_from(const json& j) {
  const auto v = to_size(nat_from(j));
  if (!v) throw std::invalid_argument("value out of machine range");
  return *v;
}

BitWord bits_from(const json& j) { return BitWord::parse(j.get<std::string>()); }

BairePrefix baire_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of naturals");
  BairePrefix p;
  for (const auto& v : j) p.push_back(nat_from(v));
  return p;
}

Dyadic dyadic_from(const json& j) { return {nat_from(j.at("num")), j.at("exp").get<std::uint64_t>()}; }

Clopen clopen_from(const json& j) {
  const unsigned level = j.at("level").get<unsigned>();
  check_level(level);
  std::vector<BitWord> words;
  for (const auto& w : j.at("words")) {
    words.push_back(bits_from(w));
    if (words.back().size() != level) throw std::invalid_argument("clopen word length must equal level");
  }
  return canonicalize(level, words);
}

meager::IntervalPartition partition_from_json(const json& j) {
  meager::IntervalPartition P;
  std::size_t expect = 0;
  for (const auto& I : j) {
    const meager::Interval iv{I.at(0).get<std::size_t>(), I.at(1).get<std::size_t>()};
    if (iv.begin != expect || iv.end <= iv.begin) throw std::invalid_argument("intervals must be consecutive and nonempty");
    expect = iv.end;
    P.intervals.push_back(iv);
  }
  return P;
}

null::CoverFamily covers_from(const json& j) {
  null::CoverFamily X;
  for (const auto& row : j.at("covers")) {
    auto& cover = X.covers.emplace_back();
    for (const auto& c : row) cover.push_back(clopen_from(c));
  }
  return X;
}

baire::PhiMap phi_from(const json& j) {
  baire::PhiMap phi;
  for (const auto& entry : j) phi[baire_from(entry.at("seq")).entries()] = nat_from(entry.at("val"));
  return phi;
}

Mask mask_from(const json& j) {
  const auto s = j.get<std::string>();
  Mask m(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("bitset strings use only 0 and 1");
    m[i] = s[i] == '1';
  }
  return m;
}

json to_json(const countable::CountableParam& p) {
  json j = header("countable");
  j["prefix"] = to_json(p.prefix);
  j["rows"] = p.rows;
  j["depth"] = p.depth;
  return j;
}

json to_json(const meager::DenseOpenParam& p) {
  json j = header("dense-open");
  j["prefix"] = to_json(p.prefix);
  return j;
}

json to_json(const meager::MeagerParam& p) {
  json j = header("meager");
  j["prefix"] = to_json(p.prefix);
  j["rows"] = p.rows;
  j["n_max"] = p.n_max;
  return j;
}

json to_json(const null::NullParam& p) {
  json j = header("null");
  j["prefix"] = to_json(p.prefix);
  j["witness"] = p.witness;
  j["exhausted"] = p.exhausted;
  return j;
}

json to_json(const e::ETripleParam& p) {
  json j = header("e-open");
  j["prefix"] = to_json(e::pack_triple(p));
  return j;
}

json to_json(const e::EParam& p) {
  json j = header("e");
  j["prefix"] = to_json(p.prefix);
  j["rows"] = p.rows;
  j["n_max"] = p.n_max;
  return j;
}

json to_json(const baire::KsigmaParam& p) {
  json j = header("ksigma");
  j["prefix"] = to_json(p.bound);
  return j;
}

json to_json(const baire::LaverParam& p) {
  json cells = json::array();
  for (const auto& [code, val] : p.cells) cells.push_back({to_json(code), to_json(val)});
  json j = header("laver");
  j["prefix"] = {{"length", to_json(p.length)}, {"nonzero", cells}};
  j["exhausted"] = p.exhausted;
  return j;
}

json to_json(const fubini::ProductParam& p) {
  json j = header("fubini");
  j["variant"] = fubini::to_string(p.variant);
  j["identification"] = fubini::kIdentification;
  j["null"] = to_json(p.null_part);
  j["meager"] = to_json(p.meager_part);
  return j;
}

countable::CountableParam countable_param_from(const json& j) {
  check_header(j, "countable");
  return {baire_from(j.at("prefix")), size_from(j.at("rows")), size_from(j.at("depth"))};
}

meager::DenseOpenParam dense_param_from(const json& j) {
  check_header(j, "dense-open");
  return {baire_from(j.at("prefix"))};
}

meager::MeagerParam meager_param_from(const json& j) {
  check_header(j, "meager");
  return {baire_from(j.at("prefix")), size_from(j.at("rows")), size_from(j.at("n_max"))};
}

null::NullParam null_param_from(const json& j) {
  check_header(j, "null");
  null::NullParam p;
  p.prefix = baire_from(j.at("prefix"));
  for (const auto& k : j.value("witness", json::array())) p.witness.push_back(size_from(k));
  p.exhausted = j.value("exhausted", false);
  return p;
}

e::ETripleParam etriple_param_from(const json& j) {
  check_header(j, "e-open");
  return e::decode_triple(baire_from(j.at("prefix")));
}

e::EParam e_param_from(const json& j) {
  check_header(j, "e");
  return {baire_from(j.at("prefix")), size_from(j.at("rows")), size_from(j.at("n_max"))};
}

baire::KsigmaParam ksigma_param_from(const json& j) {
  check_header(j, "ksigma");
  return {baire_from(j.at("prefix"))};
}

baire::LaverParam laver_param_from(const json& j) {
  check_header(j, "laver");
  baire::LaverParam p;
  const json& prefix = j.at("prefix");
  if (prefix.is_array()) {
    // Dense form: a plain prefix of Φ values.
    p.length = prefix.size();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      Nat v = nat_from(prefix[i]);
      if (v != 0) p.cells[Nat(i)] = std::move(v);
    }
  } else {
    p.length = nat_from(prefix.at("length"));
    for (const auto& cell : prefix.at("nonzero")) {
      Nat code = nat_from(cell.at(0));
      if (code >= p.length) throw std::invalid_argument("laver cell beyond the declared length");
      Nat v = nat_from(cell.at(1));
      if (v != 0) p.cells[std::move(code)] = std::move(v);
    }
  }
  p.exhausted = j.value("exhausted", false);
  return p;
}

fubini::ProductParam product_param_from(const json& j) {
  check_header(j, "fubini");
  if (j.value("identification", std::string(fubini::kIdentification)) != fubini::kIdentification) {
    throw Error(ErrorKind::CodingMismatch, "unsupported plane identification");
  }
  return {fubini::parse_variant(j.at("variant").get<std::string>()), null_param_from(j.at("null")),
          meager_param_from(j.at("meager"))};
}

json parse_arg(std::string_view text) {
  auto parsed = json::parse(text, nullptr, false);
  if (!parsed.is_discarded()) return parsed;
  return std::string(text);
}

}  // namespace idealis::io
