// idealis: one JSON-in, JSON-out entry point over the library.
//
// Exit codes: 0 with the result document; 2 with {"error", "detail"} on a
// contract error from the library; 1 on malformed input; 3 when `check`
// finds a failing property.

#include "idealis/baire.hpp"
#include "idealis/countable.hpp"
#include "idealis/e_ideal.hpp"
#include "idealis/enumeration.hpp"
#include "idealis/error.hpp"
#include "idealis/fubini.hpp"
#include "idealis/meager.hpp"
#include "idealis/null.hpp"
#include "idealis/serialize.hpp"
#include "idealis/space.hpp"
#include "idealis/suites.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdint>
#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using namespace idealis;
using io::json;
namespace en = idealis::enumeration;

constexpr int kMalformed = 1;
constexpr int kContract = 2;
constexpr int kCheckFailed = 3;

// A JSON argument: inline text, or @path for a file.
json load(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw std::invalid_argument("cannot read " + text.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    return json::parse(buf.str());
  }
  return io::parse_arg(text);
}

Nat nat(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("expected a natural number, got '" + text + "'");
  }
  return Nat(text);
}

std::size_t size(const std::string& text) {
  const Nat v = nat(text);
  if (v > Nat(std::numeric_limits<std::uint32_t>::max())) throw std::invalid_argument("'" + text + "' is too large");
  return v.convert_to<std::size_t>();
}

// Bit words stay raw text: "10" must not become the number ten.
BitWord bits(const std::string& text) {
  if (text == "\"\"" || text == "-") return BitWord{};
  return BitWord::parse(text);
}

json tri(Tri t) { return {{"result", io::to_json(t)}}; }

std::vector<BairePrefix> baire_list(const json& j) {
  std::vector<BairePrefix> out;
  for (const auto& p : j) out.push_back(io::baire_from(p));
  return out;
}

std::vector<Clopen> clopen_list(const json& j) {
  std::vector<Clopen> out;
  for (const auto& c : j) out.push_back(io::clopen_from(c));
  return out;
}

std::vector<std::size_t> size_list(const json& j) {
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(io::size_from(v));
  return out;
}

// One leaf subcommand with string-valued options.
class Leaf {
 public:
  Leaf(CLI::App* parent, const std::string& name, const std::string& help)
      : app_(parent->add_subcommand(name, help)) {}

  Leaf& req(const std::string& name, const std::string& help) {
    app_->add_option("--" + name, values_[name], help)->required();
    return *this;
  }
  Leaf& opt(const std::string& name, const std::string& help) {
    app_->add_option("--" + name, values_[name], help);
    return *this;
  }
  bool has(const std::string& name) const { return app_->count("--" + name) > 0; }
  const std::string& get(const std::string& name) const { return values_.at(name); }
  json js(const std::string& name) const { return load(get(name)); }
  std::size_t sz(const std::string& name) const { return size(get(name)); }
  std::size_t sz(const std::string& name, std::size_t fallback) const { return has(name) ? sz(name) : fallback; }

  void run(std::function<json(const Leaf&)> fn, json& out) {
    app_->callback([this, fn = std::move(fn), &out] { out = fn(*this); });
  }

 private:
  CLI::App* app_;
  std::map<std::string, std::string> values_;
};

struct Cli {
  CLI::App app{"Universal sets for σ-ideals on 2^ω and ω^ω, evaluated at finite stages"};
  std::deque<Leaf> leaves;
  json out;
  bool check_failed = false;

  CLI::App* group(const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  }
  Leaf& leaf(CLI::App* parent, const std::string& name, const std::string& help) {
    return leaves.emplace_back(parent, name, help);
  }
};

void add_space(Cli& cli) {
  auto* g = cli.group("space", "clopen algebra and codings");
  cli.leaf(g, "measure", "exact measure of a clopen set")
      .req("clopen", "clopen set JSON")
      .run([](const Leaf& l) { return io::to_json(measure(io::clopen_from(l.js("clopen")))); }, cli.out);
  cli.leaf(g, "canon", "canonical form of a level and word list")
      .req("level", "level of the words")
      .req("words", "JSON list of bit words")
      .run(
          [](const Leaf& l) {
            std::vector<BitWord> ws;
            for (const auto& w : l.js("words")) ws.push_back(io::bits_from(w));
            check_level(l.sz("level"));
            return io::to_json(canonicalize(static_cast<unsigned>(l.sz("level")), ws));
          },
          cli.out);
  cli.leaf(g, "pair", "pair(m, n), or unpair(k) with --k")
      .opt("m", "first coordinate")
      .opt("n", "second coordinate")
      .opt("k", "code to unpair")
      .run(
          [](const Leaf& l) -> json {
            if (l.has("k")) {
              const auto [m, n] = unpair(nat(l.get("k")));
              return {{"m", io::to_json(m)}, {"n", io::to_json(n)}};
            }
            if (!l.has("m") || !l.has("n")) throw std::invalid_argument("pair needs --m and --n, or --k");
            return {{"k", io::to_json(pair(nat(l.get("m")), nat(l.get("n"))))}};
          },
          cli.out);
  cli.leaf(g, "seq", "seq_code of --seq, or seq_decode of --code")
      .opt("seq", "JSON list of naturals")
      .opt("code", "sequence number")
      .run(
          [](const Leaf& l) -> json {
            if (l.has("code")) return {{"seq", io::to_json(BairePrefix(seq_decode(nat(l.get("code")))))}};
            if (!l.has("seq")) throw std::invalid_argument("seq needs --seq or --code");
            return {{"code", io::to_json(seq_code(io::baire_from(l.js("seq")).entries()))}};
          },
          cli.out);
}

en::BaseSpace base_space(const Leaf& l) {
  const std::string s = l.has("space") ? l.get("space") : "cantor";
  if (s == "cantor") return en::BaseSpace::Cantor;
  if (s == "baire") return en::BaseSpace::Baire;
  throw std::invalid_argument("space is cantor or baire");
}

void add_enum(Cli& cli) {
  auto* g = cli.group("enum", "canonical enumerations");
  cli.leaf(g, "clopen", "C^n_k, or its rank with --clopen")
      .req("n", "measure exponent: sets of measure < 2^-n")
      .opt("k", "index")
      .opt("clopen", "clopen set to rank")
      .run(
          [](const Leaf& l) -> json {
            const auto n = static_cast<unsigned>(l.sz("n"));
            if (l.has("clopen")) return {{"k", io::to_json(en::clopen_rank(n, io::clopen_from(l.js("clopen"))))}};
            if (!l.has("k")) throw std::invalid_argument("clopen needs --k or --clopen");
            return io::to_json(en::clopen_enum(n, nat(l.get("k"))));
          },
          cli.out);
  cli.leaf(g, "basic", "basic open set U_k")
      .req("k", "index")
      .opt("space", "cantor (default) or baire")
      .run(
          [](const Leaf& l) -> json {
            const Nat k = nat(l.get("k"));
            if (base_space(l) == en::BaseSpace::Cantor) return io::to_json(en::basic_open_cantor(k));
            const auto stem = en::basic_open_baire(k);
            return {{"empty", !stem}, {"stem", stem ? io::to_json(*stem) : json::array()}};
          },
          cli.out);
  cli.leaf(g, "kprime", "index of the (m+1)-th nonempty basic subset of U_n")
      .req("n", "basic open index")
      .req("m", "position")
      .opt("space", "cantor (default) or baire")
      .run(
          [](const Leaf& l) -> json {
            return {{"index", io::to_json(en::kprime(nat(l.get("n")), nat(l.get("m")), base_space(l)))}};
          },
          cli.out);
  cli.leaf(g, "kcomb", "r-th t-subset of {0..N-1}, or its rank with --subset")
      .req("N", "ground set size")
      .opt("t", "subset size")
      .opt("r", "rank")
      .opt("subset", "JSON list to rank")
      .run(
          [](const Leaf& l) -> json {
            const std::size_t N = l.sz("N");
            if (l.has("subset")) {
              const auto s = size_list(l.js("subset"));
              for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] >= N || (i > 0 && s[i] <= s[i - 1])) {
                  throw std::invalid_argument("subset must be strictly increasing and below N");
                }
              }
              return {{"rank", io::to_json(en::kcomb_rank(N, s))}};
            }
            if (!l.has("t") || !l.has("r")) throw std::invalid_argument("kcomb needs --t and --r, or --subset");
            return {{"subset", en::kcomb_unrank(N, l.sz("t"), nat(l.get("r")))}};
          },
          cli.out);
}

void add_countable(Cli& cli) {
  auto* g = cli.group("countable", "countable subsets of ω^ω");
  cli.leaf(g, "encode", "parameter listing the points as rows")
      .req("points", "JSON list of Baire prefixes")
      .req("depth", "coordinates kept per point")
      .run(
          [](const Leaf& l) {
            return io::to_json(countable::countable_encode(baire_list(l.js("points")), l.sz("depth")));
          },
          cli.out);
  cli.leaf(g, "eval", "stage membership of x")
      .req("param", "countable parameter")
      .req("x", "Baire prefix")
      .opt("rows", "rows to compare (default: all)")
      .opt("depth", "coordinates to compare (default: min(|x|, parameter depth))")
      .run(
          [](const Leaf& l) {
            const auto y = io::countable_param_from(l.js("param"));
            const auto x = io::baire_from(l.js("x"));
            return tri(countable::countable_member(y, x, l.sz("rows", y.rows),
                                                   l.sz("depth", std::min(x.size(), y.depth))));
          },
          cli.out);
}

void add_meager(Cli& cli) {
  auto* g = cli.group("meager", "meager subsets of 2^ω");
  cli.leaf(g, "encode", "parameter from dense open sets")
      .req("dense", "JSON list of clopen sets dense up to the stage")
      .req("n-max", "stage")
      .run(
          [](const Leaf& l) {
            return io::to_json(meager::meager_encode(clopen_list(l.js("dense")), l.sz("n-max")));
          },
          cli.out);
  cli.leaf(g, "eval", "stage membership of z in the meager section")
      .req("param", "meager parameter")
      .req("z", "bit word")
      .opt("rows", "rows (default: all)")
      .opt("n-max", "stage (default: the parameter's)")
      .run(
          [](const Leaf& l) {
            const auto p = io::meager_param_from(l.js("param"));
            return tri(meager::meager_eval(p, bits(l.get("z")), l.sz("rows", p.rows), l.sz("n-max", p.n_max)));
          },
          cli.out);
  cli.leaf(g, "fxp", "z against the block set F_{x,P} with P from y")
      .req("x", "bit word")
      .req("y", "Baire prefix defining the partition")
      .req("z", "bit word")
      .opt("from", "first block (default 0)")
      .run(
          [](const Leaf& l) {
            const auto P = meager::partition_from(io::baire_from(l.js("y")));
            return tri(meager::fxp_eval(bits(l.get("x")), P, bits(l.get("z")), l.sz("from", 0)));
          },
          cli.out);
  cli.leaf(g, "partition", "interval partition from y")
      .req("y", "Baire prefix")
      .run([](const Leaf& l) { return io::to_json(meager::partition_from(io::baire_from(l.js("y")))); }, cli.out);
}

void add_null(Cli& cli) {
  auto* g = cli.group("null", "null subsets of 2^ω");
  cli.leaf(g, "encode", "parameter from a cover family")
      .req("covers", "{\"covers\": [[clopen, ...], ...]}")
      .run([](const Leaf& l) { return io::to_json(null::null_encode(io::covers_from(l.js("covers")))); }, cli.out);
  cli.leaf(g, "eval", "stage membership of z")
      .req("param", "null parameter")
      .req("z", "bit word")
      .opt("N", "last row (default: last witnessed row)")
      .opt("bounds", "JSON list of stage bounds K_0..K_N")
      .run(
          [](const Leaf& l) {
            const auto f = io::null_param_from(l.js("param"));
            const std::size_t fallback = f.witness.empty() ? 0 : f.witness.size() - 1;
            const std::size_t N = l.sz("N", fallback);
            if (l.has("bounds")) return tri(null::null_member(f, bits(l.get("z")), N, size_list(l.js("bounds"))));
            return tri(null::null_member(f, bits(l.get("z")), N));
          },
          cli.out);
  cli.leaf(g, "stage", "union of the guarded terms n < k <= K")
      .req("param", "null parameter")
      .req("n", "row")
      .req("K", "stage bound")
      .run(
          [](const Leaf& l) {
            return io::to_json(null::null_stage(io::null_param_from(l.js("param")), l.sz("n"), l.sz("K")));
          },
          cli.out);
  cli.leaf(g, "term", "guarded term k of row n")
      .req("param", "null parameter")
      .req("n", "row")
      .req("k", "term index > n")
      .run(
          [](const Leaf& l) {
            return io::to_json(null::null_term(io::null_param_from(l.js("param")), l.sz("n"), l.sz("k")));
          },
          cli.out);
}

// An e-open parameter, or row --row of an e parameter.
e::ETripleParam triple(const Leaf& l) {
  const json j = l.js("param");
  if (j.is_object() && j.value("ideal", "") == "e") return e::e_row(io::e_param_from(j), l.sz("row", 0));
  return io::etriple_param_from(j);
}

void add_e(Cli& cli) {
  auto* g = cli.group("e", "the ideal generated by closed null sets");
  cli.leaf(g, "encode", "parameter from open sets of nearly full measure")
      .req("opens", "JSON list of clopen sets")
      .req("m-max", "stage")
      .opt("single", "emit the e-open parameter of the one open set (true/false)")
      .run(
          [](const Leaf& l) {
            const auto opens = clopen_list(l.js("opens"));
            if (l.has("single") && l.get("single") == "true") {
              if (opens.size() != 1) throw std::invalid_argument("--single needs exactly one open set");
              return io::to_json(e::e_open_encode(opens[0], l.sz("m-max")));
            }
            return io::to_json(e::e_encode(opens, l.sz("m-max")));
          },
          cli.out);
  cli.leaf(g, "eval", "stage membership of z in the E section")
      .req("param", "e parameter")
      .req("z", "bit word")
      .opt("rows", "rows (default: all)")
      .opt("n-max", "stage (default: the parameter's)")
      .run(
          [](const Leaf& l) {
            const auto p = io::e_param_from(l.js("param"));
            return tri(e::e_fsigma_member(p, bits(l.get("z")), l.sz("rows", p.rows), l.sz("n-max", p.n_max)));
          },
          cli.out);
  cli.leaf(g, "term", "term n with its shape")
      .req("param", "e-open parameter, or e parameter with --row")
      .req("n", "term index")
      .opt("row", "row of an e parameter (default 0)")
      .run(
          [](const Leaf& l) -> json {
            const auto p = triple(l);
            const std::size_t n = l.sz("n");
            const auto s = e::e_term_shape(p, n);
            return {{"m", s.m}, {"L", s.L}, {"t", s.t}, {"l", io::to_json(s.l)}, {"term", io::to_json(e::e_term(p, n))}};
          },
          cli.out);
  cli.leaf(g, "stage", "union of the terms n <= n-max")
      .req("param", "e-open parameter, or e parameter with --row")
      .req("n-max", "stage")
      .opt("row", "row of an e parameter (default 0)")
      .run([](const Leaf& l) { return io::to_json(e::e_open_stage(triple(l), l.sz("n-max"))); }, cli.out);
}

void add_baire(Cli& cli) {
  auto* k = cli.group("ksigma", "σ-compact subsets of ω^ω");
  cli.leaf(k, "encode", "pointwise bound of the points")
      .req("points", "JSON list of equal-length Baire prefixes")
      .opt("length", "bound length (required for an empty list)")
      .run(
          [](const Leaf& l) {
            std::optional<std::size_t> length;
            if (l.has("length")) length = l.sz("length");
            return io::to_json(baire::ksigma_encode(baire_list(l.js("points")), length));
          },
          cli.out);
  cli.leaf(k, "eval", "x(m) <= y(m) for every n < m < L")
      .req("param", "ksigma parameter")
      .req("x", "Baire prefix")
      .req("n", "start")
      .run(
          [](const Leaf& l) -> json {
            return {{"dominated", baire::dominated_from(io::ksigma_param_from(l.js("param")), io::baire_from(l.js("x")),
                                                        l.sz("n"))}};
          },
          cli.out);
  cli.leaf(k, "diagonal", "a point escaping the bound")
      .req("param", "ksigma parameter")
      .run(
          [](const Leaf& l) -> json {
            return {{"g", io::to_json(baire::ksigma_diagonal(io::ksigma_param_from(l.js("param"))))}};
          },
          cli.out);

  auto* v = cli.group("laver", "the Laver ideal on ω^ω");
  cli.leaf(v, "encode", "parameter from a finite map Φ")
      .req("phi", "JSON list of {\"seq\": [...], \"val\": v}")
      .run([](const Leaf& l) { return io::to_json(baire::laver_encode(io::phi_from(l.js("phi")))); }, cli.out);
  cli.leaf(v, "eval", "witness count |{n0 <= n < n1 : f(n) < Φ(f|n)}|")
      .req("param", "laver parameter")
      .req("f", "Baire prefix")
      .opt("n0", "window start (default 0)")
      .opt("n1", "window end (default |f|)")
      .run(
          [](const Leaf& l) -> json {
            const auto f = io::baire_from(l.js("f"));
            return {{"witnesses", baire::laver_witnesses(io::laver_param_from(l.js("param")), f, l.sz("n0", 0),
                                                         l.sz("n1", f.size()))}};
          },
          cli.out);
}

// In N⊗M the sections are judged meager, in M⊗N null.
fubini::Proxy proxy(const Leaf& l) {
  fubini::Proxy p;
  std::string kind = "null";
  if (l.has("proxy")) kind = l.get("proxy");
  else if (l.has("variant") && fubini::parse_variant(l.get("variant")) == fubini::Variant::NullMeager) kind = "nwd";
  if (kind == "null") {
    p.kind = fubini::Proxy::Kind::Null;
    p.epsilon = l.has("epsilon") ? io::dyadic_from(l.js("epsilon")) : Dyadic(1, 1);
  } else if (kind == "nwd") {
    p.kind = fubini::Proxy::Kind::Nwd;
    p.split = l.sz("split", 1);
  } else {
    throw std::invalid_argument("proxy is null or nwd");
  }
  return p;
}

void add_fubini(Cli& cli) {
  auto* g = cli.group("fubini", "the products N⊗M and M⊗N");
  cli.leaf(g, "encode", "product parameter")
      .req("variant", "nm or mn")
      .req("covers", "cover family for the null component")
      .req("dense", "JSON list of dense clopen sets for the meager component")
      .req("n-max", "meager stage")
      .run(
          [](const Leaf& l) {
            fubini::ProductInput in{io::covers_from(l.js("covers")), clopen_list(l.js("dense")), l.sz("n-max")};
            return io::to_json(fubini::product_encode(fubini::parse_variant(l.get("variant")), in));
          },
          cli.out);
  cli.leaf(g, "eval", "stage membership of (y, z)")
      .req("param", "fubini parameter")
      .req("y", "bit word, first coordinate")
      .req("z", "bit word, second coordinate")
      .opt("variant", "nm or mn; must match the parameter")
      .opt("null-levels", "last null row")
      .opt("null-bounds", "JSON list of null stage bounds")
      .opt("meager-rows", "meager rows")
      .opt("meager-n-max", "meager stage")
      .run(
          [](const Leaf& l) {
            const auto pp = io::product_param_from(l.js("param"));
            if (l.has("variant") && fubini::parse_variant(l.get("variant")) != pp.variant) {
              throw std::invalid_argument("--variant does not match the parameter");
            }
            fubini::Stages st;
            if (l.has("null-levels")) st.null_levels = l.sz("null-levels");
            if (l.has("null-bounds")) st.null_bounds = size_list(l.js("null-bounds"));
            if (l.has("meager-rows")) st.meager_rows = l.sz("meager-rows");
            if (l.has("meager-n-max")) st.meager_n_max = l.sz("meager-n-max");
            return tri(fubini::product_member(pp, {bits(l.get("y")), bits(l.get("z"))}, st));
          },
          cli.out);
  cli.leaf(g, "diagnose", "proxy section test on a 2^d x 2^d grid")
      .req("B", "row-major bitset of 4^d bits")
      .req("d", "grid level")
      .opt("variant", "nm (sections judged by the nwd proxy) or mn (null proxy)")
      .opt("proxy", "null or nwd (overrides the variant)")
      .opt("epsilon", "null proxy: flag sections of density >= epsilon, as {\"num\", \"exp\"}")
      .opt("split", "nwd proxy: flag sections meeting every cylinder of this level")
      .run(
          [](const Leaf& l) -> json {
            const auto d = static_cast<unsigned>(l.sz("d"));
            const auto p = proxy(l);
            const std::string& b = l.get("B");
            const Mask B = io::mask_from(b.starts_with('@') ? load(b) : json(b));
            const Mask flagged = fubini::section_diagnostic(B, d, p);
            json desc = p.kind == fubini::Proxy::Kind::Null
                            ? json{{"name", "null-density"}, {"epsilon", io::to_json(p.epsilon)}}
                            : json{{"name", "nwd-split"}, {"split", p.split}};
            return {{"proxy", desc},
                    {"flagged", io::mask_to_json(flagged)},
                    {"flagged_count", flagged.count()},
                    {"note", "finite-level proxy, not a decision of the true ideal"}};
          },
          cli.out);
}

void add_check(Cli& cli) {
  auto& l = cli.leaf(&cli.app, "check", "run a seeded property suite");
  l.opt("suite", "suite name or all (default all)").opt("seed", "seed (default 7)");
  l.run(
      [&cli](const Leaf& l) -> json {
        const std::string suite = l.has("suite") ? l.get("suite") : "all";
        const std::uint64_t seed = l.has("seed") ? nat(l.get("seed")).convert_to<std::uint64_t>() : 7;
        json suites = json::array();
        bool ok = true;
        for (const auto& r : verify::run_check(suite, seed)) {
          json props = json::array();
          for (const auto& p : r.properties) {
            json j{{"name", p.name}, {"passed", p.passed}, {"failed", p.failed}, {"ok", p.ok()}};
            if (!p.first_failure.empty()) j["first_failure"] = p.first_failure;
            props.push_back(std::move(j));
          }
          ok = ok && r.ok();
          suites.push_back({{"suite", r.suite}, {"ok", r.ok()}, {"properties", std::move(props)}});
        }
        cli.check_failed = !ok;
        return {{"seed", seed}, {"ok", ok}, {"suites", std::move(suites)}};
      },
      cli.out);
}

int emit_error(std::string_view name, std::string_view detail, int code, const std::optional<Nat>& value = {}) {
  json j{{"error", name}, {"detail", detail}};
  if (value) j["value"] = io::to_json(*value);
  std::cout << j.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  cli.app.require_subcommand(1);
  add_space(cli);
  add_enum(cli);
  add_countable(cli);
  add_meager(cli);
  add_null(cli);
  add_e(cli);
  add_baire(cli);
  add_fubini(cli);
  add_check(cli);
  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return cli.app.exit(e);
    return emit_error("MalformedInput", e.what(), kMalformed);
  } catch (const Error& e) {
    return emit_error(e.name(), e.what(), kContract, e.value());
  } catch (const std::exception& e) {
    return emit_error("MalformedInput", e.what(), kMalformed);
  }
  std::cout << cli.out.dump() << '\n';
  return cli.check_failed ? kCheckFailed : 0;
}
