#include "b3q/json_io.hpp"

namespace b3q {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(Errc::BadEncoding, msg); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational as a string or integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t count_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
    bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Json index_list(const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (auto i : idx) a.push_back(i);
  return a;
}

}  // namespace

ContextPtr parse_context(const Json& j) {
  if (j.is_null()) return FieldContext::rationals();
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "Q" || s == "rationals") return FieldContext::rationals();
    if (s == "gaussian" || s == "Q(i)") return FieldContext::gaussian();
    if (s == "zeta5" || s == "Q(zeta5)") return FieldContext::cyclotomic5();
    bad("unknown context \"" + s + "\"; use Q, gaussian, zeta5 or a coefficient list");
  }
  if (j.is_array()) {
    std::vector<Rational> mod;
    for (const auto& c : j) mod.push_back(rational_from_json(c));
    return FieldContext::make(std::move(mod));
  }
  bad("context must be a name or an ascending coefficient list");
}

Json context_to_json(const ContextPtr& ctx) {
  Json a = Json::array();
  for (const auto& c : ctx->modulus()) a.push_back(to_string(c));
  return a;
}

FieldElement element_from_json(const ContextPtr& ctx, const Json& j) {
  if (j.is_string()) return FieldElement::parse(ctx, j.get<std::string>());
  if (j.is_number_integer()) return FieldElement(ctx, Rational(j.get<long>()));
  if (j.is_array()) {
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(rational_from_json(v));
    return FieldElement(ctx, std::move(c));
  }
  bad("expected a field element, got " + j.dump());
}

Json to_json(const FieldElement& x) { return x.to_string(); }

Json to_json(const Polynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(x));
  return {{"coeffs", c}, {"text", p.to_string("lambda")}};
}

Json to_json(const Matrix& m) {
  Json e = Json::array();
  for (const auto& x : m.entries()) e.push_back(to_json(x));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

Matrix matrix_from_json(const ContextPtr& ctx, const Json& j) {
  std::size_t r = count_from_json(field(j, "rows"), "rows"), c = count_from_json(field(j, "cols"), "cols");
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != r * c) bad("matrix entries must be a list of rows*cols elements");
  std::vector<FieldElement> v;
  for (const auto& x : e) v.push_back(element_from_json(ctx, x));
  return Matrix(ctx, r, c, std::move(v));
}

Json to_json(const RepSpec& spec) {
  Json x = Json::array();
  for (const auto& v : spec.params.values()) x.push_back(to_json(v));
  Json j{{"dim", spec.dim}, {"X", x}};
  if (spec.roots.h) j["h"] = to_json(*spec.roots.h);
  if (spec.roots.f) j["f"] = to_json(*spec.roots.f);
  if (spec.dim == 6) j["variant"] = spec.variant;
  return j;
}

RepSpec rep_spec_from_json(const ContextPtr& ctx, const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer()) bad("dim must be an integer");
  const Json& xj = field(j, "X");
  if (!xj.is_array()) bad("X must be a list");
  std::vector<FieldElement> xs;
  for (const auto& v : xj) xs.push_back(element_from_json(ctx, v));
  RootChoice rc;
  if (j.contains("h")) rc.h = element_from_json(ctx, j["h"]);
  if (j.contains("f")) rc.f = element_from_json(ctx, j["f"]);
  int variant = 5;
  if (j.contains("variant")) {
    if (!j["variant"].is_number_integer()) bad("variant must be an integer");
    variant = j["variant"].get<int>();
  }
  RepSpec spec{d.get<int>(), ParameterSet(ctx, std::move(xs)), rc, variant};
  spec.validate();
  return spec;
}

Json to_json(const Representation& rep) {
  return {{"spec", to_json(rep.spec)},
          {"g1", to_json(rep.g1)},
          {"g2", to_json(rep.g2)},
          {"multiplicities", rep.multiplicities}};
}

Json to_json(const SpectralReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
  return {{"C_rho", to_json(r.c_rho)},
          {"C_expected", to_json(r.c_expected)},
          {"tr_A", to_json(r.tr_a)},
          {"tr_A2", to_json(r.tr_a2)},
          {"tr_B", to_json(r.tr_b)},
          {"tr_A_expected", to_json(r.tr_a_expected)},
          {"tr_A2_expected", to_json(r.tr_a2_expected)},
          {"tr_B_expected", to_json(r.tr_b_expected)},
          {"charpoly_A", to_json(r.charpoly_a)},
          {"charpoly_B", to_json(r.charpoly_b)},
          {"charpoly_A_expected", to_json(r.charpoly_a_expected)},
          {"charpoly_B_expected", to_json(r.charpoly_b_expected)},
          {"det_constraint_ok", r.det_constraint_ok},
          {"checks", checks},
          {"all_ok", r.all_ok}};
}

Json to_json(const PredicateValue& p) {
  return {{"name", p.name()}, {"value", to_json(p.value)}, {"is_zero", p.is_zero()}, {"resultant", p.resultant}};
}

Json to_json(const Witness& w) {
  Json j{{"Y", index_list(w.index_set)}, {"complement_found", w.complement_found}};
  if (w.line) j["line"] = Json::array({to_json(w.line->first), to_json(w.line->second)});
  return j;
}

Witness witness_from_json(const ContextPtr& ctx, const Json& j) {
  Witness w;
  const Json& y = field(j, "Y");
  if (!y.is_array()) bad("Y must be a list of coordinates");
  for (const auto& v : y) w.index_set.push_back(count_from_json(v, "coordinate"));
  if (j.contains("line")) {
    const Json& l = j["line"];
    if (!l.is_array() || l.size() != 2) bad("line must be a pair [a, b]");
    w.line = std::make_pair(element_from_json(ctx, l[0]), element_from_json(ctx, l[1]));
  }
  return w;
}

Json to_json(const DeferredRoots& d) {
  return {{"subset", index_list(d.subset)},
          {"dim", d.dim},
          {"required_modulus", d.required_modulus},
          {"found", d.found},
          {"expected", d.expected}};
}

Json to_json(const CensusReport& r) {
  Json failing = Json::array();
  for (const auto& p : r.failing_predicates) failing.push_back(to_json(p));
  Json j{{"parameter_count", r.parameter_count},
         {"semisimple_verdict", r.semisimple_verdict},
         {"failing_predicates", failing},
         {"predicates_checked", r.predicates_checked},
         {"algebra_dim", r.algebra_dim},
         {"census_applicable", r.census_applicable}};
  if (!r.census_applicable) return j;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json probe = Json::array();
    for (const auto& x : e.probe) probe.push_back(to_json(x));
    entries.push_back({{"label", e.label}, {"dim", e.dim}, {"probe", probe}, {"class_id", e.class_id}});
  }
  Json counts = Json::object();
  for (const auto& [d, n] : r.dimension_counts) counts[std::to_string(d)] = n;
  Json deferred = Json::array();
  for (const auto& d : r.deferred) deferred.push_back(to_json(d));
  j["mode"] = r.mode == CensusMode::constructive ? "constructive" : "combinatorial";
  j["dimension_counts"] = counts;
  j["sum_of_squares"] = r.sum_of_squares;
  if (r.mode == CensusMode::constructive) {
    j["entries"] = entries;
    j["pairwise_inequivalent"] = r.pairwise_inequivalent;
    j["intertwiner_solves"] = r.intertwiner_solves;
    j["deferred"] = deferred;
  }
  j["census_ok"] = r.census_ok;
  return j;
}

}  // namespace b3q
