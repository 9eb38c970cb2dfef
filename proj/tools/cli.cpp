#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace b3q::cli {

namespace {

struct Options {
  std::string params;
  std::optional<std::string> context;
  std::string mode;
  std::vector<std::string> words;
  unsigned jobs = 1;
  std::string output;
};

// Not a mathematical failure: the input itself is unusable.
bool is_input_error(Errc c) {
  switch (c) {
    case Errc::NonMonic:
    case Errc::NotSquarefree:
    case Errc::ContextMismatch:
    case Errc::IndexOutOfRange:
    case Errc::InvalidParameters:
    case Errc::MissingRoot:
    case Errc::BadSpec:
    case Errc::BadLevel:
    case Errc::InvalidWitness:
    case Errc::SyntaxError:
    case Errc::BadEncoding:
      return true;
    default:
      return false;
  }
}

Json read_json_arg(const std::string& arg) {
  if (arg.empty()) return Json::object();
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return Json::parse(arg);
  if (arg == "-") return Json::parse(std::cin);
  std::ifstream in(arg);
  if (!in) throw Error(Errc::BadEncoding, "cannot open parameter file " + arg);
  return Json::parse(in);
}

Json context_arg(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return Json::parse(text);
  return text;
}

Json elements_json(const std::vector<FieldElement>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

Json index_json(const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (auto i : idx) a.push_back(i);
  return a;
}

const ParameterSet& need_x(const JobConfig& job) {
  if (!job.xs) throw Error(Errc::BadEncoding, "the job needs a parameter list X");
  return *job.xs;
}

// Either the single representation named by dim, or every representation of X.
IrrepEnumeration select_reps(const JobConfig& job) {
  const ParameterSet& xs = need_x(job);
  if (!job.dim) return enumerate_irreps(xs, job.hints);
  RepSpec spec{*job.dim, xs, job.roots, job.variant};
  if (spec.dim == 4 && !spec.roots.h) {
    auto r = find_kth_roots(elementary_symmetric(xs, 4), 2, job.hints);
    if (r.empty()) throw Error(Errc::MissingRoot, "no square root of e4(X) found in the context; supply h");
    spec.roots.h = r.front();
  }
  if (spec.dim == 5 && !spec.roots.f) {
    auto r = find_kth_roots(elementary_symmetric(xs, 5), 5, job.hints);
    if (r.empty()) throw Error(Errc::MissingRoot, "no fifth root of e5(X) found in the context; supply f");
    spec.roots.f = r.front();
  }
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i <= xs.size(); ++i) all.push_back(i);
  Representation rep = build_rep(spec);
  std::string label = rep_label(rep, all);
  IrrepEnumeration en;
  en.reps.push_back({all, std::move(rep), std::move(label)});
  return en;
}

Json deferred_json(const IrrepEnumeration& en) {
  Json a = Json::array();
  for (const auto& d : en.deferred) a.push_back(to_json(d));
  return a;
}

Json header(const std::string& command, const JobConfig& job) {
  Json j{{"command", command}, {"context", context_to_json(job.ctx)}};
  if (job.xs) j["X"] = elements_json(job.xs->values());
  return j;
}

struct Outcome {
  Json report;
  std::vector<std::string> failed;
  bool input_error = false;
};

Outcome cmd_build(const JobConfig& job) {
  IrrepEnumeration en = select_reps(job);
  Json reps = Json::array();
  for (const auto& e : en.reps)
    reps.push_back({{"label", e.label}, {"subset", index_json(e.subset)}, {"rep", to_json(e.rep)}});
  Json j = header("build", job);
  j["reps"] = reps;
  j["deferred"] = deferred_json(en);
  return {j, {}};
}

Outcome cmd_verify(const JobConfig& job) {
  IrrepEnumeration en = select_reps(job);
  Outcome o;
  Json reps = Json::array();
  for (const auto& e : en.reps) {
    bool braid = verify_braid_relation(e.rep);
    bool minp = verify_minimal_polynomial(e.rep);
    SpectralReport sr = check_spectrum(e.rep);
    bool ok = braid && minp && sr.all_ok;
    if (!braid) o.failed.push_back(e.label + ": braid relation");
    if (!minp) o.failed.push_back(e.label + ": minimal polynomial");
    for (const auto& c : sr.checks)
      if (!c.ok) o.failed.push_back(e.label + ": " + c.name);
    reps.push_back({{"label", e.label},
                    {"braid_relation", braid},
                    {"minimal_polynomial", minp},
                    {"spectral", to_json(sr)},
                    {"ok", ok}});
  }
  o.report = header("verify", job);
  o.report["reps"] = reps;
  o.report["deferred"] = deferred_json(en);
  o.report["all_ok"] = o.failed.empty();
  o.report["failed"] = o.failed;
  return o;
}

Json irred_entry(const IrrepEntry& e, std::vector<std::string>& failed) {
  const auto& rep = e.rep;
  auto preds = rep_predicates(rep);
  Json pj = Json::array();
  for (const auto& p : preds) pj.push_back(to_json(p));
  const std::size_t d = rep.g1.rows();
  std::size_t closure = algebra_closure_dim({rep.g1, rep.g2});
  bool oracle = closure == d * d;
  Json j{{"label", e.label}, {"dim", rep.dim()}, {"closure_dim", closure}, {"oracle_irreducible", oracle}};
  if (rep.dim() <= 5) {
    bool predicted = predicted_irreducible(rep);
    j["predicates"] = pj;
    j["predicted_irreducible"] = predicted;
    j["agreement"] = predicted == oracle;
    if (predicted != oracle) failed.push_back(e.label + ": predicate verdict disagrees with closure oracle");
  }
  if (oracle) {
    std::size_t cd = commutant_dim({rep.g1, rep.g2});
    j["commutant_dim"] = cd;
    if (cd != 1) failed.push_back(e.label + ": commutant of an irreducible representation is not scalar");
  } else {
    auto w = invariant_subspace_witness(rep);
    if (w) {
      w->complement_found = decomposability_check(rep, *w);
      j["witness"] = to_json(*w);
      j["decomposable"] = w->complement_found;
    } else {
      j["witness"] = nullptr;
      j["witness_note"] = "no invariant subspace of the searched shapes is defined over this field";
    }
  }
  return j;
}

Outcome cmd_irred(const JobConfig& job) {
  IrrepEnumeration en = select_reps(job);
  Outcome o;
  Json reps = Json::array();
  std::vector<bool> dim6_irreducible;
  for (const auto& e : en.reps) {
    Json j = irred_entry(e, o.failed);
    if (e.rep.dim() == 6) dim6_irreducible.push_back(j["oracle_irreducible"].get<bool>());
    reps.push_back(std::move(j));
  }
  o.report = header("irred", job);
  o.report["reps"] = reps;
  o.report["deferred"] = deferred_json(en);

  // The six-dimensional predicates govern the five variants jointly.
  const ParameterSet& xs = need_x(job);
  if (xs.size() == 5 && !dim6_irreducible.empty()) {
    auto fam = evaluate_predicates(xs, 6);
    Json pj = Json::array(), vanishing = Json::array();
    bool predicted = true;
    for (const auto& p : fam) {
      pj.push_back(to_json(p));
      if (p.is_zero()) {
        predicted = false;
        vanishing.push_back(p.name());
      }
    }
    Json fj{{"predicates", pj}, {"vanishing", vanishing}, {"predicted_all_irreducible", predicted}};
    if (dim6_irreducible.size() == 5) {
      bool all = std::all_of(dim6_irreducible.begin(), dim6_irreducible.end(), [](bool b) { return b; });
      Json reducible = Json::array();
      for (std::size_t i = 0; i < 5; ++i)
        if (!dim6_irreducible[i]) reducible.push_back(i + 1);
      fj["oracle_all_irreducible"] = all;
      fj["reducible_variants"] = reducible;
      fj["agreement"] = all == predicted;
      if (all != predicted) o.failed.push_back("dimension 6: predicate family disagrees with closure oracle");
    }
    o.report["dim6_family"] = fj;
  }
  o.report["all_ok"] = o.failed.empty();
  o.report["failed"] = o.failed;
  return o;
}

CensusMode census_mode(const std::string& m) {
  if (m.empty() || m == "combinatorial") return CensusMode::combinatorial;
  if (m == "constructive") return CensusMode::constructive;
  throw Error(Errc::BadEncoding, "mode must be constructive or combinatorial, got " + m);
}

Outcome cmd_semisimple(const JobConfig& job) {
  const ParameterSet& xs = need_x(job);
  CensusMode mode = census_mode(job.mode);
  Outcome o;
  CensusReport rep = semisimplicity(xs);
  Json extra;
  if (rep.semisimple_verdict) {
    try {
      rep = dimension_census(xs, mode, job.hints);
      if (!rep.census_ok) o.failed.push_back("census: sum of squares differs from the algebra dimension");
    } catch (const Error& e) {
      if (e.code() != Errc::RootsUnavailable) throw;
      IrrepEnumeration en = enumerate_irreps(xs, job.hints);
      extra = {{"error", errc_name(e.code())}, {"message", e.what()}, {"deferred", deferred_json(en)}};
      o.failed.push_back("census: roots unavailable in this context");
    }
  }
  o.report = header("semisimple", job);
  o.report["mode"] = mode == CensusMode::constructive ? "constructive" : "combinatorial";
  o.report["report"] = to_json(rep);
  Json names = Json::array();
  for (const auto& p : rep.failing_predicates) names.push_back(p.name());
  o.report["verdict"] = rep.semisimple_verdict;
  o.report["failing"] = names;
  if (!extra.is_null()) o.report["census_error"] = extra;
  o.report["failed"] = o.failed;
  return o;
}

Outcome cmd_eval(const JobConfig& job, const std::vector<std::string>& words) {
  if (!job.dim) throw Error(Errc::BadEncoding, "eval needs a single representation: give dim");
  if (words.empty()) throw Error(Errc::BadEncoding, "eval needs at least one word (--words or \"words\")");
  IrrepEnumeration en = select_reps(job);
  const auto& e = en.reps.front();
  WordEvaluator ev(e.rep);
  Json results = Json::array();
  for (const auto& text : words) {
    BraidWord w = parse_word(text);
    Matrix m = ev(w);
    Json r{{"word", text}, {"canonical", to_string(w)}, {"reduced", to_string(free_reduce(w))}, {"matrix", to_json(m)}};
    if (auto s = m.scalar_value()) r["scalar"] = to_json(*s);
    results.push_back(std::move(r));
  }
  Json j = header("eval", job);
  j["rep"] = {{"label", e.label}, {"spec", to_json(e.rep.spec)}};
  j["results"] = results;
  return {j, {}};
}

// ---------------------------------------------------------------------------
// scan

std::vector<Json> grid_points(const Json& grid) {
  std::vector<Json> pts;
  if (grid.is_array()) {
    for (const auto& p : grid) pts.push_back(p);
    return pts;
  }
  if (!grid.is_object()) throw Error(Errc::BadEncoding, "scan needs a grid: a list of X lists or {size, values, limit}");
  if (!grid.contains("size") || !grid.contains("values"))
    throw Error(Errc::BadEncoding, "grid object needs size and values");
  auto size = grid["size"].get<std::size_t>();
  const Json& values = grid["values"];
  if (!values.is_array()) throw Error(Errc::BadEncoding, "grid values must be a list");
  std::size_t limit = grid.contains("limit") ? grid["limit"].get<std::size_t>() : SIZE_MAX;
  const std::size_t n = values.size();
  if (size < 1 || size > n) throw Error(Errc::BadEncoding, "grid size must be in 1..len(values)");
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (pts.size() < limit) {
    Json p = Json::array();
    for (auto i : idx) p.push_back(values[i]);
    pts.push_back(std::move(p));
    // next combination in lexicographic order
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t i = k; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
  return pts;
}

struct ScanResult {
  Json entry;
  bool disagreement = false;
  bool input_error = false;
};

ScanResult scan_point(const JobConfig& job, const Json& point, std::size_t index, bool full) {
  ScanResult r;
  r.entry = {{"index", index}, {"X", point}};
  try {
    if (!point.is_array()) throw Error(Errc::BadEncoding, "grid point must be a list");
    std::vector<FieldElement> v;
    for (const auto& x : point) v.push_back(element_from_json(job.ctx, x));
    ParameterSet xs(job.ctx, std::move(v));
    CensusReport rep = semisimplicity(xs);
    Json names = Json::array();
    for (const auto& p : rep.failing_predicates) names.push_back(p.name());
    r.entry["verdict"] = rep.semisimple_verdict;
    r.entry["failing"] = names;
    if (full) {
      IrrepEnumeration en = enumerate_irreps(xs, job.hints);
      Json reps = Json::array();
      bool all6 = true, any6 = false;
      for (const auto& e : en.reps) {
        bool oracle = irreducible_oracle(e.rep);
        Json j{{"label", e.label}, {"oracle_irreducible", oracle}};
        if (e.rep.dim() <= 5) {
          bool pred = predicted_irreducible(e.rep);
          j["predicted_irreducible"] = pred;
          if (pred != oracle) r.disagreement = true;
        } else {
          any6 = true;
          all6 = all6 && oracle;
        }
        reps.push_back(std::move(j));
      }
      if (any6) {
        bool pred6 = true;
        for (const auto& p : evaluate_predicates(xs, 6)) pred6 = pred6 && !p.is_zero();
        r.entry["dim6_agreement"] = pred6 == all6;
        if (pred6 != all6) r.disagreement = true;
      }
      r.entry["reps"] = reps;
      r.entry["deferred"] = deferred_json(en);
      r.entry["agreement"] = !r.disagreement;
    }
  } catch (const Error& e) {
    r.entry["error"] = errc_name(e.code());
    r.entry["message"] = e.what();
    r.input_error = is_input_error(e.code());
    if (!r.input_error) r.disagreement = true;
  }
  return r;
}

Outcome cmd_scan(const JobConfig& job, unsigned jobs) {
  if (job.mode != "" && job.mode != "verdict" && job.mode != "full")
    throw Error(Errc::BadEncoding, "scan mode must be verdict or full, got " + job.mode);
  const bool full = job.mode == "full";
  auto points = grid_points(job.grid);
  std::vector<ScanResult> results(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) results[i] = scan_point(job, points[i], i, full);
  };
  const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, points.size()))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Outcome o;
  Json arr = Json::array();
  std::size_t semisimple = 0, errors = 0;
  for (auto& r : results) {
    if (r.entry.contains("verdict") && r.entry["verdict"].get<bool>()) ++semisimple;
    if (r.input_error) ++errors;
    if (r.disagreement) o.failed.push_back("grid point " + std::to_string(r.entry["index"].get<std::size_t>()));
    arr.push_back(std::move(r.entry));
  }
  o.report = header("scan", job);
  o.report["mode"] = full ? "full" : "verdict";
  o.report["count"] = points.size();
  o.report["semisimple_count"] = semisimple;
  o.report["input_errors"] = errors;
  o.report["results"] = arr;
  o.report["failed"] = o.failed;
  o.input_error = errors > 0;
  return o;
}

}  // namespace

JobConfig parse_job(const Json& j, const std::optional<std::string>& context_override) {
  if (!j.is_object()) throw Error(Errc::BadEncoding, "job configuration must be a JSON object");
  JobConfig job;
  if (context_override)
    job.ctx = parse_context(context_arg(*context_override));
  else if (j.contains("context"))
    job.ctx = parse_context(j["context"]);
  if (j.contains("X")) {
    const Json& x = j["X"];
    if (!x.is_array()) throw Error(Errc::BadEncoding, "X must be a list");
    std::vector<FieldElement> v;
    for (const auto& e : x) v.push_back(element_from_json(job.ctx, e));
    job.xs = ParameterSet(job.ctx, std::move(v));
  }
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) throw Error(Errc::BadEncoding, "dim must be an integer");
    job.dim = j["dim"].get<int>();
  }
  if (j.contains("variant")) {
    if (!j["variant"].is_number_integer()) throw Error(Errc::BadEncoding, "variant must be an integer");
    job.variant = j["variant"].get<int>();
  }
  const Json* roots = j.contains("roots") ? &j["roots"] : &j;
  if (roots->contains("h")) job.roots.h = element_from_json(job.ctx, (*roots)["h"]);
  if (roots->contains("f")) job.roots.f = element_from_json(job.ctx, (*roots)["f"]);
  if (j.contains("hints"))
    for (const auto& h : j["hints"]) job.hints.elements.push_back(element_from_json(job.ctx, h));
  if (j.contains("words"))
    for (const auto& w : j["words"]) job.words.push_back(w.get<std::string>());
  if (j.contains("mode")) job.mode = j["mode"].get<std::string>();
  if (j.contains("grid")) job.grid = j["grid"];
  return job;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact representations of the 3-string braid group quotients"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("-p,--params", opt.params, "JobConfig JSON file, '-' for stdin, or inline JSON");
    sub->add_option("--context", opt.context, "Q, gaussian, zeta5, or an ascending modulus list like [1,1,1,1,1]");
    sub->add_option("--mode", opt.mode, "semisimple: constructive|combinatorial; scan: verdict|full");
    sub->add_option("--words", opt.words, "braid words for eval");
    sub->add_option("-j,--jobs", opt.jobs, "worker threads for scan")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", opt.output, "write the JSON report here instead of stdout");
  };
  const char* names[][2] = {{"build", "construct representations and emit their matrices"},
                            {"verify", "braid relation, minimal polynomial and spectral identities"},
                            {"irred", "predicates, closure oracle, witnesses and decomposability"},
                            {"semisimple", "semisimplicity verdict and dimension census"},
                            {"eval", "evaluate braid words in one representation"},
                            {"scan", "semisimplicity verdicts over a grid of parameter sets"}};
  for (const auto& n : names) add_common(app.add_subcommand(n[0], n[1]));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  std::string command = app.get_subcommands().front()->get_name();

  try {
    JobConfig job = parse_job(read_json_arg(opt.params), opt.context);
    if (!opt.mode.empty()) job.mode = opt.mode;
    std::vector<std::string> words = opt.words.empty() ? job.words : opt.words;

    Outcome o;
    if (command == "build") o = cmd_build(job);
    else if (command == "verify") o = cmd_verify(job);
    else if (command == "irred") o = cmd_irred(job);
    else if (command == "semisimple") o = cmd_semisimple(job);
    else if (command == "eval") o = cmd_eval(job, words);
    else o = cmd_scan(job, opt.jobs);

    std::string text = o.report.dump(2) + "\n";
    if (opt.output.empty()) {
      out << text;
    } else {
      std::ofstream f(opt.output);
      if (!f) throw Error(Errc::BadEncoding, "cannot write " + opt.output);
      f << text;
    }
    for (const auto& f : o.failed) err << "check failed: " << f << "\n";
    if (!o.failed.empty()) return 1;
    if (o.input_error) {
      err << "some grid points were rejected as invalid input\n";
      return 2;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const Json::exception& e) {
    err << "error: BadEncoding: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace b3q::cli
