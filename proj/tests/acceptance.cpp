// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr std::uint64_t kSeed = 20261019;
constexpr int kSetsPerClass = 100;
constexpr int kZeta5Sets = 20;

struct SweepEntry {
  int dim_class;
  std::vector<Rational> values;
  Representation rep;
};

struct Sweep {
  std::vector<SweepEntry> entries;
  std::vector<std::pair<ParameterSet, std::vector<bool>>> dim6_families;  // X, oracle verdict per variant
  double build_seconds = 0;
};

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (problems.size() < 10) problems.push_back(what);
    }
  }
};

std::string fmt(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

std::string values_text(const std::vector<Rational>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "}";
}

Sweep build_sweep() {
  auto t0 = Clock::now();
  Sweep sw;
  RationalSource src(kSeed);
  for (int d = 1; d <= 6; ++d) {
    for (int k = 0; k < kSetsPerClass; ++k) {
      auto v = generic_set(src, d == 6 ? 5 : static_cast<std::size_t>(d));
      for (auto& r : reps_for_class(Q(), v, d)) sw.entries.push_back({d, v, std::move(r)});
    }
  }
  // all five fifth roots in Q(ζ5)
  for (int k = 0; k < kZeta5Sets; ++k) {
    auto v = generic_set(src, 5);
    for (auto& r : reps_for_class(Z5(), v, 5)) sw.entries.push_back({5, v, std::move(r)});
  }
  sw.build_seconds = seconds_since(t0);
  return sw;
}

Polynomial expected_g2_charpoly(const Representation& r) {
  const auto& xs = r.spec.params;
  Polynomial p = Polynomial::constant(xs.x(1).one());
  for (std::size_t i = 1; i <= xs.size(); ++i)
    p = p * Polynomial::linear(xs.x(i)).pow(static_cast<unsigned>(r.multiplicities[i - 1]));
  return p;
}

Outcome criterion1(const Sweep& sw) {
  Outcome o;
  auto t0 = Clock::now();
  for (const auto& e : sw.entries) {
    const auto& r = e.rep;
    std::string where = rep_label(r, {}) + " at " + values_text(e.values);
    o.require(verify_braid_relation(r), "braid relation " + where);
    o.require(evaluate(parameter_polynomial(r.spec.params), r.g2).is_zero(), "P_X(g2) = 0 " + where);
    o.require(minpoly(r.g2) == parameter_polynomial(r.spec.params), "minpoly(g2) = P_X " + where);
    o.require(charpoly(r.g2) == expected_g2_charpoly(r), "charpoly(g2) " + where);
  }
  double total = sw.build_seconds + seconds_since(t0);
  o.require(total <= 60.0, "sweep took " + fmt(total));
  o.summary = std::to_string(sw.entries.size()) + " reps from " + std::to_string(6 * kSetsPerClass + kZeta5Sets) +
              " sets, seed " + std::to_string(kSeed) + ", " + fmt(total) + " (limit 60 s)";
  return o;
}

Outcome criterion2(const Sweep& sw) {
  Outcome o;
  for (const auto& e : sw.entries) {
    auto rep = check_spectrum(e.rep);
    std::string where = rep_label(e.rep, {}) + " at " + values_text(e.values);
    for (const auto& c : rep.checks) o.require(c.ok, c.name + " " + where + ": expected " + c.expected + ", got " + c.actual);
  }
  o.summary = "A^3 = B^2 = C Id, C_rho, traces, both charpolys and the det identity on " +
              std::to_string(sw.entries.size()) + " reps";
  return o;
}

struct Fixture {
  std::string name;
  Representation rep;
};

std::vector<Fixture> degenerate_fixtures() {
  std::vector<Fixture> f;
  f.push_back({"I3=0 X={2,1,-4}", rep(3, X(Q(), {2, 1, -4}))});
  f.push_back({"I4=0 X={1,2,27/2,3} h=9", rep(4, X(Q(), {1, 2, q(27, 2), 3}), with_h(el(Q(), 9)))});
  f.push_back({"J5=0 X={-4,1,2,4,-1} f=2", rep(5, X(Q(), {-4, 1, 2, 4, -1}), with_f(el(Q(), 2)))});
  f.push_back({"J6(1,5)=0 X={1,2,3,4,24}", rep(6, X(Q(), {1, 2, 3, 4, 24}), {}, 5)});
  f.push_back({"K6=0 X={1,2,-3,6,5}", rep(6, X(Q(), {1, 2, -3, 6, 5}), {}, 5)});
  f.push_back({"I6(5)=0 X={2,3,-1,1/6,1}", rep(6, X(Q(), {2, 3, -1, q(1, 6), 1}), {}, 5)});
  return f;
}

bool all_nonzero(const std::vector<PredicateValue>& ps) {
  return std::none_of(ps.begin(), ps.end(), [](const PredicateValue& p) { return p.is_zero(); });
}

Outcome criterion3(const Sweep& sw) {
  Outcome o;
  std::size_t checked = 0, families = 0;
  std::map<std::string, std::vector<bool>> dim6;
  std::map<std::string, ParameterSet> dim6_sets;
  for (const auto& e : sw.entries) {
    bool oracle = irreducible_oracle(e.rep);
    std::string where = rep_label(e.rep, {}) + " at " + values_text(e.values);
    if (e.rep.dim() <= 5) {
      o.require(predicted_irreducible(e.rep) == oracle, "predicate/oracle disagreement " + where);
      ++checked;
    } else {
      dim6[values_text(e.values)].push_back(oracle);
      dim6_sets.emplace(values_text(e.values), e.rep.spec.params);
    }
    if (oracle) o.require(commutant_dim({e.rep.g1, e.rep.g2}) == 1, "commutant not scalar " + where);
  }
  for (const auto& [key, verdicts] : dim6) {
    bool all = std::all_of(verdicts.begin(), verdicts.end(), [](bool b) { return b; });
    bool predicted = all_nonzero(evaluate_predicates(dim6_sets.at(key), 6));
    o.require(verdicts.size() == 5 && all == predicted, "dimension-6 family disagreement at " + key);
    ++families;
  }

  for (const auto& f : degenerate_fixtures()) {
    const auto& r = f.rep;
    bool oracle = irreducible_oracle(r);
    bool predicted = r.dim() <= 5 ? predicted_irreducible(r) : all_nonzero(evaluate_predicates(r.spec.params, 6));
    o.require(!oracle, f.name + ": oracle says irreducible");
    o.require(predicted == oracle, f.name + ": predicate/oracle disagreement");
    auto w = invariant_subspace_witness(r);
    o.require(w.has_value(), f.name + ": no witness");
    if (!w) continue;
    o.require(verify_witness(r, *w), f.name + ": witness not invariant");
    o.require(!decomposability_check(r, *w), f.name + ": decomposable");
  }
  // the explicit common eigenvector at I6(5) = 0
  {
    auto xs = X(Q(), {2, 3, -1, q(1, 6), 1});
    auto w = invariant_subspace_witness(rep(6, xs, {}, 5));
    const auto& x = xs.values();
    FieldElement a = (x[4] * x[4] + x[1] * x[2]) * (x[4] * x[4] - x[0] * x[2]) * (x[1] * x[1] - x[1] * x[4] + x[4] * x[4]);
    FieldElement b = x[0] * x[2] * (x[0] * x[0] - x[0] * x[4] + x[4] * x[4]);
    bool collinear = w && w->line && w->line->first * b == w->line->second * a;
    o.require(collinear, "I6(5) witness line not collinear with the known eigenvector");
  }
  auto j6 = invariant_subspace_witness(rep(6, X(Q(), {1, 2, 3, 4, 24}), {}, 5));
  o.require(j6 && j6->index_set == std::vector<std::size_t>{1, 5} && !j6->line, "J6(1,5) witness is not Y = {1,5}");
  o.summary = std::to_string(checked) + " reps of dim <= 5 and " + std::to_string(families) +
              " dim-6 families agree; 6 fixtures give verified indecomposable witnesses";
  return o;
}

Outcome criterion4() {
  Outcome o;
  RationalSource src(kSeed + 4);
  std::size_t combinatorial = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (int k = 0; k < 25; ++k) {
      auto c = dimension_census(X(Q(), generic_set(src, n)), CensusMode::combinatorial);
      o.require(c.census_ok && c.sum_of_squares == algebra_dimension(n),
                "combinatorial census for |X| = " + std::to_string(n));
      ++combinatorial;
    }

  auto constructive = [&](const std::string& name, const ParameterSet& xs, const RootHints& hints, std::size_t expect) {
    auto t0 = Clock::now();
    try {
      auto c = dimension_census(xs, CensusMode::constructive, hints);
      o.require(c.sum_of_squares == expect, name + ": sum of squares " + std::to_string(c.sum_of_squares));
      o.require(c.pairwise_inequivalent, name + ": members not pairwise inequivalent");
      std::set<std::vector<std::string>> probes;
      for (const auto& e : c.entries) {
        std::vector<std::string> key;
        for (const auto& v : e.probe) key.push_back(v.to_string());
        probes.insert(key);
      }
      std::cout << "  constructive " << name << ": " << c.entries.size() << " reps, sum " << c.sum_of_squares
                << ", distinct probe vectors " << probes.size() << ", intertwiner solves " << c.intertwiner_solves
                << ", " << fmt(seconds_since(t0)) << "\n";
    } catch (const Error& e) {
      o.require(false, name + ": " + e.what());
    }
  };
  constructive("X={1,2}", X(Q(), {1, 2}), {}, 6);
  constructive("X={1,2,3}", X(Q(), {1, 2, 3}), {}, 24);
  constructive("X={1,2,3,6}", X(Q(), {1, 2, 3, 6}), {}, 96);
  auto comp = compositum_fixture();
  constructive("X={1,2,3,4,4/3} in Q(zeta5,sqrt2,sqrt3)", comp.xs, comp.hints, 600);
  constructive("X={32,8,2,1/2,1/8} in Q(zeta5)", X(Z5(), {32, 8, 2, q(1, 2), q(1, 8)}), {}, 600);

  // Over Q(ζ5) alone the four-element subsets of {1,2,3,4,4/3} need square roots that are absent.
  try {
    dimension_census(X(Z5(), {1, 2, 3, 4, q(4, 3)}), CensusMode::constructive);
    o.require(false, "X={1,2,3,4,4/3} in Q(zeta5) unexpectedly complete");
  } catch (const Error& e) {
    std::cout << "  note: X={1,2,3,4,4/3} in Q(zeta5) alone: " << errc_name(e.code())
              << " (e4 of 4-subsets 24, 8, 32/3, 32 are not squares there)\n";
  }
  o.summary = std::to_string(combinatorial) + " combinatorial censuses; constructive 6, 24, 96, 600, 600";
  return o;
}

Outcome criterion5() {
  Outcome o;
  struct Case {
    std::vector<Rational> x;
    std::string predicate;
  };
  std::vector<Case> cases{{{2, 1, -4}, "I3(1,2,3)"},
                          {{1, 2, q(27, 2), 3}, "I4(4)"},
                          {{-4, 1, 2, 4, -1}, "J5(1,2)"},
                          {{1, 2, 3, 4, 24}, "J6(1,5)"},
                          {{1, 2, -3, 6, 5}, "K6(5,1,4,2,3)"},
                          {{2, 3, -1, q(1, 6), 1}, "I6(5)"}};
  for (const auto& c : cases) {
    auto r = semisimplicity(X(Q(), c.x));
    std::vector<std::string> names;
    for (const auto& p : r.failing_predicates) names.push_back(p.name());
    o.require(!r.semisimple_verdict, values_text(c.x) + " judged semisimple");
    o.require(std::find(names.begin(), names.end(), c.predicate) != names.end(),
              values_text(c.x) + " does not name " + c.predicate);
    std::cout << "  " << values_text(c.x) << ": failing";
    for (const auto& n : names) std::cout << " " << n;
    std::cout << "\n";
  }
  o.summary = "6 fixtures non-semisimple with the named predicate";
  return o;
}

BraidWord random_word(RationalSource& src, std::size_t len, bool macros) {
  BraidWord w;
  for (std::size_t i = 0; i < len; ++i) {
    auto g = static_cast<Generator>(src.integer(0, macros ? 4 : 1));
    long e = src.integer(1, 3) * (src.integer(0, 1) ? 1 : -1);
    w.factors.push_back({g, e});
  }
  return w;
}

Outcome criterion6(const Sweep& sw) {
  Outcome o;
  RationalSource src(kSeed + 6);
  std::size_t roundtrips = 0;
  for (int i = 0; i < 2000; ++i) {
    BraidWord w = random_word(src, static_cast<std::size_t>(src.integer(0, 10)), true);
    o.require(parse_word(to_string(w)) == w, "round trip of " + to_string(w));
    ++roundtrips;
  }
  BraidWord c = parse_word("(s1 s2)^3");
  for (const auto& e : sw.entries) {
    auto s = evaluate(c, e.rep).scalar_value();
    o.require(s && *s == central_value(e.rep), "(s1 s2)^3 on " + rep_label(e.rep, {}));
  }
  BraidWord l = parse_word("s1 s2 s1"), r = parse_word("s2 s1 s2");
  std::size_t words = 0;
  std::vector<const SweepEntry*> picks;
  for (int d = 1; d <= 6; ++d)
    for (const auto& e : sw.entries)
      if (e.dim_class == d) {
        picks.push_back(&e);
        break;
      }
  for (const auto* e : picks) {
    WordEvaluator ev(e->rep);
    for (int i = 0; i < 200; ++i) {
      BraidWord pre = random_word(src, static_cast<std::size_t>(src.integer(0, 3)), false);
      BraidWord post = random_word(src, static_cast<std::size_t>(src.integer(0, 3)), false);
      Matrix lhs = ev(pre * l * post), rhs = ev(pre * r * post);
      o.require(lhs == rhs, "substitution changes " + to_string(pre * l * post) + " on " + rep_label(e->rep, {}));
      BraidWord w = pre * l * post;
      o.require(ev(free_reduce(w)) == lhs, "free reduction changes " + to_string(w));
      ++words;
    }
  }
  o.summary = std::to_string(roundtrips) + " round trips, central c on " + std::to_string(sw.entries.size()) +
              " reps, " + std::to_string(words) + " substitution words on dims 1..6";
  return o;
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream os, es;
  int code = cli::run_command(args, os, es);
  out = os.str();
  return code;
}

Outcome criterion7() {
  Outcome o;
  std::string job = R"({"context": "zeta5", "X": [32, 8, 2, "1/2", "1/8"]})";
  std::string out;
  auto t0 = Clock::now();
  int v = run_cli({"verify", "-p", job}, out);
  int i = run_cli({"irred", "-p", job}, out);
  auto reps = Json::parse(out)["reps"];
  int s = run_cli({"semisimple", "--mode", "constructive", "-p", job}, out);
  double pipeline = seconds_since(t0);
  o.require(v == 0 && i == 0 && s == 0, "pipeline exit codes " + std::to_string(v) + " " + std::to_string(i) + " " + std::to_string(s));
  std::size_t six = 0;
  for (const auto& r : reps) six += r["dim"] == 6;
  o.require(six == 5, "pipeline did not cover the five dim-6 representations");
  o.require(pipeline < 5.0, "pipeline took " + fmt(pipeline));

  std::vector<Rational> vals{1, 2, 3, 5, 7, q(1, 2), q(1, 3), -1, -2, -3, q(3, 2), q(-5, 2), 11};
  Json grid{{"size", 5}, {"limit", 1000}, {"values", Json::array()}};
  for (const auto& r : vals) grid["values"].push_back(to_string(r));
  std::string scan_job = Json{{"grid", grid}}.dump();
  auto t1 = Clock::now();
  std::string out4, out1;
  int c4 = run_cli({"scan", "-p", scan_job, "--jobs", "4"}, out4);
  double scan4 = seconds_since(t1);
  int c1 = run_cli({"scan", "-p", scan_job, "--jobs", "1"}, out1);
  auto count = Json::parse(out4)["count"].get<std::size_t>();
  o.require(c4 == 0 && c1 == 0, "scan exit codes");
  o.require(count == 1000, "scan covered " + std::to_string(count) + " points");
  o.require(scan4 < 600.0, "scan took " + fmt(scan4));
  o.require(out4 == out1, "scan output depends on the worker count");
  o.summary = "|X|=5 verify+irred+semisimple (45 reps) " + fmt(pipeline) + " (limit 5 s); 1000-point scan --jobs 4 " +
              fmt(scan4) + " (limit 600 s), identical to --jobs 1";
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&failed](int n, const std::string& title, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.summary = "aborted";
      o.problems.push_back(e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << " (" << title << "): " << o.summary << std::endl;
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
    failed += !o.ok;
  };

  Sweep sweep;
  try {
    sweep = build_sweep();
  } catch (const std::exception& e) {
    std::cout << "sweep construction failed: " << e.what() << "\n";
    return 7;
  }
  report(1, "structural identities", [&] { return criterion1(sweep); });
  report(2, "central value, traces, spectra", [&] { return criterion2(sweep); });
  report(3, "predicate/oracle agreement and witnesses", [&] { return criterion3(sweep); });
  report(4, "dimension census", [] { return criterion4(); });
  report(5, "degenerate sets are not semisimple", [] { return criterion5(); });
  report(6, "braid-word engine", [&] { return criterion6(sweep); });
  report(7, "performance", [] { return criterion7(); });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all 7 criteria passed")) << "\n";
  return failed;
}
