#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scfgrid/ablist.hpp"
#include "scfgrid/error.hpp"
#include "scfgrid/grid.hpp"
#include "scfgrid/io.hpp"
#include "scfgrid/profiles.hpp"
#include "scfgrid/quota.hpp"
#include "scfgrid/render.hpp"

namespace scfgrid::cli {

namespace {

constexpr int kFullMaxN = 4;
constexpr int kListsMaxN = 16;
constexpr int kQuotasMaxN = 10;
constexpr int kTfaeMaxN = 60;
constexpr int kEnumerateMaxN = 16;
constexpr std::size_t kTfaeSamples = 10000;

struct Options {
  int n = -1;
  std::string q;
  std::string k;
  std::string profile;
  std::string mode = "full";
  std::uint64_t seed = 20240601;
  std::string out;
  std::string in = "-";
  std::string format;
};

void require_n(const Options& o) {
  if (o.n < 0) throw DomainError("--n is required and must be nonnegative");
}

GridFunction rule_from_options(const Options& o) {
  require_n(o);
  if (o.q.empty() == o.k.empty()) throw DomainError("give exactly one of --q or --k");
  if (!o.q.empty()) return build_f_from_q(ABList(o.n, parse_int_list(o.q)));
  return build_f_from_quotas(QuotaSequence{o.n, parse_int_list(o.k)});
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw DomainError("cannot open output file " + o.out);
  file << text;
}

std::string render_as(const GridFunction& f, const std::string& format) {
  if (format.empty() || format == "json") return to_json(f).dump() + "\n";
  if (format == "ascii") return render_ascii(f);
  if (format == "svg") return render_svg(f);
  throw DomainError("unknown --format " + format);
}

int cmd_build(const Options& o, std::ostream& out) {
  require_n(o);
  if (o.q.empty()) throw DomainError("build needs --q");
  emit(o, out, render_as(build_f_from_q(ABList(o.n, parse_int_list(o.q))), o.format));
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  emit(o, out, render_as(rule_from_options(o), o.format.empty() ? "ascii" : o.format));
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const GridFunction f = rule_from_options(o);
  const Profile p = parse_profile(o.profile);
  out << to_char(eval_scf(f, p)) << "\n";
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  std::string text;
  if (o.in == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(o.in, std::ios::binary);
    if (!file) throw DomainError("cannot open input file " + o.in);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("input is not valid JSON: ") + e.what());
  }
  emit(o, out, to_json(decompose(function_from_json(j))).dump() + "\n");
  return kOk;
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream& err) {
  require_n(o);
  if (o.q.empty() == o.k.empty()) throw DomainError("give exactly one of --q or --k");

  std::optional<ABList> q;
  std::optional<QuotaSequence> ks;
  bool paths_agree = true;
  if (!o.k.empty()) {
    ks = QuotaSequence{o.n, parse_int_list(o.k)};
    q = q_from_quotas(*ks);
    paths_agree = q_from_quotas_matrix(*ks) == *q;
  } else {
    q = ABList(o.n, parse_int_list(o.q));
    ks = quotas_from_q(*q);
    paths_agree = quotas_from_q_matrix(*q) == *ks;
  }
  const GridFunction via_list = build_f_from_q(*q);
  const GridFunction via_quotas = build_f_from_quotas(*ks);
  const bool equivalent = via_list == via_quotas;
  const std::size_t points = via_list.grid().size();

  std::ostringstream text;
  if (o.format == "json") {
    nlohmann::json j = o.k.empty() ? to_json(*ks) : to_json(*q);
    j["equivalent"] = equivalent && paths_agree;
    text << j.dump() << "\n";
  } else {
    if (o.k.empty()) text << "k = " << format_terms(ks->quotas) << "\n";
    else text << "q = " << format_terms(q->terms()) << "\n";
    text << "check: pointwise equivalence " << (equivalent ? "OK" : "FAILED") << " on " << points
         << " grid points; matrix path " << (paths_agree ? "agrees" : "DISAGREES") << "\n";
  }
  emit(o, out, text.str());
  if (!equivalent || !paths_agree) {
    err << "error: conversion failed its equivalence check\n";
    return kInternal;
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require_n(o);
  if (o.n > kEnumerateMaxN) {
    throw ResourceError("enumerate limited to n <= " + std::to_string(kEnumerateMaxN));
  }
  std::ostringstream text;
  for (const ABList& q : enumerate_ablists(Grid(o.n))) text << to_json(q).dump() << "\n";
  emit(o, out, text.str());
  return kOk;
}

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void line(bool ok, const std::string& what) {
    out_ << (ok ? "PASS " : "FAIL ") << what << "\n";
    all_ok_ = all_ok_ && ok;
  }

  bool ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

void verify_full(int n, Report& report) {
  const Grid g(n);
  const std::uint64_t total = std::uint64_t{1} << g.size();
  std::uint64_t monotone = 0;
  bool tfae_ok = true;
  bool sp_ok = true;
  bool grid_sp_ok = true;
  bool bijection_ok = true;
  SweepOptions sweep;
  sweep.mode = SweepMode::Exhaustive;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const GridFunction f = GridFunction::from_bits(g, bits);
    const TfaeReport t = tfae_check(f);
    const bool dm = is_dually_monotone(f);
    tfae_ok = tfae_ok && t.consistent() && t.a_implication == dm;
    const bool sp = !find_manipulation(ScfOracle::from_function(f), sweep).has_value();
    sp_ok = sp_ok && sp == dm;
    grid_sp_ok = grid_sp_ok && grid_manipulation_check(f) == dm;
    if (dm) {
      ++monotone;
      bijection_ok = bijection_ok && build_f_from_q(decompose(f)) == f;
    }
  }
  const std::uint64_t expected = std::uint64_t{1} << (n + 1);
  report.line(monotone == expected, "dually-monotone count " + std::to_string(monotone) + "/" + std::to_string(total) +
                                        " (expected 2^" + std::to_string(n + 1) + " = " + std::to_string(expected) + ")");
  report.line(tfae_ok, "TFAE conditions agree on all " + std::to_string(total) + " functions");
  report.line(sp_ok, std::string("SP-equivalence ") + (sp_ok ? "OK" : "FAILED") +
                         ": profile-level manipulation search empty iff dually monotone");
  report.line(grid_sp_ok, "grid-level manipulation check agrees with dual monotonicity");
  report.line(bijection_ok, "build(decompose(f)) = f for every dually monotone f");
}

void verify_lists(int n, Report& report) {
  const auto lists = enumerate_ablists(Grid(n));
  bool round_trip = true;
  bool monotone = true;
  bool quotas_ok = true;
  for (const ABList& q : lists) {
    const GridFunction f = build_f_from_q(q);
    monotone = monotone && is_dually_monotone(f);
    round_trip = round_trip && decompose(f) == q;
    const QuotaSequence ks = quotas_from_q(q);
    quotas_ok = quotas_ok && quotas_from_q_matrix(q) == ks && q_from_quotas(ks) == q;
  }
  const std::size_t expected = std::size_t{1} << (n + 1);
  report.line(lists.size() == expected && round_trip,
              "2^" + std::to_string(n + 1) + " = " + std::to_string(expected) + " lists expected, " +
                  std::to_string(lists.size()) + " enumerated, " + (round_trip ? "all round-trip" : "round-trip FAILED"));
  report.line(monotone, "every built rule is dually monotone");
  report.line(quotas_ok, "list -> quotas -> list identity, matrix path agrees");
}

void verify_quotas(int n, Report& report) {
  const auto all = enumerate_quota_sequences(Grid(n));
  bool pointwise = true;
  bool paths = true;
  for (const QuotaSequence& ks : all) {
    const ABList q = q_from_quotas(ks);
    paths = paths && q_from_quotas_matrix(ks) == q && quotas_from_q(q) == ks;
    pointwise = pointwise && build_f_from_quotas(ks) == build_f_from_q(q);
  }
  const std::size_t expected = std::size_t{1} << (n + 1);
  report.line(all.size() == expected, std::to_string(all.size()) + " valid quota sequences (expected " +
                                          std::to_string(expected) + ")");
  report.line(pointwise, "quota-region rule equals converted list rule at every grid point");
  report.line(paths, "formula and matrix conversions agree, round trips hold");
}

void verify_tfae(int n, std::uint64_t seed, Report& report) {
  const Grid g(n);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  bool ok = true;
  for (std::size_t s = 0; s < kTfaeSamples; ++s) {
    std::vector<Alternative> table(g.size());
    for (auto& x : table) x = coin(rng) ? Alternative::B : Alternative::A;
    ok = ok && tfae_check(GridFunction(g, std::move(table))).consistent();
  }
  report.line(ok, "TFAE conditions agree on " + std::to_string(kTfaeSamples) + " random functions (seed " +
                      std::to_string(seed) + ")");
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_n(o);
  auto cap = [&](int max_n) {
    if (o.n > max_n) {
      throw ResourceError("verify --mode " + o.mode + " limited to n <= " + std::to_string(max_n) + ", got n = " +
                          std::to_string(o.n));
    }
  };
  Report report(out);
  if (o.mode == "full") {
    cap(kFullMaxN);
    verify_full(o.n, report);
    verify_lists(o.n, report);
  } else if (o.mode == "lists") {
    cap(kListsMaxN);
    verify_lists(o.n, report);
  } else if (o.mode == "quotas") {
    cap(kQuotasMaxN);
    verify_quotas(o.n, report);
  } else if (o.mode == "tfae") {
    cap(kTfaeMaxN);
    verify_tfae(o.n, o.seed, report);
  } else {
    throw DomainError("unknown --mode " + o.mode + " (expected full, lists, quotas or tfae)");
  }
  return report.ok() ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anonymous strategy-proof binary voting rules on the tally triangle"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "society size")->required(); };
  auto add_rule = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "{a,b}-list, e.g. 5,3,2,6,1,4");
    sub->add_option("--k", o.k, "up-and-down quota sequence, e.g. 8,14,7,19,3,21");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file (default stdout)"); };

  auto* build = app.add_subcommand("build", "build the rule table of an {a,b}-list");
  add_n(build);
  build->add_option("--q", o.q, "{a,b}-list")->required();
  build->add_option("--format", o.format, "json|ascii|svg")->check(CLI::IsMember({"json", "ascii", "svg"}));
  add_out(build);

  auto* eval = app.add_subcommand("eval", "evaluate a rule on a profile");
  add_n(eval);
  add_rule(eval);
  eval->add_option("--profile", o.profile, "ballots over \"ab-\"")->required();

  auto* decomp = app.add_subcommand("decompose", "recover the {a,b}-list of a rule table");
  decomp->add_option("--in", o.in, "table JSON file (default stdin)");
  add_out(decomp);

  auto* convert = app.add_subcommand("convert", "convert between {a,b}-lists and quota sequences");
  add_n(convert);
  add_rule(convert);
  convert->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  add_out(convert);

  auto* enumerate = app.add_subcommand("enumerate", "list every {a,b}-list for n as JSON lines");
  add_n(enumerate);
  add_out(enumerate);

  auto* verify = app.add_subcommand("verify", "run the property sweeps");
  add_n(verify);
  verify->add_option("--mode", o.mode, "full|lists|quotas|tfae");
  verify->add_option("--seed", o.seed, "seed for sampled modes");

  auto* render = app.add_subcommand("render", "draw a rule");
  add_n(render);
  add_rule(render);
  render->add_option("--format", o.format, "ascii|svg|json")->check(CLI::IsMember({"json", "ascii", "svg"}));
  add_out(render);

  std::vector<std::string> argv_storage{"scfgrid"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*build) return cmd_build(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*decomp) return cmd_decompose(o, out);
    if (*convert) return cmd_convert(o, out, err);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*render) return cmd_render(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalidInput;
}

}  // namespace scfgrid::cli
