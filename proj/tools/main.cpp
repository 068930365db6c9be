// Command-line front end over the ecgraph C API.  Every subcommand emits a
// report document ({params, command, seed, result, checks}) as JSON or flat
// text.  Exit codes: 0 when the requested property holds or checks pass,
// 1 when a property is refuted or a check fails, 2 on invalid input,
// 3 when a search refuses to start because its cost exceeds the budget.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecgraph.h"
#include "json_doc.hpp"

namespace {

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(ecg_status status) {
  return status == ECG_ERR_BUDGET_EXCEEDED ? 3 : 2;
}

void require(ecg_status status) {
  if (status != ECG_OK) throw CliError{exit_code_for(status), ecg_last_error()};
}

struct GraphHandle {
  ecg_graph* g = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { ecg_graph_free(g); }
};

struct SpectrumHandle {
  ecg_spectrum* s = nullptr;
  SpectrumHandle() = default;
  SpectrumHandle(const SpectrumHandle&) = delete;
  SpectrumHandle& operator=(const SpectrumHandle&) = delete;
  ~SpectrumHandle() { ecg_spectrum_free(s); }
};

struct CertHandle {
  ecg_certificate* c = nullptr;
  CertHandle() = default;
  CertHandle(const CertHandle&) = delete;
  CertHandle& operator=(const CertHandle&) = delete;
  ~CertHandle() { ecg_certificate_free(c); }
};

struct Common {
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--output", c.output,
                  "Write the report to this file instead of stdout");
  cmd->add_option("--seed", c.seed, "Seed for randomized scans")
      ->capture_default_str();
}

jdoc::Value graph_params_value(const ecg_params& p) {
  jdoc::Object obj;
  obj.push_back({"q", jdoc::Value(p.q)});
  obj.push_back({"e", jdoc::Value(static_cast<std::uint64_t>(p.e))});
  obj.push_back({"n", jdoc::Value(p.n)});
  obj.push_back({"degree", jdoc::Value(p.d)});
  return jdoc::Value(std::move(obj));
}

jdoc::Value check_entry(const std::string& name, bool ok,
                        const std::string& detail) {
  jdoc::Object obj;
  obj.push_back({"name", jdoc::Value(name)});
  obj.push_back({"ok", jdoc::Value(ok)});
  obj.push_back({"detail", jdoc::Value(detail)});
  return jdoc::Value(std::move(obj));
}

int finish(const Common& c, const std::string& command, jdoc::Value params,
           jdoc::Value result, jdoc::Array checks, bool ok) {
  jdoc::Object doc;
  doc.push_back({"params", std::move(params)});
  doc.push_back({"command", jdoc::Value(command)});
  doc.push_back({"seed", jdoc::Value(c.seed)});
  doc.push_back({"result", std::move(result)});
  doc.push_back({"checks", jdoc::Value(std::move(checks))});
  const std::string text = c.format == "text"
                               ? jdoc::dump_text(jdoc::Value(std::move(doc)))
                               : jdoc::dump_json(jdoc::Value(std::move(doc)));
  if (!c.output.empty()) {
    std::ofstream os(c.output, std::ios::binary);
    if (!os) throw CliError{2, "cannot open " + c.output + " for writing"};
    os << text;
    if (!os.flush()) throw CliError{2, "write to " + c.output + " failed"};
  } else {
    std::cout << text;
  }
  return ok ? 0 : 1;
}

struct ConstructOpts {
  std::uint64_t q = 0;
  std::uint32_t e = 1;
  std::string edges_out;
  Common common;
};

int run_construct(const ConstructOpts& o) {
  GraphHandle gh;
  require(ecg_graph_build(o.q, o.e, &gh.g));
  ecg_params p;
  require(ecg_graph_params(gh.g, &p));

  int regular = 0, symmetric = 0, loop_free = 0;
  require(ecg_graph_validate(gh.g, &regular, &symmetric, &loop_free));

  const std::uint64_t conn_size = ecg_graph_connection_set_size(gh.g);
  std::vector<std::uint64_t> conn(conn_size);
  require(ecg_graph_connection_set(gh.g, conn.data(), conn.size()));

  jdoc::Object result;
  result.push_back({"order", jdoc::Value(ecg_graph_order(gh.g))});
  result.push_back({"degree", jdoc::Value(ecg_graph_degree(gh.g))});
  result.push_back({"edge_count", jdoc::Value(ecg_graph_edge_count(gh.g))});
  result.push_back({"connection_set_size", jdoc::Value(conn_size)});
  jdoc::Array prefix;
  for (std::size_t i = 0; i < conn.size() && i < 16; ++i)
    prefix.push_back(jdoc::Value(conn[i]));
  result.push_back({"connection_set_prefix", jdoc::Value(std::move(prefix))});

  jdoc::Array checks;
  checks.push_back(check_entry("regular", regular != 0,
                               "every vertex has degree (n - n/q)/2"));
  checks.push_back(
      check_entry("symmetric", symmetric != 0, "adjacency matrix is symmetric"));
  checks.push_back(
      check_entry("loop_free", loop_free != 0, "no vertex is adjacent to itself"));
  bool ok = regular != 0 && symmetric != 0 && loop_free != 0;

  if (!o.edges_out.empty()) {
    require(ecg_graph_export_edge_list(gh.g, o.edges_out.c_str()));
    result.push_back({"edges_out", jdoc::Value(o.edges_out)});
    checks.push_back(
        check_entry("edges_exported", true, "edge list written to " + o.edges_out));
  }
  return finish(o.common, "construct", graph_params_value(p),
                jdoc::Value(std::move(result)), std::move(checks), ok);
}

struct SpectrumOpts {
  std::uint64_t q = 0;
  std::uint32_t e = 1;
  Common common;
};

int run_spectrum(const SpectrumOpts& o) {
  ecg_params p;
  require(ecg_params_create(o.q, o.e, &p));
  SpectrumHandle sh;
  require(ecg_spectrum_closed_form(o.q, o.e, &sh.s));

  jdoc::Object result;
  result.push_back({"lambda", jdoc::Value(ecg_spectrum_lambda(sh.s))});
  jdoc::Array classes;
  const std::uint64_t count = ecg_spectrum_class_count(sh.s);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::int64_t a = 0, b = 0;
    std::uint64_t mult = 0;
    double value = 0.0;
    require(ecg_spectrum_entry(sh.s, i, &a, &b, &mult, &value));
    jdoc::Object cls;
    cls.push_back({"a_coeff", jdoc::Value(a)});
    cls.push_back({"b_coeff", jdoc::Value(b)});
    cls.push_back({"multiplicity", jdoc::Value(mult)});
    cls.push_back({"value", jdoc::Value(value)});
    classes.push_back(jdoc::Value(std::move(cls)));
  }
  result.push_back({"classes", jdoc::Value(std::move(classes))});

  const bool identities = ecg_spectrum_check_identities(sh.s) != 0;
  jdoc::Array checks;
  checks.push_back(check_entry("spectrum_identities", identities,
                               "exact moment identities over the closed form"));
  return finish(o.common, "spectrum", graph_params_value(p),
                jdoc::Value(std::move(result)), std::move(checks), identities);
}

struct CheckEcOpts {
  std::uint64_t q = 0;
  std::uint32_t e = 1;
  std::uint64_t t = 0;
  std::string method = "exhaustive";
  unsigned threads = 0;
  std::uint64_t budget = 1000000000000ull;
  bool force = false;
  bool distinct_residues = false;
  Common common;
};

int run_check_ec(const CheckEcOpts& o) {
  if (o.method == "sufficient") {
    ecg_params p;
    require(ecg_params_create(o.q, o.e, &p));
    int holds = 0;
    require(ecg_sufficient_condition(o.q, o.e, o.t, &holds));
    jdoc::Object result;
    result.push_back({"t", jdoc::Value(o.t)});
    result.push_back({"verified", jdoc::Value(holds != 0)});
    result.push_back({"method", jdoc::Value("sufficient-condition")});
    jdoc::Array checks;
    checks.push_back(check_entry(
        "sufficient_condition", holds != 0,
        holds != 0 ? "exact integer inequality establishes the t-e.c. property"
                   : "inequality does not hold; nothing is refuted"));
    return finish(o.common, "check-ec", graph_params_value(p),
                  jdoc::Value(std::move(result)), std::move(checks), holds != 0);
  }

  GraphHandle gh;
  require(ecg_graph_build(o.q, o.e, &gh.g));
  ecg_params p;
  require(ecg_graph_params(gh.g, &p));
  ecg_ec_options opts;
  opts.threads = o.threads;
  opts.budget = o.budget;
  opts.force = o.force ? 1 : 0;
  opts.distinct_residues = o.distinct_residues ? 1 : 0;
  CertHandle ch;
  require(ecg_brute_force_ec(gh.g, o.t, &opts, &ch.c));

  const bool verified = ecg_certificate_verified(ch.c) != 0;
  jdoc::Object result;
  result.push_back({"t", jdoc::Value(o.t)});
  result.push_back({"verified", jdoc::Value(verified)});
  result.push_back({"method", jdoc::Value("exhaustive")});
  result.push_back({"distinct_residues", jdoc::Value(o.distinct_residues)});
  result.push_back(
      {"search_space", jdoc::Value(ecg_certificate_search_space(ch.c))});
  if (ecg_certificate_has_witness_min(ch.c) != 0)
    result.push_back(
        {"witness_count_min", jdoc::Value(ecg_certificate_witness_min(ch.c))});
  if (ecg_certificate_has_counterexample(ch.c) != 0) {
    std::size_t a_len = 0, b_len = 0;
    require(ecg_certificate_counterexample_sizes(ch.c, &a_len, &b_len));
    std::vector<std::uint64_t> a(a_len), b(b_len);
    require(ecg_certificate_counterexample(ch.c, a.data(), a.size(), b.data(),
                                           b.size()));
    jdoc::Array ja, jb;
    for (std::uint64_t v : a) ja.push_back(jdoc::Value(v));
    for (std::uint64_t v : b) jb.push_back(jdoc::Value(v));
    jdoc::Object cex;
    cex.push_back({"a", jdoc::Value(std::move(ja))});
    cex.push_back({"b", jdoc::Value(std::move(jb))});
    result.push_back({"counterexample", jdoc::Value(std::move(cex))});
  }
  jdoc::Array checks;
  checks.push_back(check_entry(
      "t_ec_verified", verified,
      verified ? "every (A, B) configuration has an extender"
               : "first configuration without an extender reported"));
  return finish(o.common, "check-ec", graph_params_value(p),
                jdoc::Value(std::move(result)), std::move(checks), verified);
}

struct MixingOpts {
  std::uint64_t q = 0;
  std::uint32_t e = 1;
  std::uint64_t samples = 1000;
  Common common;
};

int run_mixing(const MixingOpts& o) {
  GraphHandle gh;
  require(ecg_graph_build(o.q, o.e, &gh.g));
  ecg_params p;
  require(ecg_graph_params(gh.g, &p));

  ecg_mixing_result mix;
  require(ecg_mixing_scan(gh.g, o.samples, o.common.seed, &mix));
  ecg_quasirandom quasi;
  require(ecg_quasirandom_stats(o.q, o.e, &quasi));
  double cheeger = 0.0;
  require(ecg_cheeger_spectral_lower(o.q, o.e, &cheeger));

  jdoc::Object result;
  result.push_back({"samples", jdoc::Value(mix.samples)});
  result.push_back({"lambda", jdoc::Value(mix.lambda)});
  result.push_back({"max_normalized", jdoc::Value(mix.max_normalized)});
  jdoc::Object worst;
  worst.push_back({"u_size", jdoc::Value(mix.worst_u_size)});
  worst.push_back({"w_size", jdoc::Value(mix.worst_w_size)});
  worst.push_back({"edges", jdoc::Value(mix.worst_edges)});
  worst.push_back({"expected", jdoc::Value(mix.worst_expected)});
  result.push_back({"worst", jdoc::Value(std::move(worst))});
  jdoc::Object qr;
  qr.push_back({"edge_count", jdoc::Value(quasi.edge_count)});
  qr.push_back({"lambda1_over_pn", jdoc::Value(quasi.lambda1_over_pn)});
  qr.push_back({"lambda2_over_n", jdoc::Value(quasi.lambda2_over_n)});
  result.push_back({"quasirandom", jdoc::Value(std::move(qr))});
  result.push_back({"cheeger_spectral_lower", jdoc::Value(cheeger)});

  jdoc::Array checks;
  checks.push_back(check_entry(
      "mixing_bound", mix.ok != 0,
      "every sampled pair satisfies |e(U,W) - d|U||W|/n| <= lambda*sqrt(|U||W|)"));
  return finish(o.common, "mixing", graph_params_value(p),
                jdoc::Value(std::move(result)), std::move(checks), mix.ok != 0);
}

struct TrendOpts {
  std::uint32_t e = 1;
  std::vector<std::uint64_t> qs;
  Common common;
};

int run_trend(const TrendOpts& o) {
  std::vector<std::uint64_t> qs = o.qs;
  std::sort(qs.begin(), qs.end());
  const std::size_t count = qs.size();
  std::vector<std::uint64_t> orders(count), degrees(count);
  std::vector<double> lambdas(count), ratios(count), edge_probs(count);
  double epsilon = 0.0;
  require(ecg_family_trend(o.e, qs.data(), count, orders.data(),
                           degrees.data(), lambdas.data(), ratios.data(),
                           edge_probs.data(), &epsilon));

  jdoc::Object params;
  params.push_back({"e", jdoc::Value(static_cast<std::uint64_t>(o.e))});
  jdoc::Array qlist;
  for (std::uint64_t q : qs) qlist.push_back(jdoc::Value(q));
  params.push_back({"q_list", jdoc::Value(std::move(qlist))});

  jdoc::Array instances;
  for (std::size_t i = 0; i < count; ++i) {
    jdoc::Object inst;
    inst.push_back({"q", jdoc::Value(qs[i])});
    inst.push_back({"n", jdoc::Value(orders[i])});
    inst.push_back({"degree", jdoc::Value(degrees[i])});
    inst.push_back({"lambda", jdoc::Value(lambdas[i])});
    inst.push_back({"ratio", jdoc::Value(ratios[i])});
    inst.push_back({"edge_probability", jdoc::Value(edge_probs[i])});
    instances.push_back(jdoc::Value(std::move(inst)));
  }
  jdoc::Object result;
  result.push_back({"instances", jdoc::Value(std::move(instances))});
  result.push_back({"epsilon", jdoc::Value(epsilon)});

  bool expected = true;
  std::string detail;
  if (o.e == 1) {
    for (double r : ratios) expected = expected && r <= 2.0;
    detail = "lambda / sqrt(d) stays bounded by 2 across the family (e = 1)";
  } else {
    for (std::size_t i = 1; i < count; ++i)
      expected = expected && ratios[i] > ratios[i - 1];
    detail =
        "lambda / sqrt(d) strictly increases across the family (e >= 3), so "
        "the family is not optimally pseudo-random";
  }
  jdoc::Array checks;
  checks.push_back(check_entry("expected_trend", expected, detail));
  return finish(o.common, "trend", jdoc::Value(std::move(params)),
                jdoc::Value(std::move(result)), std::move(checks), expected);
}

struct FindQ1Opts {
  std::uint64_t t = 0;
  std::uint32_t e = 1;
  Common common;
};

int run_find_q1(const FindQ1Opts& o) {
  std::uint64_t q = 0;
  require(ecg_find_least_q1(o.t, o.e, &q));
  jdoc::Object params;
  params.push_back({"t", jdoc::Value(o.t)});
  params.push_back({"e", jdoc::Value(static_cast<std::uint64_t>(o.e))});
  jdoc::Object result;
  result.push_back({"q", jdoc::Value(q)});
  jdoc::Array checks;
  checks.push_back(check_entry(
      "found", true,
      "least prime q = 1 (mod 4) whose graph the exact inequality certifies"));
  return finish(o.common, "find-q1", jdoc::Value(std::move(params)),
                jdoc::Value(std::move(result)), std::move(checks), true);
}

struct ReportOpts {
  std::uint64_t q = 0;
  std::uint32_t e = 1;
  std::uint64_t t_max = 4;
  std::uint64_t samples = 1000;
  Common common;
};

int run_report(const ReportOpts& o) {
  GraphHandle gh;
  require(ecg_graph_build(o.q, o.e, &gh.g));
  ecg_params p;
  require(ecg_graph_params(gh.g, &p));

  int regular = 0, symmetric = 0, loop_free = 0;
  require(ecg_graph_validate(gh.g, &regular, &symmetric, &loop_free));

  SpectrumHandle sh;
  require(ecg_spectrum_closed_form(o.q, o.e, &sh.s));
  const bool identities = ecg_spectrum_check_identities(sh.s) != 0;

  ecg_mixing_result mix;
  require(ecg_mixing_scan(gh.g, o.samples, o.common.seed, &mix));
  ecg_quasirandom quasi;
  require(ecg_quasirandom_stats(o.q, o.e, &quasi));
  double cheeger = 0.0;
  require(ecg_cheeger_spectral_lower(o.q, o.e, &cheeger));

  jdoc::Object result;
  result.push_back({"order", jdoc::Value(p.n)});
  result.push_back({"degree", jdoc::Value(p.d)});
  result.push_back({"edge_count", jdoc::Value(ecg_graph_edge_count(gh.g))});
  result.push_back({"lambda", jdoc::Value(ecg_spectrum_lambda(sh.s))});

  jdoc::Array sufficient;
  for (std::uint64_t t = 1; t <= o.t_max; ++t) {
    int holds = 0;
    require(ecg_sufficient_condition(o.q, o.e, t, &holds));
    jdoc::Object entry;
    entry.push_back({"t", jdoc::Value(t)});
    entry.push_back({"established", jdoc::Value(holds != 0)});
    sufficient.push_back(jdoc::Value(std::move(entry)));
  }
  result.push_back({"sufficient_condition", jdoc::Value(std::move(sufficient))});

  jdoc::Object mixing;
  mixing.push_back({"samples", jdoc::Value(mix.samples)});
  mixing.push_back({"max_normalized", jdoc::Value(mix.max_normalized)});
  mixing.push_back({"lambda", jdoc::Value(mix.lambda)});
  result.push_back({"mixing", jdoc::Value(std::move(mixing))});

  jdoc::Object qr;
  qr.push_back({"edge_count", jdoc::Value(quasi.edge_count)});
  qr.push_back({"lambda1_over_pn", jdoc::Value(quasi.lambda1_over_pn)});
  qr.push_back({"lambda2_over_n", jdoc::Value(quasi.lambda2_over_n)});
  result.push_back({"quasirandom", jdoc::Value(std::move(qr))});
  result.push_back({"cheeger_spectral_lower", jdoc::Value(cheeger)});

  jdoc::Array checks;
  checks.push_back(check_entry("regular", regular != 0,
                               "every vertex has degree (n - n/q)/2"));
  checks.push_back(
      check_entry("symmetric", symmetric != 0, "adjacency matrix is symmetric"));
  checks.push_back(
      check_entry("loop_free", loop_free != 0, "no vertex is adjacent to itself"));
  checks.push_back(check_entry("spectrum_identities", identities,
                               "exact moment identities over the closed form"));
  checks.push_back(check_entry("mixing_bound", mix.ok != 0,
                               "all sampled pairs satisfy the spectral bound"));
  const bool ok = regular != 0 && symmetric != 0 && loop_free != 0 &&
                  identities && mix.ok != 0;
  return finish(o.common, "report", graph_params_value(p),
                jdoc::Value(std::move(result)), std::move(checks), ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quadratic unitary Cayley graphs over Z_{q^e}: construction, "
      "t-existential-closure certification, exact spectra, and "
      "pseudo-randomness measurements"};
  app.require_subcommand(1);
  int rc = 0;

  ConstructOpts construct_opts;
  CLI::App* construct =
      app.add_subcommand("construct", "Build a graph and validate structure");
  construct->add_option("--q", construct_opts.q, "Prime q = 1 (mod 4)")
      ->required();
  construct->add_option("--e", construct_opts.e, "Odd exponent")
      ->capture_default_str();
  construct->add_option("--edges-out", construct_opts.edges_out,
                        "Also write the edge list to this file");
  add_common(construct, construct_opts.common);
  construct->callback([&] { rc = run_construct(construct_opts); });

  SpectrumOpts spectrum_opts;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Closed-form spectrum with exact classes");
  spectrum->add_option("--q", spectrum_opts.q, "Prime q = 1 (mod 4)")
      ->required();
  spectrum->add_option("--e", spectrum_opts.e, "Odd exponent")
      ->capture_default_str();
  add_common(spectrum, spectrum_opts.common);
  spectrum->callback([&] { rc = run_spectrum(spectrum_opts); });

  CheckEcOpts check_opts;
  CLI::App* check =
      app.add_subcommand("check-ec", "Certify or refute the t-e.c. property");
  check->add_option("--q", check_opts.q, "Prime q = 1 (mod 4)")->required();
  check->add_option("--e", check_opts.e, "Odd exponent")->capture_default_str();
  check->add_option("--t", check_opts.t, "Number of prescribed vertices")
      ->required();
  check->add_option("--method", check_opts.method,
                    "exhaustive search or the exact sufficient condition")
      ->check(CLI::IsMember({"exhaustive", "sufficient"}))
      ->capture_default_str();
  check->add_option("--threads", check_opts.threads,
                    "Worker threads for the exhaustive search (0 = auto)")
      ->envname("ECGRAPH_THREADS")
      ->capture_default_str();
  check->add_option("--budget", check_opts.budget,
                    "Cost cap for the exhaustive search, in bitset words")
      ->capture_default_str();
  check->add_flag("--force", check_opts.force,
                  "Run even when the cost estimate exceeds the budget");
  check->add_flag("--distinct-residues", check_opts.distinct_residues,
                  "Restrict the scan to configurations with pairwise "
                  "distinct residues mod q (the form the sufficient "
                  "condition certifies when e > 1)");
  add_common(check, check_opts.common);
  check->callback([&] { rc = run_check_ec(check_opts); });

  MixingOpts mixing_opts;
  CLI::App* mixing = app.add_subcommand(
      "mixing", "Sampled expander-mixing scan plus quasi-random statistics");
  mixing->add_option("--q", mixing_opts.q, "Prime q = 1 (mod 4)")->required();
  mixing->add_option("--e", mixing_opts.e, "Odd exponent")
      ->capture_default_str();
  mixing->add_option("--samples", mixing_opts.samples,
                     "Number of random (U, W) pairs")
      ->capture_default_str();
  add_common(mixing, mixing_opts.common);
  mixing->callback([&] { rc = run_mixing(mixing_opts); });

  TrendOpts trend_opts;
  CLI::App* trend = app.add_subcommand(
      "trend", "lambda / sqrt(d) across a fixed-exponent family");
  trend->add_option("--e", trend_opts.e, "Odd exponent shared by the family")
      ->capture_default_str();
  trend->add_option("--q", trend_opts.qs, "Primes q = 1 (mod 4); repeatable")
      ->required();
  add_common(trend, trend_opts.common);
  trend->callback([&] { rc = run_trend(trend_opts); });

  FindQ1Opts find_opts;
  CLI::App* find = app.add_subcommand(
      "find-q1", "Least prime the sufficient condition certifies for (t, e)");
  find->add_option("--t", find_opts.t, "Number of prescribed vertices")
      ->required();
  find->add_option("--e", find_opts.e, "Odd exponent")->capture_default_str();
  add_common(find, find_opts.common);
  find->callback([&] { rc = run_find_q1(find_opts); });

  ReportOpts report_opts;
  CLI::App* report = app.add_subcommand(
      "report", "Combined structural, spectral, and pseudo-randomness report");
  report->add_option("--q", report_opts.q, "Prime q = 1 (mod 4)")->required();
  report->add_option("--e", report_opts.e, "Odd exponent")
      ->capture_default_str();
  report->add_option("--t", report_opts.t_max,
                     "Largest t for the sufficient-condition table")
      ->capture_default_str();
  report->add_option("--samples", report_opts.samples,
                     "Number of random (U, W) pairs for the mixing scan")
      ->capture_default_str();
  add_common(report, report_opts.common);
  report->callback([&] { rc = run_report(report_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return rc;
}
