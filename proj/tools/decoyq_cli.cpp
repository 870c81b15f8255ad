// decoyq command-line front end. Links only the C interface.
//
// Exit codes: 0 success, 1 bad arguments or failed computation, 2 when
// verify-table finds a closed form deviating from simulation by >= 1e-9.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "decoyq/decoyq.h"

namespace {

constexpr double kRegressionThreshold = 1e-9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for failures reported by the library.
struct LibraryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(dq_status status, const std::string& context) {
  if (status == DQ_OK) return;
  std::string msg = context + ": " + dq_status_message(status);
  const std::string detail = dq_last_error();
  if (!detail.empty()) msg += " (" + detail + ")";
  if (status == DQ_ERR_INVALID_ARGUMENT || status == DQ_ERR_NO_CLOSED_FORM)
    throw UsageError(msg);
  throw LibraryError(msg);
}

template <class Handle, class Fn>
std::string fetch_text(const Handle* h, Fn fn) {
  size_t needed = 0;
  dq_status st = fn(h, nullptr, 0, &needed);
  if (st != DQ_ERR_BUFFER_TOO_SMALL) check(st, "text size query");
  std::string text(needed, '\0');
  check(fn(h, text.data(), text.size(), &needed), "text fetch");
  text.resize(needed - 1);
  return text;
}

struct SchemeDeleter {
  void operator()(dq_scheme* s) const { dq_scheme_free(s); }
};
struct ReportsDeleter {
  void operator()(dq_reports* r) const { dq_reports_free(r); }
};
struct RankingDeleter {
  void operator()(dq_ranking* r) const { dq_ranking_free(r); }
};
struct AttackDeleter {
  void operator()(dq_attack* a) const { dq_attack_free(a); }
};
using SchemePtr = std::unique_ptr<dq_scheme, SchemeDeleter>;
using ReportsPtr = std::unique_ptr<dq_reports, ReportsDeleter>;
using RankingPtr = std::unique_ptr<dq_ranking, RankingDeleter>;
using AttackPtr = std::unique_ptr<dq_attack, AttackDeleter>;

SchemePtr parse_scheme(const std::string& text) {
  dq_scheme* raw = nullptr;
  check(dq_scheme_parse(text.c_str(), &raw), "scheme '" + text + "'");
  return SchemePtr(raw);
}

std::vector<SchemePtr> parse_schemes(const std::vector<std::string>& names) {
  std::vector<SchemePtr> out;
  for (const auto& n : names) out.push_back(parse_scheme(n));
  return out;
}

std::vector<const dq_scheme*> raw_view(const std::vector<SchemePtr>& schemes) {
  std::vector<const dq_scheme*> out;
  for (const auto& s : schemes) out.push_back(s.get());
  return out;
}

dq_noise_family parse_noise(const std::string& text) {
  if (text.empty()) throw UsageError("--noise is required (ad, pd, cd, cr)");
  dq_noise_family family{};
  check(dq_noise_parse(text.c_str(), &family), "noise '" + text + "'");
  return family;
}

void require_grid(int grid) {
  if (grid < 2) throw UsageError("grid must be ≥ 2");
}

void emit(const std::string& data, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + out_path + "'");
  f << data;
  if (!f) throw LibraryError("failed writing '" + out_path + "'");
}

struct Options {
  std::string out;
  int grid = 0;
  std::string noise;
  std::vector<std::string> schemes;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<double> eta;
  std::optional<double> phi;
  std::optional<double> theta;
  double perturb = 0.0;
  std::string attack = "intercept-resend";
  std::string bell = "psi+";
  std::vector<int> pair = {2, 3};
  std::string method = "exact";
  std::uint64_t trials = 1000000;
  std::optional<std::uint64_t> seed;
  bool no_eve = false;
};

int run_verify(const Options& o) {
  require_grid(o.grid);
  dq_reports* raw = nullptr;
  check(dq_verify_table(o.grid, o.perturb, &raw), "verify-table");
  ReportsPtr reports(raw);

  emit(fetch_text(reports.get(), dq_reports_csv), o.out);
  std::cerr << fetch_text(reports.get(), dq_reports_summary_csv);

  double worst = 0.0;
  for (size_t i = 0; i < dq_reports_count(reports.get()); ++i) {
    double dev = 0.0;
    check(dq_reports_max_deviation(reports.get(), i, &dev), "verify-table deviation");
    worst = std::max(worst, dev);
  }
  std::cerr << "worst max_abs_deviation: " << worst << '\n';
  if (worst >= kRegressionThreshold) {
    std::cerr << "verify-table: closed form regression (deviation >= 1e-9)\n";
    return 2;
  }
  return 0;
}

std::pair<double, double> sweep_range(const Options& o, dq_noise_family family) {
  double lo = 0.0, hi = 0.0;
  check(dq_noise_default_range(family, &lo, &hi), "default range");
  return {o.from.value_or(lo), o.to.value_or(hi)};
}

int run_sweep(const Options& o) {
  require_grid(o.grid);
  const auto family = parse_noise(o.noise);
  if (o.schemes.empty()) throw UsageError("--schemes is required");
  const auto schemes = parse_schemes(o.schemes);
  const auto view = raw_view(schemes);
  const auto [lo, hi] = sweep_range(o, family);
  dq_reports* raw = nullptr;
  check(dq_sweep(view.data(), view.size(), family, lo, hi, o.grid, &raw), "sweep");
  ReportsPtr reports(raw);
  emit(fetch_text(reports.get(), dq_reports_csv), o.out);
  return 0;
}

double noise_parameter(const Options& o, dq_noise_family family) {
  const char* expected = nullptr;
  std::optional<double> value;
  switch (family) {
    case DQ_NOISE_AD:
    case DQ_NOISE_PD:
      expected = "--eta";
      value = o.eta;
      break;
    case DQ_NOISE_CD:
      expected = "--phi";
      value = o.phi;
      break;
    case DQ_NOISE_CR:
      expected = "--theta";
      value = o.theta;
      break;
  }
  const int given = o.eta.has_value() + o.phi.has_value() + o.theta.has_value();
  if (!value || given != 1)
    throw UsageError(std::string("this noise family takes exactly one parameter: ") + expected);
  return *value;
}

int run_recommend(const Options& o) {
  const auto family = parse_noise(o.noise);
  const double param = noise_parameter(o, family);
  const auto schemes = parse_schemes(o.schemes);
  const auto view = raw_view(schemes);
  dq_ranking* raw = nullptr;
  check(dq_recommend(family, param, view.empty() ? nullptr : view.data(), view.size(), &raw),
        "recommend");
  RankingPtr ranking(raw);
  emit(fetch_text(ranking.get(), dq_ranking_csv), o.out);
  return 0;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run_crossover(const Options& o) {
  const auto family = parse_noise(o.noise);
  if (o.schemes.size() != 2) throw UsageError("--schemes takes exactly two schemes");
  const auto schemes = parse_schemes(o.schemes);
  const auto [lo, hi] = sweep_range(o, family);
  double root = 0.0;
  const dq_status st = dq_find_crossover(schemes[0].get(), schemes[1].get(), family, lo, hi, &root);
  if (st == DQ_ERR_NO_CROSSOVER) throw LibraryError("no crossover in interval");
  check(st, "crossover");
  std::ostringstream os;
  os << "scheme_a,scheme_b,noise,lo,hi,crossover\n"
     << o.schemes[0] << ',' << o.schemes[1] << ',' << o.noise << ',' << format_double(lo) << ','
     << format_double(hi) << ',' << format_double(root) << '\n';
  emit(os.str(), o.out);
  return 0;
}

int run_eve(const Options& o) {
  dq_attack_method method{};
  if (o.method == "exact") {
    method = DQ_METHOD_EXACT;
  } else if (o.method == "mc") {
    method = DQ_METHOD_MONTE_CARLO;
    if (!o.seed) throw UsageError("--seed is required with --method mc");
  } else {
    throw UsageError("--method must be 'exact' or 'mc'");
  }
  const std::uint64_t seed = o.seed.value_or(0);

  dq_attack* raw = nullptr;
  if (o.attack == "intercept-resend") {
    check(dq_intercept_resend(method, o.trials, seed, o.no_eve ? 0 : 1, &raw), "eve-sim");
  } else if (o.attack == "wrong-pair") {
    if (o.pair.size() != 2) throw UsageError("--pair takes two qubit positions, e.g. 2,3");
    check(dq_wrong_pair_attack(o.bell.c_str(), o.pair[0], o.pair[1], method, o.trials, seed, &raw),
          "eve-sim");
  } else {
    throw UsageError("--attack must be 'intercept-resend' or 'wrong-pair'");
  }
  AttackPtr attack(raw);
  emit(fetch_text(attack.get(), dq_attack_csv), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decoy-qubit fidelity under noisy quantum channels"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Output path (default stdout)"); };

  auto* verify = app.add_subcommand("verify-table", "Check every closed form against simulation");
  verify->add_option("--grid", o.grid, "Grid points per cell")->default_val(21);
  verify->add_option("--perturb", o.perturb, "Offset added to every closed form (mutation check)");
  add_out(verify);

  auto* sweep = app.add_subcommand("sweep", "Fidelity curves over a parameter range (CSV)");
  sweep->add_option("--noise", o.noise, "ad | pd | cd | cr");
  sweep->add_option("--schemes", o.schemes, "Comma-separated schemes")->delimiter(',');
  sweep->add_option("--grid", o.grid, "Grid points")->default_val(101);
  sweep->add_option("--from", o.from, "Range start (default 0)");
  sweep->add_option("--to", o.to, "Range end (default 1 for ad/pd, 2pi for cd/cr)");
  add_out(sweep);

  auto* rec = app.add_subcommand("recommend", "Rank decoy schemes for one noise setting");
  rec->add_option("--noise", o.noise, "ad | pd | cd | cr");
  rec->add_option("--eta", o.eta, "Decoherence rate for ad/pd");
  rec->add_option("--phi", o.phi, "Dephasing angle for cd (radians)");
  rec->add_option("--theta", o.theta, "Rotation angle for cr (radians)");
  rec->add_option("--schemes", o.schemes, "Candidates (default: bb84,psi+,psi-,phi+,phi-,cluster)")
      ->delimiter(',');
  add_out(rec);

  auto* cross = app.add_subcommand("crossover", "Parameter where two schemes' fidelities cross");
  cross->add_option("--noise", o.noise, "ad | pd | cd | cr");
  cross->add_option("--schemes", o.schemes, "Exactly two schemes")->delimiter(',');
  cross->add_option("--from", o.from, "Bracket start");
  cross->add_option("--to", o.to, "Bracket end");
  add_out(cross);

  auto* eve = app.add_subcommand("eve-sim", "Eavesdropping detection statistics");
  eve->add_option("--attack", o.attack, "intercept-resend | wrong-pair");
  eve->add_option("--bell", o.bell, "Bell label for wrong-pair");
  eve->add_option("--pair", o.pair, "Eavesdropper's qubit pair, 1-based")->delimiter(',');
  eve->add_option("--method", o.method, "exact | mc");
  eve->add_option("--trials", o.trials, "Monte Carlo trials");
  eve->add_option("--seed", o.seed, "Monte Carlo seed (required for mc)");
  eve->add_flag("--no-eve", o.no_eve, "Identity channel for intercept-resend");
  add_out(eve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (verify->parsed()) return run_verify(o);
    if (sweep->parsed()) return run_sweep(o);
    if (rec->parsed()) return run_recommend(o);
    if (cross->parsed()) return run_crossover(o);
    if (eve->parsed()) return run_eve(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
