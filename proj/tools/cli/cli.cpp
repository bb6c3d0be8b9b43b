// Copyright 2026 The ergogap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ergogap/dobrushin.hpp"
#include "ergogap/error.hpp"
#include "ergogap/io.hpp"
#include "ergogap/oracle.hpp"
#include "ergogap/spectral_bound.hpp"
#include "ergogap/stationary.hpp"
#include "inputs.hpp"
#include "json.hpp"
#include "report.hpp"

namespace ergogap::cli {
namespace {

using nlohmann::json;

// Tolerance for the oracle's soundness check: bound >= |lambda_2| - tol.
constexpr double kCheckTolerance = 1e-9;

struct Flags {
  MatrixFlags matrix;
  std::optional<double> google;
  std::string teleport = "uniform";
  std::size_t pair_cap = kDefaultPairCap;
  std::size_t dense_cap = kDefaultDenseCap;
  bool verbose = false;

  std::size_t k_max = kDefaultKMax;

  double tol = 1e-10;
  std::size_t max_iters = 100000;
  std::size_t max_m = 8;
  std::string x0 = "uniform";
  std::string out;

  double zero_threshold = 0.0;

  std::size_t oracle_cap = kDefaultOracleCap;
  std::string check;
  std::string residual;
};

// What a command produced. A nonzero exit with a report still prints the
// report, e.g. a failed --check.
struct Outcome {
  json result;
  std::string summary;
  int exit_code = kExitOk;
  std::optional<Error> failure;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionCapExceeded:
    case ErrorCode::kPairCapExceeded:
      return kExitCap;
    case ErrorCode::kNoContraction:
      return kExitNoContraction;
    case ErrorCode::kMaxItersExceeded:
      return kExitMaxIters;
    case ErrorCode::kNoConvergence:
      return kExitVerification;
    default:
      return kExitInput;
  }
}

json error_json(std::string_view code, std::string_view message, int exit_code) {
  return {{"error", {{"code", code}, {"message", message}, {"exit_code", exit_code}}}};
}

std::optional<std::size_t> env_pair_cap() {
  const char* raw = std::getenv("ERGOGAP_PAIR_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string_view s(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "ERGOGAP_PAIR_CAP must be a nonnegative integer, got '" + std::string(s) + "'");
  }
  return value;
}

json matrix_parameters(const Flags& f) {
  json p{{"row_sum_tol", f.matrix.row_sum_tol}};
  if (!f.matrix.edges.empty()) {
    p["edges"] = f.matrix.edges;
    p["dangling"] = f.matrix.dangling;
  } else {
    p["dense"] = f.matrix.dense;
  }
  return p;
}

json damping_parameters(const Flags& f) {
  if (!f.google) return {{"google", nullptr}};
  return {{"google", *f.google}, {"teleport", f.teleport}};
}

std::optional<GoogleMatrix> maybe_google(const Flags& f, const LoadedMatrix& in,
                                         InputDigest& digest) {
  if (!f.google) return std::nullopt;
  auto z = load_simplex(f.teleport, in.matrix.size(), "teleport", digest);
  return build_google(in.matrix, *f.google, std::move(z));
}

CoefficientOptions coefficient_options(const Flags& f, std::optional<CoefficientForm> form) {
  CoefficientOptions o;
  o.form = form;
  o.pair_cap = f.pair_cap;
  return o;
}

template <class M>
json coefficient_payload(const M& a, const Flags& f, const LoadedMatrix& in) {
  const auto primary = dobrushin_coefficient(a, coefficient_options(f, std::nullopt));
  const auto half = dobrushin_coefficient(a, coefficient_options(f, CoefficientForm::kHalfL1));
  const auto overlap =
      dobrushin_coefficient(a, coefficient_options(f, CoefficientForm::kOneMinusOverlap));
  return {{"q", primary.q},
          {"form", std::string(to_string(primary.form))},
          {"argmax_pair", {in.label(primary.argmax_pair.first), in.label(primary.argmax_pair.second)}},
          {"forms", {{"half_l1", half.q}, {"one_minus_overlap", overlap.q}}},
          {"cross_check_delta", std::abs(half.q - overlap.q)}};
}

Outcome cmd_coeff(const Flags& f, InputDigest& digest) {
  const auto in = load_matrix(f.matrix, digest);
  const auto g = maybe_google(f, in, digest);
  json result = g ? coefficient_payload(*g, f, in) : coefficient_payload(in.matrix, f, in);
  result["input"] = input_summary(in);
  std::ostringstream s;
  s << "q = " << result["q"].get<double>() << " (n = " << in.matrix.size() << ")";
  return {std::move(result), s.str(), kExitOk, std::nullopt};
}

Outcome cmd_bound(const Flags& f, InputDigest& digest) {
  const auto in = load_matrix(f.matrix, digest);
  const auto g = maybe_google(f, in, digest);
  SequenceOptions so;
  so.dense_cap = f.dense_cap;
  so.pair_cap = f.pair_cap;
  const auto co = coefficient_options(f, std::nullopt);

  std::vector<SpectralCertificate> certs;
  json skipped = nullptr;
  json closed_count = nullptr;
  if (!g) {
    certs.push_back(certificate_sequence(in.matrix, f.k_max, so));
  } else {
    // The power sequence needs dense powers. Past the dense cap the mixture
    // certificates still stand, so record the skip instead of failing.
    try {
      certs.push_back(certificate_sequence(*g, f.k_max, so));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDimensionCapExceeded) throw;
      skipped = std::string(to_string(e.code())) + ": " + e.what();
    }
    certs.push_back(mixture_bound(*g, co));
    if (g->rank_one()) {
      closed_count = closed_subsets(in.matrix).count;
      auto exact = exactness_check(in.matrix, *g->teleport_vector(), *f.google, co);
      if (exact.exact) certs.push_back(std::move(exact));
    }
  }

  std::size_t primary = 0;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (certs[i].exact) {
      primary = i;
      break;
    }
    if (certs[i].best_bound < certs[primary].best_bound) primary = i;
  }
  const auto& best = certs[primary];
  json list = json::array();
  for (const auto& c : certs) list.push_back(to_json(c));

  json result{{"best_bound", best.best_bound},
              {"primary_source", std::string(to_string(best.source))},
              {"exact", best.exact},
              {"headline_bound", g && g->rank_one() ? json(*f.google) : json(nullptr)},
              {"k_max", f.k_max},
              {"sequence_skipped", std::move(skipped)},
              {"closed_subset_count", std::move(closed_count)},
              {"certificates", std::move(list)},
              {"input", input_summary(in)}};
  std::ostringstream s;
  s << "|lambda_2| <= " << best.best_bound << " via " << to_string(best.source)
    << (best.exact ? " (exact)" : "");
  return {std::move(result), s.str(), kExitOk, std::nullopt};
}

Outcome stationary_outcome(const ContractionCertificate& cert, const Flags& f,
                           const LoadedMatrix& in) {
  json result = to_json(cert);
  result["input"] = input_summary(in);
  if (!f.out.empty()) {
    std::ofstream file(f.out);
    if (!file) throw Error(ErrorCode::kIoError, "cannot open --out file '" + f.out + "'");
    write_vector(file, cert.x_star.values());
    if (!file) throw Error(ErrorCode::kIoError, "cannot write --out file '" + f.out + "'");
    result["out"] = f.out;
  }
  std::ostringstream s;
  s << "stationary vector after " << cert.iterations << " iterations, m = " << cert.m
    << ", kappa = " << cert.kappa << ", error <= " << cert.a_posteriori_bound;
  return {std::move(result), s.str(), kExitOk, std::nullopt};
}

Outcome cmd_stationary(const Flags& f, InputDigest& digest) {
  const auto in = load_matrix(f.matrix, digest);
  const auto g = maybe_google(f, in, digest);
  const auto x0 = load_simplex(f.x0, in.matrix.size(), "x0", digest);
  StationaryOptions o;
  o.tol = f.tol;
  o.max_iters = f.max_iters;
  o.max_m = f.max_m;
  o.pair_cap = f.pair_cap;
  o.dense_cap = f.dense_cap;
  try {
    const auto cert = g ? stationary_distribution(*g, x0, o) : stationary_distribution(in.matrix, x0, o);
    return stationary_outcome(cert, f, in);
  } catch (const MaxItersExceeded& e) {
    auto partial = stationary_outcome(e.partial(), f, in);
    partial.exit_code = kExitMaxIters;
    partial.failure = e;
    return partial;
  }
}

Outcome cmd_scc(const Flags& f, InputDigest& digest) {
  const auto in = load_matrix(f.matrix, digest);
  const auto report = closed_subsets(in.matrix, f.zero_threshold);
  json result = to_json(report, in);
  result["input"] = input_summary(in);
  return {std::move(result), std::to_string(report.count) + " closed class(es)", kExitOk, std::nullopt};
}

double certificate_bound(const json& doc) {
  const json& body = doc.contains("result") ? doc.at("result") : doc;
  if (!body.contains("best_bound") || !body.at("best_bound").is_number()) {
    throw Error(ErrorCode::kParseError, "certificate has no numeric best_bound");
  }
  return body.at("best_bound").get<double>();
}

Outcome cmd_oracle(const Flags& f, InputDigest& digest) {
  const auto in = load_matrix(f.matrix, digest);
  const auto g = maybe_google(f, in, digest);
  const std::size_t n = in.matrix.size();
  if (n > f.oracle_cap) {
    throw Error(ErrorCode::kDimensionCapExceeded,
                "n = " + std::to_string(n) + " exceeds oracle cap " + std::to_string(f.oracle_cap));
  }
  const DenseMatrix a = g ? densify(*g, f.dense_cap) : densify(in.matrix, f.dense_cap);
  const auto spectrum = eigenvalues_dense(a, f.oracle_cap);
  const double lambda2 = n < 2 ? 0.0 : std::abs(spectrum.eigenvalues[1]);
  const bool transpose_ok = transpose_spectrum_check(a, f.oracle_cap);

  json result{{"eigenvalues", to_json(spectrum)},
              {"second_modulus", lambda2},
              {"fixed_space_dimension", fixed_space_dimension(a, f.oracle_cap)},
              {"transpose_spectrum_match", transpose_ok},
              {"input", input_summary(in)}};
  Outcome outcome;
  std::ostringstream s;
  s << "|lambda_2| = " << lambda2;

  if (!transpose_ok) {
    outcome.exit_code = kExitVerification;
    outcome.failure = Error(ErrorCode::kNoConvergence, "spectra of A and A^t disagree");
  }
  if (!f.check.empty()) {
    json doc;
    try {
      doc = json::parse(digest.read("check", f.check));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParseError, "--check: " + std::string(e.what()));
    }
    const double bound = certificate_bound(doc);
    const bool pass = bound >= lambda2 - kCheckTolerance;
    result["check"] = {{"file", f.check},
                       {"bound", bound},
                       {"second_modulus", lambda2},
                       {"tolerance", kCheckTolerance},
                       {"pass", pass}};
    s << ", certificate " << bound << (pass ? " holds" : " FAILS");
    if (!pass) {
      outcome.exit_code = kExitVerification;
      outcome.failure = Error(ErrorCode::kInvalidArgument,
                              "certificate bound is below the oracle |lambda_2|");
    }
  }
  if (!f.residual.empty()) {
    std::istringstream vin(digest.read("residual", f.residual));
    const auto v = read_vector(vin, n);
    const double r = g ? fixed_point_residual(*g, v) : fixed_point_residual(in.matrix, v);
    result["residual"] = {{"file", f.residual}, {"value", r}};
    s << ", residual " << r;
  }
  outcome.result = std::move(result);
  outcome.summary = s.str();
  return outcome;
}

json parameters_for(const std::string& command, const Flags& f) {
  json p = matrix_parameters(f);
  const auto add = [&p](const json& more) {
    for (const auto& [k, v] : more.items()) p[k] = v;
  };
  if (command != "scc") add(damping_parameters(f));
  if (command == "coeff") {
    p["pair_cap"] = f.pair_cap;
  } else if (command == "bound") {
    add({{"k_max", f.k_max}, {"pair_cap", f.pair_cap}, {"dense_cap", f.dense_cap}});
  } else if (command == "stationary") {
    add({{"tol", f.tol},
         {"max_iters", f.max_iters},
         {"max_m", f.max_m},
         {"x0", f.x0},
         {"out", f.out.empty() ? json(nullptr) : json(f.out)},
         {"pair_cap", f.pair_cap},
         {"dense_cap", f.dense_cap}});
  } else if (command == "scc") {
    p["zero_threshold"] = f.zero_threshold;
  } else if (command == "oracle") {
    add({{"oracle_cap", f.oracle_cap},
         {"dense_cap", f.dense_cap},
         {"check", f.check.empty() ? json(nullptr) : json(f.check)},
         {"residual", f.residual.empty() ? json(nullptr) : json(f.residual)}});
  }
  return p;
}

void add_matrix_options(CLI::App& sub, Flags& f) {
  sub.add_option("--edges", f.matrix.edges, "Edge list: 'src dst [weight]' per line");
  sub.add_option("--dense", f.matrix.dense, "Dense matrix: one whitespace-separated row per line");
  sub.add_option("--dangling", f.matrix.dangling, "Dangling rows: uniform, self_loop or reject")
      ->capture_default_str();
  sub.add_option("--row-sum-tol", f.matrix.row_sum_tol, "Row-sum tolerance for dense input")
      ->capture_default_str();
  sub.add_flag("--verbose", f.verbose, "Human-readable summary on stderr");
}

void add_damping_options(CLI::App& sub, Flags& f) {
  sub.add_option("--google", f.google, "Damping c: analyse A = cP + (1-c)E");
  sub.add_option("--teleport", f.teleport, "Teleport vector file, or 'uniform'")
      ->capture_default_str();
}

void add_cap_options(CLI::App& sub, Flags& f) {
  sub.add_option("--pair-cap", f.pair_cap, "Largest n for the O(n^2) coefficient scan")
      ->capture_default_str();
  sub.add_option("--dense-cap", f.dense_cap, "Largest n for dense matrix powers")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  std::string command;
  try {
    if (auto cap = env_pair_cap()) f.pair_cap = *cap;

    CLI::App app{"Dobrushin coefficient bounds for row-stochastic matrices", "ergogap"};
    app.require_subcommand(1);

    auto* coeff = app.add_subcommand("coeff", "Dobrushin coefficient q and its argmax row pair");
    add_matrix_options(*coeff, f);
    add_damping_options(*coeff, f);
    coeff->add_option("--pair-cap", f.pair_cap, "Largest n for the O(n^2) coefficient scan")
        ->capture_default_str();

    auto* bound = app.add_subcommand("bound", "Certified upper bounds on |lambda_2|");
    add_matrix_options(*bound, f);
    add_damping_options(*bound, f);
    add_cap_options(*bound, f);
    bound->add_option("--k-max", f.k_max, "Longest power sequence")->capture_default_str();

    auto* stationary = app.add_subcommand("stationary", "Stationary vector with certified error");
    add_matrix_options(*stationary, f);
    add_damping_options(*stationary, f);
    add_cap_options(*stationary, f);
    stationary->add_option("--tol", f.tol, "Target a-posteriori L1 error")->capture_default_str();
    stationary->add_option("--max-iters", f.max_iters, "Iteration budget")->capture_default_str();
    stationary->add_option("--max-m", f.max_m, "Largest power tried for contraction")
        ->capture_default_str();
    stationary->add_option("--x0", f.x0, "Start vector file, or 'uniform'")->capture_default_str();
    stationary->add_option("--out", f.out, "Write x_star as a vector file");

    auto* scc = app.add_subcommand("scc", "Irreducible closed subsets (terminal SCCs)");
    add_matrix_options(*scc, f);
    scc->add_option("--zero-threshold", f.zero_threshold, "Edges with p_ij <= threshold are ignored")
        ->capture_default_str();

    auto* oracle = app.add_subcommand("oracle", "Dense eigenvalue oracle for small matrices");
    add_matrix_options(*oracle, f);
    add_damping_options(*oracle, f);
    oracle->add_option("--oracle-cap", f.oracle_cap, "Largest n for the eigensolver")
        ->capture_default_str();
    oracle->add_option("--dense-cap", f.dense_cap, "Largest n for densification")
        ->capture_default_str();
    oracle->add_option("--check", f.check, "Certificate JSON to verify against the spectrum");
    oracle->add_option("--residual", f.residual, "Vector file: report |A^t v - v|_1");

    std::vector<const char*> argv{"ergogap"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << error_json("UsageError", e.what(), kExitInput).dump() << '\n';
      return kExitInput;
    }
    command = app.get_subcommands().front()->get_name();

    const auto start = std::chrono::steady_clock::now();
    InputDigest digest;
    Outcome outcome;
    if (command == "coeff") outcome = cmd_coeff(f, digest);
    else if (command == "bound") outcome = cmd_bound(f, digest);
    else if (command == "stationary") outcome = cmd_stationary(f, digest);
    else if (command == "scc") outcome = cmd_scc(f, digest);
    else outcome = cmd_oracle(f, digest);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;

    const json report{{"schema_version", kSchemaVersion},
                      {"command", command},
                      {"input_digest", digest.hex()},
                      {"parameters", parameters_for(command, f)},
                      {"result", std::move(outcome.result)},
                      {"timing_ms", elapsed.count()}};
    out << report.dump(2) << '\n';
    if (f.verbose) err << command << ": " << outcome.summary << '\n';
    if (outcome.failure) {
      err << error_json(to_string(outcome.failure->code()), outcome.failure->what(),
                        outcome.exit_code)
                 .dump()
          << '\n';
    }
    return outcome.exit_code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    err << error_json(to_string(e.code()), e.what(), code).dump() << '\n';
    return code;
  } catch (const std::exception& e) {
    err << error_json("Internal", e.what(), kExitInternal).dump() << '\n';
    return kExitInternal;
  }
}

}  // namespace ergogap::cli
