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

#include "report.hpp"

#include <cmath>

namespace ergogap::cli {

using nlohmann::json;

json to_json(const SpectralCertificate& cert) {
  json entries = json::array();
  for (const auto& e : cert.entries) {
    entries.push_back({{"k", e.k},
                       {"q_k", e.q_k},
                       {"rounding_allowance", e.rounding_allowance},
                       {"bound_k", e.bound_k}});
  }
  json out{{"source", std::string(to_string(cert.source))},
           {"entries", std::move(entries)},
           {"best_bound", cert.best_bound},
           {"exact", cert.exact}};
  if (cert.mixture) {
    out["mixture"] = {{"damping", cert.mixture->damping},
                      {"q_link", cert.mixture->q_link},
                      {"q_teleport", cert.mixture->q_teleport},
                      {"rank_one", cert.mixture->rank_one}};
  }
  out["headline_bound"] = cert.headline_bound ? json(*cert.headline_bound) : json(nullptr);
  return out;
}

json to_json(const ContractionCertificate& cert) {
  return {{"kappa", cert.kappa},
          {"m", cert.m},
          {"iterations", cert.iterations},
          {"a_priori_bound", cert.a_priori_bound},
          {"a_posteriori_bound", cert.a_posteriori_bound},
          {"rounding_allowance", cert.rounding_allowance},
          {"converged", cert.converged},
          {"final_step_norm", cert.step_norms.empty() ? 0.0 : cert.step_norms.back()},
          {"x_star", cert.x_star.values()}};
}

json to_json(const ClosedSubsetReport& report, const LoadedMatrix& input) {
  json comps = json::array();
  for (const auto& c : report.terminal_components) {
    json members = json::array();
    for (std::size_t i : c) members.push_back(input.label(i));
    comps.push_back(std::move(members));
  }
  return {{"count", report.count},
          {"zero_threshold", report.zero_threshold},
          {"terminal_components", std::move(comps)}};
}

json to_json(const Spectrum& spectrum) {
  json out = json::array();
  for (const auto& z : spectrum.eigenvalues) {
    out.push_back({{"re", z.real()}, {"im", z.imag()}, {"modulus", std::abs(z)}});
  }
  return out;
}

json input_summary(const LoadedMatrix& input) {
  json out{{"format", input.format},
           {"n", input.matrix.size()},
           {"nnz", input.matrix.nnz()},
           {"remapped", input.remapped}};
  json dangling = json::array();
  for (std::size_t i : input.dangling_nodes) dangling.push_back(input.label(i));
  out["dangling_nodes"] = std::move(dangling);
  if (input.remapped) out["node_ids"] = input.ids;
  return out;
}

}  // namespace ergogap::cli
