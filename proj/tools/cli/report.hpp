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

#pragma once

#include "json.hpp"

#include "ergogap/oracle.hpp"
#include "ergogap/spectral_bound.hpp"
#include "ergogap/stationary.hpp"
#include "inputs.hpp"

namespace ergogap::cli {

inline constexpr const char* kSchemaVersion = "1.0";

nlohmann::json to_json(const SpectralCertificate& cert);
nlohmann::json to_json(const ContractionCertificate& cert);
nlohmann::json to_json(const ClosedSubsetReport& report, const LoadedMatrix& input);
nlohmann::json to_json(const Spectrum& spectrum);

/// Shape and provenance of the ingested matrix.
nlohmann::json input_summary(const LoadedMatrix& input);

}  // namespace ergogap::cli
