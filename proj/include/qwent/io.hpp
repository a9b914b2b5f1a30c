/*
 * Copyright 2026 The qwent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qwent/fock.hpp"
#include "qwent/lon.hpp"

namespace qwent::io {

// Doubles are written in shortest round-trip decimal form (JSON and CSV
// alike), so parsing a written file reproduces every value bit for bit.

/// {"M": M, "N": N, "entries": [[[n_1, ..., n_M], re, im], ...]}; zero
/// amplitudes are omitted.
nlohmann::json to_json(const StateVector& state);
StateVector state_from_json(const nlohmann::json& j);

/// {"M": M, "entries": [[re, im], ...]} with M*M entries in row-major order.
nlohmann::json to_json(const ModeUnitary& unitary);
ModeUnitary unitary_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

std::string format_double(double value);

/// Comma-separated record with '\n' terminator; fields containing a comma,
/// quote or newline are quoted with doubled quotes.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace qwent::io
