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

#include "qwent/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace qwent::io {

nlohmann::json to_json(const StateVector& state)
{
    nlohmann::json entries = nlohmann::json::array();
    for (std::uint64_t k = 0; k < state.dimension(); ++k) {
        const Complex a = state.amplitude(k);
        if (a == Complex(0.0)) {
            continue;
        }
        const FockBasisState s = unrank(k, state.modes(), state.photons());
        entries.push_back({std::vector<int>(s.occupations().begin(), s.occupations().end()), a.real(), a.imag()});
    }
    return {{"M", state.modes()}, {"N", state.photons()}, {"entries", std::move(entries)}};
}

StateVector state_from_json(const nlohmann::json& j)
{
    const int m = j.at("M").get<int>();
    const int n = j.at("N").get<int>();
    std::vector<Complex> amps(basis_dimension(m, n), 0.0);
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) {
            throw std::invalid_argument("state entry must be [[occupations...], re, im]");
        }
        const FockBasisState s(e[0].get<std::vector<int>>());
        if (s.modes() != m || s.photons() != n) {
            throw std::invalid_argument("state entry does not have M modes and N photons");
        }
        amps[rank(s)] = Complex(e[1].get<double>(), e[2].get<double>());
    }
    return StateVector(m, n, std::move(amps));
}

nlohmann::json to_json(const ModeUnitary& unitary)
{
    nlohmann::json entries = nlohmann::json::array();
    const int m = unitary.dimension();
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            entries.push_back({unitary(r, c).real(), unitary(r, c).imag()});
        }
    }
    return {{"M", m}, {"entries", std::move(entries)}};
}

ModeUnitary unitary_from_json(const nlohmann::json& j)
{
    const int m = j.at("M").get<int>();
    const auto& entries = j.at("entries");
    if (m < 1 || entries.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
        throw std::invalid_argument("unitary JSON needs M >= 1 and M*M entries");
    }
    ComplexMatrix u(m, m);
    std::size_t k = 0;
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c, ++k) {
            const auto& e = entries[k];
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("unitary entry must be [re, im]");
            }
            u(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return ModeUnitary(std::move(u));
}

nlohmann::json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path.string());
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write " + path.string());
    }
    out << content;
}

std::string format_double(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc()) {
        throw std::runtime_error("double formatting failed");
    }
    return std::string(buf, res.ptr);
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n\r") == std::string::npos) {
            out << f;
            continue;
        }
        out << '"';
        for (char ch : f) {
            if (ch == '"') {
                out << '"';
            }
            out << ch;
        }
        out << '"';
    }
    out << '\n';
}

}  // namespace qwent::io
