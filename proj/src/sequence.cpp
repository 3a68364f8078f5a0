// Copyright 2026 the rsltools authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsl/sequence.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace rsl {

LittlewoodSeq::LittlewoodSeq(std::vector<std::int8_t> s) : signs(std::move(s)) {
    for (auto v : signs)
        if (v != 1 && v != -1)
            throw std::invalid_argument("LittlewoodSeq: entries must be +1 or -1");
}

CoeffSeq LittlewoodSeq::to_coeffs() const {
    CoeffSeq a;
    a.reserve(signs.size());
    for (auto v : signs) a.emplace_back(static_cast<double>(v), 0.0);
    return a;
}

std::string LittlewoodSeq::str() const {
    if (signs.empty()) return "0";
    std::string s;
    s.reserve(signs.size());
    for (auto v : signs) s += (v > 0 ? '+' : '-');
    return s;
}

LittlewoodSeq LittlewoodSeq::parse(const std::string& text) {
    if (text == "0") return LittlewoodSeq{};
    if (text.empty())
        throw std::invalid_argument("LittlewoodSeq: empty string (use \"0\" for the zero polynomial)");
    LittlewoodSeq s;
    s.signs.reserve(text.size());
    for (char c : text) {
        if (c == '+') s.signs.push_back(1);
        else if (c == '-') s.signs.push_back(-1);
        else throw std::invalid_argument(std::string("LittlewoodSeq: bad character '") + c + "'");
    }
    return s;
}

bool LittlewoodSeq::is_littlewood(const CoeffSeq& a) {
    for (const auto& c : a)
        if (c.imag() != 0.0 || (c.real() != 1.0 && c.real() != -1.0)) return false;
    return true;
}

LittlewoodSeq LittlewoodSeq::from_coeffs(const CoeffSeq& a) {
    if (!is_littlewood(a))
        throw std::invalid_argument("LittlewoodSeq: coefficients must be exactly +1 or -1");
    LittlewoodSeq s;
    s.signs.reserve(a.size());
    for (const auto& c : a) s.signs.push_back(c.real() > 0 ? 1 : -1);
    return s;
}

CoeffSeq parse_coeff_seq(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\n\r");
    if (i != std::string::npos && text[i] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("sequence: bad JSON: ") + e.what());
        }
        CoeffSeq a;
        for (const auto& item : j) {
            if (item.is_number()) {
                a.emplace_back(item.get<double>(), 0.0);
            } else if (item.is_array() && item.size() == 2 && item[0].is_number() && item[1].is_number()) {
                a.emplace_back(item[0].get<double>(), item[1].get<double>());
            } else {
                throw std::invalid_argument("sequence: each entry must be a number or an [re, im] pair");
            }
        }
        return a;
    }
    return LittlewoodSeq::parse(text).to_coeffs();
}

std::string format_coeff_seq(const CoeffSeq& a) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : a) j.push_back({c.real(), c.imag()});
    return j.dump();
}

std::string format_seq_auto(const CoeffSeq& a) {
    if (!a.empty() && LittlewoodSeq::is_littlewood(a)) return LittlewoodSeq::from_coeffs(a).str();
    if (a.empty()) return "0";
    return format_coeff_seq(a);
}

}  // namespace rsl
