// Copyright 2026 The Stabkit Authors
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

#include "stabkit/spinmodel_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace stabkit {

using nlohmann::json;

namespace {

Complex read_number(const json& j, const char* what) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_object()) {
        double re = 0, im = 0;
        if (j.contains("re")) {
            re = j.at("re").get<double>();
        }
        if (j.contains("im")) {
            im = j.at("im").get<double>();
        }
        return {re, im};
    }
    throw std::invalid_argument(std::string("field '") + what + "' must be a number or {\"re\", \"im\"}");
}

json write_number(Complex c) {
    if (c.imag() == 0.0) {
        return c.real();
    }
    return json{{"re", c.real()}, {"im", c.imag()}};
}

}  // namespace

SpinModel parse_spin_model(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("spin model JSON: ") + e.what());
    }
    try {
        SpinModel m;
        m.num_sites = j.at("sites").get<size_t>();
        m.beta = j.contains("beta") ? read_number(j.at("beta"), "beta") : Complex{1, 0};
        for (const auto& t : j.at("terms")) {
            SpinTerm term;
            term.sites = t.at("spins").get<std::vector<size_t>>();
            term.coupling = read_number(t.at("J"), "J");
            m.terms.push_back(std::move(term));
        }
        m.validate();
        return m;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("spin model JSON: ") + e.what());
    }
}

SpinModel read_spin_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open model file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spin_model(ss.str());
}

std::string format_spin_model(const SpinModel& m, const std::optional<Complex>& prefactor) {
    json j;
    j["sites"] = m.num_sites;
    j["beta"] = write_number(m.beta);
    json terms = json::array();
    for (const auto& t : m.terms) {
        terms.push_back(json{{"spins", t.sites}, {"J", write_number(t.coupling)}});
    }
    j["terms"] = std::move(terms);
    if (prefactor) {
        j["prefactor"] = write_number(*prefactor);
    }
    return j.dump(2) + "\n";
}

}  // namespace stabkit
