// Copyright 2026 The rac-lab Authors
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

#include "raclab/io.h"

#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "raclab/bits.h"
#include "raclab/errors.h"

namespace raclab {

namespace {

double as_real(const Json &j, const std::string &what) {
    if (!j.is_number()) {
        throw ConfigError(what + " must be a number");
    }
    return j.get<double>();
}

Vec3 as_vec3(const Json &j, const std::string &what) {
    if (!j.is_array() || j.size() != 3) {
        throw ConfigError(what + " must be an array of three numbers");
    }
    return {as_real(j[0], what), as_real(j[1], what), as_real(j[2], what)};
}

Json vec3_json(const Vec3 &v) {
    return Json::array({v.x, v.y, v.z});
}

int as_bit(const Json &j, const std::string &what) {
    if (!j.is_number_integer() || (j.get<int>() != 0 && j.get<int>() != 1)) {
        throw ConfigError(what + " must be 0 or 1");
    }
    return j.get<int>();
}

int as_n(const Json &j, int max_n) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw ConfigError("object must contain an integer \"n\"");
    }
    int n = j["n"].get<int>();
    if (n < 2 || n > max_n) {
        throw ConfigError(fmt::format("n must lie in [2, {}]", max_n));
    }
    return n;
}

void only_keys(const Json &j, std::initializer_list<const char *> keys) {
    for (const auto &[key, value] : j.items()) {
        bool known = false;
        for (const char *k : keys) {
            known = known || key == k;
        }
        if (!known) {
            throw ConfigError("unknown key \"" + key + "\"");
        }
    }
}

}  // namespace

std::string format_real(double v) {
    return fmt::format("{}", v);
}

TwoQubitState state_from_json(const Json &j) {
    if (!j.is_object()) {
        throw ConfigError("state must be a JSON object");
    }
    if (j.contains("werner")) {
        only_keys(j, {"werner"});
        return werner(as_real(j["werner"], "werner")).to_state();
    }
    if (j.contains("bell_diagonal")) {
        only_keys(j, {"bell_diagonal"});
        Vec3 e = as_vec3(j["bell_diagonal"], "bell_diagonal");
        return BellDiagonalSpec{e.x, e.y, e.z}.to_state();
    }
    only_keys(j, {"a0", "b0", "E"});
    if (!j.contains("a0") || !j.contains("b0") || !j.contains("E")) {
        throw ConfigError("state needs \"a0\", \"b0\" and \"E\" (or a bell_diagonal / werner shorthand)");
    }
    TwoQubitState s;
    s.a0 = as_vec3(j["a0"], "a0");
    s.b0 = as_vec3(j["b0"], "b0");
    const Json &e = j["E"];
    if (!e.is_array() || e.size() != 3) {
        throw ConfigError("E must be a 3x3 array");
    }
    for (int r = 0; r < 3; r++) {
        Vec3 row = as_vec3(e[r], "E row");
        s.E[r] = {row.x, row.y, row.z};
    }
    return s;
}

Json state_to_json(const TwoQubitState &s) {
    Json e = Json::array();
    for (const auto &row : s.E) {
        e.push_back(Json::array({row[0], row[1], row[2]}));
    }
    return Json{{"a0", vec3_json(s.a0)}, {"b0", vec3_json(s.b0)}, {"E", e}};
}

QuantumRacProtocol protocol_from_json(const Json &j) {
    int n = as_n(j, 16);
    only_keys(j, {"n", "alice", "bob"});
    if (!j.contains("alice") || !j["alice"].is_object() || !j.contains("bob") || !j["bob"].is_object()) {
        throw ConfigError("protocol needs \"alice\" and \"bob\" objects");
    }
    QuantumRacProtocol p;
    p.n = n;
    p.alice_direction.assign(input_count(n), Vec3{});
    p.bob_direction.assign(static_cast<size_t>(n), Vec3{});
    std::vector<bool> seen_alice(input_count(n), false);
    for (const auto &[label, dir] : j["alice"].items()) {
        uint32_t x = parse_input_label(label, n);
        p.alice_direction[x] = as_vec3(dir, "alice direction " + label);
        seen_alice[x] = true;
    }
    std::vector<bool> seen_bob(static_cast<size_t>(n), false);
    for (const auto &[label, dir] : j["bob"].items()) {
        int i = 0;
        try {
            i = std::stoi(label);
        } catch (const std::exception &) {
            throw ConfigError("bob index \"" + label + "\" is not an integer");
        }
        if (i < 1 || i > n || std::to_string(i) != label) {
            throw ConfigError("bob index \"" + label + "\" out of range");
        }
        p.bob_direction[static_cast<size_t>(i - 1)] = as_vec3(dir, "bob direction " + label);
        seen_bob[static_cast<size_t>(i - 1)] = true;
    }
    for (bool s : seen_alice) {
        if (!s) {
            throw ConfigError("protocol must list Alice's direction for every input");
        }
    }
    for (bool s : seen_bob) {
        if (!s) {
            throw ConfigError("protocol must list Bob's direction for every index");
        }
    }
    return p;
}

Json protocol_to_json(const QuantumRacProtocol &p) {
    Json alice = Json::object();
    for (uint32_t x = 0; x < input_count(p.n); x++) {
        alice[input_label(x, p.n)] = vec3_json(p.alice_direction[x]);
    }
    Json bob = Json::object();
    for (int i = 0; i < p.n; i++) {
        bob[std::to_string(i + 1)] = vec3_json(p.bob_direction[static_cast<size_t>(i)]);
    }
    return Json{{"n", p.n}, {"alice", alice}, {"bob", bob}};
}

ClassicalStrategy strategy_from_json(const Json &j) {
    int n = as_n(j, 16);
    only_keys(j, {"n", "encoding", "decoding"});
    if (!j.contains("encoding") || !j["encoding"].is_object() || !j.contains("decoding") ||
        !j["decoding"].is_object()) {
        throw ConfigError("strategy needs \"encoding\" and \"decoding\" objects");
    }
    ClassicalStrategy s = ClassicalStrategy::from_bits(n, 0, 0);
    const Json &enc = j["encoding"];
    const Json &dec = j["decoding"];
    if (enc.size() != input_count(n) || dec.size() != static_cast<size_t>(n)) {
        throw ConfigError("strategy tables must cover every input and every index exactly once");
    }
    for (const auto &[label, row] : enc.items()) {
        uint32_t x = parse_input_label(label, n);
        if (!row.is_array() || row.size() != 2) {
            throw ConfigError("encoding entry " + label + " must be [c_at_ra0, c_at_ra1]");
        }
        s.encoding[x * 2] = static_cast<uint8_t>(as_bit(row[0], "encoding bit"));
        s.encoding[x * 2 + 1] = static_cast<uint8_t>(as_bit(row[1], "encoding bit"));
    }
    for (int i = 1; i <= n; i++) {
        std::string key = std::to_string(i);
        if (!dec.contains(key)) {
            throw ConfigError("decoding must list index " + key);
        }
        const Json &t = dec[key];
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 2 || !t[1].is_array() ||
            t[1].size() != 2) {
            throw ConfigError("decoding entry " + key + " must be [[g_c0_rb0, g_c0_rb1], [g_c1_rb0, g_c1_rb1]]");
        }
        for (int c = 0; c < 2; c++) {
            for (int rb = 0; rb < 2; rb++) {
                s.decoding[static_cast<size_t>((i - 1) * 4 + c * 2 + rb)] =
                    static_cast<uint8_t>(as_bit(t[c][rb], "decoding bit"));
            }
        }
    }
    return s;
}

Json strategy_to_json(const ClassicalStrategy &s) {
    Json enc = Json::object();
    for (uint32_t x = 0; x < input_count(s.n); x++) {
        enc[input_label(x, s.n)] = Json::array({s.encode(x, 0), s.encode(x, 1)});
    }
    Json dec = Json::object();
    for (int i = 0; i < s.n; i++) {
        dec[std::to_string(i + 1)] = Json::array(
            {Json::array({s.decode(i, 0, 0), s.decode(i, 0, 1)}), Json::array({s.decode(i, 1, 0), s.decode(i, 1, 1)})});
    }
    return Json{{"n", s.n}, {"encoding", enc}, {"decoding", dec}};
}

Json distribution_to_json(const SharedDistribution &d) {
    return Json{{"p00", d.p[0]}, {"p01", d.p[1]}, {"p10", d.p[2]}, {"p11", d.p[3]}};
}

Json search_report_to_json(const SearchReport &r) {
    Json j{{"search_mode", to_string(r.mode)},
           {"n", r.n},
           {"constraint", to_string(r.constraint)},
           {"best_p_min", r.best_p_min},
           {"strategies_examined", r.strategies_examined},
           {"pruned", r.pruned},
           {"unpruned", r.unpruned}};
    if (r.mode != SearchMode::Exhaustive) {
        j["seed"] = r.seed;
    }
    if (r.mode == SearchMode::Pruned) {
        j["spot_checks"] = r.spot_checks;
        j["spot_check_max"] = r.spot_check_max;
    }
    if (r.best_concatenated) {
        const auto &c = *r.best_concatenated;
        j["best_concatenated"] = Json{
            {"outer", {{"strategy", strategy_to_json(c.outer)}, {"distribution", distribution_to_json(c.distributions[0])}}},
            {"low", {{"strategy", strategy_to_json(c.low)}, {"distribution", distribution_to_json(c.distributions[1])}}},
            {"high", {{"strategy", strategy_to_json(c.high)}, {"distribution", distribution_to_json(c.distributions[2])}}},
        };
    } else {
        j["best_strategy"] = strategy_to_json(r.best_strategy);
        j["best_distribution"] = distribution_to_json(r.best_distribution);
    }
    return j;
}

std::string search_report_table(const SearchReport &r) {
    std::string out;
    auto line = [&](const std::string &k, const std::string &v) { out += fmt::format("{:<22}{}\n", k, v); };
    line("search mode", to_string(r.mode));
    line("n", std::to_string(r.n));
    line("constraint", to_string(r.constraint));
    line("best p_min", format_real(r.best_p_min));
    line("strategies examined", std::to_string(r.strategies_examined));
    if (r.mode == SearchMode::Pruned) {
        line("pruned encodings", std::to_string(r.pruned));
        line("unpruned encodings", std::to_string(r.unpruned));
        line("spot checks", std::to_string(r.spot_checks));
        line("spot check max", format_real(r.spot_check_max));
    }
    if (r.mode != SearchMode::Exhaustive) {
        line("seed", std::to_string(r.seed));
    }
    if (!r.best_concatenated) {
        const auto &s = r.best_strategy;
        const auto &d = r.best_distribution;
        line("distribution", fmt::format("p00={} p01={} p10={} p11={}", format_real(d.p[0]), format_real(d.p[1]),
                                         format_real(d.p[2]), format_real(d.p[3])));
        out += "x     c(x,0) c(x,1)\n";
        for (uint32_t x = 0; x < input_count(s.n); x++) {
            out += fmt::format("{:<6}{:<7}{}\n", input_label(x, s.n), s.encode(x, 0), s.encode(x, 1));
        }
        out += "c r_b guess\n";
        for (int c = 0; c < 2; c++) {
            for (int rb = 0; rb < 2; rb++) {
                std::string g;
                for (int i = 0; i < s.n; i++) {
                    g += std::to_string(s.decode(i, c, rb));
                }
                out += fmt::format("{} {}   {}\n", c, rb, g);
            }
        }
    }
    return out;
}

std::string evaluation_csv(const EvaluationResult &r) {
    std::string out = "x,i,probability\n";
    for (uint32_t x = 0; x < input_count(r.n); x++) {
        for (int i = 0; i < r.n; i++) {
            out += fmt::format("{},{},{}\n", input_label(x, r.n), i + 1, format_real(r.at(x, i)));
        }
    }
    out += fmt::format("p_min,{}\n", format_real(r.p_min));
    return out;
}

Json evaluation_to_json(const EvaluationResult &r) {
    Json rows = Json::array();
    for (uint32_t x = 0; x < input_count(r.n); x++) {
        for (int i = 0; i < r.n; i++) {
            rows.push_back(Json{{"x", input_label(x, r.n)}, {"i", i + 1}, {"probability", r.at(x, i)}});
        }
    }
    return Json{{"n", r.n}, {"success", rows}, {"p_min", r.p_min}};
}

std::string comparison_csv(const std::vector<ComparisonRow> &rows) {
    std::string out = "label,e1,e2,e3,discord,p_min,separable\n";
    for (const auto &r : rows) {
        out += fmt::format("{},{},{},{},{},{},{}\n", r.label, format_real(r.state.e1), format_real(r.state.e2),
                           format_real(r.state.e3), format_real(r.discord), format_real(r.p_min),
                           r.separable ? "true" : "false");
    }
    return out;
}

Json comparison_to_json(const ComparisonRow &row) {
    return Json{{"label", row.label},
                {"e1", row.state.e1},
                {"e2", row.state.e2},
                {"e3", row.state.e3},
                {"discord", row.discord},
                {"p_min", row.p_min},
                {"separable", row.separable}};
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading '" + path + "'");
    }
    return ss.str();
}

Json read_json_file(const std::string &path) {
    std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

}  // namespace raclab
