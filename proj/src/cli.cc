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

#include "raclab/cli.h"

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "raclab/classical_rac.h"
#include "raclab/errors.h"
#include "raclab/io.h"
#include "raclab/optimize.h"
#include "raclab/parallel.h"
#include "raclab/quantum_rac.h"
#include "raclab/reproduce.h"

namespace raclab {

namespace {

struct Params {
    // global
    std::string config;
    std::string output;
    std::string format;
    uint64_t seed = 42;
    int workers = 0;
    double tolerance = 1e-12;

    // classical-search
    int n = 2;
    std::string constraint = "none";
    uint64_t samples = 0;
    bool quotient = false;
    bool duplicate_only = false;
    std::string strategy;

    // quantum-eval
    std::string state;
    std::string protocol;
    int canonical = 0;
    std::optional<double> werner_q;
    std::vector<double> bell_diagonal;

    // optimize-separable
    double grid_step = 0.01;
    double refine_tol = 1e-6;
    bool ignore_separability = false;

    // crossover, prepare-measure, concatenate
    std::vector<double> q;
    std::vector<double> d;
    int m = 10;

    // reproduce-paper
    uint64_t cases = 1000;
};

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

std::vector<double> default_grid(double step) {
    std::vector<double> grid;
    int steps = static_cast<int>(std::lround(1 / step));
    for (int k = 0; k <= steps; k++) {
        grid.push_back(k / static_cast<double>(steps));
    }
    return grid;
}

void require_format(const Params &p, std::initializer_list<const char *> allowed) {
    if (p.format.empty()) {
        return;
    }
    for (const char *f : allowed) {
        if (p.format == f) {
            return;
        }
    }
    throw ConfigError("format '" + p.format + "' is not supported by this command");
}

// Command bodies. Each returns the text to emit.

std::string classical_search(const Params &p) {
    require_format(p, {"csv", "json", "table"});
    MarginalConstraint constraint = parse_marginal_constraint(p.constraint);
    int workers = resolve_workers(p.workers);

    if (!p.strategy.empty()) {
        ClassicalStrategy s = strategy_from_json(read_json_file(p.strategy));
        DistributionOptimum best = optimal_distribution(s, constraint);
        EvaluationResult ev = evaluate_strategy(s, best.distribution);
        if (p.format == "json") {
            Json j;
            j["constraint"] = to_string(constraint);
            j["strategy"] = strategy_to_json(s);
            j["distribution"] = distribution_to_json(best.distribution);
            j["evaluation"] = evaluation_to_json(ev);
            return dump(j);
        }
        return evaluation_csv(ev);
    }

    SearchReport report;
    switch (p.n) {
    case 2: {
        ExhaustiveOptions o;
        o.constraint = constraint;
        o.filter = p.duplicate_only ? EncodingFilter::DuplicateOnly : EncodingFilter::All;
        o.quotient_symmetries = p.quotient;
        o.workers = workers;
        report = exhaustive_search(2, o);
        break;
    }
    case 3: {
        PrunedOptions o;
        o.constraint = constraint;
        o.spot_checks = p.samples ? p.samples : 1000;
        o.seed = p.seed;
        o.workers = workers;
        report = pruned_search(3, o);
        break;
    }
    case 4: {
        if (constraint != MarginalConstraint::BobMaximallyMixed && p.constraint != "none") {
            throw ConfigError("unsupported constraint for n = 4");
        }
        ConcatenatedOptions o;
        o.samples = p.samples ? p.samples : 100000;
        o.seed = p.seed;
        o.workers = workers;
        report = concatenated_classical_search(o);
        break;
    }
    default:
        throw InvalidArgument(fmt::format("classical-search supports n = 2, 3 (exhaustive, pruned) or 4 "
                                          "(sampled concatenation), got {}",
                                          p.n));
    }

    if (p.format == "json") {
        return dump(search_report_to_json(report));
    }
    if (p.format == "csv") {
        std::string text = "field,value\n";
        for (const auto &[key, value] : search_report_to_json(report).items()) {
            if (value.is_primitive()) {
                text += key + "," + csv_field(value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
            }
        }
        return text;
    }
    return search_report_table(report);
}

TwoQubitState load_state(const Params &p) {
    int given = !p.state.empty() + p.werner_q.has_value() + !p.bell_diagonal.empty();
    if (given != 1) {
        throw ConfigError("give exactly one of --state, --werner, --bell-diagonal");
    }
    if (p.werner_q) {
        return werner(*p.werner_q).to_state();
    }
    if (!p.bell_diagonal.empty()) {
        if (p.bell_diagonal.size() != 3) {
            throw ConfigError("--bell-diagonal needs three comma-separated values");
        }
        return BellDiagonalSpec{p.bell_diagonal[0], p.bell_diagonal[1], p.bell_diagonal[2]}.to_state();
    }
    return state_from_json(read_json_file(p.state));
}

std::string quantum_eval(const Params &p, std::ostream &err) {
    require_format(p, {"csv", "json"});
    TwoQubitState state = load_state(p);
    QuantumRacProtocol protocol;
    if (!p.protocol.empty()) {
        if (p.canonical) {
            throw ConfigError("--protocol and --canonical are exclusive");
        }
        protocol = protocol_from_json(read_json_file(p.protocol));
    } else if (p.canonical) {
        double off = 0;
        for (int r = 0; r < 3; r++) {
            for (int c = 0; c < 3; c++) {
                if (r != c) {
                    off = std::max(off, std::abs(state.E[r][c]));
                }
            }
        }
        if (off > p.tolerance) {
            err << fmt::format("warning: correlation matrix has off-diagonal entries up to {}; the canonical "
                               "code only uses its diagonal\n",
                               off);
        }
        protocol = canonical_protocol(p.canonical, BellDiagonalSpec{state.E[0][0], state.E[1][1], state.E[2][2]});
    } else {
        throw ConfigError("give --protocol or --canonical");
    }
    EvaluationResult ev = evaluate(protocol, state);
    if (p.format == "json") {
        Json j = evaluation_to_json(ev);
        j["state"] = state_to_json(state);
        j["protocol"] = protocol_to_json(protocol);
        return dump(j);
    }
    return evaluation_csv(ev);
}

std::string optimize_separable(const Params &p) {
    require_format(p, {"csv", "json"});
    if (p.n != 2 && p.n != 3) {
        throw InvalidArgument("optimize-separable supports n = 2 or 3");
    }
    if (!(p.grid_step > 0 && p.grid_step <= 1)) {
        throw ConfigError("--grid-step must lie in (0, 1]");
    }
    OptimizerOptions o;
    o.grid_step = p.grid_step;
    o.refine_tol = p.refine_tol;
    o.workers = resolve_workers(p.workers);
    StateFamilyConstraint c;
    c.separability = p.ignore_separability ? Separability::Ignored : Separability::Required;
    FamilyOptimum best = best_separable_bell_diagonal(p.n, c, o);

    ComparisonRow row;
    row.label = fmt::format("optimum_n{}", p.n);
    row.state = best.spec;
    row.discord = geometric_discord_bell_diagonal(best.spec);
    row.p_min = best.p_min;
    row.separable = best.separable;
    if (p.format == "json") {
        Json j = comparison_to_json(row);
        j["n"] = p.n;
        j["separability"] = p.ignore_separability ? "ignored" : "required";
        j["grid_points"] = best.grid_points;
        return dump(j);
    }
    return comparison_csv({row});
}

std::string crossover(const Params &p) {
    require_format(p, {"csv", "json"});
    std::vector<double> grid = p.q.empty() ? default_grid(0.05) : p.q;
    auto points = crossover_analysis(grid);
    if (p.format == "json") {
        Json rows = Json::array();
        for (const auto &pt : points) {
            Json j;
            j["q"] = pt.q;
            j["werner"] = comparison_to_json(pt.werner);
            j["separable"] = comparison_to_json(pt.separable);
            j["separable_wins"] = pt.separable_wins;
            j["tie"] = pt.tie;
            rows.push_back(j);
        }
        return dump(rows);
    }
    std::string text = "q,werner_p_min,separable_p_min,werner_separable,separable_wins,tie\n";
    for (const auto &pt : points) {
        text += fmt::format("{},{},{},{},{},{}\n", format_real(pt.q), format_real(pt.werner.p_min),
                            format_real(pt.separable.p_min), pt.werner.separable, pt.separable_wins, pt.tie);
    }
    return text;
}

std::string discord_table(const Params &p) {
    require_format(p, {"csv", "json"});
    auto rows = discord_efficiency_table();
    if (p.format == "json") {
        Json j = Json::array();
        for (const auto &r : rows) {
            j.push_back(comparison_to_json(r));
        }
        return dump(j);
    }
    return comparison_csv(rows);
}

std::string concatenate(const Params &p) {
    require_format(p, {"csv", "json"});
    if (p.m < 1) {
        throw InvalidArgument("--m must be at least 1");
    }
    std::vector<double> discords = p.d.empty() ? default_grid(0.25) : p.d;
    Json rows = Json::array();
    std::string text = "discord,m,formula,recursive\n";
    for (double d : discords) {
        double base = (1 + d / std::sqrt(2.0)) / 2;
        for (int m = 1; m <= p.m; m++) {
            double f = concatenated_pmin_formula(d, m);
            double r = concatenated_pmin_recursive(base, m);
            text += fmt::format("{},{},{},{}\n", format_real(d), m, format_real(f), format_real(r));
            rows.push_back(Json{{"discord", d}, {"m", m}, {"formula", f}, {"recursive", r}});
        }
    }
    return p.format == "json" ? dump(rows) : text;
}

std::string prepare_measure(const Params &p) {
    require_format(p, {"csv", "json"});
    std::vector<double> grid = p.q.empty() ? default_grid(0.1) : p.q;
    Json rows = Json::array();
    std::string text = "q,p_min\n";
    for (double q : grid) {
        double v = prepare_and_measure_pmin(q);
        text += fmt::format("{},{}\n", format_real(q), format_real(v));
        rows.push_back(Json{{"q", q}, {"p_min", v}});
    }
    return p.format == "json" ? dump(rows) : text;
}

std::string reproduce(const Params &p, bool &all_pass) {
    require_format(p, {"csv", "json", "table"});
    ReproduceOptions o;
    o.workers = resolve_workers(p.workers);
    o.seed = p.seed;
    o.concatenated_samples = p.samples ? p.samples : 100000;
    o.random_cases = p.cases;
    ReproductionReport rep = reproduce_paper(o);
    all_pass = rep.pass;

    if (p.format == "json") {
        Json rows = Json::array();
        for (const auto &r : rep.rows) {
            rows.push_back(Json{{"id", r.id},
                                {"claim", r.claim},
                                {"reference", r.reference},
                                {"expected", r.expected},
                                {"computed", r.computed},
                                {"deviation", r.deviation},
                                {"tolerance", r.tolerance},
                                {"pass", r.pass},
                                {"detail", r.detail}});
        }
        return dump(Json{{"pass", rep.pass}, {"rows", rows}});
    }
    if (p.format == "csv") {
        std::string text = "id,claim,reference,expected,computed,deviation,tolerance,pass,detail\n";
        for (const auto &r : rep.rows) {
            text += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.id, csv_field(r.claim), csv_field(r.reference),
                                format_real(r.expected), format_real(r.computed), format_real(r.deviation),
                                format_real(r.tolerance), r.pass, csv_field(r.detail));
        }
        return text;
    }
    std::string text;
    for (const auto &r : rep.rows) {
        text += criterion_line(r) + "\n";
    }
    text += rep.pass ? "overall: PASS\n" : "overall: FAIL\n";
    return text;
}

// --config support: every key names a long option of the chosen subcommand
// (or a global one). Values are turned into command-line tokens placed
// before the user's own, so explicit flags win.
std::vector<std::string> config_tokens(const Json &cfg, CLI::App &app, CLI::App &sub) {
    if (!cfg.is_object()) {
        throw ConfigError("config file must hold a JSON object");
    }
    std::vector<std::string> tokens;
    for (const auto &[key, value] : cfg.items()) {
        if (key == "config") {
            throw ConfigError("config files cannot nest --config");
        }
        const CLI::Option *opt = sub.get_option_no_throw("--" + key);
        if (opt == nullptr) {
            opt = app.get_option_no_throw("--" + key);
        }
        if (opt == nullptr) {
            throw ConfigError("unknown config key '" + key + "' for " + sub.get_name());
        }
        if (value.is_boolean()) {
            if (opt->get_expected_max() != 0) {
                throw ConfigError("config key '" + key + "' expects a value");
            }
            if (value.get<bool>()) {
                tokens.push_back("--" + key);
            }
            continue;
        }
        std::string text;
        if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_number()) {
            text = value.dump();
        } else if (value.is_array()) {
            for (const auto &v : value) {
                if (!v.is_number()) {
                    throw ConfigError("config key '" + key + "' must list numbers");
                }
                text += (text.empty() ? "" : ",") + v.dump();
            }
        } else {
            throw ConfigError("config key '" + key + "' has an unsupported value type");
        }
        tokens.push_back("--" + key);
        tokens.push_back(text);
    }
    return tokens;
}

std::optional<std::string> find_config_path(const std::vector<std::string> &args) {
    for (size_t k = 0; k < args.size(); k++) {
        if (args[k] == "--config" && k + 1 < args.size()) {
            return args[k + 1];
        }
        if (args[k].rfind("--config=", 0) == 0) {
            return args[k].substr(9);
        }
    }
    return std::nullopt;
}

void positive(const char *name, double v) {
    if (!(v > 0) || !std::isfinite(v)) {
        throw ConfigError(fmt::format("{} must be a positive number", name));
    }
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Params p;
    CLI::App app{"Random access codes with shared randomness: classical searches and quantum evaluations",
                 "rac_lab"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    app.add_option("--config", p.config, "JSON file whose keys set long options");
    app.add_option("--output,-o", p.output, "write results here instead of stdout");
    app.add_option("--format", p.format, "csv, json, or table where supported")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    app.add_option("--seed", p.seed, "seed for every sampled computation");
    app.add_option("--workers", p.workers, "worker threads (0: RAC_LAB_THREADS, then all cores)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--tolerance", p.tolerance, "off-diagonal size that triggers the canonical-code warning");

    auto *cs = app.add_subcommand("classical-search", "best classical n->1 code with two shared bits")->fallthrough();
    cs->add_option("--n", p.n, "2 exhaustive, 3 pruned, 4 sampled concatenation");
    cs->add_option("--constraint", p.constraint, "none or bob-mixed");
    cs->add_option("--samples", p.samples, "spot checks (n = 3) or samples (n = 4)");
    cs->add_flag("--quotient", p.quotient, "one LP per symmetry orbit (n = 2)");
    cs->add_flag("--duplicate-only", p.duplicate_only, "only encodings that reuse a function (n = 2)");
    cs->add_option("--strategy", p.strategy, "optimize the shared bits of this strategy file instead");

    auto *qe = app.add_subcommand("quantum-eval", "success probabilities of a quantum code")->fallthrough();
    qe->add_option("--state", p.state, "state JSON file");
    qe->add_option("--werner", p.werner_q, "Werner state with this q");
    qe->add_option("--bell-diagonal", p.bell_diagonal, "e1,e2,e3")->delimiter(',')->expected(3);
    qe->add_option("--protocol", p.protocol, "protocol JSON file");
    qe->add_option("--canonical", p.canonical, "canonical code for n = 2 or 3");

    auto *os = app.add_subcommand("optimize-separable", "best Bell-diagonal resource for the canonical code")
                   ->fallthrough();
    os->add_option("--n", p.n, "2 or 3");
    os->add_option("--grid-step", p.grid_step, "coarse grid spacing");
    os->add_option("--refine-tol", p.refine_tol, "line-search bracket width");
    os->add_flag("--ignore-separability", p.ignore_separability, "optimize over all valid Bell-diagonal states");

    auto *co = app.add_subcommand("crossover", "Werner-assisted vs best separable 2->1 code")->fallthrough();
    co->add_option("--q", p.q, "comma-separated Werner parameters")->delimiter(',');

    app.add_subcommand("discord-table", "discord vs efficiency rows")->fallthrough();

    auto *cc = app.add_subcommand("concatenate", "m-level concatenated 2^m->1 code")->fallthrough();
    cc->add_option("--d", p.d, "comma-separated discord values")->delimiter(',');
    cc->add_option("--m", p.m, "largest level");

    auto *pm = app.add_subcommand("prepare-measure", "noisy prepare-and-measure 2->1 code")->fallthrough();
    pm->add_option("--q", p.q, "comma-separated noise parameters")->delimiter(',');

    auto *rp = app.add_subcommand("reproduce-paper", "run every acceptance check")->fallthrough();
    rp->add_option("--samples", p.samples, "concatenated-search samples");
    rp->add_option("--cases", p.cases, "random instances per randomized check");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        try {
            if (auto path = find_config_path(args)) {
                // Parse once to learn the subcommand, then splice the config in after it.
                std::vector<std::string> rev(args.rbegin(), args.rend());
                app.parse(rev);
                CLI::App *sub = app.get_subcommands().front();
                std::vector<std::string> tokens = config_tokens(read_json_file(*path), app, *sub);
                auto at = std::find(args.begin(), args.end(), sub->get_name());
                args.insert(at + 1, tokens.begin(), tokens.end());
                app.clear();
                p = Params{};
            }
            std::vector<std::string> rev(args.rbegin(), args.rend());
            app.parse(rev);
        } catch (const CLI::CallForHelp &e) {
            return app.exit(e, out, err);
        } catch (const CLI::CallForAllHelp &e) {
            return app.exit(e, out, err);
        } catch (const CLI::ParseError &e) {
            throw ConfigError(e.what());
        }
        positive("--tolerance", p.tolerance);
        positive("--refine-tol", p.refine_tol);
        positive("--grid-step", p.grid_step);

        CLI::App *sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        bool all_pass = true;
        std::string text;
        if (name == "classical-search") {
            text = classical_search(p);
        } else if (name == "quantum-eval") {
            text = quantum_eval(p, err);
        } else if (name == "optimize-separable") {
            text = optimize_separable(p);
        } else if (name == "crossover") {
            text = crossover(p);
        } else if (name == "discord-table") {
            text = discord_table(p);
        } else if (name == "concatenate") {
            text = concatenate(p);
        } else if (name == "prepare-measure") {
            text = prepare_measure(p);
        } else {
            text = reproduce(p, all_pass);
        }

        if (p.output.empty()) {
            out << text;
        } else {
            write_text_file(p.output, text);
        }
        return all_pass ? kExitOk : kExitCriteriaFailed;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError &e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const IoError &e) {
        err << "io error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace raclab
