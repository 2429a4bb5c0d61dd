// Copyright 2026 The dfsgate Authors
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

// Command-line front end: run, scan, validate and converge subcommands.
//
// Every option is a flat key; a config file holds the same keys as
// `key=value` lines and command-line flags override it. Results are CSV
// with a fixed column set:
//
//   scheme,omega0_or_omega20,kappa,gamma,g,delta,omega_strong,n_max,T,p0,
//   fidelity_conditional,fidelity_unconditional
//
// Exit codes: 0 success, 1 warnings, 2 invalid input or regime violation.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dfsgate/dfsgate.hpp"

namespace dfsgate::cli {

using Values = std::map<std::string, std::string>;

inline constexpr int kExitOk = 0;
inline constexpr int kExitWarn = 1;
inline constexpr int kExitInvalid = 2;

inline int exit_code(RegimeStatus status) { return static_cast<int>(status); }

struct KeySpec {
    const char* key;
    const char* help;
};

// clang-format off
inline const std::vector<KeySpec>& known_keys() {
    static const std::vector<KeySpec> keys = {
        {"scheme", "lambda | raman | shelving"},
        {"initial", "qubit input: 00, 01, 10, 11 or an equal superposition such as 00+10"},
        {"n-max", "photon cutoff (default: 3 lambda, 2 raman)"},
        {"g", "unit label for output: rates are multiplied and times divided by this value"},
        {"omega0", "lambda: laser Rabi frequency Omega_0 = Omega_1"},
        {"kappa", "cavity decay (raman default: |g_eff|)"},
        {"gamma", "lambda: decay of level 2; raman: decay of every e_j"},
        {"omega20", "raman: weak Rabi frequency (Omega_21 is set equal)"},
        {"delta", "raman: common detuning Delta_j"},
        {"omega-strong", "raman: common strong Rabi frequency Omega_jj"},
        {"omega-w", "shelving: weak Rabi frequency"},
        {"omega-s", "shelving: strong Rabi frequency"},
        {"gamma-s", "shelving: decay of level C"},
        {"tmax", "shelving: end of the survival time grid"},
        {"samples", "shelving: number of survival samples on [0, tmax]"},
        {"samples-out", "shelving: CSV file for t,p0 survival samples"},
        {"tolerance", "propagator accuracy target (default 1e-9)"},
        {"max-step-norm", "cap on ||G dt||_1 per propagation step (default 1024)"},
        {"relax", "lambda: add a field-free window of 5/gamma after the pulse (true/false)"},
        {"threshold", "ratio counted as 'much less than' (default 0.1)"},
        {"output", "CSV output path"},
        {"sweep", "scan: swept key"},
        {"start", "scan: first value"},
        {"stop", "scan: last value"},
        {"count", "scan: number of points"},
        {"spacing", "scan: linear | log"},
        {"threads", "scan: worker threads (default: hardware concurrency)"},
        {"converge-tolerance", "converge: largest accepted change (default 1e-6)"},
    };
    return keys;
}
// clang-format on

inline bool is_known_key(const std::string& key) {
    const auto& keys = known_keys();
    return std::any_of(keys.begin(), keys.end(), [&](const KeySpec& k) { return key == k.key; });
}

inline Error usage_error(const std::string& key, const std::string& message) {
    return Error(ErrorKind::invalid_argument, "--" + key + ": " + message);
}

/// Reads flat `key=value` lines. Blank lines and lines starting with '#'
/// are skipped; keys may be written with or without leading dashes.
inline Values read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io, "cannot read config file '" + path + "'");
    Values values;
    std::string line;
    int number = 0;
    auto trim = [](std::string s) {
        const auto first = s.find_first_not_of(" \t\r");
        const auto last = s.find_last_not_of(" \t\r");
        return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    };
    while (std::getline(in, line)) {
        ++number;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorKind::invalid_argument,
                        path + ":" + std::to_string(number) + ": expected key=value, got '" + line + "'");
        }
        std::string key = trim(line.substr(0, eq));
        while (!key.empty() && key.front() == '-') key.erase(key.begin());
        if (!is_known_key(key)) throw usage_error(key, "unknown key in config file " + path);
        values[key] = trim(line.substr(eq + 1));
    }
    return values;
}

inline double parse_number(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw usage_error(key, "expected a number, got '" + text + "'");
    }
}

inline std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) out.push_back(parse_number(key, item));
    if (out.empty()) throw usage_error(key, "empty value");
    return out;
}

inline std::optional<double> get_number(const Values& values, const std::string& key) {
    const auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    return parse_number(key, it->second);
}

inline double get_number(const Values& values, const std::string& key, double fallback) {
    return get_number(values, key).value_or(fallback);
}

inline int get_int(const Values& values, const std::string& key, int fallback) {
    const auto v = get_number(values, key);
    if (!v) return fallback;
    if (*v != std::floor(*v)) throw usage_error(key, "expected an integer");
    return static_cast<int>(*v);
}

inline bool get_bool(const Values& values, const std::string& key) {
    const auto it = values.find(key);
    if (it == values.end()) return false;
    if (it->second == "true" || it->second == "1" || it->second.empty()) return true;
    if (it->second == "false" || it->second == "0") return false;
    throw usage_error(key, "expected true or false");
}

inline std::string get_string(const Values& values, const std::string& key, const std::string& fallback = {}) {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
}

inline void require_non_negative(const std::string& key, double v) {
    if (v < 0.0) throw usage_error(key, "must be >= 0");
}

/// Fully resolved configuration for one simulation point.
struct RunConfig {
    Scheme scheme = Scheme::lambda;
    LambdaParams lambda;
    RamanParams raman;
    ShelvingParams shelving;
    std::string initial = "10";
    QubitState psi = QubitState::Zero();
    GateOptions gate;
    double g_scale = 1.0;
    double tmax = 5000.0;
    int samples = 101;
    std::string samples_out;
    std::string output;
};

inline Scheme parse_scheme(const std::string& text) {
    if (text == "lambda") return Scheme::lambda;
    if (text == "raman") return Scheme::raman;
    if (text == "shelving") return Scheme::shelving;
    throw usage_error("scheme", "expected lambda, raman or shelving, got '" + text + "'");
}

inline RunConfig parse_run_config(const Values& values) {
    for (const auto& [key, value] : values) {
        if (!is_known_key(key)) throw usage_error(key, "unknown option");
    }
    RunConfig c;
    c.scheme = parse_scheme(get_string(values, "scheme", "lambda"));
    c.g_scale = get_number(values, "g", 1.0);
    if (!(c.g_scale > 0.0)) throw usage_error("g", "must be > 0");
    c.output = get_string(values, "output");
    c.gate.regime_threshold = get_number(values, "threshold", 0.1);
    if (!(c.gate.regime_threshold > 0.0)) throw usage_error("threshold", "must be > 0");
    c.gate.plan.tolerance = get_number(values, "tolerance", 1e-9);
    if (!(c.gate.plan.tolerance > 0.0)) throw usage_error("tolerance", "must be > 0");
    c.gate.plan.max_step_norm = get_number(values, "max-step-norm", 1024.0);
    if (!(c.gate.plan.max_step_norm > 0.0)) throw usage_error("max-step-norm", "must be > 0");
    c.gate.n_max = get_int(values, "n-max", default_n_max(c.scheme));
    if (c.gate.n_max < 0) throw usage_error("n-max", "must be >= 0");
    c.gate.relaxation_window = get_bool(values, "relax");

    auto rate = [&](const char* key, double fallback) {
        const double v = get_number(values, key, fallback);
        require_non_negative(key, v);
        return v;
    };

    switch (c.scheme) {
        case Scheme::lambda:
            c.lambda.g = 1.0;
            c.lambda.omega0 = rate("omega0", 0.1);
            c.lambda.kappa = rate("kappa", 1.0);
            c.lambda.gamma = rate("gamma", 0.0);
            if (!(c.lambda.omega0 > 0.0)) throw usage_error("omega0", "must be > 0");
            if (c.gate.relaxation_window && !(c.lambda.gamma > 0.0)) {
                throw usage_error("relax", "needs gamma > 0 (window length 5/gamma)");
            }
            break;
        case Scheme::raman: {
            const double delta = rate("delta", 1000.0);
            if (!(delta > 0.0)) throw usage_error("delta", "must be > 0");
            const double strong = rate("omega-strong", 2.0);
            const double weak = rate("omega20", 0.05);
            if (!(weak > 0.0)) throw usage_error("omega20", "must be > 0");
            if (!(strong > 0.0)) throw usage_error("omega-strong", "must be > 0");
            c.raman = symmetric_raman_params(delta, strong, weak, rate("gamma", 0.0));
            if (auto kappa = get_number(values, "kappa")) {
                require_non_negative("kappa", *kappa);
                c.raman.kappa = *kappa;
            }
            if (c.gate.relaxation_window) throw usage_error("relax", "only available for the lambda scheme");
            break;
        }
        case Scheme::shelving:
            c.shelving.omega_w = rate("omega-w", 0.02);
            c.shelving.omega_s = rate("omega-s", 1.0);
            c.shelving.gamma_s = rate("gamma-s", 1.0);
            c.tmax = rate("tmax", 5000.0);
            if (!(c.tmax > 0.0)) throw usage_error("tmax", "must be > 0");
            c.samples = get_int(values, "samples", 101);
            if (c.samples < 2) throw usage_error("samples", "must be >= 2");
            c.samples_out = get_string(values, "samples-out");
            c.gate.n_max = 0;
            break;
    }
    if (c.scheme != Scheme::shelving) {
        c.initial = get_string(values, "initial", "10");
        try {
            c.psi = parse_qubit_state(c.initial);
        } catch (const Error& e) {
            throw usage_error("initial", e.what());
        }
    }
    return c;
}

/// One CSV row; empty optionals print as empty fields.
struct ResultRow {
    std::string scheme;
    std::optional<double> omega;
    std::optional<double> kappa;
    std::optional<double> gamma;
    double g = 1.0;
    std::optional<double> delta;
    std::optional<double> omega_strong;
    int n_max = 0;
    std::optional<double> time;
    std::optional<double> p0;
    std::optional<double> fidelity_conditional;
    std::optional<double> fidelity_unconditional;
    RegimeStatus status = RegimeStatus::pass;
};

inline std::string csv_header() {
    return "scheme,omega0_or_omega20,kappa,gamma,g,delta,omega_strong,n_max,T,p0,fidelity_conditional,"
           "fidelity_unconditional";
}

inline std::string format_number(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", v);
    return buffer;
}

inline std::string csv_row(const ResultRow& row) {
    auto field = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    std::string out = row.scheme;
    for (const auto& v : {row.omega, row.kappa, row.gamma}) out += "," + field(v);
    out += "," + format_number(row.g);
    for (const auto& v : {row.delta, row.omega_strong}) out += "," + field(v);
    out += "," + std::to_string(row.n_max);
    for (const auto& v : {row.time, row.p0, row.fidelity_conditional, row.fidelity_unconditional}) {
        out += "," + field(v);
    }
    return out;
}

struct ShelvingOutcome {
    DarkTimeFit fit;
    std::vector<double> times;
    std::vector<double> survival;
};

inline ShelvingOutcome run_shelving(const RunConfig& c) {
    ShelvingOutcome out;
    out.times.resize(static_cast<std::size_t>(c.samples));
    for (int k = 0; k < c.samples; ++k) out.times[k] = c.tmax * k / (c.samples - 1);
    out.survival = survival_probability(c.shelving, out.times, c.gate.plan);
    const double estimate = dark_time(c.shelving);
    const double end = std::min(2.0 * estimate, c.tmax);
    const double begin = std::min(estimate / 10.0, end / 10.0);
    out.fit = fit_dark_time(c.shelving, begin, end);
    return out;
}

/// Simulates one configuration and renders its row; rates and times are
/// relabelled by the `g` unit scale.
inline ResultRow evaluate(const RunConfig& c, ShelvingOutcome* shelving_out = nullptr) {
    const double s = c.g_scale;
    ResultRow row;
    row.scheme = to_string(c.scheme);
    row.g = s;
    row.n_max = c.gate.n_max;
    switch (c.scheme) {
        case Scheme::lambda: {
            const GateResult r = gate_run(c.lambda, c.psi, c.gate);
            row.omega = c.lambda.omega0 * s;
            row.kappa = c.lambda.kappa * s;
            row.gamma = c.lambda.gamma * s;
            row.time = r.gate_time / s;
            row.p0 = r.p0;
            row.fidelity_conditional = r.fidelity;
            row.fidelity_unconditional = r.fidelity_unconditional;
            row.status = r.regime.worst();
            break;
        }
        case Scheme::raman: {
            const GateResult r = gate_run(c.raman, c.psi, c.gate);
            row.omega = c.raman.omega20 * s;
            row.kappa = c.raman.kappa * s;
            row.gamma = c.raman.gamma[0] * s;
            row.delta = c.raman.delta[0] * s;
            row.omega_strong = c.raman.omega_diag[0] * s;
            row.time = r.gate_time / s;
            row.p0 = r.p0;
            row.fidelity_conditional = r.fidelity;
            row.fidelity_unconditional = r.fidelity_unconditional;
            row.status = r.regime.worst();
            break;
        }
        case Scheme::shelving: {
            ShelvingOutcome outcome = run_shelving(c);
            row.omega = c.shelving.omega_w * s;
            row.gamma = c.shelving.gamma_s * s;
            row.omega_strong = c.shelving.omega_s * s;
            row.time = outcome.fit.dark_time / s;
            row.p0 = outcome.survival.back();
            row.status = validate_regime_shelving(c.shelving, c.gate.regime_threshold).worst();
            if (shelving_out) *shelving_out = std::move(outcome);
            break;
        }
    }
    return row;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::io, "cannot write output file '" + path + "'");
    out << text;
    if (!out) throw Error(ErrorKind::io, "failed writing output file '" + path + "'");
}

inline RegimeReport regime_report(const RunConfig& c) {
    switch (c.scheme) {
        case Scheme::lambda: return validate_regime_lambda(c.lambda, c.gate.regime_threshold);
        case Scheme::raman: return validate_regime_raman(c.raman, c.gate.regime_threshold);
        case Scheme::shelving: return validate_regime_shelving(c.shelving, c.gate.regime_threshold);
    }
    return {};
}

inline int cmd_run(const Values& values, std::ostream& out, std::ostream& err) {
    const RunConfig c = parse_run_config(values);
    ShelvingOutcome shelving;
    const ResultRow row = evaluate(c, &shelving);
    const std::string text = csv_header() + "\n" + csv_row(row) + "\n";
    out << text;
    if (!c.output.empty()) write_text_file(c.output, text);
    if (c.scheme == Scheme::shelving && !c.samples_out.empty()) {
        std::string samples = "t,p0\n";
        for (std::size_t k = 0; k < shelving.times.size(); ++k) {
            samples += format_number(shelving.times[k] / c.g_scale) + "," + format_number(shelving.survival[k]) + "\n";
        }
        write_text_file(c.samples_out, samples);
    }
    if (row.status != RegimeStatus::pass) err << regime_report(c);
    return exit_code(row.status);
}

/// Keys that can be swept for each scheme.
inline std::vector<std::string> sweepable_keys(Scheme scheme) {
    switch (scheme) {
        case Scheme::lambda: return {"omega0", "kappa", "gamma"};
        case Scheme::raman: return {"omega20", "gamma", "kappa", "delta", "omega-strong"};
        case Scheme::shelving: return {"omega-w", "omega-s", "gamma-s"};
    }
    return {};
}

inline std::vector<double> sweep_values(const Values& values) {
    const double start = get_number(values, "start").value_or(NAN);
    if (!std::isfinite(start)) throw usage_error("start", "required for scan");
    const double stop = get_number(values, "stop", start);
    const int count = get_int(values, "count", 1);
    if (count < 1) throw usage_error("count", "must be >= 1");
    const std::string spacing = get_string(values, "spacing", "linear");
    if (spacing != "linear" && spacing != "log") throw usage_error("spacing", "expected linear or log");
    if (spacing == "log" && !(start > 0.0 && stop > 0.0)) throw usage_error("spacing", "log spacing needs start, stop > 0");
    std::vector<double> points(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double f = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
        points[k] = spacing == "log" ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                                     : start + f * (stop - start);
    }
    return points;
}

/// Expands a scan into per-point value maps: comma-separated lists on
/// sweepable keys form an outer product (keys in sorted order), the swept
/// key varies fastest.
inline std::vector<Values> expand_scan(const Values& values) {
    const Scheme scheme = parse_scheme(get_string(values, "scheme", "lambda"));
    const std::string sweep = get_string(values, "sweep");
    const auto keys = sweepable_keys(scheme);
    if (std::find(keys.begin(), keys.end(), sweep) == keys.end()) {
        std::string allowed;
        for (const auto& k : keys) allowed += (allowed.empty() ? "" : ", ") + k;
        throw usage_error("sweep", "'" + sweep + "' cannot be swept for " + to_string(scheme) + " (one of " + allowed + ")");
    }
    const std::vector<double> axis = sweep_values(values);

    Values base = values;
    for (const char* key : {"sweep", "start", "stop", "count", "spacing", "threads", "output"}) base.erase(key);
    std::vector<Values> points = {base};
    for (const auto& key : keys) {
        if (key == sweep || !values.count(key)) continue;
        const std::vector<double> list = parse_list(key, values.at(key));
        std::vector<Values> next;
        for (const auto& p : points) {
            for (double v : list) {
                Values q = p;
                q[key] = format_number(v);
                next.push_back(std::move(q));
            }
        }
        points = std::move(next);
    }
    std::vector<Values> expanded;
    for (const auto& p : points) {
        for (double v : axis) {
            Values q = p;
            char buffer[64];
            std::snprintf(buffer, sizeof buffer, "%.17g", v);
            q[sweep] = buffer;
            expanded.push_back(std::move(q));
        }
    }
    return expanded;
}

inline int cmd_scan(const Values& values, std::ostream& out, std::ostream& err) {
    const std::vector<Values> points = expand_scan(values);
    std::vector<RunConfig> configs;
    configs.reserve(points.size());
    for (const auto& p : points) configs.push_back(parse_run_config(p));

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int threads = std::clamp(get_int(values, "threads", static_cast<int>(hw)), 1, static_cast<int>(configs.size()));

    std::vector<ResultRow> rows(configs.size());
    std::vector<std::string> failures(configs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < configs.size(); k = next++) {
            try {
                rows[k] = evaluate(configs[k]);
            } catch (const std::exception& e) {
                failures[k] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t k = 0; k < failures.size(); ++k) {
        if (!failures[k].empty()) throw Error(ErrorKind::invalid_argument, "scan point " + std::to_string(k) + ": " + failures[k]);
    }
    std::string text = csv_header() + "\n";
    RegimeStatus worst = RegimeStatus::pass;
    for (const auto& row : rows) {
        text += csv_row(row) + "\n";
        worst = std::max(worst, row.status);
    }
    const std::string output = get_string(values, "output");
    if (output.empty()) {
        out << text;
    } else {
        write_text_file(output, text);
    }
    if (worst != RegimeStatus::pass) err << "regime advisory: worst status " << to_string(worst) << '\n';
    return exit_code(worst);
}

inline int cmd_validate(const Values& values, std::ostream& out, std::ostream&) {
    const RunConfig c = parse_run_config(values);
    const RegimeReport report = regime_report(c);
    out << report;
    return exit_code(report.worst());
}

struct ConvergenceRow {
    std::string quantity;
    double base = 0.0;
    double more_photons = 0.0;
    double half_step = 0.0;

    double photon_delta() const { return std::abs(more_photons - base); }
    double step_delta() const { return std::abs(half_step - base); }
};

/// Reruns a configuration with one more photon level and with half the
/// propagation step.
inline std::vector<ConvergenceRow> convergence_table(const RunConfig& base_config) {
    RunConfig photons = base_config;
    RunConfig step = base_config;
    if (base_config.scheme != Scheme::shelving) photons.gate.n_max += 1;
    step.gate.plan.substep_multiplier *= 2;

    const ResultRow a = evaluate(base_config);
    const ResultRow b = evaluate(photons);
    const ResultRow h = evaluate(step);
    std::vector<ConvergenceRow> table;
    auto add = [&](const char* name, const std::optional<double>& x, const std::optional<double>& y,
                   const std::optional<double>& z) {
        if (x && y && z) table.push_back({name, *x, *y, *z});
    };
    add("p0", a.p0, b.p0, h.p0);
    add("fidelity_conditional", a.fidelity_conditional, b.fidelity_conditional, h.fidelity_conditional);
    add("fidelity_unconditional", a.fidelity_unconditional, b.fidelity_unconditional, h.fidelity_unconditional);
    if (base_config.scheme == Scheme::shelving) add("fitted_dark_time", a.time, b.time, h.time);
    return table;
}

inline int cmd_converge(const Values& values, std::ostream& out, std::ostream& err) {
    Values run_values = values;
    run_values.erase("converge-tolerance");
    const RunConfig c = parse_run_config(run_values);
    const double tolerance = get_number(values, "converge-tolerance", 1e-6);
    const auto table = convergence_table(c);
    out << "quantity,base,n_max_plus_1,delta_n_max,half_step,delta_step\n";
    bool ok = true;
    for (const auto& r : table) {
        out << r.quantity << ',' << format_number(r.base) << ',' << format_number(r.more_photons) << ','
            << format_number(r.photon_delta()) << ',' << format_number(r.half_step) << ','
            << format_number(r.step_delta()) << '\n';
        ok = ok && r.photon_delta() <= tolerance && r.step_delta() <= tolerance;
    }
    if (!ok) err << "convergence deltas exceed " << format_number(tolerance) << '\n';
    return ok ? kExitOk : kExitWarn;
}

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conditioned-dynamics simulator for single-pulse CNOT gates in a lossy cavity"};
    app.require_subcommand(1);

    struct Command {
        const char* name;
        const char* help;
        std::function<int(const Values&, std::ostream&, std::ostream&)> handler;
        CLI::App* sub = nullptr;
    };
    std::vector<Command> commands = {
        {"run", "simulate one gate (or one shelving survival curve) and print a CSV row", cmd_run},
        {"scan", "sweep one parameter (comma lists on other keys form an outer product)", cmd_scan},
        {"validate", "check the parameter regime; exit 0 pass, 1 warnings, 2 violation", cmd_validate},
        {"converge", "rerun with one more photon level and half the step; report deltas", cmd_converge},
    };

    Values cli_values;
    std::string config_path;
    for (auto& command : commands) {
        command.sub = app.add_subcommand(command.name, command.help);
        command.sub->add_option("--config", config_path, "flat key=value file; flags override it");
        for (const auto& spec : known_keys()) {
            const std::string key = spec.key;
            if (key == "relax") {
                command.sub->add_flag_callback("--relax", [&cli_values] { cli_values["relax"] = "true"; }, spec.help);
                continue;
            }
            command.sub->add_option_function<std::string>(
                "--" + key, [&cli_values, key](const std::string& v) { cli_values[key] = v; }, spec.help);
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        Values values = config_path.empty() ? Values{} : read_config_file(config_path);
        for (const auto& [key, value] : cli_values) values[key] = value;
        for (const auto& command : commands) {
            if (command.sub->parsed()) return command.handler(values, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace dfsgate::cli
