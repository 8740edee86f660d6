// Copyright 2026 The qrabi Authors
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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrabi/analytic.hpp"
#include "qrabi/errors.hpp"
#include "qrabi/fitting.hpp"
#include "qrabi/fluxonium.hpp"
#include "qrabi/gate.hpp"

namespace qrabi::cli {
namespace {

using Row = nlohmann::ordered_json;

class NonFiniteOutput : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct Emitted {
    std::vector<Row> rows;
    bool table = false;  // a sweep: CSV by default, JSON array otherwise
};

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void check_finite(const Row& row) {
    for (const auto& [key, value] : row.items()) {
        if (value.is_number_float() && !std::isfinite(value.get<double>())) {
            throw NonFiniteOutput("non-finite value for '" + key + "'");
        }
    }
}

void write_csv(const std::vector<Row>& rows, std::ostream& os) {
    if (rows.empty()) {
        return;
    }
    bool first = true;
    for (const auto& [key, value] : rows.front().items()) {
        os << (first ? "" : ",") << key;
        first = false;
    }
    os << '\n';
    for (const Row& row : rows) {
        first = true;
        for (const auto& [key, value] : row.items()) {
            os << (first ? "" : ",");
            first = false;
            if (value.is_number_float()) {
                os << format_number(value.get<double>());
            } else if (value.is_string()) {
                os << value.get<std::string>();
            } else {
                os << value.dump();
            }
        }
        os << '\n';
    }
}

void write_json(const Emitted& e, std::ostream& os) {
    if (e.table) {
        os << Row(e.rows).dump(2) << '\n';
    } else {
        os << e.rows.front().dump(2) << '\n';
    }
}

// Inclusive arithmetic range; the end point survives rounding of the step count.
std::vector<double> arithmetic_range(double lo, double hi, double step, const std::string& name) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
        throw DomainError(name + " range must be finite");
    }
    if (!(step > 0.0) || !(hi > lo)) {
        throw DomainError(name + " range is empty: need max > min and step > 0");
    }
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = lo + static_cast<double>(i) * step;
    }
    return v;
}

std::vector<double> linspace(double lo, double hi, int count, const std::string& name) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || count < 2 || !(hi > lo)) {
        throw DomainError(name + " sweep needs finite max > min and at least 2 points");
    }
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) {
        v[i] = lo + (hi - lo) * i / (count - 1);
    }
    return v;
}

Correction parse_correction(const std::string& s) {
    if (s == "none") return Correction::none;
    if (s == "approx") return Correction::approx;
    return Correction::exact;
}

Row fit_row(const std::string& mode, const FitResult& f, std::size_t samples,
            std::size_t detunings) {
    Row r;
    r["mode"] = mode;
    r["n_samples"] = samples;
    r["n_detunings"] = detunings;
    r["slope"] = f.slope;
    r["intercept"] = f.intercept;
    r["slope_stderr"] = f.slope_stderr;
    r["intercept_stderr"] = f.intercept_stderr;
    r["residual_rms"] = f.residual_rms;
    return r;
}

double parse_field(const std::string& field, std::size_t line, const std::string& column) {
    double v = 0.0;
    const char* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ParseError(line, "column " + column + ": '" + field + "' is not a finite number");
    }
    return v;
}

}  // namespace

RabiDataset read_sweep_csv(std::istream& in) {
    static const std::vector<std::string> columns = [] {
        std::vector<std::string> c;
        std::stringstream ss(kSweepHeader);
        for (std::string s; std::getline(ss, s, ',');) c.push_back(s);
        return c;
    }();
    RabiDataset data;
    std::string text;
    std::size_t line = 0;
    bool header_seen = false;
    while (std::getline(in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (!header_seen) {
            if (text != kSweepHeader) {
                throw ParseError(line, std::string("expected header '") + kSweepHeader + "'");
            }
            header_seen = true;
            continue;
        }
        if (text.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(text);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        if (!text.empty() && text.back() == ',') fields.emplace_back();
        if (fields.size() != columns.size()) {
            throw ParseError(line, "expected " + std::to_string(columns.size()) + " fields, got " +
                                       std::to_string(fields.size()));
        }
        RabiSample s;
        s.g = parse_field(fields[0], line, columns[0]);
        s.delta = parse_field(fields[1], line, columns[1]);
        s.omega = parse_field(fields[2], line, columns[2]);
        for (std::size_t i = 3; i < fields.size(); ++i) parse_field(fields[i], line, columns[i]);
        data.push_back(s);
    }
    if (!header_seen) {
        throw ParseError(1, std::string("empty input; expected header '") + kSweepHeader + "'");
    }
    return data;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Three-level Rabi, fluxonium spectrum and gate-error calculator", "qrabi"};
    app.require_subcommand(1, 1);

    std::string out_path;
    std::optional<std::string> format_flag;
    const auto add_io = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "output file (default: standard output)");
        sub->add_option("--format", format_flag, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    ThreeLevelParams p;
    const auto add_params = [&](CLI::App* sub, bool with_g) {
        if (with_g) sub->add_option("--g", p.g, "drive amplitude g (GHz)")->required();
        sub->add_option("--delta", p.delta, "detuning (GHz)")->required();
        sub->add_option("--alpha", p.alpha, "anharmonicity (GHz)")->required();
        sub->add_option("--k", p.k, "matrix-element ratio")->required();
    };

    std::function<Emitted()> action;

    CLI::App* rabi = app.add_subcommand("rabi", "dressed-state Rabi frequency at one point");
    add_params(rabi, true);
    add_io(rabi);
    rabi->callback([&] {
        action = [&] {
            const RabiSolution s = solve_rabi(p);
            Row r;
            r["g"] = p.g;
            r["delta"] = p.delta;
            r["alpha"] = p.alpha;
            r["k"] = p.k;
            r["omega_exact"] = s.omega_exact;
            r["omega_approx"] = s.omega_approx;
            r["slope"] = s.slope;
            r["stark"] = s.stark;
            r["branch_valid"] = s.branch_valid;
            r["regime_warning"] = s.regime_warning;
            return Emitted{{r}, false};
        };
    });

    double g_min = 0.0, g_max = 0.0, g_step = 0.0;
    std::vector<double> deltas;
    CLI::App* sweep = app.add_subcommand("sweep", "Rabi frequency over a grid of g and delta");
    sweep->add_option("--g-min", g_min, "first g (GHz)")->default_val(0.0);
    sweep->add_option("--g-max", g_max, "last g (GHz)")->required();
    sweep->add_option("--g-step", g_step, "g step (GHz)")->required();
    sweep->add_option("--deltas", deltas, "comma-separated detunings (GHz)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--alpha", p.alpha, "anharmonicity (GHz)")->required();
    sweep->add_option("--k", p.k, "matrix-element ratio")->required();
    add_io(sweep);
    sweep->callback([&] {
        action = [&] {
            const std::vector<double> gs = arithmetic_range(g_min, g_max, g_step, "g");
            Emitted e{{}, true};
            for (double d : deltas) {
                for (double g : gs) {
                    const ThreeLevelParams q{g, d, p.alpha, p.k};
                    const double exact = rabi_exact(q).omega;
                    const double approx = rabi_approx(q);
                    Row r;
                    r["g_ghz"] = g;
                    r["delta_ghz"] = d;
                    r["omega_exact_ghz"] = exact;
                    r["omega_approx_ghz"] = approx;
                    r["omega_sq_exact"] = exact * exact;
                    r["omega_sq_approx"] = approx * approx;
                    e.rows.push_back(std::move(r));
                }
            }
            return e;
        };
    });

    FluxoniumParams fp;
    SolverGrid grid;
    int n_levels = kDefaultLevels;
    std::string channel = "charge";
    CLI::App* flux = app.add_subcommand("fluxonium", "fluxonium spectrum and drive ratios");
    flux->add_option("--ec", fp.ec, "charging energy (GHz)")->required();
    flux->add_option("--el", fp.el, "inductive energy (GHz)")->required();
    flux->add_option("--ej", fp.ej, "Josephson energy (GHz)")->required();
    flux->add_option("--flux", fp.flux, "external flux (flux quanta)")->required();
    flux->add_option("--phi-max", grid.phi_max, "phase-grid half width (rad)");
    flux->add_option("--points", grid.n_points, "phase-grid points (odd)");
    flux->add_option("--levels", n_levels, "number of levels")->check(CLI::Range(3, 50));
    flux->add_option("--channel", channel, "drive channel reported as k")
        ->check(CLI::IsMember({"charge", "flux"}));
    add_io(flux);
    flux->callback([&] {
        action = [&] {
            const FluxoniumSpectrum s = solve_spectrum(fp, grid, n_levels);
            Row r;
            r["ec"] = fp.ec;
            r["el"] = fp.el;
            r["ej"] = fp.ej;
            r["flux"] = fp.flux;
            for (std::size_t i = 0; i < s.levels.size(); ++i) {
                r["level_" + std::to_string(i)] = s.levels[i];
            }
            r["nu01"] = s.nu01;
            r["nu12"] = s.nu12;
            r["alpha"] = s.alpha;
            r["channel"] = channel;
            const double kc = drive_ratio(s, DriveChannel::charge);
            const double kf = drive_ratio(s, DriveChannel::flux);
            r["k"] = channel == "charge" ? kc : kf;
            r["k_charge"] = kc;
            r["k_flux"] = kf;
            r["conjugate_ratio_deviation"] = conjugate_ratio_check(s);
            r["harmonic_limit"] = fp.ej == 0.0;
            r["convergence_shift"] = s.convergence_shift;
            r["tail_mass"] = s.tail_mass;
            r["converged"] = s.converged;
            return Emitted{{r}, false};
        };
    });

    double delta = 0.0, alpha = 0.0, k = 0.0;
    std::string correction = "approx";
    std::optional<double> a_min, a_max;
    int a_count = 50;
    CLI::App* gate = app.add_subcommand("gate", "two-qubit phase gate error budget");
    gate->add_option("--delta", delta, "detuning unit D (GHz)")->required();
    gate->add_option("--alpha", alpha, "anharmonicity (GHz)");
    gate->add_option("--k", k, "matrix-element ratio")->required();
    gate->add_option("--correction", correction, "Rabi frequency model")
        ->check(CLI::IsMember({"none", "approx", "exact"}));
    CLI::Option* o_min = gate->add_option("--alpha-min", a_min, "sweep start (GHz)");
    CLI::Option* o_max = gate->add_option("--alpha-max", a_max, "sweep end (GHz)");
    CLI::Option* o_count =
        gate->add_option("--alpha-count", a_count, "sweep points")->check(CLI::Range(2, 100000));
    o_min->needs(o_max);
    o_max->needs(o_min);
    o_count->needs(o_min);
    add_io(gate);
    gate->callback([&] {
        if (!a_min && gate->count("--alpha") == 0) {
            throw CLI::RequiredError("--alpha (or an --alpha-min/--alpha-max sweep)");
        }
        action = [&] {
            const Correction c = parse_correction(correction);
            if (a_min) {
                const std::vector<double> alphas = linspace(*a_min, *a_max, a_count, "alpha");
                Emitted e{{}, true};
                for (const SweepPoint& pt : sweep_anharmonicity(delta, k, alphas, c)) {
                    Row r;
                    r["alpha_ghz"] = pt.alpha;
                    r["leakage_avg"] = pt.leakage_avg;
                    r["leakage_max"] = pt.leakage_max;
                    r["phase_error_rad"] = pt.phase_error;
                    e.rows.push_back(std::move(r));
                }
                return e;
            }
            const GateConfig cfg = gate_config(delta, alpha, k);
            const GateErrorReport rep = evaluate_gate(cfg, c);
            Row r;
            r["delta"] = cfg.delta;
            r["alpha"] = cfg.alpha;
            r["k"] = cfg.k;
            r["g"] = cfg.g;
            r["tau"] = cfg.tau;
            r["correction"] = correction;
            for (const StateOutcome& s : rep.per_state) {
                const std::string tag(s.state);
                r["rabi_" + tag] = s.rabi;
                r["leakage_" + tag] = 1.0 - s.ground_population;
                r["phase_" + tag] = s.phase;
            }
            r["leakage_avg"] = rep.leakage_avg;
            r["leakage_max"] = rep.leakage_max;
            r["conditional_phase"] = rep.conditional_phase;
            r["phase_error"] = rep.phase_error;
            return Emitted{{r}, false};
        };
    });

    std::string input;
    double fit_alpha = 0.0, fit_k = 0.0, noise = 0.0, fit_g_max = 0.02;
    int g_count = 10;
    std::uint64_t seed = 0;
    std::vector<double> fit_deltas = {-0.03, -0.02, -0.01, 0.0, 0.01, 0.02, 0.03};
    CLI::App* fit = app.add_subcommand("fit", "fit Omega^2 against g^2 and slope against delta");
    CLI::Option* o_input = fit->add_option("--input", input, "sweep CSV to fit");
    CLI::Option* o_alpha = fit->add_option("--alpha", fit_alpha, "synthetic: anharmonicity (GHz)");
    CLI::Option* o_k = fit->add_option("--k", fit_k, "synthetic: matrix-element ratio");
    fit->add_option("--deltas", fit_deltas, "synthetic: detunings (GHz)")->delimiter(',');
    fit->add_option("--g-max", fit_g_max, "synthetic: largest g (GHz)");
    fit->add_option("--g-count", g_count, "synthetic: amplitudes per detuning")
        ->check(CLI::Range(3, 100000));
    fit->add_option("--noise", noise, "synthetic: relative noise on Omega");
    fit->add_option("--seed", seed, "synthetic: random seed");
    o_input->excludes(o_alpha)->excludes(o_k);
    o_alpha->needs(o_k);
    o_k->needs(o_alpha);
    add_io(fit);
    fit->callback([&] {
        if (o_input->count() == 0 && o_alpha->count() == 0) {
            throw CLI::RequiredError("--input, or --alpha and --k for synthetic data");
        }
        action = [&] {
            RabiDataset data;
            if (!input.empty()) {
                std::ifstream in(input);
                if (!in) throw DomainError("cannot open input file '" + input + "'");
                data = read_sweep_csv(in);
            } else {
                if (!(fit_g_max > 0.0)) throw DomainError("--g-max must be positive");
                std::vector<double> gs(g_count);
                for (int i = 0; i < g_count; ++i) gs[i] = fit_g_max * (i + 1) / g_count;
                data = synth_dataset(rabi_grid(fit_alpha, fit_k, fit_deltas, gs), noise, seed);
            }
            const auto groups = group_by_detuning(data);
            if (groups.size() >= 3) {
                const SlopeAnalysis a = slope_vs_detuning(groups);
                return Emitted{{fit_row("slope_vs_detuning", a.gradient, data.size(), groups.size())},
                               false};
            }
            if (groups.size() == 1) {
                return Emitted{{fit_row("omega_squared", fit_omega_squared(data), data.size(), 1)},
                               false};
            }
            throw DomainError("need one detuning (Omega^2 fit) or at least three (slope fit), got " +
                              std::to_string(groups.size()));
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Emitted e = action();
        for (const Row& r : e.rows) check_finite(r);
        const Format fmt = format_flag ? (*format_flag == "csv" ? Format::csv : Format::json)
                                       : (e.table ? Format::csv : Format::json);
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw DomainError("cannot open output file '" + out_path + "'");
        }
        std::ostream& os = out_path.empty() ? out : file;
        if (fmt == Format::csv) {
            write_csv(e.rows, os);
        } else {
            write_json(e, os);
        }
        os.flush();
        if (!os) throw DomainError("failed writing output");
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SingularFitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        err << "not converged: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ConsistencyError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const NonFiniteOutput& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace qrabi::cli
