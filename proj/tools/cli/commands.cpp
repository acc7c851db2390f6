// Copyright 2026 The radcap Authors
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

#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "radcap/action.hpp"

namespace radcap::cli {

namespace {

constexpr int kMaxWalshDim = 20;
constexpr double kChoiTol = 1e-8;
constexpr double kBsstIdentityTol = 1e-8;
constexpr double kBsstReachTol = 1e-4;
constexpr double kBsstExceedTol = 1e-6;
constexpr double kEntropyBoundTol = 1e-6;

/// Raised for well-formed requests that cannot be served (exit code 3).
class InvalidRequest : public std::runtime_error {
public:
    explicit InvalidRequest(const std::string& what) : std::runtime_error(what) {}
};

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string p_key(double p) { return std::isinf(p) ? "inf" : format_g12(p); }

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::vector<double> parse_p_list(const std::string& text) {
    std::vector<double> out;
    std::string_view rest = text;
    while (true) {
        const std::size_t comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        if (item == "inf" || item == "infinity") {
            out.push_back(std::numeric_limits<double>::infinity());
        } else {
            const double p = parse_number(item);
            if (!(p >= 1.0)) throw ParseError("p values must be >= 1, got " + std::string(item));
            out.push_back(p);
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

/// Channel-selection flags shared by analyze, verify and walsh.
struct ChannelFlags {
    std::string radial;
    int n = -1;
    std::string dephasing;
    std::vector<std::string> ou;
    std::vector<std::string> tensor;
    std::string spec;

    void attach(CLI::App& app) {
        app.add_option("--radial", radial, "Radial symbol phi(0),...,phi(n) as CSV (needs --n)");
        app.add_option("--n", n, "Number of generators for --radial");
        app.add_option("--dephasing", dephasing, "Qubit dephasing channel with parameter t");
        app.add_option("--ou", ou, "Fermionic Ornstein-Uhlenbeck channel: <n> <t>")->expected(2);
        app.add_option("--tensor", tensor, "Tensor product of two channel specs")->expected(2);
        app.add_option("--spec", spec, "Channel in canonical text form");
    }

    ChannelSpec resolve() const {
        std::vector<ChannelSpec> chosen;
        if (!radial.empty()) {
            if (n < 0) throw ParseError("--radial needs --n");
            chosen.push_back(ChannelSpec::make_radial(parse_number_list(radial), n));
        } else if (n >= 0) {
            throw ParseError("--n is only meaningful with --radial");
        }
        if (!dephasing.empty()) chosen.push_back(ChannelSpec::make_dephasing(parse_number(dephasing)));
        if (!ou.empty()) chosen.push_back(ChannelSpec::make_ou(parse_int(ou[0]), parse_number(ou[1])));
        if (!tensor.empty()) {
            chosen.push_back(ChannelSpec::make_tensor(ChannelSpec::parse(tensor[0]),
                                                      ChannelSpec::parse(tensor[1])));
        }
        if (!spec.empty()) chosen.push_back(ChannelSpec::parse(spec));
        if (chosen.size() != 1) {
            throw ParseError("exactly one of --radial, --dephasing, --ou, --tensor, --spec is required");
        }
        return chosen.front();
    }
};

MultiplierChannel build_channel(const ChannelSpec& spec) {
    try {
        return spec.resolve();
    } catch (const std::invalid_argument& e) {
        throw InvalidRequest(e.what());
    }
}

const char* status_text(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::kPass:
            return "PASS";
        case CheckResult::Status::kFail:
            return "FAIL";
        case CheckResult::Status::kSkipped:
            return "SKIP";
    }
    return "?";
}

CheckResult make_check(std::string name, bool pass, double deviation, std::string detail = {}) {
    return {std::move(name), pass ? CheckResult::Status::kPass : CheckResult::Status::kFail,
            deviation, std::move(detail)};
}

CheckResult skipped(std::string name, std::string why) {
    return {std::move(name), CheckResult::Status::kSkipped, 0.0, std::move(why)};
}

template <typename Fn>
void run_workers(std::size_t count, Fn&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

int cmd_analyze(const ChannelSpec& spec, const std::vector<double>& p_list, const std::string& format,
                const std::vector<std::string>& required, std::ostream& out) {
    const MultiplierChannel ch = build_channel(spec);
    const CapacityReport report = capacity_report(ch, p_list);
    const nlohmann::ordered_json json = report_to_json(report);
    if (format == "json") {
        out << json.dump(2) << "\n";
    } else {
        out << report_to_table(report);
    }
    for (const auto& field : required) {
        if (!json.contains(field)) throw ParseError("unknown field '" + field + "'");
        if (json[field].is_null()) return kExitInvalidRequest;
    }
    return kExitOk;
}

int cmd_verify(const ChannelSpec& spec, const OptimizerConfig& config, const std::string& format,
               std::ostream& out) {
    const MultiplierChannel ch = build_channel(spec);
    if (!ch.has_matrix_realization()) {
        throw InvalidRequest("verify needs an even n <= " + std::to_string(kMaxMatrixDim));
    }
    const std::vector<CheckResult> checks = run_verification(ch, config);
    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.status != CheckResult::Status::kFail;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["spec"] = spec.to_string();
        j["seed"] = config.seed;
        j["restarts"] = config.restarts;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            j["checks"].push_back({{"name", c.name},
                                   {"status", status_text(c.status)},
                                   {"deviation", c.deviation},
                                   {"detail", c.detail}});
        }
        j["pass"] = all_pass;
        out << j.dump(2) << "\n";
    } else {
        out << "channel " << spec.to_string() << "\n";
        for (const auto& c : checks) {
            out << status_text(c.status) << "  " << std::left << std::setw(28) << c.name
                << " deviation=" << format_sci(c.deviation);
            if (!c.detail.empty()) out << "  " << c.detail;
            out << "\n";
        }
        out << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
    }
    return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_walsh(const ChannelSpec& spec, const std::string& format, std::ostream& out) {
    if (spec.dimension() > kMaxWalshDim) {
        throw InvalidRequest("walsh dump limited to n <= " + std::to_string(kMaxWalshDim));
    }
    const MultiplierChannel ch = build_channel(spec);
    const HypercubeFunction& f = ch.symbol_function();
    const int n = f.n;
    auto signs_of = [n](Subset eps) {
        std::vector<int> s(n);
        for (int j = 0; j < n; ++j) s[j] = (eps >> j) & 1u ? -1 : 1;
        return s;
    };
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (Eigen::Index e = 0; e < f.values.size(); ++e) {
            nlohmann::ordered_json row;
            row["eps"] = e;
            row["signs"] = signs_of(static_cast<Subset>(e));
            row["value"] = f.values[e].real();
            if (std::abs(f.values[e].imag()) > kRealTol) row["imag"] = f.values[e].imag();
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
        return kExitOk;
    }
    out << "eps\tsigns\tf\n";
    for (Eigen::Index e = 0; e < f.values.size(); ++e) {
        const auto s = signs_of(static_cast<Subset>(e));
        out << e << "\t(";
        for (int j = 0; j < n; ++j) out << (j ? "," : "") << (s[j] > 0 ? "+1" : "-1");
        out << ")\t" << format_g12(f.values[e].real());
        if (std::abs(f.values[e].imag()) > kRealTol) out << (f.values[e].imag() < 0 ? "" : "+")
                                                         << format_g12(f.values[e].imag()) << "i";
        out << "\n";
    }
    return kExitOk;
}

}  // namespace

const std::vector<std::string>& channel_only_fields() {
    static const std::vector<std::string> fields{"segal_entropy_f", "c_ea", "hcb_min_normalized",
                                                 "hcb_min_matrix_trace", "q1_lower_bound"};
    return fields;
}

nlohmann::ordered_json report_to_json(const CapacityReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["N"] = r.N ? nlohmann::ordered_json(*r.N) : nlohmann::ordered_json(nullptr);
    j["symbol"] = r.radial ? "radial" : "diagonal (non-radial)";
    j["cp"] = r.completely_positive;
    j["tp"] = r.trace_preserving;
    j["unital"] = r.unital;
    j["segal_entropy_f"] = optional_json(r.segal_entropy_f);
    j["c_ea"] = optional_json(r.c_ea);
    j["hcb_min_normalized"] = optional_json(r.hcb_min_normalized);
    j["hcb_min_matrix_trace"] = optional_json(r.hcb_min_matrix_trace);
    j["q1_lower_bound"] = optional_json(r.q1_lower_bound);
    nlohmann::ordered_json norms = nlohmann::ordered_json::object();
    for (const auto& [p, v] : r.lp_norms) norms[p_key(p)] = v;
    j["lp_norms"] = std::move(norms);
    return j;
}

std::string report_to_table(const CapacityReport& r) {
    std::ostringstream os;
    auto row = [&os](const std::string& key, const std::string& value) {
        os << std::left << std::setw(22) << key << value << "\n";
    };
    auto opt = [](const std::optional<double>& v) { return v ? format_g12(*v) : std::string("-"); };
    row("n", std::to_string(r.n));
    row("N", r.N ? std::to_string(*r.N) : "-");
    row("symbol", r.radial ? "radial" : "diagonal (non-radial)");
    row("cp", r.completely_positive ? "true" : "false");
    row("tp", r.trace_preserving ? "true" : "false");
    row("unital", r.unital ? "true" : "false");
    row("segal_entropy_f", opt(r.segal_entropy_f));
    row("c_ea", opt(r.c_ea));
    row("hcb_min_normalized", opt(r.hcb_min_normalized));
    row("hcb_min_matrix_trace", opt(r.hcb_min_matrix_trace));
    row("q1_lower_bound", opt(r.q1_lower_bound));
    for (const auto& [p, v] : r.lp_norms) row("lp_norm[" + p_key(p) + "]", format_g12(v));
    return os.str();
}

std::vector<CheckResult> run_verification(const MultiplierChannel& ch, const OptimizerConfig& config) {
    std::vector<CheckResult> checks;
    const FermionRep& rep = ch.rep();
    const int n = ch.n();
    const int dim = ch.dim();

    const SpectrumCheck spectrum = choi_spectrum_check(ch, kChoiTol);
    checks.push_back(make_check("choi_spectrum", spectrum.pass,
                                std::max(spectrum.max_deviation, spectrum.hermiticity_defect)));

    const bool cp_symbol = is_completely_positive(ch);
    const bool cp_choi = cp_check_choi(ch, kChoiTol);
    checks.push_back(make_check("cp_agreement", cp_symbol == cp_choi, cp_symbol == cp_choi ? 0.0 : 1.0,
                                std::string("cp=") + (cp_symbol ? "true" : "false") +
                                    " choi=" + (cp_choi ? "true" : "false") +
                                    " min_f=" +
                                    (ch.symbol_function().is_real() ? format_g12(min_value(ch.symbol_function()))
                                                                    : std::string("complex")) +
                                    " choi_min_eig=" + format_g12(choi_min_eigenvalue(ch))));

    if (is_quantum_channel(ch)) {
        const double capacity = c_ea(ch);
        const double at_mixed = bsst_mutual_information(ch, DensityOperator::maximally_mixed(dim));
        checks.push_back(make_check("bsst_maximally_mixed",
                                    std::abs(at_mixed - capacity) <= kBsstIdentityTol,
                                    std::abs(at_mixed - capacity)));
        if (dim <= 16) {
            const StateSearchResult best = bsst_maximize(ch, config);
            const bool pass = best.value >= capacity - kBsstReachTol &&
                              best.value <= capacity + kBsstExceedTol;
            checks.push_back(make_check("bsst_maximize", pass, std::abs(best.value - capacity),
                                        "max=" + format_g12(best.value) + " c_ea=" + format_g12(capacity)));
            const double hmin = min_output_entropy_numeric(ch, config);
            const double bound = hcb_min_matrix_trace(ch);
            checks.push_back(make_check("min_output_entropy_bound", hmin >= bound - kEntropyBoundTol,
                                        std::max(0.0, bound - hmin),
                                        "hmin=" + format_g12(hmin) + " hcb_tr=" + format_g12(bound)));
        } else {
            checks.push_back(skipped("bsst_maximize", "N > 16"));
            checks.push_back(skipped("min_output_entropy_bound", "N > 16"));
        }
    } else {
        for (const char* name : {"bsst_maximally_mixed", "bsst_maximize", "min_output_entropy_bound"}) {
            checks.push_back(skipped(name, "not a quantum channel"));
        }
    }

    if (n <= 6) {
        const IdentityCheck trace = verify_trace_preservation(rep);
        checks.push_back(make_check("action_trace_preservation", trace.pass, trace.max_deviation));
        const int fixed = fixed_space_dimension(rep, default_alpha(rep));
        checks.push_back(make_check("action_ergodicity", verify_ergodicity(rep), std::abs(fixed - 1.0),
                                    "fixed_dim=" + std::to_string(fixed)));
    } else {
        checks.push_back(skipped("action_trace_preservation", "n > 6"));
        checks.push_back(skipped("action_ergodicity", "n > 6"));
    }
    if (n <= 4) {
        const IdentityCheck coassoc = verify_coassociativity(rep);
        checks.push_back(make_check("action_coassociativity", coassoc.pass, coassoc.max_deviation));
        const IdentityCheck inter = verify_intertwining(ch);
        checks.push_back(make_check("intertwining", inter.pass, inter.max_deviation));
    } else {
        checks.push_back(skipped("action_coassociativity", "n > 4"));
        checks.push_back(skipped("intertwining", "n > 4"));
    }
    return checks;
}

std::vector<SweepRow> sweep(SweepFamily family, int n, const std::vector<double>& grid,
                            bool with_numeric, const OptimizerConfig& config) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
    if (family == SweepFamily::kDephasing && n != 2) {
        throw std::invalid_argument("sweep: dephasing family has n = 2");
    }
    if (n % 2 != 0) throw std::invalid_argument("sweep: n must be even");
    std::vector<SweepRow> rows(grid.size());
    run_workers(grid.size(), [&](std::size_t i) {
        const double t = grid[i];
        const MultiplierChannel ch = family == SweepFamily::kDephasing ? dephasing(t) : ou_semigroup(n, t);
        SweepRow& row = rows[i];
        row.t = t;
        row.c_ea = c_ea(ch);
        row.hcb_min_tr = hcb_min_matrix_trace(ch);
        row.q1_lb = q1_lower_bound(ch);
        if (with_numeric) row.hmin_numeric = min_output_entropy_numeric(ch, config);
    });
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool with_numeric) {
    std::ostringstream os;
    os << "t,c_ea,hcb_min_tr,q1_lb" << (with_numeric ? ",hmin_numeric" : "") << "\n";
    for (const auto& r : rows) {
        os << format_g12(r.t) << "," << format_g12(r.c_ea) << "," << format_g12(r.hcb_min_tr) << ","
           << format_g12(r.q1_lb);
        if (with_numeric) os << "," << format_g12(r.hmin_numeric);
        os << "\n";
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Capacities of radial multiplier channels on fermion algebras", "radcap"};
    app.require_subcommand(1);

    ChannelFlags analyze_flags, verify_flags, walsh_flags;
    std::string p_text = "2,inf";
    std::string analyze_format = "json", verify_format = "table", walsh_format = "table";
    std::vector<std::string> required;
    OptimizerConfig config;
    std::string family;
    std::string grid_text;
    std::string out_path;
    int sweep_n = 2;
    bool with_numeric = false;
    OptimizerConfig sweep_config;

    CLI::App* analyze = app.add_subcommand("analyze", "Closed-form capacity report");
    analyze_flags.attach(*analyze);
    analyze->add_option("--p", p_text, "CSV of p values for ||f||_p (inf allowed)");
    analyze->add_option("--format", analyze_format)->check(CLI::IsMember({"json", "table"}));
    analyze->add_option("--require", required,
                        "Fail with exit code 3 if any listed field is null")->delimiter(',');

    CLI::App* verify = app.add_subcommand("verify", "Check closed forms against numerical oracles");
    verify_flags.attach(*verify);
    verify->add_option("--seed", config.seed, "Optimizer seed");
    verify->add_option("--restarts", config.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
    verify->add_option("--max-iters", config.max_iters, "Iterations per restart")->check(CLI::PositiveNumber);
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "table"}));

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Tabulate a channel family over a t grid");
    sweep_cmd->add_option("family", family, "dephasing or ou")->required()->check(
        CLI::IsMember({"dephasing", "ou"}));
    sweep_cmd->add_option("--grid", grid_text, "CSV of t values")->required();
    sweep_cmd->add_option("--n", sweep_n, "Number of generators (ou family)");
    sweep_cmd->add_option("--out", out_path, "Output CSV path")->required();
    sweep_cmd->add_flag("--numeric", with_numeric, "Add a numerical minimum-output-entropy column");
    sweep_cmd->add_option("--seed", sweep_config.seed);
    sweep_cmd->add_option("--restarts", sweep_config.restarts)->check(CLI::PositiveNumber);

    CLI::App* walsh = app.add_subcommand("walsh", "Dump the symbol function on the hypercube");
    walsh_flags.attach(*walsh);
    walsh->add_option("--format", walsh_format)->check(CLI::IsMember({"json", "table"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(analyze_flags.resolve(), parse_p_list(p_text), analyze_format, required,
                               out);
        }
        if (verify->parsed()) return cmd_verify(verify_flags.resolve(), config, verify_format, out);
        if (walsh->parsed()) return cmd_walsh(walsh_flags.resolve(), walsh_format, out);
        if (sweep_cmd->parsed()) {
            const std::vector<double> grid = parse_number_list(grid_text);
            const SweepFamily fam = family == "ou" ? SweepFamily::kOu : SweepFamily::kDephasing;
            std::vector<SweepRow> rows;
            try {
                rows = sweep(fam, fam == SweepFamily::kOu ? sweep_n : 2, grid, with_numeric, sweep_config);
            } catch (const std::invalid_argument& e) {
                throw InvalidRequest(e.what());
            }
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw InvalidRequest("cannot write '" + out_path + "'");
            file << sweep_csv(rows, with_numeric);
            if (!file) throw InvalidRequest("write to '" + out_path + "' failed");
            out << "wrote " << rows.size() << " rows to " << out_path << "\n";
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const InvalidRequest& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidRequest;
    } catch (const NotAChannel& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidRequest;
    }
    return kExitParseError;
}

}  // namespace radcap::cli
