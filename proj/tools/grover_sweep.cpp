// Copyright 2026 The damped_grover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "damped_grover/damped_grover.hpp"

namespace dg = damped_grover;

namespace {

constexpr int k_exit_ok = 0;
constexpr int k_exit_domain_error = 1;
constexpr int k_exit_verification_error = 2;
constexpr int k_exit_io_error = 3;

void run_verification() {
    dg::VerificationReport report = dg::run_oracle_equivalence_check();
    std::cout << "verify: " << report.cases_checked << " parameter sets x "
              << report.steps_per_case << " steps, max deviation "
              << dg::format_double(report.max_deviation, 3) << "\n";
    if (!report.ok()) {
        std::string message = "oracle equivalence check failed:";
        for (const std::string &failure : report.failures) {
            message += "\n  " + failure;
        }
        throw dg::verification_error(message);
    }
}

int run_figure(const std::string &figure, const std::string &out_dir, int precision) {
    dg::FigureSpec spec =
        dg::figure_spec(figure == "fig1" ? dg::FigureId::fig1 : dg::FigureId::fig2);
    dg::FigureResult result = dg::reproduce_figure(spec, out_dir, precision);
    for (const dg::FigureRow &row : result.rows) {
        std::cout << figure << " N=" << row.n_items << " M=" << row.n_marked
                  << " gamma=" << dg::format_double(row.gamma) << ": first peak t=" << row.first_peak_t
                  << " (p_suc=" << dg::format_double(row.first_peak_p_suc, 6) << "), "
                  << row.peak_count << " peaks, c1 in [" << dg::format_double(row.c1_min, 6) << ", "
                  << dg::format_double(row.c1_max, 6) << "]";
        if (row.has_asymptote) {
            std::cout << ", asymptote " << dg::format_double(row.asymptote, 6);
        }
        std::cout << "\n";
    }
    std::cout << "wrote " << result.files.size() << " files to " << out_dir << "\n";
    return k_exit_ok;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact dynamics of Grover search under collective amplitude damping"};
    app.set_config("--config", "", "Read options from a config file; command-line flags override");

    std::vector<std::uint64_t> n_values{128};
    std::vector<std::uint64_t> m_values{2};
    std::vector<double> gamma_values{0.0};
    std::uint64_t steps = 200;
    std::string out_dir = "grover_out";
    bool verify = false;
    std::string figure;
    std::vector<std::string> column_names;
    int precision = dg::k_default_csv_precision;
    std::uint64_t step_cap = dg::k_default_step_cap;

    app.add_option("--n", n_values, "Search-space sizes N (powers of two, N >= 4)")
        ->capture_default_str();
    app.add_option("--m", m_values, "Marked-item counts M (1 <= M <= N/2)")
        ->capture_default_str();
    app.add_option("--gamma", gamma_values, "Damping strengths in [0, 1]")
        ->capture_default_str();
    app.add_option("--steps", steps, "Iterations per trajectory")->capture_default_str();
    app.add_option("--out", out_dir, "Output directory for CSV files")->capture_default_str();
    app.add_flag("--verify", verify,
                 "Cross-check the Bloch engine against the Kraus-operator oracle before writing");
    app.add_option("--figure", figure, "Emit a figure dataset instead of a plain sweep")
        ->check(CLI::IsMember({"fig1", "fig2"}));
    app.add_option("--columns", column_names,
                   "Columns to emit: p_suc c1 s1 r_x r_z closed_form_p_suc asymptote");
    app.add_option("--precision", precision, "Significant digits for CSV floats")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_option("--cap", step_cap, "Upper bound on trajectory length")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &err) {
        return app.exit(err);
    }

    try {
        if (verify) {
            run_verification();
        }
        if (!figure.empty()) {
            return run_figure(figure, out_dir, precision);
        }
        dg::SweepConfig config;
        config.n_values = n_values;
        config.m_values = m_values;
        config.gamma_values = gamma_values;
        config.t_max = steps;
        if (!column_names.empty()) {
            config.outputs.clear();
            for (const std::string &name : column_names) {
                config.outputs.push_back(dg::parse_output_column(name));
            }
        }
        config.output_dir = out_dir;
        config.precision = precision;
        config.step_cap = step_cap;
        dg::SweepResult result = dg::run_sweep(config);
        for (const dg::SweepEntry &entry : result.entries) {
            std::cout << "wrote " << (config.output_dir / entry.file).string();
            if (entry.has_asymptote) {
                std::cout << " (asymptote " << dg::format_double(entry.asymptote, 6) << ")";
            }
            std::cout << "\n";
        }
        if (!result.ok()) {
            for (const std::string &failure : result.failures) {
                std::cerr << "failed: " << failure << "\n";
            }
            return k_exit_domain_error;
        }
        return k_exit_ok;
    } catch (const dg::verification_error &err) {
        std::cerr << "verification error: " << err.what() << "\n";
        return k_exit_verification_error;
    } catch (const dg::io_error &err) {
        std::cerr << "i/o error: " << err.what() << "\n";
        return k_exit_io_error;
    } catch (const std::exception &err) {
        std::cerr << "error: " << err.what() << "\n";
        return k_exit_domain_error;
    }
}
