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

#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "damped_grover/analytics.hpp"
#include "damped_grover/search_params.hpp"
#include "damped_grover/spectral.hpp"
#include "damped_grover/trajectory.hpp"
#include "damped_grover/verify.hpp"

namespace damped_grover {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int k_default_csv_precision = 12;

/// Emittable per-iteration columns, in the fixed on-disk order.
enum class OutputColumn {
    p_suc,
    c1,
    s1,
    r_x,
    r_z,
    closed_form_p_suc,
    asymptote,
};

inline const char *column_name(OutputColumn column) {
    switch (column) {
        case OutputColumn::p_suc:
            return "p_suc";
        case OutputColumn::c1:
            return "c1";
        case OutputColumn::s1:
            return "s1";
        case OutputColumn::r_x:
            return "r_x";
        case OutputColumn::r_z:
            return "r_z";
        case OutputColumn::closed_form_p_suc:
            return "closed_form_p_suc";
        case OutputColumn::asymptote:
            return "asymptote";
    }
    throw std::invalid_argument("unknown output column");
}

inline OutputColumn parse_output_column(const std::string &name) {
    for (OutputColumn column :
         {OutputColumn::p_suc, OutputColumn::c1, OutputColumn::s1, OutputColumn::r_x,
          OutputColumn::r_z, OutputColumn::closed_form_p_suc, OutputColumn::asymptote}) {
        if (name == column_name(column)) {
            return column;
        }
    }
    throw std::invalid_argument("unknown output column \"" + name + "\"");
}

inline std::vector<OutputColumn> default_output_columns() {
    return {OutputColumn::p_suc, OutputColumn::c1, OutputColumn::s1, OutputColumn::r_x,
            OutputColumn::r_z};
}

/// Sorts the requested columns into the fixed on-disk order and drops
/// duplicates.
inline std::vector<OutputColumn> canonical_columns(std::vector<OutputColumn> columns) {
    std::sort(columns.begin(), columns.end());
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
    return columns;
}

/// Locale-independent shortest-faithful rendering with the given number of
/// significant digits.
inline std::string format_double(double value, int precision = k_default_csv_precision) {
    std::array<char, 64> buffer;
    auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                   std::chars_format::general, precision);
    if (ec != std::errc{}) {
        throw std::runtime_error("failed to format floating-point value");
    }
    return std::string(buffer.data(), end);
}

/// Renders the CSV table for one already-computed trajectory. Header is
/// "t" followed by the requested columns in canonical order; rows use "."
/// decimals, "," separators, and "\n" line endings regardless of locale.
/// The closed-form column falls back to the iterative values inside the
/// degenerate band; the asymptote column is constant per file and empty at
/// gamma = 0.
inline std::string render_csv(const std::vector<TrajectoryPoint> &points,
                              const SearchParams &params, const std::vector<OutputColumn> &outputs,
                              int precision = k_default_csv_precision) {
    std::vector<OutputColumn> columns = canonical_columns(outputs);
    bool want_closed_form = std::find(columns.begin(), columns.end(),
                                      OutputColumn::closed_form_p_suc) != columns.end();
    std::vector<double> closed_form;
    if (want_closed_form) {
        closed_form.reserve(points.size());
        bool closed_form_usable = spectral_data(params).regime != Regime::degenerate;
        for (const TrajectoryPoint &point : points) {
            closed_form.push_back(closed_form_usable
                                      ? success_probability(closed_form_state(params, point.t))
                                      : point.p_suc);
        }
    }
    std::string asymptote_cell;
    if (params.gamma > 0.0) {
        asymptote_cell = format_double(asymptotic_success(params), precision);
    }

    std::string out = "t";
    for (OutputColumn column : columns) {
        out += ',';
        out += column_name(column);
    }
    out += '\n';
    for (std::size_t i = 0; i < points.size(); ++i) {
        const TrajectoryPoint &point = points[i];
        out += std::to_string(point.t);
        for (OutputColumn column : columns) {
            out += ',';
            switch (column) {
                case OutputColumn::p_suc:
                    out += format_double(point.p_suc, precision);
                    break;
                case OutputColumn::c1:
                    out += format_double(point.c1, precision);
                    break;
                case OutputColumn::s1:
                    out += format_double(point.s1, precision);
                    break;
                case OutputColumn::r_x:
                    out += format_double(point.state.x, precision);
                    break;
                case OutputColumn::r_z:
                    out += format_double(point.state.z, precision);
                    break;
                case OutputColumn::closed_form_p_suc:
                    out += format_double(closed_form[i], precision);
                    break;
                case OutputColumn::asymptote:
                    out += asymptote_cell;
                    break;
            }
        }
        out += '\n';
    }
    return out;
}

/// Runs one trajectory and renders it; the CSV table for a single
/// parameter point.
inline std::string run_single(const SearchParams &params, std::uint64_t t_max,
                              const std::vector<OutputColumn> &outputs,
                              int precision = k_default_csv_precision,
                              std::uint64_t step_cap = k_default_step_cap) {
    return render_csv(run_trajectory(params, t_max, step_cap), params, outputs, precision);
}

inline void write_text_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream stream(path, std::ios::binary | std::ios::trunc);
    if (!stream) {
        throw io_error("cannot open " + path.string() + " for writing");
    }
    stream.write(content.data(), static_cast<std::streamsize>(content.size()));
    stream.flush();
    if (!stream) {
        throw io_error("failed while writing " + path.string());
    }
}

struct SweepConfig {
    std::vector<std::uint64_t> n_values;
    std::vector<std::uint64_t> m_values;
    std::vector<double> gamma_values;
    std::uint64_t t_max = 200;
    std::vector<OutputColumn> outputs = default_output_columns();
    std::filesystem::path output_dir;
    bool verify = false;
    int precision = k_default_csv_precision;
    std::uint64_t step_cap = k_default_step_cap;
};

inline std::string triple_file_name(std::uint64_t n, std::uint64_t m, double gamma,
                                    int precision = k_default_csv_precision) {
    return "N" + std::to_string(n) + "_M" + std::to_string(m) + "_gamma" +
           format_double(gamma, precision) + ".csv";
}

struct SweepEntry {
    std::uint64_t n_items;
    std::uint64_t n_marked;
    double gamma;
    std::string file;
    bool has_asymptote;
    double asymptote;
};

struct SweepResult {
    std::vector<SweepEntry> entries;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Writes one CSV per (N, M, gamma) triple plus an index.csv listing every
/// emitted file with its asymptote (blank at gamma = 0). Per-triple
/// failures are collected instead of aborting the rest; directory-level
/// problems raise io_error; verify=true runs the oracle-equivalence suite
/// first and raises verification_error on mismatch.
inline SweepResult run_sweep(const SweepConfig &config) {
    if (config.verify) {
        VerificationReport report = run_oracle_equivalence_check();
        if (!report.ok()) {
            std::string message = "oracle equivalence check failed:";
            for (const std::string &failure : report.failures) {
                message += "\n  " + failure;
            }
            throw verification_error(message);
        }
    }
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) {
        throw io_error("cannot create output directory " + config.output_dir.string() + ": " +
                       ec.message());
    }
    SweepResult result;
    for (std::uint64_t n : config.n_values) {
        for (std::uint64_t m : config.m_values) {
            for (double gamma : config.gamma_values) {
                std::string label = "N=" + std::to_string(n) + " M=" + std::to_string(m) +
                                    " gamma=" + format_double(gamma);
                try {
                    SearchParams params = make_params(n, m, gamma);
                    std::string csv = run_single(params, config.t_max, config.outputs,
                                                 config.precision, config.step_cap);
                    std::string name = triple_file_name(n, m, gamma, config.precision);
                    write_text_file(config.output_dir / name, csv);
                    result.entries.push_back(
                        SweepEntry{n, m, gamma, name, gamma > 0.0,
                                   gamma > 0.0 ? asymptotic_success(params) : 0.0});
                } catch (const std::exception &err) {
                    result.failures.push_back(label + ": " + err.what());
                }
            }
        }
    }
    std::string index = "n,m,gamma,file,asymptote\n";
    for (const SweepEntry &entry : result.entries) {
        index += std::to_string(entry.n_items) + ',' + std::to_string(entry.n_marked) + ',' +
                 format_double(entry.gamma, config.precision) + ',' + entry.file + ',' +
                 (entry.has_asymptote ? format_double(entry.asymptote, config.precision) : "") +
                 '\n';
    }
    write_text_file(config.output_dir / "index.csv", index);
    return result;
}

/// Interior local maxima of a series: indices i with v[i] > v[i-1] and
/// v[i] >= v[i+1]. Plateaus count once, at their left edge.
inline std::vector<std::size_t> local_maxima(const std::vector<double> &values) {
    std::vector<std::size_t> peaks;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (values[i] > values[i - 1] && values[i] >= values[i + 1]) {
            peaks.push_back(i);
        }
    }
    return peaks;
}

enum class FigureId {
    fig1,
    fig2,
};

inline const char *figure_name(FigureId id) {
    return id == FigureId::fig1 ? "fig1" : "fig2";
}

struct FigurePanel {
    std::uint64_t n_items;
    std::uint64_t n_marked;
    std::vector<double> gamma_values;
    std::uint64_t t_max;
};

struct FigureSpec {
    FigureId id;
    std::vector<FigurePanel> panels;
};

/// Default reproduction settings: two panels N = 128 and N = 512, M = 2,
/// gamma in {0, 0.01, 0.02, 0.05}, horizon 200. fig1 tracks the success
/// probability, fig2 the coherence; both emit the full column set, so the
/// id only tags the output files.
inline FigureSpec figure_spec(FigureId id) {
    std::vector<double> gammas{0.0, 0.01, 0.02, 0.05};
    return FigureSpec{id,
                      {FigurePanel{128, 2, gammas, 200}, FigurePanel{512, 2, gammas, 200}}};
}

struct FigureRow {
    std::uint64_t n_items;
    std::uint64_t n_marked;
    double gamma;
    std::size_t first_peak_t;
    double first_peak_p_suc;
    std::size_t peak_count;
    double p_suc_max;
    double c1_max;
    double c1_min;
    bool has_asymptote;
    double asymptote;
    std::string file;
};

struct FigureResult {
    std::vector<FigureRow> rows;
    std::vector<std::string> files;
};

/// Emits the per-curve trajectory tables plus a summary table
/// (<figure>_summary.csv) with measured first-peak location and height,
/// peak count, extremes of P_suc and C1, and the asymptote. When the spec
/// holds exactly two panels with a fourfold N ratio and equal horizons, the
/// peak counts must double between them (tolerance +-1) for every shared
/// gamma; a violation raises verification_error after all files are
/// written.
inline FigureResult reproduce_figure(const FigureSpec &spec,
                                     const std::filesystem::path &output_dir,
                                     int precision = k_default_csv_precision) {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) {
        throw io_error("cannot create output directory " + output_dir.string() + ": " +
                       ec.message());
    }
    std::vector<OutputColumn> columns = default_output_columns();
    columns.push_back(OutputColumn::asymptote);

    FigureResult result;
    for (const FigurePanel &panel : spec.panels) {
        for (double gamma : panel.gamma_values) {
            SearchParams params = make_params(panel.n_items, panel.n_marked, gamma);
            std::vector<TrajectoryPoint> points = run_trajectory(params, panel.t_max);
            std::string name = std::string(figure_name(spec.id)) + "_N" +
                               std::to_string(panel.n_items) + "_gamma" +
                               format_double(gamma, precision) + ".csv";
            write_text_file(output_dir / name, render_csv(points, params, columns, precision));

            std::vector<double> p_suc(points.size());
            std::vector<double> c1(points.size());
            for (std::size_t i = 0; i < points.size(); ++i) {
                p_suc[i] = points[i].p_suc;
                c1[i] = points[i].c1;
            }
            std::vector<std::size_t> peaks = local_maxima(p_suc);
            std::size_t first_peak =
                peaks.empty()
                    ? static_cast<std::size_t>(
                          std::max_element(p_suc.begin(), p_suc.end()) - p_suc.begin())
                    : peaks.front();
            FigureRow row;
            row.n_items = panel.n_items;
            row.n_marked = panel.n_marked;
            row.gamma = gamma;
            row.first_peak_t = first_peak;
            row.first_peak_p_suc = p_suc[first_peak];
            row.peak_count = peaks.size();
            row.p_suc_max = *std::max_element(p_suc.begin(), p_suc.end());
            row.c1_max = *std::max_element(c1.begin(), c1.end());
            row.c1_min = *std::min_element(c1.begin(), c1.end());
            row.has_asymptote = gamma > 0.0;
            row.asymptote = gamma > 0.0 ? asymptotic_success(params) : 0.0;
            row.file = name;
            result.rows.push_back(row);
            result.files.push_back(name);
        }
    }

    std::string summary =
        "figure,n,m,gamma,first_peak_t,first_peak_p_suc,peak_count,p_suc_max,c1_max,c1_min,"
        "asymptote\n";
    for (const FigureRow &row : result.rows) {
        summary += std::string(figure_name(spec.id)) + ',' + std::to_string(row.n_items) + ',' +
                   std::to_string(row.n_marked) + ',' + format_double(row.gamma, precision) + ',' +
                   std::to_string(row.first_peak_t) + ',' +
                   format_double(row.first_peak_p_suc, precision) + ',' +
                   std::to_string(row.peak_count) + ',' + format_double(row.p_suc_max, precision) +
                   ',' + format_double(row.c1_max, precision) + ',' +
                   format_double(row.c1_min, precision) + ',' +
                   (row.has_asymptote ? format_double(row.asymptote, precision) : "") + '\n';
    }
    std::string summary_name = std::string(figure_name(spec.id)) + "_summary.csv";
    write_text_file(output_dir / summary_name, summary);
    result.files.push_back(summary_name);

    if (spec.panels.size() == 2 && spec.panels[1].n_items == 4 * spec.panels[0].n_items &&
        spec.panels[0].t_max == spec.panels[1].t_max) {
        for (const FigureRow &narrow : result.rows) {
            if (narrow.n_items != spec.panels[0].n_items) {
                continue;
            }
            for (const FigureRow &wide : result.rows) {
                if (wide.n_items != spec.panels[1].n_items || wide.gamma != narrow.gamma) {
                    continue;
                }
                auto doubled = static_cast<std::int64_t>(2 * wide.peak_count);
                auto counted = static_cast<std::int64_t>(narrow.peak_count);
                if (std::abs(counted - doubled) > 1) {
                    throw verification_error(
                        "peak-count doubling violated at gamma=" + format_double(narrow.gamma) +
                        ": " + std::to_string(narrow.peak_count) + " vs 2*" +
                        std::to_string(wide.peak_count));
                }
            }
        }
    }
    return result;
}

}  // namespace damped_grover
