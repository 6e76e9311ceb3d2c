#ifndef SPECPREC_IO_HPP
#define SPECPREC_IO_HPP

#include "specprec/analysis.hpp"
#include "specprec/metrics.hpp"
#include "specprec/types.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace specprec {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim surrounding whitespace
        std::size_t b = field.find_first_not_of(" \t\r");
        std::size_t e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

inline bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(s, &used);
        return used == s.size();
    } catch (...) {
        return false;
    }
}

}  // namespace detail

/// Reads a time series CSV: rows are time points, columns are series, with
/// an optional single header row (detected by non-numeric fields). Missing
/// values are an error.
inline TimeSeriesMatrix read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("read_csv: cannot open '" + path + "'");
    std::vector<std::vector<double>> rows;
    std::vector<std::string> names;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> fields = detail::split_csv_line(line);
        std::vector<double> row(fields.size());
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (fields[i].empty() || !detail::parse_double(fields[i], row[i])) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (rows.empty() && names.empty()) {
                names = fields;  // header row
                continue;
            }
            throw InputError("read_csv: non-numeric or missing value at line " +
                             std::to_string(lineno));
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw InputError("read_csv: ragged row at line " + std::to_string(lineno));
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() < 2) throw InputError("read_csv: need at least 2 data rows");
    TimeSeriesMatrix ts;
    ts.values.resize(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            ts.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                rows[i][j];
        }
    }
    ts.names = names.empty() ? TimeSeriesMatrix::default_names(ts.p()) : names;
    if (static_cast<Eigen::Index>(ts.names.size()) != ts.p()) {
        throw InputError("read_csv: header width does not match data width");
    }
    ts.validate();
    return ts;
}

inline void write_csv(const std::string& path, const TimeSeriesMatrix& ts) {
    std::ofstream out(path);
    if (!out) throw InputError("write_csv: cannot open '" + path + "'");
    out << std::setprecision(17);
    for (std::size_t j = 0; j < ts.names.size(); ++j) {
        out << (j ? "," : "") << ts.names[j];
    }
    out << "\n";
    for (Eigen::Index t = 0; t < ts.n(); ++t) {
        for (Eigen::Index j = 0; j < ts.p(); ++j) {
            out << (j ? "," : "") << ts.values(t, j);
        }
        out << "\n";
    }
}

/// Precision estimates as JSON: n, p, span, and per-frequency dense complex
/// matrices as [re, im] pairs. Entries with modulus below 1e-12 are stored
/// as exact zeros (the LP solutions are exactly sparse at vertices).
inline nlohmann::json precision_to_json(const PrecisionEstimate& est, long span) {
    nlohmann::json j;
    j["n"] = est.grid.n;
    j["p"] = est.p();
    j["span"] = span;
    nlohmann::json freqs = nlohmann::json::array();
    for (std::size_t i = 0; i < est.solved_indices.size(); ++i) {
        nlohmann::json fj;
        long idx = est.solved_indices[i];
        fj["index"] = idx;
        fj["frequency"] = est.grid.frequency_at(est.grid.position(idx));
        fj["lambda"] = est.lambdas[i];
        nlohmann::json mat = nlohmann::json::array();
        const ComplexMatrix& m = est.matrices[i];
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                double re = m(r, c).real();
                double im = m(r, c).imag();
                if (std::abs(m(r, c)) < 1e-12) { re = 0.0; im = 0.0; }
                row.push_back(nlohmann::json::array({re, im}));
            }
            mat.push_back(std::move(row));
        }
        fj["theta"] = std::move(mat);
        freqs.push_back(std::move(fj));
    }
    j["frequencies"] = std::move(freqs);
    nlohmann::json diags = nlohmann::json::array();
    for (const FrequencyDiagnostics& d : est.diagnostics) {
        if (!d.failed) continue;
        diags.push_back({{"index", d.index}, {"message", d.message}});
    }
    j["failed_frequencies"] = std::move(diags);
    return j;
}

inline PrecisionEstimate precision_from_json(const nlohmann::json& j) {
    PrecisionEstimate est;
    est.grid = frequency_grid(j.at("n").get<Eigen::Index>());
    Eigen::Index p = j.at("p").get<Eigen::Index>();
    for (const nlohmann::json& fj : j.at("frequencies")) {
        long idx = fj.at("index").get<long>();
        const nlohmann::json& mat = fj.at("theta");
        ComplexMatrix m(p, p);
        for (Eigen::Index r = 0; r < p; ++r) {
            for (Eigen::Index c = 0; c < p; ++c) {
                const nlohmann::json& cell = mat.at(static_cast<std::size_t>(r))
                                                 .at(static_cast<std::size_t>(c));
                m(r, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
            }
        }
        est.solved_indices.push_back(idx);
        est.matrices.push_back(std::move(m));
        est.lambdas.push_back(fj.value("lambda", 0.0));
    }
    return est;
}

inline void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("write_json: cannot open '" + path + "'");
    out << j.dump(1) << "\n";
}

inline nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("read_json: cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return j;
}

/// Scenario config: plain "key = value" lines, '#' comments.
/// Keys: scenario (wn|var1|svar1), p, n, reps, seed, span (integer or gcv),
/// lambda (number or cv), lambda-grid (lo:hi:steps), cv-stride, freq-stride.
inline Scenario read_scenario_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("read_scenario_config: cannot open '" + path + "'");
    Scenario sc;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos) {
            throw InputError("read_scenario_config: expected 'key = value' at line " +
                             std::to_string(lineno));
        }
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "scenario") {
            sc.kind = scenario_kind_from_string(val);
        } else if (key == "p") {
            sc.p = std::stol(val);
        } else if (key == "n") {
            sc.n = std::stol(val);
        } else if (key == "reps") {
            sc.reps = std::stol(val);
        } else if (key == "seed") {
            sc.seed = std::stoull(val);
        } else if (key == "span") {
            sc.span = val == "gcv" ? -1 : std::stol(val);
        } else if (key == "lambda") {
            sc.lambda = val == "cv" ? -1.0 : std::stod(val);
        } else if (key == "lambda-grid") {
            std::stringstream ss(val);
            std::string a, b, s;
            if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') ||
                !std::getline(ss, s, ':')) {
                throw InputError("read_scenario_config: lambda-grid wants lo:hi:steps");
            }
            sc.lambda_grid =
                default_lambda_grid(std::stod(a), std::stod(b), std::stoi(s));
        } else if (key == "cv-stride") {
            sc.cv_stride = std::stol(val);
        } else if (key == "freq-stride") {
            sc.freq_stride = std::stol(val);
        } else {
            throw InputError("read_scenario_config: unknown key '" + key +
                             "' at line " + std::to_string(lineno));
        }
    }
    return sc;
}

inline void write_benchmark_csv(const std::string& path,
                                const std::vector<BenchmarkRow>& rows) {
    std::ofstream out(path);
    if (!out) throw InputError("write_benchmark_csv: cannot open '" + path + "'");
    out << "scenario,p,n,estimator,mise_mean_x1e3,mise_sd_x1e3,"
           "tpp_mean,tpp_sd,tnp_mean,tnp_sd,failures,not_invertible\n";
    out << std::setprecision(10);
    auto cell = [&](const MeanSd& ms, bool sd) -> std::string {
        if (ms.count == 0) return "";
        std::ostringstream s;
        s << std::setprecision(10) << (sd ? ms.sd : ms.mean);
        return s.str();
    };
    for (const BenchmarkRow& r : rows) {
        out << r.scenario << ',' << r.p << ',' << r.n << ',' << r.estimator << ','
            << cell(r.mise_x1e3, false) << ',' << cell(r.mise_x1e3, true) << ','
            << cell(r.tpp, false) << ',' << cell(r.tpp, true) << ','
            << cell(r.tnp, false) << ',' << cell(r.tnp, true) << ','
            << r.failures << ',' << r.not_invertible << "\n";
    }
}

inline nlohmann::json benchmark_to_json(const std::vector<BenchmarkRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BenchmarkRow& r : rows) {
        nlohmann::json j;
        j["scenario"] = r.scenario;
        j["p"] = r.p;
        j["n"] = r.n;
        j["estimator"] = r.estimator;
        auto put = [&](const char* name, const MeanSd& ms) {
            if (ms.count == 0) {
                j[name] = nullptr;
            } else {
                j[name] = {{"mean", ms.mean}, {"sd", ms.sd}, {"count", ms.count}};
            }
        };
        put("mise_x1e3", r.mise_x1e3);
        put("tpp", r.tpp);
        put("tnp", r.tnp);
        j["failures"] = r.failures;
        j["not_invertible"] = r.not_invertible;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline void write_power_spectra_csv(const std::string& path,
                                    const std::vector<PowerSpectrumRow>& rows,
                                    const std::vector<std::string>& names) {
    std::ofstream out(path);
    if (!out) throw InputError("write_power_spectra_csv: cannot open '" + path + "'");
    out << "dimension,frequency,power\n";
    out << std::setprecision(12);
    for (const PowerSpectrumRow& r : rows) {
        std::size_t di = static_cast<std::size_t>(r.dimension - 1);
        out << (di < names.size() ? names[di] : std::to_string(r.dimension)) << ','
            << r.frequency << ',' << r.power << "\n";
    }
}

inline void write_matrix_csv(const std::string& path, const Matrix& m,
                             const std::vector<std::string>& names) {
    std::ofstream out(path);
    if (!out) throw InputError("write_matrix_csv: cannot open '" + path + "'");
    out << std::setprecision(12);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        out << ',' << (static_cast<std::size_t>(j) < names.size()
                           ? names[static_cast<std::size_t>(j)]
                           : "V" + std::to_string(j + 1));
    }
    out << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << (static_cast<std::size_t>(i) < names.size()
                    ? names[static_cast<std::size_t>(i)]
                    : "V" + std::to_string(i + 1));
        for (Eigen::Index j = 0; j < m.cols(); ++j) out << ',' << m(i, j);
        out << "\n";
    }
}

}  // namespace specprec

#endif  // SPECPREC_IO_HPP
