#include "specprec/embedding.hpp"
#include "specprec/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace specprec;

namespace {

void report_failed_frequencies(const PrecisionEstimate& est) {
    for (const FrequencyDiagnostics& d : est.diagnostics) {
        if (d.failed) {
            std::cerr << "frequency index " << d.index << ": " << d.message << "\n";
        }
    }
}

int cmd_simulate(const std::string& config, const std::string& out_csv,
                 const std::string& truth_json) {
    Scenario sc = read_scenario_config(config);
    Var1Model model = scenario_model(sc, sc.seed);
    TimeSeriesMatrix ts = simulate(model, sc.n);
    write_csv(out_csv, ts);
    std::cout << "wrote " << ts.n() << " x " << ts.p() << " series to " << out_csv
              << "\n";
    if (!truth_json.empty()) {
        auto [truth_f, truth_theta] = true_spectrum(model, frequency_grid(sc.n));
        write_json(truth_json, precision_to_json(truth_theta, 0));
        std::cout << "wrote truth precision to " << truth_json << "\n";
    }
    return 0;
}

int cmd_estimate(const std::string& input, const std::string& output, long span,
                 bool use_gcv, double lambda, const std::string& lambda_grid,
                 long cv_stride, long freq_stride, bool standardize) {
    TimeSeriesMatrix ts = center_standardize(read_csv(input), standardize);

    if (span >= 0 && use_gcv) {
        throw InputError("estimate: --span and --gcv are mutually exclusive");
    }
    if (lambda >= 0.0 && !lambda_grid.empty()) {
        throw InputError("estimate: --lambda and --lambda-grid are mutually exclusive");
    }

    SpectralEstimate per = periodogram(ts);
    if (span < 0) {
        auto [chosen, scores] = gcv_select_span(per, default_span_candidates(ts.n()));
        span = chosen;
        std::cout << "gcv span: " << span << "\n";
    }

    if (lambda < 0.0) {
        std::vector<double> grid;
        if (lambda_grid.empty()) {
            grid = default_lambda_grid();
        } else {
            std::stringstream ss(lambda_grid);
            std::string a, b, s;
            if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') ||
                !std::getline(ss, s, ':')) {
                throw InputError("estimate: --lambda-grid wants lo:hi:steps");
            }
            grid = default_lambda_grid(std::stod(a), std::stod(b), std::stoi(s));
        }
        LambdaSelection sel = select_lambda_cv(ts, span, grid, cv_stride);
        lambda = sel.lambda;
        std::cout << "cross-validated lambda: " << lambda
                  << (sel.fallback ? " (fallback)" : "") << "\n";
    }

    PrecisionEstimate est = sipe(ts, span, lambda, freq_stride);
    report_failed_frequencies(est);
    write_json(output, precision_to_json(est, span));
    std::cout << "wrote " << est.solved_indices.size()
              << " frequency solves to " << output << "\n";
    return 0;
}

int cmd_coherence(const std::string& input, const std::string& output,
                  const std::string& band, const std::string& stat, double tau) {
    if (stat != "median") {
        throw InputError("coherence: only --stat median is supported");
    }
    std::stringstream ss(band);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',')) {
        throw InputError("coherence: --band wants a,b with 0 <= a < b <= 0.5");
    }
    PrecisionEstimate est = precision_from_json(read_json(input));
    CoherenceMatrices rho = partial_coherence(est);
    Matrix summary = band_summary(rho, std::stod(a), std::stod(b));
    write_matrix_csv(output, summary,
                     TimeSeriesMatrix::default_names(summary.rows()));
    std::cout << "band (" << a << ", " << b << ") median over "
              << rho.matrices.size() << " solved frequencies; sparsity_fraction="
              << sparsity_fraction(summary, tau) << "\n";
    std::cout << "wrote band summary to " << output << "\n";
    return 0;
}

int cmd_bench(const std::string& config, const std::string& output,
              const std::string& json_out) {
    Scenario sc = read_scenario_config(config);
    std::vector<BenchmarkRow> rows = run_benchmark(
        sc, {EstimatorKind::Naive, EstimatorKind::Shrinkage, EstimatorKind::Sipe});
    write_benchmark_csv(output, rows);
    std::cout << "wrote benchmark table to " << output << "\n";
    if (!json_out.empty()) {
        write_json(json_out, benchmark_to_json(rows));
        std::cout << "wrote benchmark json to " << json_out << "\n";
    }
    return 0;
}

// Deterministic generator for the self-test instances (xorshift-free
// splitmix64, portable across platforms).
struct SelfTestRng {
    std::uint64_t state;
    explicit SelfTestRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

int cmd_check() {
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    };

    // Complex-inverse round trip through the real block embedding.
    {
        bool ok = true;
        SelfTestRng rng(1);
        for (int rep = 0; rep < 200 && ok; ++rep) {
            Eigen::Index p = 1 + static_cast<Eigen::Index>(rng.next() % 8);
            ComplexMatrix z(p, p);
            for (Eigen::Index i = 0; i < p; ++i) {
                for (Eigen::Index j = 0; j < p; ++j) {
                    z(i, j) = Complex(2.0 * rng.uniform01() - 1.0,
                                      2.0 * rng.uniform01() - 1.0);
                }
            }
            z += 3.0 * ComplexMatrix::Identity(p, p);
            ok = lemma_roundtrip_check(z) <= 1e-9;
        }
        report("embedding round trip (200 random matrices)", ok);
    }

    // Constrained l1 solves: identity inversion, residual feasibility,
    // l1 monotonicity in lambda.
    {
        bool ok = true;
        ClimeMatrixResult r = clime_matrix(Matrix::Identity(4, 4), 0.0);
        ok = r.all_optimal &&
             (r.theta - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-9;
        report("l1 solver inverts the identity at lambda 0", ok);
    }
    {
        bool ok = true;
        SelfTestRng rng(7);
        for (int rep = 0; rep < 5 && ok; ++rep) {
            Matrix g(6, 6);
            for (Eigen::Index i = 0; i < g.size(); ++i) {
                g.data()[i] = 2.0 * rng.uniform01() - 1.0;
            }
            Matrix s = g.transpose() * g / 6.0 + 0.5 * Matrix::Identity(6, 6);
            for (double lambda : {0.05, 0.1, 0.3}) {
                double prev = -1.0;
                for (Eigen::Index k = 0; k < 6 && ok; ++k) {
                    ColumnSolve cs = clime_column(s, k, lambda);
                    ok = cs.status == SolveStatus::Optimal &&
                         cs.residual <= lambda + 1e-7;
                    (void)prev;
                }
            }
            for (Eigen::Index k = 0; k < 6 && ok; ++k) {
                double prev = 1e300;
                for (double lambda : {0.01, 0.05, 0.1, 0.3}) {
                    ColumnSolve cs = clime_column(s, k, lambda);
                    ok = ok && cs.status == SolveStatus::Optimal &&
                         cs.objective <= prev + 1e-9;
                    prev = cs.objective;
                }
            }
        }
        report("l1 solver feasibility and monotonicity (random instances)", ok);
    }

    if (failures > 0) {
        std::cerr << failures << " self-test(s) failed\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse inverse spectral density estimation for multivariate "
                 "time series"};
    app.require_subcommand(1);

    std::string config, out_csv, truth_json;
    CLI::App* sim = app.add_subcommand(
        "simulate", "Generate a scenario series CSV (and optional truth JSON)");
    sim->add_option("--config", config, "scenario config file")->required();
    sim->add_option("--out", out_csv, "output series CSV")->required();
    sim->add_option("--truth", truth_json, "output truth precision JSON");

    std::string est_in, est_out, lambda_grid;
    long span = -1, cv_stride = 4, freq_stride = 1;
    bool use_gcv = false, standardize = false;
    double lambda = -1.0;
    CLI::App* est = app.add_subcommand(
        "estimate", "Estimate per-frequency sparse precision matrices from a CSV");
    est->add_option("--input", est_in, "input series CSV")->required();
    est->add_option("--output", est_out, "output precision JSON")->required();
    est->add_option("--span", span, "smoothing half-width M");
    est->add_flag("--gcv", use_gcv, "select the span by GCV (default when --span absent)");
    est->add_option("--lambda", lambda, "fixed l1 constraint level");
    est->add_option("--lambda-grid", lambda_grid,
                    "cross-validate lambda over lo:hi:steps (default grid when "
                    "--lambda absent)");
    est->add_option("--cv-stride", cv_stride,
                    "frequency subsampling inside lambda cross-validation");
    est->add_option("--freq-stride", freq_stride,
                    "solve only frequency indices divisible by this stride");
    est->add_flag("--standardize", standardize,
                  "scale each dimension to unit variance before estimation");

    std::string coh_in, coh_out, band, stat = "median";
    double tau = 1e-8;
    CLI::App* coh = app.add_subcommand(
        "coherence", "Band-summarize partial coherence from a precision JSON");
    coh->add_option("--input", coh_in, "input precision JSON")->required();
    coh->add_option("--output", coh_out, "output band-summary CSV")->required();
    coh->add_option("--band", band, "frequency band a,b")->required();
    coh->add_option("--stat", stat, "summary statistic (median)");
    coh->add_option("--tau", tau, "zero threshold for the sparsity fraction");

    std::string bench_config, bench_out, bench_json;
    CLI::App* bench = app.add_subcommand(
        "bench", "Run the scenario benchmark and write a results table");
    bench->add_option("--config", bench_config, "scenario config file")->required();
    bench->add_option("--output", bench_out, "output results CSV")->required();
    bench->add_option("--json", bench_json, "optional results JSON");

    CLI::App* check = app.add_subcommand("check", "Run built-in self-tests");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return cmd_simulate(config, out_csv, truth_json);
        if (est->parsed()) {
            return cmd_estimate(est_in, est_out, span, use_gcv, lambda,
                                lambda_grid, cv_stride, freq_stride, standardize);
        }
        if (coh->parsed()) return cmd_coherence(coh_in, coh_out, band, stat, tau);
        if (bench->parsed()) return cmd_bench(bench_config, bench_out, bench_json);
        if (check->parsed()) return cmd_check();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
