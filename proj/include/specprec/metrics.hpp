#ifndef SPECPREC_METRICS_HPP
#define SPECPREC_METRICS_HPP

#include "specprec/clime.hpp"
#include "specprec/simgen.hpp"
#include "specprec/spectral.hpp"
#include "specprec/types.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace specprec {

/// Direct per-frequency inversion of a spectral estimate. Frequencies whose
/// matrix is numerically singular (reciprocal condition number below
/// rcond_min) are recorded as not-invertible instead of thrown.
inline PrecisionEstimate naive_inverse(const SpectralEstimate& f,
                                       double rcond_min = 1e-12) {
    PrecisionEstimate out;
    out.grid = f.grid;
    for (std::size_t pos = 0; pos < f.matrices.size(); ++pos) {
        long j = f.grid.index_at(pos);
        const ComplexMatrix& m = f.matrices[pos];
        FrequencyDiagnostics diag;
        diag.index = j;
        Eigen::JacobiSVD<ComplexMatrix> svd(m);
        double smax = svd.singularValues()(0);
        double smin = svd.singularValues()(m.rows() - 1);
        if (!(smax > 0.0) || smin / smax < rcond_min) {
            diag.failed = true;
            diag.message = "not-invertible";
        } else {
            out.solved_indices.push_back(j);
            out.matrices.push_back(SpectralEstimate::hermitize(
                m.fullPivLu().solve(ComplexMatrix::Identity(m.rows(), m.rows()))));
            out.lambdas.push_back(0.0);
        }
        out.diagnostics.push_back(std::move(diag));
    }
    return out;
}

inline long not_invertible_count(const PrecisionEstimate& est) {
    long c = 0;
    for (const FrequencyDiagnostics& d : est.diagnostics) {
        if (d.failed) ++c;
    }
    return c;
}

/// Shrinkage toward a scaled identity: f_hat = (1 - W) f_smooth + W mu I,
/// mu = trace(f_smooth)/p, with data-driven weight
///   W = min(1, v / d),
///   v = (2M+1)^{-2} sum_{|k|<=M} ||P(w_{j+k}) - f_smooth(w_j)||_F^2,
///   d = ||f_smooth(w_j) - mu I||_F^2,
/// and W = 0 when d = 0.
inline SpectralEstimate shrinkage(const SpectralEstimate& per, long M) {
    SpectralEstimate sm = smooth(per, M);
    const Eigen::Index p = per.p();
    SpectralEstimate out = sm;
    const double inv_w2 = 1.0 / std::pow(static_cast<double>(2 * M + 1), 2);
    for (std::size_t pos = 0; pos < sm.matrices.size(); ++pos) {
        long j = sm.grid.index_at(pos);
        const ComplexMatrix& fs = sm.matrices[pos];
        double mu = fs.trace().real() / static_cast<double>(p);
        ComplexMatrix target = mu * ComplexMatrix::Identity(p, p);
        double d = (fs - target).squaredNorm();
        double w = 0.0;
        if (d > 0.0) {
            double v = 0.0;
            for (long k = -M; k <= M; ++k) {
                v += (per.matrices[per.grid.position(j + k)] - fs).squaredNorm();
            }
            v *= inv_w2;
            w = std::min(1.0, v / d);
        }
        out.matrices[pos] =
            SpectralEstimate::hermitize((1.0 - w) * fs + w * target);
    }
    return out;
}

/// Off-diagonal Frobenius distance squared between two complex matrices.
inline double offdiag_sq(const ComplexMatrix& a, const ComplexMatrix& b) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (i == j) continue;
            s += std::norm(a(i, j) - b(i, j));
        }
    }
    return s;
}

/// Mean integrated squared error over the Fourier frequencies in (0, 0.5),
/// off-diagonal entries only:
///   (2/n) sum_j || est(w_j) - truth(w_j) ||_*^2.
/// Frequencies the estimate skipped or failed are an error here; callers
/// wanting partial scores should filter first.
inline double mise(const PrecisionEstimate& est, const PrecisionEstimate& truth) {
    if (est.grid != truth.grid) throw InputError("mise: frequency grids differ");
    if (est.p() != truth.p()) throw InputError("mise: dimensions differ");
    double total = 0.0;
    for (std::size_t i = 0; i < truth.solved_indices.size(); ++i) {
        long j = truth.solved_indices[i];
        double w = truth.grid.frequency_at(truth.grid.position(j));
        if (!(w > 0.0 && w < 0.5)) continue;
        total += offdiag_sq(est.at_index(j), truth.matrices[i]);
    }
    return 2.0 / static_cast<double>(truth.grid.n) * total;
}

struct SupportMetrics {
    std::optional<double> tpp;  // empty when the truth has no off-diagonal
                                // nonzeros at any frequency
    std::optional<double> tnp;  // empty when the truth has no off-diagonal
                                // zeros at any frequency
};

/// Off-diagonal support recovery, per frequency then averaged across the
/// frequencies where the ratio is defined.
inline SupportMetrics support_metrics(const PrecisionEstimate& est,
                                      const PrecisionEstimate& truth,
                                      double tau = 1e-8) {
    if (est.p() != truth.p()) throw InputError("support_metrics: dimensions differ");
    double tpp_sum = 0.0, tnp_sum = 0.0;
    long tpp_n = 0, tnp_n = 0;
    for (std::size_t i = 0; i < truth.solved_indices.size(); ++i) {
        long j = truth.solved_indices[i];
        if (!est.has_index(j)) continue;
        const ComplexMatrix& e = est.at_index(j);
        const ComplexMatrix& t = truth.matrices[i];
        long tp = 0, pos = 0, tn = 0, neg = 0;
        for (Eigen::Index r = 0; r < t.rows(); ++r) {
            for (Eigen::Index c = 0; c < t.cols(); ++c) {
                if (r == c) continue;
                bool truth_nz = std::abs(t(r, c)) > 0.0;
                bool est_nz = std::abs(e(r, c)) > tau;
                if (truth_nz) {
                    ++pos;
                    if (est_nz) ++tp;
                } else {
                    ++neg;
                    if (!est_nz) ++tn;
                }
            }
        }
        if (pos > 0) {
            tpp_sum += static_cast<double>(tp) / static_cast<double>(pos);
            ++tpp_n;
        }
        if (neg > 0) {
            tnp_sum += static_cast<double>(tn) / static_cast<double>(neg);
            ++tnp_n;
        }
    }
    SupportMetrics out;
    if (tpp_n > 0) out.tpp = tpp_sum / static_cast<double>(tpp_n);
    if (tnp_n > 0) out.tnp = tnp_sum / static_cast<double>(tnp_n);
    return out;
}

// ---------------------------------------------------------------------------
// Benchmark orchestration

enum class ScenarioKind { WhiteNoise, BandedVar1, SparseVar1 };

inline ScenarioKind scenario_kind_from_string(const std::string& s) {
    if (s == "wn") return ScenarioKind::WhiteNoise;
    if (s == "var1") return ScenarioKind::BandedVar1;
    if (s == "svar1") return ScenarioKind::SparseVar1;
    throw InputError("unknown scenario '" + s + "' (expected wn, var1, svar1)");
}

inline const char* to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::WhiteNoise: return "wn";
        case ScenarioKind::BandedVar1: return "var1";
        case ScenarioKind::SparseVar1: return "svar1";
    }
    return "unknown";
}

struct Scenario {
    ScenarioKind kind = ScenarioKind::WhiteNoise;
    Eigen::Index p = 10;
    Eigen::Index n = 200;
    long reps = 20;
    std::uint64_t seed = 1;
    long span = -1;              // -1: GCV over default candidates
    double lambda = -1.0;        // -1: cross-validated over lambda_grid
    std::vector<double> lambda_grid;
    long cv_stride = 4;          // frequency subsampling inside lambda CV
    long freq_stride = 1;
};

inline Var1Model scenario_model(const Scenario& sc, std::uint64_t seed) {
    switch (sc.kind) {
        case ScenarioKind::WhiteNoise: return make_wn(sc.p, seed);
        case ScenarioKind::BandedVar1: {
            Var1Model m = make_banded_var1(sc.p);
            m.seed = seed;
            return m;
        }
        case ScenarioKind::SparseVar1: return make_sparse_var1(sc.p, seed);
    }
    throw InputError("scenario_model: bad scenario kind");
}

enum class EstimatorKind { Sipe, Naive, Shrinkage };

inline const char* to_string(EstimatorKind k) {
    switch (k) {
        case EstimatorKind::Sipe: return "sipe";
        case EstimatorKind::Naive: return "naive";
        case EstimatorKind::Shrinkage: return "shrinkage";
    }
    return "unknown";
}

struct MeanSd {
    double mean = std::numeric_limits<double>::quiet_NaN();
    double sd = 0.0;
    long count = 0;
};

inline MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    out.count = static_cast<long>(xs.size());
    if (xs.empty()) return out;
    double s = 0.0;
    for (double x : xs) s += x;
    out.mean = s / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return out;
}

struct BenchmarkRow {
    std::string scenario;
    Eigen::Index p = 0;
    Eigen::Index n = 0;
    std::string estimator;
    MeanSd mise_x1e3;  // MISE scaled by 10^3
    MeanSd tpp;        // sparse estimator only; count 0 otherwise
    MeanSd tnp;
    long failures = 0;         // replicates excluded from the means
    long not_invertible = 0;   // replicates with at least one singular frequency
};

/// Runs every requested estimator on `reps` independent replicates of the
/// scenario (seeds seed, seed+1, ...). Per-replicate failures are recorded
/// and excluded from the means.
inline std::vector<BenchmarkRow> run_benchmark(
    const Scenario& sc, const std::vector<EstimatorKind>& estimators) {
    if (sc.reps < 1) throw InputError("run_benchmark: need reps >= 1");
    std::vector<double> lambda_grid =
        sc.lambda_grid.empty() ? default_lambda_grid() : sc.lambda_grid;

    struct Acc {
        std::vector<double> mise, tpp, tnp;
        long failures = 0;
        long not_invertible = 0;
    };
    std::vector<Acc> acc(estimators.size());

    for (long rep = 0; rep < sc.reps; ++rep) {
        std::uint64_t seed = sc.seed + static_cast<std::uint64_t>(rep);
        Var1Model model = scenario_model(sc, seed);
        TimeSeriesMatrix raw = simulate(model, sc.n);
        TimeSeriesMatrix ts = center_standardize(raw, false);
        auto [truth_f, truth_theta] = true_spectrum(model, frequency_grid(sc.n));

        SpectralEstimate per = periodogram(ts);
        long span = sc.span;
        if (span < 0) {
            span = gcv_select_span(per, default_span_candidates(sc.n)).first;
        }

        for (std::size_t e = 0; e < estimators.size(); ++e) {
            Acc& a = acc[e];
            try {
                switch (estimators[e]) {
                    case EstimatorKind::Naive: {
                        PrecisionEstimate est = naive_inverse(smooth(per, span));
                        if (not_invertible_count(est) > 0) {
                            ++a.not_invertible;
                        } else {
                            a.mise.push_back(1e3 * mise(est, truth_theta));
                        }
                        break;
                    }
                    case EstimatorKind::Shrinkage: {
                        PrecisionEstimate est = naive_inverse(shrinkage(per, span));
                        if (not_invertible_count(est) > 0) {
                            ++a.not_invertible;
                        } else {
                            a.mise.push_back(1e3 * mise(est, truth_theta));
                        }
                        break;
                    }
                    case EstimatorKind::Sipe: {
                        double lambda = sc.lambda;
                        if (lambda < 0.0) {
                            lambda = select_lambda_cv(ts, span, lambda_grid,
                                                      sc.cv_stride)
                                         .lambda;
                        }
                        PrecisionEstimate est =
                            sipe(ts, span, lambda, sc.freq_stride);
                        a.mise.push_back(1e3 * mise(est, truth_theta));
                        SupportMetrics sup = support_metrics(est, truth_theta);
                        if (sup.tpp) a.tpp.push_back(*sup.tpp);
                        if (sup.tnp) a.tnp.push_back(*sup.tnp);
                        break;
                    }
                }
            } catch (const std::exception&) {
                ++a.failures;
            }
        }
    }

    std::vector<BenchmarkRow> rows;
    for (std::size_t e = 0; e < estimators.size(); ++e) {
        BenchmarkRow row;
        row.scenario = to_string(sc.kind);
        row.p = sc.p;
        row.n = sc.n;
        row.estimator = to_string(estimators[e]);
        row.mise_x1e3 = mean_sd(acc[e].mise);
        row.tpp = mean_sd(acc[e].tpp);
        row.tnp = mean_sd(acc[e].tnp);
        row.failures = acc[e].failures;
        row.not_invertible = acc[e].not_invertible;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace specprec

#endif  // SPECPREC_METRICS_HPP
