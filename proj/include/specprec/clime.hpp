#ifndef SPECPREC_CLIME_HPP
#define SPECPREC_CLIME_HPP

#include "specprec/embedding.hpp"
#include "specprec/lp.hpp"
#include "specprec/spectral.hpp"
#include "specprec/types.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace specprec {

struct ColumnSolve {
    Eigen::Index column = 0;
    Vector beta;
    double objective = std::numeric_limits<double>::quiet_NaN();
    double residual = std::numeric_limits<double>::quiet_NaN();
    SolveStatus status = SolveStatus::IterationLimit;
    long iterations = 0;
};

/// One column of the constrained l1 estimator:
///   minimize ||beta||_1  subject to  ||S beta - e_k||_inf <= lambda,
/// solved as an LP on the split beta = u - v with slack variables
///   S(u - v) + s1 = e_k + lambda,  -S(u - v) + s2 = lambda - e_k.
inline ColumnSolve clime_column(const Matrix& S, Eigen::Index k, double lambda,
                                long max_iter = 200000) {
    const Eigen::Index m = S.rows();
    if (S.cols() != m) throw InputError("clime_column: S must be square");
    if (k < 0 || k >= m) throw InputError("clime_column: column index out of range");
    if (lambda < 0.0) throw InputError("clime_column: lambda must be nonnegative");
    if (!S.allFinite()) throw InputError("clime_column: S has non-finite entries");

    Matrix A = Matrix::Zero(2 * m, 4 * m);
    A.topLeftCorner(m, m) = S;
    A.block(0, m, m, m) = -S;
    A.block(0, 2 * m, m, m) = Matrix::Identity(m, m);
    A.bottomLeftCorner(m, m) = -S;
    A.block(m, m, m, m) = S;
    A.block(m, 3 * m, m, m) = Matrix::Identity(m, m);

    Vector b = Vector::Constant(2 * m, lambda);
    b(k) += 1.0;
    b(m + k) -= 1.0;

    Vector c = Vector::Zero(4 * m);
    c.head(2 * m).setOnes();

    LpResult lp = SimplexSolver(max_iter).solve(A, b, c);

    ColumnSolve out;
    out.column = k;
    out.iterations = lp.iterations;
    switch (lp.status) {
        case LpStatus::Optimal: out.status = SolveStatus::Optimal; break;
        case LpStatus::Infeasible: out.status = SolveStatus::Infeasible; break;
        default: out.status = SolveStatus::IterationLimit; break;
    }
    if (lp.status == LpStatus::Optimal) {
        out.beta = lp.x.head(m) - lp.x.segment(m, m);
        // Snap split-variable dust to exact zero; LP vertices are sparse.
        for (Eigen::Index i = 0; i < m; ++i) {
            if (std::abs(out.beta(i)) < 1e-12) out.beta(i) = 0.0;
        }
        out.objective = out.beta.cwiseAbs().sum();
        Vector r = S * out.beta;
        r(k) -= 1.0;
        out.residual = r.cwiseAbs().maxCoeff();
    }
    return out;
}

struct ClimeMatrixResult {
    Matrix theta;  // column-stacked solutions, pre-symmetrization
    std::vector<ColumnSolve> columns;
    bool all_optimal = true;
};

inline ClimeMatrixResult clime_matrix(const Matrix& S, double lambda,
                                      long max_iter = 200000) {
    const Eigen::Index m = S.rows();
    ClimeMatrixResult out;
    out.theta = Matrix::Zero(m, m);
    out.columns.reserve(static_cast<std::size_t>(m));
    for (Eigen::Index k = 0; k < m; ++k) {
        ColumnSolve cs = clime_column(S, k, lambda, max_iter);
        if (cs.status != SolveStatus::Optimal) {
            out.all_optimal = false;
        } else {
            out.theta.col(k) = cs.beta;
        }
        out.columns.push_back(std::move(cs));
    }
    return out;
}

/// Smaller-magnitude symmetrization: each (k, l) pair keeps whichever of
/// theta_kl, theta_lk has the smaller modulus; ties keep theta_kl.
inline Matrix symmetrize(const Matrix& theta) {
    if (theta.rows() != theta.cols()) {
        throw InputError("symmetrize: matrix must be square");
    }
    Matrix out = theta;
    const Eigen::Index m = theta.rows();
    for (Eigen::Index k = 0; k < m; ++k) {
        for (Eigen::Index l = k + 1; l < m; ++l) {
            double a = theta(k, l);
            double bb = theta(l, k);
            double v = std::abs(a) <= std::abs(bb) ? a : bb;
            out(k, l) = v;
            out(l, k) = v;
        }
    }
    return out;
}

/// Theory-rate lambda: c * (M/n + n^delta / M^(1/2 + delta)).
inline double theory_rate_lambda(double c, double delta, long M, Eigen::Index n) {
    if (M <= 0) throw InputError("theory_rate_lambda: need M >= 1");
    double Md = static_cast<double>(M);
    double nd = static_cast<double>(n);
    return c * (Md / nd + std::pow(nd, delta) / std::pow(Md, 0.5 + delta));
}

/// Solve one frequency: embed -> per-column LP -> symmetrize -> reassemble.
/// Returns the Hermitian complex estimate; diagnostics carry per-column
/// status and residuals.
inline ComplexMatrix clime_frequency(const Matrix& sigma, double lambda,
                                     FrequencyDiagnostics& diag,
                                     long max_iter = 200000) {
    ClimeMatrixResult r = clime_matrix(sigma, lambda, max_iter);
    diag.column_status.clear();
    diag.column_residual.clear();
    for (const ColumnSolve& cs : r.columns) {
        diag.column_status.push_back(cs.status);
        diag.column_residual.push_back(cs.residual);
    }
    if (!r.all_optimal) {
        diag.failed = true;
        diag.message = "non-optimal column solve";
    }
    Matrix sym = symmetrize(r.theta);
    return SpectralEstimate::hermitize(reassemble(sym));
}

/// Frequency indices solved under a stride: every index divisible by the
/// stride (index 0 always included).
inline std::vector<long> strided_indices(const FrequencyGrid& grid, long stride) {
    if (stride < 1) throw InputError("strided_indices: stride must be >= 1");
    std::vector<long> out;
    for (long j = grid.min_index(); j <= grid.max_index(); ++j) {
        if (j % stride == 0) out.push_back(j);
    }
    return out;
}

/// End-to-end sparse inverse estimation at a fixed lambda:
/// dft -> periodogram -> smooth -> per-frequency embed + constrained-l1
/// solve -> symmetrize -> reassemble. Frequencies are independent; a failed
/// frequency is recorded and skipped, the rest are returned.
inline PrecisionEstimate sipe(const TimeSeriesMatrix& ts, long span,
                              double lambda, long freq_stride = 1) {
    if (!ts.centered) throw InputError("sipe: input must be centered");
    SpectralEstimate per = periodogram(ts);
    SpectralEstimate sm = smooth(per, span);

    PrecisionEstimate out;
    out.grid = sm.grid;
    for (long j : strided_indices(sm.grid, freq_stride)) {
        FrequencyDiagnostics diag;
        diag.index = j;
        try {
            Matrix sigma = embed(sm.at_index(j));
            ComplexMatrix theta = clime_frequency(sigma, lambda, diag);
            if (!diag.failed) {
                out.solved_indices.push_back(j);
                out.matrices.push_back(std::move(theta));
                out.lambdas.push_back(lambda);
            }
        } catch (const std::exception& e) {
            diag.failed = true;
            diag.message = e.what();
        }
        out.diagnostics.push_back(std::move(diag));
    }
    return out;
}

struct LambdaSelection {
    double lambda = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> scores;        // per grid value; NaN when unscorable
    std::vector<std::string> failures; // per grid value; empty when scored
    bool fallback = false;
};

namespace detail {

/// Whittle fit of a fitted precision block against a holdout second-moment
/// block: trace(S_holdout Theta) - logdet(Theta). Requires Theta positive
/// definite; returns nullopt otherwise.
inline std::optional<double> whittle_score(const Matrix& holdout,
                                           const Matrix& theta) {
    Eigen::LLT<Matrix> llt(theta);
    if (llt.info() != Eigen::Success) return std::nullopt;
    double logdet = 0.0;
    Matrix L = llt.matrixL();
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
        if (!(L(i, i) > 0.0)) return std::nullopt;
        logdet += 2.0 * std::log(L(i, i));
    }
    return holdout.cwiseProduct(theta).sum() - logdet;
}

}  // namespace detail

/// Two-fold time-block cross-validation for lambda: the series is split
/// into halves, each half's smoothed-periodogram embedding is fit at the
/// evaluation frequencies and scored against the other half's embedding
/// with the Whittle criterion. Only lambdas whose fitted blocks are
/// positive definite at every evaluated frequency qualify; if none do,
/// falls back to the smallest lambda with at least one positive definite
/// block.
inline LambdaSelection select_lambda_cv(const TimeSeriesMatrix& ts, long span,
                                        const std::vector<double>& grid,
                                        long eval_stride = 1) {
    if (grid.empty()) throw InputError("select_lambda_cv: empty lambda grid");
    if (!ts.centered) throw InputError("select_lambda_cv: input must be centered");
    const Eigen::Index n = ts.n();
    const Eigen::Index half = n / 2;
    if (half < 4) throw InputError("select_lambda_cv: series too short to split");

    TimeSeriesMatrix first{ts.values.topRows(half), ts.names, false, false};
    TimeSeriesMatrix second{ts.values.bottomRows(half), ts.names, false, false};
    std::array<TimeSeriesMatrix, 2> folds = {
        center_standardize(first, false), center_standardize(second, false)};

    long fold_span = std::min<long>(span, (half - 1) / 2);
    fold_span = std::max<long>(fold_span, 0);

    std::array<RealEmbedding, 2> embs;
    for (int f = 0; f < 2; ++f) {
        embs[static_cast<std::size_t>(f)] =
            embed(smooth(periodogram(folds[static_cast<std::size_t>(f)]), fold_span));
    }
    std::vector<long> eval = strided_indices(embs[0].grid, eval_stride);

    LambdaSelection sel;
    sel.scores.assign(grid.size(), std::numeric_limits<double>::quiet_NaN());
    sel.failures.assign(grid.size(), "");

    std::vector<double> pd_fraction(grid.size(), 0.0);
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        double lambda = grid[gi];
        double score = 0.0;
        long scored = 0;
        long pd_count = 0;
        long total = 0;
        bool all_pd = true;
        for (int train = 0; train < 2; ++train) {
            const RealEmbedding& tr = embs[static_cast<std::size_t>(train)];
            const RealEmbedding& ho = embs[static_cast<std::size_t>(1 - train)];
            for (long j : eval) {
                ++total;
                FrequencyDiagnostics diag;
                Matrix theta;
                try {
                    ClimeMatrixResult r = clime_matrix(tr.at_index(j), lambda);
                    if (!r.all_optimal) { all_pd = false; continue; }
                    theta = symmetrize(r.theta);
                } catch (const std::exception&) {
                    all_pd = false;
                    continue;
                }
                std::optional<double> s = detail::whittle_score(ho.at_index(j), theta);
                if (!s) { all_pd = false; continue; }
                ++pd_count;
                score += *s;
                ++scored;
            }
        }
        pd_fraction[gi] = total > 0 ? static_cast<double>(pd_count) /
                                          static_cast<double>(total)
                                    : 0.0;
        if (all_pd && scored > 0) {
            sel.scores[gi] = score / static_cast<double>(scored);
        } else {
            sel.failures[gi] = "positive-definite at " + std::to_string(pd_count) +
                               "/" + std::to_string(total) + " frequencies";
        }
    }

    std::size_t best = grid.size();
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        if (std::isnan(sel.scores[gi])) continue;
        if (best == grid.size() || sel.scores[gi] < sel.scores[best]) best = gi;
    }
    if (best < grid.size()) {
        sel.lambda = grid[best];
        return sel;
    }

    // Fallback: smallest lambda with any positive definite block.
    std::size_t fb = grid.size();
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        if (pd_fraction[gi] > 0.0 && (fb == grid.size() || grid[gi] < grid[fb])) {
            fb = gi;
        }
    }
    if (fb < grid.size()) {
        sel.lambda = grid[fb];
        sel.fallback = true;
        return sel;
    }

    std::string msg = "select_lambda_cv: no valid lambda;";
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        msg += " lambda=" + std::to_string(grid[gi]) + ": " + sel.failures[gi] + ";";
    }
    throw NumericalError(msg);
}

/// Default lambda grid, geometric between lo and hi.
inline std::vector<double> default_lambda_grid(double lo = 0.02, double hi = 0.6,
                                               int steps = 8) {
    if (!(lo > 0.0) || !(hi > lo) || steps < 1) {
        throw InputError("default_lambda_grid: need 0 < lo < hi, steps >= 1");
    }
    std::vector<double> out;
    if (steps == 1) return {lo};
    double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(steps - 1));
    double v = lo;
    for (int i = 0; i < steps; ++i) {
        out.push_back(v);
        v *= ratio;
    }
    return out;
}

}  // namespace specprec

#endif  // SPECPREC_CLIME_HPP
