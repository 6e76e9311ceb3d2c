#ifndef SPECPREC_TYPES_HPP
#define SPECPREC_TYPES_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace specprec {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Thrown on malformed or out-of-contract inputs (bad sizes, bad flags,
/// degenerate columns). Maps to CLI exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown on numerical failures (singular matrices, infeasible solves,
/// no valid lambda). Maps to CLI exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Real n x p observation matrix, rows indexed by time.
struct TimeSeriesMatrix {
    Matrix values;                   // n rows (time) x p columns (series)
    std::vector<std::string> names;  // p column labels, defaults V1..Vp
    bool centered = false;
    bool standardized = false;

    Eigen::Index n() const { return values.rows(); }
    Eigen::Index p() const { return values.cols(); }

    void validate() const {
        if (values.rows() < 2) {
            throw InputError("TimeSeriesMatrix: need n >= 2, got n=" +
                             std::to_string(values.rows()));
        }
        if (values.cols() < 1) {
            throw InputError("TimeSeriesMatrix: need p >= 1, got p=" +
                             std::to_string(values.cols()));
        }
        if (!values.allFinite()) {
            throw InputError("TimeSeriesMatrix: non-finite entries");
        }
    }

    static std::vector<std::string> default_names(Eigen::Index p) {
        std::vector<std::string> out;
        out.reserve(static_cast<std::size_t>(p));
        for (Eigen::Index j = 0; j < p; ++j) {
            out.push_back("V" + std::to_string(j + 1));
        }
        return out;
    }
};

/// The n Fourier frequencies omega_j = j/n, j = -floor((n-1)/2) .. floor(n/2).
/// Stored in increasing index order; position 0 holds the most negative index.
struct FrequencyGrid {
    Eigen::Index n = 0;
    std::vector<long> indices;
    std::vector<double> frequencies;

    long min_index() const { return -static_cast<long>((n - 1) / 2); }
    long max_index() const { return static_cast<long>(n / 2); }

    /// Position in the storage order of a (possibly unwrapped) index.
    /// Indices wrap circularly with period n.
    std::size_t position(long index) const {
        long lo = min_index();
        long shifted = index - lo;
        long wrapped = ((shifted % static_cast<long>(n)) + static_cast<long>(n)) %
                       static_cast<long>(n);
        return static_cast<std::size_t>(wrapped);
    }

    long index_at(std::size_t pos) const { return indices[pos]; }
    double frequency_at(std::size_t pos) const { return frequencies[pos]; }

    bool operator==(const FrequencyGrid& other) const { return n == other.n; }
    bool operator!=(const FrequencyGrid& other) const { return n != other.n; }
};

inline FrequencyGrid frequency_grid(Eigen::Index n) {
    if (n < 2) {
        throw InputError("frequency_grid: need n >= 2, got n=" + std::to_string(n));
    }
    FrequencyGrid g;
    g.n = n;
    long lo = -static_cast<long>((n - 1) / 2);
    long hi = static_cast<long>(n / 2);
    g.indices.reserve(static_cast<std::size_t>(n));
    g.frequencies.reserve(static_cast<std::size_t>(n));
    for (long j = lo; j <= hi; ++j) {
        g.indices.push_back(j);
        g.frequencies.push_back(static_cast<double>(j) / static_cast<double>(n));
    }
    return g;
}

enum class SpectralKind { RawPeriodogram, Smoothed };

/// Per-frequency complex Hermitian p x p matrices.
/// Matrices are stored in grid order and symmetrized (F + F*)/2 on insertion,
/// since DFT round-off otherwise violates downstream embedding symmetry.
struct SpectralEstimate {
    FrequencyGrid grid;
    std::vector<ComplexMatrix> matrices;  // one per grid position
    SpectralKind kind = SpectralKind::RawPeriodogram;
    long span = 0;  // smoothing half-width M, 0 for raw

    Eigen::Index p() const {
        return matrices.empty() ? 0 : matrices.front().rows();
    }

    const ComplexMatrix& at_index(long j) const {
        return matrices[grid.position(j)];
    }

    static ComplexMatrix hermitize(const ComplexMatrix& f) {
        return 0.5 * (f + f.adjoint());
    }
};

/// Per-frequency real symmetric 2p x 2p block matrices
/// [[Re f, Im f], [-Im f, Re f]].
struct RealEmbedding {
    FrequencyGrid grid;
    std::vector<Matrix> blocks;

    const Matrix& at_index(long j) const { return blocks[grid.position(j)]; }
};

enum class SolveStatus { Optimal, Infeasible, IterationLimit };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::IterationLimit: return "iteration-limit";
    }
    return "unknown";
}

/// Per-frequency solve diagnostics: one record per embedding column.
struct FrequencyDiagnostics {
    long index = 0;
    std::vector<SolveStatus> column_status;
    std::vector<double> column_residual;  // ||Sigma beta - e_k||_inf
    bool failed = false;
    std::string message;
};

/// Per-frequency complex p x p sparse inverse estimates. Only frequencies
/// actually solved are present (estimation may subsample the grid).
struct PrecisionEstimate {
    FrequencyGrid grid;
    std::vector<long> solved_indices;      // sorted ascending
    std::vector<ComplexMatrix> matrices;   // parallel to solved_indices
    std::vector<double> lambdas;           // lambda used per solved frequency
    std::vector<FrequencyDiagnostics> diagnostics;

    Eigen::Index p() const {
        return matrices.empty() ? 0 : matrices.front().rows();
    }

    bool has_index(long j) const {
        return std::find(solved_indices.begin(), solved_indices.end(), j) !=
               solved_indices.end();
    }

    const ComplexMatrix& at_index(long j) const {
        for (std::size_t i = 0; i < solved_indices.size(); ++i) {
            if (solved_indices[i] == j) return matrices[i];
        }
        throw InputError("PrecisionEstimate: index " + std::to_string(j) +
                         " was not solved");
    }
};

/// Row-ellq and ell1 budgets of the sparsity class; used by rate-check tests.
struct SparsityClassParams {
    double q = 0.0;
    double c_np = 1.0;
    double M_np = 1.0;

    void validate() const {
        if (!(q >= 0.0 && q < 1.0)) {
            throw InputError("SparsityClassParams: need 0 <= q < 1");
        }
        if (!(c_np > 0.0) || !std::isfinite(c_np) ||
            !(M_np > 0.0) || !std::isfinite(M_np)) {
            throw InputError("SparsityClassParams: budgets must be finite and positive");
        }
    }
};

/// Subtract column means; optionally rescale to unit sample variance
/// (divisor n-1). Idempotent.
inline TimeSeriesMatrix center_standardize(const TimeSeriesMatrix& ts,
                                           bool standardize) {
    ts.validate();
    TimeSeriesMatrix out = ts;
    const Eigen::Index n = ts.n();
    for (Eigen::Index j = 0; j < ts.p(); ++j) {
        double mean = ts.values.col(j).mean();
        out.values.col(j).array() -= mean;
        if (standardize) {
            double var = out.values.col(j).squaredNorm() /
                         static_cast<double>(n - 1);
            if (var <= 0.0) {
                std::string name = j < static_cast<Eigen::Index>(ts.names.size())
                                       ? ts.names[static_cast<std::size_t>(j)]
                                       : "column " + std::to_string(j + 1);
                throw InputError("center_standardize: constant column '" + name +
                                 "' cannot be standardized");
            }
            out.values.col(j) /= std::sqrt(var);
        }
    }
    out.centered = true;
    out.standardized = standardize || ts.standardized;
    return out;
}

}  // namespace specprec

#endif  // SPECPREC_TYPES_HPP
