#ifndef SPECPREC_ANALYSIS_HPP
#define SPECPREC_ANALYSIS_HPP

#include "specprec/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace specprec {

struct CoherenceMatrices {
    std::vector<long> indices;
    std::vector<double> frequencies;
    std::vector<Matrix> matrices;  // symmetric p x p, entries in [0, 1]
};

/// Partial coherence rho_jk(w) = |Theta_jk(w)|^2 / (Theta_jj(w) Theta_kk(w)),
/// one matrix per solved frequency. Diagonals are reported as 1 by
/// convention. Values must land in [0, 1] up to round-off (guaranteed for a
/// positive definite Hermitian input); larger violations indicate an invalid
/// precision input and throw.
inline CoherenceMatrices partial_coherence(const PrecisionEstimate& theta) {
    CoherenceMatrices out;
    const Eigen::Index p = theta.p();
    for (std::size_t i = 0; i < theta.solved_indices.size(); ++i) {
        long j = theta.solved_indices[i];
        const ComplexMatrix& t = theta.matrices[i];
        Matrix rho = Matrix::Ones(p, p);
        for (Eigen::Index a = 0; a < p; ++a) {
            double da = t(a, a).real();
            if (!(da > 0.0)) {
                throw NumericalError(
                    "partial_coherence: nonpositive diagonal at dimension " +
                    std::to_string(a + 1) + ", frequency index " + std::to_string(j));
            }
        }
        for (Eigen::Index a = 0; a < p; ++a) {
            for (Eigen::Index b = a + 1; b < p; ++b) {
                double v = std::norm(t(a, b)) / (t(a, a).real() * t(b, b).real());
                if (v > 1.0 + 1e-9) {
                    throw NumericalError(
                        "partial_coherence: value " + std::to_string(v) +
                        " outside [0, 1] at pair (" + std::to_string(a + 1) + ", " +
                        std::to_string(b + 1) + "), frequency index " +
                        std::to_string(j));
                }
                v = std::clamp(v, 0.0, 1.0);
                rho(a, b) = v;
                rho(b, a) = v;
            }
        }
        out.indices.push_back(j);
        out.frequencies.push_back(
            theta.grid.frequency_at(theta.grid.position(j)));
        out.matrices.push_back(std::move(rho));
    }
    return out;
}

/// Entrywise median over the frequencies with a < w < b.
inline Matrix band_summary(const CoherenceMatrices& rho, double a, double b) {
    if (!(a >= 0.0 && a < b && b <= 0.5)) {
        throw InputError("band_summary: need 0 <= a < b <= 0.5");
    }
    std::vector<std::size_t> in_band;
    for (std::size_t i = 0; i < rho.frequencies.size(); ++i) {
        double w = rho.frequencies[i];
        if (w > a && w < b) in_band.push_back(i);
    }
    if (in_band.empty()) {
        double smallest = 1.0;
        for (double w : rho.frequencies) {
            if (w > a) smallest = std::min(smallest, w);
        }
        throw InputError("band_summary: no frequencies in (" + std::to_string(a) +
                         ", " + std::to_string(b) + "); smallest valid b is just above " +
                         std::to_string(smallest));
    }
    const Eigen::Index p = rho.matrices.front().rows();
    Matrix out(p, p);
    std::vector<double> vals(in_band.size());
    for (Eigen::Index r = 0; r < p; ++r) {
        for (Eigen::Index c = 0; c < p; ++c) {
            for (std::size_t i = 0; i < in_band.size(); ++i) {
                vals[i] = rho.matrices[in_band[i]](r, c);
            }
            std::sort(vals.begin(), vals.end());
            std::size_t m = vals.size();
            out(r, c) = m % 2 == 1 ? vals[m / 2]
                                   : 0.5 * (vals[m / 2 - 1] + vals[m / 2]);
        }
    }
    return out;
}

struct PowerSpectrumRow {
    Eigen::Index dimension;  // 1-based
    double frequency;
    double power;
};

/// Diagonal spectra over the frequencies in (0, 0.5), long format.
inline std::vector<PowerSpectrumRow> power_spectra(const SpectralEstimate& f) {
    std::vector<PowerSpectrumRow> rows;
    const Eigen::Index p = f.p();
    for (std::size_t pos = 0; pos < f.matrices.size(); ++pos) {
        double w = f.grid.frequency_at(pos);
        if (!(w > 0.0 && w < 0.5)) continue;
        for (Eigen::Index i = 0; i < p; ++i) {
            rows.push_back({i + 1, w, f.matrices[pos](i, i).real()});
        }
    }
    return rows;
}

/// Fraction of off-diagonal pairs (j < k) with |entry| <= tau.
inline double sparsity_fraction(const Matrix& summary, double tau = 1e-8) {
    if (summary.rows() != summary.cols() || summary.rows() < 2) {
        throw InputError("sparsity_fraction: need a square matrix with p >= 2");
    }
    const Eigen::Index p = summary.rows();
    long zeros = 0;
    for (Eigen::Index j = 0; j < p; ++j) {
        for (Eigen::Index k = j + 1; k < p; ++k) {
            if (std::abs(summary(j, k)) <= tau) ++zeros;
        }
    }
    return static_cast<double>(zeros) /
           (static_cast<double>(p) * static_cast<double>(p - 1) / 2.0);
}

}  // namespace specprec

#endif  // SPECPREC_ANALYSIS_HPP
