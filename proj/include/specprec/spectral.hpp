#ifndef SPECPREC_SPECTRAL_HPP
#define SPECPREC_SPECTRAL_HPP

#include "specprec/types.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace specprec {

/// Finite Fourier transform d(omega_j) = sum_{t=1..n} X_t exp(-i 2 pi omega_j t),
/// returned in grid order. The t index starts at 1, which shifts the FFT
/// output by one sample of phase; that phase cancels in the periodogram but
/// matters for d itself.
inline std::vector<ComplexVector> dft(const TimeSeriesMatrix& ts) {
    ts.validate();
    const Eigen::Index n = ts.n();
    const Eigen::Index p = ts.p();
    FrequencyGrid grid = frequency_grid(n);

    Eigen::FFT<double> fft;
    // fft gives D_k = sum_{t=0..n-1} x_t exp(-i 2 pi k t / n) for k = 0..n-1;
    // with our t = 1..n convention, d(omega_k) = exp(-i 2 pi k / n) * D_k
    // after re-indexing x_{t} = X_{t+1}.
    std::vector<ComplexVector> out(static_cast<std::size_t>(n),
                                   ComplexVector(p));
    std::vector<ComplexVector> per_col(static_cast<std::size_t>(p));
    std::vector<double> buf(static_cast<std::size_t>(n));
    std::vector<Complex> spec(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < p; ++j) {
        for (Eigen::Index t = 0; t < n; ++t) {
            buf[static_cast<std::size_t>(t)] = ts.values(t, j);
        }
        fft.fwd(spec, buf);
        per_col[static_cast<std::size_t>(j)] =
            Eigen::Map<ComplexVector>(spec.data(), n);
    }

    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t pos = 0; pos < static_cast<std::size_t>(n); ++pos) {
        long idx = grid.index_at(pos);
        long k = ((idx % static_cast<long>(n)) + static_cast<long>(n)) %
                 static_cast<long>(n);
        Complex phase = std::exp(Complex(0.0, -two_pi * static_cast<double>(k) /
                                                  static_cast<double>(n)));
        for (Eigen::Index j = 0; j < p; ++j) {
            out[pos](j) = phase * per_col[static_cast<std::size_t>(j)](k);
        }
    }
    return out;
}

/// Raw periodogram P(omega_j) = n^{-1} d(omega_j) d(omega_j)^*.
/// Requires centered input: centering changes the omega = 0 ordinate.
inline SpectralEstimate periodogram(const TimeSeriesMatrix& ts) {
    if (!ts.centered) {
        throw InputError("periodogram: input must be centered");
    }
    std::vector<ComplexVector> d = dft(ts);
    SpectralEstimate est;
    est.grid = frequency_grid(ts.n());
    est.kind = SpectralKind::RawPeriodogram;
    est.span = 0;
    est.matrices.reserve(d.size());
    const double inv_n = 1.0 / static_cast<double>(ts.n());
    for (const ComplexVector& dj : d) {
        est.matrices.push_back(
            SpectralEstimate::hermitize(inv_n * dj * dj.adjoint()));
    }
    return est;
}

/// Daniell smoothing: f(omega_j) = (2M+1)^{-1} sum_{|k| <= M} P(omega_{j+k}),
/// indices wrapped circularly over the n Fourier frequencies.
inline SpectralEstimate smooth(const SpectralEstimate& per, long M) {
    if (per.kind != SpectralKind::RawPeriodogram) {
        throw InputError("smooth: input must be a raw periodogram");
    }
    const Eigen::Index n = per.grid.n;
    if (M < 0 || 2 * M + 1 > n) {
        throw InputError("smooth: span M=" + std::to_string(M) +
                         " needs 0 <= 2M+1 <= n=" + std::to_string(n));
    }
    SpectralEstimate out;
    out.grid = per.grid;
    out.kind = SpectralKind::Smoothed;
    out.span = M;
    out.matrices.resize(per.matrices.size());
    const double w = 1.0 / static_cast<double>(2 * M + 1);
    for (std::size_t pos = 0; pos < per.matrices.size(); ++pos) {
        long j = per.grid.index_at(pos);
        ComplexMatrix acc = ComplexMatrix::Zero(per.p(), per.p());
        for (long k = -M; k <= M; ++k) {
            acc += per.matrices[per.grid.position(j + k)];
        }
        out.matrices[pos] = SpectralEstimate::hermitize(w * acc);
    }
    return out;
}

/// Gamma-deviance GCV score for a candidate span, evaluated on diagonal
/// ordinates at frequencies strictly inside (0, 1/2):
///   GCV(M) = D(M) / (1 - 1/(2M+1))^2,
///   D(M)   = (n' p)^{-1} sum_i sum_j [ r_ij - log r_ij - 1 ],
///   r_ij   = P_ii(omega_j) / f_ii(omega_j).
inline double gcv_score(const SpectralEstimate& per, long M) {
    SpectralEstimate sm = smooth(per, M);
    const Eigen::Index p = per.p();
    double dev = 0.0;
    long n_used = 0;
    for (std::size_t pos = 0; pos < per.matrices.size(); ++pos) {
        double w = per.grid.frequency_at(pos);
        if (!(w > 0.0 && w < 0.5)) continue;
        ++n_used;
        for (Eigen::Index i = 0; i < p; ++i) {
            double raw = per.matrices[pos](i, i).real();
            double smo = sm.matrices[pos](i, i).real();
            if (!(raw > 0.0) || !(smo > 0.0)) {
                throw NumericalError(
                    "gcv_score: nonpositive diagonal ordinate at frequency index " +
                    std::to_string(per.grid.index_at(pos)));
            }
            double r = raw / smo;
            dev += r - std::log(r) - 1.0;
        }
    }
    if (n_used == 0) {
        throw NumericalError("gcv_score: no frequencies in (0, 1/2)");
    }
    dev /= static_cast<double>(n_used) * static_cast<double>(p);
    double shrink = 1.0 - 1.0 / static_cast<double>(2 * M + 1);
    return dev / (shrink * shrink);
}

/// Pick the candidate span minimizing the GCV score; ties go to the
/// smaller span.
inline std::pair<long, std::vector<double>> gcv_select_span(
    const SpectralEstimate& per, const std::vector<long>& candidates) {
    if (candidates.empty()) {
        throw InputError("gcv_select_span: empty candidate list");
    }
    std::vector<double> scores;
    scores.reserve(candidates.size());
    long best = candidates.front();
    double best_score = 0.0;
    bool first = true;
    for (long M : candidates) {
        double s = gcv_score(per, M);
        scores.push_back(s);
        if (first || s < best_score || (s == best_score && M < best)) {
            best = M;
            best_score = s;
            first = false;
        }
    }
    return {best, scores};
}

/// Default span candidates: M with odd window 2M+1 in {3, 5, ...} up to
/// ceil(n^0.8).
inline std::vector<long> default_span_candidates(Eigen::Index n) {
    std::vector<long> out;
    long cap = static_cast<long>(
        std::ceil(std::pow(static_cast<double>(n), 0.8)));
    for (long M = 1; 2 * M + 1 <= std::min<long>(cap, static_cast<long>(n)); ++M) {
        out.push_back(M);
    }
    if (out.empty()) out.push_back(0);
    return out;
}

}  // namespace specprec

#endif  // SPECPREC_SPECTRAL_HPP
