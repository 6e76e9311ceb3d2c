#ifndef SPECPREC_SIMGEN_HPP
#define SPECPREC_SIMGEN_HPP

#include "specprec/types.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

namespace specprec {

/// First-order vector autoregression X_t = Phi X_{t-1} + e_t with Gaussian
/// innovations, e_t ~ N(0, Sigma_e).
struct Var1Model {
    Matrix phi;
    Matrix sigma_e;
    Matrix omega;  // innovation precision when known exactly (empty: invert
                   // sigma_e on demand); keeps truth support free of
                   // inversion round-trip dust
    std::uint64_t seed = 0;
    double spd_repair_delta = 0.0;  // diagonal loading applied to the
                                    // innovation precision, if any

    Eigen::Index p() const { return phi.rows(); }

    double spectral_radius() const {
        return phi.eigenvalues().cwiseAbs().maxCoeff();
    }

    void validate() const {
        if (phi.rows() != phi.cols() || sigma_e.rows() != sigma_e.cols() ||
            phi.rows() != sigma_e.rows()) {
            throw InputError("Var1Model: inconsistent dimensions");
        }
        if (spectral_radius() >= 1.0) {
            throw NumericalError("Var1Model: spectral radius >= 1, not stationary");
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(sigma_e);
        if (es.eigenvalues().minCoeff() <= 0.0) {
            throw NumericalError("Var1Model: innovation covariance not positive definite");
        }
    }
};

/// Gaussian white noise: Phi = 0, Sigma_e = I; flat unit spectrum.
inline Var1Model make_wn(Eigen::Index p, std::uint64_t seed) {
    if (p < 1) throw InputError("make_wn: need p >= 1");
    Var1Model m;
    m.phi = Matrix::Zero(p, p);
    m.sigma_e = Matrix::Identity(p, p);
    m.seed = seed;
    return m;
}

/// Banded VAR(1): diagonal 0.5, first superdiagonal -0.3, second 0.2,
/// truncated at the matrix edge; identity innovation covariance.
inline Var1Model make_banded_var1(Eigen::Index p, std::uint64_t seed = 0) {
    if (p < 3) throw InputError("make_banded_var1: need p >= 3");
    Var1Model m;
    m.phi = Matrix::Zero(p, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        m.phi(j, j) = 0.5;
        if (j + 1 < p) m.phi(j, j + 1) = -0.3;
        if (j + 2 < p) m.phi(j, j + 2) = 0.2;
    }
    m.sigma_e = Matrix::Identity(p, p);
    m.seed = seed;
    m.validate();
    return m;
}

/// Sparse VAR(1): diagonal Phi with |phi_ii| uniform on (0.25, 0.75) and a
/// random sign; innovation precision Omega with unit diagonal and
/// off-diagonals 0 or 0.5 with probability 1/2, diagonally loaded to keep
/// its smallest eigenvalue at or above 0.05 (loading preserves the support
/// pattern the metrics score against).
inline Var1Model make_sparse_var1(Eigen::Index p, std::uint64_t seed) {
    if (p < 2) throw InputError("make_sparse_var1: need p >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.25, 0.75);
    std::bernoulli_distribution flip(0.5);

    Var1Model m;
    m.phi = Matrix::Zero(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        m.phi(i, i) = (flip(rng) ? -1.0 : 1.0) * mag(rng);
    }

    Matrix omega = Matrix::Identity(p, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        for (Eigen::Index k = j + 1; k < p; ++k) {
            if (flip(rng)) {
                omega(j, k) = 0.5;
                omega(k, j) = 0.5;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(omega);
    double lmin = es.eigenvalues().minCoeff();
    double delta = std::max(0.0, 0.05 - lmin);
    if (delta > 0.0) omega += delta * Matrix::Identity(p, p);
    m.spd_repair_delta = delta;
    m.omega = omega;
    m.sigma_e = omega.llt().solve(Matrix::Identity(p, p));
    m.sigma_e = 0.5 * (m.sigma_e + m.sigma_e.transpose().eval());
    m.seed = seed;
    m.validate();
    return m;
}

/// Simulate n observations after discarding burn_in draws. Deterministic
/// given the model seed.
inline TimeSeriesMatrix simulate(const Var1Model& model, Eigen::Index n,
                                 Eigen::Index burn_in = 1000) {
    model.validate();
    if (n < 2) throw InputError("simulate: need n >= 2");
    const Eigen::Index p = model.p();
    std::mt19937_64 rng(model.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix chol = model.sigma_e.llt().matrixL();

    Vector state = Vector::Zero(p);
    Vector z(p);
    TimeSeriesMatrix ts;
    ts.values.resize(n, p);
    ts.names = TimeSeriesMatrix::default_names(p);
    for (Eigen::Index t = 0; t < burn_in + n; ++t) {
        for (Eigen::Index i = 0; i < p; ++i) z(i) = gauss(rng);
        state = model.phi * state + chol * z;
        if (t >= burn_in) ts.values.row(t - burn_in) = state.transpose();
    }
    return ts;
}

/// Analytic spectral density and precision of the model at every grid
/// frequency: f(w) = A(w)^{-1} Sigma_e A(w)^{-*} and
/// Theta(w) = A(w)^* Sigma_e^{-1} A(w), with A(w) = I - Phi e^{-i 2 pi w}.
inline std::pair<SpectralEstimate, PrecisionEstimate> true_spectrum(
    const Var1Model& model, const FrequencyGrid& grid) {
    model.validate();
    const Eigen::Index p = model.p();
    Matrix omega = model.omega;
    if (omega.size() == 0) {
        omega = model.sigma_e.llt().solve(Matrix::Identity(p, p));
        omega = 0.5 * (omega + omega.transpose().eval());
    }

    SpectralEstimate f;
    f.grid = grid;
    f.kind = SpectralKind::Smoothed;
    f.span = 0;
    PrecisionEstimate theta;
    theta.grid = grid;
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t pos = 0; pos < grid.indices.size(); ++pos) {
        double w = grid.frequency_at(pos);
        Complex z = std::exp(Complex(0.0, -two_pi * w));
        ComplexMatrix A = ComplexMatrix::Identity(p, p) - z * model.phi;
        ComplexMatrix th = A.adjoint() * omega.cast<Complex>() * A;
        ComplexMatrix fm = th.fullPivLu().solve(ComplexMatrix::Identity(p, p));
        f.matrices.push_back(SpectralEstimate::hermitize(fm));
        theta.solved_indices.push_back(grid.index_at(pos));
        theta.matrices.push_back(SpectralEstimate::hermitize(th));
        theta.lambdas.push_back(0.0);
    }
    return {std::move(f), std::move(theta)};
}

}  // namespace specprec

#endif  // SPECPREC_SIMGEN_HPP
