#ifndef SPECPREC_LP_HPP
#define SPECPREC_LP_HPP

#include "specprec/types.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace specprec {

enum class LpStatus { Optimal, Infeasible, IterationLimit, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::IterationLimit;
    Vector x;
    double objective = std::numeric_limits<double>::quiet_NaN();
    long iterations = 0;
};

/// Dense two-phase primal simplex for
///   minimize c'x  subject to  A x = b, x >= 0.
/// Entering rule is most-negative reduced cost; after `bland_after_` pivots
/// the solver switches to Bland's rule, which cannot cycle.
class SimplexSolver {
public:
    explicit SimplexSolver(long max_iter = 50000, double tol = 1e-9)
        : max_iter_(max_iter), tol_(tol) {}

    LpResult solve(const Matrix& A, const Vector& b, const Vector& c) const {
        const Eigen::Index m = A.rows();
        const Eigen::Index n = A.cols();
        LpResult res;

        // Tableau: n structural + m artificial columns + rhs.
        Matrix T(m, n + m + 1);
        T.leftCols(n) = A;
        T.middleCols(n, m) = Matrix::Identity(m, m);
        T.col(n + m) = b;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (T(i, n + m) < 0.0) {
                T.row(i) = -T.row(i);
                T(i, n + i) = 1.0;
            }
        }

        std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
        for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

        long iters = 0;
        bool unbounded = false;

        // Phase 1: minimize the artificial sum. Reduced cost of a
        // structural column j is -sum_i T(i, j).
        Vector cost = Vector::Zero(n + m);
        for (Eigen::Index j = 0; j < n; ++j) cost(j) = -T.col(j).head(m).sum();
        if (!iterate(T, basis, cost, iters, n + m, unbounded)) {
            res.status = LpStatus::IterationLimit;
            res.iterations = iters;
            return res;
        }
        double artificial_level = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (basis[static_cast<std::size_t>(i)] >= n) {
                artificial_level += T(i, n + m);
            }
        }
        double scale = 1.0 + b.cwiseAbs().maxCoeff();
        if (artificial_level > 1e-7 * scale) {
            res.status = LpStatus::Infeasible;
            res.iterations = iters;
            return res;
        }

        // Drive zero-level artificials out of the basis where possible.
        for (Eigen::Index i = 0; i < m; ++i) {
            if (basis[static_cast<std::size_t>(i)] < n) continue;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (std::abs(T(i, j)) > tol_) {
                    pivot(T, basis, i, j);
                    break;
                }
            }
            // A row with no structural pivot is redundant; its artificial
            // stays basic at level 0 and is barred from re-entering.
        }

        // Phase 2 reduced costs: c_j - c_B' T(:, j); artificials barred.
        Vector cost2 = Vector::Zero(n + m);
        cost2.head(n) = c;
        for (Eigen::Index i = 0; i < m; ++i) {
            Eigen::Index bi = basis[static_cast<std::size_t>(i)];
            if (bi < n && c(bi) != 0.0) {
                cost2.head(n + m) -= c(bi) * T.row(i).head(n + m).transpose();
            }
        }
        res.iterations = iters;
        if (!iterate(T, basis, cost2, iters, n, unbounded)) {
            res.status = unbounded ? LpStatus::Unbounded : LpStatus::IterationLimit;
            res.iterations = iters;
            return res;
        }

        res.status = LpStatus::Optimal;
        res.iterations = iters;
        res.x = Vector::Zero(n);
        for (Eigen::Index i = 0; i < m; ++i) {
            Eigen::Index bi = basis[static_cast<std::size_t>(i)];
            if (bi < n) res.x(bi) = T(i, n + m);
        }
        res.objective = c.dot(res.x);
        return res;
    }

private:
    long max_iter_;
    double tol_;
    long bland_after_ = 2000;

    void pivot(Matrix& T, std::vector<Eigen::Index>& basis,
               Eigen::Index row, Eigen::Index col) const {
        T.row(row) /= T(row, col);
        for (Eigen::Index i = 0; i < T.rows(); ++i) {
            if (i == row) continue;
            double f = T(i, col);
            if (f != 0.0) T.row(i) -= f * T.row(row);
        }
        basis[static_cast<std::size_t>(row)] = col;
    }

    /// Pivot loop for one phase. `ncols` limits entering candidates
    /// (excludes artificials in phase 2). Returns false on iteration limit
    /// or unboundedness.
    bool iterate(Matrix& T, std::vector<Eigen::Index>& basis, Vector& cost,
                 long& iters, Eigen::Index ncols, bool& unbounded) const {
        const Eigen::Index m = T.rows();
        const Eigen::Index rhs = T.cols() - 1;
        while (true) {
            if (iters >= max_iter_) return false;
            bool bland = iters >= bland_after_;

            Eigen::Index enter = -1;
            double best = -tol_;
            for (Eigen::Index j = 0; j < ncols; ++j) {
                if (cost(j) < best) {
                    enter = j;
                    if (bland) break;
                    best = cost(j);
                }
            }
            if (enter < 0) return true;  // phase optimal

            Eigen::Index leave = -1;
            double best_ratio = 0.0;
            for (Eigen::Index i = 0; i < m; ++i) {
                double a = T(i, enter);
                if (a > tol_) {
                    double ratio = T(i, rhs) / a;
                    if (leave < 0 || ratio < best_ratio - tol_ ||
                        (std::abs(ratio - best_ratio) <= tol_ &&
                         basis[static_cast<std::size_t>(i)] <
                             basis[static_cast<std::size_t>(leave)])) {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (leave < 0) {
                unbounded = true;
                return false;
            }

            double ce = cost(enter);
            pivot(T, basis, leave, enter);
            cost.head(rhs) -= ce * T.row(leave).head(rhs).transpose();
            cost(enter) = 0.0;
            ++iters;
        }
    }
};

}  // namespace specprec

#endif  // SPECPREC_LP_HPP
