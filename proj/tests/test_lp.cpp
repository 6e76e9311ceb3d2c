#include <doctest.h>

#include "specprec/lp.hpp"

#include <random>

using namespace specprec;

TEST_CASE("one-constraint split") {
    // min x1 + 2 x2  s.t.  x1 + x2 = 1, x >= 0  ->  x = (1, 0)
    Matrix A(1, 2);
    A << 1, 1;
    Vector b(1);
    b << 1;
    Vector c(2);
    c << 1, 2;
    LpResult r = SimplexSolver().solve(A, b, c);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.x(0) == doctest::Approx(1.0));
    CHECK(r.x(1) == doctest::Approx(0.0));
}

TEST_CASE("negative rhs rows are handled") {
    // x1 - x2 = -2, x1 + x2 = 4  ->  x = (1, 3); min x1 -> 1
    Matrix A(2, 2);
    A << 1, -1, 1, 1;
    Vector b(2);
    b << -2, 4;
    Vector c(2);
    c << 1, 0;
    LpResult r = SimplexSolver().solve(A, b, c);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.x(0) == doctest::Approx(1.0));
    CHECK(r.x(1) == doctest::Approx(3.0));
}

TEST_CASE("infeasible system is reported") {
    // x1 = 1 and x1 = 2 cannot both hold
    Matrix A(2, 1);
    A << 1, 1;
    Vector b(2);
    b << 1, 2;
    Vector c(1);
    c << 1;
    CHECK(SimplexSolver().solve(A, b, c).status == LpStatus::Infeasible);
}

TEST_CASE("redundant rows do not break phase one") {
    Matrix A(2, 2);
    A << 1, 1, 2, 2;
    Vector b(2);
    b << 1, 2;
    Vector c(2);
    c << 3, 1;
    LpResult r = SimplexSolver().solve(A, b, c);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(1.0));
}

TEST_CASE("unbounded problem is flagged") {
    // min -x1 s.t. x1 - x2 = 0: x1 = x2 can grow without bound
    Matrix A(1, 2);
    A << 1, -1;
    Vector b(1);
    b << 0;
    Vector c(2);
    c << -1, 0;
    CHECK(SimplexSolver().solve(A, b, c).status == LpStatus::Unbounded);
}

TEST_CASE("box problems hit the analytic optimum") {
    // min c'x s.t. x + s = u with x, s >= 0: x_i = u_i when c_i < 0, else 0.
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> uu(0.5, 2.0);
    std::normal_distribution<double> g;
    for (int rep = 0; rep < 20; ++rep) {
        const Eigen::Index m = 6;
        Vector u(m), cx(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            u(i) = uu(rng);
            cx(i) = g(rng);
        }
        Matrix A(m, 2 * m);
        A.leftCols(m) = Matrix::Identity(m, m);
        A.rightCols(m) = Matrix::Identity(m, m);
        Vector c = Vector::Zero(2 * m);
        c.head(m) = cx;
        LpResult r = SimplexSolver().solve(A, u, c);
        REQUIRE(r.status == LpStatus::Optimal);
        double expect = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (cx(i) < 0.0) expect += cx(i) * u(i);
        }
        CHECK(r.objective == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("solution satisfies the constraints") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (int rep = 0; rep < 20; ++rep) {
        const Eigen::Index m = 4, n = 9;
        Matrix A(m, n);
        for (Eigen::Index i = 0; i < A.size(); ++i) A.data()[i] = g(rng);
        // Feasible by construction: b = A x0 with x0 >= 0.
        Vector x0 = Vector::Zero(n);
        for (Eigen::Index i = 0; i < n; ++i) x0(i) = std::abs(g(rng));
        Vector b = A * x0;
        Vector c = Vector::Ones(n);
        LpResult r = SimplexSolver().solve(A, b, c);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK((A * r.x - b).cwiseAbs().maxCoeff() < 1e-8);
        CHECK(r.x.minCoeff() >= -1e-10);
        CHECK(r.objective <= x0.sum() + 1e-9);  // x0 is feasible
    }
}
