#include <cmath>
#include <numbers>

#include <doctest.h>

#include "fock_space.hpp"
#include "tctp/dynamics.hpp"
#include "tctp/kernels.hpp"
#include "tctp/oracle.hpp"

using namespace tctp;

namespace {

std::vector<double> grid_200() {
    std::vector<double> g(200);
    for (int i = 0; i < 200; ++i)
        g[i] = 25.0 * i / 199.0;
    return g;
}

} // namespace

TEST_CASE("lambda_theta closed form matches the truncated-space operator") {
    // brute force: diagonal of 2(a1 a2 a1+ a2+ + a1+ a2+ a1 a2), cutoff 4
    const testsupport::TruncatedSpace space(4);
    const Eigen::MatrixXd kernel = space.pair_number_kernel();
    for (int n = 0; n <= 3; ++n) {
        const int diag = n * space.fock_dim() + n;
        const auto [lambda, theta] = lambda_theta(FockPair(n, n), 0.0);
        CHECK(lambda == doctest::Approx(kernel(diag, diag)).epsilon(1e-14));
        CHECK(theta == doctest::Approx(std::sqrt(4.0 * kernel(diag, diag))).epsilon(1e-14));
    }

    const auto [l0, t0] = lambda_theta(FockPair(0, 0), 0.0);
    CHECK(l0 == 2.0);
    CHECK(t0 == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));

    const auto [l1, t1] = lambda_theta(FockPair(1, 1), 0.0);
    CHECK(l1 == 10.0);
    CHECK(t1 == doctest::Approx(std::sqrt(40.0)).epsilon(1e-15));

    const auto [l06, t06] = lambda_theta(FockPair(0, 0), 6.0);
    CHECK(l06 == 2.0);
    CHECK(t06 == doctest::Approx(std::sqrt(44.0)).epsilon(1e-15));
}

TEST_CASE("lambda_theta rejects unequal occupations and negative alpha") {
    CHECK_THROWS_AS(lambda_theta(FockPair(1, 2), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lambda_theta(FockPair(0, 0), -1.0), std::invalid_argument);
}

TEST_CASE("theta grows with alpha and with n") {
    for (int n = 0; n < 5; ++n) {
        double prev = lambda_theta(FockPair(n, n), 0.0).second;
        for (double alpha : {0.5, 1.0, 2.0, 6.0, 11.0}) {
            const double theta = lambda_theta(FockPair(n, n), alpha).second;
            CHECK(theta > prev);
            prev = theta;
        }
    }
    for (double alpha : {0.0, 1.0, 6.0}) {
        double prev = lambda_theta(FockPair(0, 0), alpha).second;
        for (int n = 1; n < 6; ++n) {
            const double theta = lambda_theta(FockPair(n, n), alpha).second;
            CHECK(theta > prev);
            prev = theta;
        }
    }
}

TEST_CASE("kernel_a and kernel_b vanish at gt = 0") {
    for (int n : {0, 1, 4}) {
        for (double alpha : {0.0, 1.0, 6.0}) {
            const ModelParams p(alpha, 0.0);
            CHECK(kernel_a(FockPair(n, n), p) == cplx(0.0, 0.0));
            CHECK(kernel_b(FockPair(n, n), p) == cplx(0.0, 0.0));
            const ScalarKernels k = scalar_kernels(FockPair(n, n), p);
            CHECK(k.a == cplx(0.0, 0.0));
            CHECK(k.b == cplx(0.0, 0.0));
        }
    }
}

TEST_CASE("kernel_a quarter-period value at alpha = 0") {
    // theta = 2 sqrt(2), so gt = pi/(2 sqrt(2)) puts the cosine at zero
    const double gt = std::numbers::pi / (2.0 * std::sqrt(2.0));
    const cplx a = kernel_a(FockPair(0, 0), ModelParams(0.0, gt));
    CHECK(std::abs(a - cplx(-1.0, 0.0)) < 1e-14);
}

TEST_CASE("kernel_b vanishes after one full ring period at alpha = 0") {
    const double gt = 2.0 * std::numbers::pi / (2.0 * std::sqrt(2.0));
    CHECK(std::abs(kernel_b(FockPair(0, 0), ModelParams(0.0, gt))) < 1e-14);
}

TEST_CASE("kernel values against the matrix-exponential oracle") {
    // block n = 0: <mm|U|mm> = 1 + 2A/lambda with lambda = 2, <pm|U|mm> = B/theta
    const BlockHamiltonian h0 = build_ladder_hamiltonian(0, 6.0);

    const Eigen::MatrixXcd u_a = oracle_u(h0, 1.0);
    const cplx a = kernel_a(FockPair(0, 0), ModelParams(6.0, 1.0));
    CHECK(std::abs(a - (u_a(2, 2) - 1.0)) < 1e-10);
    CHECK(std::abs(a - cplx(-0.047362224038948408, 0.29490285266136768)) < 1e-9);

    const Eigen::MatrixXcd u_b = oracle_u(h0, 0.5);
    const double theta = lambda_theta(FockPair(0, 0), 6.0).second;
    const cplx b = kernel_b(FockPair(0, 0), ModelParams(6.0, 0.5));
    CHECK(std::abs(b - theta * u_b(0, 2)) < 1e-10);
    CHECK(std::abs(b - cplx(-1.9873549719822492, -0.140932968412223)) < 1e-9);
}

TEST_CASE("kernel_b modulus never exceeds 2") {
    for (int n : {0, 1, 3}) {
        for (double alpha : {0.0, 1.0, 6.0}) {
            for (double gt : grid_200()) {
                CHECK(std::abs(kernel_b(FockPair(n, n), ModelParams(alpha, gt))) <= 2.0 + 1e-14);
            }
        }
    }
}

TEST_CASE("u_diag_pair at gt = 0 is the identity pair") {
    for (int n : {0, 1, 5}) {
        for (double alpha : {0.0, 2.0, 6.0}) {
            const auto [u22, u23] = u_diag_pair(FockPair(n, n), ModelParams(alpha, 0.0));
            CHECK(u22 == cplx(1.0, 0.0));
            CHECK(u23 == cplx(0.0, 0.0));
        }
    }
}

TEST_CASE("u22 - u23 is a pure phase at alpha = 0") {
    // the antisymmetric atomic combination decouples from the field there
    for (double gt : grid_200()) {
        const auto [u22, u23] = u_diag_pair(FockPair(0, 0), ModelParams(0.0, gt));
        CHECK(std::abs(std::abs(u22 - u23) - 1.0) < 1e-12);
    }
}

TEST_CASE("u_diag_pair against the oracle at n = 1, alpha = 6") {
    const BlockHamiltonian h1 = build_ladder_hamiltonian(1, 6.0);
    const Eigen::MatrixXcd u = oracle_u(h1, 1.0);
    const auto [u22, u23] = u_diag_pair(FockPair(1, 1), ModelParams(6.0, 1.0));
    CHECK(std::abs(u22 - u(1, 1)) < 1e-10);
    CHECK(std::abs(u23 - u(1, 2)) < 1e-10);
    CHECK(std::abs(u22 - cplx(0.69700015777477731, -0.4348973422840493)) < 1e-9);
    CHECK(std::abs(u23 - cplx(-0.26317012887558877, -0.15548184408512533)) < 1e-9);
}

TEST_CASE("assembled blocks are unitary for n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (double alpha : {0.0, 1.0, 6.0}) {
            for (double gt : grid_200()) {
                const Eigen::MatrixXcd u = analytic_ladder_u(n, ModelParams(alpha, gt));
                const Eigen::MatrixXcd defect =
                    u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
                CHECK(defect.cwiseAbs().maxCoeff() < 1e-10);
            }
        }
    }
}

TEST_CASE("kernels are continuous under grid refinement") {
    // halving the spacing moves no sample by more than theta * delta * 2
    for (int n : {0, 2}) {
        for (double alpha : {0.0, 6.0}) {
            const double theta = lambda_theta(FockPair(n, n), alpha).second;
            const double delta = 25.0 / 398.0;
            for (int i = 0; i + 1 < 399; ++i) {
                const double t0 = i * delta;
                const cplx a0 = kernel_a(FockPair(n, n), ModelParams(alpha, t0));
                const cplx a1 = kernel_a(FockPair(n, n), ModelParams(alpha, t0 + delta));
                CHECK(std::abs(a1 - a0) <= theta * delta * 2.0);
                const cplx b0 = kernel_b(FockPair(n, n), ModelParams(alpha, t0));
                const cplx b1 = kernel_b(FockPair(n, n), ModelParams(alpha, t0 + delta));
                CHECK(std::abs(b1 - b0) <= theta * delta * 2.0);
            }
        }
    }
}

TEST_CASE("kernel periodicity at alpha = 0, n = 0") {
    // theta = 2 sqrt 2; A = cos(theta gt/2) - 1 and B = -2i sin(theta gt/2),
    // so the full period is 4 pi / theta while the half period 2 pi / theta
    // flips B's sign and leaves only |B| invariant
    const double half_period = std::numbers::pi / std::sqrt(2.0); // = 2 pi / theta
    for (double gt : {0.3, 1.0, 2.4, 7.7}) {
        const cplx a0 = kernel_a(FockPair(0, 0), ModelParams(0.0, gt));
        const cplx a1 = kernel_a(FockPair(0, 0), ModelParams(0.0, gt + 2.0 * half_period));
        CHECK(std::abs(a1 - a0) < 1e-12);

        const cplx b0 = kernel_b(FockPair(0, 0), ModelParams(0.0, gt));
        const cplx b_full = kernel_b(FockPair(0, 0), ModelParams(0.0, gt + 2.0 * half_period));
        CHECK(std::abs(b_full - b0) < 1e-12);

        const cplx b_half = kernel_b(FockPair(0, 0), ModelParams(0.0, gt + half_period));
        CHECK(std::abs(b_half + b0) < 1e-12);
        CHECK(std::abs(std::abs(b_half) - std::abs(b0)) < 1e-12);
    }
}

TEST_CASE("scalar_kernels bundles the individual kernels") {
    const FockPair fock(2, 2);
    const ModelParams p(1.5, 3.25);
    const ScalarKernels k = scalar_kernels(fock, p);
    const auto [lambda, theta] = lambda_theta(fock, p.alpha);
    CHECK(k.lambda == lambda);
    CHECK(k.theta == theta);
    CHECK(k.a == kernel_a(fock, p));
    CHECK(k.b == kernel_b(fock, p));
}
