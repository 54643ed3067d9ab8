#include "tctp/dynamics.hpp"

#include <cmath>

namespace tctp {

WStateSpec::WStateSpec(Family family_, cplx a_, cplx b_, cplx c_)
    : family(family_), a(a_), b(b_), c(c_) {
    const double norm2 = std::norm(a) + std::norm(b) + std::norm(c);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("WStateSpec: |a|^2 + |b|^2 + |c|^2 must equal 1");
}

BlockBasis ladder_basis(int n) {
    if (n < 0)
        throw std::invalid_argument("ladder_basis: n must be >= 0");
    if (n == 0)
        return {{AtomicState::pm, FockPair(0, 0)},
                {AtomicState::mp, FockPair(0, 0)},
                {AtomicState::mm, FockPair(1, 1)}};
    return {{AtomicState::pp, FockPair(n - 1, n - 1)},
            {AtomicState::pm, FockPair(n, n)},
            {AtomicState::mp, FockPair(n, n)},
            {AtomicState::mm, FockPair(n + 1, n + 1)}};
}

BlockBasis block_basis(Family family) {
    return ladder_basis(family == Family::one ? 0 : 1);
}

Eigen::MatrixXcd analytic_ladder_u(int n, const ModelParams& params, CrossPhase phase) {
    const FockPair center(n, n);
    const auto [lambda, theta] = lambda_theta(center, params.alpha);
    const cplx a_over_lambda = kernel_a(center, params) / lambda;
    const cplx b_over_theta = kernel_b(center, params) / theta;
    const auto [u22, u23] = u_diag_pair(center, params, phase);

    if (n == 0) {
        Eigen::MatrixXcd u(3, 3);
        u << u22, u23, b_over_theta,
             u23, u22, b_over_theta,
             b_over_theta, b_over_theta, 1.0 + 2.0 * a_over_lambda;
        return u;
    }

    // <n-1,n-1|a1 a2|n,n> = n and <n+1,n+1|a1+ a2+|n,n> = n+1
    const double dn = n;
    const double up = n + 1;
    Eigen::MatrixXcd u(4, 4);
    u << 1.0 + 2.0 * dn * dn * a_over_lambda, dn * b_over_theta, dn * b_over_theta,
         2.0 * dn * up * a_over_lambda,
         dn * b_over_theta, u22, u23, up * b_over_theta,
         dn * b_over_theta, u23, u22, up * b_over_theta,
         2.0 * dn * up * a_over_lambda, up * b_over_theta, up * b_over_theta,
         1.0 + 2.0 * up * up * a_over_lambda;
    return u;
}

Eigen::MatrixXcd analytic_block_u(Family family, const ModelParams& params, CrossPhase phase) {
    return analytic_ladder_u(family == Family::one ? 0 : 1, params, phase);
}

AmplitudeVector evolve(const WStateSpec& spec, const ModelParams& params) {
    const BlockBasis basis = block_basis(spec.family);
    Eigen::VectorXcd initial(basis.size());
    if (spec.family == Family::one)
        initial << spec.a, spec.b, spec.c;
    else
        initial << spec.a, spec.b, spec.c, cplx(0, 0);
    return {basis, analytic_block_u(spec.family, params) * initial, params.gt};
}

AmplitudeVector evolve_termwise(const WStateSpec& spec, const ModelParams& params) {
    const FockPair center(spec.family == Family::one ? 0 : 1,
                          spec.family == Family::one ? 0 : 1);
    const ScalarKernels k = scalar_kernels(center, params);
    const auto [u22, u23] = u_diag_pair(center, params);
    const cplx bt = k.b / k.theta;
    const cplx al = k.a / k.lambda;
    const cplx a = spec.a, b = spec.b, c = spec.c;

    Eigen::VectorXcd amps;
    if (spec.family == Family::one) {
        amps.resize(3);
        amps << u22 * a + u23 * b + bt * c,
                u23 * a + u22 * b + bt * c,
                bt * a + bt * b + (1.0 + 2.0 * al) * c;
    } else {
        amps.resize(4);
        amps << (1.0 + 2.0 * al) * a + bt * b + bt * c,
                bt * a + u22 * b + u23 * c,
                bt * a + u23 * b + u22 * c,
                4.0 * al * a + 2.0 * bt * b + 2.0 * bt * c;
    }
    return {block_basis(spec.family), std::move(amps), params.gt};
}

} // namespace tctp
