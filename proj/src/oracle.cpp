#include "tctp/oracle.hpp"

#include <cmath>

namespace tctp {

BlockHamiltonian build_ladder_hamiltonian(int n, double alpha) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("build_ladder_hamiltonian: alpha must be >= 0");
    BlockBasis basis = ladder_basis(n);

    if (n == 0) {
        Eigen::MatrixXd h(3, 3);
        h << 0.0, alpha, 1.0,
             alpha, 0.0, 1.0,
             1.0, 1.0, 0.0;
        return {std::move(basis), std::move(h), alpha};
    }

    const double dn = n;
    const double up = n + 1;
    Eigen::MatrixXd h(4, 4);
    h << 0.0, dn, dn, 0.0,
         dn, 0.0, alpha, up,
         dn, alpha, 0.0, up,
         0.0, up, up, 0.0;
    return {std::move(basis), std::move(h), alpha};
}

BlockHamiltonian build_hamiltonian(Family family, double alpha) {
    return build_ladder_hamiltonian(family == Family::one ? 0 : 1, alpha);
}

Eigen::MatrixXcd oracle_u(const BlockHamiltonian& ham, double gt) {
    if (!(gt >= 0.0))
        throw std::invalid_argument("oracle_u: gt must be >= 0");
    if (gt == 0.0)
        return Eigen::MatrixXcd::Identity(ham.matrix.rows(), ham.matrix.cols());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ham.matrix);
    const Eigen::VectorXd& e = es.eigenvalues();
    const Eigen::MatrixXd& v = es.eigenvectors();

    Eigen::VectorXcd phases(e.size());
    for (Eigen::Index k = 0; k < e.size(); ++k)
        phases(k) = std::exp(cplx(0.0, -e(k) * gt));
    return v * phases.asDiagonal() * v.transpose();
}

double validate_analytic(Family family, double alpha, const std::vector<double>& grid,
                         CrossPhase phase) {
    if (grid.empty())
        throw std::invalid_argument("validate_analytic: empty grid");
    const BlockHamiltonian ham = build_hamiltonian(family, alpha);
    double worst = 0.0;
    for (double gt : grid) {
        const Eigen::MatrixXcd analytic = analytic_block_u(family, ModelParams(alpha, gt), phase);
        const Eigen::MatrixXcd reference = oracle_u(ham, gt);
        worst = std::max(worst, (analytic - reference).cwiseAbs().maxCoeff());
    }
    return worst;
}

} // namespace tctp
