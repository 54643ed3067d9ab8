#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tctp/dynamics.hpp"

namespace tctp {

/// The validation gate: largest tolerated entrywise deviation between the
/// closed-form block propagator and the brute-force matrix exponential.
inline constexpr double oracle_match_tolerance = 1e-10;

/// Interaction-picture Hamiltonian restricted to one invariant block,
/// in units of hbar*g. Real symmetric with zero diagonal.
struct BlockHamiltonian {
    BlockBasis basis;
    Eigen::MatrixXd matrix;
    double alpha = 0.0;
};

/// Block Hamiltonian on ladder_basis(n), built from the ladder matrix
/// elements <n+1|a^+|n> = sqrt(n+1) per mode.
BlockHamiltonian build_ladder_hamiltonian(int n, double alpha);

/// Block Hamiltonian for a family's invariant subspace.
BlockHamiltonian build_hamiltonian(Family family, double alpha);

/// exp(-i H gt) by eigendecomposition of the real symmetric block.
Eigen::MatrixXcd oracle_u(const BlockHamiltonian& ham, double gt);

/// Max entrywise |analytic_block_u - oracle_u| over the grid. Values above
/// oracle_match_tolerance fail the validation gate.
double validate_analytic(Family family, double alpha, const std::vector<double>& grid,
                         CrossPhase phase = CrossPhase::standard);

} // namespace tctp
