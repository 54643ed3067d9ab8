#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tctp/kernels.hpp"

namespace tctp {

/// The two supported initial-state families.
///   one: a|+,-;0,0> + b|-,+;0,0> + c|-,-;1,1>
///   two: a|+,+;0,0> + b|+,-;1,1> + c|-,+;1,1>
enum class Family { one = 1, two = 2 };

/// W-like initial state. Coefficients may be complex; their squared moduli
/// must sum to 1 within 1e-12 or construction throws.
struct WStateSpec {
    Family family;
    cplx a, b, c;

    WStateSpec(Family family_, cplx a_, cplx b_, cplx c_);
};

using BlockBasis = std::vector<BasisLabel>;

/// Evolved amplitudes over a block basis at one scaled time.
/// Unitary evolution keeps sum |amps_i|^2 = 1.
struct AmplitudeVector {
    BlockBasis basis;
    Eigen::VectorXcd amps;
    double gt = 0.0;
};

/// Invariant subspace containing |+,-;n,n>: for n = 0 the three kets
/// [(+,-;0,0), (-,+;0,0), (-,-;1,1)]; for n >= 1 the four kets
/// [(+,+;n-1,n-1), (+,-;n,n), (-,+;n,n), (-,-;n+1,n+1)].
BlockBasis ladder_basis(int n);

/// Fixed ordered basis of a family's invariant block
/// (family one = ladder_basis(0), family two = ladder_basis(1)).
BlockBasis block_basis(Family family);

/// Closed-form evolution matrix on ladder_basis(n), assembled from the
/// scalar kernels with the ladder matrix elements <n+1|a^+|n> = sqrt(n+1)
/// applied per mode. Unitary for the standard cross phase.
Eigen::MatrixXcd analytic_ladder_u(int n, const ModelParams& params,
                                   CrossPhase phase = CrossPhase::standard);

/// Block evolution matrix for a family's invariant subspace.
Eigen::MatrixXcd analytic_block_u(Family family, const ModelParams& params,
                                  CrossPhase phase = CrossPhase::standard);

/// Evolved amplitudes: analytic_block_u applied to the initial coefficient
/// vector (a, b, c) resp. (a, b, c, 0).
AmplitudeVector evolve(const WStateSpec& spec, const ModelParams& params);

/// Same amplitudes written out termwise from the scalar kernels instead of
/// as a matrix-vector product; kept as a second route for tests.
AmplitudeVector evolve_termwise(const WStateSpec& spec, const ModelParams& params);

} // namespace tctp
