#pragma once

#include <utility>

#include "tctp/types.hpp"

namespace tctp {

/// Scalar values of the operator kernels entering the closed-form propagator,
/// sandwiched between equal-occupation Fock states |n,n>.
struct ScalarKernels {
    double lambda; ///< 2[(n+1)^2 + n^2]
    double theta;  ///< sqrt(4*lambda + alpha^2)
    cplx a;        ///< population-return kernel, 0 at gt = 0
    cplx b;        ///< pair-transfer kernel, 0 at gt = 0, |b| <= 2
};

/// Sign of the cross phase exp(+i (3*alpha + theta) gt / 2) inside the
/// u22/u23 pair. `flipped` negates that phase argument; it is not a physical
/// propagator and exists only as a negative control for the validation gate,
/// which must reject it.
enum class CrossPhase { standard, flipped };

/// Eigenvalues of the pair-number kernels on |n,n>.
/// Throws std::invalid_argument when fock.n1 != fock.n2: unequal sandwiches
/// never occur in this model and have no defined value here.
std::pair<double, double> lambda_theta(const FockPair& fock, double alpha);

/// A = exp(-i alpha gt/2) [cos(theta gt/2) + i (alpha/theta) sin(theta gt/2)] - 1
cplx kernel_a(const FockPair& fock, const ModelParams& params);

/// B = exp(-i (alpha + theta) gt/2) [1 - exp(i theta gt)]
cplx kernel_b(const FockPair& fock, const ModelParams& params);

/// Fock-diagonal values (u22, u23) of the propagator block that couples
/// |+,-;n,n> and |-,+;n,n>. See kernels.cpp for the derivation.
std::pair<cplx, cplx> u_diag_pair(const FockPair& fock, const ModelParams& params,
                                  CrossPhase phase = CrossPhase::standard);

/// All four kernels at once.
ScalarKernels scalar_kernels(const FockPair& fock, const ModelParams& params);

} // namespace tctp
