#pragma once

#include <complex>
#include <stdexcept>

namespace tctp {

using cplx = std::complex<double>;

/// Two-atom product basis, fixed ordering |+,+>, |+,->, |-,+>, |-,->.
/// Every 4x4 atomic object in this library uses this ordering.
enum class AtomicState { pp = 0, pm = 1, mp = 2, mm = 3 };

inline int excited_atom_count(AtomicState s) {
    switch (s) {
    case AtomicState::pp: return 2;
    case AtomicState::pm:
    case AtomicState::mp: return 1;
    case AtomicState::mm: return 0;
    }
    throw std::logic_error("invalid AtomicState");
}

/// Photon occupation numbers of the two cavity modes.
struct FockPair {
    int n1 = 0;
    int n2 = 0;

    FockPair() = default;
    FockPair(int n1_, int n2_) : n1(n1_), n2(n2_) {
        if (n1 < 0 || n2 < 0)
            throw std::invalid_argument("FockPair: occupation numbers must be nonnegative");
    }

    /// Both pair-transition terms create or destroy one photon per mode, so
    /// every state reachable from the supported initial states has n1 == n2.
    bool equal_occupation() const { return n1 == n2; }

    friend bool operator==(const FockPair&, const FockPair&) = default;
};

/// Dimensionless model parameters with hbar = 1 and g = 1: alpha is the
/// dipole-dipole strength over the atom-field coupling, gt the scaled time.
struct ModelParams {
    double alpha = 0.0;
    double gt = 0.0;

    ModelParams() = default;
    ModelParams(double alpha_, double gt_) : alpha(alpha_), gt(gt_) {
        if (!(alpha >= 0.0))
            throw std::invalid_argument("ModelParams: alpha must be >= 0");
        if (!(gt >= 0.0))
            throw std::invalid_argument("ModelParams: gt must be >= 0");
    }
};

/// One basis ket of an invariant subspace: atomic state plus field occupation.
struct BasisLabel {
    AtomicState atom;
    FockPair fock;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

} // namespace tctp
