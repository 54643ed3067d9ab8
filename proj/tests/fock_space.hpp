#pragma once

// Test-only brute-force construction: dense operators on the truncated
// product space (two atoms) x (two modes, each cut at n_max photons).
// Used to cross-check the hand-derived block matrix elements against an
// operator-level build that knows nothing about invariant blocks.

#include <cmath>

#include <Eigen/Dense>

#include "tctp/types.hpp"

namespace tctp::testsupport {

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

struct TruncatedSpace {
    int n_max;

    explicit TruncatedSpace(int n_max_) : n_max(n_max_) {}

    int fock_dim() const { return n_max + 1; }
    int field_dim() const { return fock_dim() * fock_dim(); }
    int dim() const { return 4 * field_dim(); }

    int index(AtomicState atom, int n1, int n2) const {
        return static_cast<int>(atom) * field_dim() + n1 * fock_dim() + n2;
    }
    int index(const BasisLabel& label) const {
        return index(label.atom, label.fock.n1, label.fock.n2);
    }

    // single-mode annihilator, <n-1|a|n> = sqrt(n)
    Eigen::MatrixXd mode_annihilator() const {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(fock_dim(), fock_dim());
        for (int n = 1; n <= n_max; ++n)
            a(n - 1, n) = std::sqrt(static_cast<double>(n));
        return a;
    }

    Eigen::MatrixXd field_annihilator_1() const {
        return kron(mode_annihilator(), Eigen::MatrixXd::Identity(fock_dim(), fock_dim()));
    }
    Eigen::MatrixXd field_annihilator_2() const {
        return kron(Eigen::MatrixXd::Identity(fock_dim(), fock_dim()), mode_annihilator());
    }

    // R_i^+ on the four-state two-atom space, fixed pp, pm, mp, mm ordering
    static Eigen::MatrixXd atom_raise(int which) {
        Eigen::MatrixXd r = Eigen::MatrixXd::Zero(4, 4);
        if (which == 1) {
            r(0, 2) = 1.0; // |-,x> -> |+,x>
            r(1, 3) = 1.0;
        } else {
            r(0, 1) = 1.0; // |x,-> -> |x,+>
            r(2, 3) = 1.0;
        }
        return r;
    }

    // field-only 2(a1 a2 a1+ a2+ + a1+ a2+ a1 a2); diagonal exact for n < n_max
    Eigen::MatrixXd pair_number_kernel() const {
        const Eigen::MatrixXd a1 = field_annihilator_1();
        const Eigen::MatrixXd a2 = field_annihilator_2();
        const Eigen::MatrixXd lower = a1 * a2;
        const Eigen::MatrixXd raise = a1.transpose() * a2.transpose();
        return 2.0 * (lower * raise + raise * lower);
    }

    // full interaction Hamiltonian over atoms x field, in units of hbar*g
    Eigen::MatrixXd hamiltonian(double alpha) const {
        const Eigen::MatrixXd a1 = field_annihilator_1();
        const Eigen::MatrixXd a2 = field_annihilator_2();
        const Eigen::MatrixXd pair_lower = a1 * a2;
        const Eigen::MatrixXd pair_raise = pair_lower.transpose();
        const Eigen::MatrixXd field_id = Eigen::MatrixXd::Identity(field_dim(), field_dim());

        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim(), dim());
        for (int i = 1; i <= 2; ++i) {
            const Eigen::MatrixXd raise = atom_raise(i);
            h += kron(raise.transpose(), pair_raise); // a1+ a2+ R_i^-
            h += kron(raise, pair_lower);             // R_i^+ a1 a2
        }
        const Eigen::MatrixXd exchange =
            atom_raise(1) * atom_raise(2).transpose() + atom_raise(2) * atom_raise(1).transpose();
        h += alpha * kron(exchange, field_id);
        return h;
    }
};

} // namespace tctp::testsupport
