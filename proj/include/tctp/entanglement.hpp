#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "tctp/dynamics.hpp"

namespace tctp {

/// 4x4 Hermitian, PSD, unit-trace matrix over the two-atom basis
/// |+,+>, |+,->, |-,+>, |-,->.
using AtomicDensityMatrix = Eigen::Matrix4cd;

/// Default threshold below which a concurrence sample counts as zero.
inline constexpr double default_zero_threshold = 1e-9;
/// Default minimum dark-interval length that counts as sudden death rather
/// than an isolated zero crossing.
inline constexpr double default_min_window = 0.05;

/// Traces the field out of the pure atom-field state: groups amplitudes by
/// Fock label and sums the atomic outer products. Throws when the input is
/// not normalized to 1e-10.
AtomicDensityMatrix reduced_density(const AmplitudeVector& amps);

/// Closed-form concurrence for the two families' reduced states:
/// 2 max{0, |X1 X2|} on family one, 2 max{0, |X2 X3| - |X1 X4|} on family two.
/// Throws when the amplitude basis matches neither family.
double concurrence_xstate(const AmplitudeVector& amps);

/// General two-qubit concurrence max{0, s1 - s2 - s3 - s4} where s_i are the
/// decreasing square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).
/// Independent of the closed-form route above. Throws on non-Hermitian,
/// non-PSD, or non-unit-trace input.
double concurrence_wootters(const AtomicDensityMatrix& rho);

/// Concurrence samples over a strictly increasing time grid.
struct ConcurrenceSeries {
    std::vector<double> gts;
    std::vector<double> values;
};

struct EsdWindow {
    double gt_start = 0.0;
    double gt_end = 0.0;

    double length() const { return gt_end - gt_start; }
};

/// Maximal dark intervals of a concurrence series: disjoint, ordered, each
/// at least min_window long.
struct EsdReport {
    std::vector<EsdWindow> windows;
    double zero_threshold = default_zero_threshold;
    double min_window = default_min_window;

    double total_dark_time() const;
};

/// Finds maximal runs of consecutive samples with C <= zero_threshold and
/// keeps those at least min_window long. Window endpoints sit on the grid.
/// Throws on an empty or malformed series.
EsdReport scan_esd(const ConcurrenceSeries& series, double zero_threshold,
                   double min_window);

/// Same scan, with window endpoints refined to 1e-6 in gt by bisecting
/// concurrence_at between the boundary samples.
EsdReport scan_esd(const ConcurrenceSeries& series, double zero_threshold,
                   double min_window,
                   const std::function<double(double)>& concurrence_at);

} // namespace tctp
