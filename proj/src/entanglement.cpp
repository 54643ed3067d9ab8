#include "tctp/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace tctp {

namespace {

constexpr double endpoint_refine_tol = 1e-6;

// sigma_y (x) sigma_y in the fixed atomic basis: antidiag(-1, 1, 1, -1).
Eigen::Matrix4cd spin_flip() {
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    s(0, 3) = s(3, 0) = -1.0;
    s(1, 2) = s(2, 1) = 1.0;
    return s;
}

Eigen::Matrix4cd psd_sqrt(const AtomicDensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
    Eigen::Vector4d evals = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * evals.cwiseSqrt().asDiagonal() *
           es.eigenvectors().adjoint();
}

void check_density_matrix(const AtomicDensityMatrix& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 || std::abs(rho.trace().imag()) > 1e-12)
        throw std::invalid_argument("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("density matrix is not positive semidefinite");
}

void check_series(const ConcurrenceSeries& series) {
    if (series.gts.empty())
        throw std::invalid_argument("scan_esd: empty series");
    if (series.gts.size() != series.values.size())
        throw std::invalid_argument("scan_esd: gts/values length mismatch");
    for (std::size_t i = 1; i < series.gts.size(); ++i)
        if (!(series.gts[i] > series.gts[i - 1]))
            throw std::invalid_argument("scan_esd: gts must be strictly increasing");
}

EsdReport scan_impl(const ConcurrenceSeries& series, double zero_threshold,
                    double min_window,
                    const std::function<double(double)>* concurrence_at) {
    check_series(series);
    if (!(zero_threshold > 0.0))
        throw std::invalid_argument("scan_esd: zero_threshold must be > 0");
    if (!(min_window >= 0.0))
        throw std::invalid_argument("scan_esd: min_window must be >= 0");

    const auto& gts = series.gts;
    const auto& values = series.values;
    const std::size_t n = gts.size();

    // bisect for the threshold crossing bracketed by [lo, hi];
    // dark_side_right says which side of the bracket is dark
    const auto refine = [&](double lo, double hi, bool dark_side_right) {
        while (hi - lo > endpoint_refine_tol) {
            const double mid = 0.5 * (lo + hi);
            const bool dark = (*concurrence_at)(mid) <= zero_threshold;
            if (dark == dark_side_right)
                hi = mid;
            else
                lo = mid;
        }
        return dark_side_right ? hi : lo;
    };

    EsdReport report;
    report.zero_threshold = zero_threshold;
    report.min_window = min_window;

    std::size_t i = 0;
    while (i < n) {
        if (values[i] > zero_threshold) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && values[j + 1] <= zero_threshold)
            ++j;
        double start = gts[i];
        double end = gts[j];
        if (concurrence_at != nullptr) {
            if (i > 0)
                start = refine(gts[i - 1], gts[i], /*dark_side_right=*/true);
            if (j + 1 < n)
                end = refine(gts[j], gts[j + 1], /*dark_side_right=*/false);
        }
        if (end - start >= min_window)
            report.windows.push_back({start, end});
        i = j + 1;
    }
    return report;
}

} // namespace

double EsdReport::total_dark_time() const {
    double total = 0.0;
    for (const auto& w : windows)
        total += w.length();
    return total;
}

AtomicDensityMatrix reduced_density(const AmplitudeVector& amps) {
    if (amps.basis.size() != static_cast<std::size_t>(amps.amps.size()))
        throw std::invalid_argument("reduced_density: basis/amplitude size mismatch");
    if (std::abs(amps.amps.squaredNorm() - 1.0) > 1e-10)
        throw std::invalid_argument("reduced_density: amplitudes are not normalized");

    AtomicDensityMatrix rho = AtomicDensityMatrix::Zero();
    for (std::size_t i = 0; i < amps.basis.size(); ++i) {
        for (std::size_t j = 0; j < amps.basis.size(); ++j) {
            if (amps.basis[i].fock == amps.basis[j].fock)
                rho(static_cast<int>(amps.basis[i].atom),
                    static_cast<int>(amps.basis[j].atom)) +=
                    amps.amps(i) * std::conj(amps.amps(j));
        }
    }
    return rho;
}

double concurrence_xstate(const AmplitudeVector& amps) {
    const auto& x = amps.amps;
    if (amps.basis == block_basis(Family::one))
        return 2.0 * std::max(0.0, std::abs(x(0)) * std::abs(x(1)));
    if (amps.basis == block_basis(Family::two))
        return 2.0 * std::max(0.0, std::abs(x(1)) * std::abs(x(2)) -
                                       std::abs(x(0)) * std::abs(x(3)));
    throw std::invalid_argument("concurrence_xstate: basis matches neither family block");
}

double concurrence_wootters(const AtomicDensityMatrix& rho) {
    check_density_matrix(rho);

    // The four Wootters eigenvalues are the squared singular values of
    // K = sqrt(rho) S sqrt(rho)* S, since K K^dag = sqrt(rho) S rho* S
    // sqrt(rho). Reading them off as singular values keeps the spurious
    // near-zero ones at machine precision instead of sqrt(machine epsilon).
    const Eigen::Matrix4cd s = spin_flip();
    const Eigen::Matrix4cd root = psd_sqrt(rho);
    const Eigen::Matrix4cd k = root * s * root.conjugate() * s;
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(k);
    const Eigen::Vector4d sv = svd.singularValues(); // sorted decreasing
    return std::max(0.0, sv(0) - sv(1) - sv(2) - sv(3));
}

EsdReport scan_esd(const ConcurrenceSeries& series, double zero_threshold,
                   double min_window) {
    return scan_impl(series, zero_threshold, min_window, nullptr);
}

EsdReport scan_esd(const ConcurrenceSeries& series, double zero_threshold,
                   double min_window,
                   const std::function<double(double)>& concurrence_at) {
    return scan_impl(series, zero_threshold, min_window, &concurrence_at);
}

} // namespace tctp
