#pragma once
// Dense symmetric eigendecomposition by cyclic Jacobi rotations with a
// deterministic sign convention. Sweeps run until the off-diagonal Frobenius
// norm drops below 1e-13 * ||H||_F (at most 100 sweeps); rotations use the
// stable half-angle formulas, so small eigenvector components on graded
// matrices come out with near-full relative accuracy.

#include "ladder/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ladder {

struct numerical_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct eigen_system {
    std::vector<double> eigenvalues;                // ascending
    std::vector<std::vector<double>> eigenvectors;  // [k][i], unit norm, sign-canonical
};

namespace detail {

inline double off_diag_frobenius(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) s += a[static_cast<size_t>(p) * n + q] * a[static_cast<size_t>(p) * n + q];
    return std::sqrt(2.0 * s);
}

}  // namespace detail

inline eigen_system decompose(const sym_matrix& H) {
    const int n = H.dim();
    std::vector<double> a = H.raw();
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    const double fro = H.frobenius();
    const double tol = 1e-13 * fro;
    constexpr int max_sweeps = 100;

    auto A = [&a, n](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&v, n](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    bool converged = fro == 0.0;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        if (detail::off_diag_frobenius(a, n) <= tol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t =
                    std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                A(p, p) -= t * apq;
                A(q, q) += t * apq;
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                for (int j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    const double g = A(j, p), h = A(j, q);
                    A(j, p) = g - s * (h + g * tau);
                    A(p, j) = A(j, p);
                    A(j, q) = h + s * (g - h * tau);
                    A(q, j) = A(j, q);
                }
                for (int j = 0; j < n; ++j) {
                    const double g = V(j, p), h = V(j, q);
                    V(j, p) = g - s * (h + g * tau);
                    V(j, q) = h + s * (g - h * tau);
                }
            }
        }
    }
    if (!converged && detail::off_diag_frobenius(a, n) > tol) {
        std::ostringstream msg;
        msg << "jacobi: no convergence after " << max_sweeps
            << " sweeps; off-diagonal residual " << detail::off_diag_frobenius(a, n)
            << " exceeds bound " << tol;
        throw numerical_failure(msg.str());
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return A(x, x) < A(y, y); });

    eigen_system es;
    es.eigenvalues.resize(static_cast<size_t>(n));
    es.eigenvectors.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
    for (int k = 0; k < n; ++k) {
        es.eigenvalues[static_cast<size_t>(k)] = A(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]);
        auto& vec = es.eigenvectors[static_cast<size_t>(k)];
        for (int i = 0; i < n; ++i) vec[static_cast<size_t>(i)] = V(i, order[static_cast<size_t>(k)]);
        // Sign canonicalization: component of largest magnitude positive,
        // ties broken by the lowest index.
        int big = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(vec[static_cast<size_t>(i)]) > std::abs(vec[static_cast<size_t>(big)])) big = i;
        if (vec[static_cast<size_t>(big)] < 0.0)
            for (double& x : vec) x = -x;
    }
    return es;
}

inline std::pair<double, std::vector<double>> ground_state(const sym_matrix& H) {
    eigen_system es = decompose(H);
    return {es.eigenvalues.front(), es.eigenvectors.front()};
}

}  // namespace ladder
