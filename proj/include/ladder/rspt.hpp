#pragma once
// Exact Rayleigh-Schrodinger perturbation series over rationals, in units
// E = 1 with expansion variable u = v/E, plus the path-enumeration shortcut
// for leading terms and the closed-form weak-coupling wave-function table of
// the tridiagonal model.
//
// Intermediate normalization: the reference component is exactly 1 at all
// orders; the reference state is excluded from the solved components (the
// Q-projector). Recursion for k >= 1, n != r:
//   eps^(k)   = (W c^(k-1))_r
//   c_n^(k)   = [ (W c^(k-1))_n - sum_{j=1}^{k-1} eps^(j) c_n^(k-j) ] / (r - n)

#include "ladder/model.hpp"
#include "ladder/useries.hpp"

#include <deque>
#include <limits>
#include <optional>
#include <vector>

namespace ladder {

struct series_state {
    int ref = 0;
    useries energy;                  // units of spacing_E; index 0 holds the unperturbed ref energy
    std::vector<useries> amplitudes; // one per level, dimensionless
};

struct leading_term {
    std::optional<int> power;  // nullopt: vanishes identically to the order cap
    rational coeff;
};

// Minimum number of band steps from ref to every level; -1 when unreachable.
inline std::vector<int> band_distances(const model_spec& spec, int ref) {
    std::vector<int> d(static_cast<size_t>(spec.dim), -1);
    d[static_cast<size_t>(ref)] = 0;
    std::deque<int> queue{ref};
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int o : spec.offsets) {
            for (int t : {s - o, s + o}) {
                if (t < 0 || t >= spec.dim || d[static_cast<size_t>(t)] >= 0) continue;
                d[static_cast<size_t>(t)] = d[static_cast<size_t>(s)] + 1;
                queue.push_back(t);
            }
        }
    }
    return d;
}

inline series_state rs_series(const model_spec& spec, int ref_index, int order) {
    spec.validate();
    if (ref_index < 0 || ref_index >= spec.dim)
        throw std::invalid_argument("rs_series: reference index out of range");
    if (order < 1 || order > default_order_cap)
        throw std::invalid_argument("rs_series: order outside [1, order cap]");

    const int dim = spec.dim;
    series_state st;
    st.ref = ref_index;
    st.energy = useries(order);
    st.amplitudes.assign(static_cast<size_t>(dim), useries(order));
    st.amplitudes[static_cast<size_t>(ref_index)][0] = 1;
    st.energy[0] = ref_index;  // unperturbed energy in units of E

    for (int k = 1; k <= order; ++k) {
        // (W c^(k-1))_n = sum over offsets of the two band neighbours
        std::vector<rational> wc(static_cast<size_t>(dim));
        for (int n = 0; n < dim; ++n) {
            for (int o : spec.offsets) {
                if (n - o >= 0) wc[static_cast<size_t>(n)] += st.amplitudes[static_cast<size_t>(n - o)][k - 1];
                if (n + o < dim) wc[static_cast<size_t>(n)] += st.amplitudes[static_cast<size_t>(n + o)][k - 1];
            }
        }
        st.energy[k] = wc[static_cast<size_t>(ref_index)];
        for (int n = 0; n < dim; ++n) {
            if (n == ref_index) continue;
            rational s = wc[static_cast<size_t>(n)];
            for (int j = 1; j < k; ++j) s -= st.energy[j] * st.amplitudes[static_cast<size_t>(n)][k - j];
            st.amplitudes[static_cast<size_t>(n)][k] = s / rational(ref_index - n);
        }
    }
    return st;
}

// Sum over all minimal walks ref -> target (steps +-o, o in offsets, confined
// to [0, dim), never revisiting ref as an intermediate state); each step into
// state s contributes a factor 1/(ref - s), the energy denominator in units E.
inline leading_term path_leading(const model_spec& spec, int ref_index, int target) {
    spec.validate();
    if (ref_index < 0 || ref_index >= spec.dim || target < 0 || target >= spec.dim)
        throw std::invalid_argument("path_leading: state out of range");
    if (target == ref_index)
        throw std::invalid_argument("path_leading: target must differ from reference");

    const auto dist_from_target = band_distances(spec, target);
    const int d = dist_from_target[static_cast<size_t>(ref_index)];
    if (d < 0) return {std::nullopt, rational()};  // unreachable band pattern

    rational total;
    // Depth-first over minimal walks, pruned by remaining distance.
    struct frame { int state; int depth; rational prod; };
    std::vector<frame> stack{{ref_index, 0, rational(1)}};
    while (!stack.empty()) {
        frame f = stack.back();
        stack.pop_back();
        if (f.depth == d) {
            if (f.state == target) total += f.prod;
            continue;
        }
        for (int o : spec.offsets) {
            for (int next : {f.state - o, f.state + o}) {
                if (next < 0 || next >= spec.dim) continue;
                if (next == ref_index) continue;  // Q-projector: ref never intermediate
                int rem = dist_from_target[static_cast<size_t>(next)];
                if (rem < 0 || rem > d - f.depth - 1) continue;
                stack.push_back({next, f.depth + 1, f.prod * rational(1, ref_index - next)});
            }
        }
    }
    return {d, total};
}

// Closed-form leading terms of the tridiagonal eigenvector with reference k:
// entry j = u^(k-j)/(k-j)! toward the ground side, 1 at j = k, and
// (-u)^(j-k)/(j-k)! upward.
inline std::vector<leading_term> table4_row(int dim, int k) {
    if (dim < 2 || dim > max_dim) throw std::invalid_argument("table4_row: dim outside [2, 64]");
    if (k < 0 || k >= dim) throw std::invalid_argument("table4_row: row index out of range");
    std::vector<leading_term> row;
    row.reserve(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        int p = j < k ? k - j : j - k;
        rational c = factorial_reciprocal(p);
        if (j > k && p % 2 == 1) c = -c;
        row.push_back({p, c});
    }
    return row;
}

}  // namespace ladder
