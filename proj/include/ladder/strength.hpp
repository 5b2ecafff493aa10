#pragma once
// Transition operators T1/T2 and strength matrix elements O between
// eigenstates, in three flavours:
//   * numeric     — from the Jacobi eigenvectors,
//   * table4 mode — composed from per-component leading terms only (the
//                   printed weak-coupling wave-function-table convention:
//                   interior reference rows keep components to 4 orders below
//                   the reference and 3 above it, end rows keep everything),
//   * full_rs mode — composed from the complete truncated perturbation
//                   series with exact unit normalization.
// O = sum_n (a_n b_{n+1} + b_n a_{n+1}) t_n, with t_n = 1 for T1 and
// sqrt(n+1) for T2. Strength is O^2, reported as ln(O^2) with a dedicated
// minus-infinity marker for exact zeros.

#include "ladder/model.hpp"
#include "ladder/rspt.hpp"
#include "ladder/spectral.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace ladder {

enum class transition_kind { T1, T2 };

inline double link_weight(transition_kind kind, int n) {
    return kind == transition_kind::T1 ? 1.0 : std::sqrt(static_cast<double>(n + 1));
}

inline const char* to_string(transition_kind k) {
    return k == transition_kind::T1 ? "T1" : "T2";
}

struct zero_strength_error : numerical_failure {
    using numerical_failure::numerical_failure;
};

struct strength_record {
    int from_state = 0;
    int to_state = 0;
    double e_star = 0.0;       // lambda_to - lambda_from, MeV
    double amplitude_O = 0.0;
    double strength = 0.0;     // O^2
    double ln_strength = 0.0;  // -infinity when strength is exactly zero
};

inline constexpr double minus_inf = -std::numeric_limits<double>::infinity();

// The raw O-sum; strength and ln_strength are invariant under sign flips of
// either vector (O itself only changes sign).
inline double o_sum(const std::vector<double>& a, const std::vector<double>& b,
                    transition_kind kind) {
    double o = 0.0;
    for (size_t i = 0; i + 1 < a.size(); ++i)
        o += (a[i] * b[i + 1] + b[i] * a[i + 1]) * link_weight(kind, static_cast<int>(i));
    return o;
}

inline strength_record strength_numeric(const model_spec& spec, transition_kind kind,
                                        int from_state, int to_state) {
    spec.validate();
    if (from_state < 0 || from_state >= spec.dim || to_state < 0 || to_state >= spec.dim)
        throw std::invalid_argument("strength_numeric: state out of range");
    if (from_state == to_state)
        throw std::invalid_argument("strength_numeric: from and to must differ");

    eigen_system es = decompose(build_hamiltonian(spec));
    strength_record rec;
    rec.from_state = from_state;
    rec.to_state = to_state;
    rec.e_star = es.eigenvalues[static_cast<size_t>(to_state)] -
                 es.eigenvalues[static_cast<size_t>(from_state)];
    rec.amplitude_O = o_sum(es.eigenvectors[static_cast<size_t>(from_state)],
                            es.eigenvectors[static_cast<size_t>(to_state)], kind);
    rec.strength = rec.amplitude_O * rec.amplitude_O;
    rec.ln_strength = rec.strength > 0.0 ? std::log(rec.strength) : minus_inf;
    return rec;
}

enum class series_mode { table4, full_rs };

inline const char* to_string(series_mode m) {
    return m == series_mode::table4 ? "table4" : "full_rs";
}

struct leading_strength {
    std::optional<int> power;  // nullopt: zero to the order cap ("none")
    rational coeff_exact;      // exact for T1; unused for T2
    double coeff = 0.0;        // binary64 view, meaningful for both operators
    series_mode mode = series_mode::table4;
};

namespace detail {

// T2 coefficients combine exact rationals with irrational sqrt weights, so
// zero detection for them is |coeff| < 1e-12; T1 zeros are exact.
inline constexpr double t2_zero_threshold = 1e-12;

// Leading-term vector of the reference-r eigenvector, windowed the way the
// printed table truncates its rows: interior references drop components whose
// leading power exceeds 4 on the ground side of the reference or 3 above it;
// end references (0 and dim-1) keep every component.
inline std::vector<leading_term> leading_vector_windowed(const model_spec& spec, int ref) {
    std::vector<leading_term> vec;
    vec.reserve(static_cast<size_t>(spec.dim));
    for (int j = 0; j < spec.dim; ++j) {
        if (j == ref) {
            vec.push_back({0, rational(1)});
            continue;
        }
        vec.push_back(path_leading(spec, ref, j));
    }
    const bool interior = ref != 0 && ref != spec.dim - 1;
    if (interior) {
        for (int j = 0; j < spec.dim; ++j) {
            auto& lt = vec[static_cast<size_t>(j)];
            if (!lt.power) continue;
            const int limit = j < ref ? 4 : 3;
            if (j != ref && *lt.power > limit) lt = {std::nullopt, rational()};
        }
    }
    return vec;
}

struct o_series_views {
    std::vector<rational> exact;  // valid for T1
    std::vector<double> real;     // always valid
};

inline o_series_views compose_monomials(const model_spec& spec, transition_kind kind,
                                        const std::vector<leading_term>& a,
                                        const std::vector<leading_term>& b, int order) {
    o_series_views out;
    out.exact.assign(static_cast<size_t>(order) + 1, rational());
    out.real.assign(static_cast<size_t>(order) + 1, 0.0);
    auto add = [&](const leading_term& x, const leading_term& y, double w) {
        if (!x.power || !y.power) return;
        const int p = *x.power + *y.power;
        if (p > order) return;
        const rational c = x.coeff * y.coeff;
        out.exact[static_cast<size_t>(p)] += c;
        out.real[static_cast<size_t>(p)] += w * c.to_double();
    };
    for (int i = 0; i + 1 < spec.dim; ++i) {
        const double w = link_weight(kind, i);
        add(a[static_cast<size_t>(i)], b[static_cast<size_t>(i + 1)], w);
        add(b[static_cast<size_t>(i)], a[static_cast<size_t>(i + 1)], w);
    }
    return out;
}

// Formal 1/sqrt of a rational series with constant term 1.
inline useries inv_sqrt_series(const useries& s) {
    const int cap = s.cap();
    useries q(cap);  // sqrt
    q[0] = 1;
    for (int k = 1; k <= cap; ++k) {
        rational acc = s[k];
        for (int j = 1; j < k; ++j) acc -= q[j] * q[k - j];
        q[k] = acc / rational(2);
    }
    useries r(cap);  // reciprocal of q
    r[0] = 1;
    for (int k = 1; k <= cap; ++k) {
        rational acc;
        for (int j = 1; j <= k; ++j) acc += q[j] * r[k - j];
        r[k] = -acc;
    }
    return r;
}

// Unit-normalized amplitude series: amplitudes scaled by 1/sqrt(sum_j amp_j^2).
inline std::vector<useries> unit_normalized(const series_state& st) {
    const int cap = st.energy.cap();
    useries norm2(cap);
    for (const auto& a : st.amplitudes) norm2 = norm2 + a * a;
    const useries inv = inv_sqrt_series(norm2);
    std::vector<useries> out;
    out.reserve(st.amplitudes.size());
    for (const auto& a : st.amplitudes) out.push_back(a * inv);
    return out;
}

inline o_series_views compose_series(const model_spec& spec, transition_kind kind,
                                     const std::vector<useries>& a,
                                     const std::vector<useries>& b, int order) {
    o_series_views out;
    out.exact.assign(static_cast<size_t>(order) + 1, rational());
    out.real.assign(static_cast<size_t>(order) + 1, 0.0);
    for (int i = 0; i + 1 < spec.dim; ++i) {
        const double w = link_weight(kind, i);
        useries conv = a[static_cast<size_t>(i)] * b[static_cast<size_t>(i + 1)] +
                       b[static_cast<size_t>(i)] * a[static_cast<size_t>(i + 1)];
        for (int k = 0; k <= order; ++k) {
            out.exact[static_cast<size_t>(k)] += conv[k];
            out.real[static_cast<size_t>(k)] += w * conv[k].to_double();
        }
    }
    return out;
}

inline leading_strength lowest_surviving(const o_series_views& o, transition_kind kind,
                                         series_mode mode, int order) {
    leading_strength ls;
    ls.mode = mode;
    for (int k = 0; k <= order; ++k) {
        if (kind == transition_kind::T1) {
            if (!o.exact[static_cast<size_t>(k)].is_zero()) {
                ls.power = k;
                ls.coeff_exact = o.exact[static_cast<size_t>(k)];
                ls.coeff = ls.coeff_exact.to_double();
                return ls;
            }
        } else if (std::abs(o.real[static_cast<size_t>(k)]) >= t2_zero_threshold) {
            ls.power = k;
            ls.coeff = o.real[static_cast<size_t>(k)];
            return ls;
        }
    }
    return ls;  // power = none, zero to the cap
}

}  // namespace detail

inline leading_strength strength_series(const model_spec& spec, transition_kind kind,
                                        int to_state, series_mode mode,
                                        int order = default_order_cap) {
    spec.validate();
    if (to_state < 1 || to_state >= spec.dim)
        throw std::invalid_argument("strength_series: to_state outside [1, dim)");
    if (order < 1 || order > default_order_cap)
        throw std::invalid_argument("strength_series: order outside [1, order cap]");

    if (mode == series_mode::table4) {
        const auto a = detail::leading_vector_windowed(spec, 0);
        const auto b = detail::leading_vector_windowed(spec, to_state);
        return detail::lowest_surviving(detail::compose_monomials(spec, kind, a, b, order),
                                        kind, mode, order);
    }
    const auto a = detail::unit_normalized(rs_series(spec, 0, order));
    const auto b = detail::unit_normalized(rs_series(spec, to_state, order));
    return detail::lowest_surviving(detail::compose_series(spec, kind, a, b, order), kind,
                                    mode, order);
}

struct table3_row {
    int n = 0;
    std::optional<int> power;   // m, "none" for the extinct transition
    rational A_exact;
    std::string A_expression;   // in terms of g_k = 1/k!
    double ln_O2 = 0.0;         // at u = 1e-4; -infinity marker when strength is zero
};

// The weak-coupling T1 strength table of the tridiagonal model (dim 11):
// leading power m, exact coefficient A, its g_k expression, and ln(O^2)
// evaluated as 2*(m*ln u + ln|A|) at u = 1e-4.
inline std::vector<table3_row> table3() {
    static constexpr std::array<const char*, 10> expressions = {
        "1",
        "-g2-g3",
        "g2^2-g3+g4",
        "-g4-g5",
        "g4-g3^2+g6",
        "-g5",
        "g4-g3^2-g5+g6",
        "-g5*g2+g6-g7",
        "g4^2-g5*g3+g6*g2-g7+g8",
        "0",
    };
    const model_spec spec = model_spec::tri();
    const double u = 1e-4;
    std::vector<table3_row> rows;
    for (int n = 1; n <= 10; ++n) {
        leading_strength ls =
            strength_series(spec, transition_kind::T1, n, series_mode::table4);
        table3_row row;
        row.n = n;
        row.power = ls.power;
        row.A_exact = ls.coeff_exact;
        row.A_expression = expressions[static_cast<size_t>(n - 1)];
        row.ln_O2 = ls.power
                        ? 2.0 * (*ls.power * std::log(u) + std::log(std::abs(ls.coeff)))
                        : minus_inf;
        rows.push_back(std::move(row));
    }
    return rows;
}

// Least-squares slope of ln|O| against ln u over a geometric list of coupling
// ratios; the numeric estimator of the leading power m.
inline double fit_power(const model_spec& spec, transition_kind kind, int to_state,
                        const std::vector<double>& u_list) {
    spec.validate();
    if (u_list.size() < 3)
        throw std::invalid_argument("fit_power: need at least 3 points");
    for (double u : u_list)
        if (!(u > 0.0) || u > 1e-2 || !std::isfinite(u))
            throw std::invalid_argument("fit_power: u values must lie in (0, 1e-2]");
    const double ratio = u_list[1] / u_list[0];
    if (std::abs(ratio - 1.0) < 1e-12)
        throw std::invalid_argument("fit_power: u values must be distinct");
    for (size_t i = 1; i + 1 < u_list.size(); ++i)
        if (std::abs(u_list[i + 1] / u_list[i] / ratio - 1.0) > 1e-9)
            throw std::invalid_argument("fit_power: u list must be geometric");

    std::vector<double> xs, ys;
    for (double u : u_list) {
        model_spec s = spec;
        s.coupling_v = u * s.spacing_E;
        strength_record rec = strength_numeric(s, kind, 0, to_state);
        if (rec.amplitude_O == 0.0)
            throw zero_strength_error(
                "fit_power: exactly zero strength at u = " + std::to_string(u) +
                " (exact cancellation); no power law to fit");
        xs.push_back(std::log(u));
        ys.push_back(std::log(std::abs(rec.amplitude_O)));
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace ladder
