#pragma once
// Banded ladder Hamiltonians: equally spaced diagonal E_n = n*E plus a uniform
// coupling v on a chosen set of band offsets. H = H0 + v*W.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ladder {

inline constexpr int max_dim = 64;  // dense storage + Jacobi stay simple below this

struct model_spec {
    int dim = 11;
    double spacing_E = 1.0;   // MeV, level spacing of the unperturbed diagonal
    double coupling_v = 0.1;  // MeV, uniform band coupling
    std::vector<int> offsets = {1};  // |i-j| values carrying the coupling

    static model_spec tri(int dim = 11, double E = 1.0, double v = 0.1) {
        return {dim, E, v, {1}};
    }
    static model_spec penta(int dim = 11, double E = 1.0, double v = 0.1) {
        return {dim, E, v, {1, 2}};
    }
    static model_spec allv(int dim = 11, double E = 1.0, double v = 0.1) {
        std::vector<int> offs;
        for (int o = 1; o < dim; ++o) offs.push_back(o);
        return {dim, E, v, std::move(offs)};
    }
    static model_spec custom(std::vector<int> offsets, int dim = 11, double E = 1.0,
                             double v = 0.1) {
        return {dim, E, v, std::move(offsets)};
    }

    double u() const { return coupling_v / spacing_E; }

    void validate() const {
        if (dim < 2) throw std::invalid_argument("model: dim must be at least 2");
        if (dim > max_dim) throw std::invalid_argument("model: dim exceeds dense cap 64");
        if (!(spacing_E > 0.0) || !std::isfinite(spacing_E))
            throw std::invalid_argument("model: spacing E must be positive and finite");
        if (!std::isfinite(coupling_v))
            throw std::invalid_argument("model: coupling v must be finite");
        if (offsets.empty()) throw std::invalid_argument("model: offsets must be nonempty");
        for (int o : offsets)
            if (o < 1 || o > dim - 1)
                throw std::invalid_argument("model: offset " + std::to_string(o) +
                                            " outside [1, dim-1]");
        auto sorted = offsets;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("model: duplicate offsets");
    }

    bool couples(int i, int j) const {
        int d = i > j ? i - j : j - i;
        return std::find(offsets.begin(), offsets.end(), d) != offsets.end();
    }
};

class sym_matrix {
public:
    explicit sym_matrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, 0.0) {
        if (dim < 1 || dim > max_dim)
            throw std::invalid_argument("sym_matrix: dim outside [1, 64]");
    }

    int dim() const { return dim_; }

    double at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    void set(int i, int j, double v) {  // keeps entries[i][j] == entries[j][i] exactly
        a_[static_cast<size_t>(i) * dim_ + j] = v;
        a_[static_cast<size_t>(j) * dim_ + i] = v;
    }

    double frobenius() const {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    const std::vector<double>& raw() const { return a_; }

private:
    int dim_;
    std::vector<double> a_;
};

inline sym_matrix build_hamiltonian(const model_spec& spec) {
    spec.validate();
    sym_matrix h(spec.dim);
    for (int i = 0; i < spec.dim; ++i) {
        h.set(i, i, i * spec.spacing_E);
        for (int o : spec.offsets)
            if (i + o < spec.dim) h.set(i, i + o, spec.coupling_v);
    }
    return h;
}

// H0 = diagonal part; W = 0/1 coupling pattern; H = H0 + v*W entrywise.
inline std::pair<sym_matrix, sym_matrix> split(const model_spec& spec) {
    spec.validate();
    sym_matrix h0(spec.dim), w(spec.dim);
    for (int i = 0; i < spec.dim; ++i) {
        h0.set(i, i, i * spec.spacing_E);
        for (int o : spec.offsets)
            if (i + o < spec.dim) w.set(i, i + o, 1.0);
    }
    return {h0, w};
}

}  // namespace ladder
