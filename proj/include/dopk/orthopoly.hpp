#ifndef DOPK_ORTHOPOLY_HPP
#define DOPK_ORTHOPOLY_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dopk/grid.hpp"
#include "dopk/scalar.hpp"

namespace dopk {

/// The orthogonal polynomial system of a positive weight on a finite grid:
/// value tables at the nodes, leading coefficients, squared norms, and the
/// monic three-term recurrence pi_{i+1}(x) = (x - alpha_i) pi_i(x) - beta_i pi_{i-1}(x).
///
/// values[i][k] = P_i(x_k); sum_k P_i(x_k) P_j(x_k) w_k = delta_ij p_i.
template <ScalarField T>
struct OrthoSystem {
    Grid<T> grid;
    WeightTable<T> weight;
    std::vector<std::vector<T>> values;
    std::vector<T> leading; // a_i
    std::vector<T> norms;   // p_i > 0
    std::vector<T> alphas;  // monic recurrence, i = 0..M-1
    std::vector<T> betas;   // betas[0] = 0, betas[i] = monic p_i / p_{i-1}

    std::size_t degree_count() const { return values.size(); } // M+1
};

namespace detail {

// Stieltjes procedure on the discrete inner product <f,g> = sum f g w.
// Returns the monic system.
template <ScalarField T>
OrthoSystem<T> stieltjes_monic(const Grid<T>& g, const WeightTable<T>& w) {
    const std::size_t n = g.size();
    std::vector<std::vector<T>> values(n, std::vector<T>(n, T{}));
    std::vector<T> norms(n, T{});
    std::vector<T> alphas, betas;

    for (std::size_t k = 0; k < n; ++k) values[0][k] = T{1};
    for (std::size_t k = 0; k < n; ++k) norms[0] += w.value(k);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        T weighted_mean{};
        for (std::size_t k = 0; k < n; ++k)
            weighted_mean += g.point(k) * values[i][k] * values[i][k] * w.value(k);
        const T alpha = weighted_mean / norms[i];
        const T beta = (i == 0) ? T{} : norms[i] / norms[i - 1];
        alphas.push_back(alpha);
        betas.push_back(beta);
        for (std::size_t k = 0; k < n; ++k) {
            T next = (g.point(k) - alpha) * values[i][k];
            if (i > 0) next -= beta * values[i - 1][k];
            values[i + 1][k] = next;
        }
        for (std::size_t k = 0; k < n; ++k)
            norms[i + 1] += values[i + 1][k] * values[i + 1][k] * w.value(k);
    }

    return OrthoSystem<T>{g, w, std::move(values), std::vector<T>(n, T{1}),
                          std::move(norms), std::move(alphas), std::move(betas)};
}

} // namespace detail

/// Monic orthogonal system (a_i = 1).
template <ScalarField T>
OrthoSystem<T> orthogonalize(const Grid<T>& g, const WeightTable<T>& w) {
    if (!(w.grid() == g)) throw std::invalid_argument("orthogonalize: weight is on a different grid");
    return detail::stieltjes_monic(g, w);
}

/// Orthogonal system rescaled to the requested leading coefficients.
template <ScalarField T>
OrthoSystem<T> orthogonalize(const Grid<T>& g, const WeightTable<T>& w,
                             const std::vector<T>& leading) {
    OrthoSystem<T> s = orthogonalize(g, w);
    if (leading.size() != s.degree_count())
        throw std::invalid_argument("orthogonalize: need one leading coefficient per degree");
    for (std::size_t i = 0; i < leading.size(); ++i) {
        if (leading[i].is_zero())
            throw std::invalid_argument("orthogonalize: leading coefficient must be nonzero");
        for (T& v : s.values[i]) v *= leading[i];
        s.norms[i] *= leading[i] * leading[i];
        s.leading[i] = leading[i];
    }
    return s;
}

/// P_i at an arbitrary point, through the stored monic recurrence.
template <ScalarField T>
T evaluate(const OrthoSystem<T>& s, std::size_t i, const T& x) {
    if (i >= s.degree_count()) throw std::out_of_range("evaluate: polynomial index out of range");
    T prev{};   // pi_{-1}
    T cur{1};   // pi_0
    for (std::size_t j = 0; j < i; ++j) {
        T next = (x - s.alphas[j]) * cur - s.betas[j] * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return s.leading[i] * cur;
}

/// Christoffel-Darboux closed form of the partial sum
///   S_m(x,y) = sum_{i<m} P_i(x) P_i(y) / p_i
/// at an off-diagonal node pair (x, y) = (x_j, x_k), j != k:
///   S_m = (a_{m-1} / (a_m p_{m-1})) (P_m(x)P_{m-1}(y) - P_{m-1}(x)P_m(y)) / (x - y).
/// Weight prefactors (sqrt(w w) or the conjugated w) are applied by the
/// kernel assembly, keeping this value rational-exact.
template <ScalarField T>
T cd_kernel_offdiag(const OrthoSystem<T>& s, std::size_t m, std::size_t j, std::size_t k) {
    if (m < 1 || m > s.grid.max_degree())
        throw std::invalid_argument("cd_kernel_offdiag: need 1 <= m <= M");
    if (j == k) throw std::invalid_argument("cd_kernel_offdiag: node pair must be off-diagonal");
    const T& x = s.grid.point(j);
    const T& y = s.grid.point(k);
    const T numer = s.values[m][j] * s.values[m - 1][k] - s.values[m - 1][j] * s.values[m][k];
    return s.leading[m - 1] / (s.leading[m] * s.norms[m - 1]) * numer / (x - y);
}

/// Elementary symmetric functions of the grid points: full[s] = E_s for
/// s = 0..M+1, and omitted-point values e_s(x_0,...,^x_m,...,x_M) via the
/// alternating recurrence f_s = E_s - x_m f_{s-1} in nested form.
template <ScalarField T>
class SymmetricTable {
public:
    explicit SymmetricTable(const Grid<T>& g) : points_(g.points()) {
        const std::size_t n = points_.size();
        full_.assign(n + 1, T{});
        full_[0] = T{1};
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t s = k + 1; s-- > 0;)
                full_[s + 1] += points_[k] * full_[s];
    }

    const std::vector<T>& full() const { return full_; }
    const T& full(std::size_t s) const { return full_.at(s); }

    /// e_s over the points with x_m omitted, s = 0..M.
    std::vector<T> omitted(std::size_t m) const {
        const T& xm = points_.at(m);
        std::vector<T> f(points_.size(), T{});
        f[0] = T{1};
        for (std::size_t s = 1; s < f.size(); ++s) f[s] = full_[s] - xm * f[s - 1];
        return f;
    }

private:
    std::vector<T> points_;
    std::vector<T> full_;
};

template <ScalarField T>
SymmetricTable<T> elementary_symmetric(const Grid<T>& g) {
    return SymmetricTable<T>(g);
}

/// All M+1 monomial coefficients (ascending degree) of the unique
/// interpolant of degree <= M through (x_k, values_k):
///   coeff of x^n = (-1)^(M-n) sum_m values_m / pi_m * e_{M-n}(omitting m).
template <ScalarField T>
std::vector<T> interpolation_coefficients(const Grid<T>& g, const std::vector<T>& values) {
    const std::size_t n = g.size();
    if (values.size() != n)
        throw std::invalid_argument("interpolation_coefficients: need one value per node");
    const SymmetricTable<T> table(g);
    std::vector<T> coeffs(n, T{});
    for (std::size_t m = 0; m < n; ++m) {
        const T scaled = values[m] / g.node_product(m);
        if (scaled.is_zero()) continue;
        const std::vector<T> e = table.omitted(m);
        for (std::size_t deg = 0; deg < n; ++deg)
            coeffs[deg] += scaled * e[n - 1 - deg];
    }
    for (std::size_t deg = 0; deg < n; ++deg)
        if ((n - 1 - deg) % 2 == 1) coeffs[deg] = -coeffs[deg];
    return coeffs;
}

} // namespace dopk

#endif // DOPK_ORTHOPOLY_HPP
