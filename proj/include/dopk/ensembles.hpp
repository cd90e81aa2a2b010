#ifndef DOPK_ENSEMBLES_HPP
#define DOPK_ENSEMBLES_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "dopk/duality.hpp"
#include "dopk/matrix.hpp"
#include "dopk/orthopoly.hpp"
#include "dopk/report.hpp"

namespace dopk {

namespace subsets {

/// Visits every m-subset of {0..n-1} in colexicographic order.
template <class F>
void for_each_colex(std::size_t n, std::size_t m, F&& f) {
    if (m > n) return;
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (m == 0) {
        f(static_cast<const std::vector<std::size_t>&>(idx));
        return;
    }
    while (true) {
        f(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t j = 0;
        while (j < m) {
            const std::size_t limit = (j + 1 < m) ? idx[j + 1] : n;
            if (idx[j] + 1 < limit) break;
            ++j;
        }
        if (j == m) return;
        ++idx[j];
        for (std::size_t t = 0; t < j; ++t) idx[t] = t;
    }
}

inline std::uint64_t binomial_u64(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact: r*(n-k+i) is divisible by i here
    }
    return r;
}

/// Position of an ascending m-subset in colexicographic order.
inline std::size_t colex_rank(const std::vector<std::size_t>& idx) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < idx.size(); ++j)
        r += static_cast<std::size_t>(binomial_u64(idx[j], j + 1));
    return r;
}

inline void validate_ascending(const std::vector<std::size_t>& idx, std::size_t n,
                               const char* what) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= n) throw std::out_of_range(std::string(what) + ": index out of range");
        if (j > 0 && !(idx[j - 1] < idx[j]))
            throw std::invalid_argument(std::string(what) + ": indices must be strictly ascending");
    }
}

inline std::vector<std::size_t> complement(const std::vector<std::size_t>& idx, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(n - idx.size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

inline std::string to_string(const std::vector<std::size_t>& idx) {
    std::string s = "{";
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(idx[j]);
    }
    return s + "}";
}

} // namespace subsets

/// An exact probability measure on the m-element subsets of a grid,
/// stored densely in colexicographic order of the index tuples.
template <ScalarField T>
class SubsetMeasure {
public:
    SubsetMeasure(Grid<T> grid, std::size_t m, std::vector<T> probs)
        : grid_(std::move(grid)), m_(m), probs_(std::move(probs)) {
        const std::uint64_t expected = subsets::binomial_u64(grid_.size(), m_);
        if (probs_.size() != expected)
            throw std::invalid_argument("SubsetMeasure: probability table has wrong size");
        T total{};
        for (const T& p : probs_) {
            if (p.sign() < 0) throw std::invalid_argument("SubsetMeasure: negative probability");
            total += p;
        }
        if constexpr (scalar_traits<T>::is_exact) {
            if (!(total == T{1}))
                throw std::invalid_argument("SubsetMeasure: probabilities must sum to 1");
        }
    }

    const Grid<T>& grid() const { return grid_; }
    std::size_t order() const { return m_; }
    std::size_t support_size() const { return probs_.size(); }

    const T& prob(const std::vector<std::size_t>& subset) const {
        if (subset.size() != m_)
            throw std::invalid_argument("SubsetMeasure: subset has wrong cardinality");
        subsets::validate_ascending(subset, grid_.size(), "SubsetMeasure");
        return probs_[subsets::colex_rank(subset)];
    }

    template <class F>
    void for_each(F&& f) const {
        std::size_t r = 0;
        subsets::for_each_colex(grid_.size(), m_,
                                [&](const std::vector<std::size_t>& idx) { f(idx, probs_[r++]); });
    }

private:
    Grid<T> grid_;
    std::size_t m_;
    std::vector<T> probs_;
};

/// The m-point orthogonal polynomial ensemble of a weight: probability of a
/// subset proportional to the squared Vandermonde of its points times the
/// product of their weights. Normalized by exhaustive enumeration.
template <ScalarField T>
SubsetMeasure<T> ensemble(const Grid<T>& g, const WeightTable<T>& w, std::size_t m,
                          std::uint64_t budget = 1000000) {
    if (!(w.grid() == g)) throw std::invalid_argument("ensemble: weight is on a different grid");
    if (m < 1 || m > g.max_degree())
        throw std::invalid_argument("ensemble: cardinality must satisfy 1 <= m <= M");
    const std::uint64_t count = subsets::binomial_u64(g.size(), m);
    if (count > budget)
        throw budget_exceeded_error("ensemble: " + std::to_string(count) +
                                    " subsets exceed budget " + std::to_string(budget));
    std::vector<T> probs;
    probs.reserve(count);
    T total{};
    subsets::for_each_colex(g.size(), m, [&](const std::vector<std::size_t>& idx) {
        T p{1};
        for (std::size_t a = 0; a < idx.size(); ++a) {
            p *= w.value(idx[a]);
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                const T d = g.point(idx[b]) - g.point(idx[a]);
                p *= d * d;
            }
        }
        total += p;
        probs.push_back(std::move(p));
    });
    for (T& p : probs) p /= total;
    return SubsetMeasure<T>(g, m, std::move(probs));
}

/// Pushforward under set complement: a measure on (M+1-m)-subsets with
/// mu_c(A) = mu(X \ A). An involution.
template <ScalarField T>
SubsetMeasure<T> complement_measure(const SubsetMeasure<T>& mu) {
    const std::size_t n = mu.grid().size();
    const std::size_t mc = n - mu.order();
    std::vector<T> probs;
    probs.reserve(subsets::binomial_u64(n, mc));
    subsets::for_each_colex(n, mc, [&](const std::vector<std::size_t>& idx) {
        probs.push_back(mu.prob(subsets::complement(idx, n)));
    });
    return SubsetMeasure<T>(mu.grid(), mc, std::move(probs));
}

/// rho_n(A | mu) = sum of mu(B) over all B containing A: the probability
/// that the random subset covers A. Zero when |A| exceeds the order.
template <ScalarField T>
T correlation_bruteforce(const SubsetMeasure<T>& mu, const std::vector<std::size_t>& A) {
    subsets::validate_ascending(A, mu.grid().size(), "correlation_bruteforce");
    T sum{};
    if (A.size() > mu.order()) return sum;
    mu.for_each([&](const std::vector<std::size_t>& B, const T& p) {
        std::size_t j = 0;
        for (std::size_t i = 0; i < B.size() && j < A.size(); ++i)
            if (B[i] == A[j]) ++j;
        if (j == A.size()) sum += p;
    });
    return sum;
}

/// Weighting of the correlation kernel. The symmetric form carries
/// sqrt(w(x)w(y)) and needs the float backend; the conjugated form carries
/// w(x) on the left only, stays rational-exact, and has the same principal
/// minors (it is a diagonal conjugate of the symmetric form).
enum class KernelForm { Conjugated, Symmetric };

template <ScalarField T>
struct KernelMatrix {
    Grid<T> grid;
    std::size_t order; // m: trace and rank of the projection
    KernelForm form;
    Matrix<T> entries; // (M+1) x (M+1)
};

/// K^(m) over the system's weight: entries w-prefactor * sum_{i<m}
/// P_i(x_j) P_i(x_k) / p_i. Allows the full range 0 <= m <= M+1; m = M+1
/// gives the identity (completeness), m = 0 the zero matrix.
template <ScalarField T>
KernelMatrix<T> kernel(const OrthoSystem<T>& s, std::size_t m,
                       KernelForm form = KernelForm::Conjugated) {
    const std::size_t n = s.grid.size();
    if (m > n) throw std::invalid_argument("kernel: need 0 <= m <= M+1");

    // Term order (product before the norm division) is identical for (j,k)
    // and (k,j), so the sum matrix is symmetric even under float rounding.
    Matrix<T> S(n, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                S(j, k) += s.values[i][j] * s.values[i][k] / s.norms[i];

    Matrix<T> K(n, n);
    if (form == KernelForm::Conjugated) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) K(j, k) = s.weight.value(j) * S(j, k);
    } else {
        if constexpr (scalar_traits<T>::is_exact) {
            throw std::invalid_argument("kernel: symmetric form requires the float backend");
        } else {
            std::vector<T> root(n, T{});
            for (std::size_t j = 0; j < n; ++j) root[j] = sqrt(s.weight.value(j));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) K(j, k) = root[j] * root[k] * S(j, k);
        }
    }
    return KernelMatrix<T>{s.grid, m, form, std::move(K)};
}

/// Principal minor of the kernel on the rows/columns A; the n-point
/// correlation function of the matching ensemble.
template <ScalarField T>
T correlation_determinantal(const KernelMatrix<T>& K, const std::vector<std::size_t>& A) {
    subsets::validate_ascending(A, K.grid.size(), "correlation_determinantal");
    return det(K.entries.principal_submatrix(A));
}

/// Complementation: I - K, the kernel of the complement measure.
template <ScalarField T>
KernelMatrix<T> complement_kernel(const KernelMatrix<T>& K) {
    const std::size_t n = K.grid.size();
    return KernelMatrix<T>{K.grid, n - K.order, K.form,
                           Matrix<T>::identity(n) - K.entries};
}

/// Measure identity: the m-point ensemble of u equals the complement of the
/// (M-m+1)-point ensemble of the dual weight, subset by subset.
template <ScalarField T>
VerificationReport verify_measure_identity(const Grid<T>& g, const WeightTable<T>& u,
                                           std::size_t m, std::uint64_t budget = 1000000,
                                           const T& tol = T{}) {
    const std::size_t M = g.max_degree();
    if (m < 1 || m > M) throw std::invalid_argument("verify_measure_identity: need 1 <= m <= M");
    const WeightTable<T> v = dual_weight(g, u);
    const SubsetMeasure<T> primal = ensemble(g, u, m, budget);
    const SubsetMeasure<T> dual_complement =
        complement_measure(ensemble(g, v, M - m + 1, budget));

    VerificationReport report("measure identity m=" + std::to_string(m));
    ClauseTracker<T> clause("P_u^(m) equals complement of P_v^(M-m+1)");
    primal.for_each([&](const std::vector<std::size_t>& A, const T& p) {
        const T q = dual_complement.prob(A);
        if constexpr (scalar_traits<T>::is_exact)
            clause.check_exact(p, q, subsets::to_string(A));
        else
            clause.check_tol(p, q, tol, subsets::to_string(A));
    });
    report.add_clause(clause.finish());
    return report;
}

/// Kernel duality: K_u^(m) = D (I - K_v^(M-m+1)) D with D = diag(eps).
///
/// Exact backend: sqrt-free equivalent on the conjugated forms: equal
/// diagonals, equal products of opposite off-diagonal entries, the eps_j
/// eps_k sign pattern, and equality of every principal minor. Float
/// backend: the literal entrywise identity on the symmetric forms within
/// the given relative tolerance.
template <ScalarField T>
VerificationReport verify_kernel_duality(const DualPair<T>& pair, std::size_t m, const T& tol = T{}) {
    const Grid<T>& g = pair.primal.grid;
    const std::size_t n = g.size();
    if (m > n - 1) throw std::invalid_argument("verify_kernel_duality: need 0 <= m <= M");

    VerificationReport report("kernel duality m=" + std::to_string(m));

    if constexpr (scalar_traits<T>::is_exact) {
        const KernelMatrix<T> Ku = kernel(pair.primal, m, KernelForm::Conjugated);
        const KernelMatrix<T> Kv = kernel(pair.dual, n - m, KernelForm::Conjugated);
        const KernelMatrix<T> Kvc = complement_kernel(Kv);

        if (m == 0) {
            ClauseTracker<T> complete("completeness: K_v^(M+1) = I");
            const Matrix<T> I = Matrix<T>::identity(n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    complete.check_exact(Kv.entries(j, k), I(j, k), detail::at_ik(j, k));
            report.add_clause(complete.finish());
        }

        ClauseTracker<T> diag("diagonal entries agree");
        for (std::size_t k = 0; k < n; ++k)
            diag.check_exact(Ku.entries(k, k), Kvc.entries(k, k), "(k=" + std::to_string(k) + ")");
        report.add_clause(diag.finish());

        ClauseTracker<T> squares("off-diagonal entries agree up to sign");
        ClauseTracker<T> signs("off-diagonal sign pattern eps_j eps_k");
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                squares.check_exact(Ku.entries(j, k) * Ku.entries(k, j),
                                    Kvc.entries(j, k) * Kvc.entries(k, j), detail::at_ik(j, k));
                const int target = g.epsilon(j) * g.epsilon(k) * Kvc.entries(j, k).sign();
                signs.check_that(Ku.entries(j, k).sign() == target, detail::at_ik(j, k));
            }
        }
        report.add_clause(squares.finish());
        report.add_clause(signs.finish());

        ClauseTracker<T> minors("all principal minors agree");
        for (std::size_t size = 1; size <= n; ++size) {
            subsets::for_each_colex(n, size, [&](const std::vector<std::size_t>& A) {
                minors.check_exact(det(Ku.entries.principal_submatrix(A)),
                                   det(Kvc.entries.principal_submatrix(A)),
                                   subsets::to_string(A));
            });
        }
        report.add_clause(minors.finish());
    } else {
        const KernelMatrix<T> Ku = kernel(pair.primal, m, KernelForm::Symmetric);
        const KernelMatrix<T> Kv = kernel(pair.dual, n - m, KernelForm::Symmetric);
        ClauseTracker<T> entry("matrix identity K_u = D(I - K_v)D");
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                T rhs = (j == k ? T{1} : T{}) - Kv.entries(j, k);
                if (g.epsilon(j) * g.epsilon(k) < 0) rhs = -rhs;
                entry.check_tol(Ku.entries(j, k), rhs, tol, detail::at_ik(j, k));
            }
        }
        report.add_clause(entry.finish());
    }
    return report;
}

} // namespace dopk

#endif // DOPK_ENSEMBLES_HPP
