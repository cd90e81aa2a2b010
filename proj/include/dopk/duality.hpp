#ifndef DOPK_DUALITY_HPP
#define DOPK_DUALITY_HPP

#include <cstddef>
#include <string>

#include "dopk/orthopoly.hpp"
#include "dopk/report.hpp"

namespace dopk {

/// An orthogonal system over u together with the system over the dual
/// weight v_k = 1/(u_k pi_k^2), normalized so that the dual leading
/// coefficients are b_i = p_{M-i} / a_{M-i}. Under that normalization the
/// two systems satisfy, at every node,
///   Q_{M-i}(x_k) = pi_k P_i(x_k) u_k,        (sqrt-free form)
///   P_i(x_k) sqrt(u_k) = eps_k Q_{M-i}(x_k) sqrt(v_k),
///   a_i b_{M-i} = p_i = q_{M-i}.
template <ScalarField T>
struct DualPair {
    OrthoSystem<T> primal; // over u
    OrthoSystem<T> dual;   // over v, leading b_i = p_{M-i}/a_{M-i}
};

/// Builds the dual system independently (orthogonalization over the dual
/// weight, then rescaling to the b_i normalization), so the duality
/// relations above are a genuine cross-check rather than a definition.
template <ScalarField T>
DualPair<T> dual_system(const OrthoSystem<T>& primal) {
    const Grid<T>& g = primal.grid;
    const std::size_t n = g.size();
    const WeightTable<T> v = dual_weight(g, primal.weight);
    std::vector<T> b(n, T{});
    for (std::size_t i = 0; i < n; ++i)
        b[i] = primal.norms[n - 1 - i] / primal.leading[n - 1 - i];
    OrthoSystem<T> dual = orthogonalize(g, v, b);
    return DualPair<T>{primal, std::move(dual)};
}

namespace detail {

inline std::string at_ik(std::size_t i, std::size_t k) {
    return "(i=" + std::to_string(i) + ",k=" + std::to_string(k) + ")";
}

} // namespace detail

/// Checks every clause of the duality relation on the pair. On the exact
/// backend all residuals must be identically zero; on the float backend the
/// comparisons use the supplied relative tolerance and additionally include
/// the literal square-root form with the sign pattern eps_k.
template <ScalarField T>
VerificationReport verify_duality(const DualPair<T>& pair, const T& tol = T{}) {
    constexpr bool exact = scalar_traits<T>::is_exact;
    const OrthoSystem<T>& P = pair.primal;
    const OrthoSystem<T>& Q = pair.dual;
    const Grid<T>& g = P.grid;
    const std::size_t n = g.size();
    const std::size_t M = n - 1;

    VerificationReport report("duality");

    ClauseTracker<T> nodal("nodal identity Q_{M-i}(x_k) = pi_k P_i(x_k) u_k");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const T lhs = Q.values[M - i][k];
            const T rhs = g.node_product(k) * P.values[i][k] * P.weight.value(k);
            if constexpr (exact)
                nodal.check_exact(lhs, rhs, detail::at_ik(i, k));
            else
                nodal.check_tol(lhs, rhs, tol, detail::at_ik(i, k));
        }
    }
    report.add_clause(nodal.finish());

    if constexpr (!exact) {
        ClauseTracker<T> root("sqrt identity P_i sqrt(u) = eps Q_{M-i} sqrt(v)");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const T lhs = P.values[i][k] * sqrt(P.weight.value(k));
                T rhs = Q.values[M - i][k] * sqrt(Q.weight.value(k));
                if (g.epsilon(k) < 0) rhs = -rhs;
                root.check_tol(lhs, rhs, tol, detail::at_ik(i, k));
            }
        }
        report.add_clause(root.finish());
    }

    ClauseTracker<T> norms("norm duality q_i = p_{M-i}");
    ClauseTracker<T> coeffs("coefficient identity a_i b_{M-i} = p_i = q_{M-i}");
    for (std::size_t i = 0; i < n; ++i) {
        const std::string where = "(i=" + std::to_string(i) + ")";
        const T product = P.leading[i] * Q.leading[M - i];
        if constexpr (exact) {
            norms.check_exact(Q.norms[i], P.norms[M - i], where);
            coeffs.check_exact(product, P.norms[i], where);
            coeffs.check_exact(product, Q.norms[M - i], where);
        } else {
            norms.check_tol(Q.norms[i], P.norms[M - i], tol, where);
            coeffs.check_tol(product, P.norms[i], tol, where);
            coeffs.check_tol(product, Q.norms[M - i], tol, where);
        }
    }
    report.add_clause(norms.finish());
    report.add_clause(coeffs.finish());

    return report;
}

} // namespace dopk

#endif // DOPK_DUALITY_HPP
