#ifndef DOPK_CLASSICAL_HPP
#define DOPK_CLASSICAL_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dopk/duality.hpp"
#include "dopk/hypergeometric.hpp"
#include "dopk/orthopoly.hpp"
#include "dopk/report.hpp"

namespace dopk {

/// The grid {0, 1, ..., n_max}.
inline Grid<Rational> integer_grid(long n_max) {
    std::vector<Rational> pts;
    pts.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long x = 0; x <= n_max; ++x) pts.emplace_back(x);
    return Grid<Rational>(std::move(pts));
}

// ---------------------------------------------------------------------------
// Krawtchouk family: binomial weight on {0..N}.
// ---------------------------------------------------------------------------

struct KrawtchoukParams {
    Rational p;
    long support_max; // weight lives on {0..support_max}

    KrawtchoukParams(Rational p_, long support_max_)
        : p(std::move(p_)), support_max(support_max_) {
        if (!(Rational(0) < p && p < Rational(1)))
            throw std::invalid_argument("KrawtchoukParams: need 0 < p < 1");
        if (support_max < 1) throw std::invalid_argument("KrawtchoukParams: need N >= 1");
    }
};

inline Rational krawtchouk_weight_value(const KrawtchoukParams& params, long x) {
    const long N = params.support_max;
    return binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(x)) *
           pow_int(params.p, x) * pow_int(Rational(1) - params.p, N - x);
}

inline WeightTable<Rational> krawtchouk_weight(const KrawtchoukParams& params) {
    std::vector<Rational> w;
    for (long x = 0; x <= params.support_max; ++x) w.push_back(krawtchouk_weight_value(params, x));
    return WeightTable<Rational>(integer_grid(params.support_max), std::move(w));
}

/// K_n(x; p, N) = 2F1(-n, -x; -N; 1/p).
inline Rational krawtchouk_value(long n, long x, const KrawtchoukParams& params) {
    const long N = params.support_max;
    if (n < 0 || n > N || x < 0 || x > N)
        throw std::out_of_range("krawtchouk_value: need 0 <= n, x <= N");
    return eval_terminating(hyp2f1(Rational(-n), Rational(-x), Rational(-N), Rational(1) / params.p));
}

struct OrthoData {
    Rational leading; // a_n
    Rational norm;    // p_n
};

inline OrthoData krawtchouk_data(long n, const KrawtchoukParams& params) {
    const long N = params.support_max;
    if (n < 0 || n > N) throw std::out_of_range("krawtchouk_data: need 0 <= n <= N");
    const Rational binom = binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(n));
    const Rational sign(n % 2 == 0 ? 1 : -1);
    OrthoData d;
    d.leading = sign / (binom * factorial(static_cast<unsigned long>(n)) * pow_int(params.p, n));
    d.norm = pow_int((Rational(1) - params.p) / params.p, n) / binom;
    return d;
}

/// The system over the Krawtchouk weight normalized to the classical
/// leading coefficients, built by the generic recurrence.
inline OrthoSystem<Rational> krawtchouk_system(const KrawtchoukParams& params) {
    const Grid<Rational> g = integer_grid(params.support_max);
    const WeightTable<Rational> u = krawtchouk_weight(params);
    std::vector<Rational> leading;
    for (long n = 0; n <= params.support_max; ++n)
        leading.push_back(krawtchouk_data(n, params).leading);
    return orthogonalize(g, u, leading);
}

/// Checks the parameter reflection p -> 1-p, n -> N-n:
///   K_n(x;p,N) = (-1)^x ((1-p)/p)^x K_{N-n}(x;1-p,N),
/// plus the Pfaff-transformation route, the closed form of the dual weight,
/// the dual normalization constant (-1)^N (1-p)^N N!, and agreement of the
/// closed-form tables with the generic orthogonalization.
inline VerificationReport verify_krawtchouk_reflection(const KrawtchoukParams& params) {
    const long N = params.support_max;
    const KrawtchoukParams reflected(Rational(1) - params.p, N);
    const Rational ratio = (Rational(1) - params.p) / params.p;

    VerificationReport report("krawtchouk reflection identity");

    ClauseTracker<Rational> identity("K_n(x;p,N) = (-1)^x ((1-p)/p)^x K_{N-n}(x;1-p,N)");
    ClauseTracker<Rational> pfaff("Pfaff transformation reproduces K_n(x;p,N)");
    for (long n = 0; n <= N; ++n) {
        for (long x = 0; x <= N; ++x) {
            const std::string where = "(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")";
            const Rational lhs = krawtchouk_value(n, x, params);
            Rational rhs = pow_int(ratio, x) * krawtchouk_value(N - n, x, reflected);
            if (x % 2 == 1) rhs = -rhs;
            identity.check_exact(lhs, rhs, where);

            const Rational via_pfaff = pfaff_transform_rhs(Rational(-n), Rational(-x),
                                                           Rational(-N), Rational(1) / params.p);
            pfaff.check_exact(via_pfaff, lhs, where);
        }
    }
    report.add_clause(identity.finish());
    report.add_clause(pfaff.finish());

    const Grid<Rational> g = integer_grid(N);
    const WeightTable<Rational> u = krawtchouk_weight(params);
    const WeightTable<Rational> v = dual_weight(g, u);
    const Rational dual_scale =
        Rational(1) / (factorial(static_cast<unsigned long>(N)) *
                       factorial(static_cast<unsigned long>(N)) *
                       pow_int(params.p * (Rational(1) - params.p), N));
    // Closed form: binom(N,x)(1-p)^x p^(N-x) / (N!^2 (p(1-p))^N); the binomial
    // factor is the reflected Krawtchouk weight.
    ClauseTracker<Rational> dual_closed("dual weight equals its closed form");
    for (long x = 0; x <= N; ++x)
        dual_closed.check_exact(v.value(static_cast<std::size_t>(x)),
                                dual_scale * krawtchouk_weight_value(reflected, x),
                                "(x=" + std::to_string(x) + ")");
    report.add_clause(dual_closed.finish());

    const OrthoSystem<Rational> primal = krawtchouk_system(params);
    const DualPair<Rational> pair = dual_system(primal);
    Rational constant = pow_int(Rational(1) - params.p, N) * factorial(static_cast<unsigned long>(N));
    if (N % 2 == 1) constant = -constant;
    report.add_detail("dual_normalization_constant", constant.to_string());
    ClauseTracker<Rational> normalization("dual system equals (-1)^N (1-p)^N N! K_n(x;1-p,N)");
    for (long n = 0; n <= N; ++n)
        for (long x = 0; x <= N; ++x)
            normalization.check_exact(
                pair.dual.values[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)],
                constant * krawtchouk_value(n, x, reflected),
                "(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")");
    report.add_clause(normalization.finish());

    ClauseTracker<Rational> generic("closed-form tables match the generic orthogonalization");
    for (long n = 0; n <= N; ++n) {
        const OrthoData d = krawtchouk_data(n, params);
        generic.check_exact(primal.norms[static_cast<std::size_t>(n)], d.norm,
                            "(norm n=" + std::to_string(n) + ")");
        for (long x = 0; x <= N; ++x)
            generic.check_exact(primal.values[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)],
                                krawtchouk_value(n, x, params),
                                "(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")");
    }
    report.add_clause(generic.finish());

    return report;
}

// ---------------------------------------------------------------------------
// Hahn family on {0..N}.
// ---------------------------------------------------------------------------

enum class HahnBranch { Positive, Signed };

struct HahnParams {
    Rational alpha;
    Rational beta;
    long support_max;
    HahnBranch branch;

    HahnParams(Rational alpha_, Rational beta_, long support_max_)
        : alpha(std::move(alpha_)), beta(std::move(beta_)), support_max(support_max_) {
        if (support_max < 1) throw std::invalid_argument("HahnParams: need N >= 1");
        const Rational minus_one(-1), minus_n(-support_max);
        if (alpha > minus_one && beta > minus_one)
            branch = HahnBranch::Positive;
        else if (alpha < minus_n && beta < minus_n)
            branch = HahnBranch::Signed;
        else
            throw std::invalid_argument("HahnParams: need alpha,beta > -1 or alpha,beta < -N");
    }

    /// Parameters of the reflected family (alpha,beta) -> (-beta-N-1,-alpha-N-1);
    /// maps the positive branch onto the signed branch and back.
    HahnParams reflected() const {
        const Rational shift(-support_max - 1);
        return HahnParams(shift - beta, shift - alpha, support_max);
    }
};

/// binom(alpha+x, x) binom(beta+N-x, N-x) as Pochhammer quotients; valid on
/// both branches (on the signed branch its sign is (-1)^N).
inline Rational hahn_weight_value(const HahnParams& params, long x) {
    const long N = params.support_max;
    return pochhammer(params.alpha + Rational(1), static_cast<unsigned long>(x)) /
           factorial(static_cast<unsigned long>(x)) *
           pochhammer(params.beta + Rational(1), static_cast<unsigned long>(N - x)) /
           factorial(static_cast<unsigned long>(N - x));
}

inline WeightTable<Rational> hahn_weight(const HahnParams& params) {
    if (params.branch != HahnBranch::Positive)
        throw std::invalid_argument("hahn_weight: positive branch required for a weight table");
    std::vector<Rational> w;
    for (long x = 0; x <= params.support_max; ++x) w.push_back(hahn_weight_value(params, x));
    return WeightTable<Rational>(integer_grid(params.support_max), std::move(w));
}

/// H_n(x; alpha, beta, N) = 3F2(-n, n+alpha+beta+1, -x; alpha+1, -N; 1).
inline Rational hahn_value(long n, long x, const HahnParams& params) {
    const long N = params.support_max;
    if (n < 0 || n > N || x < 0 || x > N)
        throw std::out_of_range("hahn_value: need 0 <= n, x <= N");
    return eval_terminating(hyp3f2(Rational(-n), Rational(n) + params.alpha + params.beta + Rational(1),
                                   Rational(-x), params.alpha + Rational(1), Rational(-N)));
}

inline OrthoData hahn_data(long n, const HahnParams& params) {
    const long N = params.support_max;
    if (n < 0 || n > N) throw std::out_of_range("hahn_data: need 0 <= n <= N");
    if (params.branch != HahnBranch::Positive)
        throw std::invalid_argument("hahn_data: positive branch required");
    const Rational& a = params.alpha;
    const Rational& b = params.beta;
    const Rational abn1 = Rational(n) + a + b + Rational(1);
    const Rational an = pochhammer(a + Rational(1), static_cast<unsigned long>(n));
    const Rational mn = pochhammer(Rational(-N), static_cast<unsigned long>(n));

    OrthoData d;
    d.leading = pochhammer(abn1, static_cast<unsigned long>(n)) / (an * mn);

    // (n+a+b+1)_{N+1} / (2n+a+b+1): the divisor is the factor at offset n of
    // the Pochhammer product, so cancel it instead of dividing by it (it can
    // vanish when a+b is a negative integer).
    Rational reduced(1);
    for (long j = 0; j <= N; ++j) {
        if (j == n) continue;
        reduced *= abn1 + Rational(j);
    }
    d.norm = reduced * pochhammer(b + Rational(1), static_cast<unsigned long>(n)) *
             factorial(static_cast<unsigned long>(n)) /
             (an * mn * factorial(static_cast<unsigned long>(N)));
    if (n % 2 == 1) d.norm = -d.norm;
    return d;
}

inline OrthoSystem<Rational> hahn_system(const HahnParams& params) {
    const Grid<Rational> g = integer_grid(params.support_max);
    const WeightTable<Rational> u = hahn_weight(params);
    std::vector<Rational> leading;
    for (long n = 0; n <= params.support_max; ++n)
        leading.push_back(hahn_data(n, params).leading);
    return orthogonalize(g, u, leading);
}

/// Checks the Hahn reflection identity
///   H_n(x;a,b,N) = (-b-N)_x / (a+1)_x * H_{N-n}(x;-b-N-1,-a-N-1,N),
/// the Thomae route on its pole-free domain, the closed form of the dual
/// weight, the dual normalization constant (resolving the power-versus-
/// Pochhammer reading of (-1)^N (beta+1)_N by the independently built dual
/// system), and agreement with the generic orthogonalization.
inline VerificationReport verify_hahn_reflection(const HahnParams& params) {
    if (params.branch != HahnBranch::Positive)
        throw std::invalid_argument("verify_hahn_reflection: positive branch required");
    const long N = params.support_max;
    const HahnParams reflected = params.reflected();
    const Rational one(1);

    VerificationReport report("hahn reflection identity");

    ClauseTracker<Rational> identity("H_n(x;a,b,N) = (-b-N)_x/(a+1)_x H_{N-n}(x;-b-N-1,-a-N-1,N)");
    ClauseTracker<Rational> thomae("Thomae transformation reproduces H_n(x;a,b,N)");
    long thomae_checked = 0, thomae_skipped = 0;
    for (long n = 0; n <= N; ++n) {
        for (long x = 0; x <= N; ++x) {
            const std::string where = "(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")";
            const Rational lhs = hahn_value(n, x, params);
            const Rational prefactor =
                pochhammer(-params.beta - Rational(N), static_cast<unsigned long>(x)) /
                pochhammer(params.alpha + one, static_cast<unsigned long>(x));
            identity.check_exact(lhs, prefactor * hahn_value(N - n, x, reflected), where);

            try {
                const Rational via_thomae = thomae_transform_rhs(
                    Rational(-n), Rational(n) + params.alpha + params.beta + one, Rational(-x),
                    params.alpha + one, Rational(-N));
                thomae.check_exact(via_thomae, lhs, where);
                ++thomae_checked;
            } catch (const gamma_pole_error&) {
                ++thomae_skipped;
            }
        }
    }
    report.add_clause(identity.finish());
    report.add_clause(thomae.finish());
    report.add_detail("thomae_cases_checked", std::to_string(thomae_checked));
    report.add_detail("thomae_cases_skipped_at_gamma_pole", std::to_string(thomae_skipped));

    const Grid<Rational> g = integer_grid(N);
    const WeightTable<Rational> u = hahn_weight(params);
    const WeightTable<Rational> v = dual_weight(g, u);
    Rational dual_scale = one / (pochhammer(params.alpha + one, static_cast<unsigned long>(N)) *
                                 pochhammer(params.beta + one, static_cast<unsigned long>(N)));
    if (N % 2 == 1) dual_scale = -dual_scale;
    ClauseTracker<Rational> dual_closed("dual weight equals its closed form");
    for (long x = 0; x <= N; ++x)
        dual_closed.check_exact(v.value(static_cast<std::size_t>(x)),
                                dual_scale * hahn_weight_value(reflected, x),
                                "(x=" + std::to_string(x) + ")");
    report.add_clause(dual_closed.finish());

    const OrthoSystem<Rational> primal = hahn_system(params);
    const DualPair<Rational> pair = dual_system(primal);
    Rational poch_reading = pochhammer(params.beta + one, static_cast<unsigned long>(N));
    Rational power_reading = pow_int(params.beta + one, N);
    if (N % 2 == 1) {
        poch_reading = -poch_reading;
        power_reading = -power_reading;
    }
    // The constant actually realised by the b_i = p_{M-i}/a_{M-i} normalization;
    // H_0 = 1, so it is the constant value of the degree-0 dual polynomial.
    const Rational realised = pair.dual.values[0][0];
    report.add_detail("dual_normalization_constant", realised.to_string());
    report.add_detail("pochhammer_reading", poch_reading.to_string());
    report.add_detail("power_reading", power_reading.to_string());
    report.add_detail("resolved_reading",
                      realised == poch_reading
                          ? (realised == power_reading ? "both (coincide for these parameters)"
                                                       : "pochhammer")
                          : (realised == power_reading ? "power" : "neither"));

    ClauseTracker<Rational> normalization("dual system equals (-1)^N (beta+1)_N H_n(x;-b-N-1,-a-N-1,N)");
    for (long n = 0; n <= N; ++n)
        for (long x = 0; x <= N; ++x)
            normalization.check_exact(
                pair.dual.values[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)],
                poch_reading * hahn_value(n, x, reflected),
                "(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")");
    report.add_clause(normalization.finish());

    ClauseTracker<Rational> generic("closed-form tables match the generic orthogonalization");
    for (long n = 0; n <= N; ++n) {
        const OrthoData d = hahn_data(n, params);
        generic.check_exact(primal.norms[static_cast<std::size_t>(n)], d.norm,
                            "(norm n=" + std::to_string(n) + ")");
        for (long x = 0; x <= N; ++x)
            generic.check_exact(primal.values[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)],
                                hahn_value(n, x, params),
                                "(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")");
    }
    report.add_clause(generic.finish());

    return report;
}

// ---------------------------------------------------------------------------
// Hahn -> Krawtchouk limit transition.
// ---------------------------------------------------------------------------

/// Max deviation between H_n(x; p t, (1-p) t, N) and K_n(x; p, N) for each
/// t, with the empirical log-log slope of the decay (first-order transition:
/// slope -1).
struct ConvergenceReport {
    std::vector<std::pair<Rational, Rational>> deviations; // (t, max deviation)
    double slope = 0.0;
    double slope_target = -1.0;
    double slope_tolerance = 0.1;
    bool slope_defined = false;

    bool pass() const { return slope_defined && std::abs(slope - slope_target) <= slope_tolerance; }

    nlohmann::json to_json() const {
        nlohmann::json devs = nlohmann::json::array();
        for (const auto& [t, d] : deviations)
            devs.push_back({{"t", t.to_string()}, {"max_deviation", d.to_string()}});
        return nlohmann::json{{"report", "hahn-to-krawtchouk limit"},
                              {"pass", pass()},
                              {"slope", slope},
                              {"slope_target", slope_target},
                              {"slope_tolerance", slope_tolerance},
                              {"deviations", std::move(devs)}};
    }
};

inline ConvergenceReport limit_transition_check(const Rational& p, long support_max,
                                                const std::vector<Rational>& t_values) {
    if (t_values.empty()) throw std::invalid_argument("limit_transition_check: empty t list");
    for (std::size_t i = 0; i < t_values.size(); ++i) {
        if (!(t_values[i].sign() > 0))
            throw std::invalid_argument("limit_transition_check: t values must be positive");
        if (i > 0 && !(t_values[i - 1] < t_values[i]))
            throw std::invalid_argument("limit_transition_check: t values must be increasing");
    }
    const KrawtchoukParams limit(p, support_max);

    ConvergenceReport report;
    for (const Rational& t : t_values) {
        const HahnParams h(p * t, (Rational(1) - p) * t, support_max);
        Rational worst(0);
        for (long n = 0; n <= support_max; ++n) {
            for (long x = 0; x <= support_max; ++x) {
                const Rational dev = abs(hahn_value(n, x, h) - krawtchouk_value(n, x, limit));
                if (worst < dev) worst = dev;
            }
        }
        report.deviations.emplace_back(t, std::move(worst));
    }

    // Least-squares slope on the log-log points with nonzero deviation.
    std::vector<double> xs, ys;
    for (const auto& [t, d] : report.deviations) {
        if (d.is_zero()) continue;
        xs.push_back(std::log(t.to_double()));
        ys.push_back(std::log(d.to_double()));
    }
    if (xs.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double den = xs.size() * sxx - sx * sx;
        if (den != 0.0) {
            report.slope = (xs.size() * sxy - sx * sy) / den;
            report.slope_defined = true;
        }
    }
    return report;
}

} // namespace dopk

#endif // DOPK_CLASSICAL_HPP
