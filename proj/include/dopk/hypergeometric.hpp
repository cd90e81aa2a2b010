#ifndef DOPK_HYPERGEOMETRIC_HPP
#define DOPK_HYPERGEOMETRIC_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dopk/errors.hpp"
#include "dopk/rational.hpp"

namespace dopk {

/// Rising factorial a(a+1)...(a+n-1); empty product for n = 0.
inline Rational pochhammer(const Rational& a, unsigned long n) {
    Rational r(1);
    Rational f = a;
    for (unsigned long j = 0; j < n; ++j) {
        r *= f;
        f += Rational(1);
    }
    return r;
}

/// A terminating hypergeometric sum. The first upper parameter must be a
/// non-positive integer -n; the series is the finite sum of n+1 terms.
struct HypTerminating {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational z;
};

inline HypTerminating hyp2f1(Rational a, Rational b, Rational c, Rational z) {
    return HypTerminating{{std::move(a), std::move(b)}, {std::move(c)}, std::move(z)};
}

inline HypTerminating hyp3f2(Rational a, Rational b, Rational c, Rational d,
                             Rational e, Rational z = Rational(1)) {
    return HypTerminating{{std::move(a), std::move(b), std::move(c)},
                          {std::move(d), std::move(e)},
                          std::move(z)};
}

/// Sum_{j=0}^{n} prod_i (a_i)_j / (prod_i (c_i)_j j!) z^j by the term-ratio
/// recurrence, where -n is the first upper parameter.
///
/// Throws denominator_zero_error if a lower-parameter Pochhammer vanishes
/// within the summation range, i.e. some lower c has c + j = 0 for j < n.
inline Rational eval_terminating(const HypTerminating& h) {
    if (h.upper.empty())
        throw std::invalid_argument("eval_terminating: no upper parameters");
    if (!h.upper.front().is_nonpositive_integer())
        throw std::invalid_argument(
            "eval_terminating: first upper parameter must be a non-positive integer");
    const long n = (-h.upper.front()).to_long();

    for (const Rational& c : h.lower) {
        // Bad exactly when c is an integer in (-n, 0]: then (c)_j = 0 for some j <= n.
        if (c.is_integer() && c.sign() <= 0 && Rational(-n) < c)
            throw denominator_zero_error("eval_terminating: lower parameter " + c.to_string() +
                                         " vanishes within the summation range");
    }

    Rational sum(1);
    Rational term(1);
    for (long j = 0; j < n; ++j) {
        const Rational jr(j);
        for (const Rational& a : h.upper) term *= a + jr;
        for (const Rational& c : h.lower) term /= c + jr;
        term /= jr + Rational(1);
        term *= h.z;
        sum += term;
    }
    return sum;
}

/// Right-hand side of the Euler--Pfaff transformation
///   2F1(a,b;c;z) = (1-z)^{-b} 2F1(c-a,b;c;z/(z-1)),
/// for terminating b (a non-positive integer). Equals the left-hand side on
/// the whole precondition domain.
inline Rational pfaff_transform_rhs(const Rational& a, const Rational& b,
                                    const Rational& c, const Rational& z) {
    if (!b.is_nonpositive_integer())
        throw std::invalid_argument("pfaff_transform_rhs: b must be a non-positive integer");
    if (z == Rational(1))
        throw std::invalid_argument("pfaff_transform_rhs: z = 1");
    const long m = (-b).to_long();
    const Rational one(1);
    const Rational factor = pow_int(one - z, m);
    const Rational arg = z / (z - one);
    return factor * eval_terminating(hyp2f1(b, c - a, c, arg));
}

/// Right-hand side of the Thomae transformation at unit argument,
///   3F2(a,b,c;d,e;1)
///     = G * 3F2(e-a,e-b,c; d+e-a-b,e; 1),
///   G = Gamma(d)Gamma(d+e-a-b-c) / (Gamma(d+e-a-b)Gamma(d-c)),
/// for terminating c = -n. The Gamma ratio collapses to the exact
/// Pochhammer quotient (d+e-a-b)_n / (d)_n, so the whole right-hand side is
/// rational. Throws gamma_pole_error if any of the four Gamma arguments is a
/// non-positive integer.
inline Rational thomae_transform_rhs(const Rational& a, const Rational& b,
                                     const Rational& c, const Rational& d,
                                     const Rational& e) {
    if (!c.is_nonpositive_integer())
        throw std::invalid_argument("thomae_transform_rhs: c must be a non-positive integer");
    const long n = (-c).to_long();
    const Rational s = d + e - a - b;

    const Rational gamma_args[4] = {d, s - c, s, d - c};
    for (const Rational& g : gamma_args) {
        if (g.is_nonpositive_integer())
            throw gamma_pole_error("thomae_transform_rhs: Gamma argument " + g.to_string() +
                                   " is a non-positive integer");
    }

    const Rational prefactor = pochhammer(s, static_cast<unsigned long>(n)) /
                               pochhammer(d, static_cast<unsigned long>(n));
    return prefactor * eval_terminating(hyp3f2(c, e - a, e - b, s, e));
}

} // namespace dopk

#endif // DOPK_HYPERGEOMETRIC_HPP
