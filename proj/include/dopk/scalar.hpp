#ifndef DOPK_SCALAR_HPP
#define DOPK_SCALAR_HPP

#include <string>
#include <type_traits>

#include "dopk/bigfloat.hpp"
#include "dopk/rational.hpp"

namespace dopk {

/// Backend selector for the two scalar towers.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational from_rational(const Rational& r) { return r; }
    static std::string to_string(const Rational& r) { return r.to_string(); }
};

template <>
struct scalar_traits<BigFloat> {
    static constexpr bool is_exact = false;
    static BigFloat from_rational(const Rational& r) { return BigFloat(r); }
    static std::string to_string(const BigFloat& x) { return x.to_string(); }
};

template <class T>
concept ScalarField = requires(T a, T b) {
    T{};
    T{1};
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.sign() } -> std::convertible_to<int>;
};

static_assert(ScalarField<Rational>);
static_assert(ScalarField<BigFloat>);

} // namespace dopk

#endif // DOPK_SCALAR_HPP
