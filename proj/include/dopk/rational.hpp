#ifndef DOPK_RATIONAL_HPP
#define DOPK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "dopk/errors.hpp"

namespace dopk {

/// Exact rational scalar over unbounded integers.
///
/// Always kept in canonical form: gcd(num, den) = 1, den > 0. All
/// arithmetic is exact; (a + b) - b == a holds for every a, b.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_(from_ll(n)) {}
    Rational(long long num, long long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(from_ll(num), from_ll(den));
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }

    // Value as long, valid only when is_integer() and in range.
    long to_long() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        mpz_class n = v_.get_num();
        if (!n.fits_slong_p()) throw std::domain_error("Rational: integer out of long range");
        return n.get_si();
    }

    double to_double() const { return v_.get_d(); }

    std::string to_string() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) {
            s += "/";
            s += v_.get_den().get_str();
        }
        return s;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= b.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    static mpz_class from_ll(long long n) {
        if (n >= 0) {
            mpz_class z;
            mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
            return z;
        }
        unsigned long long mag = static_cast<unsigned long long>(-(n + 1)) + 1ULL;
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
        return -z;
    }

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base.is_zero()) throw std::domain_error("pow_int: zero base, negative exponent");
        return Rational(1) / pow_int(base, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(std::move(num), std::move(den));
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(std::move(f), mpz_class(1));
}

/// Binomial coefficient with non-negative integer arguments.
inline Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(std::move(b), mpz_class(1));
}

} // namespace dopk

#endif // DOPK_RATIONAL_HPP
