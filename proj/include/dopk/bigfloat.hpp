#ifndef DOPK_BIGFLOAT_HPP
#define DOPK_BIGFLOAT_HPP

#include <mpfr.h>

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dopk/rational.hpp"

namespace dopk {

/// Binary floating-point scalar with a configurable mantissa (>= 53 bits).
///
/// Each value carries its own precision; binary operations round to the
/// wider of the two operand precisions (MPFR round-to-nearest). The default
/// precision for new values is process-wide and settable once up front.
class BigFloat {
public:
    static constexpr mpfr_prec_t kMinPrecision = 53;

    static mpfr_prec_t default_precision() { return default_prec_(); }
    static void set_default_precision(mpfr_prec_t bits) {
        if (bits < kMinPrecision) throw std::invalid_argument("BigFloat: precision below 53 bits");
        default_prec_() = bits;
    }

    BigFloat() { mpfr_init2(v_, default_precision()); mpfr_set_zero(v_, 1); }
    BigFloat(long n) { mpfr_init2(v_, default_precision()); mpfr_set_si(v_, n, MPFR_RNDN); }

    /// Zero value carrying an explicit precision.
    static BigFloat with_precision(mpfr_prec_t prec) { return BigFloat(prec_tag{}, prec); }
    BigFloat(int n) : BigFloat(static_cast<long>(n)) {}
    explicit BigFloat(double d) { mpfr_init2(v_, default_precision()); mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit BigFloat(const Rational& r, mpfr_prec_t prec = 0) {
        mpfr_init2(v_, prec > 0 ? prec : default_precision());
        mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string to_string() const {
        // Enough decimal digits to round-trip the mantissa.
        long digits = static_cast<long>(static_cast<double>(precision()) * 0.30103) + 3;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(prec_tag{}, combined_prec(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(prec_tag{}, combined_prec(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(prec_tag{}, combined_prec(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
        BigFloat r(prec_tag{}, combined_prec(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(prec_tag{}, a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& b) { *this = *this + b; return *this; }
    BigFloat& operator-=(const BigFloat& b) { *this = *this - b; return *this; }
    BigFloat& operator*=(const BigFloat& b) { *this = *this * b; return *this; }
    BigFloat& operator/=(const BigFloat& b) { *this = *this / b; return *this; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend BigFloat sqrt(const BigFloat& a) {
        if (a.sign() < 0) throw std::domain_error("BigFloat: sqrt of negative value");
        BigFloat r(prec_tag{}, a.precision());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(prec_tag{}, a.precision());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
        return os << x.to_string();
    }

private:
    struct prec_tag {};
    BigFloat(prec_tag, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

    static mpfr_prec_t& default_prec_() {
        static mpfr_prec_t prec = 256;
        return prec;
    }
    static mpfr_prec_t combined_prec(const BigFloat& a, const BigFloat& b) {
        return std::max(a.precision(), b.precision());
    }

    mpfr_t v_;
};

} // namespace dopk

#endif // DOPK_BIGFLOAT_HPP
