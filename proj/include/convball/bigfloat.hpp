#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "convball/errors.hpp"

// Value-semantic arbitrary-precision real backed by MPFR.  New values pick up
// the thread-local default precision; arithmetic results carry the wider of
// the operand precisions.  Rounding is always to nearest.

namespace convball {

class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, default_precision()); mpfr_set_zero(v_, 1); }

    explicit BigFloat(double x) {
        mpfr_init2(v_, default_precision());
        mpfr_set_d(v_, x, MPFR_RNDN);
    }

    explicit BigFloat(long x) {
        mpfr_init2(v_, default_precision());
        mpfr_set_si(v_, x, MPFR_RNDN);
    }

    explicit BigFloat(int x) : BigFloat(static_cast<long>(x)) {}

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

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

    /// Decimal digits -> mantissa bits, with a small guard.
    static mpfr_prec_t bits_for_digits(int digits) {
        return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
    }

    static mpfr_prec_t& default_precision() {
        thread_local mpfr_prec_t prec = bits_for_digits(64);
        return prec;
    }

    /// RAII guard setting the thread-local default precision in decimal digits.
    class PrecisionGuard {
    public:
        explicit PrecisionGuard(int digits) : saved_(default_precision()) {
            if (digits < 2) throw DomainError("precision must be at least 2 digits");
            default_precision() = bits_for_digits(digits);
        }
        ~PrecisionGuard() { default_precision() = saved_; }
        PrecisionGuard(const PrecisionGuard&) = delete;
        PrecisionGuard& operator=(const PrecisionGuard&) = delete;

    private:
        mpfr_prec_t saved_;
    };

    static BigFloat from_string(const std::string& s) {
        BigFloat r;
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw DomainError("not a valid decimal number: '" + s + "'");
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    std::string str(int digits = 20) const {
        char buf[128];
        mpfr_snprintf(buf, sizeof buf, "%.*Re", digits - 1, v_);
        return buf;
    }

    BigFloat& operator+=(const BigFloat& o) { return apply2(mpfr_add, o); }
    BigFloat& operator-=(const BigFloat& o) { return apply2(mpfr_sub, o); }
    BigFloat& operator*=(const BigFloat& o) { return apply2(mpfr_mul, o); }
    BigFloat& operator/=(const BigFloat& o) { return apply2(mpfr_div, o); }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r = make_like(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend BigFloat abs(const BigFloat& a) { return a.apply1(mpfr_abs); }
    friend BigFloat sqrt(const BigFloat& a) { return a.apply1(mpfr_sqrt); }
    friend BigFloat exp(const BigFloat& a) { return a.apply1(mpfr_exp); }
    friend BigFloat log(const BigFloat& a) { return a.apply1(mpfr_log); }
    friend BigFloat sin(const BigFloat& a) { return a.apply1(mpfr_sin); }
    friend BigFloat cos(const BigFloat& a) { return a.apply1(mpfr_cos); }

    friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
        BigFloat r = make_like(std::max(a.precision(), b.precision()));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    /// Unit roundoff scale: 2^(1-precision).
    friend BigFloat eps_of(const BigFloat& a) {
        BigFloat r = make_like(a.precision());
        mpfr_set_ui_2exp(r.v_, 1, 1 - a.precision(), MPFR_RNDN);
        return r;
    }

    friend double to_double(const BigFloat& a) { return a.to_double(); }

private:
    static BigFloat make_like(mpfr_prec_t prec) {
        BigFloat r;
        mpfr_set_prec(r.v_, prec);
        mpfr_set_zero(r.v_, 1);
        return r;
    }

    template <class F>
    BigFloat apply1(F f) const {
        BigFloat r = make_like(precision());
        f(r.v_, v_, MPFR_RNDN);
        return r;
    }

    template <class F>
    BigFloat& apply2(F f, const BigFloat& o) {
        if (o.precision() > precision()) {
            BigFloat widened = make_like(o.precision());
            mpfr_set(widened.v_, v_, MPFR_RNDN);
            mpfr_swap(v_, widened.v_);
        }
        f(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    mpfr_t v_;
};

}  // namespace convball
