#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include <rclosure/errors.hpp>

namespace rclosure {

/// Exact rational number.
///
/// Values are always kept in lowest terms with a strictly positive
/// denominator; zero is 0/1. Every operation is exact -- there is no
/// floating point anywhere in the library -- so membership tests and
/// minimality decisions are bit-reproducible across runs.
///
/// Serialized form is "p/q" with the "/q" omitted when q == 1.
class Rational {
public:
    Rational() : value_(0) {}

    Rational(long long n) : value_(mpz_from(n)) {}

    Rational(long long num, long long den) : Rational(mpz_from(num), mpz_from(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw parameter_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parse "p" or "p/q" with an optional leading '-'. Input need not be in
    /// lowest terms; the stored value always is.
    static Rational from_string(const std::string& text) {
        const auto bad = [&] { return parameter_error("Rational: not a rational literal: '" + text + "'"); };
        const auto slash = text.find('/');
        const std::string num = text.substr(0, slash);
        if (!digits_ok(num, true)) throw bad();
        if (slash == std::string::npos) return Rational(mpz_class(num), mpz_class(1));
        const std::string den = text.substr(slash + 1);
        if (!digits_ok(den, false)) throw bad();
        return Rational(mpz_class(num), mpz_class(den));
    }

    static Rational pow2(long long e) {
        mpz_class p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
        return e < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw parameter_error("Rational: division by zero");
        return Rational(mpq_class(a.value_ / b.value_));
    }

    Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
    Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) >= 0; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.value_))); }

    std::string to_string() const {
        std::string out = value_.get_num().get_str();
        if (value_.get_den() != 1) out += "/" + value_.get_den().get_str();
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    static mpz_class mpz_from(long long n) {
        mpz_class z;
        if (n >= 0) {
            z = mpz_class(static_cast<unsigned long>(n));
        } else {
            z = mpz_class(static_cast<unsigned long>(-(n + 1)));
            z += 1;
            z = -z;
        }
        return z;
    }

    static bool digits_ok(const std::string& part, bool sign_allowed) {
        std::size_t i = 0;
        if (sign_allowed && i < part.size() && part[i] == '-') ++i;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    }

    mpq_class value_;
};

} // namespace rclosure
