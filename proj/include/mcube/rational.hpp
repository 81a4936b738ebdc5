#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "mcube/errors.hpp"

namespace mcube {

// Exact arbitrary-precision rational. Always stored canonically: the
// denominator is positive and coprime to the numerator; zero is 0/1.
// Arithmetic is exact and closed; division by zero throws.
class Rational {
public:
    // Implicit construction from integers is intended: matrices and tests
    // are written with plain integer literals.
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(unsigned int n) : v_(n) {}
    Rational(unsigned long n) : v_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw ZeroDivisionError("rational with zero denominator");
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p", or "p/q" in base 10.
    static Rational parse(const std::string& text) {
        mpq_class v;
        if (v.set_str(text, 10) != 0)
            throw InvalidArgumentError("malformed rational: '" + text + "'");
        if (v.get_den() == 0) throw ZeroDivisionError("rational with zero denominator");
        v.canonicalize();
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Canonical "p/q", or "p" when the denominator is 1; sign on the numerator.
    std::string to_string() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

    Rational reciprocal() const {
        if (is_zero()) throw ZeroDivisionError("reciprocal of zero");
        return Rational(denominator(), numerator());
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw ZeroDivisionError("rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& rhs) {
        v_ += rhs.v_;
        return *this;
    }
    Rational& operator-=(const Rational& rhs) {
        v_ -= rhs.v_;
        return *this;
    }
    Rational& operator*=(const Rational& rhs) {
        v_ *= rhs.v_;
        return *this;
    }
    Rational& operator/=(const Rational& rhs) {
        if (rhs.is_zero()) throw ZeroDivisionError("rational division by zero");
        v_ /= rhs.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace mcube
