#ifndef CUBICLATTICE_RATIONAL_HPP
#define CUBICLATTICE_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace cubiclattice {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision fraction, always reduced, denominator > 0.
///
/// Backed by GMP's mpq, whose canonical form is exactly the invariant we
/// need: gcd(|num|, den) = 1 and den > 0. Every constructor canonicalizes.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(int n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}

    Rational(long long num, long long den)
        : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    /// Greatest integer <= *this.
    Integer floor() const {
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    /// Least integer >= *this.
    Integer ceil() const {
        Integer r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    /// "p/q" in decimal, "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    /// Decimal approximation with `digits` fractional digits (truncated
    /// toward zero), for the clearly-labeled approximate CLI columns.
    std::string decimal_str(int digits) const;

    const mpq_class& raw() const { return q_; }

    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ + y.q_)); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ - y.q_)); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ * y.q_)); }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(x.q_ / y.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& y) { q_ += y.q_; return *this; }
    Rational& operator-=(const Rational& y) { q_ -= y.q_; return *this; }
    Rational& operator*=(const Rational& y) { q_ *= y.q_; return *this; }
    Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

    friend bool operator==(const Rational& x, const Rational& y) { return mpq_equal(x.q_.get_mpq_t(), y.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) { return mpq_cmp(x.q_.get_mpq_t(), y.q_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
    mpq_class q_; // always canonical
};

} // namespace cubiclattice

#endif // CUBICLATTICE_RATIONAL_HPP
