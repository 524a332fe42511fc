#ifndef CUBICLATTICE_CUBIC_FIELD_HPP
#define CUBICLATTICE_CUBIC_FIELD_HPP

#include <array>
#include <cstdint>
#include <utility>

#include "cubiclattice/rational.hpp"

namespace cubiclattice {

/// Parameter of the defining cubic  f_a(x) = x^3 - a x^2 - (a+3) x - 1.
///
/// f_a is irreducible over Q for every a >= 1 (a monic cubic with constant
/// term -1 can only have the rational roots +-1, and f_a(1) = -2a-3,
/// f_a(-1) = 1); the constructor re-checks this because the coefficient-wise
/// zero test of FieldElement depends on it.
class CubicParams {
public:
    explicit CubicParams(std::int64_t a);

    std::int64_t a() const { return a_; }

    /// a^2 + 3a + 9, the square root of the field discriminant.
    Integer sqrt_disc() const;

    friend bool operator==(const CubicParams& x, const CubicParams& y) { return x.a_ == y.a_; }
    friend bool operator!=(const CubicParams& x, const CubicParams& y) { return x.a_ != y.a_; }

private:
    std::int64_t a_;
};

/// f_a evaluated at a rational point, exactly.
Rational eval_fa(const CubicParams& params, const Rational& x);

/// Rational-endpoint interval bracketing exactly one real root of f_a.
/// Invariants: lo < hi and f_a(lo), f_a(hi) have strictly opposite signs.
class RootInterval {
public:
    RootInterval(CubicParams params, Rational lo, Rational hi, int root_index);

    const CubicParams& params() const { return params_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    int root_index() const { return root_index_; }
    Rational width() const { return hi_ - lo_; }

private:
    CubicParams params_;
    Rational lo_, hi_;
    int root_index_;
};

/// Starting bracket for the root_index-th real root of f_a (roots in
/// increasing order): (-2,-1), (-1,0) and (a+1, a+2). The endpoint signs
/// work out for every a >= 1.
RootInterval seed_interval(const CubicParams& params, int root_index);

/// Bisect until hi - lo <= max_width. The result is contained in the input
/// and still brackets the same root.
RootInterval refine(RootInterval interval, const Rational& max_width);

/// Element c0 + c1*rho + c2*rho^2 of Q(rho), rho the largest root of f_a.
///
/// The representation is always reduced below degree 3 via
/// rho^3 = a rho^2 + (a+3) rho + 1. Because f_a is irreducible, an element
/// is zero iff all three coefficients are zero, and rational iff c1 = c2 = 0;
/// sign() and floor() exploit that irrationality for guaranteed termination.
class FieldElement {
public:
    FieldElement(CubicParams params, Rational c0, Rational c1, Rational c2)
        : params_(params), c0_(std::move(c0)), c1_(std::move(c1)), c2_(std::move(c2)) {}

    static FieldElement zero(const CubicParams& p) { return FieldElement(p, 0, 0, 0); }
    static FieldElement one(const CubicParams& p) { return FieldElement(p, 1, 0, 0); }
    /// rho itself, the primitive element.
    static FieldElement generator(const CubicParams& p) { return FieldElement(p, 0, 1, 0); }
    static FieldElement from_rational(const CubicParams& p, Rational r) {
        return FieldElement(p, std::move(r), 0, 0);
    }

    const CubicParams& params() const { return params_; }
    const Rational& c0() const { return c0_; }
    const Rational& c1() const { return c1_; }
    const Rational& c2() const { return c2_; }

    bool is_zero() const { return c0_.is_zero() && c1_.is_zero() && c2_.is_zero(); }
    bool is_rational() const { return c1_.is_zero() && c2_.is_zero(); }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    FieldElement operator-() const { return FieldElement(params_, -c0_, -c1_, -c2_); }

    friend FieldElement operator*(const FieldElement& x, const Rational& s) {
        return FieldElement(x.params_, x.c0_ * s, x.c1_ * s, x.c2_ * s);
    }
    friend FieldElement operator*(const Rational& s, const FieldElement& x) { return x * s; }
    friend FieldElement operator+(const FieldElement& x, const Rational& s) {
        return FieldElement(x.params_, x.c0_ + s, x.c1_, x.c2_);
    }
    friend FieldElement operator-(const FieldElement& x, const Rational& s) {
        return FieldElement(x.params_, x.c0_ - s, x.c1_, x.c2_);
    }

    friend bool operator==(const FieldElement& x, const FieldElement& y);
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

    /// Multiplicative inverse via extended gcd of c2 t^2 + c1 t + c0 with
    /// f_a(t) over Q. Throws std::domain_error on the zero element.
    FieldElement inverse() const;

    /// Exact sign in {-1, 0, +1}. Zero iff all coefficients are zero;
    /// otherwise decided by refining the rho bracket until the rational
    /// interval enclosure excludes 0.
    int sign() const;

    /// sign(*this - r), without materializing the difference.
    int compare(const Rational& r) const;

    /// Exact floor. Rational elements take the fraction floor; irrational
    /// ones refine until the enclosure pins a single integer cell.
    Integer floor() const;

    /// Exact ceiling (= -floor(-x)).
    Integer ceil() const;

    /// Rational interval [lo, hi] containing the element's value, computed
    /// by interval arithmetic over the given rho bracket. Over-approximate;
    /// width shrinks with the bracket's.
    std::pair<Rational, Rational> enclosure(const RootInterval& rho_interval) const;

private:
    CubicParams params_;
    Rational c0_, c1_, c2_;
};

/// The three real roots (rho1, rho2, rho3) of f_a expressed in Q(rho3):
/// rho1 = (a+2) + a rho - rho^2, rho2 = -2 - (a+1) rho + rho^2, rho3 = rho,
/// consequences of rho1 = -(1+rho3)/rho3 and rho2 = -1/(1+rho3). They satisfy
/// rho1+rho2+rho3 = a, rho1 rho2 + rho1 rho3 + rho2 rho3 = -(a+3),
/// rho1 rho2 rho3 = 1.
std::array<FieldElement, 3> roots_in_field(const CubicParams& params);

/// f_a evaluated at a field element (zero exactly when the element is a
/// root, i.e. for each entry of roots_in_field).
FieldElement eval_fa(const CubicParams& params, const FieldElement& x);

/// Drop all cached rho brackets. The cache is a pure optimization: sign and
/// floor results are identical with a cold or warm cache.
void reset_root_interval_cache();

} // namespace cubiclattice

#endif // CUBICLATTICE_CUBIC_FIELD_HPP
