#include "cubiclattice/cubic_field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubiclattice/errors.hpp"

namespace cubiclattice {

namespace {

// Coordinates downstream (slice abscissas, lattice points) are kept in
// int64; k*(a+1)+2 must fit, so a and k are capped at 2^31 - 1.
constexpr std::int64_t kMaxParam = 2147483647;

std::size_t bit_size(const Integer& z) {
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t bit_size(const Rational& q) {
    return bit_size(q.numerator()) + bit_size(q.denominator());
}

// Iteration cap for sign/floor refinement: generous enough that reaching it
// is impossible for nonzero elements (a norm bound gives a proven maximum),
// so it converts a logic bug into a loud failure instead of a hang.
long refinement_cap(const FieldElement& x) {
    std::size_t bits = bit_size(x.c0()) + bit_size(x.c1()) + bit_size(x.c2()) +
                       bit_size(Integer(static_cast<long>(x.params().a())));
    return 10 * static_cast<long>(bits) + 64;
}

// One bisection step on a bracket of f_a. sign_lo is the sign of f_a at lo.
void bisect_step(const CubicParams& p, Rational& lo, Rational& hi, int sign_lo) {
    Rational mid = (lo + hi) * Rational(1, 2);
    int sm = eval_fa(p, mid).sign();
    if (sm == 0)
        throw RefinementCapError("bisection midpoint is a rational root of f_a, "
                                 "contradicting irreducibility");
    if (sm == sign_lo)
        lo = mid;
    else
        hi = mid;
}

// Interval product c * [lo, hi] for [lo, hi] with lo >= 0 (rho > a+1 > 0, so
// both the bracket and its square are nonnegative intervals).
void add_scaled(const Rational& c, const Rational& lo, const Rational& hi,
                Rational& acc_lo, Rational& acc_hi) {
    int s = c.sign();
    if (s == 0) return;
    if (s > 0) {
        acc_lo += c * lo;
        acc_hi += c * hi;
    } else {
        acc_lo += c * hi;
        acc_hi += c * lo;
    }
}

// Per-a cache of the rho3 bracket, monotonically narrowed. Synchronized;
// purely an optimization (results never depend on cache state).
class Rho3Cache {
public:
    std::pair<Rational, Rational> get(const CubicParams& p) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = brackets_.find(p.a());
        if (it != brackets_.end()) return it->second;
        RootInterval seed = seed_interval(p, 3);
        auto bracket = std::make_pair(seed.lo(), seed.hi());
        brackets_.emplace(p.a(), bracket);
        return bracket;
    }

    void narrow(const CubicParams& p, const Rational& lo, const Rational& hi) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = brackets_.find(p.a());
        if (it == brackets_.end()) {
            brackets_.emplace(p.a(), std::make_pair(lo, hi));
        } else if (hi - lo < it->second.second - it->second.first) {
            it->second = {lo, hi};
        }
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        brackets_.clear();
    }

private:
    std::mutex mu_;
    std::map<std::int64_t, std::pair<Rational, Rational>> brackets_;
};

Rho3Cache& rho3_cache() {
    static Rho3Cache cache;
    return cache;
}

} // namespace

void reset_root_interval_cache() { rho3_cache().clear(); }

CubicParams::CubicParams(std::int64_t a) : a_(a) {
    if (a < 1) throw std::invalid_argument("CubicParams: a must be >= 1");
    if (a > kMaxParam) throw std::invalid_argument("CubicParams: a too large");
    // rational-root check for the monic cubic with constant term -1
    if (eval_fa(*this, Rational(1)).is_zero() || eval_fa(*this, Rational(-1)).is_zero())
        throw std::logic_error("CubicParams: f_a reducible, zero test unsound");
}

Integer CubicParams::sqrt_disc() const {
    Integer a(static_cast<long>(a_));
    return a * a + 3 * a + 9;
}

Rational eval_fa(const CubicParams& params, const Rational& x) {
    Rational a(params.a());
    // Horner: ((x - a) x - (a+3)) x - 1
    return ((x - a) * x - (a + Rational(3))) * x - Rational(1);
}

FieldElement eval_fa(const CubicParams& params, const FieldElement& x) {
    FieldElement a = FieldElement::from_rational(params, Rational(params.a()));
    FieldElement a3 = FieldElement::from_rational(params, Rational(params.a()) + 3);
    return ((x - a) * x - a3) * x - Rational(1);
}

RootInterval::RootInterval(CubicParams params, Rational lo, Rational hi, int root_index)
    : params_(params), lo_(std::move(lo)), hi_(std::move(hi)), root_index_(root_index) {
    if (root_index < 1 || root_index > 3)
        throw std::invalid_argument("RootInterval: root_index must be 1, 2 or 3");
    if (!(lo_ < hi_))
        throw std::invalid_argument("RootInterval: lo must be < hi");
    int slo = eval_fa(params_, lo_).sign();
    int shi = eval_fa(params_, hi_).sign();
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("RootInterval: endpoints must have opposite f_a signs");
}

RootInterval seed_interval(const CubicParams& params, int root_index) {
    switch (root_index) {
        case 1: return RootInterval(params, Rational(-2), Rational(-1), 1);
        case 2: return RootInterval(params, Rational(-1), Rational(0), 2);
        case 3:
            return RootInterval(params, Rational(params.a() + 1), Rational(params.a() + 2), 3);
        default:
            throw std::invalid_argument("seed_interval: root_index must be 1, 2 or 3");
    }
}

RootInterval refine(RootInterval interval, const Rational& max_width) {
    if (max_width.sign() <= 0)
        throw std::invalid_argument("refine: max_width must be positive");
    Rational lo = interval.lo();
    Rational hi = interval.hi();
    int sign_lo = eval_fa(interval.params(), lo).sign();
    while (hi - lo > max_width)
        bisect_step(interval.params(), lo, hi, sign_lo);
    return RootInterval(interval.params(), lo, hi, interval.root_index());
}

namespace {

void require_same_params(const FieldElement& x, const FieldElement& y) {
    if (x.params() != y.params())
        throw std::invalid_argument("FieldElement: mismatched field parameters");
}

} // namespace

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    require_same_params(x, y);
    return FieldElement(x.params_, x.c0_ + y.c0_, x.c1_ + y.c1_, x.c2_ + y.c2_);
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    require_same_params(x, y);
    return FieldElement(x.params_, x.c0_ - y.c0_, x.c1_ - y.c1_, x.c2_ - y.c2_);
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    require_same_params(x, y);
    const Rational a(x.params_.a());
    // raw degree-4 convolution
    Rational z0 = x.c0_ * y.c0_;
    Rational z1 = x.c0_ * y.c1_ + x.c1_ * y.c0_;
    Rational z2 = x.c0_ * y.c2_ + x.c1_ * y.c1_ + x.c2_ * y.c0_;
    Rational z3 = x.c1_ * y.c2_ + x.c2_ * y.c1_;
    Rational z4 = x.c2_ * y.c2_;
    // rho^3 = a rho^2 + (a+3) rho + 1
    // rho^4 = (a^2+a+3) rho^2 + (a^2+3a+1) rho + a
    Rational a3 = a + Rational(3);
    Rational r4_2 = a * a + a + Rational(3);
    Rational r4_1 = a * a + Rational(3) * a + Rational(1);
    return FieldElement(x.params_,
                        z0 + z3 + a * z4,
                        z1 + a3 * z3 + r4_1 * z4,
                        z2 + a * z3 + r4_2 * z4);
}

bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.params_ == y.params_ && x.c0_ == y.c0_ && x.c1_ == y.c1_ && x.c2_ == y.c2_;
}

namespace {

// Dense univariate polynomial over Q, ascending coefficients, used only for
// the inverse's extended gcd. Degrees never exceed 3.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder and quotient of num / den (den nonzero).
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    Poly quot(num.size(), Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational factor = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= factor * den[i];
        num.pop_back(); // leading term cancels exactly
        poly_trim(num);
    }
    poly_trim(quot);
    return {quot, num};
}

Poly poly_mul(const Poly& x, const Poly& y) {
    if (x.empty() || y.empty()) return {};
    Poly r(x.size() + y.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            r[i + j] += x[i] * y[j];
    poly_trim(r);
    return r;
}

Poly poly_sub(Poly x, const Poly& y) {
    if (x.size() < y.size()) x.resize(y.size(), Rational(0));
    for (std::size_t i = 0; i < y.size(); ++i)
        x[i] -= y[i];
    poly_trim(x);
    return x;
}

} // namespace

FieldElement FieldElement::inverse() const {
    if (is_zero())
        throw std::domain_error("FieldElement: inverse of zero");
    if (is_rational())
        return from_rational(params_, Rational(1) / c0_);

    const Rational a(params_.a());
    Poly f = {Rational(-1), -(a + Rational(3)), -a, Rational(1)}; // f_a
    Poly c = {c0_, c1_, c2_};
    poly_trim(c);

    // Extended Euclid tracking t with t*c = r (mod f); ends with r a nonzero
    // constant because f_a is irreducible and deg c < 3.
    Poly r_prev = f, r_cur = c;
    Poly t_prev = {}, t_cur = {Rational(1)};
    while (r_cur.size() > 1) {
        auto [q, rem] = poly_divmod(r_prev, r_cur);
        Poly t_next = poly_sub(t_prev, poly_mul(q, t_cur));
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    if (r_cur.empty())
        throw std::logic_error("FieldElement: gcd with f_a not constant");
    Rational scale = Rational(1) / r_cur[0];
    t_cur.resize(3, Rational(0));
    return FieldElement(params_, t_cur[0] * scale, t_cur[1] * scale, t_cur[2] * scale);
}

std::pair<Rational, Rational> FieldElement::enclosure(const RootInterval& rho_interval) const {
    const Rational& lo = rho_interval.lo();
    const Rational& hi = rho_interval.hi();
    Rational acc_lo = c0_;
    Rational acc_hi = c0_;
    add_scaled(c1_, lo, hi, acc_lo, acc_hi);
    add_scaled(c2_, lo * lo, hi * hi, acc_lo, acc_hi);
    return {acc_lo, acc_hi};
}

int FieldElement::sign() const {
    if (is_rational()) return c0_.sign();

    auto [lo, hi] = rho3_cache().get(params_);
    const long cap = refinement_cap(*this);
    for (long step = 0; step <= cap; ++step) {
        Rational acc_lo = c0_, acc_hi = c0_;
        add_scaled(c1_, lo, hi, acc_lo, acc_hi);
        add_scaled(c2_, lo * lo, hi * hi, acc_lo, acc_hi);
        if (acc_lo.sign() > 0) {
            rho3_cache().narrow(params_, lo, hi);
            return +1;
        }
        if (acc_hi.sign() < 0) {
            rho3_cache().narrow(params_, lo, hi);
            return -1;
        }
        bisect_step(params_, lo, hi, /*sign_lo=*/-1); // f_a(a+1) < 0 for all a >= 1
    }
    throw RefinementCapError("FieldElement::sign: refinement cap exceeded for a nonzero element");
}

int FieldElement::compare(const Rational& r) const {
    FieldElement diff(params_, c0_ - r, c1_, c2_);
    return diff.sign();
}

Integer FieldElement::floor() const {
    if (is_rational()) return c0_.floor();

    auto [lo, hi] = rho3_cache().get(params_);
    const long cap = refinement_cap(*this);
    for (long step = 0; step <= cap; ++step) {
        Rational acc_lo = c0_, acc_hi = c0_;
        add_scaled(c1_, lo, hi, acc_lo, acc_hi);
        add_scaled(c2_, lo * lo, hi * hi, acc_lo, acc_hi);
        Integer floor_lo = acc_lo.floor();
        Integer floor_hi = acc_hi.floor();
        if (floor_lo == floor_hi) {
            // the value is irrational, hence strictly inside the integer cell
            rho3_cache().narrow(params_, lo, hi);
            return floor_lo;
        }
        bisect_step(params_, lo, hi, /*sign_lo=*/-1);
    }
    throw RefinementCapError("FieldElement::floor: refinement cap exceeded for an irrational element");
}

Integer FieldElement::ceil() const {
    return -((-*this).floor());
}

std::array<FieldElement, 3> roots_in_field(const CubicParams& params) {
    const Rational a(params.a());
    FieldElement rho1(params, a + Rational(2), a, Rational(-1));
    FieldElement rho2(params, Rational(-2), -(a + Rational(1)), Rational(1));
    FieldElement rho3 = FieldElement::generator(params);
    return {rho1, rho2, rho3};
}

} // namespace cubiclattice
