#include "cubiclattice/closed_form.hpp"

#include <stdexcept>
#include <string>

#include "cubiclattice/errors.hpp"

namespace cubiclattice {

namespace {

void require_lemma_domain(const CubicParams& params, Dilation k, const char* who) {
    if (params.a() < 34)
        throw LemmaDomainError(std::string(who) + ": floor tables are proven only for a >= 34");
    if (k.k() > params.a())
        throw LemmaDomainError(std::string(who) + ": requires k <= a");
}

int eta_of(const CubicParams& params, Dilation k) {
    return 2 * k.k() > params.a() ? 1 : 0; // exact integer comparison, no division
}

std::int64_t ceil_div_pos(std::int64_t num, std::int64_t den) {
    return (num + den - 1) / den; // num >= 1, den >= 1
}

void require_range(std::int64_t n, std::int64_t lo, std::int64_t hi, const char* who) {
    if (n < lo || n > hi)
        throw std::out_of_range(std::string(who) + ": n = " + std::to_string(n) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

} // namespace

Theta theta(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("theta: k must be >= 1");
    return Theta{k % 2 == 0 ? Rational(1) : Rational(-1, 2)};
}

Integer theorem_count(const CubicParams& params, Dilation k) {
    if (k.k() > params.a())
        throw TheoremDomainError("theorem_count: hypothesis k <= a violated (a = " +
                                 std::to_string(params.a()) + ", k = " + std::to_string(k.k()) + ")");
    Integer kk(static_cast<long>(k.k()));
    Integer p = params.sqrt_disc(); // odd for every a
    if (k.k() % 2 == 0) return kk * kk / 2 * p + 1;
    return (kk * kk * p - 1) / 2;
}

PiecewiseSpec piecewise_spec(const CubicParams& params, Dilation k, PiecewiseSpec::Edge edge) {
    require_lemma_domain(params, k, "piecewise_spec");
    const std::int64_t a = params.a();
    const std::int64_t kk = k.k();
    PiecewiseSpec spec{};
    spec.edge = edge;
    spec.eta = eta_of(params, k);
    spec.eps = static_cast<int>(kk % 2);
    switch (edge) {
        case PiecewiseSpec::Edge::top:
            spec.period = a + 2;
            spec.offset = kk * spec.period;
            spec.first_break = a + 1 - 2 * kk;
            spec.mid_break = spec.first_break + spec.period * (kk / 2) + 1;
            break;
        case PiecewiseSpec::Edge::right:
            spec.period = a + 1;
            spec.offset = 0;
            spec.first_break = kk - 1;
            spec.mid_break = spec.first_break + spec.period * ((kk + 1) / 2) + 1;
            break;
        case PiecewiseSpec::Edge::left:
            spec.period = 0;
            spec.offset = 0;
            spec.first_break = -(kk / 2) - 1; // last n of the -n branch
            spec.mid_break = 0;
            break;
    }
    return spec;
}

Integer topline_floor(const CubicParams& params, Dilation k, std::int64_t n) {
    require_lemma_domain(params, k, "topline_floor");
    const std::int64_t a = params.a();
    const std::int64_t kk = k.k();
    const int eta = eta_of(params, k);
    require_range(n, -kk, kk * (a + 1) + eta, "topline_floor");

    const std::int64_t g = a + 2;
    const std::int64_t fb = a + 1 - 2 * kk;          // n_*
    const std::int64_t jumps_lo = kk / 2;            // branches before the isolated abscissa
    const std::int64_t mid = fb + g * jumps_lo + 1;  // n^*
    const std::int64_t jumps_hi = (kk + 1) / 2;

    std::int64_t off;
    if (n <= fb)
        off = 0;
    else if (n <= fb + g * jumps_lo)
        off = ceil_div_pos(n - fb, g);
    else if (n == mid)
        off = jumps_lo;
    else if (n <= mid + g * (jumps_hi - 1))
        off = jumps_lo + ceil_div_pos(n - mid, g);
    else
        off = kk;

    return Integer(static_cast<long>(a)) * n + Integer(static_cast<long>(kk)) * g + off;
}

Integer leftline_floor(const CubicParams& params, Dilation k, std::int64_t n) {
    require_lemma_domain(params, k, "leftline_floor");
    const std::int64_t kk = k.k();
    require_range(n, -kk, -1, "leftline_floor");
    return n <= -(kk / 2) - 1 ? Integer(static_cast<long>(-n)) : Integer(static_cast<long>(-n - 1));
}

Integer rightline_floor(const CubicParams& params, Dilation k, std::int64_t n) {
    require_lemma_domain(params, k, "rightline_floor");
    const std::int64_t a = params.a();
    const std::int64_t kk = k.k();
    const int eta = eta_of(params, k);
    require_range(n, 0, kk * (a + 1) + eta, "rightline_floor");

    const std::int64_t g = a + 1;
    const std::int64_t fb = kk - 1;                  // n_*
    const std::int64_t jumps_lo = (kk + 1) / 2;      // ceil(k/2) jumps first on this edge
    const std::int64_t mid = fb + g * jumps_lo + 1;  // n^*
    const std::int64_t jumps_hi = kk / 2;

    std::int64_t off;
    if (n <= fb)
        off = 0;
    else if (n <= fb + g * jumps_lo)
        off = ceil_div_pos(n - fb, g);
    else if (n == mid)
        off = jumps_lo;
    else if (n <= mid + g * (jumps_hi - 1))
        off = jumps_lo + ceil_div_pos(n - mid, g);
    else
        off = kk;

    return Integer(static_cast<long>(g)) * n + fb + off;
}

Rational sum_topline(const CubicParams& params, Dilation k) {
    require_lemma_domain(params, k, "sum_topline");
    Integer a(static_cast<long>(params.a()));
    Integer kk(static_cast<long>(k.k()));
    Integer k2 = kk * kk;
    Integer eta(eta_of(params, k));
    Integer eps(k.k() % 2);
    Integer bulk = k2 * a * a * a + 4 * k2 * a * a + 9 * k2 * a + kk * a * a + kk * a +
                   12 * k2 + 3 * kk;
    Integer wide = eta * (kk * a * a + 2 * kk * a + 3 * kk + a);
    return Rational(bulk, Integer(2)) + Rational(wide) - Rational(eps, Integer(2));
}

Rational sum_leftline(const CubicParams& params, Dilation k) {
    require_lemma_domain(params, k, "sum_leftline");
    Integer kk(static_cast<long>(k.k()));
    Integer eps(k.k() % 2);
    return Rational(kk * kk, Integer(2)) + Rational(eps, Integer(2));
}

Rational sum_rightline(const CubicParams& params, Dilation k) {
    require_lemma_domain(params, k, "sum_rightline");
    Integer a(static_cast<long>(params.a()));
    Integer kk(static_cast<long>(k.k()));
    Integer k2 = kk * kk;
    Integer eta(eta_of(params, k));
    Integer eps(k.k() % 2);
    Integer bulk = k2 * a * a * a + 3 * k2 * a * a + 6 * k2 * a + kk * a * a + kk * a +
                   2 * k2 + 3 * kk;
    Integer wide = eta * (kk * a * a + 2 * kk * a + 3 * kk + a);
    return Rational(bulk, Integer(2)) + Rational(wide) + Rational(eps, Integer(2)) - Rational(1);
}

Integer assemble_count(const CubicParams& params, Dilation k) {
    Rational total = sum_topline(params, k) - sum_leftline(params, k) - sum_rightline(params, k);
    if (!total.is_integer())
        throw std::logic_error("assemble_count: edge sums did not combine to an integer");
    return total.numerator();
}

DeltaBoundsResult delta_bounds_check(const CubicParams& params) {
    Integer a(static_cast<long>(params.a()));
    Rational base = Rational(a + 1) + Rational(Integer(4), 2 * a + 3);
    Rational lower_arg = base - Rational(Integer(7), 2 * a * a * a);
    Rational upper_arg = base - Rational(Integer(3), a * a * a);
    Rational f_lo = eval_fa(params, lower_arg);
    Rational f_hi = eval_fa(params, upper_arg);
    return DeltaBoundsResult{f_lo.sign() < 0 && f_hi.sign() > 0, f_lo, f_hi};
}

} // namespace cubiclattice
