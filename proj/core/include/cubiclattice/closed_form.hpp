#ifndef CUBICLATTICE_CLOSED_FORM_HPP
#define CUBICLATTICE_CLOSED_FORM_HPP

#include <cstdint>

#include "cubiclattice/cubic_field.hpp"
#include "cubiclattice/rational.hpp"
#include "cubiclattice/triangle.hpp"

namespace cubiclattice {

/// The count's deviation from the area: 1 for even k, -1/2 for odd k.
struct Theta {
    Rational value;
};

Theta theta(std::int64_t k);

/// |kT_a ∩ Z^2| = k^2 (a^2+3a+9)/2 + theta(k), valid for 1 <= k <= a
/// (a^2+3a+9 is odd, so the expression is an integer for both parities).
/// Throws TheoremDomainError for k > a.
Integer theorem_count(const CubicParams& params, Dilation k);

/// Shape data of the piecewise floor tables for the top and right edge
/// lines (the left line needs only a single split at -floor(k/2)).
/// Valid for a >= 34, k <= a.
struct PiecewiseSpec {
    enum class Edge { top, left, right };

    Edge edge;
    std::int64_t period;      // abscissa stride between floor jumps: a+2 (top), a+1 (right)
    std::int64_t offset;      // constant term k*(a+2) of the top line's first branch; 0 otherwise
    std::int64_t first_break; // last n of the leading branch: a+1-2k (top), k-1 (right)
    std::int64_t mid_break;   // the isolated abscissa: first_break + period*half + 1
    int eta;                  // 1 iff 2k > a (extends the abscissa range by one)
    int eps;                  // 1 iff k odd
};

PiecewiseSpec piecewise_spec(const CubicParams& params, Dilation k, PiecewiseSpec::Edge edge);

/// floor(l13(n)) by the five-branch table, for a >= 34, k <= a and
/// -k <= n <= k(a+1) + eta. Equals line_floor(l13, n) exactly.
Integer topline_floor(const CubicParams& params, Dilation k, std::int64_t n);

/// floor(l12(n)) = -n for -k <= n <= -floor(k/2)-1, else -n-1, on
/// -k <= n <= -1. Same domain guards as topline_floor.
Integer leftline_floor(const CubicParams& params, Dilation k, std::int64_t n);

/// floor(l23(n)) by the five-branch table on 0 <= n <= k(a+1) + eta.
Integer rightline_floor(const CubicParams& params, Dilation k, std::int64_t n);

/// Closed forms of the three edge-floor sums over their abscissa ranges
/// (top and right over [-k resp. 0, k(a+1)+eta], left over [-k, -1]).
Rational sum_topline(const CubicParams& params, Dilation k);
Rational sum_leftline(const CubicParams& params, Dilation k);
Rational sum_rightline(const CubicParams& params, Dilation k);

/// sum_topline - sum_leftline - sum_rightline, which collapses to
/// k^2 (a^2+3a+9)/2 + 1 - 3 eps/2 and therefore equals theorem_count.
Integer assemble_count(const CubicParams& params, Dilation k);

/// Exact verdict on the two-sided bracketing of rho3 = a+1+delta:
/// f_a(a+1 + 4/(2a+3) - 7/(2a^3)) < 0 < f_a(a+1 + 4/(2a+3) - 3/a^3).
/// Claimed for all a >= 34; evaluable (and recorded) for any a >= 1.
struct DeltaBoundsResult {
    bool pass;
    Rational f_at_lower;
    Rational f_at_upper;
};

DeltaBoundsResult delta_bounds_check(const CubicParams& params);

} // namespace cubiclattice

#endif // CUBICLATTICE_CLOSED_FORM_HPP
