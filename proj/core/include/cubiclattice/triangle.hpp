#ifndef CUBICLATTICE_TRIANGLE_HPP
#define CUBICLATTICE_TRIANGLE_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <string>

#include "cubiclattice/cubic_field.hpp"
#include "cubiclattice/rational.hpp"

namespace cubiclattice {

/// Positive integer dilation factor k of the triangle T_a.
class Dilation {
public:
    explicit Dilation(std::int64_t k);
    std::int64_t k() const { return k_; }

private:
    std::int64_t k_;
};

/// The line through the dilated vertices k*(rho_i, rho_i^2) and
/// k*(rho_j, rho_j^2):  l_ij(x) = (rho_i + rho_j) x - k rho_i rho_j.
/// With the complementary root index m: slope = a - rho_m and
/// intercept = -k / rho_m.
struct EdgeLine {
    CubicParams params;
    Dilation k;
    int i, j;
    FieldElement slope;
    FieldElement intercept;

    FieldElement at(std::int64_t n) const { return slope * Rational(n) + intercept; }
};

EdgeLine edge_line(const CubicParams& params, Dilation k, int i, int j);

/// Exact floor of l_ij(n). The evaluated element is irrational for every
/// integer n and k >= 1 (no lattice point ever lies on an edge); a rational
/// value here would be a logic error and throws.
Integer line_floor(const EdgeLine& line, std::int64_t n);

/// Inclusive range of abscissas whose vertical line meets kT_a:
/// xmin = ceil(k rho1), xmax = floor(k rho3), both exact.
struct XRange {
    std::int64_t xmin;
    std::int64_t xmax;
};

XRange x_range(const CubicParams& params, Dilation k);

/// Closed-triangle membership of the lattice point (x, y), decided by exact
/// sign tests against the three edge lines. Equality cannot occur at lattice
/// points, so the closed/open convention never changes a count.
bool point_in_triangle(const CubicParams& params, Dilation k, std::int64_t x, std::int64_t y);

/// Lattice points of kT_a on the vertical line {x = n}:
/// floor(l13(n)) - floor(l12(n)) for n <= -1, floor(l13(n)) - floor(l23(n))
/// for n >= 0, clamped at 0; zero outside [xmin, xmax].
Integer slice_count(const CubicParams& params, Dilation k, std::int64_t n);

enum class CountMethod { brute, slice, closed, interlace };

std::string to_string(CountMethod m);

/// A lattice-point count tagged with its provenance.
struct CountResult {
    CubicParams params;
    Dilation k;
    Integer count;
    CountMethod method;
    std::chrono::nanoseconds elapsed;
};

/// Per-abscissa slice counts; values are nonnegative and sum to the total.
struct SliceProfile {
    CubicParams params;
    Dilation k;
    std::map<std::int64_t, Integer> per_abscissa;

    Integer total() const;
};

struct SlicedCount {
    CountResult result;
    SliceProfile profile;
};

/// Sum of slice_count over the exact abscissa range. Valid for any k >= 1
/// (the exact floors do not rely on the a >= 34 lemmas).
SlicedCount count_by_slicing(const CubicParams& params, Dilation k);

/// Default enumeration budget: candidate points tested by the brute oracle.
inline constexpr std::int64_t kDefaultPointBudget = 100'000'000;

/// Independent oracle: enumerates x over [xmin, xmax] and, per x, candidate
/// ordinates 0..B(x) with B(x) a rational-interval over-approximation of the
/// top edge, testing each point by exact signs. Structurally independent of
/// the floor-difference formula. Refuses when the estimated count
/// k^2(a^2+3a+9)/2 exceeds the budget, and aborts if the candidates actually
/// tested do.
CountResult brute_force_count(const CubicParams& params, Dilation k,
                              std::int64_t budget = kDefaultPointBudget);

/// vol(T_a) = (a^2+3a+9)/2, exactly.
Rational volume(const CubicParams& params);

/// count - k^2 vol(T_a), the exact deviation of a count from the dilated
/// triangle's area.
Rational discrepancy(const CubicParams& params, Dilation k, const Integer& count);

} // namespace cubiclattice

#endif // CUBICLATTICE_TRIANGLE_HPP
