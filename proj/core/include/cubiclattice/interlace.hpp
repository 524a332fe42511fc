#ifndef CUBICLATTICE_INTERLACE_HPP
#define CUBICLATTICE_INTERLACE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cubiclattice/cubic_field.hpp"
#include "cubiclattice/triangle.hpp"

namespace cubiclattice {

/// Integral quadratic c2 x^2 + c1 x + c0 whose leading coefficient is the
/// dilation factor k.
struct QuadraticPoly {
    std::int64_t c2;
    std::int64_t c1;
    std::int64_t c0;
};

/// Strict interlacing of g with f_a: the roots gamma1 < gamma2 of g satisfy
/// rho1 < gamma1 < rho2 < gamma2 < rho3. For positive leading coefficient
/// this is equivalent to the sign pattern (+, -, +) of g at (rho1, rho2,
/// rho3), decided by exact sign tests. g(rho_i) = 0 is impossible for an
/// integral quadratic (rho_i has degree 3) and throws as an internal error.
bool interlaces(const CubicParams& params, const QuadraticPoly& g);

/// The unimodular change of coordinates sending lattice points of kT_a to
/// coefficient pairs (c1, c0) of interlacing quadratics:
/// (x, y) -> (x - k a, y - a x - k(a+3)). It maps the vertex
/// k(rho_m, rho_m^2) to (-k(rho_i+rho_j), k rho_i rho_j), the corresponding
/// vertex of the interlacing region.
QuadraticPoly quadratic_from_point(const CubicParams& params, Dilation k,
                                   std::int64_t x, std::int64_t y);

/// Inverse of quadratic_from_point.
std::pair<std::int64_t, std::int64_t> point_from_quadratic(const CubicParams& params,
                                                           const QuadraticPoly& g);

/// Counts integral quadratics with leading coefficient k interlacing f_a by
/// scanning the integer bounding box of the coefficient-space triangle
/// (corners computed by exact floors/ceilings) and testing each candidate.
/// Independent of the lattice-count code paths. Throws BudgetExceededError
/// when the box holds more than `budget` candidates.
CountResult count_interlacing(const CubicParams& params, Dilation k,
                              std::int64_t budget = kDefaultPointBudget);

/// The interlacing quadratics themselves, ordered by (c1, c0), for CSV
/// inspection. Same budget rule as count_interlacing.
std::vector<QuadraticPoly> enumerate_interlacing(const CubicParams& params, Dilation k,
                                                 std::int64_t budget = kDefaultPointBudget);

} // namespace cubiclattice

#endif // CUBICLATTICE_INTERLACE_HPP
