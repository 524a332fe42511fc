#include "cubiclattice/interlace.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "cubiclattice/errors.hpp"

namespace cubiclattice {

namespace {

int checked_sign(const FieldElement& value) {
    int s = value.sign();
    if (s == 0)
        throw std::logic_error("interlaces: g(rho_i) = 0 — an integral quadratic cannot "
                               "vanish at a cubic irrationality");
    return s;
}

// Sign of g at a precomputed root (rho, rho^2 pair), built coefficientwise.
int sign_at_root(const CubicParams& params, const QuadraticPoly& g,
                 const FieldElement& root, const FieldElement& root_sq) {
    Rational lead(g.c2), lin(g.c1), cst(g.c0);
    FieldElement value(params,
                       lead * root_sq.c0() + lin * root.c0() + cst,
                       lead * root_sq.c1() + lin * root.c1(),
                       lead * root_sq.c2() + lin * root.c2());
    return checked_sign(value);
}

struct CoefficientBox {
    std::int64_t lin_lo, lin_hi; // c1 range
    std::int64_t cst_lo, cst_hi; // c0 range
};

std::int64_t to_int64(const Integer& z, const char* what) {
    if (!z.fits_slong_p())
        throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<std::int64_t>(z.get_si());
}

// Integer bounding box of the coefficient-space triangle with vertices
// (-k(rho_i+rho_j), k rho_i rho_j) = (k rho_m - k a, k / rho_m), m = 1,2,3.
CoefficientBox coefficient_box(const CubicParams& params, Dilation k) {
    auto roots = roots_in_field(params);
    Rational kk(k.k());
    Rational ka(Integer(static_cast<long>(k.k())) * static_cast<long>(params.a()));
    CoefficientBox box{};
    bool first = true;
    for (const auto& root : roots) {
        FieldElement lin = root * kk - ka;
        FieldElement cst = root.inverse() * kk;
        std::int64_t lin_ceil = to_int64(lin.ceil(), "coefficient_box");
        std::int64_t lin_floor = to_int64(lin.floor(), "coefficient_box");
        std::int64_t cst_ceil = to_int64(cst.ceil(), "coefficient_box");
        std::int64_t cst_floor = to_int64(cst.floor(), "coefficient_box");
        if (first) {
            box = {lin_ceil, lin_floor, cst_ceil, cst_floor};
            first = false;
        } else {
            box.lin_lo = std::min(box.lin_lo, lin_ceil);
            box.lin_hi = std::max(box.lin_hi, lin_floor);
            box.cst_lo = std::min(box.cst_lo, cst_ceil);
            box.cst_hi = std::max(box.cst_hi, cst_floor);
        }
    }
    return box;
}

template <typename Visitor>
void for_each_interlacing(const CubicParams& params, Dilation k, std::int64_t budget,
                          Visitor&& visit) {
    CoefficientBox box = coefficient_box(params, k);
    if (box.lin_lo > box.lin_hi || box.cst_lo > box.cst_hi) return;
    Integer candidates = (Integer(static_cast<long>(box.lin_hi)) - box.lin_lo + 1) *
                         (Integer(static_cast<long>(box.cst_hi)) - box.cst_lo + 1);
    if (candidates > budget)
        throw BudgetExceededError("count_interlacing: bounding box holds " +
                                  candidates.get_str() + " candidates, budget " +
                                  std::to_string(budget));

    auto roots = roots_in_field(params);
    std::array<FieldElement, 3> squares = {roots[0] * roots[0], roots[1] * roots[1],
                                           roots[2] * roots[2]};
    for (std::int64_t lin = box.lin_lo; lin <= box.lin_hi; ++lin) {
        for (std::int64_t cst = box.cst_lo; cst <= box.cst_hi; ++cst) {
            QuadraticPoly g{k.k(), lin, cst};
            if (sign_at_root(params, g, roots[0], squares[0]) == +1 &&
                sign_at_root(params, g, roots[1], squares[1]) == -1 &&
                sign_at_root(params, g, roots[2], squares[2]) == +1)
                visit(g);
        }
    }
}

} // namespace

bool interlaces(const CubicParams& params, const QuadraticPoly& g) {
    auto roots = roots_in_field(params);
    int s1 = sign_at_root(params, g, roots[0], roots[0] * roots[0]);
    int s2 = sign_at_root(params, g, roots[1], roots[1] * roots[1]);
    int s3 = sign_at_root(params, g, roots[2], roots[2] * roots[2]);
    return s1 == +1 && s2 == -1 && s3 == +1;
}

QuadraticPoly quadratic_from_point(const CubicParams& params, Dilation k,
                                   std::int64_t x, std::int64_t y) {
    const std::int64_t a = params.a();
    return QuadraticPoly{k.k(), x - k.k() * a, y - a * x - k.k() * (a + 3)};
}

std::pair<std::int64_t, std::int64_t> point_from_quadratic(const CubicParams& params,
                                                           const QuadraticPoly& g) {
    const std::int64_t a = params.a();
    std::int64_t x = g.c1 + g.c2 * a;
    std::int64_t y = g.c0 + a * x + g.c2 * (a + 3);
    return {x, y};
}

CountResult count_interlacing(const CubicParams& params, Dilation k, std::int64_t budget) {
    auto start = std::chrono::steady_clock::now();
    Integer count = 0;
    for_each_interlacing(params, k, budget, [&](const QuadraticPoly&) { ++count; });
    auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return CountResult{params, k, count, CountMethod::interlace, elapsed};
}

std::vector<QuadraticPoly> enumerate_interlacing(const CubicParams& params, Dilation k,
                                                 std::int64_t budget) {
    std::vector<QuadraticPoly> out;
    for_each_interlacing(params, k, budget, [&](const QuadraticPoly& g) { out.push_back(g); });
    return out;
}

} // namespace cubiclattice
