#include "cubiclattice/triangle.hpp"

#include <stdexcept>

#include "cubiclattice/errors.hpp"

namespace cubiclattice {

namespace {

constexpr std::int64_t kMaxParam = 2147483647;

std::int64_t to_int64(const Integer& z, const char* what) {
    if (!z.fits_slong_p())
        throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<std::int64_t>(z.get_si());
}

std::chrono::nanoseconds since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
}

struct EdgeSet {
    EdgeLine top;   // l13
    EdgeLine left;  // l12
    EdgeLine right; // l23
};

EdgeSet make_edges(const CubicParams& params, Dilation k) {
    return {edge_line(params, k, 1, 3), edge_line(params, k, 1, 2), edge_line(params, k, 2, 3)};
}

// Membership with prebuilt edges; below the top edge and above both others.
bool inside(const EdgeSet& e, std::int64_t x, std::int64_t y) {
    Rational yy(y);
    return e.top.at(x).compare(yy) >= 0 && e.left.at(x).compare(yy) <= 0 &&
           e.right.at(x).compare(yy) <= 0;
}

Integer slice_from_edges(const EdgeSet& e, std::int64_t n) {
    Integer top = line_floor(e.top, n);
    Integer low = n <= -1 ? line_floor(e.left, n) : line_floor(e.right, n);
    Integer diff = top - low;
    return diff < 0 ? Integer(0) : diff;
}

} // namespace

Dilation::Dilation(std::int64_t k) : k_(k) {
    if (k < 1) throw std::invalid_argument("Dilation: k must be >= 1");
    if (k > kMaxParam) throw std::invalid_argument("Dilation: k too large");
}

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::brute: return "brute";
        case CountMethod::slice: return "slice";
        case CountMethod::closed: return "closed";
        case CountMethod::interlace: return "interlace";
    }
    throw std::logic_error("to_string: bad CountMethod");
}

EdgeLine edge_line(const CubicParams& params, Dilation k, int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
        throw std::invalid_argument("edge_line: indices must be distinct and in {1,2,3}");
    auto roots = roots_in_field(params);
    const FieldElement& ri = roots[static_cast<std::size_t>(i - 1)];
    const FieldElement& rj = roots[static_cast<std::size_t>(j - 1)];
    FieldElement slope = ri + rj;
    FieldElement intercept = (ri * rj) * Rational(-k.k());
    return EdgeLine{params, k, i, j, slope, intercept};
}

Integer line_floor(const EdgeLine& line, std::int64_t n) {
    FieldElement value = line.at(n);
    if (value.is_rational())
        throw std::logic_error("line_floor: edge value rational — a lattice point on an edge "
                               "is impossible for k >= 1");
    return value.floor();
}

XRange x_range(const CubicParams& params, Dilation k) {
    auto roots = roots_in_field(params);
    Rational kk(k.k());
    Integer xmin = (roots[0] * kk).ceil();
    Integer xmax = (roots[2] * kk).floor();
    return {to_int64(xmin, "x_range.xmin"), to_int64(xmax, "x_range.xmax")};
}

bool point_in_triangle(const CubicParams& params, Dilation k, std::int64_t x, std::int64_t y) {
    return inside(make_edges(params, k), x, y);
}

Integer slice_count(const CubicParams& params, Dilation k, std::int64_t n) {
    XRange xr = x_range(params, k);
    if (n < xr.xmin || n > xr.xmax) return 0;
    return slice_from_edges(make_edges(params, k), n);
}

Integer SliceProfile::total() const {
    Integer sum = 0;
    for (const auto& [n, c] : per_abscissa) sum += c;
    return sum;
}

SlicedCount count_by_slicing(const CubicParams& params, Dilation k) {
    auto start = std::chrono::steady_clock::now();
    XRange xr = x_range(params, k);
    EdgeSet edges = make_edges(params, k);
    SliceProfile profile{params, k, {}};
    Integer total = 0;
    for (std::int64_t n = xr.xmin; n <= xr.xmax; ++n) {
        Integer c = slice_from_edges(edges, n);
        profile.per_abscissa.emplace(n, c);
        total += c;
    }
    return {CountResult{params, k, total, CountMethod::slice, since(start)}, std::move(profile)};
}

CountResult brute_force_count(const CubicParams& params, Dilation k, std::int64_t budget) {
    auto start = std::chrono::steady_clock::now();
    Integer kk(static_cast<long>(k.k()));
    Integer estimate = kk * kk * params.sqrt_disc() / 2;
    if (estimate > budget)
        throw BudgetExceededError("brute_force_count: estimated count " + estimate.get_str() +
                                  " exceeds budget " + std::to_string(budget));

    XRange xr = x_range(params, k);
    EdgeSet edges = make_edges(params, k);
    // Fixed-precision bracket for the ordinate over-approximation; refining
    // from the seed keeps the bound independent of any cache state.
    RootInterval bracket = refine(seed_interval(params, 3), Rational(1, 256));

    Integer count = 0;
    std::int64_t candidates = 0;
    for (std::int64_t x = xr.xmin; x <= xr.xmax; ++x) {
        auto [lo, hi] = edges.top.at(x).enclosure(bracket);
        Integer y_cap = hi.floor();
        if (y_cap < 0) continue;
        std::int64_t y_hi = to_int64(y_cap, "brute_force_count.y_cap");
        for (std::int64_t y = 0; y <= y_hi; ++y) {
            if (++candidates > budget)
                throw BudgetExceededError("brute_force_count: candidate budget " +
                                          std::to_string(budget) + " exhausted");
            if (inside(edges, x, y)) ++count;
        }
    }
    return CountResult{params, k, count, CountMethod::brute, since(start)};
}

Rational volume(const CubicParams& params) {
    return Rational(params.sqrt_disc(), Integer(2));
}

Rational discrepancy(const CubicParams& params, Dilation k, const Integer& count) {
    Integer kk(static_cast<long>(k.k()));
    return Rational(count) - Rational(kk * kk) * volume(params);
}

} // namespace cubiclattice
