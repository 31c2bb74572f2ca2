#include "lgv/lattice.hpp"

#include <cassert>
#include <cstdlib>

namespace lgv {

std::vector<LatticePoint> end_points(const Partition& mu) {
    const int p = mu.p();
    std::vector<LatticePoint> b(static_cast<std::size_t>(p));
    for (int j = 1; j <= p; ++j) {
        const int d = mu.part(j) + p - j + 1;
        b[static_cast<std::size_t>(j - 1)] = {d, d};
    }
    return b;
}

std::vector<LatticePoint> start_points(const Partition& lambda, const TriangularSequence& s) {
    const int p = lambda.p();
    if (s.p() != p || !s.is_triangular(lambda))
        throw std::invalid_argument("sequence is not triangular with respect to lambda");

    std::vector<LatticePoint> a(static_cast<std::size_t>(p));
    for (int j = 1; j <= p - 1; ++j) {
        const int rj = s.row_sum(j);
        a[static_cast<std::size_t>(j - 1)] = {p - j + 1 + s.a(j, j) - rj,
                                              lambda.part(j) + p - j + 1 - rj};
    }
    int xp = 1;
    for (int t = 1; t <= p - 1; ++t) xp += s.col_sum(t) - s.a(t, t);
    a[static_cast<std::size_t>(p - 1)] = {xp, lambda.part(p) + xp};

#ifndef NDEBUG
    if (p >= 2) {
        assert(a[0].x > a[static_cast<std::size_t>(p - 1)].x);
        assert(a[0].y > a[static_cast<std::size_t>(p - 1)].y);
        for (int l = 2; l <= p - 1; ++l) assert(a[0].y > a[static_cast<std::size_t>(l - 1)].y);
    }
#endif
    return a;
}

PointConfiguration PointConfiguration::from_partitions(const Partition& lambda,
                                                       const Partition& mu,
                                                       const TriangularSequence& s) {
    if (lambda.p() != mu.p())
        throw std::invalid_argument("lambda and mu must have the same number of parts");
    PointConfiguration cfg;
    cfg.starts = start_points(lambda, s);
    cfg.ends = end_points(mu);
    return cfg;
}

PointConfiguration PointConfiguration::raw(std::vector<LatticePoint> starts,
                                           std::vector<LatticePoint> ends) {
    if (starts.empty() || starts.size() != ends.size())
        throw std::invalid_argument("configuration needs equally many starts and ends");
    return PointConfiguration{std::move(starts), std::move(ends)};
}

Int path_count(LatticePoint a, LatticePoint b) {
    const long long dx = b.x - a.x;
    const long long dy = a.y - b.y;
    return binomial(dx + dy, dx); // 0 unless dx, dy >= 0
}

std::optional<int> horizontal_distance(const LatticePath& pi, const LatticePath& pi_prime) {
    const LatticePoint ap = pi_prime.start;
    if (pi.start.y <= ap.y)
        throw std::invalid_argument("horizontal_distance: start of pi must be strictly North");
    for (const LatticePoint& q : pi.points())
        if (q.y == ap.y) return std::abs(q.x - ap.x);
    return std::nullopt;
}

namespace {

// unique point of the path with x - y == level, if the level is in range
std::optional<LatticePoint> point_at_diagonal(const LatticePath& path, int level) {
    const int d0 = path.start.x - path.start.y;
    const int steps = static_cast<int>(path.steps.size());
    if (level < d0 || level > d0 + steps) return std::nullopt;
    LatticePoint q = path.start;
    for (char c : path.steps) {
        if (q.x - q.y == level) return q;
        if (c == 'E')
            ++q.x;
        else
            --q.y;
    }
    if (q.x - q.y == level) return q;
    return std::nullopt;
}

} // namespace

std::optional<int> diagonal_distance(const LatticePath& pi, const LatticePath& pi_prime) {
    const LatticePoint a = pi.start, ap = pi_prime.start;
    const auto c_prime = point_at_diagonal(pi_prime, a.x - a.y); // line through A meets pi'
    const auto c = point_at_diagonal(pi, ap.x - ap.y);           // line through A' meets pi
    std::optional<int> d1, d2;
    if (c_prime) d1 = std::abs(c_prime->x - a.x);
    if (c) d2 = std::abs(c->x - ap.x);
    if (d1 && d2 && *d1 != *d2)
        throw AmbiguousDistance("both slope-1 lines intersect with different segment lengths");
    if (d1) return d1;
    return d2;
}

} // namespace lgv
