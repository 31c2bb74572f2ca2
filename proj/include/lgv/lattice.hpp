#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgv/bigint.hpp"
#include "lgv/partition.hpp"
#include "lgv/triangular.hpp"

namespace lgv {

struct LatticePoint {
    int x = 0, y = 0;
    bool operator==(const LatticePoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
};

// Monotone path: East steps (+x) and South steps (-y), encoded as a string
// over {'E','S'}.  Step strings compare lexicographically with 'E' < 'S',
// which is the deterministic order used by the oracle.
struct LatticePath {
    LatticePoint start;
    std::string steps;

    LatticePoint end() const {
        int e = 0, s = 0;
        for (char c : steps) (c == 'E' ? e : s)++;
        return {start.x + e, start.y - s};
    }

    std::vector<LatticePoint> points() const {
        std::vector<LatticePoint> pts;
        pts.reserve(steps.size() + 1);
        LatticePoint q = start;
        pts.push_back(q);
        for (char c : steps) {
            if (c == 'E')
                ++q.x;
            else if (c == 'S')
                --q.y;
            else
                throw std::invalid_argument("path step must be 'E' or 'S'");
            pts.push_back(q);
        }
        return pts;
    }
};

// Start and end points of a family of p paths.  Configurations built from
// (lambda, mu, s) satisfy the diagonal/NE-SW layout of the B's and the
// start-point inequalities below; raw configurations are arbitrary.
struct PointConfiguration {
    std::vector<LatticePoint> starts; // A_1 .. A_p
    std::vector<LatticePoint> ends;   // B_1 .. B_p

    int p() const { return static_cast<int>(starts.size()); }

    static PointConfiguration from_partitions(const Partition& lambda, const Partition& mu,
                                              const TriangularSequence& s);
    static PointConfiguration raw(std::vector<LatticePoint> starts,
                                  std::vector<LatticePoint> ends);
};

// B_j = (mu_j + p - j + 1, mu_j + p - j + 1), strictly NE-to-SW on the diagonal
std::vector<LatticePoint> end_points(const Partition& mu);

// A_j(s) for j < p, plus the closed form for A_p; validates s against lambda.
// The output always satisfies x_{A_1} > x_{A_p}, y_{A_1} > y_{A_p} and
// y_{A_1} > y_{A_l} for 1 < l < p.
std::vector<LatticePoint> start_points(const Partition& lambda, const TriangularSequence& s);

// Number of monotone paths A -> B; zero when B is not weakly SE of A.
Int path_count(LatticePoint a, LatticePoint b);

// Both slope-1 lines through the two starts intersect the opposite paths in
// segments of different diagonal lengths.  Cannot happen for monotone paths
// (the diagonal coordinate x - y advances by one per step); surfacing it
// beats silently picking a side.
struct AmbiguousDistance : std::logic_error {
    using std::logic_error::logic_error;
};

// Horizontal distance D_h(pi, pi'): requires the start of pi strictly North
// of the start A' of pi'.  Value is |x_C - x_{A'}| where C is the first
// point of pi, in path order, on the horizontal line through A'; nullopt if
// pi never reaches that height.
//
// "First in path order" and not "nearest to A'": when pi runs East along
// the hit height, chopping at the nearest point makes the swap surgery
// self-intersect, while the arrival point keeps it disjoint and makes D_h
// invariant under the swap.
std::optional<int> horizontal_distance(const LatticePath& pi, const LatticePath& pi_prime);

// Diagonal distance D_d: slope-1 lines through both starts, extended both
// ways; the realized segment joins one start to the unique point of the
// other path on its line.  Symmetric in the two paths.  nullopt if neither
// line meets the other path; finite whenever both paths end on the main
// diagonal.
std::optional<int> diagonal_distance(const LatticePath& pi, const LatticePath& pi_prime);

} // namespace lgv
