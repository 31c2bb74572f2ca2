#include "lgv/surgery.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lgv/matrix.hpp"
#include "lgv/report.hpp"

namespace lgv {

namespace {

const Perm kIdentity3 = {0, 1, 2};
const Perm kSwap12 = {1, 0, 2};
const Perm kSwap23 = {0, 2, 1};

// index (in path order) of the first point of `path` satisfying pred
template <typename Pred>
int first_point_index(const std::vector<LatticePoint>& pts, Pred pred) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pred(pts[i])) return static_cast<int>(i);
    return -1;
}

std::string tuple_key(const SequenceIndex3& s, const std::vector<std::string>& steps) {
    std::ostringstream os;
    os << s.i << ',' << s.j << ',' << s.k;
    for (const auto& st : steps) os << '|' << st;
    return os.str();
}

bool pairwise_disjoint(const std::vector<LatticePath>& paths) {
    std::set<std::pair<int, int>> seen;
    for (const auto& path : paths)
        for (const auto& q : path.points())
            if (!seen.insert({q.x, q.y}).second) return false;
    return true;
}

} // namespace

InversionCase classify_inversion(const std::vector<LatticePoint>& starts, const Perm& w) {
    if (starts.size() != 3) throw std::invalid_argument("classification requires p = 3");
    const LatticePoint a1 = starts[0], a2 = starts[1], a3 = starts[2];
    if (w == kSwap12) {
        if (a2.x > a1.x && a2.y < a1.y) return InversionCase::Case1_12;
        throw std::invalid_argument("(12) tuple without A_2 strictly SE of A_1");
    }
    if (w == kSwap23) {
        if (a2.x < a3.x && a2.y >= a3.y) return InversionCase::Case2_NW;
        if (a2.x >= a3.x && a2.y < a3.y) return InversionCase::Case2_SE;
        if (a2.x <= a3.x && a2.y <= a3.y && a2 != a3) return InversionCase::Case2_SW;
        throw std::invalid_argument("(23) tuple with A_2 weakly NE of A_3");
    }
    throw std::invalid_argument("only the inversions (12) and (23) carry tuples");
}

SwapResult horizontal_swap(const LatticePath& pi1, const LatticePath& pi2,
                           const SequenceIndex3& seq) {
    const LatticePoint a1 = pi1.start, a2 = pi2.start;
    if (!(a2.x > a1.x && a2.y < a1.y))
        throw std::invalid_argument("horizontal_swap: not a Case 1 configuration");

    const auto pts1 = pi1.points();
    const int ci = first_point_index(pts1, [&](const LatticePoint& q) { return q.y == a2.y; });
    if (ci < 0)
        throw std::invalid_argument("horizontal_swap: infinite horizontal distance");
    const LatticePoint cut = pts1[static_cast<std::size_t>(ci)];
    const int l = a2.x - cut.x;
    if (l <= 0)
        throw std::invalid_argument("horizontal_swap: cut point is not West of A_2");

    SwapResult r;
    r.kind = SwapKind::Horizontal;
    r.translation = l;
    r.new_sequence = {seq.i, seq.j - l, seq.k + l};
    // head of pi1 shifted East by l, continued along pi2: A_1* -> B_1
    r.first = LatticePath{{a1.x + l, a1.y},
                          pi1.steps.substr(0, static_cast<std::size_t>(ci)) + pi2.steps};
    // remainder of pi1 from the cut: A_2* -> B_2
    r.second = LatticePath{cut, pi1.steps.substr(static_cast<std::size_t>(ci))};
    return r;
}

SwapResult diagonal_swap(const LatticePath& pi2, const LatticePath& pi3,
                         const SequenceIndex3& seq) {
    const LatticePoint a2 = pi2.start, a3 = pi3.start;
    if (a2.x >= a3.x && a2.y >= a3.y)
        throw std::invalid_argument("diagonal_swap: not a Case 2 configuration");

    const int lev2 = a2.x - a2.y, lev3 = a3.x - a3.y;
    const auto pts2 = pi2.points();
    const auto pts3 = pi3.points();
    // the diagonal coordinate advances one per step, so each line meets a
    // path in at most one point
    const int on3 = first_point_index(pts3, [&](const LatticePoint& q) { return q.x - q.y == lev2; });
    const int on2 = first_point_index(pts2, [&](const LatticePoint& q) { return q.x - q.y == lev3; });
    if (on3 < 0 && on2 < 0)
        throw std::invalid_argument("diagonal_swap: infinite diagonal distance");

    SwapResult r;
    r.kind = SwapKind::Diagonal;
    if (on3 >= 0) {
        // line through A_2 meets pi3 in the cut; heads exchanged NE/SW
        const LatticePoint cut = pts3[static_cast<std::size_t>(on3)];
        const int l = cut.x - a2.x;
        if (on2 >= 0 && pts2[static_cast<std::size_t>(on2)].x - a3.x != -l)
            throw AmbiguousDistance("diagonal_swap: distinct segments realized");
        if (l <= 0)
            throw std::invalid_argument("diagonal_swap: cut point is not NE of A_2");
        r.translation = l;
        r.new_sequence = {seq.i - l, seq.j, seq.k};
        r.first = LatticePath{cut, pi3.steps.substr(static_cast<std::size_t>(on3))};
        r.second = LatticePath{{a3.x - l, a3.y - l},
                               pi3.steps.substr(0, static_cast<std::size_t>(on3)) + pi2.steps};
    } else {
        // line through A_3 meets pi2 in the cut
        const LatticePoint cut = pts2[static_cast<std::size_t>(on2)];
        const int l = a3.x - cut.x;
        if (l <= 0)
            throw std::invalid_argument("diagonal_swap: cut point is not SW of A_3");
        r.translation = l;
        r.new_sequence = {seq.i - l, seq.j, seq.k};
        r.first = LatticePath{{a2.x + l, a2.y + l},
                              pi2.steps.substr(0, static_cast<std::size_t>(on2)) + pi3.steps};
        r.second = LatticePath{cut, pi2.steps.substr(static_cast<std::size_t>(on2))};
    }
    return r;
}

Int p2_pair_count(const Partition& lambda, const Partition& mu, int i) {
    if (lambda.p() != 2 || mu.p() != 2)
        throw std::invalid_argument("p2_pair_count is defined for p = 2");
    if (i < 0 || i > lambda.part(2))
        throw std::invalid_argument("p2_pair_count: i out of range 0 <= i <= lambda_2");
    const TriangularSequence s(2, {i});
    const auto cfg = PointConfiguration::from_partitions(lambda, mu, s);
    return count_tuples(cfg, identity_perm(2));
}

InjectionReport verify_injection(const Partition& lambda, const Partition& mu, int f) {
    if (lambda.p() != 3 || mu.p() != 3)
        throw std::invalid_argument("verify_injection is defined for p = 3");
    InjectionReport rep;
    rep.f = f;
    rep.fiber_sum = partial_sum(lambda, mu, f);

    struct Source {
        SequenceIndex3 seq;
        std::vector<LatticePoint> starts;
        SignedTuple tuple;
    };
    std::vector<Source> negatives;
    std::set<std::string> positives;

    for_each_triangular_sequence(lambda, [&](const TriangularSequence& s) {
        const auto ijk = SequenceIndex3::from_sequence(s);
        if (ijk.j + ijk.k != f) return;
        const auto cfg = PointConfiguration::from_partitions(lambda, mu, s);
        for (const auto& t : enumerate_tuples(cfg, kIdentity3)) {
            std::vector<std::string> steps{t.paths[0].steps, t.paths[1].steps,
                                           t.paths[2].steps};
            positives.insert(tuple_key(ijk, steps));
            ++rep.positive_count;
        }
        for (auto& t : negative_tuples(cfg)) {
            ++rep.negative_count;
            negatives.push_back({ijk, cfg.starts, std::move(t)});
        }
    });

    const auto ends = end_points(mu);
    std::set<std::string> images;
    for (const auto& src : negatives) {
        std::ostringstream where;
        where << "s=(" << src.seq.i << ',' << src.seq.j << ',' << src.seq.k << ") f=" << f;

        SwapResult sw;
        std::vector<LatticePath> image(3);
        try {
            const InversionCase tag = classify_inversion(src.starts, src.tuple.w);
            if (tag == InversionCase::Case1_12) {
                // paths[0]: A_2 -> B_1, paths[1]: A_1 -> B_2
                sw = horizontal_swap(src.tuple.paths[1], src.tuple.paths[0], src.seq);
                image = {sw.first, sw.second, src.tuple.paths[2]};
            } else {
                // paths[1]: A_3 -> B_2, paths[2]: A_2 -> B_3
                sw = diagonal_swap(src.tuple.paths[2], src.tuple.paths[1], src.seq);
                image = {src.tuple.paths[0], sw.first, sw.second};
            }
        } catch (const std::exception& e) {
            rep.violations.push_back(where.str() + ": swap failed: " + e.what());
            continue;
        }

        const auto& ns = sw.new_sequence;
        if (!ns.is_triangular(lambda)) {
            rep.violations.push_back(where.str() + ": image sequence not in S(lambda)");
            continue;
        }
        if (ns.j + ns.k != f) {
            rep.violations.push_back(where.str() + ": image sequence changed the fiber");
            continue;
        }
        const auto image_starts = start_points(lambda, ns.to_sequence());
        bool geometry_ok = true;
        for (int r = 0; r < 3; ++r) {
            if (image[static_cast<std::size_t>(r)].start != image_starts[static_cast<std::size_t>(r)] ||
                image[static_cast<std::size_t>(r)].end() != ends[static_cast<std::size_t>(r)]) {
                rep.violations.push_back(where.str() + ": image path " + std::to_string(r + 1) +
                                         " does not run A_r* -> B_r");
                geometry_ok = false;
            }
        }
        if (!geometry_ok) continue;
        if (!pairwise_disjoint(image)) {
            rep.violations.push_back(where.str() + ": image tuple is not vertex-disjoint");
            continue;
        }

        std::vector<std::string> steps{image[0].steps, image[1].steps, image[2].steps};
        const std::string key = tuple_key(ns, steps);
        if (!images.insert(key).second) {
            rep.violations.push_back(where.str() + ": image collides with another source");
            continue;
        }
        if (!positives.count(key))
            rep.violations.push_back(where.str() + ": image is not an enumerated positive");
    }

    if (rep.fiber_sum < 0)
        rep.violations.push_back("fiber sum c(lambda,mu;" + std::to_string(f) + ") is negative");
    return rep;
}

Int balanced_triple_count(const Partition& lambda, const Partition& mu,
                          const SequenceIndex3& seq) {
    if (lambda.p() != 3 || mu.p() != 3)
        throw std::invalid_argument("balanced_triple_count is defined for p = 3");
    if (!seq.is_triangular(lambda))
        throw std::invalid_argument("sequence does not satisfy the triangular constraints");

    const auto cfg = PointConfiguration::from_partitions(lambda, mu, seq.to_sequence());
    Int n = 0;
    for (const auto& t : enumerate_tuples(cfg, kIdentity3)) {
        const auto lh = horizontal_distance(t.paths[0], t.paths[1]);
        const auto ld = diagonal_distance(t.paths[1], t.paths[2]);
        if (!ld)
            throw std::logic_error("diagonal distance must be finite on the main diagonal");
        const bool h_blocked =
            !lh || !SequenceIndex3{seq.i, seq.j + *lh, seq.k - *lh}.is_triangular(lambda);
        const bool d_blocked = !SequenceIndex3{seq.i + *ld, seq.j, seq.k}.is_triangular(lambda);
        if (h_blocked && d_blocked) ++n;
    }
    return n;
}

} // namespace lgv
