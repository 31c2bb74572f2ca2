#include <doctest.h>

#include "lgv/lattice.hpp"
#include "ref_oracles.hpp"

using namespace lgv;

TEST_CASE("end points sit on the diagonal, NE to SW") {
    const auto b = end_points(Partition({2, 2, 1}));
    CHECK(b[0] == LatticePoint{5, 5});
    CHECK(b[1] == LatticePoint{4, 4});
    CHECK(b[2] == LatticePoint{2, 2});

    const auto b2 = end_points(Partition({0, 0}));
    CHECK(b2[0] == LatticePoint{2, 2});
    CHECK(b2[1] == LatticePoint{1, 1});
    CHECK(end_points(Partition({0}))[0] == LatticePoint{1, 1});

    for (const auto& flat : ref::partition_box(4, 4)) {
        const auto pts = end_points(Partition(flat));
        for (std::size_t r = 1; r < pts.size(); ++r) {
            CHECK(pts[r - 1].x > pts[r].x);
            CHECK(pts[r - 1].y > pts[r].y);
            CHECK(pts[r].x == pts[r].y);
        }
    }
}

TEST_CASE("start points, worked examples") {
    const Partition lam({3, 3, 3});
    // (i,j,k) = (0,2,0) -> flat (k,i,j) = (0,0,2)
    const auto a = start_points(lam, TriangularSequence(3, {0, 0, 2}));
    CHECK(a[0] == LatticePoint{3, 6});
    CHECK(a[1] == LatticePoint{4, 5});
    CHECK(a[2] == LatticePoint{-1, 2});

    const auto a0 = start_points(lam, TriangularSequence(3, {0, 0, 0}));
    CHECK(a0[0] == LatticePoint{3, 6});
    CHECK(a0[1] == LatticePoint{2, 5});
    CHECK(a0[2] == LatticePoint{1, 4});

    CHECK(start_points(Partition({5}), TriangularSequence::empty(1))[0] ==
          LatticePoint{1, 6});

    CHECK_THROWS_AS(start_points(lam, TriangularSequence(3, {0, 1, 0})),
                    std::invalid_argument); // a21 > a11 violates the partial-sum condition
}

TEST_CASE("p=3 start points match the specialized closed forms") {
    for (const auto& flat : ref::partition_box(3, 3)) {
        const Partition lam(flat);
        for (const auto& s : enumerate_triangular_sequences(lam)) {
            const auto ijk = SequenceIndex3::from_sequence(s);
            const int i = ijk.i, j = ijk.j, k = ijk.k;
            const auto a = start_points(lam, s);
            CHECK(a[0] == LatticePoint{k + 3, lam.part(1) + 3});
            CHECK(a[1] == LatticePoint{2 - i + j, lam.part(2) + 2 - i});
            CHECK(a[2] == LatticePoint{1 - k + i - j, lam.part(3) + 1 - k + i - j});
        }
    }
}

TEST_CASE("start point inequalities hold exhaustively up to p=5") {
    for (int p = 2; p <= 5; ++p) {
        const int maxpart = p <= 4 ? 4 : 3;
        for (const auto& flat : ref::partition_box(p, maxpart)) {
            const Partition lam(flat);
            for (const auto& s : enumerate_triangular_sequences(lam)) {
                const auto a = start_points(lam, s);
                CHECK(a[0].x > a[static_cast<std::size_t>(p - 1)].x);
                CHECK(a[0].y > a[static_cast<std::size_t>(p - 1)].y);
                for (int l = 2; l <= p - 1; ++l)
                    CHECK(a[0].y > a[static_cast<std::size_t>(l - 1)].y);
            }
        }
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(1, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-2, 0) == 0);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(100, 50) == ref::pascal_binomial(100, 50));

    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == ref::pascal_binomial(n, k));
            CHECK(binomial(n, k) == binomial(n, n - k));
            if (k >= 1 && n >= 1)
                CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
}

TEST_CASE("path_count equals brute-force enumeration") {
    CHECK(path_count({3, 6}, {5, 5}) == 3);
    CHECK(path_count({2, 2}, {2, 2}) == 1);
    CHECK(path_count({2, 2}, {1, 1}) == 0);

    for (int dx = -8; dx <= 8; ++dx)
        for (int dy = -8; dy <= 8; ++dy) {
            const LatticePoint a{0, 0}, b{dx, -dy};
            CHECK(path_count(a, b) == ref::brute_paths(a, b).size());
        }
}

TEST_CASE("path replay and endpoints") {
    const LatticePath path{{1, 5}, "EESSE"};
    CHECK(path.end() == LatticePoint{4, 3});
    const auto pts = path.points();
    CHECK(pts.size() == 6);
    CHECK(pts.front() == LatticePoint{1, 5});
    CHECK(pts.back() == LatticePoint{4, 3});
    CHECK_THROWS_AS((LatticePath{{0, 0}, "EX"}.points()), std::invalid_argument);
}

TEST_CASE("horizontal distance") {
    // Figure-3 layout: pi from A_1=(3,6) descending SSE, pi' starting at (4,5)
    const LatticePath pi{{3, 6}, "SSE"};
    const LatticePath pi_prime{{4, 5}, "E"};
    CHECK(horizontal_distance(pi, pi_prime) == 1);

    // straight-line gap: pi passes through (0,0); pi' starts at (3,0)
    CHECK(horizontal_distance(LatticePath{{0, 3}, "SSS"}, LatticePath{{3, 0}, ""}) == 3);

    // pi never reaches the height of A'
    CHECK(horizontal_distance(LatticePath{{5, 9}, "E"}, LatticePath{{0, 0}, ""}) ==
          std::nullopt);

    // the distance is to the first point of pi at that height, not the
    // nearest run end
    CHECK(horizontal_distance(LatticePath{{0, 1}, "SEEE"}, LatticePath{{5, 0}, ""}) == 5);

    CHECK_THROWS_AS(horizontal_distance(LatticePath{{0, 0}, ""}, LatticePath{{3, 0}, ""}),
                    std::invalid_argument);
}

TEST_CASE("diagonal distance") {
    // two single points on the same slope-1 line, 2 apart
    CHECK(diagonal_distance(LatticePath{{4, 4}, ""}, LatticePath{{2, 2}, ""}) == 2);

    // symmetric in the two paths
    const LatticePath a{{0, 3}, "ESE"};
    const LatticePath b{{2, 4}, "SSE"};
    CHECK(diagonal_distance(a, b) == diagonal_distance(b, a));

    // neither slope-1 line meets the other path
    CHECK(diagonal_distance(LatticePath{{0, 5}, "EE"}, LatticePath{{4, 1}, "E"}) ==
          std::nullopt);

    // Figure-4 layout: coinciding lines, A_2=(0,3), A_3=(1,4)
    const LatticePath pi2{{0, 3}, "EEESS"};  // A_2 -> B_3 = (3,1) say
    const LatticePath pi3{{1, 4}, "EEE"};    // A_3 -> (4,4)
    CHECK(diagonal_distance(pi3, pi2) == 1);
}

TEST_CASE("paths to the main diagonal always have finite diagonal distance") {
    for (const auto& mu_flat : ref::partition_box(2, 3)) {
        const auto ends = end_points(Partition(mu_flat));
        for (int x1 = -2; x1 <= 2; ++x1)
            for (int y1 = 3; y1 <= 5; ++y1)
                for (const auto& s1 : ref::brute_paths({x1, y1}, ends[0]))
                    for (const auto& s2 : ref::brute_paths({x1 - 1, y1 - 2}, ends[1])) {
                        const LatticePath p1{{x1, y1}, s1}, p2{{x1 - 1, y1 - 2}, s2};
                        CHECK(diagonal_distance(p1, p2).has_value());
                    }
    }
}
