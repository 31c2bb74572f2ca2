#pragma once

// Test-only reference implementations, deliberately independent of the
// library's computation paths: a Pascal-triangle binomial, a recursive
// path enumerator, a filter-the-whole-box triangular-sequence generator
// and a Laplace-expansion determinant.

#include <functional>
#include <string>
#include <vector>

#include "lgv/bigint.hpp"
#include "lgv/lattice.hpp"
#include "lgv/partition.hpp"

namespace ref {

inline lgv::Int pascal_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<std::vector<lgv::Int>> row(static_cast<std::size_t>(n) + 1);
    for (int a = 0; a <= n; ++a) {
        row[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(a) + 1);
        row[static_cast<std::size_t>(a)][0] = 1;
        row[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
        for (int b = 1; b < a; ++b)
            row[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                row[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                row[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }
    return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// every monotone E/S step string from a to b
inline std::vector<std::string> brute_paths(lgv::LatticePoint a, lgv::LatticePoint b) {
    std::vector<std::string> out;
    std::string acc;
    std::function<void(int, int)> rec = [&](int x, int y) {
        if (x == b.x && y == b.y) {
            out.push_back(acc);
            return;
        }
        if (x < b.x) {
            acc.push_back('E');
            rec(x + 1, y);
            acc.pop_back();
        }
        if (y > b.y) {
            acc.push_back('S');
            rec(x, y - 1);
            acc.pop_back();
        }
    };
    if (b.x >= a.x && b.y <= a.y) rec(a.x, a.y);
    return out;
}

// all flat entry assignments over the full box [0, lambda_{j+1}] filtered by
// the column partial-sum condition; mirrors nothing from the library
inline std::vector<std::vector<int>> box_filter_sequences(const lgv::Partition& lambda) {
    const int p = lambda.p();
    std::vector<std::pair<int, int>> pos; // (i, j)
    for (int i = 1; i <= p - 1; ++i)
        for (int j = 1; j <= i; ++j) pos.emplace_back(i, j);

    std::vector<std::vector<int>> out;
    std::vector<int> flat(pos.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == pos.size()) {
            // condition (2): column prefix sums below the diagonal
            for (int j = 1; j <= p - 1; ++j) {
                int ajj = 0, partial = 0;
                for (std::size_t t = 0; t < pos.size(); ++t) {
                    if (pos[t].first == j && pos[t].second == j) ajj = flat[t];
                }
                for (int i = j + 1; i <= p - 1; ++i) {
                    for (std::size_t t = 0; t < pos.size(); ++t)
                        if (pos[t].first == i && pos[t].second == j) partial += flat[t];
                    if (partial > ajj) return;
                }
            }
            out.push_back(flat);
            return;
        }
        for (int v = 0; v <= lambda.part(pos[idx].second + 1); ++v) {
            flat[idx] = v;
            rec(idx + 1);
        }
        flat[idx] = 0;
    };
    rec(0);
    return out;
}

inline lgv::Int laplace_determinant(const std::vector<std::vector<lgv::Int>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    lgv::Int det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<lgv::Int>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<lgv::Int> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        const lgv::Int term = m[0][c] * laplace_determinant(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

// all partitions with `parts` parts bounded by maxpart (driver for sweeps)
inline std::vector<std::vector<int>> partition_box(int parts, int maxpart) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int hi) {
        if (static_cast<int>(cur.size()) == parts) {
            out.push_back(cur);
            return;
        }
        for (int v = hi; v >= 0; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(maxpart);
    return out;
}

} // namespace ref
