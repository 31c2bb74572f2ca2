#pragma once

#include <functional>
#include <vector>

#include "lgv/partition.hpp"

namespace lgv {

// Lower-triangular array a[i][j], 1 <= j <= i <= p-1, in triangular order
// with respect to a partition lambda:
//   (1) 0 <= a[i][j] <= lambda_{j+1}
//   (2) column partial sums below the diagonal never exceed the diagonal
//       entry: a[j+1][j] + ... + a[j+i][j] <= a[j][j].
// For p = 1 the array is empty and there is exactly one sequence.
class TriangularSequence {
public:
    TriangularSequence(int p, std::vector<int> flat_row_major);

    static TriangularSequence empty(int p) {
        return TriangularSequence(p, std::vector<int>(triangle_size(p), 0));
    }

    static std::size_t triangle_size(int p) {
        return static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(p) / 2;
    }

    int p() const { return p_; }

    // 1-based, j <= i <= p-1
    int a(int i, int j) const { return entries_[index(i, j)]; }

    // row-major flattening: a11; a21, a22; a31, a32, a33; ...
    const std::vector<int>& flat() const { return entries_; }

    // R_j = a_{j,1} + ... + a_{j,j-1}; R_1 = 0
    int row_sum(int j) const;

    // C_j = a_{j+1,j} + ... + a_{p-1,j}; C_{p-1} = 0
    int col_sum(int j) const;

    bool is_triangular(const Partition& lambda) const;

    bool operator==(const TriangularSequence& o) const {
        return p_ == o.p_ && entries_ == o.entries_;
    }

private:
    std::size_t index(int i, int j) const;

    int p_;
    std::vector<int> entries_;
};

// The p=3 aliasing (a21, a22, a11) = (i, j, k); constraints (*):
// 0 <= k <= lambda_2, 0 <= i <= k, 0 <= j <= lambda_3.
struct SequenceIndex3 {
    int i = 0, j = 0, k = 0;

    static SequenceIndex3 from_sequence(const TriangularSequence& s);
    TriangularSequence to_sequence() const;

    bool is_triangular(const Partition& lambda) const {
        return lambda.p() == 3 && 0 <= k && k <= lambda.part(2) && 0 <= i && i <= k &&
               0 <= j && j <= lambda.part(3);
    }

    bool operator==(const SequenceIndex3& o) const {
        return i == o.i && j == o.j && k == o.k;
    }
};

// Every s in S(lambda) exactly once, in lexicographic order of the
// row-major flattening.  For p = 3 this restricted to a fixed f = j + k
// reproduces the worked-example (i,j,k) order.
std::vector<TriangularSequence> enumerate_triangular_sequences(const Partition& lambda);

void for_each_triangular_sequence(const Partition& lambda,
                                  const std::function<void(const TriangularSequence&)>& fn);

} // namespace lgv
