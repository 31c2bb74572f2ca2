#include "lgv/triangular.hpp"

#include <stdexcept>

namespace lgv {

TriangularSequence::TriangularSequence(int p, std::vector<int> flat_row_major)
    : p_(p), entries_(std::move(flat_row_major)) {
    if (p_ < 1) throw std::invalid_argument("order p must be >= 1");
    if (entries_.size() != triangle_size(p_))
        throw std::invalid_argument("flat entry list has wrong length for order p");
}

std::size_t TriangularSequence::index(int i, int j) const {
    if (j < 1 || i < j || i > p_ - 1)
        throw std::out_of_range("triangular index out of range");
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(i) / 2 +
           static_cast<std::size_t>(j - 1);
}

int TriangularSequence::row_sum(int j) const {
    if (j < 1 || j > p_ - 1) throw std::out_of_range("row_sum: j out of range");
    int r = 0;
    for (int t = 1; t < j; ++t) r += a(j, t);
    return r;
}

int TriangularSequence::col_sum(int j) const {
    if (j < 1 || j > p_ - 1) throw std::out_of_range("col_sum: j out of range");
    int c = 0;
    for (int r = j + 1; r <= p_ - 1; ++r) c += a(r, j);
    return c;
}

bool TriangularSequence::is_triangular(const Partition& lambda) const {
    if (lambda.p() != p_) return false;
    for (int i = 1; i <= p_ - 1; ++i)
        for (int j = 1; j <= i; ++j)
            if (a(i, j) < 0 || a(i, j) > lambda.part(j + 1)) return false;
    for (int j = 1; j <= p_ - 1; ++j) {
        int partial = 0;
        for (int i = 1; i <= p_ - 1 - j; ++i) {
            partial += a(j + i, j);
            if (partial > a(j, j)) return false;
        }
    }
    return true;
}

SequenceIndex3 SequenceIndex3::from_sequence(const TriangularSequence& s) {
    if (s.p() != 3) throw std::invalid_argument("SequenceIndex3 requires p = 3");
    return {s.a(2, 1), s.a(2, 2), s.a(1, 1)};
}

TriangularSequence SequenceIndex3::to_sequence() const {
    return TriangularSequence(3, {k, i, j});
}

void for_each_triangular_sequence(const Partition& lambda,
                                  const std::function<void(const TriangularSequence&)>& fn) {
    const int p = lambda.p();
    std::vector<int> flat(TriangularSequence::triangle_size(p), 0);

    // positions in row-major order; recursion keeps column prefix sums legal
    struct Pos {
        int i, j;
    };
    std::vector<Pos> positions;
    for (int i = 1; i <= p - 1; ++i)
        for (int j = 1; j <= i; ++j) positions.push_back({i, j});

    auto flat_index = [](int i, int j) {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(i) / 2 +
               static_cast<std::size_t>(j - 1);
    };

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == positions.size()) {
            fn(TriangularSequence(p, flat));
            return;
        }
        const auto [i, j] = positions[idx];
        int hi = lambda.part(j + 1);
        if (i > j) {
            int below = 0;
            for (int t = j + 1; t < i; ++t) below += flat[flat_index(t, j)];
            hi = std::min(hi, flat[flat_index(j, j)] - below);
        }
        for (int v = 0; v <= hi; ++v) {
            flat[flat_index(i, j)] = v;
            rec(idx + 1);
        }
        flat[flat_index(i, j)] = 0;
    };
    rec(0);
}

std::vector<TriangularSequence> enumerate_triangular_sequences(const Partition& lambda) {
    std::vector<TriangularSequence> out;
    for_each_triangular_sequence(lambda,
                                 [&](const TriangularSequence& s) { out.push_back(s); });
    return out;
}

} // namespace lgv
