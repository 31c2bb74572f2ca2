#include "lgv/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lgv {

BinomialMatrix build_matrix_closed_form(const Partition& lambda, const Partition& mu,
                                        const TriangularSequence& s) {
    const int p = lambda.p();
    if (mu.p() != p)
        throw std::invalid_argument("lambda and mu must have the same number of parts");
    if (s.p() != p || !s.is_triangular(lambda))
        throw std::invalid_argument("sequence is not triangular with respect to lambda");

    BinomialMatrix m;
    m.p = p;
    m.entries.resize(static_cast<std::size_t>(p) * p);
    for (int r = 1; r <= p - 1; ++r) {
        const int arr = s.a(r, r);
        const int rr = s.row_sum(r);
        for (int c = 1; c <= p; ++c)
            m.at(r - 1, c - 1) = binomial(lambda.part(r) - arr, mu.part(c) + r - c + rr - arr);
    }
    int shift = 0;
    for (int t = 1; t <= p - 1; ++t) shift += s.a(t, t) - s.col_sum(t);
    for (int c = 1; c <= p; ++c)
        m.at(p - 1, c - 1) = binomial(lambda.part(p), mu.part(c) + p - c + shift);
    return m;
}

BinomialMatrix build_matrix_path_counts(const PointConfiguration& config) {
    const int p = config.p();
    BinomialMatrix m;
    m.p = p;
    m.entries.resize(static_cast<std::size_t>(p) * p);
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c)
            m.at(r, c) = path_count(config.starts[static_cast<std::size_t>(r)],
                                    config.ends[static_cast<std::size_t>(c)]);
    return m;
}

Int cofactor_determinant(const BinomialMatrix& m) {
    switch (m.p) {
        case 0:
            return 1;
        case 1:
            return m.at(0, 0);
        case 2:
            return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        case 3:
            return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                   m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                   m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        default:
            throw std::invalid_argument("cofactor_determinant handles p <= 3 only");
    }
}

// Fraction-free elimination: every division is exact, entries stay integral.
Int bareiss_determinant(BinomialMatrix m) {
    const int n = m.p;
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c)
                m.at(r, c) = (m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c)) / prev;
            m.at(r, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

Int determinant(const BinomialMatrix& m) {
    return m.p <= 3 ? cofactor_determinant(m) : bareiss_determinant(m);
}

} // namespace lgv
