#include "lgv/report.hpp"

#include <stdexcept>

namespace lgv {

CoefficientReport coefficient(const Partition& lambda, const Partition& mu) {
    if (lambda.p() != mu.p())
        throw std::invalid_argument("lambda and mu must have the same number of parts");
    CoefficientReport rep{lambda, mu};
    if (lambda.p() == 3)
        for (int f = 0; f <= lambda.part(2) + lambda.part(3); ++f) rep.per_f[f] = 0;
    for_each_triangular_sequence(lambda, [&](const TriangularSequence& s) {
        Int d = determinant(build_matrix_closed_form(lambda, mu, s));
        rep.total += d;
        if (lambda.p() == 3) {
            const auto ijk = SequenceIndex3::from_sequence(s);
            rep.per_f[ijk.j + ijk.k] += d;
        }
        rep.per_sequence.emplace_back(s, std::move(d));
    });
    return rep;
}

Int partial_sum(const Partition& lambda, const Partition& mu, int f) {
    if (lambda.p() != 3 || mu.p() != 3)
        throw std::invalid_argument("partial_sum is defined for p = 3");
    if (f < 0 || f > lambda.part(2) + lambda.part(3))
        throw std::invalid_argument("f out of range 0 <= f <= lambda_2 + lambda_3");
    Int total = 0;
    for_each_triangular_sequence(lambda, [&](const TriangularSequence& s) {
        const auto ijk = SequenceIndex3::from_sequence(s);
        if (ijk.j + ijk.k == f) total += determinant(build_matrix_closed_form(lambda, mu, s));
    });
    return total;
}

} // namespace lgv
