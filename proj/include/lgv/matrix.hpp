#pragma once

#include <vector>

#include "lgv/bigint.hpp"
#include "lgv/lattice.hpp"
#include "lgv/partition.hpp"
#include "lgv/triangular.hpp"

namespace lgv {

// p x p matrix of exact integers; entry (r,c) is the number of monotone
// paths A_r(s) -> B_c, equivalently the binomial closed form.
struct BinomialMatrix {
    int p = 0;
    std::vector<Int> entries; // row-major

    Int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * p + c]; }
    const Int& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * p + c]; }
};

// Entry (r,c) = C(lambda_r - a_rr, mu_c + r - c + R_r - a_rr) for r < p and
// C(lambda_p, mu_c + p - c + sum_t (a_tt - C_t)) on the bottom row.
BinomialMatrix build_matrix_closed_form(const Partition& lambda, const Partition& mu,
                                        const TriangularSequence& s);

// Entrywise path_count over the configuration's start/end points.  Must
// agree with the closed form; the two constructions stay independent so the
// tests can cross-validate them.
BinomialMatrix build_matrix_path_counts(const PointConfiguration& config);

Int determinant(const BinomialMatrix& m);

// exposed for cross-testing of the two elimination routes
Int bareiss_determinant(BinomialMatrix m);
Int cofactor_determinant(const BinomialMatrix& m); // p <= 3

} // namespace lgv
