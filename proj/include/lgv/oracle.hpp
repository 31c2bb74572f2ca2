#pragma once

#include <vector>

#include "lgv/bigint.hpp"
#include "lgv/lattice.hpp"

namespace lgv {

// w[i] is the 0-based index of the start assigned to target i, so the i-th
// path runs A_{w[i]} -> B_i.
using Perm = std::vector<int>;

int perm_sign(const Perm& w);
std::vector<Perm> all_permutations(int p);
Perm identity_perm(int p);

// A p-tuple of pairwise vertex-disjoint paths, path i from A_{w[i]} to B_i,
// weighted by the signature of w.
struct SignedTuple {
    Perm w;
    std::vector<LatticePath> paths;
    int sign = 1;
};

// Every vertex-disjoint tuple for the given permutation, exactly once, in
// lexicographic order of the concatenated step strings.  Exponential; this
// is the ground-truth oracle, not a production counter.
std::vector<SignedTuple> enumerate_tuples(const PointConfiguration& config, const Perm& w);

// Same search, counting only (no tuples materialized).
Int count_tuples(const PointConfiguration& config, const Perm& w);

// sum over all w in Sym(p) of sign(w) * #tuples; equals the determinant of
// the path-count matrix for arbitrary start/end points.
Int signed_count(const PointConfiguration& config);

// p = 3: all tuples with sign -1 across the odd permutations.  For
// configurations coming from a triangular sequence only the transpositions
// (12) and (23) ever contribute.
std::vector<SignedTuple> negative_tuples(const PointConfiguration& config);

} // namespace lgv
