#pragma once

#include <string>
#include <vector>

#include "lgv/bigint.hpp"
#include "lgv/lattice.hpp"
#include "lgv/oracle.hpp"
#include "lgv/partition.hpp"
#include "lgv/triangular.hpp"

namespace lgv {

enum class SwapKind { Horizontal, Diagonal };

// Result of a path swap.  Horizontal: first = new path A_1* -> B_1,
// second = new path A_2* -> B_2, sequence (i, j-l, k+l).  Diagonal:
// first = new path A_2* -> B_2, second = new path A_3* -> B_3, sequence
// (i-l, j, k).  The untouched third path and the B's never move, and the
// fiber f = j + k is preserved by construction.
struct SwapResult {
    LatticePath first, second;
    SequenceIndex3 new_sequence;
    int translation = 0;
    SwapKind kind = SwapKind::Horizontal;
};

// The two start-point layouts that can carry a negative tuple (p = 3), plus
// the three Case-2 subdivisions by the position of A_2 relative to A_3.
enum class InversionCase { Case1_12, Case2_NW, Case2_SE, Case2_SW };

// Classifies from the start points; throws if the layout matches neither
// case (such a w cannot carry a non-intersecting tuple).
InversionCase classify_inversion(const std::vector<LatticePoint>& starts, const Perm& w);

// Case 1 swap.  pi1: A_1 -> B_2 and pi2: A_2 -> B_1, vertex-disjoint, with
// A_2 strictly South and strictly East of A_1.  Chops pi1 where it first
// reaches the height of A_2 and exchanges the heads by a horizontal
// translation of l = D_h(pi1, pi2) units.
SwapResult horizontal_swap(const LatticePath& pi1, const LatticePath& pi2,
                           const SequenceIndex3& seq);

// Case 2 swap.  pi2: A_2 -> B_3 and pi3: A_3 -> B_2, vertex-disjoint, A_2
// not weakly NE of A_3.  Same surgery along the slope-1 translation by
// l = D_d(pi2, pi3); finite because both ends lie on the main diagonal.
SwapResult diagonal_swap(const LatticePath& pi2, const LatticePath& pi3,
                         const SequenceIndex3& seq);

// p = 2: #Pi(i), the non-intersecting identity pairs at s = (a11 = i).
// Equals det M(i), which is already nonnegative for every i.
Int p2_pair_count(const Partition& lambda, const Partition& mu, int i);

// Extensional check of the negative -> positive injection at one fiber:
// every negative tuple is swapped, the image is validated (triangular
// sequence at the same f, identity pairing, vertex-disjoint, genuinely one
// of the enumerated positives) and global injectivity across both cases is
// checked set-wise, independently of the inequalities that prove it.
struct InjectionReport {
    int f = 0;
    long long negative_count = 0;
    long long positive_count = 0; // identity tuples over the whole fiber
    Int fiber_sum = 0;            // c(lambda, mu; f)
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

InjectionReport verify_injection(const Partition& lambda, const Partition& mu, int f);

// Identity triples at s admitting neither swap back into S(lambda):
// l_h = infinity or (i, j+l_h, k-l_h) not triangular, and (i+l_d, j, k) not
// triangular.  Summed over S(lambda) this recovers c(lambda, mu).
Int balanced_triple_count(const Partition& lambda, const Partition& mu,
                          const SequenceIndex3& seq);

} // namespace lgv
