#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lgv/bigint.hpp"
#include "lgv/matrix.hpp"
#include "lgv/partition.hpp"
#include "lgv/triangular.hpp"

namespace lgv {

// c(lambda, mu) with its full per-sequence breakdown; negative contributors
// exist and are worth inspecting, so the terms are kept.
struct CoefficientReport {
    CoefficientReport(Partition lam, Partition m) : lambda(std::move(lam)), mu(std::move(m)) {}

    Partition lambda, mu;
    Int total = 0;
    std::vector<std::pair<TriangularSequence, Int>> per_sequence; // enumeration order
    std::map<int, Int> per_f;                                     // p == 3 only
    bool oracle_checked = false;
};

// c(lambda, mu) = sum over S(lambda) of det M(s)
CoefficientReport coefficient(const Partition& lambda, const Partition& mu);

// p = 3 fiber: sum of det M(i,j,k) over triples with j + k = f
Int partial_sum(const Partition& lambda, const Partition& mu, int f);

} // namespace lgv
