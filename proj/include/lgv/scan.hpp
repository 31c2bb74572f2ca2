#pragma once

#include <functional>
#include <utility>
#include <optional>
#include <string>
#include <vector>

#include "lgv/bigint.hpp"
#include "lgv/partition.hpp"

namespace lgv {

enum class ScanMode { Coefficients, OracleCheck, Injection, Balanced };

// Exhaustive sweep over all pairs lambda, mu inside a bounding partition.
// Oracle-involving modes are exponential and refuse large bounds unless
// forced; the determinant-only mode handles the full published bounds.
struct ScanJob {
    explicit ScanJob(Partition b) : bound(std::move(b)) {}

    Partition bound;
    ScanMode mode = ScanMode::Coefficients;
    int jobs = 1;
    bool mu_in_lambda_only = false; // restrict to the containment regime
    bool force = false;             // lift the oracle cost guard
    std::string checkpoint;         // resume file (empty = none)
};

struct ScanRecord {
    ScanRecord(Partition lam, Partition m) : lambda(std::move(lam)), mu(std::move(m)) {}

    Partition lambda, mu;
    Int total = 0;
    std::optional<Int> min_partial; // p == 3 only
    bool mu_in_lambda = false;
    std::vector<std::string> violations;
};

struct ScanSummary {
    long long pairs = 0;
    long long violation_count = 0;
    Int min_total = 0; // over the containment regime (where positivity is claimed)
    std::optional<Partition> argmin_lambda, argmin_mu;
};

// All partitions fitting componentwise inside the bound, with exactly as
// many parts, in colexicographic order (last part varies slowest).
std::vector<Partition> partitions_in_box(const Partition& bound);

// Records are emitted in deterministic (lambda, mu) colex order regardless
// of the worker count.  Returns the summary; per-record output goes through
// the sink.
ScanSummary run_scan(const ScanJob& job, const std::function<void(const ScanRecord&)>& sink);

} // namespace lgv
