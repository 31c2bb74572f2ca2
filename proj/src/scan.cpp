#include "lgv/scan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "lgv/lattice.hpp"
#include "lgv/log.hpp"
#include "lgv/matrix.hpp"
#include "lgv/oracle.hpp"
#include "lgv/surgery.hpp"
#include "lgv/triangular.hpp"

namespace lgv {

namespace {

bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t r = a.size(); r-- > 0;) {
        if (a[r] != b[r]) return a[r] < b[r];
    }
    return false;
}

std::string flat_str(const Partition& q) {
    std::string s;
    for (int r = 1; r <= q.p(); ++r) {
        if (r > 1) s += ',';
        s += std::to_string(q.part(r));
    }
    return s;
}

std::string seq_str(const TriangularSequence& s) {
    std::string out = "(";
    const auto& flat = s.flat();
    for (std::size_t t = 0; t < flat.size(); ++t) {
        if (t) out += ',';
        out += std::to_string(flat[t]);
    }
    return out + ")";
}

// |S(lambda)| in closed form: column j contributes C(lambda_{j+1} + p - j, p - j)
double sequence_count_estimate(const Partition& lambda) {
    double n = 1;
    for (int j = 1; j <= lambda.p() - 1; ++j) {
        double col = 1;
        for (int t = 1; t <= lambda.p() - j; ++t)
            col = col * (lambda.part(j + 1) + t) / t;
        n *= col;
    }
    return n;
}

ScanRecord scan_pair(const ScanJob& job, const Partition& lambda, const Partition& mu,
                     const std::vector<TriangularSequence>& seqs) {
    const int p = lambda.p();
    ScanRecord rec{lambda, mu};
    rec.mu_in_lambda = lambda.contains(mu);

    std::map<int, Int> per_f;
    if (p == 3)
        for (int f = 0; f <= lambda.part(2) + lambda.part(3); ++f) per_f[f] = 0;

    for (const auto& s : seqs) {
        Int d = determinant(build_matrix_closed_form(lambda, mu, s));
        if (job.mode == ScanMode::OracleCheck) {
            const auto cfg = PointConfiguration::from_partitions(lambda, mu, s);
            if (signed_count(cfg) != d)
                rec.violations.push_back("oracle mismatch: signed count != det at s=" +
                                         seq_str(s));
        }
        if (p == 3) {
            const auto ijk = SequenceIndex3::from_sequence(s);
            per_f[ijk.j + ijk.k] += d;
        }
        rec.total += d;
    }

    if (p == 3) {
        bool first = true;
        for (const auto& [f, v] : per_f) {
            if (first || v < *rec.min_partial) rec.min_partial = v;
            first = false;
            if (v < 0)
                rec.violations.push_back("negative fiber sum at f=" + std::to_string(f));
        }
        if (rec.mu_in_lambda && per_f.at(0) <= 0)
            rec.violations.push_back("fiber sum at f=0 not positive despite mu in lambda");
    }

    if (p <= 3 && rec.total < 0)
        rec.violations.push_back("negative coefficient");
    if (rec.mu_in_lambda && rec.total <= 0)
        rec.violations.push_back("nonpositive coefficient in containment regime");

    if (job.mode == ScanMode::Injection) {
        for (int f = 0; f <= lambda.part(2) + lambda.part(3); ++f) {
            const auto irep = verify_injection(lambda, mu, f);
            for (const auto& v : irep.violations)
                rec.violations.push_back("injection: " + v);
        }
    } else if (job.mode == ScanMode::Balanced) {
        Int bal = 0;
        for (const auto& s : seqs)
            bal += balanced_triple_count(lambda, mu, SequenceIndex3::from_sequence(s));
        if (bal != rec.total)
            rec.violations.push_back("balanced triple total " + bal.str() +
                                     " != coefficient " + rec.total.str());
    }
    return rec;
}

} // namespace

std::vector<Partition> partitions_in_box(const Partition& bound) {
    const int p = bound.p();
    std::vector<std::vector<int>> flats;
    std::vector<int> cur(static_cast<std::size_t>(p));
    std::function<void(int, int)> rec = [&](int r, int hi) {
        if (r == p) {
            flats.push_back(cur);
            return;
        }
        const int cap = std::min(hi, bound.part(r + 1));
        for (int v = cap; v >= 0; --v) {
            cur[static_cast<std::size_t>(r)] = v;
            rec(r + 1, v);
        }
    };
    rec(0, bound.part(1));
    std::sort(flats.begin(), flats.end(), colex_less);
    std::vector<Partition> out;
    out.reserve(flats.size());
    for (auto& f : flats) out.emplace_back(std::move(f));
    return out;
}

ScanSummary run_scan(const ScanJob& job, const std::function<void(const ScanRecord&)>& sink) {
    const int p = job.bound.p();
    const bool oracle_mode = job.mode != ScanMode::Coefficients;
    if (oracle_mode && !job.force && (p > 6 || job.bound.part(1) > 6))
        throw std::invalid_argument(
            "oracle-involving scan refuses parts > 6 or p > 6 without --force");
    if ((job.mode == ScanMode::Injection || job.mode == ScanMode::Balanced) && p != 3)
        throw std::invalid_argument("injection and balanced scans require p = 3");

    const auto lams = partitions_in_box(job.bound);
    const auto mus = lams;

    double determinants = 0;
    for (const auto& lam : lams) determinants += sequence_count_estimate(lam);
    determinants *= static_cast<double>(mus.size());
    log::info("scan: " + std::to_string(lams.size()) + " partitions in the box, ~" +
              std::to_string(static_cast<long long>(determinants)) + " determinants");
    if (!job.force && !oracle_mode && determinants > 5e7)
        throw std::invalid_argument(
            "bound needs roughly " + std::to_string(static_cast<long long>(determinants)) +
            " determinant evaluations; pass --force to run at this scale");

    std::size_t start_index = 0;
    if (!job.checkpoint.empty()) {
        std::ifstream in(job.checkpoint);
        std::string line;
        if (in && std::getline(in, line) && !line.empty()) {
            for (std::size_t i = 0; i < lams.size(); ++i)
                if (flat_str(lams[i]) == line) {
                    start_index = i + 1;
                    break;
                }
            log::info("checkpoint: resuming after lambda=" + line);
        }
    }

    std::vector<std::vector<ScanRecord>> results(lams.size());
    std::atomic<std::size_t> next{start_index};
    const int workers = std::max(1, job.jobs);

    auto work = [&]() {
        for (;;) {
            const std::size_t li = next.fetch_add(1);
            if (li >= lams.size()) return;
            const Partition& lambda = lams[li];
            const auto seqs = enumerate_triangular_sequences(lambda);
            auto& out = results[li];
            for (const Partition& mu : mus) {
                if (job.mu_in_lambda_only && !lambda.contains(mu)) continue;
                out.push_back(scan_pair(job, lambda, mu, seqs));
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    ScanSummary summary;
    bool have_min = false;
    for (std::size_t li = start_index; li < lams.size(); ++li) {
        for (const auto& rec : results[li]) {
            ++summary.pairs;
            summary.violation_count += static_cast<long long>(rec.violations.size());
            if (rec.mu_in_lambda && (!have_min || rec.total < summary.min_total)) {
                summary.min_total = rec.total;
                summary.argmin_lambda = rec.lambda;
                summary.argmin_mu = rec.mu;
                have_min = true;
            }
            sink(rec);
        }
        if (!job.checkpoint.empty()) {
            std::ofstream out(job.checkpoint, std::ios::trunc);
            out << flat_str(lams[li]) << '\n';
        }
    }
    return summary;
}

} // namespace lgv
