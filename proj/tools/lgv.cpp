// Command-line front end: coefficient computation, exhaustive scans, oracle
// cross-checks, injection verification, balanced-triple counting and SVG
// configuration plots.
//
// Exit codes: 0 success, 2 malformed input, 3 invariant violation or
// positivity counterexample.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lgv/io.hpp"
#include "lgv/lattice.hpp"
#include "lgv/log.hpp"
#include "lgv/matrix.hpp"
#include "lgv/oracle.hpp"
#include "lgv/report.hpp"
#include "lgv/scan.hpp"
#include "lgv/surgery.hpp"
#include "lgv/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitViolation = 3;

struct Output {
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::trunc);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

void oracle_cost_guard(const lgv::Partition& lambda, bool force) {
    if (!force && (lambda.p() > 6 || lambda.part(1) > 6))
        throw std::invalid_argument(
            "oracle enumeration refuses parts > 6 or p > 6; pass --force to override");
}

int cmd_compute(const std::string& lambda_s, const std::string& mu_s,
                std::optional<int> fiber, const std::string& format, bool check,
                const std::string& out_path) {
    const auto lambda = lgv::parse_partition(lambda_s);
    const auto mu = lgv::parse_partition(mu_s);
    auto rep = lgv::coefficient(lambda, mu);

    if (fiber) {
        if (lambda.p() != 3)
            throw std::invalid_argument("--f applies to p = 3 only");
        if (*fiber < 0 || *fiber > lambda.part(2) + lambda.part(3))
            throw std::invalid_argument("--f out of range 0 <= f <= lambda_2 + lambda_3");
        lgv::CoefficientReport restricted{lambda, mu};
        for (auto& [s, d] : rep.per_sequence) {
            const auto ijk = lgv::SequenceIndex3::from_sequence(s);
            if (ijk.j + ijk.k == *fiber) {
                restricted.total += d;
                restricted.per_sequence.emplace_back(s, d);
            }
        }
        restricted.per_f[*fiber] = restricted.total;
        rep = std::move(restricted);
    }

    if (check) {
        oracle_cost_guard(lambda, false);
        for (const auto& [s, d] : rep.per_sequence) {
            const auto cfg = lgv::PointConfiguration::from_partitions(lambda, mu, s);
            if (lgv::signed_count(cfg) != d) {
                std::cerr << "invariant violated: LGV signed count != det M(s)\n";
                return kExitViolation;
            }
        }
        rep.oracle_checked = true;
    }

    Output out(out_path);
    if (format == "json") {
        out.stream() << lgv::report_to_json(rep).dump(2) << "\n";
    } else if (format == "csv") {
        lgv::ScanRecord rec{rep.lambda, rep.mu};
        rec.total = rep.total;
        rec.mu_in_lambda = rep.lambda.contains(rep.mu);
        if (!rep.per_f.empty()) {
            rec.min_partial = rep.per_f.begin()->second;
            for (const auto& [f, v] : rep.per_f)
                if (v < *rec.min_partial) rec.min_partial = v;
        }
        out.stream() << lgv::scan_csv_header() << "\n" << lgv::scan_record_csv(rec) << "\n";
    } else {
        out.stream() << lgv::report_to_table(rep);
    }
    return kExitOk;
}

int cmd_scan(const std::string& bound_s, const std::string& mode_s, int jobs,
             const std::string& format, const std::string& out_path,
             const std::string& checkpoint, bool force, bool mu_in_lambda) {
    lgv::ScanJob job{lgv::parse_partition(bound_s)};
    if (mode_s == "coefficients")
        job.mode = lgv::ScanMode::Coefficients;
    else if (mode_s == "oracle-check")
        job.mode = lgv::ScanMode::OracleCheck;
    else if (mode_s == "injection")
        job.mode = lgv::ScanMode::Injection;
    else if (mode_s == "balanced")
        job.mode = lgv::ScanMode::Balanced;
    else
        throw std::invalid_argument("unknown scan mode: " + mode_s);
    job.jobs = jobs;
    job.force = force;
    job.mu_in_lambda_only = mu_in_lambda;
    job.checkpoint = checkpoint;

    Output out(out_path);
    if (format == "csv") out.stream() << lgv::scan_csv_header() << "\n";
    const auto summary = lgv::run_scan(job, [&](const lgv::ScanRecord& rec) {
        if (format == "json")
            out.stream() << lgv::scan_record_json(rec).dump() << "\n";
        else if (format == "csv")
            out.stream() << lgv::scan_record_csv(rec) << "\n";
        else
            out.stream() << lgv::scan_record_table(rec) << "\n";
    });

    if (format == "json")
        out.stream() << nlohmann::ordered_json{{"summary", lgv::scan_summary_json(summary)}}
                            .dump()
                     << "\n";
    else if (format == "table")
        out.stream() << lgv::scan_summary_table(summary);
    else
        std::cerr << lgv::scan_summary_table(summary);

    if (summary.violation_count > 0) {
        std::cerr << "scan found " << summary.violation_count
                  << " violation(s) -- see the records above\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_oracle_check(const std::string& lambda_s, const std::string& mu_s, bool force) {
    const auto lambda = lgv::parse_partition(lambda_s);
    const auto mu = lgv::parse_partition(mu_s);
    if (lambda.p() != mu.p())
        throw std::invalid_argument("lambda and mu must have the same number of parts");
    oracle_cost_guard(lambda, force);

    long long checked = 0, failed = 0;
    lgv::for_each_triangular_sequence(lambda, [&](const lgv::TriangularSequence& s) {
        const auto cfg = lgv::PointConfiguration::from_partitions(lambda, mu, s);
        const auto closed = lgv::build_matrix_closed_form(lambda, mu, s);
        const auto counted = lgv::build_matrix_path_counts(cfg);
        if (closed.entries != counted.entries) {
            std::cerr << "matrix mismatch (closed form vs path counts)\n";
            ++failed;
        }
        if (lgv::determinant(closed) != lgv::signed_count(cfg)) {
            std::cerr << "LGV mismatch: det != signed tuple count\n";
            ++failed;
        }
        ++checked;
    });
    std::cout << "checked " << checked << " sequence(s), " << failed << " mismatch(es)\n";
    return failed == 0 ? kExitOk : kExitViolation;
}

int cmd_verify_injection(const std::string& lambda_s, const std::string& mu_s,
                         std::optional<int> fiber, bool force) {
    const auto lambda = lgv::parse_partition(lambda_s);
    const auto mu = lgv::parse_partition(mu_s);
    if (lambda.p() != 3 || mu.p() != 3)
        throw std::invalid_argument("verify-injection requires p = 3");
    oracle_cost_guard(lambda, force);

    long long violations = 0;
    const int fmax = lambda.part(2) + lambda.part(3);
    const int flo = fiber ? *fiber : 0, fhi = fiber ? *fiber : fmax;
    if (flo < 0 || fhi > fmax) throw std::invalid_argument("--f out of range");
    for (int f = flo; f <= fhi; ++f) {
        const auto rep = lgv::verify_injection(lambda, mu, f);
        std::cout << "f=" << f << ": negatives=" << rep.negative_count
                  << " positives=" << rep.positive_count << " partial=" << rep.fiber_sum.str()
                  << (rep.ok() ? " ok" : " VIOLATIONS") << "\n";
        for (const auto& v : rep.violations) {
            std::cout << "  " << v << "\n";
            ++violations;
        }
    }
    return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_balanced(const std::string& lambda_s, const std::string& mu_s, bool force) {
    const auto lambda = lgv::parse_partition(lambda_s);
    const auto mu = lgv::parse_partition(mu_s);
    if (lambda.p() != 3 || mu.p() != 3)
        throw std::invalid_argument("balanced requires p = 3");
    oracle_cost_guard(lambda, force);

    lgv::Int balanced = 0;
    lgv::for_each_triangular_sequence(lambda, [&](const lgv::TriangularSequence& s) {
        const auto ijk = lgv::SequenceIndex3::from_sequence(s);
        const auto n = lgv::balanced_triple_count(lambda, mu, ijk);
        std::cout << "(" << ijk.i << "," << ijk.j << "," << ijk.k << ")  " << n.str() << "\n";
        balanced += n;
    });
    const auto c = lgv::coefficient(lambda, mu).total;
    std::cout << "balanced total = " << balanced.str() << ", c(lambda,mu) = " << c.str()
              << "\n";
    if (balanced != c) {
        std::cerr << "invariant violated: balanced total != coefficient\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_svg(const std::string& lambda_s, const std::string& mu_s, const std::string& seq_s,
            bool paths, const std::string& out_path) {
    const auto lambda = lgv::parse_partition(lambda_s);
    const auto mu = lgv::parse_partition(mu_s);
    if (lambda.p() != mu.p())
        throw std::invalid_argument("lambda and mu must have the same number of parts");
    const auto s = lgv::parse_flat_sequence(seq_s, lambda.p());
    if (!s.is_triangular(lambda))
        throw std::invalid_argument("sequence is not triangular with respect to lambda");
    Output out(out_path);
    out.stream() << lgv::render_configuration_svg(lambda, mu, s, paths);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sums of binomial determinants via non-intersecting lattice paths"};
    app.require_subcommand(1);

    std::string lambda_s, mu_s, bound_s, seq_s, out_path, checkpoint;
    std::string format = "table", mode = "coefficients";
    int jobs = 1;
    std::optional<int> fiber;
    bool force = false, check = false, paths = false, mu_in_lambda = false;

    auto* compute = app.add_subcommand("compute", "c(lambda,mu) with per-sequence terms");
    compute->add_option("--lambda", lambda_s, "partition, e.g. 3,3,3")->required();
    compute->add_option("--mu", mu_s, "partition, same length")->required();
    compute->add_option("--f", fiber, "restrict to the fiber j+k=f (p=3)");
    compute->add_option("--format", format, "json|csv|table");
    compute->add_option("--out", out_path, "output file (default stdout)");
    compute->add_flag("--check", check, "cross-check every determinant against the oracle");

    auto* scan = app.add_subcommand("scan", "sweep all pairs inside a bounding partition");
    scan->add_option("--bound", bound_s, "bounding partition, e.g. 4,4,4")->required();
    scan->add_option("--mode", mode, "coefficients|oracle-check|injection|balanced");
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_option("--format", format, "json|csv|table");
    scan->add_option("--out", out_path, "output file (default stdout)");
    scan->add_option("--checkpoint", checkpoint, "resume file (stores last finished lambda)");
    scan->add_flag("--force", force, "lift the oracle cost guard");
    scan->add_flag("--mu-in-lambda", mu_in_lambda, "restrict to the containment regime");

    auto* oracle = app.add_subcommand("oracle-check",
                                      "det M(s) vs LGV signed count for one pair");
    oracle->add_option("--lambda", lambda_s)->required();
    oracle->add_option("--mu", mu_s)->required();
    oracle->add_flag("--force", force);

    auto* inject = app.add_subcommand("verify-injection",
                                      "swap-surgery injection check (p=3)");
    inject->add_option("--lambda", lambda_s)->required();
    inject->add_option("--mu", mu_s)->required();
    inject->add_option("--f", fiber, "single fiber (default: all)");
    inject->add_flag("--force", force);

    auto* balanced = app.add_subcommand("balanced", "balanced-triple counts (p=3)");
    balanced->add_option("--lambda", lambda_s)->required();
    balanced->add_option("--mu", mu_s)->required();
    balanced->add_flag("--force", force);

    auto* svg = app.add_subcommand("svg", "SVG plot of a point configuration");
    svg->add_option("--lambda", lambda_s)->required();
    svg->add_option("--mu", mu_s)->required();
    svg->add_option("--s", seq_s, "row-major flat sequence, e.g. 0,0,2 (omit for p=1)");
    svg->add_flag("--paths", paths, "overlay one non-intersecting identity tuple");
    svg->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (app.got_subcommand(compute))
            return cmd_compute(lambda_s, mu_s, fiber, format, check, out_path);
        if (app.got_subcommand(scan))
            return cmd_scan(bound_s, mode, jobs, format, out_path, checkpoint, force,
                            mu_in_lambda);
        if (app.got_subcommand(oracle)) return cmd_oracle_check(lambda_s, mu_s, force);
        if (app.got_subcommand(inject))
            return cmd_verify_injection(lambda_s, mu_s, fiber, force);
        if (app.got_subcommand(balanced)) return cmd_balanced(lambda_s, mu_s, force);
        if (app.got_subcommand(svg)) return cmd_svg(lambda_s, mu_s, seq_s, paths, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}
