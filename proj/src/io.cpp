#include "lgv/io.hpp"

#include <sstream>
#include <stdexcept>

namespace lgv {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer list: '" + text + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("not an integer list: '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string flat_csv(const Partition& q) {
    std::string s;
    for (int r = 1; r <= q.p(); ++r) {
        if (r > 1) s += ',';
        s += std::to_string(q.part(r));
    }
    return s;
}

std::string seq_label(const TriangularSequence& s) {
    std::string out = "(";
    if (s.p() == 3) {
        const auto ijk = SequenceIndex3::from_sequence(s);
        out += std::to_string(ijk.i) + "," + std::to_string(ijk.j) + "," + std::to_string(ijk.k);
    } else {
        const auto& flat = s.flat();
        for (std::size_t t = 0; t < flat.size(); ++t) {
            if (t) out += ',';
            out += std::to_string(flat[t]);
        }
    }
    return out + ")";
}

} // namespace

Partition parse_partition(const std::string& text) {
    return Partition(parse_int_list(text));
}

TriangularSequence parse_flat_sequence(const std::string& text, int p) {
    if (p == 1) {
        if (!text.empty())
            throw std::invalid_argument("p = 1 takes an empty sequence");
        return TriangularSequence::empty(1);
    }
    return TriangularSequence(p, parse_int_list(text));
}

nlohmann::ordered_json report_to_json(const CoefficientReport& rep) {
    nlohmann::ordered_json j;
    j["lambda"] = rep.lambda.parts();
    j["mu"] = rep.mu.parts();
    j["total"] = rep.total.str();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [s, d] : rep.per_sequence)
        j["terms"].push_back({{"s", s.flat()}, {"det", d.str()}});
    if (rep.lambda.p() == 3) {
        auto& partial = j["partial"] = nlohmann::ordered_json::object();
        for (const auto& [f, v] : rep.per_f) partial[std::to_string(f)] = v.str();
    }
    return j;
}

CoefficientReport report_from_json(const nlohmann::ordered_json& j) {
    Partition lambda(j.at("lambda").get<std::vector<int>>());
    Partition mu(j.at("mu").get<std::vector<int>>());
    CoefficientReport rep{std::move(lambda), std::move(mu)};
    rep.total = Int(j.at("total").get<std::string>());
    for (const auto& term : j.at("terms"))
        rep.per_sequence.emplace_back(
            TriangularSequence(rep.lambda.p(), term.at("s").get<std::vector<int>>()),
            Int(term.at("det").get<std::string>()));
    if (j.contains("partial"))
        for (const auto& [key, val] : j.at("partial").items())
            rep.per_f[std::stoi(key)] = Int(val.get<std::string>());
    return rep;
}

std::string report_to_table(const CoefficientReport& rep) {
    std::ostringstream out;
    out << "lambda = " << rep.lambda.str() << "\n";
    out << "mu     = " << rep.mu.str() << "\n";
    out << (rep.lambda.p() == 3 ? "s=(i,j,k)  det\n" : "s  det\n");
    for (const auto& [s, d] : rep.per_sequence)
        out << seq_label(s) << "  " << d.str() << "\n";
    if (!rep.per_f.empty()) {
        out << "f  partial\n";
        for (const auto& [f, v] : rep.per_f) out << f << "  " << v.str() << "\n";
    }
    out << "total = " << rep.total.str() << "\n";
    if (rep.oracle_checked) out << "oracle check: ok\n";
    return out.str();
}

std::string scan_csv_header() { return "lambda;mu;total;min_partial;violations"; }

std::string scan_record_csv(const ScanRecord& rec) {
    std::string viols;
    for (std::size_t i = 0; i < rec.violations.size(); ++i) {
        if (i) viols += '|';
        viols += rec.violations[i];
    }
    return flat_csv(rec.lambda) + ";" + flat_csv(rec.mu) + ";" + rec.total.str() + ";" +
           (rec.min_partial ? rec.min_partial->str() : std::string()) + ";" + viols;
}

nlohmann::ordered_json scan_record_json(const ScanRecord& rec) {
    nlohmann::ordered_json j;
    j["lambda"] = rec.lambda.parts();
    j["mu"] = rec.mu.parts();
    j["total"] = rec.total.str();
    j["min_partial"] =
        rec.min_partial ? nlohmann::ordered_json(rec.min_partial->str()) : nullptr;
    j["mu_in_lambda"] = rec.mu_in_lambda;
    j["violations"] = rec.violations;
    return j;
}

std::string scan_record_table(const ScanRecord& rec) {
    std::string line = rec.lambda.str() + "  " + rec.mu.str() + "  c=" + rec.total.str();
    if (rec.min_partial) line += "  min_f=" + rec.min_partial->str();
    if (!rec.mu_in_lambda) line += "  [mu not in lambda]";
    for (const auto& v : rec.violations) line += "  VIOLATION: " + v;
    return line;
}

nlohmann::ordered_json scan_summary_json(const ScanSummary& summary) {
    nlohmann::ordered_json j;
    j["pairs"] = summary.pairs;
    j["violations"] = summary.violation_count;
    j["min_coefficient"] = summary.min_total.str();
    j["argmin_lambda"] =
        summary.argmin_lambda ? nlohmann::ordered_json(summary.argmin_lambda->parts()) : nullptr;
    j["argmin_mu"] =
        summary.argmin_mu ? nlohmann::ordered_json(summary.argmin_mu->parts()) : nullptr;
    return j;
}

std::string scan_summary_table(const ScanSummary& summary) {
    std::ostringstream out;
    out << "pairs scanned: " << summary.pairs << "\n";
    out << "violations:    " << summary.violation_count << "\n";
    if (summary.argmin_lambda)
        out << "min c(lambda,mu) = " << summary.min_total.str() << " at lambda="
            << summary.argmin_lambda->str() << " mu=" << summary.argmin_mu->str() << "\n";
    return out.str();
}

} // namespace lgv
