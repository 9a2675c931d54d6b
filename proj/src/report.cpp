#include <cstdio>
#include <iomanip>
#include <sstream>

#include "sts/campaign.hpp"
#include "sts/errors.hpp"

namespace sts {
namespace {

constexpr const char* kBinLabels[11] = {"0-.01",   ".01-.1", ".1-.2", ".2-.3", ".3-.4", ".4-.5",
                                        ".5-.6",   ".6-.7",  ".7-.8", ".8-.9", ".9-1"};
constexpr double kBinEdges[12] = {0.0, 0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

constexpr const char* kVerdictColumns[6] = {"Test",
                                            "Expected Proportion",
                                            "Observed Proportion",
                                            "Status for Proportion of passing",
                                            "P-value of P-values",
                                            "Status for Uniform/Non-uniform distribution"};

using Row = std::vector<std::string>;

Row histogram_header() {
    Row r{"Test"};
    for (const char* l : kBinLabels) r.emplace_back(l);
    return r;
}

Row histogram_row(const TestSummary& s) {
    Row r{std::to_string(to_int(s.id))};
    for (auto c : s.bins.appendix) r.push_back(std::to_string(c));
    return r;
}

Row verdict_row(const TestSummary& s) {
    const auto& v = s.verdict;
    return {std::to_string(to_int(s.id)),
            format_fixed(v.expected_proportion),
            format_fixed(v.observed_proportion),
            v.proportion_success ? "Success" : "Unsuccess",
            v.pop ? format_scientific(*v.pop) : "n/a",
            v.pop ? (v.uniform ? "Uniform" : "Non-uniform") : "n/a"};
}

void emit_tsv(std::ostream& out, const std::vector<Row>& rows) {
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
        out << '\n';
    }
}

void emit_aligned(std::ostream& out, const std::vector<Row>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
        }
        out << line << '\n';
    }
}

}  // namespace

std::string format_scientific(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string format_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string render_report(const CampaignReport& report, ReportFormat format) {
    std::vector<Row> hist{histogram_header()};
    std::vector<Row> verdicts{Row(std::begin(kVerdictColumns), std::end(kVerdictColumns))};
    for (const auto& s : report.tests) {
        hist.push_back(histogram_row(s));
        verdicts.push_back(verdict_row(s));
    }
    std::ostringstream out;
    if (format == ReportFormat::Tsv) {
        emit_tsv(out, hist);
        out << '\n';
        emit_tsv(out, verdicts);
    } else {
        out << "Counting of P-values lying in the given ranges\n\n";
        emit_aligned(out, hist);
        out << "\nStatus for Proportion of Passing and Uniformity of distribution\n\n";
        emit_aligned(out, verdicts);
    }
    return out.str();
}

void write_histogram_csv(const CampaignReport& report, std::ostream& out) {
    out << "test,bin_lo,bin_hi,count\n";
    for (const auto& s : report.tests) {
        for (std::size_t b = 0; b < 11; ++b) {
            out << to_int(s.id) << ',' << kBinEdges[b] << ',' << kBinEdges[b + 1] << ',' << s.bins.appendix[b]
                << '\n';
        }
    }
}

void write_pvalues(const CampaignReport& report, std::ostream& out) {
    out << "test\tp\n";
    char buf[64];
    for (const auto& s : report.tests) {
        for (auto p : s.pvalues) {
            std::snprintf(buf, sizeof buf, "%d\t%.17g\n", to_int(s.id), p.value());
            out << buf;
        }
    }
}

std::map<TestId, std::vector<Probability>> read_pvalues(std::istream& in) {
    std::map<TestId, std::vector<Probability>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || (lineno == 1 && line.rfind("test", 0) == 0)) continue;
        std::istringstream fields(line);
        int id = 0;
        double p = 0.0;
        std::string extra;
        if (!(fields >> id >> p) || (fields >> extra)) {
            throw ConfigError("P-value file line " + std::to_string(lineno) + ": expected '<test> <p>'");
        }
        try {
            out[test_id_from_int(id)].push_back(Probability::checked(p));
        } catch (const Error& e) {
            throw ConfigError("P-value file line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace sts
