#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "sts/campaign.hpp"
#include "sts/config.hpp"
#include "sts/errors.hpp"
#include "sts/generators.hpp"
#include "sts/suite.hpp"

namespace sts::cli {
namespace {

class IoError : public Error {
public:
    using Error::Error;
};

constexpr const char* kTestList =
    "Tests (numbered 1..15):\n"
    "   1 Frequency (monobit)             9 Universal statistical\n"
    "   2 Frequency within a block       10 Linear complexity\n"
    "   3 Runs                           11 Serial\n"
    "   4 Longest run of ones            12 Approximate entropy\n"
    "   5 Binary matrix rank             13 Cumulative sums\n"
    "   6 Discrete Fourier transform     14 Random excursions\n"
    "   7 Non-overlapping template       15 Random excursions variant\n"
    "   8 Overlapping template\n";

struct GenerateOpts {
    std::string gen;
    std::uint64_t seed = 1;
    std::string p, q, x0;
    std::optional<std::size_t> n;
    std::string format = "ascii";
    std::string out;
    std::optional<unsigned> bits_per_word;
};

struct TestOpts {
    std::string input;
    std::string format = "ascii";
    std::optional<std::size_t> n;
    std::string tests = "all";
    double alpha = 0.01;
    std::optional<std::string> tpl;
    std::optional<unsigned> t8_m;
    std::optional<unsigned> serial_m;
    std::optional<unsigned> apen_m;
    std::optional<std::size_t> lc_m;
    std::optional<unsigned> universal_l;
    std::optional<std::size_t> block_m;
    std::string dft_log = "e";
    std::string dft_variance = "half";
};

struct CampaignOpts {
    std::string config;
    std::string out;
    std::string format = "tsv";
    std::string emit_hist;
    std::string emit_pvalues;
    unsigned jobs = 0;
    bool progress = false;
};

struct ReportOpts {
    std::string pvalues;
    std::string format = "tsv";
    double alpha = 0.01;
    std::string out;
};

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream f(path, mode | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    return f;
}

std::string read_file(const std::string& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream f(path, mode);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::string data{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    if (f.bad()) throw IoError("error reading '" + path + "'");
    return data;
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    auto f = open_out(path);
    f << text;
    if (!f) throw IoError("error writing '" + path + "'");
}

ReportFormat parse_format(const std::string& s) { return s == "text" ? ReportFormat::Text : ReportFormat::Tsv; }

int cmd_generate(const GenerateOpts& o, std::ostream& err) {
    if (!o.n) throw ConfigError("--n is required");
    if (*o.n == 0) throw ConfigError("--n must be positive");
    GeneratorSpec spec;
    spec.kind = parse_generator_kind(o.gen);
    spec.seed = o.seed;
    if (spec.kind == GeneratorKind::Bbs) {
        const GeneratorSpec def = GeneratorSpec::default_bbs();
        auto big = [](const std::string& s, const mpz_class& fallback, const char* name) {
            if (s.empty()) return fallback;
            mpz_class v;
            if (v.set_str(s, 10) != 0) throw ConfigError(std::string("invalid --") + name);
            return v;
        };
        spec.p = big(o.p, def.p, "p");
        spec.q = big(o.q, def.q, "q");
        spec.x0 = big(o.x0, def.x0, "x0");
    }
    if (o.bits_per_word) {
        spec.pm_bits_per_word = *o.bits_per_word;
        spec.knuth_bits_per_word = *o.bits_per_word;
    }
    const BitSequence bits = generate(spec, *o.n);
    if (o.format == "binary") {
        const auto bytes = bits.to_bytes();
        auto f = open_out(o.out, std::ios::out | std::ios::binary);
        f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!f) throw IoError("error writing '" + o.out + "'");
    } else {
        auto f = open_out(o.out);
        f << bits.to_string();
        if (!f) throw IoError("error writing '" + o.out + "'");
    }
    err << bits.size() << " bits written to " << o.out << '\n';
    return kOk;
}

BitSequence load_sequence(const std::string& path, const std::string& format, std::optional<std::size_t> n) {
    if (format == "binary") {
        const std::string data = read_file(path, std::ios::in | std::ios::binary);
        const std::size_t bits = n.value_or(8 * data.size());
        const auto* p = reinterpret_cast<const std::uint8_t*>(data.data());
        return BitSequence::from_bytes(std::span<const std::uint8_t>(p, data.size()), bits);
    }
    BitSequence seq = BitSequence::from_ascii(read_file(path));
    if (n) seq = seq.prefix(*n);
    return seq;
}

std::string pvalue_label(TestId id, std::size_t i) {
    switch (id) {
        case TestId::Serial: return i == 0 ? "del1" : "del2";
        case TestId::CumulativeSums: return i == 0 ? "forward" : "backward";
        case TestId::RandomExcursions: return "s=" + std::to_string(kExcursionStates[i]);
        case TestId::RandomExcursionsVariant: return "s=" + std::to_string(kVariantStates[i]);
        default: return {};
    }
}

int cmd_test(const TestOpts& o, std::ostream& out, std::ostream& err) {
    const auto ids = parse_test_selection(o.tests);
    if (!(o.alpha > 0.0 && o.alpha < 1.0)) throw ConfigError("--alpha must lie in (0, 1)");
    SuiteParameters params;
    if (o.tpl) params.nonoverlapping_template = Template::parse(*o.tpl);
    if (o.t8_m) params.overlapping_m = *o.t8_m;
    params.serial_m = o.serial_m;
    if (o.apen_m) params.apen_m = *o.apen_m;
    if (o.lc_m) params.linear_complexity_m = *o.lc_m;
    params.universal_l = o.universal_l;
    params.block_frequency_m = o.block_m;
    params.dft.log10_threshold = o.dft_log == "10";
    params.dft.quarter_variance = o.dft_variance == "quarter";

    const BitSequence seq = load_sequence(o.input, o.format, o.n);
    for (TestId id : ids) {
        const auto& info = test_info(id);
        if (seq.size() < info.min_length) {
            throw ConfigError("test " + std::to_string(to_int(id)) + " (" + std::string(info.name) + ") needs n >= " +
                              std::to_string(info.min_length) + ", got " + std::to_string(seq.size()));
        }
    }
    bool all_pass = true;
    for (TestId id : ids) {
        const TestResult r = run_test(id, seq, params);
        if (!r.applicable) {
            out << to_int(id) << "  N/A  " << r.fail_reason.value_or("not applicable") << '\n';
            continue;
        }
        for (std::size_t i = 0; i < r.p_values.size(); ++i) {
            const bool pass = r.p_values[i] >= o.alpha;
            all_pass = all_pass && pass;
            out << to_int(id) << "  " << format_scientific(r.p_values[i]) << "  " << (pass ? "PASS" : "FAIL");
            const std::string label = pvalue_label(id, i);
            if (!label.empty()) out << "  " << label;
            out << '\n';
        }
        if (r.warning) err << "warning: test " << to_int(id) << ": " << *r.warning << '\n';
    }
    return all_pass ? kOk : kTestFailure;
}

unsigned jobs_from_env() {
    const char* v = std::getenv("RAND_STS_JOBS");
    if (v == nullptr || *v == '\0') return 0;
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (*end != '\0') throw ConfigError("RAND_STS_JOBS must be a non-negative integer");
    return static_cast<unsigned>(n);
}

int cmd_campaign(const CampaignOpts& o, std::ostream& out, std::ostream& err) {
    std::istringstream text(read_file(o.config));
    const CampaignConfig config = parse_config(text);
    config.validate();
    const unsigned jobs = o.jobs != 0 ? o.jobs : jobs_from_env();
    ProgressFn progress;
    if (o.progress) {
        progress = [&err](std::size_t done, std::size_t total) {
            err << "\rsequence " << done << '/' << total << std::flush;
            if (done == total) err << '\n';
        };
    }
    const CampaignReport report = run_campaign(config, jobs, progress);
    write_or_print(o.out, render_report(report, parse_format(o.format)), out);
    if (!o.emit_hist.empty()) {
        auto f = open_out(o.emit_hist);
        write_histogram_csv(report, f);
        if (!f) throw IoError("error writing '" + o.emit_hist + "'");
    }
    if (!o.emit_pvalues.empty()) {
        auto f = open_out(o.emit_pvalues);
        write_pvalues(report, f);
        if (!f) throw IoError("error writing '" + o.emit_pvalues + "'");
    }
    return kOk;
}

int cmd_report(const ReportOpts& o, std::ostream& out) {
    if (!(o.alpha > 0.0 && o.alpha < 1.0)) throw ConfigError("--alpha must lie in (0, 1)");
    std::istringstream text(read_file(o.pvalues));
    const CampaignReport report = report_from_pvalues(read_pvalues(text), o.alpha);
    write_or_print(o.out, render_report(report, parse_format(o.format)), out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Statistical randomness test battery for bit sequences", "rand-sts"};
    app.footer(kTestList);
    app.require_subcommand(1);

    GenerateOpts g;
    auto* generate = app.add_subcommand("generate", "Write bits from a pseudo-random generator");
    generate->add_option("--gen", g.gen, "Generator: pm, knuth or bbs")->required()
        ->check(CLI::IsMember({"pm", "knuth", "bbs"}));
    generate->add_option("--seed", g.seed, "Seed for pm / knuth");
    generate->add_option("--p", g.p, "BBS prime p (decimal)");
    generate->add_option("--q", g.q, "BBS prime q (decimal)");
    generate->add_option("--x0", g.x0, "BBS seed x0 (decimal)");
    generate->add_option("--n", g.n, "Number of bits");
    generate->add_option("--format", g.format, "ascii or binary")->check(CLI::IsMember({"ascii", "binary"}));
    generate->add_option("--out", g.out, "Output file")->required();
    generate->add_option("--bits-per-word", g.bits_per_word, "Top bits taken from each LCG word");

    TestOpts t;
    auto* test = app.add_subcommand("test", "Run tests on one bit sequence");
    test->add_option("--input", t.input, "Bit file")->required();
    test->add_option("--format", t.format, "ascii or binary")->check(CLI::IsMember({"ascii", "binary"}));
    test->add_option("--n", t.n, "Use only the first n bits");
    test->add_option("--tests", t.tests, "Comma-separated test numbers or 'all'");
    test->add_option("--alpha", t.alpha, "Significance level");
    test->add_option("--template", t.tpl, "Template for test 7 (default 000000001)");
    test->add_option("--t8-m", t.t8_m, "Run length for test 8 (default 9)");
    test->add_option("--serial-m", t.serial_m, "Pattern length for test 11");
    test->add_option("--apen-m", t.apen_m, "Pattern length for test 12 (default 2)");
    test->add_option("--lc-M", t.lc_m, "Block length for test 10 (default 500)");
    test->add_option("--universal-L", t.universal_l, "Block length for test 9");
    test->add_option("--block-M", t.block_m, "Block length for test 2");
    test->add_option("--dft-log", t.dft_log, "Threshold logarithm for test 6: e or 10")
        ->check(CLI::IsMember({"e", "10"}));
    test->add_option("--dft-variance", t.dft_variance, "Variance divisor for test 6: half or quarter")
        ->check(CLI::IsMember({"half", "quarter"}));

    CampaignOpts c;
    auto* campaign = app.add_subcommand("campaign", "Run a multi-sequence campaign from a config file");
    campaign->add_option("--config", c.config, "key=value config file")->required();
    campaign->add_option("--out", c.out, "Report file (default stdout)");
    campaign->add_option("--format", c.format, "tsv or text")->check(CLI::IsMember({"tsv", "text"}));
    campaign->add_option("--emit-hist", c.emit_hist, "Also write the histogram as CSV");
    campaign->add_option("--emit-pvalues", c.emit_pvalues, "Also write every pooled P-value");
    campaign->add_option("--jobs", c.jobs, "Worker threads (default $RAND_STS_JOBS or all cores)");
    campaign->add_flag("--progress", c.progress, "Report progress on stderr");

    ReportOpts r;
    auto* report = app.add_subcommand("report", "Render a report from a P-value file");
    report->add_option("--pvalues", r.pvalues, "File written by campaign --emit-pvalues")->required();
    report->add_option("--format", r.format, "tsv or text")->check(CLI::IsMember({"tsv", "text"}));
    report->add_option("--alpha", r.alpha, "Significance level");
    report->add_option("--out", r.out, "Report file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "rand-sts: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*generate) return cmd_generate(g, err);
        if (*test) return cmd_test(t, out, err);
        if (*campaign) return cmd_campaign(c, out, err);
        if (*report) return cmd_report(r, out);
    } catch (const IoError& e) {
        err << "rand-sts: " << e.what() << '\n';
        return kIo;
    } catch (const Error& e) {
        err << "rand-sts: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace sts::cli
