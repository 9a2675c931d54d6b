#include "sts/config.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "sts/errors.hpp"

namespace sts {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T v{};
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw ConfigError("invalid value '" + value + "' for " + key);
    return v;
}

mpz_class parse_big(const std::string& key, const std::string& value) {
    mpz_class v;
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        v.set_str(value, 10) != 0) {
        throw ConfigError("invalid decimal integer for " + key);
    }
    return v;
}

bool equals_any(const std::string& v, std::initializer_list<const char*> options) {
    return std::any_of(options.begin(), options.end(), [&](const char* o) { return v == o; });
}

void apply(CampaignConfig& c, const std::string& key, const std::string& value) {
    if (key == "generator") {
        c.generator.kind = parse_generator_kind(value);
    } else if (key == "pm.seed" || key == "knuth.seed") {
        c.generator.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "bbs.p") {
        c.generator.p = parse_big(key, value);
    } else if (key == "bbs.q") {
        c.generator.q = parse_big(key, value);
    } else if (key == "bbs.x0") {
        c.generator.x0 = parse_big(key, value);
    } else if (key == "pm.bits_per_word") {
        c.generator.pm_bits_per_word = parse_number<unsigned>(key, value);
    } else if (key == "knuth.bits_per_word") {
        c.generator.knuth_bits_per_word = parse_number<unsigned>(key, value);
    } else if (key == "m") {
        c.m = parse_number<std::size_t>(key, value);
    } else if (key == "alpha") {
        c.alpha = parse_number<double>(key, value);
    } else if (key == "tests") {
        c.tests = parse_test_selection(value);
    } else if (key.rfind("n.", 0) == 0) {
        const int id = parse_number<int>(key, key.substr(2));
        c.lengths[test_id_from_int(id)] = parse_number<std::size_t>(key, value);
    } else if (key == "template") {
        c.params.nonoverlapping_template = Template::parse(value);
    } else if (key == "t7.N") {
        c.params.nonoverlapping_blocks = parse_number<std::size_t>(key, value);
    } else if (key == "t8.m") {
        c.params.overlapping_m = parse_number<unsigned>(key, value);
    } else if (key == "t8.M") {
        c.params.overlapping_block = parse_number<std::size_t>(key, value);
    } else if (key == "serial.m") {
        c.params.serial_m = parse_number<unsigned>(key, value);
    } else if (key == "apen.m") {
        c.params.apen_m = parse_number<unsigned>(key, value);
    } else if (key == "lc.M") {
        c.params.linear_complexity_m = parse_number<std::size_t>(key, value);
    } else if (key == "universal.L") {
        c.params.universal_l = parse_number<unsigned>(key, value);
    } else if (key == "block.M") {
        c.params.block_frequency_m = parse_number<std::size_t>(key, value);
    } else if (key == "dft.log_base") {
        if (!equals_any(value, {"e", "10"})) throw ConfigError("dft.log_base must be e or 10");
        c.params.dft.log10_threshold = value == "10";
    } else if (key == "dft.variance") {
        if (!equals_any(value, {"half", "quarter"})) throw ConfigError("dft.variance must be half or quarter");
        c.params.dft.quarter_variance = value == "quarter";
    } else if (key == "excursions.gate") {
        if (value == "score") {
            c.excursion_gate = ExcursionGate::Score;
        } else if (value == "reject") {
            c.excursion_gate = ExcursionGate::Reject;
        } else {
            throw ConfigError("excursions.gate must be score or reject");
        }
    } else if (key == "jobs") {
        c.jobs = parse_number<unsigned>(key, value);
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

}  // namespace

CampaignConfig::CampaignConfig() {
    for (const auto& t : all_tests()) tests.push_back(t.id);
}

std::size_t CampaignConfig::length_for(TestId id) const {
    const auto it = lengths.find(id);
    return it != lengths.end() ? it->second : test_info(id).used_length;
}

std::size_t CampaignConfig::master_length() const {
    std::size_t n = 0;
    for (TestId id : tests) n = std::max(n, length_for(id));
    return n;
}

void CampaignConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
    // m must reach 1/alpha so that the threshold's normal approximation is usable.
    if (static_cast<double>(m) * alpha < 1.0 - 1e-9) {
        throw ConfigError("m = " + std::to_string(m) + " is below 1/alpha");
    }
    for (const auto& [id, n] : lengths) {
        const auto& info = test_info(id);
        if (n < info.min_length) {
            throw ConfigError("n." + std::to_string(to_int(id)) + " = " + std::to_string(n) +
                              " is below the minimum " + std::to_string(info.min_length));
        }
        if (n > BitSequence::kMaxBits) throw ConfigError("sequence length too large");
    }
    if (params.nonoverlapping_blocks == 0) throw ConfigError("t7.N must be positive");
    if (params.overlapping_m < 1 || params.overlapping_m > 16) throw ConfigError("t8.m must lie in 1..16");
    if (params.overlapping_block == 0) throw ConfigError("t8.M must be positive");
    if (params.linear_complexity_m < 500 || params.linear_complexity_m > 5000) {
        throw ConfigError("lc.M must lie in 500..5000");
    }
    if (params.universal_l && (*params.universal_l < 6 || *params.universal_l > 16)) {
        throw ConfigError("universal.L must lie in 6..16");
    }
    if (params.apen_m < 1) throw ConfigError("apen.m must be positive");
    if (params.serial_m && *params.serial_m < 1) throw ConfigError("serial.m must be positive");
    if (params.block_frequency_m && *params.block_frequency_m == 0) throw ConfigError("block.M must be positive");
    generator.validate();
    if (generator.kind == GeneratorKind::Bbs) {
        const mpz_class bound = mpz_class(1) << 512;
        if (generator.p < bound || generator.q < bound) {
            throw ConfigError("campaign BBS primes must be at least 2^512");
        }
    }
}

CampaignConfig parse_config(std::istream& in) {
    CampaignConfig c;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        try {
            if (!seen.insert(key).second) throw ConfigError("duplicate key '" + key + "'");
            apply(c, key, value);
        } catch (const Error& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return c;
}

CampaignConfig parse_config_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_config(in);
}

}  // namespace sts
