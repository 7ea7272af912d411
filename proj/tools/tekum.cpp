#include <tekum/codec.hpp>
#include <tekum/oracle.hpp>
#include <tekum/range_metrics.hpp>
#include <tekum/table.hpp>
#include <tekum/trit_string.hpp>
#include <tekum/value.hpp>

#include <CLI11.hpp>

#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_property_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_unsupported_width = 3;
constexpr int exit_io = 4;

int exit_code_for(const tekum::error& e) {
    switch (e.code()) {
    case tekum::errc::odd_length:
    case tekum::errc::unsupported_length:
    case tekum::errc::width_too_large:
    case tekum::errc::bad_width:
        return exit_unsupported_width;
    case tekum::errc::io_error:
        return exit_io;
    default:
        return exit_usage;
    }
}

enum class ColourMode { automatic, always, never };

bool colour_enabled(ColourMode mode) {
    switch (mode) {
    case ColourMode::always: return true;
    case ColourMode::never: return false;
    case ColourMode::automatic:
        return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)) != 0;
    }
    return false;
}

std::string lowercase(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

/// Accepts a decimal ("2", "-0.5", "1.5e-3"), a rational "p/q", or one of
/// NaR / Inf / 0.
tekum::Value parse_value(const std::string& text) {
    const std::string folded = lowercase(text);
    if (folded == "nar") return tekum::Value::nar();
    if (folded == "inf" || folded == "infinity") return tekum::Value::infinity();

    if (const auto slash = text.find('/'); slash != std::string::npos) {
        try {
            tekum::BigInt num(text.substr(0, slash));
            tekum::BigInt den(text.substr(slash + 1));
            if (den == 0) {
                throw tekum::error(tekum::errc::invalid_character,
                                   "rational denominator must be nonzero");
            }
            return tekum::Value::finite(num, den);
        } catch (const std::invalid_argument&) {
            throw tekum::error(tekum::errc::invalid_character,
                               "cannot parse rational '" + text + "'");
        }
    }

    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long fractional_digits = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.');
         ++i) {
        if (text[i] == '.') {
            if (seen_point) break;
            seen_point = true;
            continue;
        }
        digits.push_back(text[i]);
        seen_digit = true;
        if (seen_point) ++fractional_digits;
    }
    long exponent10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        try {
            std::size_t consumed = 0;
            exponent10 = std::stol(text.substr(i + 1), &consumed);
            i += 1 + consumed;
        } catch (const std::exception&) {
            throw tekum::error(tekum::errc::invalid_character,
                               "cannot parse exponent in '" + text + "'");
        }
    }
    if (!seen_digit || i != text.size()) {
        throw tekum::error(tekum::errc::invalid_character, "cannot parse value '" + text + "'");
    }
    tekum::BigInt mantissa(digits.empty() ? "0" : digits);
    if (negative) mantissa = -mantissa;
    const long shift = exponent10 - fractional_digits;
    if (shift >= 0) {
        return tekum::Value::finite(mantissa * tekum::pow10(static_cast<std::size_t>(shift)),
                                    tekum::BigInt(1));
    }
    return tekum::Value::finite(mantissa, tekum::pow10(static_cast<std::size_t>(-shift)));
}

std::vector<tekum::WidthSpec> parse_width_list(const std::string& text) {
    std::vector<tekum::WidthSpec> widths;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        tekum::WidthSpec spec;
        const auto colon = item.find(':');
        try {
            if (colon == std::string::npos) {
                spec.n = std::stoul(item);
            } else {
                spec.n = std::stoul(item.substr(0, colon));
                spec.m = std::stoul(item.substr(colon + 1));
            }
        } catch (const std::exception&) {
            throw tekum::error(tekum::errc::invalid_character,
                               "cannot parse width list entry '" + item + "'");
        }
        widths.push_back(spec);
    }
    if (widths.empty()) {
        throw tekum::error(tekum::errc::invalid_character, "empty width list");
    }
    return widths;
}

void write_output(const std::string& data, const std::string& path) {
    if (path.empty()) {
        std::cout << data;
        if (!std::cout) throw tekum::error(tekum::errc::io_error, "failed writing to stdout");
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << data) || !file.flush()) {
        throw tekum::error(tekum::errc::io_error, "failed writing " + path);
    }
}

/// Plain-text rendering of a CSV block: aligned columns, two-space gutters.
std::string csv_to_text(const std::string& csv) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> widths;
    std::stringstream stream(csv);
    std::string line;
    while (std::getline(stream, line)) {
        std::vector<std::string> cells;
        std::stringstream cell_stream(line);
        std::string cell;
        while (std::getline(cell_stream, cell, ',')) cells.push_back(cell);
        if (widths.size() < cells.size()) widths.resize(cells.size(), 0);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            widths[i] = std::max(widths[i], cells[i].size());
        }
        rows.push_back(std::move(cells));
    }
    std::ostringstream out;
    for (const auto& cells : rows) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size()) out << std::string(widths[i] - cells[i].size() + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

struct CommonFlags {
    std::string format = "csv";
    std::string output;
};

void emit(const std::string& csv, const CommonFlags& flags) {
    write_output(flags.format == "text" ? csv_to_text(csv) : csv, flags.output);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tekum: balanced ternary tapered precision arithmetic"};
    app.require_subcommand(1);

    std::string colour_name = "auto";
    app.add_option("--color,--colour", colour_name, "colour mode: auto, always or never")
        ->check(CLI::IsMember({"auto", "always", "never"}))
        ->capture_default_str();

    // decode
    auto* cmd_decode = app.add_subcommand("decode", "decode a trit string into its fields");
    std::string decode_text;
    cmd_decode->add_option("trits", decode_text, "trit string, characters T/t/0/1")->required();

    // encode
    auto* cmd_encode = app.add_subcommand("encode", "round a value to the nearest tekum");
    std::string encode_text;
    std::size_t encode_width = 8;
    cmd_encode->add_option("value", encode_text, "decimal, rational p/q, NaR, Inf or 0")
        ->required();
    cmd_encode->add_option("--n", encode_width, "tekum width in trits")->required();

    // table
    auto* cmd_table = app.add_subcommand("table", "emit the decode table for one width");
    tekum::DecodeTableOptions table_options;
    std::string table_format = "text";
    std::string table_output;
    cmd_table->add_option("--n", table_options.width, "tekum width in trits")->required();
    cmd_table->add_flag("--positive-only", table_options.positive_only,
                        "keep rows with integer value >= -1");
    cmd_table->add_option("--format", table_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    cmd_table->add_option("--output", table_output, "write to a file instead of stdout");

    // mappings / dynrange / overhead
    auto* cmd_mappings =
        app.add_subcommand("mappings", "regime mapping families with biases and ranges");
    CommonFlags mappings_flags;
    cmd_mappings->add_option("--format", mappings_flags.format, "csv or text")
        ->check(CLI::IsMember({"text", "csv"}));
    cmd_mappings->add_option("--output", mappings_flags.output, "write to a file");

    auto* cmd_dynrange = app.add_subcommand("dynrange", "dynamic range per width");
    CommonFlags dynrange_flags;
    std::size_t max_n = 40;
    cmd_dynrange->add_option("--max-n", max_n, "largest width to include");
    cmd_dynrange->add_option("--format", dynrange_flags.format, "csv or text")
        ->check(CLI::IsMember({"text", "csv"}));
    cmd_dynrange->add_option("--output", dynrange_flags.output, "write to a file");

    auto* cmd_overhead = app.add_subcommand("overhead", "non-fraction overhead per exponent");
    CommonFlags overhead_flags;
    std::size_t overhead_n = 10;
    cmd_overhead->add_option("--n", overhead_n, "tekum width in trits");
    cmd_overhead->add_option("--format", overhead_flags.format, "csv or text")
        ->check(CLI::IsMember({"text", "csv"}));
    cmd_overhead->add_option("--output", overhead_flags.output, "write to a file");

    // check
    auto* cmd_check = app.add_subcommand("check", "run exhaustive property checks");
    std::string property_name = "all";
    std::string width_list = "2,4,6,8";
    std::uint64_t seed = tekum::default_check_seed;
    cmd_check->add_option("--property", property_name,
                          "uniqueness, negation, monotonicity, roundtrip, truncation, "
                          "encode_nearest, double_rounding, divisibility or all");
    cmd_check->add_option("--n", width_list, "widths, e.g. 4,6,8 or pairs like 8:4");
    cmd_check->add_option("--seed", seed, "seed for randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << e.what() << '\n';
        return exit_usage;
    }

    const bool colour = colour_enabled(colour_name == "always"  ? ColourMode::always
                                       : colour_name == "never" ? ColourMode::never
                                                                : ColourMode::automatic);

    try {
        if (*cmd_decode) {
            const auto trits = tekum::TritString::parse(decode_text);
            std::cout << tekum::render_decode_breakdown(trits, colour);
        } else if (*cmd_encode) {
            const tekum::Value value = parse_value(encode_text);
            const tekum::TritString encoded = tekum::encode(value, encode_width);
            const tekum::Value rounded = tekum::decode(encoded);
            std::cout << encoded.str() << '\n';
            std::cout << "value = "
                      << (rounded.is_finite() ? rounded.rational().get_str()
                                              : tekum::to_decimal(rounded, 2))
                      << '\n';
            if (value.is_finite() && rounded.is_finite()) {
                std::cout << "error = "
                          << tekum::Rational(rounded.rational() - value.rational()).get_str()
                          << '\n';
            } else {
                std::cout << "error = 0\n";
            }
        } else if (*cmd_table) {
            table_options.csv = table_format == "csv";
            write_output(tekum::render_decode_table(table_options), table_output);
        } else if (*cmd_mappings) {
            emit(tekum::mappings_csv(), mappings_flags);
        } else if (*cmd_dynrange) {
            emit(tekum::dynrange_csv(max_n), dynrange_flags);
        } else if (*cmd_overhead) {
            emit(tekum::overhead_csv(overhead_n), overhead_flags);
        } else if (*cmd_check) {
            const auto widths = parse_width_list(width_list);
            std::vector<tekum::PropertyReport> reports;
            if (property_name == "all") {
                reports = tekum::check_all(widths, seed);
            } else {
                const auto property = tekum::property_from_name(property_name);
                if (!property) {
                    std::cerr << "unknown property '" << property_name << "'\n";
                    return exit_usage;
                }
                reports.push_back(tekum::check_property(*property, widths, seed));
            }
            bool all_passed = true;
            for (const auto& report : reports) {
                std::cout << report.to_text();
                all_passed = all_passed && report.passed();
            }
            return all_passed ? exit_ok : exit_property_failure;
        }
    } catch (const tekum::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}
