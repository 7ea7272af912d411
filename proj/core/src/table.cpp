#include <tekum/table.hpp>

#include <tekum/oracle.hpp>
#include <tekum/value.hpp>

#include <algorithm>
#include <sstream>
#include <variant>

namespace tekum {

namespace {

std::string special_text(Special s) {
    switch (s) {
    case Special::nar: return "NaR";
    case Special::zero: return "0";
    case Special::infinity: return "Inf";
    }
    return "?";
}

/// Nearest integer to q * 10, half away from zero.
BigInt tenths(const Rational& q) {
    BigInt num = q.get_num() * 10;
    const BigInt& den = q.get_den();
    const bool negative = sgn(num) < 0;
    if (negative) num = -num;
    BigInt rounded = (2 * num + den) / (2 * den);
    return negative ? BigInt(-rounded) : rounded;
}

} // namespace

std::string format_fixed1(const Rational& q) {
    BigInt scaled = tenths(q);
    std::string sign;
    if (scaled < 0) {
        sign = "-";
        scaled = -scaled;
    }
    const BigInt whole = scaled / 10;
    const BigInt tenth = scaled % 10;
    return sign + whole.get_str() + "." + tenth.get_str();
}

const std::array<std::string, decode_table_columns>& decode_table_header() {
    static const std::array<std::string, decode_table_columns> header = {
        "t", "iota", "s",  "anchor", "regime", "r",        "c",    "exponent",
        "b", "e",    "p",  "fraction", "f",    "one_plus_f", "value"};
    return header;
}

std::array<std::string, decode_table_columns> decode_table_cells(const TritString& t) {
    std::array<std::string, decode_table_columns> cells{};
    cells[0] = t.str();
    cells[1] = t.integer_value().get_str();
    const auto decoded = decode_fields(t);
    if (const auto* special = std::get_if<Special>(&decoded)) {
        cells[14] = special_text(*special);
        return cells;
    }
    const auto& f = std::get<TekumFields>(decoded);
    cells[2] = std::to_string(f.sign);
    cells[3] = f.anchor.str();
    cells[4] = f.regime_trits.str();
    cells[5] = std::to_string(f.regime);
    cells[6] = std::to_string(f.exponent_trit_count);
    cells[7] = f.exponent_trits.str();
    cells[8] = std::to_string(f.bias);
    cells[9] = std::to_string(f.exponent);
    cells[10] = std::to_string(f.fraction_trit_count);
    cells[11] = f.fraction_trits.prefix(static_cast<std::size_t>(f.fraction_trit_count)).str();
    cells[12] = format_fixed1(f.fraction);
    cells[13] = format_fixed1(f.fraction + 1);
    cells[14] = to_decimal(decode(t), 2);
    return cells;
}

std::string render_decode_table(const DecodeTableOptions& options) {
    if (options.width % 2 != 0 || options.width < 2) {
        throw error(errc::unsupported_length,
                    "decode tables need an even width >= 2, got " + std::to_string(options.width));
    }
    const std::size_t cap = options.csv ? max_enumeration_width : 8;
    if (options.width > cap) {
        throw error(errc::width_too_large, "decode tables are capped at width " +
                                               std::to_string(cap) +
                                               (options.csv ? "" : " in text form"));
    }

    std::vector<std::array<std::string, decode_table_columns>> rows;
    const BigInt top = max_trit_integer(options.width);
    for (BigInt v = options.positive_only ? BigInt(-1) : -top; v <= top; ++v) {
        rows.push_back(decode_table_cells(TritString::from_integer(v, options.width)));
    }

    std::ostringstream out;
    const auto& header = decode_table_header();
    if (options.csv) {
        for (std::size_t c = 0; c < decode_table_columns; ++c) {
            out << header[c] << (c + 1 < decode_table_columns ? "," : "\n");
        }
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < decode_table_columns; ++c) {
                out << row[c] << (c + 1 < decode_table_columns ? "," : "\n");
            }
        }
        return out.str();
    }

    std::array<std::size_t, decode_table_columns> column_width{};
    for (std::size_t c = 0; c < decode_table_columns; ++c) {
        column_width[c] = header[c].size();
        for (const auto& row : rows) column_width[c] = std::max(column_width[c], row[c].size());
    }
    const auto emit = [&](const std::array<std::string, decode_table_columns>& row) {
        for (std::size_t c = 0; c < decode_table_columns; ++c) {
            out << row[c] << std::string(column_width[c] - row[c].size(), ' ');
            out << (c + 1 < decode_table_columns ? "  " : "\n");
        }
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out.str();
}

std::string render_decode_breakdown(const TritString& t, bool colour_on) {
    const auto paint = [&](const char* code, const std::string& text) {
        if (!colour_on || text.empty()) return text;
        return std::string(code) + text + colour::reset;
    };

    std::ostringstream out;
    out << "t        : " << t.str() << '\n';
    out << "integer  : " << t.integer_value().get_str() << '\n';
    const auto decoded = decode_fields(t);
    if (const auto* special = std::get_if<Special>(&decoded)) {
        out << "value    : " << special_text(*special) << '\n';
        return out.str();
    }
    const auto& f = std::get<TekumFields>(decoded);
    const Value value = decode(t);
    out << "sign     : " << (f.sign > 0 ? "+1" : "-1") << '\n';
    out << "anchor   : " << f.anchor.str() << '\n';
    out << "regime   : " << paint(colour::regime, f.regime_trits.str()) << "  (r = " << f.regime
        << ")\n";
    out << "exponent : " << paint(colour::exponent, f.exponent_trits.str())
        << "  (c = " << f.exponent_trit_count << ", b = " << f.bias << ", e = " << f.exponent
        << ")\n";
    out << "fraction : " << paint(colour::fraction, f.fraction_trits.str())
        << "  (p = " << f.fraction_trit_count << ", f = " << f.fraction.get_str() << ")\n";
    out << "value    : " << value.rational().get_str() << '\n';
    out << "decimal  : " << to_decimal(value, 2) << '\n';
    return out.str();
}

} // namespace tekum
