#include <tekum/trit_string.hpp>

#include <algorithm>

namespace tekum {

TritString TritString::parse(std::string_view text) {
    std::vector<Trit> trits;
    trits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto t = trit_from_char(text[i]);
        if (!t) {
            throw error(errc::invalid_character,
                        "invalid trit character '" + std::string(1, text[i]) + "' at position " +
                            std::to_string(i),
                        i);
        }
        trits.push_back(*t);
    }
    return TritString(std::move(trits));
}

TritString TritString::from_integer(const BigInt& value, std::size_t length) {
    if (abs(value) > max_trit_integer(length)) {
        throw error(errc::out_of_range, "integer " + value.get_str() + " does not fit in " +
                                            std::to_string(length) + " trits");
    }
    std::vector<Trit> lsb_first;
    lsb_first.reserve(length);
    BigInt v = value;
    for (std::size_t i = 0; i < length; ++i) {
        BigInt q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), 3);
        if (r == 2) {
            lsb_first.push_back(Trit::minus);
            v = q + 1;
        } else {
            lsb_first.push_back(r == 1 ? Trit::plus : Trit::zero);
            v = q;
        }
    }
    std::reverse(lsb_first.begin(), lsb_first.end());
    return TritString(std::move(lsb_first));
}

std::string TritString::str() const {
    std::string out;
    out.reserve(trits_.size());
    for (Trit t : trits_) out.push_back(trit_char(t));
    return out;
}

BigInt TritString::integer_value() const {
    BigInt v = 0;
    for (Trit t : trits_) {
        v *= 3;
        v += trit_value(t);
    }
    return v;
}

int TritString::sign() const noexcept {
    for (Trit t : trits_) {
        if (t != Trit::zero) return trit_value(t);
    }
    return 0;
}

TritString TritString::negated() const {
    std::vector<Trit> flipped;
    flipped.reserve(trits_.size());
    for (Trit t : trits_) flipped.push_back(tekum::negated(t));
    return TritString(std::move(flipped));
}

TritString TritString::modulus() const { return sign() < 0 ? negated() : *this; }

TritString TritString::add_wrapping(const TritString& other) const {
    if (size() != other.size()) {
        throw error(errc::length_mismatch, "trit string lengths differ: " + std::to_string(size()) +
                                               " vs " + std::to_string(other.size()));
    }
    const BigInt limit = max_trit_integer(size());
    const BigInt correction = (pow3(size()) + 1) / 2;
    BigInt s = integer_value() + other.integer_value();
    if (s < -limit) {
        s += correction;
    } else if (s > limit) {
        s -= correction;
    }
    return from_integer(s, size());
}

TritString TritString::sub_wrapping(const TritString& other) const {
    return add_wrapping(other.negated());
}

TritString TritString::concat(const TritString& other) const {
    std::vector<Trit> joined = trits_;
    joined.insert(joined.end(), other.trits_.begin(), other.trits_.end());
    return TritString(std::move(joined));
}

TritString TritString::prefix(std::size_t count) const { return slice(0, count); }

TritString TritString::slice(std::size_t begin, std::size_t end) const {
    return TritString(std::vector<Trit>(trits_.begin() + static_cast<std::ptrdiff_t>(begin),
                                        trits_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::strong_ordering TritString::compare(const TritString& other) const {
    if (size() != other.size()) {
        throw error(errc::length_mismatch, "cannot order trit strings of lengths " +
                                               std::to_string(size()) + " and " +
                                               std::to_string(other.size()));
    }
    for (std::size_t i = 0; i < size(); ++i) {
        const int a = trit_value(trits_[i]);
        const int b = trit_value(other.trits_[i]);
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

} // namespace tekum
