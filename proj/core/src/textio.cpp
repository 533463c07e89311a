#include "posrep/textio.hpp"

#include <array>
#include <cctype>
#include <string>

#include "posrep/error.hpp"

namespace posrep {

namespace {

[[noreturn]] void syntax_error(const std::string& what, std::size_t offset) {
    throw Error(ErrorKind::Syntax, what + " at offset " + std::to_string(offset), offset);
}

Numeral parse_dotted(std::string_view text) {
    std::vector<Digit> digits;
    std::size_t pos = 0;
    while (true) {
        std::size_t start = pos;
        bool negative = pos < text.size() && text[pos] == '-';
        if (negative) {
            ++pos;
        }
        std::string body;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            body.push_back(text[pos++]);
        }
        if (body.empty()) {
            syntax_error("expected a decimal digit value", start);
        }
        Integer d(body);
        digits.push_back(negative ? -d : d);
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != '.') {
            syntax_error("expected '.' between digits", pos);
        }
        ++pos;
    }
    return Numeral(std::move(digits));
}

// Digit glyphs for zeroless display: 1-9, X for ten, letters from eleven
// upward with X kept reserved, so the run is A..W, then Y, Z.
int bijective_glyph_value(char c) {
    if (c >= '1' && c <= '9') return c - '0';
    if (c == 'X') return 10;
    if (c >= 'A' && c < 'X') return 11 + (c - 'A');
    if (c == 'Y') return 34;
    if (c == 'Z') return 35;
    return -1;
}

char bijective_glyph(const Integer& d) {
    if (d >= 1 && d <= 9) return static_cast<char>('0' + d.convert_to<int>());
    if (d == 10) return 'X';
    if (d >= 11 && d <= 33) return static_cast<char>('A' + d.convert_to<int>() - 11);
    if (d == 34) return 'Y';
    if (d == 35) return 'Z';
    throw Error(ErrorKind::Domain,
                "digit " + d.str() + " has no glyph in the zeroless notation (1..35)");
}

Numeral parse_bijective(std::string_view text) {
    std::vector<Digit> digits;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        int v = bijective_glyph_value(text[pos]);
        if (v < 0) {
            syntax_error(std::string("glyph '") + text[pos] + "' is outside the digit alphabet",
                         pos);
        }
        digits.emplace_back(v);
    }
    if (digits.empty()) {
        syntax_error("empty numeral", 0);
    }
    return Numeral(std::move(digits));
}

struct RomanDecade {
    char one;
    char five;
    char ten;  // '\0' for the thousands decade
    int unit;
};

constexpr std::array<RomanDecade, 4> kDecades{{
    {'M', '\0', '\0', 1000},
    {'C', 'D', 'M', 100},
    {'X', 'L', 'C', 10},
    {'I', 'V', 'X', 1},
}};

// One decade's worth of symbols: the classical subtractive pair, or a
// five-symbol followed by up to four ones (additive runs like VIIII are
// accepted on input).
int parse_decade(std::string_view text, std::size_t& pos, const RomanDecade& d) {
    if (d.five != '\0' && pos + 1 < text.size() && text[pos] == d.one) {
        if (text[pos + 1] == d.ten) {
            pos += 2;
            return 9 * d.unit;
        }
        if (text[pos + 1] == d.five) {
            pos += 2;
            return 4 * d.unit;
        }
    }
    int value = 0;
    if (d.five != '\0' && pos < text.size() && text[pos] == d.five) {
        ++pos;
        value = 5 * d.unit;
    }
    int ones = 0;
    int max_ones = d.five == '\0' ? 3 : 4;
    while (pos < text.size() && text[pos] == d.one && ones < max_ones) {
        ++pos;
        ++ones;
    }
    return value + ones * d.unit;
}

}  // namespace

Numeral parse_numeral(std::string_view text, NotationKind kind) {
    if (text.empty()) {
        syntax_error("empty numeral", 0);
    }
    switch (kind) {
        case NotationKind::Dotted:
            return parse_dotted(text);
        case NotationKind::BijectiveX:
            return parse_bijective(text);
        case NotationKind::Roman:
            throw Error(ErrorKind::Domain,
                        "Roman numerals are not positional; use roman_parse");
    }
    throw Error(ErrorKind::Domain, "unknown notation");
}

std::string format_numeral(const Numeral& n, NotationKind kind) {
    switch (kind) {
        case NotationKind::Dotted: {
            std::string out;
            for (std::size_t i = 0; i < n.length(); ++i) {
                if (i > 0) out += '.';
                out += n.msd_first()[i].str();
            }
            return out;
        }
        case NotationKind::BijectiveX: {
            std::string out;
            for (const Digit& d : n.msd_first()) {
                out += bijective_glyph(d);
            }
            return out;
        }
        case NotationKind::Roman:
            throw Error(ErrorKind::Domain,
                        "Roman numerals are not positional; use roman_format");
    }
    throw Error(ErrorKind::Domain, "unknown notation");
}

Integer roman_parse(std::string_view text) {
    if (text.empty()) {
        syntax_error("empty Roman numeral", 0);
    }
    std::size_t pos = 0;
    long long total = 0;
    for (const RomanDecade& decade : kDecades) {
        total += parse_decade(text, pos, decade);
    }
    if (pos != text.size()) {
        syntax_error("unexpected Roman symbol", pos);
    }
    if (total == 0) {
        syntax_error("Roman numerals have no zero", 0);
    }
    return total;
}

std::string roman_format(const Integer& v, RomanMode mode) {
    if (v < 1 || v > 3999) {
        throw Error(ErrorKind::Domain, "Roman formatting covers 1..3999, got " + v.str());
    }
    int rest = v.convert_to<int>();
    std::string out;
    if (mode == RomanMode::Subtractive) {
        static constexpr std::array<std::pair<int, std::string_view>, 13> table{{
            {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"},
            {100, "C"}, {90, "XC"}, {50, "L"}, {40, "XL"},
            {10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"},
        }};
        for (const auto& [value, glyphs] : table) {
            while (rest >= value) {
                out += glyphs;
                rest -= value;
            }
        }
    } else {
        static constexpr std::array<std::pair<int, char>, 7> table{{
            {1000, 'M'}, {500, 'D'}, {100, 'C'}, {50, 'L'}, {10, 'X'}, {5, 'V'}, {1, 'I'},
        }};
        for (const auto& [value, glyph] : table) {
            while (rest >= value) {
                out += glyph;
                rest -= value;
            }
        }
    }
    return out;
}

}  // namespace posrep
