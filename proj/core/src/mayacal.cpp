#include "posrep/mayacal.hpp"

#include <charconv>

#include "posrep/arith.hpp"
#include "posrep/error.hpp"
#include "posrep/presets.hpp"
#include "posrep/textio.hpp"

namespace posrep::maya {

namespace {

const NumberSystem& long_count_system() {
    static const NumberSystem sys = preset("lc-std");
    return sys;
}

const RegularSystemView& long_count_view() {
    static const RegularSystemView view{long_count_system()};
    return view;
}

constexpr std::array<std::string_view, 20> kTzolkinNames{
    "Imix",  "Ik'",     "Ak'bal", "K'an", "Chikchan", "Kimi", "Manik'",
    "Lamat", "Muluk",   "Ok",     "Chuwen", "Eb",     "Ben",  "Ix",
    "Men",   "Kib",     "Kab'an", "Etz'nab", "Kawak", "Ajaw"};

constexpr std::array<std::string_view, 19> kHaabMonthNames{
    "Pop",   "Wo",     "Sip",  "Sotz'", "Sek",     "Xul",  "Yaxk'in",
    "Mol",   "Ch'en",  "Yax",  "Sak",   "Keh",     "Mak",  "K'ank'in",
    "Muwan", "Pax",    "K'ayab", "Kumk'u", "Wayeb"};

constexpr std::array<std::string_view, 7> kWeekdayNames{
    "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"};

bool is_gregorian_leap(const Integer& year) {
    if (floor_mod(year, 4) != 0) return false;
    if (floor_mod(year, 100) != 0) return true;
    return floor_mod(year, 400) == 0;
}

int month_length(const Integer& year, int month) {
    static constexpr int kLengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_gregorian_leap(year)) {
        return 29;
    }
    return kLengths[month - 1];
}

void require_valid_civil(const CivilDate& c) {
    if (c.month < 1 || c.month > 12 || c.day < 1 || c.day > month_length(c.year, c.month)) {
        throw Error(ErrorKind::Domain, "invalid civil date " + format_civil(c));
    }
}

void require_valid_haab(const HaabDate& h) {
    bool ok = h.month_index >= 0 && h.month_index <= 18 && h.day >= 0 &&
              h.day <= (h.month_index == 18 ? 4 : 19);
    if (!ok) {
        throw Error(ErrorKind::Domain, "invalid Haab date");
    }
}

void require_valid_tzolkin(const TzolkinDate& t) {
    if (t.number < 1 || t.number > 13 || t.name_index < 0 || t.name_index > 19) {
        throw Error(ErrorKind::Domain, "invalid Tzolk'in date");
    }
}

int name_to_index(std::string_view name, const auto& names, const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
            return static_cast<int>(i);
        }
    }
    throw Error(ErrorKind::Domain, std::string("unknown ") + what + " name '" + std::string(name) + "'");
}

int parse_small_int(std::string_view text, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::Syntax, std::string("expected a number for the ") + what);
    }
    return value;
}

}  // namespace

LongCountDate LongCountDate::from_text(std::string_view text) {
    Numeral n = parse_numeral(text, NotationKind::Dotted);
    std::vector<Digit> digits = n.msd_first();
    while (digits.size() < 5) {
        digits.insert(digits.begin(), 0);
    }
    return LongCountDate{Numeral(std::move(digits))};
}

std::string LongCountDate::to_text() const {
    return format_numeral(digits, NotationKind::Dotted);
}

DayCount lc_to_daycount(const LongCountDate& lc) {
    ValidationResult check = validate(lc.digits, long_count_system());
    if (!check.ok()) {
        std::string msg = "Long Count date does not validate:";
        for (const RangeViolation& v : check.violations) {
            msg += " position " + std::to_string(v.position) + " digit " + v.digit.str() +
                   " outside " + v.allowed.lo.str() + ".." + v.allowed.hi.str() + ";";
        }
        throw Error(ErrorKind::Domain, msg);
    }
    return DayCount{evaluate(lc.digits, long_count_system())};
}

LongCountDate daycount_to_lc(const DayCount& d) {
    if (d.days < 0) {
        throw Error(ErrorKind::Domain,
                    "day count " + d.days.str() + " is before the era base 0.0.0.0.0");
    }
    Numeral canonical = canonicalize(d.days, long_count_view());
    std::vector<Digit> digits = canonical.msd_first();
    while (digits.size() < 5) {
        digits.insert(digits.begin(), 0);
    }
    return LongCountDate{Numeral(std::move(digits))};
}

JulianDayNumber daycount_to_jdn(const DayCount& d) {
    return {d.days + kCorrelationConstant};
}

DayCount jdn_to_daycount(const JulianDayNumber& j) {
    return {j.jdn - kCorrelationConstant};
}

CivilDate civil_from_jdn(const JulianDayNumber& j) {
    // Proleptic Gregorian conversion with floored division, valid for any
    // day number.
    Integer a = j.jdn + 32044;
    Integer b = floor_div(4 * a + 3, 146097);
    Integer c = a - floor_div(146097 * b, 4);
    Integer d = floor_div(4 * c + 3, 1461);
    Integer e = c - floor_div(1461 * d, 4);
    Integer m = floor_div(5 * e + 2, 153);
    CivilDate out;
    out.day = (e - floor_div(153 * m + 2, 5) + 1).convert_to<int>();
    out.month = (m + 3 - 12 * floor_div(m, 10)).convert_to<int>();
    out.year = 100 * b + d - 4800 + floor_div(m, 10);
    return out;
}

JulianDayNumber jdn_from_civil(const CivilDate& c) {
    require_valid_civil(c);
    Integer a = (14 - c.month) / 12;
    Integer y = c.year + 4800 - a;
    Integer m = c.month + 12 * a - 3;
    Integer jdn = c.day + floor_div(153 * m + 2, 5) + 365 * y + floor_div(y, 4) -
                  floor_div(y, 100) + floor_div(y, 400) - 32045;
    return {jdn};
}

Weekday weekday_of(const JulianDayNumber& j) {
    return static_cast<Weekday>(floor_mod(j.jdn, 7).convert_to<int>());
}

TzolkinDate tzolkin_of(const DayCount& d) {
    int number = (floor_mod(kTzolkinEpochNumber - 1 + d.days, 13)).convert_to<int>() + 1;
    int name = (floor_mod(kTzolkinEpochNameIndex + d.days, 20)).convert_to<int>();
    return {number, name};
}

HaabDate haab_of(const DayCount& d) {
    int doy = (floor_mod(kHaabEpochOffset + d.days, 365)).convert_to<int>();
    return {doy / 20, doy % 20, false};
}

HaabDate haab_normalize(const HaabDate& h, bool to_end_of_month_form) {
    require_valid_haab(h);
    if (to_end_of_month_form) {
        if (h.day != 0 || h.month_index == 0) {
            throw Error(ErrorKind::Domain,
                        "only the seating day of months after Pop has an end-of-month form");
        }
        return {h.month_index, 0, true};
    }
    return {h.month_index, h.day, false};
}

CalendarRound calendar_round_of(const DayCount& d) {
    return {tzolkin_of(d), haab_of(d)};
}

std::vector<DayCount> solve_calendar_round(const CalendarRound& cr, const IntegerInterval& window) {
    require_valid_tzolkin(cr.tzolkin);
    require_valid_haab(cr.haab);

    // d mod 13 and d mod 20 from the Tzolk'in, combined to d mod 260.
    Integer r13 = floor_mod(Integer(cr.tzolkin.number - kTzolkinEpochNumber), 13);
    Integer r20 = floor_mod(Integer(cr.tzolkin.name_index - kTzolkinEpochNameIndex), 20);
    Integer r260 = r13;
    while (floor_mod(r260, 20) != r20) {
        r260 += 13;
    }

    // Combine with d mod 365 from the Haab; gcd(260, 365) = 5 decides
    // whether the pair can occur at all.
    Integer r365 = floor_mod(Integer(cr.haab.day_of_year() - kHaabEpochOffset), 365);
    Integer base = r260;
    bool found = false;
    for (int i = 0; i < 73; ++i) {
        if (floor_mod(base, 365) == r365) {
            found = true;
            break;
        }
        base += 260;
    }
    std::vector<DayCount> out;
    if (!found) {
        return out;
    }
    Integer first = window.min + floor_mod(base - window.min, kCalendarRoundCycle);
    for (Integer d = first; d <= window.max; d += kCalendarRoundCycle) {
        out.push_back(DayCount{d});
    }
    return out;
}

TripleCheck verify_triple(const LongCountDate& lc, const TzolkinDate& t, const HaabDate& h) {
    require_valid_tzolkin(t);
    require_valid_haab(h);
    DayCount d = lc_to_daycount(lc);
    TripleCheck check;
    check.expected_tzolkin = tzolkin_of(d);
    check.expected_haab = haab_of(d);
    check.tzolkin_number_ok = check.expected_tzolkin.number == t.number;
    check.tzolkin_name_ok = check.expected_tzolkin.name_index == t.name_index;
    check.haab_ok = check.expected_haab == h;
    check.consistent = check.tzolkin_number_ok && check.tzolkin_name_ok && check.haab_ok;
    return check;
}

const std::array<std::string_view, 20>& tzolkin_names() { return kTzolkinNames; }
const std::array<std::string_view, 19>& haab_month_names() { return kHaabMonthNames; }

std::string_view weekday_name(Weekday w) {
    return kWeekdayNames[static_cast<std::size_t>(w)];
}

TzolkinDate parse_tzolkin(std::string_view text) {
    std::size_t space = text.find(' ');
    if (space == std::string_view::npos) {
        throw Error(ErrorKind::Syntax, "expected '<number> <Name>' for a Tzolk'in date");
    }
    TzolkinDate t;
    t.number = parse_small_int(text.substr(0, space), "Tzolk'in number");
    t.name_index = name_to_index(text.substr(space + 1), kTzolkinNames, "Tzolk'in");
    require_valid_tzolkin(t);
    return t;
}

HaabDate parse_haab(std::string_view text) {
    std::size_t space = text.find(' ');
    if (space == std::string_view::npos) {
        throw Error(ErrorKind::Syntax, "expected '<day> <Month>' for a Haab date");
    }
    int day = parse_small_int(text.substr(0, space), "Haab day");
    int month = name_to_index(text.substr(space + 1), kHaabMonthNames, "Haab month");
    if (day == 20) {
        // Day 20 is the end-of-month form of the next month's seating day.
        if (month >= 18) {
            throw Error(ErrorKind::Domain, "Wayeb has no day 20");
        }
        return {month + 1, 0, true};
    }
    HaabDate h{month, day, false};
    require_valid_haab(h);
    return h;
}

std::string format_tzolkin(const TzolkinDate& t) {
    require_valid_tzolkin(t);
    return std::to_string(t.number) + " " + std::string(kTzolkinNames[t.name_index]);
}

std::string format_haab(const HaabDate& h) {
    require_valid_haab(h);
    if (h.end_of_month_form && h.day == 0 && h.month_index >= 1) {
        return "20 " + std::string(kHaabMonthNames[h.month_index - 1]);
    }
    return std::to_string(h.day) + " " + std::string(kHaabMonthNames[h.month_index]);
}

CivilDate parse_civil(std::string_view text) {
    bool negative = !text.empty() && text.front() == '-';
    std::string_view rest = negative ? text.substr(1) : text;
    std::size_t first = rest.find('-');
    std::size_t second = first == std::string_view::npos ? std::string_view::npos
                                                         : rest.find('-', first + 1);
    if (first == std::string_view::npos || second == std::string_view::npos) {
        throw Error(ErrorKind::Syntax, "expected YYYY-MM-DD");
    }
    std::string year_digits(rest.substr(0, first));
    if (year_digits.empty() ||
        year_digits.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorKind::Syntax, "expected a year in YYYY-MM-DD");
    }
    CivilDate c;
    c.year = Integer(year_digits);
    if (negative) {
        c.year = -c.year;
    }
    c.month = parse_small_int(rest.substr(first + 1, second - first - 1), "month");
    c.day = parse_small_int(rest.substr(second + 1), "day");
    require_valid_civil(c);
    return c;
}

std::string format_civil(const CivilDate& c) {
    Integer magnitude = c.year < 0 ? Integer(-c.year) : c.year;
    std::string year = magnitude.str();
    while (year.size() < 4) {
        year.insert(year.begin(), '0');
    }
    if (c.year < 0) {
        year.insert(year.begin(), '-');
    }
    char buf[6];
    std::snprintf(buf, sizeof buf, "%02d-%02d", c.month, c.day);
    return year + "-" + buf;
}

}  // namespace posrep::maya
