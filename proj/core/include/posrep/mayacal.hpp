#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "posrep/integer.hpp"
#include "posrep/numeral.hpp"

namespace posrep::maya {

// Long Count days are counted from the era base 0.0.0.0.0. The adopted
// correlation places that day at Julian Day Number 584283, which makes it
// Monday 11 August 3114 BCE (proleptic Gregorian, astronomical year -3113)
// and puts 13.0.0.0.0 on 21 December 2012.
inline constexpr long long kCorrelationConstant = 584283;

// Era-base cycle positions: 4 Ajaw 8 Kumk'u.
inline constexpr int kTzolkinEpochNumber = 4;
inline constexpr int kTzolkinEpochNameIndex = 19;
inline constexpr int kHaabEpochOffset = 348;

inline constexpr int kTzolkinCycle = 260;
inline constexpr int kHaabCycle = 365;
inline constexpr int kCalendarRoundCycle = 18980;

/// Days elapsed since the Long Count era base; negative before it.
struct DayCount {
    Integer days;
    bool operator==(const DayCount&) const = default;
};

struct JulianDayNumber {
    Integer jdn;
    bool operator==(const JulianDayNumber&) const = default;
};

/// Proleptic Gregorian date with astronomical year numbering (year 0 is
/// 1 BCE).
struct CivilDate {
    Integer year;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
    bool operator==(const CivilDate&) const = default;
};

enum class Weekday { Monday = 0, Tuesday, Wednesday, Thursday, Friday, Saturday, Sunday };

struct TzolkinDate {
    int number;      // 1..13
    int name_index;  // 0..19, Imix = 0 ... Ajaw = 19
    bool operator==(const TzolkinDate&) const = default;
};

struct HaabDate {
    int month_index;  // 0..18, Pop = 0 ... Kumk'u = 17, Wayeb = 18
    int day;          // 0..19 (0..4 in Wayeb)
    /// Render as day 20 of the preceding month ("20 Mol" for "0 Ch'en").
    bool end_of_month_form = false;

    int day_of_year() const { return month_index * 20 + day; }
    bool operator==(const HaabDate& o) const {
        return month_index == o.month_index && day == o.day;
    }
};

/// Digits of a Long Count date: at least baktun.katun.tun.winal.kin, more
/// positions permitted above the baktun with the same x20 weight rule.
struct LongCountDate {
    Numeral digits;

    static LongCountDate from_text(std::string_view text);
    std::string to_text() const;
    bool operator==(const LongCountDate&) const = default;
};

struct CalendarRound {
    TzolkinDate tzolkin;
    HaabDate haab;
};

struct TripleCheck {
    bool consistent = false;
    bool tzolkin_number_ok = true;
    bool tzolkin_name_ok = true;
    bool haab_ok = true;
    /// What the Long Count actually implies.
    TzolkinDate expected_tzolkin{1, 0};
    HaabDate expected_haab{0, 0};
};

DayCount lc_to_daycount(const LongCountDate& lc);
LongCountDate daycount_to_lc(const DayCount& d);

JulianDayNumber daycount_to_jdn(const DayCount& d);
DayCount jdn_to_daycount(const JulianDayNumber& j);

CivilDate civil_from_jdn(const JulianDayNumber& j);
JulianDayNumber jdn_from_civil(const CivilDate& c);

Weekday weekday_of(const JulianDayNumber& j);

TzolkinDate tzolkin_of(const DayCount& d);
HaabDate haab_of(const DayCount& d);

/// Switches between the seating form ("0 Ch'en") and the end-of-month form
/// ("20 Mol") of the same day. Only day 0 of months 1..18 has both forms.
HaabDate haab_normalize(const HaabDate& h, bool to_end_of_month_form);

CalendarRound calendar_round_of(const DayCount& d);

/// Every day count in [window.min, window.max] whose Calendar Round matches.
/// Successive solutions differ by exactly 18980 days.
std::vector<DayCount> solve_calendar_round(const CalendarRound& cr, const IntegerInterval& window);

TripleCheck verify_triple(const LongCountDate& lc, const TzolkinDate& t, const HaabDate& h);

const std::array<std::string_view, 20>& tzolkin_names();
const std::array<std::string_view, 19>& haab_month_names();
std::string_view weekday_name(Weekday w);

TzolkinDate parse_tzolkin(std::string_view text);
HaabDate parse_haab(std::string_view text);
std::string format_tzolkin(const TzolkinDate& t);
std::string format_haab(const HaabDate& h);

CivilDate parse_civil(std::string_view text);
std::string format_civil(const CivilDate& c);

}  // namespace posrep::maya
