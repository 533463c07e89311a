// Command-line front end for the posrep library: numeral evaluation and
// canonicalization, representation enumeration and audits, digit-range
// shifting, zeroless/balanced/Zeckendorf conversion, Maya calendar
// computation, and Roman numerals.
//
// Exit codes: 0 success, 1 domain error (one machine-parsable line on
// stderr), 2 usage or command-line parse error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "posrep/arith.hpp"
#include "posrep/error.hpp"
#include "posrep/mayacal.hpp"
#include "posrep/presets.hpp"
#include "posrep/redundancy.hpp"
#include "posrep/special_forms.hpp"
#include "posrep/system_spec.hpp"
#include "posrep/textio.hpp"

namespace {

using namespace posrep;

struct Options {
    std::string notation = "dotted";
    std::string format = "text";

    NotationKind notation_kind() const {
        if (notation == "dotted") return NotationKind::Dotted;
        if (notation == "bijectiveX") return NotationKind::BijectiveX;
        throw CLI::ValidationError("--notation must be dotted or bijectiveX");
    }
    bool tsv() const { return format == "tsv"; }
};

Integer parse_integer_arg(const std::string& text) {
    std::string_view rest = text;
    bool negative = !rest.empty() && rest.front() == '-';
    if (negative) {
        rest.remove_prefix(1);
    }
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string_view::npos) {
        throw Error(ErrorKind::Syntax, "expected an integer, got '" + text + "'");
    }
    Integer v{std::string(rest)};
    return negative ? -v : v;
}

IntegerInterval parse_range_arg(const std::string& text) {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        throw Error(ErrorKind::Syntax, "expected LO..HI, got '" + text + "'");
    }
    IntegerInterval range{parse_integer_arg(text.substr(0, dots)),
                          parse_integer_arg(text.substr(dots + 2))};
    if (range.min > range.max) {
        throw Error(ErrorKind::Domain, "range is empty: " + text);
    }
    return range;
}

void print_value(const Options& opts, const std::string& header, const std::string& value) {
    if (opts.tsv()) {
        std::cout << header << "\n";
    }
    std::cout << value << "\n";
}

// Smallest length whose representable interval reaches v; used when
// --max-pos is omitted. Values no length can reach get a width that lets
// the enumeration come back empty rather than erroring.
std::size_t default_max_positions(const NumberSystem& sys, const Integer& v) {
    std::size_t limit = sys.max_positions().value_or(256);
    for (std::size_t length = 1; length <= limit; ++length) {
        if (representable_interval(sys, length).contains(v)) {
            return length;
        }
    }
    if (sys.max_positions()) {
        return *sys.max_positions();
    }
    bool nonnegative = sys.default_range().lo >= 0;
    for (const auto& [pos, range] : sys.overrides()) {
        nonnegative = nonnegative && range.lo >= 0;
    }
    if (nonnegative && v < representable_interval(sys, 1).min) {
        return 1;  // below the reach of any length
    }
    throw Error(ErrorKind::Unrepresentable,
                "value " + v.str() + " needs more than " + std::to_string(limit) +
                    " positions; pass --max-pos");
}

std::string render(const Numeral& n, const Options& opts) {
    return format_numeral(n, opts.notation_kind());
}

int run(int argc, char** argv) {
    CLI::App app{"number representation systems and Maya calendar toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--notation", opts.notation, "numeral notation: dotted or bijectiveX")
        ->capture_default_str();
    app.add_option("--format", opts.format, "output format: text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}))
        ->capture_default_str();

    std::string system_arg = "decimal";
    std::string numeral_arg, numeral_b_arg, value_arg, range_arg;
    std::size_t max_pos = 0;
    std::uint64_t budget = AuditOptions{}.budget;
    long long shift_by = 0;
    std::size_t shift_length = 1;

    auto add_system_flag = [&](CLI::App* cmd) {
        cmd->add_option("--system", system_arg, "preset name or system-spec string")->required();
    };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a numeral to its integer value");
    add_system_flag(eval_cmd);
    eval_cmd->add_option("numeral", numeral_arg)->required();

    auto* repr_cmd = app.add_subcommand("repr", "canonical or selected representation of a value");
    add_system_flag(repr_cmd);
    repr_cmd->add_option("--max-pos", max_pos, "positions to search in non-regular systems");
    repr_cmd->add_option("value", value_arg)->required();

    auto* add_cmd = app.add_subcommand("add", "carry-normalizing addition of two numerals");
    add_system_flag(add_cmd);
    add_cmd->add_option("a", numeral_arg)->required();
    add_cmd->add_option("b", numeral_b_arg)->required();

    auto* enum_cmd = app.add_subcommand("enum", "all representations of a value");
    add_system_flag(enum_cmd);
    enum_cmd->add_option("--max-pos", max_pos);
    enum_cmd->add_option("value", value_arg)->required();

    auto* count_cmd = app.add_subcommand("count", "number of representations of a value");
    add_system_flag(count_cmd);
    count_cmd->add_option("--max-pos", max_pos);
    count_cmd->add_option("value", value_arg)->required();

    auto* audit_unique_cmd =
        app.add_subcommand("audit-unique", "list values in a range with multiple representations");
    add_system_flag(audit_unique_cmd);
    audit_unique_cmd->add_option("--max-pos", max_pos)->required();
    audit_unique_cmd->add_option("--range", range_arg, "LO..HI inclusive")->required();
    audit_unique_cmd->add_option("--budget", budget, "candidate budget for the audit");

    auto* audit_complete_cmd =
        app.add_subcommand("audit-complete", "list values in a range with no representation");
    add_system_flag(audit_complete_cmd);
    audit_complete_cmd->add_option("--max-pos", max_pos)->required();
    audit_complete_cmd->add_option("--range", range_arg, "LO..HI inclusive")->required();
    audit_complete_cmd->add_option("--budget", budget);

    auto* fraction_cmd =
        app.add_subcommand("fraction", "fraction of values in a range with multiple representations");
    add_system_flag(fraction_cmd);
    fraction_cmd->add_option("--max-pos", max_pos)->required();
    fraction_cmd->add_option("--range", range_arg, "LO..HI inclusive")->required();
    fraction_cmd->add_option("--budget", budget);

    auto* shift_cmd = app.add_subcommand("shift", "shift every digit range by a constant");
    add_system_flag(shift_cmd);
    shift_cmd->add_option("--by", shift_by, "shift amount")->required();
    shift_cmd->add_option("--length", shift_length, "numeral length the offset applies to")
        ->required();

    auto* convert_cmd = app.add_subcommand("convert", "special-form conversions");
    convert_cmd->require_subcommand(1);
    std::string base_arg = "10";
    bool convert_from = false;
    std::string normalize_arg;

    auto* bij_cmd = convert_cmd->add_subcommand("bijective", "zeroless positional form");
    bij_cmd->add_option("--base", base_arg)->capture_default_str();
    bij_cmd->add_flag("--from", convert_from, "treat the argument as a numeral and decode it");
    bij_cmd->add_option("value", value_arg)->required();

    auto* bal_cmd = convert_cmd->add_subcommand("balanced", "balanced signed-digit form");
    bal_cmd->add_option("--base", base_arg, "odd base >= 3")->required();
    bal_cmd->add_option("value", value_arg)->required();

    auto* zeck_cmd = convert_cmd->add_subcommand("zeckendorf", "Fibonacci-weight form");
    zeck_cmd->add_option("--normalize", normalize_arg,
                         "rewrite a 0/1 Fibonacci-weight numeral instead of converting a value");
    zeck_cmd->add_option("value", value_arg);

    auto* maya_cmd = app.add_subcommand("maya", "Long Count / Tzolk'in / Haab calendar");
    maya_cmd->require_subcommand(1);
    std::string lc_arg, tz_arg, haab_arg, date_arg, lo_arg, hi_arg;

    auto* lc2day_cmd = maya_cmd->add_subcommand("lc2day", "days since 0.0.0.0.0");
    lc2day_cmd->add_option("longcount", lc_arg)->required();
    auto* day2lc_cmd = maya_cmd->add_subcommand("day2lc", "Long Count of a day count");
    day2lc_cmd->add_option("days", value_arg)->required();
    auto* lc2date_cmd = maya_cmd->add_subcommand("lc2date", "proleptic Gregorian date");
    lc2date_cmd->add_option("longcount", lc_arg)->required();
    auto* date2lc_cmd = maya_cmd->add_subcommand("date2lc", "Long Count of a civil date");
    date2lc_cmd->add_option("date", date_arg)->required();
    auto* tzolkin_cmd = maya_cmd->add_subcommand("tzolkin", "Tzolk'in date of a day count");
    tzolkin_cmd->add_option("days", value_arg)->required();
    auto* haab_cmd = maya_cmd->add_subcommand("haab", "Haab date of a day count");
    haab_cmd->add_option("days", value_arg)->required();
    auto* round_cmd = maya_cmd->add_subcommand("round", "Calendar Round of a day count");
    round_cmd->add_option("days", value_arg)->required();
    auto* solve_cmd = maya_cmd->add_subcommand("solve-round", "day counts matching a Calendar Round");
    solve_cmd->add_option("tzolkin", tz_arg, "e.g. \"3 Kab'an\"")->required();
    solve_cmd->add_option("haab", haab_arg, "e.g. \"10 Keh\"")->required();
    solve_cmd->add_option("lo", lo_arg)->required();
    solve_cmd->add_option("hi", hi_arg)->required();
    auto* verify_cmd = maya_cmd->add_subcommand("verify", "three-calendar consistency check");
    verify_cmd->add_option("longcount", lc_arg)->required();
    verify_cmd->add_option("tzolkin", tz_arg)->required();
    verify_cmd->add_option("haab", haab_arg)->required();
    auto* weekday_cmd = maya_cmd->add_subcommand("weekday", "weekday of a civil date");
    weekday_cmd->add_option("date", date_arg)->required();

    auto* roman_cmd = app.add_subcommand("roman", "Roman numerals");
    roman_cmd->require_subcommand(1);
    std::string roman_mode = "subtractive";
    auto* roman_parse_cmd = roman_cmd->add_subcommand("parse", "value of a Roman numeral");
    roman_parse_cmd->add_option("text", numeral_arg)->required();
    auto* roman_format_cmd = roman_cmd->add_subcommand("format", "Roman numeral of a value");
    roman_format_cmd->add_option("--mode", roman_mode)
        ->check(CLI::IsMember({"subtractive", "additive"}))
        ->capture_default_str();
    roman_format_cmd->add_option("value", value_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        std::cerr << "error:usage: " << e.what() << "\n";
        return 2;
    }

    if (eval_cmd->parsed()) {
        NumberSystem sys = resolve_system(system_arg);
        Numeral n = parse_numeral(numeral_arg, opts.notation_kind());
        print_value(opts, "value", evaluate(n, sys).str());
        return 0;
    }

    if (repr_cmd->parsed()) {
        NumberSystem sys = resolve_system(system_arg);
        Integer v = parse_integer_arg(value_arg);
        Numeral result = [&] {
            if (RegularSystemView::is_regular(sys)) {
                return canonicalize(v, sys);
            }
            std::size_t positions = max_pos != 0 ? max_pos : default_max_positions(sys, v);
            return select_representative(enumerate_representations(v, sys, positions));
        }();
        print_value(opts, "form", render(result, opts));
        return 0;
    }

    if (add_cmd->parsed()) {
        NumberSystem sys = resolve_system(system_arg);
        Numeral a = parse_numeral(numeral_arg, opts.notation_kind());
        Numeral b = parse_numeral(numeral_b_arg, opts.notation_kind());
        print_value(opts, "form", render(add(a, b, sys), opts));
        return 0;
    }

    if (enum_cmd->parsed() || count_cmd->parsed()) {
        NumberSystem sys = resolve_system(system_arg);
        Integer v = parse_integer_arg(value_arg);
        std::size_t positions = max_pos != 0 ? max_pos : default_max_positions(sys, v);
        RepresentationSet reps = enumerate_representations(v, sys, positions);
        if (count_cmd->parsed()) {
            print_value(opts, "count", std::to_string(reps.members.size()));
        } else {
            if (opts.tsv()) {
                std::cout << "form\n";
            }
            for (const Numeral& n : reps.members) {
                std::cout << render(n, opts) << "\n";
            }
        }
        return 0;
    }

    if (audit_unique_cmd->parsed() || audit_complete_cmd->parsed()) {
        NumberSystem sys = resolve_system(system_arg);
        IntegerInterval range = parse_range_arg(range_arg);
        AuditOptions audit{budget};
        RedundancyReport report = audit_unique_cmd->parsed()
                                      ? check_uniqueness(sys, range, max_pos, audit)
                                      : check_completeness(sys, range, max_pos, audit);
        if (opts.tsv()) {
            std::cout << "value\tcount\tforms\n";
        }
        std::cout << serialize_report(report);
        return 0;
    }

    if (fraction_cmd->parsed()) {
        NumberSystem sys = resolve_system(system_arg);
        IntegerInterval range = parse_range_arg(range_arg);
        Rational f = redundancy_fraction(sys, range, max_pos, AuditOptions{budget});
        print_value(opts, "fraction",
                    boost::multiprecision::numerator(f).str() + "/" +
                        boost::multiprecision::denominator(f).str());
        return 0;
    }

    if (shift_cmd->parsed()) {
        NumberSystem sys = resolve_system(system_arg);
        ShiftResult result = shift_digits(sys, shift_by, shift_length);
        if (opts.tsv()) {
            std::cout << "offset\tsystem\n"
                      << result.offset.str() << "\t" << format_system_spec(result.system) << "\n";
        } else {
            std::cout << "offset\t" << result.offset.str() << "\n"
                      << "system\t" << format_system_spec(result.system) << "\n";
        }
        return 0;
    }

    if (bij_cmd->parsed()) {
        Integer base = parse_integer_arg(base_arg);
        if (convert_from) {
            Numeral n = parse_numeral(value_arg, NotationKind::BijectiveX);
            print_value(opts, "value", from_bijective(n, base).str());
        } else {
            Numeral n = to_bijective(parse_integer_arg(value_arg), base);
            // Zeroless numerals read naturally in the glyph notation.
            NotationKind kind = app.count("--notation") != 0 ? opts.notation_kind()
                                                             : NotationKind::BijectiveX;
            print_value(opts, "form", format_numeral(n, kind));
        }
        return 0;
    }

    if (bal_cmd->parsed()) {
        BalancedSpec spec{parse_integer_arg(base_arg)};
        Numeral n = to_balanced(parse_integer_arg(value_arg), spec);
        print_value(opts, "form", render(n, opts));
        return 0;
    }

    if (zeck_cmd->parsed()) {
        if (normalize_arg.empty() && value_arg.empty()) {
            std::cerr << "error:usage: convert zeckendorf needs a value or --normalize\n";
            return 2;
        }
        Numeral n = normalize_arg.empty()
                        ? zeckendorf(parse_integer_arg(value_arg))
                        : zeckendorf_normalize(parse_numeral(normalize_arg, NotationKind::Dotted));
        print_value(opts, "form", render(n, opts));
        return 0;
    }

    using namespace posrep::maya;

    if (lc2day_cmd->parsed()) {
        DayCount d = lc_to_daycount(LongCountDate::from_text(lc_arg));
        print_value(opts, "days", d.days.str());
        return 0;
    }
    if (day2lc_cmd->parsed()) {
        LongCountDate lc = daycount_to_lc(DayCount{parse_integer_arg(value_arg)});
        print_value(opts, "longcount", lc.to_text());
        return 0;
    }
    if (lc2date_cmd->parsed()) {
        DayCount d = lc_to_daycount(LongCountDate::from_text(lc_arg));
        CivilDate civil = civil_from_jdn(daycount_to_jdn(d));
        std::string text = format_civil(civil);
        if (!opts.tsv() && civil.year <= 0) {
            text += " (" + (Integer(1) - civil.year).str() + " BCE)";
        }
        print_value(opts, "date", text);
        return 0;
    }
    if (date2lc_cmd->parsed()) {
        JulianDayNumber j = jdn_from_civil(parse_civil(date_arg));
        DayCount d = jdn_to_daycount(j);
        print_value(opts, "longcount", daycount_to_lc(d).to_text());
        return 0;
    }
    if (tzolkin_cmd->parsed()) {
        print_value(opts, "tzolkin", format_tzolkin(tzolkin_of(DayCount{parse_integer_arg(value_arg)})));
        return 0;
    }
    if (haab_cmd->parsed()) {
        print_value(opts, "haab", format_haab(haab_of(DayCount{parse_integer_arg(value_arg)})));
        return 0;
    }
    if (round_cmd->parsed()) {
        CalendarRound cr = calendar_round_of(DayCount{parse_integer_arg(value_arg)});
        if (opts.tsv()) {
            std::cout << "tzolkin\thaab\n"
                      << format_tzolkin(cr.tzolkin) << "\t" << format_haab(cr.haab) << "\n";
        } else {
            std::cout << format_tzolkin(cr.tzolkin) << " " << format_haab(cr.haab) << "\n";
        }
        return 0;
    }
    if (solve_cmd->parsed()) {
        CalendarRound cr{parse_tzolkin(tz_arg), parse_haab(haab_arg)};
        IntegerInterval window{parse_integer_arg(lo_arg), parse_integer_arg(hi_arg)};
        if (opts.tsv()) {
            std::cout << "days\n";
        }
        for (const DayCount& d : solve_calendar_round(cr, window)) {
            std::cout << d.days.str() << "\n";
        }
        return 0;
    }
    if (verify_cmd->parsed()) {
        TripleCheck check = verify_triple(LongCountDate::from_text(lc_arg), parse_tzolkin(tz_arg),
                                          parse_haab(haab_arg));
        if (check.consistent) {
            std::cout << "consistent\n";
            return 0;
        }
        std::string parts;
        if (!check.tzolkin_number_ok) parts += " tzolkin-number";
        if (!check.tzolkin_name_ok) parts += " tzolkin-name";
        if (!check.haab_ok) parts += " haab";
        std::cout << "inconsistent:" << parts << " (Long Count implies "
                  << format_tzolkin(check.expected_tzolkin) << " "
                  << format_haab(check.expected_haab) << ")\n";
        std::cerr << "error:inconsistent:" << parts << "\n";
        return 1;
    }
    if (weekday_cmd->parsed()) {
        Weekday w = weekday_of(jdn_from_civil(parse_civil(date_arg)));
        print_value(opts, "weekday", std::string(weekday_name(w)));
        return 0;
    }

    if (roman_parse_cmd->parsed()) {
        print_value(opts, "value", roman_parse(numeral_arg).str());
        return 0;
    }
    if (roman_format_cmd->parsed()) {
        RomanMode mode = roman_mode == "additive" ? RomanMode::Additive : RomanMode::Subtractive;
        print_value(opts, "form", roman_format(parse_integer_arg(value_arg), mode));
        return 0;
    }

    std::cerr << "error:usage: no subcommand handled\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const posrep::Error& e) {
        std::cerr << "error:" << posrep::error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "error:usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error:internal: " << e.what() << "\n";
        return 1;
    }
}
