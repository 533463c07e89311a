#include "posrep/presets.hpp"

#include <array>
#include <utility>

#include "posrep/system_spec.hpp"

namespace posrep {

namespace {

struct PresetEntry {
    std::string_view name;
    std::string_view spec;
};

// Presets are defined by their spec strings, so parse/format round-trips
// hold by construction. The factorial catalog entry is bounded at 12
// positions (values up to 13!-1) to keep its per-position ranges writable
// in the grammar.
constexpr std::array<PresetEntry, 13> kPresets{{
    {"decimal", "power(10)[0..9]"},
    {"bijective10", "power(10)[1..10]"},
    {"bijective20", "power(20)[1..20]"},
    {"balanced3", "power(3)[-1..1]"},
    {"signedbinary", "power(2)[-1..1]"},
    {"lsd", "weights(1,12,240)[0..11]{1:0..19;2:0..99}"},
    {"lc-std", "longcount()[0..19]{1:0..17}"},
    {"lc-019", "longcount()[0..19]"},
    {"lc-020", "longcount()[0..20]"},
    {"lc-bij", "longcount()[1..20]"},
    {"fibweights", "weights(1,3,9,27)[-1..1]"},
    {"zeckendorf", "fib()[0..1]"},
    {"factorial",
     "factorial(12)[0..1]{1:0..2;2:0..3;3:0..4;4:0..5;5:0..6;6:0..7;7:0..8;8:0..9;9:0..10;"
     "10:0..11;11:0..12}"},
}};

}  // namespace

NumberSystem preset(std::string_view name) {
    for (const PresetEntry& entry : kPresets) {
        if (entry.name == name) {
            return parse_system_spec(entry.spec);
        }
    }
    std::string known;
    for (const PresetEntry& entry : kPresets) {
        if (!known.empty()) known += ", ";
        known += entry.name;
    }
    throw Error(ErrorKind::Domain,
                "unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    names.reserve(kPresets.size());
    for (const PresetEntry& entry : kPresets) {
        names.emplace_back(entry.name);
    }
    return names;
}

NumberSystem resolve_system(std::string_view name_or_spec) {
    for (const PresetEntry& entry : kPresets) {
        if (entry.name == name_or_spec) {
            return parse_system_spec(entry.spec);
        }
    }
    return parse_system_spec(name_or_spec);
}

}  // namespace posrep
