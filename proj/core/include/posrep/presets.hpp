#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posrep/number_system.hpp"

namespace posrep {

// Named systems:
//
//   decimal       power(10), digits 0..9
//   bijective10   power(10), digits 1..10
//   bijective20   power(20), digits 1..20
//   balanced3     power(3),  digits -1..1
//   signedbinary  power(2),  digits -1..1
//   lsd           weights 1,12,240; digits 0..11 / 0..19 / 0..99
//   lc-std        long count, digits 0..19, position 1 capped at 17
//   lc-019        long count, digits 0..19 everywhere
//   lc-020        long count, digits 0..20 everywhere
//   lc-bij        long count, digits 1..20 everywhere
//   fibweights    weights 1,3,9,27; digits -1..1
//   zeckendorf    Fibonacci weights 1,2,3,5,8,...; digits 0..1
//   factorial     weights (i+1)!, digit at position i in 0..i+1, 12 positions

/// Looks up a preset by name; throws Domain error for unknown names.
NumberSystem preset(std::string_view name);

/// Preset names in catalog order.
std::vector<std::string> preset_names();

/// Resolves either a preset name or an inline system-spec string.
NumberSystem resolve_system(std::string_view name_or_spec);

}  // namespace posrep
