#pragma once

#include <array>

namespace zetalab::detail {

// Generated by tools/gen_constants.py; do not edit.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 15> kLanczosCoefficients = {
    1.0000000000000000074,
    676.52036812188353721,
    -1259.1392167222817739,
    771.32342877543770652,
    -176.61502914598978109,
    12.507343225028745327,
    -0.13857103233328224313,
    0.000010091126294731372862,
    -0.00000034345842252531046081,
    0.00000083593378357125965382,
    -0.00000085977556445396087554,
    0.00000060464973384949281078,
    -0.00000029113287278906137139,
    0.000000085891293135682268559,
    -0.000000011646065639867851529,
};
// max relative error on the fit check grid: 7.13e-18
inline constexpr std::array<double, 40> kEulerMaclaurinCoefficients = {
    0.083333333333333333333,
    -0.0013888888888888888889,
    0.000033068783068783068783,
    -8.2671957671957671958e-7,
    2.0876756987868098979e-8,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.174868698558061873e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523341e-19,
    3.5347070396294674717e-21,
    -8.9535174270375468504e-23,
    2.2679524523376830603e-24,
    -5.7447906688722024453e-26,
    1.4551724756148649019e-27,
    -3.6859949406653101782e-29,
    9.336734257095044672e-31,
    -2.3650224157006299346e-32,
    5.9906717624821343047e-34,
    -1.5174548844682902617e-35,
    3.8437581254541882322e-37,
    -9.7363530726466910353e-39,
    2.4662470442006809571e-40,
    -6.2470767418207436931e-42,
    1.5824030244644914298e-43,
    -4.0082736859489359685e-45,
    1.0153075855569556312e-46,
    -2.5718041582418717499e-48,
    6.5144560352338149316e-50,
    -1.6501309906896524555e-51,
    4.1798306285394758949e-53,
    -1.058763466770290877e-54,
    2.6818791912607706661e-56,
    -6.7932793511074212095e-58,
    1.7207577616681404905e-59,
    -4.3587303293488938434e-61,
    1.1040792903684666751e-62,
    -2.7966655133781345072e-64,
};

}  // namespace zetalab::detail
