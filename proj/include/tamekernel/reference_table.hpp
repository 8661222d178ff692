#pragma once

#include <array>
#include <cstdint>

namespace tamekernel {

/// Published n = 4 rows: D/4, (l_1, l_2, p_3, p_4), -L(chi_D,-1), delta.
struct ReferenceRow {
    std::int64_t d_over_4;
    std::array<std::int64_t, 4> primes;
    std::int64_t neg_L;
    long delta;
};

inline constexpr std::array<ReferenceRow, 61> kReferenceTable{{
    {7215, {3, 5, 13, 37}, 240480, 3},
    {26455, {11, 13, 5, 37}, 1997920, 3},
    {77415, {3, 5, 13, 397}, 8824224, 3},
    {119535, {3, 5, 13, 613}, 16692000, 3},
    {142935, {3, 5, 13, 733}, 22829088, 3},
    {153735, {3, 5, 37, 277}, 25086816, 3},
    {166335, {3, 5, 13, 853}, 28304352, 3},
    {171015, {3, 5, 13, 877}, 28115040, 3},
    {196359, {3, 29, 37, 61}, 37791648, 3},
    {226655, {11, 13, 5, 317}, 40287584, 3},
    {241215, {3, 5, 13, 1237}, 48586080, 3},
    {243295, {19, 13, 5, 197}, 53437792, 3},
    {257335, {107, 5, 13, 37}, 60717792, 3},
    {283855, {11, 13, 5, 397}, 67222496, 3},
    {311415, {3, 5, 13, 1597}, 70325856, 3},
    {315055, {131, 37, 5, 13}, 79864160, 3},
    {420135, {3, 5, 37, 757}, 113889888, 3},
    {430495, {179, 37, 5, 13}, 130245856, 3},
    {447135, {3, 5, 13, 2293}, 117673248, 3},
    {473415, {3, 5, 37, 853}, 128212896, 3},
    {475215, {3, 5, 13, 2437}, 131335968, 3},
    {490295, {19, 13, 5, 397}, 129126880, 3},
    {504295, {11, 173, 5, 53}, 167198304, 3},
    {545415, {3, 5, 13, 2797}, 160048800, 3},
    {550615, {43, 5, 13, 197}, 188399904, 3},
    {552695, {11, 13, 5, 773}, 147595872, 3},
    {553335, {3, 5, 37, 997}, 164792736, 3},
    {563695, {11, 277, 5, 37}, 187614944, 3},
    {568815, {3, 5, 13, 2917}, 177955488, 3},
    {592215, {3, 5, 13, 3037}, 186476448, 3},
    {603655, {251, 37, 5, 13}, 209029792, 3},
    {606615, {3, 5, 37, 1093}, 199213344, 3},
    {633399, {3, 149, 13, 109}, 216478368, 3},
    {657735, {3, 5, 13, 3373}, 220949088, 3},
    {665223, {3, 461, 13, 37}, 209098272, 3},
    {673215, {3, 5, 37, 1213}, 233606880, 3},
    {685815, {3, 5, 13, 3517}, 237620448, 3},
    {687895, {19, 13, 5, 557}, 251644512, 3},
    {727935, {3, 5, 13, 3733}, 245403744, 3},
    {751335, {3, 5, 13, 3853}, 264797280, 3},
    {755495, {59, 13, 5, 197}, 237803552, 3},
    {757055, {19, 13, 5, 613}, 232180384, 3},
    {790495, {19, 53, 5, 157}, 312845408, 3},
    {798135, {3, 5, 13, 4093}, 292536288, 3},
    {803751, {3, 557, 13, 37}, 315036576, 3},
    {807455, {11, 277, 5, 53}, 258772704, 3},
    {818935, {43, 5, 13, 293}, 328030688, 3},
    {833199, {3, 29, 61, 157}, 319335264, 3},
    {849615, {3, 5, 13, 4357}, 321461856, 3},
    {878415, {3, 5, 157, 373}, 324090528, 3},
    {884455, {11, 13, 5, 1237}, 376589472, 3},
    {886015, {43, 5, 13, 317}, 395428320, 3},
    {886335, {3, 5, 37, 1597}, 339119712, 3},
    {896415, {3, 5, 13, 4597}, 353689056, 3},
    {905255, {19, 13, 5, 733}, 316252704, 3},
    {911495, {379, 13, 5, 37}, 319484960, 3},
    {934935, {3, 5, 157, 397}, 377527776, 3},
    {961935, {3, 5, 13, 4933}, 386463456, 3},
    {973655, {19, 37, 5, 277}, 357620256, 3},
    {981695, {11, 13, 5, 1373}, 364695008, 3},
    {990015, {3, 5, 13, 5077}, 394553376, 3},
}};

}  // namespace tamekernel
