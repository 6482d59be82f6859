// The 19 Yau-Yu normal-form type ids. "Standard" types are the ten whose
// normal form has exactly four monomials, i.e. a square exponent system.
#pragma once

#include <optional>
#include <string>

namespace selink {

enum class YYType : int {
    I = 0,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
    XII,
    XIII,
    XIV,
    XV,
    XVI,
    XVII,
    XVIII,
    XIX,
};

inline constexpr int kYYTypeCount = 19;

const char* yy_name(YYType t);
std::optional<YYType> yy_from_name(const std::string& name);
bool yy_is_standard(YYType t);

}  // namespace selink
