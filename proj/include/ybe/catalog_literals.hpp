#pragma once

#include <array>
#include <string_view>

// Displayed R-matrices, row by row, in the basis e_i⊗e_j (lexicographic).
namespace ybe::literals {

using LiteralTable = std::array<std::array<std::string_view, 9>, 9>;

inline constexpr LiteralTable kLiteralP = {{
    {{"1", "2*m", "m^2", "-2*m", "2*m^2", "m^3", "m^2", "-m^3", "-2*m^4"}},
    {{"0", "1", "m", "0", "m", "m^2", "0", "m^2", "-2*m^3"}},
    {{"0", "0", "1", "0", "0", "m", "0", "3*m", "-2*m^2"}},
    {{"0", "0", "0", "1", "-m", "m^2", "-m", "m^2", "2*m^3"}},
    {{"0", "0", "0", "0", "1", "m", "0", "-m", "2*m^2"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "2*m"}},
    {{"0", "0", "0", "0", "0", "-3*m", "1", "-m", "-2*m^2"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "-2*m"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1"}},
}};

inline constexpr LiteralTable kLiteralR = {{
    {{"1", "-a*t", "-2*t", "a*t", "2*a^2*t^2", "a*t^2", "2*t", "a*t^2", "2*t^2"}},
    {{"0", "1", "0", "0", "-2*a*t", "-3*t", "0", "-t", "0"}},
    {{"0", "0", "1", "0", "0", "a*t", "0", "0", "-t"}},
    {{"0", "0", "0", "1", "2*a*t", "t", "0", "3*t", "0"}},
    {{"0", "0", "0", "0", "1", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "1", "-a*t", "t"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1"}},
}};

inline constexpr LiteralTable kLiteralQabc = {{
    {{"1", "0", "a*t", "0", "0", "0", "-a*t", "0", "-a*c*t^2"}},
    {{"0", "1", "0", "0", "0", "a*t-c*t", "0", "-b*t", "0"}},
    {{"0", "0", "1", "0", "0", "0", "0", "0", "-c*t"}},
    {{"0", "0", "0", "1", "0", "b*t", "0", "-a*t+c*t", "0"}},
    {{"0", "0", "0", "0", "1", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "1", "0", "c*t"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1"}},
}};

inline constexpr LiteralTable kLiteralQ011m1Prime = {{
    {{"1", "0", "0", "0", "0", "t", "0", "-t", "t^2"}},
    {{"0", "1", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "1", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "1", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "1", "t", "0", "-t", "t^2"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "t"}},
    {{"0", "0", "0", "0", "0", "0", "1", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "-t"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1"}},
}};

inline constexpr LiteralTable kLiteralQ11m2Prime = {{
    {{"1", "0", "t", "0", "0", "0", "-t", "0", "2*t^2"}},
    {{"0", "1", "0", "0", "0", "3*t", "0", "-t", "-t"}},
    {{"0", "0", "1", "0", "0", "0", "0", "0", "2*t"}},
    {{"0", "0", "0", "1", "0", "t", "0", "-3*t", "t"}},
    {{"0", "0", "0", "0", "1", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "1", "0", "-2*t"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1"}},
}};

inline constexpr LiteralTable kLiteralBLambda = {{
    {{"1", "lam*t-t", "0", "-lam*t+t", "-lam^2*t^2+t^2", "0", "0", "0", "0"}},
    {{"0", "1", "0", "0", "-lam*t-t", "0", "0", "0", "0"}},
    {{"0", "0", "1", "0", "0", "2*lam*t", "0", "0", "0"}},
    {{"0", "0", "0", "1", "lam*t+t", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "1", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "1", "-2*lam*t", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1"}},
}};

inline constexpr LiteralTable kLiteralB0 = {{
    {{"1", "-2*t", "2*t^2", "2*t", "0", "0", "2*t^2", "0", "0"}},
    {{"0", "1", "-2*t", "0", "0", "2*t^2", "0", "0", "-2*t^3"}},
    {{"0", "0", "1", "0", "0", "-2*t", "0", "0", "2*t^2"}},
    {{"0", "0", "0", "1", "0", "0", "2*t", "2*t^2", "2*t^3"}},
    {{"0", "0", "0", "0", "1", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "-2*t"}},
    {{"0", "0", "0", "0", "0", "0", "1", "2*t", "2*t^2"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "2*t"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1"}},
}};

inline constexpr LiteralTable kLiteralB1 = {{
    {{"1", "0", "-2*t", "0", "0", "0", "2*t", "0", "2*t^2"}},
    {{"0", "1", "0", "0", "0", "0", "0", "-t", "t"}},
    {{"0", "0", "1", "0", "0", "0", "0", "0", "-t"}},
    {{"0", "0", "0", "1", "0", "t", "0", "0", "-t"}},
    {{"0", "0", "0", "0", "1", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "1", "0", "t"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1"}},
}};

inline constexpr LiteralTable kLiteralH1 = {{
    {{"1", "t", "0", "-t", "-t^2", "0", "0", "0", "0"}},
    {{"0", "1", "0", "0", "-t", "0", "0", "0", "0"}},
    {{"0", "0", "1", "0", "0", "2*t", "0", "0", "0"}},
    {{"0", "0", "0", "1", "t", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "1", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "1", "-2*t", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1"}},
}};

inline constexpr LiteralTable kLiteralHLam1 = {{
    {{"1", "0", "0", "0", "0", "t", "0", "-t", "0"}},
    {{"0", "1", "0", "0", "0", "0", "0", "0", "-lam*t"}},
    {{"0", "0", "1", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "1", "0", "0", "0", "0", "lam*t"}},
    {{"0", "0", "0", "0", "1", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "1", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1"}},
}};

}  // namespace ybe::literals
