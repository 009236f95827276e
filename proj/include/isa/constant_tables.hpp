#pragma once

#include <array>

// Coefficient tables for the benchmarks whose formulas reference fixed
// constants (Shekel's foxholes, Kowalik, Hartmann 3/6, Shekel 5/7/10).
namespace isa::tables {

// Shekel's foxholes: column j is the point (a[0][j], a[1][j]).
inline constexpr std::array<std::array<double, 25>, 2> foxholes_a = {{
    {-32, -16, 0, 16, 32, -32, -16, 0, 16, 32, -32, -16, 0,
     16,  32,  -32, -16, 0, 16, 32, -32, -16, 0, 16, 32},
    {-32, -32, -32, -32, -32, -16, -16, -16, -16, -16, 0, 0, 0,
     0,   0,   16,  16,  16,  16,  16,  32,  32,  32,  32, 32},
}};

inline constexpr std::array<double, 11> kowalik_a = {
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
    0.0456, 0.0342, 0.0323, 0.0235, 0.0246};

// Stored as reciprocals, the form in which the data set is published.
inline constexpr std::array<double, 11> kowalik_b_inverse = {
    0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0};

inline constexpr std::array<double, 4> hartmann_c = {1.0, 1.2, 3.0, 3.2};

inline constexpr std::array<std::array<double, 3>, 4> hartmann3_a = {{
    {3.0, 10.0, 30.0},
    {0.1, 10.0, 35.0},
    {3.0, 10.0, 30.0},
    {0.1, 10.0, 35.0},
}};

inline constexpr std::array<std::array<double, 3>, 4> hartmann3_p = {{
    {0.3689, 0.1170, 0.2673},
    {0.4699, 0.4387, 0.7470},
    {0.1091, 0.8732, 0.5547},
    {0.03815, 0.5743, 0.8828},
}};

inline constexpr std::array<std::array<double, 6>, 4> hartmann6_a = {{
    {10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
    {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
    {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
    {17.0, 8.0, 0.05, 10.0, 0.1, 14.0},
}};

inline constexpr std::array<std::array<double, 6>, 4> hartmann6_p = {{
    {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
    {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
    {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
    {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381},
}};

// Shekel 5/7/10 use the first m rows.
inline constexpr std::array<std::array<double, 4>, 10> shekel_a = {{
    {4.0, 4.0, 4.0, 4.0},
    {1.0, 1.0, 1.0, 1.0},
    {8.0, 8.0, 8.0, 8.0},
    {6.0, 6.0, 6.0, 6.0},
    {3.0, 7.0, 3.0, 7.0},
    {2.0, 9.0, 2.0, 9.0},
    {5.0, 5.0, 3.0, 3.0},
    {8.0, 1.0, 8.0, 1.0},
    {6.0, 2.0, 6.0, 2.0},
    {7.0, 3.6, 7.0, 3.6},
}};

inline constexpr std::array<double, 10> shekel_c = {
    0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

} // namespace isa::tables
