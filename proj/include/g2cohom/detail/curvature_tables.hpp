#pragma once

// Generated monomial tables for the ten mixed-plane curvature components
// R1..R10 of the reduced metric profile.  Regenerate with
// scripts/gen_curvature_tables.py; do not edit by hand.
//
// Variable order in the exponent vector:
//   [0] xi    [1] f1_sq  [2] f2_sq  [3] f12
//   [4] D1 = f1 f1' xi'  [5] D2 = f2 f2' xi'  [6] D3 = f12' xi'
// A row contributes  (num/den) * alpha^apow * gam^gpow * prod(var[i]^e[i]).
//
// The stored polynomial is R_i itself, sqrt(3)*R_i, or (alpha - xi)*R_i,
// as indicated by the scale tag; callers divide the scale back out.

#include <cstddef>

namespace g2cohom::detail {

inline constexpr int kNumTableVars = 7;

struct MonomialRow {
    int e[kNumTableVars];
    long long num;
    long long den;
    int apow;  // power of alpha (may be negative)
    int gpow;  // power of gam, 0 or 1
};

enum class RowScale { kPlain, kSqrt3, kAlphaMinusXi };

struct MonomialTable {
    const MonomialRow* rows;
    std::size_t size;
    RowScale scale;
};

inline constexpr MonomialRow kRowsR1[] = {
    {{1, 0, 0, 0, 0, 0, 0}, -1, 2, -1, 0},
    {{2, 0, 0, 0, 0, 0, 0}, 1, 8, -2, 0},
    {{1, 1, 0, 0, 0, 0, 0}, 1, 4, -1, 0},
    {{0, 2, 0, 0, 0, 0, 0}, 1, 8, 0, 0},
    {{1, 0, 0, 1, 0, 0, 0}, -1, 4, -1, 0},
    {{0, 1, 0, 1, 0, 0, 0}, -1, 4, 0, 0},
    {{0, 0, 0, 2, 0, 0, 0}, 1, 8, 0, 0},
    {{0, 0, 0, 0, 1, 0, 0}, 1, 2, 0, 0},
};

inline constexpr MonomialRow kRowsR2[] = {
    {{1, 0, 0, 0, 0, 0, 0}, 1, 2, -1, 0},
    {{2, 0, 0, 0, 0, 0, 0}, -1, 8, -2, 0},
    {{2, 0, 0, 0, 0, 0, 0}, 1, 8, -3, 1},
    {{1, 1, 0, 0, 0, 0, 0}, -1, 4, -1, 0},
    {{0, 2, 0, 0, 0, 0, 0}, -1, 8, 0, 0},
    {{0, 2, 0, 0, 0, 0, 0}, -1, 8, -1, 1},
    {{1, 0, 0, 1, 0, 0, 0}, 1, 4, -1, 0},
    {{0, 1, 0, 1, 0, 0, 0}, 1, 4, 0, 0},
    {{0, 1, 0, 1, 0, 0, 0}, 1, 4, -1, 1},
    {{0, 0, 0, 2, 0, 0, 0}, -1, 8, 0, 0},
    {{0, 0, 0, 2, 0, 0, 0}, -1, 8, -1, 1},
    {{0, 0, 0, 0, 1, 0, 0}, -1, 2, 0, 0},
    {{0, 0, 0, 0, 1, 0, 0}, 1, 2, -1, 1},
};

inline constexpr MonomialRow kRowsR3[] = {
    {{1, 0, 0, 0, 0, 0, 0}, 1, 2, 0, 0},
    {{2, 0, 0, 0, 0, 0, 0}, -7, 24, -1, 0},
    {{2, 0, 0, 0, 0, 0, 0}, -1, 12, -2, 1},
    {{3, 0, 0, 0, 0, 0, 0}, 1, 8, -3, 0},
    {{3, 0, 0, 0, 0, 0, 0}, -5, 24, -2, 0},
    {{3, 0, 0, 0, 0, 0, 0}, 1, 12, -3, 1},
    {{1, 1, 0, 0, 0, 0, 0}, -1, 4, 0, 0},
    {{2, 1, 0, 0, 0, 0, 0}, -1, 4, -2, 0},
    {{2, 1, 0, 0, 0, 0, 0}, 1, 4, -1, 0},
    {{0, 2, 0, 0, 0, 0, 0}, 5, 24, 1, 0},
    {{0, 2, 0, 0, 0, 0, 0}, 1, 12, 0, 1},
    {{1, 2, 0, 0, 0, 0, 0}, -5, 24, 0, 0},
    {{1, 2, 0, 0, 0, 0, 0}, 1, 8, -1, 0},
    {{1, 2, 0, 0, 0, 0, 0}, -1, 12, -1, 1},
    {{1, 0, 0, 1, 0, 0, 0}, 1, 4, 0, 0},
    {{2, 0, 0, 1, 0, 0, 0}, 1, 4, -2, 0},
    {{2, 0, 0, 1, 0, 0, 0}, -1, 4, -1, 0},
    {{0, 1, 0, 1, 0, 0, 0}, -5, 12, 1, 0},
    {{0, 1, 0, 1, 0, 0, 0}, -1, 6, 0, 1},
    {{1, 1, 0, 1, 0, 0, 0}, 5, 12, 0, 0},
    {{1, 1, 0, 1, 0, 0, 0}, -1, 4, -1, 0},
    {{1, 1, 0, 1, 0, 0, 0}, 1, 6, -1, 1},
    {{0, 0, 0, 2, 0, 0, 0}, 5, 24, 1, 0},
    {{0, 0, 0, 2, 0, 0, 0}, 1, 12, 0, 1},
    {{1, 0, 0, 2, 0, 0, 0}, -5, 24, 0, 0},
    {{1, 0, 0, 2, 0, 0, 0}, 1, 8, -1, 0},
    {{1, 0, 0, 2, 0, 0, 0}, -1, 12, -1, 1},
    {{0, 0, 0, 0, 1, 0, 0}, -1, 2, 0, 0},
    {{0, 0, 0, 0, 1, 0, 0}, 5, 6, 1, 0},
    {{0, 0, 0, 0, 1, 0, 0}, -1, 3, 0, 1},
    {{1, 0, 0, 0, 1, 0, 0}, -5, 6, 0, 0},
    {{1, 0, 0, 0, 1, 0, 0}, 1, 2, -1, 0},
    {{1, 0, 0, 0, 1, 0, 0}, 1, 3, -1, 1},
};

inline constexpr MonomialRow kRowsR4[] = {
    {{1, 0, 0, 0, 0, 0, 0}, -1, 2, -1, 0},
    {{2, 0, 0, 0, 0, 0, 0}, 1, 8, -2, 0},
    {{1, 0, 1, 0, 0, 0, 0}, 1, 4, -1, 0},
    {{0, 0, 2, 0, 0, 0, 0}, 1, 8, 0, 0},
    {{1, 0, 0, 1, 0, 0, 0}, -1, 4, -1, 0},
    {{0, 0, 1, 1, 0, 0, 0}, -1, 4, 0, 0},
    {{0, 0, 0, 2, 0, 0, 0}, 1, 8, 0, 0},
    {{0, 0, 0, 0, 0, 1, 0}, 1, 2, 0, 0},
};

inline constexpr MonomialRow kRowsR5[] = {
    {{1, 0, 0, 0, 0, 0, 0}, 1, 2, -1, 0},
    {{2, 0, 0, 0, 0, 0, 0}, -1, 8, -2, 0},
    {{2, 0, 0, 0, 0, 0, 0}, 1, 8, -3, 1},
    {{1, 0, 1, 0, 0, 0, 0}, -1, 4, -1, 0},
    {{0, 0, 2, 0, 0, 0, 0}, -1, 8, 0, 0},
    {{0, 0, 2, 0, 0, 0, 0}, -1, 8, -1, 1},
    {{1, 0, 0, 1, 0, 0, 0}, 1, 4, -1, 0},
    {{0, 0, 1, 1, 0, 0, 0}, 1, 4, 0, 0},
    {{0, 0, 1, 1, 0, 0, 0}, 1, 4, -1, 1},
    {{0, 0, 0, 2, 0, 0, 0}, -1, 8, 0, 0},
    {{0, 0, 0, 2, 0, 0, 0}, -1, 8, -1, 1},
    {{0, 0, 0, 0, 0, 1, 0}, -1, 2, 0, 0},
    {{0, 0, 0, 0, 0, 1, 0}, 1, 2, -1, 1},
};

inline constexpr MonomialRow kRowsR6[] = {
    {{1, 0, 0, 0, 0, 0, 0}, 1, 2, 0, 0},
    {{2, 0, 0, 0, 0, 0, 0}, -7, 24, -1, 0},
    {{2, 0, 0, 0, 0, 0, 0}, -1, 12, -2, 1},
    {{3, 0, 0, 0, 0, 0, 0}, 1, 8, -3, 0},
    {{3, 0, 0, 0, 0, 0, 0}, -5, 24, -2, 0},
    {{3, 0, 0, 0, 0, 0, 0}, 1, 12, -3, 1},
    {{1, 0, 1, 0, 0, 0, 0}, -1, 4, 0, 0},
    {{2, 0, 1, 0, 0, 0, 0}, -1, 4, -2, 0},
    {{2, 0, 1, 0, 0, 0, 0}, 1, 4, -1, 0},
    {{0, 0, 2, 0, 0, 0, 0}, 5, 24, 1, 0},
    {{0, 0, 2, 0, 0, 0, 0}, 1, 12, 0, 1},
    {{1, 0, 2, 0, 0, 0, 0}, -5, 24, 0, 0},
    {{1, 0, 2, 0, 0, 0, 0}, 1, 8, -1, 0},
    {{1, 0, 2, 0, 0, 0, 0}, -1, 12, -1, 1},
    {{1, 0, 0, 1, 0, 0, 0}, 1, 4, 0, 0},
    {{2, 0, 0, 1, 0, 0, 0}, 1, 4, -2, 0},
    {{2, 0, 0, 1, 0, 0, 0}, -1, 4, -1, 0},
    {{0, 0, 1, 1, 0, 0, 0}, -5, 12, 1, 0},
    {{0, 0, 1, 1, 0, 0, 0}, -1, 6, 0, 1},
    {{1, 0, 1, 1, 0, 0, 0}, 5, 12, 0, 0},
    {{1, 0, 1, 1, 0, 0, 0}, -1, 4, -1, 0},
    {{1, 0, 1, 1, 0, 0, 0}, 1, 6, -1, 1},
    {{0, 0, 0, 2, 0, 0, 0}, 5, 24, 1, 0},
    {{0, 0, 0, 2, 0, 0, 0}, 1, 12, 0, 1},
    {{1, 0, 0, 2, 0, 0, 0}, -5, 24, 0, 0},
    {{1, 0, 0, 2, 0, 0, 0}, 1, 8, -1, 0},
    {{1, 0, 0, 2, 0, 0, 0}, -1, 12, -1, 1},
    {{0, 0, 0, 0, 0, 1, 0}, -1, 2, 0, 0},
    {{0, 0, 0, 0, 0, 1, 0}, 5, 6, 1, 0},
    {{0, 0, 0, 0, 0, 1, 0}, -1, 3, 0, 1},
    {{1, 0, 0, 0, 0, 1, 0}, -5, 6, 0, 0},
    {{1, 0, 0, 0, 0, 1, 0}, 1, 2, -1, 0},
    {{1, 0, 0, 0, 0, 1, 0}, 1, 3, -1, 1},
};

inline constexpr MonomialRow kRowsR7[] = {
    {{1, 0, 0, 0, 0, 0, 0}, 1, 2, -1, 0},
    {{2, 0, 0, 0, 0, 0, 0}, -1, 8, -2, 0},
    {{1, 1, 0, 0, 0, 0, 0}, -1, 8, -1, 0},
    {{1, 0, 1, 0, 0, 0, 0}, -1, 8, -1, 0},
    {{0, 1, 1, 0, 0, 0, 0}, -1, 8, 0, 0},
    {{1, 0, 0, 1, 0, 0, 0}, 1, 4, -1, 0},
    {{0, 1, 0, 1, 0, 0, 0}, 1, 8, 0, 0},
    {{0, 0, 1, 1, 0, 0, 0}, 1, 8, 0, 0},
    {{0, 0, 0, 2, 0, 0, 0}, -1, 8, 0, 0},
    {{0, 0, 0, 0, 0, 0, 1}, 1, 4, 0, 0},
};

inline constexpr MonomialRow kRowsR8[] = {
    {{1, 0, 0, 0, 0, 0, 0}, -1, 2, -1, 0},
    {{2, 0, 0, 0, 0, 0, 0}, 1, 8, -2, 0},
    {{2, 0, 0, 0, 0, 0, 0}, -1, 8, -3, 1},
    {{1, 1, 0, 0, 0, 0, 0}, 1, 8, -1, 0},
    {{1, 1, 0, 0, 0, 0, 0}, -1, 8, -2, 1},
    {{1, 0, 1, 0, 0, 0, 0}, 1, 8, -1, 0},
    {{1, 0, 1, 0, 0, 0, 0}, 1, 8, -2, 1},
    {{0, 1, 1, 0, 0, 0, 0}, 1, 8, 0, 0},
    {{0, 1, 1, 0, 0, 0, 0}, 1, 8, -1, 1},
    {{1, 0, 0, 1, 0, 0, 0}, -1, 4, -1, 0},
    {{0, 1, 0, 1, 0, 0, 0}, -1, 8, 0, 0},
    {{0, 1, 0, 1, 0, 0, 0}, -1, 8, -1, 1},
    {{0, 0, 1, 1, 0, 0, 0}, -1, 8, 0, 0},
    {{0, 0, 1, 1, 0, 0, 0}, -1, 8, -1, 1},
    {{0, 0, 0, 2, 0, 0, 0}, 1, 8, 0, 0},
    {{0, 0, 0, 2, 0, 0, 0}, 1, 8, -1, 1},
    {{0, 0, 0, 0, 0, 0, 1}, -1, 4, 0, 0},
    {{0, 0, 0, 0, 0, 0, 1}, 1, 4, -1, 1},
};

inline constexpr MonomialRow kRowsR9[] = {
    {{1, 0, 0, 0, 0, 0, 0}, -1, 2, -1, 0},
    {{2, 0, 0, 0, 0, 0, 0}, 1, 8, -2, 0},
    {{2, 0, 0, 0, 0, 0, 0}, -1, 8, -3, 1},
    {{1, 1, 0, 0, 0, 0, 0}, 1, 8, -1, 0},
    {{1, 1, 0, 0, 0, 0, 0}, -1, 8, -2, 1},
    {{1, 0, 1, 0, 0, 0, 0}, 1, 8, -1, 0},
    {{1, 0, 1, 0, 0, 0, 0}, 1, 8, -2, 1},
    {{0, 1, 1, 0, 0, 0, 0}, 1, 8, 0, 0},
    {{0, 1, 1, 0, 0, 0, 0}, 1, 8, -1, 1},
    {{1, 0, 0, 1, 0, 0, 0}, -1, 4, -1, 0},
    {{0, 1, 0, 1, 0, 0, 0}, -1, 8, 0, 0},
    {{0, 1, 0, 1, 0, 0, 0}, -1, 8, -1, 1},
    {{0, 0, 1, 1, 0, 0, 0}, -1, 8, 0, 0},
    {{0, 0, 1, 1, 0, 0, 0}, -1, 8, -1, 1},
    {{0, 0, 0, 2, 0, 0, 0}, 1, 8, 0, 0},
    {{0, 0, 0, 2, 0, 0, 0}, 1, 8, -1, 1},
    {{0, 0, 0, 0, 0, 0, 1}, -1, 4, 0, 0},
    {{0, 0, 0, 0, 0, 0, 1}, 1, 4, -1, 1},
    {{1, 1, 0, 0, 0, 0, 0}, 1, 4, -2, 1},
    {{1, 0, 1, 0, 0, 0, 0}, -1, 4, -2, 1},
};

inline constexpr MonomialRow kRowsR10[] = {
    {{1, 0, 0, 0, 0, 0, 0}, -1, 2, 0, 0},
    {{2, 0, 0, 0, 0, 0, 0}, 7, 24, -1, 0},
    {{2, 0, 0, 0, 0, 0, 0}, 1, 12, -2, 1},
    {{3, 0, 0, 0, 0, 0, 0}, -1, 8, -3, 0},
    {{3, 0, 0, 0, 0, 0, 0}, 5, 24, -2, 0},
    {{3, 0, 0, 0, 0, 0, 0}, -1, 12, -3, 1},
    {{1, 1, 0, 0, 0, 0, 0}, 1, 8, 0, 0},
    {{2, 1, 0, 0, 0, 0, 0}, 1, 8, -2, 0},
    {{2, 1, 0, 0, 0, 0, 0}, -1, 8, -1, 0},
    {{1, 0, 1, 0, 0, 0, 0}, 1, 8, 0, 0},
    {{2, 0, 1, 0, 0, 0, 0}, 1, 8, -2, 0},
    {{2, 0, 1, 0, 0, 0, 0}, -1, 8, -1, 0},
    {{0, 1, 1, 0, 0, 0, 0}, -5, 24, 1, 0},
    {{0, 1, 1, 0, 0, 0, 0}, -1, 12, 0, 1},
    {{1, 1, 1, 0, 0, 0, 0}, 5, 24, 0, 0},
    {{1, 1, 1, 0, 0, 0, 0}, -1, 8, -1, 0},
    {{1, 1, 1, 0, 0, 0, 0}, 1, 12, -1, 1},
    {{1, 0, 0, 1, 0, 0, 0}, -1, 4, 0, 0},
    {{2, 0, 0, 1, 0, 0, 0}, -1, 4, -2, 0},
    {{2, 0, 0, 1, 0, 0, 0}, 1, 4, -1, 0},
    {{0, 1, 0, 1, 0, 0, 0}, 5, 24, 1, 0},
    {{0, 1, 0, 1, 0, 0, 0}, 1, 12, 0, 1},
    {{1, 1, 0, 1, 0, 0, 0}, -5, 24, 0, 0},
    {{1, 1, 0, 1, 0, 0, 0}, 1, 8, -1, 0},
    {{1, 1, 0, 1, 0, 0, 0}, -1, 12, -1, 1},
    {{0, 0, 1, 1, 0, 0, 0}, 5, 24, 1, 0},
    {{0, 0, 1, 1, 0, 0, 0}, 1, 12, 0, 1},
    {{1, 0, 1, 1, 0, 0, 0}, -5, 24, 0, 0},
    {{1, 0, 1, 1, 0, 0, 0}, 1, 8, -1, 0},
    {{1, 0, 1, 1, 0, 0, 0}, -1, 12, -1, 1},
    {{0, 0, 0, 2, 0, 0, 0}, -5, 24, 1, 0},
    {{0, 0, 0, 2, 0, 0, 0}, -1, 12, 0, 1},
    {{1, 0, 0, 2, 0, 0, 0}, 5, 24, 0, 0},
    {{1, 0, 0, 2, 0, 0, 0}, -1, 8, -1, 0},
    {{1, 0, 0, 2, 0, 0, 0}, 1, 12, -1, 1},
    {{0, 0, 0, 0, 0, 0, 1}, -1, 4, 0, 0},
    {{0, 0, 0, 0, 0, 0, 1}, 5, 12, 1, 0},
    {{0, 0, 0, 0, 0, 0, 1}, -1, 6, 0, 1},
    {{1, 0, 0, 0, 0, 0, 1}, -5, 12, 0, 0},
    {{1, 0, 0, 0, 0, 0, 1}, 1, 4, -1, 0},
    {{1, 0, 0, 0, 0, 0, 1}, 1, 6, -1, 1},
};

inline constexpr MonomialTable kCurvatureTables[10] = {
    {kRowsR1, sizeof(kRowsR1) / sizeof(MonomialRow), RowScale::kPlain},
    {kRowsR2, sizeof(kRowsR2) / sizeof(MonomialRow), RowScale::kSqrt3},
    {kRowsR3, sizeof(kRowsR3) / sizeof(MonomialRow), RowScale::kAlphaMinusXi},
    {kRowsR4, sizeof(kRowsR4) / sizeof(MonomialRow), RowScale::kPlain},
    {kRowsR5, sizeof(kRowsR5) / sizeof(MonomialRow), RowScale::kSqrt3},
    {kRowsR6, sizeof(kRowsR6) / sizeof(MonomialRow), RowScale::kAlphaMinusXi},
    {kRowsR7, sizeof(kRowsR7) / sizeof(MonomialRow), RowScale::kPlain},
    {kRowsR8, sizeof(kRowsR8) / sizeof(MonomialRow), RowScale::kSqrt3},
    {kRowsR9, sizeof(kRowsR9) / sizeof(MonomialRow), RowScale::kSqrt3},
    {kRowsR10, sizeof(kRowsR10) / sizeof(MonomialRow), RowScale::kAlphaMinusXi}
};

}  // namespace g2cohom::detail
