#!/usr/bin/env python3
"""Regenerate include/g2cohom/detail/curvature_tables.hpp from the data below.

The embedded tables are the master copy of the monomial expansions of the ten
mixed-plane curvature components R1..R10 of the reduced metric profile.  Each
row is ((e0..e6), num, den, apow, gpow): seven exponents over the variables

    xi, f1_sq, f2_sq, f12, D1 = f1 f1' xi', D2 = f2 f2' xi', D3 = f12' xi'

a coefficient num/den, and the powers of alpha and gam the coefficient
carries.  A table's scale tag records whether the stored polynomial is R_i
itself ("plain"), sqrt(3) * R_i ("sqrt3"), or (alpha - xi) * R_i
("alpha_minus_xi"); evaluation divides the scale back out.

Usage:
    python3 scripts/gen_curvature_tables.py [HEADER_PATH]

With no argument the header is written to its canonical location relative to
this script.  The output is deterministic, so re-running on a clean tree is a
no-op; the check_tables_roundtrip unit test keeps the runtime copy in sync.
"""

import sys
from pathlib import Path

# (name, scale, [((exponents), num, den, alpha_power, gam_power), ...])
TABLES = [
    ("R1", "plain", [
        ((1, 0, 0, 0, 0, 0, 0), -1, 2, -1, 0),
        ((2, 0, 0, 0, 0, 0, 0), 1, 8, -2, 0),
        ((1, 1, 0, 0, 0, 0, 0), 1, 4, -1, 0),
        ((0, 2, 0, 0, 0, 0, 0), 1, 8, 0, 0),
        ((1, 0, 0, 1, 0, 0, 0), -1, 4, -1, 0),
        ((0, 1, 0, 1, 0, 0, 0), -1, 4, 0, 0),
        ((0, 0, 0, 2, 0, 0, 0), 1, 8, 0, 0),
        ((0, 0, 0, 0, 1, 0, 0), 1, 2, 0, 0),
    ]),
    ("R2", "sqrt3", [
        ((1, 0, 0, 0, 0, 0, 0), 1, 2, -1, 0),
        ((2, 0, 0, 0, 0, 0, 0), -1, 8, -2, 0),
        ((2, 0, 0, 0, 0, 0, 0), 1, 8, -3, 1),
        ((1, 1, 0, 0, 0, 0, 0), -1, 4, -1, 0),
        ((0, 2, 0, 0, 0, 0, 0), -1, 8, 0, 0),
        ((0, 2, 0, 0, 0, 0, 0), -1, 8, -1, 1),
        ((1, 0, 0, 1, 0, 0, 0), 1, 4, -1, 0),
        ((0, 1, 0, 1, 0, 0, 0), 1, 4, 0, 0),
        ((0, 1, 0, 1, 0, 0, 0), 1, 4, -1, 1),
        ((0, 0, 0, 2, 0, 0, 0), -1, 8, 0, 0),
        ((0, 0, 0, 2, 0, 0, 0), -1, 8, -1, 1),
        ((0, 0, 0, 0, 1, 0, 0), -1, 2, 0, 0),
        ((0, 0, 0, 0, 1, 0, 0), 1, 2, -1, 1),
    ]),
    ("R3", "alpha_minus_xi", [
        ((1, 0, 0, 0, 0, 0, 0), 1, 2, 0, 0),
        ((2, 0, 0, 0, 0, 0, 0), -7, 24, -1, 0),
        ((2, 0, 0, 0, 0, 0, 0), -1, 12, -2, 1),
        ((3, 0, 0, 0, 0, 0, 0), 1, 8, -3, 0),
        ((3, 0, 0, 0, 0, 0, 0), -5, 24, -2, 0),
        ((3, 0, 0, 0, 0, 0, 0), 1, 12, -3, 1),
        ((1, 1, 0, 0, 0, 0, 0), -1, 4, 0, 0),
        ((2, 1, 0, 0, 0, 0, 0), -1, 4, -2, 0),
        ((2, 1, 0, 0, 0, 0, 0), 1, 4, -1, 0),
        ((0, 2, 0, 0, 0, 0, 0), 5, 24, 1, 0),
        ((0, 2, 0, 0, 0, 0, 0), 1, 12, 0, 1),
        ((1, 2, 0, 0, 0, 0, 0), -5, 24, 0, 0),
        ((1, 2, 0, 0, 0, 0, 0), 1, 8, -1, 0),
        ((1, 2, 0, 0, 0, 0, 0), -1, 12, -1, 1),
        ((1, 0, 0, 1, 0, 0, 0), 1, 4, 0, 0),
        ((2, 0, 0, 1, 0, 0, 0), 1, 4, -2, 0),
        ((2, 0, 0, 1, 0, 0, 0), -1, 4, -1, 0),
        ((0, 1, 0, 1, 0, 0, 0), -5, 12, 1, 0),
        ((0, 1, 0, 1, 0, 0, 0), -1, 6, 0, 1),
        ((1, 1, 0, 1, 0, 0, 0), 5, 12, 0, 0),
        ((1, 1, 0, 1, 0, 0, 0), -1, 4, -1, 0),
        ((1, 1, 0, 1, 0, 0, 0), 1, 6, -1, 1),
        ((0, 0, 0, 2, 0, 0, 0), 5, 24, 1, 0),
        ((0, 0, 0, 2, 0, 0, 0), 1, 12, 0, 1),
        ((1, 0, 0, 2, 0, 0, 0), -5, 24, 0, 0),
        ((1, 0, 0, 2, 0, 0, 0), 1, 8, -1, 0),
        ((1, 0, 0, 2, 0, 0, 0), -1, 12, -1, 1),
        ((0, 0, 0, 0, 1, 0, 0), -1, 2, 0, 0),
        ((0, 0, 0, 0, 1, 0, 0), 5, 6, 1, 0),
        ((0, 0, 0, 0, 1, 0, 0), -1, 3, 0, 1),
        ((1, 0, 0, 0, 1, 0, 0), -5, 6, 0, 0),
        ((1, 0, 0, 0, 1, 0, 0), 1, 2, -1, 0),
        ((1, 0, 0, 0, 1, 0, 0), 1, 3, -1, 1),
    ]),
    ("R4", "plain", [
        ((1, 0, 0, 0, 0, 0, 0), -1, 2, -1, 0),
        ((2, 0, 0, 0, 0, 0, 0), 1, 8, -2, 0),
        ((1, 0, 1, 0, 0, 0, 0), 1, 4, -1, 0),
        ((0, 0, 2, 0, 0, 0, 0), 1, 8, 0, 0),
        ((1, 0, 0, 1, 0, 0, 0), -1, 4, -1, 0),
        ((0, 0, 1, 1, 0, 0, 0), -1, 4, 0, 0),
        ((0, 0, 0, 2, 0, 0, 0), 1, 8, 0, 0),
        ((0, 0, 0, 0, 0, 1, 0), 1, 2, 0, 0),
    ]),
    ("R5", "sqrt3", [
        ((1, 0, 0, 0, 0, 0, 0), 1, 2, -1, 0),
        ((2, 0, 0, 0, 0, 0, 0), -1, 8, -2, 0),
        ((2, 0, 0, 0, 0, 0, 0), 1, 8, -3, 1),
        ((1, 0, 1, 0, 0, 0, 0), -1, 4, -1, 0),
        ((0, 0, 2, 0, 0, 0, 0), -1, 8, 0, 0),
        ((0, 0, 2, 0, 0, 0, 0), -1, 8, -1, 1),
        ((1, 0, 0, 1, 0, 0, 0), 1, 4, -1, 0),
        ((0, 0, 1, 1, 0, 0, 0), 1, 4, 0, 0),
        ((0, 0, 1, 1, 0, 0, 0), 1, 4, -1, 1),
        ((0, 0, 0, 2, 0, 0, 0), -1, 8, 0, 0),
        ((0, 0, 0, 2, 0, 0, 0), -1, 8, -1, 1),
        ((0, 0, 0, 0, 0, 1, 0), -1, 2, 0, 0),
        ((0, 0, 0, 0, 0, 1, 0), 1, 2, -1, 1),
    ]),
    ("R6", "alpha_minus_xi", [
        ((1, 0, 0, 0, 0, 0, 0), 1, 2, 0, 0),
        ((2, 0, 0, 0, 0, 0, 0), -7, 24, -1, 0),
        ((2, 0, 0, 0, 0, 0, 0), -1, 12, -2, 1),
        ((3, 0, 0, 0, 0, 0, 0), 1, 8, -3, 0),
        ((3, 0, 0, 0, 0, 0, 0), -5, 24, -2, 0),
        ((3, 0, 0, 0, 0, 0, 0), 1, 12, -3, 1),
        ((1, 0, 1, 0, 0, 0, 0), -1, 4, 0, 0),
        ((2, 0, 1, 0, 0, 0, 0), -1, 4, -2, 0),
        ((2, 0, 1, 0, 0, 0, 0), 1, 4, -1, 0),
        ((0, 0, 2, 0, 0, 0, 0), 5, 24, 1, 0),
        ((0, 0, 2, 0, 0, 0, 0), 1, 12, 0, 1),
        ((1, 0, 2, 0, 0, 0, 0), -5, 24, 0, 0),
        ((1, 0, 2, 0, 0, 0, 0), 1, 8, -1, 0),
        ((1, 0, 2, 0, 0, 0, 0), -1, 12, -1, 1),
        ((1, 0, 0, 1, 0, 0, 0), 1, 4, 0, 0),
        ((2, 0, 0, 1, 0, 0, 0), 1, 4, -2, 0),
        ((2, 0, 0, 1, 0, 0, 0), -1, 4, -1, 0),
        ((0, 0, 1, 1, 0, 0, 0), -5, 12, 1, 0),
        ((0, 0, 1, 1, 0, 0, 0), -1, 6, 0, 1),
        ((1, 0, 1, 1, 0, 0, 0), 5, 12, 0, 0),
        ((1, 0, 1, 1, 0, 0, 0), -1, 4, -1, 0),
        ((1, 0, 1, 1, 0, 0, 0), 1, 6, -1, 1),
        ((0, 0, 0, 2, 0, 0, 0), 5, 24, 1, 0),
        ((0, 0, 0, 2, 0, 0, 0), 1, 12, 0, 1),
        ((1, 0, 0, 2, 0, 0, 0), -5, 24, 0, 0),
        ((1, 0, 0, 2, 0, 0, 0), 1, 8, -1, 0),
        ((1, 0, 0, 2, 0, 0, 0), -1, 12, -1, 1),
        ((0, 0, 0, 0, 0, 1, 0), -1, 2, 0, 0),
        ((0, 0, 0, 0, 0, 1, 0), 5, 6, 1, 0),
        ((0, 0, 0, 0, 0, 1, 0), -1, 3, 0, 1),
        ((1, 0, 0, 0, 0, 1, 0), -5, 6, 0, 0),
        ((1, 0, 0, 0, 0, 1, 0), 1, 2, -1, 0),
        ((1, 0, 0, 0, 0, 1, 0), 1, 3, -1, 1),
    ]),
    ("R7", "plain", [
        ((1, 0, 0, 0, 0, 0, 0), 1, 2, -1, 0),
        ((2, 0, 0, 0, 0, 0, 0), -1, 8, -2, 0),
        ((1, 1, 0, 0, 0, 0, 0), -1, 8, -1, 0),
        ((1, 0, 1, 0, 0, 0, 0), -1, 8, -1, 0),
        ((0, 1, 1, 0, 0, 0, 0), -1, 8, 0, 0),
        ((1, 0, 0, 1, 0, 0, 0), 1, 4, -1, 0),
        ((0, 1, 0, 1, 0, 0, 0), 1, 8, 0, 0),
        ((0, 0, 1, 1, 0, 0, 0), 1, 8, 0, 0),
        ((0, 0, 0, 2, 0, 0, 0), -1, 8, 0, 0),
        ((0, 0, 0, 0, 0, 0, 1), 1, 4, 0, 0),
    ]),
    ("R8", "sqrt3", [
        ((1, 0, 0, 0, 0, 0, 0), -1, 2, -1, 0),
        ((2, 0, 0, 0, 0, 0, 0), 1, 8, -2, 0),
        ((2, 0, 0, 0, 0, 0, 0), -1, 8, -3, 1),
        ((1, 1, 0, 0, 0, 0, 0), 1, 8, -1, 0),
        ((1, 1, 0, 0, 0, 0, 0), -1, 8, -2, 1),
        ((1, 0, 1, 0, 0, 0, 0), 1, 8, -1, 0),
        ((1, 0, 1, 0, 0, 0, 0), 1, 8, -2, 1),
        ((0, 1, 1, 0, 0, 0, 0), 1, 8, 0, 0),
        ((0, 1, 1, 0, 0, 0, 0), 1, 8, -1, 1),
        ((1, 0, 0, 1, 0, 0, 0), -1, 4, -1, 0),
        ((0, 1, 0, 1, 0, 0, 0), -1, 8, 0, 0),
        ((0, 1, 0, 1, 0, 0, 0), -1, 8, -1, 1),
        ((0, 0, 1, 1, 0, 0, 0), -1, 8, 0, 0),
        ((0, 0, 1, 1, 0, 0, 0), -1, 8, -1, 1),
        ((0, 0, 0, 2, 0, 0, 0), 1, 8, 0, 0),
        ((0, 0, 0, 2, 0, 0, 0), 1, 8, -1, 1),
        ((0, 0, 0, 0, 0, 0, 1), -1, 4, 0, 0),
        ((0, 0, 0, 0, 0, 0, 1), 1, 4, -1, 1),
    ]),
    ("R9", "sqrt3", [
        ((1, 0, 0, 0, 0, 0, 0), -1, 2, -1, 0),
        ((2, 0, 0, 0, 0, 0, 0), 1, 8, -2, 0),
        ((2, 0, 0, 0, 0, 0, 0), -1, 8, -3, 1),
        ((1, 1, 0, 0, 0, 0, 0), 1, 8, -1, 0),
        ((1, 1, 0, 0, 0, 0, 0), -1, 8, -2, 1),
        ((1, 0, 1, 0, 0, 0, 0), 1, 8, -1, 0),
        ((1, 0, 1, 0, 0, 0, 0), 1, 8, -2, 1),
        ((0, 1, 1, 0, 0, 0, 0), 1, 8, 0, 0),
        ((0, 1, 1, 0, 0, 0, 0), 1, 8, -1, 1),
        ((1, 0, 0, 1, 0, 0, 0), -1, 4, -1, 0),
        ((0, 1, 0, 1, 0, 0, 0), -1, 8, 0, 0),
        ((0, 1, 0, 1, 0, 0, 0), -1, 8, -1, 1),
        ((0, 0, 1, 1, 0, 0, 0), -1, 8, 0, 0),
        ((0, 0, 1, 1, 0, 0, 0), -1, 8, -1, 1),
        ((0, 0, 0, 2, 0, 0, 0), 1, 8, 0, 0),
        ((0, 0, 0, 2, 0, 0, 0), 1, 8, -1, 1),
        ((0, 0, 0, 0, 0, 0, 1), -1, 4, 0, 0),
        ((0, 0, 0, 0, 0, 0, 1), 1, 4, -1, 1),
        ((1, 1, 0, 0, 0, 0, 0), 1, 4, -2, 1),
        ((1, 0, 1, 0, 0, 0, 0), -1, 4, -2, 1),
    ]),
    ("R10", "alpha_minus_xi", [
        ((1, 0, 0, 0, 0, 0, 0), -1, 2, 0, 0),
        ((2, 0, 0, 0, 0, 0, 0), 7, 24, -1, 0),
        ((2, 0, 0, 0, 0, 0, 0), 1, 12, -2, 1),
        ((3, 0, 0, 0, 0, 0, 0), -1, 8, -3, 0),
        ((3, 0, 0, 0, 0, 0, 0), 5, 24, -2, 0),
        ((3, 0, 0, 0, 0, 0, 0), -1, 12, -3, 1),
        ((1, 1, 0, 0, 0, 0, 0), 1, 8, 0, 0),
        ((2, 1, 0, 0, 0, 0, 0), 1, 8, -2, 0),
        ((2, 1, 0, 0, 0, 0, 0), -1, 8, -1, 0),
        ((1, 0, 1, 0, 0, 0, 0), 1, 8, 0, 0),
        ((2, 0, 1, 0, 0, 0, 0), 1, 8, -2, 0),
        ((2, 0, 1, 0, 0, 0, 0), -1, 8, -1, 0),
        ((0, 1, 1, 0, 0, 0, 0), -5, 24, 1, 0),
        ((0, 1, 1, 0, 0, 0, 0), -1, 12, 0, 1),
        ((1, 1, 1, 0, 0, 0, 0), 5, 24, 0, 0),
        ((1, 1, 1, 0, 0, 0, 0), -1, 8, -1, 0),
        ((1, 1, 1, 0, 0, 0, 0), 1, 12, -1, 1),
        ((1, 0, 0, 1, 0, 0, 0), -1, 4, 0, 0),
        ((2, 0, 0, 1, 0, 0, 0), -1, 4, -2, 0),
        ((2, 0, 0, 1, 0, 0, 0), 1, 4, -1, 0),
        ((0, 1, 0, 1, 0, 0, 0), 5, 24, 1, 0),
        ((0, 1, 0, 1, 0, 0, 0), 1, 12, 0, 1),
        ((1, 1, 0, 1, 0, 0, 0), -5, 24, 0, 0),
        ((1, 1, 0, 1, 0, 0, 0), 1, 8, -1, 0),
        ((1, 1, 0, 1, 0, 0, 0), -1, 12, -1, 1),
        ((0, 0, 1, 1, 0, 0, 0), 5, 24, 1, 0),
        ((0, 0, 1, 1, 0, 0, 0), 1, 12, 0, 1),
        ((1, 0, 1, 1, 0, 0, 0), -5, 24, 0, 0),
        ((1, 0, 1, 1, 0, 0, 0), 1, 8, -1, 0),
        ((1, 0, 1, 1, 0, 0, 0), -1, 12, -1, 1),
        ((0, 0, 0, 2, 0, 0, 0), -5, 24, 1, 0),
        ((0, 0, 0, 2, 0, 0, 0), -1, 12, 0, 1),
        ((1, 0, 0, 2, 0, 0, 0), 5, 24, 0, 0),
        ((1, 0, 0, 2, 0, 0, 0), -1, 8, -1, 0),
        ((1, 0, 0, 2, 0, 0, 0), 1, 12, -1, 1),
        ((0, 0, 0, 0, 0, 0, 1), -1, 4, 0, 0),
        ((0, 0, 0, 0, 0, 0, 1), 5, 12, 1, 0),
        ((0, 0, 0, 0, 0, 0, 1), -1, 6, 0, 1),
        ((1, 0, 0, 0, 0, 0, 1), -5, 12, 0, 0),
        ((1, 0, 0, 0, 0, 0, 1), 1, 4, -1, 0),
        ((1, 0, 0, 0, 0, 0, 1), 1, 6, -1, 1),
    ]),
]

SCALE_ENUM = {
    "plain": "RowScale::kPlain",
    "sqrt3": "RowScale::kSqrt3",
    "alpha_minus_xi": "RowScale::kAlphaMinusXi",
}

PREAMBLE = """\
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
"""


def sanity_check():
    for name, scale, rows in TABLES:
        assert scale in SCALE_ENUM, f"{name}: unknown scale {scale}"
        for exps, num, den, apow, gpow in rows:
            assert len(exps) == 7, f"{name}: bad exponent vector {exps}"
            assert den > 0, f"{name}: denominator must be positive"
            assert gpow in (0, 1), f"{name}: gam power must be 0 or 1"
            assert all(e >= 0 for e in exps), f"{name}: negative exponent"


def render() -> str:
    out = [PREAMBLE.rstrip("\n")]
    for name, _, rows in TABLES:
        out.append(f"\ninline constexpr MonomialRow kRows{name}[] = {{")
        for exps, num, den, apow, gpow in rows:
            e = ", ".join(str(x) for x in exps)
            out.append("    {{%s}, %d, %d, %d, %d}," % (e, num, den, apow, gpow))
        out.append("};")
    out.append("\ninline constexpr MonomialTable kCurvatureTables[10] = {")
    entries = []
    for name, scale, _ in TABLES:
        entries.append(
            f"    {{kRows{name}, sizeof(kRows{name}) / sizeof(MonomialRow), {SCALE_ENUM[scale]}}}"
        )
    out.append(",\n".join(entries))
    out.append("};")
    out.append("\n}  // namespace g2cohom::detail")
    return "\n".join(out) + "\n"


def main() -> int:
    sanity_check()
    if len(sys.argv) > 2:
        print(__doc__, file=sys.stderr)
        return 2
    if len(sys.argv) == 2:
        target = Path(sys.argv[1])
    else:
        target = (
            Path(__file__).resolve().parent.parent
            / "include/g2cohom/detail/curvature_tables.hpp"
        )
    text = render()
    if target.exists() and target.read_text() == text:
        print(f"{target}: up to date ({sum(len(r) for _, _, r in TABLES)} rows)")
        return 0
    target.write_text(text)
    print(f"{target}: wrote {sum(len(r) for _, _, r in TABLES)} rows")
    return 0


if __name__ == "__main__":
    sys.exit(main())
