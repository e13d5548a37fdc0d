#pragma once

// Declared constants. Each one was measured by exhaustive enumeration and is
// re-measured by the test suites, which fail if a measurement exceeds it.

namespace qtorder::bounds {

/// |b(uv) - b(u) - b(v)| for b = brooks_count(., ab), all |u|, |v| <= 5.
/// Junction effects involve at most two letters on each side of the
/// cancellation point, so this radius already sees every configuration.
inline constexpr long long kBrooksDefect = 1;

/// Defect of the homogenized count brooks_cyclic(., ab); at most twice the
/// raw defect.
inline constexpr long long kBrooksHomDefect = 2;

/// Defect of rademacher_raw over modular balls up to 6 syllables.
inline constexpr long long kRademacherRawDefect = 3;

/// Defect of the homogeneous Rademacher function, bounded by twice the raw
/// defect (ball-3 measurement: 4, ball-6 measurement: 6).
inline constexpr long long kRademacherDefect = 6;

/// Left-multiplication defect on the Rademacher planar system
/// (actors up to 6 syllables, points up to 8 syllables).
inline constexpr long long kRademacherActionDefect = 6;

/// |x(w) - 2 brooks_count(w, ab)| on the hair embedding.
inline constexpr long long kHairOffset = 1;

/// Left-multiplication defect on the hair embedding: 4 from the counting
/// part plus 2 from the last-letter correction. Measured value is 4.
inline constexpr long long kHairActionDefect = 6;

/// Left-multiplication defect on the counting embedding for pattern ab.
inline constexpr long long kCountingActionDefect = 4;

/// |floor(uv) - floor(u) - floor(v)| for the Dehornoy floor in B_3.
inline constexpr long long kBraidFloorDefect = 1;

}  // namespace qtorder::bounds
