#pragma once

#include <string>

namespace qtorder {

/// Resource caps. Exceeding one raises a named error rather than running away.
///
/// Defaults can be overridden through the QTORDER_CAPS environment variable,
/// a comma-separated list of key=value pairs using the field names below,
/// e.g. QTORDER_CAPS="word_length=20000,free_ball_radius=10".
struct Caps {
  long long word_length = 10000;        // letters in any power g^n
  long long reduction_steps = 1000000;  // handle-reduction rewrite steps
  long long t_height_exponent = 1000000;
  int free_ball_radius = 8;   // rank-2 free group balls; larger ranks scale down
  int modular_radius = 40;    // PSL2(Z) balls, in normal-form syllables
  int embedding_radius = 12;  // planar embedding builders
  int magnus_degree = 22;     // truncation degree for Magnus comparisons
  int orbit_horizon = 16;     // word length in orbit_bounded_test
  long long window_k = 64;    // fallback growth window [-nK, nK]
  long long lex_scan = 100000;  // rationals scanned by homeo_lex_compare
};

/// Process-wide caps, read from QTORDER_CAPS on first use.
const Caps& caps();
void set_caps(const Caps& c);
/// Parses the QTORDER_CAPS syntax on top of `base`. Throws Error(ParseError).
Caps parse_caps(const std::string& text, Caps base = {});

}  // namespace qtorder
