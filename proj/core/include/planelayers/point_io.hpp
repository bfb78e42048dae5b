#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "planelayers/geometry.hpp"

namespace planelayers {

// Exact decimal value mantissa * 10^-scale with scale >= 0.
struct Decimal {
  Int128 mantissa = 0;
  int scale = 0;
};

// Accepts an optional sign, digits with an optional fraction, and an optional
// exponent (1.5, -0.25, 3e-4). Throws PreconditionError on malformed text.
Decimal parse_decimal(std::string_view text);

// mantissa rescaled to `scale`; throws if that would lose digits or overflow.
Int128 rescale(const Decimal& d, int scale);

std::string format_fixed(Int128 mantissa, int scale);

// `id x y` per line, `#` starts a comment, ids must be exactly 0..n-1.
PointSet parse_point_file(std::istream& in);
PointSet parse_point_text(const std::string& text);
PointSet read_point_file(const std::string& path);

std::string format_point_file(const PointSet& ps, const std::string& comment = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace planelayers
