#include "planelayers/point_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "planelayers/error.hpp"

namespace planelayers {

namespace {

constexpr int kMaxScale = 18;

Int128 pow10(int e) {
  Int128 r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw PreconditionError("malformed number '" + std::string(text) + "'");
}

}  // namespace

Decimal parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  Int128 mantissa = 0;
  int digits = 0;
  int fraction = 0;
  bool seen_point = false;
  const Int128 limit = pow10(36);
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_point) bad_number(text);
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) break;
    mantissa = mantissa * 10 + (c - '0');
    if (mantissa > limit) bad_number(text);
    ++digits;
    if (seen_point) ++fraction;
  }
  if (digits == 0) bad_number(text);
  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    int exp_digits = 0;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 1000) bad_number(text);
      ++exp_digits;
    }
    if (exp_digits == 0) bad_number(text);
    if (exp_negative) exponent = -exponent;
  }
  if (i != text.size()) bad_number(text);

  int scale = fraction - exponent;
  while (scale > 0 && mantissa % 10 == 0 && mantissa != 0) {
    mantissa /= 10;
    --scale;
  }
  if (mantissa == 0) scale = 0;
  if (scale < 0) {
    if (-scale > 36) bad_number(text);
    mantissa *= pow10(-scale);
    if (mantissa > limit) bad_number(text);
    scale = 0;
  }
  if (scale > kMaxScale) {
    throw PreconditionError("too many decimal digits in '" + std::string(text) + "'");
  }
  return Decimal{negative ? -mantissa : mantissa, scale};
}

Int128 rescale(const Decimal& d, int scale) {
  if (scale < d.scale) throw PreconditionError("rescale would drop digits");
  const Int128 factor = pow10(scale - d.scale);
  const Int128 limit = pow10(37);
  const Int128 m = d.mantissa < 0 ? -d.mantissa : d.mantissa;
  if (m != 0 && m > limit / factor) throw PreconditionError("decimal value too large");
  return d.mantissa * factor;
}

std::string format_fixed(Int128 mantissa, int scale) {
  const bool negative = mantissa < 0;
  unsigned __int128 m = negative ? static_cast<unsigned __int128>(-(mantissa + 1)) + 1
                                 : static_cast<unsigned __int128>(mantissa);
  std::string digits;
  do {
    digits.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  } while (m != 0);
  while (static_cast<int>(digits.size()) <= scale) digits.push_back('0');
  std::string out;
  if (negative) out.push_back('-');
  for (std::size_t i = digits.size(); i-- > 0;) {
    out.push_back(digits[i]);
    if (scale > 0 && i == static_cast<std::size_t>(scale)) out.push_back('.');
  }
  return out;
}

PointSet parse_point_file(std::istream& in) {
  struct Row {
    long long id;
    Decimal x;
    Decimal y;
  };
  std::vector<Row> rows;
  std::string line;
  int line_no = 0;
  int scale = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 3) {
      throw PreconditionError("line " + std::to_string(line_no) + ": expected 'id x y'");
    }
    Row r{};
    try {
      std::size_t used = 0;
      r.id = std::stoll(tok[0], &used);
      if (used != tok[0].size() || r.id < 0) throw PreconditionError("bad id");
      r.x = parse_decimal(tok[1]);
      r.y = parse_decimal(tok[2]);
    } catch (const std::exception& e) {
      throw PreconditionError("line " + std::to_string(line_no) + ": " + e.what());
    }
    scale = std::max({scale, r.x.scale, r.y.scale});
    rows.push_back(r);
  }
  std::vector<Point> pts(rows.size());
  std::vector<char> seen(rows.size(), 0);
  for (const Row& r : rows) {
    if (r.id >= static_cast<long long>(rows.size()) || seen[static_cast<std::size_t>(r.id)]) {
      throw PreconditionError("point ids must be exactly 0..n-1 (offending id " +
                              std::to_string(r.id) + ")");
    }
    seen[static_cast<std::size_t>(r.id)] = 1;
    const Int128 x = rescale(r.x, scale);
    const Int128 y = rescale(r.y, scale);
    if (x > kMaxCoordinate || x < -kMaxCoordinate || y > kMaxCoordinate || y < -kMaxCoordinate) {
      throw PreconditionError("coordinates of point " + std::to_string(r.id) +
                              " exceed the exact range at scale " + std::to_string(scale));
    }
    pts[static_cast<std::size_t>(r.id)] =
        Point{static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)};
  }
  return PointSet(std::move(pts), scale);
}

PointSet parse_point_text(const std::string& text) {
  std::istringstream in(text);
  return parse_point_file(in);
}

PointSet read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open point file '" + path + "'");
  return parse_point_file(in);
}

std::string format_point_file(const PointSet& ps, const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  for (PointId i = 0; i < ps.size(); ++i) {
    out += std::to_string(i);
    out += ' ';
    out += format_fixed(ps[i].x, ps.scale());
    out += ' ';
    out += format_fixed(ps[i].y, ps.scale());
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << content;
  if (!out) throw PreconditionError("write failed for '" + path + "'");
}

}  // namespace planelayers
