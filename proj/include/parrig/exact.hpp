#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace parrig {

using Rat = boost::multiprecision::cpp_rational;

struct RatVec2 {
  Rat x;
  Rat y;

  RatVec2() = default;
  RatVec2(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}

  RatVec2 operator+(const RatVec2& o) const { return {x + o.x, y + o.y}; }
  RatVec2 operator-(const RatVec2& o) const { return {x - o.x, y - o.y}; }
  bool operator==(const RatVec2& o) const { return x == o.x && y == o.y; }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Parses "p/q", plain integers, and decimal strings ("-1.25") exactly.
std::optional<Rat> parse_rational(std::string_view s);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string rational_repr(const Rat& r);

}  // namespace parrig
