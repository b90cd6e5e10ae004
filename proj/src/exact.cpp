#include "parrig/exact.hpp"

#include <cctype>

namespace parrig {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view s) {
  // strip surrounding spaces
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;

  using Int = boost::multiprecision::cpp_int;

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    Int n{std::string(num)};
    Int d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rat(n, d);
  }

  auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    if (!is_integer_token(s)) return std::nullopt;
    return Rat(Int(std::string(s)));
  }

  // decimal: sign, integer part, fractional part
  std::string_view head = s.substr(0, dot);
  std::string_view frac = s.substr(dot + 1);
  bool neg = !head.empty() && head.front() == '-';
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) head.remove_prefix(1);
  if (head.empty() && frac.empty()) return std::nullopt;
  for (char c : head)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  for (char c : frac)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;

  Int ip = head.empty() ? Int(0) : Int(std::string(head));
  Int fp = frac.empty() ? Int(0) : Int(std::string(frac));
  Int scale = 1;
  for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
  Rat value = Rat(ip) + Rat(fp, scale);
  if (neg) value = -value;
  return value;
}

std::string rational_repr(const Rat& r) {
  std::string num = numerator(r).str();
  auto den = denominator(r);
  if (den == 1) return num;
  return num + "/" + den.str();
}

}  // namespace parrig
