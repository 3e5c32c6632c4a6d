#include "slopes/rational.hpp"

#include <cctype>

namespace slopes {

std::optional<Rational> parse_reduced_fraction(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto parse_int = [](const std::string& t) -> std::optional<Integer> {
    if (t.empty()) return std::nullopt;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return std::nullopt;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
    return Integer(t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    auto p = parse_int(s);
    if (!p) return std::nullopt;
    return Rational(*p);
  }
  auto p = parse_int(s.substr(0, slash));
  auto q = parse_int(s.substr(slash + 1));
  if (!p || !q) return std::nullopt;
  if (*q <= 0) return std::nullopt;
  if (boost::multiprecision::gcd(boost::multiprecision::abs(*p), *q) != 1)
    return std::nullopt;
  return Rational(*p, *q);
}

}  // namespace slopes
