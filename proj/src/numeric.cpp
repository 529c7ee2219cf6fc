#include "mckay/numeric.hpp"

#include <cctype>
#include <string>

#include "mckay/errors.hpp"

namespace mckay {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_integer = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw InvalidArgument("malformed rational '" + s + "' (expected p/q or an integer)");
  Integer denominator(den, 10);
  if (denominator == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  Rational value(Integer(num, 10), denominator);
  value.canonicalize();
  return value;
}

}  // namespace mckay
