#include "qortho/errors.hpp"
#include "qortho/scalar.hpp"

#include <charconv>

namespace qortho {

void set_extended_digits(unsigned digits) {
  if (digits < 16)
    throw ArgumentError("extended precision needs at least 16 digits");
  Extended::default_precision(digits);
}

unsigned extended_digits() { return Extended::default_precision(); }

Precision Precision::parse(std::string_view text) {
  if (text == "double")
    return {PrecisionMode::Double, kDefaultExtendedDigits};
  constexpr std::string_view ext = "extended";
  if (text.substr(0, ext.size()) != ext)
    throw ArgumentError("unknown precision mode '" + std::string(text) + "'");
  auto rest = text.substr(ext.size());
  if (rest.empty())
    return {PrecisionMode::Extended, kDefaultExtendedDigits};
  if (rest.front() != ':' && rest.front() != '(')
    throw ArgumentError("malformed precision '" + std::string(text) + "'");
  rest.remove_prefix(1);
  if (!rest.empty() && rest.back() == ')')
    rest.remove_suffix(1);
  unsigned digits = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), digits);
  if (ec != std::errc{} || ptr != rest.data() + rest.size() || digits < 16 || digits > 10000)
    throw ArgumentError("extended digits must be an integer in [16, 10000]");
  return {PrecisionMode::Extended, digits};
}

std::string Precision::to_string() const {
  if (mode == PrecisionMode::Double)
    return "double";
  return "extended:" + std::to_string(digits);
}

} // namespace qortho
