#include "rankeq/rat.hpp"

#include <cctype>

namespace rankeq {

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto exp_pos = text.find_first_of("eE");
  if (exp_pos != std::string::npos && text.find('/') == std::string::npos) {
    const std::string mantissa = text.substr(0, exp_pos);
    const std::string exp_str = text.substr(exp_pos + 1);
    if (!valid_int_token(exp_str))
      throw std::invalid_argument("parse_rat: bad exponent '" + text + "'");
    Rat base = parse_rat(mantissa);
    long long e = std::stoll(exp_str);
    Rat ten(10);
    for (long long k = 0; k < (e < 0 ? -e : e); ++k)
      base = e < 0 ? base / ten : base * ten;
    return base;
  }
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string p = text.substr(0, slash);
    const std::string q = text.substr(slash + 1);
    if (!valid_int_token(p) || !valid_int_token(q))
      throw std::invalid_argument("parse_rat: bad rational '" + text + "'");
    return Rat(Int(p), Int(q));
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    const std::string sign = (!whole.empty() && whole[0] == '-') ? "-" : "";
    const std::string digits = (whole == "-" || whole == "+" || whole.empty())
                                   ? "0"
                                   : whole;
    if (!valid_int_token(digits) || frac.empty() || !valid_int_token(frac) ||
        frac[0] == '-' || frac[0] == '+')
      throw std::invalid_argument("parse_rat: bad decimal '" + text + "'");
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const Int whole_part(digits);
    const Int frac_part(frac);
    const bool negative = whole_part < 0 || sign == "-";
    Int num = whole_part * den;
    if (negative)
      num -= frac_part;
    else
      num += frac_part;
    // "-0.5" has whole part "0" and loses its sign above.
    if (sign == "-" && whole_part == 0) num = -frac_part;
    return Rat(num, den);
  }
  if (!valid_int_token(text))
    throw std::invalid_argument("parse_rat: bad integer '" + text + "'");
  return Rat(Int(text));
}

}  // namespace rankeq
