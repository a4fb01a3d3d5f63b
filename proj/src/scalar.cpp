#include "nang/scalar.hpp"

#include <cctype>

namespace nang {

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar parse_scalar(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty scalar");
  if (t.front() == '+') t.erase(t.begin());
  std::size_t slash = t.find('/');
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(t, true)) throw std::invalid_argument("malformed scalar '" + text + "'");
  } else {
    if (!digits_ok(t.substr(0, slash), true) || !digits_ok(t.substr(slash + 1), false))
      throw std::invalid_argument("malformed scalar '" + text + "'");
    if (t.find_first_not_of('0', slash + 1) == std::string::npos)
      throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  Scalar x(t, 10);
  x.canonicalize();
  return x;
}

}  // namespace nang
