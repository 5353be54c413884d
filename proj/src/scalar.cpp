#include "curalg/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace curalg {

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view t, bool allow_sign) {
  if (t.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar r(zn, zd);
  r.canonicalize();
  return r;
}

}  // namespace curalg
