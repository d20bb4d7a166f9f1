#include "joinalg/rational.hpp"

#include <cctype>

namespace joinalg {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view numerator = text;
  std::string_view denominator = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    numerator = text.substr(0, slash);
    denominator = text.substr(slash + 1);
  }
  if (!is_integer_literal(numerator) || !is_integer_literal(denominator) ||
      denominator[0] == '-' || denominator[0] == '+') {
    throw MalformedInput("not a rational literal: \"" + std::string(text) + "\"");
  }
  if (numerator[0] == '+') numerator.remove_prefix(1);
  mpz_class num(std::string(numerator), 10);
  mpz_class den(std::string(denominator), 10);
  if (den == 0) {
    throw MalformedInput("zero denominator: \"" + std::string(text) + "\"");
  }
  Scalar value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) {
  Scalar v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_str();
}

std::optional<Scalar> rational_sqrt(const Scalar& value) {
  if (sgn(value) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(value.get_num_mpz_t()) ||
      !mpz_perfect_square_p(value.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class num = sqrt(value.get_num());
  mpz_class den = sqrt(value.get_den());
  Scalar root(num, den);
  root.canonicalize();
  return root;
}

}  // namespace joinalg
