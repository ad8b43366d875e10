#include "ckp/rational.hpp"

#include <cctype>

#include "ckp/error.hpp"

namespace ckp {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) Fail(ErrorKind::kValidation, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) Fail(ErrorKind::kValidation, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::Parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!AllDigits(num) || !AllDigits(den)) {
    Fail(ErrorKind::kParse, "malformed rational '" + original + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) Fail(ErrorKind::kParse, "zero denominator in '" + original + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::ToString() const { return value_.get_str(10); }

}  // namespace ckp
