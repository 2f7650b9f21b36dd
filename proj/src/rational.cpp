#include "toric/rational.hpp"

#include <cctype>

#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::InvalidPolytope: return "InvalidPolytope";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NonSimpleVertex: return "NonSimpleVertex";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::EmptyOrLowerDimensional: return "EmptyOrLowerDimensional";
    case ErrorKind::NonGenericDirection: return "NonGenericDirection";
    case ErrorKind::TruncationTooLow: return "TruncationTooLow";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NestedIntegral: return "NestedIntegral";
    case ErrorKind::MalformedExpression: return "MalformedExpression";
    case ErrorKind::InhomogeneousClass: return "InhomogeneousClass";
    case ErrorKind::MixedDegrees: return "MixedDegrees";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FileFormat: return "FileFormat";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den))
      throw Error(ErrorKind::FileFormat, "bad rational '" + std::string(text) + "'");
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (!all_digits(digits))
    throw Error(ErrorKind::FileFormat, "bad rational '" + std::string(text) + "'");

  Int n(std::string(num.front() == '+' ? num.substr(1) : num));
  Int d = den.empty() ? Int(1) : Int(std::string(den));
  if (d == 0)
    throw Error(ErrorKind::FileFormat, "zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rat(f);
}

Int floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

}  // namespace toric
