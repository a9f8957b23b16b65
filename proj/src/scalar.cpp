#include "stratkit/scalar.hpp"

#include "stratkit/error.hpp"

namespace stratkit {

const char* errorKindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::NonComposablePath: return "NonComposablePath";
    case ErrorKind::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case ErrorKind::NotFiniteWithinBound: return "NotFiniteWithinBound";
    case ErrorKind::CompletionOverflow: return "CompletionOverflow";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::VectorOutOfSpace: return "VectorOutOfSpace";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotInitialSegment: return "NotInitialSegment";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::WitnessFailure: return "WitnessFailure";
    case ErrorKind::NotTruncatedModule: return "NotTruncatedModule";
    case ErrorKind::SimplesUncertified: return "SimplesUncertified";
    case ErrorKind::NoFiltrationFound: return "NoFiltrationFound";
    case ErrorKind::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::Invalid: return "InvalidArgument";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

std::string Field::str() const {
  return rational() ? "rational" : "prime " + std::to_string(p);
}

void Scalar::reduce() {
  if (field_.p == 0) return;
  ensure(value_.get_den() == 1, "F_p scalar with nontrivial denominator");
  mpz_class p(static_cast<unsigned long>(field_.p));
  mpz_class r = value_.get_num() % p;
  if (r < 0) r += p;
  value_ = r;
}

void Scalar::checkSameField(const Scalar& o) const {
  ensure(field_ == o.field_, "scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  checkSameField(o);
  return Scalar(field_, value_ + o.value_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  checkSameField(o);
  return Scalar(field_, value_ - o.value_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  checkSameField(o);
  return Scalar(field_, value_ * o.value_);
}

Scalar Scalar::operator-() const { return Scalar(field_, -value_); }

Scalar Scalar::inverse() const {
  if (isZero()) fail(ErrorKind::Invalid, "division by zero");
  if (field_.p == 0) return Scalar(field_, 1 / value_);
  mpz_class p(static_cast<unsigned long>(field_.p)), r;
  int ok = mpz_invert(r.get_mpz_t(), value_.get_num().get_mpz_t(), p.get_mpz_t());
  ensure(ok != 0, "non-invertible residue; modulus not prime?");
  return Scalar(field_, mpq_class(r));
}

Scalar Scalar::operator/(const Scalar& o) const {
  checkSameField(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  checkSameField(o);
  return value_ == o.value_;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) fail(ErrorKind::Syntax, "empty scalar literal");
  std::string digits = text;
  bool neg = false;
  if (digits[0] == '+' || digits[0] == '-') {
    neg = digits[0] == '-';
    digits = digits.substr(1);
  }
  auto slash = digits.find('/');
  std::string numTxt = slash == std::string::npos ? digits : digits.substr(0, slash);
  std::string denTxt = slash == std::string::npos ? "1" : digits.substr(slash + 1);
  auto allDigits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!allDigits(numTxt) || !allDigits(denTxt))
    fail(ErrorKind::Syntax, "bad scalar literal '" + text + "'");
  mpq_class num(numTxt), den(denTxt);
  if (den == 0) fail(ErrorKind::Syntax, "zero denominator in '" + text + "'");
  Scalar r = Scalar(f, num) / Scalar(f, den);
  return neg ? -r : r;
}

std::string Scalar::str() const { return value_.get_str(); }

}  // namespace stratkit
