#include "scpn/gaussian_rational.hpp"

#include <ostream>

#include "scpn/error.hpp"

namespace scpn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTableMismatch: return "table-mismatch";
    case ErrorCode::kUnknownGenerator: return "unknown-generator";
    case ErrorCode::kOrderUnderflow: return "order-underflow";
    case ErrorCode::kBasePointMismatch: return "base-point-mismatch";
    case ErrorCode::kSingularBody: return "singular-body";
    case ErrorCode::kInvalidSubstitution: return "invalid-substitution";
    case ErrorCode::kParity: return "parity";
    case ErrorCode::kShapeMismatch: return "shape-mismatch";
    case ErrorCode::kDimensionTooLarge: return "dimension-too-large";
    case ErrorCode::kNonHolomorphic: return "non-holomorphic";
    case ErrorCode::kDegenerateSeed: return "degenerate-seed";
    case ErrorCode::kNotClosed: return "no-potential";
    case ErrorCode::kOffCircle: return "off-circle";
    case ErrorCode::kNonInvertibleAnsatz: return "non-invertible-ansatz";
    case ErrorCode::kNonProjector: return "non-projector";
    case ErrorCode::kUnsupportedReduction: return "unsupported-reduction";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kUnknownExample: return "unknown-example";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(10); }

mpq_class rational_from_string(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw Error(ErrorCode::kParse, "malformed rational '" + s + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw Error(ErrorCode::kParse, "zero denominator in '" + s + "'");
  }
  q.canonicalize();
  return q;
}

GaussianRational GaussianRational::from_strings(const std::string& re,
                                                const std::string& im) {
  return {rational_from_string(re), rational_from_string(im)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  mpq_class n = norm2();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return rational_to_string(re_);
  if (sgn(re_) == 0) return rational_to_string(im_) + "*i";
  std::string s = rational_to_string(re_);
  if (sgn(im_) > 0) {
    s += " + " + rational_to_string(im_) + "*i";
  } else {
    s += " - " + rational_to_string(mpq_class(-im_)) + "*i";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

}  // namespace scpn
