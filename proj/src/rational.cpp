#include "postorder/rational.hpp"

#include "postorder/error.hpp"

#include <cctype>

namespace postorder {

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

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ValidationError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

GaussianMatrix::GaussianMatrix(Eigen::Index rows, Eigen::Index cols)
    : re_(RationalMatrix::Zero(rows, cols)), im_(RationalMatrix::Zero(rows, cols)) {}

GaussianMatrix::GaussianMatrix(RationalMatrix re, RationalMatrix im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.rows() != im_.rows() || re_.cols() != im_.cols()) {
    throw DimensionError("real and imaginary parts differ in shape");
  }
}

GaussianMatrix::GaussianMatrix(RationalMatrix re)
    : re_(std::move(re)), im_(RationalMatrix::Zero(re_.rows(), re_.cols())) {}

GaussianMatrix GaussianMatrix::identity(Eigen::Index n) {
  return GaussianMatrix(RationalMatrix::Identity(n, n));
}

GaussianMatrix GaussianMatrix::zero(Eigen::Index rows, Eigen::Index cols) { return GaussianMatrix(rows, cols); }

void GaussianMatrix::set(Eigen::Index r, Eigen::Index c, const GaussianRational& v) {
  re_(r, c) = v.re;
  im_(r, c) = v.im;
}

GaussianMatrix GaussianMatrix::adjoint() const {
  return GaussianMatrix(re_.transpose(), -im_.transpose());
}

GaussianRational GaussianMatrix::trace() const { return {re_.trace(), im_.trace()}; }

bool GaussianMatrix::is_hermitian() const {
  return is_square() && re_ == re_.transpose() && im_ == RationalMatrix(-im_.transpose());
}

Rational trace_product(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionError("trace_product: shape mismatch");
  // Re tr(ab) = sum_{ij} Re(a_ij b_ji)
  Rational acc(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      acc += a.re_(i, j) * b.re_(j, i) - a.im_(i, j) * b.im_(j, i);
    }
  }
  return acc;
}

GaussianMatrix operator+(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shape mismatch");
  return GaussianMatrix(a.re_ + b.re_, a.im_ + b.im_);
}

GaussianMatrix operator-(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference: shape mismatch");
  return GaussianMatrix(a.re_ - b.re_, a.im_ - b.im_);
}

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: shape mismatch");
  return GaussianMatrix(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

GaussianMatrix operator*(const Rational& s, const GaussianMatrix& a) {
  return GaussianMatrix(RationalMatrix(a.re_ * s), RationalMatrix(a.im_ * s));
}

bool operator==(const GaussianMatrix& a, const GaussianMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.re_ == b.re_ && a.im_ == b.im_;
}

Eigen::MatrixXcd GaussianMatrix::to_complex() const {
  Eigen::MatrixXcd out(rows(), cols());
  for (Eigen::Index i = 0; i < rows(); ++i) {
    for (Eigen::Index j = 0; j < cols(); ++j) {
      out(i, j) = {to_double(re_(i, j)), to_double(im_(i, j))};
    }
  }
  return out;
}

}  // namespace postorder
