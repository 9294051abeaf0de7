#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace postorder {

/// Arbitrary-precision rational. GMP keeps every value in lowest terms with
/// a positive denominator, so structural equality is value equality.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Parses "p/q", "-p/q" or an integer "p". Throws ValidationError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational conj() const { return {re, -im}; }
  bool is_real() const { return im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Dense complex matrix with Gaussian-rational entries, stored as a pair of
/// real rational matrices of identical shape.
class GaussianMatrix {
public:
  GaussianMatrix() = default;
  GaussianMatrix(Eigen::Index rows, Eigen::Index cols);
  GaussianMatrix(RationalMatrix re, RationalMatrix im);
  explicit GaussianMatrix(RationalMatrix re);

  static GaussianMatrix identity(Eigen::Index n);
  static GaussianMatrix zero(Eigen::Index rows, Eigen::Index cols);

  Eigen::Index rows() const { return re_.rows(); }
  Eigen::Index cols() const { return re_.cols(); }
  bool is_square() const { return rows() == cols(); }

  const RationalMatrix& real() const { return re_; }
  const RationalMatrix& imag() const { return im_; }

  GaussianRational operator()(Eigen::Index r, Eigen::Index c) const { return {re_(r, c), im_(r, c)}; }
  void set(Eigen::Index r, Eigen::Index c, const GaussianRational& v);

  GaussianMatrix adjoint() const;
  GaussianRational trace() const;
  bool is_hermitian() const;

  /// Real part of tr(a·b); equals tr(a·b) when both are Hermitian.
  friend Rational trace_product(const GaussianMatrix& a, const GaussianMatrix& b);

  friend GaussianMatrix operator+(const GaussianMatrix& a, const GaussianMatrix& b);
  friend GaussianMatrix operator-(const GaussianMatrix& a, const GaussianMatrix& b);
  friend GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);
  friend GaussianMatrix operator*(const Rational& s, const GaussianMatrix& a);
  friend bool operator==(const GaussianMatrix& a, const GaussianMatrix& b);

  Eigen::MatrixXcd to_complex() const;

private:
  RationalMatrix re_;
  RationalMatrix im_;
};

}  // namespace postorder
