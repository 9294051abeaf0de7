#include "postorder/psd.hpp"

#include "postorder/error.hpp"

#include <cmath>

namespace postorder {

std::vector<Rational> eigenvalue_symmetric_functions(const GaussianMatrix& h) {
  if (!h.is_hermitian()) throw ValidationError("matrix is not Hermitian");
  const Eigen::Index n = h.rows();
  // Faddeev-LeVerrier: M_1 = I, c_k = -tr(h M_k)/k, M_{k+1} = h M_k + c_k I,
  // giving det(lambda I - h) = sum_k c_k lambda^{n-k}. Then e_k = (-1)^k c_k.
  std::vector<Rational> e;
  e.reserve(static_cast<std::size_t>(n));
  GaussianMatrix m = GaussianMatrix::identity(n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    GaussianMatrix hm = h * m;
    GaussianRational tr = hm.trace();
    if (!tr.is_real()) throw CertificateError("characteristic polynomial of a Hermitian matrix has complex coefficient");
    Rational c = -tr.re / Rational(k);
    e.push_back(k % 2 == 0 ? c : Rational(-c));
    if (k < n) m = hm + c * GaussianMatrix::identity(n);
  }
  return e;
}

bool psd_exact(const GaussianMatrix& h) {
  for (const Rational& ek : eigenvalue_symmetric_functions(h)) {
    if (ek < 0) return false;
  }
  return true;
}

double hermitian_defect(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) throw DimensionError("matrix is not square");
  if (h.size() == 0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h, double tol) {
  if (hermitian_defect(h) > tol) throw ValidationError("matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
  return solver.eigenvalues();
}

double trace_norm_float(const Eigen::MatrixXcd& h, double tol) {
  return hermitian_eigenvalues(h, tol).cwiseAbs().sum();
}

}  // namespace postorder
