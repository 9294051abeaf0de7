#pragma once

#include "postorder/rational.hpp"

#include <vector>

namespace postorder {

/// Default tolerance for floating-point Hermiticity and PSD checks.
inline constexpr double kFloatTolerance = 1e-9;

/// Elementary symmetric polynomials e_1..e_n of the eigenvalues of a
/// Hermitian matrix, i.e. det(lambda I - h) = lambda^n - e_1 lambda^{n-1}
/// + e_2 lambda^{n-2} - ... . Computed exactly by Faddeev-LeVerrier.
/// Throws ValidationError if h is not Hermitian.
std::vector<Rational> eigenvalue_symmetric_functions(const GaussianMatrix& h);

/// Exact positive-semidefiniteness test for a Hermitian Gaussian-rational
/// matrix. Because the spectrum is real, h is PSD iff every e_k >= 0.
bool psd_exact(const GaussianMatrix& h);

/// Largest deviation |h - h^*|, entrywise.
double hermitian_defect(const Eigen::MatrixXcd& h);

/// Ascending eigenvalues of a Hermitian matrix (Eigen's self-adjoint
/// solver; only the lower triangle is read after the tolerance check).
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h, double tol = kFloatTolerance);

/// Trace norm sum |lambda_i| of a Hermitian matrix. Accuracy is that of the
/// self-adjoint eigensolver, about 1e-14 relative for well-scaled inputs.
double trace_norm_float(const Eigen::MatrixXcd& h, double tol = kFloatTolerance);

}  // namespace postorder
