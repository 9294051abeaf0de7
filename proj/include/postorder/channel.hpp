#pragma once

#include "postorder/markov.hpp"
#include "postorder/psd.hpp"
#include "postorder/quantum.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

namespace postorder {

/// Linear map B(C^dim_in) -> B(C^dim_out) in the Heisenberg picture, stored
/// as a (dim_out^2) x (dim_in^2) matrix acting on column-stacked operators:
/// vec(X)[i + j*d] = X(i, j). Construction checks Hermiticity preservation
/// on matrix units, Phi(E_ba) = Phi(E_ab)^*, within 1e-9.
class Superoperator {
public:
  Superoperator(int dim_in, int dim_out, Eigen::MatrixXcd matrix);

  /// Tabulates fn on the matrix units of B(C^dim_in).
  static Superoperator from_function(int dim_in, int dim_out,
                                     const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& fn);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  Eigen::MatrixXcd operator()(const Eigen::MatrixXcd& x) const;

  /// Schroedinger-picture map T(C^dim_out) -> T(C^dim_in) with
  /// tr(rho Phi(a)) = tr(Phi_*(rho) a). For Hermiticity-preserving maps this
  /// is represented by the adjoint matrix.
  Superoperator predual() const;

private:
  int dim_in_;
  int dim_out_;
  Eigen::MatrixXcd matrix_;
};

/// Block matrix (Phi(|j><j'|))_{j,j'}, size dim_in*dim_out.
struct ChoiMatrix {
  Eigen::MatrixXcd matrix;
};

Superoperator identity_channel(int d);
Superoperator transpose_map(int d);
/// a -> lambda a + (1 - lambda) tr(a)/d 1.
Superoperator depolarizing_channel(int d, double lambda);
/// a -> diag(a).
Superoperator dephasing_channel(int d);
/// a -> a_00 1, from B(C^dim_in) to B(C^dim_out).
Superoperator constant_channel(int dim_in, int dim_out);
/// a -> sum_i V_i^* a V_i with V_i of shape dim_in x dim_out.
Superoperator kraus_channel(const std::vector<Eigen::MatrixXcd>& kraus);

Superoperator compose(const Superoperator& outer, const Superoperator& inner);

/// Phi (x) id_n : B(C^dim_in (x) C^n) -> B(C^dim_out (x) C^n), with the
/// system factor first in the Kronecker ordering.
Superoperator tensor_with_identity(const Superoperator& s, int n);

ChoiMatrix choi(const Superoperator& s);
bool is_cp(const Superoperator& s, double tol = kFloatTolerance);
bool is_unital(const Superoperator& s, double tol = kFloatTolerance);

/// Largest entrywise deviation between two superoperator matrices.
double max_distance(const Superoperator& a, const Superoperator& b);

/// Measure-and-encode channel a -> sum_j <xi_j|a xi_j> m(j) from
/// B(C^outcomes) to B(C^dim).
Superoperator qc_channel(const QuantumEvm& m);

/// Classical relabelling a -> sum_k (sum_j p(j|k) a_jj) |k><k|, from
/// B(C^rows) to B(C^cols). For m <= n with witness p, qc(m) = qc(n) o this.
Superoperator markov_channel(const MarkovMatrix& p);

/// eta_{k,m} = d^{-1/2} sum_j exp(2 pi i j m / d) xi_j (x) e_{j+k mod d},
/// returned in the order k*d + m.
std::vector<Eigen::VectorXcd> entangled_basis(int d);

/// The map Phi(|j><j'|) = (1/d) sum_{k,m} exp(2 pi i (j'-j) m / d)
/// M^{(k,m)}_{j+k, j'+k}, where M^{(k,m)}_{r,r'} are the C^d-indexed blocks
/// of mt[k*d + m] on C^dJ (x) C^d. mt must be a POVM within `tol`.
Superoperator phi_from_blocks(const std::vector<Eigen::MatrixXcd>& mt, int d, double tol = kFloatTolerance);

/// |lambda o phi - gamma|_max <= tol and phi is CP and unital.
bool verify_factorization(const Superoperator& gamma, const Superoperator& lambda, const Superoperator& phi,
                          double tol = kFloatTolerance);

/// Optimal binary discrimination (tr rho0 + tr rho1 + |rho0 - rho1|_1) / 2,
/// optionally after sending the ensemble through the predual of gamma.
double helstrom_binary(const Eigen::MatrixXcd& rho0, const Eigen::MatrixXcd& rho1,
                       const std::optional<Superoperator>& gamma = std::nullopt);
double helstrom_binary(const QuantumEnsemble& e, const std::optional<Superoperator>& gamma = std::nullopt);

}  // namespace postorder
