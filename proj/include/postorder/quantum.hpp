#pragma once

#include "postorder/markov.hpp"
#include "postorder/rational.hpp"

#include <vector>

namespace postorder {

/// POVM on C^d with Gaussian-rational effects: each effect Hermitian and
/// PSD (checked exactly), effects summing to the identity exactly.
class QuantumEvm {
public:
  QuantumEvm(int dim, std::vector<GaussianMatrix> effects);

  int dim() const { return dim_; }
  int outcomes() const { return static_cast<int>(effects_.size()); }
  const GaussianMatrix& effect(int k) const { return effects_[static_cast<std::size_t>(k)]; }
  const std::vector<GaussianMatrix>& effects() const { return effects_; }

private:
  int dim_;
  std::vector<GaussianMatrix> effects_;
};

/// PSD Gaussian-rational matrices rho_k with sum_k tr(rho_k) = 1.
class QuantumEnsemble {
public:
  QuantumEnsemble(int dim, std::vector<GaussianMatrix> members);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(members_.size()); }
  const GaussianMatrix& member(int k) const { return members_[static_cast<std::size_t>(k)]; }
  const std::vector<GaussianMatrix>& members() const { return members_; }

private:
  int dim_;
  std::vector<GaussianMatrix> members_;
};

using QuantumVerdict = BasicVerdict<QuantumEnsemble>;

QuantumEvm make_povm(int dim, std::vector<GaussianMatrix> effects);

/// Real coordinates of a Hermitian matrix: Re h_ab for a <= b, then
/// Im h_ab for a < b (row-major within each group).
RationalVector hermitian_coordinates(const GaussianMatrix& h);

/// Hermitian h with tr(h n) = <y, hermitian_coordinates(n)> for every
/// Hermitian n.
GaussianMatrix hermitian_from_dual(const RationalVector& y, int dim);

/// sum_j max_k tr(m(j) rho_k), exact.
Rational qpg(const QuantumEnsemble& e, const QuantumEvm& m);

std::variant<MarkovMatrix, QuantumEnsemble> quantum_post_processing_evidence(const QuantumEvm& m,
                                                                             const QuantumEvm& n);

/// Exact comparison of two POVMs; Hermitian equalities are split into real
/// and imaginary rational equalities. Incomparable verdicts carry quantum
/// ensembles with exact strict qpg gaps.
QuantumVerdict qcompare(const QuantumEvm& m, const QuantumEvm& n);

bool verify_quantum_verdict(const QuantumVerdict& v, const QuantumEvm& m, const QuantumEvm& n);

}  // namespace postorder
