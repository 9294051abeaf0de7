#pragma once

#include "postorder/lp.hpp"
#include "postorder/rational.hpp"
#include "postorder/relation.hpp"

#include <variant>
#include <vector>

namespace postorder {

/// Column-stochastic matrix p(j|k): rows index target outcomes j, columns
/// index source outcomes k.
class MarkovMatrix {
public:
  explicit MarkovMatrix(RationalMatrix p);

  static MarkovMatrix identity(Eigen::Index n) { return MarkovMatrix(RationalMatrix::Identity(n, n)); }

  Eigen::Index rows() const { return p_.rows(); }
  Eigen::Index cols() const { return p_.cols(); }
  const Rational& operator()(Eigen::Index j, Eigen::Index k) const { return p_(j, k); }
  const RationalMatrix& matrix() const { return p_; }

private:
  RationalMatrix p_;
};

/// Coordinates of a family of effects in some real basis of the effect
/// space. Classical effects are their own coordinates; quantum effects use
/// the real and imaginary parts of their upper triangle.
using EffectCoordinates = std::vector<RationalVector>;

/// Dual functionals y_j, one per target outcome, with
/// sum_j <y_j, target(j)> > sum_k max_j <y_j, source(k)>.
struct SeparatingFunctionals {
  std::vector<RationalVector> y;
};

using MarkovSearch = std::variant<MarkovMatrix, SeparatingFunctionals>;

/// Decides whether target(j) = sum_k p(j|k) source(k) for a Markov matrix p
/// by one exact LP. On infeasibility the Farkas certificate is reshaped into
/// separating functionals.
MarkovSearch find_markov(const EffectCoordinates& target, const EffectCoordinates& source);

/// Checks target(j) = sum_k p(j|k) source(k) exactly.
bool is_markov_witness(const MarkovMatrix& p, const EffectCoordinates& target, const EffectCoordinates& source);

/// Verdict of a pairwise comparison. `forward` is the evidence for or
/// against m <= n (a Markov matrix producing m from n, or an ensemble on
/// which m discriminates strictly better than n); `backward` the same for
/// n <= m.
template <class EnsembleT>
struct BasicVerdict {
  Relation relation;
  std::variant<MarkovMatrix, EnsembleT> forward;
  std::variant<MarkovMatrix, EnsembleT> backward;

  const MarkovMatrix* forward_witness() const { return std::get_if<MarkovMatrix>(&forward); }
  const MarkovMatrix* backward_witness() const { return std::get_if<MarkovMatrix>(&backward); }
  const EnsembleT* forward_ensemble() const { return std::get_if<EnsembleT>(&forward); }
  const EnsembleT* backward_ensemble() const { return std::get_if<EnsembleT>(&backward); }
};

}  // namespace postorder
