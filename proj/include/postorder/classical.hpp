#pragma once

#include "postorder/rational.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace postorder {

/// Classical theory on d pure states: states are probability vectors,
/// effects are vectors in [0,1]^d, the unit is the all-ones vector.
class ClassicalSpace {
public:
  explicit ClassicalSpace(int d);

  int dim() const { return d_; }
  RationalVector unit() const { return RationalVector::Constant(d_, Rational(1)); }

  friend bool operator==(const ClassicalSpace&, const ClassicalSpace&) = default;

private:
  int d_;
};

class Effect {
public:
  Effect(ClassicalSpace space, RationalVector values);

  const ClassicalSpace& space() const { return space_; }
  const RationalVector& values() const { return values_; }

  friend bool operator==(const Effect&, const Effect&) = default;

private:
  ClassicalSpace space_;
  RationalVector values_;
};

/// Finite-outcome effect-valued measure. Effects are stored by value and
/// validated at construction; the coordinatewise sum is exactly the unit.
class Evm {
public:
  Evm(ClassicalSpace space, std::vector<RationalVector> effects);

  const ClassicalSpace& space() const { return space_; }
  int outcomes() const { return static_cast<int>(effects_.size()); }
  const RationalVector& effect(int k) const { return effects_[static_cast<std::size_t>(k)]; }
  const std::vector<RationalVector>& effects() const { return effects_; }

  friend bool operator==(const Evm&, const Evm&) = default;

private:
  ClassicalSpace space_;
  std::vector<RationalVector> effects_;
};

class State {
public:
  State(ClassicalSpace space, RationalVector values);

  const ClassicalSpace& space() const { return space_; }
  const RationalVector& values() const { return values_; }

private:
  ClassicalSpace space_;
  RationalVector values_;
};

/// Nonnegative vectors rho_k whose total mass sum_k <u, rho_k> is 1.
class Ensemble {
public:
  Ensemble(ClassicalSpace space, std::vector<RationalVector> members);

  const ClassicalSpace& space() const { return space_; }
  int size() const { return static_cast<int>(members_.size()); }
  const RationalVector& member(int k) const { return members_[static_cast<std::size_t>(k)]; }
  const std::vector<RationalVector>& members() const { return members_; }

  friend bool operator==(const Ensemble&, const Ensemble&) = default;

private:
  ClassicalSpace space_;
  std::vector<RationalVector> members_;
};

/// Unital positive injection of the bit effect space into a classical
/// target: (alpha0, alpha1) -> alpha0 a + alpha1 a'.
class UnitalPositiveMap {
public:
  UnitalPositiveMap(ClassicalSpace target, RationalVector a);

  const ClassicalSpace& target() const { return target_; }
  const RationalVector& a() const { return a_; }
  RationalVector a_prime() const { return target_.unit() - a_; }

  RationalVector operator()(const RationalVector& bit_effect) const;

private:
  ClassicalSpace target_;
  RationalVector a_;
};

Evm make_evm(const ClassicalSpace& space, std::vector<RationalVector> effects);

Rational pairing(const RationalVector& effect, const RationalVector& state);

std::vector<Rational> outcome_distribution(const Evm& m, const State& w);

/// Direct mixture: outcomes of part j are kept as a separate block scaled by
/// its weight. Zero-weight parts keep their (zero) block.
Evm direct_mixture(const std::vector<std::pair<Rational, Evm>>& parts);

bool is_trivial(const Evm& m);

/// Two-outcome EVM ((s0, s1), (1 - s0, 1 - s1)) on the bit space.
Evm a_family(const Rational& s0, const Rational& s1);

/// Single-outcome EVM (u) on the given space.
Evm trivial_evm(const ClassicalSpace& space);

struct ParallelogramInside {
  Rational p;
  Rational q;
};
struct ParallelogramOutside {};
using ParallelogramResult = std::variant<ParallelogramInside, ParallelogramOutside>;

/// Whether s lies in the parallelogram (0,0)-t-(1,1)-(1-t0,1-t1), i.e.
/// s = p t + q (1 - t) for some p, q in [0,1]. Equivalent to
/// a_family(s) being a post-processing of a_family(t).
ParallelogramResult parallelogram_member(const std::pair<Rational, Rational>& s,
                                         const std::pair<Rational, Rational>& t);

/// Sup norm, which is the order-unit norm of the classical effect space.
Rational sup_norm(const RationalVector& v);

/// Builds the bit embedding from a direction a0 that is not a multiple of u:
/// a = (a0 + |a0| u) / |a0 + |a0| u|.
UnitalPositiveMap cbit_embedding(const RationalVector& a0, const ClassicalSpace& target);

Evm apply_map(const UnitalPositiveMap& psi, const Evm& m);

}  // namespace postorder
