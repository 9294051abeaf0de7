#include "postorder/classical.hpp"

#include "postorder/error.hpp"

#include <string>

namespace postorder {

namespace {

bool is_constant(const RationalVector& v) {
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (v(i) != v(0)) return false;
  }
  return true;
}

void check_length(const ClassicalSpace& space, const RationalVector& v, const char* what) {
  if (v.size() != space.dim()) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(space.dim()));
  }
}

}  // namespace

ClassicalSpace::ClassicalSpace(int d) : d_(d) {
  if (d < 1) throw ValidationError("classical space needs d >= 1, got " + std::to_string(d));
}

Effect::Effect(ClassicalSpace space, RationalVector values) : space_(space), values_(std::move(values)) {
  check_length(space_, values_, "effect");
  for (Eigen::Index x = 0; x < values_.size(); ++x) {
    if (values_(x) < 0) throw ValidationError("effect entry " + std::to_string(x) + " is negative");
    if (values_(x) > 1) throw ValidationError("effect entry " + std::to_string(x) + " exceeds 1");
  }
}

Evm::Evm(ClassicalSpace space, std::vector<RationalVector> effects) : space_(space), effects_(std::move(effects)) {
  if (effects_.empty()) throw ValidationError("EVM needs at least one effect");
  RationalVector sum = RationalVector::Zero(space_.dim());
  for (std::size_t k = 0; k < effects_.size(); ++k) {
    try {
      Effect(space_, effects_[k]);
    } catch (const ValidationError& e) {
      throw ValidationError("outcome " + std::to_string(k) + ": " + e.what());
    } catch (const DimensionError& e) {
      throw DimensionError("outcome " + std::to_string(k) + ": " + e.what());
    }
    sum += effects_[k];
  }
  if (sum != space_.unit()) {
    std::string shown;
    for (Eigen::Index x = 0; x < sum.size(); ++x) shown += (x ? "," : "") + to_string(sum(x));
    throw ValidationError("effects sum to (" + shown + "), not the unit");
  }
}

State::State(ClassicalSpace space, RationalVector values) : space_(space), values_(std::move(values)) {
  check_length(space_, values_, "state");
  Rational total(0);
  for (Eigen::Index x = 0; x < values_.size(); ++x) {
    if (values_(x) < 0) throw ValidationError("state entry " + std::to_string(x) + " is negative");
    total += values_(x);
  }
  if (total != 1) throw ValidationError("state entries sum to " + to_string(total) + ", not 1");
}

Ensemble::Ensemble(ClassicalSpace space, std::vector<RationalVector> members)
    : space_(space), members_(std::move(members)) {
  if (members_.empty()) throw ValidationError("ensemble needs at least one member");
  Rational total(0);
  for (std::size_t k = 0; k < members_.size(); ++k) {
    check_length(space_, members_[k], "ensemble member");
    for (Eigen::Index x = 0; x < members_[k].size(); ++x) {
      if (members_[k](x) < 0) {
        throw ValidationError("ensemble member " + std::to_string(k) + " has a negative entry");
      }
      total += members_[k](x);
    }
  }
  if (total != 1) throw ValidationError("ensemble mass is " + to_string(total) + ", not 1");
}

UnitalPositiveMap::UnitalPositiveMap(ClassicalSpace target, RationalVector a) : target_(target), a_(std::move(a)) {
  Effect(target_, a_);
  if (is_constant(a_)) throw ValidationError("images of the bit embedding are linearly dependent");
}

RationalVector UnitalPositiveMap::operator()(const RationalVector& bit_effect) const {
  if (bit_effect.size() != 2) throw DimensionError("bit embedding expects a length-2 effect");
  return RationalVector(a_ * bit_effect(0) + a_prime() * bit_effect(1));
}

Evm make_evm(const ClassicalSpace& space, std::vector<RationalVector> effects) {
  return Evm(space, std::move(effects));
}

Rational pairing(const RationalVector& effect, const RationalVector& state) {
  if (effect.size() != state.size()) throw DimensionError("pairing: length mismatch");
  Rational s(0);
  for (Eigen::Index x = 0; x < effect.size(); ++x) s += effect(x) * state(x);
  return s;
}

std::vector<Rational> outcome_distribution(const Evm& m, const State& w) {
  if (m.space() != w.space()) throw DimensionError("EVM and state live on different spaces");
  std::vector<Rational> p;
  p.reserve(m.effects().size());
  for (const auto& e : m.effects()) p.push_back(pairing(e, w.values()));
  return p;
}

Evm direct_mixture(const std::vector<std::pair<Rational, Evm>>& parts) {
  if (parts.empty()) throw ValidationError("direct mixture needs at least one part");
  const ClassicalSpace space = parts.front().second.space();
  Rational total(0);
  std::vector<RationalVector> effects;
  for (const auto& [w, m] : parts) {
    if (m.space() != space) throw DimensionError("direct mixture parts live on different spaces");
    if (w < 0) throw ValidationError("direct mixture weight " + to_string(w) + " is negative");
    total += w;
    for (const auto& e : m.effects()) effects.emplace_back(e * w);
  }
  if (total != 1) throw ValidationError("direct mixture weights sum to " + to_string(total) + ", not 1");
  return Evm(space, std::move(effects));
}

bool is_trivial(const Evm& m) {
  for (const auto& e : m.effects()) {
    if (!is_constant(e)) return false;
  }
  return true;
}

Evm a_family(const Rational& s0, const Rational& s1) {
  for (const Rational* s : {&s0, &s1}) {
    if (*s < 0 || *s > 1) throw ValidationError("a_family parameter " + to_string(*s) + " outside [0,1]");
  }
  RationalVector first(2), second(2);
  first << s0, s1;
  second << Rational(1) - s0, Rational(1) - s1;
  return Evm(ClassicalSpace(2), {first, second});
}

Evm trivial_evm(const ClassicalSpace& space) { return Evm(space, {space.unit()}); }

ParallelogramResult parallelogram_member(const std::pair<Rational, Rational>& s,
                                         const std::pair<Rational, Rational>& t) {
  const auto& [s0, s1] = s;
  const auto& [t0, t1] = t;
  auto in_unit = [](const Rational& v) { return v >= 0 && v <= 1; };
  if (t0 == t1) {
    // The parallelogram collapses onto the diagonal; every point (v, v) with
    // v in [0,1] is reached with p = q = v.
    if (s0 == s1 && in_unit(s0)) return ParallelogramInside{s0, s0};
    return ParallelogramOutside{};
  }
  // [t0, 1 - t0; t1, 1 - t1] (p, q)^T = s, determinant t0 - t1.
  Rational det = t0 - t1;
  Rational p = (s0 * (Rational(1) - t1) - s1 * (Rational(1) - t0)) / det;
  Rational q = (t0 * s1 - t1 * s0) / det;
  if (in_unit(p) && in_unit(q)) return ParallelogramInside{p, q};
  return ParallelogramOutside{};
}

Rational sup_norm(const RationalVector& v) {
  Rational m(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rational a = abs(v(i));
    if (a > m) m = a;
  }
  return m;
}

UnitalPositiveMap cbit_embedding(const RationalVector& a0, const ClassicalSpace& target) {
  check_length(target, a0, "embedding direction");
  if (is_constant(a0)) {
    throw ValidationError("embedding direction is proportional to the unit; need a second independent direction");
  }
  RationalVector shifted = a0 + target.unit() * sup_norm(a0);
  RationalVector a = shifted / sup_norm(shifted);
  return UnitalPositiveMap(target, std::move(a));
}

Evm apply_map(const UnitalPositiveMap& psi, const Evm& m) {
  if (m.space() != ClassicalSpace(2)) throw DimensionError("bit embedding applies to EVMs on the bit space");
  std::vector<RationalVector> effects;
  effects.reserve(m.effects().size());
  for (const auto& e : m.effects()) effects.push_back(psi(e));
  return Evm(psi.target(), std::move(effects));
}

}  // namespace postorder
