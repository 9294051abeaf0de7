#include "postorder/postproc.hpp"

#include "postorder/error.hpp"
#include "postorder/parallel.hpp"

#include <numeric>

namespace postorder {

namespace {

void require_same_space(const Evm& m, const Evm& n) {
  if (m.space() != n.space()) throw DimensionError("EVMs live on different spaces");
}

// Shifts every functional by c * u with c = max(0, -min entry) and
// normalizes the total mass to one. The shift adds c * d to pg of every EVM
// (sum_j <m(j), u> = d), so strict gaps survive; the caller re-verifies.
Ensemble ensemble_from_functionals(const ClassicalSpace& space, const SeparatingFunctionals& f) {
  Rational lowest(0);
  for (const auto& y : f.y) {
    for (Eigen::Index x = 0; x < y.size(); ++x) {
      if (y(x) < lowest) lowest = y(x);
    }
  }
  const Rational shift = -lowest;
  std::vector<RationalVector> members;
  Rational mass(0);
  for (const auto& y : f.y) {
    RationalVector shifted = y + RationalVector::Constant(y.size(), shift);
    mass += shifted.sum();
    members.push_back(std::move(shifted));
  }
  if (mass <= 0) throw CertificateError("separating functionals vanish after shifting");
  for (auto& v : members) v /= mass;
  return Ensemble(space, std::move(members));
}

}  // namespace

Rational pg(const Ensemble& e, const Evm& m) {
  if (e.space() != m.space()) throw DimensionError("ensemble and EVM live on different spaces");
  Rational total(0);
  for (const auto& effect : m.effects()) {
    Rational best = pairing(effect, e.member(0));
    for (int k = 1; k < e.size(); ++k) {
      Rational v = pairing(effect, e.member(k));
      if (v > best) best = v;
    }
    total += best;
  }
  return total;
}

std::variant<MarkovMatrix, Ensemble> post_processing_evidence(const Evm& m, const Evm& n) {
  require_same_space(m, n);
  MarkovSearch search = find_markov(m.effects(), n.effects());
  if (auto* witness = std::get_if<MarkovMatrix>(&search)) return *witness;
  Ensemble e = ensemble_from_functionals(m.space(), std::get<SeparatingFunctionals>(search));
  if (!(pg(e, m) > pg(e, n))) throw CertificateError("separating ensemble shows no strict gap");
  return e;
}

CompareVerdict compare(const Evm& m, const Evm& n) {
  auto forward = post_processing_evidence(m, n);
  auto backward = post_processing_evidence(n, m);
  Relation rel = relation_from(std::holds_alternative<MarkovMatrix>(forward),
                               std::holds_alternative<MarkovMatrix>(backward));
  return CompareVerdict{rel, std::move(forward), std::move(backward)};
}

Ensemble separating_ensemble(const Evm& m, const Evm& n) {
  auto evidence = post_processing_evidence(m, n);
  if (std::holds_alternative<MarkovMatrix>(evidence)) {
    throw ValidationError("no separating ensemble: the first EVM is a post-processing of the second");
  }
  return std::get<Ensemble>(std::move(evidence));
}

bool verify_verdict(const CompareVerdict& v, const Evm& m, const Evm& n) {
  if (m.space() != n.space()) return false;
  auto check = [](const std::variant<MarkovMatrix, Ensemble>& ev, const Evm& a, const Evm& b) {
    if (const auto* p = std::get_if<MarkovMatrix>(&ev)) return is_markov_witness(*p, a.effects(), b.effects());
    const auto& e = std::get<Ensemble>(ev);
    return e.space() == a.space() && pg(e, a) > pg(e, b);
  };
  if (!check(v.forward, m, n) || !check(v.backward, n, m)) return false;
  return v.relation == relation_from(std::holds_alternative<MarkovMatrix>(v.forward),
                                     std::holds_alternative<MarkovMatrix>(v.backward));
}

std::vector<std::vector<int>> quotient(const std::vector<Evm>& ms, int threads) {
  const std::size_t count = ms.size();
  for (const auto& m : ms) require_same_space(ms.front(), m);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
  }
  std::vector<char> equivalent(pairs.size(), 0);
  parallel_for(pairs.size(), threads, [&](std::size_t p) {
    equivalent[p] = compare(ms[pairs[p].first], ms[pairs[p].second]).relation == Relation::Equivalent;
  });

  // Equivalence is transitive, so each index joins the class of the
  // smallest index equivalent to it.
  std::vector<std::size_t> root(count);
  std::iota(root.begin(), root.end(), std::size_t{0});
  for (std::size_t p = pairs.size(); p-- > 0;) {
    auto [i, j] = pairs[p];
    if (equivalent[p]) root[j] = i;
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> slot(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t r = root[i];
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[r])].push_back(static_cast<int>(i));
  }
  return classes;
}

void for_each_ensemble(const ClassicalSpace& space, int max_members, int max_denominator,
                       const std::function<bool(const Ensemble&)>& visit) {
  if (max_members < 1) throw ValidationError("max_members must be at least 1");
  if (max_denominator < 1) throw ValidationError("max_denominator must be at least 1");
  const int d = space.dim();
  const Rational den(max_denominator);
  for (int members = 1; members <= max_members; ++members) {
    const int len = members * d;
    std::vector<int> num(static_cast<std::size_t>(len), 0);
    bool stop = false;
    // Numerators are nonnegative and sum to max_denominator; positions are
    // filled left to right with ascending values, which yields
    // lexicographic order.
    std::function<void(int, int)> fill = [&](int pos, int remaining) {
      if (stop) return;
      if (pos == len - 1) {
        num[static_cast<std::size_t>(pos)] = remaining;
        for (int k = 0; k < members; ++k) {
          int block = 0;
          for (int x = 0; x < d; ++x) block += num[static_cast<std::size_t>(k * d + x)];
          if (block == 0) return;
        }
        std::vector<RationalVector> vs(static_cast<std::size_t>(members), RationalVector(d));
        for (int k = 0; k < members; ++k) {
          for (int x = 0; x < d; ++x) vs[static_cast<std::size_t>(k)](x) = Rational(num[static_cast<std::size_t>(k * d + x)]) / den;
        }
        if (!visit(Ensemble(space, std::move(vs)))) stop = true;
        return;
      }
      for (int v = 0; v <= remaining && !stop; ++v) {
        num[static_cast<std::size_t>(pos)] = v;
        fill(pos + 1, remaining - v);
      }
    };
    fill(0, max_denominator);
    if (stop) return;
  }
}

std::vector<Ensemble> enumerate_ensembles(const ClassicalSpace& space, int max_members, int max_denominator) {
  std::vector<Ensemble> out;
  for_each_ensemble(space, max_members, max_denominator, [&](const Ensemble& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::optional<Ensemble> find_enumerated_separator(const Evm& m, const Evm& n, int max_members,
                                                  int max_denominator) {
  require_same_space(m, n);
  std::optional<Ensemble> found;
  for_each_ensemble(m.space(), max_members, max_denominator, [&](const Ensemble& e) {
    if (pg(e, m) > pg(e, n)) {
      found = e;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace postorder
