#pragma once

#include "postorder/classical.hpp"
#include "postorder/markov.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace postorder {

using CompareVerdict = BasicVerdict<Ensemble>;

/// Guessing probability under maximum-likelihood decoding:
/// sum_j max_k <m(j), rho_k>.
Rational pg(const Ensemble& e, const Evm& m);

/// One direction of the post-processing order: a Markov matrix with
/// m(j) = sum_k p(j|k) n(k), or an ensemble with pg(e; m) > pg(e; n).
std::variant<MarkovMatrix, Ensemble> post_processing_evidence(const Evm& m, const Evm& n);

/// Decides m vs n with two independent exact LPs. Every carried witness
/// and ensemble has been re-verified.
CompareVerdict compare(const Evm& m, const Evm& n);

/// Ensemble on which m discriminates strictly better than n. Throws
/// ValidationError when m is a post-processing of n.
Ensemble separating_ensemble(const Evm& m, const Evm& n);

/// Checks a carried verdict against the two EVMs without solving anything.
bool verify_verdict(const CompareVerdict& v, const Evm& m, const Evm& n);

/// Partition of the indices by post-processing equivalence, classes
/// ordered by their smallest member.
std::vector<std::vector<int>> quotient(const std::vector<Evm>& ms, int threads = 1);

/// Visits, in a fixed order, every ensemble with 1..max_members nonzero
/// members whose entries are multiples of 1/max_denominator. Ensembles are
/// ordered by member count, then lexicographically by the flattened tuple
/// of numerators. The visitor returns false to stop early.
void for_each_ensemble(const ClassicalSpace& space, int max_members, int max_denominator,
                       const std::function<bool(const Ensemble&)>& visit);

std::vector<Ensemble> enumerate_ensembles(const ClassicalSpace& space, int max_members, int max_denominator);

/// First enumerated ensemble with pg(e; m) > pg(e; n), if any.
std::optional<Ensemble> find_enumerated_separator(const Evm& m, const Evm& n, int max_members,
                                                  int max_denominator);

}  // namespace postorder
