#include "postorder/markov.hpp"

#include "postorder/error.hpp"

namespace postorder {

MarkovMatrix::MarkovMatrix(RationalMatrix p) : p_(std::move(p)) {
  if (p_.rows() == 0 || p_.cols() == 0) throw ValidationError("Markov matrix must be nonempty");
  for (Eigen::Index k = 0; k < p_.cols(); ++k) {
    Rational s(0);
    for (Eigen::Index j = 0; j < p_.rows(); ++j) {
      if (p_(j, k) < 0) throw ValidationError("Markov matrix has a negative entry");
      s += p_(j, k);
    }
    if (s != 1) throw ValidationError("Markov matrix column " + std::to_string(k) + " sums to " + to_string(s));
  }
}

namespace {

Eigen::Index coordinate_count(const EffectCoordinates& target, const EffectCoordinates& source) {
  if (target.empty() || source.empty()) throw ValidationError("effect families must be nonempty");
  const Eigen::Index c = target.front().size();
  for (const auto* fam : {&target, &source}) {
    for (const auto& v : *fam) {
      if (v.size() != c) throw DimensionError("effects have different coordinate lengths");
    }
  }
  return c;
}

}  // namespace

bool is_markov_witness(const MarkovMatrix& p, const EffectCoordinates& target, const EffectCoordinates& source) {
  const Eigen::Index c = coordinate_count(target, source);
  if (p.rows() != static_cast<Eigen::Index>(target.size()) || p.cols() != static_cast<Eigen::Index>(source.size())) {
    return false;
  }
  for (std::size_t j = 0; j < target.size(); ++j) {
    RationalVector acc = RationalVector::Zero(c);
    for (std::size_t k = 0; k < source.size(); ++k) {
      const Rational& w = p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
      if (w != 0) acc += source[k] * w;
    }
    if (acc != target[j]) return false;
  }
  return true;
}

MarkovSearch find_markov(const EffectCoordinates& target, const EffectCoordinates& source) {
  const Eigen::Index c = coordinate_count(target, source);
  const auto m = static_cast<Eigen::Index>(target.size());
  const auto n = static_cast<Eigen::Index>(source.size());

  // Variable p(j|k) sits at column j*n + k. Rows [0, m*c) impose
  // target(j)(x) = sum_k p(j|k) source(k)(x); rows [m*c, m*c + n) impose
  // sum_j p(j|k) = 1.
  LpProblem lp{RationalMatrix::Zero(m * c + n, m * n), RationalVector::Zero(m * c + n)};
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index x = 0; x < c; ++x) {
      for (Eigen::Index k = 0; k < n; ++k) lp.a(j * c + x, j * n + k) = source[static_cast<std::size_t>(k)](x);
      lp.b(j * c + x) = target[static_cast<std::size_t>(j)](x);
    }
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < m; ++j) lp.a(m * c + k, j * n + k) = 1;
    lp.b(m * c + k) = 1;
  }

  LpResult result = lp_feasible(lp);
  if (auto* feasible = std::get_if<LpFeasible>(&result)) {
    RationalMatrix p(m, n);
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) p(j, k) = feasible->x(j * n + k);
    }
    MarkovMatrix witness(std::move(p));
    if (!is_markov_witness(witness, target, source)) throw CertificateError("Markov witness failed verification");
    return witness;
  }

  // Farkas: <y_j, source(k)> + z_k <= 0 for all j, k and
  // sum_j <y_j, target(j)> + sum_k z_k > 0. Hence
  // sum_j <y_j, target(j)> > -sum_k z_k >= sum_k max_j <y_j, source(k)>.
  const RationalVector& y = std::get<LpInfeasible>(result).certificate.y;
  SeparatingFunctionals out;
  out.y.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index j = 0; j < m; ++j) out.y.emplace_back(y.segment(j * c, c));
  return out;
}

}  // namespace postorder
