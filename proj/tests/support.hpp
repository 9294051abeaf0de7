#pragma once

#include "postorder/channel.hpp"
#include "postorder/classical.hpp"
#include "postorder/poset.hpp"
#include "postorder/quantum.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <complex>
#include <random>
#include <string>
#include <vector>

namespace postorder::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational q(long long num, long long den = 1) { return Rational(num, den); }

inline RationalVector vec(std::initializer_list<Rational> xs) {
  RationalVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

/// Random rational in [0, 1] with denominator dividing `den`.
inline Rational random_unit(Rng& rng, int den) { return Rational(uniform_int(rng, 0, den), den); }

/// Random rational in (0, 1) with denominator dividing `den`.
inline Rational random_open_unit(Rng& rng, int den) { return Rational(uniform_int(rng, 1, den - 1), den); }

/// Columns of nonnegative integer weights normalized per coordinate.
inline Evm random_evm(Rng& rng, int d, int outcomes, int max_weight = 4) {
  std::vector<RationalVector> effects(static_cast<std::size_t>(outcomes), RationalVector(d));
  for (int x = 0; x < d; ++x) {
    std::vector<int> w(static_cast<std::size_t>(outcomes));
    int total = 0;
    while (total == 0) {
      total = 0;
      for (auto& v : w) {
        v = uniform_int(rng, 0, max_weight);
        total += v;
      }
    }
    for (int j = 0; j < outcomes; ++j) effects[static_cast<std::size_t>(j)](x) = Rational(w[static_cast<std::size_t>(j)], total);
  }
  return Evm(ClassicalSpace(d), std::move(effects));
}

inline Ensemble random_ensemble(Rng& rng, int d, int members, int max_weight = 9) {
  std::vector<RationalVector> out(static_cast<std::size_t>(members), RationalVector(d));
  long long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& m : out) {
      for (int x = 0; x < d; ++x) {
        int w = uniform_int(rng, 0, max_weight);
        m(x) = w;
        total += w;
      }
    }
  }
  for (auto& m : out) m /= Rational(total);
  return Ensemble(ClassicalSpace(d), std::move(out));
}

inline std::vector<std::string> labels(int n, const std::string& prefix = "e") {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Random DAG on a shuffled vertex order, transitively closed.
inline FinitePoset random_poset(Rng& rng, int n, double density) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (edge(rng)) leq[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])] = true;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
          leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        }
      }
    }
  }
  return FinitePoset(labels(n), std::move(leq));
}

/// Every labelled partial order on n elements (n <= 4); a superset of the
/// isomorphism classes.
inline std::vector<FinitePoset> all_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  std::vector<FinitePoset> out;
  for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1UL) leq[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = true;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] && leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) ok = false;
        for (int k = 0; k < n && ok; ++k) {
          if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] && leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
              !leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
            ok = false;
          }
        }
      }
    }
    if (ok) out.emplace_back(labels(n), std::move(leq));
  }
  return out;
}

/// All linear extensions by brute force over permutations.
inline std::vector<LinearExtension> all_extensions(const FinitePoset& p) {
  std::vector<int> perm(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<LinearExtension> out;
  do {
    LinearExtension l{perm};
    if (is_linear_extension(p, l)) out.push_back(l);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Naive dimension: smallest k such that some k-subset of all linear
/// extensions has intersection equal to the order.
inline int naive_dimension(const FinitePoset& p) {
  const auto exts = all_extensions(p);
  const int n = p.size();
  std::vector<std::vector<int>> ranks;
  for (const auto& l : exts) ranks.push_back(l.ranks());
  for (int k = 1; k <= static_cast<int>(exts.size()); ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          if (x == y) continue;
          bool all_below = true;
          for (int i : pick) {
            if (ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] > ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(y)]) all_below = false;
          }
          if (all_below != p.leq(x, y)) ok = false;
        }
      }
      if (ok) return k;
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(exts.size()) - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return -1;
}

inline GaussianMatrix gaussian(std::initializer_list<std::initializer_list<std::pair<Rational, Rational>>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  GaussianMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& [re, im] : row) m.set(i, j++, {re, im});
    ++i;
  }
  return m;
}

inline GaussianMatrix real_gaussian(std::initializer_list<std::initializer_list<Rational>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  GaussianMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) m.set(i, j++, {x});
    ++i;
  }
  return m;
}

inline GaussianMatrix random_gaussian(Rng& rng, int rows, int cols, int range) {
  GaussianMatrix g(rows, cols);
  for (int a = 0; a < rows; ++a) {
    for (int b = 0; b < cols; ++b) g.set(a, b, {Rational(uniform_int(rng, -range, range)), Rational(uniform_int(rng, -range, range))});
  }
  return g;
}

inline GaussianMatrix random_hermitian(Rng& rng, int d, int range, int den) {
  GaussianMatrix h(d, d);
  for (int a = 0; a < d; ++a) {
    h.set(a, a, {Rational(uniform_int(rng, -range, range), den)});
    for (int b = a + 1; b < d; ++b) {
      GaussianRational v{Rational(uniform_int(rng, -range, range), den), Rational(uniform_int(rng, -range, range), den)};
      h.set(a, b, v);
      h.set(b, a, v.conj());
    }
  }
  return h;
}

/// Exact random POVM: P_k = G_k G_k^* scaled by 1/tr(sum), completed by
/// 1 - sum P_k, which is PSD because the largest eigenvalue of the sum is at
/// most its trace.
inline QuantumEvm random_povm(Rng& rng, int d, int outcomes) {
  std::vector<GaussianMatrix> ps;
  GaussianMatrix sum = GaussianMatrix::zero(d, d);
  for (int k = 0; k + 1 < outcomes; ++k) {
    GaussianMatrix g = random_gaussian(rng, d, d, 2);
    ps.push_back(g * g.adjoint());
    sum = sum + ps.back();
  }
  Rational tr = sum.trace().re;
  if (tr == 0) tr = 1;
  const Rational scale = Rational(1) / tr;
  GaussianMatrix rest = GaussianMatrix::identity(d);
  for (auto& p : ps) {
    p = scale * p;
    rest = rest - p;
  }
  ps.push_back(rest);
  return QuantumEvm(d, std::move(ps));
}

inline QuantumEnsemble random_quantum_ensemble(Rng& rng, int d, int members) {
  std::vector<GaussianMatrix> out;
  Rational total(0);
  while (total == 0) {
    out.clear();
    total = 0;
    for (int k = 0; k < members; ++k) {
      GaussianMatrix g = random_gaussian(rng, d, d, 2);
      out.push_back(g * g.adjoint());
      total += out.back().trace().re;
    }
  }
  const Rational scale = Rational(1) / total;
  for (auto& m : out) m = scale * m;
  return QuantumEnsemble(d, std::move(out));
}

/// Random unital CP map B(C^d_in) -> B(C^d_out) from a random isometry
/// C^d_out -> C^(r d_in), split into r Kraus blocks.
inline Superoperator random_channel(Rng& rng, int d_in, int d_out, int r) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd g(r * d_in, d_out);
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    for (Eigen::Index b = 0; b < g.cols(); ++b) g(a, b) = {normal(rng), normal(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd v = qr.householderQ() * Eigen::MatrixXcd::Identity(r * d_in, d_out);
  std::vector<Eigen::MatrixXcd> kraus;
  for (int i = 0; i < r; ++i) kraus.push_back(v.block(i * d_in, 0, d_in, d_out));
  return kraus_channel(kraus);
}

/// mt(k, m) = (psi (x) id_d)(|eta_{k,m}><eta_{k,m}|) for psi: B(C^d) -> B(C^dj).
inline std::vector<Eigen::MatrixXcd> blocks_from_channel(const Superoperator& psi) {
  const int d = psi.dim_in();
  const Superoperator lifted = tensor_with_identity(psi, d);
  std::vector<Eigen::MatrixXcd> mt;
  for (const auto& eta : entangled_basis(d)) mt.push_back(lifted(eta * eta.adjoint()));
  return mt;
}

}  // namespace postorder::testing
