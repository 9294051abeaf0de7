#include "postorder/lp.hpp"

#include "postorder/error.hpp"

#include <vector>

namespace postorder {

bool FarkasCertificate::certifies(const LpProblem& p) const {
  if (y.size() != p.a.rows()) return false;
  for (Eigen::Index j = 0; j < p.a.cols(); ++j) {
    Rational s(0);
    for (Eigen::Index i = 0; i < p.a.rows(); ++i) {
      if (y(i) != 0 && p.a(i, j) != 0) s += y(i) * p.a(i, j);
    }
    if (s > 0) return false;
  }
  Rational yb(0);
  for (Eigen::Index i = 0; i < p.b.size(); ++i) yb += y(i) * p.b(i);
  return yb > 0;
}

namespace {

bool solves(const LpProblem& p, const RationalVector& x) {
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x(j) < 0) return false;
  }
  for (Eigen::Index i = 0; i < p.a.rows(); ++i) {
    Rational s(0);
    for (Eigen::Index j = 0; j < p.a.cols(); ++j) {
      if (p.a(i, j) != 0 && x(j) != 0) s += p.a(i, j) * x(j);
    }
    if (s != p.b(i)) return false;
  }
  return true;
}

// Dense phase-one tableau. Columns [0, n) are the structural variables,
// [n, n + m) the artificials; the last column is the right-hand side.
class Tableau {
public:
  explicit Tableau(const LpProblem& p)
      : m_(p.a.rows()), n_(p.a.cols()), t_(RationalMatrix::Zero(m_, n_ + m_ + 1)),
        reduced_(RationalVector::Zero(n_ + m_)), sign_(m_), basis_(m_) {
    for (Eigen::Index i = 0; i < m_; ++i) {
      sign_[i] = p.b(i) < 0 ? -1 : 1;
      for (Eigen::Index j = 0; j < n_; ++j) {
        t_(i, j) = sign_[i] < 0 ? Rational(-p.a(i, j)) : p.a(i, j);
      }
      t_(i, n_ + i) = 1;
      t_(i, n_ + m_) = sign_[i] < 0 ? Rational(-p.b(i)) : p.b(i);
      basis_[i] = n_ + i;
    }
    // Phase-one costs are 1 on artificials and 0 elsewhere, so the initial
    // reduced costs of structural columns are minus the column sums.
    for (Eigen::Index j = 0; j < n_; ++j) {
      Rational s(0);
      for (Eigen::Index i = 0; i < m_; ++i) s += t_(i, j);
      reduced_(j) = -s;
    }
  }

  void solve() {
    for (;;) {
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < n_ + m_; ++j) {
        if (reduced_(j) < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return;

      Eigen::Index leaving = -1;
      Rational best_ratio;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (t_(i, entering) <= 0) continue;
        Rational ratio = t_(i, n_ + m_) / t_(i, entering);
        if (leaving < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      // Phase one is bounded below by zero, so a ratio row always exists.
      if (leaving < 0) throw CertificateError("simplex: unbounded phase-one problem");
      pivot(leaving, entering);
    }
  }

  Rational objective() const {
    Rational s(0);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) s += t_(i, n_ + m_);
    }
    return s;
  }

  RationalVector primal() const {
    RationalVector x = RationalVector::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x(basis_[i]) = t_(i, n_ + m_);
    }
    return x;
  }

  // Simplex multipliers of the original rows: pi_i = 1 - reduced cost of
  // artificial i, mapped back through the row sign flips.
  RationalVector dual() const {
    RationalVector y(m_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      Rational pi = Rational(1) - reduced_(n_ + i);
      y(i) = sign_[i] < 0 ? Rational(-pi) : pi;
    }
    return y;
  }

private:
  void pivot(Eigen::Index row, Eigen::Index col) {
    const Eigen::Index width = n_ + m_ + 1;
    Rational inv = Rational(1) / t_(row, col);
    for (Eigen::Index j = 0; j < width; ++j) {
      if (t_(row, j) != 0) t_(row, j) *= inv;
    }
    std::vector<Eigen::Index> nz;
    for (Eigen::Index j = 0; j < width; ++j) {
      if (t_(row, j) != 0) nz.push_back(j);
    }
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i == row || t_(i, col) == 0) continue;
      Rational f = t_(i, col);
      for (Eigen::Index j : nz) t_(i, j) -= f * t_(row, j);
    }
    if (reduced_(col) != 0) {
      Rational f = reduced_(col);
      for (Eigen::Index j : nz) {
        if (j < n_ + m_) reduced_(j) -= f * t_(row, j);
      }
    }
    basis_[row] = col;
  }

  Eigen::Index m_;
  Eigen::Index n_;
  RationalMatrix t_;
  RationalVector reduced_;
  std::vector<int> sign_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

LpResult lp_feasible(const LpProblem& p) {
  if (p.a.rows() != p.b.size()) {
    throw DimensionError("lp_feasible: constraint matrix has " + std::to_string(p.a.rows()) +
                         " rows but right-hand side has " + std::to_string(p.b.size()) + " entries");
  }
  Tableau tableau(p);
  tableau.solve();
  if (tableau.objective() == 0) {
    RationalVector x = tableau.primal();
    if (!solves(p, x)) throw CertificateError("lp_feasible: primal point failed verification");
    return LpFeasible{std::move(x)};
  }
  FarkasCertificate cert{tableau.dual()};
  if (!cert.certifies(p)) throw CertificateError("lp_feasible: Farkas certificate failed verification");
  return LpInfeasible{std::move(cert)};
}

}  // namespace postorder
