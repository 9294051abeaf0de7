#include "postorder/channel.hpp"

#include "postorder/error.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace postorder {

namespace {

using Complex = std::complex<double>;

Eigen::VectorXcd vec(const Eigen::MatrixXcd& x) {
  return Eigen::Map<const Eigen::VectorXcd>(x.data(), x.size());
}

Eigen::MatrixXcd unvec(const Eigen::VectorXcd& v, int d) {
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), d, d);
}

Eigen::MatrixXcd unit(int d, int i, int j) {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

Eigen::MatrixXcd apply_raw(const Eigen::MatrixXcd& s, int dim_out, const Eigen::MatrixXcd& x) {
  return unvec(s * vec(x), dim_out);
}

Complex root_of_unity(int d, long long power) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(((power % d) + d) % d) / d;
  return std::polar(1.0, angle);
}

}  // namespace

Superoperator::Superoperator(int dim_in, int dim_out, Eigen::MatrixXcd matrix)
    : dim_in_(dim_in), dim_out_(dim_out), matrix_(std::move(matrix)) {
  if (dim_in_ < 1 || dim_out_ < 1) throw ValidationError("superoperator dimensions must be positive");
  if (matrix_.rows() != dim_out_ * dim_out_ || matrix_.cols() != dim_in_ * dim_in_) {
    throw DimensionError("superoperator matrix must be " + std::to_string(dim_out_ * dim_out_) + "x" +
                         std::to_string(dim_in_ * dim_in_));
  }
  for (int a = 0; a < dim_in_; ++a) {
    for (int b = a; b < dim_in_; ++b) {
      Eigen::MatrixXcd ab = apply_raw(matrix_, dim_out_, unit(dim_in_, a, b));
      Eigen::MatrixXcd ba = apply_raw(matrix_, dim_out_, unit(dim_in_, b, a));
      if ((ba - ab.adjoint()).cwiseAbs().maxCoeff() > kFloatTolerance) {
        throw ValidationError("superoperator does not preserve Hermiticity");
      }
    }
  }
}

Superoperator Superoperator::from_function(int dim_in, int dim_out,
                                           const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& fn) {
  Eigen::MatrixXcd s(dim_out * dim_out, dim_in * dim_in);
  for (int j = 0; j < dim_in; ++j) {
    for (int i = 0; i < dim_in; ++i) {
      Eigen::MatrixXcd image = fn(unit(dim_in, i, j));
      if (image.rows() != dim_out || image.cols() != dim_out) throw DimensionError("map returned wrong shape");
      s.col(i + j * dim_in) = vec(image);
    }
  }
  return Superoperator(dim_in, dim_out, std::move(s));
}

Eigen::MatrixXcd Superoperator::operator()(const Eigen::MatrixXcd& x) const {
  if (x.rows() != dim_in_ || x.cols() != dim_in_) throw DimensionError("operand has wrong shape");
  return apply_raw(matrix_, dim_out_, x);
}

Superoperator Superoperator::predual() const {
  // tr(rho X) = vec(rho^T)^T vec(X), so tr(rho Phi(a)) = tr(Y a) with
  // vec(Y^T) = S^T vec(rho^T).
  const Eigen::MatrixXcd st = matrix_.transpose();
  const int in = dim_in_;
  return from_function(dim_out_, dim_in_, [&](const Eigen::MatrixXcd& rho) {
    Eigen::MatrixXcd yt = unvec(st * vec(rho.transpose()), in);
    return Eigen::MatrixXcd(yt.transpose());
  });
}

Superoperator identity_channel(int d) {
  return Superoperator(d, d, Eigen::MatrixXcd::Identity(d * d, d * d));
}

Superoperator transpose_map(int d) {
  return Superoperator::from_function(d, d, [](const Eigen::MatrixXcd& a) { return Eigen::MatrixXcd(a.transpose()); });
}

Superoperator depolarizing_channel(int d, double lambda) {
  return Superoperator::from_function(d, d, [&](const Eigen::MatrixXcd& a) {
    return Eigen::MatrixXcd(lambda * a + (1.0 - lambda) * a.trace() / static_cast<double>(d) *
                                             Eigen::MatrixXcd::Identity(d, d));
  });
}

Superoperator dephasing_channel(int d) {
  return Superoperator::from_function(d, d, [](const Eigen::MatrixXcd& a) {
    return Eigen::MatrixXcd(a.diagonal().asDiagonal());
  });
}

Superoperator constant_channel(int dim_in, int dim_out) {
  return Superoperator::from_function(dim_in, dim_out, [&](const Eigen::MatrixXcd& a) {
    return Eigen::MatrixXcd(a(0, 0) * Eigen::MatrixXcd::Identity(dim_out, dim_out));
  });
}

Superoperator kraus_channel(const std::vector<Eigen::MatrixXcd>& kraus) {
  if (kraus.empty()) throw ValidationError("Kraus family must be nonempty");
  const auto dim_in = static_cast<int>(kraus.front().rows());
  const auto dim_out = static_cast<int>(kraus.front().cols());
  for (const auto& k : kraus) {
    if (k.rows() != dim_in || k.cols() != dim_out) throw DimensionError("Kraus operators differ in shape");
  }
  return Superoperator::from_function(dim_in, dim_out, [&](const Eigen::MatrixXcd& a) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_out, dim_out);
    for (const auto& k : kraus) out += k.adjoint() * a * k;
    return out;
  });
}

Superoperator compose(const Superoperator& outer, const Superoperator& inner) {
  if (inner.dim_out() != outer.dim_in()) {
    throw DimensionError("compose: inner map lands in dimension " + std::to_string(inner.dim_out()) +
                         " but outer map starts from " + std::to_string(outer.dim_in()));
  }
  return Superoperator(inner.dim_in(), outer.dim_out(), outer.matrix() * inner.matrix());
}

Superoperator tensor_with_identity(const Superoperator& s, int n) {
  if (n < 1) throw ValidationError("tensor_with_identity needs n >= 1");
  const int din = s.dim_in();
  const int dout = s.dim_out();
  return Superoperator::from_function(din * n, dout * n, [&](const Eigen::MatrixXcd& x) {
    // x = sum_{i,i'} X_{ii'} (x) E_{ii'} with X_{ii'}(a, b) = x(a n + i, b n + i').
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dout * n, dout * n);
    for (int i = 0; i < n; ++i) {
      for (int ip = 0; ip < n; ++ip) {
        Eigen::MatrixXcd block(din, din);
        for (int a = 0; a < din; ++a) {
          for (int b = 0; b < din; ++b) block(a, b) = x(a * n + i, b * n + ip);
        }
        if (block.cwiseAbs().maxCoeff() == 0.0) continue;
        Eigen::MatrixXcd image = s(block);
        for (int a = 0; a < dout; ++a) {
          for (int b = 0; b < dout; ++b) out(a * n + i, b * n + ip) += image(a, b);
        }
      }
    }
    return out;
  });
}

ChoiMatrix choi(const Superoperator& s) {
  const int din = s.dim_in();
  const int dout = s.dim_out();
  Eigen::MatrixXcd c(din * dout, din * dout);
  for (int j = 0; j < din; ++j) {
    for (int jp = 0; jp < din; ++jp) c.block(j * dout, jp * dout, dout, dout) = s(unit(din, j, jp));
  }
  return {std::move(c)};
}

bool is_cp(const Superoperator& s, double tol) {
  return hermitian_eigenvalues(choi(s).matrix, tol).minCoeff() >= -tol;
}

bool is_unital(const Superoperator& s, double tol) {
  Eigen::MatrixXcd image = s(Eigen::MatrixXcd::Identity(s.dim_in(), s.dim_in()));
  return (image - Eigen::MatrixXcd::Identity(s.dim_out(), s.dim_out())).cwiseAbs().maxCoeff() <= tol;
}

double max_distance(const Superoperator& a, const Superoperator& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) throw DimensionError("maps have different shapes");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

Superoperator qc_channel(const QuantumEvm& m) {
  std::vector<Eigen::MatrixXcd> effects;
  for (const auto& e : m.effects()) effects.push_back(e.to_complex());
  const int d = m.dim();
  return Superoperator::from_function(m.outcomes(), d, [&](const Eigen::MatrixXcd& a) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t j = 0; j < effects.size(); ++j) {
      out += a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) * effects[j];
    }
    return out;
  });
}

Superoperator markov_channel(const MarkovMatrix& p) {
  const auto rows = static_cast<int>(p.rows());
  const auto cols = static_cast<int>(p.cols());
  return Superoperator::from_function(rows, cols, [&](const Eigen::MatrixXcd& a) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(cols, cols);
    for (int k = 0; k < cols; ++k) {
      for (int j = 0; j < rows; ++j) out(k, k) += to_double(p(j, k)) * a(j, j);
    }
    return out;
  });
}

std::vector<Eigen::VectorXcd> entangled_basis(int d) {
  if (d < 1) throw ValidationError("entangled basis needs d >= 1");
  std::vector<Eigen::VectorXcd> out;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    for (int m = 0; m < d; ++m) {
      Eigen::VectorXcd eta = Eigen::VectorXcd::Zero(d * d);
      for (int j = 0; j < d; ++j) eta(j * d + (j + k) % d) = norm * root_of_unity(d, static_cast<long long>(j) * m);
      out.push_back(std::move(eta));
    }
  }
  return out;
}

Superoperator phi_from_blocks(const std::vector<Eigen::MatrixXcd>& mt, int d, double tol) {
  if (d < 1) throw ValidationError("phi_from_blocks needs d >= 1");
  if (static_cast<int>(mt.size()) != d * d) {
    throw DimensionError("expected " + std::to_string(d * d) + " effects, got " + std::to_string(mt.size()));
  }
  const auto total = mt.front().rows();
  if (total % d != 0 || total == 0) throw DimensionError("effect size is not a multiple of d");
  const int dj = static_cast<int>(total / d);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(total, total);
  for (const auto& e : mt) {
    if (e.rows() != total || e.cols() != total) throw DimensionError("effects differ in shape");
    if (hermitian_eigenvalues(e, tol).minCoeff() < -tol) throw ValidationError("effect is not positive semidefinite");
    sum += e;
  }
  if ((sum - Eigen::MatrixXcd::Identity(total, total)).cwiseAbs().maxCoeff() > tol) {
    throw ValidationError("effects do not sum to the identity");
  }

  // Block M^{(k,m)}_{r,r'}(a, b) = mt[k d + m](a d + r, b d + r').
  auto block_entry = [&](int k, int m, int r, int rp, int a, int b) {
    return mt[static_cast<std::size_t>(k * d + m)](a * d + r, b * d + rp);
  };
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dj * dj, d * d);
  for (int j = 0; j < d; ++j) {
    for (int jp = 0; jp < d; ++jp) {
      Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(dj, dj);
      for (int k = 0; k < d; ++k) {
        for (int m = 0; m < d; ++m) {
          const Complex phase = root_of_unity(d, static_cast<long long>(jp - j) * m);
          for (int a = 0; a < dj; ++a) {
            for (int b = 0; b < dj; ++b) image(a, b) += phase * block_entry(k, m, (j + k) % d, (jp + k) % d, a, b);
          }
        }
      }
      image /= static_cast<double>(d);
      s.col(j + jp * d) = vec(image);
    }
  }
  return Superoperator(d, dj, std::move(s));
}

bool verify_factorization(const Superoperator& gamma, const Superoperator& lambda, const Superoperator& phi,
                          double tol) {
  if (phi.dim_in() != gamma.dim_in() || phi.dim_out() != lambda.dim_in() || lambda.dim_out() != gamma.dim_out()) {
    throw DimensionError("verify_factorization: dimension chain does not match");
  }
  return max_distance(compose(lambda, phi), gamma) <= tol && is_cp(phi, tol) && is_unital(phi, tol);
}

double helstrom_binary(const Eigen::MatrixXcd& rho0, const Eigen::MatrixXcd& rho1,
                       const std::optional<Superoperator>& gamma) {
  Eigen::MatrixXcd r0 = rho0;
  Eigen::MatrixXcd r1 = rho1;
  if (gamma) {
    Superoperator pre = gamma->predual();
    r0 = pre(rho0);
    r1 = pre(rho1);
  }
  if (r0.rows() != r1.rows()) throw DimensionError("ensemble members differ in dimension");
  return (r0.trace().real() + r1.trace().real() + trace_norm_float(r0 - r1)) / 2.0;
}

double helstrom_binary(const QuantumEnsemble& e, const std::optional<Superoperator>& gamma) {
  if (e.size() != 2) throw ValidationError("Helstrom value needs exactly 2 members, got " + std::to_string(e.size()));
  return helstrom_binary(e.member(0).to_complex(), e.member(1).to_complex(), gamma);
}

}  // namespace postorder
