#include "postorder/quantum.hpp"

#include "postorder/error.hpp"
#include "postorder/psd.hpp"

namespace postorder {

namespace {

void check_square(const GaussianMatrix& h, int dim, const std::string& what) {
  if (h.rows() != dim || h.cols() != dim) {
    throw DimensionError(what + " is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) + ", expected " +
                         std::to_string(dim) + "x" + std::to_string(dim));
  }
}

void check_psd(const GaussianMatrix& h, const std::string& what) {
  if (!h.is_hermitian()) throw ValidationError(what + " is not Hermitian");
  if (!psd_exact(h)) throw ValidationError(what + " is not positive semidefinite");
}

EffectCoordinates coordinates(const QuantumEvm& m) {
  EffectCoordinates out;
  for (const auto& e : m.effects()) out.push_back(hermitian_coordinates(e));
  return out;
}

// Sum over a row of |Re| + |Im| bounds the spectral radius from above.
Rational gershgorin_bound(const GaussianMatrix& h) {
  Rational best(0);
  for (Eigen::Index a = 0; a < h.rows(); ++a) {
    Rational row(0);
    for (Eigen::Index b = 0; b < h.cols(); ++b) row += abs(h.real()(a, b)) + abs(h.imag()(a, b));
    if (row > best) best = row;
  }
  return best;
}

// Shifts the Hermitian functionals by c * 1 so that all are PSD, then
// normalizes total trace to one. The shift adds c * d to qpg of every POVM.
QuantumEnsemble ensemble_from_functionals(int dim, const SeparatingFunctionals& f) {
  std::vector<GaussianMatrix> hs;
  bool all_psd = true;
  for (const auto& y : f.y) {
    hs.push_back(hermitian_from_dual(y, dim));
    if (!psd_exact(hs.back())) all_psd = false;
  }
  Rational shift(0);
  if (!all_psd) {
    for (const auto& h : hs) {
      Rational b = gershgorin_bound(h);
      if (b > shift) shift = b;
    }
  }
  Rational mass(0);
  for (auto& h : hs) {
    h = h + shift * GaussianMatrix::identity(dim);
    mass += h.trace().re;
  }
  if (mass <= 0) throw CertificateError("separating functionals vanish after shifting");
  const Rational inv = Rational(1) / mass;
  for (auto& h : hs) h = inv * h;
  return QuantumEnsemble(dim, std::move(hs));
}

}  // namespace

QuantumEvm::QuantumEvm(int dim, std::vector<GaussianMatrix> effects) : dim_(dim), effects_(std::move(effects)) {
  if (dim_ < 1) throw ValidationError("POVM dimension must be at least 1");
  if (effects_.empty()) throw ValidationError("POVM needs at least one effect");
  GaussianMatrix sum = GaussianMatrix::zero(dim_, dim_);
  for (std::size_t k = 0; k < effects_.size(); ++k) {
    const std::string what = "effect " + std::to_string(k);
    check_square(effects_[k], dim_, what);
    check_psd(effects_[k], what);
    sum = sum + effects_[k];
  }
  if (!(sum == GaussianMatrix::identity(dim_))) throw ValidationError("effects do not sum to the identity");
}

QuantumEnsemble::QuantumEnsemble(int dim, std::vector<GaussianMatrix> members)
    : dim_(dim), members_(std::move(members)) {
  if (dim_ < 1) throw ValidationError("ensemble dimension must be at least 1");
  if (members_.empty()) throw ValidationError("ensemble needs at least one member");
  Rational total(0);
  for (std::size_t k = 0; k < members_.size(); ++k) {
    const std::string what = "ensemble member " + std::to_string(k);
    check_square(members_[k], dim_, what);
    check_psd(members_[k], what);
    total += members_[k].trace().re;
  }
  if (total != 1) throw ValidationError("ensemble traces sum to " + to_string(total) + ", not 1");
}

QuantumEvm make_povm(int dim, std::vector<GaussianMatrix> effects) { return QuantumEvm(dim, std::move(effects)); }

RationalVector hermitian_coordinates(const GaussianMatrix& h) {
  const Eigen::Index d = h.rows();
  RationalVector out(d * d);
  Eigen::Index pos = 0;
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = a; b < d; ++b) out(pos++) = h.real()(a, b);
  }
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = a + 1; b < d; ++b) out(pos++) = h.imag()(a, b);
  }
  return out;
}

GaussianMatrix hermitian_from_dual(const RationalVector& y, int dim) {
  if (y.size() != static_cast<Eigen::Index>(dim) * dim) throw DimensionError("dual vector has wrong length");
  GaussianMatrix h = GaussianMatrix::zero(dim, dim);
  const Rational half(1, 2);
  Eigen::Index pos = 0;
  for (int a = 0; a < dim; ++a) {
    for (int b = a; b < dim; ++b) {
      if (a == b) {
        h.set(a, a, {y(pos)});
      } else {
        h.set(a, b, {y(pos) * half, Rational(0)});
        h.set(b, a, {y(pos) * half, Rational(0)});
      }
      ++pos;
    }
  }
  // tr(h n) picks up 2 Re(h_ba n_ab) off the diagonal; with
  // h_ab = (y_re + i y_im)/2 this is y_re Re n_ab + y_im Im n_ab.
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      GaussianRational ab = h(a, b);
      h.set(a, b, {ab.re, y(pos) * half});
      h.set(b, a, {ab.re, -(y(pos) * half)});
      ++pos;
    }
  }
  return h;
}

Rational qpg(const QuantumEnsemble& e, const QuantumEvm& m) {
  if (e.dim() != m.dim()) throw DimensionError("ensemble and POVM have different dimensions");
  Rational total(0);
  for (const auto& effect : m.effects()) {
    Rational best = trace_product(effect, e.member(0));
    for (int k = 1; k < e.size(); ++k) {
      Rational v = trace_product(effect, e.member(k));
      if (v > best) best = v;
    }
    total += best;
  }
  return total;
}

std::variant<MarkovMatrix, QuantumEnsemble> quantum_post_processing_evidence(const QuantumEvm& m,
                                                                             const QuantumEvm& n) {
  if (m.dim() != n.dim()) throw DimensionError("POVMs have different dimensions");
  MarkovSearch search = find_markov(coordinates(m), coordinates(n));
  if (auto* witness = std::get_if<MarkovMatrix>(&search)) return *witness;
  QuantumEnsemble e = ensemble_from_functionals(m.dim(), std::get<SeparatingFunctionals>(search));
  if (!(qpg(e, m) > qpg(e, n))) throw CertificateError("quantum separating ensemble shows no strict gap");
  return e;
}

QuantumVerdict qcompare(const QuantumEvm& m, const QuantumEvm& n) {
  auto forward = quantum_post_processing_evidence(m, n);
  auto backward = quantum_post_processing_evidence(n, m);
  Relation rel = relation_from(std::holds_alternative<MarkovMatrix>(forward),
                               std::holds_alternative<MarkovMatrix>(backward));
  return QuantumVerdict{rel, std::move(forward), std::move(backward)};
}

bool verify_quantum_verdict(const QuantumVerdict& v, const QuantumEvm& m, const QuantumEvm& n) {
  if (m.dim() != n.dim()) return false;
  auto check = [](const std::variant<MarkovMatrix, QuantumEnsemble>& ev, const QuantumEvm& a, const QuantumEvm& b) {
    if (const auto* p = std::get_if<MarkovMatrix>(&ev)) return is_markov_witness(*p, coordinates(a), coordinates(b));
    const auto& e = std::get<QuantumEnsemble>(ev);
    return e.dim() == a.dim() && qpg(e, a) > qpg(e, b);
  };
  if (!check(v.forward, m, n) || !check(v.backward, n, m)) return false;
  return v.relation == relation_from(std::holds_alternative<MarkovMatrix>(v.forward),
                                     std::holds_alternative<MarkovMatrix>(v.backward));
}

}  // namespace postorder
