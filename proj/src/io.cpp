#include "postorder/io.hpp"

#include "postorder/error.hpp"

#include <fstream>
#include <sstream>

namespace postorder::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ValidationError(std::string("expected an object with field \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) throw ValidationError(std::string("missing field \"") + name + "\"");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  return j;
}

int integer_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  return j.get<int>();
}

double double_from(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  throw ValidationError("expected a number");
}

std::vector<RationalVector> vectors_from(const Json& j, const char* what) {
  std::vector<RationalVector> out;
  for (const auto& row : array(j, what)) out.push_back(vector_from(row));
  return out;
}

Json vectors_to_json(const std::vector<RationalVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

template <class EnsembleT>
Json verdict_json(const BasicVerdict<EnsembleT>& v) {
  Json out;
  out["verdict"] = std::string(to_string(v.relation));
  if (const auto* p = v.forward_witness()) out["markov"] = to_json(*p);
  if (const auto* p = v.backward_witness()) out["markov_reverse"] = to_json(*p);
  if (v.forward_ensemble() || v.backward_ensemble()) {
    Json ens = Json::object();
    if (const auto* e = v.forward_ensemble()) ens["forward"] = to_json(*e);
    if (const auto* e = v.backward_ensemble()) ens["backward"] = to_json(*e);
    out["ensembles"] = std::move(ens);
  }
  return out;
}

Relation relation_from_text(const std::string& s) {
  if (s == "less") return Relation::Less;
  if (s == "greater") return Relation::Greater;
  if (s == "equivalent") return Relation::Equivalent;
  if (s == "incomparable") return Relation::Incomparable;
  throw ValidationError("unknown verdict \"" + s + "\"");
}

template <class EnsembleT, class Parse>
BasicVerdict<EnsembleT> verdict_parse(const Json& j, Parse&& parse_ensemble) {
  const Relation rel = relation_from_text(field(j, "verdict").get<std::string>());
  auto side = [&](const char* markov_key, const char* ens_key) -> std::variant<MarkovMatrix, EnsembleT> {
    if (j.contains(markov_key)) return markov_from(j.at(markov_key));
    if (j.contains("ensembles") && j.at("ensembles").contains(ens_key)) return parse_ensemble(j.at("ensembles").at(ens_key));
    throw ValidationError(std::string("verdict carries no evidence for the ") + ens_key + " direction");
  };
  auto forward = side("markov", "forward");
  auto backward = side("markov_reverse", "backward");
  return BasicVerdict<EnsembleT>{rel, std::move(forward), std::move(backward)};
}

std::vector<GaussianMatrix> gaussians_from(const Json& j, const char* what) {
  std::vector<GaussianMatrix> out;
  for (const auto& m : array(j, what)) out.push_back(gaussian_from(m));
  return out;
}

int label_index(const FinitePoset& p, const Json& j) {
  if (!j.is_string()) throw ValidationError("element labels must be strings");
  return p.index_of(j.get<std::string>());
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ValidationError("rationals must be strings \"p/q\" or integers, got " + j.dump());
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

RationalVector vector_from(const Json& j) {
  array(j, "vector");
  RationalVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from(j[i]);
  return v;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(RationalVector(m.row(r).transpose())));
  return out;
}

RationalMatrix matrix_from(const Json& j) {
  auto rows = vectors_from(j, "matrix");
  if (rows.empty()) throw ValidationError("matrix must have at least one row");
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ValidationError("matrix rows differ in length");
    m.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  }
  return m;
}

Json to_json(const ClassicalSpace& s) { return Json{{"classical", s.dim()}}; }

ClassicalSpace space_from(const Json& j) { return ClassicalSpace(integer_from(field(j, "classical"), "classical")); }

Json to_json(const Evm& m) {
  Json out;
  out["space"] = to_json(m.space());
  out["effects"] = vectors_to_json(m.effects());
  return out;
}

Evm evm_from(const Json& j) { return Evm(space_from(field(j, "space")), vectors_from(field(j, "effects"), "effects")); }

Json to_json(const Ensemble& e) {
  Json out;
  out["space"] = to_json(e.space());
  out["members"] = vectors_to_json(e.members());
  return out;
}

Ensemble ensemble_from(const Json& j) {
  return Ensemble(space_from(field(j, "space")), vectors_from(field(j, "members"), "members"));
}

Json to_json(const State& s) {
  Json out;
  out["space"] = to_json(s.space());
  out["values"] = to_json(s.values());
  return out;
}

State state_from(const Json& j) { return State(space_from(field(j, "space")), vector_from(field(j, "values"))); }

Json to_json(const MarkovMatrix& p) { return to_json(p.matrix()); }

MarkovMatrix markov_from(const Json& j) { return MarkovMatrix(matrix_from(j)); }

Json to_json(const CompareVerdict& v) { return verdict_json(v); }

CompareVerdict verdict_from(const Json& j) {
  return verdict_parse<Ensemble>(j, [](const Json& e) { return ensemble_from(e); });
}

Json to_json(const GaussianMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(Json{{"re", to_json(m.real()(r, c))}, {"im", to_json(m.imag()(r, c))}});
    }
    out.push_back(std::move(row));
  }
  return out;
}

GaussianMatrix gaussian_from(const Json& j) {
  array(j, "matrix");
  if (j.empty()) throw ValidationError("matrix must have at least one row");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(array(j[0], "matrix row").size());
  GaussianMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = array(j[static_cast<std::size_t>(r)], "matrix row");
    if (static_cast<Eigen::Index>(row.size()) != cols) throw ValidationError("matrix rows differ in length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& entry = row[static_cast<std::size_t>(c)];
      if (entry.is_object()) {
        Rational re = entry.contains("re") ? rational_from(entry.at("re")) : Rational(0);
        Rational im = entry.contains("im") ? rational_from(entry.at("im")) : Rational(0);
        m.set(r, c, {re, im});
      } else {
        m.set(r, c, {rational_from(entry)});
      }
    }
  }
  return m;
}

Json to_json(const QuantumEvm& m) {
  Json out;
  out["dim"] = m.dim();
  Json effects = Json::array();
  for (const auto& e : m.effects()) effects.push_back(to_json(e));
  out["effects"] = std::move(effects);
  return out;
}

QuantumEvm povm_from(const Json& j) {
  return QuantumEvm(integer_from(field(j, "dim"), "dim"), gaussians_from(field(j, "effects"), "effects"));
}

Json to_json(const QuantumEnsemble& e) {
  Json out;
  out["dim"] = e.dim();
  Json members = Json::array();
  for (const auto& m : e.members()) members.push_back(to_json(m));
  out["members"] = std::move(members);
  return out;
}

QuantumEnsemble quantum_ensemble_from(const Json& j) {
  return QuantumEnsemble(integer_from(field(j, "dim"), "dim"), gaussians_from(field(j, "members"), "members"));
}

Json to_json(const QuantumVerdict& v) { return verdict_json(v); }

QuantumVerdict quantum_verdict_from(const Json& j) {
  return verdict_parse<QuantumEnsemble>(j, [](const Json& e) { return quantum_ensemble_from(e); });
}

Json to_json(const Eigen::MatrixXcd& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json{{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
    out.push_back(std::move(row));
  }
  return out;
}

Eigen::MatrixXcd complex_from(const Json& j) {
  array(j, "matrix");
  if (j.empty()) throw ValidationError("matrix must have at least one row");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(array(j[0], "matrix row").size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = array(j[static_cast<std::size_t>(r)], "matrix row");
    if (static_cast<Eigen::Index>(row.size()) != cols) throw ValidationError("matrix rows differ in length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& entry = row[static_cast<std::size_t>(c)];
      if (entry.is_object()) {
        const double re = entry.contains("re") ? double_from(entry.at("re")) : 0.0;
        const double im = entry.contains("im") ? double_from(entry.at("im")) : 0.0;
        m(r, c) = {re, im};
      } else {
        m(r, c) = double_from(entry);
      }
    }
  }
  return m;
}

Json to_json(const Superoperator& s) {
  Json out;
  out["dim_in"] = s.dim_in();
  out["dim_out"] = s.dim_out();
  out["matrix"] = to_json(s.matrix());
  return out;
}

Superoperator superoperator_from(const Json& j) {
  return Superoperator(integer_from(field(j, "dim_in"), "dim_in"), integer_from(field(j, "dim_out"), "dim_out"),
                       complex_from(field(j, "matrix")));
}

Json to_json(const FinitePoset& p) {
  Json out;
  out["elements"] = p.labels();
  Json pairs = Json::array();
  for (auto [a, b] : p.strict_pairs()) pairs.push_back(Json::array({p.label(a), p.label(b)}));
  out["pairs"] = std::move(pairs);
  return out;
}

FinitePoset poset_from(const Json& j) {
  std::vector<std::string> labels;
  for (const auto& e : array(field(j, "elements"), "elements")) {
    if (!e.is_string()) throw ValidationError("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("pairs")) {
    for (const auto& pr : array(j.at("pairs"), "pairs")) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string()) {
        throw ValidationError("each pair must be two labels, got " + pr.dump());
      }
      pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }
  return make_poset(std::move(labels), pairs);
}

Json to_json(const FinitePoset& p, const Realizer& r) {
  Json out = Json::array();
  for (const auto& l : r.extensions) {
    Json ext = Json::array();
    for (int x : l.order) ext.push_back(p.label(x));
    out.push_back(std::move(ext));
  }
  return out;
}

Realizer realizer_from(const FinitePoset& p, const Json& j) {
  Realizer r;
  for (const auto& ext : array(j, "realizer")) {
    LinearExtension l;
    for (const auto& x : array(ext, "extension")) l.order.push_back(label_index(p, x));
    r.extensions.push_back(std::move(l));
  }
  return r;
}

Json to_json(const FinitePoset& p, const MonotoneFamily& f) {
  Json out = Json::array();
  for (const auto& fn : f.functions) {
    Json m = Json::object();
    for (int x = 0; x < p.size(); ++x) m[p.label(x)] = to_json(fn(x));
    out.push_back(std::move(m));
  }
  return out;
}

MonotoneFamily monotones_from(const FinitePoset& p, const Json& j) {
  MonotoneFamily f;
  for (const auto& m : array(j, "monotones")) {
    if (!m.is_object()) throw ValidationError("each monotone must map labels to values");
    RationalVector fn(p.size());
    for (int x = 0; x < p.size(); ++x) fn(x) = rational_from(field(m, p.label(x).c_str()));
    f.functions.push_back(std::move(fn));
  }
  return f;
}

}  // namespace postorder::io
