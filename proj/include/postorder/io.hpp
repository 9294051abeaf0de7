#pragma once

#include "postorder/channel.hpp"
#include "postorder/classical.hpp"
#include "postorder/poset.hpp"
#include "postorder/postproc.hpp"
#include "postorder/quantum.hpp"

#include <json.hpp>

#include <string>

namespace postorder::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws ValidationError on IO or syntax
/// errors.
Json read_file(const std::string& path);

/// Rationals are written as canonical strings; parsing also accepts JSON
/// integers.
Json to_json(const Rational& r);
Rational rational_from(const Json& j);

Json to_json(const RationalVector& v);
RationalVector vector_from(const Json& j);
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from(const Json& j);

/// {"classical": d}
Json to_json(const ClassicalSpace& s);
ClassicalSpace space_from(const Json& j);

/// {"space": ..., "effects": [[...], ...]}
Json to_json(const Evm& m);
Evm evm_from(const Json& j);

/// {"space": ..., "members": [[...], ...]}
Json to_json(const Ensemble& e);
Ensemble ensemble_from(const Json& j);

/// {"space": ..., "values": [...]}
Json to_json(const State& s);
State state_from(const Json& j);

Json to_json(const MarkovMatrix& p);
MarkovMatrix markov_from(const Json& j);

/// {"verdict": ..., "markov"?: forward witness, "markov_reverse"?: backward
/// witness, "ensembles"?: {"forward"?, "backward"?}}
Json to_json(const CompareVerdict& v);
CompareVerdict verdict_from(const Json& j);

/// Gaussian-rational matrices as rows of {"re": "p/q", "im": "p/q"}.
Json to_json(const GaussianMatrix& m);
GaussianMatrix gaussian_from(const Json& j);

/// {"dim": d, "effects": [matrix, ...]}
Json to_json(const QuantumEvm& m);
QuantumEvm povm_from(const Json& j);

/// {"dim": d, "members": [matrix, ...]}
Json to_json(const QuantumEnsemble& e);
QuantumEnsemble quantum_ensemble_from(const Json& j);

Json to_json(const QuantumVerdict& v);
QuantumVerdict quantum_verdict_from(const Json& j);

/// Complex doubles as rows of {"re": x, "im": y}.
Json to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd complex_from(const Json& j);

/// {"dim_in": d, "dim_out": d', "matrix": ...}
Json to_json(const Superoperator& s);
Superoperator superoperator_from(const Json& j);

/// {"elements": [...], "pairs": [[a, b], ...]} listing every strict pair
/// a < b. Parsing adds the reflexive pairs; the input must already be
/// transitive.
Json to_json(const FinitePoset& p);
FinitePoset poset_from(const Json& j);

/// Extensions as label lists from bottom to top.
Json to_json(const FinitePoset& p, const Realizer& r);
Realizer realizer_from(const FinitePoset& p, const Json& j);

/// Functions as maps label -> value.
Json to_json(const FinitePoset& p, const MonotoneFamily& f);
MonotoneFamily monotones_from(const FinitePoset& p, const Json& j);

}  // namespace postorder::io
