// postorder: command-line front end. Every command prints one JSON report on
// stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 domain error or rejected certificate, 2 usage error.

#include "postorder/channel.hpp"
#include "postorder/error.hpp"
#include "postorder/induced.hpp"
#include "postorder/io.hpp"
#include "postorder/main1.hpp"
#include "postorder/parallel.hpp"
#include "postorder/poset.hpp"
#include "postorder/postproc.hpp"
#include "postorder/quantum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#ifndef POSTORDER_VERSION
#define POSTORDER_VERSION "0.0.0"
#endif

using namespace postorder;
using io::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Space {
  bool quantum = false;
  int dim = 0;
};

Space parse_space(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--space must be classical:d or quantum:d");
  const std::string kind = text.substr(0, colon);
  if (kind != "classical" && kind != "quantum") throw UsageError("unknown space kind \"" + kind + "\"");
  int d = 0;
  try {
    std::size_t used = 0;
    d = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) d = 0;
  } catch (const std::exception&) {
    d = 0;
  }
  if (d < 1) throw UsageError("--space dimension must be a positive integer");
  return {kind == "quantum", d};
}

struct Options {
  std::string space_text;
  int max_k = 0;
  int max_den = 4;
  int max_members = 2;
  int max_n = 4;
  double tol = 1e-9;
  std::string dot_path;
  int threads = 0;
  bool timing = false;
  bool indicator = false;

  std::optional<Space> space() const {
    if (space_text.empty()) return std::nullopt;
    return parse_space(space_text);
  }

  int thread_count() const {
    int n = threads > 0 ? threads : 1;
    if (std::getenv("POSTORDER_THREADS") != nullptr) {
      n = threads > 0 ? std::min(n, threads_from_env()) : threads_from_env();
    }
    return std::max(1, n);
  }

  int dimension_bound(const FinitePoset& p) const { return max_k > 0 ? max_k : std::max(1, p.size()); }
};

void write_dot(const std::string& path, const FinitePoset& p, const std::string& name) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << to_dot(p, name);
}

bool is_quantum_item(const Json& j) { return j.is_object() && j.contains("dim"); }

void check_classical(const std::optional<Space>& s, const Evm& m) {
  if (!s) return;
  if (s->quantum) throw UsageError("this command expects a classical space");
  if (s->dim != m.space().dim()) {
    throw DimensionError("EVM lives on classical:" + std::to_string(m.space().dim()) + ", expected classical:" +
                         std::to_string(s->dim));
  }
}

void check_quantum(const std::optional<Space>& s, int dim) {
  if (!s) return;
  if (!s->quantum) throw UsageError("this command expects a quantum space");
  if (s->dim != dim) {
    throw DimensionError("POVM acts on quantum:" + std::to_string(dim) + ", expected quantum:" + std::to_string(s->dim));
  }
}

/// A list of measurements with labels, classical or quantum. Accepts either a
/// bare array or {"labels": [...], "items": [...]}.
struct ItemList {
  std::vector<std::string> labels;
  std::vector<Evm> classical;
  std::vector<QuantumEvm> quantum;
  bool is_quantum = false;

  std::size_t size() const { return labels.size(); }
};

ItemList load_items(const std::string& path, const std::optional<Space>& space) {
  const Json doc = io::read_file(path);
  const Json& items = doc.is_object() ? doc.at("items") : doc;
  if (!items.is_array() || items.empty()) throw ValidationError(path + ": expected a non-empty array of measurements");
  ItemList out;
  out.is_quantum = is_quantum_item(items.front());
  for (const auto& item : items) {
    if (is_quantum_item(item) != out.is_quantum) throw ValidationError(path + ": mixed classical and quantum items");
    if (out.is_quantum) {
      out.quantum.push_back(io::povm_from(item));
      check_quantum(space, out.quantum.back().dim());
    } else {
      out.classical.push_back(io::evm_from(item));
      check_classical(space, out.classical.back());
    }
  }
  if (doc.is_object() && doc.contains("labels")) {
    out.labels = doc.at("labels").get<std::vector<std::string>>();
    if (out.labels.size() != items.size()) throw ValidationError(path + ": one label per item required");
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) out.labels.push_back(std::to_string(i));
  }
  return out;
}

InducedPoset induce(const ItemList& items, int threads) {
  auto label = [&](int i) { return items.labels[static_cast<std::size_t>(i)]; };
  if (items.is_quantum) {
    return induced_poset(std::span<const QuantumEvm>(items.quantum),
                         [](const QuantumEvm& a, const QuantumEvm& b) { return qcompare(a, b).relation; }, label, threads);
  }
  return induced_poset(std::span<const Evm>(items.classical),
                       [](const Evm& a, const Evm& b) { return compare(a, b).relation; }, label, threads);
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

Json realizer_report(const FinitePoset& p, const DimensionResult& d) {
  Json out;
  out["dimension"] = d.dimension;
  out["realizer"] = io::to_json(p, d.realizer);
  return out;
}

// A command fills `report` and returns the exit status.
using Command = std::function<int(Json& report)>;

struct Verification {
  bool valid;
  std::string detail;
};

Verification verify_report(const Json& report, const std::vector<std::string>& inputs) {
  const std::string kind = report.at("command").get<std::string>();
  auto need = [&](std::size_t n) {
    if (inputs.size() != n) {
      throw UsageError("verify " + kind + " needs " + std::to_string(n) + " input file(s), got " +
                       std::to_string(inputs.size()));
    }
  };
  if (kind == "compare") {
    need(2);
    Evm m = io::evm_from(io::read_file(inputs[0]));
    Evm n = io::evm_from(io::read_file(inputs[1]));
    return {verify_verdict(io::verdict_from(report), m, n), "witnesses and ensembles checked exactly"};
  }
  if (kind == "qcompare") {
    need(2);
    QuantumEvm m = io::povm_from(io::read_file(inputs[0]));
    QuantumEvm n = io::povm_from(io::read_file(inputs[1]));
    return {verify_quantum_verdict(io::quantum_verdict_from(report), m, n), "witnesses and ensembles checked exactly"};
  }
  if (kind == "dim") {
    need(1);
    FinitePoset p = io::poset_from(io::read_file(inputs[0]));
    Realizer r = io::realizer_from(p, report.at("realizer"));
    const bool ok = realizes(p, r) && static_cast<int>(r.extensions.size()) == report.at("dimension").get<int>();
    return {ok, "realizer intersects to the order"};
  }
  if (kind == "monotones") {
    need(1);
    FinitePoset p = io::poset_from(io::read_file(inputs[0]));
    MonotoneFamily f = io::monotones_from(p, report.at("monotones"));
    bool ok = characterizes(p, f);
    if (report.contains("dimension")) ok = ok && static_cast<int>(f.functions.size()) == report.at("dimension").get<int>();
    return {ok, "family characterizes the order"};
  }
  if (kind == "main1") {
    need(0);
    const int n = report.at("n").get<int>();
    FinitePoset expected = standard_example(n);
    std::vector<Evm> evms;
    for (const auto& e : report.at("evms")) evms.push_back(io::evm_from(e));
    if (static_cast<int>(evms.size()) != expected.size()) return {false, "wrong number of EVMs"};
    int checked = 0;
    for (const auto& c : report.at("comparisons")) {
      const int i = expected.index_of(c.at("i").get<std::string>());
      const int j = expected.index_of(c.at("j").get<std::string>());
      CompareVerdict v = io::verdict_from(c);
      const auto& a = evms[static_cast<std::size_t>(i)];
      const auto& b = evms[static_cast<std::size_t>(j)];
      if (!verify_verdict(v, a, b) || is_le(v.relation) != expected.leq(i, j) || is_ge(v.relation) != expected.leq(j, i)) {
        return {false, "comparison (" + expected.label(i) + ", " + expected.label(j) + ") rejected"};
      }
      ++checked;
    }
    if (checked != n * (2 * n - 1)) return {false, "missing comparisons"};
    Realizer r = io::realizer_from(expected, report.at("realizer"));
    if (!realizes(expected, r) || static_cast<int>(r.extensions.size()) != report.at("dimension").get<int>()) {
      return {false, "realizer rejected"};
    }
    return {true, std::to_string(checked) + " comparisons and the realizer checked"};
  }
  throw UsageError("verify does not handle reports of kind \"" + kind + "\"");
}

std::string error_kind(const Error& e) {
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  if (dynamic_cast<const DimensionError*>(&e)) return "dimension";
  if (dynamic_cast<const BoundExceeded*>(&e)) return "bound-exceeded";
  if (dynamic_cast<const CertificateError*>(&e)) return "certificate";
  return "domain";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact post-processing order on finite-outcome measurements", "postorder"};
  app.set_version_flag("--version", POSTORDER_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--space", opt.space_text, "classical:d or quantum:d");
  app.add_option("--max-k", opt.max_k, "largest realizer size searched (0: poset size)")->check(CLI::NonNegativeNumber);
  app.add_option("--max-den", opt.max_den, "largest denominator for enumerate")->check(CLI::PositiveNumber);
  app.add_option("--max-members", opt.max_members, "largest ensemble size for enumerate");
  app.add_option("--max-n", opt.max_n, "largest n accepted by main1")->check(CLI::PositiveNumber);
  app.add_option("--tol", opt.tol, "float tolerance for channel checks")->check(CLI::NonNegativeNumber);
  app.add_option("--dot", opt.dot_path, "write the Hasse diagram to this file");
  app.add_option("--threads", opt.threads, "worker threads (capped by POSTORDER_THREADS)")->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", opt.timing, "add wall-clock seconds to the report");

  std::map<CLI::App*, std::pair<std::string, Command>> commands;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    return s;
  };
  auto file_arg = [](CLI::App* s, const std::string& name, std::string& target) {
    s->add_option(name, target)->required()->check(CLI::ExistingFile);
  };

  std::string path_a;
  std::string path_b;
  std::string path_c;
  int n_arg = 0;
  std::vector<std::string> extra;

  {
    auto* s = sub("compare", "decide the post-processing order between two EVMs");
    file_arg(s, "m", path_a);
    file_arg(s, "n", path_b);
    commands[s] = {"compare", [&](Json& r) {
                     Evm m = io::evm_from(io::read_file(path_a));
                     Evm n = io::evm_from(io::read_file(path_b));
                     check_classical(opt.space(), m);
                     check_classical(opt.space(), n);
                     merge(r, io::to_json(compare(m, n)));
                     return 0;
                   }};
  }
  {
    auto* s = sub("pg", "optimal guessing probability of an ensemble with an EVM");
    file_arg(s, "ensemble", path_a);
    file_arg(s, "m", path_b);
    commands[s] = {"pg", [&](Json& r) {
                     Ensemble e = io::ensemble_from(io::read_file(path_a));
                     Evm m = io::evm_from(io::read_file(path_b));
                     check_classical(opt.space(), m);
                     r["pg"] = io::to_json(pg(e, m));
                     return 0;
                   }};
  }
  {
    auto* s = sub("quotient", "partition measurements into equivalence classes");
    file_arg(s, "items", path_a);
    commands[s] = {"quotient", [&](Json& r) {
                     ItemList items = load_items(path_a, opt.space());
                     InducedPoset ip = induce(items, opt.thread_count());
                     Json classes = Json::array();
                     for (int c = 0; c < ip.poset.size(); ++c) {
                       Json members = Json::array();
                       for (std::size_t i = 0; i < items.size(); ++i) {
                         if (ip.class_of[i] == c) members.push_back(items.labels[i]);
                       }
                       classes.push_back(members);
                     }
                     r["classes"] = classes;
                     return 0;
                   }};
  }
  {
    auto* s = sub("dim", "order dimension with a realizer");
    file_arg(s, "poset", path_a);
    commands[s] = {"dim", [&](Json& r) {
                     FinitePoset p = io::poset_from(io::read_file(path_a));
                     merge(r, realizer_report(p, order_dimension(p, opt.dimension_bound(p))));
                     write_dot(opt.dot_path, p, "poset");
                     return 0;
                   }};
  }
  {
    auto* s = sub("monotones", "smallest characterizing family of monotones");
    file_arg(s, "poset", path_a);
    s->add_flag("--indicator", opt.indicator, "emit the indicator family of principal up-sets instead");
    commands[s] = {"monotones", [&](Json& r) {
                     FinitePoset p = io::poset_from(io::read_file(path_a));
                     if (opt.indicator) {
                       r["monotones"] = io::to_json(p, indicator_family(p));
                     } else {
                       MonotoneDimensionResult m = order_monotone_dimension(p, opt.dimension_bound(p));
                       r["dimension"] = m.dimension;
                       r["monotones"] = io::to_json(p, m.family);
                     }
                     return 0;
                   }};
  }
  {
    auto* s = sub("standard-example", "the standard example S_n");
    s->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
    commands[s] = {"standard-example", [&](Json& r) {
                     if (n_arg < 2) throw UsageError("standard-example needs n >= 2");
                     FinitePoset p = standard_example(n_arg);
                     r["n"] = n_arg;
                     r["poset"] = io::to_json(p);
                     write_dot(opt.dot_path, p, "S" + std::to_string(n_arg));
                     return 0;
                   }};
  }
  {
    auto* s = sub("main1", "realize S_n by 2n EVMs on a bit and check the induced poset");
    s->add_option("n", n_arg)->required();
    commands[s] = {"main1", [&](Json& r) {
                     if (n_arg < 3) throw UsageError("main1 needs n >= 3");
                     if (n_arg > opt.max_n) {
                       throw UsageError("main1 n=" + std::to_string(n_arg) + " exceeds --max-n " +
                                        std::to_string(opt.max_n));
                     }
                     Main1Result m = run_main1(n_arg, opt.thread_count());
                     const FinitePoset& p = m.embedding.expected;
                     r["n"] = n_arg;
                     Json evms = Json::array();
                     for (const auto& e : m.embedding.evms) evms.push_back(io::to_json(e));
                     r["labels"] = p.labels();
                     r["evms"] = evms;
                     Json comparisons = Json::array();
                     for (const auto& c : m.comparisons) {
                       Json entry;
                       entry["i"] = p.label(c.i);
                       entry["j"] = p.label(c.j);
                       merge(entry, io::to_json(c.verdict));
                       comparisons.push_back(entry);
                     }
                     r["comparisons"] = comparisons;
                     r["induced"] = io::to_json(m.induced.poset);
                     r["isomorphic"] = m.isomorphic;
                     merge(r, realizer_report(p, m.dimension));
                     write_dot(opt.dot_path, m.induced.poset, "S" + std::to_string(n_arg));
                     return 0;
                   }};
  }
  {
    auto* s = sub("induced-poset", "poset of equivalence classes under the post-processing order");
    file_arg(s, "items", path_a);
    commands[s] = {"induced-poset", [&](Json& r) {
                     ItemList items = load_items(path_a, opt.space());
                     InducedPoset ip = induce(items, opt.thread_count());
                     r["poset"] = io::to_json(ip.poset);
                     Json class_of = Json::object();
                     for (std::size_t i = 0; i < items.size(); ++i) class_of[items.labels[i]] = ip.poset.label(ip.class_of[i]);
                     r["class_of"] = class_of;
                     write_dot(opt.dot_path, ip.poset, "induced");
                     return 0;
                   }};
  }
  {
    auto* s = sub("embed-check", "check that measurements realize a poset element by element");
    file_arg(s, "poset", path_a);
    file_arg(s, "items", path_b);
    commands[s] = {"embed-check", [&](Json& r) {
                     FinitePoset p = io::poset_from(io::read_file(path_a));
                     ItemList items = load_items(path_b, opt.space());
                     bool ok = false;
                     if (items.is_quantum) {
                       ok = check_embedding(p, std::span<const QuantumEvm>(items.quantum),
                                            [](const QuantumEvm& a, const QuantumEvm& b) { return qcompare(a, b).relation; });
                     } else {
                       ok = check_embedding(p, std::span<const Evm>(items.classical),
                                            [](const Evm& a, const Evm& b) { return compare(a, b).relation; });
                     }
                     r["embedding"] = ok;
                     return 0;
                   }};
  }
  {
    auto* s = sub("enumerate", "enumerate rational ensembles, or search them for a separator of two EVMs");
    s->add_option("files", extra, "optional m.json n.json")->check(CLI::ExistingFile);
    commands[s] = {"enumerate", [&](Json& r) {
                     if (opt.max_members < 1) throw UsageError("--max-members must be at least 1");
                     if (!extra.empty()) {
                       if (extra.size() != 2) throw UsageError("enumerate takes zero or two EVM files");
                       Evm m = io::evm_from(io::read_file(extra[0]));
                       Evm n = io::evm_from(io::read_file(extra[1]));
                       check_classical(opt.space(), m);
                       auto e = find_enumerated_separator(m, n, opt.max_members, opt.max_den);
                       r["separator"] = e ? io::to_json(*e) : Json(nullptr);
                       if (e) {
                         r["pg_m"] = io::to_json(pg(*e, m));
                         r["pg_n"] = io::to_json(pg(*e, n));
                       }
                       return 0;
                     }
                     auto space = opt.space();
                     if (!space || space->quantum) throw UsageError("enumerate needs --space classical:d");
                     Json list = Json::array();
                     for (const auto& e : enumerate_ensembles(ClassicalSpace(space->dim), opt.max_members, opt.max_den)) {
                       list.push_back(io::to_json(e));
                     }
                     r["count"] = list.size();
                     r["ensembles"] = list;
                     return 0;
                   }};
  }
  {
    auto* s = sub("cbit-map", "push a bit EVM through the unital positive map defined by a0");
    file_arg(s, "a0", path_a);
    file_arg(s, "m", path_b);
    commands[s] = {"cbit-map", [&](Json& r) {
                     RationalVector a0 = io::vector_from(io::read_file(path_a));
                     Evm m = io::evm_from(io::read_file(path_b));
                     ClassicalSpace target(static_cast<int>(a0.size()));
                     if (auto space = opt.space()) {
                       if (space->quantum || space->dim != target.dim()) {
                         throw DimensionError("a0 has " + std::to_string(a0.size()) + " entries, --space disagrees");
                       }
                     }
                     UnitalPositiveMap psi = cbit_embedding(a0, target);
                     r["a"] = io::to_json(psi.a());
                     r["a_prime"] = io::to_json(psi.a_prime());
                     r["image"] = io::to_json(apply_map(psi, m));
                     return 0;
                   }};
  }
  {
    auto* s = sub("qcompare", "decide the post-processing order between two POVMs");
    file_arg(s, "m", path_a);
    file_arg(s, "n", path_b);
    commands[s] = {"qcompare", [&](Json& r) {
                     QuantumEvm m = io::povm_from(io::read_file(path_a));
                     QuantumEvm n = io::povm_from(io::read_file(path_b));
                     check_quantum(opt.space(), m.dim());
                     check_quantum(opt.space(), n.dim());
                     merge(r, io::to_json(qcompare(m, n)));
                     return 0;
                   }};
  }
  {
    auto* s = sub("qpg", "guessing probability of a quantum ensemble with a POVM");
    file_arg(s, "ensemble", path_a);
    file_arg(s, "m", path_b);
    commands[s] = {"qpg", [&](Json& r) {
                     QuantumEnsemble e = io::quantum_ensemble_from(io::read_file(path_a));
                     QuantumEvm m = io::povm_from(io::read_file(path_b));
                     check_quantum(opt.space(), m.dim());
                     r["qpg"] = io::to_json(qpg(e, m));
                     if (e.size() == 2) r["helstrom"] = helstrom_binary(e);
                     return 0;
                   }};
  }
  {
    auto* s = sub("qc-channel", "the quantum-classical channel of a POVM");
    file_arg(s, "m", path_a);
    commands[s] = {"qc-channel", [&](Json& r) {
                     QuantumEvm m = io::povm_from(io::read_file(path_a));
                     check_quantum(opt.space(), m.dim());
                     Superoperator g = qc_channel(m);
                     r["channel"] = io::to_json(g);
                     r["cp"] = is_cp(g, opt.tol);
                     r["unital"] = is_unital(g, opt.tol);
                     return 0;
                   }};
  }
  {
    auto* s = sub("phi", "build a channel from d*d blocks indexed by the entangled basis");
    file_arg(s, "blocks", path_a);
    commands[s] = {"phi", [&](Json& r) {
                     const Json doc = io::read_file(path_a);
                     const int d = doc.at("dim").get<int>();
                     check_quantum(opt.space(), d);
                     std::vector<Eigen::MatrixXcd> mt;
                     for (const auto& b : doc.at("blocks")) mt.push_back(io::complex_from(b));
                     Superoperator phi = phi_from_blocks(mt, d, opt.tol);
                     r["channel"] = io::to_json(phi);
                     r["cp"] = is_cp(phi, opt.tol);
                     r["unital"] = is_unital(phi, opt.tol);
                     return 0;
                   }};
  }
  {
    auto* s = sub("verify-factorization", "check gamma = lambda o phi with phi unital and CP");
    file_arg(s, "gamma", path_a);
    file_arg(s, "lambda", path_b);
    file_arg(s, "phi", path_c);
    commands[s] = {"verify-factorization", [&](Json& r) {
                     Superoperator gamma = io::superoperator_from(io::read_file(path_a));
                     Superoperator lambda = io::superoperator_from(io::read_file(path_b));
                     Superoperator phi = io::superoperator_from(io::read_file(path_c));
                     const bool ok = verify_factorization(gamma, lambda, phi, opt.tol);
                     r["valid"] = ok;
                     return ok ? 0 : 1;
                   }};
  }
  {
    auto* s = sub("verify", "re-check the certificates in a report without solving anything");
    file_arg(s, "report", path_a);
    s->add_option("inputs", extra, "the input files the report was computed from")->check(CLI::ExistingFile);
    commands[s] = {"verify", [&](Json& r) {
                     const Json report = io::read_file(path_a);
                     if (!report.is_object() || !report.contains("command")) {
                       throw ValidationError(path_a + " is not a report");
                     }
                     Verification v = verify_report(report, extra);
                     r["verified"] = report.at("command");
                     r["valid"] = v.valid;
                     r["detail"] = v.detail;
                     return v.valid ? 0 : 1;
                   }};
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const auto& [name, run] = commands.at(chosen);
  Json report;
  report["command"] = name;
  report["version"] = POSTORDER_VERSION;
  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    status = run(report);
  } catch (const UsageError& e) {
    std::cerr << "postorder " << name << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    report["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
    std::cerr << "postorder " << name << ": " << e.what() << "\n";
    status = 1;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
    std::cerr << "postorder " << name << ": " << e.what() << "\n";
    status = 1;
  }
  if (opt.timing) {
    report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  }
  std::cout << report.dump(2) << "\n";
  return status;
}
