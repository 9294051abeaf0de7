#include "postorder/poset.hpp"

#include "postorder/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace postorder {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::string quote_label(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), up_(labels_.size(), 0) {
  const int n = size();
  if (n > kMaxElements) throw ValidationError("poset has more than 64 elements");
  if (static_cast<int>(leq.size()) != n) throw DimensionError("relation matrix does not match element count");
  {
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw ValidationError("duplicate element label " + quote_label(*dup));
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(leq[static_cast<std::size_t>(i)].size()) != n) {
      throw DimensionError("relation matrix is not square");
    }
    for (int j = 0; j < n; ++j) {
      if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) up_[static_cast<std::size_t>(i)] |= bit(j);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!this->leq(i, i)) throw ValidationError("reflexivity violated: (" + label(i) + ", " + label(i) + ") missing");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (this->leq(i, j) && this->leq(j, i)) {
        throw ValidationError("antisymmetry violated: " + label(i) + " <= " + label(j) + " and " + label(j) +
                              " <= " + label(i));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!this->leq(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (this->leq(b, c) && !this->leq(a, c)) {
          throw ValidationError("transitivity violated: (" + label(a) + ", " + label(b) + ", " + label(c) +
                                ") has " + label(a) + " <= " + label(b) + " <= " + label(c) + " but not " +
                                label(a) + " <= " + label(c));
        }
      }
    }
  }
}

int FinitePoset::index_of(const std::string& l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  if (it == labels_.end()) throw ValidationError("unknown element " + quote_label(l));
  return static_cast<int>(it - labels_.begin());
}

std::vector<std::vector<bool>> FinitePoset::relation() const {
  const int n = size();
  std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = leq(i, j);
  }
  return r;
}

bool FinitePoset::is_total() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (!comparable(i, j)) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (less(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : strict_pairs()) {
    bool cover = true;
    for (int k = 0; k < size() && cover; ++k) {
      if (less(i, k) && less(k, j)) cover = false;
    }
    if (cover) out.emplace_back(i, j);
  }
  return out;
}

FinitePoset make_poset(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = labels.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], i).second) throw ValidationError("duplicate element label " + quote_label(labels[i]));
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw ValidationError("unknown element " + quote_label(a));
    if (ib == index.end()) throw ValidationError("unknown element " + quote_label(b));
    leq[ia->second][ib->second] = true;
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset standard_example(int n) {
  if (n < 2) throw ValidationError("standard example needs n >= 2, got " + std::to_string(n));
  std::vector<std::string> labels;
  for (int j = 0; j < n; ++j) labels.push_back("a" + std::to_string(j));
  for (int j = 0; j < n; ++j) labels.push_back("b" + std::to_string(j));
  const auto size = static_cast<std::size_t>(2 * n);
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i) leq[i][i] = true;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j != k) leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(n + k)] = true;
    }
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    for (int j = i; j < n; ++j) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset antichain(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

std::vector<int> LinearExtension::ranks() const {
  std::vector<int> r(order.size(), -1);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const int e = order[pos];
    if (e < 0 || static_cast<std::size_t>(e) >= order.size() || r[static_cast<std::size_t>(e)] >= 0) {
      throw ValidationError("linear extension is not a permutation of the elements");
    }
    r[static_cast<std::size_t>(e)] = static_cast<int>(pos);
  }
  return r;
}

bool is_linear_extension(const FinitePoset& p, const LinearExtension& l) {
  if (static_cast<int>(l.order.size()) != p.size()) throw DimensionError("linear extension has wrong element count");
  std::vector<int> rank;
  try {
    rank = l.ranks();
  } catch (const ValidationError&) {
    return false;
  }
  for (auto [i, j] : p.strict_pairs()) {
    if (rank[static_cast<std::size_t>(i)] > rank[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

bool realizes(const FinitePoset& p, const Realizer& r) {
  if (r.extensions.empty()) return false;
  std::vector<std::vector<int>> ranks;
  for (const auto& l : r.extensions) {
    if (!is_linear_extension(p, l)) return false;
    ranks.push_back(l.ranks());
  }
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      bool all = std::all_of(ranks.begin(), ranks.end(), [&](const std::vector<int>& rk) {
        return rk[static_cast<std::size_t>(i)] < rk[static_cast<std::size_t>(j)];
      });
      if (all != p.less(i, j)) return false;
    }
  }
  return true;
}

bool is_monotone(const FinitePoset& p, const RationalVector& f) {
  if (f.size() != p.size()) throw DimensionError("function length does not match element count");
  for (auto [i, j] : p.strict_pairs()) {
    if (f(i) > f(j)) return false;
  }
  return true;
}

bool characterizes(const FinitePoset& p, const MonotoneFamily& family) {
  for (const auto& f : family.functions) {
    if (f.size() != p.size()) throw DimensionError("function length does not match element count");
  }
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      bool all = std::all_of(family.functions.begin(), family.functions.end(),
                             [&](const RationalVector& f) { return f(i) <= f(j); });
      if (all != p.leq(i, j)) return false;
    }
  }
  return true;
}

RationalVector indicator_monotone(const FinitePoset& p, int a) {
  if (a < 0 || a >= p.size()) throw ValidationError("indicator base element out of range");
  RationalVector f(p.size());
  for (int x = 0; x < p.size(); ++x) f(x) = p.leq(a, x) ? Rational(1) : Rational(0);
  return f;
}

MonotoneFamily indicator_family(const FinitePoset& p) {
  MonotoneFamily fam;
  for (int a = 0; a < p.size(); ++a) fam.functions.push_back(indicator_monotone(p, a));
  return fam;
}

MonotoneFamily realizer_to_monotones(const Realizer& r) {
  MonotoneFamily fam;
  for (const auto& l : r.extensions) {
    std::vector<int> rank = l.ranks();
    RationalVector f(static_cast<Eigen::Index>(rank.size()));
    for (std::size_t x = 0; x < rank.size(); ++x) f(static_cast<Eigen::Index>(x)) = rank[x];
    fam.functions.push_back(std::move(f));
  }
  return fam;
}

std::vector<std::pair<int, int>> critical_pairs(const FinitePoset& p) {
  const int n = p.size();
  std::vector<std::uint64_t> down(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p.leq(j, i)) down[static_cast<std::size_t>(i)] |= bit(j);
    }
  }
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || p.comparable(x, y)) continue;
      std::uint64_t dx = down[static_cast<std::size_t>(x)] & ~bit(x);
      std::uint64_t dy = down[static_cast<std::size_t>(y)];
      std::uint64_t uy = p.up_set(y) & ~bit(y);
      std::uint64_t ux = p.up_set(x);
      if ((dx & ~dy) == 0 && (uy & ~ux) == 0) out.emplace_back(x, y);
    }
  }
  return out;
}

namespace {

// Per-slot reflexive-transitive closure of the strict order plus the
// reversals assigned so far.
using Closure = std::vector<std::uint64_t>;

class RealizerSearch {
public:
  RealizerSearch(const FinitePoset& p, int k) : p_(p), k_(k), pairs_(critical_pairs(p)) {
    Closure base(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) base[static_cast<std::size_t>(i)] = p.up_set(i);
    slots_.assign(static_cast<std::size_t>(k), base);
  }

  bool run() { return assign(0, 0); }

  Realizer realizer() const {
    Realizer r;
    for (const auto& c : slots_) r.extensions.push_back(least_extension(c));
    return r;
  }

private:
  // Places y below x in the slot; false if x <= y already holds there.
  static bool try_reverse(Closure& c, int x, int y) {
    if ((c[static_cast<std::size_t>(x)] >> y) & 1U) return false;
    const std::uint64_t above_x = c[static_cast<std::size_t>(x)];
    for (std::size_t u = 0; u < c.size(); ++u) {
      if ((c[u] >> y) & 1U) c[u] |= above_x;
    }
    return true;
  }

  bool assign(std::size_t idx, int used) {
    if (idx == pairs_.size()) return true;
    auto [x, y] = pairs_[idx];
    // New slots are opened only in index order, which removes the k!
    // relabelings of each assignment.
    const int limit = used < k_ ? used + 1 : k_;
    for (int s = 0; s < limit; ++s) {
      Closure saved = slots_[static_cast<std::size_t>(s)];
      if (try_reverse(slots_[static_cast<std::size_t>(s)], x, y)) {
        if (assign(idx + 1, s == used ? used + 1 : used)) return true;
      }
      slots_[static_cast<std::size_t>(s)] = std::move(saved);
    }
    return false;
  }

  static LinearExtension least_extension(const Closure& c) {
    const int n = static_cast<int>(c.size());
    LinearExtension l;
    std::uint64_t placed = 0;
    for (int step = 0; step < n; ++step) {
      for (int v = 0; v < n; ++v) {
        if ((placed >> v) & 1U) continue;
        bool minimal = true;
        for (int u = 0; u < n && minimal; ++u) {
          if (u != v && !((placed >> u) & 1U) && ((c[static_cast<std::size_t>(u)] >> v) & 1U)) minimal = false;
        }
        if (minimal) {
          l.order.push_back(v);
          placed |= bit(v);
          break;
        }
      }
    }
    return l;
  }

  const FinitePoset& p_;
  int k_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Closure> slots_;
};

}  // namespace

DimensionResult order_dimension(const FinitePoset& p, int max_k) {
  const int lower = p.is_total() ? 1 : 2;
  for (int k = lower; k <= max_k; ++k) {
    RealizerSearch search(p, k);
    if (!search.run()) continue;
    Realizer r = search.realizer();
    if (!realizes(p, r)) throw CertificateError("dimension search produced an invalid realizer");
    return {k, std::move(r)};
  }
  throw BoundExceeded("order dimension exceeds " + std::to_string(max_k), max_k);
}

MonotoneDimensionResult order_monotone_dimension(const FinitePoset& p, int max_k) {
  DimensionResult d = order_dimension(p, max_k);
  MonotoneFamily fam = realizer_to_monotones(d.realizer);
  if (!characterizes(p, fam)) throw CertificateError("rank functions do not characterize the poset");
  return {d.dimension, std::move(fam)};
}

FinitePoset restrict(const FinitePoset& p, const std::vector<int>& subset) {
  std::vector<std::string> labels;
  std::uint64_t seen = 0;
  for (int i : subset) {
    if (i < 0 || i >= p.size()) throw ValidationError("restriction: unknown element index " + std::to_string(i));
    if ((seen >> i) & 1U) throw ValidationError("restriction: element " + p.label(i) + " listed twice");
    seen |= bit(i);
    labels.push_back(p.label(i));
  }
  const std::size_t n = subset.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = p.leq(subset[a], subset[b]);
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

LinearExtension pullback_extension(const std::vector<int>& mapping, const LinearExtension& l) {
  std::vector<int> rank = l.ranks();
  std::vector<char> hit(rank.size(), 0);
  for (int g : mapping) {
    if (g < 0 || static_cast<std::size_t>(g) >= rank.size()) throw ValidationError("pullback: image out of range");
    if (hit[static_cast<std::size_t>(g)]) throw ValidationError("pullback: map is not injective");
    hit[static_cast<std::size_t>(g)] = 1;
  }
  LinearExtension out;
  out.order.resize(mapping.size());
  std::iota(out.order.begin(), out.order.end(), 0);
  std::sort(out.order.begin(), out.order.end(), [&](int a, int b) {
    return rank[static_cast<std::size_t>(mapping[static_cast<std::size_t>(a)])] <
           rank[static_cast<std::size_t>(mapping[static_cast<std::size_t>(b)])];
  });
  return out;
}

std::string to_dot(const FinitePoset& p, const std::string& name) {
  std::vector<int> nodes(static_cast<std::size_t>(p.size()));
  std::iota(nodes.begin(), nodes.end(), 0);
  std::sort(nodes.begin(), nodes.end(), [&](int a, int b) { return p.label(a) < p.label(b); });
  auto edges = p.cover_pairs();
  std::sort(edges.begin(), edges.end(), [&](const auto& e, const auto& f) {
    return std::pair(p.label(e.first), p.label(e.second)) < std::pair(p.label(f.first), p.label(f.second));
  });
  std::ostringstream out;
  out << "digraph " << quote_label(name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int v : nodes) out << "  " << quote_label(p.label(v)) << ";\n";
  for (auto [a, b] : edges) out << "  " << quote_label(p.label(a)) << " -> " << quote_label(p.label(b)) << ";\n";
  out << "}\n";
  return out.str();
}

bool is_isomorphism(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& mapping) {
  if (p.size() != q.size() || static_cast<int>(mapping.size()) != p.size()) return false;
  std::vector<char> hit(static_cast<std::size_t>(q.size()), 0);
  for (int g : mapping) {
    if (g < 0 || g >= q.size() || hit[static_cast<std::size_t>(g)]) return false;
    hit[static_cast<std::size_t>(g)] = 1;
  }
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (p.leq(i, j) != q.leq(mapping[static_cast<std::size_t>(i)], mapping[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace postorder
