#include "indpoly/engines.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace indpoly {

namespace {

// Every independence polynomial has constant coefficient 1 (the empty set),
// x-coefficient n (the singletons), and no negative coefficients. Checked
// after every engine and closed-form call; a failure is an engine bug.
void check_engine_result(const DensePolynomial& p, int n, const char* engine) {
  bool ok = !p.is_zero() && p[0] == 1 && p[1] == n;
  if (ok)
    for (const BigInt& c : p.coeffs()) ok = ok && c >= 0;
  if (!ok) {
    std::ostringstream msg;
    msg << engine << ": result violates independence-polynomial invariants"
        << " (n=" << n << ")";
    throw std::logic_error(msg.str());
  }
}

std::vector<std::vector<int>> undirected_adjacency(const RootedTree& tree) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(tree.size()));
  for (int v = 1; v < tree.size(); ++v) {
    adj[static_cast<size_t>(v)].push_back(tree.parent(v));
    adj[static_cast<size_t>(tree.parent(v))].push_back(v);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

// AHU code of the subtree hanging from v away from parent: "(" + sorted
// child codes + ")". Equal codes iff the rooted trees are isomorphic.
std::string ahu_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int u : adj[static_cast<size_t>(v)])
    if (u != parent) child_codes.push_back(ahu_code(adj, u, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const std::string& c : child_codes) code += c;
  code += ")";
  return code;
}

// Center vertices (1 or 2) of a connected tree given by a local adjacency
// list, found by peeling leaf layers.
std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return {0};
  std::vector<int> degree(static_cast<size_t>(n));
  std::vector<char> removed(static_cast<size_t>(n), 0);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
    if (degree[static_cast<size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) removed[static_cast<size_t>(v)] = 1;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int u : adj[static_cast<size_t>(v)])
        if (!removed[static_cast<size_t>(u)] && --degree[static_cast<size_t>(u)] == 1)
          next.push_back(u);
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<size_t>(v)]) centers.push_back(v);
  return centers;
}

// Canonical code of the connected induced subtree on `comp` (original vertex
// ids): root at the center, taking the smaller code when there are two.
std::string component_canonical_code(const std::vector<std::vector<int>>& adj,
                                     const std::vector<int>& comp) {
  std::unordered_map<int, int> local;
  local.reserve(comp.size());
  for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> ladj(comp.size());
  for (size_t i = 0; i < comp.size(); ++i)
    for (int u : adj[static_cast<size_t>(comp[i])]) {
      auto it = local.find(u);
      if (it != local.end()) ladj[i].push_back(it->second);
    }
  std::string best;
  for (int c : tree_centers(ladj)) {
    std::string code = ahu_code(ladj, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// Literal vertex-deletion recursion over induced subforests of one tree.
// Components are memoized on their canonical code: the families contain many
// isomorphic pieces (t identical pendant 2-paths), and reuse across them is
// what keeps the recursion from going exponential.
class VertexDeletionEngine {
 public:
  explicit VertexDeletionEngine(const RootedTree& tree)
      : adj_(undirected_adjacency(tree)) {}

  DensePolynomial run() {
    std::vector<int> all(adj_.size());
    std::iota(all.begin(), all.end(), 0);
    return forest_poly(all);
  }

 private:
  DensePolynomial forest_poly(const std::vector<int>& vertices) {
    DensePolynomial result = DensePolynomial::one();
    for (const std::vector<int>& comp : split_components(vertices))
      result = result * component_poly(comp);
    return result;
  }

  DensePolynomial component_poly(const std::vector<int>& comp) {
    if (comp.size() == 1) return DensePolynomial{1, 1};
    std::string code = component_canonical_code(adj_, comp);
    if (auto it = memo_.find(code); it != memo_.end()) return it->second;

    std::vector<char> in_comp(adj_.size(), 0);
    for (int v : comp) in_comp[static_cast<size_t>(v)] = 1;
    auto induced_neighbors = [&](int v) {
      std::vector<int> out;
      for (int u : adj_[static_cast<size_t>(v)])
        if (in_comp[static_cast<size_t>(u)]) out.push_back(u);
      return out;
    };

    // Pivot on the neighbor of a leaf so both deletions split the component.
    int pivot = -1;
    for (int v : comp) {
      const auto nbrs = induced_neighbors(v);
      if (nbrs.size() == 1) {
        pivot = nbrs[0];
        break;
      }
    }
    const auto pivot_nbrs = induced_neighbors(pivot);

    std::vector<int> without_pivot;
    without_pivot.reserve(comp.size() - 1);
    for (int v : comp)
      if (v != pivot) without_pivot.push_back(v);

    std::vector<char> in_closed(adj_.size(), 0);
    in_closed[static_cast<size_t>(pivot)] = 1;
    for (int u : pivot_nbrs) in_closed[static_cast<size_t>(u)] = 1;
    std::vector<int> without_closed;
    for (int v : comp)
      if (!in_closed[static_cast<size_t>(v)]) without_closed.push_back(v);

    DensePolynomial result =
        forest_poly(without_pivot) + shifted(forest_poly(without_closed), 1);
    memo_.emplace(std::move(code), result);
    return result;
  }

  std::vector<std::vector<int>> split_components(const std::vector<int>& vertices) const {
    std::vector<char> in_set(adj_.size(), 0);
    for (int v : vertices) in_set[static_cast<size_t>(v)] = 1;
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::vector<int>> components;
    for (int start : vertices) {
      if (seen[static_cast<size_t>(start)]) continue;
      std::vector<int> comp{start};
      seen[static_cast<size_t>(start)] = 1;
      for (size_t head = 0; head < comp.size(); ++head)
        for (int u : adj_[static_cast<size_t>(comp[head])])
          if (in_set[static_cast<size_t>(u)] && !seen[static_cast<size_t>(u)]) {
            seen[static_cast<size_t>(u)] = 1;
            comp.push_back(u);
          }
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
    return components;
  }

  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::string, DensePolynomial> memo_;
};

}  // namespace

SubtreeTable subtree_table(const RootedTree& tree) {
  const size_t n = static_cast<size_t>(tree.size());
  // Accumulators filled by the children before vertex v itself is finalized:
  // prod_any = product of (A_c + B_c), prod_excl = product of A_c.
  std::vector<DensePolynomial> prod_any(n, DensePolynomial::one());
  std::vector<DensePolynomial> prod_excl(n, DensePolynomial::one());
  SubtreeTable table;
  table.excluding.resize(n);
  table.including.resize(n);
  for (int v = tree.size() - 1; v >= 0; --v) {
    const size_t vi = static_cast<size_t>(v);
    table.excluding[vi] = std::move(prod_any[vi]);
    table.including[vi] = shifted(prod_excl[vi], 1);
    if (v > 0) {
      const size_t p = static_cast<size_t>(tree.parent(v));
      prod_any[p] = prod_any[p] * (table.excluding[vi] + table.including[vi]);
      prod_excl[p] = prod_excl[p] * table.excluding[vi];
    }
  }
  return table;
}

DensePolynomial indpoly_dp(const RootedTree& tree) {
  const SubtreeTable table = subtree_table(tree);
  DensePolynomial result = table.excluding[0] + table.including[0];
  check_engine_result(result, tree.size(), "indpoly_dp");
  return result;
}

DensePolynomial indpoly_recursive(const RootedTree& tree) {
  DensePolynomial result = VertexDeletionEngine(tree).run();
  check_engine_result(result, tree.size(), "indpoly_recursive");
  return result;
}

DensePolynomial indpoly_bruteforce(const RootedTree& tree) {
  const int n = tree.size();
  if (n > 30) {
    std::ostringstream msg;
    msg << "indpoly_bruteforce: " << n
        << " vertices exceeds the enumeration bound of 30";
    throw std::invalid_argument(msg.str());
  }
  std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
  for (int v = 1; v < n; ++v) {
    adj[static_cast<size_t>(v)] |= 1u << tree.parent(v);
    adj[static_cast<size_t>(tree.parent(v))] |= 1u << v;
  }

  // A subset is independent iff it is independent without its lowest vertex
  // and that vertex has no neighbor among the rest; one bit per subset.
  const uint64_t total = 1ull << n;
  std::vector<uint64_t> independent((total + 63) / 64, 0);
  independent[0] = 1;  // the empty set
  std::vector<uint64_t> counts(static_cast<size_t>(n) + 1, 0);
  counts[0] = 1;
  for (uint64_t s = 1; s < total; ++s) {
    const uint32_t subset = static_cast<uint32_t>(s);
    const int v = std::countr_zero(subset);
    const uint32_t rest = subset & (subset - 1);
    const bool ok = ((independent[rest >> 6] >> (rest & 63)) & 1) != 0 &&
                    (adj[static_cast<size_t>(v)] & rest) == 0;
    if (ok) {
      independent[s >> 6] |= 1ull << (s & 63);
      ++counts[static_cast<size_t>(std::popcount(subset))];
    }
  }

  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (uint64_t c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  DensePolynomial result{std::move(coeffs)};
  check_engine_result(result, n, "indpoly_bruteforce");
  return result;
}

std::string canonical_tree_code(const RootedTree& tree) {
  std::vector<int> all(static_cast<size_t>(tree.size()));
  std::iota(all.begin(), all.end(), 0);
  return component_canonical_code(undirected_adjacency(tree), all);
}

DensePolynomial closed_form_S(int t) {
  if (t < 0) throw std::invalid_argument("closed_form_S: t must be >= 0");
  const DensePolynomial p =
      pow(DensePolynomial{1, 2}, static_cast<unsigned long>(t)) +
      shifted(pow(DensePolynomial{1, 1}, static_cast<unsigned long>(t)), 1);
  check_engine_result(p, 1 + 2 * t, "closed_form_S");
  return p;
}

DensePolynomial closed_form_T(int m, int t) {
  if (m < 0) throw std::invalid_argument("closed_form_T: m must be >= 0");
  if (t < 0) throw std::invalid_argument("closed_form_T: t must be >= 0");
  const DensePolynomial p =
      pow(closed_form_S(t), static_cast<unsigned long>(m)) +
      shifted(pow(DensePolynomial{1, 2},
                  static_cast<unsigned long>(m) * static_cast<unsigned long>(t)),
              1);
  check_engine_result(p, 1 + m * (1 + 2 * t), "closed_form_T");
  return p;
}

DensePolynomial closed_form_TG(int m, int t) {
  if (m < 1) throw std::invalid_argument("closed_form_TG: m must be >= 1");
  if (t < 0) throw std::invalid_argument("closed_form_TG: t must be >= 0");
  const DensePolynomial p =
      DensePolynomial{1, 1} * pow(closed_form_T(3, t), static_cast<unsigned long>(m)) +
      shifted(pow(closed_form_S(t), 3ul * static_cast<unsigned long>(m)), 1);
  check_engine_result(p, 2 + m * (4 + 6 * t), "closed_form_TG");
  return p;
}

}  // namespace indpoly
