#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "indpoly/poly.hpp"
#include "indpoly/tree.hpp"

namespace oracles {

// Definition-level subset scan: checks every vertex of every subset against
// the adjacency masks, with no incremental reuse. Usable up to ~20 vertices.
inline indpoly::DensePolynomial indpoly_naive(const indpoly::RootedTree& tree) {
  const int n = tree.size();
  std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
  for (int v = 1; v < n; ++v) {
    adj[static_cast<size_t>(v)] |= 1u << tree.parent(v);
    adj[static_cast<size_t>(tree.parent(v))] |= 1u << v;
  }
  std::vector<long> counts(static_cast<size_t>(n) + 1, 0);
  const uint64_t total = 1ull << n;
  for (uint64_t s = 0; s < total; ++s) {
    const uint32_t subset = static_cast<uint32_t>(s);
    bool independent = true;
    for (int v = 0; v < n && independent; ++v)
      if ((subset >> v) & 1u)
        independent = (adj[static_cast<size_t>(v)] & subset) == 0;
    if (independent) ++counts[static_cast<size_t>(std::popcount(subset))];
  }
  std::vector<indpoly::BigInt> coeffs;
  for (long c : counts) coeffs.emplace_back(c);
  return indpoly::DensePolynomial(std::move(coeffs));
}

// Maximum independent set size by the include/exclude DP on the rooted tree.
inline int mis_size(const indpoly::RootedTree& tree) {
  const int n = tree.size();
  std::vector<int> incl(static_cast<size_t>(n), 1);
  std::vector<int> excl(static_cast<size_t>(n), 0);
  for (int v = n - 1; v >= 1; --v) {
    const size_t p = static_cast<size_t>(tree.parent(v));
    const size_t vi = static_cast<size_t>(v);
    incl[p] += excl[vi];
    excl[p] += std::max(incl[vi], excl[vi]);
  }
  return std::max(incl[0], excl[0]);
}

// Pascal-triangle binomial coefficient.
inline indpoly::BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  std::vector<indpoly::BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<indpoly::BigInt> next(static_cast<size_t>(i) + 1, 0);
    next.front() = 1;
    next.back() = 1;
    for (int j = 1; j < i; ++j)
      next[static_cast<size_t>(j)] =
          row[static_cast<size_t>(j) - 1] + row[static_cast<size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

// Uniform random parent attachment; deterministic under a fixed seed.
inline indpoly::RootedTree random_tree(std::mt19937_64& rng, int n) {
  std::vector<int> parent(static_cast<size_t>(n));
  parent[0] = indpoly::RootedTree::kNoParent;
  for (int i = 1; i < n; ++i)
    parent[static_cast<size_t>(i)] = static_cast<int>(rng() % static_cast<uint64_t>(i));
  return indpoly::RootedTree(std::move(parent));
}

// Random polynomial with digit coefficients and a nonzero leading one.
inline indpoly::DensePolynomial random_poly(std::mt19937_64& rng, int degree,
                                            bool nonzero_constant) {
  std::vector<indpoly::BigInt> coeffs(static_cast<size_t>(degree) + 1);
  for (auto& c : coeffs) c = static_cast<long>(rng() % 10);
  coeffs.back() = static_cast<long>(1 + rng() % 9);
  if (nonzero_constant) coeffs.front() = static_cast<long>(1 + rng() % 9);
  return indpoly::DensePolynomial(std::move(coeffs));
}

// Every family instance with at most max_n vertices. The degenerate
// all-t single-vertex instances T(0,t) appear once, as T(0,0).
inline std::vector<indpoly::FamilySpec> family_members_up_to(int max_n) {
  using indpoly::FamilyKind;
  using indpoly::FamilySpec;
  std::vector<FamilySpec> specs;
  for (int m = 1; m <= max_n; ++m)
    specs.push_back({FamilyKind::Path, m, 0});
  for (int t = 0; 1 + 2 * t <= max_n; ++t)
    specs.push_back({FamilyKind::Star2, 0, t});
  specs.push_back({FamilyKind::TFamily, 0, 0});
  for (int m = 1; 1 + m <= max_n; ++m)
    for (int t = 0; 1 + m * (1 + 2 * t) <= max_n; ++t)
      specs.push_back({FamilyKind::TFamily, m, t});
  for (int m = 1; 2 + 4 * m <= max_n; ++m)
    for (int t = 0; 2 + m * (4 + 6 * t) <= max_n; ++t)
      specs.push_back({FamilyKind::TGFamily, m, t});
  return specs;
}

}  // namespace oracles
