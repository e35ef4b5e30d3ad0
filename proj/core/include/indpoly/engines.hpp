#pragma once

#include <string>
#include <vector>

#include "indpoly/poly.hpp"
#include "indpoly/tree.hpp"

namespace indpoly {

// Per-vertex restriction of the independence polynomial of the subtree
// rooted at v: excluding[v] counts independent sets that avoid v,
// including[v] those that contain v. For a leaf, excluding = 1 and
// including = x; their sum is the independence polynomial of the subtree.
struct SubtreeTable {
  std::vector<DensePolynomial> excluding;
  std::vector<DensePolynomial> including;
};

SubtreeTable subtree_table(const RootedTree& tree);

// Production engine: one bottom-up pass of the vertex-deletion recurrence.
// The result has degree alpha(tree), constant coefficient 1, and x-coefficient
// equal to the vertex count; those invariants are checked after every call.
DensePolynomial indpoly_dp(const RootedTree& tree);

// Oracle engine: literal vertex deletion. Pivots on a neighbor of a leaf so
// both deletions split the tree into small components, decomposes the
// resulting forests, and multiplies the per-component results. Memoized on a
// canonical code per component; the memo table is per-invocation.
DensePolynomial indpoly_recursive(const RootedTree& tree);

// Oracle engine: iterates all 2^n vertex subsets with machine-word bitmasks
// and counts the independent ones by size. Rejects n > 30.
DensePolynomial indpoly_bruteforce(const RootedTree& tree);

// Isomorphism-invariant code of the underlying unrooted tree (center-rooted,
// sorted child codes). Equal codes iff the unrooted trees are isomorphic.
std::string canonical_tree_code(const RootedTree& tree);

// Closed forms for the tree families, built from polynomial identities
// rather than any tree traversal.

// (1+2x)^t + x(1+x)^t; degree t+1.
DensePolynomial closed_form_S(int t);
// closed_form_S(t)^m + x(1+2x)^{mt}; degree m(t+1) for m >= 1,
// and 1+x for m = 0 (the single-vertex tree).
DensePolynomial closed_form_T(int m, int t);
// (1+x) closed_form_T(3,t)^m + x closed_form_S(t)^{3m}; degree 3(t+1)m + 1.
DensePolynomial closed_form_TG(int m, int t);

}  // namespace indpoly
