#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indpoly {

// Rooted tree stored as a parent array in topological order: vertex 0 is the
// root (parent kNoParent), and parent(i) < i for every i >= 1. That ordering
// forces acyclicity and connectedness, so no further structure checks are
// needed downstream. Immutable after construction.
class RootedTree {
 public:
  static constexpr int kNoParent = -1;

  // Validates the topological-order invariant; throws std::invalid_argument.
  explicit RootedTree(std::vector<int> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[static_cast<size_t>(v)]; }
  const std::vector<int>& parents() const { return parent_; }

  // Children lists, each in increasing vertex order.
  std::vector<std::vector<int>> children() const;
  std::vector<int> degrees() const;

  bool operator==(const RootedTree&) const = default;

 private:
  std::vector<int> parent_;
};

// Family constructors. Vertices are emitted in depth-first order so that
// serialized forms are reproducible byte-for-byte.

// Path on m vertices (m >= 1): vertex i hangs off vertex i-1.
RootedTree path(int m);
// Root with t pendant 2-vertex paths attached; 1 + 2t vertices.
RootedTree star2(int t);
// Root with m children, each carrying t pendant 2-vertex paths;
// 1 + m(1 + 2t) vertices.
RootedTree tree_T(int m, int t);
// Fresh root with one pendant leaf plus m copies of tree_T(3, t);
// 2 + m(4 + 6t) vertices. The leaf is vertex 1, copies follow.
RootedTree tree_TG(int m, int t);

// New root 0 with the given subtrees attached beneath it, concatenated with
// shifted indices; preserves the topological-order invariant by construction.
RootedTree join_under_root(const std::vector<RootedTree>& subtrees);

enum class FamilyKind { Path, Star2, TFamily, TGFamily };

// Symbolic description of a family instance. Path uses only m; Star2 uses
// only t; TFamily and TGFamily use both.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  int m = 0;
  int t = 0;

  bool operator==(const FamilySpec&) const = default;
};

// Throws std::invalid_argument naming the violated constraint.
void validate(const FamilySpec& spec);
RootedTree build_family(const FamilySpec& spec);

// Command-line family syntax: "P,m" / "S2,t" / "T,m,t" / "TG,m,t".
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Error from parse_tree; position is the 0-based byte offset into the line.
class TreeParseError : public std::runtime_error {
 public:
  TreeParseError(const std::string& what, size_t position);
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Tree text format, one tree per line: "<n>:<p_0>,<p_1>,...,<p_{n-1}>" where
// p_0 is the literal "_" and each later p_i is a decimal integer < i.
// Whitespace is forbidden. parse_tree(serialize_tree(T)) == T.
RootedTree parse_tree(std::string_view line);
std::string serialize_tree(const RootedTree& tree);

}  // namespace indpoly
