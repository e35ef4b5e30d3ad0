#include "indpoly/tree.hpp"

#include <charconv>
#include <sstream>
#include <utility>

namespace indpoly {

RootedTree::RootedTree(std::vector<int> parent) : parent_(std::move(parent)) {
  if (parent_.empty())
    throw std::invalid_argument("tree must have at least one vertex");
  if (parent_[0] != kNoParent)
    throw std::invalid_argument("vertex 0 must be the root");
  for (size_t i = 1; i < parent_.size(); ++i) {
    if (parent_[i] < 0 || parent_[i] >= static_cast<int>(i)) {
      std::ostringstream msg;
      msg << "parent of vertex " << i << " is " << parent_[i]
          << "; parents must satisfy 0 <= parent < vertex";
      throw std::invalid_argument(msg.str());
    }
  }
}

std::vector<std::vector<int>> RootedTree::children() const {
  std::vector<std::vector<int>> lists(parent_.size());
  for (int v = 1; v < size(); ++v) lists[static_cast<size_t>(parent_[v])].push_back(v);
  return lists;
}

std::vector<int> RootedTree::degrees() const {
  std::vector<int> deg(parent_.size(), 0);
  for (int v = 1; v < size(); ++v) {
    ++deg[static_cast<size_t>(v)];
    ++deg[static_cast<size_t>(parent_[v])];
  }
  return deg;
}

RootedTree path(int m) {
  if (m < 1) throw std::invalid_argument("path: m must be >= 1");
  std::vector<int> parent(static_cast<size_t>(m));
  parent[0] = RootedTree::kNoParent;
  for (int i = 1; i < m; ++i) parent[static_cast<size_t>(i)] = i - 1;
  return RootedTree(std::move(parent));
}

RootedTree join_under_root(const std::vector<RootedTree>& subtrees) {
  std::vector<int> parent{RootedTree::kNoParent};
  for (const RootedTree& sub : subtrees) {
    const int offset = static_cast<int>(parent.size());
    parent.push_back(0);  // the subtree's root hangs off the new root
    for (int v = 1; v < sub.size(); ++v) parent.push_back(sub.parent(v) + offset);
  }
  return RootedTree(std::move(parent));
}

RootedTree star2(int t) {
  if (t < 0) throw std::invalid_argument("star2: t must be >= 0");
  return join_under_root(std::vector<RootedTree>(static_cast<size_t>(t), path(2)));
}

RootedTree tree_T(int m, int t) {
  if (m < 0) throw std::invalid_argument("tree_T: m must be >= 0");
  if (t < 0) throw std::invalid_argument("tree_T: t must be >= 0");
  return join_under_root(std::vector<RootedTree>(static_cast<size_t>(m), star2(t)));
}

RootedTree tree_TG(int m, int t) {
  if (m < 1) throw std::invalid_argument("tree_TG: m must be >= 1");
  if (t < 0) throw std::invalid_argument("tree_TG: t must be >= 0");
  std::vector<RootedTree> subtrees;
  subtrees.reserve(static_cast<size_t>(m) + 1);
  subtrees.push_back(path(1));  // the extra pendant leaf, vertex 1
  for (int i = 0; i < m; ++i) subtrees.push_back(tree_T(3, t));
  return join_under_root(subtrees);
}

void validate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Path:
      if (spec.m < 1) throw std::invalid_argument("family P requires m >= 1");
      return;
    case FamilyKind::Star2:
      if (spec.t < 0) throw std::invalid_argument("family S2 requires t >= 0");
      return;
    case FamilyKind::TFamily:
      if (spec.m < 0 || spec.t < 0)
        throw std::invalid_argument("family T requires m >= 0 and t >= 0");
      return;
    case FamilyKind::TGFamily:
      if (spec.m < 1) throw std::invalid_argument("family TG requires m >= 1");
      if (spec.t < 0) throw std::invalid_argument("family TG requires t >= 0");
      return;
  }
  throw std::invalid_argument("unknown family kind");
}

RootedTree build_family(const FamilySpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case FamilyKind::Path:
      return path(spec.m);
    case FamilyKind::Star2:
      return star2(spec.t);
    case FamilyKind::TFamily:
      return tree_T(spec.m, spec.t);
    case FamilyKind::TGFamily:
      return tree_TG(spec.m, spec.t);
  }
  throw std::invalid_argument("unknown family kind");
}

namespace {

int parse_int_field(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    std::ostringstream msg;
    msg << "family spec: bad " << what << " '" << text << "'";
    throw std::invalid_argument(msg.str());
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  const auto parts = split(text, ',');
  const std::string_view kind = parts[0];
  FamilySpec spec;
  if (kind == "P") {
    if (parts.size() != 2)
      throw std::invalid_argument("family P takes one parameter: P,m");
    spec.kind = FamilyKind::Path;
    spec.m = parse_int_field(parts[1], "m");
  } else if (kind == "S2") {
    if (parts.size() != 2)
      throw std::invalid_argument("family S2 takes one parameter: S2,t");
    spec.kind = FamilyKind::Star2;
    spec.t = parse_int_field(parts[1], "t");
  } else if (kind == "T") {
    if (parts.size() != 3)
      throw std::invalid_argument("family T takes two parameters: T,m,t");
    spec.kind = FamilyKind::TFamily;
    spec.m = parse_int_field(parts[1], "m");
    spec.t = parse_int_field(parts[2], "t");
  } else if (kind == "TG") {
    if (parts.size() != 3)
      throw std::invalid_argument("family TG takes two parameters: TG,m,t");
    spec.kind = FamilyKind::TGFamily;
    spec.m = parse_int_field(parts[1], "m");
    spec.t = parse_int_field(parts[2], "t");
  } else {
    std::ostringstream msg;
    msg << "unknown family kind '" << kind << "'; expected P, S2, T or TG";
    throw std::invalid_argument(msg.str());
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case FamilyKind::Path:
      out << "P," << spec.m;
      break;
    case FamilyKind::Star2:
      out << "S2," << spec.t;
      break;
    case FamilyKind::TFamily:
      out << "T," << spec.m << "," << spec.t;
      break;
    case FamilyKind::TGFamily:
      out << "TG," << spec.m << "," << spec.t;
      break;
  }
  return out.str();
}

TreeParseError::TreeParseError(const std::string& what, size_t position)
    : std::runtime_error(what + " (position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

[[noreturn]] void parse_fail(const std::string& what, size_t position) {
  throw TreeParseError(what, position);
}

// Strict decimal parse of text[pos..): digits only, no sign, no whitespace.
long parse_decimal(std::string_view text, size_t& pos) {
  const size_t start = pos;
  long value = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    value = value * 10 + (text[pos] - '0');
    if (value > 1'000'000'000L) parse_fail("number too large", start);
    ++pos;
  }
  if (pos == start) parse_fail("expected a decimal integer", start);
  return value;
}

}  // namespace

RootedTree parse_tree(std::string_view line) {
  size_t pos = 0;
  const long n = parse_decimal(line, pos);
  if (n < 1) parse_fail("vertex count must be >= 1", 0);
  if (pos >= line.size() || line[pos] != ':')
    parse_fail("expected ':' after the vertex count", pos);
  ++pos;
  if (pos >= line.size() || line[pos] != '_')
    parse_fail("expected '_' for the root parent", pos);
  ++pos;

  std::vector<int> parent;
  parent.reserve(static_cast<size_t>(n));
  parent.push_back(RootedTree::kNoParent);
  for (long i = 1; i < n; ++i) {
    if (pos >= line.size() || line[pos] != ',')
      parse_fail("expected ','", pos);
    ++pos;
    const size_t field_start = pos;
    const long p = parse_decimal(line, pos);
    if (p >= i) {
      std::ostringstream msg;
      msg << "parent " << p << " of vertex " << i << " is out of range";
      parse_fail(msg.str(), field_start);
    }
    parent.push_back(static_cast<int>(p));
  }
  if (pos != line.size()) parse_fail("trailing characters after the tree", pos);
  return RootedTree(std::move(parent));
}

std::string serialize_tree(const RootedTree& tree) {
  std::ostringstream out;
  out << tree.size() << ":_";
  for (int v = 1; v < tree.size(); ++v) out << ',' << tree.parent(v);
  return out.str();
}

}  // namespace indpoly
