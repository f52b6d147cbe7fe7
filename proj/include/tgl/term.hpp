#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tgl {

/// Name of a term node: atom name, functor name, or the decimal rendering of
/// an integer. Arity is not part of a symbol's identity.
using Symbol = std::string;
using Edge = std::pair<Symbol, Symbol>;

/// Immutable, variable-free term: an atom, an integer, or a compound with a
/// functor and at least one argument. Copies share structure.
class GroundTerm {
 public:
  enum class Kind : std::uint8_t { atom, integer, compound };

  static GroundTerm atom(std::string name);
  static GroundTerm integer(std::int64_t value);
  /// Throws std::invalid_argument when `args` is empty.
  static GroundTerm compound(std::string functor, std::vector<GroundTerm> args);

  Kind kind() const noexcept;
  bool is_atomic() const noexcept { return kind() != Kind::compound; }
  bool is_compound() const noexcept { return kind() == Kind::compound; }

  /// Atom name, functor name, or decimal rendering of an integer.
  const Symbol& symbol() const noexcept;
  /// Only meaningful for integers.
  std::int64_t int_value() const noexcept;
  std::span<const GroundTerm> args() const noexcept;
  std::size_t arity() const noexcept { return args().size(); }

  std::size_t hash() const noexcept;
  /// Number of tree nodes (cached at construction).
  std::size_t node_count() const noexcept;

  /// Identity of the shared representation; equal pointers imply equal terms.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const GroundTerm& a, const GroundTerm& b) noexcept;

 private:
  struct Node;
  explicit GroundTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct GroundTermHash {
  std::size_t operator()(const GroundTerm& t) const noexcept { return t.hash(); }
};

std::size_t node_count(const GroundTerm& t);
std::set<Symbol> symbol_set(const GroundTerm& t);
/// (parent symbol, argument symbol) for every parent-argument adjacency.
std::set<Edge> edge_set(const GroundTerm& t);
/// Every subterm position in depth-first pre-order, the term itself first.
std::vector<GroundTerm> subterm_occurrences(const GroundTerm& t);

/// Pre-order traversal without materializing the occurrence list.
void for_each_subterm(const GroundTerm& t, const std::function<void(const GroundTerm&)>& visit);

}  // namespace tgl
