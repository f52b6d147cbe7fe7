#include "tgl/term.hpp"

#include <stdexcept>

namespace tgl {

struct GroundTerm::Node {
  Kind kind;
  Symbol symbol;
  std::int64_t value = 0;
  std::vector<GroundTerm> args;
  std::size_t hash = 0;
  std::size_t count = 1;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

GroundTerm GroundTerm::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::atom;
  node->hash = mix(0x61, std::hash<std::string>{}(name));
  node->symbol = std::move(name);
  return GroundTerm(std::move(node));
}

GroundTerm GroundTerm::integer(std::int64_t value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::integer;
  node->value = value;
  node->symbol = std::to_string(value);
  node->hash = mix(0x69, std::hash<std::int64_t>{}(value));
  return GroundTerm(std::move(node));
}

GroundTerm GroundTerm::compound(std::string functor, std::vector<GroundTerm> args) {
  if (args.empty()) {
    throw std::invalid_argument("compound term '" + functor + "' needs at least one argument");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::compound;
  std::size_t h = mix(0x63, std::hash<std::string>{}(functor));
  h = mix(h, args.size());
  std::size_t count = 1;
  for (const auto& a : args) {
    h = mix(h, a.hash());
    count += a.node_count();
  }
  node->hash = h;
  node->count = count;
  node->symbol = std::move(functor);
  node->args = std::move(args);
  return GroundTerm(std::move(node));
}

GroundTerm::Kind GroundTerm::kind() const noexcept { return node_->kind; }
const Symbol& GroundTerm::symbol() const noexcept { return node_->symbol; }
std::int64_t GroundTerm::int_value() const noexcept { return node_->value; }
std::span<const GroundTerm> GroundTerm::args() const noexcept { return node_->args; }
std::size_t GroundTerm::hash() const noexcept { return node_->hash; }
std::size_t GroundTerm::node_count() const noexcept { return node_->count; }

bool operator==(const GroundTerm& a, const GroundTerm& b) noexcept {
  const auto* x = a.node_.get();
  const auto* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->count != y->count) return false;
  switch (x->kind) {
    case GroundTerm::Kind::integer:
      return x->value == y->value;
    case GroundTerm::Kind::atom:
      return x->symbol == y->symbol;
    case GroundTerm::Kind::compound:
      break;
  }
  if (x->symbol != y->symbol || x->args.size() != y->args.size()) return false;
  for (std::size_t i = 0; i < x->args.size(); ++i) {
    if (!(x->args[i] == y->args[i])) return false;
  }
  return true;
}

std::size_t node_count(const GroundTerm& t) { return t.node_count(); }

void for_each_subterm(const GroundTerm& t, const std::function<void(const GroundTerm&)>& visit) {
  visit(t);
  for (const auto& a : t.args()) for_each_subterm(a, visit);
}

std::set<Symbol> symbol_set(const GroundTerm& t) {
  std::set<Symbol> out;
  for_each_subterm(t, [&](const GroundTerm& s) { out.insert(s.symbol()); });
  return out;
}

std::set<Edge> edge_set(const GroundTerm& t) {
  std::set<Edge> out;
  for_each_subterm(t, [&](const GroundTerm& s) {
    for (const auto& a : s.args()) out.emplace(s.symbol(), a.symbol());
  });
  return out;
}

std::vector<GroundTerm> subterm_occurrences(const GroundTerm& t) {
  std::vector<GroundTerm> out;
  out.reserve(t.node_count());
  for_each_subterm(t, [&](const GroundTerm& s) { out.push_back(s); });
  return out;
}

}  // namespace tgl
