#pragma once

// Ground fact file (GFF): `at(Id, Split, Label, Term, [Neighbors]).` clauses
// in ISO-Prolog ground clause syntax.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tgl/dataset.hpp"
#include "tgl/term.hpp"

namespace tgl {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct ParseOptions {
  /// Reject clauses that are not `at/5` instead of skipping them.
  bool strict = false;
  /// Fixed label range; defaults to 1 + max label seen.
  std::optional<Label> num_labels;
};

struct ParseStats {
  std::size_t clauses = 0;
  std::size_t skipped = 0;
};

Dataset parse_fact_file(std::istream& in, const ParseOptions& options = {},
                        ParseStats* stats = nullptr);
Dataset parse_fact_text(std::string_view text, const ParseOptions& options = {},
                        ParseStats* stats = nullptr);
/// Throws std::runtime_error("cannot open ...") when the file is unreadable.
Dataset load_fact_file(const std::filesystem::path& path, const ParseOptions& options = {},
                       ParseStats* stats = nullptr);

GroundTerm parse_term(std::string_view text);

/// True unless `name` matches [a-z][A-Za-z0-9_]*.
bool atom_needs_quotes(std::string_view name);
std::string quote_atom(std::string_view name);
std::string serialize_term(const GroundTerm& t);
void append_term(std::string& out, const GroundTerm& t);
/// One clause terminated by ".\n".
std::string serialize_record(const NodeRecord& r);
void write_fact_file(std::ostream& out, const Dataset& d);

}  // namespace tgl
