#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggr/anneid.hpp"
#include "ggr/check_report.hpp"
#include "ggr/gammaring.hpp"
#include "ggr/moduloid.hpp"

namespace ggr::dsl {

/// Element written as residues of the cyclic factors of its group.
using Residues = std::vector<int>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string message, std::string token);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  int column_;
  std::string message_;
  std::string token_;
};

enum class Kind { Group, Graduation, GammaRing, Anneid, Moduloid };
std::string kind_name(Kind k);

struct ComponentSpec {
  std::string name;
  std::vector<Residues> generators;
  friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

struct AliasSpec {
  std::string name;
  Residues value;
  friend bool operator==(const AliasSpec&, const AliasSpec&) = default;
};

struct GroupSpec {
  std::string role;  // R, Gamma or M
  std::vector<int> orders;
  std::vector<AliasSpec> aliases;
  std::vector<ComponentSpec> components;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct TableEntry {
  Residues a, b, c;
  Residues value;
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
  friend auto operator<=>(const TableEntry&, const TableEntry&) = default;
};

struct StructureSpec {
  int version = 1;
  Kind kind = Kind::Group;
  std::string name;
  std::vector<GroupSpec> groups;
  std::vector<TableEntry> triples;    // (x, alpha, y) -> z
  std::vector<TableEntry> cotriples;  // (alpha, x, beta) -> gamma
  std::vector<TableEntry> actions;    // (w, alpha, x) -> v
  bool default_triple = false;
  bool default_cotriple = false;
  bool default_action = false;
  /// Gamma rings: entries are values on the unit vectors, extended additively.
  bool trilinear = false;

  const GroupSpec* group(const std::string& role) const;
  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

/// Throws ParseError at the first problem.
StructureSpec parse(const std::string& text);
StructureSpec parse_file(const std::string& path);
/// Canonical text; parse(serialize(s)) == s for parsed specs.
std::string serialize(const StructureSpec& spec);

struct Elaborated {
  Kind kind = Kind::Group;
  std::string name;
  std::optional<finabel::FiniteAbelianGroup> group;
  std::optional<grading::Graduation> graduation;
  std::optional<gammaring::GradedGammaRing> graded;
  std::optional<anneid::GammaAnneid> anneid;
  std::optional<moduloid::Moduloid> moduloid;
  CheckReport report;
};
/// Builds the structure and runs the verifiers for its kind. Throws
/// StructuralError when the tables cannot be assembled at all.
Elaborated elaborate(const StructureSpec& spec);

/// Spec for an anneid through its linearization; element names that are
/// identifiers become aliases.
StructureSpec spec_from_anneid(const anneid::GammaAnneid& a, const std::string& name = {});
/// Spec for a graded gamma ring: values on unit vectors when `trilinear`,
/// otherwise every nonzero entry of the full tables.
StructureSpec spec_from_graded(const gammaring::GradedGammaRing& g, const std::string& name = {},
                               const std::vector<std::string>* r_names = nullptr,
                               const std::vector<std::string>* gamma_names = nullptr, bool trilinear = true);

}  // namespace ggr::dsl
