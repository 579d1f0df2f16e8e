#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "homspace/action.hpp"
#include "homspace/group.hpp"

namespace homspace::app {

/// Malformed instance input. The message names the file position or the
/// offending field and token.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A validated group action read from an instance file.
struct Instance {
  std::string name;
  nlohmann::ordered_json source;
  std::shared_ptr<const FiniteGroup> group;
  GroupAction action;
};

/// Reads and validates an instance file. Throws ParseError for bad JSON or
/// fields, std::invalid_argument for a group table that fails the axioms, and
/// AxiomViolation for an action table that fails them.
Instance parse_instance_file(const std::string& path);

/// Same, from JSON text; `origin` is used in error messages.
Instance parse_instance_text(const std::string& text, const std::string& origin = "<input>");

Instance parse_instance(const nlohmann::ordered_json& spec, const std::string& origin = "<input>");

/// Disjoint-cycle notation such as "(0 1)(2 3)" or "()". Points may be
/// separated by spaces or commas. `field` prefixes error messages.
Permutation parse_cycles(const std::string& text, std::size_t degree, const std::string& field = "permutation");

/// A permutation given either as a cycle string or as a one-line image array.
Permutation parse_permutation(const nlohmann::ordered_json& value, std::size_t degree, const std::string& field);

}  // namespace homspace::app
