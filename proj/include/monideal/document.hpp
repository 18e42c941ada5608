#pragma once

// Ideal documents: a ring declaration, named ideals and run directives.
//
// Text form:
//
//   # comment
//   ring x y z
//   ideal I = x^2*y, z^3
//   power 2
//   closure
//
// JSON form: {"vars": ["x", "y"], "ideals": {"I": [[2, 0], [0, 3]]},
// "power": 2, "closure": true}. Both forms serialize canonically, so
// serialize(parse(serialize(doc))) == serialize(doc) byte for byte.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monideal/ring.hpp"

namespace monideal {

struct NamedIdeal {
  std::string name;
  MonomialIdeal ideal;
};

struct IdealDocument {
  RingPtr ring;
  std::vector<NamedIdeal> ideals;
  std::optional<unsigned> power;
  bool closure = false;
  /// Non-fatal findings, e.g. unit ideals that were dropped.
  std::vector<std::string> warnings;

  /// nullptr when absent.
  const NamedIdeal* find(std::string_view name) const;
};

/// JSON when the first non-blank character is '{', text otherwise. Errors are
/// ParseError with line and column.
IdealDocument parse_document(std::string_view input);
IdealDocument parse_text_document(std::string_view input);
IdealDocument parse_json_document(std::string_view input);

/// One term of the text grammar, e.g. "x^2*y" or "1".
Monomial parse_monomial(std::string_view term, const Ring& ring);

std::string serialize_text(const IdealDocument& doc);
std::string serialize_json(const IdealDocument& doc);

} // namespace monideal
