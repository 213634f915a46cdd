#pragma once

#include <string>
#include <variant>
#include <vector>

#include "liepoisson/io.hpp"

namespace liepoisson {

enum class EntryKind { algebra, extension, coupling };
EntryKind parse_kind(const std::string& text);
const char* to_string(EntryKind k);

struct NamedCasimir {
  std::string name;
  Polynomial polynomial;
};

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::algebra;
  Sign sign = Sign::minus;
  std::vector<NamedCasimir> casimirs;  // in the coordinates of total()
  std::vector<std::string> annotations;
  std::variant<LieAlgebra, ExtendedStructure, CocycleCoupling> spec;

  // Algebra on which dynamics lives: the algebra itself, the assembled extension,
  // or the matched pair of the two cocycle extensions in (v, l, w, k) order.
  LieAlgebra total() const;
  int dim() const;
  VerificationReport verify() const;
};

// Wrapper format: {"name", "kind", "sign", "casimirs": [{"name", "observable"}], "annotations", "spec"}.
// A bare algebra, extension or coupling document is accepted when kind is given explicitly.
CatalogEntry entry_from_json(const Json& j);
CatalogEntry load_entry(const std::string& path);

// LIEPOISSON_FIXTURES when set, otherwise the source tree's fixtures directory.
std::string fixture_dir();

// File behind a name or path. Raises UnknownEntry.
std::string entry_path(const std::string& name_or_path);

// Known name, or a path to a fixture file. Raises UnknownEntry.
CatalogEntry get(const std::string& name_or_path);

// Fixture names in alphabetical order.
std::vector<std::string> list_catalog();

}  // namespace liepoisson
