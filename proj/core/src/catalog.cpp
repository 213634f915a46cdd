#include "liepoisson/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

namespace liepoisson {

namespace fs = std::filesystem;

EntryKind parse_kind(const std::string& text) {
  if (text == "algebra") return EntryKind::algebra;
  if (text == "extension") return EntryKind::extension;
  if (text == "coupling") return EntryKind::coupling;
  throw SchemaError("unknown kind: " + text);
}

const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::algebra: return "algebra";
    case EntryKind::extension: return "extension";
    case EntryKind::coupling: return "coupling";
  }
  return "?";
}

LieAlgebra CatalogEntry::total() const {
  switch (kind) {
    case EntryKind::algebra: return std::get<LieAlgebra>(spec);
    case EntryKind::extension: return assemble_total_constants(std::get<ExtendedStructure>(spec));
    case EntryKind::coupling: return couple_cocycle_extensions(std::get<CocycleCoupling>(spec)).total;
  }
  throw SchemaError("unknown kind");
}

int CatalogEntry::dim() const {
  switch (kind) {
    case EntryKind::algebra: return std::get<LieAlgebra>(spec).dim();
    case EntryKind::extension: {
      const auto& s = std::get<ExtendedStructure>(spec);
      return s.g.dim() + s.dimH;
    }
    case EntryKind::coupling: {
      const auto& s = std::get<CocycleCoupling>(spec);
      return s.dimV + s.l.dim() + s.dimW + s.k.dim();
    }
  }
  return 0;
}

VerificationReport CatalogEntry::verify() const {
  switch (kind) {
    case EntryKind::algebra: {
      VerificationReport r;
      ConditionResult c;
      c.id = "jacobi";
      c.worst = jacobi_residual(std::get<LieAlgebra>(spec));
      c.pass = c.worst == 0;
      r.conditions.push_back(c);
      r.total_jacobi = c.worst;
      return r;
    }
    case EntryKind::extension: return verify_extended_structure(std::get<ExtendedStructure>(spec));
    case EntryKind::coupling: {
      try {
        return couple_cocycle_extensions(std::get<CocycleCoupling>(spec)).report;
      } catch (const NotMatched& e) {
        return e.report;
      } catch (const NotACocycle& e) {
        return e.report;
      }
    }
  }
  throw SchemaError("unknown kind");
}

CatalogEntry entry_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("catalog entry must be an object");
  CatalogEntry e;
  try {
    e.name = j.value("name", std::string("unnamed"));
    const bool wrapped = j.contains("spec");
    std::string kind = j.value("kind", std::string());
    if (kind.empty()) {
      if (wrapped) throw SchemaError("wrapped entry needs a kind");
      kind = j.contains("g") ? "extension" : j.contains("l") ? "coupling" : "algebra";
    }
    e.kind = parse_kind(kind);
    e.sign = parse_sign(j.value("sign", std::string("minus")));
    const Json& spec = wrapped ? j["spec"] : j;
    switch (e.kind) {
      case EntryKind::algebra: e.spec = algebra_from_json(spec); break;
      case EntryKind::extension: e.spec = extension_from_json(spec); break;
      case EntryKind::coupling: e.spec = coupling_from_json(spec); break;
    }
    const int dim = e.dim();
    for (const auto& c : j.value("casimirs", Json::array()))
      e.casimirs.push_back({c.at("name").get<std::string>(), polynomial_from_json(c.at("observable"), dim)});
    for (const auto& a : j.value("annotations", Json::array())) e.annotations.push_back(a.get<std::string>());
  } catch (const Json::exception& ex) {
    throw SchemaError(std::string("malformed catalog entry: ") + ex.what());
  }
  return e;
}

CatalogEntry load_entry(const std::string& path) { return entry_from_json(read_json_file(path)); }

std::string fixture_dir() {
  if (const char* env = std::getenv("LIEPOISSON_FIXTURES"); env && *env) return env;
  return LIEPOISSON_DEFAULT_FIXTURES;
}

std::string entry_path(const std::string& name_or_path) {
  fs::path direct(name_or_path);
  if (name_or_path.find('/') != std::string::npos || direct.extension() == ".json") {
    if (!fs::exists(direct)) throw UnknownEntry(name_or_path);
    return direct.string();
  }
  fs::path p = fs::path(fixture_dir()) / (name_or_path + ".json");
  if (!fs::exists(p)) throw UnknownEntry(name_or_path);
  return p.string();
}

CatalogEntry get(const std::string& name_or_path) { return load_entry(entry_path(name_or_path)); }

std::vector<std::string> list_catalog() {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& f : fs::directory_iterator(fixture_dir(), ec))
    if (f.path().extension() == ".json") names.push_back(f.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace liepoisson
