#include "liepoisson_cli/cli.hpp"

#include <fmt/format.h>
#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liepoisson/catalog.hpp"
#include "liepoisson/simulate.hpp"

namespace liepoisson::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << bytes;
}

// Inline JSON, "@path", or a path to a JSON file.
Json json_argument(const std::string& text, std::vector<std::string>* files) {
  std::string t = text;
  if (!t.empty() && t.front() == '{') {
    try {
      return Json::parse(t);
    } catch (const Json::exception& e) {
      throw SchemaError(std::string("inline JSON: ") + e.what());
    }
  }
  if (!t.empty() && t.front() == '@') t.erase(0, 1);
  if (files) files->push_back(t);
  return read_json_file(t);
}

Polynomial observable_argument(const std::string& text, int dim) {
  if (!text.empty() && text.front() == '{') return polynomial_from_json(json_argument(text, nullptr), dim);
  return parse_polynomial(text, dim);
}

std::string matrix_text(const Matrix& m) {
  std::string out;
  for (const auto& row : m) {
    std::string line;
    for (const auto& x : row) line += (line.empty() ? "" : ", ") + to_string(x);
    out += "[" + line + "]\n";
  }
  return out;
}

std::string witness_text(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const UnknownEntry& e) {
    err << e.what() << '\n';
    return kExitSchema;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const DimensionMismatch& e) {
    err << e.what() << '\n';
    return kExitSchema;
  } catch (const Json::exception& e) {
    err << "schema error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const NonFiniteState& e) {
    err << e.what() << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitFailed;
  }
}

CatalogEntry load_with_kind(const std::string& spec, const std::optional<std::string>& kind) {
  Json j = read_json_file(entry_path(spec));
  if (kind && !j.contains("spec")) j["kind"] = *kind;
  if (kind && j.contains("kind") && j["kind"] != *kind)
    throw SchemaError("file declares kind " + j["kind"].dump() + ", expected " + *kind);
  return entry_from_json(j);
}

}  // namespace

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    VerificationReport report;
    try {
      report = load_with_kind(opt.spec, opt.kind).verify();
    } catch (const AntisymmetryViolation& e) {
      ConditionResult c;
      c.id = "antisymmetry";
      c.pass = false;
      c.witness = {e.i, e.j, e.k};
      c.note = e.what();
      report.conditions.push_back(c);
    }
    if (opt.json) {
      out << report_to_json(report).dump(2) << '\n';
    } else {
      for (const auto& c : report.conditions) {
        std::string status = c.pass ? "pass" : "FAIL";
        if (c.diagnostic) status = c.pass ? "pass (diagnostic)" : "fail (diagnostic)";
        out << fmt::format("{:<22} {:<18} worst={}", c.id, status, to_string(c.worst));
        if (!c.witness.empty()) out << " witness=" << witness_text(c.witness);
        if (!c.note.empty()) out << "  # " << c.note;
        out << '\n';
      }
      if (report.total_jacobi) out << "total jacobi residual: " << to_string(*report.total_jacobi) << '\n';
      out << (report.pass() ? "PASS" : "FAIL") << '\n';
    }
    return report.pass() ? kExitOk : kExitFailed;
  });
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string path = entry_path(opt.spec);
    CatalogEntry entry = load_entry(path);
    const Sign sign = opt.sign ? parse_sign(*opt.sign) : entry.sign;
    PoissonBivector biv(entry.total(), sign);
    const int n = biv.dim();
    std::vector<std::string> files = {path};
    files.insert(files.end(), opt.input_files.begin(), opt.input_files.end());

    if (opt.h.empty()) throw SchemaError("simulate needs a Hamiltonian (--h)");
    Polynomial H = observable_argument(opt.h, n);
    std::optional<Polynomial> S;
    if (opt.s) S = observable_argument(*opt.s, n);
    ExactVec z0 = parse_state(opt.z0);
    if (static_cast<int>(z0.size()) != n) throw DimensionMismatch(n, z0.size());

    IntegratorConfig cfg;
    cfg.method = parse_method(opt.method);
    cfg.dt = opt.dt;
    cfg.steps = opt.steps;
    cfg.stride = opt.stride;
    cfg.monitors.push_back({"H", Observable(H)});
    for (const auto& c : entry.casimirs) cfg.monitors.push_back({c.name, Observable(c.polynomial)});
    if (S) cfg.monitors.push_back({"S", Observable(*S)});

    Json dissipation_json;
    Field field;
    if (opt.dissipation) {
      dissipation_json = json_argument(*opt.dissipation, &files);
      MetriplecticSystem sys{biv, dissipation_from_json(dissipation_json, n), Observable(H), std::nullopt};
      if (S) sys.entropy = Observable(*S);
      if (opt.a) sys.sym.a = parse_scalar(*opt.a);
      field = [sys](const Vec& z) { return metriplectic_field(sys, z); };
    } else {
      Observable obs(H);
      field = [biv, obs](const Vec& z) { return lp_vector_field(biv, obs, z); };
    }

    Trajectory traj = integrate(field, to_double(z0), cfg);
    std::ostringstream csv;
    write_csv(csv, traj);

    Json options = {{"spec", opt.spec},
                    {"sign", to_string(sign)},
                    {"h", to_string(H)},
                    {"z0", vector_to_json(z0)},
                    {"method", to_string(cfg.method)},
                    {"dt", fmt::format("{:.17g}", cfg.dt)},
                    {"steps", cfg.steps},
                    {"stride", cfg.stride}};
    if (S) options["s"] = to_string(*S);
    if (opt.dissipation) options["dissipation"] = dissipation_json;
    if (opt.a) options["a"] = *opt.a;
    Json inputs = Json::array();
    std::string hashed;
    for (const auto& f : files) {
      std::string digest = sha256_hex(read_file(f));
      inputs.push_back({{"path", f}, {"sha256", digest}});
      hashed += digest;
    }
    hashed += options.dump();
    Json manifest = {{"schema", 1},
                     {"tool", "liepoisson"},
                     {"version", kVersion},
                     {"command", "simulate"},
                     {"inputs", inputs},
                     {"options", options},
                     {"content_hash", sha256_hex(hashed)},
                     {"output_sha256", sha256_hex(csv.str())},
                     {"rows", traj.times.size()}};

    if (opt.out) {
      write_file(*opt.out, csv.str());
      write_file(opt.manifest ? *opt.manifest : *opt.out + ".manifest.json", manifest.dump(2) + "\n");
      for (const auto& name : traj.monitor_names)
        out << fmt::format("{} drift {:.3e}\n", name, monitor_drift(traj, name));
    } else {
      out << csv.str();
      if (opt.manifest) write_file(*opt.manifest, manifest.dump(2) + "\n");
    }
    return kExitOk;
  });
}

int cmd_metric(const MetricOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    CatalogEntry entry = get(opt.spec);
    LieAlgebra total = entry.total();
    Matrix m;
    if (opt.variant == "ck") {
      m = cartan_killing_metric(total);
    } else if (opt.variant == "double") {
      if (!opt.at) throw SchemaError("the double-bracket metric needs a state (--at)");
      ExactVec z = parse_state(*opt.at);
      m = double_bracket_metric(PoissonBivector(total, opt.sign ? parse_sign(*opt.sign) : entry.sign), z);
    } else {
      throw SchemaError("unknown metric variant: " + opt.variant);
    }
    if (opt.json)
      out << Json{{"variant", opt.variant}, {"matrix", matrix_to_json(m)}}.dump(2) << '\n';
    else
      out << matrix_text(m);
    return kExitOk;
  });
}

int cmd_casimirs(const CasimirOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto basis = linear_casimir_basis(get(opt.spec).total());
    if (opt.json) {
      Json arr = Json::array();
      for (const auto& v : basis) arr.push_back(vector_to_json(v));
      out << Json{{"linear_casimirs", arr}}.dump(2) << '\n';
      return kExitOk;
    }
    if (basis.empty()) out << "no linear Casimirs\n";
    for (const auto& v : basis) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ",") + to_string(x);
      out << "(" << s << ")\n";
    }
    return kExitOk;
  });
}

int cmd_catalog(const std::optional<std::string>& name, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!name) {
      for (const auto& n : list_catalog()) out << n << '\n';
      return kExitOk;
    }
    CatalogEntry e = get(*name);
    LieAlgebra total = e.total();
    out << "name: " << e.name << "\nkind: " << to_string(e.kind) << "\nsign: " << to_string(e.sign)
        << "\ndim: " << total.dim() << "\nbasis:";
    for (const auto& l : total.labels()) out << ' ' << l;
    out << '\n';
    for (const auto& t : total.upper_triples())
      out << fmt::format("c({}, {}; {}) = {}\n", total.labels()[t.i - 1], total.labels()[t.j - 1],
                         total.labels()[t.k - 1], to_string(t.v));
    for (const auto& c : e.casimirs) out << "casimir " << c.name << " = " << to_string(c.polynomial) << '\n';
    for (const auto& a : e.annotations) out << "note: " << a << '\n';
    return kExitOk;
  });
}

namespace {

// Values from --config fill the options before the command line is applied on top of them.
void apply_config(const Json& cfg, SimulateOptions& s, VerifyOptions& v, MetricOptions& m, CasimirOptions& c) {
  auto str = [&](const char* key, auto setter) {
    if (cfg.contains(key)) {
      const Json& x = cfg[key];
      setter(x.is_string() ? x.get<std::string>() : x.dump());
    }
  };
  str("spec", [&](std::string x) { s.spec = v.spec = m.spec = c.spec = x; });
  str("sign", [&](std::string x) { s.sign = x; m.sign = x; });
  str("h", [&](std::string x) { s.h = x; });
  str("s", [&](std::string x) { s.s = x; });
  str("dissipation", [&](std::string x) { s.dissipation = x; });
  str("a", [&](std::string x) { s.a = x; });
  str("method", [&](std::string x) { s.method = x; });
  str("out", [&](std::string x) { s.out = x; });
  str("manifest", [&](std::string x) { s.manifest = x; });
  str("kind", [&](std::string x) { v.kind = x; });
  str("variant", [&](std::string x) { m.variant = x; });
  str("at", [&](std::string x) { m.at = x; });
  if (cfg.contains("z0")) {
    const Json& z = cfg["z0"];
    if (z.is_array()) {
      std::string t;
      for (const auto& x : z) t += (t.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
      s.z0 = t;
    } else {
      s.z0 = z.get<std::string>();
    }
  }
  if (cfg.contains("dt")) s.dt = cfg["dt"].is_string() ? std::stod(cfg["dt"].get<std::string>()) : cfg["dt"].get<double>();
  if (cfg.contains("steps")) s.steps = cfg["steps"].get<long>();
  if (cfg.contains("stride")) s.stride = cfg["stride"].get<long>();
  if (cfg.contains("json")) v.json = m.json = c.json = cfg["json"].get<bool>();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  VerifyOptions vopt;
  SimulateOptions sopt;
  MetricOptions mopt;
  CasimirOptions copt;
  std::string catalog_name;

  std::string config_path;
  for (std::size_t i = 1; i + 1 < args.size(); ++i)
    if (args[i] == "--config") config_path = args[i + 1];
  if (!config_path.empty()) {
    int rc = guarded(err, [&] {
      apply_config(read_json_file(config_path), sopt, vopt, mopt, copt);
      return kExitOk;
    });
    if (rc != kExitOk) return rc;
    sopt.input_files.push_back(config_path);
  }

  CLI::App app{"Lie algebra extensions, Lie-Poisson and metriplectic dynamics"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", config_path, "JSON file with option values; command-line flags override it");

  // Optional string fields are bound through plain strings and copied back when given.
  std::string sign, s_obs, diss, a_coef, out_path, manifest, kind, at, msign;

  auto* verify = app.add_subcommand("verify", "Verify an algebra, extension or coupling spec");
  verify->add_option("spec", vopt.spec, "Catalog name or JSON path");
  auto* kind_opt = verify->add_option("--kind", kind, "algebra | extension | coupling")
                       ->check(CLI::IsMember({"algebra", "extension", "coupling"}));
  verify->add_flag("--json", vopt.json, "Print the report as JSON");

  auto* sim = app.add_subcommand("simulate", "Integrate Lie-Poisson or metriplectic dynamics");
  sim->set_help_flag("--help", "Print this help message and exit");
  sim->add_option("spec", sopt.spec, "Catalog name or JSON path");
  auto* sign_opt = sim->add_option("--sign", sign, "plus | minus (default: the entry's sign)");
  sim->add_option("--h", sopt.h, "Hamiltonian: expression in z1..zn or polynomial JSON");
  auto* s_opt = sim->add_option("--s", s_obs, "Entropy-type generator");
  auto* d_opt = sim->add_option("--dissipation", diss, "Dissipation spec: inline JSON or file");
  auto* a_opt = sim->add_option("--a", a_coef, "Coupling constant of the dissipative part");
  sim->add_option("--z0", sopt.z0, "Initial state, comma separated rationals");
  sim->add_option("--method", sopt.method, "rk4 | euler")->check(CLI::IsMember({"rk4", "euler"}));
  sim->add_option("--dt", sopt.dt, "Step size");
  sim->add_option("--steps", sopt.steps, "Number of steps");
  sim->add_option("--stride", sopt.stride, "Record every n-th step");
  auto* out_opt = sim->add_option("--out", out_path, "CSV output file (stdout when absent)");
  auto* man_opt = sim->add_option("--manifest", manifest, "Manifest file (default <out>.manifest.json)");

  auto* metric = app.add_subcommand("metric", "Print the Cartan-Killing or double-bracket metric");
  metric->add_option("spec", mopt.spec, "Catalog name or JSON path");
  metric->add_option("--variant", mopt.variant, "ck | double")->check(CLI::IsMember({"ck", "double"}));
  auto* at_opt = metric->add_option("--at", at, "State for the double-bracket metric");
  auto* msign_opt = metric->add_option("--sign", msign, "plus | minus");
  metric->add_flag("--json", mopt.json, "Print JSON");

  auto* cas = app.add_subcommand("casimirs", "Basis of linear Casimir functions");
  cas->add_option("spec", copt.spec, "Catalog name or JSON path");
  cas->add_flag("--json", copt.json, "Print JSON");

  auto* cat = app.add_subcommand("catalog", "List fixtures or describe one");
  auto* cat_name = cat->add_option("name", catalog_name, "Fixture name");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitSchema;
  }

  if (kind_opt->count()) vopt.kind = kind;
  if (sign_opt->count()) sopt.sign = sign;
  if (s_opt->count()) sopt.s = s_obs;
  if (d_opt->count()) sopt.dissipation = diss;
  if (a_opt->count()) sopt.a = a_coef;
  if (out_opt->count()) sopt.out = out_path;
  if (man_opt->count()) sopt.manifest = manifest;
  if (at_opt->count()) mopt.at = at;
  if (msign_opt->count()) mopt.sign = msign;

  auto need_spec = [&](const std::string& spec) {
    if (spec.empty()) {
      err << "a spec (catalog name or path) is required\n";
      return false;
    }
    return true;
  };
  if (verify->parsed()) return need_spec(vopt.spec) ? cmd_verify(vopt, out, err) : kExitSchema;
  if (sim->parsed()) return need_spec(sopt.spec) ? cmd_simulate(sopt, out, err) : kExitSchema;
  if (metric->parsed()) return need_spec(mopt.spec) ? cmd_metric(mopt, out, err) : kExitSchema;
  if (cas->parsed()) return need_spec(copt.spec) ? cmd_casimirs(copt, out, err) : kExitSchema;
  if (cat->parsed())
    return cmd_catalog(cat_name->count() ? std::optional<std::string>(catalog_name) : std::nullopt, out, err);
  return kExitSchema;
}

}  // namespace liepoisson::cli
