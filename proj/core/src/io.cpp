#include "liepoisson/io.hpp"

#include <cctype>
#include <fstream>

namespace liepoisson {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

int positive_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long>() <= 0) throw SchemaError(std::string("'") + key + "' must be a positive integer");
  return v.get<int>();
}

std::vector<std::string> labels_from_json(const Json& j, const char* key, int n, const std::string& stem) {
  auto it = j.find(key);
  if (it == j.end()) return default_labels(stem, n);
  if (!it->is_array() || static_cast<int>(it->size()) != n) throw SchemaError(std::string("'") + key + "' must list one label per basis vector");
  std::vector<std::string> out;
  for (const auto& s : *it) {
    if (!s.is_string()) throw SchemaError("labels must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Tensor3 tensor_field(const Json& j, const char* key, int n0, int n1, int n2, bool alternating) {
  Tensor3 t(n0, n1, n2);
  auto it = j.find(key);
  if (it == j.end()) return t;
  auto entries = triples_from_json(*it);
  if (alternating)
    fill_alternating(t, entries);
  else
    fill_entries(t, entries);
  return t;
}

Json labels_json(const std::vector<std::string>& labels) { return Json(labels); }

}  // namespace

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(mpz_class(std::to_string(j.get<long long>())));
  throw SchemaError("scalars must be rational strings or integers, got " + j.dump());
}

std::vector<Triple> triples_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("tensor entries must be an array");
  std::vector<Triple> out;
  for (const auto& e : j) {
    auto idx = [&](const char* key) {
      const Json& v = field(e, key);
      if (!v.is_number_integer()) throw SchemaError(std::string("index '") + key + "' must be an integer");
      return v.get<int>();
    };
    out.push_back({idx("i"), idx("j"), idx("k"), scalar_from_json(field(e, "v"))});
  }
  return out;
}

Json triples_to_json(const std::vector<Triple>& t) {
  Json out = Json::array();
  for (const auto& e : t) out.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"v", to_string(e.v)}});
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("matrix must be an array of rows");
  Matrix m;
  for (const auto& row : j) m.push_back(state_from_json(row));
  for (const auto& row : m)
    if (row.size() != m.size()) throw SchemaError("matrix must be square");
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(vector_to_json(row));
  return out;
}

ExactVec state_from_json(const Json& j) {
  if (j.is_string()) return parse_state(j.get<std::string>());
  if (!j.is_array()) throw SchemaError("vector must be an array");
  ExactVec v;
  for (const auto& x : j) {
    if (x.is_number_float()) throw SchemaError("use rational strings instead of floating point numbers: " + x.dump());
    v.push_back(scalar_from_json(x));
  }
  return v;
}

Json vector_to_json(const ExactVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  const int n = positive_int(j, "dim");
  auto labels = labels_from_json(j, "labels", n, "e");
  auto it = j.find("c");
  std::vector<Triple> c = it == j.end() ? std::vector<Triple>{} : triples_from_json(*it);
  return LieAlgebra(n, labels, c);
}

Json algebra_to_json(const LieAlgebra& alg) {
  return {{"dim", alg.dim()}, {"labels", labels_json(alg.labels())}, {"c", triples_to_json(alg.upper_triples())}};
}

ExtendedStructure extension_from_json(const Json& j) {
  ExtendedStructure s;
  s.g = algebra_from_json(field(j, "g"));
  const int n = s.g.dim();
  const int m = positive_int(j, "dimH");
  s.dimH = m;
  s.h_labels = labels_from_json(j, "h_labels", m, "f");
  s.phi = tensor_field(j, "phi", m, m, n, true);
  s.kappa = tensor_field(j, "kappa", m, m, m, true);
  s.actions = ActionTensors::zero(n, m);
  s.actions.L = tensor_field(j, "L", m, n, n, false);
  s.actions.R = tensor_field(j, "R", m, n, m, false);
  s.check_shape();
  return s;
}

Json extension_to_json(const ExtendedStructure& s) {
  return {{"g", algebra_to_json(s.g)},
          {"dimH", s.dimH},
          {"h_labels", labels_json(s.h_labels)},
          {"phi", triples_to_json(nonzero_triples(s.phi))},
          {"kappa", triples_to_json(nonzero_triples(s.kappa))},
          {"L", triples_to_json(nonzero_triples(s.actions.L))},
          {"R", triples_to_json(nonzero_triples(s.actions.R))}};
}

CocycleCoupling coupling_from_json(const Json& j) {
  LieAlgebra l = algebra_from_json(field(j, "l"));
  LieAlgebra k = algebra_from_json(field(j, "k"));
  const int dV = positive_int(j, "dimV"), dW = positive_int(j, "dimW");
  const int dl = l.dim(), dk = k.dim();
  CocycleCoupling s = CocycleCoupling::zero(l, k, dV, dW);
  s.varphi = tensor_field(j, "varphi", dl, dl, dV, true);
  s.phi2 = tensor_field(j, "phi2", dk, dk, dW, true);
  s.actL = tensor_field(j, "actL", dl, dV, dV, false);
  s.actK = tensor_field(j, "actK", dk, dW, dW, false);
  s.blackR = tensor_field(j, "blackR", dk, dl, dl, false);
  s.blackL = tensor_field(j, "blackL", dk, dl, dk, false);
  s.curvR = tensor_field(j, "curvR", dk, dV, dV, false);
  s.curvL = tensor_field(j, "curvL", dW, dl, dW, false);
  s.eps = tensor_field(j, "eps", dk, dl, dV, false);
  s.iota = tensor_field(j, "iota", dk, dl, dW, false);
  s.check_shape();
  return s;
}

Json coupling_to_json(const CocycleCoupling& s) {
  auto t = [](const Tensor3& x) { return triples_to_json(nonzero_triples(x)); };
  return {{"l", algebra_to_json(s.l)},       {"k", algebra_to_json(s.k)},   {"dimV", s.dimV},
          {"dimW", s.dimW},                  {"varphi", t(s.varphi)},       {"phi2", t(s.phi2)},
          {"actL", t(s.actL)},               {"actK", t(s.actK)},           {"blackR", t(s.blackR)},
          {"blackL", t(s.blackL)},           {"curvR", t(s.curvR)},         {"curvL", t(s.curvL)},
          {"eps", t(s.eps)},                 {"iota", t(s.iota)}};
}

Polynomial polynomial_from_json(const Json& j, int arity) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), arity);
  if (!j.is_object()) throw SchemaError("observable must be an object or an expression string");
  if (j.contains("quadratic")) {
    auto w = state_from_json(j["quadratic"]);
    if (static_cast<int>(w.size()) != arity) throw DimensionMismatch(arity, w.size());
    return Polynomial::half_weighted_squares(w);
  }
  if (j.contains("linear")) {
    auto w = state_from_json(j["linear"]);
    if (static_cast<int>(w.size()) != arity) throw DimensionMismatch(arity, w.size());
    return Polynomial::linear(w);
  }
  if (j.contains("arity") && j["arity"] != arity) throw DimensionMismatch(arity, j["arity"].get<std::size_t>());
  std::vector<Monomial> terms;
  for (const auto& t : j.contains("monomials") ? j["monomials"] : field(j, "terms")) {
    Monomial m{scalar_from_json(field(t, "coeff")), {}};
    for (const auto& p : field(t, "powers")) {
      if (!p.is_number_integer()) throw SchemaError("powers must be integers");
      m.powers.push_back(p.get<int>());
    }
    if (static_cast<int>(m.powers.size()) != arity) throw DimensionMismatch(arity, m.powers.size());
    terms.push_back(m);
  }
  return Polynomial(arity, terms);
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& m : p.terms()) terms.push_back({{"coeff", to_string(m.coeff)}, {"powers", m.powers}});
  return {{"arity", p.arity()}, {"monomials", terms}};
}

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, int arity) : s_(text), n_(arity) {}

  Polynomial parse() {
    std::vector<Monomial> terms;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Monomial m = term();
      if (sign < 0) m.coeff = -m.coeff;
      terms.push_back(m);
      first = false;
      skip();
    }
    if (first) fail("empty expression");
    return Polynomial(n_, terms);
  }

 private:
  Monomial term() {
    Monomial m{Scalar(1), std::vector<int>(n_, 0)};
    factor(m);
    skip();
    while (peek() == '*') {
      get();
      skip();
      factor(m);
      skip();
    }
    return m;
  }

  void factor(Monomial& m) {
    if (peek() == 'z') {
      get();
      int idx = integer();
      if (idx < 1 || idx > n_) fail("variable index out of range");
      int power = 1;
      skip();
      if (peek() == '^') {
        get();
        skip();
        power = integer();
      }
      m.powers[idx - 1] += power;
    } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') get();
      if (peek() == '/') {
        get();
        while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      }
      m.coeff *= parse_scalar(s_.substr(start, pos_ - start));
    } else if (peek() == '(') {
      get();
      skip();
      int sign = 1;
      if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
      std::size_t start = pos_;
      while (pos_ < s_.size() && peek() != ')') get();
      if (peek() != ')') fail("unclosed parenthesis");
      m.coeff *= parse_scalar(s_.substr(start, pos_ - start)) * sign;
      get();
    } else {
      fail("unexpected character");
    }
  }

  int integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (start == pos_) fail("expected an integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SchemaError("polynomial '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int arity) { return ExprParser(text, arity).parse(); }

std::string to_string(const Polynomial& p) {
  if (p.terms().empty()) return "0";
  std::string out;
  // Highest powers of z1 first; the constant term, if any, comes last.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Monomial& m = *it;
    Scalar c = m.coeff;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string vars;
    for (std::size_t i = 0; i < m.powers.size(); ++i) {
      if (m.powers[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "z" + std::to_string(i + 1);
      if (m.powers[i] > 1) vars += "^" + std::to_string(m.powers[i]);
    }
    if (vars.empty())
      out += to_string(c);
    else if (c == 1)
      out += vars;
    else
      out += to_string(c) + "*" + vars;
  }
  return out;
}

SymmetricBracketSpec dissipation_from_json(const Json& j, int dim) {
  SymmetricBracketSpec s;
  s.variant = parse_variant(field(j, "variant").get<std::string>());
  if (j.contains("psi")) s.psi = matrix_from_json(j["psi"]);
  if (j.contains("casimir")) s.casimir = Observable(polynomial_from_json(j["casimir"], dim));
  if (j.contains("upsilon")) s.upsilon = matrix_from_json(j["upsilon"]);
  if (j.contains("a")) s.a = scalar_from_json(j["a"]);
  s.validate(dim);
  return s;
}

Json report_to_json(const VerificationReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json e = {{"id", c.id}, {"worst", to_string(c.worst)}, {"pass", c.pass}, {"diagnostic", c.diagnostic}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.note.empty()) e["note"] = c.note;
    conds.push_back(e);
  }
  Json out = {{"schema", 1}, {"pass", r.pass()}, {"conditions", conds}};
  if (r.total_jacobi) out["total_jacobi"] = to_string(*r.total_jacobi);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

}  // namespace liepoisson
