#include "liepoisson/scalar.hpp"

#include <set>
#include <sstream>
#include <tuple>

#include "liepoisson/errors.hpp"

namespace liepoisson {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Scalar out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw SchemaError("bad rational: " + std::string(s));
    mpz_class d(std::string(den), 10);
    if (d == 0) throw SchemaError("zero denominator: " + std::string(s));
    out = Scalar(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw SchemaError("bad decimal: " + std::string(s));
    mpz_class den = 1;
    for (std::size_t n = 0; n < fp.size(); ++n) den *= 10;
    out = Scalar(mpz_class(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10), den);
  } else {
    if (!all_digits(body)) throw SchemaError("bad integer: " + std::string(s));
    out = Scalar(mpz_class(std::string(body), 10));
  }
  out.canonicalize();
  return negative ? Scalar(-out) : out;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

ExactVec parse_state(std::string_view csv) {
  ExactVec out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto comma = csv.find(',', start);
    auto piece = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_scalar(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Vec to_double(const ExactVec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

Tensor3::Tensor3(int n0, int n1, int n2)
    : n0_(n0), n1_(n1), n2_(n2), data_(static_cast<std::size_t>(n0) * n1 * n2) {
  if (n0 < 0 || n1 < 0 || n2 < 0) throw ShapeError("negative tensor extent");
}

bool Tensor3::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Tensor3::operator==(const Tensor3& other) const {
  return n0_ == other.n0_ && n1_ == other.n1_ && n2_ == other.n2_ && data_ == other.data_;
}

namespace {

void check_range(const Tensor3& t, const Triple& e) {
  if (e.i < 1 || e.i > t.dim0() || e.j < 1 || e.j > t.dim1() || e.k < 1 || e.k > t.dim2()) {
    std::ostringstream msg;
    msg << "index (" << e.i << "," << e.j << "," << e.k << ") out of range";
    throw ShapeError(msg.str());
  }
}

}  // namespace

void fill_entries(Tensor3& t, const std::vector<Triple>& entries) {
  for (const auto& e : entries) check_range(t, e);
  for (const auto& e : entries) t(e.i - 1, e.j - 1, e.k - 1) = e.v;
}

void fill_alternating(Tensor3& t, const std::vector<Triple>& entries) {
  std::set<std::tuple<int, int, int>> given;
  for (const auto& e : entries) {
    check_range(t, e);
    given.emplace(e.i, e.j, e.k);
  }
  for (const auto& e : entries) {
    t(e.i - 1, e.j - 1, e.k - 1) = e.v;
    if (e.i != e.j && !given.count({e.j, e.i, e.k})) t(e.j - 1, e.i - 1, e.k - 1) = -e.v;
  }
}

std::vector<Triple> nonzero_triples(const Tensor3& t) {
  std::vector<Triple> out;
  for (int a = 0; a < t.dim0(); ++a)
    for (int b = 0; b < t.dim1(); ++b)
      for (int c = 0; c < t.dim2(); ++c)
        if (t(a, b, c) != 0) out.push_back({a + 1, b + 1, c + 1, t(a, b, c)});
  return out;
}

Matrix identity_matrix(int n) {
  Matrix m(n, ExactVec(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace liepoisson
