#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liepoisson {

using Scalar = mpq_class;
using Vec = std::vector<double>;
using ExactVec = std::vector<Scalar>;

// Accepts "p/q", "-p", "p" and decimal literals such as "0.25" (converted exactly).
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);

inline Scalar abs(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }

template <class T>
T convert(const Scalar& x);
template <>
inline Scalar convert<Scalar>(const Scalar& x) { return x; }
template <>
inline double convert<double>(const Scalar& x) { return x.get_d(); }

ExactVec parse_state(std::string_view csv);
Vec to_double(const ExactVec& v);

// Dense rank-3 array, 0-based. Shapes are small (at most a few dozen per axis).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int n0, int n1, int n2);

  int dim0() const { return n0_; }
  int dim1() const { return n1_; }
  int dim2() const { return n2_; }

  Scalar& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }
  const Scalar& operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }

  bool is_zero() const;
  bool operator==(const Tensor3& other) const;

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n1_ + b) * n2_ + c;
  }
  int n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<Scalar> data_;
};

// External 1-based sparse entry.
struct Triple {
  int i, j, k;
  Scalar v;
};

// Fills t from triples; when an entry's (j,i,k) partner is absent it is set to the negative.
// Out-of-range indices raise ShapeError.
void fill_alternating(Tensor3& t, const std::vector<Triple>& entries);
// Writes the triples as given; no partner entries are added.
void fill_entries(Tensor3& t, const std::vector<Triple>& entries);
std::vector<Triple> nonzero_triples(const Tensor3& t);

using Matrix = std::vector<ExactVec>;
Matrix identity_matrix(int n);

}  // namespace liepoisson
