#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liepoisson/algebra.hpp"

namespace liepoisson {

// f_a |> e_alpha = sum_beta L[a][alpha][beta] e_beta   (M x N x N)
// f_a <| e_alpha = sum_b    R[a][alpha][b]    f_b      (M x N x M)
struct ActionTensors {
  int dimG = 0;
  int dimH = 0;
  Tensor3 L;
  Tensor3 R;

  static ActionTensors zero(int dimG, int dimH);
};

// Data of the extended-structure bracket on g + h:
//   [x + u, y + w] = ([x,y] + u |> y - w |> x + Phi(u,w)) + (kappa(u,w) + u <| y - w <| x)
struct ExtendedStructure {
  LieAlgebra g;
  int dimH = 0;
  Tensor3 phi;    // Phi[a][b][alpha], M x M x N
  Tensor3 kappa;  // kappa[a][b][d],   M x M x M
  ActionTensors actions;
  std::vector<std::string> h_labels;

  int dimG() const { return g.dim(); }
  void check_shape() const;
};

struct ConditionResult {
  std::string id;
  Scalar worst = 0;
  std::vector<int> witness;  // 1-based; input basis indices followed by the output component
  bool pass = true;
  bool diagnostic = false;  // reported, but not part of the overall verdict
  std::string note;
};

struct VerificationReport {
  std::vector<ConditionResult> conditions;
  // Independent residual of the assembled total, when one exists.
  std::optional<Scalar> total_jacobi;

  bool pass() const;
  const ConditionResult* find(const std::string& id) const;
};

class NotMatched : public Error {
 public:
  explicit NotMatched(VerificationReport r);
  VerificationReport report;
};

class NotACocycle : public Error {
 public:
  explicit NotACocycle(VerificationReport r);
  VerificationReport report;
};

// Total constants in g-then-h order. Raises ShapeError for malformed or non-alternating tensors.
LieAlgebra assemble_total_constants(const ExtendedStructure& spec);

// Evaluates "thm31.g-jacobi" and "thm31.cond1".."thm31.cond7" on all basis tuples.
// cond1 is alternation of kappa and Phi, cond2/cond3 the kappa compatibilities with <| and |>,
// cond4/cond5 the |> and <| identities on [x,y], cond6/cond7 the cyclic identities for Phi and kappa.
VerificationReport verify_extended_structure(const ExtendedStructure& spec);

VerificationReport verify_matched_pair(const ExtendedStructure& spec);
ExtendedStructure build_matched_pair(const LieAlgebra& g, const LieAlgebra& h, const ActionTensors& actions);

// h acting on the abelian V; encoded with g := V, R := 0, kappa := constants of h.
// left_act[a][v][v'] means f_a |> v_v = sum left_act[a][v][v'] v_v'.
VerificationReport verify_cocycle_extension(const ExtendedStructure& spec);
ExtendedStructure build_cocycle_extension(const LieAlgebra& h, int dimV, const Tensor3& phi, const Tensor3& left_act);

// g_indices are 0-based positions in total; the complement in increasing order spans h.
ExtendedStructure decompose_along_subalgebra(const LieAlgebra& total, const std::vector<int>& g_indices);

// Relabels basis vectors: new basis element p is old basis element perm[p].
LieAlgebra permute_basis(const LieAlgebra& alg, const std::vector<int>& perm);

// Two 2-cocycle extensions V x_varphi l and W x_phi2 k coupled through cross data.
struct CocycleCoupling {
  LieAlgebra l, k;
  int dimV = 0, dimW = 0;
  Tensor3 varphi;  // [l][l'][v]
  Tensor3 phi2;    // [k][k'][w]
  Tensor3 actL;    // l on V:  [l][v][v']
  Tensor3 actK;    // k on W:  [k][w][w']
  Tensor3 blackR;  // k on l:  [k][l][l']
  Tensor3 blackL;  // l on k from the right: [k][l][k']
  Tensor3 curvR;   // k on V:  [k][v][v']
  Tensor3 curvL;   // l on W from the right: [w][l][w']
  Tensor3 eps;     // [k][l][v]
  Tensor3 iota;    // [k][l][w]

  static CocycleCoupling zero(const LieAlgebra& l, const LieAlgebra& k, int dimV, int dimW);
  void check_shape() const;
};

struct CouplingResult {
  LieAlgebra total;            // matched pair of the two extensions, order (v, l, w, k)
  LieAlgebra theta_total;      // Theta-extension of the matched base, order (v, w, l, k)
  Tensor3 theta;               // [x][y][u] over the base basis (l, k) into (v, w)
  ExtendedStructure route_a;   // the matched pair, as extended-structure data
  ExtendedStructure route_b;   // the Theta-extension, as extended-structure data
  std::vector<int> permutation;  // theta_total basis p equals total basis permutation[p]
  VerificationReport report;
};

// Throws NotMatched when l and k are not matched under the two mutual actions,
// NotACocycle when the Theta-extension fails.
CouplingResult couple_cocycle_extensions(const CocycleCoupling& spec);

}  // namespace liepoisson
