#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mckay/numeric.hpp"
#include "mckay/root_systems.hpp"

namespace mckay {

enum class ArrowKind { Edge, Loop, Framing };

struct Arrow {
  ArrowKind kind;
  int source;  // -1 stands for the framing vertex
  int target;
  std::string label;  // "r_{i,j}", "r_{i,j}#k" for parallel edges, "l_i", "r_inf"

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct QuiverVertex {
  int index;
  int dimension;
};

/// Doubled extended Dynkin diagram with one loop per vertex, optionally
/// framed by an arrow from the extra vertex into rho_0.
struct QuiverData {
  DynkinLabel label;
  std::vector<QuiverVertex> vertices;
  std::vector<Arrow> arrows;
  bool framed = false;

  const Arrow& arrow(const std::string& label) const;
};

/// One signed cubic monomial of the superpotential. `path` lists the arrows
/// in traversal order: path[k].target == path[k+1].source, and the last arrow
/// returns to the first source.
struct SuperpotentialTerm {
  int sign;
  std::vector<Arrow> path;
};

QuiverData mckay_quiver(const DynkinLabel& label, bool framed);

/// For every Dynkin edge rho -> rho' (rho < rho'):
///   + l_rho r_{rho,rho'} r_{rho',rho}   and   - r_{rho',rho} r_{rho,rho'} l_{rho'}
std::vector<SuperpotentialTerm> superpotential(const QuiverData& quiver);

/// Rational stability parameter, optionally perturbed by a symbolic
/// infinitesimal: zeta + sign * eps * direction with 0 < eps << everything.
class StabilityParameter {
 public:
  struct Perturbation {
    std::vector<Rational> direction;
    int sign;
  };

  explicit StabilityParameter(std::vector<Rational> base) : base_(std::move(base)) {}
  StabilityParameter(std::vector<Rational> base, Perturbation perturbation);

  /// Parses comma-separated rationals, e.g. "1,-2/3,5".
  static StabilityParameter parse(std::string_view text);

  std::size_t size() const { return base_.size(); }
  const std::vector<Rational>& base() const { return base_; }
  const std::optional<Perturbation>& perturbation() const { return perturbation_; }
  bool perturbed() const { return perturbation_.has_value(); }

  /// Pairing with an integer vector as (base value, coefficient of eps).
  struct Value {
    Rational base;
    Rational infinitesimal;
    /// Lexicographic sign: -1, 0 or +1.
    int sign() const;
  };
  Value dot(const RootVector& x) const;

  std::string to_string() const;

 private:
  std::vector<Rational> base_;
  std::optional<Perturbation> perturbation_;
};

/// zeta^im: -r at rho_0 (r = sum of the other dimensions), 1 elsewhere.
StabilityParameter zeta_imaginary(const DynkinLabel& label);

/// zeta^im with +eps (side > 0) or -eps (side < 0) added at rho_0.
StabilityParameter zeta_im_perturbed(const DynkinLabel& label, int side);

/// (zeta . v + zeta_inf * v_inf) / (|v| + v_inf). Throws InvalidArgument on a
/// zero total dimension or a perturbed parameter.
Rational theta_slope(const StabilityParameter& zeta, const Rational& zeta_inf, const RootVector& v, int v_inf);

/// The zeta_inf making theta_slope(zeta, zeta_inf, v, 1) vanish.
Rational solve_zeta_infinity(const StabilityParameter& zeta, const RootVector& v);

/// A wall zeta . alpha = 0. Real walls carry exactly one root; the imaginary
/// wall carries delta, 2 delta, ... up to the bound.
struct Wall {
  RootVector normal;
  std::vector<RootVector> roots;
  bool imaginary = false;
};

std::vector<Wall> walls(const DynkinLabel& label, int degree_bound);

struct WallCrossing {
  Wall wall;
  Rational parameter;  // crossing point t in (0, 1) along from + t (to - from)
  int direction;       // +1: entering zeta . alpha < 0, -1: leaving it
};

/// Walls crossed by the straight segment from `from` to `to`, ordered by the
/// crossing parameter. Throws NonGenericPath when an endpoint lies on a wall
/// or two walls are crossed at the same point.
std::vector<WallCrossing> crossed_walls(const DynkinLabel& label, const StabilityParameter& from,
                                        const StabilityParameter& to, int degree_bound);

/// split_real_roots for an unperturbed parameter.
RootSplit split_real_roots(std::span<const AffineRealRoot> roots, const StabilityParameter& zeta);

struct DtIndex {
  int n;
  std::vector<int> beta;  // indexed by rho_1 .. rho_{N-1}
  friend bool operator==(const DtIndex&, const DtIndex&) = default;
};

/// n = v_0, beta_rho = v_0 dim(rho) - v_rho.
DtIndex dt_invariant_indexing(const RootVector& v, const DynkinLabel& label);

/// Plain-text rendering: one arrow per line, then W as a signed term list.
std::string to_plain(const QuiverData& quiver, const std::vector<SuperpotentialTerm>& terms);

}  // namespace mckay
