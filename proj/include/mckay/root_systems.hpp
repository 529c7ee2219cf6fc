#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mckay/numeric.hpp"

namespace mckay {

enum class Family { A, D, E };

/// Simply-laced Dynkin type: A_n (n >= 1), D_n (n >= 4), E_6, E_7, E_8.
class DynkinLabel {
 public:
  /// Throws InvalidLabel when the rank is not allowed for the family.
  DynkinLabel(Family family, int rank);

  /// Case-insensitive "A3", "d5", "E7".
  static DynkinLabel parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// Number of irreducible representations, i.e. affine vertex count.
  int affine_size() const { return rank_ + 1; }
  std::string to_string() const;

  friend bool operator==(const DynkinLabel&, const DynkinLabel&) = default;

 private:
  Family family_;
  int rank_;
};

/// Integer vector indexed by quiver vertices (roots, dimension vectors).
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::vector<int> entries) : entries_(std::move(entries)) {}
  RootVector(std::initializer_list<int> entries) : entries_(entries) {}

  static RootVector zero(std::size_t size) { return RootVector(std::vector<int>(size, 0)); }
  static RootVector basis(std::size_t size, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Entry sum.
  int height() const;
  bool is_zero() const;
  bool is_nonnegative() const;

  RootVector& operator+=(const RootVector& other);
  RootVector& operator-=(const RootVector& other);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator-(RootVector a);
  friend RootVector operator*(int scalar, RootVector a);

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// Deterministic ordering used everywhere: (entry sum, lexicographic).
bool graded_less(const RootVector& a, const RootVector& b);

/// Finite or extended ADE graph with a frozen vertex indexing.
///
/// Affine graphs put the affine vertex rho_0 at index 0; a finite graph is
/// the affine graph with rho_0 deleted, so finite vertex j is affine vertex
/// j + 1.  Layouts:
///   A_n : cycle 0-1-...-n-0 (double edge 0=1 for n = 1)
///   D_n : chain 3-4-...-(n-1); 0 and 2 hang off 3, 1 and n hang off n-1
///   E_6 : row 1-2-3-4-5, branch 6 on 3, rho_0 on 6
///   E_7 : row 0-1-2-3-4-5-6, branch 7 on 3
///   E_8 : row 0-1-2-3-4-5-6-7, branch 8 on 5
class DynkinGraph {
 public:
  DynkinGraph(DynkinLabel label, bool affine);

  const DynkinLabel& label() const { return label_; }
  bool affine() const { return affine_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  /// b_ij: edge multiplicity for i != j, twice the loop count on the diagonal.
  int adjacency(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  std::optional<std::size_t> affine_vertex_index() const {
    return affine_ ? std::optional<std::size_t>(0) : std::nullopt;
  }
  /// Unordered edges {i, j}, i < j, repeated by multiplicity.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  DynkinLabel label_;
  bool affine_;
  std::vector<std::vector<int>> adjacency_;
};

DynkinGraph build_diagram(const DynkinLabel& label, bool affine);

/// Sum_{i,j} x_i y_j (delta_ij - b_ij / 2).
Rational bilinear_form(const DynkinGraph& graph, const RootVector& x, const RootVector& y);

/// Q(x) = (x, x).
Rational quadratic_form(const DynkinGraph& graph, const RootVector& x);

/// x - 2 (x, alpha_i) alpha_i.
RootVector reflect(const DynkinGraph& graph, std::size_t vertex, const RootVector& x);

/// Positive roots of the finite system, length rank, sorted by graded_less.
std::vector<RootVector> finite_positive_roots(const DynkinLabel& label);

/// Embeds a finite-graph vector into affine indexing with 0 at rho_0.
RootVector embed_finite(const RootVector& finite);

/// delta: dimensions of the irreducible representations, affine length.
RootVector imaginary_root(const DynkinLabel& label);

/// Positive real affine root with vector = m * delta + sign * beta.
struct AffineRealRoot {
  RootVector vector;
  int m = 0;
  RootVector beta;  // affine length, 0 at rho_0
  int sign = 1;

  friend bool operator==(const AffineRealRoot&, const AffineRealRoot&) = default;
};

/// All m*delta + beta (m >= 0) and m*delta - beta (m >= 1) with entry sum
/// <= degree_bound, sorted by graded_less on the vector.
std::vector<AffineRealRoot> affine_positive_real_roots(const DynkinLabel& label, int degree_bound);

struct RealRootClass {
  int m;
  RootVector beta;
  int sign;
  friend bool operator==(const RealRootClass&, const RealRootClass&) = default;
};
struct ImaginaryRootClass {
  int m;
  friend bool operator==(const ImaginaryRootClass&, const ImaginaryRootClass&) = default;
};
struct NotARoot {
  friend bool operator==(const NotARoot&, const NotARoot&) = default;
};
using RootClass = std::variant<RealRootClass, ImaginaryRootClass, NotARoot>;

/// Classifies a nonnegative vector against an affine graph.
RootClass classify_vector(const DynkinGraph& graph, const RootVector& x);

Rational dot(std::span<const Rational> zeta, const RootVector& x);

struct RootSplit {
  std::vector<AffineRealRoot> negative_side;
  std::vector<AffineRealRoot> positive_side;
};

/// Partitions roots by the sign of zeta . alpha. Throws NonGenericParameter
/// naming the first root with zero pairing.
RootSplit split_real_roots(std::span<const AffineRealRoot> roots, std::span<const Rational> zeta);

}  // namespace mckay
