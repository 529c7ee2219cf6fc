#include "mckay/root_systems.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

// ---------------------------------------------------------------------------
// DynkinLabel

DynkinLabel::DynkinLabel(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) throw InvalidLabel("invalid rank " + std::to_string(rank) + " for family " + to_string().substr(0, 1) +
                              " (accepted: A1.., D4.., E6, E7, E8)");
}

DynkinLabel DynkinLabel::parse(std::string_view text) {
  const std::string grammar = " (expected a family letter A, D or E followed by a rank, e.g. A3, D5, E7)";
  if (text.size() < 2) throw InvalidLabel("invalid label '" + std::string(text) + "'" + grammar);
  Family family;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': family = Family::A; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    default: throw InvalidLabel("invalid label '" + std::string(text) + "'" + grammar);
  }
  auto digits = text.substr(1);
  if (digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw InvalidLabel("invalid label '" + std::string(text) + "'" + grammar);
  return DynkinLabel(family, std::stoi(std::string(digits)));
}

std::string DynkinLabel::to_string() const {
  const char letter = family_ == Family::A ? 'A' : family_ == Family::D ? 'D' : 'E';
  return letter + std::to_string(rank_);
}

// ---------------------------------------------------------------------------
// RootVector

RootVector RootVector::basis(std::size_t size, std::size_t index) {
  RootVector v = zero(size);
  v.entries_.at(index) = 1;
  return v;
}

int RootVector::height() const {
  int sum = 0;
  for (int e : entries_) sum += e;
  return sum;
}

bool RootVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

bool RootVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e >= 0; });
}

static void require_same_size(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("vector lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

RootVector& RootVector::operator+=(const RootVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

RootVector operator-(RootVector a) {
  for (int& e : a.entries_) e = -e;
  return a;
}

RootVector operator*(int scalar, RootVector a) {
  for (int& e : a.entries_) e *= scalar;
  return a;
}

std::string RootVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) out << (i ? "," : "") << entries_[i];
  out << ')';
  return out.str();
}

bool graded_less(const RootVector& a, const RootVector& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a < b;
}

// ---------------------------------------------------------------------------
// Graphs

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

// Edges of the extended diagram in the frozen indexing.
EdgeList affine_edges(const DynkinLabel& label) {
  const std::size_t n = static_cast<std::size_t>(label.rank());
  EdgeList edges;
  switch (label.family()) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n);  // closes the cycle; a second 0-1 edge for A1
      break;
    case Family::D:
      edges.emplace_back(0, 3);
      edges.emplace_back(2, 3);
      for (std::size_t i = 3; i + 1 <= n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, n - 1);
      edges.emplace_back(n - 1, n);
      break;
    case Family::E:
      if (n == 6) {
        edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {0, 6}};
      } else if (n == 7) {
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
      } else {
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
      }
      break;
  }
  return edges;
}

}  // namespace

DynkinGraph::DynkinGraph(DynkinLabel label, bool affine) : label_(label), affine_(affine) {
  const std::size_t affine_count = static_cast<std::size_t>(label.affine_size());
  std::vector<std::vector<int>> full(affine_count, std::vector<int>(affine_count, 0));
  for (auto [i, j] : affine_edges(label)) {
    if (i > j) std::swap(i, j);
    full[i][j] += 1;
    full[j][i] += 1;
  }
  if (affine) {
    adjacency_ = std::move(full);
    return;
  }
  adjacency_.assign(affine_count - 1, std::vector<int>(affine_count - 1, 0));
  for (std::size_t i = 1; i < affine_count; ++i)
    for (std::size_t j = 1; j < affine_count; ++j) adjacency_[i - 1][j - 1] = full[i][j];
}

std::vector<std::pair<std::size_t, std::size_t>> DynkinGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> result;
  for (std::size_t i = 0; i < adjacency_.size(); ++i)
    for (std::size_t j = i + 1; j < adjacency_.size(); ++j)
      for (int k = 0; k < adjacency_[i][j]; ++k) result.emplace_back(i, j);
  return result;
}

DynkinGraph build_diagram(const DynkinLabel& label, bool affine) { return DynkinGraph(label, affine); }

// ---------------------------------------------------------------------------
// Forms and reflections

namespace {

void require_graph_size(const DynkinGraph& graph, const RootVector& x) {
  if (x.size() != graph.vertex_count())
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " against a graph with " +
                            std::to_string(graph.vertex_count()) + " vertices");
}

// 2 (x, y), always an integer.
long twice_form(const DynkinGraph& graph, const RootVector& x, const RootVector& y) {
  long total = 0;
  const std::size_t n = graph.vertex_count();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const long coeff = (i == j ? 2 : 0) - graph.adjacency(i, j);
      total += coeff * x[i] * y[j];
    }
  }
  return total;
}

}  // namespace

Rational bilinear_form(const DynkinGraph& graph, const RootVector& x, const RootVector& y) {
  require_graph_size(graph, x);
  require_graph_size(graph, y);
  Rational value(twice_form(graph, x, y), 2);
  value.canonicalize();
  return value;
}

Rational quadratic_form(const DynkinGraph& graph, const RootVector& x) { return bilinear_form(graph, x, x); }

RootVector reflect(const DynkinGraph& graph, std::size_t vertex, const RootVector& x) {
  require_graph_size(graph, x);
  if (vertex >= graph.vertex_count()) throw InvalidArgument("vertex index out of range");
  if (graph.adjacency(vertex, vertex) != 0) throw InvalidArgument("reflection at a vertex with loops");
  // 2 (x, alpha_i) is an integer since (alpha_i, alpha_i) = 1.
  const long coefficient = twice_form(graph, x, RootVector::basis(graph.vertex_count(), vertex));
  RootVector result = x;
  result[vertex] -= static_cast<int>(coefficient);
  return result;
}

// ---------------------------------------------------------------------------
// Roots

std::vector<RootVector> finite_positive_roots(const DynkinLabel& label) {
  const DynkinGraph graph(label, false);
  const std::size_t n = graph.vertex_count();
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    auto simple = RootVector::basis(n, i);
    seen.insert(simple);
    queue.push_back(simple);
  }
  while (!queue.empty()) {
    RootVector current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      RootVector image = reflect(graph, i, current);
      if (!image.is_nonnegative() || image.is_zero()) continue;
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  std::vector<RootVector> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), graded_less);
  return roots;
}

RootVector embed_finite(const RootVector& finite) {
  std::vector<int> entries{0};
  entries.insert(entries.end(), finite.begin(), finite.end());
  return RootVector(std::move(entries));
}

RootVector imaginary_root(const DynkinLabel& label) {
  const std::size_t n = static_cast<std::size_t>(label.rank());
  switch (label.family()) {
    case Family::A:
      return RootVector(std::vector<int>(n + 1, 1));
    case Family::D: {
      std::vector<int> delta(n + 1, 2);
      delta[0] = delta[1] = delta[2] = delta[n] = 1;
      return RootVector(std::move(delta));
    }
    case Family::E:
      if (n == 6) return RootVector{1, 1, 2, 3, 2, 1, 2};
      if (n == 7) return RootVector{1, 2, 3, 4, 3, 2, 1, 2};
      return RootVector{1, 2, 3, 4, 5, 6, 4, 2, 3};
  }
  throw InvalidLabel("unreachable label family");
}

std::vector<AffineRealRoot> affine_positive_real_roots(const DynkinLabel& label, int degree_bound) {
  if (degree_bound < 0) throw InvalidArgument("degree bound must be nonnegative");
  const RootVector delta = imaginary_root(label);
  const int delta_height = delta.height();
  std::vector<AffineRealRoot> result;
  for (const RootVector& finite : finite_positive_roots(label)) {
    const RootVector beta = embed_finite(finite);
    const int h = beta.height();
    for (int m = 0; m * delta_height + h <= degree_bound; ++m)
      result.push_back({m * delta + beta, m, beta, +1});
    for (int m = 1; m * delta_height - h <= degree_bound; ++m)
      result.push_back({m * delta - beta, m, beta, -1});
  }
  std::sort(result.begin(), result.end(),
            [](const AffineRealRoot& a, const AffineRealRoot& b) { return graded_less(a.vector, b.vector); });
  return result;
}

RootClass classify_vector(const DynkinGraph& graph, const RootVector& x) {
  if (!graph.affine()) throw InvalidArgument("classify_vector requires an affine graph");
  require_graph_size(graph, x);
  if (!x.is_nonnegative() || x.is_zero()) return NotARoot{};
  const RootVector delta = imaginary_root(graph.label());
  const int m = x[0];  // beta vanishes at rho_0 and delta_0 = 1
  const RootVector rest = x - m * delta;
  if (rest.is_zero()) return ImaginaryRootClass{m};
  if (quadratic_form(graph, x) != 1) return NotARoot{};
  const auto finite = finite_positive_roots(graph.label());
  auto is_finite_root = [&](const RootVector& v) {
    if (v[0] != 0) return false;
    RootVector tail(std::vector<int>(v.begin() + 1, v.end()));
    return std::binary_search(finite.begin(), finite.end(), tail, graded_less);
  };
  if (is_finite_root(rest)) return RealRootClass{m, rest, +1};
  if (m >= 1 && is_finite_root(-rest)) return RealRootClass{m, -rest, -1};
  return NotARoot{};
}

Rational dot(std::span<const Rational> zeta, const RootVector& x) {
  if (zeta.size() != x.size())
    throw DimensionMismatch("parameter of length " + std::to_string(zeta.size()) + " against vector of length " +
                            std::to_string(x.size()));
  Rational total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += zeta[i] * x[i];
  return total;
}

RootSplit split_real_roots(std::span<const AffineRealRoot> roots, std::span<const Rational> zeta) {
  RootSplit split;
  for (const auto& root : roots) {
    const Rational value = dot(zeta, root.vector);
    if (value == 0)
      throw NonGenericParameter("stability parameter lies on the wall of root " + root.vector.to_string());
    (value < 0 ? split.negative_side : split.positive_side).push_back(root);
  }
  return split;
}

}  // namespace mckay
