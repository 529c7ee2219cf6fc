#include "mckay/quiver_stability.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

std::string edge_label(std::size_t from, std::size_t to, int copy, int multiplicity) {
  std::string label = "r_{" + std::to_string(from) + "," + std::to_string(to) + "}";
  if (multiplicity > 1) label += "#" + std::to_string(copy);
  return label;
}

}  // namespace

const Arrow& QuiverData::arrow(const std::string& name) const {
  auto it = std::find_if(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.label == name; });
  if (it == arrows.end()) throw InvalidArgument("no arrow labelled " + name);
  return *it;
}

QuiverData mckay_quiver(const DynkinLabel& label, bool framed) {
  const DynkinGraph graph(label, true);
  const RootVector delta = imaginary_root(label);
  QuiverData quiver{label, {}, {}, framed};
  const std::size_t n = graph.vertex_count();
  for (std::size_t i = 0; i < n; ++i) quiver.vertices.push_back({static_cast<int>(i), delta[i]});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int multiplicity = graph.adjacency(i, j);
      for (int k = 1; k <= multiplicity; ++k) {
        quiver.arrows.push_back(
            {ArrowKind::Edge, static_cast<int>(i), static_cast<int>(j), edge_label(i, j, k, multiplicity)});
        quiver.arrows.push_back(
            {ArrowKind::Edge, static_cast<int>(j), static_cast<int>(i), edge_label(j, i, k, multiplicity)});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    quiver.arrows.push_back({ArrowKind::Loop, static_cast<int>(i), static_cast<int>(i), "l_" + std::to_string(i)});
  if (framed) quiver.arrows.push_back({ArrowKind::Framing, -1, 0, "r_inf"});
  return quiver;
}

std::vector<SuperpotentialTerm> superpotential(const QuiverData& quiver) {
  const DynkinGraph graph(quiver.label, true);
  std::vector<SuperpotentialTerm> terms;
  const std::size_t n = graph.vertex_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int multiplicity = graph.adjacency(i, j);
      for (int k = 1; k <= multiplicity; ++k) {
        const Arrow& forward = quiver.arrow(edge_label(i, j, k, multiplicity));
        const Arrow& backward = quiver.arrow(edge_label(j, i, k, multiplicity));
        const Arrow& loop_i = quiver.arrow("l_" + std::to_string(i));
        const Arrow& loop_j = quiver.arrow("l_" + std::to_string(j));
        terms.push_back({+1, {loop_i, forward, backward}});
        terms.push_back({-1, {backward, forward, loop_j}});
      }
    }
  }
  return terms;
}

// ---------------------------------------------------------------------------
// Stability parameters

StabilityParameter::StabilityParameter(std::vector<Rational> base, Perturbation perturbation)
    : base_(std::move(base)), perturbation_(std::move(perturbation)) {
  if (perturbation_->direction.size() != base_.size())
    throw DimensionMismatch("perturbation direction length differs from the parameter length");
  if (perturbation_->sign != 1 && perturbation_->sign != -1)
    throw InvalidArgument("perturbation sign must be +1 or -1");
}

StabilityParameter StabilityParameter::parse(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    values.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return StabilityParameter(std::move(values));
}

int StabilityParameter::Value::sign() const {
  if (base != 0) return sgn(base);
  return sgn(infinitesimal);
}

StabilityParameter::Value StabilityParameter::dot(const RootVector& x) const {
  Value value{mckay::dot(base_, x), 0};
  if (perturbation_) value.infinitesimal = perturbation_->sign * mckay::dot(perturbation_->direction, x);
  return value;
}

std::string StabilityParameter::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < base_.size(); ++i) {
    out << (i ? "," : "") << base_[i].get_str();
    if (perturbation_ && perturbation_->direction[i] != 0) {
      const Rational c = perturbation_->sign * perturbation_->direction[i];
      out << (c > 0 ? "+" : "-");
      if (abs(c) != 1) out << Rational(abs(c)).get_str();
      out << "eps";
    }
  }
  out << ')';
  return out.str();
}

StabilityParameter zeta_imaginary(const DynkinLabel& label) {
  const RootVector delta = imaginary_root(label);
  std::vector<Rational> zeta(delta.size(), Rational(1));
  zeta[0] = -(delta.height() - delta[0]);
  return StabilityParameter(std::move(zeta));
}

StabilityParameter zeta_im_perturbed(const DynkinLabel& label, int side) {
  if (side == 0) throw InvalidArgument("perturbation side must be + or -");
  auto base = zeta_imaginary(label).base();
  std::vector<Rational> direction(base.size(), Rational(0));
  direction[0] = 1;
  return StabilityParameter(std::move(base), {std::move(direction), side > 0 ? 1 : -1});
}

namespace {

void require_unperturbed(const StabilityParameter& zeta, const char* what) {
  if (zeta.perturbed()) throw InvalidArgument(std::string(what) + " requires an unperturbed stability parameter");
}

}  // namespace

Rational theta_slope(const StabilityParameter& zeta, const Rational& zeta_inf, const RootVector& v, int v_inf) {
  require_unperturbed(zeta, "theta_slope");
  if (v_inf < 0) throw InvalidArgument("framing dimension must be nonnegative");
  const int total = v.height() + v_inf;
  if (total == 0) throw InvalidArgument("theta slope of a zero-dimensional module is undefined");
  Rational slope = (mckay::dot(zeta.base(), v) + zeta_inf * v_inf) / total;
  return slope;
}

Rational solve_zeta_infinity(const StabilityParameter& zeta, const RootVector& v) {
  require_unperturbed(zeta, "solve_zeta_infinity");
  return -mckay::dot(zeta.base(), v);
}

// ---------------------------------------------------------------------------
// Walls

std::vector<Wall> walls(const DynkinLabel& label, int degree_bound) {
  std::vector<Wall> result;
  for (const auto& root : affine_positive_real_roots(label, degree_bound))
    result.push_back({root.vector, {root.vector}, false});
  const RootVector delta = imaginary_root(label);
  if (delta.height() <= degree_bound) {
    Wall imaginary{delta, {}, true};
    for (int m = 1; m * delta.height() <= degree_bound; ++m) imaginary.roots.push_back(m * delta);
    result.push_back(std::move(imaginary));
  }
  std::stable_sort(result.begin(), result.end(),
                   [](const Wall& a, const Wall& b) { return graded_less(a.normal, b.normal); });
  return result;
}

std::vector<WallCrossing> crossed_walls(const DynkinLabel& label, const StabilityParameter& from,
                                        const StabilityParameter& to, int degree_bound) {
  require_unperturbed(from, "crossed_walls");
  require_unperturbed(to, "crossed_walls");
  std::vector<WallCrossing> crossings;
  for (auto& wall : walls(label, degree_bound)) {
    const Rational a = mckay::dot(from.base(), wall.normal);
    const Rational b = mckay::dot(to.base(), wall.normal);
    if (a == 0 || b == 0)
      throw NonGenericPath("path endpoint lies on the wall of " + wall.normal.to_string());
    if ((a > 0) == (b > 0)) continue;
    Rational t = a / (a - b);
    const int direction = a > 0 ? +1 : -1;
    crossings.push_back({std::move(wall), std::move(t), direction});
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const WallCrossing& x, const WallCrossing& y) { return x.parameter < y.parameter; });
  for (std::size_t i = 1; i < crossings.size(); ++i) {
    if (crossings[i].parameter == crossings[i - 1].parameter)
      throw NonGenericPath("walls of " + crossings[i - 1].wall.normal.to_string() + " and " +
                           crossings[i].wall.normal.to_string() + " are crossed simultaneously at t = " +
                           crossings[i].parameter.get_str());
  }
  return crossings;
}

RootSplit split_real_roots(std::span<const AffineRealRoot> roots, const StabilityParameter& zeta) {
  require_unperturbed(zeta, "split_real_roots");
  return split_real_roots(roots, std::span<const Rational>(zeta.base()));
}

DtIndex dt_invariant_indexing(const RootVector& v, const DynkinLabel& label) {
  const RootVector delta = imaginary_root(label);
  if (v.size() != delta.size())
    throw DimensionMismatch("dimension vector must have " + std::to_string(delta.size()) + " entries");
  if (!v.is_nonnegative()) throw InvalidArgument("dimension vector must be nonnegative");
  DtIndex index{v[0], {}};
  for (std::size_t i = 1; i < v.size(); ++i) index.beta.push_back(v[0] * delta[i] - v[i]);
  return index;
}

std::string to_plain(const QuiverData& quiver, const std::vector<SuperpotentialTerm>& terms) {
  std::ostringstream out;
  out << "# quiver " << quiver.label.to_string() << (quiver.framed ? " framed" : "") << "\n";
  for (const auto& v : quiver.vertices) out << "vertex " << v.index << " dim " << v.dimension << "\n";
  for (const auto& a : quiver.arrows) {
    out << "arrow " << a.label << " ";
    out << (a.source < 0 ? std::string("inf") : std::to_string(a.source)) << " -> " << a.target << "\n";
  }
  out << "W =";
  for (const auto& term : terms) {
    out << "\n  " << (term.sign > 0 ? '+' : '-');
    for (const auto& a : term.path) out << ' ' << a.label;
  }
  out << "\n";
  return out.str();
}

}  // namespace mckay
