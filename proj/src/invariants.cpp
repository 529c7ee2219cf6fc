#include "mckay/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

std::string to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::NCDT: return "NCDT";
    case PartitionKind::DTPlus: return "DT+";
    case PartitionKind::DTMinus: return "DT-";
    case PartitionKind::PTPlus: return "PT+";
    case PartitionKind::PTMinus: return "PT-";
    case PartitionKind::GW: return "GW";
    case PartitionKind::Chamber: return "Chamber";
  }
  return "?";
}

PartitionKind parse_partition_kind(std::string_view text) {
  for (auto kind : {PartitionKind::NCDT, PartitionKind::DTPlus, PartitionKind::DTMinus, PartitionKind::PTPlus,
                    PartitionKind::PTMinus, PartitionKind::GW, PartitionKind::Chamber}) {
    const std::string name = to_string(kind);
    if (std::equal(name.begin(), name.end(), text.begin(), text.end(),
                   [](char a, char b) { return std::tolower(static_cast<unsigned char>(a)) ==
                                               std::tolower(static_cast<unsigned char>(b)); }))
      return kind;
  }
  throw InvalidArgument("unknown partition kind '" + std::string(text) +
                        "' (expected NCDT, DT+, DT-, PT+, PT-, GW or Chamber)");
}

SeriesContext q_context(const DynkinLabel& label, int order) {
  return SeriesContext::indexed("q", static_cast<std::size_t>(label.affine_size()), order);
}

SeriesContext gw_context(const DynkinLabel& label, int order) {
  std::vector<std::string> names{"u"};
  for (int i = 1; i < label.affine_size(); ++i) names.push_back("t_" + std::to_string(i));
  return SeriesContext(std::move(names), order);
}

// ---------------------------------------------------------------------------
// Factors and chambers

FactorSpec wall_crossing_factor(const AffineRealRoot& root) {
  const int power = root.vector[0];
  return {root.vector.entries(), (power & 1) ? -1 : 1, power};
}

FactorSpec wall_crossing_factor(const DynkinGraph& graph, const RootVector& root) {
  const RootClass kind = classify_vector(graph, root);
  if (std::holds_alternative<ImaginaryRootClass>(kind))
    throw ImaginaryWall("no wall-crossing factor for the imaginary root " + root.to_string());
  if (std::holds_alternative<NotARoot>(kind))
    throw InvalidArgument(root.to_string() + " is not a positive real root");
  const auto& real = std::get<RealRootClass>(kind);
  return wall_crossing_factor(AffineRealRoot{root, real.m, real.beta, real.sign});
}

namespace {

Series product_of(const SeriesContext& context, const std::vector<FactorSpec>& factors) {
  Series result = Series::one(context);
  for (const auto& f : factors) result = result * expand_factor(context, f);
  return result;
}

std::vector<int> delta_exponent(const DynkinLabel& label) { return imaginary_root(label).entries(); }

}  // namespace

std::vector<FactorSpec> chamber_factors(const DynkinLabel& label, const StabilityParameter& zeta, int order) {
  if (zeta.size() != static_cast<std::size_t>(label.affine_size()))
    throw DimensionMismatch("stability parameter needs " + std::to_string(label.affine_size()) + " entries");
  std::vector<FactorSpec> factors;
  for (const auto& root : affine_positive_real_roots(label, order)) {
    const int sign = zeta.dot(root.vector).sign();
    if (sign == 0) throw NonGenericParameter("stability parameter lies on the wall of root " + root.vector.to_string());
    if (sign < 0 && root.vector[0] > 0) factors.push_back(wall_crossing_factor(root));
  }
  return factors;
}

PartitionResult chamber_partition_function(const DynkinLabel& label, const StabilityParameter& zeta, int order) {
  const auto context = q_context(label, order);
  PartitionResult result{Series::one(context), chamber_factors(label, zeta, order), 0};
  const RootVector delta = imaginary_root(label);
  if (delta.height() <= order) {
    const int sign = zeta.dot(delta).sign();
    if (sign == 0) throw NonGenericParameter("stability parameter lies on the imaginary wall " + delta.to_string());
    if (sign < 0) result.macmahon_exponent = label.affine_size();
  }
  Series series = product_of(context, result.factors);
  if (result.macmahon_exponent != 0)
    series = macmahon_power(context, delta.entries(), result.macmahon_exponent) * series;
  result.series = std::move(series);
  return result;
}

std::vector<FactorSpec> pt_factors(const DynkinLabel& label, Orientation orientation, int order) {
  const int wanted = orientation == Orientation::Plus ? -1 : +1;
  std::vector<FactorSpec> factors;
  for (const auto& root : affine_positive_real_roots(label, order))
    if (root.sign == wanted && root.m >= 1) factors.push_back(wall_crossing_factor(root));
  return factors;
}

Series z_pt(const DynkinLabel& label, Orientation orientation, int order) {
  return product_of(q_context(label, order), pt_factors(label, orientation, order));
}

Series z_dt(const DynkinLabel& label, Orientation orientation, int order) {
  const auto context = q_context(label, order);
  return macmahon_power(context, delta_exponent(label), label.affine_size()) * z_pt(label, orientation, order);
}

Series z_ncdt(const DynkinLabel& label, int order) {
  const auto context = q_context(label, order);
  return macmahon_power(context, delta_exponent(label), label.affine_size()) *
         z_pt(label, Orientation::Plus, order) * z_pt(label, Orientation::Minus, order);
}

// ---------------------------------------------------------------------------
// Gromov-Witten side

Series gw_series(const DynkinLabel& label, const SeriesContext& context) {
  if (context.num_vars() != static_cast<std::size_t>(label.affine_size()))
    throw DimensionMismatch("GW context needs variables (u, t_1, ..., t_{N-1})");
  if (context.weights()[0] <= 0) throw InvalidArgument("GW context needs a positive weight on u");
  Series result = Series::one(context);
  for (const RootVector& beta : finite_positive_roots(label)) {
    std::vector<int> exponent{0};
    exponent.insert(exponent.end(), beta.begin(), beta.end());
    for (int m = 1;; ++m) {
      exponent[0] = m;
      const int degree = context.degree(exponent);
      if (degree <= 0) throw InvalidArgument("GW factor monomial has non-positive degree");
      if (degree > context.order()) break;
      result = result * binomial_series(context, exponent, +1, m);
    }
  }
  return result;
}

Series z_gw(const DynkinLabel& label, int order) { return gw_series(label, gw_context(label, order)); }

SeriesContext gw_q_graded_context(const DynkinLabel& label, int order) {
  auto names = gw_context(label, order).names();
  std::vector<int> weights(names.size(), -1);
  weights[0] = imaginary_root(label).height();
  return SeriesContext(std::move(names), order, std::move(weights));
}

Series gw_to_q_variables(const DynkinLabel& label, const Series& gw, int order) {
  const auto target = q_context(label, order);
  const std::size_t n = target.num_vars();
  std::vector<VariableImage> images;
  images.push_back({delta_exponent(label), -1});  // u -> -q^delta
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = -1;  // t_rho -> q_rho^{-1}
    images.push_back({std::move(e), +1});
  }
  return substitute(gw, images, target);
}

// ---------------------------------------------------------------------------
// Checks

CheckReport compare_series(std::string name, const Series& lhs, const Series& rhs) {
  CheckReport report;
  report.name = std::move(name);
  if (!(lhs.context() == rhs.context())) {
    report.detail = "series live in different contexts";
    return report;
  }
  const Series difference = lhs - rhs;
  std::map<std::vector<int>, bool> seen;
  for (const auto& t : lhs.terms()) seen[std::vector<int>(t.exponent.begin(), t.exponent.end())] = true;
  for (const auto& t : rhs.terms()) seen[std::vector<int>(t.exponent.begin(), t.exponent.end())] = true;
  report.compared_terms = seen.size();
  if (difference.is_zero()) {
    report.passed = true;
    report.detail = std::to_string(report.compared_terms) + " nonzero coefficients agree";
    return report;
  }
  const auto& first = difference.terms().front();
  Mismatch mismatch;
  mismatch.exponent.assign(first.exponent.begin(), first.exponent.end());
  mismatch.lhs = to_decimal(lhs.coefficient(mismatch.exponent));
  mismatch.rhs = to_decimal(rhs.coefficient(mismatch.exponent));
  std::ostringstream detail;
  detail << difference.size() << " mismatching coefficients";
  report.detail = detail.str();
  report.first_mismatch = std::move(mismatch);
  return report;
}

CheckReport check_gw_pt(const DynkinLabel& label, int order) {
  const Series gw = gw_series(label, gw_q_graded_context(label, order));
  return compare_series("gw-pt " + label.to_string(), gw_to_q_variables(label, gw, order),
                        z_pt(label, Orientation::Plus, order));
}

CheckReport check_crepant(const DynkinLabel& label, int order) {
  const auto context = q_context(label, order);
  const Series rhs = macmahon_power(context, delta_exponent(label), -label.affine_size()) *
                     z_dt(label, Orientation::Plus, order) * z_dt(label, Orientation::Minus, order);
  return compare_series("crepant " + label.to_string(), z_ncdt(label, order), rhs);
}

// ---------------------------------------------------------------------------
// BPS extraction

Rational BpsTable::value(int genus, const std::vector<int>& beta) const {
  for (const auto& e : entries)
    if (e.genus == genus && e.beta == beta) return e.value;
  return 0;
}

BpsTable bps_extract(const DynkinLabel& label, int order) {
  BpsTable table;
  table.label = label.to_string();
  table.order = order;
  const RationalSeries log_gw = log_series(z_gw(label, order));

  // F_beta(u) = coefficient of t^beta in log Z_GW, as a dense u-polynomial.
  std::map<std::vector<int>, std::vector<Rational>> by_class;
  auto class_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    return ha != hb ? ha < hb : a < b;
  };
  for (const auto& t : log_gw.terms()) {
    std::vector<int> beta(t.exponent.begin() + 1, t.exponent.end());
    int height = 0;
    for (int x : beta) height += x;
    if (height == 0) continue;  // pure u powers: degree zero maps, absent
    auto& coefficients = by_class[beta];
    coefficients.resize(static_cast<std::size_t>(order - height + 1));
    coefficients[static_cast<std::size_t>(t.exponent[0])] = t.coefficient;
  }
  std::vector<std::vector<int>> classes;
  for (auto& [beta, coefficients] : by_class) {
    int height = 0;
    for (int x : beta) height += x;
    coefficients.resize(static_cast<std::size_t>(order - height + 1));
    classes.push_back(beta);
  }
  std::sort(classes.begin(), classes.end(), class_less);

  std::map<std::vector<int>, std::pair<Rational, Rational>> fitted;  // (n_0, n_1)
  for (const auto& beta : classes) {
    std::vector<Rational> residual = by_class[beta];
    const int height = static_cast<int>(order + 1 - residual.size());
    // Remove multiple-cover contributions of already fitted primitive parts:
    //   n_0 * (1/d) * (-u^d)/(1 - u^d)^2 = -(n_0/d) sum_k k u^{dk}
    //   n_1 * (1/d)
    for (int d = 2; d <= height; ++d) {
      if (std::any_of(beta.begin(), beta.end(), [d](int x) { return x % d != 0; })) continue;
      std::vector<int> base(beta);
      for (int& x : base) x /= d;
      auto it = fitted.find(base);
      if (it == fitted.end()) continue;
      const auto& [n0, n1] = it->second;
      residual[0] -= n1 / d;
      for (std::size_t k = 1; k * d < residual.size(); ++k) residual[k * d] += n0 * k / d;
    }
    // Genus 1 is the u^0 coefficient, genus 0 is read off u^1.
    const Rational n1 = residual[0];
    residual[0] = 0;
    Rational n0 = 0;
    if (residual.size() > 1) {
      n0 = -residual[1];
      for (std::size_t k = 1; k < residual.size(); ++k) residual[k] += n0 * static_cast<long>(k);
    }
    fitted[beta] = {n0, n1};
    if (height < order) {
      table.entries.push_back({0, beta, n0});
      table.entries.push_back({1, beta, n1});
    }
    for (std::size_t k = 0; k < residual.size(); ++k)
      if (residual[k] != 0) table.residuals.push_back({beta, static_cast<int>(k), residual[k]});
  }
  return table;
}

CheckReport check_bps(const BpsTable& table) {
  CheckReport report;
  report.name = "BPS invariants of " + table.label + " to order " + std::to_string(table.order);
  const DynkinLabel label = DynkinLabel::parse(table.label);
  std::set<std::vector<int>> roots;
  for (const auto& r : finite_positive_roots(label)) roots.insert(r.entries());
  std::ostringstream detail;
  std::size_t bad = 0;
  for (const auto& e : table.entries) {
    ++report.compared_terms;
    Rational expected = 0;
    if (e.genus == 0 && roots.contains(e.beta)) expected = -1;
    if (e.value == expected) continue;
    if (bad++ == 0) {
      detail << "n_" << e.genus << " at " << RootVector(e.beta).to_string() << " is " << e.value.get_str()
             << ", expected " << expected.get_str();
      report.first_mismatch = Mismatch{e.beta, e.value.get_str(), expected.get_str()};
    }
  }
  for (const auto& r : table.residuals) {
    if (bad++ == 0) {
      detail << "nonzero residual " << r.value.get_str() << " at " << RootVector(r.beta).to_string() << " u^"
             << r.u_power;
      report.first_mismatch = Mismatch{r.beta, r.value.get_str(), "0"};
    }
  }
  report.passed = bad == 0;
  if (report.passed) detail << report.compared_terms << " invariants as expected, residual zero";
  report.detail = detail.str();
  return report;
}

bool D5Report::passed() const {
  return std::all_of(parts.begin(), parts.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace mckay
