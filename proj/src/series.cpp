#include "mckay/series.hpp"

#include <sstream>

namespace mckay {

// ---------------------------------------------------------------------------
// Context

SeriesContext::SeriesContext(std::vector<std::string> names, int order, std::vector<int> weights)
    : names_(std::move(names)), order_(order), weights_(std::move(weights)) {
  if (order_ < 0) throw InvalidArgument("truncation order must be nonnegative");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw DimensionMismatch("one degree weight per variable is required");
}

SeriesContext SeriesContext::indexed(const std::string& prefix, std::size_t count, int order) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + "_" + std::to_string(i));
  return SeriesContext(std::move(names), order);
}

bool SeriesContext::unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

int SeriesContext::degree(std::span<const int> exponent) const {
  int total = 0;
  for (std::size_t i = 0; i < exponent.size(); ++i) total += weights_[i] * exponent[i];
  return total;
}

// ---------------------------------------------------------------------------
// Arithmetic

Series monomial(const SeriesContext& context, std::span<const int> exponent, const Integer& coefficient) {
  return Series::monomial(context, exponent, coefficient);
}

RationalSeries to_rational(const Series& series) {
  std::vector<std::pair<Exponent, Rational>> raw;
  raw.reserve(series.size());
  for (const auto& t : series.terms()) raw.emplace_back(t.exponent, Rational(t.coefficient));
  return RationalSeries::from_terms(series.context(), std::move(raw));
}

namespace {

template <class C>
void require_positive_degrees(const BasicSeries<C>& a, const char* what) {
  for (const auto& t : a.terms()) {
    if (t.degree > 0) continue;
    if (std::any_of(t.exponent.begin(), t.exponent.end(), [](int x) { return x != 0; }))
      throw InvalidArgument(std::string(what) + " needs every non-constant term to have positive degree");
  }
}

// 1 / (1 + y) for y without constant term, by Horner over the geometric series.
template <class C>
BasicSeries<C> inverse_one_plus(const BasicSeries<C>& y) {
  const auto& context = y.context();
  const auto one = BasicSeries<C>::one(context);
  BasicSeries<C> result = one;
  for (int k = 0; k < context.order(); ++k) result = one - y * result;
  return result;
}

}  // namespace

Series inverse(const Series& a) {
  require_positive_degrees(a, "inverse");
  const Integer c = a.constant_term();
  if (c != 1 && c != -1)
    throw ConstantTermError("integer series is invertible only with constant term +1 or -1, got " + to_decimal(c));
  // a = c (1 + c (a - c)) since c^2 = 1
  const Series y = (a - Series::constant(a.context(), c)).scaled(c);
  return inverse_one_plus(y).scaled(c);
}

RationalSeries inverse(const RationalSeries& a) {
  require_positive_degrees(a, "inverse");
  const Rational c = a.constant_term();
  if (c == 0) throw ConstantTermError("series with zero constant term is not invertible");
  const Rational inv = 1 / c;
  const RationalSeries y = (a - RationalSeries::constant(a.context(), c)).scaled(inv);
  return inverse_one_plus(y).scaled(inv);
}

Series binomial_series(const SeriesContext& context, std::span<const int> exponent, int sign, long power) {
  if (sign != 1 && sign != -1) throw InvalidArgument("factor sign must be +1 or -1");
  if (exponent.size() != context.num_vars()) throw DimensionMismatch("factor exponent length differs from variables");
  for (int e : exponent)
    if (e < 0) throw InvalidArgument("factor exponent must be nonnegative");
  const int step = context.degree(exponent);
  if (step <= 0) throw InvalidArgument("factor monomial must have positive degree");
  std::vector<std::pair<Exponent, Integer>> raw;
  Integer coefficient = 1;
  Exponent e(exponent.size(), 0);
  for (long j = 0; j * step <= context.order(); ++j) {
    if (j > 0) {
      // C(k+j-1, j) = C(k+j-2, j-1) (k+j-1) / j, exact for every integer k
      coefficient *= power + j - 1;
      coefficient /= j;
      if (coefficient == 0) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += exponent[i];
    }
    raw.emplace_back(e, (sign < 0 && (j & 1)) ? Integer(-coefficient) : coefficient);
  }
  return Series::from_terms(context, std::move(raw));
}

Series expand_factor(const SeriesContext& context, const FactorSpec& factor) {
  if (factor.power == 0) return Series::one(context);
  return binomial_series(context, factor.exponent, factor.sign, factor.power);
}

Series macmahon_power(const SeriesContext& context, std::span<const int> delta_exponent, long n) {
  if (delta_exponent.size() != context.num_vars()) throw DimensionMismatch("delta exponent length differs");
  const int step = context.degree(delta_exponent);
  if (step <= 0) throw InvalidArgument("MacMahon substitution monomial must have positive degree");
  Series result = Series::one(context);
  if (n == 0) return result;
  std::vector<int> e(delta_exponent.size());
  for (long m = 1; m * step <= context.order(); ++m) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(m) * delta_exponent[i];
    // (1 - x^m)^(-m n) with x = -q^delta
    result = result * binomial_series(context, e, (m & 1) ? -1 : 1, m * n);
  }
  return result;
}

Series substitute(const Series& a, std::span<const VariableImage> images, const SeriesContext& target) {
  const auto& source = a.context();
  if (images.size() != source.num_vars()) throw DimensionMismatch("one image per source variable is required");
  for (const auto& image : images) {
    if (image.exponent.size() != target.num_vars())
      throw DimensionMismatch("variable image length differs from target variable count");
    if (image.sign != 1 && image.sign != -1) throw InvalidArgument("variable image sign must be +1 or -1");
  }
  std::unordered_map<Exponent, Integer, ExponentHash> acc;
  Exponent mapped(target.num_vars());
  for (const auto& term : a.terms()) {
    std::fill(mapped.begin(), mapped.end(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < term.exponent.size(); ++i) {
      const int power = term.exponent[i];
      if (power == 0) continue;
      for (std::size_t j = 0; j < mapped.size(); ++j) mapped[j] += power * images[i].exponent[j];
      if (images[i].sign < 0 && (power & 1)) sign = -sign;
    }
    for (int x : mapped) {
      if (x < 0) {
        std::ostringstream msg;
        msg << "substitution maps term with source exponent (";
        for (std::size_t i = 0; i < term.exponent.size(); ++i) msg << (i ? "," : "") << term.exponent[i];
        msg << ") to a negative target exponent";
        throw SubstitutionDomainError(msg.str());
      }
    }
    const int degree = target.degree(mapped);
    if (degree < 0) throw SubstitutionDomainError("substitution produced a term of negative weighted degree");
    if (degree > target.order()) continue;
    if (sign > 0)
      acc[mapped] += term.coefficient;
    else
      acc[mapped] -= term.coefficient;
  }
  std::vector<std::pair<Exponent, Integer>> raw;
  raw.reserve(acc.size());
  for (auto& [e, c] : acc) raw.emplace_back(e, std::move(c));
  return Series::from_terms(target, std::move(raw));
}

RationalSeries log_series(const RationalSeries& a) {
  require_positive_degrees(a, "log");
  if (a.constant_term() != 1) throw ConstantTermError("log requires constant term 1");
  const auto& context = a.context();
  const RationalSeries x = a - RationalSeries::one(context);
  // log(1 + x) = x (c_1 + x (c_2 + ...)), c_k = (-1)^(k+1) / k
  const int order = std::max(context.order(), 1);
  RationalSeries r = RationalSeries::constant(context, Rational((order & 1) ? 1 : -1, order));
  for (int k = order - 1; k >= 1; --k)
    r = RationalSeries::constant(context, Rational((k & 1) ? 1 : -1, k)) + x * r;
  return x * r;
}

RationalSeries log_series(const Series& a) { return log_series(to_rational(a)); }

RationalSeries exp_series(const RationalSeries& a) {
  require_positive_degrees(a, "exp");
  if (a.constant_term() != 0) throw ConstantTermError("exp requires constant term 0");
  const auto& context = a.context();
  const auto one = RationalSeries::one(context);
  // exp(x) = 1 + x (1 + x/2 (1 + x/3 (...)))
  RationalSeries r = one;
  for (int k = context.order(); k >= 1; --k) r = one + (a * r).scaled(Rational(1, k));
  return r;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

template <class C>
nlohmann::json to_json_impl(const BasicSeries<C>& series) {
  const auto& context = series.context();
  nlohmann::json json;
  json["vars"] = context.names();
  json["order"] = context.order();
  if (!context.unit_weights()) json["weights"] = context.weights();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : series.terms()) {
    std::vector<int> e(t.exponent.begin(), t.exponent.end());
    terms.push_back(nlohmann::json::array({e, to_decimal(t.coefficient)}));
  }
  json["terms"] = std::move(terms);
  return json;
}

template <class C, class Parse>
BasicSeries<C> from_json_impl(const nlohmann::json& json, Parse parse) {
  try {
    std::vector<int> weights;
    if (json.contains("weights")) weights = json.at("weights").get<std::vector<int>>();
    SeriesContext context(json.at("vars").get<std::vector<std::string>>(), json.at("order").get<int>(),
                          std::move(weights));
    std::vector<std::pair<Exponent, C>> raw;
    for (const auto& term : json.at("terms")) {
      const auto e = term.at(0).get<std::vector<int>>();
      raw.emplace_back(Exponent(e.begin(), e.end()), parse(term.at(1).get<std::string>()));
    }
    return BasicSeries<C>::from_terms(context, std::move(raw));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed series JSON: ") + e.what());
  }
}

template <class C>
std::string to_plain_impl(const BasicSeries<C>& series) {
  std::ostringstream out;
  const auto& names = series.context().names();
  if (series.is_zero()) return "0\n";
  for (const auto& t : series.terms()) {
    out << to_decimal(t.coefficient);
    bool first = true;
    for (std::size_t i = 0; i < t.exponent.size(); ++i) {
      if (t.exponent[i] == 0) continue;
      out << (first ? " * " : " ") << names[i];
      if (t.exponent[i] != 1) out << '^' << t.exponent[i];
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

nlohmann::json to_json(const Series& series) { return to_json_impl(series); }
nlohmann::json to_json(const RationalSeries& series) { return to_json_impl(series); }

Series series_from_json(const nlohmann::json& json) {
  return from_json_impl<Integer>(json, [](const std::string& s) {
    Integer value;
    if (value.set_str(s, 10) != 0) throw InvalidArgument("malformed integer coefficient '" + s + "'");
    return value;
  });
}

RationalSeries rational_series_from_json(const nlohmann::json& json) {
  return from_json_impl<Rational>(json, [](const std::string& s) { return parse_rational(s); });
}

std::string to_plain(const Series& series) { return to_plain_impl(series); }
std::string to_plain(const RationalSeries& series) { return to_plain_impl(series); }

std::string render_factor(const FactorSpec& factor, const std::vector<std::string>& names) {
  if (factor.power == 0) return "1";
  std::ostringstream out;
  out << "(1" << (factor.sign > 0 ? '-' : '+');
  bool first = true;
  for (std::size_t i = 0; i < factor.exponent.size(); ++i) {
    if (factor.exponent[i] == 0) continue;
    out << (first ? "" : "*") << names.at(i);
    if (factor.exponent[i] != 1) out << '^' << factor.exponent[i];
    first = false;
  }
  out << ")^" << -factor.power;
  return out.str();
}

}  // namespace mckay
