#pragma once

// Truncated multivariate formal power series with exact coefficients.
//
// A series lives in a SeriesContext: variable names, a truncation order D and
// integer degree weights (all 1 by default, i.e. total degree).  Every stored
// term has weighted degree in [0, D] and a nonzero coefficient; terms are kept
// in a flat table sorted by (degree, lexicographic exponent).

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include "json.hpp"

#include "mckay/errors.hpp"
#include "mckay/numeric.hpp"

namespace mckay {

using Exponent = boost::container::small_vector<int, 10>;

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : e) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
    return h;
  }
};

class SeriesContext {
 public:
  SeriesContext(std::vector<std::string> names, int order, std::vector<int> weights = {});

  /// prefix_0, ..., prefix_{count-1} with total-degree truncation.
  static SeriesContext indexed(const std::string& prefix, std::size_t count, int order);

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  int order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }
  bool unit_weights() const;

  int degree(std::span<const int> exponent) const;
  int degree(const Exponent& exponent) const { return degree(std::span<const int>(exponent.data(), exponent.size())); }
  /// Same variables and weights, different truncation order.
  SeriesContext with_order(int order) const { return SeriesContext(names_, order, weights_); }

  friend bool operator==(const SeriesContext&, const SeriesContext&) = default;

 private:
  std::vector<std::string> names_;
  int order_;
  std::vector<int> weights_;
};

template <class C>
class BasicSeries {
 public:
  using Coefficient = C;
  struct Term {
    Exponent exponent;
    int degree;
    C coefficient;
  };

  explicit BasicSeries(SeriesContext context) : context_(std::move(context)) {}

  static BasicSeries constant(const SeriesContext& context, const C& value) {
    return monomial(context, std::vector<int>(context.num_vars(), 0), value);
  }
  static BasicSeries one(const SeriesContext& context) { return constant(context, C(1)); }

  /// Single term. Beyond the truncation order the result is zero; negative
  /// exponent entries or a negative weighted degree are rejected.
  static BasicSeries monomial(const SeriesContext& context, std::span<const int> exponent, const C& value) {
    BasicSeries result(context);
    if (exponent.size() != context.num_vars())
      throw DimensionMismatch("exponent has " + std::to_string(exponent.size()) + " entries, context has " +
                              std::to_string(context.num_vars()) + " variables");
    for (int e : exponent)
      if (e < 0) throw InvalidArgument("negative exponent entries are not supported");
    const int degree = context.degree(exponent);
    if (degree < 0) throw InvalidArgument("monomial has negative weighted degree");
    if (degree <= context.order() && value != 0)
      result.terms_.push_back({Exponent(exponent.begin(), exponent.end()), degree, value});
    return result;
  }

  /// Builds from arbitrary (exponent, coefficient) pairs: merges duplicates,
  /// drops zeros and terms beyond the order.
  static BasicSeries from_terms(const SeriesContext& context, std::vector<std::pair<Exponent, C>> raw) {
    std::unordered_map<Exponent, C, ExponentHash> merged;
    for (auto& [e, c] : raw) {
      if (e.size() != context.num_vars()) throw DimensionMismatch("exponent length differs from variable count");
      for (int x : e)
        if (x < 0) throw InvalidArgument("negative exponent entries are not supported");
      if (context.degree(e) < 0) throw InvalidArgument("term has negative weighted degree");
      merged[e] += c;
    }
    return from_map(context, std::move(merged));
  }

  const SeriesContext& context() const { return context_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of x^exponent; zero when absent. Throws OutOfRange beyond
  /// the truncation order, where the value is unknown rather than zero.
  C coefficient(std::span<const int> exponent) const {
    if (exponent.size() != context_.num_vars()) throw DimensionMismatch("exponent length differs from variable count");
    const int degree = context_.degree(exponent);
    if (degree > context_.order())
      throw OutOfRange("exponent of degree " + std::to_string(degree) + " lies beyond truncation order " +
                       std::to_string(context_.order()));
    auto it = find(exponent, degree);
    return it == terms_.end() ? C(0) : it->coefficient;
  }

  C constant_term() const {
    if (!terms_.empty() && terms_.front().degree == 0) {
      for (const auto& t : terms_) {
        if (t.degree != 0) break;
        if (std::all_of(t.exponent.begin(), t.exponent.end(), [](int x) { return x == 0; })) return t.coefficient;
      }
    }
    return C(0);
  }

  BasicSeries operator-() const {
    BasicSeries result = *this;
    for (auto& t : result.terms_) t.coefficient = -t.coefficient;
    return result;
  }

  BasicSeries& operator+=(const BasicSeries& other) { return *this = *this + other; }
  BasicSeries& operator-=(const BasicSeries& other) { return *this = *this - other; }
  BasicSeries& operator*=(const BasicSeries& other) { return *this = *this * other; }

  friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) { return combine(a, b, +1); }
  friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) { return combine(a, b, -1); }

  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    require_same_context(a, b);
    const int order = a.context_.order();
    std::unordered_map<Exponent, C, ExponentHash> acc;
    Exponent e(a.context_.num_vars());
    C product;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        if (ta.degree + tb.degree > order) break;  // b is sorted by degree
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ta.exponent[i] + tb.exponent[i];
        product = ta.coefficient * tb.coefficient;
        acc[e] += product;
      }
    }
    return from_map(a.context_, std::move(acc));
  }

  BasicSeries scaled(const C& factor) const {
    BasicSeries result(context_);
    if (factor == 0) return result;
    result.terms_ = terms_;
    for (auto& t : result.terms_) t.coefficient *= factor;
    return result;
  }

  /// Drops every term of degree > order in the same context.
  BasicSeries truncated(int order) const {
    BasicSeries result(context_);
    for (const auto& t : terms_)
      if (t.degree <= order) result.terms_.push_back(t);
    return result;
  }

  /// Same terms in a context with a different truncation order.
  BasicSeries in_context(const SeriesContext& context) const {
    if (context.names() != context_.names() || context.weights() != context_.weights())
      throw ContextMismatch("in_context requires identical variables and weights");
    BasicSeries result(context);
    for (const auto& t : terms_)
      if (t.degree <= context.order()) result.terms_.push_back(t);
    return result;
  }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    if (!(a.context_ == b.context_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coefficient != b.terms_[i].coefficient)
        return false;
    return true;
  }

 private:
  template <class>
  friend class BasicSeries;

  static void require_same_context(const BasicSeries& a, const BasicSeries& b) {
    if (!(a.context_ == b.context_)) throw ContextMismatch("series belong to different contexts");
  }

  static bool term_less(const Term& a, const Term& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return std::lexicographical_compare(a.exponent.begin(), a.exponent.end(), b.exponent.begin(), b.exponent.end());
  }

  typename std::vector<Term>::const_iterator find(std::span<const int> exponent, int degree) const {
    Term probe{Exponent(exponent.begin(), exponent.end()), degree, C(0)};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_less);
    if (it != terms_.end() && it->exponent == probe.exponent) return it;
    return terms_.end();
  }

  static BasicSeries from_map(const SeriesContext& context, std::unordered_map<Exponent, C, ExponentHash> map) {
    BasicSeries result(context);
    result.terms_.reserve(map.size());
    for (auto& [e, c] : map) {
      if (c == 0) continue;
      const int degree = context.degree(e);
      if (degree > context.order()) continue;
      result.terms_.push_back({e, degree, std::move(c)});
    }
    std::sort(result.terms_.begin(), result.terms_.end(), term_less);
    return result;
  }

  static BasicSeries combine(const BasicSeries& a, const BasicSeries& b, int sign) {
    require_same_context(a, b);
    BasicSeries result(a.context_);
    result.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && term_less(*ia, *ib))) {
        result.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || term_less(*ib, *ia)) {
        result.terms_.push_back(*ib++);
        if (sign < 0) result.terms_.back().coefficient = -result.terms_.back().coefficient;
      } else {
        C c = sign > 0 ? C(ia->coefficient + ib->coefficient) : C(ia->coefficient - ib->coefficient);
        if (c != 0) result.terms_.push_back({ia->exponent, ia->degree, std::move(c)});
        ++ia;
        ++ib;
      }
    }
    return result;
  }

  SeriesContext context_;
  std::vector<Term> terms_;
};

using Series = BasicSeries<Integer>;
using RationalSeries = BasicSeries<Rational>;

Series monomial(const SeriesContext& context, std::span<const int> exponent, const Integer& coefficient);

RationalSeries to_rational(const Series& series);

/// a^n for n >= 0; negative n goes through the inverse.
template <class C>
BasicSeries<C> pow(const BasicSeries<C>& base, long n);

/// Multiplicative inverse. Integer series need constant term +-1, rational
/// series a nonzero constant term. Every non-constant term must have
/// positive degree.
Series inverse(const Series& a);
RationalSeries inverse(const RationalSeries& a);

/// One wall-crossing factor (1 - sign * x^exponent)^(-power).
struct FactorSpec {
  std::vector<int> exponent;
  int sign = 1;
  int power = 0;

  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

/// Sum_{j>=0} C(k+j-1, j) s^j x^{j alpha}; also valid for negative k, where
/// it terminates (finite binomial expansion).
Series binomial_series(const SeriesContext& context, std::span<const int> exponent, int sign, long power);

/// expand_factor(f) == binomial_series(f.exponent, f.sign, f.power).
Series expand_factor(const SeriesContext& context, const FactorSpec& factor);

/// M(-x^delta)^n with M(x) = prod_{m>=1} (1 - x^m)^(-m).
Series macmahon_power(const SeriesContext& context, std::span<const int> delta_exponent, long n);

/// Image of a source variable: sign * x^exponent in the target context.
/// Exponent entries may be negative as long as every mapped term is not.
struct VariableImage {
  std::vector<int> exponent;
  int sign = 1;
};

/// Ring substitution x_i -> image_i, truncated to the target context.
/// Throws SubstitutionDomainError when a term maps to a negative exponent.
Series substitute(const Series& a, std::span<const VariableImage> images, const SeriesContext& target);

/// log(a) for constant term 1.
RationalSeries log_series(const RationalSeries& a);
RationalSeries log_series(const Series& a);
/// exp(a) for constant term 0.
RationalSeries exp_series(const RationalSeries& a);

// ---------------------------------------------------------------------------
// Serialization

/// {"vars": [...], "order": D, "terms": [[exponent, "coefficient"], ...]};
/// "weights" appears only for non-unit weights.
nlohmann::json to_json(const Series& series);
nlohmann::json to_json(const RationalSeries& series);
Series series_from_json(const nlohmann::json& json);
RationalSeries rational_series_from_json(const nlohmann::json& json);

/// One term per line: "coef * q_0^a q_1^b".
std::string to_plain(const Series& series);
std::string to_plain(const RationalSeries& series);

/// Human-readable factor, e.g. "(1+q_0*q_2^2)^-1".
std::string render_factor(const FactorSpec& factor, const std::vector<std::string>& names);

// ---------------------------------------------------------------------------
// Template definitions

template <class C>
BasicSeries<C> pow(const BasicSeries<C>& base, long n) {
  if (n < 0) return pow(inverse(base), -n);
  BasicSeries<C> result = BasicSeries<C>::one(base.context());
  BasicSeries<C> square = base;
  while (n > 0) {
    if (n & 1) result = result * square;
    n >>= 1;
    if (n > 0) square = square * square;
  }
  return result;
}

}  // namespace mckay
