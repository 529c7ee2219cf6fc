// Worked D5 (binary dihedral group of order 12) example: golden data and the
// verifier that recomputes it.
//
// Display layout of the transcribed tables (vertex indexing as in
// build_diagram):
//
//   affine roots            finite roots
//      rho0 rho1                 rho1
//   rho2 rho3 rho4 rho5     rho2 rho3 rho4 rho5

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "mckay/invariants.hpp"

namespace mckay {

namespace {

struct FiniteRootLayout {
  int top;
  std::array<int, 4> bottom;
};

constexpr std::array<FiniteRootLayout, 20> kFiniteRoots{{
    {1, {0, 0, 0, 0}}, {0, {1, 0, 0, 0}}, {0, {0, 1, 0, 0}}, {0, {0, 0, 1, 0}}, {0, {0, 0, 0, 1}},
    {0, {1, 1, 0, 0}}, {0, {0, 1, 1, 0}}, {0, {0, 0, 1, 1}}, {1, {0, 0, 1, 0}}, {0, {1, 1, 1, 0}},
    {0, {0, 1, 1, 1}}, {1, {0, 0, 1, 1}}, {1, {0, 1, 1, 0}}, {0, {1, 1, 1, 1}}, {1, {0, 1, 1, 1}},
    {1, {1, 1, 1, 0}}, {1, {1, 1, 1, 1}}, {1, {0, 1, 2, 1}}, {1, {1, 1, 2, 1}}, {1, {1, 2, 2, 1}},
}};

// Entries are affine expressions in m: "m", "m-1", "2m", "2m-1", "2m-2".
struct FamilyLayout {
  std::array<const char*, 2> top;     // rho0, rho1
  std::array<const char*, 4> bottom;  // rho2 .. rho5
};

constexpr std::array<FamilyLayout, 20> kNegativeFamilies{{
    {{"m", "m-1"}, {"m", "2m", "2m", "m"}},
    {{"m", "m"}, {"m-1", "2m", "2m", "m"}},
    {{"m", "m"}, {"m", "2m-1", "2m", "m"}},
    {{"m", "m"}, {"m", "2m", "2m-1", "m"}},
    {{"m", "m"}, {"m", "2m", "2m", "m-1"}},
    {{"m", "m"}, {"m-1", "2m-1", "2m", "m"}},
    {{"m", "m"}, {"m", "2m-1", "2m-1", "m"}},
    {{"m", "m"}, {"m", "2m", "2m-1", "m-1"}},
    {{"m", "m-1"}, {"m", "2m", "2m-1", "m"}},
    {{"m", "m"}, {"m-1", "2m-1", "2m-1", "m"}},
    {{"m", "m"}, {"m", "2m-1", "2m-1", "m-1"}},
    {{"m", "m-1"}, {"m", "2m", "2m-1", "m-1"}},
    {{"m", "m-1"}, {"m", "2m-1", "2m-1", "m"}},
    {{"m", "m"}, {"m-1", "2m-1", "2m-1", "m-1"}},
    {{"m", "m-1"}, {"m", "2m-1", "2m-1", "m-1"}},
    {{"m", "m-1"}, {"m-1", "2m-1", "2m-1", "m"}},
    {{"m", "m-1"}, {"m-1", "2m-1", "2m-1", "m-1"}},
    {{"m", "m-1"}, {"m-1", "2m-1", "2m-2", "m-1"}},
    {{"m", "m-1"}, {"m", "2m-1", "2m-2", "m-1"}},
    {{"m", "m-1"}, {"m-1", "2m-2", "2m-2", "m-1"}},
}};

// Factors of Z at zeta^{im,+}, in display order.
constexpr std::array<const char*, 20> kPtChamberFactors{{
    "(1-(-q_0)^{m}q_1^{m-1}q_2^{m}q_3^{2m}q_4^{2m}q_5^{m})^{-m}",
    "(1-(-q_0)^{m}q_1^{m}q_2^{m-1}q_3^{2m}q_4^{2m}q_5^{m})^{-m}",
    "(1-(-q_0)^{m}q_1^{m}q_2^{m}q_3^{2m-1}q_4^{2m}q_5^{m})^{-m}",
    "(1-(-q_0)^{m}q_1^{m}q_2^{m}q_3^{2m}q_4^{2m-1}q_5^{m})^{-m}",
    "(1-(-q_0)^{m}q_1^{m}q_2^{m}q_3^{2m}q_4^{2m}q_5^{m-1})^{-m}",
    "(1-(-q_0)^{m}q_1^{m}q_2^{m-1}q_3^{2m-1}q_4^{2m}q_5^{m})^{-m}",
    "(1-(-q_0)^{m}q_1^{m}q_2^{m}q_3^{2m-1}q_4^{2m-1}q_5^{m})^{-m}",
    "(1-(-q_0)^{m}q_1^{m}q_2^{m}q_3^{2m}q_4^{2m-1}q_5^{m-1})^{-m}",
    "(1-(-q_0)^{m}q_1^{m-1}q_2^{m}q_3^{2m}q_4^{2m-1}q_5^{m})^{-m}",
    "(1-(-q_0)^{m}q_1^{m}q_2^{m-1}q_3^{2m-1}q_4^{2m-1}q_5^{m})^{-m}",
    "(1-(-q_0)^{m}q_1^{m}q_2^{m}q_3^{2m-1}q_4^{2m-1}q_5^{m-1})^{-m}",
    "(1-(-q_0)^{m}q_1^{m-1}q_2^{m}q_3^{2m}q_4^{2m-1}q_5^{m-1})^{-m}",
    "(1-(-q_0)^{m}q_1^{m-1}q_2^{m}q_3^{2m-1}q_4^{2m-1}q_5^{m})^{-m}",
    "(1-(-q_0)^{m}q_1^{m}q_2^{m-1}q_3^{2m-1}q_4^{2m-1}q_5^{m-1})^{-m}",
    "(1-(-q_0)^{m}q_1^{m-1}q_2^{m}q_3^{2m-1}q_4^{2m-1}q_5^{m-1})^{-m}",
    "(1-(-q_0)^{m}q_1^{m-1}q_2^{m-1}q_3^{2m-1}q_4^{2m-1}q_5^{m})^{-m}",
    "(1-(-q_0)^{m}q_1^{m-1}q_2^{m-1}q_3^{2m-1}q_4^{2m-1}q_5^{m-1})^{-m}",
    "(1-(-q_0)^{m}q_1^{m-1}q_2^{m}q_3^{2m-1}q_4^{2m-2}q_5^{m-1})^{-m}",
    "(1-(-q_0)^{m}q_1^{m-1}q_2^{m-1}q_3^{2m-1}q_4^{2m-2}q_5^{m-1})^{-m}",
    "(1-(-q_0)^{m}q_1^{m-1}q_2^{m-1}q_3^{2m-2}q_4^{2m-2}q_5^{m-1})^{-m}",
}};

// Factors of Z_PT(q, t) after q = q^delta, t_i = q_i^{-1}.
constexpr std::array<const char*, 20> kPtCurveFactors{{
    "(1-t_1(-q)^{m})^{-m}",           "(1-t_2(-q)^{m})^{-m}",
    "(1-t_3(-q)^{m})^{-m}",           "(1-t_4(-q)^{m})^{-m}",
    "(1-t_5(-q)^{m})^{-m}",           "(1-t_2t_3(-q)^{m})^{-m}",
    "(1-t_3t_4(-q)^{m})^{-m}",        "(1-t_4t_5(-q)^{m})^{-m}",
    "(1-t_1t_4(-q)^{m})^{-m}",        "(1-t_2t_3t_4(-q)^{m})^{-m}",
    "(1-t_3t_4t_5(-q)^{m})^{-m}",     "(1-t_1t_4t_5(-q)^{m})^{-m}",
    "(1-t_1t_3t_4(-q)^{m})^{-m}",     "(1-t_2t_3t_4t_5(-q)^{m})^{-m}",
    "(1-t_1t_3t_4t_5(-q)^{m})^{-m}",  "(1-t_1t_2t_3t_4(-q)^{m})^{-m}",
    "(1-t_1t_2t_3t_4t_5(-q)^{m})^{-m}", "(1-t_1t_3t_4^2t_5(-q)^{m})^{-m}",
    "(1-t_1t_2t_3t_4^2t_5(-q)^{m})^{-m}", "(1-t_1t_2t_3^2t_4^2t_5(-q)^{m})^{-m}",
}};

// "cm-k" -> (c, k)
std::pair<int, int> parse_linear(std::string_view text) {
  int c = 1;
  std::size_t pos = 0;
  if (!text.empty() && std::isdigit(static_cast<unsigned char>(text[0]))) {
    c = text[0] - '0';
    pos = 1;
  }
  text.remove_prefix(pos + 1);  // the 'm'
  int k = 0;
  if (!text.empty()) k = std::stoi(std::string(text.substr(1)));
  return {c, k};
}

RootVector family_at(const FamilyLayout& family, int m) {
  std::vector<const char*> ordered{family.top[0], family.top[1], family.bottom[0],
                                   family.bottom[1], family.bottom[2], family.bottom[3]};
  std::vector<int> entries;
  for (const char* e : ordered) {
    auto [c, k] = parse_linear(e);
    entries.push_back(c * m - k);
  }
  return RootVector(std::move(entries));
}

std::string linear_token(int coefficient, int offset) {
  std::string s = coefficient == 1 ? "m" : std::to_string(coefficient) + "m";
  if (offset > 0) s += "-" + std::to_string(offset);
  return s;
}

// Symbolic token of the factor for root m delta - beta.
std::string chamber_token(const RootVector& delta, const RootVector& beta) {
  std::string s = "(1-(-q_0)^{m}";
  for (std::size_t i = 1; i < delta.size(); ++i)
    s += "q_" + std::to_string(i) + "^{" + linear_token(delta[i], beta[i]) + "}";
  return s + ")^{-m}";
}

std::string curve_token(const RootVector& beta) {
  std::string s = "(1-";
  for (std::size_t i = 1; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    s += "t_" + std::to_string(i);
    if (beta[i] > 1) s += "^" + std::to_string(beta[i]);
  }
  return s + "(-q)^{m})^{-m}";
}

template <class T>
CheckReport compare_sets(std::string name, const std::multiset<T>& computed, const std::multiset<T>& golden,
                         auto describe) {
  CheckReport report;
  report.name = std::move(name);
  report.compared_terms = golden.size();
  std::vector<T> missing, extra;
  std::set_difference(golden.begin(), golden.end(), computed.begin(), computed.end(), std::back_inserter(missing));
  std::set_difference(computed.begin(), computed.end(), golden.begin(), golden.end(), std::back_inserter(extra));
  std::ostringstream detail;
  detail << (golden.size() - missing.size()) << "/" << golden.size() << " golden entries matched";
  for (const auto& m : missing) detail << "; missing " << describe(m);
  for (const auto& e : extra) detail << "; unexpected " << describe(e);
  report.detail = detail.str();
  report.passed = missing.empty() && extra.empty();
  return report;
}

}  // namespace

D5Report verify_d5_example(int order) {
  const DynkinLabel label(Family::D, 5);
  const RootVector delta = imaginary_root(label);
  D5Report report;
  auto show = [](const RootVector& v) { return v.to_string(); };
  auto quote = [](const std::string& s) { return s; };

  // (a) finite positive roots
  {
    std::multiset<RootVector> golden, computed;
    for (const auto& r : kFiniteRoots)
      golden.insert(RootVector{r.top, r.bottom[0], r.bottom[1], r.bottom[2], r.bottom[3]});
    for (const auto& r : finite_positive_roots(label)) computed.insert(r);
    report.parts.push_back(compare_sets("(a) positive roots of D5", computed, golden, show));
  }

  // Negative-side real roots for m = 1, 2 via the split at zeta^im.
  const int m_max = 2;
  const auto roots = affine_positive_real_roots(label, m_max * delta.height());
  const auto split = split_real_roots(roots, zeta_imaginary(label));
  std::vector<AffineRealRoot> negative;
  for (const auto& r : split.negative_side)
    if (r.m <= m_max) negative.push_back(r);

  // (b) the m delta - beta families
  {
    std::multiset<RootVector> golden, computed;
    for (int m = 1; m <= m_max; ++m)
      for (const auto& f : kNegativeFamilies) golden.insert(family_at(f, m));
    for (const auto& r : negative) computed.insert(r.vector);
    report.parts.push_back(compare_sets("(b) negative-side real roots, m <= 2", computed, golden, show));
  }

  // (c) factors of the PT-chamber partition function, symbolic in m
  {
    std::multiset<std::string> golden, computed;
    for (int m = 1; m <= m_max; ++m)
      for (const char* token : kPtChamberFactors) golden.insert(token);
    const auto factors = chamber_factors(label, zeta_im_perturbed(label, +1), m_max * delta.height());
    for (const auto& f : factors) {
      RootVector alpha(f.exponent);
      const int m = alpha[0];
      if (m > m_max) continue;
      const FactorSpec expected = wall_crossing_factor(AffineRealRoot{alpha, m, {}, -1});
      if (!(expected == f) || f.power != m) {
        computed.insert("malformed factor for " + alpha.to_string());
        continue;
      }
      computed.insert(chamber_token(delta, m * delta - alpha));
    }
    report.parts.push_back(compare_sets("(c) PT-chamber factors, m <= 2", computed, golden, quote));
  }

  // (d) curve-class form of Z_PT at m = 1
  {
    std::multiset<std::string> golden(kPtCurveFactors.begin(), kPtCurveFactors.end()), computed;
    for (const auto& f : pt_factors(label, Orientation::Plus, delta.height())) {
      RootVector alpha(f.exponent);
      if (alpha[0] == 1) computed.insert(curve_token(delta - alpha));
    }
    report.parts.push_back(compare_sets("(d) Z_PT(q,t) factors, m = 1", computed, golden, quote));
  }

  // (e) the golden families reproduce z_pt(+) to the requested order
  {
    const auto context = q_context(label, order);
    Series product = Series::one(context);
    for (int m = 1; m * delta.height() - 7 <= order; ++m) {
      for (const auto& f : kNegativeFamilies) {
        const RootVector alpha = family_at(f, m);
        if (alpha.height() > order) continue;
        product = product * expand_factor(context, {alpha.entries(), (m & 1) ? -1 : 1, m});
      }
    }
    auto part = compare_series("(e) golden product vs z_pt(+) to order " + std::to_string(order), product,
                               z_pt(label, Orientation::Plus, order));
    report.parts.push_back(std::move(part));
  }
  return report;
}

}  // namespace mckay
