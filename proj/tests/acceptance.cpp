// Acceptance run: one PASS/FAIL line per criterion, exact comparisons, each
// with a wall-clock limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "mckay/errors.hpp"
#include "mckay/invariants.hpp"
#include "oracle.hpp"

using namespace mckay;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

bool same(const Series& s, const oracle::Naive& n) {
  std::map<oracle::Vec, mpz_class> mine;
  for (const auto& t : s.terms()) mine[oracle::Vec(t.exponent.begin(), t.exponent.end())] = t.coefficient;
  return mine == n.c;
}

// ---- 1
Outcome d5_golden() {
  Outcome o;
  const auto report = verify_d5_example(8);
  for (const auto& part : report.parts)
    if (!part.passed) o.fail(part.name + ": " + part.detail);
  if (report.parts.size() != 5) o.fail("expected five parts");
  if (o.ok) o.note = "20 roots, 40 families, 40 chamber factors, 20 (q,t) factors";
  return o;
}

// ---- 2
Outcome e7_spot() {
  Outcome o;
  const DynkinLabel e7(Family::E, 7);
  const RootVector delta = imaginary_root(e7);
  const int r = delta.height() - delta[0];
  if (r != 17) o.fail("r = " + std::to_string(r));
  const auto zeta = zeta_imaginary(e7);
  std::vector<Rational> expected(8, Rational(1));
  expected[0] = -17;
  if (zeta.base() != expected) o.fail("zeta^im = " + zeta.to_string());
  const RootVector beta{0, 2, 3, 4, 3, 2, 1, 2};
  const DynkinGraph g(e7, true);
  if (!std::holds_alternative<RealRootClass>(classify_vector(g, beta))) o.fail("beta is not a root");
  for (int m = 1; m <= 5; ++m) {
    const auto plus = zeta.dot(m * delta + beta).base;
    const auto minus = zeta.dot(m * delta - beta).base;
    if (plus != 17 || minus != -17)
      o.fail("m = " + std::to_string(m) + ": " + plus.get_str() + ", " + minus.get_str());
  }
  if (o.ok) o.note = "r = 17, pairings +17 / -17 for m = 1..5";
  return o;
}

// ---- 3
Outcome macmahon() {
  Outcome o;
  const auto counts = oracle::plane_partition_counts(6, 6);
  const auto ctx = SeriesContext::indexed("q", 1, 6);
  const Series m = macmahon_power(ctx, std::vector<int>{1}, 1);  // M(-q)
  std::ostringstream seen;
  for (int n = 0; n <= 6; ++n) {
    const Integer c = m.coefficient(std::vector<int>{n}) * ((n % 2) ? -1 : 1);
    seen << (n ? "," : "") << c.get_str();
    if (c != counts[n]) o.fail("n = " + std::to_string(n) + ": " + c.get_str() + " vs " + std::to_string(counts[n]));
  }
  if (o.ok) o.note = "coefficients " + seen.str();
  return o;
}

// ---- 4
Outcome product_oracle() {
  Outcome o;
  const int order = 8;
  std::size_t compared = 0;
  for (auto [family, rank] : {std::pair{'A', 1}, std::pair{'A', 2}, std::pair{'D', 4}}) {
    const DynkinLabel label(family == 'A' ? Family::A : Family::D, rank);
    const oracle::Diagram d(family, rank);
    const auto pt_plus = oracle::pt(d, order, 1);
    const auto pt_minus = oracle::pt(d, order, -1);
    const auto mm = oracle::macmahon(d, order);
    const std::string name = label.to_string();
    auto expect = [&](const Series& s, const oracle::Naive& n, const char* what) {
      compared += n.c.size();
      if (!same(s, n)) o.fail(name + " " + what);
    };
    expect(z_pt(label, Orientation::Plus, order), pt_plus, "z_pt(+)");
    expect(z_pt(label, Orientation::Minus, order), pt_minus, "z_pt(-)");
    expect(z_dt(label, Orientation::Plus, order), mm * pt_plus, "z_dt(+)");
    expect(z_dt(label, Orientation::Minus, order), mm * pt_minus, "z_dt(-)");
    expect(z_ncdt(label, order), mm * pt_plus * pt_minus, "z_ncdt");
  }
  if (o.ok) o.note = std::to_string(compared) + " coefficients over A1, A2, D4";
  return o;
}

std::vector<DynkinLabel> identity_labels() {
  return {DynkinLabel(Family::A, 1), DynkinLabel(Family::A, 2), DynkinLabel(Family::A, 3), DynkinLabel(Family::D, 4),
          DynkinLabel(Family::D, 5)};
}

Outcome run_checks(const std::function<CheckReport(const DynkinLabel&, int)>& check) {
  Outcome o;
  std::size_t compared = 0;
  for (const auto& label : identity_labels()) {
    const auto r = check(label, 8);
    compared += r.compared_terms;
    if (!r.passed) o.fail(r.name + ": " + r.detail);
  }
  if (o.ok) o.note = std::to_string(compared) + " coefficients over A1, A2, A3, D4, D5";
  return o;
}

// ---- 7
Outcome bps() {
  Outcome o;
  std::size_t roots = 0;
  for (const auto& label : {DynkinLabel(Family::A, 1), DynkinLabel(Family::A, 2)}) {
    const auto table = bps_extract(label, 10);
    if (!table.residual_zero()) o.fail(label.to_string() + ": nonzero residual");
    const auto report = check_bps(table);
    if (!report.passed) o.fail(report.detail);
    for (const auto& beta : finite_positive_roots(label)) {
      if (beta.height() >= 10) continue;
      ++roots;
      if (table.value(0, beta.entries()) != -1) o.fail(label.to_string() + " n_0 at " + beta.to_string());
    }
  }
  if (o.ok) o.note = "n_0 = -1 on " + std::to_string(roots) + " roots, residuals 0";
  return o;
}

// ---- 8
Outcome path_independence() {
  Outcome o;
  const DynkinLabel a2(Family::A, 2);
  const int order = 6;
  const auto context = q_context(a2, order);
  const DynkinGraph graph(a2, true);
  const RootVector delta = imaginary_root(a2);
  std::mt19937 rng(8);
  auto draw = [&]() {
    while (true) {
      std::vector<Rational> z;
      for (int i = 0; i < 3; ++i) z.emplace_back(static_cast<int>(rng() % 61) - 30, 1 + static_cast<int>(rng() % 9));
      StabilityParameter zeta(z);
      if (zeta.dot(delta).sign() <= 0) continue;
      try {
        chamber_factors(a2, zeta, order);
        return zeta;
      } catch (const NonGenericParameter&) {
      }
    }
  };
  int pairs = 0, crossings = 0;
  while (pairs < 25) {
    const auto from = draw();
    const auto to = draw();
    std::vector<WallCrossing> path;
    try {
      path = crossed_walls(a2, from, to, order);
    } catch (const NonGenericPath&) {
      continue;
    }
    Series z = chamber_partition_function(a2, from, order).series;
    for (const auto& c : path) {
      if (c.wall.imaginary) {
        o.fail("PT-side path crossed the imaginary wall");
        continue;
      }
      if (c.wall.normal[0] == 0) continue;
      FactorSpec f = wall_crossing_factor(graph, c.wall.normal);
      f.power *= c.direction;
      z = z * expand_factor(context, f);
      ++crossings;
    }
    if (!(z == chamber_partition_function(a2, to, order).series))
      o.fail("mismatch from " + from.to_string() + " to " + to.to_string());
    ++pairs;
  }
  if (o.ok) o.note = "25 pairs, " + std::to_string(crossings) + " nontrivial crossings";
  return o;
}

// ---- 9
Outcome properties() {
  Outcome o;
  std::mt19937 rng(9);
  const std::vector<DynkinLabel> labels{DynkinLabel(Family::A, 1), DynkinLabel(Family::A, 3), DynkinLabel(Family::D, 4),
                                        DynkinLabel(Family::D, 6), DynkinLabel(Family::E, 6), DynkinLabel(Family::E, 7),
                                        DynkinLabel(Family::E, 8)};
  const int cases = 120;

  for (int k = 0; k < cases; ++k) {
    const auto& label = labels[rng() % labels.size()];
    const DynkinGraph g(label, rng() % 2 == 0);
    std::vector<int> e(g.vertex_count());
    for (auto& x : e) x = static_cast<int>(rng() % 13) - 6;
    const RootVector x(e);
    const std::size_t v = rng() % g.vertex_count();
    if (reflect(g, v, reflect(g, v, x)) != x) o.fail("reflection is not an involution");
    if (quadratic_form(g, reflect(g, v, x)) != quadratic_form(g, x)) o.fail("reflection changes the form");
  }

  for (int k = 0; k < cases; ++k) {
    const auto& label = labels[rng() % labels.size()];
    const DynkinGraph g(label, true);
    const RootVector delta = imaginary_root(label);
    const auto roots = affine_positive_real_roots(label, 2 * delta.height());
    const auto& r = roots[rng() % roots.size()];
    if (quadratic_form(g, r.vector) != 1) o.fail("real root with Q != 1");
    const int m = 1 + static_cast<int>(rng() % 4);
    if (quadratic_form(g, m * delta) != 0) o.fail("imaginary root with Q != 0");
  }

  const std::vector<std::pair<DynkinLabel, std::size_t>> table{
      {DynkinLabel(Family::A, 1), 1},   {DynkinLabel(Family::A, 5), 15}, {DynkinLabel(Family::D, 4), 12},
      {DynkinLabel(Family::D, 5), 20},  {DynkinLabel(Family::D, 7), 42}, {DynkinLabel(Family::E, 6), 36},
      {DynkinLabel(Family::E, 7), 63},  {DynkinLabel(Family::E, 8), 120}};
  for (int k = 0; k < cases; ++k) {
    const auto& [label, count] = table[rng() % table.size()];
    if (finite_positive_roots(label).size() != count) o.fail("root count for " + label.to_string());
  }

  auto random_series = [&](const SeriesContext& ctx, bool unit) {
    std::vector<std::pair<Exponent, Integer>> raw;
    for (int t = 0; t < 6; ++t) {
      Exponent e(ctx.num_vars(), 0);
      int budget = static_cast<int>(rng() % (ctx.order() + 1));
      for (auto& x : e) {
        x = budget > 0 ? static_cast<int>(rng() % (budget + 1)) : 0;
        budget -= x;
      }
      raw.emplace_back(e, Integer(static_cast<int>(rng() % 21) - 10));
    }
    Series s = Series::from_terms(ctx, std::move(raw));
    if (unit) s = s - Series::constant(ctx, s.constant_term()) + Series::one(ctx);
    return s;
  };

  for (int k = 0; k < cases; ++k) {
    const auto ctx = SeriesContext::indexed("q", 1 + rng() % 4, 2 + rng() % 6);
    const Series a = random_series(ctx, false), b = random_series(ctx, false), c = random_series(ctx, false);
    if (!(a + b == b + a) || !(a * b == b * a) || !((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c) ||
        !(a * Series::one(ctx) == a) || !(a - a).is_zero())
      o.fail("ring axiom");
  }

  for (int k = 0; k < cases; ++k) {
    const auto ctx = SeriesContext::indexed("q", 1 + rng() % 3, 2 + rng() % 7);
    std::vector<int> e(ctx.num_vars());
    do {
      for (auto& x : e) x = static_cast<int>(rng() % 3);
    } while (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }));
    const int sign = rng() % 2 ? 1 : -1;
    const int power = 1 + static_cast<int>(rng() % 4);
    const Series f = expand_factor(ctx, {e, sign, power});
    if (!(f * expand_factor(ctx, {e, sign, -power}) == Series::one(ctx))) o.fail("factor times inverse factor");
    if (!(f * inverse(f) == Series::one(ctx))) o.fail("factor times inverse");
  }

  for (int k = 0; k < cases; ++k) {
    const auto ctx = SeriesContext::indexed("q", 1 + rng() % 3, 1 + rng() % 6);
    const Series a = random_series(ctx, true);
    if (!(exp_series(log_series(a)) == to_rational(a))) o.fail("exp(log(a)) != a");
  }

  if (o.ok) o.note = "6 suites x " + std::to_string(cases) + " cases";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "D5 golden reproduction", 5, d5_golden},
      {2, "E7 spot values", 1, e7_spot},
      {3, "MacMahon vs plane partitions", 10, macmahon},
      {4, "product expansion vs naive oracle, D = 8", 60, product_oracle},
      {5, "crepant resolution identity, D = 8", 120, [] { return run_checks(check_crepant); }},
      {6, "GW/PT correspondence, D = 8", 60, [] { return run_checks(check_gw_pt); }},
      {7, "BPS extraction, D = 10", 60, bps},
      {8, "wall-crossing path independence, A2 D = 6", 60, path_independence},
      {9, "property suites", 60, properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.limit_seconds) outcome.fail("over time limit");
    failures += !outcome.ok;
    std::printf("%s [%d] %s (%.3f s, limit %.0f s): %s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, outcome.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
