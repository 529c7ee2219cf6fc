#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "mckay/errors.hpp"
#include "mckay/quiver_stability.hpp"

using namespace mckay;

namespace {

std::vector<DynkinLabel> labels() {
  return {DynkinLabel(Family::A, 1), DynkinLabel(Family::A, 2), DynkinLabel(Family::A, 4),
          DynkinLabel(Family::D, 4), DynkinLabel(Family::D, 5), DynkinLabel(Family::E, 6),
          DynkinLabel(Family::E, 7), DynkinLabel(Family::E, 8)};
}

std::vector<Rational> rationals(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("McKay quiver arrows") {
  for (const auto& label : labels()) {
    CAPTURE(label.to_string());
    const DynkinGraph g(label, true);
    const auto edges = g.edges();
    const QuiverData q = mckay_quiver(label, false);
    CHECK(q.vertices.size() == static_cast<std::size_t>(label.affine_size()));
    CHECK(q.arrows.size() == 2 * edges.size() + label.affine_size());
    const RootVector delta = imaginary_root(label);
    for (const auto& v : q.vertices) CHECK(v.dimension == delta[v.index]);

    // Arrows between i and j in each direction equal the edge multiplicity.
    std::map<std::pair<int, int>, int> count;
    std::set<std::string> names;
    int loops = 0;
    for (const auto& a : q.arrows) {
      CHECK(names.insert(a.label).second);
      if (a.kind == ArrowKind::Loop) {
        CHECK(a.source == a.target);
        CHECK(a.label == "l_" + std::to_string(a.source));
        ++loops;
      } else {
        CHECK(a.kind == ArrowKind::Edge);
        ++count[{a.source, a.target}];
      }
    }
    CHECK(loops == label.affine_size());
    for (int i = 0; i < label.affine_size(); ++i)
      for (int j = 0; j < label.affine_size(); ++j)
        if (i != j) CHECK(count[{i, j}] == g.adjacency(i, j));

    const QuiverData framed = mckay_quiver(label, true);
    CHECK(framed.framed);
    CHECK(framed.arrows.size() == q.arrows.size() + 1);
    const Arrow& inf = framed.arrow("r_inf");
    CHECK(inf.kind == ArrowKind::Framing);
    CHECK(inf.source == -1);
    CHECK(inf.target == 0);
    CHECK_THROWS_AS(q.arrow("r_inf"), InvalidArgument);
  }
}

TEST_CASE("A1 quiver has labelled parallel arrows") {
  const QuiverData q = mckay_quiver(DynkinLabel(Family::A, 1), false);
  CHECK(q.arrow("r_{0,1}#1").target == 1);
  CHECK(q.arrow("r_{0,1}#2").source == 0);
  CHECK(q.arrow("r_{1,0}#2").target == 0);
}

TEST_CASE("superpotential terms are closed 3-cycles, two per edge") {
  for (const auto& label : labels()) {
    CAPTURE(label.to_string());
    const QuiverData q = mckay_quiver(label, false);
    const auto w = superpotential(q);
    CHECK(w.size() == 2 * DynkinGraph(label, true).edges().size());
    int plus = 0;
    for (const auto& term : w) {
      REQUIRE(term.path.size() == 3);
      for (std::size_t k = 0; k < 3; ++k) CHECK(term.path[k].target == term.path[(k + 1) % 3].source);
      int loop_count = 0;
      for (const auto& a : term.path) loop_count += a.kind == ArrowKind::Loop;
      CHECK(loop_count == 1);
      CHECK((term.sign == 1 || term.sign == -1));
      plus += term.sign > 0;
    }
    CHECK(2 * plus == static_cast<int>(w.size()));
  }
}

TEST_CASE("plain quiver rendering") {
  const QuiverData q = mckay_quiver(DynkinLabel(Family::A, 2), true);
  const std::string text = to_plain(q, superpotential(q));
  CHECK(text.find("arrow r_inf inf -> 0\n") != std::string::npos);
  CHECK(text.find("arrow l_2 2 -> 2\n") != std::string::npos);
  CHECK(text.find("+ l_0 r_{0,1} r_{1,0}") != std::string::npos);
  CHECK(text.find("- r_{1,0} r_{0,1} l_1") != std::string::npos);
}

TEST_CASE("stability parameters") {
  const auto z = StabilityParameter::parse("1, -2/3,5");
  CHECK(z.base() == std::vector<Rational>{Rational(1), Rational(-2, 3), Rational(5)});
  CHECK(z.to_string() == "(1,-2/3,5)");
  CHECK_THROWS_AS(StabilityParameter::parse("1,x"), InvalidArgument);
  CHECK_THROWS_AS(StabilityParameter::parse("1/0"), InvalidArgument);

  const DynkinLabel d5(Family::D, 5);
  CHECK(zeta_imaginary(d5).base() == rationals({-7, 1, 1, 1, 1, 1}));
  CHECK(zeta_imaginary(DynkinLabel(Family::E, 7)).base() == rationals({-17, 1, 1, 1, 1, 1, 1, 1}));
  const RootVector delta = imaginary_root(d5);
  CHECK(zeta_imaginary(d5).dot(delta).sign() == 0);
  CHECK(zeta_im_perturbed(d5, +1).dot(delta).sign() == 1);
  CHECK(zeta_im_perturbed(d5, -1).dot(delta).sign() == -1);
  CHECK(zeta_im_perturbed(d5, +1).to_string() == "(-7+eps,1,1,1,1,1)");
  // The perturbation never overrides a nonzero base pairing.
  for (const auto& r : affine_positive_real_roots(d5, 24))
    CHECK(zeta_im_perturbed(d5, -1).dot(r.vector).sign() == r.sign);
}

TEST_CASE("theta slope and the framing parameter") {
  const StabilityParameter zeta(rationals({-3, 1, 2}));
  const RootVector v{1, 1, 1};
  CHECK(theta_slope(zeta, Rational(0), v, 0) == 0);
  CHECK(theta_slope(zeta, Rational(4), v, 1) == 1);
  const RootVector w{2, 0, 1};
  const Rational zinf = solve_zeta_infinity(zeta, w);
  CHECK(zinf == 4);
  CHECK(theta_slope(zeta, zinf, w, 1) == 0);
  CHECK_THROWS_AS(theta_slope(zeta, Rational(0), RootVector{0, 0, 0}, 0), InvalidArgument);
  CHECK_THROWS_AS(theta_slope(zeta_im_perturbed(DynkinLabel(Family::A, 2), 1), Rational(0), v, 1), InvalidArgument);
}

TEST_CASE("walls") {
  const DynkinLabel a1(Family::A, 1);
  const auto list = walls(a1, 4);
  // Real roots up to entry sum 4: (0,1),(1,0),(1,2),(2,1); imaginary (1,1) with 2 delta.
  REQUIRE(list.size() == 5);
  CHECK(list[0].normal == RootVector{0, 1});
  CHECK(list[1].normal == RootVector{1, 0});
  CHECK(list[2].imaginary);
  CHECK(list[2].roots == std::vector<RootVector>{RootVector{1, 1}, RootVector{2, 2}});
  CHECK_FALSE(list[3].imaginary);
  CHECK(walls(a1, 1).size() == 2);
}

TEST_CASE("crossed walls along a segment") {
  const DynkinLabel a1(Family::A, 1);
  const StabilityParameter from(rationals({1, 2}));
  const StabilityParameter to(rationals({-3, 1}));
  // Pairings: (1,0): 1 -> -3 at t=1/4; (2,1): 4 -> -5 at 4/9; (1,1): 3 -> -2 at 3/5;
  // (1,2): 5 -> -1 at 5/6; (0,1) stays positive.
  const auto crossings = crossed_walls(a1, from, to, 3);
  REQUIRE(crossings.size() == 4);
  CHECK(crossings[0].wall.normal == RootVector{1, 0});
  CHECK(crossings[0].parameter == Rational(1, 4));
  CHECK(crossings[1].wall.normal == RootVector{2, 1});
  CHECK(crossings[1].parameter == Rational(4, 9));
  CHECK(crossings[2].wall.imaginary);
  CHECK(crossings[2].parameter == Rational(3, 5));
  CHECK(crossings[3].wall.normal == RootVector{1, 2});
  CHECK(crossings[3].parameter == Rational(5, 6));
  for (const auto& c : crossings) CHECK(c.direction == 1);

  const auto back = crossed_walls(a1, to, from, 3);
  REQUIRE(back.size() == 4);
  CHECK(back[0].wall.normal == RootVector{1, 2});
  CHECK(back[0].direction == -1);

  CHECK_THROWS_AS(crossed_walls(a1, StabilityParameter(rationals({1, 0})), to, 3), NonGenericPath);
  // (1,0) and (0,1) flip together at t = 1/2.
  CHECK_THROWS_AS(crossed_walls(a1, StabilityParameter(rationals({1, 1})), StabilityParameter(rationals({-1, -1})), 1),
                  NonGenericPath);
  CHECK_THROWS_AS(crossed_walls(a1, zeta_im_perturbed(a1, 1), to, 3), InvalidArgument);
}

TEST_CASE("DT indexing of a dimension vector") {
  const DynkinLabel d5(Family::D, 5);
  const RootVector delta = imaginary_root(d5);
  CHECK(dt_invariant_indexing(2 * delta, d5) == DtIndex{2, {0, 0, 0, 0, 0}});
  CHECK(dt_invariant_indexing(RootVector{1, 0, 1, 1, 1, 0}, d5) == DtIndex{1, {1, 0, 1, 1, 1}});
  CHECK_THROWS_AS(dt_invariant_indexing(RootVector{1, 0}, d5), DimensionMismatch);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> e(6);
    for (auto& x : e) x = static_cast<int>(rng() % 6);
    const RootVector v(e);
    const DtIndex idx = dt_invariant_indexing(v, d5);
    // Round trip v = n delta - (0, beta).
    std::vector<int> back{0};
    back.insert(back.end(), idx.beta.begin(), idx.beta.end());
    CHECK(idx.n * delta - RootVector(back) == v);
  }
}
