#include <doctest.h>

#include <random>

#include "nang/angles.hpp"
#include "nang/workbench.hpp"

using namespace nang;

namespace {

Mor random_mor(const HomView& v, const Obj& a, const Obj& b, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Scalar> x(v.hom_dim(a, b));
  for (auto& e : x) e = d(rng);
  return v.lift(a, b, x);
}

Mor random_iso(const HomView& v, const Obj& a, std::mt19937& rng) {
  for (;;) {
    Mor f = random_mor(v, a, a, rng);
    if (v.inverse(f)) return f;
  }
}

}  // namespace

TEST_CASE("make_sequence rejects broken chains") {
  Workbench wb(builtin_document("vect-q", 1));
  const auto& c = wb.cat();
  Obj V = c.indec(0);
  std::vector<Mor> maps = {mor_identity(c, V), mor_identity(c, V), mor_zero(c, V, V)};
  CHECK_THROWS(make_sequence(wb.ambient(), maps));
}

TEST_CASE("ladder fill-in solving round trip") {
  std::mt19937 rng(5);
  Workbench wb(builtin_document("a3-cluster-2ct"));
  const ThetaOracle& o = wb.oracle();
  const HomView& v = wb.view();
  const auto& c = wb.cat();
  int solved = 0;
  for (int t = 0; t < 25; ++t) {
    Obj a0 = Obj({0, 1 + static_cast<int>(rng() % 2), 0}), a1 = Obj({0, 1, 0});
    Mor f = random_mor(v, a0, a1, rng);
    Mor g = random_mor(v, a0, a1, rng);
    NSequence s = embed_morphism(o, f), u = embed_morphism(o, g);
    Mor f0 = random_mor(v, a0, a0, rng);
    // choose f1 with f1 f = g f0 when possible
    LinearSystem sys(v);
    int x = sys.add_unknown(a1, a1);
    int e = sys.add_equation(a0, a1);
    sys.add_term(e, x, std::nullopt, f);
    sys.add_constant(e, v.compose(g, f0), -1);
    auto sol = sys.solve();
    if (!sol) continue;
    Mor f1 = sys.value(x, LinearSystem::point(*sol, std::vector<Scalar>(sol->nullspace.cols(), 0)));
    auto l = solve_ladder(v, s, u, {f0, f1});
    REQUIRE(l.has_value());
    CHECK(ladder_commutes(v, *l));
    CHECK(v.equal(l->legs[0], f0));
    CHECK(v.equal(l->legs[1], f1));
    SequenceLadder r = rotate_ladder(v, *l);
    CHECK(ladder_commutes(v, r));
    ++solved;
  }
  CHECK(solved > 5);
  (void)c;
}

TEST_CASE("isomorphism search finds transported copies") {
  std::mt19937 rng(11);
  Workbench wb(builtin_document("a3-cluster-2ct"));
  const AmbientView& v = wb.ambient();
  ThetaOracle o(*wb.phi());
  for (const auto& g : wb.generators()) {
    CHECK(find_sequence_iso(v, g, g).has_value());
    std::vector<Mor> phis;
    for (const auto& a : g.objs) phis.push_back(random_iso(v, a, rng));
    NSequence t = transport(v, g, phis);
    auto iso = find_sequence_iso(v, g, t);
    REQUIRE(iso.has_value());
    CHECK(ladder_commutes(v, *iso));
    for (const auto& leg : iso->legs) CHECK(v.inverse(leg).has_value());
  }
}

TEST_CASE("direct sum projections form ladders") {
  Workbench wb(builtin_document("a3-cluster-2ct"));
  const AmbientView& v = wb.ambient();
  const auto& c = wb.cat();
  NSequence g = wb.generators().front();
  NSequence r = left_rotation(v, g);
  NSequence s = seq_direct_sum(v, g, r);
  for (int part = 0; part < 2; ++part) {
    const NSequence& t = part == 0 ? g : r;
    std::vector<Mor> legs;
    for (std::size_t k = 0; k < s.objs.size(); ++k)
      legs.push_back(projection(c, {g.objs[k], r.objs[k]}, static_cast<std::size_t>(part)));
    SequenceLadder l = make_ladder(v, s, t, legs);
    CHECK(ladder_commutes(v, l));
  }
}

TEST_CASE("left rotation of a ladder commutes") {
  Workbench wb(builtin_document("a3-cluster-2ct"));
  const AmbientView& v = wb.ambient();
  NSequence g = wb.generators().front();
  std::vector<Mor> legs;
  for (const auto& a : g.objs) legs.push_back(mor_scale(Scalar(-2), v.id(a)));
  SequenceLadder l = make_ladder(v, g, g, legs);
  CHECK(ladder_commutes(v, l));
  CHECK(ladder_commutes(v, rotate_ladder(v, l)));
  SequenceLadder sq = ladder_compose(v, l, l);
  CHECK(ladder_commutes(v, sq));
}

TEST_CASE("trivial sequences and unit angles are complexes") {
  for (int n = 1; n <= 3; ++n) {
    Workbench wb(builtin_document("vect-q", n));
    const HomView& v = wb.view();
    Obj a = Obj({2});
    CHECK(is_complex(v, trivial_sequence(v, a, n)));
    CHECK(is_complex(v, unit_angle(v, a, n)));
    CHECK(trivial_sequence(v, a, n).objs.size() == static_cast<std::size_t>(n) + 2);
  }
}
