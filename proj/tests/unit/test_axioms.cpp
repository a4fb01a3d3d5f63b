#include <doctest.h>

#include "nang/axioms.hpp"
#include "nang/workbench.hpp"

using namespace nang;

namespace {

OctahedronInput identity_input(const ThetaOracle& o, const Obj& a) {
  const HomView& v = o.view();
  OctahedronInput in;
  Mor id = v.id(a);
  in.f1 = id;
  in.a_row = embed_morphism(o, id);
  in.b_row = embed_morphism(o, id);
  in.c_row = embed_morphism(o, id);
  return in;
}

void check_suite_clean(const SuiteReport& r) {
  for (const auto& rec : r.records)
    if (rec.verdict != "MEMBER" && rec.verdict != "PASS") FAIL_CHECK(rec.key << " " << rec.axiom << " " << rec.verdict << " " << rec.detail);
  CHECK(r.violations == 0);
  CHECK(r.not_found == 0);
  CHECK(r.undecided == 0);
}

}  // namespace

TEST_CASE("vect-q suites pass for n = 1, 2, 3") {
  for (int n = 1; n <= 3; ++n) {
    Workbench wb(builtin_document("vect-q", n));
    SuiteOptions so;
    so.threads = 1;
    so.rn3_instances = 20;
    auto r = run_full_suite(wb.oracle(), enumerate_universe(wb.view(), 2), so);
    INFO("n = " << n);
    check_suite_clean(r);
    CHECK(r.per_axiom.count("RN4*") == 1);
  }
}

TEST_CASE("suite reports are deterministic") {
  Workbench wb(builtin_document("vect-q", 2));
  SuiteOptions so;
  so.rn3_instances = 10;
  so.seed = 17;
  auto u = enumerate_universe(wb.view(), 2);
  auto r1 = run_full_suite(wb.oracle(), u, so);
  so.threads = 1;
  auto r2 = run_full_suite(wb.oracle(), u, so);
  REQUIRE(r1.records.size() == r2.records.size());
  for (std::size_t i = 0; i < r1.records.size(); ++i) {
    CHECK(r1.records[i].key == r2.records[i].key);
    CHECK(r1.records[i].digest == r2.records[i].digest);
  }
}

TEST_CASE("identity instances") {
  for (const char* name : {"a3-cluster-2ct", "stable-kx2"}) {
    Workbench wb(builtin_document(name));
    const ThetaOracle& o = wb.oracle();
    const HomView& v = o.view();
    for (int i = 0; i < static_cast<int>(wb.cat().size()); ++i) {
      Obj a = wb.cat().indec(i);
      if (v.obj_vanishes(a)) continue;
      INFO(name << " " << i);
      CHECK(check_trivial(o, a).verdict == Verdict::Member);
      OctahedronInput in = identity_input(o, a);
      OctahedronCompletion c = complete_rn4_star(o, in);
      CHECK(c.membership.verdict == Verdict::Member);
      CHECK(completion_failures(o, in, c).empty());
      NSequence s = in.a_row;
      auto l = solve_rn3(o, s, s, v.id(a), v.id(a));
      REQUIRE(l.has_value());
      CHECK(ladder_failures(v, *l).empty());
      SequenceLadder d = derive_rn3(o, s, s, v.id(a), v.id(a));
      CHECK(ladder_commutes(v, d));
    }
  }
}

TEST_CASE("converters on the stable category round trip") {
  Workbench wb(builtin_document("stable-kx2"));
  const ThetaOracle& o = wb.oracle();
  const HomView& v = o.view();
  const auto& c = wb.cat();
  Obj k = c.indec(0);
  Mor two = mor_scale(Scalar(2), v.id(k));
  NSequence s = embed_morphism(o, v.id(k)), t = embed_morphism(o, two);
  LadderInput in{s, t, v.id(k), two};
  ConeResult r1 = convert_rn42_to_rn41(o, in);
  CHECK(r1.membership.verdict == Verdict::Member);
  CHECK(ladder_commutes(v, r1.ladder));
  ConeResult r2 = convert_rn41_to_rn42(o, in);
  CHECK(r2.membership.verdict == Verdict::Member);
  ConeResult r3 = convert_rn4star_to_rn41(o, LadderInput{s, s, two, two});
  CHECK(r3.membership.verdict == Verdict::Member);
}

TEST_CASE("ladder input preconditions") {
  Workbench wb(builtin_document("stable-kx2"));
  const ThetaOracle& o = wb.oracle();
  const HomView& v = o.view();
  Obj k = wb.cat().indec(0);
  NSequence s = embed_morphism(o, v.id(k));
  Mor wrong = v.zero(k, k);
  // f1 a0 = b0 f0 fails for f0 = 1, f1 = 0
  CHECK_THROWS_AS(solve_rn3(o, s, s, v.id(k), wrong), PreconditionError);
}

TEST_CASE("explicit A3 class passes at multiplicity one, including the N4 route") {
  Workbench wb(builtin_document("a3-cluster-2ct"));
  ThetaOracle phi(*wb.phi());
  SuiteOptions so;
  so.rn3_instances = 20;
  auto r = run_full_suite(phi, enumerate_universe(phi.view(), 1), so);
  check_suite_clean(r);
  CHECK(r.per_axiom.count("N4") == 1);
}

TEST_CASE("N4 identity instance in the explicit class") {
  Workbench wb(builtin_document("a3-cluster-2ct"));
  ThetaOracle phi(*wb.phi());
  OctahedronInput in = identity_input(phi, wb.cat().indec(1));
  OctahedronCompletion c = complete_n4_from_n4star(phi, in);
  CHECK(c.membership.verdict == Verdict::Member);
  CHECK(completion_failures(phi, in, c).empty());
}

TEST_CASE("digest") {
  CHECK(digest("abc") == digest("abc"));
  CHECK(digest("abc") != digest("abd"));
  CHECK(digest("").size() == 16);
}
