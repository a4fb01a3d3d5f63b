#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mesh_oracle.hpp"
#include "nang/axioms.hpp"
#include "nang/workbench.hpp"
#include "span_oracle.hpp"

using namespace nang;
using oracle::MeshAn;
using oracle::Vertex;

namespace {

// Positions read off the Auslander-Reiten quiver of the cluster category of type A3
// (linear orientation): bottom row S3, S2, S1, P1[1]; middle P2, I2, P2[1]; top P1, S3[1].
const Vertex kS3{0, 1}, kS2{1, 1}, kS1{2, 1}, kP1Shift{3, 1};
const Vertex kP2{0, 2}, kI2{1, 2}, kP2Shift{2, 2};
const Vertex kP1{0, 3}, kS3Shift{1, 3};

std::vector<Vertex> cluster_indecomposables(const MeshAn& m) {
  // one representative per F-orbit
  std::vector<Vertex> reps;
  for (int p = -6; p <= 6; ++p)
    for (int q = 1; q <= m.n(); ++q) {
      Vertex v{p, q};
      bool seen = false;
      for (auto r : reps) seen = seen || m.same_orbit(r, v);
      if (!seen) reps.push_back(v);
    }
  return reps;
}

}  // namespace

TEST_CASE("hammocks satisfy Serre duality") {
  MeshAn m(3);
  for (int p = -2; p <= 2; ++p)
    for (int q = 1; q <= 3; ++q) {
      Vertex x{p, q};
      CHECK(m.hom_derived(x, x) == 1);
      CHECK(m.hom_derived(x, m.tau(x)) == 0);
      for (int pp = -3; pp <= 5; ++pp)
        for (int qq = 1; qq <= 3; ++qq) {
          Vertex y{pp, qq};
          CHECK(m.hom_derived(x, y) == m.hom_derived(y, m.serre(x)));
        }
    }
}

TEST_CASE("shift agrees with the drawn quiver") {
  MeshAn m(3);
  CHECK(m.shift(kS3) == kS3Shift);
  CHECK(m.shift(kP2) == kP2Shift);
  CHECK(m.shift(kP1) == kP1Shift);
  CHECK(m.hom_derived(kS3, kP2) == 1);
  CHECK(m.hom_derived(kP2, kS2) == 1);
  CHECK(m.hom_derived(kS3, kS2) == 0);  // mesh relation at P2
  CHECK(m.hom_derived(kP2, kI2) == 1);
  CHECK(m.cluster_f_inv(m.cluster_f(kI2)) == kI2);
}

TEST_CASE("the cluster category of type A3 has nine indecomposables") {
  MeshAn m(3);
  CHECK(cluster_indecomposables(m).size() == 9);
}

TEST_CASE("add(S3 + P1 + S1) is 2-cluster tilting and stable under [2]") {
  MeshAn m(3);
  const std::vector<Vertex> t = {kS3, kP1, kS1};
  for (auto a : t)
    for (auto b : t) CHECK(m.hom_cluster(a, m.shift(b)) == 0);
  for (auto y : cluster_indecomposables(m)) {
    bool in_t = false;
    for (auto a : t) in_t = in_t || m.same_orbit(a, y);
    int ext = 0;
    for (auto a : t) ext += m.hom_cluster(a, m.shift(y));
    CHECK((ext == 0) == in_t);
  }
  for (auto a : t) {
    Vertex s2 = m.shift(m.shift(a));
    bool in_t = false;
    for (auto b : t) in_t = in_t || m.same_orbit(b, s2);
    CHECK(in_t);
  }
}

TEST_CASE("A3 builtin matches the mesh oracle") {
  MeshAn m(3);
  auto d = builtin_document("a3-cluster-2ct");
  const auto& c = d.cat;
  const std::vector<Vertex> pos = {kS3, kP1, kS1};
  REQUIRE(c.size() == 3);
  CHECK(c.indec_names == std::vector<std::string>{"S3", "P1", "S1"});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      INFO(c.indec_names[i] << " -> " << c.indec_names[j]);
      CHECK(c.dim(i, j) == m.hom_cluster(pos[i], pos[j]));
    }
  // [2] on objects
  REQUIRE(c.endo.has_value());
  for (int i = 0; i < 3; ++i) {
    Vertex s2 = m.shift(m.shift(pos[i]));
    CHECK(m.same_orbit(pos[c.endo->sigma[static_cast<std::size_t>(i)]], s2));
  }
  // no composite of two non-identity basis morphisms can be nonzero
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (i == j || j == k) continue;
        if (c.dim(i, j) == 0 || c.dim(j, k) == 0) continue;
        CHECK(m.hom_cluster(pos[i], pos[k]) == (i == k ? 1 : 0));
        for (const auto& e : c.comp(i, j, k)) CHECK(e.coef == 0);
      }
}

TEST_CASE("ideal and quotient dimensions equal the span oracle") {
  for (const char* name : {"a3-cluster-2ct", "stable-kx2"}) {
    Workbench wb(builtin_document(name));
    const QuotientContext& q = *wb.quotient();
    const auto& c = wb.cat();
    const auto members = *wb.doc().subcategory;
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
      for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        int id = oracle::ideal_dim(c, members, i, j);
        INFO(name << " " << c.indec_names[i] << " -> " << c.indec_names[j]);
        CHECK(q.ideal_dim(i, j) == id);
        CHECK(q.qdim(i, j) == c.dim(i, j) - id);
      }
    for (const auto& a : enumerate_universe(q, 2).objects)
      for (const auto& b : enumerate_universe(q, 2).objects) {
        int expect = 0;
        for (int s : a.slots())
          for (int t : b.slots()) expect += oracle::ideal_dim(c, members, s, t);
        CHECK(static_cast<int>(q.ideal_subspace(a, b).cols()) == expect);
      }
  }
}

TEST_CASE("frozen ideal dimensions") {
  Workbench a3(builtin_document("a3-cluster-2ct"));
  const auto& q = *a3.quotient();
  CHECK(q.ideal_dim(1, 1) == 0);  // [X](P1, P1)
  CHECK(q.qdim(1, 1) == 1);
  CHECK(q.ideal_dim(0, 1) == 1);
  CHECK(q.ideal_dim(1, 2) == 1);
  Workbench kx(builtin_document("stable-kx2"));
  const auto& s = *kx.quotient();
  CHECK(s.ideal_dim(0, 0) == 0);
  CHECK(s.ideal_dim(1, 1) == 2);
  CHECK(s.qdim(0, 0) == 1);
}
