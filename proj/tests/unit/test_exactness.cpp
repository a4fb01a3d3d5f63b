#include <doctest.h>

#include "nang/exactness.hpp"
#include "nang/workbench.hpp"

using namespace nang;

namespace {

// stable-kx2 ambient: k = 0, L = 1; Hom(L,L) = span(1, x).
struct KX2 {
  PresentationDocument d = builtin_document("stable-kx2");
  const CategoryPresentation& c = d.cat;
  Obj k = c.indec(0), L = c.indec(1);
  Mor incl() const { return basis_mor(c, k, L, 0); }
  Mor proj() const { return basis_mor(c, L, k, 0); }
  Mor x() const { return basis_mor(c, L, L, 1); }
};

}  // namespace

TEST_CASE("epimorphisms and cokernels over k[x]/(x^2)") {
  KX2 t;
  CHECK(is_epimorphism(t.c, t.proj()));
  CHECK_FALSE(is_epimorphism(t.c, t.incl()));
  CHECK(is_epimorphism(t.c, mor_identity(t.c, t.L)));
  // 0 -> k -> L -> k -> 0: the projection is a cokernel of the inclusion
  CHECK(is_cokernel(t.c, t.incl(), t.proj()));
  CHECK(is_weak_cokernel(t.c, t.incl(), t.proj()));
  // x is not a cokernel of the inclusion, though x o incl = 0
  CHECK(mor_is_zero(mor_compose(t.c, t.x(), t.incl())));
  CHECK_FALSE(is_cokernel(t.c, t.incl(), t.x()));
}

TEST_CASE("annihilator columns kill the map") {
  KX2 t;
  for (int target = 0; target < 2; ++target) {
    Matrix ann = annihilator(t.c, t.incl(), target);
    for (std::size_t col = 0; col < ann.cols(); ++col) {
      Mor h = mor_zero(t.c, t.L, t.c.indec(target));
      for (std::size_t r = 0; r < ann.rows(); ++r) h.v[r] = ann(r, col);
      CHECK(mor_is_zero(mor_compose(t.c, h, t.incl())));
    }
  }
  CHECK(annihilator(t.c, t.incl(), 0).cols() == 1);  // the projection
  CHECK(annihilator(t.c, t.incl(), 1).cols() == 1);  // x
}

TEST_CASE("radical of End(L) is spanned by x") {
  KX2 t;
  Matrix r = radical_basis(t.c, 1);
  CHECK(r.cols() == 1);
  CHECK(radical_basis(t.c, 0).cols() == 0);
}

TEST_CASE("right n-exact certification") {
  KX2 t;
  auto r = make_right_n_exact({t.incl(), t.proj()});
  CHECK(r.n() == 1);
  CHECK(certify_right_n_exact(t.c, r).ok);
  auto bad = make_right_n_exact({t.incl(), t.x()});
  CHECK_FALSE(certify_right_n_exact(t.c, bad).ok);
  CHECK_THROWS(make_right_n_exact({t.incl(), t.incl()}));
}

TEST_CASE("n-cokernel search") {
  KX2 t;
  for (int n = 1; n <= 3; ++n) {
    auto r = find_n_cokernel(t.c, t.incl(), n);
    REQUIRE(r.has_value());
    CHECK(r->n() == n);
    CHECK(certify_right_n_exact(t.c, *r).ok);
  }
  // constrained to add(L): the special chain after the socle inclusion
  CokernelSearch opts;
  opts.constraint = std::vector<int>{1};
  auto r = find_n_cokernel(t.c, t.incl(), 1, opts);
  REQUIRE(r.has_value());
  CHECK(certify_right_n_exact(t.c, *r).ok);
}

TEST_CASE("n-pushout of the inclusion along itself") {
  KX2 t;
  auto r = make_right_n_exact({t.incl(), t.proj()});
  auto s = make_right_n_exact({t.incl(), t.proj()});
  auto p = n_pushout(t.c, r, s, {mor_identity(t.c, t.L), mor_identity(t.c, t.k)});
  CHECK(p.objs[1] == obj_direct_sum(t.k, t.L));
  CHECK(certify_right_n_exact(t.c, p).ok);
}
