#include <doctest.h>

#include <set>

#include "nang/assemble.hpp"

using namespace nang;

namespace {
using Grid = std::vector<std::vector<std::string>>;
}

TEST_CASE("sign sites have distinct names") {
  std::set<std::string> names;
  for (int s = 0; s < static_cast<int>(SignSite::Count); ++s) names.insert(sign_site_name(static_cast<SignSite>(s)));
  CHECK(names.size() == static_cast<std::size_t>(SignSite::Count));
}

TEST_CASE("a flip guard negates one site and restores it") {
  CHECK(site_sign(SignSite::Cone1A, -1) == -1);
  {
    SignFlipGuard g(SignSite::Cone1A);
    CHECK(site_sign(SignSite::Cone1A, -1) == 1);
    CHECK(site_sign(SignSite::Cone1B, 1) == 1);
  }
  CHECK(site_sign(SignSite::Cone1A, -1) == -1);
}

TEST_CASE("n = 1 long sequence collapses to A2 -> B2 -> C2") {
  SymbolicOps o;
  auto m0 = long_map(o, 1, 0);
  CHECK(m0.cols == std::vector<std::string>{"A_2"});
  CHECK(m0.rows == std::vector<std::string>{"B_2"});
  CHECK(symbolic_grid(m0) == Grid{{"f_2"}});
  auto m1 = long_map(o, 1, 1);
  CHECK(m1.rows == std::vector<std::string>{"C_2"});
  CHECK(symbolic_grid(m1) == Grid{{"g_2"}});
  CHECK(symbolic_grid(long_map(o, 1, 2)) == Grid{{"Sa_1*c_2"}});
}

TEST_CASE("block presence rule") {
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= n; ++j) {
      LongParts p = long_parts(n, j);
      CHECK(p.a == (j + 2 <= n + 1));
      CHECK(p.b == (j >= 1 && j <= n));
      CHECK(p.c == (j >= 2));
    }
}

TEST_CASE("rotation sign alternates with n") {
  SymbolicOps o;
  CHECK(sym_to_string(rotation_last(o, 1)) == "-Sa_0");
  CHECK(sym_to_string(rotation_last(o, 2)) == "Sa_0");
}
