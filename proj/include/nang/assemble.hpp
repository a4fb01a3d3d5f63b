#pragma once

// Block-matrix assemblers for the signed constructions: left rotation, the two
// mapping cones, the n-pushout row and the octahedral long sequence. They are
// written once over an "ops" object so the same code yields either symbolic
// entries (for sign goldens) or real morphisms.
//
// Ops interface: E a(k), b(k), c(k), f(k), g(k), h(k); O A(k), B(k), C(k);
// E sigma(E); O sigma_obj(O); E comp(E outer, E inner); E scale(int, E).
//
// Degenerate shapes for small n come from deleting blocks whose object is absent:
// A_k exists for k <= n+1, B_k and C_k for 2 <= k <= n+1 (B_1 only via the f-row
// of the cone constructions), so n = 1, 2, 3 need no special cases.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nang {

enum class SignSite : int {
  RotationLast,
  Cone1A,
  Cone1F,
  Cone1B,
  Cone1LastA,
  Cone1LastF,
  Cone1LastB,
  Cone2FirstA,
  Cone2FirstF,
  Cone2A,
  Cone2F,
  Cone2B,
  Cone2EndF,
  Cone2EndB,
  Cone2Last,
  LongFirstA,
  LongFirstF,
  LongA,
  LongF,
  LongH,
  LongB,
  LongG,
  LongC,
  LongLast,
  Count
};

const char* sign_site_name(SignSite s);
// printed sign, negated when the mutation harness has flipped this site
int site_sign(SignSite s, int printed);

// Flips one sign site for the lifetime of the guard (mutation testing only).
class SignFlipGuard {
 public:
  explicit SignFlipGuard(SignSite s);
  ~SignFlipGuard();
  SignFlipGuard(const SignFlipGuard&) = delete;
  SignFlipGuard& operator=(const SignFlipGuard&) = delete;
};

template <class E, class O>
struct Assembled {
  std::vector<O> rows, cols;
  std::vector<std::vector<std::optional<E>>> grid;
};

template <class Ops>
using EntryOf = decltype(std::declval<Ops&>().a(0));
template <class Ops>
using ObjOf = decltype(std::declval<Ops&>().A(0));
template <class Ops>
using AssembledOf = Assembled<EntryOf<Ops>, ObjOf<Ops>>;

inline int alt(int k) { return (k % 2 == 0) ? 1 : -1; }

template <class Ops>
EntryOf<Ops> rotation_last(Ops& o, int n) {
  return o.scale(site_sign(SignSite::RotationLast, alt(n)), o.sigma(o.a(0)));
}

// Mapping cone of a ladder f: a-row -> b-row. Map k in 0..n goes
// A_{k+1}+B_k -> A_{k+2}+B_{k+1}, where A(n+2) denotes the endofunctor image of A_0.
template <class Ops>
AssembledOf<Ops> cone1_map(Ops& o, int n, int k) {
  AssembledOf<Ops> m;
  if (k <= n) {
    m.cols = {o.A(k + 1), o.B(k)};
    m.rows = {o.A(k + 2), o.B(k + 1)};
    m.grid = {{o.scale(site_sign(SignSite::Cone1A, -1), o.a(k + 1)), std::nullopt},
              {o.scale(site_sign(SignSite::Cone1F, 1), o.f(k + 1)), o.scale(site_sign(SignSite::Cone1B, 1), o.b(k))}};
  } else {
    m.cols = {o.A(n + 2), o.B(n + 1)};
    m.rows = {o.sigma_obj(o.A(1)), o.sigma_obj(o.B(0))};
    m.grid = {{o.scale(site_sign(SignSite::Cone1LastA, -1), o.sigma(o.a(0))), std::nullopt},
              {o.scale(site_sign(SignSite::Cone1LastF, 1), o.sigma(o.f(0))),
               o.scale(site_sign(SignSite::Cone1LastB, 1), o.b(n + 1))}};
  }
  return m;
}

// Second cone (shared first object, f0 = 1), also the n-pushout row for k <= n.
// k = 0: [-a1; f1];  1 <= k < n: [[-a_{k+1},0],[f_{k+1},b_k]];  k = n: [f_{n+1} b_n];
// k = n+1: endo(a0) o b_{n+1}.
template <class Ops>
AssembledOf<Ops> cone2_map(Ops& o, int n, int k) {
  AssembledOf<Ops> m;
  if (k == 0) {
    m.cols = {o.A(1)};
    m.rows = {o.A(2), o.B(1)};
    m.grid = {{o.scale(site_sign(SignSite::Cone2FirstA, -1), o.a(1))},
              {o.scale(site_sign(SignSite::Cone2FirstF, 1), o.f(1))}};
  } else if (k < n) {
    m.cols = {o.A(k + 1), o.B(k)};
    m.rows = {o.A(k + 2), o.B(k + 1)};
    m.grid = {{o.scale(site_sign(SignSite::Cone2A, -1), o.a(k + 1)), std::nullopt},
              {o.scale(site_sign(SignSite::Cone2F, 1), o.f(k + 1)), o.scale(site_sign(SignSite::Cone2B, 1), o.b(k))}};
  } else if (k == n) {
    m.cols = {o.A(n + 1), o.B(n)};
    m.rows = {o.B(n + 1)};
    m.grid = {{o.scale(site_sign(SignSite::Cone2EndF, 1), o.f(n + 1)),
               o.scale(site_sign(SignSite::Cone2EndB, 1), o.b(n))}};
  } else {
    m.cols = {o.B(n + 1)};
    m.rows = {o.sigma_obj(o.A(1))};
    m.grid = {{o.scale(site_sign(SignSite::Cone2Last, 1), o.comp(o.sigma(o.a(0)), o.b(n + 1)))}};
  }
  return m;
}

// Octahedral long sequence L_0 -> ... -> L_{n+1} -> endo(A_2) with
// L_j = A_{j+2} + B_{j+1} + C_j, restricted to existing summands.
struct LongParts {
  bool a, b, c;
};
inline LongParts long_parts(int n, int j) {
  return {j + 2 <= n + 1, j + 1 >= 2 && j + 1 <= n + 1, j >= 2 && j <= n + 1};
}

template <class Ops>
AssembledOf<Ops> long_map(Ops& o, int n, int j) {
  AssembledOf<Ops> m;
  using E = EntryOf<Ops>;
  if (j == n + 1) {
    m.cols = {o.C(n + 1)};
    m.rows = {o.sigma_obj(o.A(2))};
    m.grid = {{o.scale(site_sign(SignSite::LongLast, 1), o.comp(o.sigma(o.a(1)), o.c(n + 1)))}};
    return m;
  }
  LongParts src = long_parts(n, j), dst = long_parts(n, j + 1);
  // column / row indices of each summand kind, -1 when absent
  int ca = -1, cb = -1, cc = -1, ra = -1, rb = -1, rc = -1;
  if (src.a) { ca = static_cast<int>(m.cols.size()); m.cols.push_back(o.A(j + 2)); }
  if (src.b) { cb = static_cast<int>(m.cols.size()); m.cols.push_back(o.B(j + 1)); }
  if (src.c) { cc = static_cast<int>(m.cols.size()); m.cols.push_back(o.C(j)); }
  if (dst.a) { ra = static_cast<int>(m.rows.size()); m.rows.push_back(o.A(j + 3)); }
  if (dst.b) { rb = static_cast<int>(m.rows.size()); m.rows.push_back(o.B(j + 2)); }
  if (dst.c) { rc = static_cast<int>(m.rows.size()); m.rows.push_back(o.C(j + 1)); }
  m.grid.assign(m.rows.size(), std::vector<std::optional<E>>(m.cols.size()));
  auto put = [&](int r, int c, E e) {
    if (r >= 0 && c >= 0) m.grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = std::move(e);
  };
  if (ra >= 0 && ca >= 0)
    put(ra, ca, j == 0 ? o.scale(site_sign(SignSite::LongFirstA, 1), o.a(j + 2))
                       : o.scale(site_sign(SignSite::LongA, -1), o.a(j + 2)));
  if (rb >= 0 && ca >= 0)
    put(rb, ca, j == 0 ? o.scale(site_sign(SignSite::LongFirstF, 1), o.f(j + 2))
                       : o.scale(site_sign(SignSite::LongF, alt(j - 1)), o.f(j + 2)));
  if (rc >= 0 && ca >= 0) put(rc, ca, o.scale(site_sign(SignSite::LongH, 1), o.h(j + 2)));
  if (rb >= 0 && cb >= 0) put(rb, cb, o.scale(site_sign(SignSite::LongB, -1), o.b(j + 1)));
  if (rc >= 0 && cb >= 0) put(rc, cb, o.scale(site_sign(SignSite::LongG, 1), o.g(j + 1)));
  if (rc >= 0 && cc >= 0) put(rc, cc, o.scale(site_sign(SignSite::LongC, 1), o.c(j)));
  return m;
}

// Symbolic entries for golden comparisons.
struct Sym {
  int sign = 1;
  std::string body;
};
std::string sym_to_string(const Sym& s);

struct SymbolicOps {
  int n = 0;  // when set, A_{n+2} prints as the endofunctor image of A_0

  Sym a(int k) const { return {1, "a_" + std::to_string(k)}; }
  Sym b(int k) const { return {1, "b_" + std::to_string(k)}; }
  Sym c(int k) const { return {1, "c_" + std::to_string(k)}; }
  Sym f(int k) const { return {1, "f_" + std::to_string(k)}; }
  Sym g(int k) const { return {1, "g_" + std::to_string(k)}; }
  Sym h(int k) const { return {1, "h_" + std::to_string(k)}; }
  std::string A(int k) const { return n > 0 && k == n + 2 ? "SA_0" : "A_" + std::to_string(k); }
  std::string B(int k) const { return "B_" + std::to_string(k); }
  std::string C(int k) const { return "C_" + std::to_string(k); }
  Sym sigma(const Sym& e) const { return {e.sign, "S" + e.body}; }
  std::string sigma_obj(const std::string& o) const { return "S" + o; }
  Sym comp(const Sym& outer, const Sym& inner) const { return {outer.sign * inner.sign, outer.body + "*" + inner.body}; }
  Sym scale(int s, const Sym& e) const { return {s * e.sign, e.body}; }
};

// Rows of strings, "0" for absent blocks.
std::vector<std::vector<std::string>> symbolic_grid(const Assembled<Sym, std::string>& m);

}  // namespace nang
