#include "nang/category.hpp"

#include <sstream>
#include <stdexcept>

namespace nang {

std::size_t Obj::total() const {
  std::size_t t = 0;
  for (int m : mult) t += static_cast<std::size_t>(m);
  return t;
}

std::vector<int> Obj::slots() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (int r = 0; r < mult[i]; ++r) s.push_back(static_cast<int>(i));
  return s;
}

Obj obj_direct_sum(const Obj& a, const Obj& b) {
  if (a.mult.size() != b.mult.size()) throw std::invalid_argument("obj_direct_sum: size mismatch");
  Obj r = a;
  for (std::size_t i = 0; i < r.mult.size(); ++i) r.mult[i] += b.mult[i];
  return r;
}

Obj obj_sum(const std::vector<Obj>& parts) {
  if (parts.empty()) throw std::invalid_argument("obj_sum: empty list");
  Obj r = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) r = obj_direct_sum(r, parts[k]);
  return r;
}

void CategoryPresentation::resize(std::size_t n) {
  indec_names.resize(n);
  id_coords.resize(n);
  dims_.assign(n * n, 0);
  comp_.assign(n * n * n, {});
}

void CategoryPresentation::add_comp(int i, int j, int k, int a, int b, int c, const Scalar& coef) {
  if (is_zero(coef)) return;
  auto& v = comp_mut(i, j, k);
  for (auto& e : v)
    if (e.a == a && e.b == b && e.c == c) {
      e.coef += coef;
      return;
    }
  v.push_back(CompEntry{a, b, c, coef});
}

int CategoryPresentation::index_of(const std::string& nm) const {
  for (std::size_t i = 0; i < indec_names.size(); ++i)
    if (indec_names[i] == nm) return static_cast<int>(i);
  return -1;
}

void CategoryPresentation::compose_acc(int i, int j, int k, const Scalar* x, const Scalar* y,
                                       Scalar* out) const {
  for (const auto& e : comp(i, j, k)) {
    if (is_zero(x[e.a]) || is_zero(y[e.b])) continue;
    out[e.c] += e.coef * x[e.a] * y[e.b];
  }
}

HomLayout::HomLayout(const Obj& a, const Obj& b, const std::vector<int>& d, std::size_t nind)
    : src_slots(a.slots()), dst_slots(b.slots()), dims(&d), n(nind) {
  offset.resize(src_slots.size() * dst_slots.size() + 1);
  std::size_t off = 0;
  for (std::size_t p = 0; p < dst_slots.size(); ++p)
    for (std::size_t q = 0; q < src_slots.size(); ++q) {
      offset[p * src_slots.size() + q] = off;
      off += static_cast<std::size_t>(d[static_cast<std::size_t>(src_slots[q]) * n + dst_slots[p]]);
    }
  offset.back() = off;
}

std::size_t hom_total_dim(const CategoryPresentation& c, const Obj& a, const Obj& b) {
  std::size_t t = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      t += static_cast<std::size_t>(a.mult[i]) * b.mult[j] * c.dim(static_cast<int>(i), static_cast<int>(j));
  return t;
}

Mor mor_zero(const CategoryPresentation& c, const Obj& a, const Obj& b) {
  return Mor{a, b, std::vector<Scalar>(hom_total_dim(c, a, b))};
}

Mor mor_identity(const CategoryPresentation& c, const Obj& a) {
  Mor m = mor_zero(c, a, a);
  HomLayout l(a, a, c.dims(), c.size());
  for (std::size_t p = 0; p < l.dst_slots.size(); ++p) {
    const auto& id = c.id_coords[static_cast<std::size_t>(l.dst_slots[p])];
    for (std::size_t t = 0; t < id.size(); ++t) m.v[l.at(p, p) + t] = id[t];
  }
  return m;
}

Mor mor_compose(const CategoryPresentation& c, const Mor& g, const Mor& f) {
  if (f.dst != g.src) throw std::invalid_argument("mor_compose: object mismatch");
  HomLayout lf(f.src, f.dst, c.dims(), c.size());
  HomLayout lg(g.src, g.dst, c.dims(), c.size());
  HomLayout lr(f.src, g.dst, c.dims(), c.size());
  Mor r{f.src, g.dst, std::vector<Scalar>(lr.total())};
  const std::size_t nr = lf.src_slots.size(), nq = lf.dst_slots.size(), np = lg.dst_slots.size();
  auto block_nonzero = [](const std::vector<Scalar>& v, std::size_t off, int d) {
    for (int t = 0; t < d; ++t)
      if (!is_zero(v[off + t])) return true;
    return false;
  };
  std::vector<char> fnz(nq * nr), gnz(np * nq);
  for (std::size_t q = 0; q < nq; ++q)
    for (std::size_t s = 0; s < nr; ++s) fnz[q * nr + s] = block_nonzero(f.v, lf.at(q, s), lf.block_dim(q, s));
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t q = 0; q < nq; ++q) gnz[p * nq + q] = block_nonzero(g.v, lg.at(p, q), lg.block_dim(p, q));
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t q = 0; q < nq; ++q) {
      if (!gnz[p * nq + q]) continue;
      for (std::size_t s = 0; s < nr; ++s) {
        if (!fnz[q * nr + s]) continue;
        c.compose_acc(lf.src_slots[s], lf.dst_slots[q], lg.dst_slots[p], &f.v[lf.at(q, s)], &g.v[lg.at(p, q)],
                      &r.v[lr.at(p, s)]);
      }
    }
  return r;
}

Mor mor_add(const Mor& f, const Mor& g) {
  if (f.src != g.src || f.dst != g.dst) throw std::invalid_argument("mor_add: shape mismatch");
  Mor r = f;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += g.v[i];
  return r;
}

Mor mor_sub(const Mor& f, const Mor& g) {
  if (f.src != g.src || f.dst != g.dst) throw std::invalid_argument("mor_sub: shape mismatch");
  Mor r = f;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] -= g.v[i];
  return r;
}

Mor mor_scale(const Scalar& s, const Mor& f) {
  Mor r = f;
  for (auto& x : r.v) x *= s;
  return r;
}

Mor mor_neg(const Mor& f) { return mor_scale(Scalar(-1), f); }

bool mor_is_zero(const Mor& f) {
  for (const auto& x : f.v)
    if (!is_zero(x)) return false;
  return true;
}

bool mor_equal(const Mor& f, const Mor& g) { return f.src == g.src && f.dst == g.dst && f.v == g.v; }

std::vector<int> part_slot_map(const std::vector<Obj>& parts, std::size_t k) {
  const std::size_t n = parts.at(k).mult.size();
  Obj total = obj_sum(parts);
  std::vector<int> start(n, 0);
  for (std::size_t i = 1; i < n; ++i) start[i] = start[i - 1] + total.mult[i - 1];
  std::vector<int> map;
  for (std::size_t i = 0; i < n; ++i) {
    int before = 0;
    for (std::size_t j = 0; j < k; ++j) before += parts[j].mult[i];
    for (int r = 0; r < parts[k].mult[i]; ++r) map.push_back(start[i] + before + r);
  }
  return map;
}

namespace {

// Copy the blocks of e (src part q, dst part p) into r using slot maps.
void place(const CategoryPresentation& c, const Mor& e, const std::vector<int>& dmap,
           const std::vector<int>& smap, const HomLayout& lr, Mor& r) {
  HomLayout le(e.src, e.dst, c.dims(), c.size());
  for (std::size_t p = 0; p < le.dst_slots.size(); ++p)
    for (std::size_t q = 0; q < le.src_slots.size(); ++q) {
      int d = le.block_dim(p, q);
      std::size_t from = le.at(p, q), to = lr.at(static_cast<std::size_t>(dmap[p]), static_cast<std::size_t>(smap[q]));
      for (int t = 0; t < d; ++t) r.v[to + t] = e.v[from + t];
    }
}

}  // namespace

Mor injection(const CategoryPresentation& c, const std::vector<Obj>& parts, std::size_t k) {
  Obj total = obj_sum(parts);
  Mor r = mor_zero(c, parts[k], total);
  HomLayout lr(parts[k], total, c.dims(), c.size());
  place(c, mor_identity(c, parts[k]), part_slot_map(parts, k),
        [&] {
          std::vector<int> id(parts[k].total());
          for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
          return id;
        }(),
        lr, r);
  return r;
}

Mor projection(const CategoryPresentation& c, const std::vector<Obj>& parts, std::size_t k) {
  Obj total = obj_sum(parts);
  Mor r = mor_zero(c, total, parts[k]);
  HomLayout lr(total, parts[k], c.dims(), c.size());
  std::vector<int> id(parts[k].total());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  place(c, mor_identity(c, parts[k]), id, part_slot_map(parts, k), lr, r);
  return r;
}

Mor block_matrix(const CategoryPresentation& c, const std::vector<Obj>& dst_parts,
                 const std::vector<Obj>& src_parts, const BlockGrid& grid) {
  if (grid.size() != dst_parts.size()) throw std::invalid_argument("block_matrix: row count mismatch");
  Obj src = obj_sum(src_parts), dst = obj_sum(dst_parts);
  Mor r = mor_zero(c, src, dst);
  HomLayout lr(src, dst, c.dims(), c.size());
  std::vector<std::vector<int>> smaps, dmaps;
  for (std::size_t q = 0; q < src_parts.size(); ++q) smaps.push_back(part_slot_map(src_parts, q));
  for (std::size_t p = 0; p < dst_parts.size(); ++p) dmaps.push_back(part_slot_map(dst_parts, p));
  for (std::size_t p = 0; p < dst_parts.size(); ++p) {
    if (grid[p].size() != src_parts.size()) throw std::invalid_argument("block_matrix: column count mismatch");
    for (std::size_t q = 0; q < src_parts.size(); ++q) {
      if (!grid[p][q]) continue;
      const Mor& e = *grid[p][q];
      if (e.src != src_parts[q] || e.dst != dst_parts[p])
        throw std::invalid_argument("block_matrix: entry (" + std::to_string(p) + "," + std::to_string(q) +
                                    ") has wrong shape");
      place(c, e, dmaps[p], smaps[q], lr, r);
    }
  }
  return r;
}

Mor mor_block_diag(const CategoryPresentation& c, const std::vector<Mor>& fs) {
  std::vector<Obj> srcs, dsts;
  for (const auto& f : fs) {
    srcs.push_back(f.src);
    dsts.push_back(f.dst);
  }
  BlockGrid g(fs.size(), std::vector<std::optional<Mor>>(fs.size()));
  for (std::size_t k = 0; k < fs.size(); ++k) g[k][k] = fs[k];
  return block_matrix(c, dsts, srcs, g);
}

Mor mor_direct_sum(const CategoryPresentation& c, const Mor& f, const Mor& g) {
  return mor_block_diag(c, {f, g});
}

Mor basis_mor(const CategoryPresentation& c, const Obj& a, const Obj& b, std::size_t index) {
  Mor m = mor_zero(c, a, b);
  m.v.at(index) = 1;
  return m;
}

std::vector<Mor> hom_space(const CategoryPresentation& c, const Obj& a, const Obj& b) {
  std::vector<Mor> out;
  std::size_t d = hom_total_dim(c, a, b);
  for (std::size_t t = 0; t < d; ++t) out.push_back(basis_mor(c, a, b, t));
  return out;
}

Obj endo_obj(const CategoryPresentation& c, const Obj& a) {
  if (!c.endo) throw std::logic_error("endofunctor action absent");
  Obj r = c.zero_obj();
  for (std::size_t i = 0; i < c.size(); ++i) r.mult[static_cast<std::size_t>(c.endo->sigma[i])] += a.mult[i];
  return r;
}

namespace {

// Slot of a (in slot order) -> slot of endo_obj(a).
std::vector<int> endo_slot_map(const CategoryPresentation& c, const Obj& a) {
  Obj s = endo_obj(c, a);
  const std::size_t n = c.size();
  std::vector<int> start(n, 0), used(n, 0);
  for (std::size_t i = 1; i < n; ++i) start[i] = start[i - 1] + s.mult[i - 1];
  std::vector<int> map;
  for (std::size_t i = 0; i < n; ++i) {
    auto t = static_cast<std::size_t>(c.endo->sigma[i]);
    for (int r = 0; r < a.mult[i]; ++r) map.push_back(start[t] + used[t]++);
  }
  return map;
}

}  // namespace

Mor apply_endofunctor(const CategoryPresentation& c, const Mor& f) {
  if (!c.endo) throw std::logic_error("endofunctor action absent");
  const std::size_t n = c.size();
  Obj sa = endo_obj(c, f.src), sb = endo_obj(c, f.dst);
  Mor r = mor_zero(c, sa, sb);
  HomLayout lf(f.src, f.dst, c.dims(), n), lr(sa, sb, c.dims(), n);
  auto smap = endo_slot_map(c, f.src), dmap = endo_slot_map(c, f.dst);
  for (std::size_t p = 0; p < lf.dst_slots.size(); ++p)
    for (std::size_t q = 0; q < lf.src_slots.size(); ++q) {
      int i = lf.src_slots[q], j = lf.dst_slots[p];
      const Matrix& act = c.endo->action[static_cast<std::size_t>(i) * n + j];
      std::size_t from = lf.at(p, q), to = lr.at(static_cast<std::size_t>(dmap[p]), static_cast<std::size_t>(smap[q]));
      for (std::size_t row = 0; row < act.rows(); ++row) {
        Scalar acc = 0;
        for (std::size_t col = 0; col < act.cols(); ++col) acc += act(row, col) * f.v[from + col];
        r.v[to + row] = acc;
      }
    }
  return r;
}

// f is invertible iff Hom(X_i, f) is bijective for every indecomposable X_i (Yoneda on the
// additive closure). The inverse is read off slot by slot: f^{-1} o incl_s = Hom(X_i, f)^{-1}(incl_s).
std::optional<Mor> is_isomorphism(const CategoryPresentation& c, const Mor& f) {
  const Obj &a = f.src, &b = f.dst;
  const std::size_t N = c.size();
  Mor inv = mor_zero(c, b, a);
  HomLayout linv(b, a, c.dims(), N);
  const std::vector<int> bslots = b.slots();
  for (std::size_t i = 0; i < N; ++i) {
    const Obj xi = c.indec(static_cast<int>(i));
    const std::size_t da = hom_total_dim(c, xi, a), db = hom_total_dim(c, xi, b);
    if (da != db) return std::nullopt;
    if (da == 0) continue;
    Matrix m(db, da);
    for (std::size_t t = 0; t < da; ++t) {
      Mor fe = mor_compose(c, f, basis_mor(c, xi, a, t));
      for (std::size_t r = 0; r < db; ++r) m(r, t) = fe.v[r];
    }
    auto mi = mat_inverse(m);
    if (!mi) return std::nullopt;
    HomLayout lb(xi, b, c.dims(), N), la(xi, a, c.dims(), N);
    const auto& idc = c.id_coords[i];
    for (std::size_t s = 0; s < bslots.size(); ++s) {
      if (bslots[s] != static_cast<int>(i)) continue;
      // preimage of the slot inclusion X_i -> B
      const std::size_t off = lb.at(s, 0);
      std::vector<Scalar> x(da);
      for (std::size_t r = 0; r < da; ++r)
        for (std::size_t t = 0; t < idc.size(); ++t)
          if (!is_zero(idc[t])) x[r] += (*mi)(r, off + t) * idc[t];
      for (std::size_t p = 0; p < la.dst_slots.size(); ++p) {
        const std::size_t from = la.at(p, 0), to = linv.at(p, s);
        for (int t = 0; t < la.block_dim(p, 0); ++t) inv.v[to + static_cast<std::size_t>(t)] = x[from + static_cast<std::size_t>(t)];
      }
    }
  }
  return inv;
}

ValidationReport validate_presentation(const CategoryPresentation& c) {
  ValidationReport rep;
  const int n = static_cast<int>(c.size());
  auto tag = [](std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
      s += (first ? "" : ",") + std::to_string(x);
      first = false;
    }
    return s + ")";
  };
  if (c.id_coords.size() != c.size()) {
    rep.fail("identity table has wrong length");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c.id_coords[i].size()) != c.dim(i, i)) rep.fail("identity of " + tag({i}) + " has wrong length");
    if (c.dim(i, i) == 0) rep.fail("End" + tag({i}) + " is zero; indecomposables must be nonzero");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (const auto& e : c.comp(i, j, k))
          if (e.a < 0 || e.a >= c.dim(i, j) || e.b < 0 || e.b >= c.dim(j, k) || e.c < 0 || e.c >= c.dim(i, k))
            rep.fail("composition entry out of range at (i,j,k,a,b)=" + tag({i, j, k, e.a, e.b}));
  if (!rep.ok) return rep;

  auto unit = [](int d, int a) {
    std::vector<Scalar> v(static_cast<std::size_t>(d));
    v[static_cast<std::size_t>(a)] = 1;
    return v;
  };
  auto comp = [&](int i, int j, int k, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> out(static_cast<std::size_t>(c.dim(i, k)));
    c.compose_acc(i, j, k, x.data(), y.data(), out.data());
    return out;
  };

  // Units.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < c.dim(i, j); ++a) {
        auto e = unit(c.dim(i, j), a);
        if (comp(i, j, j, e, c.id_coords[j]) != e)
          rep.fail("left identity fails at (i,j,k,a,b)=" + tag({i, j, j, a, -1}));
        if (comp(i, i, j, c.id_coords[i], e) != e)
          rep.fail("right identity fails at (i,j,k,a,b)=" + tag({i, i, j, -1, a}));
      }

  // Associativity on all basis triples.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (c.dim(i, j) == 0 || c.dim(j, k) == 0 || c.dim(k, l) == 0) continue;
          for (int a = 0; a < c.dim(i, j); ++a)
            for (int b = 0; b < c.dim(j, k); ++b)
              for (int cc = 0; cc < c.dim(k, l); ++cc) {
                auto x = unit(c.dim(i, j), a), y = unit(c.dim(j, k), b), z = unit(c.dim(k, l), cc);
                if (comp(i, k, l, comp(i, j, k, x, y), z) != comp(i, j, l, x, comp(j, k, l, y, z)))
                  rep.fail("associativity fails at (i,j,k,l,a,b,c)=" + tag({i, j, k, l, a, b, cc}));
              }
        }

  if (c.endo) {
    const auto& en = *c.endo;
    if (static_cast<int>(en.sigma.size()) != n || static_cast<int>(en.action.size()) != n * n) {
      rep.fail("endofunctor tables have wrong size");
      return rep;
    }
    for (int i = 0; i < n; ++i)
      if (en.sigma[i] < 0 || en.sigma[i] >= n) {
        rep.fail("endofunctor object map out of range at " + tag({i}));
        return rep;
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Matrix& m = en.action[static_cast<std::size_t>(i) * n + j];
        if (static_cast<int>(m.rows()) != c.dim(en.sigma[i], en.sigma[j]) || static_cast<int>(m.cols()) != c.dim(i, j)) {
          rep.fail("endofunctor action matrix has wrong shape at " + tag({i, j}));
          return rep;
        }
      }
    auto act = [&](int i, int j, const std::vector<Scalar>& x) {
      const Matrix& m = en.action[static_cast<std::size_t>(i) * n + j];
      std::vector<Scalar> out(m.rows());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t cl = 0; cl < m.cols(); ++cl) out[r] += m(r, cl) * x[cl];
      return out;
    };
    for (int i = 0; i < n; ++i)
      if (act(i, i, c.id_coords[i]) != c.id_coords[en.sigma[i]])
        rep.fail("endofunctor does not preserve identity at " + tag({i}));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int a = 0; a < c.dim(i, j); ++a)
            for (int b = 0; b < c.dim(j, k); ++b) {
              auto x = unit(c.dim(i, j), a), y = unit(c.dim(j, k), b);
              auto lhs = act(i, k, comp(i, j, k, x, y));
              auto rhs = comp(en.sigma[i], en.sigma[j], en.sigma[k], act(i, j, x), act(j, k, y));
              if (lhs != rhs) rep.fail("endofunctor does not respect composition at (i,j,k,a,b)=" + tag({i, j, k, a, b}));
            }
    if (en.automorphism) {
      std::vector<int> seen(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < n; ++i) seen[en.sigma[i]]++;
      for (int i = 0; i < n; ++i)
        if (seen[i] != 1) rep.fail("endofunctor flagged automorphism but object map is not a bijection");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Matrix& m = en.action[static_cast<std::size_t>(i) * n + j];
          if (m.rows() != m.cols() || mat_rank(m) != m.rows())
            rep.fail("endofunctor flagged automorphism but action at " + tag({i, j}) + " is not invertible");
        }
    }
  }
  return rep;
}

std::string obj_to_string(const CategoryPresentation& c, const Obj& a) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (a.mult[i] == 0) continue;
    if (!s.empty()) s += "+";
    s += c.indec_names[i];
    if (a.mult[i] > 1) s += "^" + std::to_string(a.mult[i]);
  }
  return s.empty() ? "0" : s;
}

std::string mor_to_string(const CategoryPresentation& c, const Mor& f) {
  HomLayout l(f.src, f.dst, c.dims(), c.size());
  std::ostringstream os;
  os << "[";
  for (std::size_t p = 0; p < l.dst_slots.size(); ++p) {
    os << (p ? ", [" : "[");
    for (std::size_t q = 0; q < l.src_slots.size(); ++q) {
      if (q) os << ", ";
      int d = l.block_dim(p, q);
      if (d == 0) {
        os << "-";
      } else if (d == 1) {
        os << to_string(f.v[l.at(p, q)]);
      } else {
        os << "(";
        for (int t = 0; t < d; ++t) os << (t ? "," : "") << to_string(f.v[l.at(p, q) + t]);
        os << ")";
      }
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace nang
