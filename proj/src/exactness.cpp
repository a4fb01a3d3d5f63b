#include "nang/exactness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "nang/numeric_ops.hpp"

namespace nang {

RightNExact make_right_n_exact(std::vector<Mor> maps) {
  if (maps.size() < 2) throw std::invalid_argument("right n-exact: need at least two maps");
  RightNExact r;
  for (const auto& f : maps) r.objs.push_back(f.src);
  r.objs.push_back(maps.back().dst);
  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    if (maps[k].dst != maps[k + 1].src) throw std::invalid_argument("right n-exact: maps do not chain");
  r.maps = std::move(maps);
  return r;
}

Matrix precomposition_matrix(const CategoryPresentation& c, const Mor& f, int t) {
  Obj tt = c.indec(t);
  std::size_t dsrc = hom_total_dim(c, f.src, tt), ddst = hom_total_dim(c, f.dst, tt);
  Matrix m(dsrc, ddst);
  for (std::size_t j = 0; j < ddst; ++j) {
    Mor e = basis_mor(c, f.dst, tt, j);
    Mor ef = mor_compose(c, e, f);
    for (std::size_t r = 0; r < dsrc; ++r) m(r, j) = ef.v[r];
  }
  return m;
}

Matrix annihilator(const CategoryPresentation& c, const Mor& f, int t) {
  return mat_nullspace(precomposition_matrix(c, f, t));
}

bool is_epimorphism(const CategoryPresentation& c, const Mor& g) {
  for (std::size_t t = 0; t < c.size(); ++t) {
    Matrix m = precomposition_matrix(c, g, static_cast<int>(t));
    if (mat_rank(m) != m.cols()) return false;
  }
  return true;
}

namespace {

Matrix hcat(const Matrix& x, const Matrix& y) {
  Matrix r(x.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j);
    for (std::size_t j = 0; j < y.cols(); ++j) r(i, x.cols() + j) = y(i, j);
  }
  return r;
}

}  // namespace

bool is_weak_cokernel(const CategoryPresentation& c, const Mor& f, const Mor& g) {
  if (f.dst != g.src) throw std::invalid_argument("is_weak_cokernel: object mismatch");
  if (!mor_is_zero(mor_compose(c, g, f))) return false;
  for (std::size_t t = 0; t < c.size(); ++t) {
    Matrix ann = annihilator(c, f, static_cast<int>(t));
    if (ann.cols() == 0) continue;
    Matrix img = precomposition_matrix(c, g, static_cast<int>(t));
    // (img has rows in Hom(src g, T) coordinates, matching ann)
    if (img.rows() != ann.rows()) throw std::logic_error("is_weak_cokernel: shape mismatch");
    if (mat_rank(hcat(img, ann)) != mat_rank(img)) return false;
  }
  return true;
}

bool is_cokernel(const CategoryPresentation& c, const Mor& f, const Mor& g) {
  return is_weak_cokernel(c, f, g) && is_epimorphism(c, g);
}

ExactnessReport certify_right_n_exact(const CategoryPresentation& c, const RightNExact& r) {
  ExactnessReport rep;
  const int n = r.n();
  for (int k = 1; k <= n; ++k) {
    const Mor& prev = r.maps[static_cast<std::size_t>(k - 1)];
    const Mor& cur = r.maps[static_cast<std::size_t>(k)];
    bool ok = (k < n) ? is_weak_cokernel(c, prev, cur) : is_cokernel(c, prev, cur);
    rep.lines.push_back("a_" + std::to_string(k) + (k < n ? " weak cokernel of a_" : " cokernel of a_") +
                        std::to_string(k - 1) + ": " + (ok ? "pass" : "FAIL"));
    rep.ok = rep.ok && ok;
  }
  return rep;
}

Matrix radical_basis(const CategoryPresentation& c, int i) {
  const int d = c.dim(i, i);
  auto unit = [&](int a) {
    std::vector<Scalar> v(static_cast<std::size_t>(d));
    v[static_cast<std::size_t>(a)] = 1;
    return v;
  };
  auto mul = [&](const std::vector<Scalar>& y, const std::vector<Scalar>& z) {  // y o z
    std::vector<Scalar> out(static_cast<std::size_t>(d));
    c.compose_acc(i, i, i, z.data(), y.data(), out.data());
    return out;
  };
  auto trace_left = [&](const std::vector<Scalar>& y) {
    Scalar t = 0;
    for (int z = 0; z < d; ++z) t += mul(y, unit(z))[static_cast<std::size_t>(z)];
    return t;
  };
  // x in rad iff tr(L_{x o b}) = 0 for every basis b.
  Matrix form(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int b = 0; b < d; ++b)
    for (int a = 0; a < d; ++a) form(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = trace_left(mul(unit(a), unit(b)));
  return mat_nullspace(form);
}

RightNExact n_pushout(const CategoryPresentation& c, const RightNExact& r, const RightNExact& s,
                      const std::vector<Mor>& legs) {
  const int n = r.n();
  if (s.n() != n || legs.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("n_pushout: shape mismatch");
  if (r.objs[0] != s.objs[0]) throw std::invalid_argument("n_pushout: rows must share the first object");
  NumericOps o;
  o.cat = &c;
  for (int k = 0; k <= n + 1; ++k) {
    o.oa[k] = r.objs[static_cast<std::size_t>(k)];
    o.ob[k] = s.objs[static_cast<std::size_t>(k)];
  }
  for (int k = 0; k <= n; ++k) {
    o.ma[k] = r.maps[static_cast<std::size_t>(k)];
    o.mb[k] = s.maps[static_cast<std::size_t>(k)];
    o.mf[k + 1] = legs[static_cast<std::size_t>(k)];
  }
  std::vector<Mor> maps;
  for (int k = 0; k <= n; ++k) maps.push_back(materialize(c, cone2_map(o, n, k)));
  return make_right_n_exact(std::move(maps));
}

namespace {

struct Row {
  int indec;
  std::vector<Scalar> coords;  // in Hom(A_k, indec)
};

Mor stack_rows(const CategoryPresentation& c, const Obj& src, std::vector<Row> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.indec < y.indec; });
  std::vector<Obj> dsts;
  BlockGrid grid;
  for (const auto& r : rows) {
    dsts.push_back(c.indec(r.indec));
    grid.push_back({Mor{src, c.indec(r.indec), r.coords}});
  }
  if (rows.empty()) return mor_zero(c, src, c.zero_obj());
  return block_matrix(c, dsts, {src}, grid);
}

std::vector<int> allowed_indecs(const CategoryPresentation& c, const CokernelSearch& opts, bool constrained) {
  std::vector<int> out;
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (constrained && opts.constraint &&
        std::find(opts.constraint->begin(), opts.constraint->end(), static_cast<int>(t)) == opts.constraint->end())
      continue;
    out.push_back(static_cast<int>(t));
  }
  return out;
}

std::size_t rank_of_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return mat_rank(m);
}

// Annihilator functor generators modulo the radical: one row per top element.
std::vector<Row> minimal_rows(const CategoryPresentation& c, const Mor& f, const std::vector<int>& allowed) {
  std::vector<Row> rows;
  std::map<int, Matrix> ann;
  for (int t : allowed) ann[t] = annihilator(c, f, t);
  const Obj& b = f.dst;
  for (int t : allowed) {
    const Matrix& w = ann[t];
    std::size_t dim = hom_total_dim(c, b, c.indec(t));
    std::vector<std::vector<Scalar>> span;
    for (int u : allowed) {
      const Matrix& wu = ann[u];
      std::vector<Mor> rs;
      if (u == t) {
        Matrix rad = radical_basis(c, t);
        for (std::size_t k = 0; k < rad.cols(); ++k) rs.push_back(Mor{c.indec(t), c.indec(t), rad.column(k)});
      } else {
        rs = hom_space(c, c.indec(u), c.indec(t));
      }
      for (std::size_t j = 0; j < wu.cols(); ++j) {
        Mor h{b, c.indec(u), wu.column(j)};
        for (const auto& r : rs) span.push_back(mor_compose(c, r, h).v);
      }
    }
    std::size_t base = rank_of_columns(span, dim);
    for (std::size_t j = 0; j < w.cols(); ++j) {
      auto cand = span;
      cand.push_back(w.column(j));
      std::size_t rk = rank_of_columns(cand, dim);
      if (rk > base) {
        span = std::move(cand);
        base = rk;
        rows.push_back(Row{t, w.column(j)});
      }
    }
  }
  return rows;
}

bool step_ok(const CategoryPresentation& c, const Mor& prev, const Mor& cand, bool last) {
  return last ? is_cokernel(c, prev, cand) : is_weak_cokernel(c, prev, cand);
}

std::optional<Mor> next_map(const CategoryPresentation& c, const Mor& prev, bool last, bool constrained,
                            const CokernelSearch& opts, std::mt19937_64& rng) {
  auto allowed = allowed_indecs(c, opts, constrained);
  const Obj& b = prev.dst;
  // Canonical annihilator stack.
  std::vector<Row> rows;
  std::map<int, Matrix> ann;
  for (int t : allowed) {
    ann[t] = annihilator(c, prev, t);
    for (std::size_t j = 0; j < ann[t].cols(); ++j) rows.push_back(Row{t, ann[t].column(j)});
  }
  Mor cand = stack_rows(c, b, rows);
  if (step_ok(c, prev, cand, last)) return cand;
  // Generators of the annihilator modulo its radical.
  cand = stack_rows(c, b, minimal_rows(c, prev, allowed));
  if (step_ok(c, prev, cand, last)) return cand;
  // Bounded search over target multiplicities.
  std::vector<int> useful;
  for (int t : allowed)
    if (ann[t].cols() > 0) useful.push_back(t);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<int> mult(useful.size(), 0);
  std::vector<std::vector<int>> vectors;
  std::function<void(std::size_t)> gen = [&](std::size_t k) {
    if (k == useful.size()) {
      vectors.push_back(mult);
      return;
    }
    for (int m = 0; m <= opts.bound; ++m) {
      mult[k] = m;
      gen(k + 1);
    }
  };
  gen(0);
  std::stable_sort(vectors.begin(), vectors.end(), [](const auto& x, const auto& y) {
    int sx = 0, sy = 0;
    for (int v : x) sx += v;
    for (int v : y) sy += v;
    return sx < sy;
  });
  for (const auto& mv : vectors) {
    for (int s = 0; s < opts.samples; ++s) {
      std::vector<Row> rs;
      for (std::size_t k = 0; k < useful.size(); ++k) {
        const Matrix& w = ann[useful[k]];
        for (int r = 0; r < mv[k]; ++r) {
          std::vector<Scalar> v(w.rows());
          for (std::size_t j = 0; j < w.cols(); ++j) {
            int coef = dist(rng);
            if (coef == 0) continue;
            for (std::size_t i = 0; i < w.rows(); ++i) v[i] += coef * w(i, j);
          }
          rs.push_back(Row{useful[k], v});
        }
      }
      Mor m = stack_rows(c, b, rs);
      if (step_ok(c, prev, m, last)) return m;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<RightNExact> find_n_cokernel(const CategoryPresentation& c, const Mor& a0, int n,
                                           const CokernelSearch& opts) {
  if (n < 1) throw std::invalid_argument("find_n_cokernel: n must be positive");
  std::mt19937_64 rng(opts.seed);
  std::vector<Mor> maps{a0};
  for (int k = 1; k <= n; ++k) {
    bool last = (k == n);
    bool constrained = opts.constraint.has_value() && k + 1 >= 2 && k + 1 <= n;
    auto m = next_map(c, maps.back(), last, constrained, opts, rng);
    if (!m) return std::nullopt;
    maps.push_back(*m);
  }
  RightNExact r = make_right_n_exact(std::move(maps));
  if (!certify_right_n_exact(c, r).ok) return std::nullopt;
  return r;
}

}  // namespace nang
