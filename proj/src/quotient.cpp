#include "nang/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace nang {

bool SubcategorySpec::contains(int i) const { return std::find(members.begin(), members.end(), i) != members.end(); }

bool SubcategorySpec::contains_obj(const Obj& a) const {
  for (std::size_t i = 0; i < a.mult.size(); ++i)
    if (a.mult[i] > 0 && !contains(static_cast<int>(i))) return false;
  return true;
}

const char* quotient_mode_name(QuotientMode m) { return m == QuotientMode::Additive ? "additive" : "angulated"; }

QuotientContext::QuotientContext(const CategoryPresentation& c, SubcategorySpec x, QuotientMode mode, int n,
                                 const StrongWitnessSource* source, CokernelSearch search)
    : HomView(c), ambient_(c), x_(std::move(x)), mode_(mode), n_(n), source_(source), search_(std::move(search)) {
  if (n < 1) throw std::invalid_argument("quotient: n must be positive");
  const int N = static_cast<int>(c.size());
  for (int t : x_.members)
    if (t < 0 || t >= N) throw std::invalid_argument("quotient: subcategory member out of range");
  if (mode_ == QuotientMode::Angulated && (!c.endo || !source_))
    throw std::invalid_argument("quotient: angulated mode needs an ambient endofunctor and a witness source");
  search_.constraint = x_.members;
  ideal_.resize(static_cast<std::size_t>(N * N));
  qdims_.assign(static_cast<std::size_t>(N * N), 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const int d = c.dim(i, j);
      // Spanning set: v o u through every member indecomposable.
      std::vector<std::vector<Scalar>> gens;
      for (int t : x_.members) {
        const int du = c.dim(i, t), dv = c.dim(t, j);
        for (int a = 0; a < du; ++a)
          for (int b = 0; b < dv; ++b) {
            std::vector<Scalar> u(static_cast<std::size_t>(du)), v(static_cast<std::size_t>(dv)),
                out(static_cast<std::size_t>(d));
            u[static_cast<std::size_t>(a)] = 1;
            v[static_cast<std::size_t>(b)] = 1;
            c.compose_acc(i, t, j, u.data(), v.data(), out.data());
            gens.push_back(std::move(out));
          }
      }
      Block& blk = ideal_[key(i, j)];
      Matrix g(gens.size(), static_cast<std::size_t>(d));
      for (std::size_t r = 0; r < gens.size(); ++r)
        for (int k = 0; k < d; ++k) g(r, static_cast<std::size_t>(k)) = gens[r][static_cast<std::size_t>(k)];
      auto e = mat_rref(g);
      blk.pivots = e.pivots;
      blk.rref = Matrix(e.pivots.size(), static_cast<std::size_t>(d));
      blk.basis = Matrix(static_cast<std::size_t>(d), e.pivots.size());
      for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (int k = 0; k < d; ++k) {
          blk.rref(r, static_cast<std::size_t>(k)) = e.r(r, static_cast<std::size_t>(k));
          blk.basis(static_cast<std::size_t>(k), r) = e.r(r, static_cast<std::size_t>(k));
        }
      for (std::size_t k = 0; k < static_cast<std::size_t>(d); ++k)
        if (std::find(blk.pivots.begin(), blk.pivots.end(), k) == blk.pivots.end()) blk.free.push_back(k);
      qdims_[key(i, j)] = static_cast<int>(blk.free.size());
    }
  witness_.resize(static_cast<std::size_t>(N));
  witness_err_.resize(static_cast<std::size_t>(N));
  witness_done_.assign(static_cast<std::size_t>(N), false);
  action_.resize(static_cast<std::size_t>(N * N));
}

void QuotientContext::project_block(int i, int j, const Scalar* in, Scalar* out) const {
  const Block& blk = ideal_[key(i, j)];
  const int d = cat().dim(i, j);
  std::vector<Scalar> x(in, in + d);
  for (std::size_t r = 0; r < blk.pivots.size(); ++r) {
    Scalar s = x[blk.pivots[r]];
    if (nang::is_zero(s)) continue;
    for (int k = 0; k < d; ++k) x[static_cast<std::size_t>(k)] -= s * blk.rref(r, static_cast<std::size_t>(k));
  }
  for (std::size_t t = 0; t < blk.free.size(); ++t) out[t] = x[blk.free[t]];
}

void QuotientContext::lift_block(int i, int j, const Scalar* in, Scalar* out) const {
  const Block& blk = ideal_[key(i, j)];
  for (int k = 0; k < cat().dim(i, j); ++k) out[k] = 0;
  for (std::size_t t = 0; t < blk.free.size(); ++t) out[blk.free[t]] = in[t];
}

Matrix QuotientContext::ideal_subspace(const Obj& a, const Obj& b) const {
  const auto& c = cat();
  HomLayout l(a, b, c.dims(), c.size());
  std::size_t cols = 0;
  for (std::size_t p = 0; p < l.dst_slots.size(); ++p)
    for (std::size_t q = 0; q < l.src_slots.size(); ++q) cols += ideal_[key(l.src_slots[q], l.dst_slots[p])].basis.cols();
  Matrix m(l.total(), cols);
  std::size_t col = 0;
  for (std::size_t p = 0; p < l.dst_slots.size(); ++p)
    for (std::size_t q = 0; q < l.src_slots.size(); ++q) {
      const Matrix& bb = ideal_[key(l.src_slots[q], l.dst_slots[p])].basis;
      for (std::size_t k = 0; k < bb.cols(); ++k, ++col)
        for (std::size_t r = 0; r < bb.rows(); ++r) m(l.at(p, q) + r, col) = bb(r, k);
    }
  return m;
}

bool QuotientContext::is_X_monic(const Mor& f) const {
  for (int t : x_.members) {
    Matrix m = precomposition_matrix(cat(), f, t);
    if (mat_rank(m) != m.rows()) return false;
  }
  return true;
}

Mor QuotientContext::canonical_left_approximation(const Obj& a) const {
  const auto& c = cat();
  std::vector<Obj> dsts;
  BlockGrid grid;
  std::vector<int> members = x_.members;
  std::sort(members.begin(), members.end());
  for (int t : members) {
    Obj tt = c.indec(t);
    for (const auto& h : hom_space(c, a, tt)) {
      dsts.push_back(tt);
      grid.push_back({h});
    }
  }
  if (dsts.empty()) return mor_zero(c, a, c.zero_obj());
  return block_matrix(c, dsts, {a}, grid);
}

void QuotientContext::build_witness(int i) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const auto ui = static_cast<std::size_t>(i);
  if (witness_done_[ui]) return;
  witness_done_[ui] = true;
  const auto& c = cat();
  Obj a = c.indec(i);
  if (mode_ == QuotientMode::Additive) {
    Mor a0 = canonical_left_approximation(a);
    auto r = find_n_cokernel(c, a0, n_, search_);
    if (!r) {
      witness_err_[ui] = "existence undecided at bound: no special " + std::to_string(n_) + "-cokernel found for " +
                         c.indec_names[ui] + " (multiplicity bound " + std::to_string(search_.bound) + ")";
      return;
    }
    witness_[ui] = EndoWitness{a, r->objs.back(), r->maps};
    return;
  }
  auto s = source_->strong_witness(*this, i);
  if (!s) {
    witness_err_[ui] = "strong covariant finiteness witness missing for " + c.indec_names[ui];
    return;
  }
  bool ok = s->n == n_ && s->objs.front() == a && is_X_monic(s->maps.front());
  for (int k = 1; ok && k <= n_; ++k) ok = x_.contains_obj(s->objs[static_cast<std::size_t>(k)]);
  if (!ok) {
    witness_err_[ui] = "witness angle for " + c.indec_names[ui] + " does not have the required shape";
    return;
  }
  witness_[ui] = EndoWitness{a, s->objs[static_cast<std::size_t>(n_) + 1], s->maps};
}

std::optional<std::string> QuotientContext::witness_error(int indec) const {
  build_witness(indec);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return witness_err_[static_cast<std::size_t>(indec)];
}

const EndoWitness& QuotientContext::indec_witness(int indec) const {
  build_witness(indec);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const auto& w = witness_[static_cast<std::size_t>(indec)];
  if (!w) throw EndofunctorUndefined(*witness_err_[static_cast<std::size_t>(indec)]);
  return *w;
}

EndoWitness QuotientContext::object_witness(const Obj& a) const {
  const auto& c = cat();
  std::vector<const EndoWitness*> parts;
  for (int i : a.slots()) parts.push_back(&indec_witness(i));
  EndoWitness w{a, endo_obj(a), {}};
  if (parts.empty()) {
    Obj z = c.zero_obj();
    const int len = mode_ == QuotientMode::Additive ? n_ + 1 : n_ + 2;
    for (int k = 0; k < len; ++k) w.maps.push_back(mor_zero(c, z, z));
    return w;
  }
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n_); ++k) {
    std::vector<Mor> fs;
    for (const auto* p : parts) fs.push_back(p->maps[k]);
    w.maps.push_back(mor_block_diag(c, fs));
  }
  if (mode_ == QuotientMode::Angulated) {
    std::vector<Mor> lasts;
    std::vector<Obj> a0s;
    for (const auto* p : parts) {
      lasts.push_back(p->maps.back());
      a0s.push_back(p->source);
    }
    w.maps.push_back(mor_compose(c, ambient_.endo_sum_iso(a0s), mor_block_diag(c, lasts)));
  }
  return w;
}

std::vector<Mor> QuotientContext::solve_witness_ladder(const EndoWitness& s, const EndoWitness& t, const Mor& f) const {
  const auto& c = cat();
  LinearSystem sys(ambient_);
  const std::size_t m = static_cast<std::size_t>(n_) + 1;  // objects 0..n+1
  std::vector<int> unk(m + 1, -1);
  for (std::size_t k = 1; k <= m; ++k) unk[k] = sys.add_unknown(s.maps[k - 1].dst, t.maps[k - 1].dst);
  for (std::size_t k = 0; k < m; ++k) {
    int e = sys.add_equation(s.maps[k].src, t.maps[k].dst);
    sys.add_term(e, unk[k + 1], std::nullopt, s.maps[k]);
    if (k == 0) sys.add_constant(e, mor_compose(c, t.maps[0], f), -1);
    else sys.add_term(e, unk[k], t.maps[k], std::nullopt, -1);
  }
  if (mode_ == QuotientMode::Angulated) {
    const Mor& sl = s.maps.back();
    const Mor& tl = t.maps.back();
    int e = sys.add_equation(sl.src, tl.dst);
    sys.add_constant(e, mor_compose(c, apply_endofunctor(c, f), sl));
    sys.add_term(e, unk[m], tl, std::nullopt, -1);
  }
  auto sol = sys.solve();
  if (!sol)
    throw std::logic_error("endofunctor comparison ladder is unsolvable; the presentation is inconsistent");
  std::vector<Mor> legs{f};
  for (std::size_t k = 1; k <= m; ++k) legs.push_back(sys.value(unk[k], sol->particular));
  return legs;
}

Mor QuotientContext::sigma_on_morphism_direct(const Mor& f) const {
  EndoWitness s = object_witness(f.src), t = object_witness(f.dst);
  auto legs = solve_witness_ladder(s, t, f);
  return normalize(legs.back());
}

void QuotientContext::build_action(int i, int j) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto& slot = action_[key(i, j)];
  if (slot) return;
  const auto& c = cat();
  const EndoWitness& s = indec_witness(i);
  const EndoWitness& t = indec_witness(j);
  const int d = qdim(i, j);
  Matrix m(hom_dim(s.image, t.image), static_cast<std::size_t>(d));
  for (int b = 0; b < d; ++b) {
    std::vector<Scalar> x(static_cast<std::size_t>(d));
    x[static_cast<std::size_t>(b)] = 1;
    Mor f = lift(c.indec(i), c.indec(j), x);
    auto legs = solve_witness_ladder(s, t, f);
    m.set_column(static_cast<std::size_t>(b), coords(legs.back()));
  }
  slot = std::move(m);
}

const Matrix& QuotientContext::endo_block_action(int i, int j) const {
  build_action(i, j);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return *action_[key(i, j)];
}

Obj QuotientContext::endo_obj(const Obj& a) const {
  Obj r = cat().zero_obj();
  for (std::size_t i = 0; i < cat().size(); ++i) {
    if (a.mult[i] == 0) continue;
    const Obj& img = indec_witness(static_cast<int>(i)).image;
    for (std::size_t k = 0; k < r.mult.size(); ++k) r.mult[k] += a.mult[i] * img.mult[k];
  }
  return r;
}

Mor QuotientContext::endo_mor(const Mor& f) const {
  const auto& c = cat();
  HomLayout l(f.src, f.dst, c.dims(), c.size());
  std::vector<Obj> srcs, dsts;
  for (int i : l.src_slots) srcs.push_back(indec_witness(i).image);
  for (int j : l.dst_slots) dsts.push_back(indec_witness(j).image);
  BlockGrid grid(dsts.size(), std::vector<std::optional<Mor>>(srcs.size()));
  for (std::size_t p = 0; p < dsts.size(); ++p)
    for (std::size_t q = 0; q < srcs.size(); ++q) {
      const int i = l.src_slots[q], j = l.dst_slots[p];
      const int d = qdim(i, j);
      if (d == 0) continue;
      std::vector<Scalar> x(static_cast<std::size_t>(d));
      project_block(i, j, &f.v[l.at(p, q)], x.data());
      const Matrix& act = endo_block_action(i, j);
      std::vector<Scalar> y(act.rows());
      bool nz = false;
      for (std::size_t r = 0; r < act.rows(); ++r)
        for (std::size_t k = 0; k < act.cols(); ++k)
          if (!nang::is_zero(x[k]) && !nang::is_zero(act(r, k))) {
            y[r] += act(r, k) * x[k];
            nz = true;
          }
      if (nz) grid[p][q] = lift(srcs[q], dsts[p], y);
    }
  if (srcs.empty() || dsts.empty()) return mor_zero(c, endo_obj(f.src), endo_obj(f.dst));
  return block_matrix(c, dsts, srcs, grid);
}

void QuotientContext::seal() {
  const int N = static_cast<int>(cat().size());
  for (int i = 0; i < N; ++i) build_witness(i);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (!witness_error(i) && !witness_error(j)) build_action(i, j);
}

}  // namespace nang
