#include "nang/view.hpp"

#include <stdexcept>

namespace nang {

const char* sigma_tag_name(SigmaTag t) {
  switch (t) {
    case SigmaTag::Ambient: return "ambient";
    case SigmaTag::QuotientSigma: return "quotient-sigma";
    case SigmaTag::QuotientG: return "quotient-G";
  }
  return "?";
}

std::size_t HomView::hom_dim(const Obj& a, const Obj& b) const {
  std::size_t t = 0;
  const std::size_t n = cat().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t += static_cast<std::size_t>(a.mult[i]) * b.mult[j] * qdim(static_cast<int>(i), static_cast<int>(j));
  return t;
}

std::vector<Scalar> HomView::coords(const Mor& f) const {
  const auto& c = cat();
  HomLayout la(f.src, f.dst, c.dims(), c.size()), lv(f.src, f.dst, view_dims(), c.size());
  std::vector<Scalar> out(lv.total());
  for (std::size_t p = 0; p < la.dst_slots.size(); ++p)
    for (std::size_t q = 0; q < la.src_slots.size(); ++q) {
      if (lv.block_dim(p, q) == 0) continue;
      project_block(la.src_slots[q], la.dst_slots[p], &f.v[la.at(p, q)], &out[lv.at(p, q)]);
    }
  return out;
}

Mor HomView::lift(const Obj& a, const Obj& b, const std::vector<Scalar>& x) const {
  const auto& c = cat();
  HomLayout la(a, b, c.dims(), c.size()), lv(a, b, view_dims(), c.size());
  if (x.size() != lv.total()) throw std::invalid_argument("lift: coordinate length mismatch");
  Mor m = mor_zero(c, a, b);
  for (std::size_t p = 0; p < la.dst_slots.size(); ++p)
    for (std::size_t q = 0; q < la.src_slots.size(); ++q) {
      if (lv.block_dim(p, q) == 0) continue;
      lift_block(la.src_slots[q], la.dst_slots[p], &x[lv.at(p, q)], &m.v[la.at(p, q)]);
    }
  return m;
}

std::vector<Mor> HomView::basis(const Obj& a, const Obj& b) const {
  std::size_t d = hom_dim(a, b);
  std::vector<Mor> out;
  out.reserve(d);
  for (std::size_t t = 0; t < d; ++t) {
    std::vector<Scalar> x(d);
    x[t] = 1;
    out.push_back(lift(a, b, x));
  }
  return out;
}

bool HomView::is_zero(const Mor& f) const {
  for (const auto& x : coords(f))
    if (!nang::is_zero(x)) return false;
  return true;
}

bool HomView::equal(const Mor& f, const Mor& g) const {
  if (f.src != g.src || f.dst != g.dst) return false;
  return coords(f) == coords(g);
}

bool HomView::obj_vanishes(const Obj& a) const {
  for (std::size_t i = 0; i < cat().size(); ++i)
    if (a.mult[i] > 0 && qdim(static_cast<int>(i), static_cast<int>(i)) > 0) return false;
  return true;
}

Obj HomView::signature(const Obj& a) const {
  Obj s = a;
  for (std::size_t i = 0; i < cat().size(); ++i)
    if (qdim(static_cast<int>(i), static_cast<int>(i)) == 0) s.mult[i] = 0;
  return s;
}

std::optional<Mor> HomView::inverse(const Mor& f) const {
  if (tag() == SigmaTag::Ambient) return is_isomorphism(cat(), f);
  LinearSystem sys(*this);
  int g = sys.add_unknown(f.dst, f.src);
  int e1 = sys.add_equation(f.src, f.src), e2 = sys.add_equation(f.dst, f.dst);
  sys.add_term(e1, g, std::nullopt, f);
  sys.add_constant(e1, id(f.src), -1);
  sys.add_term(e2, g, f, std::nullopt);
  sys.add_constant(e2, id(f.dst), -1);
  auto s = sys.solve();
  if (!s) return std::nullopt;
  return sys.value(g, s->particular);
}

Mor HomView::endo_sum_iso(const std::vector<Obj>& parts) const {
  Obj total = obj_sum(parts);
  std::vector<Obj> sparts;
  BlockGrid row(1);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Mor s = endo_mor(injection(cat(), parts, k));
    sparts.push_back(s.src);
    row[0].push_back(s);
  }
  return block_matrix(cat(), {endo_obj(total)}, sparts, row);
}

void AmbientView::project_block(int i, int j, const Scalar* in, Scalar* out) const {
  for (int t = 0; t < cat().dim(i, j); ++t) out[t] = in[t];
}

void AmbientView::lift_block(int i, int j, const Scalar* in, Scalar* out) const {
  for (int t = 0; t < cat().dim(i, j); ++t) out[t] = in[t];
}

int LinearSystem::add_unknown(const Obj& src, const Obj& dst) {
  std::size_t off = num_vars();
  unknowns_.push_back(Unknown{src, dst, off, v_->hom_dim(src, dst)});
  return static_cast<int>(unknowns_.size() - 1);
}

int LinearSystem::add_equation(const Obj& src, const Obj& dst) {
  std::size_t off = equations_.empty() ? 0 : equations_.back().offset + equations_.back().dim;
  equations_.push_back(Equation{src, dst, off, v_->hom_dim(src, dst)});
  return static_cast<int>(equations_.size() - 1);
}

void LinearSystem::add_term(int eq, int unk, const std::optional<Mor>& left, const std::optional<Mor>& right,
                            const Scalar& coef, bool through_endo) {
  const auto& e = equations_.at(static_cast<std::size_t>(eq));
  const auto& u = unknowns_.at(static_cast<std::size_t>(unk));
  Obj inner_src = right ? right->dst : (through_endo ? v_->endo_obj(u.src) : u.src);
  Obj inner_dst = left ? left->src : (through_endo ? v_->endo_obj(u.dst) : u.dst);
  Obj us = through_endo ? v_->endo_obj(u.src) : u.src, ud = through_endo ? v_->endo_obj(u.dst) : u.dst;
  if (inner_src != us || inner_dst != ud) throw std::invalid_argument("add_term: unknown does not fit between factors");
  Obj outer_src = right ? right->src : us, outer_dst = left ? left->dst : ud;
  if (outer_src != e.src || outer_dst != e.dst) throw std::invalid_argument("add_term: term does not land in equation");
  terms_.push_back(Term{eq, unk, left, right, coef, through_endo});
}

void LinearSystem::add_constant(int eq, const Mor& m, const Scalar& coef) {
  const auto& e = equations_.at(static_cast<std::size_t>(eq));
  if (m.src != e.src || m.dst != e.dst) throw std::invalid_argument("add_constant: shape mismatch");
  consts_.push_back(Const{eq, m, coef});
}

std::size_t LinearSystem::num_vars() const {
  return unknowns_.empty() ? 0 : unknowns_.back().offset + unknowns_.back().dim;
}

std::optional<LinearSystem::Solution> LinearSystem::solve() const {
  std::size_t rows = equations_.empty() ? 0 : equations_.back().offset + equations_.back().dim;
  std::size_t cols = num_vars();
  Matrix a(rows, cols), b(rows, 1);
  std::vector<std::vector<Mor>> bases(unknowns_.size());
  for (std::size_t k = 0; k < unknowns_.size(); ++k) bases[k] = v_->basis(unknowns_[k].src, unknowns_[k].dst);
  for (const auto& t : terms_) {
    const auto& e = equations_[static_cast<std::size_t>(t.eq)];
    const auto& u = unknowns_[static_cast<std::size_t>(t.unk)];
    for (std::size_t j = 0; j < u.dim; ++j) {
      Mor m = t.through_endo ? v_->endo_mor(bases[static_cast<std::size_t>(t.unk)][j]) : bases[static_cast<std::size_t>(t.unk)][j];
      if (t.right) m = v_->compose(m, *t.right);
      if (t.left) m = v_->compose(*t.left, m);
      auto x = v_->coords(m);
      for (std::size_t r = 0; r < e.dim; ++r)
        if (!nang::is_zero(x[r])) a(e.offset + r, u.offset + j) += t.coef * x[r];
    }
  }
  for (const auto& cst : consts_) {
    const auto& e = equations_[static_cast<std::size_t>(cst.eq)];
    auto x = v_->coords(cst.m);
    for (std::size_t r = 0; r < e.dim; ++r) b(e.offset + r, 0) -= cst.coef * x[r];
  }
  auto s = mat_solve(a, b);
  if (!s) return std::nullopt;
  return Solution{s->particular.column(0), s->nullspace};
}

Mor LinearSystem::value(int unk, const std::vector<Scalar>& x) const {
  const auto& u = unknowns_.at(static_cast<std::size_t>(unk));
  std::vector<Scalar> c(x.begin() + static_cast<std::ptrdiff_t>(u.offset),
                        x.begin() + static_cast<std::ptrdiff_t>(u.offset + u.dim));
  return v_->lift(u.src, u.dst, c);
}

std::vector<Scalar> LinearSystem::point(const Solution& s, const std::vector<Scalar>& params) {
  std::vector<Scalar> x = s.particular;
  for (std::size_t k = 0; k < params.size() && k < s.nullspace.cols(); ++k) {
    if (nang::is_zero(params[k])) continue;
    for (std::size_t r = 0; r < x.size(); ++r) x[r] += params[k] * s.nullspace(r, k);
  }
  return x;
}

}  // namespace nang
