#include "nang/angles.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nang {

const char* theta_mode_name(ThetaMode m) {
  switch (m) {
    case ThetaMode::QuotientAdditive: return "quotient-additive";
    case ThetaMode::QuotientAngulated: return "quotient-angulated";
    case ThetaMode::Explicit: return "explicit";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Member: return "MEMBER";
    case Verdict::NotFound: return "NOT_FOUND";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

namespace {

std::string seq_key(const NSequence& s) {
  std::ostringstream os;
  for (const auto& o : s.objs)
    for (int m : o.mult) os << m << ",";
  os << "|";
  for (const auto& f : s.maps) {
    for (const auto& x : f.v) os << x << ",";
    os << ";";
  }
  return os.str();
}

bool leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void sub(std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}

void add(std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

bool all_zero(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

}  // namespace

ExplicitPhi::ExplicitPhi(const CategoryPresentation& c, int n, std::vector<NSequence> generators, EmbedOptions opts)
    : view_(c), n_(n), generators_(std::move(generators)), opts_(opts) {
  if (!c.endo || !c.endo->automorphism) throw std::invalid_argument("explicit class needs an ambient automorphism");
  for (const auto& g : generators_) {
    check_sequence(view_, g);
    if (g.n != n_) throw std::invalid_argument("explicit class: generator has the wrong n");
    if (!is_complex(view_, g)) throw std::invalid_argument("explicit class: generator is not a complex");
  }
  std::vector<NSequence> queue = generators_;
  for (std::size_t i = 0; i < c.size(); ++i) queue.push_back(unit_angle(view_, c.indec(static_cast<int>(i)), n_));
  std::set<std::string> seen;
  const std::size_t cap = 512;
  for (std::size_t h = 0; h < queue.size() && catalogue_.size() < cap; ++h) {
    if (!seen.insert(seq_key(queue[h])).second) continue;
    catalogue_.push_back(queue[h]);
    queue.push_back(left_rotation(view_, queue[h]));
  }
  std::set<std::string> first_maps;
  for (std::size_t k = 0; k < catalogue_.size(); ++k) {
    const auto& s = catalogue_[k];
    if (s.objs[0].is_zero() && s.objs[1].is_zero()) continue;
    std::ostringstream key;
    for (int m : s.objs[0].mult) key << m << ",";
    key << "|";
    for (int m : s.objs[1].mult) key << m << ",";
    key << "|";
    for (const auto& x : s.maps[0].v) key << x << ",";
    if (!first_maps.insert(key.str()).second) continue;
    pieces_.push_back(Piece{k, rank_invariants(s.maps[0])});
  }
}

std::vector<int> ExplicitPhi::rank_invariants(const Mor& f) const {
  const auto& c = view_.cat();
  std::vector<int> inv;
  for (std::size_t t = 0; t < c.size(); ++t) {
    Obj tt = c.indec(static_cast<int>(t));
    auto basis = hom_space(c, tt, f.src);
    Matrix m(hom_total_dim(c, tt, f.dst), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) m.set_column(j, mor_compose(c, f, basis[j]).v);
    inv.push_back(static_cast<int>(mat_rank(m)));
    inv.push_back(static_cast<int>(mat_rank(precomposition_matrix(c, f, static_cast<int>(t)))));
  }
  return inv;
}

ExplicitPhi::EmbedResult ExplicitPhi::embed(const Mor& a0, const std::function<bool(const NSequence&)>& accept) const {
  const auto& c = view_.cat();
  EmbedResult out;
  std::vector<int> rsrc = a0.src.mult, rdst = a0.dst.mult, rinv = rank_invariants(a0);
  std::vector<std::size_t> chosen;
  int tested = 0;
  bool budget_hit = false;

  auto test = [&]() -> std::optional<NSequence> {
    ++tested;
    NSequence g;
    if (chosen.empty()) {
      g = trivial_sequence(view_, c.zero_obj(), n_);
    } else {
      std::vector<NSequence> parts;
      for (std::size_t p : chosen) parts.push_back(catalogue_[pieces_[p].angle]);
      g = parts.size() == 1 ? parts.front() : seq_direct_sum(view_, parts);
    }
    LinearSystem sys(view_);
    int u = sys.add_unknown(a0.src, g.objs[0]);
    int v = sys.add_unknown(a0.dst, g.objs[1]);
    int e = sys.add_equation(a0.src, g.objs[1]);
    sys.add_term(e, v, std::nullopt, a0);
    sys.add_term(e, u, g.maps[0], std::nullopt, -1);
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    std::mt19937_64 rng(opts_.iso.seed);
    std::uniform_int_distribution<int> dist(-opts_.iso.range, opts_.iso.range);
    for (int attempt = 0; attempt < opts_.iso.budget; ++attempt) {
      std::vector<Scalar> params(sol->nullspace.cols());
      if (attempt > 0)
        for (auto& p : params) p = dist(rng);
      auto x = LinearSystem::point(*sol, params);
      Mor um = sys.value(u, x), vm = sys.value(v, x);
      auto ui = is_isomorphism(c, um), vi = is_isomorphism(c, vm);
      if (ui && vi) {
        // transport along (u^-1, v^-1, 1, ...) written out; the inverses are already known
        std::vector<Mor> maps = g.maps;
        maps[0] = mor_compose(c, *vi, mor_compose(c, g.maps[0], um));
        maps[1] = mor_compose(c, g.maps[1], vm);
        maps.back() = mor_compose(c, view_.endo_mor(*ui), g.maps.back());
        NSequence t = make_sequence(view_, std::move(maps));
        if (!mor_equal(t.maps[0], a0)) throw std::logic_error("embed: transported first map differs");
        if (!accept || accept(t)) return t;
        return std::nullopt;
      }
      if (sol->nullspace.cols() == 0) break;
    }
    return std::nullopt;
  };

  // Zero-map summands A -> 0 and 0 -> B are filled from one-sided pieces once the
  // two-sided choice has used up all rank; only two-sided pieces count toward the bound.
  const std::size_t N = c.size();
  std::vector<std::optional<std::size_t>> src_only(N), dst_only(N);
  std::vector<std::size_t> two_sided;
  for (std::size_t p = 0; p < pieces_.size(); ++p) {
    const auto& s = catalogue_[pieces_[p].angle];
    const auto& a = s.objs[0];
    const auto& b = s.objs[1];
    if (b.is_zero() && a.total() == 1) {
      auto& slot = src_only[static_cast<std::size_t>(a.slots()[0])];
      if (!slot) slot = p;
    } else if (a.is_zero() && b.total() == 1) {
      auto& slot = dst_only[static_cast<std::size_t>(b.slots()[0])];
      if (!slot) slot = p;
    } else if (!all_zero(pieces_[p].invariants)) {
      two_sided.push_back(p);
    }
  }
  auto fill_and_test = [&]() -> bool {
    const std::size_t mark = chosen.size();
    bool ok = true;
    for (std::size_t i = 0; i < N && ok; ++i) {
      if (rsrc[i] > 0 && !src_only[i]) ok = false;
      if (rdst[i] > 0 && !dst_only[i]) ok = false;
      for (int m = 0; ok && m < rsrc[i]; ++m) chosen.push_back(*src_only[i]);
      for (int m = 0; ok && m < rdst[i]; ++m) chosen.push_back(*dst_only[i]);
    }
    if (ok) {
      if (tested >= opts_.budget) {
        budget_hit = true;
        ok = false;
      } else {
        out.angle = test();
        ok = out.angle.has_value();
      }
    }
    chosen.resize(mark);
    return ok;
  };

  std::function<bool(std::size_t, int)> dfs = [&](std::size_t start, int depth) -> bool {
    if (all_zero(rinv)) return fill_and_test();
    if (depth >= opts_.bound) {
      budget_hit = true;
      return false;
    }
    for (std::size_t q = start; q < two_sided.size(); ++q) {
      const std::size_t p = two_sided[q];
      const auto& s = catalogue_[pieces_[p].angle];
      if (!leq(s.objs[0].mult, rsrc) || !leq(s.objs[1].mult, rdst) || !leq(pieces_[p].invariants, rinv)) continue;
      sub(rsrc, s.objs[0].mult);
      sub(rdst, s.objs[1].mult);
      sub(rinv, pieces_[p].invariants);
      chosen.push_back(p);
      bool found = dfs(q, depth + 1);
      chosen.pop_back();
      add(rsrc, s.objs[0].mult);
      add(rdst, s.objs[1].mult);
      add(rinv, pieces_[p].invariants);
      if (found) return true;
      if (budget_hit && tested >= opts_.budget) return false;
    }
    return false;
  };
  dfs(0, 0);
  out.exhausted = !out.angle && !budget_hit;
  return out;
}

std::optional<NSequence> ExplicitPhi::strong_witness(const QuotientContext& q, int indec) const {
  Mor l = q.canonical_left_approximation(q.cat().indec(indec));
  auto r = embed(l, [&](const NSequence& s) {
    for (int k = 1; k <= n_; ++k)
      if (!q.x().contains_obj(s.objs[static_cast<std::size_t>(k)])) return false;
    return true;
  });
  return r.angle;
}

ThetaOracle::ThetaOracle(const QuotientContext& q, const ExplicitPhi* phi)
    : mode_(q.mode() == QuotientMode::Additive ? ThetaMode::QuotientAdditive : ThetaMode::QuotientAngulated),
      n_(q.n()),
      q_(&q),
      phi_(phi) {
  if (mode_ == ThetaMode::QuotientAngulated && !phi_)
    throw std::invalid_argument("theta oracle: angulated quotient needs the ambient explicit class");
}

ThetaOracle::ThetaOracle(const ExplicitPhi& phi) : mode_(ThetaMode::Explicit), n_(phi.n()), phi_(&phi) {}

const HomView& ThetaOracle::view() const {
  if (q_) return *q_;
  return phi_->view();
}

std::vector<Mor> standard_row(const ThetaOracle& o, const Mor& a0) {
  if (o.mode() == ThetaMode::Explicit) {
    auto r = o.phi()->embed(a0);
    if (!r.angle) throw ConstructionUndecided("no member angle found on the given first map within the search bound");
    return r.angle->maps;
  }
  const QuotientContext& q = *o.quotient();
  const auto& c = q.cat();
  Mor l = q.canonical_left_approximation(a0.src);
  Mor stab = block_matrix(c, {a0.dst, l.dst}, {a0.src}, BlockGrid{{a0}, {l}});
  if (o.mode() == ThetaMode::QuotientAdditive) {
    CokernelSearch opts = q.search_options();
    opts.constraint.reset();
    auto r = find_n_cokernel(c, stab, o.n(), opts);
    if (!r) throw ConstructionUndecided("n-cokernel undecided at bound");
    return r->maps;
  }
  auto r = o.phi()->embed(stab);
  if (!r.angle) throw ConstructionUndecided("ambient angle on the stabilized map not found within the search bound");
  return r.angle->maps;
}

InducedAngle angle_from_row(const ThetaOracle& o, const std::vector<Mor>& row) {
  if (o.mode() == ThetaMode::Explicit) throw std::logic_error("angle_from_row: quotient modes only");
  const QuotientContext& q = *o.quotient();
  const int n = o.n();
  const std::size_t want = o.mode() == ThetaMode::QuotientAdditive ? static_cast<std::size_t>(n) + 1
                                                                   : static_cast<std::size_t>(n) + 2;
  if (row.size() != want) throw std::invalid_argument("angle_from_row: row has the wrong length");
  const Obj& a0 = row.front().src;
  EndoWitness s{a0, row[static_cast<std::size_t>(n)].dst, row};
  EndoWitness w = q.object_witness(a0);
  auto legs = q.solve_witness_ladder(s, w, mor_identity(q.cat(), a0));
  std::vector<Mor> maps;
  for (int k = 0; k <= n; ++k) maps.push_back(q.normalize(row[static_cast<std::size_t>(k)]));
  Mor last = q.normalize(legs.back());
  maps.push_back(n % 2 == 0 ? last : mor_neg(last));
  return InducedAngle{make_sequence(q, std::move(maps)), legs.back()};
}

NSequence standard_angle(const ThetaOracle& o, const Mor& a0) {
  auto row = standard_row(o, a0);
  if (o.mode() == ThetaMode::Explicit) return make_sequence(o.view(), row);
  return angle_from_row(o, row).angle;
}

NSequence embed_morphism(const ThetaOracle& o, const Mor& a0) {
  if (o.mode() == ThetaMode::Explicit) return standard_angle(o, a0);
  const QuotientContext& q = *o.quotient();
  const auto& c = q.cat();
  NSequence s = standard_angle(o, a0);
  // s.objs[1] = A1 + L; project onto the A1 summand, which is a quotient isomorphism.
  Obj lpart = s.objs[1];
  for (std::size_t i = 0; i < lpart.mult.size(); ++i) lpart.mult[i] -= a0.dst.mult[i];
  std::vector<Mor> phis{mor_identity(c, a0.src), projection(c, {a0.dst, lpart}, 0)};
  for (std::size_t k = 2; k < s.objs.size(); ++k) phis.push_back(mor_identity(c, s.objs[k]));
  NSequence t = transport(q, s, phis);
  t.maps[0] = a0;
  return t;
}

NSequence pad_sequence(const HomView& v, const Obj& w, int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("pad_sequence: position out of range");
  const auto& c = v.cat();
  Obj z = c.zero_obj();
  std::vector<Obj> objs(static_cast<std::size_t>(n) + 2, z);
  objs[static_cast<std::size_t>(k)] = w;
  objs[static_cast<std::size_t>(k) + 1] = w;
  Obj target = v.endo_obj(objs[0]);
  std::vector<Mor> maps;
  for (int j = 0; j <= n; ++j)
    maps.push_back(j == k ? mor_identity(c, w) : mor_zero(c, objs[static_cast<std::size_t>(j)], objs[static_cast<std::size_t>(j) + 1]));
  maps.push_back(mor_zero(c, objs.back(), target));
  NSequence s = make_sequence(v, std::move(maps));
  return s;
}

Membership theta_contains(const ThetaOracle& o, const NSequence& s) {
  const HomView& v = o.view();
  Membership m;
  if (s.n != o.n() || s.tag != v.tag()) {
    m.verdict = Verdict::NotFound;
    m.detail = "sequence has the wrong length or endofunctor tag";
    return m;
  }
  if (!is_complex(v, s)) {
    m.verdict = Verdict::NotFound;
    m.detail = "not a complex";
    return m;
  }
  NSequence e;
  try {
    e = embed_morphism(o, s.maps.front());
  } catch (const ConstructionUndecided& ex) {
    m.verdict = Verdict::Undecided;
    m.detail = ex.what();
    return m;
  } catch (const EndofunctorUndefined& ex) {
    m.verdict = Verdict::Undecided;
    m.detail = ex.what();
    return m;
  }
  const int n = o.n();
  const std::size_t N = v.cat().size();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n) + 2, std::vector<int>(N));
  for (std::size_t k = 0; k < d.size(); ++k) {
    Obj a = v.signature(s.objs[k]), b = v.signature(e.objs[k]);
    for (std::size_t i = 0; i < N; ++i) d[k][i] = a.mult[i] - b.mult[i];
  }
  // Pads W_k at positions (k, k+1), 2 <= k <= n.
  std::vector<std::vector<int>> w(static_cast<std::size_t>(n) + 1, std::vector<int>(N, 0));
  bool ok = all_zero(d[0]) && all_zero(d[1]);
  for (int k = 2; k <= n; ++k)
    for (std::size_t i = 0; i < N; ++i) w[static_cast<std::size_t>(k)][i] = d[static_cast<std::size_t>(k)][i] - w[static_cast<std::size_t>(k) - 1][i];
  if (ok) ok = (d[static_cast<std::size_t>(n) + 1] == w[static_cast<std::size_t>(n)]);
  if (!ok) {
    m.verdict = Verdict::NotFound;
    m.detail = "object signatures differ beyond trivial padding";
    return m;
  }
  std::vector<NSequence> sp{s}, ep{e};
  for (int k = 2; k <= n; ++k) {
    Obj pos = v.cat().zero_obj(), neg = v.cat().zero_obj();
    for (std::size_t i = 0; i < N; ++i) {
      int x = w[static_cast<std::size_t>(k)][i];
      (x > 0 ? pos : neg).mult[i] = std::abs(x);
    }
    if (!pos.is_zero()) ep.push_back(pad_sequence(v, pos, k, n));
    if (!neg.is_zero()) sp.push_back(pad_sequence(v, neg, k, n));
  }
  NSequence s2 = sp.size() == 1 ? s : seq_direct_sum(v, sp);
  NSequence e2 = ep.size() == 1 ? e : seq_direct_sum(v, ep);
  const auto& c = v.cat();
  PartialLegs fixed{mor_identity(c, s2.objs[0]), mor_identity(c, s2.objs[1])};
  auto iso = find_sequence_iso(v, s2, e2, fixed, o.iso);
  if (!iso) iso = find_sequence_iso(v, s2, e2, {}, o.iso);
  if (iso) {
    m.verdict = Verdict::Member;
    m.witness = std::move(iso);
    return m;
  }
  m.verdict = Verdict::NotFound;
  m.detail = "no isomorphism to the constructed angle within the sampling budget";
  return m;
}

SequenceLadder induced_ladder(const ThetaOracle& o, const std::vector<Mor>& row_a, const std::vector<Mor>& row_b,
                              const std::vector<Mor>& legs) {
  const QuotientContext& q = *o.quotient();
  for (const auto* row : {&row_a, &row_b})
    if (!q.is_X_monic(row->front())) throw std::invalid_argument("induced_ladder: first map is not X-monic");
  auto a = angle_from_row(o, row_a), b = angle_from_row(o, row_b);
  std::vector<Mor> qlegs;
  for (const auto& f : legs) qlegs.push_back(q.normalize(f));
  SequenceLadder l = make_ladder(q, a.angle, b.angle, std::move(qlegs));
  if (!ladder_commutes(q, l)) throw std::logic_error("induced_ladder: projected ladder does not commute");
  return l;
}

}  // namespace nang
