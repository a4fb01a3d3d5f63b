#include "nang/sequence.hpp"

#include "nang/numeric_ops.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace nang {

void check_sequence(const HomView& v, const NSequence& s) {
  const auto m = static_cast<std::size_t>(s.n) + 2;
  if (s.n < 1 || s.objs.size() != m || s.maps.size() != m) throw std::invalid_argument("sequence: wrong length");
  for (std::size_t k = 0; k + 1 < m; ++k)
    if (s.maps[k].src != s.objs[k] || s.maps[k].dst != s.objs[k + 1])
      throw std::invalid_argument("sequence: map " + std::to_string(k) + " does not chain");
  if (s.maps.back().src != s.objs.back() || s.maps.back().dst != s.target)
    throw std::invalid_argument("sequence: last map does not chain");
  if (s.target != v.endo_obj(s.objs.front())) throw std::invalid_argument("sequence: target is not endo(A0)");
}

NSequence make_sequence(const HomView& v, std::vector<Mor> maps) {
  if (maps.size() < 3) throw std::invalid_argument("make_sequence: need at least three maps");
  NSequence s;
  s.n = static_cast<int>(maps.size()) - 2;
  for (const auto& f : maps) s.objs.push_back(f.src);
  s.target = maps.back().dst;
  s.maps = std::move(maps);
  s.tag = v.tag();
  check_sequence(v, s);
  return s;
}

NSequence left_rotation(const HomView& v, const NSequence& s) {
  std::vector<Mor> maps(s.maps.begin() + 1, s.maps.end());
  NumericOps o;
  o.cat = &v.cat();
  o.view = &v;
  o.ma[0] = s.maps.front();
  maps.push_back(rotation_last(o, s.n));
  NSequence r = make_sequence(v, std::move(maps));
  r.tag = s.tag;
  return r;
}

NSequence trivial_sequence(const HomView& v, const Obj& a, int n) {
  const auto& c = v.cat();
  Obj z = c.zero_obj();
  std::vector<Mor> maps;
  maps.push_back(mor_zero(c, z, a));
  maps.push_back(mor_identity(c, a));
  maps.push_back(mor_zero(c, a, z));
  for (int k = 3; k < n + 2; ++k) maps.push_back(mor_zero(c, z, z));
  if (n == 1) maps.back() = mor_zero(c, a, v.endo_obj(z));
  else maps.back() = mor_zero(c, z, v.endo_obj(z));
  return make_sequence(v, std::move(maps));
}

NSequence unit_angle(const HomView& v, const Obj& a, int n) {
  const auto& c = v.cat();
  Obj z = c.zero_obj();
  std::vector<Mor> maps;
  maps.push_back(mor_identity(c, a));
  maps.push_back(mor_zero(c, a, z));
  for (int k = 2; k < n + 1; ++k) maps.push_back(mor_zero(c, z, z));
  maps.push_back(mor_zero(c, z, v.endo_obj(a)));
  return make_sequence(v, std::move(maps));
}

NSequence seq_direct_sum(const HomView& v, const std::vector<NSequence>& parts) {
  if (parts.empty()) throw std::invalid_argument("seq_direct_sum: empty list");
  const int n = parts.front().n;
  for (const auto& p : parts)
    if (p.n != n || p.tag != parts.front().tag) throw std::invalid_argument("seq_direct_sum: n or tag mismatch");
  const auto& c = v.cat();
  std::vector<Mor> maps;
  for (int k = 0; k <= n; ++k) {
    std::vector<Mor> fs;
    for (const auto& p : parts) fs.push_back(p.maps[static_cast<std::size_t>(k)]);
    maps.push_back(mor_block_diag(c, fs));
  }
  std::vector<Mor> lasts;
  std::vector<Obj> a0s;
  for (const auto& p : parts) {
    lasts.push_back(p.maps.back());
    a0s.push_back(p.objs.front());
  }
  maps.push_back(mor_compose(c, v.endo_sum_iso(a0s), mor_block_diag(c, lasts)));
  NSequence s = make_sequence(v, std::move(maps));
  s.tag = parts.front().tag;
  return s;
}

NSequence seq_direct_sum(const HomView& v, const NSequence& s, const NSequence& t) {
  return seq_direct_sum(v, std::vector<NSequence>{s, t});
}

bool is_complex(const HomView& v, const NSequence& s) {
  for (std::size_t k = 0; k + 1 < s.maps.size(); ++k)
    if (!v.is_zero(v.compose(s.maps[k + 1], s.maps[k]))) return false;
  return true;
}

NSequence transport(const HomView& v, const NSequence& s, const std::vector<Mor>& phis) {
  const auto m = s.maps.size();
  if (phis.size() != m) throw std::invalid_argument("transport: need n+2 legs");
  std::vector<Mor> inv;
  for (const auto& p : phis) {
    if (p.src != s.objs[inv.size()]) throw std::invalid_argument("transport: leg source mismatch");
    auto i = v.inverse(p);
    if (!i) throw std::invalid_argument("transport: leg " + std::to_string(inv.size()) + " is not invertible");
    inv.push_back(*i);
  }
  std::vector<Mor> maps;
  for (std::size_t k = 0; k + 1 < m; ++k) maps.push_back(v.compose(v.compose(phis[k + 1], s.maps[k]), inv[k]));
  maps.push_back(v.compose(v.compose(v.endo_mor(phis[0]), s.maps.back()), inv.back()));
  NSequence t = make_sequence(v, std::move(maps));
  t.tag = s.tag;
  return t;
}

SequenceLadder make_ladder(const HomView& v, const NSequence& from, const NSequence& to, std::vector<Mor> legs) {
  if (legs.size() != from.maps.size()) throw std::invalid_argument("make_ladder: wrong leg count");
  SequenceLadder l{from, to, std::move(legs), Mor{}};
  l.last_leg = v.endo_mor(l.legs.front());
  return l;
}

bool ladder_commutes(const HomView& v, const SequenceLadder& l) {
  const auto& s = l.from;
  const auto& t = l.to;
  if (s.n != t.n || s.tag != t.tag || l.legs.size() != s.maps.size()) return false;
  for (std::size_t k = 0; k < l.legs.size(); ++k)
    if (l.legs[k].src != s.objs[k] || l.legs[k].dst != t.objs[k]) return false;
  for (std::size_t k = 0; k + 1 < l.legs.size(); ++k)
    if (!v.equal(v.compose(l.legs[k + 1], s.maps[k]), v.compose(t.maps[k], l.legs[k]))) return false;
  Mor sf0 = v.endo_mor(l.legs.front());
  return v.equal(v.compose(sf0, s.maps.back()), v.compose(t.maps.back(), l.legs.back()));
}

SequenceLadder ladder_compose(const HomView& v, const SequenceLadder& second, const SequenceLadder& first) {
  std::vector<Mor> legs;
  for (std::size_t k = 0; k < first.legs.size(); ++k) legs.push_back(v.compose(second.legs[k], first.legs[k]));
  return make_ladder(v, first.from, second.to, std::move(legs));
}

SequenceLadder rotate_ladder(const HomView& v, const SequenceLadder& l) {
  std::vector<Mor> legs(l.legs.begin() + 1, l.legs.end());
  legs.push_back(v.endo_mor(l.legs.front()));
  return make_ladder(v, left_rotation(v, l.from), left_rotation(v, l.to), std::move(legs));
}

namespace {

struct LadderSystem {
  LinearSystem sys;
  std::vector<int> unk;  // -1 when fixed
  std::optional<LinearSystem::Solution> sol;
};

LadderSystem build_ladder_system(const HomView& v, const NSequence& s, const NSequence& t, const PartialLegs& fixed) {
  if (s.n != t.n) throw std::invalid_argument("ladder: n mismatch");
  if (s.tag != t.tag) throw std::invalid_argument("ladder: sigma tags differ");
  const std::size_t m = s.maps.size();
  LadderSystem ls{LinearSystem(v), std::vector<int>(m, -1), std::nullopt};
  auto fixed_at = [&](std::size_t k) -> const std::optional<Mor>& {
    static const std::optional<Mor> none;
    return k < fixed.size() ? fixed[k] : none;
  };
  for (std::size_t k = 0; k < m; ++k)
    if (!fixed_at(k)) ls.unk[k] = ls.sys.add_unknown(s.objs[k], t.objs[k]);
  // Squares f_{k+1} a_k - b_k f_k = 0.
  for (std::size_t k = 0; k + 1 < m; ++k) {
    int e = ls.sys.add_equation(s.objs[k], t.objs[k + 1]);
    if (ls.unk[k + 1] >= 0) ls.sys.add_term(e, ls.unk[k + 1], std::nullopt, s.maps[k]);
    else ls.sys.add_constant(e, v.compose(*fixed_at(k + 1), s.maps[k]));
    if (ls.unk[k] >= 0) ls.sys.add_term(e, ls.unk[k], t.maps[k], std::nullopt, -1);
    else ls.sys.add_constant(e, v.compose(t.maps[k], *fixed_at(k)), -1);
  }
  // Last square endo(f0) a_{n+1} - b_{n+1} f_{n+1} = 0.
  int e = ls.sys.add_equation(s.objs.back(), t.target);
  if (ls.unk[0] >= 0) ls.sys.add_term(e, ls.unk[0], std::nullopt, s.maps.back(), 1, true);
  else ls.sys.add_constant(e, v.compose(v.endo_mor(*fixed_at(0)), s.maps.back()));
  if (ls.unk[m - 1] >= 0) ls.sys.add_term(e, ls.unk[m - 1], t.maps.back(), std::nullopt, -1);
  else ls.sys.add_constant(e, v.compose(t.maps.back(), *fixed_at(m - 1)), -1);
  ls.sol = ls.sys.solve();
  return ls;
}

std::vector<Mor> legs_at(const LadderSystem& ls, const PartialLegs& fixed, const std::vector<Scalar>& x) {
  std::vector<Mor> legs;
  for (std::size_t k = 0; k < ls.unk.size(); ++k)
    legs.push_back(ls.unk[k] >= 0 ? ls.sys.value(ls.unk[k], x) : *fixed[k]);
  return legs;
}

}  // namespace

std::optional<SequenceLadder> solve_ladder(const HomView& v, const NSequence& from, const NSequence& to,
                                           const PartialLegs& fixed) {
  auto ls = build_ladder_system(v, from, to, fixed);
  if (!ls.sol) return std::nullopt;
  return make_ladder(v, from, to, legs_at(ls, fixed, ls.sol->particular));
}

std::optional<SequenceLadder> find_sequence_iso(const HomView& v, const NSequence& s, const NSequence& t,
                                                const PartialLegs& fixed, const IsoSearch& opts) {
  if (s.n != t.n || s.tag != t.tag) return std::nullopt;
  for (std::size_t k = 0; k < s.objs.size(); ++k)
    if (v.signature(s.objs[k]) != v.signature(t.objs[k])) return std::nullopt;
  auto ls = build_ladder_system(v, s, t, fixed);
  if (!ls.sol) return std::nullopt;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> dist(-opts.range, opts.range);
  const std::size_t nfree = ls.sol->nullspace.cols();
  for (int attempt = 0; attempt < opts.budget; ++attempt) {
    std::vector<Scalar> params(nfree);
    if (attempt > 0)
      for (auto& p : params) p = dist(rng);
    auto legs = legs_at(ls, fixed, LinearSystem::point(*ls.sol, params));
    bool ok = true;
    for (const auto& f : legs)
      if (!v.inverse(f)) {
        ok = false;
        break;
      }
    if (ok) return make_ladder(v, s, t, std::move(legs));
    if (nfree == 0) break;
  }
  return std::nullopt;
}

std::string sequence_to_string(const HomView& v, const NSequence& s) {
  const auto& c = v.cat();
  std::ostringstream os;
  for (std::size_t k = 0; k < s.maps.size(); ++k)
    os << "  " << obj_to_string(c, s.objs[k]) << " --" << mor_to_string(c, s.maps[k]) << "--> "
       << obj_to_string(c, s.maps[k].dst) << "\n";
  return os.str();
}

}  // namespace nang
