#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nang/view.hpp"

namespace nang {

// A0 -a0-> A1 -> ... -> A_{n+1} -a_{n+1}-> target (the endofunctor image of A0).
struct NSequence {
  int n = 1;
  std::vector<Obj> objs;  // n+2 objects
  Obj target;
  std::vector<Mor> maps;  // n+2 maps
  SigmaTag tag = SigmaTag::Ambient;
};

struct SequenceLadder {
  NSequence from, to;
  std::vector<Mor> legs;  // f0 .. f_{n+1}
  Mor last_leg;           // endo(f0)
};

using PartialLegs = std::vector<std::optional<Mor>>;

// Assembles a sequence from its n+2 maps, checking chaining and the target.
NSequence make_sequence(const HomView& v, std::vector<Mor> maps);
void check_sequence(const HomView& v, const NSequence& s);

NSequence left_rotation(const HomView& v, const NSequence& s);
NSequence trivial_sequence(const HomView& v, const Obj& a, int n);  // 0 -> A -> A -> 0 ...
NSequence unit_angle(const HomView& v, const Obj& a, int n);        // A -> A -> 0 ... -> endo(A)
NSequence seq_direct_sum(const HomView& v, const std::vector<NSequence>& parts);
NSequence seq_direct_sum(const HomView& v, const NSequence& s, const NSequence& t);
bool is_complex(const HomView& v, const NSequence& s);

// Transport along isomorphisms phi_k: s_k -> t_k; the returned t makes (phi, endo phi0) a ladder.
NSequence transport(const HomView& v, const NSequence& s, const std::vector<Mor>& phis);

SequenceLadder make_ladder(const HomView& v, const NSequence& from, const NSequence& to, std::vector<Mor> legs);
bool ladder_commutes(const HomView& v, const SequenceLadder& l);
SequenceLadder ladder_compose(const HomView& v, const SequenceLadder& second, const SequenceLadder& first);
SequenceLadder rotate_ladder(const HomView& v, const SequenceLadder& l);

// One joint linear system over all unfixed legs; echelon-canonical solution point.
std::optional<SequenceLadder> solve_ladder(const HomView& v, const NSequence& from, const NSequence& to,
                                           const PartialLegs& fixed = {});

struct IsoSearch {
  int budget = 64;
  int range = 3;
  std::uint64_t seed = 0x6e616e67ULL;
};
std::optional<SequenceLadder> find_sequence_iso(const HomView& v, const NSequence& s, const NSequence& t,
                                                const PartialLegs& fixed = {}, const IsoSearch& opts = {});

std::string sequence_to_string(const HomView& v, const NSequence& s);

}  // namespace nang
