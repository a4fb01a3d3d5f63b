#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nang/angles.hpp"

namespace nang {

// A completion that the theory guarantees but the engine could not produce.
struct TheoremViolation : std::runtime_error {
  TheoremViolation(std::string axiom_, std::string subsystem_);
  std::string axiom, subsystem;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Three rows on a0, f1 a0 and f1 (the c-row starts A1 -f1-> B1 -c1-> C2 ...).
struct OctahedronInput {
  NSequence a_row, b_row, c_row;
  Mor f1;
};

struct OctahedronCompletion {
  int n = 1;
  std::vector<std::optional<Mor>> f, g, h;  // indexed by k; f0 = 1, f1 given, g1 = 1, h_k for k >= 3
  std::vector<Mor> alpha;                  // alpha_1 .. alpha_{n-3}
  std::optional<Mor> beta;                 // absent for n = 1
  NSequence long_sequence;
  Membership membership;
  std::string route;  // which construction produced the fill-ins
};

// Ladder data with the first two legs given.
struct LadderInput {
  NSequence from, to;
  Mor f0, f1;
};

struct ConeResult {
  SequenceLadder ladder;
  NSequence sequence;
  Membership membership;
};

// Squares of a ladder that fail, as human-readable lines (empty when it commutes).
std::vector<std::string> ladder_failures(const HomView& v, const SequenceLadder& l);

// (RN1)(b*), (RN1)(c), (RN2)
Membership check_trivial(const ThetaOracle& o, const Obj& a);
Membership check_embedding(const ThetaOracle& o, const Mor& a0, NSequence* out = nullptr);
Membership check_rn2(const ThetaOracle& o, const NSequence& s);

// (RN3): direct solve and the derivation through two octahedra.
std::optional<SequenceLadder> solve_rn3(const ThetaOracle& o, const NSequence& s, const NSequence& t, const Mor& f0,
                                        const Mor& f1);
SequenceLadder derive_rn3(const ThetaOracle& o, const NSequence& s, const NSequence& t, const Mor& f0, const Mor& f1);

// (RN4*)
NSequence assemble_long_sequence(const HomView& v, const OctahedronInput& inp, const OctahedronCompletion& c);
std::vector<std::string> completion_failures(const ThetaOracle& o, const OctahedronInput& inp,
                                             const OctahedronCompletion& c);
OctahedronCompletion complete_rn4_star(const ThetaOracle& o, const OctahedronInput& inp);

// Mapping cones
NSequence cone_rn4_1(const HomView& v, const SequenceLadder& l);
NSequence cone_rn4_2(const HomView& v, const SequenceLadder& l);

// Equivalences between the octahedral axiom and the two cone axioms.
ConeResult convert_rn4star_to_rn41(const ThetaOracle& o, const LadderInput& in);
OctahedronCompletion convert_rn41_to_rn4star(const ThetaOracle& o, const OctahedronInput& inp);
ConeResult convert_rn41_to_rn42(const ThetaOracle& o, const LadderInput& in);
ConeResult convert_rn42_to_rn41(const ThetaOracle& o, const LadderInput& in);

// Octahedral completion in an ambient explicit class through the cone row; also checks
// c_{n+1} g_{n+1} = endo(a0) b_{n+1}.
OctahedronCompletion complete_n4_from_n4star(const ThetaOracle& o, const OctahedronInput& inp);

// Suite orchestration
struct Universe {
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;
};
Universe enumerate_universe(const HomView& v, int bound);

struct SuiteOptions {
  int universe_bound = 2;
  int budget = 400;          // cap on octahedral instances (sampled deterministically beyond it)
  int rn3_instances = 60;
  std::uint64_t seed = 1;
  int threads = 0;           // 0: hardware concurrency
  bool converters = true;
};

struct SuiteRecord {
  std::string key, axiom, verdict, detail, digest;
};

struct SuiteReport {
  std::string context;
  int n = 1;
  std::vector<SuiteRecord> records;
  std::map<std::string, int> verdict_counts;
  std::map<std::string, std::map<std::string, int>> per_axiom;
  int violations = 0, not_found = 0, undecided = 0;
  double seconds = 0;
  bool passed(bool strict) const { return violations == 0 && not_found == 0 && (!strict || undecided == 0); }
};

SuiteReport run_full_suite(const ThetaOracle& o, const Universe& u, const SuiteOptions& opts);

std::string digest(const std::string& text);

}  // namespace nang
