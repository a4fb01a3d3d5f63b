#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nang/exactness.hpp"
#include "nang/quotient.hpp"
#include "nang/sequence.hpp"

namespace nang {

enum class ThetaMode { QuotientAdditive, QuotientAngulated, Explicit };
const char* theta_mode_name(ThetaMode m);

enum class Verdict { Member, NotFound, Undecided };
const char* verdict_name(Verdict v);

struct Membership {
  Verdict verdict = Verdict::Undecided;
  std::optional<SequenceLadder> witness;  // iso from (s + pads) to (constructed angle + pads)
  std::string detail;
};

struct EmbedOptions {
  int bound = 8;         // maximal number of catalogue pieces in a sum
  int budget = 400;      // candidate decompositions tested before giving up
  IsoSearch iso{};
};

// An explicit class Φ in an ambient category with automorphism: generators closed under
// isomorphism, direct sums and rotation. Membership and embedding go through a catalogue of
// indecomposable pieces (unit angles, generators and all their rotations).
class ExplicitPhi final : public StrongWitnessSource {
 public:
  ExplicitPhi(const CategoryPresentation& c, int n, std::vector<NSequence> generators, EmbedOptions opts = {});

  const AmbientView& view() const { return view_; }
  int n() const { return n_; }
  const std::vector<NSequence>& generators() const { return generators_; }
  const std::vector<NSequence>& catalogue() const { return catalogue_; }
  const EmbedOptions& options() const { return opts_; }

  struct EmbedResult {
    std::optional<NSequence> angle;  // member angle whose first map is exactly a0
    bool exhausted = false;          // search space fully explored (absence is then proved within the bound)
  };
  // accept: optional extra condition on the produced angle.
  EmbedResult embed(const Mor& a0, const std::function<bool(const NSequence&)>& accept = {}) const;

  std::optional<NSequence> strong_witness(const QuotientContext& q, int indec) const override;

 private:
  struct Piece {
    std::size_t angle;          // index into catalogue_
    std::vector<int> invariants;  // ranks of Hom(T, g0) and Hom(g0, T) per indecomposable T
  };
  std::vector<int> rank_invariants(const Mor& f) const;

  AmbientView view_;
  int n_;
  std::vector<NSequence> generators_;
  std::vector<NSequence> catalogue_;
  std::vector<Piece> pieces_;
  EmbedOptions opts_;
};

class ThetaOracle {
 public:
  ThetaOracle(const QuotientContext& q, const ExplicitPhi* phi = nullptr);
  explicit ThetaOracle(const ExplicitPhi& phi);

  ThetaMode mode() const { return mode_; }
  int n() const { return n_; }
  const HomView& view() const;
  const QuotientContext* quotient() const { return q_; }
  const ExplicitPhi* phi() const { return phi_; }

  IsoSearch iso{};

 private:
  ThetaMode mode_;
  int n_;
  const QuotientContext* q_ = nullptr;
  const ExplicitPhi* phi_ = nullptr;
};

// Raised when a construction cannot be completed within the configured bounds.
struct ConstructionUndecided : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quotient angle induced by an ambient row with X-monic first map: a right n-exact chain
// a0..a_n (additive) or an ambient angle a0..a_{n+1} (angulated). Also returns f_{n+1}.
struct InducedAngle {
  NSequence angle;
  Mor comparison;  // f_{n+1}: A_{n+1} -> endo(A0), ambient representative
};
InducedAngle angle_from_row(const ThetaOracle& o, const std::vector<Mor>& row);

// Ambient row on a0 used by the standard construction (after stabilization in quotient modes).
std::vector<Mor> standard_row(const ThetaOracle& o, const Mor& a0);

// Stabilized standard angle: first map [a0; l] with l the canonical left approximation.
NSequence standard_angle(const ThetaOracle& o, const Mor& a0);
// Member angle whose first map is exactly a0.
NSequence embed_morphism(const ThetaOracle& o, const Mor& a0);

// Trivial pad W -> W at positions (k, k+1).
NSequence pad_sequence(const HomView& v, const Obj& w, int k, int n);

Membership theta_contains(const ThetaOracle& o, const NSequence& s);

// Ladder of quotient angles induced by a ladder of ambient rows (legs f0..f_{n+1}).
SequenceLadder induced_ladder(const ThetaOracle& o, const std::vector<Mor>& row_a, const std::vector<Mor>& row_b,
                              const std::vector<Mor>& legs);

}  // namespace nang
