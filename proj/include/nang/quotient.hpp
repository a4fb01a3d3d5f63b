#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nang/exactness.hpp"
#include "nang/sequence.hpp"
#include "nang/view.hpp"

namespace nang {

struct SubcategorySpec {
  std::vector<int> members;  // indecomposable indices; add-closure implied
  bool contains(int i) const;
  bool contains_obj(const Obj& a) const;  // a lies in add X
};

enum class QuotientMode { Additive, Angulated };
const char* quotient_mode_name(QuotientMode m);

class QuotientContext;

// Supplies, in angulated mode, an ambient angle A -> X1 -> ... -> Xn -> B -> endo(A) on an
// indecomposable A with X_i in X and first map a left X-approximation.
class StrongWitnessSource {
 public:
  virtual ~StrongWitnessSource() = default;
  virtual std::optional<NSequence> strong_witness(const QuotientContext& q, int indec) const = 0;
};

// Chain defining the endofunctor on an object: maps a0..a_n (additive) or a0..a_{n+1} (angulated).
struct EndoWitness {
  Obj source, image;
  std::vector<Mor> maps;
};

struct EndofunctorUndefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The quotient C/X as a HomView. Quotient coordinates of a block are the non-pivot
// coordinates after reducing modulo the echelon basis of the ideal.
class QuotientContext final : public HomView {
 public:
  QuotientContext(const CategoryPresentation& c, SubcategorySpec x, QuotientMode mode, int n,
                  const StrongWitnessSource* source = nullptr, CokernelSearch search = {});

  const SubcategorySpec& x() const { return x_; }
  QuotientMode mode() const { return mode_; }
  int n() const { return n_; }
  const AmbientView& ambient() const { return ambient_; }
  const CokernelSearch& search_options() const { return search_; }

  // Ideal of morphisms factoring through add X: basis columns in ambient coordinates.
  const Matrix& ideal_basis(int i, int j) const { return ideal_[key(i, j)].basis; }
  int ideal_dim(int i, int j) const { return static_cast<int>(ideal_[key(i, j)].basis.cols()); }
  Matrix ideal_subspace(const Obj& a, const Obj& b) const;

  std::vector<Scalar> project_mor(const Mor& f) const { return coords(f); }
  Mor lift_mor(const Obj& a, const Obj& b, const std::vector<Scalar>& x) const { return lift(a, b, x); }
  bool quotient_is_iso(const Mor& f) const { return inverse(f).has_value(); }

  bool is_X_monic(const Mor& f) const;
  Mor canonical_left_approximation(const Obj& a) const;

  // Endofunctor (Σ in additive mode, 𝔾 in angulated mode).
  std::optional<std::string> witness_error(int indec) const;
  const EndoWitness& indec_witness(int indec) const;
  EndoWitness object_witness(const Obj& a) const;  // direct sum of indecomposable witnesses
  Mor sigma_on_morphism_direct(const Mor& f) const;  // literal ladder between object witnesses
  // Legs f0 = f, f1..f_{n+1} of an ambient ladder from row s to row t (last square included in
  // angulated mode). Throws when unsolvable.
  std::vector<Mor> solve_witness_ladder(const EndoWitness& s, const EndoWitness& t, const Mor& f) const;
  // Action on quotient coordinates of Hom(i,j), as a matrix into Hom(endo i, endo j).
  const Matrix& endo_block_action(int i, int j) const;
  void seal();

  // HomView
  const std::vector<int>& view_dims() const override { return qdims_; }
  void project_block(int i, int j, const Scalar* in, Scalar* out) const override;
  void lift_block(int i, int j, const Scalar* in, Scalar* out) const override;
  bool has_endo() const override { return true; }
  Obj endo_obj(const Obj& a) const override;
  Mor endo_mor(const Mor& f) const override;
  SigmaTag tag() const override { return mode_ == QuotientMode::Additive ? SigmaTag::QuotientSigma : SigmaTag::QuotientG; }

 private:
  struct Block {
    Matrix basis;                  // ideal basis columns
    Matrix rref;                   // echelon rows of the ideal
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> free;  // quotient coordinates
  };
  std::size_t key(int i, int j) const { return static_cast<std::size_t>(i) * cat().size() + j; }
  void build_witness(int i) const;
  void build_action(int i, int j) const;

  AmbientView ambient_;
  SubcategorySpec x_;
  QuotientMode mode_;
  int n_;
  const StrongWitnessSource* source_;
  CokernelSearch search_;
  std::vector<Block> ideal_;
  std::vector<int> qdims_;

  mutable std::recursive_mutex mu_;
  mutable std::vector<std::optional<EndoWitness>> witness_;
  mutable std::vector<std::optional<std::string>> witness_err_;
  mutable std::vector<bool> witness_done_;
  mutable std::vector<std::optional<Matrix>> action_;
};

}  // namespace nang
