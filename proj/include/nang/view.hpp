#pragma once

#include <optional>
#include <vector>

#include "nang/category.hpp"

namespace nang {

enum class SigmaTag { Ambient, QuotientSigma, QuotientG };
const char* sigma_tag_name(SigmaTag t);

// Linear structure of Hom spaces as seen by solvers: the ambient category, or a
// quotient where morphisms are compared modulo an ideal. Coordinates of a view are
// per-block, laid out like ambient coordinates but with view block dimensions.
class HomView {
 public:
  explicit HomView(const CategoryPresentation& c) : c_(&c) {}
  virtual ~HomView() = default;
  HomView(const HomView&) = delete;
  HomView& operator=(const HomView&) = delete;

  const CategoryPresentation& cat() const { return *c_; }

  virtual const std::vector<int>& view_dims() const = 0;  // N x N
  virtual void project_block(int i, int j, const Scalar* in, Scalar* out) const = 0;
  virtual void lift_block(int i, int j, const Scalar* in, Scalar* out) const = 0;

  virtual bool has_endo() const = 0;
  virtual Obj endo_obj(const Obj& a) const = 0;
  virtual Mor endo_mor(const Mor& f) const = 0;  // representative of the endofunctor image
  virtual SigmaTag tag() const = 0;

  int qdim(int i, int j) const { return view_dims()[static_cast<std::size_t>(i) * cat().size() + j]; }
  std::size_t hom_dim(const Obj& a, const Obj& b) const;
  std::vector<Scalar> coords(const Mor& f) const;
  Mor lift(const Obj& a, const Obj& b, const std::vector<Scalar>& x) const;
  std::vector<Mor> basis(const Obj& a, const Obj& b) const;
  bool is_zero(const Mor& f) const;
  bool equal(const Mor& f, const Mor& g) const;
  Mor normalize(const Mor& f) const { return lift(f.src, f.dst, coords(f)); }
  bool obj_vanishes(const Obj& a) const;  // zero object of the view
  Obj signature(const Obj& a) const;      // multiplicities of surviving indecomposables

  Mor compose(const Mor& g, const Mor& f) const { return mor_compose(cat(), g, f); }
  Mor id(const Obj& a) const { return mor_identity(cat(), a); }
  Mor zero(const Obj& a, const Obj& b) const { return mor_zero(cat(), a, b); }

  std::optional<Mor> inverse(const Mor& f) const;  // two-sided inverse in the view

  // Canonical isomorphism (+) endo(part_k) -> endo((+) part_k) given by endo of injections.
  Mor endo_sum_iso(const std::vector<Obj>& parts) const;

 private:
  const CategoryPresentation* c_;
};

class AmbientView final : public HomView {
 public:
  explicit AmbientView(const CategoryPresentation& c) : HomView(c) {}
  const std::vector<int>& view_dims() const override { return cat().dims(); }
  void project_block(int i, int j, const Scalar* in, Scalar* out) const override;
  void lift_block(int i, int j, const Scalar* in, Scalar* out) const override;
  bool has_endo() const override { return cat().endo.has_value(); }
  Obj endo_obj(const Obj& a) const override { return nang::endo_obj(cat(), a); }
  Mor endo_mor(const Mor& f) const override { return apply_endofunctor(cat(), f); }
  SigmaTag tag() const override { return SigmaTag::Ambient; }
};

// Joint linear system over unknown morphisms. Each equation lives in a view Hom space
// and reads  sum_t coef_t * L_t o X_t o R_t  (or L o endo(X) o R)  +  sum consts = 0.
class LinearSystem {
 public:
  explicit LinearSystem(const HomView& v) : v_(&v) {}

  int add_unknown(const Obj& src, const Obj& dst);
  int add_equation(const Obj& src, const Obj& dst);
  void add_term(int eq, int unk, const std::optional<Mor>& left, const std::optional<Mor>& right,
                const Scalar& coef = 1, bool through_endo = false);
  void add_constant(int eq, const Mor& m, const Scalar& coef = 1);

  struct Solution {
    std::vector<Scalar> particular;
    Matrix nullspace;  // columns
  };
  std::optional<Solution> solve() const;

  std::size_t num_vars() const;
  Mor value(int unk, const std::vector<Scalar>& x) const;
  const Obj& unknown_src(int unk) const { return unknowns_.at(static_cast<std::size_t>(unk)).src; }
  const Obj& unknown_dst(int unk) const { return unknowns_.at(static_cast<std::size_t>(unk)).dst; }
  static std::vector<Scalar> point(const Solution& s, const std::vector<Scalar>& params);

 private:
  struct Unknown {
    Obj src, dst;
    std::size_t offset, dim;
  };
  struct Equation {
    Obj src, dst;
    std::size_t offset, dim;
  };
  struct Term {
    int eq, unk;
    std::optional<Mor> left, right;
    Scalar coef;
    bool through_endo;
  };
  struct Const {
    int eq;
    Mor m;
    Scalar coef;
  };
  const HomView* v_;
  std::vector<Unknown> unknowns_;
  std::vector<Equation> equations_;
  std::vector<Term> terms_;
  std::vector<Const> consts_;
};

}  // namespace nang
