#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nang/matrix.hpp"
#include "nang/scalar.hpp"

namespace nang {

// Formal direct sum of indecomposables, stored as a multiplicity vector.
// Slot order is canonical: by indecomposable index, then copy number.
struct Obj {
  std::vector<int> mult;

  Obj() = default;
  explicit Obj(std::vector<int> m) : mult(std::move(m)) {}
  static Obj zero(std::size_t n) { return Obj(std::vector<int>(n, 0)); }
  static Obj indec(std::size_t n, int i, int copies = 1) {
    Obj o = zero(n);
    o.mult.at(static_cast<std::size_t>(i)) = copies;
    return o;
  }

  std::size_t total() const;
  bool is_zero() const { return total() == 0; }
  std::vector<int> slots() const;  // indecomposable index of each slot

  friend bool operator==(const Obj& a, const Obj& b) { return a.mult == b.mult; }
  friend bool operator!=(const Obj& a, const Obj& b) { return !(a == b); }
  friend bool operator<(const Obj& a, const Obj& b) { return a.mult < b.mult; }
};

Obj obj_direct_sum(const Obj& a, const Obj& b);
Obj obj_sum(const std::vector<Obj>& parts);

// Morphism: flat coordinates over blocks (dst slot p, src slot q), each block a
// coordinate vector in the Hom basis of (indec of q) -> (indec of p).
struct Mor {
  Obj src, dst;
  std::vector<Scalar> v;
};

// basis_b(j->k) o basis_a(i->j) = sum coef * basis_c(i->k)
struct CompEntry {
  int a = 0, b = 0, c = 0;
  Scalar coef;
};

struct EndoAction {
  std::vector<int> sigma;       // object map on indecomposables
  std::vector<Matrix> action;   // index i*N+j : dim(sigma i, sigma j) x dim(i, j)
  bool automorphism = false;
};

class CategoryPresentation {
 public:
  std::string name;
  std::vector<std::string> indec_names;
  std::vector<std::vector<Scalar>> id_coords;
  std::optional<EndoAction> endo;

  void resize(std::size_t n);
  std::size_t size() const { return indec_names.size(); }
  int dim(int i, int j) const { return dims_[static_cast<std::size_t>(i) * size() + j]; }
  void set_dim(int i, int j, int d) { dims_[static_cast<std::size_t>(i) * size() + j] = d; }
  const std::vector<int>& dims() const { return dims_; }

  const std::vector<CompEntry>& comp(int i, int j, int k) const { return comp_[key(i, j, k)]; }
  std::vector<CompEntry>& comp_mut(int i, int j, int k) { return comp_[key(i, j, k)]; }
  void add_comp(int i, int j, int k, int a, int b, int c, const Scalar& coef);

  int index_of(const std::string& nm) const;  // -1 when unknown
  Obj indec(int i, int copies = 1) const { return Obj::indec(size(), i, copies); }
  Obj zero_obj() const { return Obj::zero(size()); }

  // y o x for coordinate vectors x in Hom(i,j), y in Hom(j,k), accumulated into out.
  void compose_acc(int i, int j, int k, const Scalar* x, const Scalar* y, Scalar* out) const;

 private:
  std::size_t key(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * size() + j) * size() + k;
  }
  std::vector<int> dims_;
  std::vector<std::vector<CompEntry>> comp_;
};

// Block offsets of Hom(a,b) given per-indecomposable-pair dimensions (row-major N x N).
struct HomLayout {
  std::vector<int> src_slots, dst_slots;
  std::vector<std::size_t> offset;  // (p * nsrc + q) -> start, plus total at the end
  const std::vector<int>* dims = nullptr;
  std::size_t n = 0;

  HomLayout(const Obj& a, const Obj& b, const std::vector<int>& d, std::size_t nind);
  std::size_t total() const { return offset.back(); }
  std::size_t at(std::size_t p, std::size_t q) const { return offset[p * src_slots.size() + q]; }
  int block_dim(std::size_t p, std::size_t q) const {
    return (*dims)[static_cast<std::size_t>(src_slots[q]) * n + dst_slots[p]];
  }
};

std::size_t hom_total_dim(const CategoryPresentation& c, const Obj& a, const Obj& b);

Mor mor_zero(const CategoryPresentation& c, const Obj& a, const Obj& b);
Mor mor_identity(const CategoryPresentation& c, const Obj& a);
Mor mor_compose(const CategoryPresentation& c, const Mor& g, const Mor& f);
Mor mor_add(const Mor& f, const Mor& g);
Mor mor_sub(const Mor& f, const Mor& g);
Mor mor_scale(const Scalar& s, const Mor& f);
Mor mor_neg(const Mor& f);
bool mor_is_zero(const Mor& f);
bool mor_equal(const Mor& f, const Mor& g);

// Summand bookkeeping for a list of parts: part k's local slot -> slot of obj_sum(parts).
std::vector<int> part_slot_map(const std::vector<Obj>& parts, std::size_t k);
Mor injection(const CategoryPresentation& c, const std::vector<Obj>& parts, std::size_t k);
Mor projection(const CategoryPresentation& c, const std::vector<Obj>& parts, std::size_t k);

// Block matrix from dst parts (rows) and src parts (cols); absent entries are zero.
using BlockGrid = std::vector<std::vector<std::optional<Mor>>>;
Mor block_matrix(const CategoryPresentation& c, const std::vector<Obj>& dst_parts,
                 const std::vector<Obj>& src_parts, const BlockGrid& grid);
Mor mor_direct_sum(const CategoryPresentation& c, const Mor& f, const Mor& g);
Mor mor_block_diag(const CategoryPresentation& c, const std::vector<Mor>& fs);

std::vector<Mor> hom_space(const CategoryPresentation& c, const Obj& a, const Obj& b);
Mor basis_mor(const CategoryPresentation& c, const Obj& a, const Obj& b, std::size_t index);

Obj endo_obj(const CategoryPresentation& c, const Obj& a);
Mor apply_endofunctor(const CategoryPresentation& c, const Mor& f);

// Two-sided inverse when f is an isomorphism.
std::optional<Mor> is_isomorphism(const CategoryPresentation& c, const Mor& f);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
  void fail(std::string s) {
    ok = false;
    issues.push_back(std::move(s));
  }
};
ValidationReport validate_presentation(const CategoryPresentation& c);

std::string obj_to_string(const CategoryPresentation& c, const Obj& a);
std::string mor_to_string(const CategoryPresentation& c, const Mor& f);

}  // namespace nang
