#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nang/category.hpp"

namespace nang {

// A0 -a0-> A1 -a1-> ... -a_n-> A_{n+1}; certified when (a1..an) is an n-cokernel of a0.
struct RightNExact {
  std::vector<Obj> objs;  // n+2
  std::vector<Mor> maps;  // n+1
  int n() const { return static_cast<int>(maps.size()) - 1; }
};

RightNExact make_right_n_exact(std::vector<Mor> maps);

bool is_epimorphism(const CategoryPresentation& c, const Mor& g);
bool is_weak_cokernel(const CategoryPresentation& c, const Mor& f, const Mor& g);
bool is_cokernel(const CategoryPresentation& c, const Mor& f, const Mor& g);

struct ExactnessReport {
  bool ok = true;
  std::vector<std::string> lines;  // one per position k = 1..n
};
ExactnessReport certify_right_n_exact(const CategoryPresentation& c, const RightNExact& r);

// Precomposition matrix Hom(dst f, T) -> Hom(src f, T), columns indexed by the Hom(dst f, T) basis.
Matrix precomposition_matrix(const CategoryPresentation& c, const Mor& f, int t);

// Annihilator {h : B -> T | h o f = 0} for f: A -> B, basis as columns in Hom(B, T) coordinates.
Matrix annihilator(const CategoryPresentation& c, const Mor& f, int t);

// Radical of End(indec i), basis as columns (trace criterion, characteristic zero).
Matrix radical_basis(const CategoryPresentation& c, int i);

// Rows are the legs f1..f_{n+1} between r (A0 -> A1 ...) and s (A0 -> B1 ...), first square f1 a0 = b0.
RightNExact n_pushout(const CategoryPresentation& c, const RightNExact& r, const RightNExact& s,
                      const std::vector<Mor>& legs);

struct CokernelSearch {
  std::optional<std::vector<int>> constraint;  // allowed indecomposables at positions 2..n
  int bound = 3;
  int samples = 4;
  std::uint64_t seed = 0x636f6b65ULL;
};
std::optional<RightNExact> find_n_cokernel(const CategoryPresentation& c, const Mor& a0, int n,
                                           const CokernelSearch& opts = {});

}  // namespace nang
