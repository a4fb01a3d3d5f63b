#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "nang/assemble.hpp"
#include "nang/view.hpp"

namespace nang {

// Morphism-valued ops for the assemblers in assemble.hpp.
struct NumericOps {
  const CategoryPresentation* cat = nullptr;
  const HomView* view = nullptr;  // only needed when an assembler applies the endofunctor
  std::map<int, Mor> ma, mb, mc, mf, mg, mh;
  std::map<int, Obj> oa, ob, oc;

  Mor a(int k) const { return get(ma, k, "a"); }
  Mor b(int k) const { return get(mb, k, "b"); }
  Mor c(int k) const { return get(mc, k, "c"); }
  Mor f(int k) const { return get(mf, k, "f"); }
  Mor g(int k) const { return get(mg, k, "g"); }
  Mor h(int k) const { return get(mh, k, "h"); }
  Obj A(int k) const { return get(oa, k, "A"); }
  Obj B(int k) const { return get(ob, k, "B"); }
  Obj C(int k) const { return get(oc, k, "C"); }
  Mor sigma(const Mor& m) const { return need_view().endo_mor(m); }
  Obj sigma_obj(const Obj& o) const { return need_view().endo_obj(o); }
  Mor comp(const Mor& outer, const Mor& inner) const { return mor_compose(*cat, outer, inner); }
  Mor scale(int s, const Mor& m) const { return s < 0 ? mor_neg(m) : m; }

 private:
  const HomView& need_view() const {
    if (!view) throw std::logic_error("assembler needs an endofunctor but no view was supplied");
    return *view;
  }
  template <class T>
  static T get(const std::map<int, T>& m, int k, const char* what) {
    auto it = m.find(k);
    if (it == m.end()) throw std::logic_error(std::string("assembler requested missing ") + what + "_" + std::to_string(k));
    return it->second;
  }
};

inline Mor materialize(const CategoryPresentation& c, const Assembled<Mor, Obj>& m) {
  return block_matrix(c, m.rows, m.cols, m.grid);
}

}  // namespace nang
