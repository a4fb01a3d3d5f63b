#pragma once

// Hom dimensions in the cluster category of type A_n, computed by knitting hammocks on the
// repetitive quiver Z A_n. Vertices are (p, q), 1 <= q <= n, with arrows (p,q) -> (p,q+1) and
// (p,q) -> (p+1,q-1); tau(p,q) = (p-1,q).

#include <map>
#include <utility>

namespace oracle {

struct Vertex {
  int p = 0, q = 1;
  friend bool operator==(Vertex a, Vertex b) { return a.p == b.p && a.q == b.q; }
  friend bool operator<(Vertex a, Vertex b) { return std::pair(a.p, a.q) < std::pair(b.p, b.q); }
};

class MeshAn {
 public:
  explicit MeshAn(int n) : n_(n) {}
  int n() const { return n_; }

  Vertex tau(Vertex x) const { return {x.p - 1, x.q}; }
  Vertex tau_inv(Vertex x) const { return {x.p + 1, x.q}; }
  Vertex shift(Vertex x) const { return {x.p + x.q, n_ + 1 - x.q}; }
  Vertex serre(Vertex x) const { return tau(shift(x)); }
  // F = tau^{-1} [1]
  Vertex cluster_f(Vertex x) const { return tau_inv(shift(x)); }
  Vertex cluster_f_inv(Vertex y) const { return {y.p + y.q - n_ - 2, n_ + 1 - y.q}; }

  // dim Hom(x, y) in the derived category: the hammock starting at x.
  int hom_derived(Vertex x, Vertex y) const {
    if (y.p < x.p || (y.p == x.p && y.q < x.q)) return 0;
    if (y.p > x.p + n_ + 1) return 0;
    std::map<Vertex, int> h;
    auto get = [&](int p, int q) {
      if (q < 1 || q > n_) return 0;
      auto it = h.find({p, q});
      return it == h.end() ? 0 : it->second;
    };
    for (int p = x.p; p <= y.p; ++p)
      for (int q = 1; q <= n_; ++q) {
        if (p == x.p && q < x.q) continue;
        int v;
        if (p == x.p && q == x.q) {
          v = 1;
        } else {
          v = get(p, q - 1) + get(p - 1, q + 1) - get(p - 1, q);
          if (v < 0) v = 0;
        }
        h[{p, q}] = v;
        if (p == y.p && q == y.q) return v;
      }
    return 0;
  }

  // dim Hom(x, y) in the orbit category D / F.
  int hom_cluster(Vertex x, Vertex y) const {
    int total = 0;
    Vertex fy = y;
    for (int i = 0; i < 2 * n_ + 2; ++i) {
      total += hom_derived(x, fy);
      fy = cluster_f(fy);
    }
    fy = cluster_f_inv(y);
    for (int i = 0; i < 2 * n_ + 2; ++i) {
      total += hom_derived(x, fy);
      fy = cluster_f_inv(fy);
    }
    return total;
  }

  bool same_orbit(Vertex x, Vertex y) const {
    Vertex a = y, b = y;
    for (int i = 0; i < 2 * n_ + 2; ++i) {
      if (a == x || b == x) return true;
      a = cluster_f(a);
      b = cluster_f_inv(b);
    }
    return false;
  }

 private:
  int n_;
};

}  // namespace oracle
