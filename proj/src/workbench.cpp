#include "nang/workbench.hpp"

#include <stdexcept>

namespace nang {

namespace {

// Adds id∘a = a and a∘id = a for every basis element a, with identities at basis index 0.
void add_identity_rules(CategoryPresentation& c) {
  const int N = static_cast<int>(c.size());
  for (int i = 0; i < N; ++i) {
    c.id_coords[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(c.dim(i, i)), 0);
    c.id_coords[static_cast<std::size_t>(i)][0] = 1;
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int a = 0; a < c.dim(i, j); ++a) {
        c.add_comp(i, j, j, a, 0, a, 1);
        if (!(i == j && a == 0)) c.add_comp(i, i, j, 0, a, a, 1);
      }
}

PresentationDocument a3_cluster() {
  PresentationDocument d;
  auto& c = d.cat;
  c.name = "a3-cluster-2ct";
  c.resize(3);
  c.indec_names = {"S3", "P1", "S1"};
  enum { S3 = 0, P1 = 1, S1 = 2 };
  for (int i = 0; i < 3; ++i) c.set_dim(i, i, 1);
  c.set_dim(S3, P1, 1);
  c.set_dim(P1, S1, 1);
  c.set_dim(S1, S3, 1);
  add_identity_rules(c);
  EndoAction e;
  e.sigma = {P1, S1, S3};
  e.automorphism = true;
  e.action.resize(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Matrix m(static_cast<std::size_t>(c.dim(e.sigma[i], e.sigma[j])), static_cast<std::size_t>(c.dim(i, j)));
      if (m.rows() == 1 && m.cols() == 1) m(0, 0) = 1;
      e.action[static_cast<std::size_t>(i * 3 + j)] = m;
    }
  c.endo = e;
  d.subcategory = std::vector<int>{S3, S1};
  d.mode = QuotientMode::Angulated;
  d.n = 2;
  AngleSpec g;
  g.objects = {c.indec(P1), c.indec(S1), c.indec(S3), c.indec(P1)};
  g.maps = {{1}, {1}, {1}, {1}};
  d.angles.push_back(g);
  return d;
}

PresentationDocument stable_kx2() {
  PresentationDocument d;
  auto& c = d.cat;
  c.name = "stable-kx2";
  c.resize(2);
  c.indec_names = {"k", "L"};
  enum { K = 0, L = 1 };
  c.set_dim(K, K, 1);
  c.set_dim(K, L, 1);  // socle inclusion
  c.set_dim(L, K, 1);  // projection onto the top
  c.set_dim(L, L, 2);  // 1, x
  add_identity_rules(c);
  c.add_comp(L, K, L, 0, 0, 1, 1);  // inclusion o projection = x
  d.subcategory = std::vector<int>{L};
  d.mode = QuotientMode::Additive;
  d.n = 1;
  return d;
}

PresentationDocument vect_q(int n) {
  PresentationDocument d;
  auto& c = d.cat;
  c.name = "vect-q";
  c.resize(1);
  c.indec_names = {"V"};
  c.set_dim(0, 0, 1);
  add_identity_rules(c);
  d.subcategory = std::vector<int>{};
  d.mode = QuotientMode::Additive;
  d.n = n;
  return d;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"a3-cluster-2ct", "stable-kx2", "vect-q"}; }

bool is_builtin(const std::string& name) {
  for (const auto& b : builtin_names())
    if (b == name) return true;
  return false;
}

PresentationDocument builtin_document(const std::string& name, std::optional<int> n) {
  if (name == "vect-q") return vect_q(n.value_or(3));
  PresentationDocument d;
  if (name == "a3-cluster-2ct") d = a3_cluster();
  else if (name == "stable-kx2") d = stable_kx2();
  else throw std::invalid_argument("unknown builtin \"" + name + "\"");
  if (n && *n != *d.n)
    throw std::invalid_argument("builtin " + name + " is fixed at n = " + std::to_string(*d.n));
  return d;
}

Workbench::Workbench(PresentationDocument doc, const WorkbenchOptions& opts) : doc_(std::move(doc)), ambient_(doc_.cat) {
  if (opts.n && doc_.n && *opts.n != *doc_.n)
    throw std::invalid_argument("requested n = " + std::to_string(*opts.n) + " but the document fixes n = " +
                                std::to_string(*doc_.n));
  if (!opts.n && !doc_.n) throw std::invalid_argument("n is not specified");
  n_ = opts.n ? *opts.n : *doc_.n;
  for (const auto& a : doc_.angles) {
    if (static_cast<int>(a.objects.size()) != n_ + 2) throw std::invalid_argument("stored angle has the wrong length");
    if (!doc_.cat.endo) throw std::invalid_argument("stored angles need an endofunctor");
    generators_.push_back(angle_from_spec(ambient_, a));
  }
  const QuotientMode mode = doc_.mode.value_or(QuotientMode::Additive);
  if (doc_.cat.endo && doc_.cat.endo->automorphism && (mode == QuotientMode::Angulated || !doc_.subcategory))
    phi_ = std::make_unique<ExplicitPhi>(doc_.cat, n_, generators_, opts.embed);
  if (doc_.subcategory) {
    if (mode == QuotientMode::Angulated && !phi_)
      throw std::invalid_argument("angulated mode needs an ambient automorphism");
    quotient_ = std::make_unique<QuotientContext>(doc_.cat, SubcategorySpec{*doc_.subcategory}, mode, n_,
                                                  mode == QuotientMode::Angulated ? phi_.get() : nullptr, opts.search);
    quotient_->seal();
    oracle_ = std::make_unique<ThetaOracle>(*quotient_, phi_.get());
  } else if (phi_) {
    oracle_ = std::make_unique<ThetaOracle>(*phi_);
  } else {
    throw std::invalid_argument("document defines neither a subcategory nor an ambient automorphism");
  }
  oracle_->iso = opts.iso;
}

}  // namespace nang
