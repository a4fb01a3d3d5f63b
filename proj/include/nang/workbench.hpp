#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nang/angles.hpp"
#include "nang/io.hpp"

namespace nang {

struct WorkbenchOptions {
  std::optional<int> n;
  EmbedOptions embed{};
  CokernelSearch search{};
  IsoSearch iso{};
};

// A loaded presentation with its sealed quotient (or explicit class) and membership oracle.
// Not movable: the views hold pointers into the owned presentation.
class Workbench {
 public:
  explicit Workbench(PresentationDocument doc, const WorkbenchOptions& opts = {});
  Workbench(const Workbench&) = delete;
  Workbench& operator=(const Workbench&) = delete;

  const PresentationDocument& doc() const { return doc_; }
  const CategoryPresentation& cat() const { return doc_.cat; }
  int n() const { return n_; }
  const AmbientView& ambient() const { return ambient_; }
  const ThetaOracle& oracle() const { return *oracle_; }
  ThetaOracle& oracle() { return *oracle_; }
  const QuotientContext* quotient() const { return quotient_.get(); }
  const ExplicitPhi* phi() const { return phi_.get(); }
  const std::vector<NSequence>& generators() const { return generators_; }
  const HomView& view() const { return oracle_->view(); }

 private:
  PresentationDocument doc_;
  int n_ = 1;
  AmbientView ambient_;
  std::vector<NSequence> generators_;
  std::unique_ptr<ExplicitPhi> phi_;
  std::unique_ptr<QuotientContext> quotient_;
  std::unique_ptr<ThetaOracle> oracle_;
};

std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
// n overrides the default length where the builtin allows it (vect-q); a mismatch elsewhere throws.
PresentationDocument builtin_document(const std::string& name, std::optional<int> n = {});

}  // namespace nang
