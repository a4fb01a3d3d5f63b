#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nang/category.hpp"
#include "nang/quotient.hpp"

namespace nang {

inline constexpr const char* kDocumentFormat = "nang-presentation";
inline constexpr int kDocumentVersion = 1;

struct AngleSpec {
  std::vector<Obj> objects;                 // A0 .. A_{n+1}
  std::vector<std::vector<Scalar>> maps;    // n+2 coordinate vectors, last one into endo(A0)
};

struct PresentationDocument {
  CategoryPresentation cat;
  std::optional<std::vector<int>> subcategory;
  std::optional<QuotientMode> mode;
  std::optional<int> n;
  std::vector<AngleSpec> angles;
};

// Input problem with a position in the source text (line/column are 1-based, 0 when unknown).
struct DocumentError : std::runtime_error {
  DocumentError(const std::string& msg, int line = 0, int column = 0);
  int line, column;
};

PresentationDocument parse_document(const std::string& text);
std::string emit_document(const PresentationDocument& d);
PresentationDocument load_document(const std::string& path);

// Object and morphism literals used on the command line:
//   object  "0" | "S3" | "S3+2*P1"
//   morphism "SRC->DST:c1,c2,..."  (coordinates in block order, rationals allowed)
Obj parse_object(const CategoryPresentation& c, const std::string& text);
Mor parse_morphism(const CategoryPresentation& c, const std::string& text);
std::string object_literal(const CategoryPresentation& c, const Obj& a);
std::string morphism_literal(const CategoryPresentation& c, const Mor& f);

NSequence angle_from_spec(const HomView& v, const AngleSpec& s);
AngleSpec spec_from_angle(const NSequence& s);

}  // namespace nang
