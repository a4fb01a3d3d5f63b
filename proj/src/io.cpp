#include "nang/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nang {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

DocumentError::DocumentError(const std::string& msg, int l, int c)
    : std::runtime_error(l > 0 ? msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")" : msg),
      line(l),
      column(c) {}

namespace {

std::pair<int, int> position_of(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Position of the first occurrence of "key" used as an object key.
std::pair<int, int> key_position(const std::string& text, const std::string& key) {
  const std::string quoted = "\"" + key + "\"";
  for (std::size_t at = text.find(quoted); at != std::string::npos; at = text.find(quoted, at + 1)) {
    std::size_t p = at + quoted.size();
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    if (p < text.size() && text[p] == ':') return position_of(text, at);
  }
  return {0, 0};
}

struct Parser {
  const std::string& text;
  PresentationDocument doc;

  [[noreturn]] void fail(const std::string& msg, const std::string& near_key = {}) const {
    auto [l, c] = near_key.empty() ? std::pair<int, int>{0, 0} : key_position(text, near_key);
    throw DocumentError(msg, l, c);
  }

  void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) const {
    if (!obj.is_object()) fail(where + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
      if (!allowed.count(it.key())) fail("unknown field \"" + it.key() + "\" in " + where, it.key());
  }

  const json& need(const json& obj, const std::string& key) const {
    if (!obj.contains(key)) fail("missing field \"" + key + "\"");
    return obj.at(key);
  }

  Scalar scalar(const json& j, const std::string& key) const {
    try {
      if (j.is_string()) return parse_scalar(j.get<std::string>());
      if (j.is_number_integer()) return Scalar(j.get<long>());
    } catch (const std::exception& e) {
      fail("bad scalar in " + key + ": " + e.what(), key);
    }
    fail("scalars must be strings or integers in " + key, key);
  }

  int indec(const json& j, const std::string& key) const {
    if (!j.is_string()) fail("indecomposable names must be strings in " + key, key);
    int i = doc.cat.index_of(j.get<std::string>());
    if (i < 0) fail("unknown indecomposable \"" + j.get<std::string>() + "\" in " + key, key);
    return i;
  }

  std::vector<Scalar> coords(const json& j, const std::string& key) const {
    if (!j.is_array()) fail(key + " must be an array of scalars", key);
    std::vector<Scalar> v;
    for (const auto& x : j) v.push_back(scalar(x, key));
    return v;
  }

  Obj object(const json& j, const std::string& key) const {
    if (!j.is_string()) fail("objects must be literal strings in " + key, key);
    try {
      return parse_object(doc.cat, j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(std::string(e.what()) + " in " + key, key);
    }
  }

  void run() {
    json root;
    try {
      root = json::parse(text);
    } catch (const json::parse_error& e) {
      auto [l, c] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
      throw DocumentError(std::string("malformed JSON: ") + e.what(), l, c);
    }
    check_keys(root, {"format", "version", "field", "name", "indecomposables", "hom_dims", "identities", "composition",
                      "endofunctor", "subcategory", "mode", "n", "angles"},
               "document");
    if (need(root, "format") != kDocumentFormat) fail("format must be \"nang-presentation\"", "format");
    if (need(root, "version") != kDocumentVersion) fail("unsupported version", "version");
    if (root.contains("field") && root.at("field") != "Q") fail("only the field \"Q\" is supported", "field");
    auto& c = doc.cat;
    if (root.contains("name")) {
      if (!root.at("name").is_string()) fail("name must be a string", "name");
      c.name = root.at("name").get<std::string>();
    }
    const auto& names = need(root, "indecomposables");
    if (!names.is_array()) fail("indecomposables must be an array", "indecomposables");
    c.resize(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!names[i].is_string()) fail("indecomposable names must be strings", "indecomposables");
      std::string nm = names[i].get<std::string>();
      bool ok = !nm.empty() && nm != "0" &&
                std::none_of(nm.begin(), nm.end(), [](char ch) { return std::string("+*:,->= \t\n").find(ch) != std::string::npos; });
      if (!ok) fail("invalid indecomposable name \"" + nm + "\"", "indecomposables");
      for (std::size_t k = 0; k < i; ++k)
        if (c.indec_names[k] == nm) fail("duplicate indecomposable \"" + nm + "\"", "indecomposables");
      c.indec_names[i] = nm;
    }
    const auto& dims = need(root, "hom_dims");
    if (!dims.is_array()) fail("hom_dims must be an array", "hom_dims");
    for (const auto& e : dims) {
      if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer() || e[2].get<int>() < 0)
        fail("hom_dims entries are [src, dst, dim]", "hom_dims");
      c.set_dim(indec(e[0], "hom_dims"), indec(e[1], "hom_dims"), e[2].get<int>());
    }
    const auto& ids = need(root, "identities");
    if (!ids.is_object()) fail("identities must be an object", "identities");
    for (auto it = ids.begin(); it != ids.end(); ++it) {
      int i = indec(json(it.key()), "identities");
      c.id_coords[static_cast<std::size_t>(i)] = coords(it.value(), "identities");
    }
    const auto& comp = need(root, "composition");
    if (!comp.is_array()) fail("composition must be an array", "composition");
    for (const auto& e : comp) {
      if (!e.is_array() || e.size() != 7) fail("composition entries are [i, j, k, a, b, c, coef]", "composition");
      int i = indec(e[0], "composition"), j = indec(e[1], "composition"), k = indec(e[2], "composition");
      for (int t = 3; t < 6; ++t)
        if (!e[t].is_number_integer()) fail("composition basis indices must be integers", "composition");
      c.add_comp(i, j, k, e[3].get<int>(), e[4].get<int>(), e[5].get<int>(), scalar(e[6], "composition"));
    }
    if (root.contains("endofunctor")) parse_endo(root.at("endofunctor"));
    if (root.contains("subcategory")) {
      const auto& s = root.at("subcategory");
      if (!s.is_array()) fail("subcategory must be an array of names", "subcategory");
      std::vector<int> members;
      for (const auto& x : s) members.push_back(indec(x, "subcategory"));
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      doc.subcategory = members;
    }
    if (root.contains("mode")) {
      const auto& m = root.at("mode");
      if (m == "ADDITIVE") doc.mode = QuotientMode::Additive;
      else if (m == "ANGULATED") doc.mode = QuotientMode::Angulated;
      else fail("mode must be \"ADDITIVE\" or \"ANGULATED\"", "mode");
    }
    if (root.contains("n")) {
      const auto& n = root.at("n");
      if (!n.is_number_integer() || n.get<int>() < 1) fail("n must be a positive integer", "n");
      doc.n = n.get<int>();
    }
    if (root.contains("angles")) {
      const auto& as = root.at("angles");
      if (!as.is_array()) fail("angles must be an array", "angles");
      for (const auto& a : as) {
        check_keys(a, {"objects", "maps"}, "angle");
        AngleSpec s;
        const auto& objs = need(a, "objects");
        const auto& maps = need(a, "maps");
        if (!objs.is_array() || !maps.is_array() || objs.size() != maps.size() || objs.size() < 3)
          fail("an angle lists n+2 objects and n+2 maps", "angles");
        for (const auto& o : objs) s.objects.push_back(object(o, "angles"));
        for (const auto& m : maps) s.maps.push_back(coords(m, "angles"));
        doc.angles.push_back(std::move(s));
      }
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c.id_coords[i].size() != static_cast<std::size_t>(c.dim(static_cast<int>(i), static_cast<int>(i))))
        fail("identity of " + c.indec_names[i] + " does not match its endomorphism dimension", "identities");
  }

  void parse_endo(const json& e) {
    check_keys(e, {"object_map", "automorphism", "action"}, "endofunctor");
    auto& c = doc.cat;
    const std::size_t N = c.size();
    EndoAction act;
    act.sigma.assign(N, -1);
    const auto& om = need(e, "object_map");
    if (!om.is_object()) fail("object_map must be an object", "object_map");
    for (auto it = om.begin(); it != om.end(); ++it)
      act.sigma[static_cast<std::size_t>(indec(json(it.key()), "object_map"))] = indec(it.value(), "object_map");
    for (std::size_t i = 0; i < N; ++i)
      if (act.sigma[i] < 0) fail("object_map misses " + c.indec_names[i], "object_map");
    if (e.contains("automorphism")) {
      if (!e.at("automorphism").is_boolean()) fail("automorphism must be a boolean", "automorphism");
      act.automorphism = e.at("automorphism").get<bool>();
    }
    act.action.resize(N * N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        act.action[i * N + j] = Matrix(static_cast<std::size_t>(c.dim(act.sigma[i], act.sigma[j])),
                                       static_cast<std::size_t>(c.dim(static_cast<int>(i), static_cast<int>(j))));
    const auto& blocks = need(e, "action");
    if (!blocks.is_array()) fail("action must be an array", "action");
    for (const auto& b : blocks) {
      check_keys(b, {"src", "dst", "matrix"}, "action block");
      int i = indec(need(b, "src"), "action"), j = indec(need(b, "dst"), "action");
      Matrix& m = act.action[static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j)];
      const auto& rows = need(b, "matrix");
      if (!rows.is_array() || rows.size() != m.rows()) fail("action matrix has the wrong number of rows", "matrix");
      for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = coords(rows[r], "matrix");
        if (row.size() != m.cols()) fail("action matrix has the wrong number of columns", "matrix");
        for (std::size_t col = 0; col < m.cols(); ++col) m(r, col) = row[col];
      }
    }
    c.endo = std::move(act);
  }
};

ojson scalars_json(const std::vector<Scalar>& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

}  // namespace

PresentationDocument parse_document(const std::string& text) {
  Parser p{text, {}};
  p.run();
  return std::move(p.doc);
}

std::string emit_document(const PresentationDocument& d) {
  const auto& c = d.cat;
  const std::size_t N = c.size();
  const auto nm = [&](std::size_t i) { return c.indec_names[i]; };
  ojson root;
  root["format"] = kDocumentFormat;
  root["version"] = kDocumentVersion;
  root["field"] = "Q";
  root["name"] = c.name;
  root["indecomposables"] = c.indec_names;
  ojson dims = ojson::array();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (int dd = c.dim(static_cast<int>(i), static_cast<int>(j)); dd > 0) dims.push_back(ojson::array({nm(i), nm(j), dd}));
  root["hom_dims"] = dims;
  ojson ids = ojson::object();
  for (std::size_t i = 0; i < N; ++i) ids[nm(i)] = scalars_json(c.id_coords[i]);
  root["identities"] = ids;
  ojson comp = ojson::array();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k)
        for (const auto& e : c.comp(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)))
          comp.push_back(ojson::array({nm(i), nm(j), nm(k), e.a, e.b, e.c, to_string(e.coef)}));
  root["composition"] = comp;
  if (c.endo) {
    ojson e;
    ojson om = ojson::object();
    for (std::size_t i = 0; i < N; ++i) om[nm(i)] = nm(static_cast<std::size_t>(c.endo->sigma[i]));
    e["object_map"] = om;
    e["automorphism"] = c.endo->automorphism;
    ojson blocks = ojson::array();
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        const Matrix& m = c.endo->action[i * N + j];
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
        ojson rows = ojson::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
          std::vector<Scalar> row;
          for (std::size_t col = 0; col < m.cols(); ++col) row.push_back(m(r, col));
          rows.push_back(scalars_json(row));
        }
        blocks.push_back(ojson{{"src", nm(i)}, {"dst", nm(j)}, {"matrix", rows}});
      }
    e["action"] = blocks;
    root["endofunctor"] = e;
  }
  if (d.subcategory) {
    ojson s = ojson::array();
    for (int i : *d.subcategory) s.push_back(nm(static_cast<std::size_t>(i)));
    root["subcategory"] = s;
  }
  if (d.mode) root["mode"] = *d.mode == QuotientMode::Additive ? "ADDITIVE" : "ANGULATED";
  if (d.n) root["n"] = *d.n;
  if (!d.angles.empty()) {
    ojson as = ojson::array();
    for (const auto& a : d.angles) {
      ojson objs = ojson::array(), maps = ojson::array();
      for (const auto& o : a.objects) objs.push_back(object_literal(c, o));
      for (const auto& m : a.maps) maps.push_back(scalars_json(m));
      as.push_back(ojson{{"objects", objs}, {"maps", maps}});
    }
    root["angles"] = as;
  }
  return root.dump(2) + "\n";
}

PresentationDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

Obj parse_object(const CategoryPresentation& c, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  Obj o = c.zero_obj();
  if (t == "0") return o;
  if (t.empty()) throw std::invalid_argument("empty object literal");
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t plus = t.find('+', start);
    std::string term = t.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    int copies = 1;
    if (auto star = term.find('*'); star != std::string::npos) {
      try {
        copies = std::stoi(term.substr(0, star));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad multiplicity in \"" + term + "\"");
      }
      term = term.substr(star + 1);
      if (copies < 0) throw std::invalid_argument("negative multiplicity in \"" + text + "\"");
    }
    int i = c.index_of(term);
    if (i < 0) throw std::invalid_argument("unknown indecomposable \"" + term + "\"");
    o.mult[static_cast<std::size_t>(i)] += copies;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return o;
}

Mor parse_morphism(const CategoryPresentation& c, const std::string& text) {
  auto arrow = text.find("->");
  auto colon = text.find(':', arrow == std::string::npos ? 0 : arrow);
  if (arrow == std::string::npos || colon == std::string::npos)
    throw std::invalid_argument("morphism literal must look like SRC->DST:c1,c2,...");
  Mor f = mor_zero(c, parse_object(c, text.substr(0, arrow)), parse_object(c, text.substr(arrow + 2, colon - arrow - 2)));
  std::vector<Scalar> v;
  std::string rest = text.substr(colon + 1);
  std::stringstream ss(rest);
  for (std::string item; std::getline(ss, item, ',');)
    if (item.find_first_not_of(" \t") != std::string::npos) v.push_back(parse_scalar(item));
  if (v.size() != f.v.size())
    throw std::invalid_argument("morphism literal has " + std::to_string(v.size()) + " coordinates, expected " +
                                std::to_string(f.v.size()));
  f.v = std::move(v);
  return f;
}

std::string object_literal(const CategoryPresentation& c, const Obj& a) {
  std::string s;
  for (std::size_t i = 0; i < a.mult.size(); ++i) {
    if (a.mult[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (a.mult[i] > 1) s += std::to_string(a.mult[i]) + "*";
    s += c.indec_names[i];
  }
  return s.empty() ? "0" : s;
}

std::string morphism_literal(const CategoryPresentation& c, const Mor& f) {
  std::string s = object_literal(c, f.src) + "->" + object_literal(c, f.dst) + ":";
  for (std::size_t i = 0; i < f.v.size(); ++i) s += (i ? "," : "") + to_string(f.v[i]);
  return s;
}

NSequence angle_from_spec(const HomView& v, const AngleSpec& s) {
  const auto& c = v.cat();
  if (s.objects.size() != s.maps.size() || s.objects.size() < 3) throw std::invalid_argument("angle: need n+2 objects and maps");
  std::vector<Mor> maps;
  for (std::size_t k = 0; k < s.maps.size(); ++k) {
    Obj dst = k + 1 < s.objects.size() ? s.objects[k + 1] : v.endo_obj(s.objects.front());
    Mor f = mor_zero(c, s.objects[k], dst);
    if (s.maps[k].size() != f.v.size())
      throw std::invalid_argument("angle: map " + std::to_string(k) + " has the wrong number of coordinates");
    f.v = s.maps[k];
    maps.push_back(std::move(f));
  }
  return make_sequence(v, std::move(maps));
}

AngleSpec spec_from_angle(const NSequence& s) {
  AngleSpec a;
  a.objects = s.objs;
  for (const auto& m : s.maps) a.maps.push_back(m.v);
  return a;
}

}  // namespace nang
