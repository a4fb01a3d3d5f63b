#include "nang/assemble.hpp"

#include <atomic>

namespace nang {

namespace {
std::atomic<int> g_flipped{-1};
}

const char* sign_site_name(SignSite s) {
  static const char* names[] = {"rotation.last", "cone1.a",       "cone1.f",       "cone1.b",       "cone1.last_a",
                                "cone1.last_f",  "cone1.last_b",  "cone2.first_a", "cone2.first_f", "cone2.a",
                                "cone2.f",       "cone2.b",       "cone2.end_f",   "cone2.end_b",   "cone2.last",
                                "long.first_a",  "long.first_f",  "long.a",        "long.f",        "long.h",
                                "long.b",        "long.g",        "long.c",        "long.last"};
  auto i = static_cast<int>(s);
  return (i >= 0 && i < static_cast<int>(SignSite::Count)) ? names[i] : "?";
}

int site_sign(SignSite s, int printed) {
  return g_flipped.load(std::memory_order_relaxed) == static_cast<int>(s) ? -printed : printed;
}

SignFlipGuard::SignFlipGuard(SignSite s) { g_flipped.store(static_cast<int>(s)); }
SignFlipGuard::~SignFlipGuard() { g_flipped.store(-1); }

std::string sym_to_string(const Sym& s) { return (s.sign < 0 ? "-" : "") + s.body; }

std::vector<std::vector<std::string>> symbolic_grid(const Assembled<Sym, std::string>& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m.grid) {
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(e ? sym_to_string(*e) : "0");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nang
