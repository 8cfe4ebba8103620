#pragma once

#include <optional>
#include <string>
#include <vector>

namespace atlas {

struct Output {
  bool json = false;
  bool dot = false;
};

struct CapSelection {
  std::string family;  // A, B, E3, E6, combo
  long long p = 0;
  std::string cusps;   // "2,5+2,3" for combo
  int degree = 0;
};

int cmd_invariants(const Output& out, std::optional<long long> p, std::optional<long long> q, const std::string& seq);
int cmd_resolve(const Output& out, const std::string& cusps, long long s);
int cmd_cap(const Output& out, const CapSelection& sel);
int cmd_embed(const Output& out, const CapSelection& sel, unsigned threads);
int cmd_blowdown(const Output& out, const CapSelection& sel);
int cmd_classify(const Output& out, int degree, unsigned threads);
int cmd_lens(const Output& out, long long p, long long q);
int cmd_unicuspidal(const Output& out, int degree, const std::string& family, long long p);

}  // namespace atlas
