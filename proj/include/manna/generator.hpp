#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "manna/core.hpp"

namespace manna {

enum class GenClass {
  RestrictedGoods,
  RmgIdenticalBads,
  BinaryMixedGoods,
  Separable,
  RmgIdoBads,
  RmgGeneralBads,
};

const char* gen_class_name(GenClass c);
std::optional<GenClass> parse_gen_class(std::string_view name);

struct GenOptions {
  GenClass klass = GenClass::Separable;
  int agents = 2;
  int items = 4;
  std::uint64_t seed = 0;
  long long lo = -9;
  long long hi = 9;
  int min_bads = 0;  // lower bound on |M-| when the class admits bads
};

// Seeded, class-constrained instance draw. The emitted instance classifies
// into the requested class and, when items exist, gives every agent a
// positive total (degenerate draws are rejected and redrawn). Identical
// options produce identical instances on every platform.
Instance generate_instance(const GenOptions& options);

}  // namespace manna
