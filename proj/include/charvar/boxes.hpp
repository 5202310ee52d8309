#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/torus.hpp"

namespace charvar {

struct Interval {
  double lo = 0.0, hi = 1.0;  // [lo, hi) subset of [0, 1]
};

/// One interval per torus coordinate, row-major over the k x r angle matrix.
struct Box {
  std::vector<Interval> iv;
};

/// Finite union of axis-aligned boxes in angle coordinates.
struct SetDescriptor {
  std::vector<Box> boxes;
  std::string text;  // source form, kept for reports
};

/// "box:0,0.5;0,0.5" — one "lo,hi" pair per coordinate, ';'-separated.
/// Unions join boxes with '|'. "empty" is the empty set.
SetDescriptor parse_set_descriptor(std::string_view text, std::size_t expected_coords);

bool contains(const SetDescriptor& s, const TorusPoint& theta);

/// Intervals precompiled to uint64 phase thresholds.
struct CompiledSet {
  struct CBox {
    std::vector<std::uint64_t> lo, hi;  // hi == 0 means "no upper bound" (hi = 1.0)
  };
  std::vector<CBox> boxes;
  bool contains(const PhaseMatrix& p) const;
};

CompiledSet compile_set(const SetDescriptor& s);

}  // namespace charvar
