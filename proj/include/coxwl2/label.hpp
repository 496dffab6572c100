#pragma once

#include <limits>

namespace coxwl2 {

/// Coxeter label of a pair that generates an infinite dihedral group.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

inline bool is_finite_label(int m) { return m != kInfinity; }

} // namespace coxwl2
