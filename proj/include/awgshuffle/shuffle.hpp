#pragma once

#include <cstddef>
#include <vector>

#include "awgshuffle/address.hpp"
#include "awgshuffle/permutation.hpp"

namespace awgshuffle {

/// The classical perfect shuffle S(g, l) on N = g*l ports. Inputs carry
/// radices (g, l), outputs (l, g).
class ShuffleSpec {
 public:
  ShuffleSpec(std::size_t g, std::size_t l);

  std::size_t g() const noexcept { return g_; }
  std::size_t l() const noexcept { return l_; }
  std::size_t size() const noexcept { return g_ * l_; }

 private:
  std::size_t g_;
  std::size_t l_;
};

/// x2 x1 -> x1 x2.
ChannelAddress shuffle_map(const ShuffleSpec& spec, const ChannelAddress& x);

/// Entry x2*l + x1 holds x1*g + x2.
std::vector<std::size_t> shuffle_perm_decimal(const ShuffleSpec& spec);

ChannelPermutation shuffle_permutation(const ShuffleSpec& spec);

/// x3 x2 x1 with radices (g, m, n) -> x2 x1 x3 with radices (m, n, g).
ChannelAddress left_cyclic_shift(const ChannelAddress& x);

}  // namespace awgshuffle
