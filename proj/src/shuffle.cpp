#include "awgshuffle/shuffle.hpp"

#include <string>

#include "awgshuffle/error.hpp"

namespace awgshuffle {

ShuffleSpec::ShuffleSpec(std::size_t g, std::size_t l) : g_(g), l_(l) {
  if (g == 0 || l == 0)
    throw DomainError("shuffle dimensions must be positive, got S(" + std::to_string(g) +
                      "," + std::to_string(l) + ")");
  radix_product(Radices{g, l});
}

ChannelAddress shuffle_map(const ShuffleSpec& spec, const ChannelAddress& x) {
  require_radices(x, {spec.g(), spec.l()}, "shuffle_map");
  return ChannelAddress({x[1], x[0]}, {spec.l(), spec.g()});
}

std::vector<std::size_t> shuffle_perm_decimal(const ShuffleSpec& spec) {
  std::vector<std::size_t> perm(spec.size());
  for (std::size_t x2 = 0; x2 < spec.g(); ++x2)
    for (std::size_t x1 = 0; x1 < spec.l(); ++x1) perm[x2 * spec.l() + x1] = x1 * spec.g() + x2;
  return perm;
}

ChannelPermutation shuffle_permutation(const ShuffleSpec& spec) {
  return ChannelPermutation({spec.g(), spec.l()}, {spec.l(), spec.g()},
                            shuffle_perm_decimal(spec));
}

ChannelAddress left_cyclic_shift(const ChannelAddress& x) {
  if (x.size() != 3)
    throw DomainError("left_cyclic_shift needs a 3-digit address, got " +
                      std::to_string(x.size()) + " digits");
  const Radices& r = x.radices();
  return ChannelAddress({x[1], x[2], x[0]}, {r[1], r[2], r[0]});
}

}  // namespace awgshuffle
