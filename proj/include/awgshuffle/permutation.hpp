#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "awgshuffle/address.hpp"

namespace awgshuffle {

/// Total map from every address of `domain` radices to an address of
/// `codomain` radices, stored densely by decimal input index. Bijectivity is
/// not enforced here; check_bijectivity tests it.
class ChannelPermutation {
 public:
  ChannelPermutation(Radices domain, Radices codomain, std::vector<std::size_t> image);

  const Radices& domain_radices() const noexcept { return domain_; }
  const Radices& codomain_radices() const noexcept { return codomain_; }
  std::size_t size() const noexcept { return image_.size(); }

  std::size_t image(std::size_t index) const { return image_.at(index); }
  std::span<const std::size_t> images() const noexcept { return image_; }

  ChannelAddress input(std::size_t index) const;
  ChannelAddress operator()(const ChannelAddress& x) const;

  friend bool operator==(const ChannelPermutation&, const ChannelPermutation&) = default;

 private:
  Radices domain_;
  Radices codomain_;
  std::vector<std::size_t> image_;
};

}  // namespace awgshuffle
