#include "awgshuffle/permutation.hpp"

#include "awgshuffle/error.hpp"

namespace awgshuffle {

ChannelPermutation::ChannelPermutation(Radices domain, Radices codomain,
                                       std::vector<std::size_t> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != radix_product(domain_))
    throw DomainError("permutation has " + std::to_string(image_.size()) +
                      " entries for a domain of " + std::to_string(radix_product(domain_)));
  const std::size_t range = radix_product(codomain_);
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] >= range)
      throw DomainError("image of " + std::to_string(i) + " is outside the codomain");
}

ChannelAddress ChannelPermutation::input(std::size_t index) const {
  return ChannelAddress::from_index(index, domain_);
}

ChannelAddress ChannelPermutation::operator()(const ChannelAddress& x) const {
  require_radices(x, domain_, "permutation lookup");
  return ChannelAddress::from_index(image_[x.index()], codomain_);
}

}  // namespace awgshuffle
