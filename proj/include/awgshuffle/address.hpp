#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace awgshuffle {

using Radices = std::vector<std::size_t>;

/// Positional value of `digits` in the mixed-radix system `radices`,
/// most-significant digit first.
std::size_t mixed_radix_encode(std::span<const std::size_t> digits,
                               std::span<const std::size_t> radices);

/// Inverse of mixed_radix_encode. Throws DomainError when
/// index >= product(radices).
std::vector<std::size_t> mixed_radix_decode(std::size_t index,
                                            std::span<const std::size_t> radices);

/// Product of all radices; throws CapacityError on overflow.
std::size_t radix_product(std::span<const std::size_t> radices);

/// Mixed-radix label of one wavelength channel. Two digits for a single AWG,
/// three for the two-stage network. The radices travel with the value so that
/// stage maps can assert which radix order they were handed.
class ChannelAddress {
 public:
  ChannelAddress(std::vector<std::size_t> digits, Radices radices);

  static ChannelAddress from_index(std::size_t index, Radices radices);

  const std::vector<std::size_t>& digits() const noexcept { return digits_; }
  const Radices& radices() const noexcept { return radices_; }
  std::size_t size() const noexcept { return digits_.size(); }

  /// Digit at position `pos`, counted from the most significant.
  std::size_t operator[](std::size_t pos) const { return digits_.at(pos); }

  std::size_t index() const;

  /// "102" when every radix is <= 10, "1.0.2" otherwise.
  std::string to_string() const;

  friend bool operator==(const ChannelAddress&, const ChannelAddress&) = default;
  friend auto operator<=>(const ChannelAddress&, const ChannelAddress&) = default;

 private:
  std::vector<std::size_t> digits_;
  Radices radices_;
};

/// Throws DomainError unless `addr` has exactly the radices `expected`.
void require_radices(const ChannelAddress& addr, const Radices& expected,
                     const char* context);

std::string radices_to_string(const Radices& radices);

}  // namespace awgshuffle
