#include "awgshuffle/address.hpp"

#include <limits>
#include <sstream>

#include "awgshuffle/error.hpp"

namespace awgshuffle {

std::size_t radix_product(std::span<const std::size_t> radices) {
  std::size_t product = 1;
  for (std::size_t r : radices) {
    if (r == 0) throw DomainError("radix must be positive");
    if (product > std::numeric_limits<std::size_t>::max() / r)
      throw CapacityError("mixed-radix product overflows");
    product *= r;
  }
  return product;
}

std::size_t mixed_radix_encode(std::span<const std::size_t> digits,
                               std::span<const std::size_t> radices) {
  if (digits.size() != radices.size())
    throw DomainError("digit count " + std::to_string(digits.size()) +
                      " does not match radix count " +
                      std::to_string(radices.size()));
  radix_product(radices);
  std::size_t value = 0;
  for (std::size_t pos = 0; pos < digits.size(); ++pos) {
    if (digits[pos] >= radices[pos])
      throw DomainError("digit " + std::to_string(digits[pos]) + " at position " +
                        std::to_string(pos) + " is not below radix " +
                        std::to_string(radices[pos]));
    value = value * radices[pos] + digits[pos];
  }
  return value;
}

std::vector<std::size_t> mixed_radix_decode(std::size_t index,
                                            std::span<const std::size_t> radices) {
  const std::size_t total = radix_product(radices);
  if (index >= total)
    throw DomainError("index " + std::to_string(index) + " is not below " +
                      std::to_string(total));
  std::vector<std::size_t> digits(radices.size());
  for (std::size_t pos = radices.size(); pos-- > 0;) {
    digits[pos] = index % radices[pos];
    index /= radices[pos];
  }
  return digits;
}

ChannelAddress::ChannelAddress(std::vector<std::size_t> digits, Radices radices)
    : digits_(std::move(digits)), radices_(std::move(radices)) {
  if (radices_.size() != 2 && radices_.size() != 3)
    throw DomainError("channel address needs 2 or 3 digits, got " +
                      std::to_string(radices_.size()));
  // Validates lengths and digit ranges.
  mixed_radix_encode(digits_, radices_);
}

ChannelAddress ChannelAddress::from_index(std::size_t index, Radices radices) {
  auto digits = mixed_radix_decode(index, radices);
  return ChannelAddress(std::move(digits), std::move(radices));
}

std::size_t ChannelAddress::index() const {
  std::size_t value = 0;
  for (std::size_t pos = 0; pos < digits_.size(); ++pos)
    value = value * radices_[pos] + digits_[pos];
  return value;
}

std::string ChannelAddress::to_string() const {
  bool compact = true;
  for (std::size_t r : radices_) compact = compact && r <= 10;
  std::string out;
  for (std::size_t pos = 0; pos < digits_.size(); ++pos) {
    if (!compact && pos > 0) out += '.';
    out += std::to_string(digits_[pos]);
  }
  return out;
}

std::string radices_to_string(const Radices& radices) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < radices.size(); ++i) os << (i ? "," : "") << radices[i];
  os << ')';
  return os.str();
}

void require_radices(const ChannelAddress& addr, const Radices& expected,
                     const char* context) {
  if (addr.radices() != expected)
    throw DomainError(std::string(context) + ": expected radices " +
                      radices_to_string(expected) + ", got " +
                      radices_to_string(addr.radices()));
}

}  // namespace awgshuffle
