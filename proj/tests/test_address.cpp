#include <doctest.h>

#include "awgshuffle/address.hpp"
#include "awgshuffle/error.hpp"

using namespace awgshuffle;

TEST_SUITE("address") {
  TEST_CASE("mixed radix encode and decode") {
    const Radices r{3, 2, 3};
    CHECK(mixed_radix_encode(std::vector<std::size_t>{1, 0, 2}, r) == 8);
    CHECK(mixed_radix_encode(std::vector<std::size_t>{0, 0, 0}, r) == 0);
    CHECK(mixed_radix_decode(17, r) == std::vector<std::size_t>{2, 1, 2});
    CHECK(mixed_radix_decode(8, r) == std::vector<std::size_t>{1, 0, 2});
  }

  TEST_CASE("encode inverts decode over every index") {
    for (const Radices& r : {Radices{1, 1}, Radices{3, 6}, Radices{4, 1, 5}, Radices{7, 3, 2}}) {
      const std::size_t total = radix_product(r);
      for (std::size_t i = 0; i < total; ++i)
        CHECK(mixed_radix_encode(mixed_radix_decode(i, r), r) == i);
    }
  }

  TEST_CASE("out of range digits and indices are domain errors") {
    const Radices r{3, 2, 3};
    CHECK_THROWS_AS(mixed_radix_encode(std::vector<std::size_t>{3, 0, 0}, r), DomainError);
    CHECK_THROWS_AS(mixed_radix_encode(std::vector<std::size_t>{0, 0}, r), DomainError);
    CHECK_THROWS_AS(mixed_radix_decode(18, r), DomainError);
    CHECK_THROWS_AS(ChannelAddress({0}, {1}), DomainError);
    CHECK_THROWS_AS(ChannelAddress({0, 0, 0, 0}, {1, 1, 1, 1}), DomainError);
    CHECK_THROWS_AS(ChannelAddress({0, 0}, {0, 1}), DomainError);
  }

  TEST_CASE("rendering is compact for small radices and dotted otherwise") {
    CHECK(ChannelAddress({1, 0, 2}, {3, 2, 3}).to_string() == "102");
    CHECK(ChannelAddress({1, 2}, {3, 6}).to_string() == "12");
    CHECK(ChannelAddress({9, 0}, {10, 10}).to_string() == "90");
    CHECK(ChannelAddress({1, 11}, {3, 12}).to_string() == "1.11");
    CHECK(ChannelAddress({0, 0, 10}, {1, 1, 11}).to_string() == "0.0.10");
  }

  TEST_CASE("radix bookkeeping") {
    const ChannelAddress a({1, 0, 2}, {3, 2, 3});
    CHECK(a.index() == 8);
    CHECK(ChannelAddress::from_index(8, {3, 2, 3}) == a);
    CHECK_NOTHROW(require_radices(a, {3, 2, 3}, "test"));
    CHECK_THROWS_AS(require_radices(a, {2, 3, 3}, "test"), DomainError);
    // Same digits under different radices are different addresses.
    CHECK(ChannelAddress({0, 0}, {2, 3}) != ChannelAddress({0, 0}, {3, 2}));
  }
}
