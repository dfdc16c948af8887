#include <doctest.h>

#include <set>
#include <tuple>

#include "awgshuffle/error.hpp"
#include "awgshuffle/shuffle.hpp"
#include "awgshuffle/topology.hpp"
#include "oracles.hpp"

using namespace awgshuffle;

namespace {

ChannelAddress addr(std::size_t a, std::size_t b, std::size_t c, Radices r) {
  return ChannelAddress({a, b, c}, std::move(r));
}

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("params") {
    const NetworkParams p(3, 2, 3);
    CHECK(p.channels() == 18);
    CHECK(p.lambda_count() == 3);
    CHECK(NetworkParams(4, 3, 2).lambda_count() == 4);
    CHECK_THROWS_AS(NetworkParams(0, 1, 1), DomainError);
    CHECK_THROWS_AS(NetworkParams(1, 0, 1), DomainError);
    CHECK_THROWS_AS(NetworkParams(1, 1, 0), DomainError);
  }

  TEST_CASE("build_network wiring") {
    const Topology t = build_network(3, 2, 3);
    CHECK(t.cables().size() == 6);
    CHECK(t.awg_count() == 2);
    CHECK(t.awg_spec() == AwgSpec(3, 3));
    const Cable& c = t.cable_from(1, 0);
    CHECK(c.to_awg == 0);
    CHECK(c.to_input == 1);

    const Topology one = build_network(1, 1, 1);
    CHECK(one.cables().size() == 1);
    CHECK(one.permutation().size() == 1);
    CHECK(one.permutation().image(0) == 0);

    const Topology two = build_network(2, 2, 2);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> wires;
    for (const Cable& k : two.cables()) wires.insert({k.from_group, k.from_port, k.to_awg, k.to_input});
    CHECK(wires == std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>>{
                       {0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 1, 1, 1}});
  }

  TEST_CASE("every group port and AWG input has exactly one cable") {
    for (std::size_t g = 1; g <= 5; ++g)
      for (std::size_t m = 1; m <= 5; ++m) {
        const Topology t = build_network(g, m, 2);
        std::set<std::pair<std::size_t, std::size_t>> from, to;
        for (const Cable& c : t.cables()) {
          CHECK(c.to_awg == c.from_port);
          CHECK(c.to_input == c.from_group);
          from.insert({c.from_group, c.from_port});
          to.insert({c.to_awg, c.to_input});
        }
        CHECK(from.size() == g * m);
        CHECK(to.size() == g * m);
        CHECK(t.cables().size() == g * m);
      }
  }

  TEST_CASE("capacity cap") {
    CHECK_THROWS_AS(build_network(NetworkParams(100, 100, 101)), CapacityError);
    CHECK_THROWS_AS(build_network(NetworkParams(3, 2, 3), BuildOptions{17}), CapacityError);
    CHECK_NOTHROW(build_network(NetworkParams(3, 2, 3), BuildOptions{18}));
  }

  TEST_CASE("middle channel labels") {
    const NetworkParams p(3, 2, 3);
    CHECK(label_middle_channel(p, 0, 1, 0).to_string() == "012");
    CHECK(label_middle_channel(p, 0, 0, 0).to_string() == "000");
    CHECK(label_middle_channel(p, 1, 2, 2).to_string() == "120");
    CHECK(label_middle_channel(p, 1, 2, 2).radices() == Radices{2, 3, 3});
    // 4x2 AWGs: wavelength 2 at input 0 has no output.
    CHECK_THROWS_AS(label_middle_channel(NetworkParams(4, 3, 2), 0, 0, 2), ValidityError);
    CHECK_THROWS_AS(label_middle_channel(p, 2, 0, 0), DomainError);
  }

  TEST_CASE("network output channel labels") {
    const NetworkParams p(3, 2, 3);
    CHECK(label_net_output_channel(p, 0, 2, 0).to_string() == "021");
    CHECK(label_net_output_channel(p, 0, 0, 0).to_string() == "000");
    CHECK(label_net_output_channel(p, 1, 1, 1).to_string() == "110");
    CHECK(label_net_output_channel(p, 1, 1, 1).radices() == Radices{2, 3, 3});
    // 2x4 AWGs: output 0 only sees wavelengths 0 and 1.
    CHECK_THROWS_AS(label_net_output_channel(NetworkParams(2, 1, 4), 0, 0, 2), ValidityError);
  }

  TEST_CASE("network input channel labels") {
    const NetworkParams p(3, 2, 3);
    CHECK(label_net_input_channel(p, 1, 0, 0).to_string() == "102");
    CHECK(label_net_input_channel(p, 0, 0, 0).to_string() == "000");
    CHECK(label_net_input_channel(p, 2, 1, 2).to_string() == "210");
    CHECK(label_net_input_channel(p, 2, 1, 2).radices() == Radices{3, 2, 3});
    CHECK_THROWS_WITH_AS(label_net_input_channel(NetworkParams(4, 3, 2), 1, 0, 0),
                         doctest::Contains("valid wavelengths are {1,2}"), ValidityError);
    CHECK_THROWS_AS(label_net_input_channel(p, 3, 0, 0), DomainError);
  }

  TEST_CASE("stage maps") {
    const NetworkParams p(3, 2, 3);
    CHECK(stage1_map(addr(1, 0, 2, {3, 2, 3}), p).to_string() == "012");
    CHECK(stage1_map(addr(0, 0, 0, {3, 2, 3}), p).to_string() == "000");
    CHECK(stage1_map(addr(2, 1, 0, {3, 2, 3}), p) == addr(1, 2, 0, {2, 3, 3}));
    CHECK(stage2_map(addr(0, 1, 2, {2, 3, 3}), p).to_string() == "021");
    CHECK(stage2_map(addr(0, 0, 0, {2, 3, 3}), p).to_string() == "000");
    CHECK(stage2_map(addr(1, 2, 0, {2, 3, 3}), p).to_string() == "102");
    // out of place: a middle address handed to stage 1
    const NetworkParams q(4, 3, 2);
    CHECK_THROWS_AS(stage1_map(addr(0, 0, 0, q.middle_radices()), q), DomainError);
    CHECK_THROWS_AS(stage2_map(addr(0, 0, 0, q.input_radices()), q), DomainError);
  }

  TEST_CASE("stage 2 agrees with routing inside the AWG") {
    // Middle 120 of W(3,2,3) is wavelength (0+2) mod 3 = 2 at input 2 of AWG 1.
    const NetworkParams p(3, 2, 3);
    const AwgSpec spec(3, 3);
    CHECK(awg_wavelength(spec, 2, 0) == 2);
    CHECK(awg_route(spec, 2, 2).port == 0);
    CHECK(stage2_map(addr(1, 2, 0, {2, 3, 3}), p)[1] == 0);
  }

  TEST_CASE("trace examples") {
    const Topology t = build_network(3, 2, 3);
    const RouteTrace r = trace(t, 1, 0, 0);
    CHECK(r.input_addr.to_string() == "102");
    CHECK(r.middle_addr.to_string() == "012");
    CHECK(r.output_addr.to_string() == "021");
    CHECK(r.input_locus == FiberLocus{1, 0, 0});
    CHECK(r.middle_locus == AwgPortLocus{0, 1, 0});
    CHECK(r.output_locus == AwgPortLocus{0, 2, 0});

    const RouteTrace zero = trace(build_network(1, 1, 1), 0, 0, 0);
    CHECK(zero.input_addr.to_string() == "000");
    CHECK(zero.output_addr.to_string() == "000");
    CHECK(zero.output_locus == AwgPortLocus{0, 0, 0});

    const RouteTrace other = trace(t, 0, 1, 1);
    CHECK(other.input_addr.to_string() == "011");
    CHECK(other.middle_addr.to_string() == "101");
    CHECK(other.output_addr.to_string() == "110");
    CHECK(other.output_locus == AwgPortLocus{1, 1, 1});
    CHECK(awg_route(t.awg_spec(), 0, 1).port == 1);
  }

  TEST_CASE("trace errors") {
    const Topology t = build_network(4, 3, 2);
    CHECK_THROWS_AS(trace(t, 4, 0, 0), DomainError);
    CHECK_THROWS_AS(trace(t, 0, 3, 0), DomainError);
    CHECK_THROWS_AS(trace(t, 0, 0, 4), DomainError);
    CHECK_THROWS_AS(trace(t, 0, 0, 2), ValidityError);
  }

  TEST_CASE("network_permutation examples") {
    const Topology t = build_network(3, 2, 3);
    CHECK(network_permutation(t)(addr(1, 0, 2, {3, 2, 3})).to_string() == "021");

    // W(2,1,2) with the middle digit dropped is the 2x2 grating.
    const Topology w212 = build_network(2, 1, 2);
    const auto& perm = network_permutation(w212);
    CHECK(perm.size() == 4);
    const std::vector<std::size_t> grating{0, 2, 1, 3};
    for (std::size_t x3 = 0; x3 < 2; ++x3)
      for (std::size_t x1 = 0; x1 < 2; ++x1) {
        const auto z = perm(addr(x3, 0, x1, {2, 1, 2}));
        CHECK(z[0] == 0);
        CHECK(z[1] * 2 + z[2] == grating[x3 * 2 + x1]);
      }
  }

  TEST_CASE("composite shift and physical simulation agree for g,m,n <= 6") {
    for (std::size_t g = 1; g <= 6; ++g)
      for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t n = 1; n <= 6; ++n) {
          const Topology t = build_network(g, m, n);
          const auto& perm = network_permutation(t);
          const auto sim = oracle::simulate_network(g, m, n);
          REQUIRE(sim.size() == g * m * n);
          for (std::size_t i = 0; i < perm.size(); ++i) {
            const auto x = perm.input(i);
            const auto z = perm(x);
            CHECK(z == left_cyclic_shift(x));
            const auto& expect = sim.at({x[0], x[1], x[2]});
            CHECK(z.digits() == std::vector<std::size_t>(expect.begin(), expect.end()));
          }
        }
  }

  TEST_CASE("traces conserve wavelength and follow exactly one cable") {
    for (auto [g, m, n] : {std::tuple{3, 2, 3}, std::tuple{4, 3, 2}, std::tuple{2, 4, 5}}) {
      const Topology t = build_network(g, m, n);
      for (const RouteTrace& r : t.traces()) {
        CHECK(r.middle_locus.wavelength == r.input_locus.wavelength);
        CHECK(r.output_locus.wavelength == r.input_locus.wavelength);
        std::size_t reaching = 0;
        for (const Cable& c : t.cables())
          if (c.from_group == r.input_locus.group && c.from_port == r.input_locus.port &&
              c.to_awg == r.middle_locus.awg && c.to_input == r.middle_locus.port)
            ++reaching;
        CHECK(reaching == 1);
        CHECK(stage1_map(r.input_addr, t.params()) == r.middle_addr);
        CHECK(stage2_map(r.middle_addr, t.params()) == r.output_addr);
      }
    }
  }

  TEST_CASE("fiber wavelength sets when g > n") {
    const Topology t = build_network(4, 2, 2);
    CHECK(t.fiber_wavelengths(0, 0) == std::vector<std::size_t>{0, 1});
    CHECK(t.fiber_wavelengths(3, 1) == std::vector<std::size_t>{0, 3});
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 2; ++b) CHECK(t.fiber_wavelengths(a, b).size() == 2);
  }
}
