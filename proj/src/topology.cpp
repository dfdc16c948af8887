#include "awgshuffle/topology.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>

#include "awgshuffle/error.hpp"

namespace awgshuffle {
namespace {

void check_index(std::size_t value, std::size_t bound, const char* what) {
  if (value >= bound)
    throw DomainError(std::string(what) + " " + std::to_string(value) +
                      " out of range (must be < " + std::to_string(bound) + ")");
}

std::size_t mod_sub(std::size_t a, std::size_t b, std::size_t modulus) {
  return (a % modulus + modulus - b % modulus) % modulus;
}

std::string join(const std::vector<std::size_t>& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << '}';
  return os.str();
}

// Stage 1 is pure wiring; this is the only place the wiring law lives.
Cable wire(std::size_t group, std::size_t port) { return {group, port, port, group}; }

}  // namespace

NetworkParams::NetworkParams(std::size_t g, std::size_t m, std::size_t n)
    : g_(g), m_(m), n_(n), channels_(0) {
  if (g == 0 || m == 0 || n == 0)
    throw DomainError("network dimensions must be positive, got W(" + std::to_string(g) +
                      "," + std::to_string(m) + "," + std::to_string(n) + ")");
  channels_ = radix_product(Radices{g, m, n});
}

Topology::Topology(NetworkParams params, AwgSpec spec, std::vector<Cable> cables,
                   std::vector<RouteTrace> traces, ChannelPermutation permutation)
    : params_(params),
      awg_spec_(spec),
      cables_(std::move(cables)),
      traces_(std::move(traces)),
      permutation_(std::move(permutation)) {}

const Cable& Topology::cable_from(std::size_t group, std::size_t port) const {
  check_index(group, params_.g(), "input group");
  check_index(port, params_.m(), "group port");
  return cables_[group * params_.m() + port];
}

std::vector<std::size_t> Topology::fiber_wavelengths(std::size_t group, std::size_t port) const {
  const Cable& cable = cable_from(group, port);
  return valid_input_wavelengths(awg_spec_, cable.to_input);
}

Topology build_network(const NetworkParams& params, const BuildOptions& options) {
  if (params.channels() > options.max_channels)
    throw CapacityError("W(" + std::to_string(params.g()) + "," + std::to_string(params.m()) +
                        "," + std::to_string(params.n()) + ") has " +
                        std::to_string(params.channels()) + " channels, above the cap of " +
                        std::to_string(options.max_channels));
  const AwgSpec spec(params.g(), params.n());

  std::vector<Cable> cables;
  cables.reserve(params.g() * params.m());
  for (std::size_t a = 0; a < params.g(); ++a)
    for (std::size_t b = 0; b < params.m(); ++b) cables.push_back(wire(a, b));

  const Radices in_radices = params.input_radices();
  std::vector<std::optional<RouteTrace>> slots(params.channels());
  std::vector<std::size_t> image(params.channels());
  for (const Cable& cable : cables) {
    for (std::size_t w = 0; w < spec.lambda_count(); ++w) {
      const RouteResult route = awg_route(spec, cable.to_input, w);
      if (!route.valid) continue;
      ChannelAddress middle = label_middle_channel(params, cable.to_awg, cable.to_input, w);
      ChannelAddress output = label_net_output_channel(params, cable.to_awg, route.port, w);
      ChannelAddress input({middle[1], middle[0], middle[2]}, in_radices);
      const std::size_t slot = input.index();
      image[slot] = output.index();
      slots[slot] = RouteTrace{{cable.from_group, cable.from_port, w},
                               {cable.to_awg, cable.to_input, w},
                               {cable.to_awg, route.port, w},
                               std::move(input),
                               std::move(middle),
                               std::move(output)};
    }
  }

  std::vector<RouteTrace> traces;
  traces.reserve(slots.size());
  for (auto& slot : slots) {
    if (!slot) throw IntegrityError("construction left a channel unrouted");
    traces.push_back(std::move(*slot));
  }
  ChannelPermutation perm(in_radices, params.output_radices(), std::move(image));
  return Topology(params, spec, std::move(cables), std::move(traces), std::move(perm));
}

Topology build_network(std::size_t g, std::size_t m, std::size_t n) {
  return build_network(NetworkParams(g, m, n));
}

ChannelAddress label_middle_channel(const NetworkParams& params, std::size_t awg,
                                    std::size_t input_port, std::size_t wavelength) {
  check_index(awg, params.m(), "AWG index");
  check_index(input_port, params.g(), "AWG input port");
  check_index(wavelength, params.lambda_count(), "wavelength index");
  const std::size_t bit = mod_sub(wavelength, input_port, params.lambda_count());
  if (bit >= params.n())
    throw ValidityError("wavelength " + std::to_string(wavelength) + " at input " +
                        std::to_string(input_port) + " of AWG " + std::to_string(awg) +
                        " routes past the last output");
  return ChannelAddress({awg, input_port, bit}, params.middle_radices());
}

ChannelAddress label_net_output_channel(const NetworkParams& params, std::size_t awg,
                                        std::size_t output_port, std::size_t wavelength) {
  check_index(awg, params.m(), "AWG index");
  check_index(output_port, params.n(), "AWG output port");
  check_index(wavelength, params.lambda_count(), "wavelength index");
  const std::size_t bit = mod_sub(wavelength, output_port, params.lambda_count());
  if (bit >= params.g())
    throw ValidityError("wavelength " + std::to_string(wavelength) + " never exits output " +
                        std::to_string(output_port) + " of AWG " + std::to_string(awg));
  return ChannelAddress({awg, output_port, bit}, params.output_radices());
}

ChannelAddress label_net_input_channel(const NetworkParams& params, std::size_t group,
                                       std::size_t port, std::size_t wavelength) {
  check_index(group, params.g(), "input group");
  check_index(port, params.m(), "group port");
  check_index(wavelength, params.lambda_count(), "wavelength index");
  const Cable cable = wire(group, port);
  const AwgSpec spec(params.g(), params.n());
  if (!awg_route(spec, cable.to_input, wavelength).valid)
    throw ValidityError("wavelength " + std::to_string(wavelength) + " is not carried on port " +
                        std::to_string(port) + " of group " + std::to_string(group) +
                        "; valid wavelengths are " +
                        join(valid_input_wavelengths(spec, cable.to_input)));
  const ChannelAddress y = label_middle_channel(params, cable.to_awg, cable.to_input, wavelength);
  return ChannelAddress({y[1], y[0], y[2]}, params.input_radices());
}

ChannelAddress stage1_map(const ChannelAddress& x, const NetworkParams& params) {
  require_radices(x, params.input_radices(), "stage1_map");
  return ChannelAddress({x[1], x[0], x[2]}, params.middle_radices());
}

ChannelAddress stage2_map(const ChannelAddress& y, const NetworkParams& params) {
  require_radices(y, params.middle_radices(), "stage2_map");
  return ChannelAddress({y[0], y[2], y[1]}, params.output_radices());
}

RouteTrace trace(const Topology& topology, std::size_t group, std::size_t port,
                 std::size_t wavelength) {
  const ChannelAddress x = label_net_input_channel(topology.params(), group, port, wavelength);
  return topology.traces()[x.index()];
}

const ChannelPermutation& network_permutation(const Topology& topology) {
  return topology.permutation();
}

}  // namespace awgshuffle
