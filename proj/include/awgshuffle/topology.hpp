#pragma once

#include <cstddef>
#include <vector>

#include "awgshuffle/address.hpp"
#include "awgshuffle/awg.hpp"
#include "awgshuffle/permutation.hpp"

namespace awgshuffle {

/// Dimensions of W(g, m, n): g input groups of m fibers each, n wavelengths
/// per fiber, m AWGs of size g x n. N = g*m*n channels.
class NetworkParams {
 public:
  NetworkParams(std::size_t g, std::size_t m, std::size_t n);

  std::size_t g() const noexcept { return g_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t channels() const noexcept { return channels_; }
  std::size_t lambda_count() const noexcept { return g_ > n_ ? g_ : n_; }

  Radices input_radices() const { return {g_, m_, n_}; }
  Radices middle_radices() const { return {m_, g_, n_}; }
  Radices output_radices() const { return {m_, n_, g_}; }

  friend bool operator==(const NetworkParams&, const NetworkParams&) = default;

 private:
  std::size_t g_;
  std::size_t m_;
  std::size_t n_;
  std::size_t channels_;
};

/// Port `from_port` of group `from_group` feeds input `to_input` of AWG
/// `to_awg`. The wiring law is to_awg == from_port, to_input == from_group.
struct Cable {
  std::size_t from_group;
  std::size_t from_port;
  std::size_t to_awg;
  std::size_t to_input;

  friend bool operator==(const Cable&, const Cable&) = default;
};

struct FiberLocus {
  std::size_t group;
  std::size_t port;
  std::size_t wavelength;

  friend bool operator==(const FiberLocus&, const FiberLocus&) = default;
};

struct AwgPortLocus {
  std::size_t awg;
  std::size_t port;
  std::size_t wavelength;

  friend bool operator==(const AwgPortLocus&, const AwgPortLocus&) = default;
};

/// One wavelength channel followed from its input fiber, through the cable
/// into an AWG input, to the AWG output it leaves on.
struct RouteTrace {
  FiberLocus input_locus;
  AwgPortLocus middle_locus;
  AwgPortLocus output_locus;
  ChannelAddress input_addr;
  ChannelAddress middle_addr;
  ChannelAddress output_addr;

  friend bool operator==(const RouteTrace&, const RouteTrace&) = default;
};

struct BuildOptions {
  std::size_t max_channels = 1'000'000;
};

/// Immutable W(g, m, n). Every channel is routed physically at construction
/// and the resulting permutation is stored eagerly.
class Topology {
 public:
  const NetworkParams& params() const noexcept { return params_; }
  const AwgSpec& awg_spec() const noexcept { return awg_spec_; }
  std::size_t awg_count() const noexcept { return params_.m(); }
  const std::vector<Cable>& cables() const noexcept { return cables_; }

  /// Cable leaving port `port` of group `group`.
  const Cable& cable_from(std::size_t group, std::size_t port) const;

  /// One trace per channel, ordered by decimal input address.
  const std::vector<RouteTrace>& traces() const noexcept { return traces_; }
  const ChannelPermutation& permutation() const noexcept { return permutation_; }

  /// Wavelengths carried on input fiber (group, port), ascending.
  std::vector<std::size_t> fiber_wavelengths(std::size_t group, std::size_t port) const;

  friend Topology build_network(const NetworkParams& params, const BuildOptions& options);

 private:
  Topology(NetworkParams params, AwgSpec spec, std::vector<Cable> cables,
           std::vector<RouteTrace> traces, ChannelPermutation permutation);

  NetworkParams params_;
  AwgSpec awg_spec_;
  std::vector<Cable> cables_;
  std::vector<RouteTrace> traces_;
  ChannelPermutation permutation_;
};

Topology build_network(const NetworkParams& params, const BuildOptions& options = {});
Topology build_network(std::size_t g, std::size_t m, std::size_t n);

/// (awg, input_port, (j - input_port) mod |lambda|) with radices (m, g, n).
ChannelAddress label_middle_channel(const NetworkParams& params, std::size_t awg,
                                    std::size_t input_port, std::size_t wavelength);

/// (awg, output_port, (k - output_port) mod |lambda|) with radices (m, n, g).
ChannelAddress label_net_output_channel(const NetworkParams& params, std::size_t awg,
                                        std::size_t output_port, std::size_t wavelength);

/// Label of wavelength `wavelength` on port `port` of group `group`: follow
/// the cable, label the middle channel, and swap its two leading digits.
ChannelAddress label_net_input_channel(const NetworkParams& params, std::size_t group,
                                       std::size_t port, std::size_t wavelength);

/// (x3, x2, x1) -> (x2, x3, x1).
ChannelAddress stage1_map(const ChannelAddress& x, const NetworkParams& params);

/// (y3, y2, y1) -> (y3, y1, y2).
ChannelAddress stage2_map(const ChannelAddress& y, const NetworkParams& params);

RouteTrace trace(const Topology& topology, std::size_t group, std::size_t port,
                 std::size_t wavelength);

const ChannelPermutation& network_permutation(const Topology& topology);

}  // namespace awgshuffle
