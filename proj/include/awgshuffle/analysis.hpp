#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "awgshuffle/address.hpp"
#include "awgshuffle/permutation.hpp"
#include "awgshuffle/topology.hpp"

namespace awgshuffle {

struct ResourceMetrics {
  std::size_t wavelength_count;
  std::size_t awg_count;
  std::size_t awg_inputs;
  std::size_t awg_outputs;
  /// Individual fibers between the groups and the AWG bank; 0 when m == 1
  /// because the groups then attach directly to the single AWG.
  std::size_t cable_count;
  std::size_t channel_count;

  friend bool operator==(const ResourceMetrics&, const ResourceMetrics&) = default;
};

ResourceMetrics resource_metrics(std::size_t g, std::size_t m, std::size_t n);

struct TradeoffRow {
  std::size_t n;
  std::size_t m;
  ResourceMetrics metrics;
  /// g >= n: outside the g < n regime the tradeoff is usually stated for.
  /// The construction is still valid.
  bool g_not_below_n;
};

/// One row per divisor n of l (m = l / n), n ascending.
std::vector<TradeoffRow> tradeoff_table(std::size_t g, std::size_t l);

struct CheckResult {
  std::string name;
  bool passed;
  /// First failing input channel in address order.
  std::optional<ChannelAddress> counterexample;
  std::string detail;
};

struct VerificationReport {
  NetworkParams params;
  bool passed;
  std::vector<CheckResult> checks;
  std::size_t permutation_size;
  /// Channels whose image agrees with the shuffle oracle.
  std::size_t matching_channels;
};

/// Passes iff every codomain address is hit exactly once.
CheckResult check_bijectivity(const ChannelPermutation& perm);

/// Compares the topology's permutation to left_cyclic_shift on every channel.
CheckResult check_oracle_agreement(const Topology& topology, std::size_t* matching = nullptr);

/// Wavelength constancy, cable law, and stage-map agreement for every trace.
CheckResult check_trace_consistency(const Topology& topology);

enum class FiberKind { input, awg_output };

struct WavelengthConflict {
  FiberKind kind;
  /// (group, port) for input fibers, (awg, output port) for AWG outputs.
  std::size_t owner;
  std::size_t port;
  std::size_t wavelength;
  ChannelAddress first;
  ChannelAddress second;
};

std::vector<WavelengthConflict> check_wavelength_conflicts(std::span<const RouteTrace> traces);
std::vector<WavelengthConflict> check_wavelength_conflicts(const Topology& topology);

CheckResult check_conflict_freedom(const Topology& topology);

VerificationReport verify_shuffle_equivalence(const Topology& topology);
VerificationReport verify_shuffle_equivalence(std::size_t g, std::size_t m, std::size_t n,
                                              const BuildOptions& options = {});

}  // namespace awgshuffle
