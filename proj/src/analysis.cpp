#include "awgshuffle/analysis.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "awgshuffle/shuffle.hpp"

namespace awgshuffle {

ResourceMetrics resource_metrics(std::size_t g, std::size_t m, std::size_t n) {
  const NetworkParams params(g, m, n);
  return {params.lambda_count(), m, g, n, m == 1 ? 0 : g * m, params.channels()};
}

std::vector<TradeoffRow> tradeoff_table(std::size_t g, std::size_t l) {
  std::vector<TradeoffRow> rows;
  for (std::size_t n = 1; n <= l; ++n) {
    if (l % n != 0) continue;
    const std::size_t m = l / n;
    rows.push_back({n, m, resource_metrics(g, m, n), g >= n});
  }
  return rows;
}

CheckResult check_bijectivity(const ChannelPermutation& perm) {
  CheckResult result{"bijectivity", true, std::nullopt, {}};
  const std::size_t range = radix_product(perm.codomain_radices());
  std::vector<std::size_t> first_source(range, perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const std::size_t target = perm.image(i);
    if (first_source[target] != perm.size()) {
      result.passed = false;
      result.counterexample = perm.input(i);
      result.detail = "output " +
                      ChannelAddress::from_index(target, perm.codomain_radices()).to_string() +
                      " is also reached from " + perm.input(first_source[target]).to_string();
      return result;
    }
    first_source[target] = i;
  }
  for (std::size_t t = 0; t < range; ++t) {
    if (first_source[t] == perm.size()) {
      result.passed = false;
      result.detail = "output " +
                      ChannelAddress::from_index(t, perm.codomain_radices()).to_string() +
                      " is never reached";
      return result;
    }
  }
  result.detail = std::to_string(perm.size()) + " channels, each output hit once";
  return result;
}

CheckResult check_oracle_agreement(const Topology& topology, std::size_t* matching) {
  CheckResult result{"shuffle_equivalence", true, std::nullopt, {}};
  const ChannelPermutation& perm = network_permutation(topology);
  std::size_t agree = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const ChannelAddress x = perm.input(i);
    const ChannelAddress expected = left_cyclic_shift(x);
    const ChannelAddress actual = perm(x);
    if (actual == expected) {
      ++agree;
    } else if (result.passed) {
      result.passed = false;
      result.counterexample = x;
      result.detail = x.to_string() + " reaches " + actual.to_string() + ", shuffle gives " +
                      expected.to_string();
    }
  }
  if (matching) *matching = agree;
  if (result.passed)
    result.detail = std::to_string(agree) + "/" + std::to_string(perm.size()) +
                    " channels match the left cyclic shift";
  return result;
}

CheckResult check_trace_consistency(const Topology& topology) {
  CheckResult result{"trace_consistency", true, std::nullopt, {}};
  const NetworkParams& params = topology.params();
  auto fail = [&](const RouteTrace& t, std::string why) {
    result.passed = false;
    result.counterexample = t.input_addr;
    result.detail = t.input_addr.to_string() + ": " + std::move(why);
    return result;
  };
  for (const RouteTrace& t : topology.traces()) {
    const std::size_t w = t.input_locus.wavelength;
    if (t.middle_locus.wavelength != w || t.output_locus.wavelength != w)
      return fail(t, "wavelength changes along the path");
    const Cable& cable = topology.cable_from(t.input_locus.group, t.input_locus.port);
    if (cable.to_awg != t.middle_locus.awg || cable.to_input != t.middle_locus.port)
      return fail(t, "middle locus is not at the end of the input cable");
    if (t.output_locus.awg != t.middle_locus.awg)
      return fail(t, "channel leaves a different AWG than it entered");
    if (stage1_map(t.input_addr, params) != t.middle_addr)
      return fail(t, "stage-1 digit swap disagrees with the wiring");
    if (stage2_map(t.middle_addr, params) != t.output_addr)
      return fail(t, "stage-2 digit swap disagrees with AWG routing");
    if (network_permutation(topology)(t.input_addr) != t.output_addr)
      return fail(t, "stored permutation disagrees with the trace");
  }
  result.detail = std::to_string(topology.traces().size()) + " traces consistent";
  return result;
}

std::vector<WavelengthConflict> check_wavelength_conflicts(std::span<const RouteTrace> traces) {
  std::vector<WavelengthConflict> conflicts;
  // (kind, owner, port, wavelength) -> first channel seen.
  std::map<std::tuple<int, std::size_t, std::size_t, std::size_t>, const RouteTrace*> seen;
  auto visit = [&](FiberKind kind, std::size_t owner, std::size_t port, std::size_t w,
                   const RouteTrace& t) {
    auto [it, inserted] = seen.emplace(std::tuple(static_cast<int>(kind), owner, port, w), &t);
    if (!inserted)
      conflicts.push_back({kind, owner, port, w, it->second->input_addr, t.input_addr});
  };
  for (const RouteTrace& t : traces) {
    visit(FiberKind::input, t.input_locus.group, t.input_locus.port, t.input_locus.wavelength, t);
    visit(FiberKind::awg_output, t.output_locus.awg, t.output_locus.port,
          t.output_locus.wavelength, t);
  }
  return conflicts;
}

std::vector<WavelengthConflict> check_wavelength_conflicts(const Topology& topology) {
  return check_wavelength_conflicts(topology.traces());
}

CheckResult check_conflict_freedom(const Topology& topology) {
  CheckResult result{"wavelength_conflicts", true, std::nullopt, {}};
  const auto conflicts = check_wavelength_conflicts(topology);
  if (!conflicts.empty()) {
    const WavelengthConflict& c = conflicts.front();
    result.passed = false;
    result.counterexample = c.second;
    result.detail = std::string(c.kind == FiberKind::input ? "input fiber " : "AWG output ") +
                    std::to_string(c.owner) + "/" + std::to_string(c.port) +
                    " carries wavelength " + std::to_string(c.wavelength) + " for both " +
                    c.first.to_string() + " and " + c.second.to_string();
    return result;
  }
  result.detail = "no fiber carries a wavelength twice";
  return result;
}

VerificationReport verify_shuffle_equivalence(const Topology& topology) {
  std::size_t matching = 0;
  VerificationReport report{topology.params(), true, {}, network_permutation(topology).size(), 0};
  report.checks.push_back(check_oracle_agreement(topology, &matching));
  report.checks.push_back(check_bijectivity(network_permutation(topology)));
  report.checks.push_back(check_conflict_freedom(topology));
  report.checks.push_back(check_trace_consistency(topology));
  report.matching_channels = matching;
  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.passed; });
  return report;
}

VerificationReport verify_shuffle_equivalence(std::size_t g, std::size_t m, std::size_t n,
                                              const BuildOptions& options) {
  return verify_shuffle_equivalence(build_network(NetworkParams(g, m, n), options));
}

}  // namespace awgshuffle
