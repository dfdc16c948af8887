#pragma once

// Test-only brute-force references. These deliberately avoid the library's
// routing and labeling code: routing is found by searching for the output
// port whose wavelength matches, and addresses are plain integer tuples.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

/// Output port of an inputs x outputs grating reached by wavelength `w` at
/// input `p`, found by scanning all ports: port q carries wavelength
/// (p + q) mod L from input p.
inline std::optional<std::size_t> scan_route(std::size_t inputs, std::size_t outputs,
                                             std::size_t p, std::size_t w) {
  const std::size_t lambdas = inputs > outputs ? inputs : outputs;
  for (std::size_t q = 0; q < lambdas; ++q)
    if ((p + q) % lambdas == w) return q < outputs ? std::optional(q) : std::nullopt;
  return std::nullopt;
}

/// Entire routing table as (p, w) -> q for every live pair.
inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> routing_table(
    std::size_t inputs, std::size_t outputs) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> table;
  const std::size_t lambdas = inputs > outputs ? inputs : outputs;
  for (std::size_t p = 0; p < inputs; ++p)
    for (std::size_t w = 0; w < lambdas; ++w)
      if (auto q = scan_route(inputs, outputs, p, w)) table[{p, w}] = *q;
  return table;
}

/// Decimal S(g, l) built by enumerating port pairs: output group z2 = x1
/// receives member z1 = x2.
inline std::vector<std::size_t> shuffle_decimal(std::size_t g, std::size_t l) {
  std::vector<std::size_t> perm(g * l);
  std::size_t in = 0;
  for (std::size_t x2 = 0; x2 < g; ++x2)
    for (std::size_t x1 = 0; x1 < l; ++x1, ++in) {
      std::size_t out = 0;
      for (std::size_t z2 = 0; z2 < l; ++z2)
        for (std::size_t z1 = 0; z1 < g; ++z1, ++out)
          if (z2 == x1 && z1 == x2) perm[in] = out;
    }
  return perm;
}

using Digits3 = std::array<std::size_t, 3>;

/// Physical simulation of W(g, m, n): each live (group, port, wavelength)
/// is pushed through the cross-connect and an AWG; returns
/// input digits -> output digits with addresses derived from the loci.
inline std::map<Digits3, Digits3> simulate_network(std::size_t g, std::size_t m, std::size_t n) {
  std::map<Digits3, Digits3> result;
  const std::size_t lambdas = g > n ? g : n;
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t w = 0; w < lambdas; ++w) {
        // port b of group a lands on input a of AWG b
        auto q = scan_route(g, n, a, w);
        if (!q) continue;
        // wavelength bit of the input channel: the output port it will reach
        const Digits3 x{a, b, *q};
        // output channel: AWG b, port q, and the input port w came from
        std::size_t src = 0;
        while ((src + *q) % lambdas != w) ++src;
        result[x] = Digits3{b, *q, src};
      }
  return result;
}

}  // namespace oracle
