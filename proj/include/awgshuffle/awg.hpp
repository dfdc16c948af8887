#pragma once

#include <cstddef>
#include <vector>

#include "awgshuffle/address.hpp"
#include "awgshuffle/permutation.hpp"

namespace awgshuffle {

/// A g x l cyclic wavelength router. The wavelength set is indexed
/// 0..lambda_count-1 with lambda_count = max(inputs, outputs).
class AwgSpec {
 public:
  AwgSpec(std::size_t inputs, std::size_t outputs);

  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t outputs() const noexcept { return outputs_; }
  std::size_t lambda_count() const noexcept { return lambda_count_; }

  friend bool operator==(const AwgSpec&, const AwgSpec&) = default;

 private:
  std::size_t inputs_;
  std::size_t outputs_;
  std::size_t lambda_count_;
};

enum class Side { input, output };

struct AwgLocus {
  Side side;
  std::size_t port;
  std::size_t wavelength;

  friend bool operator==(const AwgLocus&, const AwgLocus&) = default;
};

/// Output port reached by a wavelength. `valid` is false when the port index
/// is past the last physical output, i.e. the wavelength is dead at that input.
struct RouteResult {
  std::size_t port;
  bool valid;

  friend bool operator==(const RouteResult&, const RouteResult&) = default;
};

/// q = (i - p) mod |lambda|.
RouteResult awg_route(const AwgSpec& spec, std::size_t p, std::size_t i);

/// i = (p + q) mod |lambda|, the wavelength that carries input p to output q.
std::size_t awg_wavelength(const AwgSpec& spec, std::size_t p, std::size_t q);

/// Wavelengths at input p that land on a physical output, ascending.
std::vector<std::size_t> valid_input_wavelengths(const AwgSpec& spec, std::size_t p);

/// Wavelengths arriving at output q, ascending.
std::vector<std::size_t> valid_output_wavelengths(const AwgSpec& spec, std::size_t q);

/// (p, (i - p) mod |lambda|) with radices (inputs, outputs).
ChannelAddress label_input_channel(const AwgSpec& spec, std::size_t p, std::size_t i);

/// (q, (k - q) mod |lambda|) with radices (outputs, inputs).
ChannelAddress label_output_channel(const AwgSpec& spec, std::size_t q, std::size_t k);

AwgLocus decode_input_channel(const AwgSpec& spec, const ChannelAddress& x);
AwgLocus decode_output_channel(const AwgSpec& spec, const ChannelAddress& z);

/// Map from every valid input channel to the output channel it reaches,
/// computed by routing each (port, wavelength) pair through the grating.
ChannelPermutation awg_permutation(const AwgSpec& spec);

}  // namespace awgshuffle
