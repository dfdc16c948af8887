#include "awgshuffle/awg.hpp"

#include <algorithm>
#include <string>

#include "awgshuffle/error.hpp"

namespace awgshuffle {
namespace {

std::size_t mod_sub(std::size_t a, std::size_t b, std::size_t modulus) {
  return (a % modulus + modulus - b % modulus) % modulus;
}

void check_index(std::size_t value, std::size_t bound, const char* what) {
  if (value >= bound)
    throw DomainError(std::string(what) + " " + std::to_string(value) +
                      " out of range (must be < " + std::to_string(bound) + ")");
}

}  // namespace

AwgSpec::AwgSpec(std::size_t inputs, std::size_t outputs)
    : inputs_(inputs), outputs_(outputs), lambda_count_(std::max(inputs, outputs)) {
  if (inputs == 0 || outputs == 0)
    throw DomainError("AWG dimensions must be positive, got " + std::to_string(inputs) +
                      "x" + std::to_string(outputs));
}

RouteResult awg_route(const AwgSpec& spec, std::size_t p, std::size_t i) {
  check_index(p, spec.inputs(), "input port");
  check_index(i, spec.lambda_count(), "wavelength index");
  const std::size_t q = mod_sub(i, p, spec.lambda_count());
  return {q, q < spec.outputs()};
}

std::size_t awg_wavelength(const AwgSpec& spec, std::size_t p, std::size_t q) {
  check_index(p, spec.inputs(), "input port");
  check_index(q, spec.outputs(), "output port");
  return (p + q) % spec.lambda_count();
}

std::vector<std::size_t> valid_input_wavelengths(const AwgSpec& spec, std::size_t p) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < spec.outputs(); ++q) out.push_back(awg_wavelength(spec, p, q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> valid_output_wavelengths(const AwgSpec& spec, std::size_t q) {
  check_index(q, spec.outputs(), "output port");
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < spec.inputs(); ++p) out.push_back(awg_wavelength(spec, p, q));
  std::sort(out.begin(), out.end());
  return out;
}

ChannelAddress label_input_channel(const AwgSpec& spec, std::size_t p, std::size_t i) {
  const RouteResult route = awg_route(spec, p, i);
  if (!route.valid)
    throw ValidityError("wavelength " + std::to_string(i) + " at input " + std::to_string(p) +
                        " is dead: it routes to port " + std::to_string(route.port) +
                        " of a " + std::to_string(spec.outputs()) + "-output AWG");
  return ChannelAddress({p, route.port}, {spec.inputs(), spec.outputs()});
}

ChannelAddress label_output_channel(const AwgSpec& spec, std::size_t q, std::size_t k) {
  check_index(q, spec.outputs(), "output port");
  check_index(k, spec.lambda_count(), "wavelength index");
  const std::size_t source = mod_sub(k, q, spec.lambda_count());
  if (source >= spec.inputs())
    throw ValidityError("wavelength " + std::to_string(k) + " at output " + std::to_string(q) +
                        " has no originating input (would be input " +
                        std::to_string(source) + ")");
  return ChannelAddress({q, source}, {spec.outputs(), spec.inputs()});
}

AwgLocus decode_input_channel(const AwgSpec& spec, const ChannelAddress& x) {
  require_radices(x, {spec.inputs(), spec.outputs()}, "decode_input_channel");
  return {Side::input, x[0], awg_wavelength(spec, x[0], x[1])};
}

AwgLocus decode_output_channel(const AwgSpec& spec, const ChannelAddress& z) {
  require_radices(z, {spec.outputs(), spec.inputs()}, "decode_output_channel");
  return {Side::output, z[0], awg_wavelength(spec, z[1], z[0])};
}

ChannelPermutation awg_permutation(const AwgSpec& spec) {
  const Radices domain{spec.inputs(), spec.outputs()};
  const Radices codomain{spec.outputs(), spec.inputs()};
  std::vector<std::size_t> image(spec.inputs() * spec.outputs());
  for (std::size_t p = 0; p < spec.inputs(); ++p) {
    for (std::size_t i = 0; i < spec.lambda_count(); ++i) {
      const RouteResult route = awg_route(spec, p, i);
      if (!route.valid) continue;
      const ChannelAddress in = label_input_channel(spec, p, i);
      const ChannelAddress out = label_output_channel(spec, route.port, i);
      image[in.index()] = out.index();
    }
  }
  return ChannelPermutation(domain, codomain, std::move(image));
}

}  // namespace awgshuffle
