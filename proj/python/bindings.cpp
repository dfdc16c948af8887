#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "awgshuffle/analysis.hpp"
#include "awgshuffle/awg.hpp"
#include "awgshuffle/error.hpp"
#include "awgshuffle/io.hpp"
#include "awgshuffle/shuffle.hpp"
#include "awgshuffle/topology.hpp"

namespace py = pybind11;
using namespace awgshuffle;

PYBIND11_MODULE(_core, m) {
  m.doc() = "AWG-based WDM shuffle network synthesis and verification";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ValidityError>(m, "ValidityError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IntegrityError>(m, "IntegrityError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  py::class_<ChannelAddress>(m, "ChannelAddress")
      .def(py::init<std::vector<std::size_t>, Radices>(), py::arg("digits"), py::arg("radices"))
      .def_static("from_index", &ChannelAddress::from_index, py::arg("index"), py::arg("radices"))
      .def_property_readonly("digits", &ChannelAddress::digits)
      .def_property_readonly("radices", &ChannelAddress::radices)
      .def_property_readonly("index", &ChannelAddress::index)
      .def("__str__", &ChannelAddress::to_string)
      .def("__repr__", [](const ChannelAddress& a) { return "ChannelAddress('" + a.to_string() + "')"; })
      .def(py::self == py::self)
      .def("__hash__", [](const ChannelAddress& a) {
        return py::hash(py::make_tuple(py::cast(a.digits()), py::cast(a.radices())));
      });

  py::class_<AwgSpec>(m, "AwgSpec")
      .def(py::init<std::size_t, std::size_t>(), py::arg("inputs"), py::arg("outputs"))
      .def_property_readonly("inputs", &AwgSpec::inputs)
      .def_property_readonly("outputs", &AwgSpec::outputs)
      .def_property_readonly("lambda_count", &AwgSpec::lambda_count);

  py::class_<RouteResult>(m, "RouteResult")
      .def_readonly("port", &RouteResult::port)
      .def_readonly("valid", &RouteResult::valid);

  m.def("awg_route", &awg_route, py::arg("spec"), py::arg("p"), py::arg("i"));
  m.def("awg_wavelength", &awg_wavelength, py::arg("spec"), py::arg("p"), py::arg("q"));
  m.def("label_input_channel", &label_input_channel, py::arg("spec"), py::arg("p"), py::arg("i"));
  m.def("label_output_channel", &label_output_channel, py::arg("spec"), py::arg("q"), py::arg("k"));
  m.def("awg_permutation", [](const AwgSpec& spec) {
    const auto perm = awg_permutation(spec);
    return std::vector<std::size_t>(perm.images().begin(), perm.images().end());
  }, py::arg("spec"), "decimal image of every input channel");

  m.def("shuffle_perm_decimal", [](std::size_t g, std::size_t l) {
    return shuffle_perm_decimal(ShuffleSpec(g, l));
  }, py::arg("g"), py::arg("l"));
  m.def("left_cyclic_shift", &left_cyclic_shift, py::arg("address"));

  py::class_<NetworkParams>(m, "NetworkParams")
      .def(py::init<std::size_t, std::size_t, std::size_t>(), py::arg("g"), py::arg("m"), py::arg("n"))
      .def_property_readonly("g", &NetworkParams::g)
      .def_property_readonly("m", &NetworkParams::m)
      .def_property_readonly("n", &NetworkParams::n)
      .def_property_readonly("N", &NetworkParams::channels);

  py::class_<Cable>(m, "Cable")
      .def_readonly("from_group", &Cable::from_group)
      .def_readonly("from_port", &Cable::from_port)
      .def_readonly("to_awg", &Cable::to_awg)
      .def_readonly("to_input", &Cable::to_input);

  py::class_<RouteTrace>(m, "RouteTrace")
      .def_readonly("input_addr", &RouteTrace::input_addr)
      .def_readonly("middle_addr", &RouteTrace::middle_addr)
      .def_readonly("output_addr", &RouteTrace::output_addr)
      .def_property_readonly("wavelength", [](const RouteTrace& t) { return t.input_locus.wavelength; })
      .def_property_readonly("middle_locus", [](const RouteTrace& t) {
        return py::make_tuple(t.middle_locus.awg, t.middle_locus.port, t.middle_locus.wavelength);
      })
      .def_property_readonly("output_locus", [](const RouteTrace& t) {
        return py::make_tuple(t.output_locus.awg, t.output_locus.port, t.output_locus.wavelength);
      });

  py::class_<Topology>(m, "Topology")
      .def_property_readonly("params", &Topology::params)
      .def_property_readonly("awg_spec", &Topology::awg_spec)
      .def_property_readonly("cables", &Topology::cables)
      .def("fiber_wavelengths", &Topology::fiber_wavelengths, py::arg("group"), py::arg("port"))
      .def("permutation", [](const Topology& t) {
        const auto& perm = t.permutation();
        return std::vector<std::size_t>(perm.images().begin(), perm.images().end());
      });

  m.def("build_network", [](std::size_t g, std::size_t mm, std::size_t n, std::size_t max_channels) {
    return build_network(NetworkParams(g, mm, n), BuildOptions{max_channels});
  }, py::arg("g"), py::arg("m"), py::arg("n"), py::arg("max_channels") = BuildOptions{}.max_channels);
  m.def("trace", &trace, py::arg("topology"), py::arg("group"), py::arg("port"), py::arg("wavelength"));

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("counterexample", &CheckResult::counterexample)
      .def_readonly("detail", &CheckResult::detail);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("passed", &VerificationReport::passed)
      .def_readonly("checks", &VerificationReport::checks)
      .def_readonly("permutation_size", &VerificationReport::permutation_size)
      .def_readonly("matching_channels", &VerificationReport::matching_channels);

  py::class_<BuildOptions>(m, "BuildOptions")
      .def(py::init<>())
      .def_readwrite("max_channels", &BuildOptions::max_channels);

  m.def("verify_shuffle_equivalence",
        py::overload_cast<std::size_t, std::size_t, std::size_t, const BuildOptions&>(
            &verify_shuffle_equivalence),
        py::arg("g"), py::arg("m"), py::arg("n"), py::arg("options") = BuildOptions{});

  py::class_<ResourceMetrics>(m, "ResourceMetrics")
      .def_readonly("wavelength_count", &ResourceMetrics::wavelength_count)
      .def_readonly("awg_count", &ResourceMetrics::awg_count)
      .def_readonly("awg_inputs", &ResourceMetrics::awg_inputs)
      .def_readonly("awg_outputs", &ResourceMetrics::awg_outputs)
      .def_readonly("cable_count", &ResourceMetrics::cable_count)
      .def_readonly("channel_count", &ResourceMetrics::channel_count);

  py::class_<TradeoffRow>(m, "TradeoffRow")
      .def_readonly("n", &TradeoffRow::n)
      .def_readonly("m", &TradeoffRow::m)
      .def_readonly("metrics", &TradeoffRow::metrics)
      .def_readonly("g_not_below_n", &TradeoffRow::g_not_below_n);

  m.def("resource_metrics", &resource_metrics, py::arg("g"), py::arg("m"), py::arg("n"));
  m.def("tradeoff_table", &tradeoff_table, py::arg("g"), py::arg("l"));
  m.def("tradeoff_to_csv", [](const std::vector<TradeoffRow>& rows) { return tradeoff_to_csv(rows); });

  m.def("serialize_topology", [](const Topology& t, const std::string& format) {
    return serialize_topology(t, parse_format(format));
  }, py::arg("topology"), py::arg("format") = "json");
  m.def("parse_topology", [](const std::string& text) { return parse_topology(text); }, py::arg("text"));
  m.def("report_to_json", &report_to_json, py::arg("report"));
}
