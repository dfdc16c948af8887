#include "awgshuffle/io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "awgshuffle/error.hpp"

namespace awgshuffle {
namespace {

using nlohmann::json;

json address_json(const ChannelAddress& a) {
  return {{"decimal", a.index()}, {"digits", a.digits()}, {"radices", a.radices()},
          {"text", a.to_string()}};
}

json fiber_locus_json(const FiberLocus& l) {
  return {{"group", l.group}, {"port", l.port}, {"wavelength", l.wavelength}};
}

json awg_locus_json(const AwgPortLocus& l) {
  return {{"awg", l.awg}, {"port", l.port}, {"wavelength", l.wavelength}};
}

json trace_json(const RouteTrace& t) {
  return {{"input", address_json(t.input_addr)},
          {"middle", address_json(t.middle_addr)},
          {"output", address_json(t.output_addr)},
          {"wavelength", t.input_locus.wavelength},
          {"loci",
           {{"input", fiber_locus_json(t.input_locus)},
            {"middle", awg_locus_json(t.middle_locus)},
            {"output", awg_locus_json(t.output_locus)}}}};
}

json metadata_json(const Topology& topology) {
  const NetworkParams& p = topology.params();
  return {{"generator", kGeneratorName},
          {"generator_version", kGeneratorVersion},
          {"digit_rendering",
           "most-significant digit first; digits concatenated when every radix <= 10, "
           "dot-separated otherwise"},
          {"decimal_convention", "row-major mixed radix, most-significant digit first"},
          {"cable_count_convention",
           "individual fibers between input groups and AWG bank; 0 when m = 1 because "
           "groups attach directly to the single AWG"},
          {"cable_count", resource_metrics(p.g(), p.m(), p.n()).cable_count}};
}

json topology_json(const Topology& topology) {
  const NetworkParams& p = topology.params();
  const AwgSpec& spec = topology.awg_spec();
  json cables = json::array();
  for (const Cable& c : topology.cables())
    cables.push_back({{"from_group", c.from_group}, {"from_port", c.from_port},
                      {"to_awg", c.to_awg}, {"to_input", c.to_input}});
  json fibers = json::array();
  for (std::size_t a = 0; a < p.g(); ++a)
    for (std::size_t b = 0; b < p.m(); ++b)
      fibers.push_back(
          {{"group", a}, {"port", b}, {"wavelengths", topology.fiber_wavelengths(a, b)}});
  json channels = json::array();
  for (const RouteTrace& t : topology.traces()) channels.push_back(trace_json(t));
  return {{"schema_version", kSchemaVersion},
          {"params", {{"g", p.g()}, {"m", p.m()}, {"n", p.n()}, {"N", p.channels()}}},
          {"awg_bank",
           {{"count", topology.awg_count()},
            {"inputs", spec.inputs()},
            {"outputs", spec.outputs()},
            {"lambda_count", spec.lambda_count()}}},
          {"cables", std::move(cables)},
          {"fibers", std::move(fibers)},
          {"channels", std::move(channels)},
          {"metadata", metadata_json(topology)}};
}

std::string wavelength_label(const std::vector<std::size_t>& wavelengths) {
  std::string label;
  for (std::size_t i = 0; i < wavelengths.size(); ++i)
    label += (i ? "," : "") + std::string("l") + std::to_string(wavelengths[i]);
  return label;
}

// Left-to-right: input groups, then the AWG bank. With m > 1 each edge is a
// stage-1 cable. With m == 1 the groups feed the single AWG directly and the
// edges are drawn dashed as attachments, not cables.
std::string topology_dot(const Topology& topology) {
  const NetworkParams& p = topology.params();
  const bool direct = p.m() == 1;
  std::ostringstream os;
  os << "digraph W_" << p.g() << '_' << p.m() << '_' << p.n() << " {\n";
  os << "  rankdir=LR;\n";
  os << "  label=\"W(" << p.g() << ',' << p.m() << ',' << p.n() << "), N=" << p.channels()
     << "\";\n";
  os << "  subgraph cluster_groups {\n    label=\"input groups\";\n";
  for (std::size_t a = 0; a < p.g(); ++a)
    os << "    grp" << a << " [shape=box, label=\"group " << a << "\"];\n";
  os << "  }\n";
  os << "  subgraph cluster_awgs {\n    label=\"AWG bank\";\n";
  for (std::size_t b = 0; b < p.m(); ++b)
    os << "    awg" << b << " [shape=box3d, label=\"AWG " << b << " (" << p.g() << 'x' << p.n()
       << ")\"];\n";
  os << "  }\n";
  for (const Cable& c : topology.cables()) {
    os << "  grp" << c.from_group << " -> awg" << c.to_awg << " [label=\"port " << c.from_port
       << " -> in " << c.to_input << ": "
       << wavelength_label(topology.fiber_wavelengths(c.from_group, c.from_port)) << '"';
    if (direct) os << ", style=dashed, kind=direct";
    else os << ", kind=cable";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

// Path-tracking accessors for strict schema checks.
struct Cursor {
  const json& node;
  std::string path;

  Cursor at(const char* key) const {
    if (!node.is_object()) throw ParseError(path, "expected an object");
    auto it = node.find(key);
    if (it == node.end()) throw ParseError(path + "." + key, "missing");
    return {*it, path + "." + key};
  }
  Cursor at(std::size_t i) const { return {node[i], path + "[" + std::to_string(i) + "]"}; }
  std::size_t size() const {
    if (!node.is_array()) throw ParseError(path, "expected an array");
    return node.size();
  }
  std::size_t uint() const {
    if (!node.is_number_unsigned()) throw ParseError(path, "expected a non-negative integer");
    return node.get<std::size_t>();
  }
  std::string str() const {
    if (!node.is_string()) throw ParseError(path, "expected a string");
    return node.get<std::string>();
  }
  std::vector<std::size_t> uints() const {
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i).uint();
    return out;
  }
};

ChannelAddress parse_address(const Cursor& c) {
  auto digits = c.at("digits").uints();
  auto radices = c.at("radices").uints();
  try {
    ChannelAddress addr(std::move(digits), std::move(radices));
    if (addr.index() != c.at("decimal").uint())
      throw ParseError(c.path + ".decimal", "does not match digits");
    if (addr.to_string() != c.at("text").str())
      throw ParseError(c.path + ".text", "does not match digits");
    return addr;
  } catch (const DomainError& e) {
    throw ParseError(c.path, e.what());
  }
}

FiberLocus parse_fiber_locus(const Cursor& c) {
  return {c.at("group").uint(), c.at("port").uint(), c.at("wavelength").uint()};
}

AwgPortLocus parse_awg_locus(const Cursor& c) {
  return {c.at("awg").uint(), c.at("port").uint(), c.at("wavelength").uint()};
}

void expect_equal(const json& actual, const json& expected, const std::string& path) {
  if (actual != expected)
    throw IntegrityError(path + ": expected " + expected.dump() + ", found " + actual.dump());
}

}  // namespace

ExportFormat parse_format(std::string_view name) {
  if (name == "json") return ExportFormat::json;
  if (name == "dot") return ExportFormat::dot;
  throw UsageError("unsupported format '" + std::string(name) + "' (expected json or dot)");
}

std::string serialize_topology(const Topology& topology, ExportFormat format) {
  switch (format) {
    case ExportFormat::json:
      return topology_json(topology).dump(2) + "\n";
    case ExportFormat::dot:
      return topology_dot(topology);
  }
  throw UsageError("unsupported format");
}

Topology parse_topology(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("$", e.what());
  }
  const Cursor root{doc, "$"};
  if (root.at("schema_version").str() != kSchemaVersion)
    throw ParseError("$.schema_version", "unsupported schema version");

  const Cursor params = root.at("params");
  const std::size_t g = params.at("g").uint();
  const std::size_t m = params.at("m").uint();
  const std::size_t n = params.at("n").uint();
  std::optional<NetworkParams> resolved;
  try {
    resolved.emplace(g, m, n);
  } catch (const DomainError& e) {
    throw ParseError("$.params", e.what());
  }
  if (params.at("N").uint() != resolved->channels())
    throw IntegrityError("$.params.N: does not equal g*m*n");

  const Cursor bank = root.at("awg_bank");
  const Cursor cables = root.at("cables");
  root.at("fibers").size();
  const Cursor channels = root.at("channels");
  root.at("metadata").at("generator").str();

  // Structural pass over every channel before comparing against a rebuild.
  std::vector<RouteTrace> traces;
  traces.reserve(channels.size());
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const Cursor ch = channels.at(i);
    const Cursor loci = ch.at("loci");
    traces.push_back({parse_fiber_locus(loci.at("input")), parse_awg_locus(loci.at("middle")),
                      parse_awg_locus(loci.at("output")), parse_address(ch.at("input")),
                      parse_address(ch.at("middle")), parse_address(ch.at("output"))});
    ch.at("wavelength").uint();
  }
  for (std::size_t i = 0; i < cables.size(); ++i) {
    const Cursor c = cables.at(i);
    for (const char* key : {"from_group", "from_port", "to_awg", "to_input"}) c.at(key).uint();
  }

  if (traces.size() != resolved->channels())
    throw IntegrityError("$.channels: " + std::to_string(traces.size()) +
                         " entries for N = " + std::to_string(resolved->channels()));
  std::set<ChannelAddress> outputs;
  for (std::size_t i = 0; i < traces.size(); ++i)
    if (!outputs.insert(traces[i].output_addr).second)
      throw IntegrityError("$.channels[" + std::to_string(i) + "].output: duplicate output address " +
                           traces[i].output_addr.to_string());

  Topology rebuilt = build_network(*resolved);
  const json expected = topology_json(rebuilt);
  expect_equal(bank.node, expected["awg_bank"], "$.awg_bank");
  for (const char* key : {"cables", "fibers", "channels"}) {
    const json& have = doc[key];
    const json& want = expected[key];
    if (have.size() != want.size())
      throw IntegrityError(std::string("$.") + key + ": expected " + std::to_string(want.size()) +
                           " entries, found " + std::to_string(have.size()));
    for (std::size_t i = 0; i < want.size(); ++i)
      expect_equal(have[i], want[i], std::string("$.") + key + "[" + std::to_string(i) + "]");
  }
  return rebuilt;
}

std::string report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json entry = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    entry["counterexample"] = c.counterexample ? address_json(*c.counterexample) : json(nullptr);
    checks.push_back(std::move(entry));
  }
  const NetworkParams& p = report.params;
  json doc = {{"schema_version", kSchemaVersion},
              {"params", {{"g", p.g()}, {"m", p.m()}, {"n", p.n()}, {"N", p.channels()}}},
              {"passed", report.passed},
              {"permutation_size", report.permutation_size},
              {"matching_channels", report.matching_channels},
              {"oracle", "S(" + std::to_string(p.g()) + "," + std::to_string(p.m() * p.n()) + ")"},
              {"checks", std::move(checks)}};
  return doc.dump(2) + "\n";
}

std::string trace_to_json(const RouteTrace& trace) { return trace_json(trace).dump(2) + "\n"; }

std::string tradeoff_to_csv(std::span<const TradeoffRow> rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const TradeoffRow& r : rows) {
    const ResourceMetrics& mt = r.metrics;
    os << r.n << ',' << r.m << ',' << mt.wavelength_count << ',' << mt.awg_inputs << ','
       << mt.awg_outputs << ',' << mt.cable_count << ',' << mt.channel_count << '\n';
  }
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

}  // namespace awgshuffle
