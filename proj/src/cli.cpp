#include "awgshuffle/cli.hpp"

#include <cstdint>
#include <string>

#include <CLI11.hpp>

#include "awgshuffle/analysis.hpp"
#include "awgshuffle/error.hpp"
#include "awgshuffle/io.hpp"
#include "awgshuffle/shuffle.hpp"
#include "awgshuffle/topology.hpp"

namespace awgshuffle {
namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::size_t positive(std::int64_t value, const char* flag) {
  if (value < 1) throw UsageError(std::string(flag) + " must be a positive integer");
  return static_cast<std::size_t>(value);
}

std::size_t non_negative(std::int64_t value, const char* flag) {
  if (value < 0) throw UsageError(std::string(flag) + " must be a non-negative integer");
  return static_cast<std::size_t>(value);
}

struct Dims {
  std::int64_t g = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--g", g, "input groups (AWG inputs)")->required();
    cmd->add_option("--m", m, "ports per group (AWG count)")->required();
    cmd->add_option("--n", n, "wavelengths per fiber (AWG outputs)")->required();
  }
  NetworkParams params() const {
    return NetworkParams(positive(g, "--g"), positive(m, "--m"), positive(n, "--n"));
  }
};

void print_trace(std::ostream& out, const RouteTrace& t) {
  out << "input   group " << t.input_locus.group << " port " << t.input_locus.port << " l"
      << t.input_locus.wavelength << "   X = " << t.input_addr.to_string() << '\n';
  out << "middle  AWG " << t.middle_locus.awg << " input " << t.middle_locus.port << " l"
      << t.middle_locus.wavelength << "   Y = " << t.middle_addr.to_string() << '\n';
  out << "output  AWG " << t.output_locus.awg << " output " << t.output_locus.port << " l"
      << t.output_locus.wavelength << "   Z = " << t.output_addr.to_string() << '\n';
  out << t.input_addr.to_string() << " -> " << t.middle_addr.to_string() << " -> "
      << t.output_addr.to_string() << '\n';
}

void print_report(std::ostream& out, const VerificationReport& r) {
  const NetworkParams& p = r.params;
  out << "W(" << p.g() << ',' << p.m() << ',' << p.n() << "), N = " << p.channels() << '\n';
  for (const CheckResult& c : r.checks)
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << '\n';
  out << r.matching_channels << '/' << r.permutation_size << " channels match S(" << p.g() << ','
      << p.m() * p.n() << ")\n";
  out << (r.passed ? "PASS" : "FAIL") << '\n';
}

void print_tradeoff(std::ostream& out, std::size_t g, std::size_t l,
                    const std::vector<TradeoffRow>& rows) {
  out << "tradeoff for g = " << g << ", l = " << l << " (N = " << g * l << ")\n";
  out << "n,m,wavelengths,awg_size,cables,channels\n";
  for (const TradeoffRow& r : rows) {
    out << r.n << ',' << r.m << ',' << r.metrics.wavelength_count << ',' << r.metrics.awg_inputs
        << 'x' << r.metrics.awg_outputs << ',' << r.metrics.cable_count << ','
        << r.metrics.channel_count;
    if (r.g_not_below_n) out << "  # g >= n";
    out << '\n';
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthesize and verify AWG-based WDM shuffle networks", "awgshuffle"};
  app.require_subcommand(1);

  Dims synth_dims;
  std::string synth_out;
  std::string synth_format = "json";
  auto* synth = app.add_subcommand("synth", "write the W(g,m,n) topology");
  synth_dims.add_to(synth);
  synth->add_option("--out", synth_out, "output path")->required();
  synth->add_option("--format", synth_format, "json or dot");

  Dims verify_dims;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "check W(g,m,n) against the perfect shuffle");
  verify_dims.add_to(verify);
  verify->add_option("--report", report_path, "write the JSON report here");

  Dims trace_dims;
  std::int64_t group = -1, port = -1, lambda = -1;
  bool trace_json_flag = false;
  auto* trace_cmd = app.add_subcommand("trace", "follow one wavelength channel");
  trace_dims.add_to(trace_cmd);
  trace_cmd->add_option("--group", group, "input group")->required();
  trace_cmd->add_option("--port", port, "port within the group")->required();
  trace_cmd->add_option("--lambda", lambda, "wavelength index")->required();
  trace_cmd->add_flag("--json", trace_json_flag, "print the trace as JSON instead");

  std::int64_t tg = 0, tl = 0;
  std::string csv_path;
  auto* tradeoff = app.add_subcommand("tradeoff", "wavelengths vs cables for l = m*n");
  tradeoff->add_option("--g", tg, "input groups")->required();
  tradeoff->add_option("--l", tl, "outputs per group total, l = m*n")->required();
  tradeoff->add_option("--csv", csv_path, "write the table as CSV");

  std::int64_t og = 0, ol = 0;
  auto* oracle = app.add_subcommand("oracle", "print the S(g,l) decimal permutation");
  oracle->add_option("--g", og, "input groups")->required();
  oracle->add_option("--l", ol, "group size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*synth) {
      const ExportFormat format = parse_format(synth_format);
      const Topology topology = build_network(synth_dims.params());
      write_file_atomic(synth_out, serialize_topology(topology, format));
      out << "wrote " << synth_out << '\n';
      return 0;
    }
    if (*verify) {
      const VerificationReport report = verify_shuffle_equivalence(build_network(verify_dims.params()));
      print_report(out, report);
      if (!report_path.empty()) write_file_atomic(report_path, report_to_json(report));
      return report.passed ? 0 : kExitFail;
    }
    if (*trace_cmd) {
      const Topology topology = build_network(trace_dims.params());
      const RouteTrace t = trace(topology, non_negative(group, "--group"),
                                 non_negative(port, "--port"), non_negative(lambda, "--lambda"));
      if (trace_json_flag) out << trace_to_json(t);
      else print_trace(out, t);
      return 0;
    }
    if (*tradeoff) {
      const std::size_t g = positive(tg, "--g");
      const std::size_t l = positive(tl, "--l");
      const auto rows = tradeoff_table(g, l);
      print_tradeoff(out, g, l, rows);
      if (!csv_path.empty()) write_file_atomic(csv_path, tradeoff_to_csv(rows));
      return 0;
    }
    if (*oracle) {
      const ShuffleSpec spec(positive(og, "--g"), positive(ol, "--l"));
      const auto perm = shuffle_perm_decimal(spec);
      for (std::size_t i = 0; i < perm.size(); ++i) out << i << ' ' << perm[i] << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace awgshuffle
