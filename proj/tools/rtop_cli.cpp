#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rtop/error.hpp"
#include "rtop/io.hpp"
#include "rtop/topology.hpp"

namespace {

int exit_code(rtop::ErrorCode code) {
  switch (code) {
    case rtop::ErrorCode::kImproper:
      return 2;
    case rtop::ErrorCode::kRepairFailed:
      return 3;
    case rtop::ErrorCode::kPrecisionExhausted:
      return 4;
    case rtop::ErrorCode::kParse:
      return 5;
    default:
      return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct AnalyzeArgs {
  std::string input;
  std::string isolated;
  int digits = 10;
  int max_digits = 500;
  std::string json;
  std::string dot;
  std::string svg;
  int refine = 0;
};

int run_analyze(const AnalyzeArgs& args, const CLI::Option* digits_opt, const CLI::Option* isolated_opt) {
  const rtop::InputSpec spec = rtop::parse_input(read_file(args.input));
  rtop::AnalyzeOptions opts;
  opts.max_digits = args.max_digits;
  // Flags override the options block of the input file.
  opts.digits = digits_opt->count() > 0 ? args.digits : spec.digits.value_or(10);
  std::string mode = "numeric";
  if (isolated_opt->count() > 0) {
    mode = args.isolated;
  } else if (spec.isolated) {
    mode = *spec.isolated;
  }
  const auto parsed = rtop::isolated_mode_from_string(mode);
  if (!parsed) throw rtop::Error(rtop::ErrorCode::kParse, "options.isolated: expected off, numeric or certified");
  opts.isolated = *parsed;

  const rtop::Analysis result = rtop::analyze(spec.curve, opts);
  const rtop::TopologyGraph& g = result.graph;
  std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges, digits=" << g.metadata.digits_used << "\n";
  if (opts.isolated != rtop::IsolatedMode::kOff) {
    std::size_t isolated = 0;
    for (const auto& v : g.vertices) isolated += v.kind == rtop::VertexKind::kIsolated ? 1 : 0;
    std::cout << "isolated points: " << isolated << " (" << rtop::to_string(opts.isolated) << ")";
    if (g.metadata.certified_count) std::cout << ", real solutions of the isolation system: " << *g.metadata.certified_count;
    std::cout << "\n";
  }
  for (const auto& t : g.metadata.transforms) std::cout << "transform: " << t << "\n";
  if (!args.json.empty()) write_file(args.json, rtop::emit_json(g));
  if (!args.dot.empty()) write_file(args.dot, rtop::emit_dot(g));
  if (!args.svg.empty()) write_file(args.svg, rtop::render_svg(g, spec.curve, args.refine));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology of real rational plane and space curves"};
  app.require_subcommand(1);
  AnalyzeArgs args;
  CLI::App* analyze = app.add_subcommand("analyze", "Compute the topology graph of a parametrized curve");
  analyze->add_option("input", args.input, "Input JSON file")->required();
  CLI::Option* isolated_opt =
      analyze->add_option("--isolated", args.isolated, "Isolated points: off, numeric or certified")->check(CLI::IsMember({"off", "numeric", "certified"}));
  CLI::Option* digits_opt = analyze->add_option("--digits", args.digits, "Initial working precision in decimal digits")->check(CLI::Range(1, 10000));
  analyze->add_option("--max-digits", args.max_digits, "Precision cap")->check(CLI::Range(1, 100000));
  analyze->add_option("--json", args.json, "Write the graph as JSON");
  analyze->add_option("--dot", args.dot, "Write the graph as DOT");
  analyze->add_option("--svg", args.svg, "Write an SVG drawing");
  analyze->add_option("--refine", args.refine, "Extra curve points per bounded edge in the SVG")->check(CLI::NonNegativeNumber);
  CLI11_PARSE(app, argc, argv);

  try {
    return run_analyze(args, digits_opt, isolated_opt);
  } catch (const rtop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
