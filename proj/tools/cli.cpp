#include "cli.hpp"

#include <CLI11.hpp>
#include <icurve/construct.hpp>
#include <icurve/curve_file.hpp>
#include <icurve/splitmix.hpp>
#include <icurve/svg.hpp>
#include <icurve/whitney.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>

namespace icurve::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json report_json(const WhitneyReport& r, bool perturbed) {
  ordered_json j;
  j["index"] = r.index;
  j["mu"] = r.base.mu;
  j["base"] = {{"param", r.base.param}, {"x", r.base.location.x}, {"y", r.base.location.y}};
  j["n_plus"] = r.n_plus;
  j["n_minus"] = r.n_minus;
  j["total"] = r.total();
  j["identity_holds"] = r.identity_holds;
  j["candidate_genus"] = r.candidate_genus ? ordered_json(*r.candidate_genus) : ordered_json();
  const auto& bc = r.boundary_conditions;
  j["boundary_conditions"] = {{"index_is_1_minus_2g", bc.index_is_1_minus_2g},
                              {"mu_is_plus_one", bc.mu_is_plus_one},
                              {"first_intersection_positive", bc.first_intersection_positive},
                              {"count_at_least_2g_plus_2", bc.count_at_least_2g_plus_2}};
  j["intersections"] = ordered_json::array();
  for (const auto& s : r.intersections) {
    j["intersections"].push_back({{"t1", s.base.t1},
                                  {"t2", s.base.t2},
                                  {"x", s.base.point.x},
                                  {"y", s.base.point.y},
                                  {"sign", s.sign},
                                  {"first_visit_param", s.first_visit_param}});
  }
  j["perturbed"] = perturbed;
  return j;
}

void print_table(const WhitneyReport& r, bool perturbed, std::ostream& out) {
  auto row = [&](const char* name, const std::string& value) {
    out << std::left << std::setw(30) << name << value << '\n';
  };
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  row("index", std::to_string(r.index));
  row("mu", r.base.mu > 0 ? "+1" : "-1");
  row("N+", std::to_string(r.n_plus));
  row("N-", std::to_string(r.n_minus));
  row("self-intersections", std::to_string(r.total()));
  row("whitney identity", yes_no(r.identity_holds));
  row("candidate genus", r.candidate_genus ? std::to_string(*r.candidate_genus) : "-");
  if (r.candidate_genus) {
    const auto& bc = r.boundary_conditions;
    row("  index = 1 - 2g", yes_no(bc.index_is_1_minus_2g));
    row("  mu = +1", yes_no(bc.mu_is_plus_one));
    row("  first crossing positive", yes_no(bc.first_intersection_positive));
    row("  crossings >= 2g + 2", yes_no(bc.count_at_least_2g_plus_2));
  }
  if (perturbed) row("note", "vertices were jittered before analysis");
}

// Moves every vertex by at most `magnitude` in each coordinate.
std::vector<Point2> jitter(std::vector<Point2> vertices, std::uint64_t seed, double magnitude) {
  SplitMix64 rng(seed);
  for (Point2& p : vertices) {
    p.x += magnitude * rng.next_signed();
    p.y += magnitude * rng.next_signed();
  }
  return vertices;
}

std::string genericity_name(const GenericityError& e) { return std::string(to_string(e.kind())); }

int cmd_analyze(const std::string& path, bool as_json, std::optional<std::uint64_t> perturb,
                std::ostream& out, std::ostream& err) {
  const CurveFile file = read_curve_file(path);
  auto attempt = [](const std::vector<Point2>& v) {
    const ClosedCurve curve = ClosedCurve::from_vertices(v);
    return analyze(curve);
  };
  WhitneyReport report;
  bool perturbed = false;
  try {
    report = attempt(file.vertices);
  } catch (const GenericityError& e) {
    if (!perturb) throw;
    err << "analyze: " << e.what() << "; retrying with jitter seed " << *perturb << '\n';
    report = attempt(jitter(file.vertices, *perturb, 10.0 * Tolerances{}.separation));
    perturbed = true;
  }
  if (as_json) {
    out << report_json(report, perturbed).dump(2) << '\n';
  } else {
    print_table(report, perturbed, out);
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  const CurveFile file = read_curve_file(path);
  if (auto e = check_structure(file.vertices)) {
    out << "FAIL " << genericity_name(*e) << ": " << e->what() << '\n';
    return kFailed;
  }
  const ClosedCurve curve = ClosedCurve::from_vertices(file.vertices);
  if (auto e = validate(curve)) {
    out << "FAIL " << genericity_name(*e) << ": " << e->what() << '\n';
    return kFailed;
  }
  const WhitneyReport r = analyze(curve);
  if (!r.identity_holds) {
    out << "FAIL identity_holds: index " << r.index << " != mu + N+ - N- = " << r.base.mu << " + "
        << r.n_plus << " - " << r.n_minus << '\n';
    return kFailed;
  }
  out << "OK index=" << r.index << " mu=" << r.base.mu << " N+=" << r.n_plus
      << " N-=" << r.n_minus << '\n';
  return kOk;
}

int cmd_generate(int genus, const std::string& path, const std::string& svg, std::ostream& out) {
  const ClosedCurve curve = minimal_curve(genus);
  write_curve(curve, path, {{"genus", std::to_string(genus)}, {"generator", "\"minimal_curve\""}});
  if (!svg.empty()) {
    const WhitneyReport r = analyze(curve);
    write_svg(curve, &r, svg);
  }
  out << "wrote " << path << " (" << curve.size() << " vertices)\n";
  return kOk;
}

int cmd_random(const RandomCurveSpec& spec, const std::string& path, std::ostream& out) {
  const ClosedCurve curve = random_curve(spec);
  write_curve(curve, path,
              {{"generator", "\"random_curve\""},
               {"seed", std::to_string(spec.seed)},
               {"modes", std::to_string(spec.modes)},
               {"samples", std::to_string(spec.samples)},
               {"decay", nlohmann::json(spec.decay).dump()}});
  out << "wrote " << path << " (" << curve.size() << " vertices)\n";
  return kOk;
}

int cmd_render(const std::string& path, const std::string& svg, std::ostream& out,
               std::ostream& err) {
  const ClosedCurve curve = read_curve(path);
  std::optional<WhitneyReport> report;
  try {
    report = analyze(curve);
  } catch (const GenericityError& e) {
    err << "render: drawing without markers: " << e.what() << '\n';
  }
  write_svg(curve, report ? &*report : nullptr, svg);
  out << "wrote " << svg << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotation index and signed double points of immersed plane curves", "icurve"};
  app.require_subcommand(1);

  std::string file, output, svg;
  bool as_json = false;
  std::optional<std::uint64_t> perturb;
  int genus = 0;
  RandomCurveSpec spec;

  auto* analyze_cmd = app.add_subcommand("analyze", "Print the Whitney report of a curve file");
  analyze_cmd->add_option("file", file, "icurve-v1 JSON file")->required();
  analyze_cmd->add_flag("--json", as_json, "Print JSON instead of a table");
  analyze_cmd->add_option("--perturb", perturb,
                          "Jitter vertices with this seed if the curve is not generic");

  auto* generate_cmd = app.add_subcommand("generate", "Write the minimal genus-g boundary curve");
  generate_cmd->add_option("--genus", genus, "Genus g >= 1")->required()->check(CLI::Range(1, 1000));
  generate_cmd->add_option("-o,--output", output, "Output curve file")->required();
  generate_cmd->add_option("--svg", svg, "Also render an SVG");

  auto* random_cmd = app.add_subcommand("random", "Write a seeded random generic curve");
  random_cmd->add_option("--seed", spec.seed, "PRNG seed")->required();
  random_cmd->add_option("--modes", spec.modes, "Fourier modes K")->required()->check(
      CLI::Range(1, 64));
  random_cmd->add_option("--samples", spec.samples, "Vertices n")->required()->check(
      CLI::Range(64, 1 << 20));
  random_cmd->add_option("--decay", spec.decay, "Amplitude decay per mode")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("-o,--output", output, "Output curve file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Exit 0 iff the curve is generic and satisfies the Whitney identity");
  verify_cmd->add_option("file", file, "icurve-v1 JSON file")->required();

  auto* render_cmd = app.add_subcommand("render", "Render a curve file to SVG");
  render_cmd->add_option("file", file, "icurve-v1 JSON file")->required();
  render_cmd->add_option("--svg", svg, "Output SVG")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(file, as_json, perturb, out, err);
    if (generate_cmd->parsed()) return cmd_generate(genus, output, svg, out);
    if (random_cmd->parsed()) return cmd_random(spec, output, out);
    if (verify_cmd->parsed()) return cmd_verify(file, out);
    if (render_cmd->parsed()) return cmd_render(file, svg, out, err);
  } catch (const GenericityError& e) {
    err << "not a generic curve: " << e.what() << '\n';
    out << "FAIL " << genericity_name(e) << '\n';
    return kFailed;
  } catch (const CurveFileError& e) {
    err << "bad curve file: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace icurve::cli
