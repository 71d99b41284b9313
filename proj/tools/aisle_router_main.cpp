// Command line front end: instance generation, exact solving, ground-truth
// enumeration, double-edge elimination, validation and SVG rendering.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "aisle_router/dp.hpp"
#include "aisle_router/generator.hpp"
#include "aisle_router/json_io.hpp"
#include "aisle_router/model.hpp"
#include "aisle_router/oracle.hpp"
#include "aisle_router/reducer.hpp"
#include "aisle_router/svg_render.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTooLarge = 4;
constexpr int kExitNonRectangular = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw aisle_router::ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw aisle_router::ParseError("cannot write '" + path + "'");
  out << content;
  if (!out) throw aisle_router::ParseError("cannot write '" + path + "'");
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

int cmd_solve(const std::string& instance_path, bool no_full_double,
              const std::string& out_path) {
  using namespace aisle_router;
  WarehouseInstance inst = parse_instance(read_file(instance_path));
  SolveResult res = solve(inst, !no_full_double);
  if (!res.feasible) {
    std::cerr << "infeasible: no tour exists under the requested restrictions\n";
    return kExitInfeasible;
  }
  if (!out_path.empty()) write_file(out_path, emit_tour(inst, res.tour));
  std::cout << "length=" << res.length
            << " full_doubles=" << count_full_aisle_doubles(inst, res.tour) << "\n";
  return 0;
}

int cmd_oracle(const std::string& instance_path, bool all,
               const std::string& out_path) {
  using namespace aisle_router;
  WarehouseInstance inst = parse_instance(read_file(instance_path));
  OracleResult res = brute_force_optimum(inst, all);
  if (!res.feasible) {
    std::cerr << "infeasible: instance admits no tour\n";
    return kExitInfeasible;
  }
  nlohmann::ordered_json doc;
  doc["length"] = res.length;
  doc["tour"] = nlohmann::ordered_json::parse(emit_tour(inst, res.witness));
  if (all) {
    doc["optima"] = nlohmann::ordered_json::array();
    for (const auto& t : res.all_tours)
      doc["optima"].push_back(nlohmann::ordered_json::parse(emit_tour(inst, t)));
  }
  emit(out_path, doc.dump(2) + "\n");
  return 0;
}

int cmd_reduce(const std::string& instance_path, const std::string& tour_path,
               const std::string& out_path) {
  using namespace aisle_router;
  WarehouseInstance inst = parse_instance(read_file(instance_path));
  TourSubgraph tour = parse_tour(inst, read_file(tour_path));
  std::vector<ReductionStep> steps;
  TourSubgraph reduced = eliminate_all(inst, tour, &steps);
  for (const auto& s : steps) {
    std::string mirrors = "none";
    if (s.mirrored_lr && s.mirrored_tb) mirrors = "lr,tb";
    else if (s.mirrored_lr) mirrors = "lr";
    else if (s.mirrored_tb) mirrors = "tb";
    std::cout << "aisle=" << (s.aisle + 1) << " case=" << to_label(s.kind)
              << " mirrors=" << mirrors << " saved=" << s.saved << "\n";
  }
  if (!out_path.empty()) write_file(out_path, emit_tour(inst, reduced));
  std::cout << "length=" << tour_length(inst, reduced)
            << " full_doubles=" << count_full_aisle_doubles(inst, reduced)
            << " steps=" << steps.size() << "\n";
  return 0;
}

int cmd_check(const std::string& instance_path, const std::string& tour_path) {
  using namespace aisle_router;
  WarehouseInstance inst = parse_instance(read_file(instance_path));
  std::cout << "instance ok aisles=" << inst.aisle_count()
            << " rectangular=" << (is_rectangular(inst) ? "yes" : "no") << "\n";
  if (tour_path.empty()) return 0;
  TourSubgraph tour = parse_tour(inst, read_file(tour_path));
  ValidationReport report = validate_tour(inst, tour);
  if (report.ok()) {
    std::cout << "tour ok length=" << tour_length(inst, tour)
              << " full_doubles=" << count_full_aisle_doubles(inst, tour) << "\n";
    return 0;
  }
  const char* clause = "";
  switch (report.violation->clause) {
    case TourViolation::Clause::UncoveredTarget: clause = "uncovered-target"; break;
    case TourViolation::Clause::Disconnected: clause = "disconnected"; break;
    case TourViolation::Clause::OddDegree: clause = "odd-degree"; break;
  }
  std::cout << "tour violation clause=" << clause
            << " vertex=" << inst.vertex_name(report.violation->vertex_id) << "\n";
  return 1;
}

int cmd_gen(std::uint64_t seed, int aisles, int picks, bool rectangular,
            aisle_router::Length max_len, const std::string& out_path) {
  using namespace aisle_router;
  GenParams params;
  params.seed = seed;
  params.aisles = aisles;
  params.picks = picks;
  params.rectangular = rectangular;
  params.max_len = max_len;
  WarehouseInstance inst = generate_instance(params);
  emit(out_path, emit_instance(inst));
  return 0;
}

int cmd_render(const std::string& instance_path, const std::string& tour_path,
               const std::string& out_path, double scale, bool labels) {
  using namespace aisle_router;
  WarehouseInstance inst = parse_instance(read_file(instance_path));
  std::optional<TourSubgraph> tour;
  if (!tour_path.empty()) tour = parse_tour(inst, read_file(tour_path));
  RenderSpec spec;
  spec.scale = scale;
  spec.show_labels = labels;
  std::string svg = render_svg(inst, tour ? &*tour : nullptr, spec);
  emit(out_path, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact order-picking tours in two-cross-aisle warehouses"};
  app.require_subcommand(1);

  std::string instance_path, tour_path, out_path;
  bool no_full_double = false, all = false, rectangular = false, labels = false;
  std::uint64_t seed = 0;
  int aisles = 3, picks = 4;
  aisle_router::Length max_len = 10;
  double scale = 6.0;

  auto* solve_cmd = app.add_subcommand("solve", "Find a minimum-length tour");
  solve_cmd->add_option("instance", instance_path)->required();
  solve_cmd->add_flag("--no-full-double", no_full_double,
                      "Forbid doubling an entire aisle");
  solve_cmd->add_option("--out", out_path, "Write the tour JSON here");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive ground truth");
  oracle_cmd->add_option("instance", instance_path)->required();
  oracle_cmd->add_flag("--all", all, "List every optimal tour");
  oracle_cmd->add_option("--out", out_path, "Write the result JSON here");

  auto* reduce_cmd =
      app.add_subcommand("reduce", "Eliminate full-aisle double edges");
  reduce_cmd->add_option("instance", instance_path)->required();
  reduce_cmd->add_option("tour", tour_path)->required();
  reduce_cmd->add_option("--out", out_path, "Write the reduced tour here");

  auto* check_cmd = app.add_subcommand("check", "Validate an instance or tour");
  check_cmd->add_option("instance", instance_path)->required();
  check_cmd->add_option("tour", tour_path);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--aisles", aisles);
  gen_cmd->add_option("--picks", picks);
  auto* rect_flag = gen_cmd->add_flag("--rectangular", rectangular);
  gen_cmd->add_flag("--free")->excludes(rect_flag);
  gen_cmd->add_option("--max-len", max_len);
  gen_cmd->add_option("--out", out_path);

  auto* render_cmd = app.add_subcommand("render", "Draw an instance as SVG");
  render_cmd->add_option("instance", instance_path)->required();
  render_cmd->add_option("tour", tour_path);
  render_cmd->add_option("--out", out_path);
  render_cmd->add_option("--scale", scale);
  render_cmd->add_flag("--labels", labels);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return cmd_solve(instance_path, no_full_double, out_path);
    if (oracle_cmd->parsed()) return cmd_oracle(instance_path, all, out_path);
    if (reduce_cmd->parsed()) return cmd_reduce(instance_path, tour_path, out_path);
    if (check_cmd->parsed()) return cmd_check(instance_path, tour_path);
    if (gen_cmd->parsed())
      return cmd_gen(seed, aisles, picks, rectangular, max_len, out_path);
    if (render_cmd->parsed())
      return cmd_render(instance_path, tour_path, out_path, scale, labels);
  } catch (const aisle_router::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const aisle_router::InvalidInstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const aisle_router::InstanceTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const aisle_router::UnsupportedInstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonRectangular;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
