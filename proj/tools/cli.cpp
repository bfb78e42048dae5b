#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planelayers/centralized.hpp"
#include "planelayers/distributed.hpp"
#include "planelayers/error.hpp"
#include "planelayers/general_position.hpp"
#include "planelayers/generators.hpp"
#include "planelayers/mst.hpp"
#include "planelayers/point_io.hpp"
#include "planelayers/serialize.hpp"
#include "planelayers/svg.hpp"
#include "planelayers/verify.hpp"

namespace planelayers::cli {

namespace {

struct Config {
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::size_t clusters = 3;
  double sigma = 25.0;
  std::string eps = "1e-3";

  std::string points;
  std::string layers;
  std::string mode = "two-tree";
  int k = 2;
  std::string beta;
  std::string perturb;
  bool perturb_given = false;
  std::string points_out;
  unsigned threads = 1;
  bool grid = false;
  bool flag_overlaps = false;
  std::string out;
};

std::string format_number(double v) {
  if (std::floor(v) == v && std::fabs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_text_file(cfg.out, text);
  }
}

std::string write_dump(const InternalError& e) {
  std::filesystem::path dir;
  if (const char* env = std::getenv("PLANE_LAYERS_DUMP_DIR"); env != nullptr && *env != '\0') {
    dir = env;
  } else {
    dir = std::filesystem::temp_directory_path();
  }
  std::filesystem::create_directories(dir);
  const std::size_t h = std::hash<std::string>{}(e.dump() + e.what());
  char name[64];
  std::snprintf(name, sizeof name, "plane-layers-dump-%016zx.txt", h);
  const auto path = dir / name;
  write_text_file(path.string(), "# " + std::string(e.what()) + "\n" + e.dump());
  return path.string();
}

PointSet load_points(const Config& cfg, bool* perturbed) {
  PointSet ps = read_point_file(cfg.points);
  *perturbed = false;
  if (cfg.perturb_given) {
    PerturbOptions po;
    if (!cfg.perturb.empty()) po.epsilon = parse_decimal(cfg.perturb);
    ps = perturb(ps, po);
    *perturbed = true;
    if (!cfg.points_out.empty()) write_text_file(cfg.points_out, format_point_file(ps, "perturbed"));
  }
  return ps;
}

int cmd_gen(const Config& cfg, std::ostream& out) {
  if (cfg.n < 1) throw UsageError("gen needs --n >= 1");
  PointSet ps;
  std::string comment;
  if (cfg.kind == "uniform") {
    ps = gen_uniform(cfg.n, cfg.seed);
    comment = "uniform n=" + std::to_string(cfg.n) + " seed=" + std::to_string(cfg.seed);
  } else if (cfg.kind == "clusters") {
    ps = gen_clusters(cfg.n, cfg.clusters, cfg.seed, cfg.sigma);
    comment = "clusters n=" + std::to_string(cfg.n) + " c=" + std::to_string(cfg.clusters) +
              " seed=" + std::to_string(cfg.seed);
  } else if (cfg.kind == "line") {
    if (cfg.n < 2) throw UsageError("line needs --n >= 2");
    Decimal eps;
    try {
      eps = parse_decimal(cfg.eps);
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
    ps = gen_line_instance(cfg.n, eps);
    comment = "line n=" + std::to_string(cfg.n) + " eps=" + cfg.eps;
  } else {
    throw UsageError("unknown generator '" + cfg.kind + "' (uniform, clusters, line)");
  }
  emit(cfg, format_point_file(ps, comment), out);
  return kOk;
}

int cmd_build(const Config& cfg, std::ostream& out, std::ostream& err) {
  bool perturbed = false;
  const PointSet ps = load_points(cfg, &perturbed);
  std::ostream& summary = cfg.out.empty() ? err : out;
  if (cfg.mode == "two-tree") {
    if (!perturbed) {
      if (const auto t = find_collinear_triple(ps)) {
        throw PreconditionError("points " + std::to_string((*t)[0]) + ", " + std::to_string((*t)[1]) + ", " +
                                std::to_string((*t)[2]) + " are collinear; rerun with --perturb");
      }
    }
    const TwoTreeBuild b = build_two_disjoint_trees_detailed(ps);
    emit(cfg, two_tree_json(b, ps), out);
    const double r = std::max(b.trees.max_ratio_red, b.trees.max_ratio_blue);
    summary << "layers=2 maxRatio=" << format_number(r) << " bound=" << format_number(b.bound) << "\n";
    return kOk;
  }
  if (cfg.mode == "distributed") {
    if (cfg.k < 1) throw UsageError("--k must be >= 1");
    DistributedOptions o;
    if (!cfg.beta.empty()) o.beta = parse_decimal(cfg.beta);
    o.threads = std::max(1u, cfg.threads);
    const DistributedBuild b = build_k_layers_detailed(ps, cfg.k, o);
    emit(cfg, layer_set_json(b, ps), out);
    double longest = 0.0;
    for (const LayerStats& s : b.layers.stats) longest = std::max(longest, s.bottleneck);
    summary << "layers=" << cfg.k << " maxRatio=" << format_number(longest / b.layers.beta)
            << " bound=" << format_number(12.0 * std::sqrt(2.0) * cfg.k) << "\n";
    return kOk;
  }
  throw UsageError("unknown mode '" + cfg.mode + "' (two-tree, distributed)");
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const PointSet ps = read_point_file(cfg.points);
  const LayerFile lf = parse_layer_file(read_text_file(cfg.layers));
  if (lf.n != 0 && lf.n != ps.size()) {
    throw PreconditionError("layer file is for n=" + std::to_string(lf.n) + " but the point file has " +
                            std::to_string(ps.size()) + " points");
  }
  const VerificationReport rep = verify_layer_file(lf, ps, cfg.flag_overlaps);
  emit(cfg, report_json(rep), out);
  for (const std::string& f : rep.failures) err << "verify: " << f << "\n";
  return rep.ok() ? kOk : kVerifyFailed;
}

int cmd_render(const Config& cfg, std::ostream& out) {
  const PointSet ps = read_point_file(cfg.points);
  std::vector<EdgeList> layers;
  SvgOptions o;
  if (!cfg.layers.empty()) {
    const std::string text = read_text_file(cfg.layers);
    if (text.find_first_not_of(" \t\r\n") != std::string::npos) {
      const LayerFile lf = parse_layer_file(text);
      layers = lf.layers;
      if (cfg.grid) {
        if (!lf.cell_side) throw UsageError("--grid needs a distributed layer file");
        o.grid = *lf.cell_side;
      }
    } else if (cfg.grid) {
      throw UsageError("--grid needs a distributed layer file");
    }
  } else if (cfg.grid) {
    throw UsageError("--grid needs a distributed layer file");
  }
  emit(cfg, render_svg(ps, layers, o), out);
  return kOk;
}

int cmd_stats(const Config& cfg, std::ostream& out) {
  const PointSet ps = read_point_file(cfg.points);
  nlohmann::ordered_json j;
  j["n"] = ps.size();
  j["scale"] = ps.scale();
  if (!ps.empty()) {
    double x0 = ps.real_x(0), x1 = x0, y0 = ps.real_y(0), y1 = y0;
    for (PointId i = 0; i < ps.size(); ++i) {
      x0 = std::min(x0, ps.real_x(i));
      x1 = std::max(x1, ps.real_x(i));
      y0 = std::min(y0, ps.real_y(i));
      y1 = std::max(y1, ps.real_y(i));
    }
    j["bbox"] = {x0, y0, x1, y1};
  }
  const auto triple = find_collinear_triple(ps);
  j["general_position"] = !triple.has_value();
  if (triple) j["collinear_triple"] = {(*triple)[0], (*triple)[1], (*triple)[2]};
  if (ps.size() >= 2) {
    const EdgeList mst = build_emst(ps);
    const BottleneckInfo be = bottleneck(mst, ps);
    j["mst_bottleneck"] = be.length;
    j["mst_bottleneck_edge"] = {be.edge.a, be.edge.b};
    std::size_t max_degree = 0;
    for (const auto& nb : adjacency(mst, ps.size())) max_degree = std::max(max_degree, nb.size());
    j["mst_max_degree"] = max_degree;
    if (!triple) {
      const auto flat = find_flat_vertex(mst, ps);
      j["flat_vertex"] = flat ? nlohmann::ordered_json(*flat) : nlohmann::ordered_json();
    }
    if (cfg.mode == "distributed" && cfg.k >= 1) {
      const Beta beta = cfg.beta.empty() ? Beta::from_bottleneck(be) : Beta::from_decimal(parse_decimal(cfg.beta));
      const GridIndex gi = grid_partition(ps, cfg.k, beta);
      j["k"] = cfg.k;
      j["cell_side"] = gi.cell_side;
      j["cells"] = gi.cells.size();
      j["dense_cells"] = gi.dense.size();
    }
  }
  emit(cfg, j.dump(2) + "\n", out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plane spanning layers with bounded bottleneck", "plane-layers"};
  app.require_subcommand(1);
  Config cfg;

  auto* gen = app.add_subcommand("gen", "Generate a point set");
  gen->add_option("kind", cfg.kind, "uniform, clusters or line")->required();
  gen->add_option("--n", cfg.n, "Number of points")->required();
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_option("--c", cfg.clusters, "Cluster count (clusters)");
  gen->add_option("--sigma", cfg.sigma, "Cluster standard deviation (clusters)");
  gen->add_option("--eps", cfg.eps, "Vertical jitter (line)");
  gen->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* build = app.add_subcommand("build", "Build layers for a point set");
  build->add_option("points", cfg.points, "Point file")->required();
  build->add_option("--mode", cfg.mode, "two-tree or distributed");
  build->add_option("--k", cfg.k, "Layer count (distributed)");
  build->add_option("--beta", cfg.beta, "Grid parameter (default BE(MST))");
  auto* perturb_opt = build->add_option("--perturb", cfg.perturb, "Perturb the input, optional epsilon")
                          ->expected(0, 1);
  build->add_option("--points-out", cfg.points_out, "Write the perturbed points here");
  build->add_option("--threads", cfg.threads, "Worker threads for per-box work");
  build->add_option("--seed", cfg.seed, "Accepted for uniformity; builds are deterministic");
  build->add_option("--out", cfg.out, "Output JSON file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a layer file against its point set");
  verify->add_option("points", cfg.points, "Point file")->required();
  verify->add_option("layers", cfg.layers, "Layer JSON file")->required();
  verify->add_flag("--flag-overlaps", cfg.flag_overlaps, "Count collinear overlaps as crossings");
  verify->add_option("--out", cfg.out, "Report file (default stdout)");

  auto* render = app.add_subcommand("render", "Render points and layers as SVG");
  render->add_option("points", cfg.points, "Point file")->required();
  render->add_option("layers", cfg.layers, "Layer JSON file");
  render->add_flag("--grid", cfg.grid, "Draw the grid of a distributed build");
  render->add_option("--out", cfg.out, "SVG file (default stdout)");

  auto* stats = app.add_subcommand("stats", "Describe a point set");
  stats->add_option("points", cfg.points, "Point file")->required();
  stats->add_option("--mode", cfg.mode, "Also report grid statistics for distributed");
  stats->add_option("--k", cfg.k, "Layer count for grid statistics");
  stats->add_option("--beta", cfg.beta, "Grid parameter (default BE(MST))");
  stats->add_option("--out", cfg.out, "Output file (default stdout)");

  std::vector<std::string> argv_store{"plane-layers"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.perturb_given = perturb_opt->count() > 0;

  try {
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (build->parsed()) return cmd_build(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (render->parsed()) return cmd_render(cfg, out);
    if (stats->parsed()) return cmd_stats(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    try {
      err << "reproducer written to " << write_dump(e) << "\n";
    } catch (const std::exception& w) {
      err << "could not write reproducer: " << w.what() << "\n";
    }
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace planelayers::cli
