#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "quadell/errors.hpp"
#include "quadell/transport.hpp"
#include "svg_plot.hpp"
#include "trace_io.hpp"

namespace {

using namespace quadell;
using namespace quadell::cli;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitPipeline = 3;
constexpr int kExitBadFlags = 4;

struct BadFlags : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceFlags {
  std::string input_file;
  std::string family;
  std::string m_str, n_str, k_str, l_str, mm_str;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--input", input_file, "instance document (JSON file)");
    cmd->add_option("--family", family, "built-in family: euler or klm");
    cmd->add_option("--M", m_str, "euler family parameter M");
    cmd->add_option("--N", n_str, "euler family parameter N");
    cmd->add_option("--k", k_str, "klm family parameter k");
    cmd->add_option("--l", l_str, "klm family parameter l");
    cmd->add_option("--m", mm_str, "klm family parameter m");
  }

  Instance resolve() const {
    if (!input_file.empty()) {
      if (!family.empty()) throw BadFlags("--input conflicts with --family");
      return instance_from_file(input_file);
    }
    if (family == "euler") {
      if (m_str.empty() || n_str.empty()) throw BadFlags("euler family needs --M and --N");
      return euler_instance(parse_int(m_str), parse_int(n_str));
    }
    if (family == "klm") {
      if (k_str.empty() || l_str.empty() || mm_str.empty())
        throw BadFlags("klm family needs --k, --l and --m");
      return klm_instance(parse_int(k_str), parse_int(l_str), parse_int(mm_str));
    }
    if (family.empty()) throw BadFlags("give either --input or --family");
    throw BadFlags("unknown family '" + family + "' (euler or klm)");
  }
};

int cmd_transform(const InstanceFlags& flags, const std::string& format) {
  Instance inst = flags.resolve();
  PipelineTrace trace = run_pipeline(inst.a, inst.b, inst.point);
  if (format == "text")
    std::cout << trace_to_text(inst, trace);
  else
    std::cout << trace_to_json(inst, trace).dump(2) << "\n";
  return 0;
}

int cmd_map_point(const InstanceFlags& flags, const std::string& point_str,
                  const std::string& direction, const std::string& frame_str,
                  const std::string& format) {
  Instance inst = flags.resolve();
  PipelineTrace trace = run_pipeline(inst.a, inst.b, inst.point);
  json doc;
  doc["direction"] = direction;
  if (direction == "forward") {
    auto p = parse_point3(point_str);
    if (!p) throw ParseFailure("--point must hold 4 comma-separated rationals");
    doc["input"] = point3_json(*p);
    ProjectivePoint2 image = transport_forward(trace, *p);
    doc["image"] = point2_json(image);
    if (trace.split())
      doc["split_image"] = point2_json(transport_forward(trace, *p, CurveFrame::SplitForm));
    else
      doc["split_image"] = nullptr;
    if (format == "text") {
      std::cout << "image on " << trace.curve().equation_text() << ": " << image.str() << "\n";
      if (trace.split())
        std::cout << "image on " << trace.split()->equation_text() << ": "
                  << transport_forward(trace, *p, CurveFrame::SplitForm).str() << "\n";
      return 0;
    }
  } else {
    auto p = parse_point2(point_str);
    if (!p) throw ParseFailure("--point must hold 3 comma-separated rationals");
    doc["input"] = point2_json(*p);
    CurveFrame frame = CurveFrame::NormalForm;
    if (frame_str == "split") {
      frame = CurveFrame::SplitForm;
    } else if (frame_str.empty() || frame_str == "auto") {
      // prefer the normal form; fall back to the split model
      if (!trace.curve().homogeneous().vanishes_at(*p) && trace.split() &&
          trace.split()->curve().homogeneous().vanishes_at(*p))
        frame = CurveFrame::SplitForm;
    } else if (frame_str != "normal") {
      throw BadFlags("--frame must be normal, split or auto");
    }
    ProjectivePoint3 pre = transport_backward(trace, *p, frame);
    doc["frame"] = frame == CurveFrame::SplitForm ? "split" : "normal";
    doc["preimage"] = point3_json(pre);
    if (format == "text") {
      std::cout << "preimage on the quadric intersection: " << pre.str() << "\n";
      return 0;
    }
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_plot(const InstanceFlags& flags, int stage, const std::string& out_dir,
             const std::string& window_str) {
  Instance inst = flags.resolve();
  PipelineTrace trace = run_pipeline(inst.a, inst.b, inst.point);

  const TernaryCubic* cubic = nullptr;
  std::vector<ProjectivePoint2> marked;
  if (stage == 0) {
    cubic = &trace.quadric.cubic;
    marked.push_back(trace.quadric.base_image);
  } else if (stage >= 1 && stage <= 8) {
    cubic = trace.chain.stage(stage);
    static const char* record_of[] = {"",
                                      "translate",
                                      "tangent",
                                      "second-intersection",
                                      "tangent-at-q",
                                      "quadratic",
                                      "complete-square",
                                      "normal-form",
                                      "shift-roots"};
    if (cubic) {
      const StepRecord* rec = trace.chain.find(record_of[stage]);
      if (stage == 5 && trace.chain.inflection_shortcut) rec = trace.chain.find("xy-swap");
      if (rec) marked.push_back(rec->point_after);
      if (stage == 2 && !trace.chain.inflection_shortcut)
        marked.push_back(tangent_second_intersection(*cubic));
    }
  }
  if (!cubic) {
    std::cerr << "stage " << stage << " does not exist in this trace\n";
    return kExitBadFlags;
  }

  std::optional<PlotWindow> window;
  if (!window_str.empty()) {
    PlotWindow w{};
    if (std::sscanf(window_str.c_str(), "%lf,%lf,%lf,%lf", &w.x0, &w.x1, &w.y0, &w.y1) != 4 ||
        w.x0 >= w.x1 || w.y0 >= w.y1)
      throw BadFlags("--window must be x0,x1,y0,y1 with x0 < x1 and y0 < y1");
    window = w;
  }

  std::filesystem::create_directories(out_dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BadFlags("cannot write " + path.string());
    out << content;
    std::cout << path.string() << "\n";
  };
  std::string tag = "stage" + std::to_string(stage);
  write(tag + "_affine.svg", svg_affine(*cubic, marked, window));
  write(tag + "_projective.svg", svg_projective(*cubic, marked));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact transformation of smooth quadric intersections to Weierstrass curves"};
  app.require_subcommand(1);

  std::string format = "json";
  InstanceFlags tf_flags, mp_flags, pl_flags, fam_flags;

  CLI::App* transform = app.add_subcommand("transform", "run the full transformation");
  tf_flags.add_to(transform);
  transform->add_option("--format", format, "json or text");

  CLI::App* family = app.add_subcommand("family", "transform a built-in family instance");
  std::string fam_name;
  family->add_option("name", fam_name, "euler or klm")->required();
  fam_flags.add_to(family);
  family->add_option("--format", format, "json or text");

  CLI::App* map_point = app.add_subcommand("map-point", "carry a point through the maps");
  mp_flags.add_to(map_point);
  std::string point_str, direction = "forward", frame_str;
  map_point->add_option("--point", point_str, "comma-separated coordinates")->required();
  map_point->add_option("--direction", direction, "forward or backward")
      ->check(CLI::IsMember({"forward", "backward"}));
  map_point->add_option("--frame", frame_str, "normal, split or auto (backward only)");
  map_point->add_option("--format", format, "json or text");

  CLI::App* plot = app.add_subcommand("plot", "render a stage as SVG");
  pl_flags.add_to(plot);
  int stage = 0;
  std::string out_dir = ".", window_str;
  plot->add_option("--stage", stage, "stage index 0..8")->required();
  plot->add_option("--out", out_dir, "output directory");
  plot->add_option("--window", window_str, "affine window x0,x1,y0,y1");
  std::string plot_format = "svg";
  plot->add_option("--format", plot_format, "svg")->check(CLI::IsMember({"svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*transform) return cmd_transform(tf_flags, format);
    if (*family) {
      fam_flags.family = fam_name;
      return cmd_transform(fam_flags, format);
    }
    if (*map_point) return cmd_map_point(mp_flags, point_str, direction, frame_str, format);
    if (*plot) return cmd_plot(pl_flags, stage, out_dir, window_str);
  } catch (const ParseFailure& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BadFlags& e) {
    std::cerr << "flag error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const Error& e) {
    std::cout << error_json(e).dump(2) << "\n";
    return kExitPipeline;
  }
  return 0;
}
