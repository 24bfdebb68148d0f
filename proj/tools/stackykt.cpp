#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stacky/errors.hpp"
#include "stacky/io.hpp"

using namespace stacky;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

const char* const kUsage =
    "usage: stackykt <command> [flags]\n"
    "\n"
    "commands:\n"
    "  genus         --curve FILE\n"
    "  pair          --curve FILE --alpha FILE --beta FILE\n"
    "  slope         --curve FILE --alpha FILE --gamma FILE\n"
    "  hn            --curve FILE --alpha FILE --lines FILE\n"
    "  orthogonalize --curve FILE --alpha FILE --beta FILE\n"
    "  walls         --curve FILE --alpha FILE [--alpha FILE2] --beta FILE\n"
    "                [--deg-range LO:HI]   (required with two --alpha)\n"
    "  bounds        --curve FILE --beta FILE\n"
    "  homvanish     --curve FILE --alpha FILE --beta FILE [--eta FILE]\n"
    "                [--ell N] [--deg-range LO:HI] [--gamma FILE --m N]\n"
    "  dims          --curve FILE --beta FILE --beta FILE\n"
    "  sd            --curve FILE --alpha FILE\n"
    "  detline       D.json DPRIME.json\n"
    "\n"
    "  --json        emit a machine-readable report\n";

struct Args {
  std::string command;
  std::optional<std::string> curve;
  std::vector<std::string> alpha;
  std::vector<std::string> beta;
  std::optional<std::string> gamma;
  std::optional<std::string> eta;
  std::optional<std::string> lines;
  std::optional<Int> m;
  std::optional<Int> ell;
  std::optional<std::pair<Int, Int>> deg_range;
  bool json = false;
  std::vector<std::string> positional;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int_flag(const std::string& value, const char* flag) {
  try {
    return Int(value);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + " expects an integer, got \"" +
                     value + "\"");
  }
}

Args parse_args(int argc, char** argv) {
  if (argc < 2) {
    throw UsageError("missing command");
  }
  Args args;
  args.command = argv[1];
  const std::vector<std::string> known = {
      "genus", "pair",   "slope",     "hn",   "orthogonalize", "walls",
      "bounds", "homvanish", "dims", "sd", "detline"};
  if (std::find(known.begin(), known.end(), args.command) == known.end()) {
    throw UsageError("unknown command \"" + args.command + "\"");
  }
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&](const char* flag) -> std::string {
      if (i + 1 >= argc) {
        throw UsageError(std::string(flag) + " expects a value");
      }
      return argv[++i];
    };
    if (arg == "--curve") {
      args.curve = next("--curve");
    } else if (arg == "--alpha") {
      args.alpha.push_back(next("--alpha"));
    } else if (arg == "--beta") {
      args.beta.push_back(next("--beta"));
    } else if (arg == "--gamma") {
      args.gamma = next("--gamma");
    } else if (arg == "--eta") {
      args.eta = next("--eta");
    } else if (arg == "--lines") {
      args.lines = next("--lines");
    } else if (arg == "--m") {
      args.m = parse_int_flag(next("--m"), "--m");
    } else if (arg == "--ell") {
      args.ell = parse_int_flag(next("--ell"), "--ell");
    } else if (arg == "--deg-range") {
      const std::string value = next("--deg-range");
      const auto colon = value.find(':');
      if (colon == std::string::npos) {
        throw UsageError("--deg-range expects LO:HI");
      }
      args.deg_range = {parse_int_flag(value.substr(0, colon), "--deg-range"),
                        parse_int_flag(value.substr(colon + 1), "--deg-range")};
    } else if (arg == "--json") {
      args.json = true;
    } else if (!arg.empty() && arg[0] == '-') {
      throw UsageError("unknown flag \"" + arg + "\"");
    } else {
      args.positional.push_back(arg);
    }
  }
  return args;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open " + path);
  }
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw ValidationError("failed to parse " + path + ": " + e.what());
  }
}

CurveRef load_curve(const Args& args) {
  if (!args.curve) {
    throw UsageError("--curve is required");
  }
  auto result = curve_from_json(load_json(*args.curve));
  if (!result.ok()) {
    std::string message;
    for (const auto& violation : result.violations) {
      if (!message.empty()) {
        message += "\n";
      }
      message += violation.str();
    }
    throw ValidationError(message);
  }
  return result.curve;
}

NumericalInvariant load_invariant(const CurveRef& curve,
                                  const std::string& path) {
  return invariant_from_json(curve, load_json(path));
}

const std::string& require_one(const std::vector<std::string>& values,
                               const char* flag) {
  if (values.empty()) {
    throw UsageError(std::string(flag) + " is required");
  }
  if (values.size() > 1) {
    throw UsageError(std::string(flag) + " given more than once");
  }
  return values.front();
}

const std::string& require_flag(const std::optional<std::string>& value,
                                const char* flag) {
  if (!value) {
    throw UsageError(std::string(flag) + " is required");
  }
  return *value;
}

void emit(const Args& args, const CurveRef& curve, Json result,
          const std::string& text) {
  if (args.json) {
    Json report;
    report["command"] = args.command;
    report["result"] = std::move(result);
    report["curve_digest"] = curve ? curve_digest(*curve) : "";
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string render_segment_walls(const std::vector<SegmentWall>& walls) {
  if (walls.empty()) {
    return "no walls\n";
  }
  std::string out;
  for (const auto& wall : walls) {
    if (wall.t_begin == wall.t_end) {
      out += "wall at t=" + render_rational(wall.t_begin) + "\n";
    } else {
      out += "wall on t=[" + render_rational(wall.t_begin) + "," +
             render_rational(wall.t_end) + "]\n";
    }
    for (const auto& witness : wall.report.witnesses) {
      out += "  witness: " + render_invariant(witness) + "\n";
    }
  }
  return out;
}

int run(const Args& args) {
  if (args.command == "detline") {
    if (args.positional.size() != 2) {
      throw UsageError("detline expects two point-sum files");
    }
    auto d = point_sum_from_json(load_json(args.positional[0]));
    auto d_prime = point_sum_from_json(load_json(args.positional[1]));
    auto correction = detline_correction(d, d_prime);
    std::string text;
    if (correction.coefficients.empty()) {
      text = "empty\n";
    } else {
      for (const auto& [label, coeff] : correction.coefficients) {
        text += label + " " + render_int(coeff) + "\n";
      }
    }
    emit(args, nullptr, Json{{"correction", point_sum_to_json(correction)}},
         text);
    return kExitOk;
  }

  auto curve = load_curve(args);

  if (args.command == "genus") {
    const auto g = stacky_genus(*curve);
    emit(args, curve, Json{{"stacky_genus", render_rational(g)}},
         render_rational(g) + "\n");
  } else if (args.command == "pair") {
    auto a = load_invariant(curve, require_one(args.alpha, "--alpha"));
    auto b = load_invariant(curve, require_one(args.beta, "--beta"));
    const Int value = euler_pair(a, b);
    emit(args, curve, Json{{"pair", int_to_json(value)}},
         render_int(value) + "\n");
  } else if (args.command == "slope") {
    auto a = load_invariant(curve, require_one(args.alpha, "--alpha"));
    auto g = load_invariant(curve, require_flag(args.gamma, "--gamma"));
    const auto mu = slope(a, g);
    emit(args, curve, Json{{"slope", render_rational(mu)}},
         render_rational(mu) + "\n");
  } else if (args.command == "hn") {
    auto a = load_invariant(curve, require_one(args.alpha, "--alpha"));
    auto bundle = line_sum_from_json(curve, load_json(require_flag(args.lines, "--lines")));
    const auto hn = hn_type(a, bundle);
    std::string text;
    for (std::size_t i = 0; i < hn.blocks.size(); ++i) {
      text += "block " + std::to_string(i + 1) +
              ": slope=" + render_rational(hn.blocks[i].slope) + " summands=[";
      for (std::size_t j = 0; j < hn.blocks[i].summands.size(); ++j) {
        if (j > 0) {
          text += ", ";
        }
        text += render_line_class(hn.blocks[i].summands[j]);
      }
      text += "]\n";
    }
    text += std::string("semistable = ") + (hn.semistable() ? "true" : "false") + "\n";
    text += "mu_max = " + render_rational(hn.blocks.front().slope) + "\n";
    auto result = hn_type_to_json(hn);
    result["mu_max"] = render_rational(hn.blocks.front().slope);
    emit(args, curve, std::move(result), text);
  } else if (args.command == "orthogonalize") {
    auto a = load_invariant(curve, require_one(args.alpha, "--alpha"));
    auto b = load_invariant(curve, require_one(args.beta, "--beta"));
    auto prime = orthogonalize(a, b);
    emit(args, curve, Json{{"alpha_prime", invariant_to_json(prime)}},
         render_invariant(prime) + "\n");
  } else if (args.command == "walls") {
    auto b = load_invariant(curve, require_one(args.beta, "--beta"));
    if (args.alpha.empty()) {
      throw UsageError("--alpha is required");
    }
    if (args.alpha.size() == 1) {
      auto a = load_invariant(curve, args.alpha.front());
      const auto report = is_on_wall(a, b);
      std::string text =
          std::string("on_wall = ") + (report.on_wall ? "true" : "false") + "\n";
      for (const auto& witness : report.witnesses) {
        text += "witness: " + render_invariant(witness) + "\n";
      }
      auto result = wall_report_to_json(report);
      result["mode"] = "point";
      emit(args, curve, std::move(result), text);
    } else if (args.alpha.size() == 2) {
      if (!args.deg_range) {
        throw UsageError("--deg-range is required when scanning a segment");
      }
      auto a0 = load_invariant(curve, args.alpha[0]);
      auto a1 = load_invariant(curve, args.alpha[1]);
      const auto walls = walls_on_segment(a0, a1, b, *args.deg_range);
      Json result;
      result["mode"] = "segment";
      result["walls"] = segment_walls_to_json(walls);
      emit(args, curve, std::move(result), render_segment_walls(walls));
    } else {
      throw UsageError("--alpha given more than twice");
    }
  } else if (args.command == "bounds") {
    auto b = load_invariant(curve, require_one(args.beta, "--beta"));
    const auto report = effective_bounds(curve, b);
    std::string text;
    text += "kappa = " + render_rational(report.kappa) + "\n";
    text += "kappa_plus = " + render_rational(report.kappa_plus) + "\n";
    text += "basepoint_free_min_m = " + render_int(report.basepoint_free_min_m) + "\n";
    text += "finite_map_min_m = " + render_int(report.finite_map_min_m) + "\n";
    text += "stack_dim = " + render_int(report.stack_dim) + "\n";
    emit(args, curve, bounds_report_to_json(report), text);
  } else if (args.command == "homvanish") {
    auto a = load_invariant(curve, require_one(args.alpha, "--alpha"));
    auto b = load_invariant(curve, require_one(args.beta, "--beta"));
    auto eta = args.eta ? load_invariant(curve, *args.eta) : zero_class(curve);
    SubinvariantFilter filter;
    if (args.ell) {
      filter.ell = *args.ell;
    }
    if (args.deg_range) {
      filter.degree_floor = args.deg_range->first;
      filter.degree_ceiling = args.deg_range->second;
    }
    const Int bound = hom_vanishing_bound(a, b, eta, filter);
    Json result{{"m", int_to_json(bound)}};
    std::string text = "m = " + render_int(bound) + "\n";
    if (args.gamma) {
      if (!args.m) {
        throw UsageError("--m is required together with --gamma");
      }
      auto g = load_invariant(curve, *args.gamma);
      const Int codim = codim_bound(a, eta, g, *args.m);
      result["codim"] = int_to_json(codim);
      text += "codim = " + render_int(codim) + "\n";
    }
    emit(args, curve, std::move(result), text);
  } else if (args.command == "dims") {
    if (args.beta.size() != 2) {
      throw UsageError("--beta must be given exactly twice");
    }
    auto b1 = load_invariant(curve, args.beta[0]);
    auto b2 = load_invariant(curve, args.beta[1]);
    const auto dims = stack_dims(b1, b2);
    Json result{{"bun_dim_1", int_to_json(dims.bun_dim_1)},
                {"bun_dim_2", int_to_json(dims.bun_dim_2)},
                {"ext_stack_dim", int_to_json(dims.ext_stack_dim)}};
    std::string text;
    text += "bun_dim_1 = " + render_int(dims.bun_dim_1) + "\n";
    text += "bun_dim_2 = " + render_int(dims.bun_dim_2) + "\n";
    text += "ext_stack_dim = " + render_int(dims.ext_stack_dim) + "\n";
    emit(args, curve, std::move(result), text);
  } else if (args.command == "sd") {
    auto a = load_invariant(curve, require_one(args.alpha, "--alpha"));
    auto sd = serre_dual(a);
    emit(args, curve, Json{{"serre_dual", invariant_to_json(sd)}},
         render_invariant(sd) + "\n");
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(parse_args(argc, argv));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kUsage;
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
