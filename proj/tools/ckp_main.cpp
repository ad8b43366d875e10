// ckp: command-line front end over the libckp C API.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ckp/ckp.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitResource = 3;

struct Failure {
  int exit_code;
};

int ExitCodeOf(ckp_status status) {
  switch (status) {
    case CKP_ERR_PRECONDITION: return kExitPrecondition;
    case CKP_ERR_RESOURCE: return kExitResource;
    default: return kExitUsage;
  }
}

void Check(ckp_status status) {
  if (status == CKP_OK) return;
  std::cerr << "ckp: " << ckp_last_error() << "\n";
  throw Failure{ExitCodeOf(status)};
}

void UsageError(const std::string& message) {
  std::cerr << "ckp: " << message << "\n";
  throw Failure{kExitUsage};
}

// RAII wrappers over the C handles.
struct InstanceDeleter { void operator()(ckp_instance* p) const { ckp_instance_free(p); } };
struct InequalityDeleter { void operator()(ckp_inequality* p) const { ckp_inequality_free(p); } };
struct PointDeleter { void operator()(ckp_point* p) const { ckp_point_free(p); } };
struct CutListDeleter { void operator()(ckp_cut_list* p) const { ckp_cut_list_free(p); } };
struct ReportDeleter { void operator()(ckp_solve_report* p) const { ckp_solve_report_free(p); } };
using InstancePtr = std::unique_ptr<ckp_instance, InstanceDeleter>;
using InequalityPtr = std::unique_ptr<ckp_inequality, InequalityDeleter>;
using PointPtr = std::unique_ptr<ckp_point, PointDeleter>;
using CutListPtr = std::unique_ptr<ckp_cut_list, CutListDeleter>;
using ReportPtr = std::unique_ptr<ckp_solve_report, ReportDeleter>;

std::string Take(char* s) {
  std::string out = s ? s : "";
  ckp_string_free(s);
  return out;
}

InstancePtr LoadInstance(const std::string& path) {
  ckp_instance* p = nullptr;
  Check(ckp_instance_load(path.c_str(), &p));
  return InstancePtr(p);
}

InequalityPtr LoadInequality(const std::string& path) {
  ckp_inequality* p = nullptr;
  Check(ckp_inequality_load(path.c_str(), &p));
  return InequalityPtr(p);
}

PointPtr LoadPoint(const std::string& path) {
  ckp_point* p = nullptr;
  Check(ckp_point_load(path.c_str(), &p));
  return PointPtr(p);
}

// Drops the `point 1` header so the value lines can follow a label.
std::string ValueLines(const ckp_point* point) {
  char* text = nullptr;
  Check(ckp_point_serialize(point, &text));
  std::string s = Take(text);
  const auto nl = s.find('\n');
  return nl == std::string::npos ? std::string() : s.substr(nl + 1);
}

unsigned ParseFamilies(const std::string& list, bool allow_none) {
  if (allow_none && list == "none") return 0;
  unsigned mask = 0;
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    const unsigned flag = ckp_family_from_name(name.c_str());
    if (flag == 0) UsageError("unknown family '" + name + "'");
    mask |= flag;
  }
  if (mask == 0) UsageError("no family given");
  return mask;
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) UsageError("cannot write " + path);
}

struct Options {
  std::string instance, inequality, point, objective, family = "all", cuts = "all", alphas,
      out_prefix;
  std::optional<std::uint64_t> limit;
  bool verify = false, all_packs = false, exact = false, greedy = false, exact_sep = false,
       vertices = false;
  int max_cuts_per_node = 10;
  std::uint64_t node_limit = 100000;
  std::int64_t beta = 0;
};

std::uint64_t Limit(const Options& o) {
  return o.limit ? *o.limit : ckp_default_enumeration_limit();
}

int RunCheck(const Options& o) {
  const InstancePtr inst = LoadInstance(o.instance);
  char* report = nullptr;
  Check(ckp_instance_check(inst.get(), &report));
  std::cout << Take(report);
  return 0;
}

int RunNormalize(const Options& o) {
  const InstancePtr inst = LoadInstance(o.instance);
  ckp_instance* normalized = nullptr;
  int permuted = 0;
  Check(ckp_instance_normalize(inst.get(), &normalized, &permuted));
  const InstancePtr holder(normalized);
  char* text = nullptr;
  Check(ckp_instance_serialize(normalized, &text));
  std::cout << Take(text);
  return 0;
}

int RunOracle(const Options& o) {
  const InstancePtr inst = LoadInstance(o.instance);
  if (o.vertices) {
    char* text = nullptr;
    Check(ckp_oracle_vertices(inst.get(), Limit(o), &text));
    std::cout << Take(text);
    return 0;
  }
  InequalityPtr objective;
  if (!o.objective.empty()) objective = LoadInequality(o.objective);
  char* value = nullptr;
  ckp_point* argmax = nullptr;
  Check(ckp_oracle_maximize(inst.get(), objective.get(), Limit(o), &value, &argmax));
  const PointPtr holder(argmax);
  std::cout << "value: " << Take(value) << "\n";
  std::cout << "argmax:\n" << ValueLines(argmax);
  return 0;
}

int RunVerify(const Options& o) {
  const InstancePtr inst = LoadInstance(o.instance);
  const InequalityPtr ineq = LoadInequality(o.inequality);
  ckp_verify_result r;
  Check(ckp_verify(inst.get(), ineq.get(), Limit(o), &r));
  if (!r.valid) {
    std::cout << "valid: no\nwitness:\n" << ValueLines(r.witness);
    ckp_verify_result_clear(&r);
    return 0;
  }
  std::cout << "valid: yes\n";
  std::cout << "face-dim: " << r.face_dim << "\n";
  std::cout << "facet: " << (r.facet ? "yes" : "no") << "\n";
  return 0;
}

int RunCuts(const Options& o) {
  const InstancePtr inst = LoadInstance(o.instance);
  ckp_cut_list* list = nullptr;
  Check(ckp_cuts_generate(inst.get(), ParseFamilies(o.family, false), o.all_packs, o.verify,
                          Limit(o), &list));
  const CutListPtr holder(list);
  const size_t n = ckp_cut_list_size(list);
  for (size_t k = 0; k < n; ++k) {
    char* text = nullptr;
    Check(ckp_cut_list_format(list, k, &text));
    if (k > 0) std::cout << "\n";
    std::cout << Take(text);
  }
  return 0;
}

int RunSeparate(const Options& o) {
  if (o.exact == o.greedy) UsageError("separate needs exactly one of --exact or --greedy");
  const InstancePtr inst = LoadInstance(o.instance);
  const PointPtr point = LoadPoint(o.point);
  int found = 0;
  char* violation = nullptr;
  ckp_cut_list* cut = nullptr;
  uint64_t examined = 0;
  Check(ckp_separate(inst.get(), point.get(), ParseFamilies(o.family, false),
                     o.exact ? CKP_SEPARATE_EXACT : CKP_SEPARATE_GREEDY, Limit(o), &found,
                     &violation, &cut, &examined));
  const CutListPtr holder(cut);
  std::cout << "examined: " << examined << "\n";
  if (!found) {
    std::cout << "found: no\n";
    return 0;
  }
  char* text = nullptr;
  Check(ckp_cut_list_format(cut, 0, &text));
  std::cout << "found: yes\nviolation: " << Take(violation) << "\n" << Take(text);
  return 0;
}

int RunReducePartition(const Options& o) {
  std::vector<std::int64_t> alphas;
  std::stringstream in(o.alphas);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      alphas.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      UsageError("bad alpha '" + item + "'");
    }
  }
  ckp_instance* instance = nullptr;
  ckp_point* point = nullptr;
  Check(ckp_reduce_partition(alphas.data(), alphas.size(), o.beta, &instance, &point));
  const InstancePtr ih(instance);
  const PointPtr ph(point);
  char* text = nullptr;
  Check(ckp_instance_serialize(instance, &text));
  WriteFile(o.out_prefix + ".ckp", Take(text));
  Check(ckp_point_serialize(point, &text));
  WriteFile(o.out_prefix + ".point", Take(text));
  std::cout << "wrote " << o.out_prefix << ".ckp and " << o.out_prefix << ".point\n";
  return 0;
}

int RunSolve(const Options& o) {
  const InstancePtr inst = LoadInstance(o.instance);
  ckp_solve_options opts;
  ckp_solve_options_default(&opts);
  opts.families = ParseFamilies(o.cuts, true);
  opts.exact_separation = o.exact_sep ? 1 : 0;
  opts.max_cuts_per_node = o.max_cuts_per_node;
  opts.node_limit = o.node_limit;
  opts.enumeration_limit = Limit(o);
  ckp_solve_report* report = nullptr;
  Check(ckp_solve(inst.get(), &opts, &report));
  const ReportPtr holder(report);
  char* text = nullptr;
  Check(ckp_solve_report_format(report, &text));
  std::cout << Take(text);
  return ckp_solve_report_optimal(report) ? 0 : kExitResource;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for the complementarity knapsack polytope"};
  app.require_subcommand(1);
  Options o;

  auto add_limit = [&](CLI::App* cmd) {
    cmd->add_option("--enumerate-limit", o.limit,
                    "Maximum number of support patterns (default 1000000 or $CKP_ENUM_LIMIT)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* check = app.add_subcommand("check", "Validate an instance and report assumptions");
  check->add_option("instance", o.instance, "Instance file")->required();

  CLI::App* normalize = app.add_subcommand("normalize", "Print the instance with slots sorted");
  normalize->add_option("instance", o.instance, "Instance file")->required();

  CLI::App* oracle =
      app.add_subcommand("oracle", "Maximize over S, or list candidate vertices");
  oracle->add_option("instance", o.instance, "Instance file")->required();
  oracle->add_option("--objective", o.objective,
                     "Inequality file whose coefficients form the objective (default: profits)");
  oracle->add_flag("--vertices", o.vertices, "Print every candidate vertex instead");
  add_limit(oracle);

  CLI::App* verify = app.add_subcommand("verify", "Check validity and face dimension");
  verify->add_option("instance", o.instance, "Instance file")->required();
  verify->add_option("inequality", o.inequality, "Inequality file")->required();
  add_limit(verify);

  CLI::App* cuts = app.add_subcommand("cuts", "Generate cuts of one family or all");
  cuts->add_option("instance", o.instance, "Instance file")->required();
  cuts->add_option("--family", o.family, "pack1|pack2|pack3|lcover1|lcover2|all, comma separated");
  cuts->add_flag("--all-packs", o.all_packs,
                 "Range pack families over every pack, not only maximal switching ones");
  cuts->add_flag("--verify", o.verify, "Report facet: yes|no from the oracle face dimension");
  add_limit(cuts);

  CLI::App* separate = app.add_subcommand("separate", "Find a violated cut for a point");
  separate->add_option("instance", o.instance, "Instance file")->required();
  separate->add_option("point", o.point, "Point file")->required();
  separate->add_option("--family", o.family, "Families to search, comma separated, or all");
  separate->add_flag("--exact", o.exact, "Enumerate every candidate item set");
  separate->add_flag("--greedy", o.greedy, "Greedy pack heuristic");
  add_limit(separate);

  CLI::App* reduce =
      app.add_subcommand("reduce-partition", "Build the separation instance for a partition input");
  reduce->add_option("--alphas", o.alphas, "Comma separated positive integers")->required();
  reduce->add_option("--beta", o.beta, "Half the sum of the alphas")->required();
  reduce->add_option("--out", o.out_prefix, "Output prefix for .ckp and .point")->required();

  CLI::App* solve = app.add_subcommand("solve", "Solve exactly by branch-and-cut");
  solve->add_option("instance", o.instance, "Instance file")->required();
  solve->add_option("--cuts", o.cuts, "Families to separate, comma separated, all, or none");
  solve->add_flag("--exact-sep", o.exact_sep, "Fall back to exact separation");
  solve->add_option("--max-cuts-per-node", o.max_cuts_per_node, "Cut rounds per node")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--node-limit", o.node_limit, "Maximum nodes processed")
      ->check(CLI::PositiveNumber);
  add_limit(solve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return RunCheck(o);
    if (*normalize) return RunNormalize(o);
    if (*oracle) return RunOracle(o);
    if (*verify) return RunVerify(o);
    if (*cuts) return RunCuts(o);
    if (*separate) return RunSeparate(o);
    if (*reduce) return RunReducePartition(o);
    if (*solve) return RunSolve(o);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kExitUsage;
}
