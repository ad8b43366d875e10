#include "ckp/ckp.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "ckp/cuts.hpp"
#include "ckp/error.hpp"
#include "ckp/io.hpp"
#include "ckp/oracle.hpp"
#include "ckp/separation.hpp"
#include "ckp/solver.hpp"

struct ckp_instance {
  ckp::Instance instance;
  // Set when produced by ckp_instance_normalize: maps normalized slots back.
  std::vector<std::vector<int>> permutation;
};

struct ckp_inequality {
  ckp::LinearInequality inequality;
};

struct ckp_point {
  ckp::Point point;
};

struct ckp_cut_list {
  struct Entry {
    ckp::GeneratedCut cut;
    std::optional<long> face_dim;
  };
  std::vector<Entry> cuts;
  long dimension = 0;  // d of the generating instance
};

struct ckp_solve_report {
  ckp::SolveReport report;
  ckp::Point input_point;  // report.point mapped to input slots
};

namespace {

thread_local std::string g_last_error;

ckp_status Record(ckp_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

ckp_status StatusOf(ckp::ErrorKind kind) {
  switch (kind) {
    case ckp::ErrorKind::kParse: return CKP_ERR_PARSE;
    case ckp::ErrorKind::kValidation:
    case ckp::ErrorKind::kPrecondition:
    case ckp::ErrorKind::kInvalidCut: return CKP_ERR_PRECONDITION;
    case ckp::ErrorKind::kResource: return CKP_ERR_RESOURCE;
  }
  return CKP_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
ckp_status Guard(Body body) {
  try {
    body();
    return CKP_OK;
  } catch (const ckp::Error& e) {
    return Record(StatusOf(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return Record(CKP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Record(CKP_ERR_INTERNAL, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void SetString(char** out, const std::string& s) {
  if (out) *out = Dup(s);
}

ckp_status NullArgument(const char* what) {
  return Record(CKP_ERR_ARGUMENT, std::string("null argument: ") + what);
}

std::vector<ckp::CutFamily> FamiliesOf(unsigned mask) {
  std::vector<ckp::CutFamily> out;
  for (std::size_t k = 0; k < std::size(ckp::kAllFamilies); ++k) {
    if (mask & (1u << k)) out.push_back(ckp::kAllFamilies[k]);
  }
  return out;
}

unsigned FlagOf(ckp::CutFamily family) {
  for (std::size_t k = 0; k < std::size(ckp::kAllFamilies); ++k) {
    if (ckp::kAllFamilies[k] == family) return 1u << k;
  }
  return 0;
}

ckp::Normalized NormalizeHandle(const ckp_instance* h) { return ckp::Normalize(h->instance); }

// Re-indexes an input-order point into normalized slot order.
ckp::Point ToNormalized(const ckp::Normalized& n, const ckp::Point& input) {
  ckp::Point out;
  for (int i = 1; i <= n.instance.num_groups(); ++i) {
    const auto& perm = n.permutation[i - 1];
    for (std::size_t j = 0; j < perm.size(); ++j) {
      const ckp::Rational& v = input.values.get({i, perm[j]});
      if (!v.is_zero()) out.values.set({i, static_cast<int>(j) + 1}, v);
    }
  }
  for (const auto& [v, value] : input.values.entries()) {
    if (!n.instance.contains(v)) {
      ckp::Fail(ckp::ErrorKind::kValidation, "variable " + v.ToString() + " is outside the instance");
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* ckp_last_error(void) { return g_last_error.c_str(); }

void ckp_string_free(char* s) { std::free(s); }

uint64_t ckp_default_enumeration_limit(void) {
  if (const char* env = std::getenv("CKP_ENUM_LIMIT"); env && *env) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
  }
  return ckp::kDefaultEnumerationLimit;
}

unsigned ckp_family_from_name(const char* name) {
  if (!name) return 0;
  if (std::strcmp(name, "all") == 0) return CKP_FAMILY_ALL;
  const auto family = ckp::ParseFamily(name);
  return family ? FlagOf(*family) : 0;
}

ckp_status ckp_instance_parse(const char* text, ckp_instance** out) {
  if (!text || !out) return NullArgument("text/out");
  return Guard([&] { *out = new ckp_instance{ckp::ParseInstance(text), {}}; });
}

ckp_status ckp_instance_load(const char* path, ckp_instance** out) {
  if (!path || !out) return NullArgument("path/out");
  return Guard([&] { *out = new ckp_instance{ckp::ParseInstance(ckp::ReadFile(path)), {}}; });
}

void ckp_instance_free(ckp_instance* instance) { delete instance; }

ckp_status ckp_instance_serialize(const ckp_instance* instance, char** out) {
  if (!instance || !out) return NullArgument("instance/out");
  return Guard([&] { *out = Dup(ckp::SerializeInstance(instance->instance)); });
}

size_t ckp_instance_num_groups(const ckp_instance* instance) {
  return instance ? static_cast<size_t>(instance->instance.num_groups()) : 0;
}

size_t ckp_instance_dimension(const ckp_instance* instance) {
  return instance ? instance->instance.dimension() : 0;
}

ckp_status ckp_instance_normalize(const ckp_instance* instance, ckp_instance** out,
                                  int* permuted) {
  if (!instance || !out) return NullArgument("instance/out");
  return Guard([&] {
    ckp::Normalized n = NormalizeHandle(instance);
    if (permuted) *permuted = n.is_identity() ? 0 : 1;
    *out = new ckp_instance{std::move(n.instance), std::move(n.permutation)};
  });
}

int ckp_instance_original_slot(const ckp_instance* normalized, int group, int slot) {
  if (!normalized || normalized->permutation.empty()) return 0;
  if (!normalized->instance.contains({group, slot})) return 0;
  return normalized->permutation[group - 1][slot - 1];
}

ckp_status ckp_instance_check(const ckp_instance* instance, char** report) {
  if (!instance || !report) return NullArgument("instance/report");
  return Guard([&] {
    const ckp::Instance& inst = instance->instance;
    const ckp::Normalized n = ckp::Normalize(inst);
    const ckp::AssumptionReport r = ckp::ValidateAssumptions(n.instance);
    std::ostringstream out;
    out << "groups: " << inst.num_groups() << "\n";
    out << "variables: " << inst.dimension() << "\n";
    out << "m0:";
    if (r.m0.empty()) out << " -";
    for (int i : r.m0) out << ' ' << i;
    out << "\n";
    out << "assumption1: " << (r.assumption1 ? "yes" : "no") << "\n";
    out << "assumption2: " << (r.assumption2 ? "yes" : "no") << "\n";
    out << "assumption3: yes\n";
    out << "assumption4: " << (inst.is_normalized() ? "yes" : "no (normalize reorders slots)")
        << "\n";
    if (r.trivial_optimum) {
      out << "trivial-optimum: " << r.trivial_optimum->value << "\n";
      out << ckp::SerializePointValues(n.ToInput(r.trivial_optimum->point));
    }
    *report = Dup(out.str());
  });
}

ckp_status ckp_inequality_parse(const char* text, ckp_inequality** out) {
  if (!text || !out) return NullArgument("text/out");
  return Guard([&] { *out = new ckp_inequality{ckp::ParseInequality(text)}; });
}

ckp_status ckp_inequality_load(const char* path, ckp_inequality** out) {
  if (!path || !out) return NullArgument("path/out");
  return Guard([&] { *out = new ckp_inequality{ckp::ParseInequality(ckp::ReadFile(path))}; });
}

void ckp_inequality_free(ckp_inequality* inequality) { delete inequality; }

ckp_status ckp_inequality_serialize(const ckp_inequality* inequality, char** out) {
  if (!inequality || !out) return NullArgument("inequality/out");
  return Guard([&] { *out = Dup(ckp::SerializeInequality(inequality->inequality)); });
}

ckp_status ckp_point_parse(const char* text, ckp_point** out) {
  if (!text || !out) return NullArgument("text/out");
  return Guard([&] { *out = new ckp_point{ckp::ParsePoint(text)}; });
}

ckp_status ckp_point_load(const char* path, ckp_point** out) {
  if (!path || !out) return NullArgument("path/out");
  return Guard([&] { *out = new ckp_point{ckp::ParsePoint(ckp::ReadFile(path))}; });
}

void ckp_point_free(ckp_point* point) { delete point; }

ckp_status ckp_point_serialize(const ckp_point* point, char** out) {
  if (!point || !out) return NullArgument("point/out");
  return Guard([&] { *out = Dup(ckp::SerializePoint(point->point)); });
}

ckp_status ckp_point_value(const ckp_point* point, int group, int slot, char** out) {
  if (!point || !out) return NullArgument("point/out");
  return Guard([&] { *out = Dup(point->point.values.get({group, slot}).ToString()); });
}

ckp_status ckp_evaluate(const ckp_instance* instance, const ckp_inequality* inequality,
                        const ckp_point* point, char** lhs, char** violation) {
  if (!instance || !inequality || !point) return NullArgument("instance/inequality/point");
  return Guard([&] {
    const ckp::Evaluation e =
        ckp::Evaluate(instance->instance, inequality->inequality, point->point);
    SetString(lhs, e.lhs.ToString());
    SetString(violation, e.violation.ToString());
  });
}

ckp_status ckp_oracle_vertex_count(const ckp_instance* instance, uint64_t limit, size_t* count) {
  if (!instance || !count) return NullArgument("instance/count");
  return Guard([&] {
    ckp::Oracle oracle(instance->instance, limit);
    *count = oracle.candidate_vertices().size();
  });
}

ckp_status ckp_oracle_vertices(const ckp_instance* instance, uint64_t limit, char** text) {
  if (!instance || !text) return NullArgument("instance/text");
  return Guard([&] {
    std::string out;
    bool first = true;
    for (const ckp::Point& p : ckp::EnumerateCandidateVertices(instance->instance, limit)) {
      if (!first) out += "\n";
      first = false;
      out += ckp::SerializePoint(p);
    }
    *text = Dup(out);
  });
}

ckp_status ckp_oracle_maximize(const ckp_instance* instance, const ckp_inequality* objective,
                               uint64_t limit, char** value, ckp_point** argmax) {
  if (!instance) return NullArgument("instance");
  return Guard([&] {
    ckp::SparseVector obj;
    if (objective) {
      obj = objective->inequality.coeffs;
    } else {
      for (ckp::VarRef v : instance->instance.variables()) {
        obj.set(v, instance->instance.profit(v));
      }
    }
    ckp::MaximizeResult r = ckp::MaximizeOverS(instance->instance, obj, limit);
    SetString(value, r.value.ToString());
    if (argmax) *argmax = new ckp_point{std::move(r.argmax)};
  });
}

ckp_status ckp_verify(const ckp_instance* instance, const ckp_inequality* inequality,
                      uint64_t limit, ckp_verify_result* out) {
  if (!instance || !inequality || !out) return NullArgument("instance/inequality/out");
  *out = ckp_verify_result{0, -1, 0, nullptr};
  return Guard([&] {
    ckp::Oracle oracle(instance->instance, limit);
    ckp::ValidityResult v = oracle.CheckValidity(inequality->inequality);
    if (!v.valid) {
      out->witness = new ckp_point{std::move(*v.counterexample)};
      return;
    }
    out->valid = 1;
    out->face_dim = oracle.FaceDimension(inequality->inequality);
    out->facet =
        out->face_dim == static_cast<long>(instance->instance.dimension()) - 1 ? 1 : 0;
  });
}

void ckp_verify_result_clear(ckp_verify_result* result) {
  if (!result) return;
  delete result->witness;
  result->witness = nullptr;
}

ckp_status ckp_cuts_generate(const ckp_instance* instance, unsigned families, int all_packs,
                             int verify, uint64_t limit, ckp_cut_list** out) {
  if (!instance || !out) return NullArgument("instance/out");
  if (families == 0 || (families & ~static_cast<unsigned>(CKP_FAMILY_ALL)) != 0) {
    return Record(CKP_ERR_ARGUMENT, "unknown family mask");
  }
  return Guard([&] {
    const ckp::Normalized n = NormalizeHandle(instance);
    auto list = std::make_unique<ckp_cut_list>();
    list->dimension = static_cast<long>(n.instance.dimension());
    std::optional<ckp::Oracle> oracle;
    if (verify) oracle.emplace(n.instance, limit);
    for (ckp::CutFamily f : FamiliesOf(families)) {
      for (ckp::GeneratedCut& cut : ckp::GenerateFamily(
               n.instance, f, all_packs ? ckp::PackScope::kAll : ckp::PackScope::kMaximalSwitching,
               limit)) {
        ckp_cut_list::Entry e{std::move(cut), std::nullopt};
        if (oracle) e.face_dim = oracle->FaceDimension(e.cut.inequality);
        list->cuts.push_back(std::move(e));
      }
    }
    *out = list.release();
  });
}

void ckp_cut_list_free(ckp_cut_list* list) { delete list; }

size_t ckp_cut_list_size(const ckp_cut_list* list) { return list ? list->cuts.size() : 0; }

ckp_status ckp_cut_list_inequality(const ckp_cut_list* list, size_t k, ckp_inequality** out) {
  if (!list || !out) return NullArgument("list/out");
  if (k >= list->cuts.size()) return Record(CKP_ERR_ARGUMENT, "cut index out of range");
  return Guard([&] { *out = new ckp_inequality{list->cuts[k].cut.inequality}; });
}

int ckp_cut_list_facet_guaranteed(const ckp_cut_list* list, size_t k) {
  if (!list || k >= list->cuts.size()) return 0;
  return list->cuts[k].cut.facet_guaranteed ? 1 : 0;
}

unsigned ckp_cut_list_family(const ckp_cut_list* list, size_t k) {
  if (!list || k >= list->cuts.size()) return 0;
  return FlagOf(list->cuts[k].cut.family);
}

ckp_status ckp_cut_list_format(const ckp_cut_list* list, size_t k, char** out) {
  if (!list || !out) return NullArgument("list/out");
  if (k >= list->cuts.size()) return Record(CKP_ERR_ARGUMENT, "cut index out of range");
  return Guard([&] {
    const auto& e = list->cuts[k];
    std::string verdict = e.cut.facet_guaranteed ? "yes" : "unknown";
    if (e.face_dim) verdict = e.face_dim.value() == list->dimension - 1 ? "yes" : "no";
    *out = Dup(ckp::FormatCut(e.cut, verdict));
  });
}

ckp_status ckp_separate(const ckp_instance* instance, const ckp_point* point, unsigned families,
                        ckp_separation_mode mode, uint64_t limit, int* found, char** violation,
                        ckp_cut_list** cut, uint64_t* examined) {
  if (!instance || !point || !found) return NullArgument("instance/point/found");
  if (families == 0 || (families & ~static_cast<unsigned>(CKP_FAMILY_ALL)) != 0) {
    return Record(CKP_ERR_ARGUMENT, "unknown family mask");
  }
  if (mode != CKP_SEPARATE_EXACT && mode != CKP_SEPARATE_GREEDY) {
    return Record(CKP_ERR_ARGUMENT, "unknown separation mode");
  }
  return Guard([&] {
    const ckp::Normalized n = NormalizeHandle(instance);
    const ckp::Point x = ToNormalized(n, point->point);
    const std::vector<ckp::CutFamily> fams = FamiliesOf(families);
    ckp::SeparationResult r;
    if (mode == CKP_SEPARATE_EXACT) {
      r = ckp::SeparateExact(n.instance, x, fams, limit);
    } else {
      if (!ckp::SatisfiesBounds(n.instance, x) || !ckp::SatisfiesKnapsack(n.instance, x)) {
        ckp::Fail(ckp::ErrorKind::kPrecondition,
                  "point must satisfy 0 <= x <= 1 and the knapsack row");
      }
      r = ckp::SeparateGreedy(n.instance, x, fams);
    }
    *found = r.found() ? 1 : 0;
    if (examined) *examined = r.candidates_examined;
    if (r.found()) {
      SetString(violation, r.violation.ToString());
      if (cut) {
        auto list = std::make_unique<ckp_cut_list>();
        list->dimension = static_cast<long>(n.instance.dimension());
        list->cuts.push_back({std::move(*r.cut), std::nullopt});
        *cut = list.release();
      }
    }
  });
}

ckp_status ckp_reduce_partition(const int64_t* alphas, size_t count, int64_t beta,
                                ckp_instance** instance, ckp_point** point) {
  if ((!alphas && count > 0) || !instance || !point) return NullArgument("alphas/instance/point");
  return Guard([&] {
    ckp::PartitionInput in{std::vector<std::int64_t>(alphas, alphas + count), beta};
    ckp::PartitionReduction r = ckp::BuildPartitionReduction(in);
    auto inst = std::make_unique<ckp_instance>(ckp_instance{std::move(r.instance), {}});
    *point = new ckp_point{std::move(r.point)};
    *instance = inst.release();
  });
}

void ckp_solve_options_default(ckp_solve_options* options) {
  if (!options) return;
  const ckp::SolverConfig config;
  options->families = CKP_FAMILY_ALL;
  options->exact_separation = 0;
  options->max_cuts_per_node = config.max_cuts_per_node;
  options->node_limit = config.node_limit;
  options->enumeration_limit = ckp_default_enumeration_limit();
}

ckp_status ckp_solve(const ckp_instance* instance, const ckp_solve_options* options,
                     ckp_solve_report** out) {
  if (!instance || !out) return NullArgument("instance/out");
  ckp_solve_options opts;
  ckp_solve_options_default(&opts);
  if (options) opts = *options;
  if ((opts.families & ~static_cast<unsigned>(CKP_FAMILY_ALL)) != 0) {
    return Record(CKP_ERR_ARGUMENT, "unknown family mask");
  }
  if (opts.max_cuts_per_node < 0) return Record(CKP_ERR_ARGUMENT, "negative cut limit");
  return Guard([&] {
    const ckp::Normalized n = NormalizeHandle(instance);
    ckp::SolverConfig config;
    config.families = FamiliesOf(opts.families);
    config.separation = opts.exact_separation ? ckp::SeparationMode::kGreedyThenExact
                                              : ckp::SeparationMode::kGreedy;
    config.max_cuts_per_node = opts.max_cuts_per_node;
    config.node_limit = opts.node_limit;
    config.enumeration_limit = opts.enumeration_limit;
    auto report = std::make_unique<ckp_solve_report>();
    report->report = ckp::BranchAndCut(n.instance, config);
    report->input_point = n.ToInput(report->report.point);
    *out = report.release();
  });
}

void ckp_solve_report_free(ckp_solve_report* report) { delete report; }

int ckp_solve_report_optimal(const ckp_solve_report* report) {
  return report && report->report.optimal ? 1 : 0;
}

ckp_status ckp_solve_report_value(const ckp_solve_report* report, char** out) {
  if (!report || !out) return NullArgument("report/out");
  return Guard([&] { *out = Dup(report->report.value.ToString()); });
}

uint64_t ckp_solve_report_nodes(const ckp_solve_report* report) {
  return report ? report->report.nodes : 0;
}

ckp_status ckp_solve_report_point(const ckp_solve_report* report, ckp_point** out) {
  if (!report || !out) return NullArgument("report/out");
  return Guard([&] { *out = new ckp_point{report->input_point}; });
}

ckp_status ckp_solve_report_format(const ckp_solve_report* report, char** out) {
  if (!report || !out) return NullArgument("report/out");
  return Guard([&] {
    const ckp::SolveReport& r = report->report;
    std::ostringstream s;
    s << "status: " << (r.optimal ? "optimal" : "node-limit") << "\n";
    s << "value: " << r.value << "\n";
    s << "bound: " << r.best_bound << "\n";
    s << "nodes: " << r.nodes << "\n";
    s << "lp-pivots: " << r.lp_pivots << "\n";
    s << "cuts:";
    for (ckp::CutFamily f : ckp::kAllFamilies) {
      const auto it = r.cuts_per_family.find(f);
      s << ' ' << ckp::FamilyName(f) << '=' << (it == r.cuts_per_family.end() ? 0 : it->second);
    }
    s << "\n";
    if (r.trivial) s << "trivial: yes\n";
    s << "solution:\n" << ckp::SerializePointValues(report->input_point);
    *out = Dup(s.str());
  });
}

}  // extern "C"
