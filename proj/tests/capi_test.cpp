#include <cstdio>
#include <cstdlib>
#include <string>

#include "ckp/ckp.h"
#include "gtest/gtest.h"

namespace {

const char kInstanceB36[] =
    "ckp 1\nb 36\ngroup 1 a 1 c 1\ngroup 1 a 6 c 6\ngroup 2 a 14 10 c 14 10\n"
    "group 2 a 13 9 c 13 9\ngroup 2 a 12 8 c 12 8\n";

std::string Take(char* s) {
  std::string out = s ? s : "";
  ckp_string_free(s);
  return out;
}

TEST(CApiTest, ParseErrorsSetStatusAndMessage) {
  ckp_instance* inst = nullptr;
  EXPECT_EQ(ckp_instance_parse("ckp 1\nb x\ngroup 1 a 1 c 1\n", &inst), CKP_ERR_PARSE);
  EXPECT_EQ(inst, nullptr);
  EXPECT_NE(std::string(ckp_last_error()), "");
  EXPECT_EQ(ckp_instance_parse("ckp 1\nb 1\n", &inst), CKP_ERR_PRECONDITION);
  EXPECT_EQ(ckp_instance_parse("ckp 1\nb 0\ngroup 1 a 1 c 1\n", &inst), CKP_ERR_PRECONDITION);
  EXPECT_EQ(ckp_instance_parse(nullptr, &inst), CKP_ERR_ARGUMENT);
  EXPECT_EQ(ckp_instance_load("/nonexistent/file.ckp", &inst), CKP_ERR_PARSE);
}

TEST(CApiTest, NormalizeMapsSlotsBack) {
  ckp_instance* inst = nullptr;
  ASSERT_EQ(ckp_instance_parse("ckp 1\nb 7\ngroup 2 a 6 10 c 1 2\n", &inst), CKP_OK);
  ckp_instance* norm = nullptr;
  int permuted = 0;
  ASSERT_EQ(ckp_instance_normalize(inst, &norm, &permuted), CKP_OK);
  EXPECT_EQ(permuted, 1);
  EXPECT_EQ(ckp_instance_original_slot(norm, 1, 1), 2);
  EXPECT_EQ(ckp_instance_original_slot(norm, 1, 2), 1);
  EXPECT_EQ(ckp_instance_original_slot(inst, 1, 1), 0);
  char* text = nullptr;
  ASSERT_EQ(ckp_instance_serialize(norm, &text), CKP_OK);
  EXPECT_EQ(Take(text), "ckp 1\nb 7\ngroup 2 a 10 6 c 2 1\n");
  ckp_instance_free(norm);
  ckp_instance_free(inst);
}

TEST(CApiTest, CutsAndVerify) {
  ckp_instance* inst = nullptr;
  ASSERT_EQ(ckp_instance_parse(kInstanceB36, &inst), CKP_OK);
  EXPECT_EQ(ckp_instance_num_groups(inst), 5u);
  EXPECT_EQ(ckp_instance_dimension(inst), 8u);

  ckp_cut_list* list = nullptr;
  ASSERT_EQ(ckp_cuts_generate(inst, CKP_FAMILY_PACK2, 0, 1, ckp_default_enumeration_limit(), &list),
            CKP_OK);
  ASSERT_GT(ckp_cut_list_size(list), 0u);
  for (size_t k = 0; k < ckp_cut_list_size(list); ++k) {
    EXPECT_EQ(ckp_cut_list_family(list, k), static_cast<unsigned>(CKP_FAMILY_PACK2));
    ckp_inequality* q = nullptr;
    ASSERT_EQ(ckp_cut_list_inequality(list, k, &q), CKP_OK);
    ckp_verify_result r;
    ASSERT_EQ(ckp_verify(inst, q, 1000000, &r), CKP_OK);
    EXPECT_EQ(r.valid, 1);
    EXPECT_EQ(r.face_dim, 7);
    EXPECT_EQ(r.facet, 1);
    ckp_verify_result_clear(&r);
    ckp_inequality_free(q);
    const std::string text = Take([&] {
      char* s = nullptr;
      EXPECT_EQ(ckp_cut_list_format(list, k, &s), CKP_OK);
      return s;
    }());
    EXPECT_NE(text.find("facet: yes"), std::string::npos);
  }
  ckp_inequality* dummy = nullptr;
  EXPECT_EQ(ckp_cut_list_inequality(list, 999, &dummy), CKP_ERR_ARGUMENT);
  ckp_cut_list_free(list);

  EXPECT_EQ(ckp_cuts_generate(inst, 64, 0, 0, 10, &list), CKP_ERR_ARGUMENT);
  EXPECT_EQ(ckp_cuts_generate(inst, CKP_FAMILY_ALL, 1, 0, 10, &list), CKP_ERR_RESOURCE);
  ckp_instance_free(inst);
}

TEST(CApiTest, VerifyInvalidReturnsWitness) {
  ckp_instance* inst = nullptr;
  ASSERT_EQ(ckp_instance_parse(kInstanceB36, &inst), CKP_OK);
  ckp_inequality* q = nullptr;
  ASSERT_EQ(ckp_inequality_parse("ineq 1\nrhs 1/2\nterm 2 1 1\n", &q), CKP_OK);
  ckp_verify_result r;
  ASSERT_EQ(ckp_verify(inst, q, 1000000, &r), CKP_OK);
  EXPECT_EQ(r.valid, 0);
  ASSERT_NE(r.witness, nullptr);
  char* value = nullptr;
  ASSERT_EQ(ckp_point_value(r.witness, 2, 1, &value), CKP_OK);
  EXPECT_EQ(Take(value), "1");
  ckp_verify_result_clear(&r);
  EXPECT_EQ(r.witness, nullptr);
  ckp_inequality_free(q);
  ckp_instance_free(inst);
}

TEST(CApiTest, EvaluateAndMaximize) {
  ckp_instance* inst = nullptr;
  ASSERT_EQ(ckp_instance_parse(kInstanceB36, &inst), CKP_OK);
  ckp_inequality* q = nullptr;
  ASSERT_EQ(ckp_inequality_parse("ineq 1\nrhs 38\nterm 1 1 1\nterm 2 1 6\nterm 3 1 35/3\n"
                                 "term 3 2 10\nterm 4 1 13\nterm 4 2 11\nterm 5 1 12\nterm 5 2 10\n",
                                 &q),
            CKP_OK);
  ckp_point* x = nullptr;
  ASSERT_EQ(ckp_point_parse("point 1\nval 1 1 1\nval 2 1 1\nval 3 1 1/7\nval 3 2 1\n"
                            "val 4 2 1\nval 5 2 1\n",
                            &x),
            CKP_OK);
  char *lhs = nullptr, *violation = nullptr;
  ASSERT_EQ(ckp_evaluate(inst, q, x, &lhs, &violation), CKP_OK);
  EXPECT_EQ(Take(lhs), "119/3");
  EXPECT_EQ(Take(violation), "5/3");

  char* value = nullptr;
  ckp_point* argmax = nullptr;
  ASSERT_EQ(ckp_oracle_maximize(inst, nullptr, 1000000, &value, &argmax), CKP_OK);
  EXPECT_EQ(Take(value), "36");
  ckp_point_free(argmax);

  size_t count = 0;
  ASSERT_EQ(ckp_oracle_vertex_count(inst, 1000000, &count), CKP_OK);
  EXPECT_EQ(count, 149u);
  EXPECT_EQ(ckp_oracle_vertex_count(inst, 10, &count), CKP_ERR_RESOURCE);

  ckp_point_free(x);
  ckp_inequality_free(q);
  ckp_instance_free(inst);
}

TEST(CApiTest, SeparateAndReduce) {
  const int64_t alphas[] = {1, 1, 2};
  ckp_instance* inst = nullptr;
  ckp_point* x = nullptr;
  ASSERT_EQ(ckp_reduce_partition(alphas, 3, 2, &inst, &x), CKP_OK);
  int found = 0;
  char* violation = nullptr;
  ckp_cut_list* cut = nullptr;
  uint64_t examined = 0;
  ASSERT_EQ(ckp_separate(inst, x, CKP_FAMILY_LCOVER1, CKP_SEPARATE_EXACT, 1000000, &found,
                         &violation, &cut, &examined),
            CKP_OK);
  EXPECT_EQ(found, 1);
  EXPECT_EQ(Take(violation), "1/2");
  EXPECT_GT(examined, 0u);
  char* text = nullptr;
  ASSERT_EQ(ckp_cut_list_format(cut, 0, &text), CKP_OK);
  EXPECT_NE(Take(text).find("C={(3,1),(4,1)}"), std::string::npos);
  ckp_cut_list_free(cut);

  EXPECT_EQ(ckp_separate(inst, x, CKP_FAMILY_ALL, static_cast<ckp_separation_mode>(7), 10,
                         &found, nullptr, nullptr, nullptr),
            CKP_ERR_ARGUMENT);
  ckp_point_free(x);
  ckp_instance_free(inst);

  const int64_t bad[] = {1, 2};
  EXPECT_EQ(ckp_reduce_partition(bad, 2, 2, &inst, &x), CKP_ERR_PRECONDITION);
}

TEST(CApiTest, SolveNormalizesAndMapsBack) {
  ckp_instance* inst = nullptr;
  ASSERT_EQ(ckp_instance_parse("ckp 1\nb 10\ngroup 2 a 4 9 c 5 9\ngroup 2 a 3 7 c 4 6\n", &inst),
            CKP_OK);
  ckp_solve_options opts;
  ckp_solve_options_default(&opts);
  EXPECT_EQ(opts.families, static_cast<unsigned>(CKP_FAMILY_ALL));
  EXPECT_EQ(opts.max_cuts_per_node, 10);
  ckp_solve_report* report = nullptr;
  ASSERT_EQ(ckp_solve(inst, &opts, &report), CKP_OK);
  EXPECT_EQ(ckp_solve_report_optimal(report), 1);
  char* value = nullptr;
  ASSERT_EQ(ckp_solve_report_value(report, &value), CKP_OK);
  const std::string v = Take(value);
  ckp_point* point = nullptr;
  ASSERT_EQ(ckp_solve_report_point(report, &point), CKP_OK);
  char* pv = nullptr;
  ASSERT_EQ(ckp_point_serialize(point, &pv), CKP_OK);
  EXPECT_EQ(Take(pv).rfind("point 1\n", 0), 0u);
  ckp_inequality* profits = nullptr;
  ASSERT_EQ(ckp_inequality_parse("ineq 1\nrhs 0\nterm 1 1 5\nterm 1 2 9\nterm 2 1 4\nterm 2 2 6\n",
                                 &profits),
            CKP_OK);
  char* lhs = nullptr;
  ASSERT_EQ(ckp_evaluate(inst, profits, point, &lhs, nullptr), CKP_OK);
  EXPECT_EQ(Take(lhs), v);
  char* best = nullptr;
  ckp_point* argmax = nullptr;
  ASSERT_EQ(ckp_oracle_maximize(inst, nullptr, 1000, &best, &argmax), CKP_OK);
  EXPECT_EQ(Take(best), v);
  ckp_point_free(argmax);
  ckp_inequality_free(profits);
  ckp_point_free(point);
  char* text = nullptr;
  ASSERT_EQ(ckp_solve_report_format(report, &text), CKP_OK);
  EXPECT_EQ(Take(text).rfind("status: optimal\nvalue: " + v + "\n", 0), 0u);
  ckp_solve_report_free(report);
  ckp_instance_free(inst);
}

TEST(CApiTest, FamilyNamesAndEnvLimit) {
  EXPECT_EQ(ckp_family_from_name("pack3"), static_cast<unsigned>(CKP_FAMILY_PACK3));
  EXPECT_EQ(ckp_family_from_name("all"), static_cast<unsigned>(CKP_FAMILY_ALL));
  EXPECT_EQ(ckp_family_from_name("pack9"), 0u);
  setenv("CKP_ENUM_LIMIT", "1234", 1);
  EXPECT_EQ(ckp_default_enumeration_limit(), 1234u);
  unsetenv("CKP_ENUM_LIMIT");
  EXPECT_EQ(ckp_default_enumeration_limit(), 1000000u);
}

}  // namespace
