#include "partfn/csv.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "partfn/bounds_audit.hpp"

using namespace partfn;

TEST(Csv, QuotesOnlyWhenNeeded) {
  CsvTable t{{"a", "b"}, {}};
  t.add_row({"1", "x,y"});
  t.add_row({"say \"hi\"", "plain"});
  EXPECT_EQ(to_csv(t), "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",plain\n");
  EXPECT_THROW(t.add_row({"only one"}), std::invalid_argument);
}

TEST(Csv, FormatReal) {
  EXPECT_EQ(format_real(1.0), "1");
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_real(INFINITY), "inf");
  EXPECT_EQ(format_real(-INFINITY), "-inf");
  EXPECT_EQ(format_log(LogMag::zero()), "-inf");
  EXPECT_EQ(format_log(LogMag::from_log(2.5)), "2.5");
}

TEST(Csv, Schemas) {
  EXPECT_EQ(to_csv(ratio_csv({})), "m,log_pA,log_p_alpha_m,ratio\n");
  EXPECT_EQ(to_csv(density_csv({})), "n,prefix_count,density\n");
  EXPECT_EQ(to_csv(audit_csv({})), "lemma_id,params,lhs_log,rhs_log,slack,preconditions_met,pass\n");
}

TEST(Csv, AuditRow) {
  std::vector<BoundReport> reports{audit_shift_identity(2, 2)};
  EXPECT_EQ(to_csv(audit_csv(reports)),
            "lemma_id,params,lhs_log,rhs_log,slack,preconditions_met,pass\n"
            "shift-identity,n=2;k=2,0.69314718056,0.69314718056,0,true,true\n");
}

TEST(Csv, DensityRow) {
  DensityProfile p{{16, 11, 11.0 / 16}};
  EXPECT_EQ(to_csv(density_csv(p)), "n,prefix_count,density\n16,11,0.6875\n");
}

TEST(Csv, WriteAndUnwritable) {
  auto path = std::filesystem::temp_directory_path() / "partfn_csv_test.csv";
  CsvTable t{{"x"}, {{"1"}}};
  write_csv(t, path);
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), "x\n1\n");
  std::filesystem::remove(path);
  EXPECT_THROW(write_csv(t, "/nonexistent-dir/x.csv"), std::runtime_error);
}
