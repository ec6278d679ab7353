#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "relaxfeas/errors.hpp"
#include "relaxfeas/generators.hpp"
#include "relaxfeas/instance_io.hpp"
#include "support.hpp"

namespace relaxfeas {
namespace {

namespace fs = std::filesystem;
using testing::mat;
using testing::vec;

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

ErrorCode code_of(const std::string& text) {
  try {
    parse_instance(text, "t");
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorCode::IoError;
}

TEST(InstanceIo, GoldenRandom01N2Seed0) {
  const fs::path golden = fs::path(RELAXFEAS_TEST_DATA) / "random01-n2-s0.txt";
  const Instance inst = gen_random01(2, 0);
  EXPECT_EQ(format_instance(inst), slurp(golden));
  const Instance back = read_instance(golden);
  EXPECT_EQ(back.system, inst.system);
  EXPECT_EQ(back.name, "random01-n2-s0");
  EXPECT_EQ(back.family, Family::Random01);
  EXPECT_EQ(back.seed, 0u);
}

TEST(InstanceIo, RoundTripTextAndJson) {
  const fs::path dir = fs::temp_directory_path() / "relaxfeas_io_test";
  fs::create_directories(dir);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = gen_random01(5, seed);
    write_instance(inst, dir / "a.txt");
    write_instance(inst, dir / "a.json");
    EXPECT_EQ(read_instance(dir / "a.txt").system, inst.system);
    const Instance j = read_instance(dir / "a.json");
    EXPECT_EQ(j.system, inst.system);
    EXPECT_EQ(j.meta, inst.meta);
  }
  const Instance w = gen_wedge(3);
  write_instance(w, dir / "w.txt");
  const Instance wb = read_instance(dir / "w.txt");
  EXPECT_EQ(wb.system, w.system);
  ASSERT_TRUE(start_point(wb));
  EXPECT_EQ(*start_point(wb), vec({0, 10}));
  fs::remove_all(dir);
}

TEST(InstanceIo, FractionsRoundTripExactly) {
  Instance inst;
  inst.name = "fractions";
  inst.system = LinearSystem(mat({{0.1, 1.0 / 3.0}}), vec({-2.5e-7}), mat({{1e300, -7}}),
                             vec({0.3}));
  const Instance back = parse_instance(format_instance(inst));
  EXPECT_EQ(back.system, inst.system);
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(3), "3");
}

TEST(InstanceIo, CommentsAndBlankLines) {
  const Instance inst = parse_instance(
      "# free comment\n\n1 0 2   # header\n 1 3\n-1 0 # x >= 0\n", "t");
  EXPECT_EQ(inst.system.C(), mat({{1}, {-1}}));
  EXPECT_EQ(inst.system.d(), vec({3, 0}));
}

TEST(InstanceIo, MalformedRowLength) {
  try {
    parse_instance("2 1 0\n1 2\n", "bad.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("bad.txt:2:"), std::string::npos) << e.what();
  }
}

TEST(InstanceIo, OtherParseErrors) {
  EXPECT_EQ(code_of(""), ErrorCode::ParseError);
  EXPECT_EQ(code_of("2 1\n"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("1 1 0\n1 x\n"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("1 1 0\n"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("1 0 1\n1 2\n3 4\n"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("-1 0 1\n1 2\n"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("{\"A\": [[1, 2]], \"b\": [1], \"C\": [[1]], \"d\": [0]}"),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of("{\"A\": [[1, 2], [1]], \"b\": [1, 2]}"), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of("{\"A\": 3}"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("{not json"), ErrorCode::ParseError);
}

TEST(InstanceIo, JsonMirror) {
  const Instance inst = read_instance(fs::path(RELAXFEAS_TEST_DATA) / "interval.json");
  EXPECT_EQ(inst.name, "interval");
  EXPECT_EQ(inst.system.A(), mat({{1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(box_bound(inst.system), 1.0);
}

TEST(InstanceIo, MissingFileIsIoError) {
  try {
    read_instance("/nonexistent/instance.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

}  // namespace
}  // namespace relaxfeas
