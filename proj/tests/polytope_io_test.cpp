#include <gtest/gtest.h>

#include <sstream>

#include "cauchy/geometry/polytope_io.hpp"
#include "cauchy/geometry/shape.hpp"
#include "cauchy/montecarlo/sampling.hpp"

namespace cauchy {
namespace {

Polytope parse(const std::string& text) {
  std::istringstream in(text);
  return read_polytope(in, "input");
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const parse_error& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse_error for:\n" << text;
  return 0;
}

TEST(PolytopeIo, ParsesCommentsAndBlankLines) {
  const Polytope p = parse("# triangle\n\n2 3\n0 0\n# mid-comment\n1 0   \n0 1 # trailing\n");
  EXPECT_EQ(p.dim(), 2);
  EXPECT_EQ(p.vertices().size(), 3u);
  EXPECT_NEAR(surface_area(Shape{p}), 2.0 + std::sqrt(2.0), 1e-14);
}

TEST(PolytopeIo, ReadsShippedFiles) {
  const Polytope s = read_polytope_file(CAUCHY_DATA_DIR "/simplex3.txt");
  EXPECT_NEAR(surface_area(Shape{s}), std::sqrt(3.0), 1e-12);
  const Polytope c = read_polytope_file(CAUCHY_DATA_DIR "/cube3.txt");
  EXPECT_NEAR(surface_area(Shape{c}), 6.0, 1e-12);
  const Polytope x = read_polytope_file(CAUCHY_DATA_DIR "/cross4.txt");
  EXPECT_EQ(x.facets().size(), 16u);
}

TEST(PolytopeIo, LineNumberedDiagnostics) {
  EXPECT_EQ(error_line("# c\n3\n"), 2u);                               // header shape
  EXPECT_EQ(error_line("3 x\n"), 1u);                                   // count not integer
  EXPECT_EQ(error_line("7 9\n"), 1u);                                   // dimension range
  EXPECT_EQ(error_line("3 2\n"), 1u);                                   // too few vertices declared
  EXPECT_EQ(error_line("2 3\n0 0\n1 0 5\n0 1\n"), 3u);                  // coordinate count
  EXPECT_EQ(error_line("2 3\n0 0\n1 zero\n0 1\n"), 3u);                 // bad number
  EXPECT_EQ(error_line("2 3\n0 0\n1 0\n0 1\n1 1\n"), 5u);               // extra vertex
  EXPECT_EQ(error_line("\n2 4\n0 0\n1 0\n0 1\n"), 2u);                  // missing vertex -> header line
  EXPECT_EQ(error_line("2 3\n0 0\n1 1e999\n0 1\n"), 3u);                // overflow
  EXPECT_EQ(error_line("2 3\n0 0\n1 1\n2 2\n"), 0u);                    // degenerate, not line-specific
  EXPECT_EQ(error_line(""), 0u);
}

TEST(PolytopeIo, MessageNamesSource) {
  try {
    parse("2 3\n0 0\n1 oops\n0 1\n");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(std::string(e.what()), "input:3: not a number: 'oops'");
  }
  EXPECT_THROW(read_polytope_file("/nonexistent/poly.txt"), parse_error);
}

TEST(PolytopeIo, WriteThenReadIsExact) {
  for (int d : {2, 3, 4}) {
    const Polytope p(random_sphere_points(d, 11, Seed{31u + d}), "sphere hull");
    std::stringstream ss;
    write_polytope(ss, p);
    const Polytope q = read_polytope(ss);
    ASSERT_EQ(q.vertices().size(), p.vertices().size());
    for (std::size_t i = 0; i < p.vertices().size(); ++i) EXPECT_EQ(q.vertices()[i], p.vertices()[i]);
  }
}

}  // namespace
}  // namespace cauchy
