#include "rdv/instance_io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "rdv/errors.h"
#include "rdv/generators.h"

namespace rdv {
namespace {

constexpr const char* kTriangle = R"({
  "nodes": [4, 9, 2],
  "edges": [{"u": 4, "v": 9, "wA": 3, "wB": 5},
            {"u": 9, "v": 2, "wA": 1, "wB": 1},
            {"u": 2, "v": 4, "wA": 7, "wB": 2}],
  "sA": 9, "sB": 2
})";

TEST(InstanceIo, ReadsDocument) {
  Instance inst = read_instance(kTriangle);
  EXPECT_EQ(inst.graph.node_count(), 3u);
  EXPECT_EQ(inst.graph.id(inst.s_a), 9);
  EXPECT_EQ(inst.graph.id(inst.s_b), 2);
  // Edge order follows the document.
  EXPECT_EQ(inst.graph.id(inst.graph.edge(2).u), 2);
  EXPECT_EQ(inst.w_a[2], 7);
  EXPECT_EQ(inst.w_b[0], 5);
}

TEST(InstanceIo, RoundTripIsStable) {
  Instance inst = read_instance(kTriangle);
  const std::string text = write_instance(inst);
  Instance again = read_instance(text);
  EXPECT_EQ(write_instance(again), text);
  EXPECT_EQ(again.w_a, inst.w_a);
  EXPECT_EQ(again.w_b, inst.w_b);
  EXPECT_EQ(again.s_a, inst.s_a);
}

TEST(InstanceIo, GeneratedFamiliesRoundTrip) {
  for (const Instance& inst : {gen_path_family({3, 2}), gen_bipartite({{true, false}, {false, true}, 5})}) {
    const std::string text = write_instance(inst);
    EXPECT_EQ(write_instance(read_instance(text)), text);
  }
}

TEST(InstanceIo, ErrorsBecomeParseErrors) {
  EXPECT_THROW(read_instance("{"), ParseError);
  EXPECT_THROW(read_instance(R"({"nodes": [0, 1], "edges": [], "sA": 0})"), ParseError);
  EXPECT_THROW(read_instance(R"({"nodes": [0, 1], "edges": [{"u": 0, "v": 1, "wA": 1, "wB": 1}], "sA": 0, "sB": 5})"),
               ParseError);
  EXPECT_THROW(read_instance(R"({"nodes": [0, 1], "edges": [{"u": 0, "v": 1, "wA": 0, "wB": 1}], "sA": 0, "sB": 1})"),
               ParseError);
  EXPECT_THROW(read_instance(R"({"nodes": [0, 1, 2], "edges": [{"u": 0, "v": 1, "wA": 1, "wB": 1}], "sA": 0, "sB": 1})"),
               ParseError);
  EXPECT_THROW(read_instance(R"({"nodes": "x", "edges": [], "sA": 0, "sB": 1})"), ParseError);
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), ParseError);
}

TEST(InstanceIo, LoadsFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "rdv_instance_io_test.json";
  {
    std::ofstream out(path);
    out << kTriangle;
  }
  Instance inst = load_instance(path);
  EXPECT_EQ(inst.graph.edge_count(), 3u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace rdv
