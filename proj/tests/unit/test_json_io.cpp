#include <gtest/gtest.h>

#include "khr/fixtures.hpp"
#include "khr/json_io.hpp"
#include "khr/parallel.hpp"

using namespace khr;

TEST(JsonIo, HomologySchema) {
  PlanarDiagram d = fixture("trefoil_right").diagram();
  auto h = integral_homology(cube(d, unknot_algebra(2)));
  auto f = filtered_homology(deformed_complex(d, DeformationMultiset::consecutive(2)));
  std::string s = homology_json(2, 3, Grading::Fr, &h, &f);
  for (const char* key : {"\"N\": 2", "\"writhe\": 3", "\"grading\": \"fr\"", "\"free\"", "\"torsion\"",
                          "\"filtration\"", "\"qmin\"", "\"placement\": \"fr\""})
    EXPECT_NE(s.find(key), std::string::npos) << key;
  std::string st = homology_json(2, 3, Grading::Std, &h, nullptr);
  EXPECT_NE(st.find("\"q\": 7,\n      \"t\": 3,\n      \"orders\""), std::string::npos) << st;
  EXPECT_EQ(st.find("\"filtration\""), std::string::npos);
}

TEST(JsonIo, ByteIdenticalAcrossThreadCounts) {
  PlanarDiagram d = fixture("t34").diagram();
  std::vector<std::string> outs;
  for (int threads : {1, 2, 5}) {
    set_thread_count(threads);
    auto h = integral_homology(cube(d, unknot_algebra(2)));
    auto f = filtered_homology(deformed_complex(d, DeformationMultiset::consecutive(2)));
    outs.push_back(homology_json(2, writhe(d), Grading::Fr, &h, &f));
  }
  set_thread_count(0);
  EXPECT_EQ(outs[0], outs[1]);
  EXPECT_EQ(outs[0], outs[2]);
}

TEST(JsonIo, ParsesFourManifoldAndSurface) {
  FourManifoldDatum w = parse_four_manifold_json(R"({"form": [[0, 1], [1, 0]], "alpha0": [1, 0]})");
  EXPECT_EQ(w.b2, 2);
  EXPECT_EQ(w.pairing({1, 1}, {1, 1}), 2);
  EXPECT_THROW(parse_four_manifold_json(R"({"form": [[0, 1], [2, 0]]})"), ValidationError);
  EXPECT_THROW(parse_four_manifold_json("{"), ParseError);
  SurfaceDatum s = parse_surface_json(R"({"components": [{"chi": 2, "class": [1, 0], "closed": true},
                                                        {"chi": -1, "class": [0, 1]}]})");
  ASSERT_EQ(s.components.size(), 2u);
  EXPECT_TRUE(s.components[0].closed);
  EXPECT_FALSE(s.components[1].closed);
  EXPECT_EQ(s.chi(), 1);
  EXPECT_THROW(parse_surface_json(R"({"components": [{"class": [1]}]})"), ValidationError);
}

TEST(JsonIo, OtherReports) {
  EXPECT_NE(diagram_json(fixture("hopf_pos").diagram()).find("\"writhe\": 2"), std::string::npos);
  EXPECT_NE(algebra_json(unknot_algebra(2)).find("\"degrees\""), std::string::npos);
  EXPECT_NE(cable_json(cable_invariants(2, 1)).find("\"conditional\": true"), std::string::npos);
  EXPECT_NE(spheres_json(1, 2, s2xd2_model(1, 2)).find("\"multiplicity\": 1"), std::string::npos);
  EXPECT_NE(diversity_json({false, {0, 2}}).find("\"diverse\": false"), std::string::npos);
  auto rep = verify_decomposition(fixture("hopf_pos").diagram(), DeformationMultiset::consecutive(2));
  EXPECT_NE(decomposition_json(rep, 2, Grading::Fr, 2).find("\"matched\": true"), std::string::npos);
  auto c = cube(fixture("trefoil_right").diagram(), unknot_algebra(2));
  EXPECT_NE(complex_json(c, Grading::Std).find("\"total_dimension\""), std::string::npos);
}
