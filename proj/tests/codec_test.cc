// Copyright 2026 The planepack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "codec.h"

#include <filesystem>
#include <functional>
#include <regex>
#include <set>

#include <gtest/gtest.h>

#include "constructions.h"
#include "generators.h"
#include "svg.h"
#include "test_util.h"
#include "wheel.h"

namespace planepack {
namespace {

namespace fs = std::filesystem;

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("planepack_codec_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(PointSetCodecTest, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = GenerateRandom(3 + seed * 5, seed);
    const std::string text = PointSetToJson(*s);
    const auto back = PointSetFromJson(text);
    EXPECT_EQ(*back, *s);
    EXPECT_EQ(PointSetToJson(*back), text);
  }
  const auto w = MakeWheel(5);
  const auto wb = PointSetFromJson(PointSetToJson(*w));
  EXPECT_EQ(wb->wheel_half(), std::optional<int>(5));
  EXPECT_EQ(*wb, *w);
}

TEST(PointSetCodecTest, FormatErrors) {
  EXPECT_EQ(CodeOf([] { PointSetFromJson("{"); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([] {
              PointSetFromJson(
                  R"({"format":"planepack.points","version":1,"n":3,)"
                  R"("points":[[0,0],[1,0]]})");
            }),
            ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([] {
              PointSetFromJson(
                  R"({"format":"planepack.points","version":2,"n":1,)"
                  R"("points":[[0,0]]})");
            }),
            ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([] {
              PointSetFromJson(
                  R"({"format":"planepack.points","version":1,"n":3,)"
                  R"("points":[[0,0],[1,0],[0,0]]})");
            }),
            ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([] {
              PointSetFromJson(
                  R"({"format":"planepack.points","version":1,"n":2,)"
                  R"("points":[[0,0],[1,"x"]]})");
            }),
            ErrorCode::kFormat);
}

TEST(PointSetCodecTest, FieldIsNamed) {
  try {
    PointSetFromJson(
        R"({"format":"planepack.points","version":1,"n":2,)"
        R"("points":[[0,0],[1,0.5]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("points[1]"), std::string::npos)
        << e.what();
  }
}

TEST(PointSetCodecTest, CollinearTriple) {
  try {
    PointSetFromJson(
        R"({"format":"planepack.points","version":1,"n":4,)"
        R"("points":[[0,0],[1,0],[5,5],[2,0]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGeneralPosition);
  }
}

TEST(PointSetCodecTest, DigestIsStable) {
  const auto s = GenerateRandom(10, 3);
  EXPECT_EQ(PointSetDigest(*s), PointSetDigest(*GenerateRandom(10, 3)));
  EXPECT_NE(PointSetDigest(*s), PointSetDigest(*GenerateRandom(10, 4)));
  EXPECT_TRUE(std::regex_match(PointSetDigest(*s), std::regex("[0-9a-f]{64}")));
}

TEST(PackingCodecTest, EmbeddedRoundTrip) {
  const auto s = GenerateRandom(30, 9);
  const PackingRecord r{TwoPaths(s).packing, "two-paths", 9, std::nullopt};
  const std::string text = PackingToJson(r);
  const PackingRecord back = PackingFromJson(text);
  EXPECT_EQ(back.method, "two-paths");
  EXPECT_EQ(back.seed, std::optional<std::uint64_t>(9));
  EXPECT_FALSE(back.k.has_value());
  EXPECT_EQ(back.packing.ground(), *s);
  EXPECT_EQ(back.packing.members(), r.packing.members());
  EXPECT_EQ(PackingToJson(back), text);
}

TEST(PackingCodecTest, ReferencedPointsAndDigestMismatch) {
  const fs::path dir = TempDir("ref");
  const auto s = GenerateRandom(12, 2);
  WriteTextFile(dir / "pts.json", PointSetToJson(*s));
  const PackingRecord r{TwoTrees(s).packing, "two-trees", 2, std::nullopt};
  WriteTextFile(dir / "pk.json", PackingToJson(r, "pts.json"));
  const PackingRecord back = ReadPackingFile(dir / "pk.json");
  EXPECT_EQ(back.packing.members(), r.packing.members());

  WriteTextFile(dir / "pts.json", PointSetToJson(*GenerateRandom(12, 3)));
  EXPECT_EQ(CodeOf([&] { ReadPackingFile(dir / "pk.json"); }),
            ErrorCode::kDigestMismatch);
  fs::remove_all(dir);
}

TEST(PackingCodecTest, DanglingIndex) {
  const std::string text =
      R"({"format":"planepack.packing","version":1,"method":"hand",)"
      R"("points":{"format":"planepack.points","version":1,"n":3,)"
      R"("points":[[0,0],[4,0],[0,4]]},)"
      R"("members":[{"kind":"TREE","edges":[[0,1],[1,3]]}]})";
  EXPECT_EQ(CodeOf([&] { PackingFromJson(text); }),
            ErrorCode::kDanglingIndex);
}

TEST(PackingCodecTest, DuplicateEdgeLoadsThenFailsVerification) {
  const std::string text =
      R"({"format":"planepack.packing","version":1,"method":"hand",)"
      R"("points":{"format":"planepack.points","version":1,"n":3,)"
      R"("points":[[0,0],[4,0],[0,4]]},)"
      R"("members":[{"kind":"TREE","edges":[[0,1],[1,2]]},)"
      R"({"kind":"TREE","edges":[[1,0],[0,2]]}]})";
  const PackingRecord r = PackingFromJson(text);
  EXPECT_FALSE(VerifyPacking(r.packing, false).AllRequiredOk());
}

TEST(PackingCodecTest, IoError) {
  EXPECT_EQ(CodeOf([] { ReadPointSetFile("/nonexistent/planepack.json"); }),
            ErrorCode::kIo);
}

TEST(SvgTest, DeterministicAndOneColourPerMember) {
  const auto s = GenerateRandom(8, 1);
  const Packing one(s, {TwoPaths(s).packing.members()[0]});
  const std::string a = RenderSvg(one, "two-paths");
  EXPECT_EQ(a, RenderSvg(one, "two-paths"));
  EXPECT_NE(a.find("two-paths"), std::string::npos);

  const WheelPackingResult w = WheelPartition(3);
  const std::string svg = RenderSvg(w.packing, "wheel-partition");
  std::size_t lines = 0;
  for (std::size_t pos = svg.find("<line"); pos != std::string::npos;
       pos = svg.find("<line", pos + 1)) {
    ++lines;
  }
  EXPECT_EQ(lines, 15u);
  std::smatch m;
  std::set<std::string> colours;
  std::string rest = svg;
  const std::regex stroke("<g stroke=\"(#[0-9a-f]{6})\"");
  while (std::regex_search(rest, m, stroke)) {
    colours.insert(m[1]);
    rest = m.suffix();
  }
  EXPECT_EQ(colours.size(), 3u);
}

}  // namespace
}  // namespace planepack
