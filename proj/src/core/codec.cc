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

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace planepack {

namespace {

using nlohmann::json;

constexpr char kPointsFormat[] = "planepack.points";
constexpr char kPackingFormat[] = "planepack.packing";
constexpr int kVersion = 1;

[[noreturn]] void FormatError(const std::string& field,
                              const std::string& what) {
  throw Error(ErrorCode::kFormat, "field '" + field + "': " + what);
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kFormat,
                "malformed JSON at byte " + std::to_string(e.byte) + ": " +
                    e.what());
  }
}

const json& Field(const json& obj, const std::string& path,
                  const std::string& key) {
  if (!obj.is_object()) FormatError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) FormatError(path + "." + key, "missing");
  return *it;
}

std::int64_t Integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) FormatError(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::uint64_t Unsigned(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const std::int64_t x = Integer(v, path);
  if (x < 0) FormatError(path, "expected a non-negative integer");
  return static_cast<std::uint64_t>(x);
}

void CheckHeader(const json& doc, const std::string& format) {
  const json& f = Field(doc, "$", "format");
  if (!f.is_string() || f.get<std::string>() != format) {
    FormatError("$.format", "expected \"" + format + "\"");
  }
  if (Integer(Field(doc, "$", "version"), "$.version") != kVersion) {
    FormatError("$.version", "unsupported version");
  }
}

std::shared_ptr<const PointSet> PointSetFromDoc(const json& doc,
                                                const std::string& root) {
  const json& f = Field(doc, root, "format");
  if (!f.is_string() || f.get<std::string>() != kPointsFormat) {
    FormatError(root + ".format", std::string("expected \"") + kPointsFormat +
                                      "\"");
  }
  if (Integer(Field(doc, root, "version"), root + ".version") != kVersion) {
    FormatError(root + ".version", "unsupported version");
  }
  const std::uint64_t n = Unsigned(Field(doc, root, "n"), root + ".n");
  const json& arr = Field(doc, root, "points");
  if (!arr.is_array()) FormatError(root + ".points", "expected an array");
  if (arr.size() != n) {
    FormatError(root + ".points", "has " + std::to_string(arr.size()) +
                                      " entries but n = " + std::to_string(n));
  }
  std::vector<Point> pts;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = root + ".points[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) {
      FormatError(path, "expected [x, y]");
    }
    pts.push_back({Integer(arr[i][0], path + "[0]"),
                   Integer(arr[i][1], path + "[1]")});
  }
  const auto tag = doc.find("tag");
  if (tag == doc.end()) return std::make_shared<const PointSet>(std::move(pts));

  if (!tag->is_string()) FormatError(root + ".tag", "expected a string");
  const std::string t = tag->get<std::string>();
  int half = 0;
  std::size_t used = 0;
  try {
    if (t.rfind("wheel:", 0) != 0) throw std::invalid_argument(t);
    half = std::stoi(t.substr(6), &used);
  } catch (const std::exception&) {
    FormatError(root + ".tag", "expected \"wheel:<n>\", got \"" + t + "\"");
  }
  if (used + 6 != t.size() || half < 2 ||
      static_cast<std::uint64_t>(2 * half) != n) {
    FormatError(root + ".tag", "\"" + t + "\" does not match n = " +
                                   std::to_string(n));
  }
  return std::make_shared<const PointSet>(PointSet::Wheel(half, pts));
}

std::string Indent(const std::string& text, const std::string& pad) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!first) out += "\n" + pad;
    out += line;
    first = false;
  }
  return out;
}

std::string Hex(const unsigned char* data, unsigned int len) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kDigits[data[i] >> 4];
    out += kDigits[data[i] & 15];
  }
  return out;
}

}  // namespace

std::string PointSetToJson(const PointSet& s) {
  std::ostringstream os;
  os << "{\n  \"format\": \"" << kPointsFormat << "\",\n  \"version\": "
     << kVersion << ",\n  \"n\": " << s.size() << ",\n";
  if (s.wheel_half()) os << "  \"tag\": \"wheel:" << *s.wheel_half() << "\",\n";
  os << "  \"points\": [";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Point& p = s[static_cast<VertexId>(i)];
    os << (i ? ",\n    " : "\n    ") << "[" << p.x << ", " << p.y << "]";
  }
  os << (s.size() ? "\n  ]\n}\n" : "]\n}\n");
  return os.str();
}

std::shared_ptr<const PointSet> PointSetFromJson(std::string_view text) {
  return PointSetFromDoc(Parse(text), "$");
}

std::string PointSetDigest(const PointSet& s) {
  const std::string text = PointSetToJson(s);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) !=
      1) {
    throw Error(ErrorCode::kIo, "SHA-256 computation failed");
  }
  return Hex(md, len);
}

std::string PackingToJson(const PackingRecord& r,
                          const std::optional<std::string>& points_ref) {
  std::ostringstream os;
  os << "{\n  \"format\": \"" << kPackingFormat << "\",\n  \"version\": "
     << kVersion << ",\n  \"method\": " << json(r.method).dump() << ",\n";
  if (r.seed) os << "  \"seed\": " << *r.seed << ",\n";
  if (r.k) os << "  \"k\": " << *r.k << ",\n";
  const PointSet& s = r.packing.ground();
  if (points_ref) {
    os << "  \"points_ref\": {\"path\": " << json(*points_ref).dump()
       << ", \"sha256\": \"" << PointSetDigest(s) << "\"},\n";
  } else {
    std::string embedded = PointSetToJson(s);
    embedded.pop_back();
    os << "  \"points\": " << Indent(embedded, "  ") << ",\n";
  }
  os << "  \"members\": [";
  const auto& members = r.packing.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << "{\"kind\": \""
       << KindName(members[i].kind) << "\", \"edges\": [";
    for (std::size_t j = 0; j < members[i].edges.size(); ++j) {
      const EdgeRef& e = members[i].edges[j];
      os << (j ? ", " : "") << "[" << e.a << ", " << e.b << "]";
    }
    os << "]}";
  }
  os << (members.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

PackingRecord PackingFromJson(std::string_view text,
                              const std::filesystem::path& base_dir) {
  const json doc = Parse(text);
  CheckHeader(doc, kPackingFormat);
  const json& method = Field(doc, "$", "method");
  if (!method.is_string()) FormatError("$.method", "expected a string");

  std::shared_ptr<const PointSet> ground;
  if (doc.contains("points")) {
    ground = PointSetFromDoc(doc["points"], "$.points");
  } else if (doc.contains("points_ref")) {
    const json& ref = doc["points_ref"];
    const json& path = Field(ref, "$.points_ref", "path");
    const json& digest = Field(ref, "$.points_ref", "sha256");
    if (!path.is_string()) FormatError("$.points_ref.path", "expected a string");
    if (!digest.is_string()) {
      FormatError("$.points_ref.sha256", "expected a string");
    }
    const std::filesystem::path file = base_dir / path.get<std::string>();
    ground = ReadPointSetFile(file);
    const std::string actual = PointSetDigest(*ground);
    if (actual != digest.get<std::string>()) {
      throw Error(ErrorCode::kDigestMismatch,
                  "point set " + file.string() + " has digest " + actual +
                      " but the packing expects " + digest.get<std::string>());
    }
  } else {
    FormatError("$.points", "missing (and no points_ref)");
  }

  PackingRecord r{Packing(ground), method.get<std::string>(), {}, {}};
  if (doc.contains("seed")) r.seed = Unsigned(doc["seed"], "$.seed");
  if (doc.contains("k")) r.k = Unsigned(doc["k"], "$.k");
  const json& members = Field(doc, "$", "members");
  if (!members.is_array()) FormatError("$.members", "expected an array");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string path = "$.members[" + std::to_string(i) + "]";
    const json& kind = Field(members[i], path, "kind");
    const std::optional<StructureKind> k =
        kind.is_string() ? ParseKind(kind.get<std::string>()) : std::nullopt;
    if (!k) FormatError(path + ".kind", "expected TREE, PATH or GENERIC");
    const json& edges = Field(members[i], path, "edges");
    if (!edges.is_array()) FormatError(path + ".edges", "expected an array");
    GraphStructure g{*k, {}};
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const std::string ep = path + ".edges[" + std::to_string(j) + "]";
      if (!edges[j].is_array() || edges[j].size() != 2) {
        FormatError(ep, "expected [a, b]");
      }
      const std::uint64_t a = Unsigned(edges[j][0], ep + "[0]");
      const std::uint64_t b = Unsigned(edges[j][1], ep + "[1]");
      if (a >= ground->size() || b >= ground->size()) {
        throw Error(ErrorCode::kDanglingIndex,
                    ep + " references vertex " + std::to_string(std::max(a, b)) +
                        " but the point set has " +
                        std::to_string(ground->size()) + " points");
      }
      if (a == b) FormatError(ep, "is a loop");
      g.edges.push_back(EdgeRef::Make(static_cast<VertexId>(a),
                                      static_cast<VertexId>(b)));
    }
    r.packing.Add(std::move(g));
  }
  return r;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

std::shared_ptr<const PointSet> ReadPointSetFile(
    const std::filesystem::path& path) {
  return PointSetFromJson(ReadTextFile(path));
}

PackingRecord ReadPackingFile(const std::filesystem::path& path) {
  return PackingFromJson(ReadTextFile(path), path.parent_path().empty()
                                                 ? std::filesystem::path(".")
                                                 : path.parent_path());
}

}  // namespace planepack
