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

#include "wheel_config.h"

#include <algorithm>
#include <string>

namespace planepack {

WheelConfig::WheelConfig(int half) : half_(half) {
  if (half < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "wheel half-size must be >= 2, got " + std::to_string(half));
  }
}

int WheelConfig::Mod(long p) const {
  const long m = rim_count();
  return static_cast<int>(((p % m) + m) % m);
}

VertexId WheelConfig::Rim(long p) const {
  return static_cast<VertexId>(Mod(p) + 1);
}

int WheelConfig::LengthClass(EdgeRef chord) const {
  const int d = Mod(Position(chord.b) - Position(chord.a));
  return std::min(d, rim_count() - d);
}

Orientation WheelConfig::Orient(VertexId a, VertexId b, VertexId c) const {
  if (a == b || b == c || a == c) return Orientation::kCollinear;
  // Rotate the hub (if present) into the first slot; cyclic rotation keeps
  // the orientation.
  if (b == kHub) return Orient(b, c, a);
  if (c == kHub) return Orient(c, a, b);
  if (a == kHub) {
    // Hub, then rim b, then rim c: counterclockwise iff c lies less than half
    // a turn after b.
    const int d = Mod(Position(c) - Position(b));
    return d <= half_ - 1 ? Orientation::kCounterClockwise
                          : Orientation::kClockwise;
  }
  const int db = Mod(Position(b) - Position(a));
  const int dc = Mod(Position(c) - Position(a));
  return db < dc ? Orientation::kCounterClockwise : Orientation::kClockwise;
}

bool WheelConfig::Crossing(EdgeRef e, EdgeRef f) const {
  if (e.SharesEndpoint(f)) return false;
  if (IsRadial(e) && IsRadial(f)) return false;
  if (IsRadial(f)) std::swap(e, f);
  if (IsRadial(e)) {
    // Radial v0-va crosses chord cd iff a is strictly inside the chord's
    // minor arc, i.e. on the side away from the hub.
    const int c = Position(f.a);
    const int span = Mod(Position(f.b) - c);
    const int off = Mod(Position(e.b) - c);
    if (span <= half_ - 1) return off > 0 && off < span;
    return off > span;
  }
  // Two chords cross iff their endpoints interleave around the rim.
  const int base = Position(e.a);
  const int eb = Mod(Position(e.b) - base);
  const int fa = Mod(Position(f.a) - base);
  const int fb = Mod(Position(f.b) - base);
  return (fa < eb) != (fb < eb);
}

Orientation WheelOrient(int half, VertexId a, VertexId b, VertexId c) {
  return WheelConfig(half).Orient(a, b, c);
}

bool WheelCrossing(int half, EdgeRef e, EdgeRef f) {
  return WheelConfig(half).Crossing(e, f);
}

}  // namespace planepack
