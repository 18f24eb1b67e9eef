// Copyright 2026 The foodsynth Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef FOODSYNTH_MESH_H_
#define FOODSYNTH_MESH_H_

#include <array>
#include <vector>

#include "foodsynth/math.h"
#include "foodsynth/scene.h"

namespace foodsynth {

struct TriangleMesh {
  std::vector<Vec3> vertices;
  // Counter-clockwise when seen from outside.
  std::vector<std::array<int, 3>> triangles;
};

// Closed, outward-oriented mesh of `primitive` in its own frame (centered on
// the origin, local_transform not applied). Curved surfaces use
// 2 * subdivisions segments around and subdivisions segments from pole to
// pole; every vertex lies on the analytic surface. Boxes are exact
// (8 vertices, 12 triangles). Requires subdivisions >= 1.
TriangleMesh Triangulate(const Primitive& primitive, int subdivisions);

// Open surfaces of the tray (rim top, outer sides, well floors and walls) in
// world coordinates. Orientation is not meaningful.
TriangleMesh TrayMesh(const MealTray& tray);

// Square ground quad on z = 0 centered at the origin.
TriangleMesh GroundMesh(double half_size);

}  // namespace foodsynth

#endif  // FOODSYNTH_MESH_H_
