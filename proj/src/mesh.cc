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
#include "foodsynth/mesh.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace foodsynth {

namespace {

// Axis-aligned quad given by four corners in order around its boundary.
void AddQuad(TriangleMesh& mesh, const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const int base = static_cast<int>(mesh.vertices.size());
  mesh.vertices.insert(mesh.vertices.end(), {a, b, c, d});
  mesh.triangles.push_back({base, base + 1, base + 2});
  mesh.triangles.push_back({base, base + 2, base + 3});
}

void AddRect(TriangleMesh& mesh, double x0, double x1, double y0, double y1, double z) {
  if (x1 <= x0 || y1 <= y0) return;
  AddQuad(mesh, {x0, y0, z}, {x1, y0, z}, {x1, y1, z}, {x0, y1, z});
}

// Convex primitives contain the origin, so a face is outward iff its normal
// points away from it.
void OrientOutward(TriangleMesh& mesh) {
  for (auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    const Vec3 n = Cross(b - a, c - a);
    if (Dot(n, (a + b + c) / 3.0) < 0.0) std::swap(t[1], t[2]);
  }
}

TriangleMesh Box(const Vec3& h) {
  TriangleMesh mesh;
  for (int i = 0; i < 8; ++i) {
    mesh.vertices.push_back({(i & 1) ? h.x : -h.x, (i & 2) ? h.y : -h.y, (i & 4) ? h.z : -h.z});
  }
  // Each face as a quad of vertex indices walking its boundary.
  const int faces[6][4] = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4},
                           {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  for (const auto& f : faces) {
    mesh.triangles.push_back({f[0], f[1], f[2]});
    mesh.triangles.push_back({f[0], f[2], f[3]});
  }
  return mesh;
}

TriangleMesh Ellipsoid(const Vec3& h, int subdivisions) {
  const int stacks = std::max(2, subdivisions);
  const int slices = std::max(3, 2 * subdivisions);
  TriangleMesh mesh;
  mesh.vertices.push_back({0, 0, h.z});
  for (int i = 1; i < stacks; ++i) {
    const double theta = kPi * i / stacks;
    for (int j = 0; j < slices; ++j) {
      const double phi = 2 * kPi * j / slices;
      mesh.vertices.push_back({h.x * std::sin(theta) * std::cos(phi),
                               h.y * std::sin(theta) * std::sin(phi), h.z * std::cos(theta)});
    }
  }
  mesh.vertices.push_back({0, 0, -h.z});
  const int south = static_cast<int>(mesh.vertices.size()) - 1;
  auto ring = [slices](int i, int j) { return 1 + (i - 1) * slices + (j % slices); };
  for (int j = 0; j < slices; ++j) mesh.triangles.push_back({0, ring(1, j), ring(1, j + 1)});
  for (int i = 1; i < stacks - 1; ++i) {
    for (int j = 0; j < slices; ++j) {
      mesh.triangles.push_back({ring(i, j), ring(i + 1, j), ring(i + 1, j + 1)});
      mesh.triangles.push_back({ring(i, j), ring(i + 1, j + 1), ring(i, j + 1)});
    }
  }
  for (int j = 0; j < slices; ++j) {
    mesh.triangles.push_back({ring(stacks - 1, j), south, ring(stacks - 1, j + 1)});
  }
  return mesh;
}

TriangleMesh Cylinder(const Vec3& h, int subdivisions) {
  const int slices = std::max(3, 2 * subdivisions);
  TriangleMesh mesh;
  mesh.vertices.push_back({0, 0, h.z});
  mesh.vertices.push_back({0, 0, -h.z});
  for (int j = 0; j < slices; ++j) {
    const double phi = 2 * kPi * j / slices;
    mesh.vertices.push_back({h.x * std::cos(phi), h.y * std::sin(phi), h.z});
  }
  for (int j = 0; j < slices; ++j) {
    const double phi = 2 * kPi * j / slices;
    mesh.vertices.push_back({h.x * std::cos(phi), h.y * std::sin(phi), -h.z});
  }
  auto top = [slices](int j) { return 2 + (j % slices); };
  auto bottom = [slices](int j) { return 2 + slices + (j % slices); };
  for (int j = 0; j < slices; ++j) {
    mesh.triangles.push_back({0, top(j), top(j + 1)});
    mesh.triangles.push_back({top(j), bottom(j), bottom(j + 1)});
    mesh.triangles.push_back({top(j), bottom(j + 1), top(j + 1)});
    mesh.triangles.push_back({bottom(j), 1, bottom(j + 1)});
  }
  return mesh;
}

}  // namespace

TriangleMesh Triangulate(const Primitive& primitive, int subdivisions) {
  if (subdivisions < 1) throw std::invalid_argument("subdivisions must be >= 1");
  const Vec3& h = primitive.half_extents;
  TriangleMesh mesh;
  switch (primitive.kind) {
    case PrimitiveKind::kBox: mesh = Box(h); break;
    case PrimitiveKind::kSphere: mesh = Ellipsoid({h.x, h.x, h.x}, subdivisions); break;
    case PrimitiveKind::kEllipsoid: mesh = Ellipsoid(h, subdivisions); break;
    case PrimitiveKind::kCylinder: mesh = Cylinder(h, subdivisions); break;
  }
  OrientOutward(mesh);
  return mesh;
}

TriangleMesh TrayMesh(const MealTray& tray) {
  TriangleMesh mesh;
  const double hx = tray.outer_size.x / 2;
  const double hy = tray.outer_size.y / 2;
  const double top = tray.height;
  const double floor_z = WellFloorHeight(tray);

  // Outer side walls.
  AddQuad(mesh, {-hx, -hy, 0}, {hx, -hy, 0}, {hx, -hy, top}, {-hx, -hy, top});
  AddQuad(mesh, {hx, -hy, 0}, {hx, hy, 0}, {hx, hy, top}, {hx, -hy, top});
  AddQuad(mesh, {hx, hy, 0}, {-hx, hy, 0}, {-hx, hy, top}, {hx, hy, top});
  AddQuad(mesh, {-hx, hy, 0}, {-hx, -hy, 0}, {-hx, -hy, top}, {-hx, hy, top});

  // Rim top: full-width strips between rows, and per row the gaps between
  // wells.
  const std::vector<WellFootprint> wells = WellFootprints(tray);
  double y_cursor = -hy;
  std::size_t w = 0;
  for (int per_row : tray.wells.wells_per_row) {
    if (per_row <= 0 || w >= wells.size()) continue;
    const double y0 = wells[w].center.y - wells[w].half_size.y;
    const double y1 = wells[w].center.y + wells[w].half_size.y;
    AddRect(mesh, -hx, hx, y_cursor, y0, top);
    double x_cursor = -hx;
    for (int k = 0; k < per_row; ++k, ++w) {
      const WellFootprint& well = wells[w];
      AddRect(mesh, x_cursor, well.center.x - well.half_size.x, y0, y1, top);
      x_cursor = well.center.x + well.half_size.x;
    }
    AddRect(mesh, x_cursor, hx, y0, y1, top);
    y_cursor = y1;
  }
  AddRect(mesh, -hx, hx, y_cursor, hy, top);

  // Wells: floor plus four walls.
  for (const WellFootprint& well : wells) {
    const double x0 = well.center.x - well.half_size.x;
    const double x1 = well.center.x + well.half_size.x;
    const double y0 = well.center.y - well.half_size.y;
    const double y1 = well.center.y + well.half_size.y;
    AddRect(mesh, x0, x1, y0, y1, floor_z);
    AddQuad(mesh, {x0, y0, floor_z}, {x1, y0, floor_z}, {x1, y0, top}, {x0, y0, top});
    AddQuad(mesh, {x1, y0, floor_z}, {x1, y1, floor_z}, {x1, y1, top}, {x1, y0, top});
    AddQuad(mesh, {x1, y1, floor_z}, {x0, y1, floor_z}, {x0, y1, top}, {x1, y1, top});
    AddQuad(mesh, {x0, y1, floor_z}, {x0, y0, floor_z}, {x0, y0, top}, {x0, y1, top});
  }
  return mesh;
}

TriangleMesh GroundMesh(double half_size) {
  TriangleMesh mesh;
  AddRect(mesh, -half_size, half_size, -half_size, half_size, 0.0);
  return mesh;
}

}  // namespace foodsynth
