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
#include "foodsynth/renderer.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "foodsynth/mesh.h"
#include "foodsynth/texture.h"

namespace foodsynth {

namespace {

constexpr double kNearPlane = 1e-4;

enum class NormalModel { kFlat, kBox, kEllipsoid, kCylinder };

struct Drawable {
  std::vector<Vec3> world;
  // Per-vertex point in texture space: primitive-local for food and
  // distractors, world for tray and ground.
  std::vector<Vec3> texture;
  std::vector<std::array<int, 3>> triangles;
  std::vector<Vec3> face_normals;
  NormalModel normal_model = NormalModel::kFlat;
  Vec3 half_extents;
  Mat3 to_world;
  const Material* material = nullptr;
  std::uint16_t instance_id = 0;
  bool distractor = false;
  bool closed = false;
};

struct CameraFrame {
  Vec3 eye;
  Vec3 right;
  Vec3 up;
  Vec3 forward;
  double focal = 1.0;
  int width = 0;
  int height = 0;

  Vec3 ToView(const Vec3& p) const {
    const Vec3 d = p - eye;
    return {Dot(right, d), Dot(up, d), Dot(forward, d)};
  }
};

struct ClipVertex {
  Vec3 view;
  Vec3 world;
  Vec3 texture;
};

struct Fragment {
  int drawable = -1;
  int triangle = -1;
  Vec3 world;
  Vec3 texture;
};

CameraFrame MakeCameraFrame(const Camera& camera) {
  CameraFrame f;
  const Vec3 view = camera.look_at - camera.position;
  if (!(Norm(view) > 0.0)) {
    throw std::invalid_argument("degenerate camera: position equals look_at");
  }
  f.eye = camera.position;
  f.forward = Normalized(view);
  Vec3 right = Cross(f.forward, camera.up);
  if (Norm(right) < 1e-9) right = Cross(f.forward, Vec3{0, 1, 0});
  if (Norm(right) < 1e-9) right = Cross(f.forward, Vec3{1, 0, 0});
  f.right = Normalized(right);
  f.up = Cross(f.right, f.forward);
  f.width = camera.width;
  f.height = camera.height;
  f.focal = (camera.height / 2.0) / std::tan(camera.vertical_fov / 2.0);
  return f;
}

void ComputeFaceNormals(Drawable& d) {
  d.face_normals.reserve(d.triangles.size());
  for (const auto& t : d.triangles) {
    d.face_normals.push_back(
        Normalized(Cross(d.world[t[1]] - d.world[t[0]], d.world[t[2]] - d.world[t[0]])));
  }
}

Drawable FlatDrawable(const TriangleMesh& mesh, const Material& material) {
  Drawable d;
  d.world = mesh.vertices;
  d.texture = mesh.vertices;
  d.triangles = mesh.triangles;
  d.material = &material;
  ComputeFaceNormals(d);
  return d;
}

void AddCluster(const Cluster& cluster, std::uint16_t instance_id, bool distractor,
                int subdivisions, std::vector<Drawable>& out) {
  for (std::size_t i = 0; i < cluster.primitives.size(); ++i) {
    const Primitive& prim = cluster.primitives[i];
    const RigidTransform to_world = WorldTransform(cluster, i);
    const TriangleMesh mesh = Triangulate(prim, subdivisions);
    Drawable d;
    d.texture = mesh.vertices;
    d.world.reserve(mesh.vertices.size());
    for (const Vec3& v : mesh.vertices) d.world.push_back(to_world.Apply(v));
    d.triangles = mesh.triangles;
    switch (prim.kind) {
      case PrimitiveKind::kBox: d.normal_model = NormalModel::kBox; break;
      case PrimitiveKind::kCylinder: d.normal_model = NormalModel::kCylinder; break;
      case PrimitiveKind::kSphere:
        d.normal_model = NormalModel::kEllipsoid;
        d.half_extents = {prim.half_extents.x, prim.half_extents.x, prim.half_extents.x};
        break;
      case PrimitiveKind::kEllipsoid: d.normal_model = NormalModel::kEllipsoid; break;
    }
    if (prim.kind != PrimitiveKind::kSphere) d.half_extents = prim.half_extents;
    d.to_world = to_world.rotation;
    d.material = &cluster.material;
    d.instance_id = instance_id;
    d.distractor = distractor;
    d.closed = true;
    ComputeFaceNormals(d);
    out.push_back(std::move(d));
  }
}

// Sutherland-Hodgman against z >= near in view space.
std::vector<ClipVertex> ClipNear(const std::array<ClipVertex, 3>& tri) {
  std::vector<ClipVertex> out;
  out.reserve(4);
  for (int i = 0; i < 3; ++i) {
    const ClipVertex& a = tri[i];
    const ClipVertex& b = tri[(i + 1) % 3];
    const bool a_in = a.view.z >= kNearPlane;
    const bool b_in = b.view.z >= kNearPlane;
    if (a_in) out.push_back(a);
    if (a_in != b_in) {
      const double t = (kNearPlane - a.view.z) / (b.view.z - a.view.z);
      out.push_back({a.view + (b.view - a.view) * t, a.world + (b.world - a.world) * t,
                     a.texture + (b.texture - a.texture) * t});
    }
  }
  return out;
}

class Rasterizer {
 public:
  explicit Rasterizer(const CameraFrame& frame)
      : frame_(frame),
        depth_(static_cast<std::size_t>(frame.width) * frame.height,
               std::numeric_limits<double>::infinity()),
        fragments_(static_cast<std::size_t>(frame.width) * frame.height) {}

  void Draw(const std::vector<Drawable>& drawables) {
    for (std::size_t di = 0; di < drawables.size(); ++di) {
      const Drawable& d = drawables[di];
      for (std::size_t ti = 0; ti < d.triangles.size(); ++ti) {
        const auto& t = d.triangles[ti];
        if (d.closed && Dot(d.face_normals[ti], d.world[t[0]] - frame_.eye) >= 0.0) continue;
        std::array<ClipVertex, 3> tri;
        for (int k = 0; k < 3; ++k) {
          tri[k] = {frame_.ToView(d.world[t[k]]), d.world[t[k]], d.texture[t[k]]};
        }
        if (tri[0].view.z < kNearPlane && tri[1].view.z < kNearPlane &&
            tri[2].view.z < kNearPlane) {
          continue;
        }
        const std::vector<ClipVertex> poly = ClipNear(tri);
        for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
          RasterizeTriangle(poly[0], poly[k], poly[k + 1], static_cast<int>(di),
                            static_cast<int>(ti));
        }
      }
    }
  }

  const std::vector<double>& depth() const { return depth_; }
  const std::vector<Fragment>& fragments() const { return fragments_; }

 private:
  struct ScreenPoint {
    double x;
    double y;
  };

  ScreenPoint Project(const Vec3& view) const {
    return {frame_.width / 2.0 + frame_.focal * view.x / view.z,
            frame_.height / 2.0 - frame_.focal * view.y / view.z};
  }

  static double Edge(const ScreenPoint& a, const ScreenPoint& b, double px, double py) {
    return (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x);
  }

  void RasterizeTriangle(const ClipVertex& a, const ClipVertex& b, const ClipVertex& c,
                         int drawable, int triangle) {
    const ScreenPoint pa = Project(a.view);
    const ScreenPoint pb = Project(b.view);
    const ScreenPoint pc = Project(c.view);
    double area = Edge(pa, pb, pc.x, pc.y);
    if (std::abs(area) < 1e-12) return;
    const double sign = area < 0 ? -1.0 : 1.0;
    area = std::abs(area);

    const double min_x = std::min({pa.x, pb.x, pc.x});
    const double max_x = std::max({pa.x, pb.x, pc.x});
    const double min_y = std::min({pa.y, pb.y, pc.y});
    const double max_y = std::max({pa.y, pb.y, pc.y});
    // Clamp in floating point first; near-plane vertices can project far
    // outside the int range.
    auto to_pixel = [](double v, int limit) {
      return static_cast<int>(std::clamp(v, -1.0, static_cast<double>(limit)));
    };
    const int x0 = std::max(0, to_pixel(std::floor(min_x - 0.5), frame_.width));
    const int x1 = std::min(frame_.width - 1, to_pixel(std::ceil(max_x - 0.5), frame_.width));
    const int y0 = std::max(0, to_pixel(std::floor(min_y - 0.5), frame_.height));
    const int y1 = std::min(frame_.height - 1, to_pixel(std::ceil(max_y - 0.5), frame_.height));
    if (x0 > x1 || y0 > y1) return;

    const double inv_za = 1.0 / a.view.z;
    const double inv_zb = 1.0 / b.view.z;
    const double inv_zc = 1.0 / c.view.z;
    for (int y = y0; y <= y1; ++y) {
      const double py = y + 0.5;
      for (int x = x0; x <= x1; ++x) {
        const double px = x + 0.5;
        // Inclusive edges: shared edges never leave cracks; the strict depth
        // test keeps the first writer on exact ties.
        const double w0 = sign * Edge(pb, pc, px, py);
        const double w1 = sign * Edge(pc, pa, px, py);
        const double w2 = sign * Edge(pa, pb, px, py);
        if (w0 < 0 || w1 < 0 || w2 < 0) continue;
        const double l0 = w0 / area * inv_za;
        const double l1 = w1 / area * inv_zb;
        const double l2 = w2 / area * inv_zc;
        const double inv_z = l0 + l1 + l2;
        if (!(inv_z > 0)) continue;
        const double z = 1.0 / inv_z;
        const std::size_t idx = static_cast<std::size_t>(y) * frame_.width + x;
        if (!(z < depth_[idx])) continue;
        depth_[idx] = z;
        Fragment& f = fragments_[idx];
        f.drawable = drawable;
        f.triangle = triangle;
        f.world = (a.world * l0 + b.world * l1 + c.world * l2) * z;
        f.texture = (a.texture * l0 + b.texture * l1 + c.texture * l2) * z;
      }
    }
  }

  const CameraFrame& frame_;
  std::vector<double> depth_;
  std::vector<Fragment> fragments_;
};

Vec3 ShadingNormal(const Drawable& d, const Fragment& f, const Vec3& eye) {
  const Vec3& face = d.face_normals[f.triangle];
  Vec3 local;
  const Vec3& p = f.texture;
  const Vec3& h = d.half_extents;
  switch (d.normal_model) {
    case NormalModel::kFlat: {
      return Dot(face, eye - f.world) < 0 ? -face : face;
    }
    case NormalModel::kBox: {
      const double ax = std::abs(p.x / h.x);
      const double ay = std::abs(p.y / h.y);
      const double az = std::abs(p.z / h.z);
      if (ax >= ay && ax >= az) {
        local = {p.x < 0 ? -1.0 : 1.0, 0, 0};
      } else if (ay >= az) {
        local = {0, p.y < 0 ? -1.0 : 1.0, 0};
      } else {
        local = {0, 0, p.z < 0 ? -1.0 : 1.0};
      }
      break;
    }
    case NormalModel::kEllipsoid:
      local = {p.x / (h.x * h.x), p.y / (h.y * h.y), p.z / (h.z * h.z)};
      break;
    case NormalModel::kCylinder: {
      const Vec3 face_local = d.to_world.Transposed() * face;
      if (std::abs(face_local.z) > 0.5) {
        local = {0, 0, face_local.z < 0 ? -1.0 : 1.0};
      } else {
        local = {p.x / (h.x * h.x), p.y / (h.y * h.y), 0};
      }
      break;
    }
  }
  const Vec3 n = Normalized(d.to_world * local);
  return Norm(n) > 0 ? n : face;
}

Vec3 Shade(const Scene& scene, const Drawable& d, const Fragment& f, const CameraFrame& frame,
           const RenderOptions& options) {
  const Rgb albedo_rgb = EvaluateMaterial(*d.material, f.texture);
  const Vec3 albedo{albedo_rgb.r, albedo_rgb.g, albedo_rgb.b};
  const Vec3 n = ShadingNormal(d, f, frame.eye);
  const Vec3 v = Normalized(frame.eye - f.world);
  Vec3 color = albedo * options.ambient;
  for (const Light& light : scene.lights) {
    const Vec3 to_light = light.position - f.world;
    const double d2 = Dot(to_light, to_light);
    if (!(d2 > 0)) continue;
    const Vec3 l = to_light / std::sqrt(d2);
    const double n_dot_l = Dot(n, l);
    if (n_dot_l <= 0) continue;
    const Vec3 irradiance = Vec3{light.color.r, light.color.g, light.color.b} *
                            (light.intensity / d2);
    color += Hadamard(albedo, irradiance) * n_dot_l;
    const double spec = d.material->specular_strength;
    if (spec > 0) {
      const double n_dot_h = std::max(0.0, Dot(n, Normalized(l + v)));
      color += irradiance * (spec * std::pow(n_dot_h, options.shininess));
    }
  }
  return color;
}

std::uint8_t Quantize(double v) {
  const double clamped = std::clamp(v, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::lround(clamped * 255.0));
}

}  // namespace

double Luminance(float r, float g, float b) {
  return 0.2126 * r + 0.7152 * g + 0.0722 * b;
}

RenderOutput Render(const Scene& scene, const RenderOptions& options) {
  const CameraFrame frame = MakeCameraFrame(scene.camera);
  if (frame.width <= 0 || frame.height <= 0) {
    throw std::invalid_argument("camera image size must be positive");
  }

  std::vector<Drawable> drawables;
  const TriangleMesh ground = GroundMesh(options.ground_half_size);
  const TriangleMesh tray = TrayMesh(scene.tray);
  if (options.draw_ground) drawables.push_back(FlatDrawable(ground, scene.background_material));
  if (options.draw_tray) drawables.push_back(FlatDrawable(tray, scene.tray.material));
  for (const FoodObject& food : scene.food_objects) {
    AddCluster(food.cluster, static_cast<std::uint16_t>(food.instance_id), false,
               options.subdivisions, drawables);
  }
  for (const Distractor& d : scene.distractors) {
    AddCluster(d.cluster, 0, true, options.subdivisions, drawables);
  }

  Rasterizer rasterizer(frame);
  rasterizer.Draw(drawables);

  RenderOutput out;
  out.width = frame.width;
  out.height = frame.height;
  const std::size_t n = static_cast<std::size_t>(frame.width) * frame.height;
  out.rgb.assign(n * 3, 0);
  out.id_buffer.assign(n, 0);
  out.depth.assign(n, std::numeric_limits<float>::infinity());
  out.distractor_mask.assign(n, 0);
  if (options.keep_linear) out.linear_rgb.assign(n * 3, 0.0f);

  const std::vector<Fragment>& fragments = rasterizer.fragments();
  const std::vector<double>& depth = rasterizer.depth();
  for (std::size_t i = 0; i < n; ++i) {
    const Fragment& f = fragments[i];
    if (f.drawable < 0) continue;
    const Drawable& d = drawables[f.drawable];
    out.depth[i] = static_cast<float>(depth[i]);
    out.id_buffer[i] = d.instance_id;
    out.distractor_mask[i] = d.distractor ? 1 : 0;
    const Vec3 c = Shade(scene, d, f, frame, options);
    out.rgb[3 * i] = Quantize(c.x);
    out.rgb[3 * i + 1] = Quantize(c.y);
    out.rgb[3 * i + 2] = Quantize(c.z);
    if (options.keep_linear) {
      out.linear_rgb[3 * i] = static_cast<float>(c.x);
      out.linear_rgb[3 * i + 1] = static_cast<float>(c.y);
      out.linear_rgb[3 * i + 2] = static_cast<float>(c.z);
    }
  }
  return out;
}

std::vector<InstanceMask> ExtractMasks(const RenderOutput& out, int min_pixels) {
  if (min_pixels < 1) throw std::invalid_argument("min_pixels must be >= 1");
  std::map<int, InstanceMask> by_id;
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      const int id = out.id_buffer[static_cast<std::size_t>(y) * out.width + x];
      if (id == 0) continue;
      auto [it, inserted] = by_id.try_emplace(id);
      InstanceMask& m = it->second;
      if (inserted) {
        m.instance_id = id;
        m.mask = BinaryMask(out.height, out.width);
      }
      m.mask.set(y, x);
      ++m.area;
    }
  }
  std::vector<InstanceMask> masks;
  for (auto& [id, m] : by_id) {
    if (m.area < min_pixels) continue;
    m.bbox = MaskBox(m.mask);
    masks.push_back(std::move(m));
  }
  return masks;
}

}  // namespace foodsynth
