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
#include <cmath>
#include <map>
#include <optional>
#include <set>

#include <gtest/gtest.h>

#include "foodsynth/gen_config.h"
#include "foodsynth/mesh.h"
#include "foodsynth/randomizer.h"
#include "foodsynth/renderer.h"
#include "support/test_scenes.h"

namespace foodsynth {
namespace {

using testing::BareRenderOptions;

GenConfig SmallConfig(int size = 128) {
  GenConfig c;
  c.image_width = size;
  c.image_height = size;
  return c;
}

// Ray through the center of pixel (x, y), built from the camera
// description alone.
struct Ray {
  Vec3 origin;
  Vec3 dir;
};

Ray PixelRay(const Camera& cam, int x, int y) {
  const Vec3 forward = Normalized(cam.look_at - cam.position);
  const Vec3 right = Normalized(Cross(forward, cam.up));
  const Vec3 up = Cross(right, forward);
  const double f = (cam.height / 2.0) / std::tan(cam.vertical_fov / 2.0);
  const double sx = x + 0.5 - cam.width / 2.0;
  const double sy = cam.height / 2.0 - (y + 0.5);
  return {cam.position, forward * f + right * sx + up * sy};
}

// Moller-Trumbore with a small tolerance on the barycentric bounds.
bool HitsTriangle(const Ray& ray, const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 e1 = b - a, e2 = c - a;
  const Vec3 p = Cross(ray.dir, e2);
  const double det = Dot(e1, p);
  if (std::abs(det) < 1e-18) return false;
  const double inv = 1.0 / det;
  const Vec3 s = ray.origin - a;
  const double u = Dot(s, p) * inv;
  const Vec3 q = Cross(s, e1);
  const double v = Dot(ray.dir, q) * inv;
  const double t = Dot(e2, q) * inv;
  const double eps = 1e-6;
  return u >= -eps && v >= -eps && u + v <= 1 + eps && t > 0;
}

bool HitsFood(const Ray& ray, const FoodObject& food, int subdivisions) {
  for (std::size_t k = 0; k < food.cluster.primitives.size(); ++k) {
    const TriangleMesh mesh = Triangulate(food.cluster.primitives[k], subdivisions);
    const RigidTransform w = WorldTransform(food, k);
    for (const auto& t : mesh.triangles) {
      if (HitsTriangle(ray, w.Apply(mesh.vertices[t[0]]), w.Apply(mesh.vertices[t[1]]),
                       w.Apply(mesh.vertices[t[2]]))) {
        return true;
      }
    }
  }
  return false;
}

TEST(RenderTest, BuffersShareDimensions) {
  const Scene scene = SampleScene(SmallConfig(96), 1);
  const RenderOutput out = Render(scene);
  EXPECT_EQ(out.width, 96);
  EXPECT_EQ(out.height, 96);
  EXPECT_EQ(out.rgb.size(), 96u * 96u * 3u);
  EXPECT_EQ(out.id_buffer.size(), 96u * 96u);
  EXPECT_EQ(out.depth.size(), 96u * 96u);
}

TEST(RenderTest, Deterministic) {
  const Scene scene = SampleScene(SmallConfig(), 2);
  const RenderOutput a = Render(scene);
  const RenderOutput b = Render(scene);
  EXPECT_EQ(a.rgb, b.rgb);
  EXPECT_EQ(a.id_buffer, b.id_buffer);
  EXPECT_EQ(a.depth, b.depth);
}

TEST(RenderTest, NothingInViewMeansNoIds) {
  Scene scene = SampleScene(SmallConfig(), 3);
  for (FoodObject& f : scene.food_objects) {
    f.cluster.transform.translation = scene.camera.position * 3.0;
  }
  scene.distractors.clear();
  const RenderOutput out = Render(scene);
  for (std::uint16_t id : out.id_buffer) ASSERT_EQ(id, 0);
  EXPECT_TRUE(ExtractMasks(out, 1).empty());
}

TEST(RenderTest, IdsBelongToFoodsAndDistractorsAreBackground) {
  GenConfig config = SmallConfig();
  config.distractor_count = {3, 5};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Scene scene = SampleScene(config, seed);
    std::set<int> ids;
    for (const FoodObject& f : scene.food_objects) ids.insert(f.instance_id);
    const RenderOutput out = Render(scene);
    for (std::size_t i = 0; i < out.id_buffer.size(); ++i) {
      if (out.id_buffer[i] != 0) ASSERT_TRUE(ids.count(out.id_buffer[i]));
      if (out.distractor_mask[i]) ASSERT_EQ(out.id_buffer[i], 0);
      if (out.id_buffer[i] == 0 && out.distractor_mask[i] == 0) continue;
      ASSERT_TRUE(std::isfinite(out.depth[i]));
    }
  }
}

TEST(RenderTest, NearerBoxOwnsOverlap) {
  Scene scene = testing::CenteredSphereScene(1.0, 10.0, 0.5, 128);
  Primitive box;
  box.kind = PrimitiveKind::kBox;
  box.half_extents = {1, 1, 0.2};
  FoodObject near, far;
  near.instance_id = 1;
  near.cluster.primitives = {box};
  near.cluster.transform = RigidTransform::Translation({0.5, 0, 1});
  far.instance_id = 2;
  far.cluster.primitives = {box};
  far.cluster.transform = RigidTransform::Translation({-0.5, 0, 0});
  // Draw the far box last so a missing depth test would show.
  scene.food_objects = {near, far};
  const RenderOutput out = Render(scene, BareRenderOptions());
  scene.food_objects = {far};
  const RenderOutput far_only = Render(scene, BareRenderOptions());
  std::size_t overlap = 0;
  for (std::size_t i = 0; i < out.id_buffer.size(); ++i) {
    if (far_only.id_buffer[i] == 2 && out.id_buffer[i] != 2) {
      EXPECT_EQ(out.id_buffer[i], 1);
      ++overlap;
    }
  }
  EXPECT_GT(overlap, 100u);
}

TEST(RenderTest, SphereAreaMatchesDisc) {
  const Scene scene = testing::CenteredSphereScene(1.0, 8.0, 0.6, 256);
  const RenderOutput out = Render(scene, BareRenderOptions());
  double area = 0.0;
  for (std::uint16_t id : out.id_buffer) area += id == 1 ? 1.0 : 0.0;
  const double expected = testing::AnalyticDiscArea(1.0, 8.0, 0.6, 256);
  EXPECT_NEAR(area / expected, 1.0, 0.05);
}

TEST(RenderTest, DegenerateCameraThrows) {
  Scene scene = SampleScene(SmallConfig(), 4);
  scene.camera.look_at = scene.camera.position;
  EXPECT_THROW(Render(scene), std::invalid_argument);
}

TEST(RenderTest, DoublingLightsNeverDarkens) {
  RenderOptions options;
  options.keep_linear = true;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Scene scene = SampleScene(SmallConfig(96), seed);
    const RenderOutput base = Render(scene, options);
    for (Light& l : scene.lights) l.intensity *= 2.0;
    const RenderOutput bright = Render(scene, options);
    for (std::size_t i = 0; i < base.id_buffer.size(); ++i) {
      const double a = Luminance(base.linear_rgb[3 * i], base.linear_rgb[3 * i + 1],
                                 base.linear_rgb[3 * i + 2]);
      const double b = Luminance(bright.linear_rgb[3 * i], bright.linear_rgb[3 * i + 1],
                                 bright.linear_rgb[3 * i + 2]);
      ASSERT_GE(b, a);
    }
  }
}

TEST(RenderTest, MaskPixelsReprojectOntoTheirObject) {
  GenConfig config = SmallConfig(64);
  config.subdivisions = 6;
  RenderOptions options;
  options.subdivisions = config.subdivisions;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Scene scene = SampleScene(config, seed);
    std::map<int, const FoodObject*> by_id;
    for (const FoodObject& f : scene.food_objects) by_id[f.instance_id] = &f;
    const RenderOutput out = Render(scene, options);
    std::size_t checked = 0;
    for (int y = 0; y < out.height; ++y) {
      for (int x = 0; x < out.width; ++x) {
        const int id = out.id_buffer[static_cast<std::size_t>(y) * out.width + x];
        if (id == 0) continue;
        ++checked;
        ASSERT_TRUE(HitsFood(PixelRay(scene.camera, x, y), *by_id.at(id), config.subdivisions))
            << "seed " << seed << " pixel " << x << "," << y << " id " << id;
      }
    }
    EXPECT_GT(checked, 0u);
  }
}

TEST(ExtractMasksTest, EmptyAndBelowThreshold) {
  RenderOutput out;
  out.width = 16;
  out.height = 16;
  out.id_buffer.assign(256, 0);
  EXPECT_TRUE(ExtractMasks(out, 1).empty());
  for (int i = 0; i < 10; ++i) out.id_buffer[i] = 4;
  EXPECT_TRUE(ExtractMasks(out, 64).empty());
  const auto masks = ExtractMasks(out, 10);
  ASSERT_EQ(masks.size(), 1u);
  EXPECT_EQ(masks[0].instance_id, 4);
  EXPECT_EQ(masks[0].area, 10);
  EXPECT_EQ(masks[0].bbox, (BoundingBox{0, 0, 10, 1}));
  EXPECT_ANY_THROW(ExtractMasks(out, 0));
}

TEST(ExtractMasksTest, UnionEqualsNonzeroIds) {
  GenConfig config = SmallConfig(160);
  config.food_count = {3, 3};
  config.distractor_count = {2, 2};
  const Scene scene = SampleScene(config, 5);
  const RenderOutput out = Render(scene);
  const auto masks = ExtractMasks(out, 1);
  ASSERT_EQ(masks.size(), 3u);
  std::vector<int> cover(out.id_buffer.size(), 0);
  for (std::size_t k = 0; k < masks.size(); ++k) {
    if (k > 0) EXPECT_LT(masks[k - 1].instance_id, masks[k].instance_id);
    EXPECT_EQ(masks[k].area, MaskArea(masks[k].mask));
    EXPECT_EQ(masks[k].bbox, MaskBox(masks[k].mask));
    for (std::size_t i = 0; i < cover.size(); ++i) cover[i] += masks[k].mask.data[i];
  }
  for (std::size_t i = 0; i < cover.size(); ++i) {
    ASSERT_LE(cover[i], 1);
    ASSERT_EQ(cover[i] == 1, out.id_buffer[i] != 0);
  }
}

}  // namespace
}  // namespace foodsynth
