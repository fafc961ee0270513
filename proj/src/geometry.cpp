#include "stabgem/geometry.hpp"

#include "stabgem/errors.hpp"

namespace stabgem {

namespace {

double fold(double d, double period) {
  if (period <= 0.0) return d;
  d = std::fmod(d, period);
  if (d > period / 2.0) d -= period;
  if (d <= -period / 2.0) d += period;
  return d;
}

// value mod period into [0, period), on integer-valued doubles
long wrap_long(double v, double period) {
  long p = std::lround(period);
  long x = std::lround(v) % p;
  if (x < 0) x += p;
  return x;
}

}  // namespace

Vec2 Layout::displacement(Vec2 a, Vec2 b) const {
  return {fold(b.x - a.x, period_x), fold(b.y - a.y, period_y)};
}

BitVec region_where(const Layout& lay, Vec2 center, const std::function<bool(Vec2)>& pred) {
  BitVec r(lay.size());
  for (std::size_t q = 0; q < lay.size(); q++)
    if (pred(lay.displacement(center, lay.pos[q]))) r.set(q);
  return r;
}

BitVec disk_region(const Layout& lay, Vec2 center, double radius) {
  return region_where(lay, center,
                      [radius](Vec2 d) { return std::hypot(d.x, d.y) <= radius; });
}

BitVec rect_region(const Layout& lay, Vec2 origin, Vec2 size) {
  BitVec r(lay.size());
  long w = std::lround(size.x), h = std::lround(size.y);
  for (std::size_t q = 0; q < lay.size(); q++) {
    double ux = lay.pos[q].x - origin.x;
    double uy = lay.pos[q].y - origin.y;
    long u = lay.period_x > 0.0 ? wrap_long(ux, lay.period_x) : std::lround(ux);
    long v = lay.period_y > 0.0 ? wrap_long(uy, lay.period_y) : std::lround(uy);
    if (u >= 0 && u < w && v >= 0 && v < h) r.set(q);
  }
  return r;
}

BitVec thicken(const Layout& lay, const BitVec& region, double t) {
  if (t <= 0.0) return region;
  std::vector<Vec2> anchors;
  for (std::uint32_t q : region.ones()) anchors.push_back(lay.pos[q]);
  BitVec out = region;
  for (std::size_t q = 0; q < lay.size(); q++) {
    if (out.test(q)) continue;
    for (const Vec2& a : anchors) {
      if (lay.dist(lay.pos[q], a) <= t) {
        out.set(q);
        break;
      }
    }
  }
  return out;
}

Vec2 support_centroid(const Layout& lay, const Pauli& p) {
  auto supp = p.support();
  if (supp.empty()) return {0.0, 0.0};
  Vec2 anchor = lay.pos[supp[0]];
  double sx = 0.0, sy = 0.0;
  for (std::uint32_t q : supp) {
    Vec2 d = lay.displacement(anchor, lay.pos[q]);
    sx += d.x;
    sy += d.y;
  }
  return {anchor.x + sx / (double)supp.size(), anchor.y + sy / (double)supp.size()};
}

BitVec mesh_region(const Layout& lay, const MeshSpec& m) {
  long pitch = m.pitch();
  if (m.band <= 0 || m.hole < 0) throw ConfigError("mesh needs band > 0 and hole >= 0");
  if (lay.period_x > 0.0 && std::lround(lay.period_x) % pitch != 0)
    throw ConfigError("mesh pitch does not divide the x period");
  if (lay.period_y > 0.0 && std::lround(lay.period_y) % pitch != 0)
    throw ConfigError("mesh pitch does not divide the y period");
  auto band_coord = [pitch](double v) {
    long u = std::lround(v) % pitch;
    return u < 0 ? u + pitch : u;
  };
  BitVec r(lay.size());
  for (std::size_t q = 0; q < lay.size(); q++) {
    long u = band_coord(lay.pos[q].x - (double)m.ox);
    long v = band_coord(lay.pos[q].y - (double)m.oy);
    if (u < m.band || v < m.band) r.set(q);
  }
  return r;
}

std::vector<CrossSquare> crossing_squares(const MeshSpec& m1, const MeshSpec& m2, double period_x,
                                          double period_y) {
  if (m1.band != m2.band || m1.hole != m2.hole)
    throw ConfigError("crossing meshes must share band and hole sizes");
  long pitch = m1.pitch();
  long qx = std::lround(period_x) / pitch;
  long qy = std::lround(period_y) / pitch;
  std::vector<CrossSquare> out;
  // horizontal bands of mesh 1 crossing vertical bands of mesh 2
  for (long row = 0; row < qy; row++)
    for (long col = 0; col < qx; col++)
      out.push_back({m2.ox + col * pitch, m1.oy + row * pitch, m1.band, 0, col, row});
  // vertical bands of mesh 1 crossing horizontal bands of mesh 2
  for (long row = 0; row < qy; row++)
    for (long col = 0; col < qx; col++)
      out.push_back({m1.ox + col * pitch, m2.oy + row * pitch, m1.band, 1, col, row});
  return out;
}

BitVec cross_square_region(const Layout& lay, const CrossSquare& q) {
  return rect_region(lay, {(double)q.u0, (double)q.v0}, {(double)q.band, (double)q.band});
}

PatchGrid partition_into_patches(const Layout& lay, long patch, long gap) {
  if (patch <= 0 || gap < 0) throw ConfigError("patch size must be positive and gap nonnegative");
  PatchGrid g;
  g.patch = patch;
  g.gap = gap;
  long pitch = patch + gap;
  auto count_along = [&](double period) -> long {
    if (period <= 0.0) throw ConfigError("patch partition needs a periodic layout");
    long p = std::lround(period);
    if (patch > p) return 0;   // axis too small for even one patch
    if (patch == p) return 1;  // one patch covers the axis exactly
    long c = p / pitch;
    return c > 0 ? c : 1;
  };
  g.nx = count_along(lay.period_x);
  g.ny = count_along(lay.period_y);
  if (g.nx == 0 || g.ny == 0) {
    g.nx = g.ny = 0;
    return g;  // empty partition, caller decides whether that is fatal
  }
  long px = std::lround(lay.period_x), py = std::lround(lay.period_y);
  double wx = (double)std::min(patch, px);
  double wy = (double)std::min(patch, py);
  for (long j = 0; j < g.ny; j++) {
    for (long i = 0; i < g.nx; i++) {
      Vec2 origin = {(double)(i * pitch), (double)(j * pitch)};
      g.origins.push_back(origin);
      g.patches.push_back(rect_region(lay, origin, {wx, wy}));
    }
  }
  return g;
}

}  // namespace stabgem
