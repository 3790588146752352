#include "latpoly/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <set>
#include <thread>

#include "json_util.hpp"
#include "latpoly/cayley.hpp"
#include "latpoly/io.hpp"

namespace latpoly {

namespace {

using Ray = SmoothFan2D::Ray;

std::int64_t det(const Ray& a, const Ray& b) { return a[0] * b[1] - a[1] * b[0]; }

// Rays of `seq` rewritten in the basis (seq[0], seq[1]).
std::vector<Ray> inFirstBasis(const std::vector<Ray>& seq) {
  const auto& [a, b] = seq[0];
  const auto& [c, d] = seq[1];
  const std::int64_t dt = a * d - b * c;  // +-1
  std::vector<Ray> out;
  out.reserve(seq.size());
  for (const auto& [x, y] : seq) out.push_back({dt * (d * x - c * y), dt * (-b * x + a * y)});
  return out;
}

struct FanPolygons {
  const std::vector<Ray>& normals;
  std::size_t maxPoints;
  std::vector<Ray> edges;  // rotated normals
  std::vector<std::int64_t> lengths;
  std::vector<LatticePolytope> out;

  void search(std::size_t i, std::int64_t used, std::int64_t sx, std::int64_t sy) {
    const std::size_t d = edges.size();
    if (i + 2 == d) {
      // l_{d-2} w_{d-2} + l_{d-1} w_{d-1} = -S, solved by Cramer (det 1)
      const Ray s{-sx, -sy};
      const std::int64_t a = det(s, edges[d - 1]);
      const std::int64_t b = det(edges[d - 2], s);
      if (a < 1 || b < 1) return;
      if (used + a + b > static_cast<std::int64_t>(maxPoints)) return;
      lengths[d - 2] = a;
      lengths[d - 1] = b;
      emit();
      return;
    }
    const std::int64_t remaining = static_cast<std::int64_t>(d - i - 1);
    for (std::int64_t l = 1; used + l + remaining <= static_cast<std::int64_t>(maxPoints); ++l) {
      lengths[i] = l;
      search(i + 1, used + l, sx + l * edges[i][0], sy + l * edges[i][1]);
    }
  }

  void emit() {
    std::vector<Ray> vertices{{0, 0}};
    std::int64_t boundary = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      const Ray& last = vertices.back();
      vertices.push_back({last[0] + lengths[i] * edges[i][0], last[1] + lengths[i] * edges[i][1]});
    }
    for (auto l : lengths) boundary += l;
    std::int64_t twiceArea = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      twiceArea += det(vertices[i], vertices[(i + 1) % vertices.size()]);
    // Pick: interior = A - B/2 + 1, so interior + boundary = (2A + B + 2) / 2
    const std::int64_t points = (twiceArea + boundary + 2) / 2;
    if (points > static_cast<std::int64_t>(maxPoints)) return;
    std::vector<IntVector> pts;
    for (const auto& [x, y] : vertices) pts.push_back({Integer(static_cast<long>(x)), Integer(static_cast<long>(y))});
    out.push_back(LatticePolytope::fromVertices(pts));
  }
};

unsigned threadCount(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LATPOLY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ClassificationRecord makeRecord(const LatticePolytope& normal) {
  return ClassificationRecord{normal, latticePoints(normal).size(), isSmooth(normal),
                              isCayley(normal).has_value()};
}

bool recordLess(const ClassificationRecord& a, const ClassificationRecord& b) {
  if (a.latticePointCount != b.latticePointCount) return a.latticePointCount < b.latticePointCount;
  return a.polytope.vertices() < b.polytope.vertices();
}

}  // namespace

bool SmoothFan2D::isValid() const {
  const std::size_t d = rays.size();
  if (d < 3) return false;
  double turning = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const Ray& a = rays[i];
    const Ray& b = rays[(i + 1) % d];
    if (det(a, b) != 1) return false;
    turning += std::atan2(static_cast<double>(det(a, b)),
                          static_cast<double>(a[0] * b[0] + a[1] * b[1]));
  }
  return std::abs(turning - 2 * std::numbers::pi) < 1e-6;
}

SmoothFan2D SmoothFan2D::canonical() const {
  const std::size_t d = rays.size();
  std::vector<Ray> best;
  for (std::size_t start = 0; start < d; ++start) {
    for (int orientation : {1, -1}) {
      std::vector<Ray> seq;
      seq.reserve(d);
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t idx = orientation > 0 ? (start + j) % d : (start + d - j) % d;
        seq.push_back(rays[idx]);
      }
      auto candidate = inFirstBasis(seq);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return SmoothFan2D{std::move(best)};
}

std::vector<SmoothFan2D> enumerateSmoothFans2D(std::size_t maxRays, std::int64_t aCap) {
  if (maxRays < 3) throw InvalidArgument("a complete fan needs at least three rays");
  if (aCap < 0) throw InvalidArgument("Hirzebruch parameter cap must be nonnegative");

  std::set<SmoothFan2D> all;
  std::vector<SmoothFan2D> level{SmoothFan2D{{{1, 0}, {0, 1}, {-1, -1}}}.canonical()};
  all.insert(level.front());
  std::set<SmoothFan2D> hirzebruch;
  if (maxRays >= 4)
    for (std::int64_t a = 0; a <= aCap; ++a)
      hirzebruch.insert(SmoothFan2D{{{1, 0}, {0, 1}, {-1, a}, {0, -1}}}.canonical());

  for (std::size_t size = 3; size < maxRays; ++size) {
    std::set<SmoothFan2D> next;
    if (size + 1 == 4) next = hirzebruch;
    for (const auto& fan : level) {
      const std::size_t d = fan.rays.size();
      for (std::size_t i = 0; i < d; ++i) {
        const Ray& a = fan.rays[i];
        const Ray& b = fan.rays[(i + 1) % d];
        std::vector<Ray> rays = fan.rays;
        rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i + 1), Ray{a[0] + b[0], a[1] + b[1]});
        next.insert(SmoothFan2D{std::move(rays)}.canonical());
      }
    }
    level.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  return {all.begin(), all.end()};
}

std::vector<LatticePolytope> polygonsFromFan(const SmoothFan2D& f, std::size_t maxPoints) {
  if (!f.isValid()) throw InvalidArgument("not a smooth complete fan");
  FanPolygons search{f.rays, maxPoints, {}, std::vector<std::int64_t>(f.rays.size()), {}};
  for (const auto& [x, y] : f.rays) search.edges.push_back({-y, x});
  search.search(0, 0, 0, 0);
  return std::move(search.out);
}

std::vector<ClassificationRecord> listSmooth2D(std::size_t maxPoints,
                                               const Smooth2DOptions& options) {
  if (maxPoints < 3) throw InvalidArgument("the smallest smooth polygon has three lattice points");
  const std::size_t maxRays = options.maxRays == 0 ? maxPoints : options.maxRays;
  const auto fans = enumerateSmoothFans2D(std::max<std::size_t>(maxRays, 3), options.aCap);

  const unsigned workers = std::min<std::size_t>(threadCount(options.threads), fans.size());
  std::map<std::vector<IntVector>, LatticePolytope> found;
  std::mutex lock;
  auto work = [&](unsigned id) {
    std::map<std::vector<IntVector>, LatticePolytope> local;
    for (std::size_t i = id; i < fans.size(); i += workers)
      for (const auto& poly : polygonsFromFan(fans[i], maxPoints)) {
        auto nf = normalForm(poly);
        auto key = nf.vertices();
        local.emplace(std::move(key), std::move(nf));
      }
    std::lock_guard guard(lock);
    found.merge(local);
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }

  std::vector<ClassificationRecord> records;
  for (const auto& [key, poly] : found) records.push_back(makeRecord(poly));
  std::sort(records.begin(), records.end(), recordLess);
  return records;
}

std::vector<ClassificationRecord> parseClassification3D(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("classification file must be a JSON array");

  std::vector<ClassificationRecord> records;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    try {
      const auto& entry = doc[i];
      if (!entry.is_object() || !entry.contains("vertices"))
        throw ParseError("entry needs a \"vertices\" field");
      const auto pts = detail::pointsFromJson(entry["vertices"]);
      if (pts.front().size() != 3) throw DimensionError("vertices must have three coordinates");
      const auto p = LatticePolytope::fromVertices(pts);
      if (p.dim() != 3) throw DimensionError("polytope is not three-dimensional");
      if (!isSmooth(p)) throw NonSmoothError("polytope is not smooth");
      const auto nf = normalForm(p);
      auto record = makeRecord(nf);
      if (record.latticePointCount > 16) throw InvalidArgument("more than 16 lattice points");
      records.push_back(std::move(record));
    } catch (const Error& e) {
      throw ValidationError(i, e.what());
    }
  }
  return records;
}

std::vector<ClassificationRecord> loadClassification3D(const std::string& path) {
  return parseClassification3D(readTextFile(path));
}

std::map<std::size_t, std::size_t> tallyByPointCount(const std::vector<ClassificationRecord>& r) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& rec : r) ++out[rec.latticePointCount];
  return out;
}

std::map<bool, std::size_t> tallyByCayley(const std::vector<ClassificationRecord>& r) {
  std::map<bool, std::size_t> out;
  for (const auto& rec : r) ++out[rec.isCayleyFlag];
  return out;
}

}  // namespace latpoly
