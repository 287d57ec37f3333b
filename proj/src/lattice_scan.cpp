#include "toricfan/lattice_scan.hpp"

#include <algorithm>
#include <thread>

namespace toricfan {

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::NotCovered: return "not_covered";
    case PointClass::Origin: return "origin";
    case PointClass::RelInt1Face: return "rel_int_1_face";
    case PointClass::RelInt2Face: return "rel_int_2_face";
    case PointClass::RelIntFacet: return "rel_int_facet";
    case PointClass::InteriorOfCone: return "interior_of_cone";
  }
  return "unknown";
}

PointClass class_for_face_dim(std::size_t face_dim, std::size_t ambient_dim) {
  if (face_dim == ambient_dim) return PointClass::InteriorOfCone;
  if (face_dim == 0) return PointClass::Origin;
  if (face_dim + 1 == ambient_dim) return PointClass::RelIntFacet;
  switch (face_dim) {
    case 1: return PointClass::RelInt1Face;
    case 2: return PointClass::RelInt2Face;
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "point classes are defined for ambient dimension at most 4");
}

ConeInequalities::ConeInequalities(const Fan& fan, std::int64_t bound) : dim_(fan.ambient_dim()) {
  if (dim_ > 4) throw Error(ErrorCode::InvalidArgument, "lattice scan supports ambient dimension at most 4");
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "bound must be nonnegative");
  const Integer limit = Integer(1) << 62;
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    SquareMatrix m = fan.cone_matrix(c);
    const int s = sign(determinant(m));
    auto rows = adjugate_rows(m);
    std::array<std::array<std::int64_t, 4>, 4> n{};
    for (std::size_t i = 0; i < dim_; ++i) {
      Integer l1 = 0;
      for (std::size_t j = 0; j < dim_; ++j) {
        Integer v = s * rows[i][j];
        l1 += abs(v);
        if (abs(v) >= limit) throw Error(ErrorCode::InvalidArgument, "cone normal too large for 64-bit scan");
        n[i][j] = static_cast<std::int64_t>(v);
      }
      if (l1 * bound >= limit) throw Error(ErrorCode::InvalidArgument, "bound too large for 64-bit scan");
    }
    normals_.push_back(n);
  }
}

std::optional<unsigned> ConeInequalities::support_in_cone(std::size_t c, const std::int64_t* p) const {
  const auto& n = normals_[c];
  unsigned mask = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < dim_; ++j) s += n[i][j] * p[j];
    if (s < 0) return std::nullopt;
    if (s > 0) mask |= 1u << i;
  }
  return mask;
}

int ConeInequalities::face_dim_in_cone(std::size_t c, const std::int64_t* p) const {
  const auto& n = normals_[c];
  int positive = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < dim_; ++j) s += n[i][j] * p[j];
    if (s < 0) return -1;
    if (s > 0) ++positive;
  }
  return positive;
}

PointClass classify_point(const Fan& fan, const IntVector& p) {
  if (p.dim() != fan.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
  Integer bound = 0;
  std::array<std::int64_t, 4> q{};
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (abs(p[i]) > bound) bound = abs(p[i]);
  }
  if (bound >= (Integer(1) << 40)) throw Error(ErrorCode::InvalidArgument, "point coordinates too large");
  for (std::size_t i = 0; i < p.dim(); ++i) q[i] = static_cast<std::int64_t>(p[i]);
  ConeInequalities ineq(fan, static_cast<std::int64_t>(bound));

  std::optional<Face> face;
  std::size_t containing = 0;
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    auto mask = ineq.support_in_cone(c, q.data());
    if (!mask) continue;
    ++containing;
    if (!face) {
      Face f;
      for (std::size_t i = 0; i < fan.ambient_dim(); ++i)
        if (*mask & (1u << i)) f.push_back(fan.cone(c).rays[i]);
      std::sort(f.begin(), f.end());
      face = std::move(f);
    }
  }
  if (!face) return PointClass::NotCovered;

  std::size_t cones_with_face = 0;
  for (const auto& cone : fan.cones()) {
    Face rays = cone.rays;
    std::sort(rays.begin(), rays.end());
    if (std::includes(rays.begin(), rays.end(), face->begin(), face->end())) ++cones_with_face;
  }
  if (cones_with_face != containing)
    throw Error(ErrorCode::Internal, p.to_string() + " lies in " + std::to_string(containing) +
                                         " cones but its minimal face lies in " + std::to_string(cones_with_face));
  return class_for_face_dim(face->size(), fan.ambient_dim());
}

std::uint64_t ScanReport::count(PointClass c) const {
  if (c == PointClass::NotCovered) return not_covered;
  std::uint64_t total_for_class = 0;
  for (std::size_t k = 0; k < counts_by_face_dim.size(); ++k)
    if (class_for_face_dim(k, ambient_dim) == c) total_for_class += counts_by_face_dim[k];
  return total_for_class;
}

bool ScanReport::sum_matches() const {
  std::uint64_t s = not_covered;
  for (auto c : counts_by_face_dim) s += c;
  return s == total;
}

namespace {

struct SlabResult {
  std::vector<std::uint64_t> counts;
  std::uint64_t not_covered = 0;
  std::vector<IntVector> one_face;
  std::vector<IntVector> witnesses;
};

IntVector to_int_vector(const std::int64_t* p, std::size_t n) {
  IntVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = p[i];
  return v;
}

void scan_slabs(const ConeInequalities& ineq, std::int64_t bound, std::int64_t first_lo, std::int64_t first_hi,
                bool collect_one_face, SlabResult& out) {
  const std::size_t n = ineq.ambient_dim();
  const std::size_t cones = ineq.cone_count();
  out.counts.assign(n + 1, 0);
  std::array<std::int64_t, 4> p{};
  p[0] = first_lo;
  for (std::size_t i = 1; i < n; ++i) p[i] = -bound;
  std::size_t hint = 0;

  while (true) {
    int dim = -1;
    if (cones > 0) {
      dim = ineq.face_dim_in_cone(hint, p.data());
      for (std::size_t c = 0; dim < 0 && c < cones; ++c) {
        if (c == hint) continue;
        dim = ineq.face_dim_in_cone(c, p.data());
        if (dim >= 0) hint = c;
      }
    }
    if (dim < 0) {
      ++out.not_covered;
      if (out.witnesses.size() < ScanReport::kMaxWitnesses) out.witnesses.push_back(to_int_vector(p.data(), n));
    } else {
      ++out.counts[static_cast<std::size_t>(dim)];
      if (collect_one_face && dim == 1) out.one_face.push_back(to_int_vector(p.data(), n));
    }

    // Odometer, last coordinate fastest.
    std::size_t k = n;
    while (k > 0) {
      --k;
      std::int64_t hi = k == 0 ? first_hi : bound;
      if (p[k] < hi) {
        ++p[k];
        break;
      }
      if (k == 0) return;
      p[k] = -bound;
    }
  }
}

}  // namespace

ScanReport scan_box(const Fan& fan, std::int64_t bound, bool collect_one_face, unsigned workers) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be at least 1");
  ConeInequalities ineq(fan, bound);
  const std::size_t n = fan.ambient_dim();
  const std::int64_t width = 2 * bound + 1;
  const std::int64_t w = std::clamp<std::int64_t>(workers == 0 ? 1 : workers, 1, width);

  // Contiguous slabs of the first coordinate, as even as possible.
  std::vector<SlabResult> results(static_cast<std::size_t>(w));
  std::vector<std::thread> threads;
  std::int64_t lo = -bound;
  for (std::int64_t i = 0; i < w; ++i) {
    std::int64_t len = width / w + (i < width % w ? 1 : 0);
    std::int64_t hi = lo + len - 1;
    auto& slot = results[static_cast<std::size_t>(i)];
    if (w == 1) {
      scan_slabs(ineq, bound, lo, hi, collect_one_face, slot);
    } else {
      threads.emplace_back([&ineq, bound, lo, hi, collect_one_face, &slot] {
        scan_slabs(ineq, bound, lo, hi, collect_one_face, slot);
      });
    }
    lo = hi + 1;
  }
  for (auto& t : threads) t.join();

  ScanReport rep;
  rep.bound = bound;
  rep.ambient_dim = n;
  rep.total = 1;
  for (std::size_t i = 0; i < n; ++i) rep.total *= static_cast<std::uint64_t>(width);
  rep.counts_by_face_dim.assign(n + 1, 0);
  if (collect_one_face) rep.one_face_points.emplace();
  // Slabs are in increasing first coordinate, so concatenation keeps the
  // lexicographic order.
  for (auto& r : results) {
    for (std::size_t k = 0; k <= n; ++k) rep.counts_by_face_dim[k] += r.counts[k];
    rep.not_covered += r.not_covered;
    if (collect_one_face)
      rep.one_face_points->insert(rep.one_face_points->end(), r.one_face.begin(), r.one_face.end());
    for (auto& wv : r.witnesses)
      if (rep.not_covered_witnesses.size() < ScanReport::kMaxWitnesses) rep.not_covered_witnesses.push_back(wv);
  }
  return rep;
}

}  // namespace toricfan
