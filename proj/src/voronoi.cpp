#include <array>

#include "simlat/clean2d.hpp"
#include "simlat/errors.hpp"

namespace simlat {

namespace {

using Vec2 = std::array<Rational, 2>;

Rational form(const RatMatrix& a, const Vec2& u, const Vec2& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) s += u[i] * a(i, j) * v[j];
  return s;
}

// The point x with x.v = v.v/2 and x.w = w.w/2: where the bisectors of v and w meet.
Vec2 bisector_meet(const RatMatrix& a, const Vec2& v, const Vec2& w) {
  const Rational r0 = form(a, v, v) / 2, r1 = form(a, w, w) / 2;
  // Rows (A v)^T and (A w)^T.
  const Rational p0 = a(0, 0) * v[0] + a(0, 1) * v[1], p1 = a(1, 0) * v[0] + a(1, 1) * v[1];
  const Rational q0 = a(0, 0) * w[0] + a(0, 1) * w[1], q1 = a(1, 0) * w[0] + a(1, 1) * w[1];
  const Rational det = p0 * q1 - p1 * q0;
  if (det == 0) throw InternalError("voronoi_cell: parallel relevant vectors");
  return {(r0 * q1 - p1 * r1) / det, (p0 * r1 - r0 * q0) / det};
}

EmbeddedPoint embed(const QuadLattice& lattice, const Vec2& x) {
  if (lattice.family() == QuadFamily::hexagonal) return {x[0] - x[1] / 2, x[1] / 2};
  return {x[0], x[1]};
}

}  // namespace

VoronoiPolygon voronoi_cell(const QuadLattice& lattice) {
  const RatMatrix a = lattice.gram();
  const Vec2 b1{Rational(1), Rational(0)}, b2{Rational(0), Rational(1)}, b3{Rational(-1), Rational(-1)};
  const Rational p12 = form(a, b1, b2), p13 = form(a, b1, b3), p23 = form(a, b2, b3);
  if (p12 > 0 || p13 > 0 || p23 > 0) throw InternalError("voronoi_cell: superbase is not obtuse");

  auto neg = [](const Vec2& v) { return Vec2{-v[0], -v[1]}; };
  std::vector<Vec2> relevant;
  if (p12 < 0 && p13 < 0 && p23 < 0) {
    relevant = {b1, neg(b3), b2, neg(b1), b3, neg(b2)};
  } else if (p12 == 0) {
    relevant = {b1, b2, neg(b1), neg(b2)};
  } else {
    // Not reachable for the two supported families.
    throw InternalError("voronoi_cell: unexpected degenerate superbase");
  }

  VoronoiPolygon cell;
  const std::size_t k = relevant.size();
  for (std::size_t i = 0; i < k; ++i) {
    cell.vertices.push_back(embed(lattice, bisector_meet(a, relevant[i], relevant[(i + 1) % k])));
    cell.edges.emplace_back((i + k - 1) % k, i);
    cell.relevant_vectors.push_back(
        LatticeVector{{to_int64(relevant[i][0].get_num()), to_int64(relevant[i][1].get_num())}});
  }
  return cell;
}

}  // namespace simlat
