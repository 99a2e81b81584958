#include "multseq/newton.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <utility>

#include "multseq/exact.hpp"

namespace multseq {

namespace {

using exact::BigInt;
using exact::Rational;

// Membership of v in conv(pts) + R^d_{>=0}, decided exactly:
// is there lambda >= 0 with sum lambda = 1 and sum lambda_s * s <= v?
bool inUpwardHull(const std::vector<Monomial>& pts, const Monomial& v, int d) {
  if (pts.empty()) return false;
  const std::size_t n = pts.size();
  const std::size_t dd = static_cast<std::size_t>(d);
  std::vector<std::vector<Rational>> a(dd + 1,
                                       std::vector<Rational>(n + dd, 0));
  std::vector<Rational> b(dd + 1, 0);
  for (std::size_t k = 0; k < dd; ++k) {
    for (std::size_t s = 0; s < n; ++s) {
      a[k][s] = static_cast<long>(pts[s][static_cast<int>(k)]);
    }
    a[k][n + k] = 1;  // slack: sum lambda_s s_k + t_k = v_k
    b[k] = static_cast<long>(v[static_cast<int>(k)]);
  }
  for (std::size_t s = 0; s < n; ++s) a[dd][s] = 1;
  b[dd] = 1;
  return exact::feasibleNonnegativeSystem(std::move(a), std::move(b));
}

std::uint64_t binomialCapped(std::uint64_t n, std::uint64_t k,
                             std::uint64_t cap) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Facets of conv(verts) + R^d_{>=0} by exhausting the supporting hyperplanes
// spanned by d of the lifted generators (v,1) and (e_k,0). Every facet's
// homogenization contains d linearly independent lifted generators, so the
// enumeration is complete; validity against all generators makes it sound.
std::vector<Halfspace> enumerateFacets(const std::vector<Monomial>& verts,
                                       int d) {
  const std::size_t nv = verts.size();
  const std::size_t dd = static_cast<std::size_t>(d);
  const std::size_t n = nv + dd;
  if (binomialCapped(n, dd, 2'000'000) > 2'000'000) {
    throw ResourceCapError("facet enumeration: too many vertex subsets");
  }

  std::vector<std::vector<BigInt>> lifted(n, std::vector<BigInt>(dd + 1, 0));
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t k = 0; k < dd; ++k) {
      lifted[i][k] = static_cast<long>(verts[i][static_cast<int>(k)]);
    }
    lifted[i][dd] = 1;
  }
  for (std::size_t k = 0; k < dd; ++k) lifted[nv + k][k] = 1;

  std::set<std::pair<std::vector<BigInt>, BigInt>> found;
  std::vector<std::size_t> idx(dd);
  for (std::size_t i = 0; i < dd; ++i) idx[i] = i;
  const bool any = dd <= n;
  while (any) {
    std::vector<std::vector<BigInt>> m(dd);
    for (std::size_t i = 0; i < dd; ++i) m[i] = lifted[idx[i]];
    std::vector<BigInt> x = exact::kernelVector(m);
    bool zero = true;
    for (const auto& c : x) {
      if (c != 0) {
        zero = false;
        break;
      }
    }
    if (!zero) {
      bool hasPos = false, hasNeg = false;
      for (const auto& g : lifted) {
        BigInt dot = 0;
        for (std::size_t j = 0; j <= dd; ++j) dot += x[j] * g[j];
        if (dot > 0) hasPos = true;
        if (dot < 0) hasNeg = true;
        if (hasPos && hasNeg) break;
      }
      if (!(hasPos && hasNeg)) {
        if (hasNeg) {
          for (auto& c : x) c = -c;
        }
        std::vector<BigInt> normal(x.begin(), x.begin() + d);
        bool normalZero = true;
        for (const auto& c : normal) {
          if (c != 0) {
            normalZero = false;
            break;
          }
        }
        if (!normalZero) found.insert({std::move(normal), -x[dd]});
      }
    }
    // next d-combination of {0..n-1}
    std::size_t i = dd;
    while (i > 0 && idx[i - 1] == n - dd + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < dd; ++j) idx[j] = idx[j - 1] + 1;
  }

  std::vector<Halfspace> facets;
  facets.reserve(found.size());
  for (auto& [normal, offset] : found) {
    facets.push_back(Halfspace{normal, offset});
  }
  return facets;
}

BigInt facetDot(const Halfspace& f, const Monomial& v) {
  BigInt dot = 0;
  for (std::size_t k = 0; k < f.normal.size(); ++k) {
    dot += f.normal[k] * static_cast<long>(v[static_cast<int>(k)]);
  }
  return dot;
}

bool inPolyhedronExpo(const NewtonPolyhedron& p, const std::vector<Expo>& v) {
  for (const auto& f : p.facets) {
    BigInt dot = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      dot += f.normal[k] * static_cast<long>(v[k]);
    }
    if (dot < f.offset) return false;
  }
  return true;
}

// Compact faces of the polyhedron, each recorded once as (vertex bitmask,
// affine dimension). A face is the equality set of a facet subset S; it is
// compact iff every coordinate has a facet in S with positive normal entry
// (that kills the whole recession orthant).
struct CompactFace {
  std::uint64_t vmask;
  int dim;
};

int affineRankOfVertices(const std::vector<Monomial>& verts,
                         std::uint64_t vmask, int d) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (vmask & (std::uint64_t{1} << i)) members.push_back(i);
  }
  if (members.size() <= 1) return 0;
  std::vector<std::vector<BigInt>> m(members.size() - 1,
                                     std::vector<BigInt>(static_cast<std::size_t>(d)));
  for (std::size_t i = 1; i < members.size(); ++i) {
    for (int k = 0; k < d; ++k) {
      m[i - 1][static_cast<std::size_t>(k)] =
          static_cast<long>(verts[members[i]][k] - verts[members[0]][k]);
    }
  }
  return exact::rank(std::move(m));
}

std::vector<CompactFace> compactFaces(const NewtonPolyhedron& p) {
  const int d = p.ring.dim();
  const std::size_t nv = p.vertices.size();
  const std::size_t nf = p.facets.size();
  if (nv > 64) {
    throw ResourceCapError("face lattice: more than 64 vertices");
  }
  if (nf > 20) {
    throw ResourceCapError("face lattice: more than 20 facets");
  }

  std::vector<std::uint64_t> tight(nf, 0), cover(nf, 0);
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t i = 0; i < nv; ++i) {
      if (facetDot(p.facets[f], p.vertices[i]) == p.facets[f].offset) {
        tight[f] |= std::uint64_t{1} << i;
      }
    }
    for (int k = 0; k < d; ++k) {
      if (p.facets[f].normal[static_cast<std::size_t>(k)] > 0) {
        cover[f] |= std::uint64_t{1} << k;
      }
    }
  }

  const std::uint64_t allVerts =
      nv == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nv) - 1;
  const std::uint64_t allCoords = (std::uint64_t{1} << d) - 1;
  const std::size_t nMasks = std::size_t{1} << nf;
  std::vector<std::uint64_t> vm(nMasks), cm(nMasks);
  vm[0] = allVerts;
  cm[0] = 0;

  std::map<std::uint64_t, int> dims;  // vertex mask -> affine dimension
  for (std::size_t mask = 1; mask < nMasks; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const int lowIdx = __builtin_ctzll(low);
    vm[mask] = vm[mask ^ low] & tight[static_cast<std::size_t>(lowIdx)];
    cm[mask] = cm[mask ^ low] | cover[static_cast<std::size_t>(lowIdx)];
    if (vm[mask] != 0 && cm[mask] == allCoords) {
      dims.emplace(vm[mask], -1);
    }
  }
  std::vector<CompactFace> faces;
  faces.reserve(dims.size());
  for (auto& [mask, dim] : dims) {
    dim = affineRankOfVertices(p.vertices, mask, d);
    faces.push_back(CompactFace{mask, dim});
  }
  return faces;
}

bool lexLessExpo(const Monomial& a, const Monomial& b) {
  return a.exponents() < b.exponents();
}

// Fan triangulation of a compact face from one apex vertex, recursing on the
// face's own boundary faces. Returns simplices as vertex-index lists.
class FaceTriangulator {
 public:
  FaceTriangulator(const NewtonPolyhedron& p, std::vector<CompactFace> faces,
                   detail::FanApex apex)
      : p_(p), faces_(std::move(faces)), apex_(apex) {}

  const std::vector<std::vector<int>>& triangulate(std::uint64_t vmask,
                                                   int dim) {
    auto it = cache_.find(vmask);
    if (it != cache_.end()) return it->second;
    std::vector<std::vector<int>> simplices;
    if (dim == 0) {
      if (__builtin_popcountll(vmask) != 1) {
        throw InternalError("triangulation: zero-dimensional face with "
                            "several vertices");
      }
      simplices.push_back({__builtin_ctzll(vmask)});
    } else {
      const int w = apexVertex(vmask);
      const std::uint64_t wbit = std::uint64_t{1} << w;
      for (const auto& g : faces_) {
        if (g.dim != dim - 1) continue;
        if (g.vmask == vmask || (g.vmask & ~vmask) != 0) continue;
        if (g.vmask & wbit) continue;
        for (const auto& s : triangulate(g.vmask, dim - 1)) {
          std::vector<int> t = s;
          t.push_back(w);
          simplices.push_back(std::move(t));
        }
      }
      if (simplices.empty()) {
        throw InternalError("triangulation: face has no opposite boundary");
      }
    }
    return cache_.emplace(vmask, std::move(simplices)).first->second;
  }

 private:
  int apexVertex(std::uint64_t vmask) const {
    int best = -1;
    for (std::size_t i = 0; i < p_.vertices.size(); ++i) {
      if (!(vmask & (std::uint64_t{1} << i))) continue;
      if (best < 0) {
        best = static_cast<int>(i);
        continue;
      }
      const bool less = lexLessExpo(p_.vertices[i], p_.vertices[static_cast<std::size_t>(best)]);
      if ((apex_ == detail::FanApex::LexMin) == less) best = static_cast<int>(i);
    }
    return best;
  }

  const NewtonPolyhedron& p_;
  std::vector<CompactFace> faces_;
  detail::FanApex apex_;
  std::map<std::uint64_t, std::vector<std::vector<int>>> cache_;
};

std::int64_t toCheckedInt64(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) {
    throw OverflowError(std::string(what) + ": result exceeds 64 bits");
  }
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

NewtonPolyhedron newtonPolyhedron(const MonomialIdeal& a) {
  requireProperNonzero(a, "newtonPolyhedron");
  const int d = a.dim();
  const auto& gens = a.generators();

  std::vector<Monomial> vertices;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Monomial> others;
    others.reserve(gens.size() - 1);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    if (!inUpwardHull(others, gens[i], d)) vertices.push_back(gens[i]);
  }

  NewtonPolyhedron p{a.ring(), std::move(vertices), {}};
  p.facets = enumerateFacets(p.vertices, d);

  // Soundness checks: the whole generating set satisfies every facet, and
  // each vertex is tight on at least d facets.
  for (const auto& g : gens) {
    for (const auto& f : p.facets) {
      if (facetDot(f, g) < f.offset) {
        throw InternalError("newtonPolyhedron: generator violates a facet");
      }
    }
  }
  for (const auto& v : p.vertices) {
    int tight = 0;
    for (const auto& f : p.facets) {
      if (facetDot(f, v) == f.offset) ++tight;
    }
    if (tight < d) {
      throw InternalError("newtonPolyhedron: vertex tight on fewer than d "
                          "facets");
    }
  }
  return p;
}

bool pointInPolyhedron(const NewtonPolyhedron& p,
                       const std::vector<mpq_class>& point) {
  if (static_cast<int>(point.size()) != p.ring.dim()) {
    throw DimensionMismatchError("pointInPolyhedron: dimension mismatch");
  }
  for (const auto& f : p.facets) {
    mpq_class dot = 0;
    for (std::size_t k = 0; k < point.size(); ++k) {
      dot += mpq_class(f.normal[k]) * point[k];
    }
    if (dot < mpq_class(f.offset)) return false;
  }
  return true;
}

bool pointInPolyhedron(const NewtonPolyhedron& p, const Monomial& point) {
  if (point.size() != p.ring.dim()) {
    throw DimensionMismatchError("pointInPolyhedron: dimension mismatch");
  }
  return inPolyhedronExpo(p, point.exponents());
}

MonomialIdeal monReduction(const MonomialIdeal& a) {
  requireProperNonzero(a, "monReduction");
  NewtonPolyhedron p = newtonPolyhedron(a);
  return MonomialIdeal::generatedBy(p.vertices, a.ring());
}

MonomialIdeal integralClosure(const MonomialIdeal& a) {
  requireProperNonzero(a, "integralClosure");
  const int d = a.dim();
  NewtonPolyhedron p = newtonPolyhedron(a);

  std::vector<Expo> maxes(static_cast<std::size_t>(d), 0);
  for (const auto& g : a.generators()) {
    for (int k = 0; k < d; ++k) {
      maxes[static_cast<std::size_t>(k)] =
          std::max(maxes[static_cast<std::size_t>(k)], g[k]);
    }
  }
  unsigned long long cells = 1;
  for (Expo m : maxes) {
    const unsigned long long side = static_cast<unsigned long long>(m) + 1;
    if (cells > 100'000'000ULL / side) {
      throw ResourceCapError("integralClosure: lattice box too large");
    }
    cells *= side;
  }

  // A lattice point of the polyhedron is a minimal generator of the closure
  // iff no coordinate can be decreased while staying inside.
  std::vector<Monomial> minimalPts;
  std::vector<Expo> v(static_cast<std::size_t>(d), 0);
  for (;;) {
    if (inPolyhedronExpo(p, v)) {
      bool minimal = true;
      for (int k = 0; k < d && minimal; ++k) {
        if (v[static_cast<std::size_t>(k)] > 0) {
          --v[static_cast<std::size_t>(k)];
          if (inPolyhedronExpo(p, v)) minimal = false;
          ++v[static_cast<std::size_t>(k)];
        }
      }
      if (minimal) minimalPts.emplace_back(v);
    }
    int k = d - 1;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == maxes[static_cast<std::size_t>(k)]) {
      v[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++v[static_cast<std::size_t>(k)];
  }
  return MonomialIdeal::generatedBy(std::move(minimalPts), a.ring());
}

int monAnalyticSpread(const MonomialIdeal& a) {
  requireProperNonzero(a, "monAnalyticSpread");
  NewtonPolyhedron p = newtonPolyhedron(a);
  int best = -1;
  for (const auto& f : compactFaces(p)) best = std::max(best, f.dim);
  if (best < 0) {
    throw InternalError("monAnalyticSpread: polyhedron has no vertex");
  }
  return best + 1;
}

namespace detail {

mpz_class pyramidVolumeSum(const NewtonPolyhedron& p, FanApex apex) {
  const int d = p.ring.dim();
  std::vector<CompactFace> faces = compactFaces(p);
  FaceTriangulator tri(p, faces, apex);

  mpz_class total = 0;
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    bool strictlyPositive = true;
    for (const auto& c : p.facets[f].normal) {
      if (c <= 0) {
        strictlyPositive = false;
        break;
      }
    }
    if (!strictlyPositive) continue;

    std::uint64_t vmask = 0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (facetDot(p.facets[f], p.vertices[i]) == p.facets[f].offset) {
        vmask |= std::uint64_t{1} << i;
      }
    }
    const int dim = affineRankOfVertices(p.vertices, vmask, d);
    if (dim != d - 1) {
      throw InternalError("pyramidVolumeSum: bounded facet of unexpected "
                          "dimension");
    }
    for (const auto& s : tri.triangulate(vmask, dim)) {
      std::vector<std::vector<exact::BigInt>> m(
          s.size(), std::vector<exact::BigInt>(static_cast<std::size_t>(d)));
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (int k = 0; k < d; ++k) {
          m[i][static_cast<std::size_t>(k)] = static_cast<long>(
              p.vertices[static_cast<std::size_t>(s[i])][k]);
        }
      }
      mpz_class det = exact::determinant(std::move(m));
      if (det == 0) {
        throw InternalError("pyramidVolumeSum: degenerate simplex");
      }
      total += abs(det);
    }
  }
  return total;
}

}  // namespace detail

std::int64_t monJMult(const MonomialIdeal& a) {
  requireProperNonzero(a, "monJMult");
  NewtonPolyhedron p = newtonPolyhedron(a);
  return toCheckedInt64(detail::pyramidVolumeSum(p), "monJMult");
}

std::int64_t normalizedCovolume(const MonomialIdeal& a) {
  requireProperNonzero(a, "normalizedCovolume");
  if (!a.isMPrimary()) {
    throw NotMPrimaryError("normalizedCovolume: ideal is not m-primary");
  }
  NewtonPolyhedron p = newtonPolyhedron(a);
  return toCheckedInt64(detail::pyramidVolumeSum(p), "normalizedCovolume");
}

}  // namespace multseq
