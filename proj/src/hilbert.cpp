#include "multseq/hilbert.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "multseq/exact.hpp"

namespace multseq {

namespace {

// --------------------------------------------------------------------------
// Column engine. For a fixed power j, the monomials spanning the (i,j)
// pieces are exactly
//
//   { v in I^j \ I^{j+1} : slack_j(v) = i },
//   slack_j(v) = deg v - min{ deg g : g in minGens(I^j), g | v },
//
// because v lies in m^i I^j iff some generator divides it with total-degree
// slack at least i. The whole column is the slack histogram over the shell
// between the two staircases, capped at slack maxI.
//
// The shell is grown degree by degree. Every proper divisor of v divides a
// codimension-one parent of v, so slack(v) = 1 + max slack over the parents
// inside I^j; parents inside I^{j+1} cannot occur for v outside I^{j+1}
// (the staircases are upward closed), and a parent inside I^j that is
// missing from the map has slack past the cap, which pushes v past it too.
// --------------------------------------------------------------------------

// Exponent vectors packed into 16-bit lanes, four per word. Divisibility is
// a per-lane comparison: with lanes below 2^15 the spare high bit of each
// lane records "no borrow" under subtraction.
template <int Words>
struct PackedTraits {
  using Key = std::array<std::uint64_t, Words>;
  static constexpr std::uint64_t kHigh = 0x8000800080008000ULL;

  struct Hash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (std::uint64_t w : k) {
        h ^= w;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
      }
      return static_cast<std::size_t>(h);
    }
  };

  int d;
  explicit PackedTraits(int dim) : d(dim) {}

  Key pack(const std::vector<Expo>& e) const {
    Key k{};
    for (int i = 0; i < d; ++i) {
      k[static_cast<std::size_t>(i / 4)] |=
          static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)])
          << (16 * (i % 4));
    }
    return k;
  }

  static Expo lane(const Key& k, int i) {
    return static_cast<Expo>((k[static_cast<std::size_t>(i / 4)] >>
                              (16 * (i % 4))) &
                             0xffffULL);
  }

  static Key inc(Key k, int i) {
    k[static_cast<std::size_t>(i / 4)] += std::uint64_t{1} << (16 * (i % 4));
    return k;
  }

  static Key dec(Key k, int i) {
    k[static_cast<std::size_t>(i / 4)] -= std::uint64_t{1} << (16 * (i % 4));
    return k;
  }

  // componentwise a <= b
  static bool divides(const Key& a, const Key& b) {
    for (int w = 0; w < Words; ++w) {
      const std::size_t s = static_cast<std::size_t>(w);
      if ((((b[s] | kHigh) - a[s]) & kHigh) != kHigh) return false;
    }
    return true;
  }
};

struct GenericTraits {
  using Key = std::vector<Expo>;

  struct Hash {
    std::size_t operator()(const Key& v) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (Expo e : v) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) +
             (h >> 2);
      }
      return h;
    }
  };

  int d;
  explicit GenericTraits(int dim) : d(dim) {}

  Key pack(const std::vector<Expo>& e) const { return e; }
  static Expo lane(const Key& k, int i) {
    return k[static_cast<std::size_t>(i)];
  }
  static Key inc(Key k, int i) {
    ++k[static_cast<std::size_t>(i)];
    return k;
  }
  static Key dec(Key k, int i) {
    --k[static_cast<std::size_t>(i)];
    return k;
  }
  static bool divides(const Key& a, const Key& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  }
};

// Generators in degree order with packed keys, for fast membership scans.
template <class Traits>
struct PackedGens {
  std::vector<typename Traits::Key> keys;
  std::vector<Expo> degs;

  PackedGens(const Traits& tr, const MonomialIdeal& ideal) {
    keys.reserve(ideal.generators().size());
    degs.reserve(keys.capacity());
    for (const auto& g : ideal.generators()) {  // canonical order is graded
      keys.push_back(tr.pack(g.exponents()));
      degs.push_back(g.degree());
    }
  }

  bool member(const typename Traits::Key& v, Expo vdeg) const {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (degs[i] > vdeg) return false;
      if (Traits::divides(keys[i], v)) return true;
    }
    return false;
  }
};

template <class Traits>
std::vector<std::int64_t> columnHistogramT(const Traits& tr,
                                           const PackedGens<Traits>& gensJ,
                                           const PackedGens<Traits>& gensJ1,
                                           int maxSlack, std::size_t genCap) {
  using Key = typename Traits::Key;
  std::vector<std::int64_t> hist(static_cast<std::size_t>(maxSlack) + 1, 0);
  if (gensJ.keys.empty()) return hist;
  const int d = tr.d;

  std::unordered_map<Key, int, typename Traits::Hash> shell;
  std::map<Expo, std::vector<Key>> pending;  // degree -> child proposals
  std::map<Expo, std::vector<std::size_t>> seeds;
  for (std::size_t i = 0; i < gensJ.keys.size(); ++i) {
    seeds[gensJ.degs[i]].push_back(i);
  }

  while (!seeds.empty() || !pending.empty()) {
    Expo level;
    if (seeds.empty()) {
      level = pending.begin()->first;
    } else if (pending.empty()) {
      level = seeds.begin()->first;
    } else {
      level = std::min(seeds.begin()->first, pending.begin()->first);
    }

    std::vector<std::pair<Key, int>> accepted;
    if (auto it = seeds.find(level); it != seeds.end()) {
      for (std::size_t i : it->second) {
        if (!gensJ1.member(gensJ.keys[i], level)) {
          accepted.emplace_back(gensJ.keys[i], 0);
        }
      }
      seeds.erase(it);
    }
    if (auto it = pending.find(level); it != pending.end()) {
      auto& proposals = it->second;
      std::sort(proposals.begin(), proposals.end());
      proposals.erase(std::unique(proposals.begin(), proposals.end()),
                      proposals.end());
      for (const Key& v : proposals) {
        if (gensJ1.member(v, level)) continue;  // next staircase owns it
        int maxParent = -1;
        bool deep = false;
        for (int k = 0; k < d && !deep; ++k) {
          if (Traits::lane(v, k) == 0) continue;
          Key q = Traits::dec(v, k);
          auto p = shell.find(q);
          if (p != shell.end()) {
            maxParent = std::max(maxParent, p->second);
          } else if (gensJ.member(q, level - 1)) {
            deep = true;  // that parent's slack is past the cap
          }
        }
        if (!deep && maxParent >= 0 && maxParent + 1 <= maxSlack) {
          accepted.emplace_back(v, maxParent + 1);
        }
      }
      pending.erase(it);
    }

    for (auto& [v, slack] : accepted) {
      ++hist[static_cast<std::size_t>(slack)];
      if (slack < maxSlack) {
        auto& next = pending[level + 1];
        for (int k = 0; k < d; ++k) {
          next.push_back(Traits::inc(v, k));
        }
      }
      shell.emplace(std::move(v), slack);
    }
    if (genCap != 0 && shell.size() > genCap) {
      throw ResourceCapError(
          "lambda table: shell of size " + std::to_string(shell.size()) +
          " exceeds the generator cap " + std::to_string(genCap));
    }
  }
  return hist;
}

std::vector<std::int64_t> columnHistogram(const MonomialIdeal& pj,
                                          const MonomialIdeal& pj1, int maxI,
                                          std::size_t genCap, bool packable) {
  const int d = pj.dim();
  if (packable && d <= 4) {
    PackedTraits<1> tr(d);
    return columnHistogramT(tr, PackedGens<PackedTraits<1>>(tr, pj),
                            PackedGens<PackedTraits<1>>(tr, pj1), maxI,
                            genCap);
  }
  if (packable && d <= 8) {
    PackedTraits<2> tr(d);
    return columnHistogramT(tr, PackedGens<PackedTraits<2>>(tr, pj),
                            PackedGens<PackedTraits<2>>(tr, pj1), maxI,
                            genCap);
  }
  GenericTraits tr(d);
  return columnHistogramT(tr, PackedGens<GenericTraits>(tr, pj),
                          PackedGens<GenericTraits>(tr, pj1), maxI, genCap);
}

std::string cacheKey(const MonomialIdeal& a) {
  std::ostringstream os;
  os << a.dim();
  for (const auto& g : a.generators()) {
    for (Expo e : g.exponents()) os << ',' << e;
    os << ';';
  }
  return os.str();
}

}  // namespace

std::int64_t lambdaCell(const MonomialIdeal& a, int i, int j,
                        std::size_t genCap) {
  requireProperNonzero(a, "lambdaCell");
  if (i < 0 || j < 0) {
    throw InvalidArgumentError("lambdaCell: negative grading");
  }
  MonomialIdeal aj = power(a, j, genCap);
  MonomialIdeal aj1 = product(aj, a, genCap);
  MonomialIdeal n = sum(timesMaximalIdealPower(aj, i, genCap), aj1);
  MonomialIdeal dpart = sum(timesMaximalIdealPower(aj, i + 1, genCap), aj1);
  // m * N lies inside D, so a monomial of N that properly multiplies a
  // minimal generator of N lands in D: the monomials spanning N/D are the
  // minimal generators of N outside D.
  std::int64_t count = 0;
  for (const auto& g : n.generators()) {
    if (!dpart.contains(g)) ++count;
  }
  return count;
}

LambdaTable lambdaTable(const MonomialIdeal& a, int maxI, int maxJ,
                        const HilbertOptions& opts) {
  requireProperNonzero(a, "lambdaTable");
  if (maxI < 0 || maxJ < 0) {
    throw InvalidArgumentError("lambdaTable: negative bounds");
  }

  std::vector<MonomialIdeal> powers;
  powers.reserve(static_cast<std::size_t>(maxJ) + 2);
  powers.push_back(MonomialIdeal::unit(a.ring()));
  for (int j = 1; j <= maxJ + 1; ++j) {
    powers.push_back(product(powers.back(), a, opts.genCap));
  }

  Expo topDegree = 0;
  for (const auto& p : powers) {
    for (const auto& g : p.generators()) {
      topDegree = std::max(topDegree, g.degree());
    }
  }
  const bool packable = topDegree + maxI + 1 < Expo{1} << 15;

  std::vector<std::vector<std::int64_t>> columns(
      static_cast<std::size_t>(maxJ) + 1);
  const int threads = std::max(1, std::min(opts.threads, maxJ + 1));
  if (threads == 1) {
    for (int j = 0; j <= maxJ; ++j) {
      columns[static_cast<std::size_t>(j)] =
          columnHistogram(powers[static_cast<std::size_t>(j)],
                          powers[static_cast<std::size_t>(j) + 1], maxI,
                          opts.genCap, packable);
    }
  } else {
    std::atomic<int> next{0};
    std::exception_ptr firstError;
    std::mutex errorMutex;
    auto worker = [&] {
      for (;;) {
        const int j = next.fetch_add(1);
        if (j > maxJ) return;
        try {
          columns[static_cast<std::size_t>(j)] =
              columnHistogram(powers[static_cast<std::size_t>(j)],
                              powers[static_cast<std::size_t>(j) + 1], maxI,
                              opts.genCap, packable);
        } catch (...) {
          std::lock_guard<std::mutex> lock(errorMutex);
          if (!firstError) firstError = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (firstError) std::rethrow_exception(firstError);
  }

  LambdaTable t{a, maxI, maxJ,
                std::vector<std::vector<std::int64_t>>(
                    static_cast<std::size_t>(maxI) + 1,
                    std::vector<std::int64_t>(static_cast<std::size_t>(maxJ) + 1,
                                              0))};
  for (int i = 0; i <= maxI; ++i) {
    for (int j = 0; j <= maxJ; ++j) {
      t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
  }
  return t;
}

Grid sumTransform(const LambdaTable& t) {
  const std::size_t rows = t.values.size();
  const std::size_t cols = rows == 0 ? 0 : t.values[0].size();
  Grid h(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t n = 0; n < cols; ++n) {
      std::int64_t v = t.values[m][n];
      if (m > 0) v += h[m - 1][n];
      if (n > 0) v += h[m][n - 1];
      if (m > 0 && n > 0) v -= h[m - 1][n - 1];
      h[m][n] = v;
    }
  }
  return h;
}

mpq_class BivariatePolynomial::eval(std::int64_t m, std::int64_t n) const {
  mpq_class total = 0;
  for (const auto& [key, c] : coeffs) {
    mpz_class term = 1;
    for (int t = 0; t < key.first; ++t) term *= m;
    for (int t = 0; t < key.second; ++t) term *= n;
    total += c * mpq_class(term);
  }
  return total;
}

mpq_class BivariatePolynomial::coefficient(int a, int b) const {
  auto it = coeffs.find({a, b});
  return it == coeffs.end() ? mpq_class(0) : it->second;
}

BivariatePolynomial fitBivariate(const Grid& h, int degree, GridWindow window) {
  if (degree < 0) throw InvalidArgumentError("fitBivariate: negative degree");
  const int rows = static_cast<int>(h.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(h[0].size());
  if (window.mLo < 0 || window.nLo < 0 || window.mHi >= rows ||
      window.nHi >= cols || window.mLo > window.mHi ||
      window.nLo > window.nHi) {
    throw InvalidArgumentError("fitBivariate: window outside the grid");
  }
  if (window.mHi - window.mLo < degree || window.nHi - window.nLo < degree) {
    throw InvalidArgumentError("fitBivariate: window too small for the "
                               "degree");
  }

  std::vector<std::pair<int, int>> basis;  // exponents (a, b), a + b <= D
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) basis.emplace_back(a, b);
  }
  const std::size_t t = basis.size();

  // Graded-triangular nodes in the top-right corner; shift down-left as a
  // fallback if the solve ever reports a singular system.
  for (int shift = 0; shift < 4; ++shift) {
    const int mTop = window.mHi - shift;
    const int nTop = window.nHi - shift;
    if (mTop - window.mLo < degree || nTop - window.nLo < degree) break;
    std::vector<std::pair<int, int>> nodes;
    for (int a = 0; a <= degree; ++a) {
      for (int b = 0; a + b <= degree; ++b) nodes.emplace_back(mTop - a, nTop - b);
    }
    exact::IntMatrix mat(t, std::vector<exact::BigInt>(t));
    std::vector<exact::BigInt> rhs(t);
    for (std::size_t r = 0; r < t; ++r) {
      const auto [m, n] = nodes[r];
      for (std::size_t c = 0; c < t; ++c) {
        mpz_class term = 1;
        for (int q = 0; q < basis[c].first; ++q) term *= m;
        for (int q = 0; q < basis[c].second; ++q) term *= n;
        mat[r][c] = term;
      }
      rhs[r] = h[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
    }
    std::vector<exact::Rational> x;
    if (!exact::solveLinearSystem(mat, rhs, x)) continue;
    BivariatePolynomial p;
    p.degreeBound = degree;
    for (std::size_t c = 0; c < t; ++c) {
      if (x[c] != 0) p.coeffs.emplace(basis[c], x[c]);
    }
    return p;
  }
  throw FitError("fitBivariate: interpolation system is singular");
}

MultiplicitySequence extractCoefficients(const BivariatePolynomial& p, int d) {
  if (d < 0) throw InvalidArgumentError("extractCoefficients: negative d");
  for (const auto& [key, c] : p.coeffs) {
    if (key.first + key.second > d && c != 0) {
      throw InvalidArgumentError("extractCoefficients: polynomial degree "
                                 "exceeds d");
    }
  }
  MultiplicitySequence seq;
  seq.d = d;
  seq.c.resize(static_cast<std::size_t>(d) + 1, 0);
  mpz_class factorial = 1;
  std::vector<mpz_class> fact(static_cast<std::size_t>(d) + 1);
  fact[0] = 1;
  for (int i = 1; i <= d; ++i) {
    factorial *= i;
    fact[static_cast<std::size_t>(i)] = factorial;
  }
  for (int i = 0; i <= d; ++i) {
    mpq_class v = p.coefficient(d - i, i);
    v *= mpq_class(fact[static_cast<std::size_t>(d - i)] *
                   fact[static_cast<std::size_t>(i)]);
    v.canonicalize();
    if (v.get_den() != 1) {
      throw FitError("extractCoefficients: c_" + std::to_string(i) +
                     " = " + v.get_str() + " is not an integer");
    }
    if (v < 0) {
      throw FitError("extractCoefficients: c_" + std::to_string(i) +
                     " = " + v.get_str() + " is negative");
    }
    mpz_class num = v.get_num();
    if (!num.fits_slong_p()) {
      throw OverflowError("extractCoefficients: c_" + std::to_string(i) +
                          " exceeds 64 bits");
    }
    seq.c[static_cast<std::size_t>(i)] = num.get_si();
  }
  return seq;
}

MultiplicitySequence multiplicitySequence(const MonomialIdeal& a,
                                          const HilbertOptions& opts) {
  requireProperNonzero(a, "multiplicitySequence");

  static std::mutex cacheMutex;
  static std::unordered_map<std::string, MultiplicitySequence> cache;
  const std::string key = cacheKey(a);
  {
    std::lock_guard<std::mutex> lock(cacheMutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const int d = a.dim();
  const int margin = d + 2;
  std::string lastFailure = "no attempt";

  for (int bound = 2 * d + 4; bound <= opts.gridCap; bound *= 2) {
    LambdaTable t = lambdaTable(a, bound, bound, opts);
    Grid h = sumTransform(t);
    BivariatePolynomial p =
        fitBivariate(h, d, GridWindow{0, 0, bound, bound});

    // The fit must reproduce the grid on the whole validation corner, not
    // just the interpolation nodes.
    const int lo = bound - d - margin;
    bool valid = true;
    for (int m = lo; m <= bound && valid; ++m) {
      for (int n = lo; n <= bound; ++n) {
        if (p.eval(m, n) !=
            h[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]) {
          lastFailure = "grid " + std::to_string(bound) + "x" +
                        std::to_string(bound) + ", fit disagrees at (" +
                        std::to_string(m) + ", " + std::to_string(n) + ")";
          valid = false;
          break;
        }
      }
    }
    if (!valid) continue;

    MultiplicitySequence seq;
    try {
      seq = extractCoefficients(p, d);
    } catch (const FitError& e) {
      lastFailure = "grid " + std::to_string(bound) + "x" +
                    std::to_string(bound) + ", " + e.what();
      continue;
    }
    std::lock_guard<std::mutex> lock(cacheMutex);
    cache.emplace(key, seq);
    return seq;
  }
  throw GridCapError("multiplicitySequence: grid cap " +
                     std::to_string(opts.gridCap) + " exceeded (" +
                     lastFailure + ")");
}

std::int64_t jMultiplicity(const MonomialIdeal& a, const HilbertOptions& opts) {
  MultiplicitySequence seq = multiplicitySequence(a, opts);
  return seq.c.back();
}

}  // namespace multseq
