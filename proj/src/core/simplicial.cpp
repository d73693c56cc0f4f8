#include "toric/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>
#include <string>
#include <unordered_map>

#include <gmpxx.h>

#include "toric/error.hpp"

namespace toric {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Fraction-free elimination; T is std::int64_t (may throw Overflow) or mpz_class.
template <typename T>
std::size_t bareiss_rank(std::vector<std::vector<T>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          m[i][j] = checked_sub(checked_mul(m[r][c], m[i][j]), checked_mul(lead, m[r][j])) / prev;
        } else {
          m[i][j] = m[r][c] * m[i][j] - lead * m[r][j];
          mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
        }
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t inv = inverse(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = m[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

using FaceIndex = std::unordered_map<RaySet, std::size_t>;

// Builds the coboundary maps between consecutive bases: delta(G) = sum over v not in G
// of (-1)^{position of v in G+v} (G+v), restricted to the bases.
std::vector<CoboundaryMatrix> coboundaries(const std::vector<std::vector<RaySet>>& bases) {
  std::vector<FaceIndex> index(bases.size());
  for (std::size_t k = 0; k < bases.size(); ++k)
    for (std::size_t i = 0; i < bases[k].size(); ++i) index[k].emplace(bases[k][i], i);
  std::vector<CoboundaryMatrix> maps;
  for (std::size_t k = 0; k + 1 < bases.size(); ++k) {
    CoboundaryMatrix m;
    m.rows = bases[k + 1].size();
    m.cols = bases[k].size();
    for (std::size_t row = 0; row < bases[k + 1].size(); ++row) {
      const RaySet face = bases[k + 1][row];
      for (auto v : face.indices()) {
        auto it = index[k].find(face.without(v));
        if (it == index[k].end()) continue;
        m.entries.push_back({row, it->second, face.position_of(v) % 2 == 0 ? 1 : -1});
      }
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

// Groups faces by size into bases for degrees -1 .. top.
std::vector<std::vector<RaySet>> graded_bases(const std::vector<RaySet>& faces, int top) {
  std::vector<std::vector<RaySet>> bases(static_cast<std::size_t>(top + 2));
  for (auto f : faces)
    if (f.size() < bases.size()) bases[f.size()].push_back(f);
  for (auto& b : bases) std::sort(b.begin(), b.end(), GradedOrder{});
  return bases;
}

}  // namespace

FieldSpec::FieldSpec(std::uint64_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && (characteristic >= (std::uint64_t{1} << 31) || !is_prime(characteristic)))
    throw Error(ErrorCode::InvalidField,
                "characteristic must be 0 or a prime below 2^31, got " + std::to_string(characteristic));
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count, std::vector<RaySet> faces) {
  std::sort(faces.begin(), faces.end(), GradedOrder{});
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  k.faces_ = std::move(faces);
  for (auto f : k.faces_) {
    if (!f.subset_of(RaySet::full(vertex_count)))
      throw Error(ErrorCode::InvalidInput, "face " + f.label() + " uses a vertex outside the universe");
    for (auto v : f.indices())
      if (!k.contains(f.without(v)))
        throw Error(ErrorCode::InvalidInput, "face " + f.label() + " is missing its facet " + f.without(v).label());
  }
  if (!k.faces_.empty() && !k.contains(RaySet()))
    throw Error(ErrorCode::InvalidInput, "a nonempty complex must contain the empty face");
  return k;
}

SimplicialComplex SimplicialComplex::full_simplex(std::size_t vertex_count, RaySet vertices) {
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  // Enumerate all submasks of `vertices`.
  const std::uint64_t all = vertices.bits();
  std::uint64_t sub = all;
  for (;;) {
    k.faces_.emplace_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & all;
  }
  std::sort(k.faces_.begin(), k.faces_.end(), GradedOrder{});
  return k;
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertex_count) {
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  return k;
}

bool SimplicialComplex::contains(RaySet face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, GradedOrder{});
}

std::vector<std::vector<std::int64_t>> CoboundaryMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
  for (const auto& e : entries) m[e.row][e.col] = e.value;
  return m;
}

std::size_t CochainComplex::rank_at(int degree) const {
  const int k = degree - min_degree;
  if (k < 0 || static_cast<std::size_t>(k) >= bases.size()) return 0;
  return bases[static_cast<std::size_t>(k)].size();
}

std::size_t GradedDims::at(int degree) const {
  const int k = degree - min_degree;
  if (k < 0 || static_cast<std::size_t>(k) >= dims.size()) return 0;
  return dims[static_cast<std::size_t>(k)];
}

bool GradedDims::all_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

CochainComplex augmented_cochain(RaySet pi) {
  CochainComplex c;
  if (pi.empty()) {
    c.min_degree = -2;
    c.bases = {{RaySet()}, {RaySet()}};
    CoboundaryMatrix id;
    id.rows = id.cols = 1;
    id.entries.push_back({0, 0, 1});
    c.coboundary.push_back(id);
    return c;
  }
  auto simplex = SimplicialComplex::full_simplex(RaySet::kMaxRays, pi);
  c.min_degree = -1;
  c.bases = graded_bases(simplex.faces(), static_cast<int>(pi.size()) - 1);
  c.coboundary = coboundaries(c.bases);
  return c;
}

CochainComplex cochain_complex(const SimplicialComplex& complex) {
  CochainComplex c;
  c.min_degree = -1;
  c.bases = graded_bases(complex.faces(), static_cast<int>(complex.vertex_count()) - 1);
  c.coboundary = coboundaries(c.bases);
  return c;
}

CochainComplex relative_cochain(RaySet pi, const SimplicialComplex& complex) {
  if (pi.empty()) return augmented_cochain(pi);
  auto simplex = SimplicialComplex::full_simplex(complex.vertex_count(), pi);
  std::vector<RaySet> faces;
  for (auto f : simplex.faces())
    if (!complex.contains(f)) faces.push_back(f);
  CochainComplex c;
  c.min_degree = -1;
  c.bases = graded_bases(faces, static_cast<int>(pi.size()) - 1);
  c.coboundary = coboundaries(c.bases);
  return c;
}

SimplicialComplex restrict(const SimplicialComplex& complex, RaySet pi) {
  std::vector<RaySet> faces;
  for (auto f : complex.faces())
    if (f.subset_of(pi)) faces.push_back(f);
  return SimplicialComplex::from_faces(complex.vertex_count(), std::move(faces));
}

std::size_t matrix_rank(const CoboundaryMatrix& m, FieldSpec field) {
  if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
  auto dense = m.dense();
  if (field.characteristic() != 0) return rank_mod_p(std::move(dense), static_cast<std::int64_t>(field.characteristic()));
  try {
    return bareiss_rank<std::int64_t>(dense);
  } catch (const Overflow&) {
    std::vector<std::vector<mpz_class>> big(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i)
      for (auto x : dense[i]) big[i].emplace_back(static_cast<long>(x));
    return bareiss_rank<mpz_class>(std::move(big));
  }
}

GradedDims cohomology_dims(const CochainComplex& complex, FieldSpec field, int top_degree) {
  std::vector<std::size_t> ranks(complex.coboundary.size());
  for (std::size_t k = 0; k < ranks.size(); ++k) ranks[k] = matrix_rank(complex.coboundary[k], field);
  GradedDims out;
  out.min_degree = complex.min_degree;
  for (int degree = complex.min_degree; degree <= top_degree; ++degree) {
    const auto k = static_cast<std::size_t>(degree - complex.min_degree);
    std::size_t dim = complex.rank_at(degree);
    if (k < ranks.size()) dim -= ranks[k];     // outgoing map
    if (k >= 1 && k - 1 < ranks.size()) dim -= ranks[k - 1];  // incoming map
    out.dims.push_back(dim);
  }
  return out;
}

GradedDims reduced_cohomology_dims(const SimplicialComplex& complex, FieldSpec field) {
  return cohomology_dims(cochain_complex(complex), field, static_cast<int>(complex.vertex_count()) - 1);
}

GradedDims relative_cohomology_dims(RaySet pi, const SimplicialComplex& complex, FieldSpec field) {
  const int top = static_cast<int>(complex.vertex_count());
  if (pi.empty()) {
    GradedDims zero;
    zero.min_degree = -1;
    zero.dims.assign(static_cast<std::size_t>(top + 2), 0);
    return zero;
  }
  return cohomology_dims(relative_cochain(pi, complex), field, top);
}

std::size_t connected_components(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  RaySet vertices;
  for (auto f : complex.faces()) {
    if (f.size() == 1) vertices = vertices | f;
    if (f.size() == 2) {
      auto ij = f.indices();
      parent[find(ij[0])] = find(ij[1]);
    }
  }
  std::size_t count = 0;
  for (auto v : vertices.indices())
    if (find(v) == v) ++count;
  return count;
}

}  // namespace toric
