#include "motifcount/pattern_catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace motifcount {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

struct Spec {
  const char* name;
  bool connected;
  EdgeList edges;
};

// Connected patterns come first at every size, in the conventional order;
// the 5-vertex order is the one whose occurrence matrix is the stored one.
const std::array<std::vector<Spec>, kMaxPatternSize + 1>& specs() {
  static const std::array<std::vector<Spec>, kMaxPatternSize + 1> table = {{
      {},
      {{"vertex", true, {}}},
      {{"edge", true, {{0, 1}}}, {"two_vertices", false, {}}},
      {
          {"wedge", true, {{0, 1}, {1, 2}}},
          {"triangle", true, {{0, 1}, {0, 2}, {1, 2}}},
          {"edge_plus_vertex", false, {{0, 1}}},
          {"independent_3", false, {}},
      },
      {
          {"three_star", true, {{0, 1}, {0, 2}, {0, 3}}},
          {"three_path", true, {{0, 1}, {1, 2}, {2, 3}}},
          {"tailed_triangle", true, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}},
          {"four_cycle", true, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
          {"diamond", true, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}},
          {"four_clique", true, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
          {"independent_4", false, {}},
          {"edge_plus_2_vertices", false, {{0, 1}}},
          {"two_edges", false, {{0, 1}, {2, 3}}},
          {"wedge_plus_vertex", false, {{0, 1}, {1, 2}}},
          {"triangle_plus_vertex", false, {{0, 1}, {0, 2}, {1, 2}}},
      },
      {
          {"four_star", true, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}},
          {"fork", true, {{0, 4}, {1, 3}, {2, 3}, {3, 4}}},
          {"five_path", true, {{0, 1}, {0, 4}, {1, 2}, {2, 3}}},
          {"cricket", true, {{0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
          {"triangle_long_tail", true, {{0, 4}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}},
          {"bull", true, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {2, 3}}},
          {"banner", true, {{0, 1}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}},
          {"five_cycle", true, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}},
          {"bowtie", true, {{0, 1}, {0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
          {"diamond_side_tail", true, {{0, 1}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
          {"diamond_chord_tail", true, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}},
          {"house", true, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}},
          {"k23", true, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}},
          {"book", true, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
          {"tailed_four_clique", true, {{0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
          {"gem", true, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}},
          {"k23_plus_side_edge", true, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}}},
          {"wheel", true, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
          {"four_clique_plus_ear", true, {{0, 1}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
          {"five_clique_minus_edge", true,
           {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
          {"five_clique", true,
           {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
          {"independent_5", false, {}},
          {"edge_plus_3_vertices", false, {{0, 1}}},
          {"two_edges_plus_vertex", false, {{0, 1}, {2, 3}}},
          {"wedge_plus_2_vertices", false, {{0, 1}, {1, 2}}},
          {"triangle_plus_2_vertices", false, {{0, 1}, {0, 2}, {1, 2}}},
          {"three_star_plus_vertex", false, {{0, 1}, {0, 2}, {0, 3}}},
          {"three_path_plus_vertex", false, {{0, 1}, {1, 2}, {2, 3}}},
          {"tailed_triangle_plus_vertex", false, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}},
          {"four_cycle_plus_vertex", false, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
          {"diamond_plus_vertex", false, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}},
          {"four_clique_plus_vertex", false, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
          {"wedge_plus_edge", false, {{0, 1}, {1, 2}, {3, 4}}},
          {"triangle_plus_edge", false, {{0, 1}, {0, 2}, {1, 2}, {3, 4}}},
      },
  }};
  return table;
}

constexpr std::array<int, kMaxPatternSize + 1> kClassCount = {0, 1, 2, 4, 11, 34};

constexpr std::int64_t kStoredOccurrence[21][21] = {
    {1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 1, 1, 0, 1, 2, 3, 5},
    {0, 1, 0, 2, 1, 2, 2, 0, 4, 4, 5, 4, 6, 12, 9, 10, 10, 20, 20, 36, 60},
    {0, 0, 1, 0, 2, 1, 2, 5, 4, 4, 2, 7, 6, 6, 6, 10, 14, 24, 18, 36, 60},
    {0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 2, 0, 0, 6, 3, 3, 0, 4, 8, 15, 30},
    {0, 0, 0, 0, 1, 0, 0, 0, 4, 2, 0, 2, 0, 0, 3, 6, 6, 16, 12, 30, 60},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 2, 1, 0, 6, 6, 5, 4, 12, 14, 30, 60},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 2, 6, 6, 3, 4, 8, 16, 12, 30, 60},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 2, 4, 2, 6, 12},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 2, 2, 6, 15},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 3, 2, 2, 8, 8, 24, 60},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 6, 3, 2, 0, 4, 10, 24, 60},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 4, 12, 6, 24, 60},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 2, 1, 4, 10},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 3, 10},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 6, 20},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 4, 4, 18, 60},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 1, 9, 30},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 3, 15},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 6, 30},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 10},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

constexpr std::int64_t kStoredOccurrenceInverse[21][21] = {
    {1, 0, 0, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0, -2, -1, -1, 0, 1, 2, -3, 5},
    {0, 1, 0, -2, -1, -2, -2, 0, 4, 4, 5, 4, 6, -12, -9, -10, -10, 20, 20, -36, 60},
    {0, 0, 1, 0, -2, -1, -2, -5, 4, 4, 2, 7, 6, -6, -6, -10, -14, 24, 18, -36, 60},
    {0, 0, 0, 1, 0, 0, 0, 0, -2, 0, -2, 0, 0, 6, 3, 3, 0, -4, -8, 15, -30},
    {0, 0, 0, 0, 1, 0, 0, 0, -4, -2, 0, -2, 0, 0, 3, 6, 6, -16, -12, 30, -60},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, -2, -2, -1, 0, 6, 6, 5, 4, -12, -14, 30, -60},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -2, -6, 6, 3, 4, 8, -16, -12, 30, -60},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 2, -4, -2, 6, -12},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 2, 2, -6, 15},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -3, -2, -2, 8, 8, -24, 60},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -6, -3, -2, 0, 4, 10, -24, 60},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -2, -4, 12, 6, -24, 60},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, -1, 2, 1, -4, 10},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 3, -10},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -2, 6, -20},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -4, -4, 18, -60},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -4, -1, 9, -30},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -3, 15},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -6, 30},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -10},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

std::vector<std::vector<int>> permutations_of(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

PairMask permute(PairMask mask, const std::vector<int>& perm) {
  PairMask out = 0;
  const int k = static_cast<int>(perm.size());
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (mask & (PairMask{1} << pair_bit(a, b))) out |= PairMask(PairMask{1} << pair_bit(perm[a], perm[b]));
    }
  }
  return out;
}

PairMask canonical_form(PairMask mask, const std::vector<std::vector<int>>& perms) {
  PairMask best = mask;
  for (const auto& p : perms) best = std::min(best, permute(mask, p));
  return best;
}

bool has_pair(PairMask mask, int a, int b) { return mask & (PairMask{1} << pair_bit(a, b)); }

PairMask full_mask(int k) {
  PairMask m = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) m |= PairMask(PairMask{1} << pair_bit(a, b));
  return m;
}

std::vector<std::vector<int>> components(int k, PairMask mask) {
  std::vector<int> comp(static_cast<std::size_t>(k), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < k; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> members{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int t = 0; t < k; ++t) {
        if (comp[static_cast<std::size_t>(t)] < 0 && has_pair(mask, members[i], t)) {
          comp[static_cast<std::size_t>(t)] = static_cast<int>(out.size());
          members.push_back(t);
        }
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

// Induced subgraph on `vertices`, relabelled 0.. in the given order.
PairMask restrict_mask(PairMask mask, const std::vector<int>& vertices) {
  PairMask out = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_pair(mask, vertices[i], vertices[j]))
        out |= PairMask(PairMask{1} << pair_bit(static_cast<int>(i), static_cast<int>(j)));
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::vector<int> mono;
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(mono));
      out[mono] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void subtract_into(Polynomial& target, const Polynomial& p) {
  for (const auto& [mono, c] : p) target[mono] -= c;
  std::erase_if(target, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

int pair_bit(int a, int b) {
  if (a > b) std::swap(a, b);
  // Offsets of rows 0..3 in the lexicographic pair list of {0..4}.
  static constexpr int kRow[] = {0, 4, 7, 9};
  return kRow[a] + (b - a - 1);
}

PairMask mask_of(std::span<const std::pair<int, int>> edges) {
  PairMask m = 0;
  for (auto [a, b] : edges) m |= PairMask(PairMask{1} << pair_bit(a, b));
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix PatternCatalog::stored_five_occurrence() {
  IntMatrix a(21, 21);
  for (std::size_t i = 0; i < 21; ++i)
    for (std::size_t j = 0; j < 21; ++j) a(i, j) = kStoredOccurrence[i][j];
  return a;
}

IntMatrix PatternCatalog::stored_five_inverse() {
  IntMatrix a(21, 21);
  for (std::size_t i = 0; i < 21; ++i)
    for (std::size_t j = 0; j < 21; ++j) a(i, j) = kStoredOccurrenceInverse[i][j];
  return a;
}

namespace {

// Exact inverse of a unit upper-triangular integer matrix.
IntMatrix unit_upper_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 1) throw IntegrityError("occurrence matrix diagonal is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != 0) throw IntegrityError("occurrence matrix is not upper triangular");
  }
  IntMatrix x(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      std::int64_t v = ii == c ? 1 : 0;
      for (std::size_t j = ii + 1; j < n; ++j) v -= a(ii, j) * x(j, c);
      x(ii, c) = v;
    }
  }
  return x;
}

}  // namespace

PatternCatalog::PatternCatalog() {
  for (int k = 1; k <= kMaxPatternSize; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const auto perms = permutations_of(k);
    const int pairs = k * (k - 1) / 2;

    auto& list = patterns_[ku];
    int index = 0;
    for (const Spec& s : specs()[ku]) {
      Pattern p;
      p.size = k;
      p.index = ++index;
      p.id = std::to_string(k) + "-" + std::to_string(index);
      p.name = s.name;
      p.connected = s.connected;
      p.edges = s.edges;
      p.mask = mask_of(p.edges);
      p.canonical = canonical_form(p.mask, perms);
      p.automorphisms = static_cast<int>(
          std::count_if(perms.begin(), perms.end(), [&](const auto& q) { return permute(p.mask, q) == p.mask; }));
      if (p.connected != (components(k, p.mask).size() == 1))
        throw IntegrityError("pattern " + p.id + " has the wrong connectivity flag");
      if (p.connected) ++connected_count_[ku];
      list.push_back(std::move(p));
    }
    if (static_cast<int>(list.size()) != kClassCount[ku])
      throw IntegrityError("catalog size mismatch at k=" + std::to_string(k));

    // Classification table over every labelled k-vertex graph.
    auto& table = classify_[ku];
    table.assign(std::size_t{1} << 10, 0);
    const PairMask all = full_mask(k);
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
      if ((mask & ~unsigned(all)) != 0) continue;
      const PairMask canon = canonical_form(static_cast<PairMask>(mask), perms);
      for (const Pattern& p : list) {
        if (p.canonical == canon) {
          if (table[mask] != 0) throw IntegrityError("two isomorphic patterns at k=" + std::to_string(k));
          table[mask] = p.index;
        }
      }
      if (table[mask] == 0) throw IntegrityError("a graph on " + std::to_string(k) + " vertices is not catalogued");
    }
    (void)pairs;

    // Occurrence matrix: copies of pattern i inside pattern j.
    IntMatrix occ(list.size(), list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j < list.size(); ++j) {
        std::int64_t embeddings = 0;
        for (const auto& q : perms) {
          const PairMask img = permute(list[i].mask, q);
          if ((img & list[j].mask) == img) ++embeddings;
        }
        occ(i, j) = embeddings / list[i].automorphisms;
      }
    }
    occurrence_[ku] = occ;

    if (k >= 3) {
      const std::size_t c = static_cast<std::size_t>(connected_count_[ku]);
      IntMatrix forward(c, c);
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) forward(i, j) = occ(i, j);
      ConversionMatrices conv{forward, unit_upper_inverse(forward)};
      if (k == 5) {
        if (!(forward == stored_five_occurrence()))
          throw IntegrityError("recomputed 5-vertex occurrence matrix differs from the stored matrix");
        conv.inverse = stored_five_inverse();
        if (!(forward * conv.inverse == IntMatrix::identity(c)))
          throw IntegrityError("stored 5-vertex inverse matrix is not the inverse");
      }
      conversion_[ku] = std::move(conv);
    }
  }

  // Polynomial variables: connected patterns on at most four vertices.
  std::map<std::pair<int, PairMask>, int> slot_of;
  for (int k = 1; k <= 4; ++k) {
    for (const Pattern& p : connected(k)) {
      slot_of[{k, p.canonical}] = static_cast<int>(variables_.size());
      variables_.emplace_back(k, p.index);
    }
  }

  // inj(H1 + H2) = inj(H1) inj(H2) - sum over nonempty overlaps s of inj(H_s),
  // where H_s glues vertices of H1 onto vertices of H2.
  std::map<std::pair<int, PairMask>, Polynomial> memo;
  std::vector<std::vector<std::vector<int>>> perm_cache(kMaxPatternSize + 1);
  for (int k = 1; k <= kMaxPatternSize; ++k) perm_cache[static_cast<std::size_t>(k)] = permutations_of(k);

  std::function<Polynomial(int, PairMask)> inj = [&](int k, PairMask mask) -> Polynomial {
    const PairMask canon = canonical_form(mask, perm_cache[static_cast<std::size_t>(k)]);
    if (auto it = memo.find({k, canon}); it != memo.end()) return it->second;
    Polynomial result;
    auto comps = components(k, canon);
    if (comps.size() == 1) {
      auto it = slot_of.find({k, canon});
      if (it == slot_of.end()) throw IntegrityError("connected pattern outside the variable set");
      result[{it->second}] = 1;
    } else {
      const std::vector<int>& first = comps[0];
      std::vector<int> rest;
      for (std::size_t c = 1; c < comps.size(); ++c) rest.insert(rest.end(), comps[c].begin(), comps[c].end());
      std::sort(rest.begin(), rest.end());
      const int s1 = static_cast<int>(first.size());
      const int s2 = static_cast<int>(rest.size());
      result = multiply(inj(s1, restrict_mask(canon, first)), inj(s2, restrict_mask(canon, rest)));

      std::vector<int> image(static_cast<std::size_t>(s1), -1);
      std::vector<bool> used(static_cast<std::size_t>(s2), false);
      std::function<void(int)> assign = [&](int x) {
        if (x == s1) {
          if (std::all_of(image.begin(), image.end(), [](int v) { return v < 0; })) return;
          // H2 keeps labels 0..s2-1; unglued vertices of H1 follow.
          std::vector<int> label(static_cast<std::size_t>(s1));
          int next = s2;
          for (int i = 0; i < s1; ++i) label[static_cast<std::size_t>(i)] = image[static_cast<std::size_t>(i)] >= 0 ? image[static_cast<std::size_t>(i)] : next++;
          PairMask merged = restrict_mask(canon, rest);
          for (int i = 0; i < s1; ++i)
            for (int j = i + 1; j < s1; ++j)
              if (has_pair(canon, first[static_cast<std::size_t>(i)], first[static_cast<std::size_t>(j)]))
                merged |= PairMask(PairMask{1} << pair_bit(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]));
          subtract_into(result, inj(next, merged));
          return;
        }
        image[static_cast<std::size_t>(x)] = -1;
        assign(x + 1);
        for (int y = 0; y < s2; ++y) {
          if (used[static_cast<std::size_t>(y)]) continue;
          used[static_cast<std::size_t>(y)] = true;
          image[static_cast<std::size_t>(x)] = y;
          assign(x + 1);
          used[static_cast<std::size_t>(y)] = false;
        }
        image[static_cast<std::size_t>(x)] = -1;
      };
      assign(0);
    }
    memo[{k, canon}] = result;
    return result;
  };

  for (int k = 2; k <= kMaxPatternSize; ++k) {
    for (const Pattern& p : disconnected(k)) disconnected_polys_[static_cast<std::size_t>(k)].push_back(inj(k, p.mask));
  }
}

const PatternCatalog& PatternCatalog::instance() {
  static const PatternCatalog catalog;
  return catalog;
}

std::string PatternCatalog::polynomial_string(const Polynomial& p) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : p) {
    Count c = coeff;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    if (c < 0) c = -c;
    first = false;
    if (c != 1 || mono.empty()) out << to_string(c);
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (c != 1 || i > 0) out << "*";
      const auto [k, idx] = variables_[static_cast<std::size_t>(mono[i])];
      out << "inj(" << pattern(k, idx).name << ")";
    }
  }
  if (first) out << "0";
  return out.str();
}

namespace {

std::vector<Count> apply(const IntMatrix& m, std::span<const Count> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("count vector has the wrong length");
  std::vector<Count> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[i] = checked_add(out[i], checked_mul(Count{m(i, j)}, v[j]));
  return out;
}

void require_nonnegative(int k, std::span<const Count> induced, std::size_t offset = 0) {
  for (std::size_t i = 0; i < induced.size(); ++i) {
    if (induced[i] < 0) {
      throw IntegrityError("negative induced count for pattern " + std::to_string(k) + "-" +
                           std::to_string(i + 1 + offset) + ": " + to_string(induced[i]));
    }
  }
}

}  // namespace

std::vector<Count> noninduced_to_induced(std::span<const Count> noninduced) {
  if (noninduced.size() != 21) throw std::invalid_argument("expected 21 five-vertex counts");
  auto induced = apply(PatternCatalog::instance().conversion(5).inverse, noninduced);
  require_nonnegative(5, induced);
  return induced;
}

std::vector<Count> noninduced_to_induced(int k, std::span<const Count> noninduced) {
  auto induced = apply(PatternCatalog::instance().conversion(k).inverse, noninduced);
  require_nonnegative(k, induced);
  return induced;
}

std::vector<Count> induced_to_noninduced(int k, std::span<const Count> induced) {
  return apply(PatternCatalog::instance().conversion(k).forward, induced);
}

std::vector<Count> disconnected_counts(const ConnectedCounts& induced, int k) {
  if (k < 2 || k > kMaxPatternSize) throw std::invalid_argument("disconnected counts exist for k = 2..5");
  const auto& catalog = PatternCatalog::instance();

  // Non-induced counts of connected patterns per size.
  auto noninduced_connected = [&](int s) -> std::vector<Count> {
    const auto& c = induced.at(static_cast<std::size_t>(s));
    if (c.size() != catalog.connected(s).size())
      throw std::invalid_argument("connected counts for size " + std::to_string(s) + " have the wrong length");
    if (s <= 2) return c;
    return induced_to_noninduced(s, c);
  };

  std::vector<Count> values;
  for (auto [s, idx] : catalog.variables()) {
    if (s >= k) {
      values.push_back(0);
      continue;
    }
    const Count noninduced = noninduced_connected(s)[static_cast<std::size_t>(idx - 1)];
    values.push_back(checked_mul(noninduced, catalog.pattern(s, idx).automorphisms));
  }

  const auto all = catalog.patterns(k);
  std::vector<Count> noninduced(all.size(), 0);
  {
    auto conn = noninduced_connected(k);
    std::copy(conn.begin(), conn.end(), noninduced.begin());
  }
  const std::size_t first_disc = catalog.connected(k).size();
  for (std::size_t d = 0; d < catalog.disconnected(k).size(); ++d) {
    Count total = 0;
    for (const auto& [mono, coeff] : catalog.disconnected_polynomial(k, static_cast<int>(d))) {
      Count term = coeff;
      for (int slot : mono) term = checked_mul(term, values[static_cast<std::size_t>(slot)]);
      total = checked_add(total, term);
    }
    const int aut = all[first_disc + d].automorphisms;
    if (total % aut != 0) throw IntegrityError("disconnected match count not divisible by automorphisms");
    noninduced[first_disc + d] = total / aut;
  }

  // Back-substitute N = A C over all k-patterns, densest first.
  const IntMatrix& occ = catalog.occurrence(k);
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return all[a].edges.size() > all[b].edges.size(); });
  std::vector<Count> result(all.size(), 0);
  for (std::size_t i : order) {
    Count v = noninduced[i];
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j != i && occ(i, j) != 0) v = checked_add(v, -checked_mul(Count{occ(i, j)}, result[j]));
    }
    result[i] = v;
  }
  std::vector<Count> disc(result.begin() + static_cast<std::ptrdiff_t>(first_disc), result.end());
  require_nonnegative(k, disc, first_disc);
  return disc;
}

}  // namespace motifcount
