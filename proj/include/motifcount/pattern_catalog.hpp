#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "motifcount/count.hpp"

namespace motifcount {

// Edge set of a labelled graph on at most five vertices. Bit p stands for
// the p-th pair of {0..4} in lexicographic order: (0,1), (0,2), ..., (3,4).
using PairMask = std::uint16_t;

constexpr int kMaxPatternSize = 5;

int pair_bit(int a, int b);
PairMask mask_of(std::span<const std::pair<int, int>> edges);

struct Pattern {
  int size = 0;
  int index = 0;       // 1-based; connected patterns first, in the conventional order
  std::string id;      // "<size>-<index>", e.g. "5-8"
  std::string name;    // e.g. "five_cycle"
  bool connected = false;
  std::vector<std::pair<int, int>> edges;
  PairMask mask = 0;
  PairMask canonical = 0;
  int automorphisms = 0;
};

// Dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  static IntMatrix identity(std::size_t n);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// N = forward * C relates non-induced to induced counts of the connected
// patterns of one size; inverse recovers C from N.
struct ConversionMatrices {
  IntMatrix forward;
  IntMatrix inverse;
};

// A polynomial in injective-match counts of connected patterns. A monomial
// is the sorted list of variable slots it multiplies.
using Polynomial = std::map<std::vector<int>, Count>;

// Per-size counts of connected patterns, for sizes 1..5. Entry [k] holds
// the counts of the connected k-vertex patterns in catalog order; [1] is
// {n} and [2] is {m}.
using ConnectedCounts = std::array<std::vector<Count>, kMaxPatternSize + 1>;

// The atlas of all graphs on at most five vertices (1, 2, 4, 11 and 34
// isomorphism classes for k = 1, 2, 3, 4, 5), the induced/non-induced
// conversion matrices, and the disconnected-pattern polynomials.
class PatternCatalog {
 public:
  // Built on first use and immutable afterwards. Throws IntegrityError if
  // the recomputed 5-vertex occurrence matrix differs from the stored one.
  static const PatternCatalog& instance();

  std::span<const Pattern> patterns(int k) const { return patterns_.at(static_cast<std::size_t>(k)); }
  std::span<const Pattern> connected(int k) const {
    return patterns(k).first(static_cast<std::size_t>(connected_count_[static_cast<std::size_t>(k)]));
  }
  std::span<const Pattern> disconnected(int k) const {
    return patterns(k).subspan(static_cast<std::size_t>(connected_count_[static_cast<std::size_t>(k)]));
  }
  const Pattern& pattern(int k, int index) const { return patterns(k)[static_cast<std::size_t>(index - 1)]; }

  // 1-based index of the pattern isomorphic to the labelled k-vertex graph.
  int classify(int k, PairMask mask) const { return classify_[static_cast<std::size_t>(k)][mask]; }

  // Occurrence matrix over every k-vertex pattern: entry (i, j) is the number
  // of copies of pattern i+1 inside pattern j+1.
  const IntMatrix& occurrence(int k) const { return occurrence_.at(static_cast<std::size_t>(k)); }
  // Conversion pair restricted to connected k-patterns (k = 3, 4, 5). For
  // k = 5 these are the stored literal matrices after cross-checking.
  const ConversionMatrices& conversion(int k) const { return conversion_.at(static_cast<std::size_t>(k)); }

  // Literal 21x21 matrices relating induced and non-induced 5-vertex counts.
  static IntMatrix stored_five_occurrence();
  static IntMatrix stored_five_inverse();

  // Injective-match polynomial of a disconnected k-pattern (0-based index
  // into disconnected(k)). Variable slot s refers to variables()[s].
  const Polynomial& disconnected_polynomial(int k, int d) const {
    return disconnected_polys_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(d));
  }
  // Connected patterns acting as polynomial variables, as (size, index).
  const std::vector<std::pair<int, int>>& variables() const { return variables_; }
  std::string polynomial_string(const Polynomial& p) const;

 private:
  PatternCatalog();

  std::array<std::vector<Pattern>, kMaxPatternSize + 1> patterns_;
  std::array<int, kMaxPatternSize + 1> connected_count_{};
  std::array<std::vector<int>, kMaxPatternSize + 1> classify_;
  std::array<IntMatrix, kMaxPatternSize + 1> occurrence_;
  std::array<ConversionMatrices, kMaxPatternSize + 1> conversion_;
  std::array<std::vector<Polynomial>, kMaxPatternSize + 1> disconnected_polys_;
  std::vector<std::pair<int, int>> variables_;
};

// C = A^-1 N for the 21 connected 5-vertex patterns. Throws IntegrityError
// naming the first negative entry.
std::vector<Count> noninduced_to_induced(std::span<const Count> noninduced);

// Generic forms for connected k-patterns (k = 3, 4, 5).
std::vector<Count> noninduced_to_induced(int k, std::span<const Count> noninduced);
std::vector<Count> induced_to_noninduced(int k, std::span<const Count> induced);

// Induced counts of every disconnected k-pattern (k = 2..5), given exact
// induced counts of the connected patterns of every size up to k. Sizes 1
// and 2 hold {n} and {m}. Throws IntegrityError on a negative result.
std::vector<Count> disconnected_counts(const ConnectedCounts& induced, int k);

}  // namespace motifcount
