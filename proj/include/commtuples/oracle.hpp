#pragma once

// Group-theoretic ground truth at desk scale. Counts |Hom(Z^ell, S_n)|, the
// number of ell-tuples of pairwise commuting permutations, without going
// through any generating function.

#include "commtuples/exact.hpp"
#include "commtuples/partitions.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace commtuples {

class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(unsigned degree);
  /// Throws std::invalid_argument unless image is a bijection of 0..n-1.
  explicit Permutation(std::vector<std::uint8_t> image);

  unsigned degree() const { return static_cast<unsigned>(image_.size()); }
  unsigned operator()(unsigned i) const { return image_[i]; }
  std::span<const std::uint8_t> image() const { return image_; }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  bool commutes_with(const Permutation& other) const;

  /// Cycle lengths in non-increasing order.
  Partition cycle_type() const;

  /// Position in lexicographic order, 0..n!-1.
  std::uint32_t rank() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint8_t> image_;
};

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(unsigned n);

/// A permutation with the given cycle type.
Permutation permutation_with_cycle_type(const Partition& type);

struct OracleResult {
  unsigned n = 0;
  unsigned ell = 0;
  Integer raw;          // |C_{ell,n}|
  Rational normalized;  // raw / n!
  std::string method;
  double elapsed_seconds = 0.0;
};

/// Backtracking over tuples: each new component is drawn from the
/// intersection of the centralizers of the ones already chosen.
/// Refuses n > 6 or ell > 4.
OracleResult count_commuting_tuples(unsigned n, unsigned ell);

/// |Hom(Z^ell, G)| = sum over classes [g] of |[g]| * |Hom(Z^{ell-1}, C_G(g))|,
/// starting from G = S_n with classes taken from cycle types. n <= 8.
OracleResult count_hom_by_centralizers(unsigned n, unsigned ell);

/// Number of conjugacy classes of S_n from cycle types. n <= 8.
std::uint64_t conjugacy_class_count(unsigned n);

}  // namespace commtuples
