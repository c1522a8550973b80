#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hcob/f2linalg.hpp"

namespace hcob {

// A finite Z-graded chain complex over GF(2) with a distinguished basis. Each
// basis element carries a degree; the differential lowers degree by one.
// Operators (q, v, U, Q, ...) are square matrices on the same basis together
// with the degree they shift by.
struct GradedComplex {
  std::vector<int> degree;
  F2Matrix differential;

  std::size_t size() const { return degree.size(); }
  std::vector<std::size_t> indices_in_degree(int d) const;
  // True when op maps degree-d basis elements only to degree d + shift.
  bool is_homogeneous(const F2Matrix& op, int shift) const;
};

struct GradedOperator {
  F2Matrix matrix;
  int shift = 0;
};

// Homology of a GradedComplex, degree by degree, with chosen cycle
// representatives. Representatives of H_d are cycles whose classes form a
// basis; the complement of the boundaries inside the cycles.
class GradedHomology {
 public:
  explicit GradedHomology(GradedComplex complex);

  const GradedComplex& complex() const { return complex_; }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }

  std::size_t dim(int d) const;
  // Cycle representatives (as ambient vectors) of a basis of H_d.
  const std::vector<BitVector>& representatives(int d) const;

  bool is_cycle(const BitVector& x) const;
  bool is_boundary(const BitVector& x, int d) const;
  // Coordinates of the class of the degree-d cycle z in the representative
  // basis of H_d.
  BitVector coordinates(const BitVector& z, int d) const;

  // Matrix of the map induced by a chain-level operator from H_d to
  // H_{d + op.shift}. The operator must commute with the differential.
  F2Matrix induced(const GradedOperator& op, int d) const;
  // Rank of op^power : H_{d} -> H_{d + power * shift}, computed at chain level
  // on the representatives.
  std::size_t power_rank(const GradedOperator& op, int power, int d) const;
  // Subspace of H_target spanned by op^power applied to H_{target - power*shift},
  // expressed as coordinate vectors.
  std::vector<BitVector> power_image(const GradedOperator& op, int power, int target) const;

 private:
  struct Slot {
    Echelon boundaries;   // boundary space in degree d, tagless
    Echelon with_reps;    // boundaries followed by representatives, tagged by rep index
    std::vector<BitVector> reps;
    std::size_t tag_width = 0;
  };
  const Slot* slot(int d) const;

  GradedComplex complex_;
  int min_degree_ = 0, max_degree_ = -1;
  std::map<int, Slot> slots_;
  std::vector<BitVector> empty_;
};

// Apply op^power to a vector.
BitVector apply_power(const F2Matrix& op, int power, BitVector x);

}  // namespace hcob
