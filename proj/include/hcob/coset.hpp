#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcob/intmatrix.hpp"
#include "hcob/simplicial.hpp"

namespace hcob {

struct CosetEnumeration {
  // Index of the trivial subgroup, i.e. the group order; nullopt when the
  // number of live cosets would exceed the cap.
  std::optional<std::size_t> order;
  std::size_t cosets_defined = 0;
  std::size_t max_live = 0;
};

// Todd-Coxeter enumeration of the cosets of the trivial subgroup, HLT
// strategy: cosets are processed in FIFO order and every relator is traced
// from each coset (in input order), defining new cosets as needed.
// Coincidences are collapsed immediately.
CosetEnumeration coset_enumeration(const GroupPresentation& p, std::size_t limit);

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  bool operator==(const Abelianization&) const = default;
};

Abelianization abelianization(const GroupPresentation& p);

// Freely and cyclically reduced copy of a word.
std::vector<int> reduce_word(const std::vector<int>& word, bool cyclic);

}  // namespace hcob
