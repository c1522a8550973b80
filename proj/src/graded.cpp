#include "hcob/graded.hpp"

#include <algorithm>
#include <utility>

#include "hcob/errors.hpp"

namespace hcob {

std::vector<std::size_t> GradedComplex::indices_in_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degree.size(); ++i)
    if (degree[i] == d) out.push_back(i);
  return out;
}

bool GradedComplex::is_homogeneous(const F2Matrix& op, int shift) const {
  for (std::size_t r = 0; r < op.rows(); ++r)
    for (auto c : op.row(r).support())
      if (degree[r] != degree[c] + shift) return false;
  return true;
}

BitVector apply_power(const F2Matrix& op, int power, BitVector x) {
  for (int i = 0; i < power; ++i) x = op * x;
  return x;
}

GradedHomology::GradedHomology(GradedComplex c) : complex_(std::move(c)) {
  const GradedComplex& complex = complex_;
  const std::size_t n = complex.size();
  check_internal(complex.differential.rows() == n && complex.differential.cols() == n,
                 "differential has wrong shape");
  if (n == 0) return;
  min_degree_ = *std::min_element(complex.degree.begin(), complex.degree.end());
  max_degree_ = *std::max_element(complex.degree.begin(), complex.degree.end());

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < n; ++i) by_degree[complex.degree[i]].push_back(i);

  for (auto& [d, idx] : by_degree) {
    // Cycles: kernel of the differential restricted to degree-d columns.
    std::vector<std::size_t> all_rows(n);
    for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;
    const F2Matrix block = complex.differential.select(all_rows, idx);
    const auto kernel = kernel_basis_f2(block);

    Slot s{Echelon(n), Echelon(n, kernel.size()), {}, kernel.size()};
    if (auto it = by_degree.find(d + 1); it != by_degree.end()) {
      for (auto c : it->second) {
        BitVector b = complex.differential.column(c);
        s.boundaries.insert(b);
        s.with_reps.insert(b);
      }
    }
    for (const auto& k : kernel) {
      BitVector z(n);
      for (auto j : k.support()) z.set(idx[j]);
      if (s.with_reps.insert(z, BitVector::unit(kernel.size(), s.reps.size()))) s.reps.push_back(z);
    }
    slots_.emplace(d, std::move(s));
  }
}

const GradedHomology::Slot* GradedHomology::slot(int d) const {
  auto it = slots_.find(d);
  return it == slots_.end() ? nullptr : &it->second;
}

std::size_t GradedHomology::dim(int d) const {
  const Slot* s = slot(d);
  return s ? s->reps.size() : 0;
}

const std::vector<BitVector>& GradedHomology::representatives(int d) const {
  const Slot* s = slot(d);
  return s ? s->reps : empty_;
}

bool GradedHomology::is_cycle(const BitVector& x) const { return (complex_.differential * x).none(); }

bool GradedHomology::is_boundary(const BitVector& x, int d) const {
  const Slot* s = slot(d);
  if (!s) return x.none();
  return s->boundaries.contains(x);
}

BitVector GradedHomology::coordinates(const BitVector& z, int d) const {
  const Slot* s = slot(d);
  if (!s) {
    check_internal(z.none(), "nonzero vector in an empty degree");
    return BitVector(0);
  }
  BitVector tag(s->tag_width);
  const BitVector residual = s->with_reps.reduce(z, &tag);
  check_internal(residual.none(), "coordinates requested for a non-cycle");
  BitVector coords(s->reps.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (tag.get(i)) coords.set(i);
  return coords;
}

F2Matrix GradedHomology::induced(const GradedOperator& op, int d) const {
  const auto& src = representatives(d);
  const int target = d + op.shift;
  std::vector<BitVector> cols;
  cols.reserve(src.size());
  for (const auto& r : src) {
    const BitVector image = op.matrix * r;
    check_internal(is_cycle(image), "operator does not map cycles to cycles");
    cols.push_back(coordinates(image, target));
  }
  return F2Matrix::from_columns(dim(target), cols);
}

std::vector<BitVector> GradedHomology::power_image(const GradedOperator& op, int power, int target) const {
  const int source = target - power * op.shift;
  Echelon span(dim(target));
  std::vector<BitVector> out;
  for (const auto& r : representatives(source)) {
    const BitVector image = apply_power(op.matrix, power, r);
    check_internal(is_cycle(image), "operator does not map cycles to cycles");
    BitVector c = coordinates(image, target);
    if (span.insert(c)) out.push_back(std::move(c));
  }
  return out;
}

std::size_t GradedHomology::power_rank(const GradedOperator& op, int power, int d) const {
  return power_image(op, power, d + power * op.shift).size();
}

}  // namespace hcob
