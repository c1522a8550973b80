#pragma once

#include <string>
#include <vector>

#include "hcob/intmatrix.hpp"

namespace hcob {

// Laurent polynomial with integer coefficients: coeffs[i] multiplies t^(low + i).
// The zero polynomial has no coefficients.
struct LaurentPoly {
  int low = 0;
  std::vector<Integer> coeffs;

  static LaurentPoly constant(const Integer& c);
  int high() const { return low + static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Integer coefficient(int exponent) const;
  Integer at_one() const;
  Integer at_minus_one() const;
  bool is_symmetric() const;  // p(t) = p(1/t)
  std::string to_string() const;  // e.g. "-t + 3 - t^-1"
  bool operator==(const LaurentPoly&) const = default;
};

// Throws InputError unless v is square of even size with det(V - V^T) = +-1.
void validate_seifert(const IntMatrix& v);

// Signature of V + V^T via exact congruence diagonalization over Q.
int signature(const IntMatrix& v);

// det(V - t V^T), shifted to be symmetric and signed so that Delta(1) = 1.
LaurentPoly alexander(const IntMatrix& v);

// Murasugi: 0 when |Delta(-1)| = +-1 mod 8, 1 when +-3 mod 8.
int arf(const LaurentPoly& delta);
int arf(const IntMatrix& v);

enum class Sliceness { unknown, obstructed };
const char* to_string(Sliceness s);

// Obstructed when |Delta(-1)| is not a perfect square.
Sliceness fox_milnor_obstruction(const LaurentPoly& delta);

// sigma = 4 Arf + 4 (mod 8).
bool corollary_predicate(int sigma, int arf);

struct KnotReport {
  int genus_bound = 0;  // half the matrix size
  int sigma = 0;
  LaurentPoly delta;
  Integer determinant;  // |Delta(-1)|
  int arf = 0;
  Sliceness fox_milnor = Sliceness::unknown;
  bool predicate = false;
};

KnotReport knot_report(const IntMatrix& v);

}  // namespace hcob
