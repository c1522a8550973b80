#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcob/equivariant.hpp"
#include "hcob/f2linalg.hpp"
#include "hcob/graded.hpp"
#include "hcob/intmatrix.hpp"

namespace hcob {

// Free, finitely generated complex over F[U] (deg U = -2). A map of degree s
// is stored as a GF(2) matrix: entry (y, x) set means the image of x contains
// U^k y with k = (deg y - deg x - s) / 2, so the exponent is implied by the
// degrees. The differential has degree -1.
struct UComplex {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  F2Matrix differential;

  std::size_t size() const { return degrees.size(); }
  int min_degree() const;
  int max_degree() const;
  bool operator==(const UComplex&) const = default;
};

// U-exponent of the entry x -> y of a map of degree `shift`, or nullopt when
// no such entry can exist.
std::optional<int> u_power(const UComplex& c, std::size_t from, std::size_t to, int shift);

// Throws InputError when the matrix has the wrong shape or an entry is not
// allowed for the given degree.
void check_map(const UComplex& c, const F2Matrix& m, int shift, const std::string& name);

// Shape and degree problems are InputError; d^2 != 0 is ModelInvalid.
void validate(const UComplex& c);

// Plus flavor on a window: basis U^{-k} x for k >= 0 and deg x + 2k <= hi.
struct PlusWindow {
  GradedComplex complex;
  GradedOperator u;  // shift -2
  std::vector<std::pair<std::size_t, int>> basis;  // (generator, k)
  Window window;
  int margin = 2;
};

// lo = min degree, hi = max degree + 2(margin + 1).
Window plus_default_window(const UComplex& c, int margin);
PlusWindow plus_window(const UComplex& c, Window w, int margin);
// Lift of an F[U]-linear map of degree `shift` <= 0 to the plus window.
F2Matrix lift_to_plus(const UComplex& c, const PlusWindow& p, const F2Matrix& map, int shift);

struct UTower {
  int parity = 0;
  int bottom = 0;
  std::size_t rank = 0;  // localized rank in this parity
};

// Stable U-towers of the plus homology, one entry per parity that has any.
std::vector<UTower> plus_towers(const UComplex& c, Window w, int margin);

struct UOptions {
  std::optional<Window> window;
  int margin = 2;
};

struct DReport {
  int d = 0;
  Window window;
  int margin = 2;
};

// Bottom of the single U-tower. ModelInvalid unless exactly one tower.
// Recomputed with margin + 2 and hi + 4; a mismatch is an InternalError.
DReport d_invariant(const UComplex& c, const UOptions& opts = {});

struct IotaCheck {
  bool chain_map = false;
  bool squares_to_identity = false;  // up to homotopy
  std::optional<F2Matrix> homotopy;  // H of degree +1 with iota^2 + id = dH + Hd
};

IotaCheck check_iota(const UComplex& c, const F2Matrix& iota);
// Throws InputError unless iota is a chain map squaring to the identity up to
// homotopy.
void validate_iota(const UComplex& c, const F2Matrix& iota);

// Cone of Q(1 + iota). Generator x of c sits in degree deg x + 1, Qx in
// degree deg x; the differential is dx + Q(1 + iota)x on x and Q dx on Qx.
struct ConeComplex {
  UComplex base;
  F2Matrix iota;
  UComplex complex;  // 2n generators: x_0..x_{n-1}, then Qx_0..Qx_{n-1}
  F2Matrix q;        // degree -1
};

ConeComplex cone_iota(const UComplex& c, const F2Matrix& iota);

struct InvolutiveReport {
  Rational d, d_bar, d_under;
  bool ordered = false;    // d_under <= d <= d_bar
  bool congruent = false;  // all equal mod 2
  Window window;
  int margin = 2;
};

// Two towers of the cone, one per parity: d_bar is the bottom of the tower in
// the parity of d (the Q-image tower), d_under + 1 the bottom of the other.
InvolutiveReport involutive_correction_terms(const ConeComplex& k, const UOptions& opts = {});

// True when iota induces the identity on the tower part of HF+.
bool iota_is_identity_on_tower(const UComplex& c, const F2Matrix& iota, const UOptions& opts = {});

struct V0Triple {
  Rational v0, v0_bar, v0_under;
  bool operator==(const V0Triple&) const = default;
};

// V = (p - 1)/8 - d/2 for d, d_bar, d_under respectively. p <= 0 is an
// InputError.
V0Triple v0_triple(long long p, const Rational& d, const Rational& d_bar, const Rational& d_under);
V0Triple v0_triple(long long p, const InvolutiveReport& r);

struct DTriple {
  Rational d, d_bar, d_under;
  bool operator==(const DTriple&) const = default;
};
DTriple d_from_v0(long long p, const V0Triple& v);

}  // namespace hcob
