#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcob/f2linalg.hpp"
#include "hcob/graded.hpp"
#include "hcob/intmatrix.hpp"

namespace hcob {

// Degree window [lo, hi], inclusive.
struct Window {
  int lo = 0;
  int hi = 0;
  bool operator==(const Window&) const = default;
};

// Differential entry from a finite generator into the tower element
// t(a, b) = q^a v^b g, which sits in degree n + a + 4b.
struct TowerEdge {
  std::size_t from = 0;
  int a = 0;
  int b = 0;
  bool operator==(const TowerEdge&) const = default;
};

// Chain-level model: one free F[q,v]/(q^3) tower triple with bottoms at
// n, n+1, n+2 plus a finite part. On the towers v lowers b and q lowers a;
// towers carry no internal differential. Matrices act on columns indexed by
// the finite generators.
struct PinModel {
  std::optional<int> reducible_degree;  // absent: finite part only
  std::vector<std::string> labels;
  std::vector<int> degrees;
  F2Matrix q;      // degree -1
  F2Matrix v;      // degree -4
  F2Matrix d_fin;  // degree -1
  std::vector<TowerEdge> to_tower;

  std::size_t finite_size() const { return degrees.size(); }
  bool operator==(const PinModel&) const = default;
};

struct PinValidation {
  // Homogeneity, q^3 = 0, qv = vq and D^2 = 0.
  bool structural = true;
  bool q_commutes = true;  // Dq = qD
  bool v_commutes = true;  // Dv = vD
  std::vector<std::string> problems;

  bool module_compatible() const { return structural && q_commutes && v_commutes; }
};

// Throws InputError on shape problems (matrix sizes, labels, edges out of
// range, duplicate tower edges). Everything else is reported.
PinValidation validate(const PinModel& m);

struct PinOptions {
  std::optional<Window> window;
  int margin = 2;  // in v-steps
};

// lo = min(n, finite degrees) - 4, hi = max(n, finite degrees) + 4(margin + 2).
Window default_window(const PinModel& m, int margin);

// Explicit truncated complex: finite generators first, then the tower
// elements of degree <= hi ordered by (a, b).
struct Materialized {
  GradedComplex complex;
  GradedOperator q;  // shift -1
  GradedOperator v;  // shift -4
  std::vector<std::string> labels;
  std::optional<int> reducible_degree;
  Window window;
  int margin = 2;
};

// Throws InputError when the window is too small for the margin.
Materialized materialize(const PinModel& m, Window w, int margin);

struct BorelHomology {
  Materialized chains;
  GradedHomology homology;
  PinValidation validation;

  std::size_t dim(int d) const { return homology.dim(d); }
  // Rank of v^k into H_d from H_{d+4k}.
  std::size_t v_power_rank(int k, int d) const;
  // Top degree at which towers are tested (hi - 4 * margin).
  int stable_top() const { return chains.window.hi - 4 * chains.margin; }
};

// Requires the structural checks; raises ModelInvalid otherwise.
BorelHomology borel_homology(const PinModel& m, const PinOptions& opts = {});

struct TowerBottoms {
  int A = 0, B = 0, C = 0;
  Window window;
  int margin = 2;
};

// Lowest degree of each stable v-tower. Throws ModelInvalid when a tower is
// missing or the model lacks a reducible.
TowerBottoms tower_bottoms(const BorelHomology& h);
// Computes with the given window and again with margin + 2 and hi + 8; a
// mismatch is an InternalError. Needs only Dv = vD.
TowerBottoms tower_bottoms(const PinModel& m, const PinOptions& opts = {});

struct AbcReport {
  int A = 0, B = 0, C = 0;
  int alpha = 0, beta = 0, gamma = 0;
  int mu = 0;
  Window window;
  int margin = 2;
};

// Needs a module-compatible model. ModelInvalid when the ordering or parity
// constraints fail.
AbcReport abc(const PinModel& m, const PinOptions& opts = {});

struct Triple {
  int alpha = 0, beta = 0, gamma = 0;
  bool operator==(const Triple&) const = default;
};

Triple abc_of_reverse(const Triple& t);
Triple abc_of_reverse(const PinModel& m, const PinOptions& opts = {});

struct TowerTops {
  int A = 0, B = 0, C = 0;  // tops of the downward towers in residues -n, -n-1, -n-2
};

// Homology of the linear dual (transpose, degrees negated) and the top of
// each downward-infinite v-tower.
TowerTops coborel_tower_tops(const PinModel& m, const PinOptions& opts = {});

// Orientation reversal read off the dual: bottoms of -Y are
// (C' + 2, B' + 2, A' + 2) for tops (A', B', C').
Triple reverse_from_tops(const TowerTops& t);

struct LocalizationReport {
  bool has_reducible = false;
  int block_start = 0;                  // first degree of the tested 4-block
  std::array<std::size_t, 4> stable{};  // localized dims in block_start .. +3
  bool q_iso = false;                   // q : n+2 -> n+1 -> n iso on the block
  bool pass = false;
};

LocalizationReport localization_check(const PinModel& m, const PinOptions& opts = {});

// beta mod 2, after asserting alpha = beta = gamma mod 2.
int rokhlin_check(const AbcReport& r);

// --- S^1 analogue -----------------------------------------------------------

struct SOneModel {
  int reducible_degree = 0;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  F2Matrix u;      // degree -2
  F2Matrix d_fin;  // degree -1
  // (finite generator, b): D hits U^b g, degree n + 2b.
  std::vector<std::pair<std::size_t, int>> to_tower;

  std::size_t finite_size() const { return degrees.size(); }
  bool operator==(const SOneModel&) const = default;
};

std::vector<std::string> validate(const SOneModel& m);

struct DeltaReport {
  int bottom = 0;
  Rational delta;
  Window window;
  int margin = 2;
};

DeltaReport delta_invariant(const SOneModel& m, std::optional<Window> window = {}, int margin = 2);

}  // namespace hcob
