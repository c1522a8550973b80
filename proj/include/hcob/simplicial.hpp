#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hcob/f2linalg.hpp"
#include "hcob/intmatrix.hpp"

namespace hcob {

using Vertex = int;
// Vertices in strictly ascending order. The orientation of an oriented simplex
// is the ascending order.
using Simplex = std::vector<Vertex>;

// Orders simplices by dimension first, then lexicographically.
struct SimplexOrder {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};
using SimplexSet = std::set<Simplex, SimplexOrder>;

// Finite abstract simplicial complex: a vertex set and a downward-closed set
// of nonempty simplices containing every singleton. Immutable once built.
class AbstractComplex {
 public:
  AbstractComplex() = default;

  // Builds the closure of the given faces. Throws InputError on duplicate
  // vertex labels, faces with repeated vertices, empty faces, or faces that
  // mention a vertex not listed in `vertices`.
  static AbstractComplex from_facets(const std::vector<Vertex>& vertices,
                                     const std::vector<std::vector<Vertex>>& faces);
  // Vertex set inferred from the faces.
  static AbstractComplex from_facets(const std::vector<std::vector<Vertex>>& faces);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const SimplexSet& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }

  // -1 for the empty complex.
  int dimension() const;
  std::vector<Simplex> simplices_of_dim(int d) const;
  std::vector<Simplex> facets() const;
  bool is_pure() const;
  long long euler_characteristic() const;

  bool operator==(const AbstractComplex& other) const = default;

 private:
  std::vector<Vertex> vertices_;
  SimplexSet simplices_;
};

// Normalizes a user-supplied simplex (sorts, rejects repeats and emptiness).
Simplex make_simplex(std::vector<Vertex> vertices);

SimplexSet closure(const AbstractComplex& k, const SimplexSet& subset);
SimplexSet star(const AbstractComplex& k, const Simplex& tau);
AbstractComplex link(const AbstractComplex& k, const Simplex& tau);

// Simplicial join; the second complex is relabelled when labels collide.
AbstractComplex join(const AbstractComplex& a, const AbstractComplex& b);
// Join with two new points.
AbstractComplex suspension(const AbstractComplex& k);
AbstractComplex cone(const AbstractComplex& k);

// Simplicial chain complex with integer coefficients. boundary[d] maps
// C_d -> C_{d-1} (rows are (d-1)-simplices). boundary[0] is the zero map to
// C_{-1} = 0, or the augmentation when the complex is reduced.
struct ChainComplexZ {
  std::vector<std::vector<Simplex>> generators;
  std::vector<IntMatrix> boundary;
  bool reduced = false;
};

ChainComplexZ chain_complex(const AbstractComplex& k, bool reduced = false);

enum class Ring { Integers, F2 };

struct HomologyGroup {
  std::size_t rank = 0;              // free rank over Z, or dimension over GF(2)
  std::vector<Integer> torsion;      // invariant factors > 1 (integral only)
  bool operator==(const HomologyGroup&) const = default;
  bool is_zero() const { return rank == 0 && torsion.empty(); }
};

struct Homology {
  Ring ring = Ring::Integers;
  bool reduced = false;
  int min_degree = 0;  // -1 when reduced, carrying the class of the empty simplex
  std::vector<HomologyGroup> groups;

  const HomologyGroup& at(int degree) const;
};

Homology homology(const AbstractComplex& k, Ring ring, bool reduced = false);

bool is_homology_sphere(const AbstractComplex& k, int dim, Ring ring);

// A mod-2 cohomology class given by a cocycle on the d-simplices (in the order
// of simplices_of_dim(d)).
struct CohomologyClass {
  int dim = 0;
  BitVector cochain;
};

// Coboundary delta : C^d -> C^{d+1} over GF(2).
F2Matrix coboundary_f2(const AbstractComplex& k, int d);
bool is_cocycle(const AbstractComplex& k, const CohomologyClass& x);
bool is_coboundary(const AbstractComplex& k, const CohomologyClass& x);
// Cocycles representing a basis of H^d(K; Z/2).
std::vector<CohomologyClass> cohomology_basis_f2(const AbstractComplex& k, int d);

// Connecting map of 0 -> Z/2 -> Z/4 -> Z/2 -> 0: lift to a 0/1 integral
// cochain, take the integral coboundary, halve, reduce mod 2.
CohomologyClass bockstein_sq1(const AbstractComplex& k, const CohomologyClass& x);

// Finitely presented group. Letters are signed 1-based generator indices:
// +i is generator i, -i its inverse.
struct GroupPresentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;
};

// Edge-path group with respect to a BFS spanning tree rooted at `basepoint`.
// Generators are the non-tree edges (ascending), one relator per triangle.
struct EdgePathGroup {
  GroupPresentation presentation;
  std::vector<Simplex> generator_edges;
};
EdgePathGroup fundamental_group(const AbstractComplex& k, Vertex basepoint);

struct LinkReport {
  Simplex tau;
  int expected_dim = 0;
  int actual_dim = 0;
  bool z_homology_sphere = false;
  bool f2_homology_sphere = false;
  // Exact sphere decision for links of dimension <= 2.
  std::optional<bool> exact_sphere;
  // For 3-dimensional links when certification was requested: the group
  // order from coset enumeration, or nullopt when the cap was hit.
  bool pi1_attempted = false;
  std::optional<std::size_t> pi1_order;
  long long euler_characteristic = 0;

  // Sphere by the strongest test available for this dimension.
  bool looks_spherical() const;
};

struct LinkScanOptions {
  bool certify_pi1 = false;
  std::size_t coset_limit = 500;
};

// Scans the link of every simplex of codimension >= 1. Requires a pure
// complex of dimension <= 4.
std::vector<LinkReport> link_manifold_scan(const AbstractComplex& k, const LinkScanOptions& options = {});

}  // namespace hcob
