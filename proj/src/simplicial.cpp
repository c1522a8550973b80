#include "hcob/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "hcob/coset.hpp"
#include "hcob/errors.hpp"

namespace hcob {

namespace {

void add_all_faces(const Simplex& s, SimplexSet& out) {
  const std::size_t n = s.size();
  // Enumerate the nonempty subsets through bitmasks; n is small in practice.
  if (n > 24) throw InputError("simplex too large to close");
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) face.push_back(s[i]);
    out.insert(std::move(face));
  }
}

bool is_subset(const Simplex& small, const Simplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool disjoint(const Simplex& a, const Simplex& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

std::vector<Vertex> vertices_of(const SimplexSet& s) {
  std::set<Vertex> v;
  for (const auto& simplex : s) v.insert(simplex.begin(), simplex.end());
  return {v.begin(), v.end()};
}

}  // namespace

Simplex make_simplex(std::vector<Vertex> vertices) {
  if (vertices.empty()) throw InputError("empty simplex");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InputError("simplex repeats a vertex");
  return vertices;
}

AbstractComplex AbstractComplex::from_facets(const std::vector<Vertex>& vertices,
                                             const std::vector<std::vector<Vertex>>& faces) {
  AbstractComplex k;
  k.vertices_ = vertices;
  std::sort(k.vertices_.begin(), k.vertices_.end());
  if (std::adjacent_find(k.vertices_.begin(), k.vertices_.end()) != k.vertices_.end())
    throw InputError("duplicate vertex label");
  for (const auto& f : faces) {
    Simplex s = make_simplex(f);
    for (Vertex v : s)
      if (!std::binary_search(k.vertices_.begin(), k.vertices_.end(), v))
        throw InputError("simplex references unknown vertex " + std::to_string(v));
    add_all_faces(s, k.simplices_);
  }
  for (Vertex v : k.vertices_) k.simplices_.insert(Simplex{v});
  return k;
}

AbstractComplex AbstractComplex::from_facets(const std::vector<std::vector<Vertex>>& faces) {
  std::set<Vertex> v;
  for (const auto& f : faces) v.insert(f.begin(), f.end());
  return from_facets(std::vector<Vertex>(v.begin(), v.end()), faces);
}

int AbstractComplex::dimension() const {
  if (simplices_.empty()) return -1;
  return static_cast<int>(simplices_.rbegin()->size()) - 1;
}

std::vector<Simplex> AbstractComplex::simplices_of_dim(int d) const {
  std::vector<Simplex> out;
  if (d < 0) return out;
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  auto it = simplices_.lower_bound(Simplex(n, std::numeric_limits<Vertex>::min()));
  for (; it != simplices_.end() && it->size() == n; ++it) out.push_back(*it);
  return out;
}

std::vector<Simplex> AbstractComplex::facets() const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    bool maximal = true;
    for (Vertex v : vertices_) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      Simplex bigger = s;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
      if (contains(bigger)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

bool AbstractComplex::is_pure() const {
  const int d = dimension();
  for (const auto& f : facets())
    if (static_cast<int>(f.size()) - 1 != d) return false;
  return true;
}

long long AbstractComplex::euler_characteristic() const {
  long long chi = 0;
  for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

SimplexSet closure(const AbstractComplex& k, const SimplexSet& subset) {
  SimplexSet out;
  for (const auto& s : subset) {
    if (!k.contains(s)) throw InputError("closure: simplex not in complex");
    add_all_faces(s, out);
  }
  return out;
}

SimplexSet star(const AbstractComplex& k, const Simplex& tau) {
  if (!k.contains(tau)) throw InputError("star: simplex not in complex");
  SimplexSet out;
  for (const auto& s : k.simplices())
    if (is_subset(tau, s)) out.insert(s);
  return out;
}

AbstractComplex link(const AbstractComplex& k, const Simplex& tau) {
  if (!k.contains(tau)) throw InputError("link: simplex not in complex");
  SimplexSet lk;
  for (const auto& s : closure(k, star(k, tau)))
    if (disjoint(s, tau)) lk.insert(s);
  std::vector<std::vector<Vertex>> faces(lk.begin(), lk.end());
  return AbstractComplex::from_facets(vertices_of(lk), faces);
}

AbstractComplex join(const AbstractComplex& a, const AbstractComplex& b) {
  int offset = 0;
  if (!a.vertices().empty() && !b.vertices().empty()) {
    const Vertex amax = a.vertices().back();
    const Vertex bmin = b.vertices().front();
    bool collide = false;
    for (Vertex v : b.vertices())
      if (std::binary_search(a.vertices().begin(), a.vertices().end(), v)) collide = true;
    if (collide) offset = amax + 1 - bmin;
  }
  std::vector<Vertex> verts = a.vertices();
  for (Vertex v : b.vertices()) verts.push_back(v + offset);

  std::vector<std::vector<Vertex>> faces;
  auto shifted = [&](const Simplex& s) {
    Simplex out = s;
    for (auto& v : out) v += offset;
    return out;
  };
  const auto fa = a.facets();
  const auto fb = b.facets();
  for (const auto& s : fa) faces.push_back(s);
  for (const auto& t : fb) faces.push_back(shifted(t));
  for (const auto& s : fa)
    for (const auto& t : fb) {
      Simplex u = s;
      const Simplex st = shifted(t);
      u.insert(u.end(), st.begin(), st.end());
      faces.push_back(u);
    }
  return AbstractComplex::from_facets(verts, faces);
}

AbstractComplex suspension(const AbstractComplex& k) {
  const Vertex top = k.vertices().empty() ? 0 : k.vertices().back();
  return join(k, AbstractComplex::from_facets({top + 1, top + 2}, {}));
}

AbstractComplex cone(const AbstractComplex& k) {
  const Vertex top = k.vertices().empty() ? 0 : k.vertices().back();
  return join(k, AbstractComplex::from_facets({top + 1}, {}));
}

ChainComplexZ chain_complex(const AbstractComplex& k, bool reduced) {
  ChainComplexZ c;
  c.reduced = reduced;
  const int dim = k.dimension();
  for (int d = 0; d <= dim; ++d) c.generators.push_back(k.simplices_of_dim(d));

  for (int d = 0; d <= dim; ++d) {
    const auto& cols = c.generators[d];
    if (d == 0) {
      IntMatrix aug(reduced ? 1 : 0, cols.size());
      if (reduced)
        for (std::size_t j = 0; j < cols.size(); ++j) aug(0, j) = 1;
      c.boundary.push_back(std::move(aug));
      continue;
    }
    const auto& rows = c.generators[d - 1];
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
    IntMatrix b(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Simplex& s = cols[j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(i));
        b(index.at(face), j) = (i % 2 == 0) ? 1 : -1;
      }
    }
    c.boundary.push_back(std::move(b));
  }
  for (int d = 1; d <= dim; ++d)
    check_internal((c.boundary[d - 1] * c.boundary[d]).is_zero(), "boundary of boundary is nonzero");
  return c;
}

const HomologyGroup& Homology::at(int degree) const {
  static const HomologyGroup zero;
  const int i = degree - min_degree;
  if (i < 0 || i >= static_cast<int>(groups.size())) return zero;
  return groups[i];
}

Homology homology(const AbstractComplex& k, Ring ring, bool reduced) {
  Homology h;
  h.ring = ring;
  h.reduced = reduced;
  h.min_degree = reduced ? -1 : 0;
  const ChainComplexZ c = chain_complex(k, reduced);
  const int dim = k.dimension();

  // rank_of[d] = rank of boundary[d]; factors_of[d] = invariant factors.
  std::vector<std::size_t> rank_of(dim + 2, 0);
  std::vector<std::vector<Integer>> factors_of(dim + 2);
  for (int d = 0; d <= dim; ++d) {
    if (ring == Ring::Integers) {
      factors_of[d] = invariant_factors(c.boundary[d]);
      rank_of[d] = factors_of[d].size();
    } else {
      rank_of[d] = rank_f2(c.boundary[d].mod2());
    }
  }

  if (reduced) {
    // C_{-1} = Z spanned by the empty simplex.
    HomologyGroup g;
    g.rank = 1 - (dim >= 0 ? rank_of[0] : 0);
    h.groups.push_back(g);
  }
  for (int d = 0; d <= dim; ++d) {
    HomologyGroup g;
    g.rank = c.generators[d].size() - rank_of[d] - rank_of[d + 1];
    if (ring == Ring::Integers)
      for (const auto& f : factors_of[d + 1])
        if (f > 1) g.torsion.push_back(f);
    h.groups.push_back(std::move(g));
  }
  return h;
}

bool is_homology_sphere(const AbstractComplex& k, int dim, Ring ring) {
  const Homology h = homology(k, ring, /*reduced=*/true);
  for (int d = -1; d <= std::max(dim, k.dimension()); ++d) {
    const auto& g = h.at(d);
    if (d == dim) {
      if (g.rank != 1 || !g.torsion.empty()) return false;
    } else if (!g.is_zero()) {
      return false;
    }
  }
  return true;
}

F2Matrix coboundary_f2(const AbstractComplex& k, int d) {
  const auto rows = k.simplices_of_dim(d + 1);
  const auto cols = k.simplices_of_dim(d);
  std::map<Simplex, std::size_t> index;
  for (std::size_t j = 0; j < cols.size(); ++j) index.emplace(cols[j], j);
  F2Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t v = 0; v < rows[i].size(); ++v) {
      Simplex face = rows[i];
      face.erase(face.begin() + static_cast<long>(v));
      m.set(i, index.at(face));
    }
  return m;
}

bool is_cocycle(const AbstractComplex& k, const CohomologyClass& x) {
  if (x.cochain.size() != k.simplices_of_dim(x.dim).size())
    throw InputError("cochain length does not match the number of simplices");
  return (coboundary_f2(k, x.dim) * x.cochain).none();
}

bool is_coboundary(const AbstractComplex& k, const CohomologyClass& x) {
  if (x.dim == 0) return x.cochain.none();
  return solve_f2(coboundary_f2(k, x.dim - 1), x.cochain).has_value();
}

std::vector<CohomologyClass> cohomology_basis_f2(const AbstractComplex& k, int d) {
  std::vector<CohomologyClass> out;
  if (d < 0 || d > k.dimension()) return out;
  const std::size_t n = k.simplices_of_dim(d).size();
  Echelon span(n);
  if (d > 0) {
    const F2Matrix prev = coboundary_f2(k, d - 1);
    for (std::size_t j = 0; j < prev.cols(); ++j) span.insert(prev.column(j));
  }
  for (auto& z : kernel_basis_f2(coboundary_f2(k, d)))
    if (span.insert(z)) out.push_back(CohomologyClass{d, std::move(z)});
  return out;
}

CohomologyClass bockstein_sq1(const AbstractComplex& k, const CohomologyClass& x) {
  if (!is_cocycle(k, x)) throw InputError("Sq1 input is not a mod-2 cocycle");
  const auto rows = k.simplices_of_dim(x.dim + 1);
  const auto cols = k.simplices_of_dim(x.dim);
  std::map<Simplex, std::size_t> index;
  for (std::size_t j = 0; j < cols.size(); ++j) index.emplace(cols[j], j);

  CohomologyClass out{x.dim + 1, BitVector(rows.size())};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // (delta lift)(sigma) = sum_v (-1)^v lift(face_v sigma)
    long long value = 0;
    for (std::size_t v = 0; v < rows[i].size(); ++v) {
      Simplex face = rows[i];
      face.erase(face.begin() + static_cast<long>(v));
      if (x.cochain.get(index.at(face))) value += (v % 2 == 0) ? 1 : -1;
    }
    check_internal(value % 2 == 0, "integral coboundary of a mod-2 cocycle lift is odd");
    const long long half = value / 2;
    if (half % 2 != 0) out.cochain.set(i);
  }
  check_internal(is_cocycle(k, out), "Sq1 output is not a cocycle");
  return out;
}

EdgePathGroup fundamental_group(const AbstractComplex& k, Vertex basepoint) {
  if (!k.contains(Simplex{basepoint})) throw InputError("basepoint is not a vertex of the complex");
  const auto edges = k.simplices_of_dim(1);
  std::map<Vertex, std::vector<Vertex>> adjacency;
  for (const auto& e : edges) {
    adjacency[e[0]].push_back(e[1]);
    adjacency[e[1]].push_back(e[0]);
  }
  for (auto& [v, nbrs] : adjacency) std::sort(nbrs.begin(), nbrs.end());

  std::set<Simplex> tree;
  std::set<Vertex> seen{basepoint};
  std::deque<Vertex> queue{basepoint};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency[v]) {
      if (seen.insert(w).second) {
        tree.insert(make_simplex({v, w}));
        queue.push_back(w);
      }
    }
  }
  if (seen.size() != k.vertices().size()) throw InputError("fundamental_group: complex is not connected");

  EdgePathGroup out;
  std::map<Simplex, int> generator_of;
  for (const auto& e : edges) {
    if (tree.count(e)) continue;
    out.generator_edges.push_back(e);
    generator_of[e] = static_cast<int>(out.generator_edges.size());
  }
  out.presentation.generators = static_cast<int>(out.generator_edges.size());

  auto letter = [&](Vertex a, Vertex b) {
    auto it = generator_of.find(make_simplex({a, b}));
    if (it == generator_of.end()) return 0;
    return a < b ? it->second : -it->second;
  };
  for (const auto& t : k.simplices_of_dim(2)) {
    // Boundary loop a -> b -> c -> a.
    std::vector<int> word;
    for (int l : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
      if (l != 0) word.push_back(l);
    word = reduce_word(word, /*cyclic=*/true);
    if (!word.empty()) out.presentation.relators.push_back(std::move(word));
  }
  return out;
}

bool LinkReport::looks_spherical() const {
  if (exact_sphere) return *exact_sphere;
  if (!z_homology_sphere || !f2_homology_sphere) return false;
  if (pi1_attempted) return pi1_order && *pi1_order == 1;
  return true;
}

namespace {

bool is_connected(const AbstractComplex& k) {
  if (k.vertices().empty()) return false;
  return homology(k, Ring::F2, /*reduced=*/true).at(0).rank == 0;
}

bool is_circle(const AbstractComplex& k) {
  if (k.dimension() != 1 || !k.is_pure()) return false;
  std::map<Vertex, int> degree;
  for (const auto& e : k.simplices_of_dim(1)) {
    ++degree[e[0]];
    ++degree[e[1]];
  }
  for (Vertex v : k.vertices())
    if (degree[v] != 2) return false;
  return is_connected(k);
}

bool is_two_sphere(const AbstractComplex& k) {
  if (k.dimension() != 2 || !k.is_pure()) return false;
  std::map<Simplex, int> edge_count;
  for (const auto& t : k.simplices_of_dim(2))
    for (std::size_t i = 0; i < 3; ++i) {
      Simplex e = t;
      e.erase(e.begin() + static_cast<long>(i));
      ++edge_count[e];
    }
  for (const auto& e : k.simplices_of_dim(1))
    if (edge_count[e] != 2) return false;
  for (Vertex v : k.vertices())
    if (!is_circle(link(k, Simplex{v}))) return false;
  return is_connected(k) && k.euler_characteristic() == 2;
}

}  // namespace

std::vector<LinkReport> link_manifold_scan(const AbstractComplex& k, const LinkScanOptions& options) {
  const int n = k.dimension();
  if (!k.is_pure()) throw InputError("link scan requires a pure complex");
  if (n > 4) throw InputError("link scan supports dimension at most 4");

  std::vector<LinkReport> out;
  for (const auto& tau : k.simplices()) {
    const int tau_dim = static_cast<int>(tau.size()) - 1;
    if (tau_dim >= n) continue;
    LinkReport r;
    r.tau = tau;
    r.expected_dim = n - tau_dim - 1;
    const AbstractComplex lk = link(k, tau);
    r.actual_dim = lk.dimension();
    r.euler_characteristic = lk.euler_characteristic();
    r.z_homology_sphere = is_homology_sphere(lk, r.expected_dim, Ring::Integers);
    r.f2_homology_sphere = is_homology_sphere(lk, r.expected_dim, Ring::F2);
    switch (r.expected_dim) {
      case 0:
        r.exact_sphere = lk.dimension() == 0 && lk.vertices().size() == 2;
        break;
      case 1:
        r.exact_sphere = is_circle(lk);
        break;
      case 2:
        r.exact_sphere = is_two_sphere(lk);
        break;
      default:
        if (options.certify_pi1 && r.z_homology_sphere && r.actual_dim == r.expected_dim) {
          r.pi1_attempted = true;
          const auto g = fundamental_group(lk, lk.vertices().front());
          r.pi1_order = coset_enumeration(g.presentation, options.coset_limit).order;
        }
        break;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hcob
