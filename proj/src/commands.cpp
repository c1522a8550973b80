#include "hcob/commands.hpp"

#include <algorithm>
#include <sstream>

#include "hcob/coset.hpp"
#include "hcob/errors.hpp"
#include "hcob/involutive.hpp"
#include "hcob/io.hpp"
#include "hcob/knot.hpp"
#include "hcob/simplicial.hpp"
#include "json.hpp"

namespace hcob {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string show(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string show(const SimplexSet& set) {
  if (set.empty()) return "(empty)";
  std::string out;
  for (const auto& s : set) out += (out.empty() ? "" : " ") + show(s);
  return out;
}

std::string show(const Window& w) { return "[" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]"; }

std::string show_group(std::size_t rank, const std::vector<Integer>& torsion, const char* ring) {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back(ring);
  if (rank > 1) parts.push_back(std::string(ring) + "^" + std::to_string(rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " + ") + p;
  return out;
}

template <class T>
const T& expect(const LoadedInput& in, const char* kind, const std::string& command) {
  const T* v = std::get_if<T>(&in.value);
  if (!v) throw InputError(command + " needs a " + kind + " input, got " + kind_of(in.value));
  return *v;
}

std::string echo(const CommandArgs& a) {
  std::string out = a.command;
  if (!a.input.empty()) out += " " + a.input;
  for (const auto& s : a.simplices) {
    out += " --simplex ";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  }
  if (a.window) out += " --window " + std::to_string(a.window->lo) + ":" + std::to_string(a.window->hi);
  if (a.margin != 2) out += " --margin " + std::to_string(a.margin);
  if (a.limit != 500) out += " --limit " + std::to_string(a.limit);
  if (a.p) out += " --p " + std::to_string(*a.p);
  if (a.basepoint) out += " --basepoint " + std::to_string(*a.basepoint);
  if (!a.relators.empty()) out += " --relators " + a.relators;
  if (a.ring != "Z") out += " --ring " + a.ring;
  if (a.reduced) out += " --reduced";
  if (a.certify) out += " --certify";
  if (a.json) out += " --json";
  return out;
}

Simplex one_simplex(const CommandArgs& a) {
  if (a.simplices.size() != 1) throw InputError(a.command + " needs exactly one --simplex");
  return make_simplex(a.simplices.front());
}

GroupPresentation parse_relators(const std::string& s) {
  GroupPresentation p;
  std::vector<int> word;
  auto flush = [&] {
    if (word.empty()) throw InputError("empty relator in --relators");
    p.relators.push_back(word);
    word.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else if (c >= 'a' && c <= 'z') {
      word.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      word.push_back(-(c - 'A' + 1));
    } else if (c != ' ') {
      throw InputError(std::string("unexpected character '") + c + "' in --relators");
    }
  }
  flush();
  for (const auto& r : p.relators)
    for (int l : r) p.generators = std::max(p.generators, std::abs(l));
  return p;
}

void group_rows(Report& r, const GroupPresentation& p, std::size_t limit) {
  r.results.push_back({"generators", std::to_string(p.generators)});
  r.results.push_back({"relators", std::to_string(p.relators.size())});
  const Abelianization ab = abelianization(p);
  r.results.push_back({"abelianization", show_group(ab.free_rank, ab.torsion, "Z")});
  const CosetEnumeration e = coset_enumeration(p, limit);
  r.results.push_back({"order", e.order ? std::to_string(*e.order) : "unknown"});
  r.results.push_back({"cosets_defined", std::to_string(e.cosets_defined)});
  r.results.push_back({"max_live_cosets", std::to_string(e.max_live)});
  r.provenance.push_back("coset cap " + std::to_string(limit) + (e.order ? "" : " reached"));
}

// Rank of Sq1 : H^d -> H^{d+1} with Z/2 coefficients.
std::size_t sq1_rank(const AbstractComplex& k, int d) {
  const auto basis = cohomology_basis_f2(k, d);
  if (basis.empty()) return 0;
  const F2Matrix delta = coboundary_f2(k, d);
  std::vector<BitVector> cols;
  for (std::size_t c = 0; c < delta.cols(); ++c) cols.push_back(delta.column(c));
  const std::size_t rows = k.simplices_of_dim(d + 1).size();
  const std::size_t base = rank_f2(F2Matrix::from_columns(rows, cols));
  for (const auto& x : basis) cols.push_back(bockstein_sq1(k, x).cochain);
  return rank_f2(F2Matrix::from_columns(rows, cols)) - base;
}

Report run_simplicial(const CommandArgs& a, const LoadedInput& in, Report r) {
  const auto& k = expect<AbstractComplex>(in, "simplicial", a.command);
  if (a.command == "link") {
    const AbstractComplex l = link(k, one_simplex(a));
    const auto facets = l.facets();
    r.results.push_back({"facets", show(SimplexSet(facets.begin(), facets.end()))});
    r.results.push_back({"simplices", show(l.simplices())});
  } else if (a.command == "star") {
    r.results.push_back({"simplices", show(star(k, one_simplex(a)))});
  } else if (a.command == "closure") {
    if (a.simplices.empty()) throw InputError("closure needs at least one --simplex");
    SimplexSet subset;
    for (const auto& s : a.simplices) subset.insert(make_simplex(s));
    r.results.push_back({"simplices", show(closure(k, subset))});
  } else if (a.command == "homology") {
    if (a.ring != "Z" && a.ring != "F2") throw InputError("--ring must be Z or F2");
    const Ring ring = a.ring == "Z" ? Ring::Integers : Ring::F2;
    const Homology h = homology(k, ring, a.reduced);
    for (std::size_t i = 0; i < h.groups.size(); ++i) {
      const int d = h.min_degree + static_cast<int>(i);
      r.results.push_back({"H" + std::to_string(d), show_group(h.groups[i].rank, h.groups[i].torsion,
                                                                ring == Ring::Integers ? "Z" : "F2")});
    }
    r.results.push_back({"euler_characteristic", std::to_string(k.euler_characteristic())});
    r.provenance.push_back(std::string(a.reduced ? "reduced" : "unreduced") + " homology over " + a.ring);
  } else if (a.command == "sq1") {
    for (int d = 0; d < k.dimension(); ++d) {
      r.results.push_back({"dim H^" + std::to_string(d), std::to_string(cohomology_basis_f2(k, d).size())});
      r.results.push_back({"rank Sq1 H^" + std::to_string(d) + "->H^" + std::to_string(d + 1),
                           std::to_string(sq1_rank(k, d))});
    }
    r.provenance.push_back("Z/2 coefficients; Bockstein of 0 -> Z/2 -> Z/4 -> Z/2 -> 0");
  } else if (a.command == "pi1") {
    if (k.vertices().empty()) throw InputError("pi1 needs a nonempty complex");
    const Vertex base = a.basepoint.value_or(k.vertices().front());
    const EdgePathGroup g = fundamental_group(k, base);
    group_rows(r, g.presentation, a.limit);
    r.provenance.push_back("edge-path group at vertex " + std::to_string(base));
  } else {  // scan-links
    const auto reports = link_manifold_scan(k, {a.certify, a.limit});
    std::size_t bad = 0;
    for (const auto& l : reports) {
      std::string v = "dim " + std::to_string(l.actual_dim) + "/" + std::to_string(l.expected_dim) +
                      " Z-sphere " + yes_no(l.z_homology_sphere) + " F2-sphere " + yes_no(l.f2_homology_sphere);
      if (l.exact_sphere) v += " exact " + yes_no(*l.exact_sphere);
      if (l.pi1_attempted) v += " pi1 " + (l.pi1_order ? std::to_string(*l.pi1_order) : std::string("unknown"));
      v += " chi " + std::to_string(l.euler_characteristic);
      r.results.push_back({"link " + show(l.tau), v});
      if (!l.looks_spherical()) ++bad;
    }
    r.results.push_back({"links_scanned", std::to_string(reports.size())});
    r.results.push_back({"non_spherical", std::to_string(bad)});
    if (a.certify) r.provenance.push_back("pi1 of 3-dimensional links by coset enumeration, cap " + std::to_string(a.limit));
  }
  return r;
}

Report run_pin(const CommandArgs& a, const LoadedInput& in, Report r) {
  const auto& m = expect<PinModel>(in, "pin_model", a.command);
  const PinOptions opts{a.window, a.margin};
  const Window w = a.window.value_or(default_window(m, a.margin));
  if (a.command == "abc") {
    const AbcReport x = abc(m, opts);
    r.results = {{"A", std::to_string(x.A)},         {"B", std::to_string(x.B)},
                 {"C", std::to_string(x.C)},         {"alpha", std::to_string(x.alpha)},
                 {"beta", std::to_string(x.beta)},   {"gamma", std::to_string(x.gamma)},
                 {"mu", std::to_string(x.mu)}};
  } else if (a.command == "dual") {
    const AbcReport x = abc(m, opts);
    const Triple formula = abc_of_reverse(Triple{x.alpha, x.beta, x.gamma});
    const TowerTops tops = coborel_tower_tops(m, opts);
    const Triple dual = reverse_from_tops(tops);
    auto show3 = [](const Triple& t) {
      return "(" + std::to_string(t.alpha) + ", " + std::to_string(t.beta) + ", " + std::to_string(t.gamma) + ")";
    };
    r.results = {{"abc", show3({x.alpha, x.beta, x.gamma})},
                 {"abc_reverse_formula", show3(formula)},
                 {"coborel_tops", "(" + std::to_string(tops.A) + ", " + std::to_string(tops.B) + ", " +
                                      std::to_string(tops.C) + ")"},
                 {"abc_reverse_dual", show3(dual)},
                 {"agree", yes_no(formula == dual)}};
    if (formula != dual) r.provenance.push_back("finding: duality formula and dual complex disagree");
  } else {  // tate
    const LocalizationReport l = localization_check(m, opts);
    std::string stable;
    for (auto s : l.stable) stable += (stable.empty() ? "" : " ") + std::to_string(s);
    r.results = {{"has_reducible", yes_no(l.has_reducible)},
                 {"block_start", std::to_string(l.block_start)},
                 {"localized_dims", stable},
                 {"q_iso", yes_no(l.q_iso)},
                 {"pass", yes_no(l.pass)}};
    r.provenance.push_back("localized dims read at window top with hi + 8");
  }
  r.provenance.push_back("window " + show(w));
  r.provenance.push_back("margin " + std::to_string(a.margin));
  return r;
}

Report run_involutive(const CommandArgs& a, const LoadedInput& in, Report r) {
  const auto& u = expect<InvolutiveInput>(in, "u_complex", a.command);
  if (!u.iota) throw InputError(a.command + " needs an iota map in the input");
  if (a.command == "v0" && !a.p) throw InputError("v0 needs --p");
  const ConeComplex k = cone_iota(u.complex, *u.iota);
  const InvolutiveReport x = involutive_correction_terms(k, {a.window, a.margin});
  if (a.command == "hfi") {
    const bool tower = iota_is_identity_on_tower(u.complex, *u.iota, {std::nullopt, a.margin});
    r.results = {{"d", x.d.str()},
                 {"d_bar", x.d_bar.str()},
                 {"d_under", x.d_under.str()},
                 {"ordered", yes_no(x.ordered)},
                 {"congruent", yes_no(x.congruent)},
                 {"iota_identity_on_tower", yes_no(tower)}};
    if (!x.ordered) r.provenance.push_back("finding: d_under <= d <= d_bar fails for this (c, iota)");
  } else {
    const V0Triple v = v0_triple(*a.p, x);
    r.results = {{"p", std::to_string(*a.p)},
                 {"V0", v.v0.str()},
                 {"V0_bar", v.v0_bar.str()},
                 {"V0_under", v.v0_under.str()}};
    r.provenance.push_back("V = (p - 1)/8 - d/2 from d = " + x.d.str() + ", d_bar = " + x.d_bar.str() +
                           ", d_under = " + x.d_under.str());
  }
  r.provenance.push_back("window " + show(x.window) + " (cone complex)");
  r.provenance.push_back("margin " + std::to_string(x.margin));
  return r;
}

Report dispatch(const CommandArgs& a) {
  Report r;
  r.command = echo(a);
  r.input = a.input;
  static const std::vector<std::string> simplicial = {"link", "star", "closure", "homology", "sq1", "pi1", "scan-links"};

  if (a.command == "fixtures") {
    for (const auto& f : fixtures()) r.results.push_back({f.name, f.kind});
    return r;
  }
  if (a.command == "pi1" && !a.relators.empty()) {
    if (!a.input.empty()) throw InputError("pi1 takes either an input or --relators, not both");
    group_rows(r, parse_relators(a.relators), a.limit);
    r.digest = fnv1a_hex(a.relators);
    return r;
  }
  if (a.input.empty()) throw InputError(a.command + " needs an input file or fixtures:<name>");
  const LoadedInput in = load_input(a.input);
  r.digest = fnv1a_hex(in.text);

  if (std::find(simplicial.begin(), simplicial.end(), a.command) != simplicial.end()) return run_simplicial(a, in, r);
  if (a.command == "abc" || a.command == "dual" || a.command == "tate") return run_pin(a, in, r);
  if (a.command == "hfi" || a.command == "v0") return run_involutive(a, in, r);
  if (a.command == "delta") {
    const auto& m = expect<SOneModel>(in, "s1_model", a.command);
    const DeltaReport d = delta_invariant(m, a.window, a.margin);
    r.results = {{"bottom", std::to_string(d.bottom)}, {"delta", d.delta.str()}};
    r.provenance.push_back("window " + show(d.window));
    r.provenance.push_back("margin " + std::to_string(d.margin));
    return r;
  }
  if (a.command == "knot") {
    const auto& s = expect<SeifertInput>(in, "seifert", a.command);
    const KnotReport k = knot_report(s.matrix);
    r.results = {{"size", std::to_string(s.matrix.rows())},
                 {"signature", std::to_string(k.sigma)},
                 {"alexander", k.delta.to_string()},
                 {"determinant", k.determinant.str()},
                 {"arf", std::to_string(k.arf)},
                 {"fox_milnor", to_string(k.fox_milnor)},
                 {"sigma_eq_4arf_plus_4_mod_8", k.predicate ? "true" : "false"}};
    r.provenance.push_back("Alexander polynomial normalized to Delta(t) = Delta(1/t), Delta(1) = 1");
    return r;
  }
  throw InputError("unknown command '" + a.command + "'");
}

std::string error_line(int code, const char* kind, const std::string& message, bool as_json) {
  if (as_json) return ordered_json{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}}.dump();
  return "error: code=" + std::to_string(code) + " kind=" + kind + " message=" + ordered_json(message).dump();
}

}  // namespace

std::string Report::text() const {
  std::size_t width = 0;
  for (const auto& [k, v] : results) width = std::max(width, k.size());
  std::ostringstream out;
  out << "command: " << command << "\n";
  if (!input.empty()) out << "input: " << input << "\n";
  if (!digest.empty()) out << "digest: fnv1a:" << digest << "\n";
  out << "results:\n";
  for (const auto& [k, v] : results) out << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  if (!provenance.empty()) {
    out << "provenance:\n";
    for (const auto& p : provenance) out << "  " << p << "\n";
  }
  return out.str();
}

std::string Report::json() const {
  ordered_json j;
  j["command"] = command;
  j["input"] = input;
  j["digest"] = digest.empty() ? "" : "fnv1a:" + digest;
  ordered_json res = ordered_json::object();
  for (const auto& [k, v] : results) res[k] = v;
  j["results"] = res;
  j["provenance"] = provenance;
  return j.dump(2) + "\n";
}

Window parse_window(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    std::size_t used = 0;
    const int lo = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("junk");
    const std::string rest = s.substr(colon + 1);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("junk");
    if (lo > hi) throw InputError("window '" + s + "' has lo > hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("window must be LO:HI, got '" + s + "'");
  }
}

std::vector<std::string> command_names() {
  return {"link", "star", "closure", "homology", "sq1", "pi1", "scan-links", "abc",
          "dual", "tate", "delta", "hfi", "v0", "knot", "fixtures"};
}

RunResult run(const CommandArgs& args) {
  RunResult res;
  try {
    const Report r = dispatch(args);
    res.out = args.json ? r.json() : r.text();
  } catch (const InputError& e) {
    res = {1, "", error_line(1, "input", e.what(), args.json)};
  } catch (const ModelInvalid& e) {
    res = {2, "", error_line(2, "model_invalid", e.what(), args.json)};
  } catch (const InternalError& e) {
    res = {3, "", error_line(3, "internal", e.what(), args.json)};
  } catch (const std::exception& e) {
    res = {3, "", error_line(3, "internal", e.what(), args.json)};
  }
  return res;
}

}  // namespace hcob
