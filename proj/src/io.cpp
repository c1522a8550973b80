#include "hcob/io.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hcob/errors.hpp"
#include "json.hpp"

namespace hcob {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixtures();
}

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema(const std::string& what) { throw InputError("schema: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

long long integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) schema(what + " must be an integer");
  return j.get<long long>();
}

int small_int(const json& j, const std::string& what) {
  const long long x = integer(j, what);
  if (x < -1000000 || x > 1000000) schema(what + " is out of range");
  return static_cast<int>(x);
}

std::string text(const json& j, const std::string& what) {
  if (!j.is_string()) schema(what + " must be a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& what) {
  if (!j.is_array()) schema(what + " must be an array");
  return j;
}

// Generators given as [{"label","degree"}...].
void read_generators(const json& j, const std::string& what, std::vector<std::string>& labels, std::vector<int>& degrees,
                     std::map<std::string, std::size_t>& index) {
  for (const auto& g : array(j, what)) {
    const std::string label = text(field(g, "label"), what + " label");
    if (!index.emplace(label, labels.size()).second) schema("duplicate label '" + label + "'");
    labels.push_back(label);
    degrees.push_back(small_int(field(g, "degree"), what + " degree"));
  }
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const json& j, const std::string& what) {
  const std::string label = text(j, what);
  auto it = index.find(label);
  if (it == index.end()) schema(what + " refers to unknown generator '" + label + "'");
  return it->second;
}

F2Matrix f2_rows(const json& j, std::size_t n, const std::string& what) {
  if (j.is_null()) return F2Matrix(n, n);
  array(j, what);
  if (j.size() != n) schema(what + " must have " + std::to_string(n) + " rows");
  F2Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = array(j[r], what + " row");
    if (row.size() != n) schema(what + " rows must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const long long x = integer(row[c], what + " entry");
      if (x != 0 && x != 1) schema(what + " entries must be 0 or 1");
      if (x) m.set(r, c);
    }
  }
  return m;
}

json f2_json(const F2Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
    rows.push_back(row);
  }
  return rows;
}

json generators_json(const std::vector<std::string>& labels, const std::vector<int>& degrees) {
  json out = json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) out.push_back({{"label", labels[i]}, {"degree", degrees[i]}});
  return out;
}

const json* optional_field(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

AbstractComplex parse_complex(const json& j) {
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : array(field(j, "facets"), "facets")) {
    std::vector<Vertex> face;
    for (const auto& x : array(f, "facet")) face.push_back(small_int(x, "vertex"));
    facets.push_back(std::move(face));
  }
  if (const json* vs = optional_field(j, "vertices")) {
    std::vector<Vertex> vertices;
    for (const auto& x : array(*vs, "vertices")) vertices.push_back(small_int(x, "vertex"));
    return AbstractComplex::from_facets(vertices, facets);
  }
  return AbstractComplex::from_facets(facets);
}

PinModel parse_pin(const json& j) {
  PinModel m;
  if (const json* n = optional_field(j, "reducible_degree")) m.reducible_degree = small_int(*n, "reducible_degree");
  std::map<std::string, std::size_t> index;
  if (const json* f = optional_field(j, "finite")) read_generators(*f, "finite", m.labels, m.degrees, index);
  const std::size_t n = m.labels.size();
  m.q = f2_rows(j.value("q", json()), n, "q");
  m.v = f2_rows(j.value("v", json()), n, "v");
  m.d_fin = f2_rows(j.value("d_fin", json()), n, "d_fin");
  if (const json* e = optional_field(j, "d_to_tower"))
    for (const auto& edge : array(*e, "d_to_tower"))
      m.to_tower.push_back({lookup(index, field(edge, "from"), "d_to_tower from"),
                            small_int(field(edge, "a"), "d_to_tower a"), small_int(field(edge, "b"), "d_to_tower b")});
  validate(m);  // shape problems only; model-level checks happen on use
  return m;
}

SOneModel parse_s1(const json& j) {
  SOneModel m;
  m.reducible_degree = small_int(field(j, "reducible_degree"), "reducible_degree");
  std::map<std::string, std::size_t> index;
  if (const json* f = optional_field(j, "finite")) read_generators(*f, "finite", m.labels, m.degrees, index);
  const std::size_t n = m.labels.size();
  m.u = f2_rows(j.value("u", json()), n, "u");
  m.d_fin = f2_rows(j.value("d_fin", json()), n, "d_fin");
  if (const json* e = optional_field(j, "d_to_tower"))
    for (const auto& edge : array(*e, "d_to_tower"))
      m.to_tower.push_back({lookup(index, field(edge, "from"), "d_to_tower from"), small_int(field(edge, "b"), "d_to_tower b")});
  return m;
}

F2Matrix u_entries(const json& j, const UComplex& c, const std::map<std::string, std::size_t>& index, int shift,
                   const std::string& what) {
  F2Matrix m(c.size(), c.size());
  for (const auto& e : array(j, what)) {
    const std::size_t from = lookup(index, field(e, "from"), what + " from");
    const std::size_t to = lookup(index, field(e, "to"), what + " to");
    const auto k = u_power(c, from, to, shift);
    if (!k) schema(what + " entry " + c.labels[from] + " -> " + c.labels[to] + " has no valid U-power");
    if (const json* given = optional_field(e, "upower"); given && small_int(*given, what + " upower") != *k)
      schema(what + " entry " + c.labels[from] + " -> " + c.labels[to] + " needs upower " + std::to_string(*k));
    if (m.get(to, from)) schema(what + " entry " + c.labels[from] + " -> " + c.labels[to] + " is repeated");
    m.set(to, from);
  }
  return m;
}

json u_entries_json(const F2Matrix& m, const UComplex& c, int shift) {
  json out = json::array();
  for (std::size_t from = 0; from < c.size(); ++from)
    for (std::size_t to = 0; to < c.size(); ++to)
      if (m.get(to, from))
        out.push_back({{"from", c.labels[from]}, {"to", c.labels[to]}, {"upower", *u_power(c, from, to, shift)}});
  return out;
}

InvolutiveInput parse_u(const json& j) {
  InvolutiveInput in;
  std::map<std::string, std::size_t> index;
  read_generators(field(j, "generators"), "generators", in.complex.labels, in.complex.degrees, index);
  in.complex.differential = F2Matrix(in.complex.size(), in.complex.size());
  if (const json* d = optional_field(j, "differential"))
    in.complex.differential = u_entries(*d, in.complex, index, -1, "differential");
  if (const json* i = optional_field(j, "iota")) in.iota = u_entries(*i, in.complex, index, 0, "iota");
  return in;
}

SeifertInput parse_seifert(const json& j) {
  std::vector<std::vector<long long>> rows;
  for (const auto& r : array(field(j, "matrix"), "matrix")) {
    std::vector<long long> row;
    for (const auto& x : array(r, "matrix row")) row.push_back(integer(x, "matrix entry"));
    if (!rows.empty() && row.size() != rows.front().size()) schema("matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (!rows.empty() && rows.size() != rows.front().size()) schema("matrix must be square");
  return SeifertInput{IntMatrix::from_rows(rows)};
}

json to_json(const InputValue& v) {
  json j;
  j["kind"] = kind_of(v);
  if (const auto* k = std::get_if<AbstractComplex>(&v)) {
    j["vertices"] = k->vertices();
    json facets = json::array();
    for (const auto& f : k->facets()) facets.push_back(f);
    j["facets"] = facets;
  } else if (const auto* m = std::get_if<PinModel>(&v)) {
    j["reducible_degree"] = m->reducible_degree ? json(*m->reducible_degree) : json();
    j["finite"] = generators_json(m->labels, m->degrees);
    j["q"] = f2_json(m->q);
    j["v"] = f2_json(m->v);
    j["d_fin"] = f2_json(m->d_fin);
    json edges = json::array();
    for (const auto& e : m->to_tower) edges.push_back({{"from", m->labels[e.from]}, {"a", e.a}, {"b", e.b}});
    j["d_to_tower"] = edges;
  } else if (const auto* s = std::get_if<SOneModel>(&v)) {
    j["reducible_degree"] = s->reducible_degree;
    j["finite"] = generators_json(s->labels, s->degrees);
    j["u"] = f2_json(s->u);
    j["d_fin"] = f2_json(s->d_fin);
    json edges = json::array();
    for (const auto& [from, b] : s->to_tower) edges.push_back({{"from", s->labels[from]}, {"b", b}});
    j["d_to_tower"] = edges;
  } else if (const auto* u = std::get_if<InvolutiveInput>(&v)) {
    j["generators"] = generators_json(u->complex.labels, u->complex.degrees);
    j["differential"] = u_entries_json(u->complex.differential, u->complex, -1);
    if (u->iota) j["iota"] = u_entries_json(*u->iota, u->complex, 0);
  } else {
    const IntMatrix& m = std::get<SeifertInput>(v).matrix;
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).convert_to<long long>());
      rows.push_back(row);
    }
    j["matrix"] = rows;
  }
  return j;
}

}  // namespace

std::string kind_of(const InputValue& v) {
  static const char* names[] = {"simplicial", "pin_model", "s1_model", "u_complex", "seifert"};
  return names[v.index()];
}

InputValue parse_input(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  const std::string kind = text(field(j, "kind"), "kind");
  try {
    if (kind == "simplicial") return parse_complex(j);
    if (kind == "pin_model") return parse_pin(j);
    if (kind == "s1_model") return parse_s1(j);
    if (kind == "u_complex") return parse_u(j);
    if (kind == "seifert") return parse_seifert(j);
  } catch (const json::exception& e) {
    schema(e.what());
  }
  if (kind == "placeholder")
    throw ModelInvalid("placeholder '" + j.value("name", std::string("?")) + "': " + j.value("reason", std::string("no data")));
  schema("unknown kind '" + kind + "'");
}

std::string serialize(const InputValue& v) { return to_json(v).dump(2) + "\n"; }

std::vector<FixtureInfo> fixtures() {
  std::vector<FixtureInfo> out;
  for (const auto& [name, body] : detail::embedded_fixtures()) {
    const json j = json::parse(body);
    out.push_back({std::string(name), j.value("kind", std::string("?")), std::string(body)});
  }
  return out;
}

std::optional<FixtureInfo> find_fixture(std::string_view name) {
  for (auto& f : fixtures())
    if (f.name == name) return f;
  return std::nullopt;
}

LoadedInput load_input(const std::string& ref) {
  static constexpr std::string_view prefix = "fixtures:";
  std::string body;
  if (ref.starts_with(prefix)) {
    const auto f = find_fixture(std::string_view(ref).substr(prefix.size()));
    if (!f) throw InputError("unknown fixture '" + ref + "'");
    body = f->text;
  } else {
    std::ifstream in(ref, std::ios::binary);
    if (!in) throw InputError("cannot read '" + ref + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  InputValue value = parse_input(body);
  return LoadedInput{ref, std::move(body), std::move(value)};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 15];
  return out;
}

}  // namespace hcob
