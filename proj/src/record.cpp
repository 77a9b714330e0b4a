#include "edgepat/record.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>

#include <json.hpp>
#include <openssl/evp.h>

namespace edgepat {

using nlohmann::json;

PathRecord make_record(const SegmentLattice& lattice, const SpanningTree& tree, const EdgePath& path) {
  const GridGraph& g = lattice.graph();
  PathRecord r;
  r.n = path.n;
  r.canonical_key = canonical_key(path).hex();
  for (int k : tree.arcs) r.tree_arcs.push_back(g.arcs()[static_cast<std::size_t>(k)]);
  r.steps = path.steps;
  for (const CornerPlacement& c : enumerate_corner_placements(path)) r.corner_offsets.push_back(c.offset);
  r.self_symmetry = classify_self_symmetry(path);
  r.is_line_tree = is_line_tree(g, tree);
  return r;
}

PathRecord make_record(const SegmentLattice& lattice, const EdgePath& path) {
  return make_record(lattice, lattice.path_to_tree(path), path);
}

void evaluate_contraction(PathRecord& r) {
  const BoardSpec spec = BoardSpec::make(r.n);
  const EdgePath p = r.path();
  r.contraction_pass.clear();
  for (int o : r.corner_offsets) {
    r.contraction_pass.push_back(contraction_check(folded_layout(p, make_placement(r.n, o)), spec).pass);
  }
}

SpanningTree record_tree(const PathRecord& r, const GridGraph& g) {
  SpanningTree t;
  for (const Arc& a : r.tree_arcs) {
    const auto it = std::lower_bound(g.arcs().begin(), g.arcs().end(), a);
    if (it == g.arcs().end() || *it != a) {
      throw RecordParseError("arc [" + std::to_string(a.u) + "," + std::to_string(a.v) + "] is not in the grid graph");
    }
    t.arcs.push_back(static_cast<int>(it - g.arcs().begin()));
  }
  std::sort(t.arcs.begin(), t.arcs.end());
  return t;
}

std::string to_json_line(const PathRecord& r) {
  json j;
  j["n"] = r.n;
  j["canonical_key"] = r.canonical_key;
  json arcs = json::array();
  for (const Arc& a : r.tree_arcs) arcs.push_back({a.u, a.v});
  j["tree_arcs"] = std::move(arcs);
  json steps = json::array();
  for (const Step& s : r.steps) steps.push_back({s.square.i, s.square.j, s.dir.dx, s.dir.dy});
  j["steps"] = std::move(steps);
  j["corner_offsets"] = r.corner_offsets;
  j["self_symmetry"] = std::string(to_string(r.self_symmetry));
  j["is_line_tree"] = r.is_line_tree;
  j["contraction_pass"] = r.contraction_pass;
  return j.dump();
}

namespace {

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw RecordParseError(std::string("missing field '") + name + "'");
  return *it;
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw RecordParseError(std::string(what) + " must be an integer");
  return v.get<int>();
}

std::vector<int> int_tuple(const json& v, std::size_t size, const char* what) {
  if (!v.is_array() || v.size() != size) {
    throw RecordParseError(std::string(what) + " entries must be arrays of " + std::to_string(size) + " integers");
  }
  std::vector<int> out;
  for (const json& x : v) out.push_back(as_int(x, what));
  return out;
}

}  // namespace

PathRecord parse_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw RecordParseError(e.what());
  }
  if (!j.is_object()) throw RecordParseError("record must be a JSON object");
  PathRecord r;
  r.n = as_int(field(j, "n"), "n");
  if (r.n < 2 || r.n % 2 != 0) throw RecordParseError("n must be even and >= 2");

  const json& key = field(j, "canonical_key");
  if (!key.is_string()) throw RecordParseError("canonical_key must be a string");
  r.canonical_key = key.get<std::string>();

  const json& arcs = field(j, "tree_arcs");
  if (!arcs.is_array()) throw RecordParseError("tree_arcs must be an array");
  for (const json& a : arcs) {
    const auto v = int_tuple(a, 2, "tree_arcs");
    r.tree_arcs.push_back({v[0], v[1]});
  }

  const json& steps = field(j, "steps");
  if (!steps.is_array()) throw RecordParseError("steps must be an array");
  for (const json& s : steps) {
    const auto v = int_tuple(s, 4, "steps");
    if (std::abs(v[2]) != 1 || std::abs(v[3]) != 1) throw RecordParseError("step direction components must be +-1");
    r.steps.push_back({SquareId{v[0], v[1]}, Direction{v[2], v[3]}});
  }
  if (static_cast<int>(r.steps.size()) != r.n * r.n) {
    throw RecordParseError("expected " + std::to_string(r.n * r.n) + " steps, found " + std::to_string(r.steps.size()));
  }

  const json& offsets = field(j, "corner_offsets");
  if (!offsets.is_array()) throw RecordParseError("corner_offsets must be an array");
  for (const json& o : offsets) r.corner_offsets.push_back(as_int(o, "corner_offsets"));

  const json& sym = field(j, "self_symmetry");
  if (!sym.is_string()) throw RecordParseError("self_symmetry must be a string");
  try {
    r.self_symmetry = self_symmetry_from_string(sym.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw RecordParseError(e.what());
  }

  const json& line_tree = field(j, "is_line_tree");
  if (!line_tree.is_boolean()) throw RecordParseError("is_line_tree must be a boolean");
  r.is_line_tree = line_tree.get<bool>();

  const json& pass = field(j, "contraction_pass");
  if (!pass.is_array()) throw RecordParseError("contraction_pass must be an array");
  for (const json& p : pass) {
    if (!p.is_boolean()) throw RecordParseError("contraction_pass entries must be booleans");
    r.contraction_pass.push_back(p.get<bool>());
  }
  if (!r.contraction_pass.empty() && r.contraction_pass.size() != r.corner_offsets.size()) {
    throw RecordParseError("contraction_pass is not aligned with corner_offsets");
  }
  return r;
}

bool RunManifest::consistent() const {
  const auto& c = counts;
  if (c.corner_feasible && c.orbits && *c.corner_feasible > *c.orbits) return false;
  if (c.orbits && c.paths && *c.orbits > *c.paths) return false;
  if (c.corner_feasible && c.paths && *c.corner_feasible > *c.paths) return false;
  return true;
}

namespace {

void put_count(json& j, const char* name, const std::optional<std::uint64_t>& v) {
  if (v) j[name] = *v;
}

void get_count(const json& j, const char* name, std::optional<std::uint64_t>& v) {
  if (const auto it = j.find(name); it != j.end() && !it->is_null()) v = it->get<std::uint64_t>();
}

}  // namespace

std::string RunManifest::to_json() const {
  json j;
  j["tool_version"] = tool_version;
  j["command"] = command;
  j["n"] = n;
  j["tiers"] = tiers;
  json c = json::object();
  put_count(c, "N", counts.paths);
  put_count(c, "orbits", counts.orbits);
  put_count(c, "Ntilde", counts.corner_feasible);
  put_count(c, "self_symmetric", counts.self_symmetric);
  put_count(c, "line_trees", counts.line_trees);
  put_count(c, "contraction_pass", counts.contraction_pass);
  j["counts"] = std::move(c);
  j["timings"] = timings;
  j["digests"] = digests;
  j["aborted"] = aborted;
  j["abort_reason"] = abort_reason;
  return j.dump(2);
}

RunManifest RunManifest::from_json(std::string_view text) {
  RunManifest m;
  try {
    const json j = json::parse(text);
    m.tool_version = j.at("tool_version").get<std::string>();
    m.command = j.at("command").get<std::string>();
    m.n = j.at("n").get<int>();
    m.tiers = j.at("tiers").get<std::vector<int>>();
    const json& c = j.at("counts");
    get_count(c, "N", m.counts.paths);
    get_count(c, "orbits", m.counts.orbits);
    get_count(c, "Ntilde", m.counts.corner_feasible);
    get_count(c, "self_symmetric", m.counts.self_symmetric);
    get_count(c, "line_trees", m.counts.line_trees);
    get_count(c, "contraction_pass", m.counts.contraction_pass);
    m.timings = j.at("timings").get<std::map<std::string, double>>();
    m.digests = j.at("digests").get<std::map<std::string, std::string>>();
    m.aborted = j.at("aborted").get<bool>();
    m.abort_reason = j.at("abort_reason").get<std::string>();
  } catch (const json::exception& e) {
    throw RecordParseError(std::string("manifest: ") + e.what());
  }
  return m;
}

namespace {

struct DigestContext {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx{EVP_MD_CTX_new(), &EVP_MD_CTX_free};
  DigestContext() {
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw std::runtime_error("sha256 init failed");
  }
  void update(const void* data, std::size_t size) {
    if (EVP_DigestUpdate(ctx.get(), data, size) != 1) throw std::runtime_error("sha256 update failed");
  }
  std::string hex() {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx.get(), md, &len) != 1) throw std::runtime_error("sha256 final failed");
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(digits[md[i] >> 4]);
      out.push_back(digits[md[i] & 0xf]);
    }
    return out;
  }
};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  DigestContext d;
  d.update(bytes.data(), bytes.size());
  return d.hex();
}

std::string sha256_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  DigestContext d;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    d.update(buf, static_cast<std::size_t>(in.gcount()));
  }
  return d.hex();
}

}  // namespace edgepat
