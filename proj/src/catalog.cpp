#include "f2lie/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "f2lie/subalgebra.hpp"
#include "json.hpp"

#ifndef F2LIE_DATA_DIR
#define F2LIE_DATA_DIR "data/catalog"
#endif

namespace f2lie {

namespace {

using nlohmann::json;

// Generator pairs for the three dimension-15 algebras numbered 9, 10 and 11.
const char* const kAppendix[6][15] = {
    {"...1.1.1...1..1",
     "..111.11..1.111",
     ".11.111..1...11",
     "..1..1.1..1....",
     "...1...1...1.1.",
     "...11111...1...",
     "....1.1..111...",
     ".....11.1..11..",
     "......11.111.11",
     "......1.1...1..",
     "......111.1..1.",
     ".....11...1.1..",
     "......111.11111",
     ".......1....111",
     "..........1111."},
    {"......1.1.1..11",
     "..1..1..11....1",
     "1...1.111111..1",
     ".....11..11.111",
     "..11..1.11.1111",
     "...11..111111.1",
     "...11..1.11..1.",
     "....1...111....",
     ".........111..1",
     ".....11..111.1.",
     ".....11..1.11.1",
     ".......111.....",
     ".....11..11.1..",
     "......1.111.1.1",
     ".......11.111.."},
    {".......1.11.111",
     "..1...1...1.11.",
     ".1.111.1.1...11",
     "..1.1...11.1.1.",
     "....1.....1111.",
     "...1......11...",
     "....11111...1.1",
     ".....11.11..111",
     "........111111.",
     ".........111...",
     "......1.....1..",
     ".....111111..11",
     "......11..1....",
     ".......1...11..",
     ".........111.1."},
    {"....11...11.111",
     "..1111..1111.11",
     "1.111....1...11",
     "..1....11.1.11.",
     "..1111....1.1..",
     "...111...1.1.1.",
     "...1.11...1....",
     "....1..1.1111..",
     ".....1..111....",
     "......1.111.1..",
     ".....1....1.11.",
     "............1..",
     ".....111..1.1..",
     "......11..111..",
     ".......1111.111"},
    {".111.111.11.11.",
     ".1.11..11.1..1.",
     ".111.11.1.111..",
     "..111.11.1..111",
     "...1.1.11...1..",
     "...111..1.1....",
     "....11......11.",
     "........1.1....",
     ".....1.11.1.1.1",
     ".....11..1.111.",
     ".....111..111..",
     ".....1.1..1....",
     "......11.11111.",
     ".......1.11..1.",
     "........1..11.1"},
    {"1.1.1....1.1.11",
     "1.11.111.11..1.",
     "1.1.1.11.1.1...",
     "...111.1111.11.",
     "..1..111...11..",
     "...11.1111.11.1",
     "...11.1....111.",
     "....11.1..11.1.",
     "......1.1..1.11",
     "......1.1.1111.",
     "......111.11..1",
     ".....111.1111.1",
     ".....111.11..1.",
     "......1.11....1",
     ".......111.1.1."}};

struct LineCol {
  std::size_t line = 1, col = 1;
};

LineCol locate(const std::string& text, std::size_t byte) {
  LineCol lc;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.col = 1;
    } else {
      ++lc.col;
    }
  }
  return lc;
}

std::size_t as_index(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_number_integer()) throw CatalogError(where + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < 0 || static_cast<std::size_t>(x) >= n)
    throw CatalogError(where + ": index " + std::to_string(x) + " out of range 0.." +
                       std::to_string(n - 1));
  return static_cast<std::size_t>(x);
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto lc = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw CatalogError(origin + ":" + std::to_string(lc.line) + ":" + std::to_string(lc.col) +
                       ": malformed document");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LieAlgebra validated(LieAlgebra l, const std::string& origin) {
  const auto rep = validate_axioms(l);
  if (!rep.ok) {
    std::string msg = origin + ": Lie axioms fail";
    for (std::size_t i = 0; i < rep.violations.size() && i < 5; ++i) msg += "\n  " + rep.violations[i];
    throw CatalogError(msg);
  }
  return l;
}

LieAlgebra appendix_algebra(std::size_t which) {
  std::vector<BitMatrix> gens;
  for (std::size_t g = 0; g < 2; ++g) {
    std::vector<std::string> rows(kAppendix[2 * which + g], kAppendix[2 * which + g] + 15);
    gens.push_back(BitMatrix::parse(rows));
  }
  return matrix_lie_closure(gens).algebra;
}

struct Builtin {
  const char* id;
  std::vector<std::string> names;
  Provenance provenance;
  const char* source;
};

const std::vector<Builtin>& builtin_table() {
  static const std::vector<Builtin> table = {
      {"L_3_1", {"W(2)"}, Provenance::PaperSection, "worked example basis"},
      {"L_6_1", {"W(2) (x) F_4"}, Provenance::TensorConstruction, "L_3_1 tensored with GF(4)"},
      {"L_9_1", {"W(2) (x) F_8", "V_9"}, Provenance::TensorConstruction, "L_3_1 tensored with GF(8)"},
      {"L_12_1", {"W(2) (x) F_16"}, Provenance::TensorConstruction, "L_3_1 tensored with GF(16)"},
      {"L_15_1", {"W(2) (x) F_32"}, Provenance::TensorConstruction, "L_3_1 tensored with GF(32)"},
      {"L_15_9", {"new"}, Provenance::AppendixMatrices, "Lie closure of the first generator pair"},
      {"L_15_10", {"new"}, Provenance::AppendixMatrices, "Lie closure of the second generator pair"},
      {"L_15_11", {"new"}, Provenance::AppendixMatrices, "Lie closure of the third generator pair"},
      {"L_18_1", {"W(2) (x) F_64"}, Provenance::TensorConstruction, "L_3_1 tensored with GF(64)"},
  };
  return table;
}

LieAlgebra l31() {
  return LieAlgebra::from_brackets(3, {{0, 1, 0b100}, {0, 2, 0b001}, {1, 2, 0b011}});
}

std::pair<std::size_t, std::size_t> id_key(const std::string& id) {
  std::size_t d = 0, i = 0;
  if (std::sscanf(id.c_str(), "L_%zu_%zu", &d, &i) != 2) return {SIZE_MAX, SIZE_MAX};
  return {d, i};
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::PaperSection: return "paper-section";
    case Provenance::AppendixMatrices: return "appendix-matrices";
    case Provenance::TensorConstruction: return "tensor-construction";
    case Provenance::UserFile: return "user-file";
  }
  return "user-file";
}

Provenance provenance_from_string(const std::string& s) {
  for (auto p : {Provenance::PaperSection, Provenance::AppendixMatrices,
                 Provenance::TensorConstruction, Provenance::UserFile})
    if (to_string(p) == s) return p;
  throw CatalogError("unknown provenance '" + s + "'");
}

std::string display_name(const std::string& id) {
  const auto [d, i] = id_key(id);
  if (d == SIZE_MAX) return id;
  return "L_{" + std::to_string(d) + "," + std::to_string(i) + "}";
}

std::size_t id_dimension(const std::string& id) {
  const auto d = id_key(id).first;
  return d == SIZE_MAX ? 0 : d;
}

std::vector<std::string> builtin_ids() {
  std::vector<std::string> out;
  for (const auto& b : builtin_table()) out.emplace_back(b.id);
  return out;
}

CatalogEntry builtin(const std::string& id) {
  const auto& table = builtin_table();
  const auto it = std::find_if(table.begin(), table.end(), [&](const Builtin& b) { return id == b.id; });
  if (it == table.end()) throw std::out_of_range("unknown builtin catalog id '" + id + "'");
  LieAlgebra l;
  if (id == "L_3_1") {
    l = l31();
  } else if (it->provenance == Provenance::TensorConstruction) {
    l = tensor_extend(l31(), id_dimension(id) / 3);
  } else {
    l = appendix_algebra(static_cast<std::size_t>(id_key(id).second - 9));
  }
  l.set_label(id);
  if (l.dim() != id_dimension(id)) throw std::logic_error("builtin " + id + ": wrong dimension");
  if (!is_simple(l)) throw std::logic_error("builtin " + id + ": not simple");
  return {id, it->names, std::move(l), it->provenance, it->source};
}

LieAlgebra parse_algebra(const std::string& text, const std::string& origin, bool check_axioms) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object()) throw CatalogError(origin + ": top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw CatalogError(origin + ": field 'dim' missing or not an integer");
  const auto dim = doc["dim"].get<long long>();
  if (dim < 0 || dim > 64) throw CatalogError(origin + ": field 'dim' must be in 0..64");
  const auto n = static_cast<std::size_t>(dim);
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw CatalogError(origin + ": field 'label' must be a string");
    label = doc["label"].get<std::string>();
  }
  if (!doc.contains("brackets") || !doc["brackets"].is_array())
    throw CatalogError(origin + ": field 'brackets' missing or not a list");
  std::vector<Vec> table(n * n, 0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const auto& br = doc["brackets"];
  for (std::size_t t = 0; t < br.size(); ++t) {
    const std::string where = origin + ": brackets[" + std::to_string(t) + "]";
    const auto& e = br[t];
    if (!e.is_array() || e.size() != 3 || !e[2].is_array())
      throw CatalogError(where + ": expected [i, j, [k, ...]]");
    const auto i = as_index(e[0], n, where + "[0]");
    const auto j = as_index(e[1], n, where + "[1]");
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
      throw CatalogError(where + ": pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ") listed twice");
    Vec r = 0;
    for (std::size_t s = 0; s < e[2].size(); ++s) {
      const auto k = as_index(e[2][s], n, where + "[2][" + std::to_string(s) + "]");
      if (r & unit(k)) throw CatalogError(where + ": basis index " + std::to_string(k) + " repeated");
      r |= unit(k);
    }
    table[i * n + j] = r;
    if (i != j) table[j * n + i] = r;
  }
  auto l = LieAlgebra::from_table(n, std::move(table), label);
  return check_axioms ? validated(std::move(l), origin) : l;
}

std::string format_algebra(const LieAlgebra& l) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << l.dim() << ",\n  \"label\": " << json(l.label()).dump()
     << ",\n  \"brackets\": [\n";
  const auto br = l.brackets();
  for (std::size_t t = 0; t < br.size(); ++t) {
    os << "    [" << br[t].i << ", " << br[t].j << ", [";
    bool first = true;
    for (std::size_t k = 0; k < l.dim(); ++k)
      if (br[t].result & unit(k)) {
        os << (first ? "" : ", ") << k;
        first = false;
      }
    os << "]]" << (t + 1 < br.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

LieAlgebra load_algebra(const std::filesystem::path& path, bool check_axioms) {
  return parse_algebra(read_file(path), path.string(), check_axioms);
}

void save_algebra(const LieAlgebra& l, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw CatalogError(path.string() + ": cannot write");
  out << format_algebra(l);
}

std::vector<ColMatrix> load_generators(const std::filesystem::path& path, const LieAlgebra& l) {
  const std::string origin = path.string();
  const json doc = parse_json(read_file(path), origin);
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
    throw CatalogError(origin + ": field 'generators' missing or not a list");
  if (doc.contains("dim") && doc["dim"] != l.dim())
    throw CatalogError(origin + ": dimension does not match the algebra");
  std::vector<ColMatrix> out;
  const auto& gens = doc["generators"];
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = origin + ": generators[" + std::to_string(g) + "]";
    if (!gens[g].is_array() || gens[g].size() != l.dim())
      throw CatalogError(where + ": expected " + std::to_string(l.dim()) + " rows");
    std::vector<std::string> rows;
    for (const auto& r : gens[g]) {
      if (!r.is_string()) throw CatalogError(where + ": rows must be strings of 0/1");
      auto s = r.get<std::string>();
      s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
      if (s.size() != l.dim() || s.find_first_not_of("01") != std::string::npos)
        throw CatalogError(where + ": row '" + s + "' is not a 0/1 string of length " +
                           std::to_string(l.dim()));
      rows.push_back(std::move(s));
    }
    // Row i is the image of b_i.
    const auto m = BitMatrix::parse(rows).transpose();
    if (!is_automorphism(l, m)) throw CatalogError(where + ": not an automorphism");
    out.push_back(m.columns());
  }
  return out;
}

Catalog Catalog::builtins() {
  Catalog c;
  for (const auto& id : builtin_ids()) c.add(builtin(id));
  return c;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  Catalog c = builtins();
  const auto index_path = dir / "index.json";
  const json index = parse_json(read_file(index_path), index_path.string());
  if (!index.is_object() || !index.contains("entries") || !index["entries"].is_array())
    throw CatalogError(index_path.string() + ": field 'entries' missing or not a list");
  for (std::size_t t = 0; t < index["entries"].size(); ++t) {
    const auto& e = index["entries"][t];
    const std::string where = index_path.string() + ": entries[" + std::to_string(t) + "]";
    if (!e.is_object() || !e.contains("id") || !e["id"].is_string())
      throw CatalogError(where + ": field 'id' missing");
    CatalogEntry entry;
    entry.id = e["id"].get<std::string>();
    if (e.contains("names")) entry.names = e["names"].get<std::vector<std::string>>();
    if (e.contains("source")) entry.source = e["source"].get<std::string>();
    if (e.contains("file")) {
      entry.algebra = load_algebra(dir / e["file"].get<std::string>());
      entry.provenance = Provenance::UserFile;
    } else if (e.contains("tensor_of")) {
      const auto& base = c.at(e["tensor_of"].get<std::string>());
      const std::size_t k = e.value("degree", std::size_t{0});
      entry.algebra = tensor_extend(base.algebra, k);
      entry.provenance = Provenance::TensorConstruction;
    } else {
      throw CatalogError(where + ": needs 'file' or 'tensor_of'");
    }
    if (e.contains("provenance")) entry.provenance = provenance_from_string(e["provenance"].get<std::string>());
    entry.algebra.set_label(entry.id);
    c.add(std::move(entry));
  }
  return c;
}

void Catalog::add(CatalogEntry e) {
  if (find(e.id)) throw CatalogError("duplicate catalog id '" + e.id + "'");
  const auto d = id_dimension(e.id);
  if (d != 0 && d != e.algebra.dim())
    throw CatalogError(e.id + ": dimension " + std::to_string(e.algebra.dim()) + " does not match id");
  validated(e.algebra, e.id);
  if (!is_simple(e.algebra)) throw CatalogError(e.id + ": algebra is not simple");
  const auto key = id_key(e.id);
  const auto pos = std::upper_bound(entries_.begin(), entries_.end(), key,
                                    [](const auto& k, const CatalogEntry& x) { return k < id_key(x.id); });
  entries_.insert(pos, std::move(e));
}

const CatalogEntry* Catalog::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::at(const std::string& id) const {
  if (const auto* e = find(id)) return *e;
  throw std::out_of_range("unknown catalog id '" + id + "'");
}

Identification Catalog::identify(const LieAlgebra& l, const Budget& budget) const {
  Identification out;
  for (const auto& e : entries_) {
    if (e.algebra.dim() != l.dim()) continue;
    const auto cert = iso_test(l, e.algebra, budget);
    if (cert) {
      out.id = e.id;
      return out;
    }
    if (cert.unknown) out.warning += (out.warning.empty() ? "" : "; ") + ("budget exhausted against " + e.id);
  }
  return out;
}

std::filesystem::path default_catalog_dir() { return F2LIE_DATA_DIR; }

}  // namespace f2lie
