#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2lie/autgroup.hpp"
#include "f2lie/lie_algebra.hpp"

namespace f2lie {

enum class Provenance { PaperSection, AppendixMatrices, TensorConstruction, UserFile };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct CatalogEntry {
  std::string id;  // "L_15_9"
  std::vector<std::string> names;
  LieAlgebra algebra;
  Provenance provenance = Provenance::UserFile;
  std::string source;
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "L_15_9" -> "L_{15,9}"
std::string display_name(const std::string& id);
// Dimension encoded in the id, or 0 when it does not follow the L_d_i pattern.
std::size_t id_dimension(const std::string& id);

std::vector<std::string> builtin_ids();
// Throws std::out_of_range for an unknown id.
CatalogEntry builtin(const std::string& id);

// Structure-constant documents: {"dim", "label", "brackets": [[i, j, [k...]], ...]}.
// Parsing rejects malformed input with CatalogError, and axiom violations unless
// check_axioms is false.
LieAlgebra parse_algebra(const std::string& text, const std::string& origin = "<input>",
                         bool check_axioms = true);
std::string format_algebra(const LieAlgebra& l);
LieAlgebra load_algebra(const std::filesystem::path& path, bool check_axioms = true);
void save_algebra(const LieAlgebra& l, const std::filesystem::path& path);

// Automorphism generators: {"dim": n, "generators": [["0101...", ...], ...]},
// each generator given by its rows. Each must be an automorphism of l.
std::vector<ColMatrix> load_generators(const std::filesystem::path& path, const LieAlgebra& l);

struct Identification {
  std::optional<std::string> id;
  std::string warning;  // set when some comparison ran out of budget
};

class Catalog {
 public:
  static Catalog builtins();
  // Builtins plus the entries listed in dir/index.json.
  static Catalog load(const std::filesystem::path& dir);

  void add(CatalogEntry e);
  const CatalogEntry* find(const std::string& id) const;
  const CatalogEntry& at(const std::string& id) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }

  Identification identify(const LieAlgebra& l, const Budget& budget = {}) const;

 private:
  std::vector<CatalogEntry> entries_;  // by (dimension, index)
};

// Compiled-in location of the shipped data files.
std::filesystem::path default_catalog_dir();

}  // namespace f2lie
