#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "f2lie/catalog.hpp"
#include "f2lie/grading.hpp"
#include "f2lie/subalgebra.hpp"
#include "fixtures.hpp"

using namespace f2lie;
using f2lie::testing::l31;

namespace {

const Catalog& shipped() {
  static const Catalog c = Catalog::load(default_catalog_dir());
  return c;
}

std::string parse_error(const std::string& text) {
  try {
    parse_algebra(text, "t.json");
  } catch (const CatalogError& e) {
    return e.what();
  }
  return {};
}

// Same algebra in a random basis.
LieAlgebra rebased(const LieAlgebra& l, std::uint64_t seed) {
  const std::size_t n = l.dim();
  std::mt19937_64 rng(seed);
  std::vector<Vec> cols;
  while (true) {
    cols.clear();
    for (std::size_t i = 0; i < n; ++i) cols.push_back(rng() & low_mask(n));
    if (Subspace::span(n, cols).is_full()) break;
  }
  std::vector<BracketEntry> br;
  const auto inv = *inverse(BitMatrix::from_columns(cols, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (Vec v = inv.apply(l.bracket(cols[i], cols[j]))) br.push_back({i, j, v});
  return LieAlgebra::from_brackets(n, br);
}

}  // namespace

TEST(Catalog, DisplayNames) {
  EXPECT_EQ(display_name("L_15_9"), "L_{15,9}");
  EXPECT_EQ(id_dimension("L_15_9"), 15u);
  EXPECT_EQ(id_dimension("sl2"), 0u);
  EXPECT_EQ(provenance_from_string(to_string(Provenance::AppendixMatrices)), Provenance::AppendixMatrices);
  EXPECT_THROW(provenance_from_string("folklore"), CatalogError);
}

TEST(Catalog, RoundTrip) {
  for (const auto& e : shipped().entries()) {
    const auto text = format_algebra(e.algebra);
    const auto back = parse_algebra(text);
    EXPECT_EQ(back, e.algebra) << e.id;
    EXPECT_EQ(format_algebra(back), text) << e.id;
  }
  const auto dir = std::filesystem::temp_directory_path() / "f2lie_catalog_test";
  std::filesystem::create_directories(dir);
  save_algebra(l31(), dir / "l31.json");
  EXPECT_EQ(load_algebra(dir / "l31.json"), l31());
  std::filesystem::remove_all(dir);
}

TEST(Catalog, BuiltinL31) {
  const auto e = builtin("L_3_1");
  EXPECT_EQ(e.provenance, Provenance::PaperSection);
  EXPECT_EQ(e.algebra.brackets(), l31().brackets());
  EXPECT_THROW(builtin("L_99_1"), std::out_of_range);
}

TEST(Catalog, MalformedDocuments) {
  EXPECT_NE(parse_error("{\"dim\": 3, \"brackets\": [[0, 1, [2]], }"), "");
  EXPECT_NE(parse_error("{\"dim\": 3, \"brackets\": [[0, 1, [2]], }").find("t.json:1:"), std::string::npos);
  EXPECT_NE(parse_error("{\"brackets\": []}").find("dim"), std::string::npos);
  EXPECT_NE(parse_error("{\"dim\": 3, \"brackets\": [[0, 3, [1]]]}").find("brackets[0]"), std::string::npos);
  EXPECT_NE(parse_error("{\"dim\": 3, \"brackets\": [[0, 1, [2, 2]]]}"), "");
  EXPECT_NE(parse_error("{\"dim\": 3, \"brackets\": [[0, 1, [2]], [1, 0, [2]]]}"), "");
  EXPECT_NE(parse_error("{\"dim\": 2, \"brackets\": [[0, 0, [1]]]}").find("alternat"), std::string::npos);
  // [b0,b1]=b2, [b0,b2]=b0 fails Jacobi.
  EXPECT_NE(parse_error("{\"dim\": 3, \"brackets\": [[0, 1, [2]], [0, 2, [0]]]}").find("jacobi"), std::string::npos);
  EXPECT_EQ(parse_error(format_algebra(l31())), "");
  const auto raw = parse_algebra("{\"dim\": 2, \"brackets\": [[0, 0, [1]]]}", "t.json", false);
  EXPECT_FALSE(validate_axioms(raw).ok);
}

TEST(Catalog, AddRejectsBadEntries) {
  auto c = Catalog::builtins();
  EXPECT_THROW(c.add({"L_3_1", {}, l31(), Provenance::UserFile, ""}), CatalogError);
  EXPECT_THROW(c.add({"L_4_1", {}, l31(), Provenance::UserFile, ""}), CatalogError);
  EXPECT_THROW(c.add({"L_3_2", {}, LieAlgebra::abelian(3), Provenance::UserFile, ""}), CatalogError);
  c.add({"L_6_9", {"copy"}, tensor_extend(l31(), 2), Provenance::UserFile, ""});
  ASSERT_NE(c.find("L_6_9"), nullptr);
  EXPECT_EQ(c.at("L_6_9").names.front(), "copy");
}

TEST(Catalog, EveryEntrySimpleWithNoncentralIdempotent) {
  for (const auto& e : shipped().entries()) {
    EXPECT_EQ(e.algebra.dim(), id_dimension(e.id)) << e.id;
    EXPECT_TRUE(validate_axioms(e.algebra).ok) << e.id;
    EXPECT_TRUE(is_simple(e.algebra)) << e.id;
    EXPECT_EQ(center(e.algebra).dim(), 0u) << e.id;
    const auto ids = find_idempotents(e.algebra);
    EXPECT_TRUE(std::any_of(ids.begin(), ids.end(), [](const Idempotent& x) { return !x.central; })) << e.id;
  }
}

TEST(Catalog, AppendixAlgebrasDistinct) {
  const std::vector<std::string> ids = {"L_15_9", "L_15_10", "L_15_11"};
  for (std::size_t a = 0; a < ids.size(); ++a) {
    const auto& x = shipped().at(ids[a]).algebra;
    EXPECT_EQ(x.dim(), 15u);
    EXPECT_EQ(shipped().at(ids[a]).provenance, Provenance::AppendixMatrices);
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      const auto cert = iso_test(x, shipped().at(ids[b]).algebra);
      EXPECT_FALSE(cert.unknown);
      EXPECT_FALSE(cert) << ids[a] << " ~ " << ids[b];
    }
  }
}

TEST(Catalog, IdentifyRebasedAndSections) {
  const auto& c = shipped();
  for (const char* id : {"L_3_1", "L_7_1", "L_8_2"}) {
    const auto r = c.identify(rebased(c.at(id).algebra, 7));
    ASSERT_TRUE(r.id.has_value()) << id;
    EXPECT_EQ(*r.id, id);
  }
  const auto l6 = c.at("L_6_1").algebra;
  std::vector<Vec> lifted;
  for (std::size_t i = 0; i < 3; ++i) lifted.push_back(tensor_lift(l31(), 2, Vec{1} << i));
  const auto sub = restrict_to(l6, Subspace::span(6, lifted));
  EXPECT_EQ(c.identify(sub).id, std::optional<std::string>("L_3_1"));
  EXPECT_FALSE(c.identify(LieAlgebra::abelian(3)).id.has_value());
  EXPECT_FALSE(c.identify(direct_sum(l31(), l31())).id.has_value());
}

TEST(Catalog, GeneratorFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "f2lie_gen_test";
  std::filesystem::create_directories(dir);
  const auto l = l31();
  const auto aut = automorphism_group(l);
  {
    std::ofstream out(dir / "g.json");
    out << "{\"dim\": 3, \"generators\": [[";
    const auto m = BitMatrix::from_columns(aut.generators()[0], 3).transpose();
    for (std::size_t r = 0; r < 3; ++r) {
      out << (r ? ", " : "") << '"';
      for (std::size_t c = 0; c < 3; ++c) out << (m.get(r, c) ? '1' : '0');
      out << '"';
    }
    out << "]]}";
  }
  const auto gens = load_generators(dir / "g.json", l);
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(gens[0], aut.generators()[0]);
  {
    std::ofstream out(dir / "bad.json");
    out << "{\"dim\": 3, \"generators\": [[\"110\", \"010\", \"001\"]]}";
  }
  EXPECT_THROW(load_generators(dir / "bad.json", l), CatalogError);
  std::filesystem::remove_all(dir);
}
