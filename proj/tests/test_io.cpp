#include "doctest.h"

#include "cocycle/catalog.hpp"
#include "cocycle/io.hpp"

#include <sstream>

using namespace cocycle;

TEST_CASE("group file round trip") {
  for (const char* name : {"c6", "s3", "d8", "q8"}) {
    auto g = catalog_group(name);
    std::string text = io::write_group_file(*g);
    auto back = io::read_group_file_text(text);
    CHECK(back->table() == g->table());
    CHECK(io::write_group_file(*back) == text);
  }
}

TEST_CASE("group file format details") {
  auto c2 = catalog_group("c2");
  CHECK(io::write_group_file(*c2) == "order 2\n0 1\n1 0\n");
  // labels survive
  auto q8 = catalog_group("q8");
  std::string text = io::write_group_file(*q8);
  CHECK(text.find("# label 0 1") != std::string::npos);
  CHECK(io::read_group_file_text(text)->labels() == q8->labels());
  // malformed inputs are rejected
  CHECK_THROWS(io::read_group_file_text("order 2\n0 1\n"));
  CHECK_THROWS(io::read_group_file_text("order 2\n0 1 0\n1 0\n"));
  CHECK_THROWS(io::read_group_file_text("order 2\n0 1\n0 1\n")); // not a group
}

TEST_CASE("catalog references resolve") {
  CHECK(io::resolve_group("catalog:v4")->order() == 4);
  CHECK_THROWS(io::resolve_group("catalog:nosuch"));
  CHECK_THROWS(io::resolve_group("/nonexistent/path"));
}

TEST_CASE("cocycle file round trip") {
  auto v4 = catalog_group("v4");
  auto coh = h2_classes(v4);
  std::string text = io::write_cocycle_file("catalog:v4", coh.transversal[1]);
  std::istringstream in(text);
  Cocycle back = io::read_cocycle_file(in);
  CHECK(back.table == coh.transversal[1].table);
  CHECK(back.modulus == coh.transversal[1].modulus);
}

TEST_CASE("action file round trip") {
  AbelianGroup a = AbelianGroup::from_factors({2, 2});
  std::vector<std::vector<int>> table(2);
  table[0] = {0, 1, 2, 3};
  table[1] = {0, 2, 1, 3}; // swap the two coordinates
  auto act = KAction::make(catalog_group("c2"), a, std::move(table));
  std::string text = io::write_action_file("catalog:c2", *act);
  std::istringstream in(text);
  auto back = io::read_action_file(in);
  CHECK(back->table == act->table);
  CHECK(back->a.factors == act->a.factors);
}
