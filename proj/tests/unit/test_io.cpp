#include <doctest.h>

#include <sstream>

#include "cmt/downup.hpp"
#include "cmt/errors.hpp"
#include "cmt/gen.hpp"
#include "cmt/io.hpp"

using namespace cmt;

namespace {

GeneralStructure roundtrip(const GeneralStructure& m) {
  std::stringstream s;
  write_general_structure(s, m);
  return read_general_structure(s);
}

GeneralStructure read_g(const std::string& text) {
  std::stringstream s(text);
  return read_general_structure(s);
}

}  // namespace

TEST_CASE("structures survive a write and read") {
  Rng rng(11);
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("P", 0);
  v->add_predicate("E", 2);
  v->add_function("F", 2);
  v->add_constant("c");
  for (int trial = 0; trial < 20; ++trial) {
    GeneralStructure m = gen_structure(rng, v, 1 + rng.below(3), Grid(3));
    GeneralStructure back = roundtrip(m);
    CHECK(back.universe() == m.universe());
    CHECK(back.vocab() == m.vocab());
    for (int p = 0; p < 2; ++p) CHECK(back.pred_table(p) == m.pred_table(p));
    CHECK(back.fun_table(0) == m.fun_table(0));
    CHECK(back.constant(0) == m.constant(0));
  }
}

TEST_CASE("two-valued structures round trip with true/false entries") {
  Rng rng(12);
  auto v = std::make_shared<Vocabulary>();
  v->add_predicate("U", 1);
  v->add_function("F", 1);
  FOStructure k = gen_threshold_structure(rng, v, 3, Grid(2));
  std::stringstream s;
  write_fo_structure(s, k);
  CHECK(s.str().find("true") != std::string::npos);
  FOStructure back = read_fo_structure(s);
  for (int p = 0; p < (int)k.vocab().predicates().size(); ++p) CHECK(back.pred_table(p) == k.pred_table(p));
  CHECK(back.fun_table(0) == k.fun_table(0));
}

TEST_CASE("comments and blank lines are ignored") {
  GeneralStructure m = read_g(
      "# header comment\n"
      "vocabulary\n"
      "  predicate P 1  # trailing comment\n"
      "\n"
      "universe 2\n"
      "P 0 = 1/2\n"
      "P 1 = 1\n");
  CHECK(m.universe() == 2);
  CHECK(m.pred(0, {0}) == Value::of(1, 2));
}

TEST_CASE("a vocabulary file is just the header block") {
  std::stringstream s("vocabulary\n  predicate P 0\n  function F 1\n  constant c\n");
  VocabPtr v = read_vocabulary(s);
  CHECK(v->predicates().size() == 1);
  CHECK(v->functions()[0].arity == 1);
  CHECK(v->constants()[0].name == "c");
}

TEST_CASE("every malformed input names its line") {
  auto fails_with = [](const std::string& text, const char* needle) {
    try {
      read_g(text);
      FAIL_CHECK("expected io_error for: " << text);
    } catch (const io_error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  std::string head = "vocabulary\n  predicate P 1\nuniverse 2\n";
  fails_with(head + "P 0 = 1/2\n", "missing");                        // no P 1 entry
  fails_with(head + "P 0 = 1/2\nP 0 = 1\nP 1 = 0\n", "duplicate");
  fails_with(head + "P 0 = 3/2\nP 1 = 0\n", "line 4");
  fails_with(head + "P 5 = 1/2\nP 1 = 0\n", "line 4");
  fails_with(head + "P 0 = 1/2\nQ 1 = 0\n", "line 5");
  fails_with("vocabulary\n  predicate P -1\n", "line 2");
  fails_with("vocabulary\n  gizmo P 1\n", "line 2");
  fails_with("universe 2\n", "vocabulary");
  fails_with("vocabulary\n  predicate P 1\nP 0 = 1/2\n", "universe");
  fails_with("vocabulary\n  predicate P 1\nuniverse 0\n", "line 3");
}

TEST_CASE("loading a file that is not there reports the path") {
  try {
    load_general_structure("/nonexistent/nowhere.gst");
    FAIL_CHECK("expected io_error");
  } catch (const io_error& e) {
    CHECK(std::string(e.what()).find("nowhere.gst") != std::string::npos);
  }
}

TEST_CASE("function entries use arrow syntax and are range checked") {
  std::string head = "vocabulary\n  function F 1\nuniverse 2\n";
  GeneralStructure m = read_g(head + "F 0 -> 1\nF 1 -> 0\n");
  CHECK(m.fun(0, {0}) == 1);
  CHECK_THROWS_AS(read_g(head + "F 0 -> 2\nF 1 -> 0\n"), io_error);
  CHECK_THROWS_AS(read_g(head + "F 0 = 1\nF 1 = 0\n"), io_error);
}
