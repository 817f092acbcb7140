#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "lieb/polynomial.hpp"
#include "lieb/tree.hpp"
#include "lieb/word.hpp"

using namespace lieb;

namespace {

AlphabetPtr ab() { return Alphabet::from_names_desc({"b", "a"}); }
AlphabetPtr abc() { return Alphabet::from_names_desc({"c", "b", "a"}); }

Word w(const AlphabetPtr& a, const std::string& letters) {
  std::vector<Letter> ls;
  for (char c : letters) ls.push_back(a->letter(std::string(1, c)));
  return Word(a, ls);
}

Word random_word(std::mt19937_64& rng, const AlphabetPtr& a, int max_deg) {
  std::uniform_int_distribution<int> len(1, max_deg);
  std::uniform_int_distribution<std::uint32_t> rank(0, static_cast<std::uint32_t>(a->size() - 1));
  std::vector<Letter> ls;
  int n = len(rng);
  for (int i = 0; i < n; ++i) ls.push_back(Letter{rank(rng)});
  return Word(a, ls);
}

bool brute_alsw(const Word& u) {
  const auto n = u.degree();
  if (n == 1) return true;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Letter> rot;
    for (std::size_t i = 0; i < n; ++i) rot.push_back(u.at((i + k) % n));
    if (compare_deglex(u, Word(u.alphabet(), rot)) <= 0) return false;
  }
  return true;
}

std::optional<LieTree> find_subtree(const LieTree& t, const void* id) {
  if (t.id() == id) return t;
  if (t.is_leaf()) return std::nullopt;
  if (auto l = find_subtree(t.left(), id)) return l;
  return find_subtree(t.right(), id);
}

}  // namespace

TEST_CASE("deg-lex comparison") {
  auto a = ab();
  CHECK(compare_deglex(w(a, "a"), w(a, "a")) == std::strong_ordering::equal);
  CHECK(compare_deglex(w(a, "a"), w(a, "ba")) < 0);  // degree first
  CHECK(compare_deglex(w(a, "ba"), w(a, "ab")) > 0);
  CHECK_THROWS_AS((void)compare_deglex(w(a, "a"), w(abc(), "a")), alphabet_mismatch);
}

TEST_CASE("deg-lex is a monomial order") {
  std::mt19937_64 rng(7);
  auto a = abc();
  for (int trial = 0; trial < 300; ++trial) {
    Word u = random_word(rng, a, 4), v = random_word(rng, a, 4), x = random_word(rng, a, 4);
    auto uv = compare_deglex(u, v), vx = compare_deglex(v, x);
    if (uv < 0 && vx < 0) CHECK(compare_deglex(u, x) < 0);
    if (uv > 0 && vx > 0) CHECK(compare_deglex(u, x) > 0);
    if (uv < 0) CHECK(compare_deglex(x.concat(u).concat(x), x.concat(v).concat(x)) < 0);
  }
}

TEST_CASE("ALSW recognition") {
  auto a = ab();
  CHECK(is_alsw(w(a, "a")));
  CHECK(is_alsw(w(a, "ba")));
  CHECK_FALSE(is_alsw(w(a, "ab")));
  CHECK_FALSE(is_alsw(w(a, "aa")));    // periodic: shift equals the word
  CHECK_FALSE(is_alsw(w(a, "baba")));
  CHECK(is_alsw(w(a, "bba")));
}

TEST_CASE("ALSW enumeration") {
  auto one = Alphabet::from_names_desc({"a"});
  auto ws = enumerate_alsw(one, 3);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].str() == "a");

  auto a = ab();
  auto two = enumerate_alsw(a, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].str() == "a");
  CHECK(two[1].str() == "b");
  CHECK(two[2].str() == "ba");

  auto three = enumerate_alsw(a, 3);
  REQUIRE(three.size() == 5);
  CHECK(three[3].str() == "baa");
  CHECK(three[4].str() == "bba");
}

TEST_CASE("enumeration agrees with brute-force filtering") {
  for (auto alpha : {ab(), abc()}) {
    auto listed = enumerate_alsw(alpha, 6);
    std::vector<Word> brute;
    std::vector<std::uint32_t> idx;
    std::function<void(int)> gen = [&](int d) {
      if (!idx.empty()) {
        std::vector<Letter> ls;
        for (auto i : idx) ls.push_back(Letter{i});
        Word u(alpha, ls);
        if (brute_alsw(u)) brute.push_back(u);
      }
      if (d == 6) return;
      for (std::uint32_t i = 0; i < alpha->size(); ++i) {
        idx.push_back(i);
        gen(d + 1);
        idx.pop_back();
      }
    };
    gen(0);
    std::sort(brute.begin(), brute.end(),
              [](const Word& x, const Word& y) { return DegLexGreater{}(y, x); });
    REQUIRE(listed.size() == brute.size());
    for (std::size_t i = 0; i < listed.size(); ++i) CHECK(listed[i] == brute[i]);
    for (const Word& u : listed) CHECK(is_alsw(u));
  }
}

TEST_CASE("standard bracketing") {
  auto a = ab();
  CHECK(standard_bracketing(w(a, "ba")).str() == "[b,a]");
  CHECK(standard_bracketing(w(a, "bba")).str() == "[b,[b,a]]");
  CHECK(standard_bracketing(w(a, "baa")).str() == "[[b,a],a]");
  CHECK_THROWS_AS(standard_bracketing(w(a, "ab")), domain_error);
}

TEST_CASE("standard bracketing yields NLSWs up to degree six") {
  for (auto alpha : {ab(), abc()}) {
    for (const Word& u : enumerate_alsw(alpha, 6)) {
      LieTree t = standard_bracketing(u);
      CHECK(is_nlsw(t));
      CHECK(t.underlying_word() == u);
    }
  }
}

TEST_CASE("NLSW conditions") {
  auto a = ab();
  CHECK(is_nlsw(LieTree::leaf(a, a->letter("a"))));
  CHECK_FALSE(
      is_nlsw(LieTree::node(LieTree::leaf(a, a->letter("a")), LieTree::leaf(a, a->letter("b")))));
  CHECK(is_nlsw(standard_bracketing(w(a, "baa"))));
  // condition 3: in [[b,[b,a]],a] the inner right word "ba" exceeds "a"
  LieTree bad = LieTree::node(standard_bracketing(w(a, "bba")), LieTree::leaf(a, a->letter("a")));
  CHECK(bad.underlying_word().str() == "bbaa");
  CHECK_FALSE(is_nlsw(bad));
  CHECK(is_nlsw(standard_bracketing(w(a, "bbaa"))));
}

TEST_CASE("special bracketing examples") {
  auto a = ab();
  CHECK(special_bracketing(w(a, "ba"), 0, 2).tree.str() == "[b,a]");
  CHECK(special_bracketing(w(a, "bba"), 1, 2).tree.str() == "[b,[b,a]]");
  CHECK(special_bracketing(w(a, "baa"), 0, 2).tree.str() == "[[b,a],a]");
  CHECK_THROWS_AS(special_bracketing(w(a, "ba"), 1, 2), domain_error);  // out of bounds
  CHECK_THROWS_AS(special_bracketing(w(a, "bab"), 0, 2), domain_error);  // w not ALSW
  CHECK_THROWS_AS(special_bracketing(w(a, "bba"), 0, 2), domain_error);  // "bb" not ALSW
}

TEST_CASE("special bracketing contract over all small occurrences") {
  for (auto [alpha, cap] : {std::pair{ab(), 6}, std::pair{abc(), 5}}) {
    for (const Word& u : enumerate_alsw(alpha, cap)) {
      for (std::size_t pos = 0; pos < u.degree(); ++pos)
        for (std::size_t len = 1; pos + len <= u.degree(); ++len) {
          Word v = u.subword(pos, len);
          if (!is_alsw(v)) continue;
          RelativeBracketing rb = special_bracketing(u, pos, len);
          auto sub = find_subtree(rb.tree, rb.slot);
          REQUIRE(sub.has_value());
          CHECK(*sub == standard_bracketing(v));
          auto [lw, lc] = expand(rb.tree).leading();
          CHECK(lw == u);
          CHECK(lc == 1);
        }
    }
  }
}

TEST_CASE("HNN-style alphabet order") {
  auto a = Alphabet::from_names_desc({"t'", "x1'", "x2'", "t", "x1", "x2"});
  CHECK(a->order_string() == "t' > x1' > x2' > t > x1 > x2");
  CHECK(a->letter("t", true) > a->letter("x1", true));
  CHECK(a->letter("x2", true) > a->letter("t", false));
  CHECK(a->letter("t", false) > a->letter("x1", false));
  CHECK(a->dotted_partner(a->letter("x1")) == a->letter("x1", true));
  CHECK(a->undotted_partner(a->letter("t", true)) == a->letter("t"));
}

TEST_CASE("word serialization") {
  auto a = ab();
  CHECK(w(a, "ba").str() == "ba");
  auto m = Alphabet::from_names_desc({"x1'", "x2'", "x1", "x2"});
  Word u(m, {m->letter("x1", true), m->letter("x2")});
  CHECK(u.str() == "x1'.x2");
  CHECK(w(a, "ba").str_dotted() == "b.a");
}
