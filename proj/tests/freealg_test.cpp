#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieb/polynomial.hpp"

using namespace lieb;

namespace {

AlphabetPtr ab() { return Alphabet::from_names_desc({"b", "a"}); }

Word w(const AlphabetPtr& a, const std::string& letters) {
  std::vector<Letter> ls;
  for (char c : letters) ls.push_back(a->letter(std::string(1, c)));
  return Word(a, ls);
}

Polynomial mono(const AlphabetPtr& a, const std::string& word, const Rational& c = 1) {
  return Polynomial::monomial(w(a, word), c);
}

// random bracket combination of generators: a Lie element by construction
Polynomial random_lie(std::mt19937_64& rng, const AlphabetPtr& a, int max_deg) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<std::uint32_t> rank(0, static_cast<std::uint32_t>(a->size() - 1));
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::function<Polynomial(int)> gen = [&](int budget) -> Polynomial {
    if (budget <= 1 || pick(rng) == 0)
      return Polynomial::letter(a, Letter{rank(rng)});
    int l = std::uniform_int_distribution<int>(1, budget - 1)(rng);
    return bracket(gen(l), gen(budget - l));
  };
  Polynomial out(a);
  for (int parts = 0; parts < 3; ++parts)
    out += Rational(coeff(rng)) * gen(std::uniform_int_distribution<int>(1, max_deg)(rng));
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto a = ab();
  Polynomial f = mono(a, "ba", 2) - mono(a, "ab");
  CHECK((f - f).is_zero());
  CHECK((f * Rational(0)).is_zero());
  Polynomial g = (mono(a, "b") - mono(a, "a")) * mono(a, "a");
  CHECK(g == mono(a, "ba") - mono(a, "aa"));
  auto other = Alphabet::from_names_desc({"z"});
  CHECK_THROWS_AS((void)(f + Polynomial::letter(other, other->letter("z"))), alphabet_mismatch);
}

TEST_CASE("bracket") {
  auto a = ab();
  Polynomial b = mono(a, "b"), x = mono(a, "a");
  CHECK(bracket(b, b).is_zero());
  CHECK(bracket(b, x) == mono(a, "ba") - mono(a, "ab"));
  CHECK(bracket(bracket(b, x), x) ==
        mono(a, "baa") - mono(a, "aba", 2) + mono(a, "aab"));
}

TEST_CASE("bracket is bilinear and satisfies Jacobi") {
  std::mt19937_64 rng(11);
  auto a = ab();
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial f = random_lie(rng, a, 3), g = random_lie(rng, a, 3), h = random_lie(rng, a, 2);
    CHECK(bracket(f + g, h) == bracket(f, h) + bracket(g, h));
    Polynomial jac =
        bracket(bracket(f, g), h) + bracket(bracket(g, h), f) + bracket(bracket(h, f), g);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("expansion of bracketing trees") {
  auto a = ab();
  CHECK(expand(LieTree::leaf(a, a->letter("a"))) == mono(a, "a"));
  CHECK(expand(standard_bracketing(w(a, "ba"))) == mono(a, "ba") - mono(a, "ab"));
  Polynomial e = expand(standard_bracketing(w(a, "baa")));
  CHECK(e == mono(a, "baa") - mono(a, "aba", 2) + mono(a, "aab"));
  auto [lw, lc] = e.leading();
  CHECK(lw.str() == "baa");
  CHECK(lc == 1);
}

TEST_CASE("leading term") {
  auto a = ab();
  CHECK((mono(a, "b") - mono(a, "a")).leading() == std::pair{w(a, "b"), Rational(1)});
  CHECK((mono(a, "ba") - mono(a, "ab")).leading() == std::pair{w(a, "ba"), Rational(1)});
  CHECK(mono(a, "aab", 3).leading() == std::pair{w(a, "aab"), Rational(3)});
  CHECK_THROWS_AS((void)Polynomial(a).leading(), domain_error);
  CHECK(mono(a, "ba", 4).monic() == mono(a, "ba"));
}

TEST_CASE("Lyndon basis rewriting") {
  auto a = ab();
  auto lb = to_lyndon_basis(expand(standard_bracketing(w(a, "ba"))));
  REQUIRE(lb.size() == 1);
  CHECK(lb[0].first == 1);
  CHECK(lb[0].second.str() == "[b,a]");

  auto neg = to_lyndon_basis(mono(a, "ab") - mono(a, "ba"));
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].first == -1);
  CHECK(neg[0].second.str() == "[b,a]");

  CHECK_THROWS_AS(to_lyndon_basis(mono(a, "aa")), not_a_lie_element);
  CHECK_FALSE(is_lie_element(mono(a, "ba")));
  CHECK(is_lie_element(Polynomial(a)));
}

TEST_CASE("Lyndon basis round trip up to degree six") {
  for (auto alpha : {ab(), Alphabet::from_names_desc({"c", "b", "a"})}) {
    for (const Word& u : enumerate_alsw(alpha, alpha->size() == 2 ? 6 : 5)) {
      LieTree t = standard_bracketing(u);
      auto lb = to_lyndon_basis(expand(t));
      REQUIRE(lb.size() == 1);
      CHECK(lb[0].first == 1);
      CHECK(lb[0].second == t);
    }
  }
}

TEST_CASE("Lyndon basis reproduces random Lie elements exactly") {
  std::mt19937_64 rng(23);
  auto a = ab();
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial f = random_lie(rng, a, 6);
    Polynomial back(a);
    for (const auto& [c, t] : to_lyndon_basis(f)) back += c * expand(t);
    CHECK(back == f);
  }
}

TEST_CASE("leading words multiply") {
  std::mt19937_64 rng(31);
  auto a = ab();
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f = random_lie(rng, a, 3), g = random_lie(rng, a, 3);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).leading().first == f.leading().first.concat(g.leading().first));
  }
}

TEST_CASE("polynomial text form") {
  auto a = ab();
  Polynomial f = mono(a, "ba", Rational(3) / 2) - mono(a, "ab");
  CHECK(f.str() == "3/2*b.a - a.b");
  CHECK(Polynomial(a).str() == "0");
  CHECK((-mono(a, "b")).str() == "-b");
}
