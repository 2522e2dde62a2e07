#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "systolic/cli.hpp"
#include "systolic/smallcancel.hpp"

using namespace systolic;

namespace {

const Alphabet ab2({"a", "b"});
const Alphabet ab3({"a", "b", "c"});

Word w(const std::string& text, const Alphabet& ab) {
  Word out;
  for (char c : text) {
    bool upper = std::isupper(static_cast<unsigned char>(c));
    std::string name(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    int gen = ab.index_of(name);
    REQUIRE(gen >= 0);
    out.push_back(Letter(gen, upper ? -1 : 1));
  }
  return out;
}

CyclicWord example1() {
  auto [ab, r] = parse_presentation_text("< a, b | a^4 b a b a b^-1 a^-1 b^3 a^-1 b >");
  return cyclic_reduce(r);
}

CyclicWord example2() {
  auto [ab, r] = parse_presentation_text("< a, t | a t^-1 a t a^2 t^-2 a^-1 t^2 >");
  return cyclic_reduce(r);
}

std::set<Word> piece_words(const std::vector<Piece>& ps) {
  std::set<Word> out;
  for (const auto& p : ps) out.insert(p.word);
  return out;
}

}  // namespace

TEST_CASE("no pieces when no subword repeats") {
  CyclicWord R = cyclic_reduce(w("abc", ab3));
  CHECK(enumerate_pieces(R).empty());
  CHECK(check_metric(R, Rational(1, 4)).holds);
  CHECK(check_T4(R).holds);
  CHECK(check_Tprime(R).holds);
}

TEST_CASE("pieces of aabb are the four single letters") {
  CyclicWord R = cyclic_reduce(w("aabb", ab2));
  auto ps = enumerate_pieces(R);
  CHECK(piece_words(ps) ==
        std::set<Word>{w("a", ab2), w("b", ab2), w("A", ab2), w("B", ab2)});
  CHECK(max_piece_length(ps) == 1);
  for (const auto& p : ps) CHECK(p.occurrences.size() >= 2);

  // 1 < (1/4)*4 is false
  auto rep = check_metric(R, Rational(1, 4));
  CHECK_FALSE(rep.holds);
  CHECK(rep.piece_witnesses.front().word.size() == 1);

  CHECK(piece_words(ps) == oracles::pieces(R));
  CHECK(check_T4(R).holds == oracles::t4_holds(R));
  CHECK(check_Tprime(R).holds == oracles::tprime_holds(R));
}

TEST_CASE("paper example relator") {
  CyclicWord R = example1();
  auto ps = enumerate_pieces(R);
  CHECK(max_piece_length(ps) == 3);
  CHECK(check_metric(R, Rational(1, 4)).holds);
  CHECK_FALSE(check_metric(R, Rational(1, 6)).holds);
  auto t4 = check_T4(R);
  CHECK_FALSE(t4.holds);
  CHECK(t4.witness_total > 0);
  auto tp = check_Tprime(R);
  CHECK(tp.holds);
  // every triple has total length < 15/2
  CHECK(piece_words(ps) == oracles::pieces(R));
  CHECK(oracles::t4_holds(R) == false);
  CHECK(oracles::tprime_holds(R) == true);
}

TEST_CASE("second paper example fails the hypotheses") {
  CyclicWord R = example2();
  bool c14 = check_metric(R, Rational(1, 4)).holds;
  bool tp = check_Tprime(R).holds;
  CHECK_FALSE(c14 && tp);
  CHECK(c14 == oracles::metric_holds(R, Rational(1, 4)));
  CHECK(tp == oracles::tprime_holds(R));
}

TEST_CASE("proper powers are rejected") {
  CyclicWord R = cyclic_reduce(w("abab", ab2));
  CHECK_THROWS_AS(enumerate_pieces(R), ProperPowerInput);
  CHECK_THROWS_AS(check_metric(R, Rational(1, 4)), ProperPowerInput);
  CHECK_THROWS_AS(check_T4(R), ProperPowerInput);
}

TEST_CASE("pieces are closed under non-empty prefixes") {
  CyclicWord R = example1();
  auto words = piece_words(enumerate_pieces(R));
  for (const auto& word : words) {
    for (std::size_t L = 1; L < word.size(); ++L)
      CHECK(words.count(Word(word.begin(), word.begin() + L)) == 1);
  }
}

TEST_CASE("metric monotonicity") {
  std::uint64_t state = 4242;
  int tested = 0;
  while (tested < 100) {
    Word rnd = oracles::random_cyclically_reduced_word(state, 2, 10);
    CyclicWord R = CyclicWord::from_cyclically_reduced(rnd);
    if (is_proper_power(R).is_power) continue;
    ++tested;
    bool h14 = check_metric(R, Rational(1, 4)).holds;
    bool h13 = check_metric(R, Rational(1, 3)).holds;
    bool h12 = check_metric(R, Rational(1, 2)).holds;
    if (h14) CHECK(h13);
    if (h13) CHECK(h12);
  }
}

TEST_CASE("verdicts are rotation and inversion invariant") {
  std::uint64_t state = 777;
  int tested = 0;
  while (tested < 40) {
    Word rnd = oracles::random_cyclically_reduced_word(state, 2, 9);
    CyclicWord R = CyclicWord::from_cyclically_reduced(rnd);
    if (is_proper_power(R).is_power) continue;
    ++tested;
    bool c = check_metric(R, Rational(1, 4)).holds;
    bool t4 = check_T4(R).holds;
    bool tp = check_Tprime(R).holds;
    auto pw = piece_words(enumerate_pieces(R));
    for (int s = 0; s < R.length(); ++s) {
      CyclicWord Rs = cyclic_reduce(R.rotation(s));
      CHECK(check_metric(Rs, Rational(1, 4)).holds == c);
      CHECK(check_T4(Rs).holds == t4);
      CHECK(check_Tprime(Rs).holds == tp);
      CHECK(piece_words(enumerate_pieces(Rs)) == pw);
    }
    CyclicWord Ri = R.inverse();
    CHECK(check_metric(Ri, Rational(1, 4)).holds == c);
    CHECK(check_T4(Ri).holds == t4);
    CHECK(check_Tprime(Ri).holds == tp);
  }
}

TEST_CASE("implications on a small corpus") {
  oracles::for_each_cyclically_reduced(2, 9, [&](const Word& word) {
    CyclicWord R = CyclicWord::from_cyclically_reduced(word);
    if (oracles::proper_power(R)) return;
    SymmetrizedIndex idx(R);
    TripleOptions fast;
    fast.first_witness_only = true;
    fast.max_witnesses = 1;
    bool c16 = check_metric(idx, Rational(1, 6)).holds;
    bool t4 = check_T4(idx, fast).holds;
    bool tp = check_Tprime(idx, fast).holds;
    if (c16) CHECK(tp);
    if (t4) CHECK(tp);
  });
}

TEST_CASE("oracle equivalence on a small corpus") {
  oracles::for_each_cyclically_reduced(2, 8, [&](const Word& word) {
    CyclicWord R = CyclicWord::from_cyclically_reduced(word);
    if (oracles::proper_power(R)) return;
    SymmetrizedIndex idx(R);
    TripleOptions fast;
    fast.first_witness_only = true;
    fast.max_witnesses = 1;
    CHECK(piece_words(enumerate_pieces(idx)) == oracles::pieces(R));
    CHECK(check_metric(idx, Rational(1, 4)).holds ==
          oracles::metric_holds(R, Rational(1, 4)));
    CHECK(check_T4(idx, fast).holds == oracles::t4_holds(R));
    CHECK(check_Tprime(idx, fast).holds == oracles::tprime_holds(R));
  });
}

TEST_CASE("empty piece flag admits at most one empty slot") {
  CyclicWord R = example1();
  TripleOptions opts;
  opts.allow_empty_piece = true;
  auto rep = check_T4(R, opts);
  CHECK_FALSE(rep.holds);
  // with the flag, witnesses may contain one empty w_i but never two
  for (const auto& t : rep.triple_witnesses) {
    int empties = static_cast<int>(t.w1.empty()) + static_cast<int>(t.w2.empty()) +
                  static_cast<int>(t.w3.empty());
    CHECK(empties <= 1);
  }
}

TEST_CASE("occurrence lists address prefixes of symmetrized elements") {
  CyclicWord R = example1();
  SymmetrizedIndex idx(R);
  for (const auto& p : enumerate_pieces(idx)) {
    for (const auto& occ : p.occurrences) {
      const Word& host = idx.elements().at(occ.element_index);
      REQUIRE(occ.position == 0);
      REQUIRE(occ.length == static_cast<int>(p.word.size()));
      CHECK(Word(host.begin(), host.begin() + occ.length) == p.word);
    }
  }
}
