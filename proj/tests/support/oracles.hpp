#ifndef SYSTOLIC_TESTS_ORACLES_HPP
#define SYSTOLIC_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "systolic/rational.hpp"
#include "systolic/words.hpp"

// Brute-force reference implementations, kept independent of the library's
// search paths: the symmetrized set is rebuilt by rotation, pieces come from
// a full prefix scan, and subword tests scan every element at every position.
namespace oracles {

using systolic::CyclicWord;
using systolic::Letter;
using systolic::Rational;
using systolic::Word;

std::vector<Word> symmetrized(const CyclicWord& R);

std::set<Word> pieces(const CyclicWord& R);

bool has_subword(const Word& u, const std::vector<Word>& elements);

bool metric_holds(const CyclicWord& R, const Rational& lambda);

// Restated T(4): true iff no piece triple with w1w2, w1w3, w2^-1 w3 all
// subwords of elements.
bool t4_holds(const CyclicWord& R);

// Condition (T'): every triple has total length < r/2.
bool tprime_holds(const CyclicWord& R);

// Divisor-based proper power test.
bool proper_power(const CyclicWord& R);

// Visits every cyclically reduced word of length 1..max_len over the given
// number of generators.
void for_each_cyclically_reduced(int generators, int max_len,
                                 const std::function<void(const Word&)>& visit);

Word random_reduced_word(std::uint64_t& state, int generators, int len);

Word random_cyclically_reduced_word(std::uint64_t& state, int generators, int len);

}  // namespace oracles

#endif
