#ifndef SYSTOLIC_WORDS_HPP
#define SYSTOLIC_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "systolic/errors.hpp"

namespace systolic {

// Generating set. Names are unique, non-empty, and indexed by position.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> generators);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  // -1 if absent.
  int index_of(const std::string& name) const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

// One generator occurrence with a sign. Total order: generator index first,
// then +1 before -1, so a < a^-1 < b < b^-1.
struct Letter {
  std::int32_t gen = 0;
  std::int32_t sign = 1;  // +1 or -1

  Letter() = default;
  Letter(std::int32_t g, std::int32_t s) : gen(g), sign(s) {}

  Letter inverse() const { return Letter(gen, -sign); }
  bool is_inverse_of(const Letter& o) const { return gen == o.gen && sign == -o.sign; }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.sign > b.sign;  // +1 < -1
  }
};

using Word = std::vector<Letter>;

bool is_reduced(const Word& w);

// The unique reduced word freely equal to w. Idempotent.
Word free_reduce(const Word& w);

Word invert_word(const Word& w);

// All start positions where sub matches host letterwise. sub non-empty.
std::vector<int> occurrences(const Word& sub, const Word& host);

// Cyclically reduced word up to rotation. The stored representative is the
// lexicographically least rotation, so equality and hashing are structural.
class CyclicWord {
 public:
  CyclicWord() = default;  // empty

  // Cyclically reduces w (free reduction included).
  static CyclicWord reduce(const Word& w);
  // Requires w already cyclically reduced; canonicalizes the rotation.
  static CyclicWord from_cyclically_reduced(const Word& w);

  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const Word& letters() const { return letters_; }
  const Letter& at(int i) const;  // cyclic indexing, any integer
  Word rotation(int start) const;

  CyclicWord inverse() const;

  bool operator==(const CyclicWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const CyclicWord& o) const { return !(*this == o); }
  bool operator<(const CyclicWord& o) const { return letters_ < o.letters_; }

 private:
  Word letters_;  // canonical rotation
};

inline CyclicWord cyclic_reduce(const Word& w) { return CyclicWord::reduce(w); }
inline CyclicWord invert(const CyclicWord& w) { return w.inverse(); }

// All rotations of R and of R^-1 as linear words, deduplicated, in a fixed
// order: rotations of R by 0..r-1 first, then rotations of R^-1. For a
// non-proper-power R the list has exactly 2r elements.
std::vector<Word> symmetrized_set(const CyclicWord& R);

struct ProperPowerResult {
  bool is_power = false;  // true iff R = root^exponent with exponent >= 2
  CyclicWord root;
  int exponent = 1;
};

ProperPowerResult is_proper_power(const CyclicWord& R);

class Presentation {
 public:
  Presentation(Alphabet alphabet, CyclicWord relator);

  const Alphabet& alphabet() const { return alphabet_; }
  const CyclicWord& relator() const { return relator_; }

 private:
  Alphabet alphabet_;
  CyclicWord relator_;
};

// "a b^-1 a^2" style rendering using the given alphabet.
std::string word_str(const Word& w, const Alphabet& alphabet);
std::string cyclic_word_str(const CyclicWord& w, const Alphabet& alphabet);

}  // namespace systolic

#endif
