#ifndef SYSTOLIC_SMALLCANCEL_HPP
#define SYSTOLIC_SMALLCANCEL_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "systolic/rational.hpp"
#include "systolic/words.hpp"

namespace systolic {

// A place where a word occurs inside an element of the symmetrized set.
// Piece occurrences are recorded as prefixes (position 0): distinct places in
// R^{+-1} up to rotation biject with the elements having the word as prefix.
struct Occurrence {
  int element_index = 0;
  int position = 0;
  int length = 0;

  friend bool operator==(const Occurrence& a, const Occurrence& b) {
    return a.element_index == b.element_index && a.position == b.position &&
           a.length == b.length;
  }
};

// A word that is a prefix of at least two distinct elements of the
// symmetrized set.
struct Piece {
  Word word;
  std::vector<Occurrence> occurrences;
};

// Pieces w1, w2, w3 with w1w2, w1w3 and w2^-1 w3 all subwords of elements of
// the symmetrized set. Hosts record one witnessing element each.
struct TripleWitness {
  Word w1, w2, w3;
  Occurrence host_12, host_13, host_23;
  int total_length = 0;
};

struct ConditionReport {
  bool holds = true;
  Rational parameter = Rational(0);  // lambda for metric checks
  std::vector<Piece> piece_witnesses;
  std::vector<TripleWitness> triple_witnesses;
  bool capped = false;             // candidate scan truncated by the guard
  std::size_t witness_total = 0;   // witnesses seen during the scan
  bool equal_pieces_allowed = true;
};

struct TripleOptions {
  bool allow_empty_piece = false;
  std::size_t max_witnesses = std::numeric_limits<std::size_t>::max();
  bool first_witness_only = false;  // stop the scan at the first witness
};

// Precomputed search structure over symmetrized_set(R).
class SymmetrizedIndex {
 public:
  explicit SymmetrizedIndex(const CyclicWord& R);

  const CyclicWord& relator() const { return R_; }
  const std::vector<Word>& elements() const { return elements_; }
  int r() const { return R_.length(); }

  // Index into elements() of the rotation of R (orientation +1) or of R^-1
  // (orientation -1) starting at cyclic position s.
  int element_of_rotation(int orientation, int s) const;

  // First host of u as a subword of an element, or nullopt-style flag.
  bool find_host(const Word& u, Occurrence* host) const;

 private:
  CyclicWord R_;
  CyclicWord Rinv_;
  std::vector<Word> elements_;
  std::vector<int> index_fwd_, index_inv_;  // rotation -> element index
  Word doubled_fwd_, doubled_inv_;          // R.R and R^-1.R^-1
};

// Every non-empty word that is a prefix of two distinct elements of the
// symmetrized set, with full prefix-occurrence lists; closed under non-empty
// prefixes. Sorted by (length, word).
std::vector<Piece> enumerate_pieces(const CyclicWord& R);
std::vector<Piece> enumerate_pieces(const SymmetrizedIndex& idx);

int max_piece_length(const std::vector<Piece>& pieces);

// C'(lambda): every piece W has l(W) < lambda * l(R), exact comparison.
// On failure the witnesses are the maximal-length violating pieces.
ConditionReport check_metric(const CyclicWord& R, const Rational& lambda);
ConditionReport check_metric(const SymmetrizedIndex& idx, const Rational& lambda);

// Restated T(4): holds iff no TripleWitness exists.
ConditionReport check_T4(const CyclicWord& R, const TripleOptions& opts = {});
ConditionReport check_T4(const SymmetrizedIndex& idx, const TripleOptions& opts = {});

// Condition (T'): every triple has total length < l(R)/2; witnesses are the
// violating triples.
ConditionReport check_Tprime(const CyclicWord& R, const TripleOptions& opts = {});
ConditionReport check_Tprime(const SymmetrizedIndex& idx, const TripleOptions& opts = {});

}  // namespace systolic

#endif
