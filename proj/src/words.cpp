#include "systolic/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace systolic {

Alphabet::Alphabet(std::vector<std::string> generators) : names_(std::move(generators)) {
  if (names_.empty()) throw Error("alphabet must be non-empty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("generator names must be non-empty");
    if (!seen.insert(n).second) throw Error("duplicate generator name: " + n);
  }
}

int Alphabet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i].is_inverse_of(w[i - 1])) return false;
  return true;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& x : w) {
    if (!out.empty() && out.back().is_inverse_of(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

std::vector<int> occurrences(const Word& sub, const Word& host) {
  if (sub.empty()) throw Error("occurrences: pattern must be non-empty");
  std::vector<int> out;
  if (sub.size() > host.size()) return out;
  for (std::size_t i = 0; i + sub.size() <= host.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < sub.size(); ++j) {
      if (host[i + j] != sub[j]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

// Index of the lexicographically least rotation (Booth-style scan; inputs
// are short so the quadratic fallback is fine).
int least_rotation(const Word& w) {
  const int n = static_cast<int>(w.size());
  int best = 0;
  for (int cand = 1; cand < n; ++cand) {
    for (int k = 0; k < n; ++k) {
      const Letter& a = w[(best + k) % n];
      const Letter& b = w[(cand + k) % n];
      if (b < a) {
        best = cand;
        break;
      }
      if (a < b) break;
    }
  }
  return best;
}

}  // namespace

CyclicWord CyclicWord::reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].is_inverse_of(r[hi - 1])) {
    ++lo;
    --hi;
  }
  Word core(r.begin() + lo, r.begin() + hi);
  return from_cyclically_reduced(core);
}

CyclicWord CyclicWord::from_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) throw Error("word is not reduced");
  if (!w.empty() && w.front().is_inverse_of(w.back()) && w.size() > 1)
    throw Error("word is not cyclically reduced");
  CyclicWord out;
  if (w.empty()) return out;
  int s = least_rotation(w);
  out.letters_.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out.letters_.push_back(w[(s + i) % w.size()]);
  return out;
}

const Letter& CyclicWord::at(int i) const {
  if (letters_.empty()) throw Error("cyclic index into empty word");
  int n = length();
  int k = ((i % n) + n) % n;
  return letters_[k];
}

Word CyclicWord::rotation(int start) const {
  Word out;
  out.reserve(letters_.size());
  for (int i = 0; i < length(); ++i) out.push_back(at(start + i));
  return out;
}

CyclicWord CyclicWord::inverse() const {
  return from_cyclically_reduced(invert_word(letters_));
}

std::vector<Word> symmetrized_set(const CyclicWord& R) {
  if (R.empty()) throw Error("symmetrized set of the empty word");
  std::vector<Word> out;
  std::set<Word> seen;
  const int r = R.length();
  for (int s = 0; s < r; ++s) {
    Word rot = R.rotation(s);
    if (seen.insert(rot).second) out.push_back(std::move(rot));
  }
  CyclicWord inv = R.inverse();
  for (int s = 0; s < r; ++s) {
    Word rot = inv.rotation(s);
    if (seen.insert(rot).second) out.push_back(std::move(rot));
  }
  return out;
}

ProperPowerResult is_proper_power(const CyclicWord& R) {
  ProperPowerResult res;
  res.root = R;
  if (R.empty()) throw Error("is_proper_power of the empty word");
  const int r = R.length();
  for (int p = 1; p <= r / 2; ++p) {
    if (r % p != 0) continue;
    bool periodic = true;
    for (int i = 0; i < r && periodic; ++i)
      if (R.letters()[i] != R.at(i + p)) periodic = false;
    if (periodic) {
      Word root(R.letters().begin(), R.letters().begin() + p);
      res.is_power = true;
      res.root = CyclicWord::from_cyclically_reduced(root);
      res.exponent = r / p;
      return res;
    }
  }
  return res;
}

Presentation::Presentation(Alphabet alphabet, CyclicWord relator)
    : alphabet_(std::move(alphabet)), relator_(std::move(relator)) {
  if (relator_.empty()) throw EmptyRelator();
  for (const Letter& l : relator_.letters())
    if (l.gen < 0 || l.gen >= alphabet_.size())
      throw Error("relator uses generator index out of range");
}

std::string word_str(const Word& w, const Alphabet& alphabet) {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long exp = static_cast<long long>(j - i) * w[i].sign;
    if (!first) os << ' ';
    first = false;
    os << alphabet.name(w[i].gen);
    if (exp != 1) os << '^' << exp;
    i = j;
  }
  return os.str();
}

std::string cyclic_word_str(const CyclicWord& w, const Alphabet& alphabet) {
  return word_str(w.letters(), alphabet);
}

}  // namespace systolic
