#include "systolic/smallcancel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace systolic {

namespace {

void require_usable(const CyclicWord& R) {
  if (R.empty()) throw Error("relator must be non-empty");
  if (is_proper_power(R).is_power) throw ProperPowerInput();
}

bool match_at(const Word& host, std::size_t pos, const Word& u) {
  for (std::size_t j = 0; j < u.size(); ++j)
    if (host[pos + j] != u[j]) return false;
  return true;
}

}  // namespace

SymmetrizedIndex::SymmetrizedIndex(const CyclicWord& R) : R_(R), Rinv_(R.inverse()) {
  require_usable(R_);
  const int r = R_.length();
  std::map<Word, int> seen;
  index_fwd_.assign(r, -1);
  index_inv_.assign(r, -1);
  for (int s = 0; s < r; ++s) {
    Word rot = R_.rotation(s);
    auto it = seen.find(rot);
    if (it == seen.end()) {
      index_fwd_[s] = static_cast<int>(elements_.size());
      seen.emplace(std::move(rot), index_fwd_[s]);
      elements_.push_back(R_.rotation(s));
    } else {
      index_fwd_[s] = it->second;
    }
  }
  for (int s = 0; s < r; ++s) {
    Word rot = Rinv_.rotation(s);
    auto it = seen.find(rot);
    if (it == seen.end()) {
      index_inv_[s] = static_cast<int>(elements_.size());
      seen.emplace(std::move(rot), index_inv_[s]);
      elements_.push_back(Rinv_.rotation(s));
    } else {
      index_inv_[s] = it->second;
    }
  }
  doubled_fwd_.reserve(2 * r);
  doubled_inv_.reserve(2 * r);
  for (int i = 0; i < 2 * r; ++i) {
    doubled_fwd_.push_back(R_.at(i));
    doubled_inv_.push_back(Rinv_.at(i));
  }
}

int SymmetrizedIndex::element_of_rotation(int orientation, int s) const {
  const int r = R_.length();
  int k = ((s % r) + r) % r;
  return orientation > 0 ? index_fwd_[k] : index_inv_[k];
}

bool SymmetrizedIndex::find_host(const Word& u, Occurrence* host) const {
  const int r = R_.length();
  if (u.empty() || static_cast<int>(u.size()) > r) return false;
  for (int s = 0; s < r; ++s) {
    if (match_at(doubled_fwd_, s, u)) {
      if (host) *host = Occurrence{element_of_rotation(+1, s), 0, static_cast<int>(u.size())};
      return true;
    }
  }
  for (int s = 0; s < r; ++s) {
    if (match_at(doubled_inv_, s, u)) {
      if (host) *host = Occurrence{element_of_rotation(-1, s), 0, static_cast<int>(u.size())};
      return true;
    }
  }
  return false;
}

std::vector<Piece> enumerate_pieces(const CyclicWord& R) {
  return enumerate_pieces(SymmetrizedIndex(R));
}

std::vector<Piece> enumerate_pieces(const SymmetrizedIndex& idx) {
  const auto& S = idx.elements();
  const int m = static_cast<int>(S.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return S[a] < S[b]; });

  // lcp[i] between sorted neighbours i and i+1.
  std::vector<int> lcp(std::max(0, m - 1), 0);
  for (int i = 0; i + 1 < m; ++i) {
    const Word& a = S[order[i]];
    const Word& b = S[order[i + 1]];
    int k = 0;
    while (k < static_cast<int>(std::min(a.size(), b.size())) && a[k] == b[k]) ++k;
    lcp[i] = k;
  }

  // A prefix of length L starting at sorted position i is a piece iff
  // lcp[i] >= L or lcp[i-1] >= L. Walk maximal lcp runs to list each piece
  // word once with its full prefix-occurrence range.
  std::vector<Piece> out;
  for (int i = 0; i + 1 < m; ++i) {
    int newly = lcp[i] - (i > 0 ? lcp[i - 1] : 0);
    if (newly <= 0) continue;
    for (int L = lcp[i] - newly + 1; L <= lcp[i]; ++L) {
      Piece p;
      p.word.assign(S[order[i]].begin(), S[order[i]].begin() + L);
      int lo = i;
      while (lo > 0 && lcp[lo - 1] >= L) --lo;
      int hi = i + 1;
      while (hi + 1 < m && lcp[hi] >= L) ++hi;
      for (int j = lo; j <= hi; ++j)
        p.occurrences.push_back(Occurrence{order[j], 0, L});
      std::sort(p.occurrences.begin(), p.occurrences.end(),
                [](const Occurrence& a, const Occurrence& b) {
                  return a.element_index < b.element_index;
                });
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return out;
}

int max_piece_length(const std::vector<Piece>& pieces) {
  int best = 0;
  for (const auto& p : pieces) best = std::max(best, static_cast<int>(p.word.size()));
  return best;
}

ConditionReport check_metric(const CyclicWord& R, const Rational& lambda) {
  return check_metric(SymmetrizedIndex(R), lambda);
}

ConditionReport check_metric(const SymmetrizedIndex& idx, const Rational& lambda) {
  if (lambda <= Rational(0) || lambda >= Rational(1))
    throw Error("lambda must satisfy 0 < lambda < 1");
  ConditionReport rep;
  rep.parameter = lambda;
  auto pieces = enumerate_pieces(idx);
  const Rational bound = lambda * Rational(idx.r());
  int worst = 0;
  for (const auto& p : pieces) {
    if (Rational(static_cast<std::int64_t>(p.word.size())) >= bound) {
      rep.holds = false;
      worst = std::max(worst, static_cast<int>(p.word.size()));
    }
  }
  if (!rep.holds) {
    for (const auto& p : pieces)
      if (static_cast<int>(p.word.size()) == worst) rep.piece_witnesses.push_back(p);
    rep.witness_total = rep.piece_witnesses.size();
  }
  return rep;
}

namespace {

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Enumerates valid triples (ordered in w1, canonical w2 <= w3; the w2/w3
// roles are symmetric because the symmetrized set is inversion-closed).
// Returns true if the scan completed without hitting the candidate guard.
template <typename Visitor>
bool scan_triples(const SymmetrizedIndex& idx, const TripleOptions& opts, Visitor&& visit) {
  auto pieces = enumerate_pieces(idx);
  std::vector<Word> P;
  P.reserve(pieces.size() + 1);
  if (opts.allow_empty_piece) P.push_back(Word{});
  for (auto& p : pieces) P.push_back(p.word);

  std::vector<Word> Pinv;
  Pinv.reserve(P.size());
  for (const auto& w : P) Pinv.push_back(invert_word(w));

  const bool guarded = idx.r() > 64;
  const std::size_t candidate_cap = 1000000;
  std::size_t candidates = 0;

  for (std::size_t i1 = 0; i1 < P.size(); ++i1) {
    const Word& w1 = P[i1];
    const bool w1_empty = w1.empty();
    for (std::size_t i2 = 0; i2 < P.size(); ++i2) {
      const Word& w2 = P[i2];
      if (w1_empty && w2.empty()) continue;
      Word c12 = concat(w1, w2);
      Occurrence h12;
      if (!idx.find_host(c12, &h12)) continue;
      for (std::size_t i3 = i2; i3 < P.size(); ++i3) {
        const Word& w3 = P[i3];
        if (w3.empty() && (w1_empty || w2.empty())) continue;
        if (w2.empty() && w3.empty()) continue;
        int empties = (w1_empty ? 1 : 0) + (w2.empty() ? 1 : 0) + (w3.empty() ? 1 : 0);
        if (empties > 1) continue;
        if (guarded && ++candidates > candidate_cap) return false;
        Word c13 = concat(w1, w3);
        if (c13.empty()) continue;
        Occurrence h13;
        if (!idx.find_host(c13, &h13)) continue;
        Word c23 = concat(Pinv[i2], w3);
        if (c23.empty()) continue;
        Occurrence h23;
        if (!idx.find_host(c23, &h23)) continue;
        TripleWitness t;
        t.w1 = w1;
        t.w2 = w2;
        t.w3 = w3;
        t.host_12 = h12;
        t.host_13 = h13;
        t.host_23 = h23;
        t.total_length = static_cast<int>(w1.size() + w2.size() + w3.size());
        if (!visit(t)) return true;
      }
    }
  }
  return true;
}

}  // namespace

ConditionReport check_T4(const CyclicWord& R, const TripleOptions& opts) {
  return check_T4(SymmetrizedIndex(R), opts);
}

ConditionReport check_T4(const SymmetrizedIndex& idx, const TripleOptions& opts) {
  ConditionReport rep;
  bool complete = scan_triples(idx, opts, [&](const TripleWitness& t) {
    rep.holds = false;
    ++rep.witness_total;
    if (rep.triple_witnesses.size() < opts.max_witnesses)
      rep.triple_witnesses.push_back(t);
    return !opts.first_witness_only;
  });
  rep.capped = !complete && !opts.first_witness_only;
  return rep;
}

ConditionReport check_Tprime(const CyclicWord& R, const TripleOptions& opts) {
  return check_Tprime(SymmetrizedIndex(R), opts);
}

ConditionReport check_Tprime(const SymmetrizedIndex& idx, const TripleOptions& opts) {
  ConditionReport rep;
  const std::int64_t r = idx.r();
  bool complete = scan_triples(idx, opts, [&](const TripleWitness& t) {
    // total < r/2 exactly: 2*total < r.
    if (2 * static_cast<std::int64_t>(t.total_length) < r) return true;
    rep.holds = false;
    ++rep.witness_total;
    if (rep.triple_witnesses.size() < opts.max_witnesses)
      rep.triple_witnesses.push_back(t);
    return !opts.first_witness_only;
  });
  rep.capped = !complete && !opts.first_witness_only;
  return rep;
}

}  // namespace systolic
