#include "lsalg/words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "lsalg/errors.hpp"

namespace lsalg {

Word concat(const Word& w1, const Word& w2) {
  Word out = w1;
  out.insert(out.end(), w2.begin(), w2.end());
  return out;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

State fold(const Word& w, const Algebra& alg) {
  State state = alg.base();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    std::optional<Sym> s = alg.symbol(*it);
    if (!s) throw UnknownSymbol("symbol '" + *it + "' is not in the alphabet");
    state = alg.step(*s, state);
  }
  return state;
}

namespace {

std::unordered_map<std::string, int> alphabet_index(
    const std::vector<std::string>& alphabet) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    index.emplace(alphabet[i], static_cast<int>(i));
  return index;
}

}  // namespace

BoundaryCheck validate_boundary_set(const BoundarySet& A) {
  BoundaryCheck check;
  std::set<Word> members(A.words.begin(), A.words.end());
  if (!members.count(Word{}))
    check.violations.push_back(
        BoundaryViolation{BoundaryViolation::Kind::MissingEmpty, Word{}});

  const auto index = alphabet_index(A.alphabet);
  std::set<Word> seen;
  for (const Word& w : A.words) {
    if (!seen.insert(w).second)
      check.violations.push_back(
          BoundaryViolation{BoundaryViolation::Kind::Duplicate, w});
    for (const std::string& sym : w)
      if (!index.count(sym)) {
        check.violations.push_back(
            BoundaryViolation{BoundaryViolation::Kind::ForeignSymbol, w});
        break;
      }
    if (!w.empty()) {
      Word tail(w.begin() + 1, w.end());
      if (!members.count(tail))
        check.violations.push_back(
            BoundaryViolation{BoundaryViolation::Kind::TailMissing, w});
    }
  }
  check.ok = check.violations.empty();
  return check;
}

std::vector<Word> boundary_frontier(const BoundarySet& A) {
  std::set<Word> members(A.words.begin(), A.words.end());
  std::set<Word> frontier_set;
  for (const Word& w : A.words)
    for (const std::string& sym : A.alphabet) {
      Word pw;
      pw.reserve(w.size() + 1);
      pw.push_back(sym);
      pw.insert(pw.end(), w.begin(), w.end());
      if (!members.count(pw)) frontier_set.insert(pw);
    }

  // Length first, then symbolwise by alphabet position.
  const auto index = alphabet_index(A.alphabet);
  std::vector<Word> frontier(frontier_set.begin(), frontier_set.end());
  std::sort(frontier.begin(), frontier.end(), [&](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      int ia = index.at(a[i]);
      int ib = index.at(b[i]);
      if (ia != ib) return ia < ib;
    }
    return false;
  });
  return frontier;
}

State BoundaryAlgebra::state_of(const Word& w) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == w) return static_cast<State>(i);
  throw std::invalid_argument("word is not a state of the boundary algebra");
}

BoundaryAlgebra boundary_algebra(const BoundarySet& A) {
  BoundaryCheck check = validate_boundary_set(A);
  if (!check.ok)
    throw std::invalid_argument("invalid boundary set: the empty word must be a "
                                "member and tails of members must be members");

  std::vector<Word> labels = A.words;
  std::vector<Word> frontier_words = boundary_frontier(A);
  labels.insert(labels.end(), frontier_words.begin(), frontier_words.end());

  const int n = static_cast<int>(labels.size());
  std::map<Word, State> state_of;
  for (State i = 0; i < n; ++i) state_of.emplace(labels[static_cast<std::size_t>(i)], i);

  std::vector<bool> frontier(static_cast<std::size_t>(n), false);
  for (std::size_t i = A.words.size(); i < labels.size(); ++i) frontier[i] = true;

  // Prepend on A, freeze on the frontier.
  std::vector<std::vector<State>> tables(
      A.alphabet.size(), std::vector<State>(static_cast<std::size_t>(n)));
  for (std::size_t s = 0; s < A.alphabet.size(); ++s)
    for (State x = 0; x < n; ++x) {
      if (frontier[static_cast<std::size_t>(x)]) {
        tables[s][static_cast<std::size_t>(x)] = x;
      } else {
        Word pw;
        const Word& w = labels[static_cast<std::size_t>(x)];
        pw.reserve(w.size() + 1);
        pw.push_back(A.alphabet[s]);
        pw.insert(pw.end(), w.begin(), w.end());
        tables[s][static_cast<std::size_t>(x)] = state_of.at(pw);
      }
    }

  State base = state_of.at(Word{});
  BoundaryAlgebra out{Algebra(n, base, A.alphabet, std::move(tables)),
                      std::move(labels), std::move(frontier)};
  if (!is_minimal(out.algebra))
    throw CriterionMismatch("boundary algebra construction lost minimality");
  return out;
}

bool boundary_regular_by_theorem(const BoundarySet& A) {
  BoundaryCheck check = validate_boundary_set(A);
  if (!check.ok)
    throw std::invalid_argument("invalid boundary set");
  std::set<Word> members(A.words.begin(), A.words.end());
  for (const Word& w : A.words) {
    if (w.empty()) continue;
    Word init(w.begin(), w.end() - 1);
    if (!members.count(init)) return false;
  }
  return true;
}

ProjectedState project(const Word& w, const BoundaryAlgebra& ba) {
  State state = fold(w, ba.algebra);
  return ProjectedState{state, ba.labels[static_cast<std::size_t>(state)],
                        ba.frontier[static_cast<std::size_t>(state)]};
}

ProjectedState project(const Word& w, const BoundarySet& A) {
  return project(w, boundary_algebra(A));
}

}  // namespace lsalg
