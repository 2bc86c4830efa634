#include "nichols/words.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "nichols/numeric.hpp"
#include "nichols/pm.hpp"

namespace nichols {

DegreeVector::DegreeVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("degree vector needs n >= 1");
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("degree entries must be nonnegative");
}

DegreeVector::DegreeVector(std::initializer_list<int> entries)
    : DegreeVector(std::vector<int>(entries)) {}

DegreeVector DegreeVector::unit(int n, int letter) {
  std::vector<int> e(n, 0);
  e.at(letter - 1) = 1;
  return DegreeVector(std::move(e));
}

int DegreeVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool DegreeVector::is_zero() const { return total() == 0; }

int DegreeVector::nonzero_letters() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](int e) { return e > 0; }));
}

long DegreeVector::gcd() const {
  if (is_zero()) throw std::invalid_argument("gcd undefined for m = 0");
  long g = 0;
  for (int e : entries_) g = gcd_long(g, e);
  return g;
}

long DegreeVector::big_n() const {
  if (total() < 2) throw std::invalid_argument("N(m) needs |m| >= 2");
  long g = 0;
  for (int i = 0; i < n(); ++i) {
    g = gcd_long(g, static_cast<long>(entries_[i]) * (entries_[i] - 1));
    for (int j = i + 1; j < n(); ++j) g = gcd_long(g, static_cast<long>(entries_[i]) * entries_[j]);
  }
  return g;
}

DegreeVector DegreeVector::minus_letter(int letter) const {
  if (count(letter) <= 0) throw std::invalid_argument("m - e_i needs m_i > 0");
  std::vector<int> e = entries_;
  --e[letter - 1];
  return DegreeVector(std::move(e));
}

DegreeVector DegreeVector::divided_by(long k) const {
  std::vector<int> e = entries_;
  for (int& v : e) {
    if (v % k != 0) throw std::invalid_argument("m/k needs k | m_i");
    v = static_cast<int>(v / k);
  }
  return DegreeVector(std::move(e));
}

std::string DegreeVector::to_string() const {
  std::string s = "(";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

bool componentwise_leq(const DegreeVector& a, const DegreeVector& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mismatched alphabet sizes");
  for (int i = 0; i < a.n(); ++i)
    if (a.entries()[i] > b.entries()[i]) return false;
  return true;
}

bool componentwise_less(const DegreeVector& a, const DegreeVector& b) {
  return componentwise_leq(a, b) && a != b;
}

std::vector<DegreeVector> degrees_with_total(int n, int s) {
  std::vector<DegreeVector> out;
  std::vector<int> cur(n, 0);
  // lexicographic recursion over compositions of s into n parts
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == n - 1) {
      cur[pos] = rest;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, s);
  return out;
}

DegreeVector word_degree(const Word& w, int n) {
  std::vector<int> e(n, 0);
  for (int letter : w) {
    if (letter < 1 || letter > n) throw std::invalid_argument("letter out of range");
    ++e[letter - 1];
  }
  return DegreeVector(std::move(e));
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (int letter : w) s += std::to_string(letter);
  return s;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word");
  for (std::size_t i = 1; i < w.size(); ++i) {
    // w must be strictly smaller than the suffix starting at i
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  }
  return true;
}

namespace {

// Duval's successor algorithm: visits every Lyndon word of length <= len over
// {1..n} in lexicographic order.
template <typename Visit>
void duval_enumerate(int n, int len, Visit&& visit) {
  Word w{1};
  while (!w.empty()) {
    visit(w);
    Word t;
    t.reserve(len);
    for (int i = 0; i < len; ++i) t.push_back(w[i % w.size()]);
    while (!t.empty() && t.back() == n) t.pop_back();
    if (!t.empty()) ++t.back();
    w = std::move(t);
  }
}

struct CountCache {
  std::mutex mu;
  // per alphabet size: counts by degree entries, and the sweep length done
  std::map<int, std::pair<int, std::map<std::vector<int>, long>>> by_n;
};

CountCache& count_cache() {
  static CountCache cache;
  return cache;
}

}  // namespace

std::vector<Word> lyndon_words(const DegreeVector& m) {
  if (m.is_zero()) throw std::invalid_argument("lyndon_words needs m != 0");
  std::vector<Word> out;
  const int len = m.total();
  duval_enumerate(m.n(), len, [&](const Word& w) {
    if (static_cast<int>(w.size()) == len && word_degree(w, m.n()) == m) out.push_back(w);
  });
  std::sort(out.begin(), out.end());
  return out;
}

long lyndon_count(const DegreeVector& m) {
  if (m.is_zero()) throw std::invalid_argument("lyndon_count needs m != 0");
  auto& cache = count_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& [swept_len, counts] = cache.by_n[m.n()];
  if (m.total() > swept_len) {
    swept_len = std::max(m.total(), swept_len + 4);
    counts.clear();
    duval_enumerate(m.n(), swept_len, [&](const Word& w) {
      ++counts[word_degree(w, m.n()).entries()];
    });
  }
  auto it = counts.find(m.entries());
  return it == counts.end() ? 0 : it->second;
}

long necklace_count(const DegreeVector& m) {
  if (m.is_zero()) throw std::invalid_argument("necklace_count needs m != 0");
  long total = 0;
  for (long d : divisors(m.gcd())) total += lyndon_count(m.divided_by(d));
  return total;
}

namespace {

bool rotation_minimal(const Word& w) {
  Word rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (std::lexicographical_compare(rot.begin(), rot.end(), w.begin(), w.end())) return false;
  }
  return true;
}

}  // namespace

std::vector<Word> necklaces(const DegreeVector& m) {
  if (m.is_zero()) throw std::invalid_argument("necklaces needs m != 0");
  Word w;
  for (int letter = 1; letter <= m.n(); ++letter)
    w.insert(w.end(), m.count(letter), letter);
  std::vector<Word> out;
  do {
    if (rotation_minimal(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::pair<Word, int> lyndon_power_factor(const Word& necklace) {
  if (necklace.empty()) throw std::invalid_argument("empty word");
  const int len = static_cast<int>(necklace.size());
  for (int p = 1; p <= len; ++p) {
    if (len % p != 0) continue;
    bool periodic = true;
    for (int i = p; i < len && periodic; ++i) periodic = necklace[i] == necklace[i % p];
    if (periodic) {
      Word root(necklace.begin(), necklace.begin() + p);
      if (!is_lyndon(root)) throw std::invalid_argument("word is not a necklace");
      return {root, len / p};
    }
  }
  throw std::logic_error("unreachable");
}

long lyndon_divisor_sum(const DegreeVector& v, long limit) {
  long total = 0;
  for (long k : divisors(v.gcd()))
    if (limit % k == 0) total += lyndon_count(v.divided_by(k));
  return total;
}

LyndonInequality lyndon_inequality(const DegreeVector& m) {
  if (m.nonzero_letters() < 2)
    throw std::invalid_argument("lyndon_inequality needs two nonzero entries");
  LyndonInequality r;
  for (long k : divisors(m.gcd())) r.lhs += lyndon_count(m.divided_by(k));
  for (int letter = 1; letter <= m.n(); ++letter)
    if (m.count(letter) > 0) r.rhs += lyndon_count(m.minus_letter(letter));
  r.equality = r.lhs == r.rhs;
  const PmCaseTag tag = classify(m).tag;
  const bool unit_pair = m.total() == 2 && m.nonzero_letters() == 2;
  r.expected_equality = tag != PmCaseTag::SingleLetter && tag != PmCaseTag::Generic && !unit_pair;
  return r;
}

}  // namespace nichols
