#include "lieb/word.hpp"

#include <algorithm>

namespace lieb {

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alpha_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alpha_) throw domain_error("word requires an alphabet");
  if (letters_.empty()) throw domain_error("words are nonempty");
  for (Letter l : letters_)
    if (l.rank >= alpha_->size()) throw domain_error("letter rank out of range");
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (len == 0 || pos + len > letters_.size()) throw domain_error("subword out of range");
  return Word(alpha_, std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::concat(const Word& other) const {
  require_same_alphabet(alpha_, other.alpha_);
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
  return Word(alpha_, std::move(ls));
}

std::string Word::str() const {
  std::string out;
  bool dots = !alpha_->single_char_ids();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (dots && i) out += '.';
    out += alpha_->name(letters_[i]);
  }
  return out;
}

std::string Word::str_dotted() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '.';
    out += alpha_->name(letters_[i]);
  }
  return out;
}

std::strong_ordering compare_deglex(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet(), v.alphabet());
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  auto lu = u.letters(), lv = v.letters();
  for (std::size_t i = 0; i < lu.size(); ++i)
    if (lu[i] != lv[i]) return lu[i] <=> lv[i];
  return std::strong_ordering::equal;
}

bool is_alsw(const Word& w) {
  const auto ls = w.letters();
  const std::size_t n = ls.size();
  if (n == 1) return true;
  for (std::size_t k = 1; k < n; ++k) {
    // compare the shift starting at k against w, lexicographically
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = ls[(k + i) % n];
      Letter b = ls[i];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // shift equals w: periodic
    }
  }
  return true;
}

std::vector<Word> enumerate_alsw(const AlphabetPtr& alphabet, int max_degree) {
  if (max_degree < 1) throw domain_error("max_degree must be >= 1");
  const std::uint32_t k = static_cast<std::uint32_t>(alphabet->size());
  const std::size_t n = static_cast<std::size_t>(max_degree);
  std::vector<Word> out;
  // FKM over co-ranks: a word is an ALSW iff its co-rank image (r -> k-1-r)
  // is a Lyndon word in the usual smallest-among-rotations sense.
  std::vector<std::uint32_t> w{0};
  while (true) {
    {
      std::vector<Letter> ls(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) ls[i] = Letter{k - 1 - w[i]};
      out.emplace_back(alphabet, std::move(ls));
    }
    std::size_t m = w.size();
    w.resize(n);
    for (std::size_t i = m; i < n; ++i) w[i] = w[i - m];
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return DegLexGreater{}(b, a); });
  return out;
}

std::optional<std::size_t> find_subword(const Word& w, const Word& s, std::size_t from) {
  if (s.degree() > w.degree()) return std::nullopt;
  auto lw = w.letters(), ls = s.letters();
  for (std::size_t pos = from; pos + ls.size() <= lw.size(); ++pos) {
    bool hit = true;
    for (std::size_t i = 0; i < ls.size(); ++i)
      if (lw[pos + i] != ls[i]) {
        hit = false;
        break;
      }
    if (hit) return pos;
  }
  return std::nullopt;
}

std::vector<Word> alsw_factorization(const Word& w) {
  // Duval's factorization on the co-rank image.
  const auto ls = w.letters();
  const std::size_t n = ls.size();
  auto co = [&](std::size_t i) { return -static_cast<long>(ls[i].rank); };
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && co(k) <= co(j)) {
      if (co(k) < co(j))
        k = i;
      else
        ++k;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.subword(i, j - k));
      i += j - k;
    }
  }
  return out;
}

}  // namespace lieb
