#include "lieb/tree.hpp"

#include <algorithm>
#include <functional>

namespace lieb {

struct TreeAccess {
  static LieTree wrap(AlphabetPtr a, LieTree::NodePtr n) { return LieTree(std::move(a), std::move(n)); }
  static const LieTree::NodePtr& root(const LieTree& t) { return t.root_; }
};

LieTree LieTree::leaf(AlphabetPtr alphabet, Letter l) {
  if (l.rank >= alphabet->size()) throw domain_error("letter rank out of range");
  auto n = std::make_shared<Node>();
  n->v = l;
  return LieTree(std::move(alphabet), std::move(n));
}

LieTree LieTree::node(const LieTree& left, const LieTree& right) {
  require_same_alphabet(left.alpha_, right.alpha_);
  auto n = std::make_shared<Node>();
  n->v = std::make_pair(left.root_, right.root_);
  return LieTree(left.alpha_, std::move(n));
}

bool LieTree::is_leaf() const { return std::holds_alternative<Letter>(root_->v); }

Letter LieTree::letter() const {
  if (!is_leaf()) throw domain_error("letter() on inner node");
  return std::get<Letter>(root_->v);
}

LieTree LieTree::left() const {
  if (is_leaf()) throw domain_error("left() on leaf");
  return LieTree(alpha_, std::get<1>(root_->v).first);
}

LieTree LieTree::right() const {
  if (is_leaf()) throw domain_error("right() on leaf");
  return LieTree(alpha_, std::get<1>(root_->v).second);
}

std::size_t LieTree::degree() const {
  if (is_leaf()) return 1;
  return left().degree() + right().degree();
}

Word LieTree::underlying_word() const {
  std::vector<Letter> ls;
  std::function<void(const LieTree&)> walk = [&](const LieTree& t) {
    if (t.is_leaf())
      ls.push_back(t.letter());
    else {
      walk(t.left());
      walk(t.right());
    }
  };
  walk(*this);
  return Word(alpha_, std::move(ls));
}

std::string LieTree::str() const {
  if (is_leaf()) return alpha_->name(letter());
  return "[" + left().str() + "," + right().str() + "]";
}

bool operator==(const LieTree& a, const LieTree& b) {
  if (!same_alphabet(a.alpha_, b.alpha_)) return false;
  std::function<bool(const LieTree&, const LieTree&)> eq = [&](const LieTree& x, const LieTree& y) {
    if (x.is_leaf() != y.is_leaf()) return false;
    if (x.is_leaf()) return x.letter() == y.letter();
    return eq(x.left(), y.left()) && eq(x.right(), y.right());
  };
  return eq(a, b);
}

bool is_nlsw(const LieTree& t) {
  if (t.is_leaf()) return true;
  if (!is_alsw(t.underlying_word())) return false;
  LieTree l = t.left(), r = t.right();
  if (!is_nlsw(l) || !is_nlsw(r)) return false;
  if (!l.is_leaf()) {
    Word v2 = l.right().underlying_word();
    if (compare_deglex(v2, r.underlying_word()) > 0) return false;
  }
  return true;
}

LieTree standard_bracketing(const Word& u) {
  if (!is_alsw(u)) throw domain_error("standard bracketing needs an ALSW: " + u.str());
  if (u.degree() == 1) return LieTree::leaf(u.alphabet(), u.at(0));
  for (std::size_t len = u.degree() - 1; len >= 1; --len) {
    Word suffix = u.subword(u.degree() - len, len);
    if (is_alsw(suffix))
      return LieTree::node(standard_bracketing(u.subword(0, u.degree() - len)),
                           standard_bracketing(suffix));
  }
  throw internal_error("no ALSW suffix found for " + u.str());
}

namespace {

struct Span {
  std::size_t pos;
  std::size_t len;
  std::vector<int> path;  // 0 = left, 1 = right
};

void collect_spans(const LieTree& t, std::size_t pos, std::vector<int>& path, std::vector<Span>& out) {
  out.push_back({pos, t.degree(), path});
  if (t.is_leaf()) return;
  std::size_t llen = t.left().degree();
  path.push_back(0);
  collect_spans(t.left(), pos, path, out);
  path.back() = 1;
  collect_spans(t.right(), pos + llen, path, out);
  path.pop_back();
}

LieTree replace_at(const LieTree& t, const std::vector<int>& path, std::size_t depth, const LieTree& sub) {
  if (depth == path.size()) return sub;
  if (path[depth] == 0) return LieTree::node(replace_at(t.left(), path, depth + 1, sub), t.right());
  return LieTree::node(t.left(), replace_at(t.right(), path, depth + 1, sub));
}

}  // namespace

RelativeBracketing special_bracketing(const Word& w, std::size_t pos, std::size_t len) {
  if (len == 0 || pos + len > w.degree()) throw domain_error("occurrence out of bounds");
  if (!is_alsw(w)) throw domain_error("special bracketing needs an ALSW: " + w.str());
  Word v = w.subword(pos, len);
  if (!is_alsw(v)) throw domain_error("subword is not an ALSW: " + v.str());

  LieTree base = standard_bracketing(w);
  std::vector<Span> spans;
  std::vector<int> path;
  collect_spans(base, 0, path, spans);

  // Minimal subtree starting exactly at the occurrence and covering it.
  const Span* best = nullptr;
  for (const Span& s : spans)
    if (s.pos == pos && s.len >= len && (!best || s.len < best->len)) best = &s;
  if (!best)
    throw internal_error("no covering subtree for " + v.str() + " in " + w.str());

  // Rebracket [vc] as [...[[v][c1]][c2]]...[ck]] over the ALSW factors of c.
  LieTree marked = standard_bracketing(v);
  const void* slot = marked.id();
  LieTree repl = marked;
  if (best->len > len) {
    Word c = w.subword(pos + len, best->len - len);
    for (const Word& f : alsw_factorization(c))
      repl = LieTree::node(repl, standard_bracketing(f));
  }
  return {replace_at(base, best->path, 0, repl), slot};
}

}  // namespace lieb
