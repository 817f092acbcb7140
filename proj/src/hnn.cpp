#include "lieb/hnn.hpp"

#include <algorithm>

#include "lieb/replication.hpp"

namespace lieb {

VecR VecSpan::residue(VecR v) const {
  if (v.size() != dim_) throw dimension_mismatch("vector size");
  for (const auto& [pivot, row] : rows_)
    if (v(pivot) != 0) v -= v(pivot) * row;
  return v;
}

bool VecSpan::insert(VecR v) {
  v = residue(std::move(v));
  Eigen::Index pivot = -1;
  for (Eigen::Index i = 0; i < dim_; ++i)
    if (v(i) != 0) {
      pivot = i;
      break;
    }
  if (pivot < 0) return false;
  v /= v(pivot);
  // keep rows reduced against the new pivot
  for (auto& [p, row] : rows_)
    if (row(pivot) != 0) row -= row(pivot) * v;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<VecR> h0_span(const LeibnizTable& t) {
  std::vector<VecR> out;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i; j < t.dim(); ++j)
      out.push_back(t.product(i, j) + t.product(j, i));
  return out;
}

namespace {

std::vector<std::string> fresh_names(const std::vector<std::string>& taken, std::size_t count) {
  std::vector<std::string> out;
  int next = 1;
  while (out.size() < count) {
    std::string cand = "h" + std::to_string(next++);
    if (std::find(taken.begin(), taken.end(), cand) == taken.end()) out.push_back(cand);
  }
  return out;
}

// The generalized adaptation: an invertible basis change after which the
// letters at the returned positions span `kill`.
H0Adaptation adapt_with_kill(const LeibnizTable& t, const SubalgebraSpec& a,
                             const DerivationSpec& d, const DerivationSpec& dp,
                             const std::vector<VecR>& kill) {
  const std::size_t n = t.dim();
  const auto nn = static_cast<Eigen::Index>(n);
  VecSpan kill_span(nn);
  for (const VecR& v : kill) kill_span.insert(v);

  auto unit = [&](std::size_t i) {
    VecR v = VecR::Zero(nn);
    v(static_cast<Eigen::Index>(i)) = 1;
    return v;
  };

  // kill basis, preferring the user's own basis vectors
  std::vector<VecR> kbasis;
  VecSpan kb(nn);
  for (std::size_t i = 0; i < n; ++i)
    if (kill_span.contains(unit(i)) && kb.insert(unit(i))) kbasis.push_back(unit(i));
  for (const VecR& v : kill)
    if (kb.insert(v)) kbasis.push_back(v);

  // complement, greedily from the user's basis
  std::vector<VecR> comp;
  VecSpan filled = kb;
  for (std::size_t i = 0; i < n; ++i)
    if (filled.insert(unit(i))) comp.push_back(unit(i));
  if (comp.size() + kbasis.size() != n) throw internal_error("basis adaptation miscounted");

  std::vector<VecR> adapted = comp;
  adapted.insert(adapted.end(), kbasis.begin(), kbasis.end());

  H0Adaptation out{
      {}, columns(adapted, nn), {}, t, a, d, dp};
  for (std::size_t k = comp.size(); k < n; ++k) out.x0_positions.push_back(k);

  // names: keep the user's name when the vector is a unit vector
  std::vector<std::string> names(n);
  std::size_t synthetic = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::Index hot = -1;
    bool is_unit = false;
    for (Eigen::Index i = 0; i < nn; ++i)
      if (adapted[k](i) != 0) {
        if (hot < 0 && adapted[k](i) == 1) {
          hot = i;
          is_unit = true;
        } else {
          is_unit = false;
          break;
        }
      }
    if (is_unit)
      names[k] = t.names()[static_cast<std::size_t>(hot)];
    else
      ++synthetic;
  }
  if (synthetic) {
    auto extra = fresh_names(t.names(), synthetic);
    std::size_t e = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (names[k].empty()) names[k] = extra[e++];
  }
  out.names = names;

  // rewrite the structure constants
  MatR c = out.basis_change;
  Eigen::FullPivLU<MatR> lu(c);
  if (lu.rank() != nn) throw internal_error("basis change is singular");
  std::vector<std::vector<VecR>> cc(n, std::vector<VecR>(n, VecR::Zero(nn)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cc[i][j] = lu.solve(t.product(VecR(c.col(static_cast<Eigen::Index>(i))),
                                    VecR(c.col(static_cast<Eigen::Index>(j)))));
  out.table = LeibnizTable(names, std::move(cc));

  // subalgebra: Gauss-Jordan echelon of span(A) in adapted coordinates, pivot
  // at the greatest adapted letter, carrying the (anti-)derivation values
  // through the same row operations
  struct ARow {
    VecR vec, dval, dpval;
  };
  auto pivot_of = [&](const VecR& v) {
    Eigen::Index p = 0;
    while (p < nn && v(p) == 0) ++p;
    return p;
  };
  std::vector<ARow> rows;
  for (const VecR& g : a.generators) {
    ARow r{lu.solve(g), apply_map(t, a, d, g), apply_map(t, a, dp, g)};
    for (const ARow& prev : rows) {
      Eigen::Index p = pivot_of(prev.vec);
      if (r.vec(p) != 0) {
        Rational c0 = r.vec(p);
        r.vec -= c0 * prev.vec;
        r.dval -= c0 * prev.dval;
        r.dpval -= c0 * prev.dpval;
      }
    }
    Eigen::Index p = pivot_of(r.vec);
    if (p == nn) continue;
    Rational c0 = r.vec(p);
    r.vec /= c0;
    r.dval /= c0;
    r.dpval /= c0;
    for (ARow& prev : rows)
      if (prev.vec(p) != 0) {
        Rational cc = prev.vec(p);
        prev.vec -= cc * r.vec;
        prev.dval -= cc * r.dval;
        prev.dpval -= cc * r.dpval;
      }
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(),
            [&](const ARow& x, const ARow& y) { return pivot_of(x.vec) < pivot_of(y.vec); });
  out.subalgebra = SubalgebraSpec{};
  out.d = DerivationSpec{DerivationSpec::Kind::derivation, {}};
  out.dprime = DerivationSpec{DerivationSpec::Kind::anti_derivation, {}};
  for (const ARow& r : rows) {
    out.subalgebra.generators.push_back(r.vec);
    out.d.values.push_back(lu.solve(r.dval));
    out.dprime.values.push_back(lu.solve(r.dpval));
  }
  return out;
}

}  // namespace

H0Adaptation h0_and_adapt(const LeibnizTable& t, const SubalgebraSpec& a,
                          const DerivationSpec& d, const DerivationSpec& dp) {
  H0Adaptation out = adapt_with_kill(t, a, d, dp, h0_span(t));
  // reduction facts mu(X, X0) = 0 and mu(X0, X) c span(X0), consequences of
  // the Leibniz identity
  const std::size_t n = out.table.dim();
  VecSpan x0(static_cast<Eigen::Index>(n));
  for (std::size_t k : out.x0_positions) x0.insert(unit_vector(out.table, k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k : out.x0_positions) {
      if (!out.table.product(i, k).isZero())
        throw internal_error("reduction fact mu(X, X0) = 0 failed");
      if (!x0.contains(out.table.product(k, i)))
        throw internal_error("reduction fact mu(X0, X) c span(X0) failed");
    }
  return out;
}

AlphabetPtr hnn_alphabet(const std::vector<std::string>& base_names_desc) {
  std::vector<Alphabet::Entry> asc;
  for (auto it = base_names_desc.rbegin(); it != base_names_desc.rend(); ++it) {
    if (*it == "t") throw domain_error("basis name t is reserved for the stable letter");
    asc.push_back({*it, false});
  }
  asc.push_back({"t", false});
  for (auto it = base_names_desc.rbegin(); it != base_names_desc.rend(); ++it)
    asc.push_back({*it, true});
  asc.push_back({"t", true});
  return Alphabet::make(std::move(asc));
}

namespace {

struct LetterMap {
  AlphabetPtr alpha;
  std::size_t n;
  // adapted position k (0 = greatest) -> letters
  Letter undotted(std::size_t k) const { return Letter{static_cast<std::uint32_t>(n - 1 - k)}; }
  Letter dotted(std::size_t k) const { return Letter{static_cast<std::uint32_t>(2 * n - k)}; }
  Letter t() const { return Letter{static_cast<std::uint32_t>(n)}; }
  Letter tdot() const { return Letter{static_cast<std::uint32_t>(2 * n + 1)}; }

  Polynomial poly(const VecR& v, bool dot) const {
    Polynomial p(alpha);
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != 0)
        p += Polynomial::letter(alpha, dot ? dotted(static_cast<std::size_t>(i))
                                           : undotted(static_cast<std::size_t>(i)),
                                v(i));
    return p;
  }
  Polynomial letter_poly(Letter l) const { return Polynomial::letter(alpha, l); }
};

std::vector<Rule> emit_families(const LetterMap& lm, const H0Adaptation& ad) {
  std::vector<Rule> out;
  auto push = [&](const Polynomial& p, const std::string& fam) {
    if (p.is_zero()) return;
    Polynomial m = p.monic();
    out.push_back(Rule{m, m.leading().first, fam});
  };
  const std::size_t n = ad.table.dim();
  // (1)-(3): the multiplication table, dotted; all pairs of X
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial rel = bracket(lm.letter_poly(lm.dotted(i)), lm.letter_poly(lm.undotted(j))) -
                       lm.poly(ad.table.product(i, j), true);
      const char* fam = i == j ? "f3" : (i < j ? "f1" : "f2");  // position 0 is greatest
      push(rel, fam);
    }
  // (4)-(5): the stable letter against the subalgebra basis
  for (std::size_t k = 0; k < ad.subalgebra.generators.size(); ++k) {
    Polynomial adot = lm.poly(ad.subalgebra.generators[k], true);
    Polynomial g = bracket(adot, lm.letter_poly(lm.t())) - lm.poly(ad.d.values[k], true);
    push(g, "g");
    Polynomial a_plain = lm.poly(ad.subalgebra.generators[k], false);
    Polynomial h = bracket(lm.letter_poly(lm.tdot()), a_plain) - lm.poly(ad.dprime.values[k], true);
    push(h, "h");
  }
  // phi images
  std::vector<Rule> base = out;
  for (const Rule& r : base) push(phi(r.poly), "phi_" + r.family);
  // X0 letters
  for (std::size_t k : ad.x0_positions) push(lm.letter_poly(lm.undotted(k)), "x0");
  return out;
}

}  // namespace

HnnPresentation build_presentation(const LeibnizTable& t, const SubalgebraSpec& a,
                                   const DerivationSpec& d, const DerivationSpec& dp,
                                   bool validate) {
  std::string w;
  if (d.kind != DerivationSpec::Kind::derivation || dp.kind != DerivationSpec::Kind::anti_derivation)
    throw domain_error("expected a derivation and an anti-derivation");
  if (validate) {
    if (!check_leibniz(t, &w)) throw domain_error("not a Leibniz table; fails at " + w);
    if (!check_subalgebra(t, a, &w)) throw domain_error("not a subalgebra: " + w);
    if (!check_derivation(t, a, d, &w)) throw domain_error("derivation law fails at " + w);
    if (!check_derivation(t, a, dp, &w)) throw domain_error("anti-derivation law fails at " + w);
  }

  std::vector<std::string> warnings;
  std::vector<VecR> kill = h0_span(t);
  const auto nn = static_cast<Eigen::Index>(t.dim());

  // The derivation pair's symmetrized values d(a) + d'(a) are degree-one
  // consequences; the source text asserts they already lie in H0.  When they
  // do not, enlarge the kill space so X0 stays letter-spanned.
  {
    VecSpan h0(nn);
    for (const VecR& v : kill) h0.insert(v);
    bool extended = false;
    for (std::size_t k = 0; k < a.generators.size(); ++k) {
      VecR s = apply_map(t, a, d, a.generators[k]) + apply_map(t, a, dp, a.generators[k]);
      if (h0.insert(s)) {
        kill.push_back(s);
        extended = true;
      }
    }
    if (extended)
      warnings.push_back(
          "d(a) + d'(a) leaves span{[x,y]+[y,x]}; X0 was extended beyond H0 and the "
          "embedding theorem's hypothesis does not hold as printed");
  }

  for (std::size_t round = 0; round <= t.dim() + 1; ++round) {
    H0Adaptation ad = adapt_with_kill(t, a, d, dp, kill);
    AlphabetPtr alpha = hnn_alphabet(ad.names);
    LetterMap lm{alpha, t.dim()};
    std::vector<Rule> emitted = emit_families(lm, ad);
    RewriteSystem sys = inter_reduce(RewriteSystem(alpha, emitted));

    // degree-one consequences outside the current kill space force a rebuild
    bool rebuild = false;
    for (const Rule& r : sys.rules()) {
      if (r.lead.degree() != 1) continue;
      bool dotted_rule = false;
      VecR v = VecR::Zero(nn);
      for (const auto& [word, c] : r.poly.terms()) {
        Letter l = word.at(0);
        if (alpha->dotted(l) || l == lm.t()) {
          dotted_rule = true;
          break;
        }
        v(static_cast<Eigen::Index>(t.dim() - 1 - l.rank)) += c;  // adapted coords
      }
      if (dotted_rule) {
        warnings.push_back("a dotted degree-one rule appeared: the input data collapses part of L "
                           "and no embedding exists (rule " + r.poly.str() + ")");
        continue;
      }
      // back to user coordinates
      VecR user = ad.basis_change * v;
      VecSpan ks(nn);
      for (const VecR& kv : kill) ks.insert(kv);
      if (ks.insert(user)) {
        kill.push_back(user);
        rebuild = true;
      }
    }
    if (rebuild) {
      if (std::find(warnings.begin(), warnings.end(),
                    "degree-one consequences enlarged X0 during inter-reduction") == warnings.end())
        warnings.push_back("degree-one consequences enlarged X0 during inter-reduction");
      continue;
    }

    HnnPresentation p(alpha, std::move(ad), std::move(emitted), std::move(sys));
    for (std::size_t k : p.adapted.x0_positions) p.x0_letters.push_back(lm.undotted(k));
    p.warnings = warnings;
    return p;
  }
  throw internal_error("kill-space extension did not stabilize");
}

HnnVerification verify_gsb(const HnnPresentation& p, bool with_traces) {
  CompositionScan scan = all_compositions(p.rules, 0, with_traces);
  HnnVerification out;
  out.composition_count = scan.reports.size();
  out.reports = std::move(scan.reports);
  auto label = [&](const CompositionReport& rep) -> std::string {
    const std::string& ff = p.rules.rule(rep.f).family;
    const std::string& gf = p.rules.rule(rep.g).family;
    bool inter = rep.kind == CompositionReport::Kind::intersection;
    if (inter) {
      if (ff == "f1" && gf == "phi_f1") return "i";
      if (ff == "f1" && gf == "phi_f2") return "ii";
      if (ff == "f3" && gf == "phi_f1") return "iii";
      if (ff == "h" && gf == "phi_f1") return "iv";
      if (ff == "g" && gf == "phi_h") return "v";
    }
    return ff + "^" + gf + (inter ? "" : ":incl");
  };
  for (std::size_t i = 0; i < out.reports.size(); ++i) {
    out.cases[label(out.reports[i])].push_back(i);
    if (!out.reports[i].residue.is_zero()) out.ok = false;
  }
  // the five printed cases are always part of the classification
  for (const char* c : {"i", "ii", "iii", "iv", "v"}) out.cases.try_emplace(c);
  return out;
}

std::vector<Word> forbidden_subwords(const HnnPresentation& p) {
  const AlphabetPtr& alpha = p.alphabet;
  LetterMap lm{alpha, p.adapted.table.dim()};
  const std::size_t n = p.adapted.table.dim();
  std::vector<Word> out;
  auto push = [&](std::vector<Letter> ls) { out.emplace_back(alpha, std::move(ls)); };
  auto in_x0 = [&](std::size_t k) {
    return std::find(p.adapted.x0_positions.begin(), p.adapted.x0_positions.end(), k) !=
           p.adapted.x0_positions.end();
  };
  for (std::size_t k = 0; k < n; ++k)
    if (in_x0(k)) push({lm.undotted(k)});
  // xy for x > y in X \ X0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!in_x0(i) && !in_x0(j)) push({lm.undotted(i), lm.undotted(j)});
  // x'y and x'x for x in X, y in X \ X0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!in_x0(j)) push({lm.dotted(i), lm.undotted(j)});
  // a't, ta, t'a over the leading letters of the subalgebra basis
  for (const VecR& b : p.adapted.subalgebra.generators) {
    Eigen::Index pivot = 0;
    while (pivot < b.size() && b(pivot) == 0) ++pivot;
    auto k = static_cast<std::size_t>(pivot);
    push({lm.dotted(k), lm.t()});
    if (!in_x0(k)) {
      push({lm.t(), lm.undotted(k)});
      push({lm.tdot(), lm.undotted(k)});
    }
  }
  // degree-one collapse rules, if the input admitted any
  for (const Rule& r : p.rules.rules())
    if (r.lead.degree() == 1) push({r.lead.at(0)});
  return out;
}

std::vector<LieTree> normal_basis(const HnnPresentation& p, int max_degree) {
  std::vector<LieTree> irr = irr_basis(p.rules, max_degree);
  // independent characterization: filter by the forbidden subwords
  std::vector<Word> forbidden = forbidden_subwords(p);
  std::vector<Word> filtered;
  for (const Word& w : enumerate_alsw(p.alphabet, max_degree)) {
    bool bad = false;
    for (const Word& f : forbidden)
      if (find_subword(w, f)) {
        bad = true;
        break;
      }
    if (!bad) filtered.push_back(w);
  }
  if (filtered.size() != irr.size()) throw internal_error("normal-basis characterizations disagree");
  for (std::size_t i = 0; i < irr.size(); ++i)
    if (!(irr[i].underlying_word() == filtered[i]))
      throw internal_error("normal-basis characterizations disagree at " + filtered[i].str());
  return irr;
}

bool check_embedding(const HnnPresentation& p, std::string* why) {
  LetterMap lm{p.alphabet, p.adapted.table.dim()};
  const std::size_t n = p.adapted.table.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Word w(p.alphabet, {lm.dotted(i)});
    if (p.rules.find_reduction(w)) {
      if (why) *why = "dotted letter " + w.str() + " is not in normal form";
      return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial rel = bracket(lm.letter_poly(lm.dotted(i)), lm.letter_poly(lm.undotted(j))) -
                       lm.poly(p.adapted.table.product(i, j), true);
      if (!reduce(rel, p.rules).is_zero()) {
        if (why)
          *why = "product of basis pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") is not respected";
        return false;
      }
    }
  return true;
}

}  // namespace lieb
