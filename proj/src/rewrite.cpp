#include "lieb/rewrite.hpp"

#include <algorithm>

#include "lieb/parallel.hpp"

namespace lieb {

namespace {

Rule make_rule(const AlphabetPtr& alpha, const Polynomial& p, std::string family) {
  require_same_alphabet(alpha, p.alphabet());
  if (p.is_zero()) throw domain_error("zero polynomial cannot be a rule");
  if (!is_lie_element(p)) throw not_a_lie_element("rule is not a Lie element: " + p.str());
  Polynomial m = p.monic();
  Word lead = m.leading().first;
  if (!is_alsw(lead)) throw internal_error("rule leading word is not an ALSW: " + lead.str());
  return Rule{std::move(m), std::move(lead), std::move(family)};
}

void sort_rules(std::vector<Rule>& rules) {
  std::stable_sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    return DegLexGreater{}(b.lead, a.lead);
  });
}

}  // namespace

RewriteSystem::RewriteSystem(AlphabetPtr alphabet, std::vector<Rule> rules)
    : alpha_(std::move(alphabet)), rules_(std::move(rules)) {
  for (const Rule& r : rules_) {
    require_same_alphabet(alpha_, r.poly.alphabet());
    auto [lw, lc] = r.poly.leading();
    if (lc != 1 || !(lw == r.lead) || !is_alsw(lw))
      throw internal_error("malformed rule: " + r.poly.str());
  }
  sort_rules(rules_);
}

RewriteSystem RewriteSystem::from_polynomials(const AlphabetPtr& alphabet,
                                              std::vector<Polynomial> polys,
                                              std::vector<std::string> families) {
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::string fam = i < families.size() ? families[i] : "user";
    rules.push_back(make_rule(alphabet, polys[i], std::move(fam)));
  }
  return RewriteSystem(alphabet, std::move(rules));
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_reduction(
    const Word& w) const {
  for (std::size_t i = 0; i < rules_.size(); ++i)
    if (auto pos = find_subword(w, rules_[i].lead)) return std::make_pair(i, *pos);
  return std::nullopt;
}

namespace {

// coeff * [a s b]_{s-lead}: expansion of the special bracketing of w relative
// to the occurrence, with the rule polynomial substituted at the slot.  Monic
// with leading word w by the relative-bracketing contract (checked).
Polynomial bracketed_rule(const Word& w, std::size_t pos, const Rule& r) {
  RelativeBracketing rb = special_bracketing(w, pos, r.lead.degree());
  Polynomial e = expand_with_slot(rb.tree, rb.slot, r.poly);
  auto [lw, lc] = e.leading();
  if (!(lw == w) || lc != 1)
    throw internal_error("relative bracketing contract failed at " + w.str());
  return e;
}

}  // namespace

Polynomial reduce(const Polynomial& f, const RewriteSystem& s,
                  std::vector<ReductionStep>* trace) {
  require_same_alphabet(f.alphabet(), s.alphabet());
  Polynomial normal(f.alphabet());
  Polynomial rest = f;
  while (!rest.is_zero()) {
    auto [w, c] = rest.leading();
    if (!is_alsw(w))
      throw not_a_lie_element("reduce needs a Lie polynomial; leading word " + w.str());
    if (auto hit = s.find_reduction(w)) {
      auto [ri, pos] = *hit;
      rest -= c * bracketed_rule(w, pos, s.rule(ri));
      if (trace) trace->push_back({ri, w, pos, c});
    } else {
      Polynomial head = c * expand(standard_bracketing(w));
      normal += head;
      rest -= head;
    }
  }
  return normal;
}

bool member(const Polynomial& f, const RewriteSystem& s) { return reduce(f, s).is_zero(); }

CompositionReport intersection_composition(const RewriteSystem& s, std::size_t f, std::size_t g,
                                           const Word& w, bool with_trace) {
  const Rule& rf = s.rule(f);
  const Rule& rg = s.rule(g);
  const std::size_t nf = rf.lead.degree(), ng = rg.lead.degree(), nw = w.degree();
  if (nw >= nf + ng || nw <= nf || nw <= ng)
    throw shape_error("no genuine overlap in " + w.str());
  if (!(w.subword(0, nf) == rf.lead))
    throw shape_error(rf.lead.str() + " is not a prefix of " + w.str());
  if (!(w.subword(nw - ng, ng) == rg.lead))
    throw shape_error(rg.lead.str() + " is not a suffix of " + w.str());
  if (!is_alsw(w)) throw shape_error(w.str() + " is not an ALSW");

  Polynomial value = bracketed_rule(w, 0, rf) - bracketed_rule(w, nw - ng, rg);
  if (!value.is_zero() && compare_deglex(value.leading().first, w) >= 0)
    throw internal_error("composition value does not drop below " + w.str());
  std::vector<ReductionStep> trace;
  Polynomial residue = reduce(value, s, with_trace ? &trace : nullptr);
  return CompositionReport{CompositionReport::Kind::intersection, f,
                           g,       w,
                           std::move(value), std::move(residue),
                           std::move(trace)};
}

CompositionReport inclusion_composition(const RewriteSystem& s, std::size_t f, std::size_t g,
                                        std::size_t pos, bool with_trace) {
  const Rule& rf = s.rule(f);
  const Rule& rg = s.rule(g);
  const Word& w = rf.lead;
  if (pos + rg.lead.degree() > w.degree() || !(w.subword(pos, rg.lead.degree()) == rg.lead))
    throw shape_error("no occurrence of " + rg.lead.str() + " in " + w.str() + " at position " +
                      std::to_string(pos));
  Polynomial value = rf.poly - bracketed_rule(w, pos, rg);
  if (!value.is_zero() && compare_deglex(value.leading().first, w) >= 0)
    throw internal_error("composition value does not drop below " + w.str());
  std::vector<ReductionStep> trace;
  Polynomial residue = reduce(value, s, with_trace ? &trace : nullptr);
  return CompositionReport{CompositionReport::Kind::inclusion, f,
                           g,       w,
                           std::move(value), std::move(residue),
                           std::move(trace)};
}

CompositionScan all_compositions(const RewriteSystem& s, int max_degree, bool with_traces) {
  struct Candidate {
    bool intersection;
    std::size_t f, g;
    Word w;          // intersection only
    std::size_t pos; // inclusion only
  };
  CompositionScan scan;
  std::vector<Candidate> cands;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Word& fl = s.rule(i).lead;
      const Word& gl = s.rule(j).lead;
      const std::size_t nf = fl.degree(), ng = gl.degree();
      // genuine overlaps: a nonempty proper suffix of fl equals a prefix of gl
      for (std::size_t k = 1; k < std::min(nf, ng); ++k) {
        bool match = true;
        for (std::size_t t = 0; t < k; ++t)
          if (fl.at(nf - k + t) != gl.at(t)) {
            match = false;
            break;
          }
        if (!match) continue;
        Word w = fl.concat(gl.subword(k, ng - k));
        if (max_degree > 0 && static_cast<int>(w.degree()) > max_degree) {
          scan.candidates_above_cap = true;
          continue;
        }
        if (!is_alsw(w)) {
          ++scan.skipped_non_alsw;
          continue;
        }
        cands.push_back({true, i, j, w, 0});
      }
      // strict inclusions (self-inclusion excluded)
      if (i != j && ng < nf) {
        if (max_degree > 0 && static_cast<int>(nf) > max_degree) {
          scan.candidates_above_cap = true;
          continue;
        }
        std::size_t from = 0;
        while (auto pos = find_subword(fl, gl, from)) {
          cands.push_back({false, i, j, fl, *pos});
          from = *pos + 1;
        }
      }
    }
  }
  std::vector<std::optional<CompositionReport>> slots(cands.size());
  std::vector<std::exception_ptr> errors(cands.size());
  parallel_for(cands.size(), [&](std::size_t idx) {
    try {
      const Candidate& c = cands[idx];
      slots[idx] = c.intersection ? intersection_composition(s, c.f, c.g, c.w, with_traces)
                                  : inclusion_composition(s, c.f, c.g, c.pos, with_traces);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  });
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  scan.reports.reserve(slots.size());
  for (auto& slot : slots) scan.reports.push_back(std::move(*slot));
  return scan;
}

GsbCheck is_gsb(const RewriteSystem& s, int max_degree) {
  CompositionScan scan = all_compositions(s, max_degree);
  GsbCheck out;
  out.composition_count = scan.reports.size();
  for (auto& rep : scan.reports)
    if (!rep.residue.is_zero()) {
      out.ok = false;
      out.failures.push_back(rep);
    }
  return out;
}

RewriteSystem inter_reduce(const RewriteSystem& s) {
  std::vector<Rule> rules = s.rules();
  const int limit = 100000;
  for (int round = 0; round < limit; ++round) {
    sort_rules(rules);
    bool changed = false;
    for (std::size_t i = 0; i < rules.size() && !changed; ++i) {
      std::vector<Rule> others;
      others.reserve(rules.size() - 1);
      for (std::size_t j = 0; j < rules.size(); ++j)
        if (j != i) others.push_back(rules[j]);
      Polynomial r = reduce(rules[i].poly, RewriteSystem(s.alphabet(), std::move(others)));
      if (r == rules[i].poly) continue;
      changed = true;
      if (r.is_zero()) {
        rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        Polynomial m = r.monic();
        bool same_lead = m.leading().first == rules[i].lead;
        rules[i] = Rule{m, m.leading().first, same_lead ? rules[i].family : "derived"};
      }
    }
    if (!changed) return RewriteSystem(s.alphabet(), std::move(rules));
  }
  throw internal_error("inter-reduction did not stabilize");
}

CompletionResult complete(const RewriteSystem& s, int max_degree) {
  for (const Rule& r : s.rules())
    if (static_cast<int>(r.lead.degree()) > max_degree)
      throw domain_error("max_degree below an input rule degree");
  CompletionResult out{inter_reduce(s)};
  const int limit = 10000;
  for (;; ++out.rounds) {
    if (out.rounds > static_cast<std::size_t>(limit))
      throw internal_error("completion did not stabilize under the degree cap");
    CompositionScan scan = all_compositions(out.system, max_degree);
    out.candidates_above_cap = out.candidates_above_cap || scan.candidates_above_cap;
    std::vector<Rule> fresh = out.system.rules();
    bool grew = false;
    for (auto& rep : scan.reports)
      if (!rep.residue.is_zero()) {
        Polynomial m = rep.residue.monic();
        Word lead = m.leading().first;
        if (std::none_of(fresh.begin(), fresh.end(),
                         [&](const Rule& r) { return r.poly == m; })) {
          fresh.push_back(Rule{std::move(m), std::move(lead), "derived"});
          grew = true;
        }
      }
    if (!grew) break;
    out.system = inter_reduce(RewriteSystem(s.alphabet(), std::move(fresh)));
  }
  out.gsb_at_cap = true;
  for (const Rule& r : s.rules())
    if (!reduce(r.poly, out.system).is_zero())
      throw internal_error("completion changed the ideal: " + r.poly.str());
  return out;
}

std::vector<LieTree> irr_basis(const RewriteSystem& s, int max_degree) {
  std::vector<LieTree> out;
  for (const Word& w : enumerate_alsw(s.alphabet(), max_degree)) {
    bool reducible = false;
    for (const Rule& r : s.rules())
      if (find_subword(w, r.lead)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(standard_bracketing(w));
  }
  return out;
}

}  // namespace lieb
