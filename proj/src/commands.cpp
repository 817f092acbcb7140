#include "lieb/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "lieb/hnn.hpp"
#include "lieb/operads.hpp"
#include "lieb/presentation.hpp"
#include "lieb/replication.hpp"
#include "lieb/report.hpp"
#include "lieb/rewrite.hpp"
#include "lieb/span.hpp"

namespace lieb {

namespace {

constexpr const char* kOrderNote =
    "effective order t' > X' > t > X; the source text prints {t,t'} > X u X', which would not "
    "make the g-family leading words well-formed";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void deliver(const Report& r, const std::string& out_path, std::ostream& out) {
  std::string bytes = render_canonical(report_json(r));
  if (out_path.empty()) {
    out << bytes;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw error("cannot write " + out_path);
  f << bytes;
}

Json rules_json(const RewriteSystem& s) {
  Json arr = Json::array();
  for (const Rule& r : s.rules())
    arr.push_back(Json{{"family", r.family}, {"lead", r.lead.str()}, {"rule", r.poly.str()}});
  return arr;
}

Json trace_json(const std::vector<ReductionStep>& steps, const RewriteSystem& s) {
  Json arr = Json::array();
  for (const auto& st : steps)
    arr.push_back(Json{{"rule", s.rule(st.rule).poly.str()},
                       {"word", st.within.str()},
                       {"position", st.pos},
                       {"coefficient", to_string(st.coeff)}});
  return arr;
}

struct RuleSet {
  AlphabetPtr alphabet;
  std::vector<Polynomial> polys;
  std::vector<std::string> families;
  bool replicated = false;
};

// A rules input is either a presentation file with relations or a previously
// emitted report whose results carry "alphabet" and "rules".
RuleSet load_rules(const std::string& text) {
  RuleSet out;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j = Json::parse(text);
    const Json& res = j.at("results");
    out.alphabet = parse_alphabet_order(res.at("alphabet").get<std::string>());
    for (const Json& r : res.at("rules")) {
      if (r.is_object()) {
        out.polys.push_back(parse_polynomial(r.at("rule").get<std::string>(), out.alphabet));
        out.families.push_back(r.value("family", "user"));
      } else {
        out.polys.push_back(parse_polynomial(r.get<std::string>(), out.alphabet));
        out.families.push_back("user");
      }
    }
    return out;
  }
  PresentationFile pf = parse_presentation(text);
  if (pf.di_mode) {
    AlphabetPtr dbl = doubled_alphabet(pf.alphabet);
    std::vector<Polynomial> translated;
    for (const DiRelation& r : pf.di_relations) translated.push_back(translate_relation(r, dbl));
    out.alphabet = dbl;
    out.polys = replicate_system(translated);
    out.replicated = true;
    return out;
  }
  if (pf.relations.empty()) throw error("no relations in input");
  out.alphabet = pf.alphabet;
  out.polys = pf.relations;
  return out;
}

struct CommonFlags {
  std::string file;
  std::string expr;
  std::string out_path;
  int max_degree = 4;
  bool verbose = false;
  long long seed = 0;
  bool seed_set = false;
};

Report base_report(const std::string& command, const CommonFlags& f, const std::string& text) {
  Report r;
  r.command = command;
  r.input_path = f.file.empty() ? "-" : f.file;
  r.input_digest = fnv1a_hex(text);
  r.max_degree = f.max_degree;
  if (f.seed_set) r.seed = f.seed;
  return r;
}

int cmd_check(const CommonFlags& f, std::ostream& out) {
  std::string text = read_file(f.file);
  PresentationFile pf = parse_presentation(text);
  if (!pf.table) throw error("check needs kind and table sections");
  Report rep = base_report("check", f, text);
  rep.letter_order = pf.alphabet->order_string();
  Json checks = Json::object();
  bool ok = true;
  std::string w;
  bool lie = pf.kind == PresentationFile::Kind::lie;
  bool table_ok = lie ? check_lie(*pf.table, &w) : check_leibniz(*pf.table, &w);
  checks[lie ? "lie" : "leibniz"] = table_ok;
  if (!table_ok) checks["failure"] = w;
  ok = ok && table_ok;
  if (pf.subalgebra) {
    bool sub_ok = check_subalgebra(*pf.table, *pf.subalgebra, &w);
    checks["subalgebra"] = sub_ok;
    if (!sub_ok) checks["subalgebra_failure"] = w;
    ok = ok && sub_ok;
    if (pf.derivation) {
      bool der_ok = check_derivation(*pf.table, *pf.subalgebra, *pf.derivation, &w);
      checks["derivation"] = der_ok;
      if (!der_ok) checks["derivation_failure"] = w;
      ok = ok && der_ok;
    }
    if (pf.antiderivation) {
      bool anti_ok = check_derivation(*pf.table, *pf.subalgebra, *pf.antiderivation, &w);
      checks["antiderivation"] = anti_ok;
      if (!anti_ok) checks["antiderivation_failure"] = w;
      ok = ok && anti_ok;
    }
  }
  rep.results["dim"] = pf.table->dim();
  rep.results["checks"] = checks;
  rep.results["ok"] = ok;
  deliver(rep, f.out_path, out);
  return ok ? 0 : 1;
}

// Presentation data with CLI defaults: A = L and zero maps unless declared.
struct HnnInput {
  LeibnizTable table;
  SubalgebraSpec subalgebra;
  DerivationSpec d, dprime;
};

HnnInput hnn_input(const PresentationFile& pf) {
  if (!pf.table) throw error("hnn needs kind and table sections");
  HnnInput in{*pf.table, {}, {DerivationSpec::Kind::derivation, {}},
              {DerivationSpec::Kind::anti_derivation, {}}};
  const auto n = static_cast<Eigen::Index>(pf.table->dim());
  if (pf.subalgebra)
    in.subalgebra = *pf.subalgebra;
  else
    for (Eigen::Index i = 0; i < n; ++i) {
      VecR v = VecR::Zero(n);
      v(i) = 1;
      in.subalgebra.generators.push_back(v);
    }
  in.d.values.assign(in.subalgebra.generators.size(), VecR::Zero(n));
  in.dprime.values.assign(in.subalgebra.generators.size(), VecR::Zero(n));
  if (pf.derivation) in.d = *pf.derivation;
  if (pf.antiderivation) in.dprime = *pf.antiderivation;
  return in;
}

int cmd_hnn(const CommonFlags& f, std::ostream& out) {
  std::string text = read_file(f.file);
  PresentationFile pf = parse_presentation(text);
  HnnInput in = hnn_input(pf);
  HnnPresentation p = build_presentation(in.table, in.subalgebra, in.d, in.dprime);
  HnnVerification v = verify_gsb(p, f.verbose);
  std::string why;
  bool embeds = check_embedding(p, &why);

  Report rep = base_report("hnn", f, text);
  rep.letter_order = p.alphabet->order_string();
  rep.results["alphabet"] = p.alphabet->order_string();
  rep.results["adapted_basis"] = p.adapted.names;
  {
    Json bc = Json::array();
    const MatR& c = p.adapted.basis_change;
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < c.cols(); ++j) row.push_back(to_string(c(i, j)));
      bc.push_back(row);
    }
    rep.results["basis_change"] = bc;
  }
  {
    Json x0 = Json::array();
    for (Letter l : p.x0_letters) x0.push_back(p.alphabet->name(l));
    rep.results["x0"] = x0;
  }
  {
    Json em = Json::array();
    for (const Rule& r : p.emitted)
      em.push_back(Json{{"family", r.family}, {"rule", r.poly.str()}});
    rep.results["emitted"] = em;
  }
  rep.results["rules"] = rules_json(p.rules);
  {
    Json cases = Json::object();
    for (const auto& [label, idx] : v.cases) cases[label] = idx.size();
    Json ver = Json{{"ok", v.ok}, {"composition_count", v.composition_count}, {"cases", cases}};
    if (f.verbose) {
      Json comps = Json::array();
      for (const auto& repc : v.reports)
        comps.push_back(Json{{"kind", repc.kind == CompositionReport::Kind::intersection
                                          ? "intersection"
                                          : "inclusion"},
                             {"f", repc.f},
                             {"g", repc.g},
                             {"w", repc.w.str()},
                             {"value", repc.value.str()},
                             {"residue", repc.residue.str()},
                             {"trace", trace_json(repc.trace, p.rules)}});
      ver["compositions"] = comps;
    } else {
      Json fails = Json::array();
      for (const auto& repc : v.reports)
        if (!repc.residue.is_zero())
          fails.push_back(Json{{"f", repc.f}, {"g", repc.g}, {"w", repc.w.str()},
                               {"residue", repc.residue.str()}});
      ver["failures"] = fails;
    }
    rep.results["verification"] = ver;
  }
  rep.results["embedding"] = embeds;
  if (!embeds) rep.results["embedding_failure"] = why;
  rep.warnings = p.warnings;
  rep.warnings.push_back(kOrderNote);
  deliver(rep, f.out_path, out);
  return v.ok && embeds ? 0 : 1;
}

int cmd_gsb(const CommonFlags& f, std::ostream& out) {
  std::string text = read_file(f.file);
  RuleSet rs = load_rules(text);
  RewriteSystem sys = RewriteSystem::from_polynomials(rs.alphabet, rs.polys, rs.families);
  CompletionResult comp = complete(sys, f.max_degree);
  GsbCheck check = is_gsb(comp.system, f.max_degree);

  Report rep = base_report("gsb", f, text);
  rep.letter_order = rs.alphabet->order_string();
  rep.results["alphabet"] = rs.alphabet->order_string();
  rep.results["input_rule_count"] = rs.polys.size();
  rep.results["replicated"] = rs.replicated;
  rep.results["rules"] = rules_json(comp.system);
  rep.results["is_gsb"] = check.ok;
  rep.results["composition_count"] = check.composition_count;
  rep.results["completion_rounds"] = comp.rounds;
  if (comp.candidates_above_cap) {
    rep.results["complete_above_cap"] = false;
    rep.warnings.push_back("incomplete above max_degree: overlap words beyond the cap were skipped");
  }
  if (f.verbose) {
    CompositionScan scan = all_compositions(comp.system, f.max_degree, true);
    Json comps = Json::array();
    for (const auto& repc : scan.reports)
      comps.push_back(Json{{"kind", repc.kind == CompositionReport::Kind::intersection
                                        ? "intersection"
                                        : "inclusion"},
                           {"f", repc.f},
                           {"g", repc.g},
                           {"w", repc.w.str()},
                           {"value", repc.value.str()},
                           {"residue", repc.residue.str()},
                           {"trace", trace_json(repc.trace, comp.system)}});
    rep.results["compositions"] = comps;
  }
  deliver(rep, f.out_path, out);
  return check.ok ? 0 : 1;
}

int cmd_basis(const CommonFlags& f, std::ostream& out) {
  std::string text = read_file(f.file);
  RuleSet rs = load_rules(text);
  RewriteSystem sys = inter_reduce(RewriteSystem::from_polynomials(rs.alphabet, rs.polys, rs.families));
  GsbCheck check = is_gsb(sys, f.max_degree);
  Report rep = base_report("basis", f, text);
  rep.letter_order = rs.alphabet->order_string();
  rep.results["is_gsb"] = check.ok;
  if (check.ok) {
    std::vector<LieTree> irr = irr_basis(sys, f.max_degree);
    Json words = Json::array();
    std::map<std::size_t, std::size_t> per_degree;
    for (const LieTree& t : irr) {
      words.push_back(Json{{"word", t.underlying_word().str()}, {"bracketing", t.str()}});
      ++per_degree[t.degree()];
    }
    rep.results["irr"] = words;
    Json counts = Json::object();
    for (auto [d, c] : per_degree) counts[std::to_string(d)] = c;
    rep.results["count_per_degree"] = counts;
    if (rs.replicated) {
      // the quotient di-algebra is carried by Irr n V: words with a dot
      Json vwords = Json::array();
      for (const LieTree& t : irr)
        if (v_membership(expand(t))) vwords.push_back(t.underlying_word().str());
      rep.results["irr_in_v"] = vwords;
    }
  }
  deliver(rep, f.out_path, out);
  return check.ok ? 0 : 1;
}

int cmd_normalize(const CommonFlags& f, bool member_only, std::ostream& out) {
  std::string text = read_file(f.file);
  RuleSet rs = load_rules(text);
  RewriteSystem sys = inter_reduce(RewriteSystem::from_polynomials(rs.alphabet, rs.polys, rs.families));
  Polynomial input = parse_polynomial(f.expr, rs.alphabet);
  int needed = f.max_degree;
  if (!input.is_zero()) needed = std::max(needed, input.degree());
  GsbCheck check = is_gsb(sys, needed);
  Report rep = base_report(member_only ? "member" : "normalize", f, text);
  rep.letter_order = rs.alphabet->order_string();
  rep.results["is_gsb"] = check.ok;
  rep.results["input"] = input.str();
  if (!check.ok) {
    rep.warnings.push_back("rule set is not a GSB at the required degree; run gsb first");
    deliver(rep, f.out_path, out);
    return 1;
  }
  std::vector<ReductionStep> trace;
  Polynomial nf = reduce(input, sys, f.verbose ? &trace : nullptr);
  if (member_only)
    rep.results["member"] = nf.is_zero();
  else
    rep.results["normal_form"] = nf.str();
  if (f.verbose) rep.results["trace"] = trace_json(trace, sys);
  deliver(rep, f.out_path, out);
  return 0;
}

int cmd_operad_check(const CommonFlags& f, std::ostream& out) {
  Report rep = base_report("operad-check", f, "");
  rep.letter_order = operad_variables(3)->order_string();
  Json table = Json::array();
  const char* sig[] = {"1", "(13)", "(23)"};
  const char* ops[] = {"mu", "mu^(12)"};
  for (int s = 0; s < 3; ++s)
    for (int o1 = 0; o1 < 2; ++o1)
      for (int o2 = 0; o2 < 2; ++o2) {
        OperadMonomial m{static_cast<CosetRep>(s), static_cast<BinaryOp>(o1),
                         static_cast<BinaryOp>(o2)};
        table.push_back(Json{{"element", std::string(sig[s]) + " (x) (" + ops[o1] + " (x) " +
                                             ops[o2] + ")"},
                             {"monomial", monomial_of(m).str()}});
      }
  rep.results["table"] = table;
  rep.results["jacobiator"] = jacobiator_check();
  {
    Json spot = Json::array();
    auto record = [&](const PermBasisElement& e, const std::vector<PermBasisElement>& args) {
      PermBasisElement got = perm_compose(e, args);
      PermBasisElement oracle = perm_compose_oracle(e, args);
      Json a = Json::array();
      for (const auto& x : args)
        a.push_back("e_" + std::to_string(x.index) + "^(" + std::to_string(x.arity) + ")");
      spot.push_back(Json{{"element", "e_" + std::to_string(e.index) + "^(" +
                                          std::to_string(e.arity) + ")"},
                          {"arguments", a},
                          {"result", "e_" + std::to_string(got.index) + "^(" +
                                         std::to_string(got.arity) + ")"},
                          {"oracle_agrees", got == oracle}});
    };
    record({1, 1}, {{3, 2}});
    record({2, 2}, {{2, 1}, {1, 1}});
    record({2, 1}, {{2, 1}, {1, 1}});
    rep.results["perm_composition"] = spot;
  }
  {
    Json dims = Json::object();
    Json lie = Json::array(), perm = Json::array(), dilie = Json::array();
    bool product_ok = true;
    for (int n = 1; n <= 4; ++n) {
      int dl = operad_dimension(OperadKind::lie, n);
      int dp = operad_dimension(OperadKind::perm, n);
      int dd = operad_dimension(OperadKind::dilie, n);
      lie.push_back(dl);
      perm.push_back(dp);
      dilie.push_back(dd);
      product_ok = product_ok && dd == dl * dp;
    }
    dims["lie"] = lie;
    dims["perm"] = perm;
    dims["dilie"] = dilie;
    dims["hadamard_product_law"] = product_ok;
    rep.results["dimensions"] = dims;
  }
  {
    auto d = derive_leibniz_product();
    rep.results["leibniz_product"] =
        Json{{"lhs", d.lhs}, {"rhs", d.rhs}, {"steps", d.steps}, {"matches", d.matches_expected}};
  }
  std::string example;
  if (perm_index_formula_discrepancy(4, &example))
    rep.warnings.push_back("printed Perm composition index m_1+..+m_(n-1)+j_i disagrees with the "
                           "expansion (correct: m_1+..+m_(i-1)+j_i); e.g. " +
                           example);
  deliver(rep, f.out_path, out);
  bool ok = rep.results["jacobiator"].get<bool>() &&
            rep.results["dimensions"]["hadamard_product_law"].get<bool>() &&
            rep.results["leibniz_product"]["matches"].get<bool>();
  return ok ? 0 : 1;
}

int cmd_dilie_basis(const CommonFlags& f, std::ostream& out) {
  std::string text = read_file(f.file);
  PresentationFile pf = parse_presentation(text);
  for (std::uint32_t i = 0; i < pf.alphabet->size(); ++i)
    if (pf.alphabet->dotted(Letter{i}))
      throw error("dilie-basis expects an undotted alphabet");
  std::vector<LieTree> basis = dilie_basis(pf.alphabet, f.max_degree);
  SpanBasis span(doubled_alphabet(pf.alphabet));
  std::size_t rank = 0;
  for (const LieTree& t : basis) rank += span.insert(expand(t)) ? 1 : 0;
  Report rep = base_report("dilie-basis", f, text);
  rep.letter_order = doubled_alphabet(pf.alphabet)->order_string();
  Json words = Json::array();
  std::map<std::size_t, std::size_t> per_degree;
  for (const LieTree& t : basis) {
    words.push_back(t.str());
    ++per_degree[t.degree()];
  }
  rep.results["words"] = words;
  Json counts = Json::object();
  for (auto [d, c] : per_degree) counts[std::to_string(d)] = c;
  rep.results["count_per_degree"] = counts;
  rep.results["independent"] = rank == basis.size();
  deliver(rep, f.out_path, out);
  return rank == basis.size() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner-Shirshov machinery for free Lie algebras, replicated (Leibniz) "
               "algebras and their HNN-extensions"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto add_common = [&](CLI::App* cmd, bool needs_file, bool needs_expr = false) {
    if (needs_file) cmd->add_option("file", flags.file, "presentation file or report")->required();
    if (needs_expr) cmd->add_option("expr", flags.expr, "expression")->required();
    cmd->add_option("--max-degree", flags.max_degree, "degree cap")->check(CLI::PositiveNumber);
    cmd->add_option("--out", flags.out_path, "write the report to a file");
    cmd->add_flag("--verbose", flags.verbose, "include reduction traces");
    cmd->add_option("--seed", flags.seed, "seed for randomized runs")
        ->each([&](const std::string&) { flags.seed_set = true; });
  };

  add_common(app.add_subcommand("check", "validate a presentation file"), true);
  add_common(app.add_subcommand("hnn", "build and verify the HNN-extension"), true);
  add_common(app.add_subcommand("gsb", "complete and verify a rewrite system"), true);
  add_common(app.add_subcommand("basis", "normal-form basis of a GSB"), true);
  add_common(app.add_subcommand("normalize", "normal form of an expression"), true, true);
  add_common(app.add_subcommand("member", "ideal membership of an expression"), true, true);
  add_common(app.add_subcommand("operad-check", "Lie/Perm operad verifications"), false);
  add_common(app.add_subcommand("dilie-basis", "left-normed free Leibniz basis"), true);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand("check")) return cmd_check(flags, out);
    if (app.got_subcommand("hnn")) return cmd_hnn(flags, out);
    if (app.got_subcommand("gsb")) return cmd_gsb(flags, out);
    if (app.got_subcommand("basis")) return cmd_basis(flags, out);
    if (app.got_subcommand("normalize")) return cmd_normalize(flags, false, out);
    if (app.got_subcommand("member")) return cmd_normalize(flags, true, out);
    if (app.got_subcommand("operad-check")) return cmd_operad_check(flags, out);
    if (app.got_subcommand("dilie-basis")) return cmd_dilie_basis(flags, out);
  } catch (const parse_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace lieb
