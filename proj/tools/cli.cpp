#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "fdl/fdl.hpp"
#include "selftest.hpp"

namespace fdl::cli {
namespace {

using Table = std::vector<std::vector<std::string>>;

// Columns padded to their widest cell, separated by two spaces.
void print_table(std::ostream& out, const Table& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void print_matrix(std::ostream& out, const FuzzyRelation& z) {
  Table t;
  t.push_back({""});
  for (const auto& c : z.cols()) t[0].push_back(c);
  for (std::size_t i = 0; i < z.row_count(); ++i) {
    t.push_back({z.rows()[i]});
    for (std::size_t j = 0; j < z.col_count(); ++j) t.back().push_back(z(i, j).to_string());
  }
  print_table(out, t);
}

KnowledgeBase load_kb_file(const std::string& path) {
  try {
    return load_kb(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.message(), e.position());
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  bool json = false;
  std::string model, left, right, relation, concept_text, element, features, mode = "fuzzy", out_file;
  std::string tbox, abox, fragment = "prime";
  unsigned depth = 3;
  bool prune = false;
};

FeatureSet features_of(const Options& o) { return FeatureSet::parse(o.features); }

int cmd_eval(const Options& o, std::ostream& out) {
  Interpretation m = load_interpretation_file(o.model);
  ConceptPtr c;
  try {
    c = parse_concept(o.concept_text);
  } catch (const InputError& e) {
    throw InputError("concept: " + e.message(), e.position());
  }
  FuzzySet s = eval_concept(m, c);
  std::vector<std::size_t> which;
  if (!o.element.empty()) which.push_back(m.index_of(o.element));
  else
    for (std::size_t x = 0; x < m.size(); ++x) which.push_back(x);

  if (o.json) {
    json doc;
    doc["concept"] = to_string(c);
    doc["values"] = json::object();
    for (auto x : which) doc["values"][m.domain()[x]] = s.values[x].to_string();
    out << doc.dump(2) << '\n';
  } else {
    Table t{{"element", "degree"}};
    for (auto x : which) t.push_back({m.domain()[x], s.values[x].to_string()});
    print_table(out, t);
  }
  return 0;
}

int cmd_bisim(const Options& o, std::ostream& out) {
  Interpretation l = load_interpretation_file(o.left), r = load_interpretation_file(o.right);
  CandidateRelation z = greatest_bisim(l, r, features_of(o), parse_mode(o.mode));
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    if (!(f << to_json(z).dump(2) << '\n')) throw InputError("cannot write '" + o.out_file + "'");
  }
  if (o.json) out << to_json(z).dump(2) << '\n';
  else print_matrix(out, z.z);
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  Interpretation l = load_interpretation_file(o.left), r = load_interpretation_file(o.right);
  CandidateRelation z = [&] {
    try {
      return relation_from_json(parse_json(read_file(o.relation)), l, r);
    } catch (const InputError& e) {
      throw InputError(o.relation + ": " + e.message(), e.position());
    }
  }();
  ConditionReport rep = check_bisim(l, r, z, features_of(o));
  if (o.json) {
    json doc;
    doc["satisfied"] = rep.satisfied();
    doc["violations"] = json::array();
    for (const auto& v : rep.violations)
      doc["violations"].push_back({{"condition", v.condition},
                                   {"x", v.x},
                                   {"x'", v.x2},
                                   {"detail", v.detail},
                                   {"lhs", v.lhs.to_string()},
                                   {"rhs", v.rhs.to_string()}});
    out << doc.dump(2) << '\n';
  } else if (rep.satisfied()) {
    out << "satisfied: all conditions hold\n";
  } else {
    out << "violated: " << rep.violations.size() << " condition instance(s)\n";
    Table t{{"condition", "x", "x'", "lhs", "rhs", "detail"}};
    for (const auto& v : rep.violations)
      t.push_back({v.condition, v.x, v.x2, v.lhs.to_string(), v.rhs.to_string(), v.detail});
    print_table(out, t);
  }
  return rep.satisfied() ? 0 : 1;
}

int cmd_bisimilar(const Options& o, std::ostream& out) {
  Interpretation l = load_interpretation_file(o.left), r = load_interpretation_file(o.right);
  BisimilarityResult res = bisimilar(l, r, features_of(o), parse_mode(o.mode));
  if (o.json) {
    json doc;
    doc["holds"] = res.holds;
    doc["failing_individual"] = res.failing_individual ? json(*res.failing_individual) : json(nullptr);
    doc["witness"] = to_json(res.witness);
    out << doc.dump(2) << '\n';
  } else {
    out << "bisimilar: " << yes_no(res.holds) << '\n';
    if (res.failing_individual) out << "failing individual: " << *res.failing_individual << '\n';
  }
  return res.holds ? 0 : 1;
}

int cmd_minimize(const Options& o, std::ostream& out, bool quotient_too) {
  Interpretation m = load_interpretation_file(o.model);
  FeatureSet f = features_of(o);
  if (!quotient_too || o.prune) m = prune_unreachable(m, f);
  if (quotient_too) m = quotient(m, f);
  out << to_json(m).dump(2) << '\n';
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
  if (o.tbox.empty() == o.abox.empty()) throw UsageError("validate needs exactly one of --tbox or --abox");
  Interpretation m = load_interpretation_file(o.model);
  KnowledgeBase kb = load_kb_file(o.tbox.empty() ? o.abox : o.tbox);
  ValidationResult res = o.tbox.empty() ? validates(m, kb.abox) : validates(m, kb.tbox);
  if (o.json) {
    json doc;
    doc["valid"] = res.valid;
    doc["failing_item"] = res.failing_item ? json(*res.failing_item) : json(nullptr);
    doc["element"] = res.element ? json(*res.element) : json(nullptr);
    out << doc.dump(2) << '\n';
  } else if (res.valid) {
    out << "valid\n";
  } else {
    out << "not valid: " << *res.failing_item;
    if (res.element) out << " fails at " << *res.element;
    out << '\n';
  }
  return res.valid ? 0 : 1;
}

int cmd_hm(const Options& o, std::ostream& out) {
  Interpretation l = load_interpretation_file(o.left), r = load_interpretation_file(o.right);
  Sublanguage frag;
  if (o.fragment == "prime") frag = Sublanguage::BasePrime;
  else if (o.fragment == "delta") frag = Sublanguage::DeltaPrime;
  else throw UsageError("--fragment must be prime or delta");
  HmResult res = hm_matrix(l, r, features_of(o), frag, o.depth);
  Mode mode = frag == Sublanguage::DeltaPrime ? Mode::Crisp : Mode::Fuzzy;

  if (o.json) {
    json doc;
    doc["matrix"] = to_json(CandidateRelation(res.matrix, mode));
    doc["separators"] = json::array();
    for (std::size_t x = 0; x < l.size(); ++x)
      for (std::size_t x2 = 0; x2 < r.size(); ++x2)
        if (const auto& s = res.separator(x, x2)) doc["separators"].push_back({l.domain()[x], r.domain()[x2], to_string(*s)});
    doc["depth"] = res.depth;
    doc["concepts"] = res.concepts;
    doc["saturated"] = res.saturated;
    doc["reached_bisimulation"] = res.reached_bisimulation;
    out << doc.dump(2) << '\n';
    return 0;
  }
  print_matrix(out, res.matrix);
  out << "\nconcepts examined: " << res.concepts << ", depth built: " << res.depth
      << ", saturated: " << yes_no(res.saturated) << ", equals greatest bisimulation: " << yes_no(res.reached_bisimulation)
      << "\n";
  Table t;
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t x2 = 0; x2 < r.size(); ++x2)
      if (const auto& s = res.separator(x, x2)) t.push_back({l.domain()[x], r.domain()[x2], to_string(*s)});
  if (!t.empty()) {
    out << "\nseparators:\n";
    t.insert(t.begin(), {"x", "x'", "concept"});
    print_table(out, t);
  }
  return 0;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  auto checks = selftest::fixture_checks();
  bool all = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  if (o.json) {
    json doc = json::array();
    for (const auto& c : checks) doc.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out << doc.dump(2) << '\n';
  } else {
    Table t{{"result", "check", "detail"}};
    for (const auto& c : checks) t.push_back({c.pass ? "PASS" : "FAIL", c.name, c.detail});
    print_table(out, t);
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy description logic bisimulation toolkit", "fdl"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_flag("--json", o.json, "Emit machine-readable JSON");

  auto features = [&](CLI::App* c) { c->add_option("--features", o.features, "Feature list, e.g. \"I,O,U,Self,Q2,N2\"")->required(); };
  auto pair = [&](CLI::App* c) {
    c->add_option("-l,--left", o.left, "Left model document")->required();
    c->add_option("-r,--right", o.right, "Right model document")->required();
  };
  auto mode = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "fuzzy or crisp")->check(CLI::IsMember({"fuzzy", "crisp"}));
  };
  // --json is also accepted after the subcommand.
  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "Emit machine-readable JSON"); };

  auto* eval = app.add_subcommand("eval", "Evaluate a concept on a model");
  eval->add_option("-m,--model", o.model, "Model document")->required();
  eval->add_option("-c,--concept", o.concept_text, "Concept expression")->required();
  eval->add_option("-e,--element", o.element, "Only this element");

  auto* bisim = app.add_subcommand("bisim", "Greatest bisimulation between two models");
  pair(bisim);
  features(bisim);
  mode(bisim);
  bisim->add_option("-o,--out", o.out_file, "Also write the relation document here");

  auto* check = app.add_subcommand("check", "Check a candidate relation against the bisimulation conditions");
  pair(check);
  check->add_option("-z,--relation", o.relation, "Relation document")->required();
  features(check);

  auto* bisimilar_cmd = app.add_subcommand("bisimilar", "Decide (strong) bisimilarity of two models");
  pair(bisimilar_cmd);
  features(bisimilar_cmd);
  mode(bisimilar_cmd);

  auto* minimize = app.add_subcommand("minimize", "Quotient a model by strong bisimilarity");
  minimize->add_option("-m,--model", o.model, "Model document")->required();
  features(minimize);
  minimize->add_flag("--prune", o.prune, "Drop unreachable elements first");

  auto* prune = app.add_subcommand("prune", "Drop elements unreachable from named individuals");
  prune->add_option("-m,--model", o.model, "Model document")->required();
  features(prune);

  auto* validate = app.add_subcommand("validate", "Check whether a model validates a TBox or an ABox");
  validate->add_option("-m,--model", o.model, "Model document")->required();
  auto* tb = validate->add_option("--tbox", o.tbox, "Knowledge-base document; its TBox is checked");
  auto* ab = validate->add_option("--abox", o.abox, "Knowledge-base document; its ABox is checked");
  tb->excludes(ab);

  auto* hm = app.add_subcommand("hm", "Indistinguishability matrix by enumerated concepts");
  pair(hm);
  features(hm);
  hm->add_option("--fragment", o.fragment, "prime or delta")->check(CLI::IsMember({"prime", "delta"}));
  hm->add_option("--depth", o.depth, "Maximum concept height");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the embedded fixture checks");

  for (auto* c : {eval, bisim, check, bisimilar_cmd, minimize, prune, validate, hm, selftest_cmd}) json_flag(c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "fdl: " << e.what() << "\nRun with --help for more information.\n";
    return 2;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*bisim) return cmd_bisim(o, out);
    if (*check) return cmd_check(o, out);
    if (*bisimilar_cmd) return cmd_bisimilar(o, out);
    if (*minimize) return cmd_minimize(o, out, true);
    if (*prune) return cmd_minimize(o, out, false);
    if (*validate) return cmd_validate(o, out);
    if (*hm) return cmd_hm(o, out);
    return cmd_selftest(o, out);
  } catch (const std::exception& e) {
    err << "fdl: error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fdl::cli
