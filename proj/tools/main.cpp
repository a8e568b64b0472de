// Command-line frontend: loads root-datum config files, dispatches the
// library operations, and prints one JSON report per invocation on stdout.
// Exit codes: 0 ok/verified, 1 failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kmb/bimodule.hpp"
#include "kmb/error.hpp"
#include "kmb/laurent.hpp"
#include "kmb/rootdata.hpp"
#include "kmb/schur.hpp"
#include "kmb/standard.hpp"
#include "kmb/steinberg.hpp"
#include "kmb/suites.hpp"
#include "kmb/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace kmb;

namespace {

// Failure surfaced as a structured error object instead of a bare panic.
// kind is ParseError / ValidationError / ComputationError / UsageError.
struct CliError {
  std::string kind;
  std::string code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& msg) {
  throw CliError{"UsageError", "BadInput", msg};
}

// ---------------------------------------------------------------------------
// Text formats shared by flags: words and subsets are comma-separated
// simple-root indices; the empty string (or "e" for words) is empty.

std::vector<int> parse_indices(const std::string& what, const std::string& s) {
  std::vector<int> out;
  if (s.empty() || s == "e") return out;
  size_t pos = 0;
  while (true) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw CliError{"ParseError", "ParseError", what + ": bad index \"" + tok + "\" in \"" + s + "\""};
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

ParabolicSubset parse_subset(const std::string& what, const std::string& s) {
  ParabolicSubset j = parse_indices(what, s);
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t c = s.find(sep, pos);
    out.push_back(s.substr(pos, c == std::string::npos ? std::string::npos : c - pos));
    if (c == std::string::npos) break;
    pos = c + 1;
  }
  return out;
}

json jword(const std::vector<int>& w) { return json(w); }

json jmatrix(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Config loading.

struct NamedAutomorphism {
  std::string name;
  DiagramAutomorphism g;
};

struct Config {
  std::string path;
  RootDatum datum;
  std::vector<NamedAutomorphism> automorphisms;
};

std::vector<IntVec> read_matrix(const std::string& path, const json& v, const std::string& key) {
  if (!v.is_array())
    throw CliError{"ValidationError", "BadInput", path + ": \"" + key + "\" must be a list of rows"};
  std::vector<IntVec> rows;
  for (const auto& r : v) {
    if (!r.is_array())
      throw CliError{"ValidationError", "BadInput", path + ": \"" + key + "\" rows must be lists"};
    IntVec row;
    for (const auto& x : r) {
      if (!x.is_number_integer())
        throw CliError{"ValidationError", "BadInput",
                       path + ": \"" + key + "\" entries must be integers"};
      row.push_back(x.get<Int>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat to_square_matrix(const std::string& path, const std::vector<IntVec>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw CliError{"ValidationError", "BadInput", path + ": automorphism matrix must be square"};
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Config parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"ParseError", "ParseError", path + ": cannot open file"};
  json doc;
  try {
    doc = json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CliError{"ParseError", "ParseError", path + ": " + e.what()};
  }
  if (!doc.is_object())
    throw CliError{"ParseError", "ParseError", path + ": top level must be an object"};

  static const std::set<std::string> allowed = {"rank", "simple_roots", "simple_coroots", "labels",
                                                "automorphisms"};
  for (const auto& item : doc.items())
    if (!allowed.count(item.key()))
      throw CliError{"ValidationError", "BadInput", path + ": unknown key \"" + item.key() + "\""};
  for (const char* key : {"rank", "simple_roots", "simple_coroots", "labels"})
    if (!doc.contains(key))
      throw CliError{"ValidationError", "BadInput", path + ": missing key \"" + std::string(key) + "\""};

  if (!doc["rank"].is_number_integer())
    throw CliError{"ValidationError", "BadInput", path + ": \"rank\" must be an integer"};
  const int rank = doc["rank"].get<int>();
  std::vector<IntVec> roots = read_matrix(path, doc["simple_roots"], "simple_roots");
  std::vector<IntVec> coroots = read_matrix(path, doc["simple_coroots"], "simple_coroots");
  if (!doc["labels"].is_array())
    throw CliError{"ValidationError", "BadInput", path + ": \"labels\" must be a list of strings"};
  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string())
      throw CliError{"ValidationError", "BadInput", path + ": \"labels\" must be a list of strings"};
    labels.push_back(l.get<std::string>());
  }

  Config cfg;
  cfg.path = path;
  try {
    cfg.datum = validate_datum(rank, std::move(roots), std::move(coroots), std::move(labels));
  } catch (const Error& e) {
    throw CliError{"ValidationError", err_name(e.code()), path + ": " + e.what()};
  }

  if (doc.contains("automorphisms")) {
    if (!doc["automorphisms"].is_array())
      throw CliError{"ValidationError", "BadInput", path + ": \"automorphisms\" must be a list"};
    int idx = 0;
    for (const auto& entry : doc["automorphisms"]) {
      std::string name = "g" + std::to_string(idx);
      const json* mat = &entry;
      if (entry.is_object()) {
        for (const auto& item : entry.items())
          if (item.key() != "name" && item.key() != "matrix")
            throw CliError{"ValidationError", "BadInput",
                           path + ": unknown automorphism key \"" + item.key() + "\""};
        if (entry.contains("name")) name = entry["name"].get<std::string>();
        if (!entry.contains("matrix"))
          throw CliError{"ValidationError", "BadInput", path + ": automorphism needs a matrix"};
        mat = &entry["matrix"];
      }
      try {
        IntMat m = to_square_matrix(path, read_matrix(path, *mat, "automorphisms"));
        cfg.automorphisms.push_back({name, validate_automorphism(cfg.datum, m)});
      } catch (const Error& e) {
        throw CliError{"ValidationError", err_name(e.code()), path + ": " + e.what()};
      }
      ++idx;
    }
  }
  return cfg;
}

const DiagramAutomorphism& automorphism_by_name(const Config& cfg, const std::string& name) {
  for (const auto& na : cfg.automorphisms)
    if (na.name == name) return na.g;
  usage_error("unknown automorphism \"" + name + "\" (config defines " +
              std::to_string(cfg.automorphisms.size()) + ")");
}

// ---------------------------------------------------------------------------
// Report plumbing. The digest covers the command and the canonicalized
// inputs, so identical invocations are recognizable from the report alone.

std::string digest(const std::string& command, const json& inputs) {
  const std::string bytes = command + "\n" + inputs.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void emit(const json& report, bool pretty) {
  std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
}

struct Flags {
  std::string config_path;
  bool pretty = false;
  int max_len = kDefaultMaxLen;
  int threads = 1;
  std::uint64_t seed = 0;
};

Config need_config(const Flags& f) {
  if (f.config_path.empty()) usage_error("this command requires --config PATH");
  return parse_config(f.config_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with root data: Weyl groups, invariant rings, and bimodules"};
  app.require_subcommand(0, 1);
  app.footer(
      "Formats:\n"
      "  word     comma-separated simple-root indices (\"0,1,0\"; \"\" or \"e\" is the identity)\n"
      "  subset   comma-separated simple-root indices (\"0,1\"; \"\" is the empty subset)\n"
      "  chain    parabolic subsets joined by ';' (\";0,1;\" alternates P <= Q >= P ...)\n"
      "  poly     terms \"c*x^[e1,...,er]\" joined by \" + \" (\"2*x^[1,0] + -1*x^[0,0]\")\n"
      "  config   JSON object with keys rank, simple_roots, simple_coroots, labels,\n"
      "           and optional automorphisms (row-major integer matrices)");

  Flags flags;
  app.add_option("--config", flags.config_path, "root-datum JSON file");
  app.add_flag("--pretty", flags.pretty, "indent the JSON report");
  app.add_option("--max-len", flags.max_len, "word-length bound for enumerations");
  app.add_option("--threads", flags.threads, "worker threads for verify");
  app.add_option("--seed", flags.seed, "seed for randomized suites");

  std::string weyl_word, weyl_subset;
  std::string cosets_left, cosets_right;
  std::string dem_word, dem_poly;
  std::string chr_weight, chr_subset;
  std::string stb_sub, stb_sup;
  std::string bs_sequence, bs_twists, bs_poly;
  std::string sch_left, sch_middle, sch_right, sch_word_a, sch_word_b, sch_sequence;
  std::string ver_suite, ver_types;

  CLI::App* c_validate = app.add_subcommand("validate", "validate a root-datum config file");
  CLI::App* c_weyl = app.add_subcommand("weyl", "canonicalize a word or enumerate a subgroup");
  CLI::Option* o_weyl_word = c_weyl->add_option("--word", weyl_word, "word to canonicalize");
  CLI::Option* o_weyl_subset =
      c_weyl->add_option("--subset", weyl_subset, "parabolic subset to enumerate (default full)");
  CLI::App* c_cosets = app.add_subcommand("cosets", "minimal double-coset representatives");
  c_cosets->add_option("--left", cosets_left, "left parabolic subset");
  c_cosets->add_option("--right", cosets_right, "right parabolic subset");
  CLI::App* c_dem = app.add_subcommand("demazure", "apply a Demazure operator word");
  c_dem->add_option("--word", dem_word, "reduced word of operators")->required();
  c_dem->add_option("--poly", dem_poly, "input polynomial")->required();
  CLI::App* c_chr = app.add_subcommand("character", "Weyl character of a dominant weight");
  c_chr->add_option("--weight", chr_weight, "dominant weight coordinates")->required();
  CLI::Option* o_chr_subset =
      c_chr->add_option("--subset", chr_subset, "parabolic subset (default full)");
  CLI::App* c_stb = app.add_subcommand("steinberg", "relative invariant-ring basis");
  c_stb->add_option("--sub", stb_sub, "inner parabolic subset");
  CLI::Option* o_stb_sup =
      c_stb->add_option("--sup", stb_sup, "outer parabolic subset (default full)");
  CLI::App* c_bs = app.add_subcommand("bsbim", "build a Bott-Samelson bimodule");
  c_bs->add_option("--sequence", bs_sequence, "parabolic chain")->required();
  c_bs->add_option("--twists", bs_twists, "automorphism names joined by ';', one per step");
  CLI::Option* o_bs_poly = c_bs->add_option("--poly", bs_poly, "also reduce this right action");
  CLI::App* c_sch = app.add_subcommand("schur", "convolve double cosets or rank a chain");
  c_sch->add_option("--left", sch_left, "left parabolic subset");
  c_sch->add_option("--middle", sch_middle, "shared middle parabolic subset");
  c_sch->add_option("--right", sch_right, "right parabolic subset");
  CLI::Option* o_sch_a = c_sch->add_option("--word-a", sch_word_a, "minimal rep of the left coset");
  CLI::Option* o_sch_b = c_sch->add_option("--word-b", sch_word_b, "minimal rep of the right coset");
  CLI::Option* o_sch_seq = c_sch->add_option("--sequence", sch_sequence, "chain for the rank oracle");
  CLI::App* c_ver = app.add_subcommand("verify", "run a verification suite");
  c_ver->add_option("--suite", ver_suite, "suite name, or \"all\"")->required();
  c_ver->add_option("--types", ver_types, "comma-separated datum types");

  for (CLI::App* sub :
       {c_validate, c_weyl, c_cosets, c_dem, c_chr, c_stb, c_bs, c_sch, c_ver})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    json report;
    report["command"] = "";
    report["error"] = {{"kind", "UsageError"}, {"code", "BadInput"}, {"message", e.what()}};
    report["status"] = "failed";
    emit(report, flags.pretty);
    return 2;
  }

  const auto picked = app.get_subcommands();
  std::string command = picked.empty() ? "" : picked.front()->get_name();
  const auto t0 = std::chrono::steady_clock::now();

  json inputs = json::object();
  json results = json::object();
  std::string status = "ok";

  try {
    if (command.empty()) usage_error("expected a subcommand (see --help)");
    if (!flags.config_path.empty()) inputs["config"] = flags.config_path;

    if (command == "validate") {
      Config cfg = need_config(flags);
      results["rank"] = cfg.datum.rank;
      results["cartan"] = jmatrix(cartan_matrix(cfg.datum));
      results["labels"] = cfg.datum.labels;
      results["finite_type"] = is_finite_type(cfg.datum, full_subset(cfg.datum));
      json names = json::array();
      for (const auto& na : cfg.automorphisms) names.push_back(na.name);
      results["automorphisms"] = names;
    } else if (command == "weyl") {
      Config cfg = need_config(flags);
      if (o_weyl_word->count()) {
        std::vector<int> w = parse_indices("--word", weyl_word);
        inputs["word"] = jword(w);
        WeylElement e = element_from_word(cfg.datum, w, flags.max_len);
        results["word"] = jword(e.word);
        results["length"] = e.length();
        results["reduced_input"] = static_cast<int>(w.size()) == e.length();
        results["action"] = jmatrix(e.action);
      } else {
        ParabolicSubset j = o_weyl_subset->count() ? parse_subset("--subset", weyl_subset)
                                                   : full_subset(cfg.datum);
        inputs["subset"] = json(j);
        inputs["max_len"] = flags.max_len;
        bool complete = false;
        auto elems = enumerate_group(cfg.datum, j, flags.max_len, &complete);
        results["subset"] = json(j);
        results["count"] = elems.size();
        results["complete"] = complete;
        json words = json::array();
        for (const auto& e : elems) words.push_back(jword(e.word));
        results["elements"] = words;
      }
    } else if (command == "cosets") {
      Config cfg = need_config(flags);
      ParabolicSubset j = parse_subset("--left", cosets_left);
      ParabolicSubset k = parse_subset("--right", cosets_right);
      inputs["left"] = json(j);
      inputs["right"] = json(k);
      inputs["max_len"] = flags.max_len;
      CosetTable table = double_coset_table(cfg.datum, j, k, flags.max_len);
      results["left"] = json(table.left);
      results["right"] = json(table.right);
      results["count"] = table.reps.size();
      results["complete"] = table.complete;
      json reps = json::array();
      for (const auto& e : table.reps) reps.push_back(jword(e.word));
      results["reps"] = reps;
    } else if (command == "demazure") {
      Config cfg = need_config(flags);
      std::vector<int> w = parse_indices("--word", dem_word);
      inputs["word"] = jword(w);
      inputs["poly"] = dem_poly;
      LaurentPoly f = lp_parse(cfg.datum.rank, dem_poly);
      results["poly"] = lp_format(demazure_word(cfg.datum, w, f));
    } else if (command == "character") {
      Config cfg = need_config(flags);
      IntVec lambda;
      for (int x : parse_indices("--weight", chr_weight)) lambda.push_back(x);
      if (static_cast<int>(lambda.size()) != cfg.datum.rank)
        usage_error("--weight needs exactly rank = " + std::to_string(cfg.datum.rank) +
                    " coordinates");
      ParabolicSubset j = o_chr_subset->count() ? parse_subset("--subset", chr_subset)
                                                : full_subset(cfg.datum);
      inputs["weight"] = json(lambda);
      inputs["subset"] = json(j);
      LaurentPoly c = weyl_character(cfg.datum, j, lambda);
      results["character"] = lp_format(c);
      results["dimension"] = evaluate_at_one(c).str();
    } else if (command == "steinberg") {
      Config cfg = need_config(flags);
      ParabolicSubset sub = parse_subset("--sub", stb_sub);
      ParabolicSubset sup =
          o_stb_sup->count() ? parse_subset("--sup", stb_sup) : full_subset(cfg.datum);
      inputs["sub"] = json(sub);
      inputs["sup"] = json(sup);
      RelativeBasis rb = steinberg_basis(cfg.datum, sub, sup);
      LaurentPoly unit = verify_basis(rb);
      results["size"] = rb.size();
      json reps = json::array(), basis = json::array(), dual = json::array();
      for (int i = 0; i < rb.size(); ++i) {
        reps.push_back(jword(rb.reps()[i].word));
        basis.push_back(lp_format(rb.basis()[i]));
        dual.push_back(lp_format(rb.dual()[i]));
      }
      results["reps"] = reps;
      results["basis"] = basis;
      results["dual"] = dual;
      results["unit"] = lp_format(unit);
    } else if (command == "bsbim") {
      Config cfg = need_config(flags);
      std::vector<ParabolicSubset> chain;
      for (const std::string& part : split(bs_sequence, ';'))
        chain.push_back(parse_subset("--sequence", part));
      inputs["sequence"] = json(chain);
      BSSequence seq = plain_sequence(cfg.datum, chain);
      if (!bs_twists.empty()) {
        std::vector<std::string> names = split(bs_twists, ';');
        if (static_cast<int>(names.size()) != seq.steps())
          usage_error("--twists needs one entry per step (" + std::to_string(seq.steps()) + ")");
        for (int i = 0; i < seq.steps(); ++i)
          if (!names[i].empty()) seq.twists[static_cast<size_t>(i)] = automorphism_by_name(cfg, names[i]);
        inputs["twists"] = json(names);
      }
      BSBimodule m(cfg.datum, seq);
      results["steps"] = m.seq().steps();
      results["rank"] = m.rank();
      results["labels"] = json(m.basis_labels());
      if (o_bs_poly->count()) {
        inputs["poly"] = bs_poly;
        PolyMatrix a = m.right_act(lp_parse(cfg.datum.rank, bs_poly));
        json rows = json::array();
        for (const auto& row : a) {
          json r = json::array();
          for (const auto& p : row) r.push_back(lp_format(p));
          rows.push_back(r);
        }
        results["matrix"] = rows;
      }
    } else if (command == "schur") {
      Config cfg = need_config(flags);
      if (o_sch_seq->count()) {
        if (o_sch_a->count() || o_sch_b->count())
          usage_error("--sequence and --word-a/--word-b are mutually exclusive");
        std::vector<ParabolicSubset> chain;
        for (const std::string& part : split(sch_sequence, ';'))
          chain.push_back(parse_subset("--sequence", part));
        inputs["sequence"] = json(chain);
        results["rank"] = rank_oracle(cfg.datum, plain_sequence(cfg.datum, chain));
      } else {
        if (!o_sch_a->count() || !o_sch_b->count())
          usage_error("schur needs either --sequence or both --word-a and --word-b");
        ParabolicSubset j = parse_subset("--left", sch_left);
        ParabolicSubset k = parse_subset("--middle", sch_middle);
        ParabolicSubset l = parse_subset("--right", sch_right);
        std::vector<int> wa = parse_indices("--word-a", sch_word_a);
        std::vector<int> wb = parse_indices("--word-b", sch_word_b);
        inputs["left"] = json(j);
        inputs["middle"] = json(k);
        inputs["right"] = json(l);
        inputs["word_a"] = jword(wa);
        inputs["word_b"] = jword(wb);
        CosetCombination a =
            coset_of(cfg.datum, j, k, element_from_word(cfg.datum, wa, flags.max_len));
        CosetCombination b =
            coset_of(cfg.datum, k, l, element_from_word(cfg.datum, wb, flags.max_len));
        CosetCombination c = convolve(cfg.datum, a, b);
        json coeffs = json::array();
        for (const auto& [word, coeff] : c.coeffs)
          coeffs.push_back(json{{"word", jword(word)}, {"coeff", coeff.str()}});
        results["coeffs"] = coeffs;
      }
    } else if (command == "verify") {
      std::vector<std::string> suites;
      if (ver_suite == "all")
        suites = suite_names();
      else
        suites.push_back(ver_suite);
      SuiteOptions opts;
      if (!ver_types.empty())
        for (const std::string& t : split(ver_types, ',')) opts.types.push_back(t);
      opts.seed = flags.seed;
      opts.threads = flags.threads;
      inputs["suites"] = json(suites);
      inputs["types"] = json(opts.types);
      inputs["seed"] = opts.seed;
      bool all_passed = true;
      json rows = json::array();
      json timings;
      for (const std::string& name : suites) {
        SuiteResult r = run_suite(name, opts);
        all_passed = all_passed && r.passed;
        rows.push_back(json{{"name", r.name},
                            {"passed", r.passed},
                            {"checks", r.checks},
                            {"detail", r.detail}});
        timings[r.name] = r.seconds;
      }
      results["suites"] = rows;
      results["passed"] = all_passed;
      results["suite_seconds"] = timings;  // moved under timing below
      status = all_passed ? "verified" : "failed";
    }
  } catch (const CliError& e) {
    json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["error"] = {{"kind", e.kind}, {"code", e.code}, {"message", e.message}};
    report["status"] = "failed";
    emit(report, flags.pretty);
    return e.kind == "UsageError" ? 2 : 1;
  } catch (const Error& e) {
    json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["error"] = {
        {"kind", "ComputationError"}, {"code", err_name(e.code())}, {"message", e.what()}};
    report["status"] = "failed";
    emit(report, flags.pretty);
    return 1;
  } catch (const std::exception& e) {
    json report;
    report["command"] = command;
    report["error"] = {{"kind", "InternalError"}, {"code", "BadInput"}, {"message", e.what()}};
    report["status"] = "failed";
    emit(report, flags.pretty);
    return 1;
  }

  // Timing lives outside the deterministic payload; everything else is a
  // pure function of the inputs.
  json timing;
  if (results.contains("suite_seconds")) {
    timing["suites"] = results["suite_seconds"];
    results.erase("suite_seconds");
  }
  const auto t1 = std::chrono::steady_clock::now();
  timing["seconds"] = std::chrono::duration<double>(t1 - t0).count();

  json report;
  report["command"] = command;
  report["inputs"] = inputs;
  report["digest"] = digest(command, inputs);
  report["results"] = results;
  report["status"] = status;
  report["timing"] = timing;
  emit(report, flags.pretty);
  return status == "failed" ? 1 : 0;
}
