// pgw: command-line driver for the p-group toolkit.
//
//   pgw validate FILE
//   pgw analyze FILE
//   pgw witness FILE
//   pgw pipeline FILE [--fallback]
//   pgw oracle FILE --search | --crosscheck OTHER
//   pgw corpus [--slow] [--refresh-expected]
//
// Exit codes: 0 ok, 1 no result, 2 parse error or unreadable input,
// 3 inconsistent presentation, 4 verification failure, 5 resource cap.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <CLI11.hpp>

#include "pgw/automorphism.hpp"
#include "pgw/corpus.hpp"
#include "pgw/errors.hpp"
#include "pgw/oracle.hpp"
#include "pgw/parallel.hpp"
#include "pgw/report.hpp"
#include "pgw/structure.hpp"
#include "pgw/witness.hpp"

namespace {

using pgw::Json;

constexpr int kOk = 0;
constexpr int kNoResult = 1;
constexpr int kParse = 2;
constexpr int kInconsistent = 3;
constexpr int kVerification = 4;
constexpr int kResource = 5;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

struct Options {
  std::string format = "human";
  unsigned jobs = 0;
  std::size_t max_order = 0;
};

struct Document {
  std::string command;
  Json inputs = Json::array();
  int status = kOk;
  Json result = Json::object();

  Json json() const {
    return Json{{"tool", "pgw"},
                {"version", "0.1.0"},
                {"command", command},
                {"inputs", inputs},
                {"status", status},
                {"result", result}};
  }
};

class Runner {
 public:
  explicit Runner(Options opts) : opts_(std::move(opts)) {}

  int emit(Document& doc) const {
    if (opts_.format == "json") {
      std::cout << doc.json().dump(2) << "\n";
    } else {
      std::cout << pgw::render_human(doc.json());
    }
    return doc.status;
  }

  std::string read_input(Document& doc, const std::string& path) const {
    std::string text = pgw::read_text_file(path);
    doc.inputs.push_back(Json{{"path", path}, {"sha256", sha256_hex(text)}});
    return text;
  }

  pgw::SearchLimits limits() const {
    pgw::SearchLimits l;
    if (opts_.max_order) {
      l.max_order = opts_.max_order;
    } else if (std::getenv("PGW_MAX_ORDER")) {
      l.max_order = pgw::default_max_order();
    }
    return l;
  }

  // Runs body and maps library exceptions onto exit codes.
  template <class F>
  int guarded(Document& doc, F&& body) const {
    auto fail = [&](int code, const char* kind, const std::exception& e) {
      doc.status = code;
      doc.result = Json{{"error", kind}, {"message", e.what()}};
    };
    try {
      doc.status = body();
    } catch (const pgw::ParseError& e) {
      fail(kParse, "parse-error", e);
    } catch (const pgw::IoError& e) {
      fail(kParse, "unreadable-input", e);
    } catch (const pgw::InconsistentPresentation& e) {
      fail(kInconsistent, "inconsistent-presentation", e);
    } catch (const pgw::ResourceLimit& e) {
      fail(kResource, "resource-cap", e);
    } catch (const pgw::VerificationFailure& e) {
      fail(kVerification, "verification-failure", e);
    } catch (const pgw::InvalidAutomorphism& e) {
      fail(kVerification, "invalid-automorphism", e);
    } catch (const pgw::PreconditionError& e) {
      fail(kParse, "precondition", e);
    }
    return emit(doc);
  }

  int validate(const std::string& path) const {
    Document doc{"validate"};
    return guarded(doc, [&] {
      const std::string text = read_input(doc, path);
      if (pgw::detect_format(text) == pgw::GroupFormat::Perm) {
        pgw::LoadedGroup g = pgw::load_group_text(text);
        doc.result = Json{{"format", "perm"}, {"group", g.name}, {"order", g.group().order()}};
        return kOk;
      }
      pgw::PcPresentation pres = pgw::parse_presentation(text);
      auto overlap = pgw::check_consistency(pres, pgw::ConsistencyMode::OverlapTests);
      Json full_json;
      bool full_ok = true;
      try {
        auto full = pgw::check_consistency(pres, pgw::ConsistencyMode::FullAssociativity,
                                           pgw::default_max_order());
        full_ok = full.consistent;
        full_json = pgw::to_json(pres, full);
      } catch (const pgw::ResourceLimit& e) {
        full_json = Json{{"skipped", e.what()}};
      }
      doc.result = Json{{"format", "pc"},
                        {"canonical", pgw::serialize_presentation(pres)},
                        {"overlap_tests", pgw::to_json(pres, overlap)},
                        {"full_associativity", full_json}};
      return overlap.consistent && full_ok ? kOk : kInconsistent;
    });
  }

  int analyze(const std::string& path) const {
    Document doc{"analyze"};
    return guarded(doc, [&] {
      pgw::LoadedGroup g = pgw::load_group_text(read_input(doc, path));
      const auto& G = g.group();
      doc.result = Json{{"format", std::string(pgw::to_string(g.format))}, {"group", g.name}};
      doc.result["structure"] = pgw::structure_snapshot(G);
      doc.result["hypotheses"] = pgw::to_json(pgw::classify_hypotheses(G));
      return kOk;
    });
  }

  int witness(const std::string& path) const {
    Document doc{"witness"};
    return guarded(doc, [&] {
      pgw::LoadedGroup g = pgw::load_group_text(read_input(doc, path));
      const auto& G = g.group();
      doc.result = Json{{"group", g.name}};
      pgw::WitnessScan scan = pgw::scan_witnesses(G);
      if (!scan.first) {
        doc.result["witness"] = Json();
        doc.result["reason"] = pgw::is_abelian(pgw::whole_group(G))
                                   ? "abelian group: every element is central"
                                   : "no admissible element";
        return kNoResult;
      }
      const pgw::WitnessData& w = scan.non_inner ? *scan.non_inner : *scan.first;
      pgw::Automorphism beta = pgw::construct_beta(G, w);
      auto report = pgw::verify_noninner_orderp(G, beta, w);
      if (!scan.non_inner)
        report.notes.push_back("all " + std::to_string(scan.pairs_tried) + " admissible pairs (x, g) yield inner automorphisms");
      doc.result["admissible_elements"] = scan.admissible_count;
      doc.result["pairs_tried"] = scan.pairs_tried;
      doc.result["witness"] = pgw::to_json(G, w);
      doc.result["beta"] = pgw::automorphism_json(beta);
      doc.result["verification"] = pgw::to_json(G, report);
      return report.all_green() ? kOk : kVerification;
    });
  }

  int pipeline(const std::string& path, bool fallback) const {
    Document doc{fallback ? "pipeline --fallback" : "pipeline"};
    return guarded(doc, [&] {
      pgw::LoadedGroup g = pgw::load_group_text(read_input(doc, path));
      auto outcome = pgw::conjecture_pipeline(g.group(), fallback, limits());
      doc.result = Json{{"group", g.name}};
      doc.result.update(pgw::to_json(outcome));
      if (outcome.kind == pgw::OutcomeKind::Constructed && !outcome.verification->all_green())
        return kVerification;
      switch (outcome.kind) {
        case pgw::OutcomeKind::Undetermined:
        case pgw::OutcomeKind::OracleNone:
          return kNoResult;
        default:
          return kOk;
      }
    });
  }

  int search(const std::string& path, bool require_fix) const {
    Document doc{require_fix ? "oracle --search" : "oracle --search --no-fix-frattini"};
    return guarded(doc, [&] {
      pgw::LoadedGroup g = pgw::load_group_text(read_input(doc, path));
      pgw::SearchStats stats;
      auto hit = pgw::exhaustive_noninner_search(g.group(), require_fix, limits(), &stats);
      doc.result = Json{{"group", g.name},
                        {"require_fix_frattini", require_fix},
                        {"found", hit.has_value()}};
      doc.result["automorphism"] = hit ? pgw::automorphism_json(*hit) : Json();
      doc.result["order"] = hit ? Json(pgw::automorphism_order(*hit)) : Json();
      doc.result["nodes"] = stats.nodes;
      doc.result["automorphisms_seen"] = stats.automorphisms;
      return hit ? kOk : kNoResult;
    });
  }

  int crosscheck(const std::string& path, const std::string& other) const {
    Document doc{"oracle --crosscheck"};
    return guarded(doc, [&] {
      pgw::LoadedGroup a = pgw::load_group_text(read_input(doc, path));
      pgw::LoadedGroup b = pgw::load_group_text(read_input(doc, other));
      // The structure module runs on the pc side and the oracle on the perm side.
      if (a.format == pgw::GroupFormat::Perm && b.format == pgw::GroupFormat::Pc) std::swap(a, b);
      auto report = pgw::compare_invariants(pgw::compute_invariants(a.group()),
                                            pgw::oracle_recompute(b.group()).invariants);
      doc.result = Json{{"first", a.name}, {"second", b.name}};
      doc.result.update(pgw::to_json(report));
      return report.all_equal ? kOk : kNoResult;
    });
  }

  int corpus(const std::string& dir, bool slow, bool refresh) const {
    Document doc{refresh ? "corpus --refresh-expected" : "corpus"};
    return guarded(doc, [&] {
      auto entries = pgw::load_corpus(dir, slow || refresh);
      Json manifest = Json::parse(pgw::read_text_file(std::filesystem::path(dir) / "manifest.json"));
      bool ok = true;
      Json rows = Json::array();
      for (const auto& e : entries) {
        Json row{{"name", e.name}, {"tags", e.tags}};
        if (!e.loaded) {
          row["status"] = "inconsistent as tagged";
          rows.push_back(row);
          continue;
        }
        auto snap = pgw::oracle_recompute(e.loaded->group());
        auto fresh = pgw::invariant_fields(snap.invariants);
        using FieldMap = std::map<std::string, std::string>;
        bool expected_ok = !e.expected_invariants.empty() &&
                           FieldMap(fresh.begin(), fresh.end()) ==
                               FieldMap(e.expected_invariants.begin(), e.expected_invariants.end());
        row["frattini_routes_agree"] = snap.frattini_routes_agree;
        row["expected_match"] = expected_ok;
        if (!refresh) ok = ok && expected_ok && snap.frattini_routes_agree;
        rows.push_back(row);

        if (refresh) {
          Json exp = Json::object();
          for (const auto& [k, v] : fresh) exp[k] = v;
          for (auto& m : manifest["entries"])
            if (m["name"] == e.name) m["expected"] = exp;
        }
      }
      Json pairs = Json::array();
      for (auto [pc, perm] : pgw::backend_pairs(entries)) {
        auto report = pgw::compare_invariants(pgw::compute_invariants(pc->loaded->group()),
                                              pgw::oracle_recompute(perm->loaded->group()).invariants);
        ok = ok && report.all_equal;
        pairs.push_back(Json{{"group", pc->group}, {"all_equal", report.all_equal}});
      }
      doc.result = Json{{"entries", rows}, {"backend_pairs", pairs}};
      if (refresh) {
        // Expectations are only rewritten once every group agrees across backends.
        if (!ok) return kVerification;
        std::ofstream out(std::filesystem::path(dir) / "manifest.json");
        out << manifest.dump(2) << "\n";
      }
      return ok ? kOk : kVerification;
    });
  }

 private:
  Options opts_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite p-group toolkit: presentations, structure, witnesses and oracles"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", opts.jobs, "Worker thread cap (0 keeps the default)");
  app.add_option("--max-order", opts.max_order, "Enumeration and search cap");

  std::string path, other, corpus_dir = pgw::default_corpus_dir().string();
  bool fallback = false, do_search = false, no_fix = false, slow = false, refresh = false;

  auto* validate = app.add_subcommand("validate", "Parse and consistency-check a group file");
  validate->add_option("file", path)->required();
  auto* analyze = app.add_subcommand("analyze", "Structure snapshot and hypothesis report");
  analyze->add_option("file", path)->required();
  auto* witness = app.add_subcommand("witness", "Construct and verify a non-inner automorphism");
  witness->add_option("file", path)->required();
  auto* pipeline = app.add_subcommand("pipeline", "Hypothesis dispatch for the conjecture");
  pipeline->add_option("file", path)->required();
  pipeline->add_flag("--fallback", fallback, "Run the exhaustive oracle search when needed");
  auto* oracle = app.add_subcommand("oracle", "Exhaustive search or cross-backend validation");
  oracle->add_option("file", path)->required();
  auto* search_flag = oracle->add_flag("--search", do_search, "Search for a non-inner automorphism of order p");
  auto* cross_opt = oracle->add_option("--crosscheck", other, "Compare invariants with another file");
  search_flag->excludes(cross_opt);
  oracle->add_flag("--no-fix-frattini", no_fix, "Do not require the Frattini subgroup to be fixed");
  auto* corpus = app.add_subcommand("corpus", "Check the bundled corpus");
  corpus->add_flag("--slow", slow, "Include the order 3^6 and 3^7 entries");
  corpus->add_flag("--refresh-expected", refresh, "Rewrite expected invariants from the oracle");
  corpus->add_option("--dir", corpus_dir, "Corpus directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  if (opts.jobs) pgw::set_worker_count(opts.jobs);
  if (opts.max_order) pgw::set_default_max_order(opts.max_order);
  Runner run(opts);

  if (*validate) return run.validate(path);
  if (*analyze) return run.analyze(path);
  if (*witness) return run.witness(path);
  if (*pipeline) return run.pipeline(path, fallback);
  if (*oracle) {
    if (!other.empty()) return run.crosscheck(path, other);
    if (!do_search) {
      std::cerr << "oracle: one of --search or --crosscheck is required\n";
      return kParse;
    }
    return run.search(path, !no_fix);
  }
  if (*corpus) return run.corpus(corpus_dir, slow, refresh);
  return kParse;
}
