#pragma once

// Pipeline commands behind the CLI. Each reads files named in RunConfig and
// writes its outputs under out_dir; file outputs depend only on inputs and
// the seed.

#include <algorithm>
#include <cstdint>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "menuopt/analytics/eval.hpp"
#include "menuopt/analytics/nutrition.hpp"
#include "menuopt/analytics/pairs.hpp"
#include "menuopt/analytics/transforms.hpp"
#include "menuopt/domain.hpp"
#include "menuopt/impact.hpp"
#include "menuopt/io.hpp"
#include "menuopt/llm/chat.hpp"
#include "menuopt/llm/generation.hpp"
#include "menuopt/llm/prompts.hpp"
#include "menuopt/llm/scoring.hpp"
#include "menuopt/optimizer.hpp"
#include "menuopt/similarity.hpp"

namespace menuopt {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct RunConfig {
  fs::path menu = io::data_dir() / "original_menu.json";
  fs::path generated = io::data_dir() / "generated_recipes.json";
  fs::path impacts = io::data_dir() / "impacts.csv";
  fs::path imputations = io::data_dir() / "imputations.csv";
  fs::path lexicon = io::data_dir() / "meat_lexicon.txt";
  fs::path scores;
  fs::path out_dir = "out";

  std::size_t k = 36;
  std::size_t n_generate = 20;
  double lambda = 100.0;
  double c_emissions = 0.25;
  double c_welfare = 1.0;
  std::uint64_t exact_budget = 2'000'000;
  std::uint64_t seed = 0;
  std::size_t restarts = 8;

  std::string backend = "mock";
  std::string endpoint;
  std::string model = "gpt-4o";
  double temperature = 0.0;
  bool live_generate = false;
  bool rate_with_description = false;
  std::size_t chunk_size = 0;
  std::size_t concurrency = 1;
  std::size_t max_attempts = 5;

  std::size_t bound_n = 10;
  std::size_t bound_k = 5;
  double bound_lambda = 1.0;
  double epsilon = 0.1;
  std::size_t trials = 1000;

  fs::path pairs;
  fs::path items;
  fs::path nutrition;
  fs::path corpus;
  std::string predictor = "ground-truth";
  std::string dimension;
  std::size_t m_tests = 1;
  double alpha = 0.05;
  std::size_t min_pairs = 100;

  std::string transform;

  void validate() const {
    if (k < 1) throw ArgumentError("k must be >= 1");
    if (!(lambda >= 0.0)) throw ArgumentError("lambda must be >= 0");
    if (!(c_emissions >= 0.0) || !(c_welfare >= 0.0)) {
      throw ArgumentError("constraint ratios must be >= 0");
    }
    if (backend != "mock" && backend != "remote") {
      throw ArgumentError("backend must be 'mock' or 'remote'");
    }
  }
};

/// Externally provided services. The chat client is required only for the
/// remote backend.
struct Services {
  std::shared_ptr<llm::ChatClient> chat;
  std::ostream* log = &std::cerr;
};

/// Error raised from a named pipeline stage. cause() holds the original
/// exception when there is one.
class StageError : public Error {
 public:
  StageError(const std::string& stage, const std::string& what,
             std::exception_ptr cause = nullptr)
      : Error(stage + ": " + what), stage_(stage), cause_(std::move(cause)) {}
  const std::string& stage() const { return stage_; }
  std::exception_ptr cause() const { return cause_; }

 private:
  std::string stage_;
  std::exception_ptr cause_;
};

namespace detail {

template <typename F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e.what(), std::current_exception());
  }
}

inline void log(const Services& s, const std::string& msg) {
  if (s.log) *s.log << msg << "\n";
}

inline std::string fmt(double v, const char* spec = "%.4f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

inline llm::ChatClient& require_chat(const Services& s) {
  if (!s.chat) throw ArgumentError("remote backend selected but no chat client configured");
  return *s.chat;
}

/// Chat client that answers the generation prompt with fixture recipes.
inline std::shared_ptr<llm::ChatClient> fixture_chat(const Menu& fixture, std::size_t n) {
  std::vector<llm::RecipeDraft> drafts;
  for (std::size_t i = 0; i < n && i < fixture.size(); ++i) {
    drafts.push_back({fixture[i].title, fixture[i].ingredients, fixture[i].description});
  }
  const auto text = llm::format_recipes(drafts);
  return std::make_shared<llm::FunctionChatClient>(
      [text](const llm::ChatRequest&, std::size_t) { return text; });
}

inline std::vector<Recipe> generate_recipes(const RunConfig& cfg, const Services& svc,
                                            const Menu& original) {
  const auto lexicon = io::load_lexicon(cfg.lexicon);
  std::shared_ptr<llm::ChatClient> chat = svc.chat;
  if (cfg.backend == "mock") {
    chat = fixture_chat(io::load_menu(cfg.generated), cfg.n_generate);
  } else {
    require_chat(svc);
  }
  llm::GenerationSettings settings;
  settings.model = cfg.model;
  settings.temperature = cfg.temperature;
  settings.max_attempts = cfg.max_attempts;
  const auto drafts = llm::generate_with_retries(
      *chat,
      {{"original menu", llm::format_menu(original)},
       {"k", std::to_string(cfg.n_generate)}},
      llm::whitelist_validator(llm::generation_whitelist(original)), cfg.n_generate,
      settings);
  return llm::drafts_to_recipes(drafts, lexicon);
}

inline std::unique_ptr<llm::ScorerBackend> make_scorer(const RunConfig& cfg,
                                                       const Services& svc,
                                                       const Menu& ground) {
  if (!cfg.scores.empty()) {
    return std::make_unique<llm::TableScorer>(io::load_scores(cfg.scores, ground));
  }
  if (cfg.backend == "mock") return std::make_unique<llm::HashScorer>();
  require_chat(svc);
  return std::make_unique<llm::RemoteScorer>(svc.chat, cfg.model, cfg.temperature,
                                             cfg.rate_with_description);
}

inline ScoreVector score_ground_set(const RunConfig& cfg, const Services& svc,
                                    const Menu& ground) {
  auto scorer = make_scorer(cfg, svc, ground);
  llm::ScoringOptions opt;
  opt.chunk_size = cfg.chunk_size;
  opt.concurrency = cfg.concurrency;
  return llm::score_recipes(*scorer, ground.recipes(), opt);
}

}  // namespace detail

/// Everything cmd_optimize computes, for callers that want values rather
/// than files.
struct OptimizeResult {
  Menu ground;
  ScoreVector scores;
  MenuProblem problem;
  MenuSolution solution;
  Menu menu;  // selected recipes in output order
  double original_emissions = 0.0;
  double original_animals = 0.0;
};

inline OptimizeResult run_optimize(const RunConfig& cfg, const Services& svc = {}) {
  cfg.validate();
  OptimizeResult out;
  const auto original = detail::stage("load menu", [&] { return io::load_menu(cfg.menu); });
  std::vector<Recipe> generated;
  if (cfg.n_generate > 0) {
    generated = detail::stage("generate", [&] {
      if (cfg.live_generate) return detail::generate_recipes(cfg, svc, original);
      const auto fixture = io::load_menu(cfg.generated);
      if (fixture.size() < cfg.n_generate) {
        throw ValidationError("generated fixture has " + std::to_string(fixture.size()) +
                              " recipes, " + std::to_string(cfg.n_generate) + " requested");
      }
      return std::vector<Recipe>(fixture.recipes().begin(),
                                 fixture.recipes().begin() +
                                     static_cast<long>(cfg.n_generate));
    });
  }
  out.ground = detail::stage("build ground set", [&] {
    return concat("ground_set", original, Menu("generated", generated));
  });
  if (cfg.k > out.ground.size()) {
    throw StageError("build problem", "k = " + std::to_string(cfg.k) +
                                          " exceeds ground set of " +
                                          std::to_string(out.ground.size()));
  }
  out.scores = detail::stage("score", [&] {
    return detail::score_ground_set(cfg, svc, out.ground);
  });
  const auto impacts = detail::stage("resolve impacts", [&] {
    const auto table = io::load_impact_table(cfg.impacts, cfg.imputations);
    return resolve_impacts(out.ground.recipes(), table);
  });
  out.problem = detail::stage("build problem", [&] {
    MenuProblem p;
    p.scores = out.scores.normalized_for(out.ground);
    p.similarity = similarity_matrix(out.ground.recipes());
    p.lambda = cfg.lambda;
    p.k = cfg.k;
    p.original.resize(original.size());
    std::iota(p.original.begin(), p.original.end(), std::size_t{0});
    p.constraints.push_back(linearize_constraint(p.scores, impacts, cfg.c_emissions,
                                                 p.original, ImpactDimension::emissions));
    p.constraints.push_back(linearize_constraint(p.scores, impacts, cfg.c_welfare,
                                                 p.original, ImpactDimension::animals));
    p.validate();
    return p;
  });
  out.original_emissions = expected_impact(out.problem.original, out.problem.scores,
                                           impacts, ImpactDimension::emissions);
  out.original_animals = expected_impact(out.problem.original, out.problem.scores,
                                         impacts, ImpactDimension::animals);
  out.solution = detail::stage("solve", [&] {
    return solve_menu(out.problem, cfg.exact_budget, cfg.seed, cfg.restarts);
  });
  auto order = out.solution.selection;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = out.ground[a];
    const auto& rb = out.ground[b];
    if (ra.origin != rb.origin) return ra.origin == Origin::generated;
    return out.scores.rating(ra.id) > out.scores.rating(rb.id);
  });
  std::vector<Recipe> chosen;
  for (auto i : order) chosen.push_back(out.ground[i]);
  out.menu = Menu("optimized_menu", std::move(chosen));
  return out;
}

inline json solution_json(const RunConfig& cfg, const OptimizeResult& r) {
  json j;
  json sel = json::array();
  for (auto i : r.solution.selection) sel.push_back(r.ground[i].id);
  j["selection"] = std::move(sel);
  j["objective"] = r.solution.objective;
  j["expected_emissions"] = r.solution.expected_impacts.at(ImpactDimension::emissions);
  j["expected_animals"] = r.solution.expected_impacts.at(ImpactDimension::animals);
  j["certificate"] = to_string(r.solution.certificate);
  j["stats"] = {{"nodes", r.solution.stats.nodes},
                {"budget_exhausted", r.solution.stats.budget_exhausted}};
  j["original"] = {{"expected_emissions", r.original_emissions},
                   {"expected_animals", r.original_animals}};
  j["thresholds"] = {{"emissions", r.problem.constraints[0].threshold},
                     {"animals", r.problem.constraints[1].threshold}};
  j["parameters"] = {{"k", cfg.k},
                     {"n", r.ground.size()},
                     {"lambda", cfg.lambda},
                     {"c_emissions", cfg.c_emissions},
                     {"c_welfare", cfg.c_welfare},
                     {"exact_budget", cfg.exact_budget},
                     {"seed", cfg.seed},
                     {"backend", cfg.backend}};
  return j;
}

inline std::string optimize_report(const RunConfig& cfg, const OptimizeResult& r) {
  using detail::fmt;
  const auto& sol = r.solution;
  const double em = sol.expected_impacts.at(ImpactDimension::emissions);
  const double an = sol.expected_impacts.at(ImpactDimension::animals);
  std::ostringstream os;
  os << "Menu optimization report\n\n";
  os << "Ground set: " << r.ground.size() << " recipes (" << r.problem.original.size()
     << " original, " << r.ground.size() - r.problem.original.size() << " generated)\n";
  os << "K = " << cfg.k << ", lambda = " << fmt(cfg.lambda, "%g")
     << ", C_emissions = " << fmt(cfg.c_emissions, "%g")
     << ", C_welfare = " << fmt(cfg.c_welfare, "%g") << "\n";
  os << "Certificate: " << to_string(sol.certificate) << " (" << sol.stats.nodes
     << " nodes" << (sol.stats.budget_exhausted ? ", budget exhausted" : "") << ")\n";
  os << "Objective: " << fmt(sol.objective, "%.6f") << "\n\n";
  os << "Expected emissions: " << fmt(em) << " kg CO2eq/kg (original "
     << fmt(r.original_emissions) << ", ratio " << fmt(em / r.original_emissions) << ")\n";
  os << "Expected animals:   " << fmt(an, "%.6f") << " per kg (original "
     << fmt(r.original_animals, "%.6f") << ")\n\n";
  os << "Menu:\n";
  for (std::size_t i = 0; i < r.menu.size(); ++i) {
    const auto& rec = r.menu[i];
    char line[256];
    std::snprintf(line, sizeof line, "%3zu. [%s] %-45s rating %4.1f  %s\n", i + 1,
                  rec.origin == Origin::generated ? "gen" : "org", rec.title.c_str(),
                  r.scores.rating(rec.id), rec.main_ingredient().c_str());
    os << line;
  }
  return os.str();
}

/// Writes solution.json, menu.json, scores.json and report.txt.
inline OptimizeResult cmd_optimize(const RunConfig& cfg, const Services& svc = {}) {
  const auto start = std::chrono::steady_clock::now();
  auto r = run_optimize(cfg, svc);
  detail::stage("write outputs", [&] {
    io::write_file(cfg.out_dir / "solution.json", solution_json(cfg, r).dump(2) + "\n");
    io::write_file(cfg.out_dir / "menu.json", io::serialize_menu(r.menu));
    io::write_file(cfg.out_dir / "scores.json", io::serialize_scores(r.scores, r.ground));
    io::write_file(cfg.out_dir / "report.txt", optimize_report(cfg, r));
    return 0;
  });
  detail::log(svc, "optimize: " + to_string(r.solution.certificate) + " solution in " +
                       detail::fmt(detail::elapsed(start), "%.2f") + " s");
  return r;
}

/// Writes bound_report.json. Returns false when the bound is violated.
inline bool cmd_verify_bound(const RunConfig& cfg, const Services& svc = {}) {
  const auto r = detail::stage("verify bound", [&] {
    return verify_proposition1(cfg.bound_n, cfg.bound_k, cfg.bound_lambda, cfg.epsilon,
                               cfg.trials, cfg.seed);
  });
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["lambda"] = r.lambda;
  j["epsilon"] = r.epsilon;
  j["trials"] = r.trials;
  j["seed"] = cfg.seed;
  j["max_gap"] = r.max_gap;
  j["bound"] = r.bound;
  j["violations"] = r.violations;
  j["pass"] = r.pass;
  io::write_file(cfg.out_dir / "bound_report.json", j.dump(2) + "\n");
  detail::log(svc, "verify-bound: max gap " + detail::fmt(r.max_gap, "%.6g") + " vs bound " +
                       detail::fmt(r.bound, "%.6g") + (r.pass ? " (pass)" : " (FAIL)"));
  return r.pass;
}

namespace detail {

inline std::optional<analytics::Position> parse_position(std::string_view answer) {
  const auto t = text::trim(answer);
  if (t.empty()) return std::nullopt;
  if (t.front() == '1') return analytics::Position::first;
  if (t.front() == '2') return analytics::Position::second;
  return std::nullopt;
}

inline std::string facts_text(const NutritionFacts& f) {
  return "serving size " + fmt(f.serving_size_g, "%g") + " g, total fat " +
         fmt(f.fat_g, "%g") + " g, protein " + fmt(f.protein_g, "%g") + " g, sugar " +
         fmt(f.sugar_g, "%g") + " g, sodium " + fmt(f.sodium_mg, "%g") + " mg";
}

}  // namespace detail

/// Writes eval_report.json and pair_outcomes.csv.
inline analytics::EvalReport cmd_eval_pairs(const RunConfig& cfg, const Services& svc = {}) {
  auto pairs = detail::stage("load pairs", [&] {
    return analytics::parse_pairs_csv(io::read_file(cfg.pairs), cfg.pairs.string());
  });
  if (!cfg.items.empty()) {
    detail::stage("load items", [&] {
      const auto j = io::parse_json(io::read_file(cfg.items), cfg.items.string());
      if (!j.is_object()) throw ValidationError("items file must map id to text");
      for (auto& p : pairs) {
        if (!j.contains(p.id_a) || !j.contains(p.id_b)) {
          throw ValidationError("no item text for pair " + p.id_a + "," + p.id_b);
        }
        p.text_a = j[p.id_a].get<std::string>();
        p.text_b = j[p.id_b].get<std::string>();
      }
      return 0;
    });
  }
  std::vector<NutritionFacts> facts;
  std::map<std::string, NutritionFacts> by_id;
  if (!cfg.nutrition.empty()) {
    facts = detail::stage("load nutrition", [&] { return io::load_nutrition(cfg.nutrition); });
    for (const auto& f : facts) by_id.emplace(f.product_id, f);
  }
  auto find_facts = [&](const std::string& id) -> const NutritionFacts& {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw ValidationError("no nutrition facts for '" + id + "'");
    return it->second;
  };

  analytics::Predictor predictor;
  if (cfg.predictor == "ground-truth") {
    std::map<std::pair<std::string, std::string>, std::string> winner;
    for (const auto& p : pairs) {
      const auto& w = p.truth == analytics::Truth::a ? p.id_a : p.id_b;
      winner[{p.id_a, p.id_b}] = w;
      winner[{p.id_b, p.id_a}] = w;
    }
    predictor = [winner](const analytics::PairItem& first, const analytics::PairItem& second)
        -> std::optional<analytics::Position> {
      return winner.at({first.id, second.id}) == first.id ? analytics::Position::first
                                                          : analytics::Position::second;
    };
  } else if (cfg.predictor == "always-first") {
    predictor = [](const analytics::PairItem&, const analytics::PairItem&)
        -> std::optional<analytics::Position> { return analytics::Position::first; };
  } else if (cfg.predictor == "nutrition") {
    if (facts.empty()) throw StageError("predictor", "nutrition predictor needs --nutrition");
    const auto dim = detail::stage("predictor", [&] {
      return analytics::parse_sensory_dimension(cfg.dimension);
    });
    for (const auto& p : pairs) {
      detail::stage("predictor", [&] {
        find_facts(p.id_a);
        find_facts(p.id_b);
        return 0;
      });
    }
    predictor = [dim, facts, find_facts](const analytics::PairItem& first,
                                         const analytics::PairItem& second)
        -> std::optional<analytics::Position> {
      return analytics::nutrition_rank(dim, find_facts(first.id), find_facts(second.id),
                                       facts) == analytics::Winner::a
                 ? analytics::Position::first
                 : analytics::Position::second;
    };
  } else if (cfg.predictor == "remote") {
    auto& chat = detail::require_chat(svc);
    const bool sensory = !cfg.dimension.empty();
    predictor = [&, sensory](const analytics::PairItem& first,
                             const analytics::PairItem& second)
        -> std::optional<analytics::Position> {
      llm::ChatRequest req;
      req.model = cfg.model;
      req.temperature = cfg.temperature;
      std::string prompt;
      if (sensory) {
        prompt = llm::render(llm::TemplateName::sensory_pairwise,
                             {{"category", "plant-based meat"},
                              {"ingredient list 1", first.text},
                              {"ingredient list 2", second.text},
                              {"nutrition facts 1", detail::facts_text(find_facts(first.id))},
                              {"nutrition facts 2", detail::facts_text(find_facts(second.id))},
                              {"dimension", cfg.dimension}});
      } else {
        prompt = llm::render(llm::TemplateName::recipe_pairwise,
                             {{"recipe text 1", first.text}, {"recipe text 2", second.text}});
      }
      req.messages.push_back({"user", prompt});
      return detail::parse_position(chat.complete(req).content);
    };
  } else {
    throw StageError("predictor", "unknown predictor '" + cfg.predictor + "'");
  }

  const auto report = detail::stage("evaluate", [&] {
    return analytics::run_pairwise_eval(pairs, predictor, cfg.seed, cfg.m_tests, cfg.alpha);
  });
  auto j = analytics::to_json(report);
  j["predictor"] = cfg.predictor;
  j["seed"] = cfg.seed;
  j["m_tests"] = cfg.m_tests;
  std::string outcomes = "index,id_a,id_b,order,valid,correct\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& o = report.outcomes[i];
    outcomes += std::to_string(i) + "," + pairs[i].id_a + "," + pairs[i].id_b + "," +
                (o.order == analytics::Order::ab ? "ab" : "ba") + "," +
                (o.valid ? "1" : "0") + "," + (o.correct ? "1" : "0") + "\n";
  }
  io::write_file(cfg.out_dir / "eval_report.json", j.dump(2) + "\n");
  io::write_file(cfg.out_dir / "pair_outcomes.csv", outcomes);
  detail::log(svc, "eval-pairs: accuracy " + detail::fmt(report.accuracy) + " over " +
                       std::to_string(report.n) + " pairs, p = " +
                       detail::fmt(report.p_value, "%.3g"));
  return report;
}

/// Writes generated.json.
inline Menu cmd_generate(const RunConfig& cfg, const Services& svc = {}) {
  cfg.validate();
  const auto original = detail::stage("load menu", [&] { return io::load_menu(cfg.menu); });
  auto recipes = detail::stage("generate",
                               [&] { return detail::generate_recipes(cfg, svc, original); });
  Menu menu("generated", std::move(recipes));
  io::write_file(cfg.out_dir / "generated.json", io::serialize_menu(menu));
  return menu;
}

/// Writes scores.json for the menu.
inline ScoreVector cmd_score(const RunConfig& cfg, const Services& svc = {}) {
  cfg.validate();
  const auto menu = detail::stage("load menu", [&] { return io::load_menu(cfg.menu); });
  auto scores = detail::stage("score", [&] { return detail::score_ground_set(cfg, svc, menu); });
  io::write_file(cfg.out_dir / "scores.json", io::serialize_scores(scores, menu));
  return scores;
}

/// Writes similarity.csv for the menu.
inline SimilarityMatrix cmd_similarity(const RunConfig& cfg, const Services& = {}) {
  const auto menu = detail::stage("load menu", [&] { return io::load_menu(cfg.menu); });
  auto s = detail::stage("similarity", [&] { return similarity_matrix(menu.recipes()); });
  std::vector<std::string> ids;
  for (const auto& r : menu.recipes()) ids.push_back(r.id);
  io::write_file(cfg.out_dir / "similarity.csv", s.to_csv(ids));
  return s;
}

/// Corpus JSON: array of {id, ingredients: [..], ratings: [..], text}.
inline std::vector<analytics::RatedItem> load_corpus(const fs::path& path) {
  const auto j = io::parse_json(io::read_file(path), path.string());
  if (!j.is_array()) throw ValidationError("corpus must be an array");
  std::vector<analytics::RatedItem> out;
  for (const auto& e : j) {
    try {
      analytics::RatedItem item;
      item.id = e.at("id").get<std::string>();
      for (const auto& ing : e.at("ingredients")) {
        item.ingredients.insert(text::normalize_ingredient(ing.get<std::string>()));
      }
      item.ratings = e.at("ratings").get<std::vector<double>>();
      item.text = e.value("text", item.id);
      out.push_back(std::move(item));
    } catch (const json::exception& ex) {
      throw ValidationError(path.string() + ": " + ex.what());
    }
  }
  return out;
}

/// Writes pairs.csv.
inline std::vector<analytics::PairComparison> cmd_mine_pairs(const RunConfig& cfg,
                                                             const Services& = {}) {
  const auto corpus = detail::stage("load corpus", [&] { return load_corpus(cfg.corpus); });
  auto pairs = detail::stage("mine pairs", [&] {
    return analytics::mine_pairs(corpus, cfg.min_pairs, cfg.alpha);
  });
  io::write_file(cfg.out_dir / "pairs.csv", analytics::pairs_to_csv(pairs));
  return pairs;
}

/// Writes <menu name>.json for the transformed menu.
inline Menu cmd_baseline_transform(const RunConfig& cfg, const Services& = {}) {
  const auto menu = detail::stage("load menu", [&] { return io::load_menu(cfg.menu); });
  const auto t = detail::stage("transform", [&] {
    return analytics::parse_menu_transform(cfg.transform);
  });
  auto out = detail::stage("transform", [&] { return analytics::transform_menu(menu, t); });
  io::write_file(cfg.out_dir / (out.name() + ".json"), io::serialize_menu(out));
  return out;
}

}  // namespace menuopt
