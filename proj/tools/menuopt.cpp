// menuopt command-line front end.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "menuopt/commands.hpp"
#include "menuopt/llm/http_transport.hpp"

using namespace menuopt;

namespace {

struct TransportFlags {
  std::string transcript;  // replay recorded responses
  std::string record;      // save live responses here
  std::size_t retries = 3;
};

/// Builds the chat client for --backend remote. Returns a finalizer that
/// writes the recorded transcript, if any.
std::function<void()> attach_chat(const RunConfig& cfg, const TransportFlags& tf,
                                  Services& svc) {
  if (cfg.backend != "remote") return [] {};
  llm::ClientOptions opt;
  if (const char* key = std::getenv("LLM_API_KEY")) opt.api_key = key;
  opt.max_retries = tf.retries;
  std::shared_ptr<llm::Transport> transport;
  if (!tf.transcript.empty()) {
    transport = std::make_shared<llm::ReplayTransport>(
        llm::parse_transcript(io::read_file(tf.transcript), tf.transcript));
    opt.max_retries = 0;
  } else {
    if (cfg.endpoint.empty()) {
      throw ArgumentError("--backend remote needs --endpoint or --transcript");
    }
    transport = std::make_shared<llm::HttplibTransport>(cfg.endpoint);
  }
  std::shared_ptr<llm::RecordingTransport> recorder;
  if (!tf.record.empty()) {
    recorder = std::make_shared<llm::RecordingTransport>(transport);
    transport = recorder;
  }
  svc.chat = std::make_shared<llm::HttpChatClient>(transport, opt);
  return [recorder, path = tf.record] {
    if (recorder) io::write_file(path, llm::serialize_transcript(recorder->entries()));
  };
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  TransportFlags tf;
  CLI::App app{"LLM-guided menu design: generation, scoring, optimization and evaluation"};
  app.set_config("--config", "", "Key-value config file; flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  auto path_opt = [&](const char* flag, std::filesystem::path& p, const char* help) {
    return app.add_option_function<std::string>(
        flag, [&p](const std::string& v) { p = v; }, help);
  };
  path_opt("--menu", cfg.menu, "Menu JSON (original menu for optimize)");
  path_opt("--generated", cfg.generated, "Generated-recipe fixture JSON");
  path_opt("--impacts", cfg.impacts, "Impact table CSV");
  path_opt("--imputations", cfg.imputations, "Imputation CSV");
  path_opt("--lexicon", cfg.lexicon, "Meat lexicon");
  path_opt("--scores", cfg.scores, "Scores JSON (id -> rating); overrides the scorer");
  path_opt("--out-dir", cfg.out_dir, "Output directory");
  app.add_option("--k", cfg.k, "Menu size")->capture_default_str();
  app.add_option("--generate", cfg.n_generate, "Recipes to add to the ground set")
      ->capture_default_str();
  app.add_option("--lambda", cfg.lambda, "Diversity weight")->capture_default_str();
  app.add_option("--c-emissions", cfg.c_emissions, "Emissions ratio vs the original menu")
      ->capture_default_str();
  app.add_option("--c-welfare", cfg.c_welfare, "Animal-use ratio vs the original menu")
      ->capture_default_str();
  app.add_option("--exact-budget", cfg.exact_budget, "Branch-and-bound node budget")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for all randomness")->capture_default_str();
  app.add_option("--restarts", cfg.restarts, "Heuristic restarts")->capture_default_str();
  app.add_option("--backend", cfg.backend, "mock | remote")
      ->check(CLI::IsMember({"mock", "remote"}))
      ->capture_default_str();
  app.add_option("--endpoint", cfg.endpoint, "Chat-completions base URL");
  app.add_option("--model", cfg.model, "Model name")->capture_default_str();
  app.add_option("--temperature", cfg.temperature)->capture_default_str();
  app.add_option("--chunk-size", cfg.chunk_size, "Recipes per rating request (0 = all)");
  app.add_option("--concurrency", cfg.concurrency, "Rating requests in flight");
  app.add_flag("--rate-with-description", cfg.rate_with_description);
  app.add_option("--max-attempts", cfg.max_attempts, "Generation attempts")
      ->capture_default_str();
  app.add_option("--transcript", tf.transcript, "Replay chat responses from a transcript");
  app.add_option("--record", tf.record, "Record chat responses to a transcript");
  app.add_option("--retries", tf.retries, "HTTP retries")->capture_default_str();

  auto* optimize = app.add_subcommand("optimize", "Build and solve the menu problem");
  optimize->add_flag("--live-generate", cfg.live_generate,
                     "Generate recipes through the chat backend instead of the fixture");

  auto* bound = app.add_subcommand("verify-bound", "Check the score-error bound");
  bound->add_option("--n", cfg.bound_n)->capture_default_str();
  bound->add_option("--bound-k", cfg.bound_k)->capture_default_str();
  bound->add_option("--bound-lambda", cfg.bound_lambda)->capture_default_str();
  bound->add_option("--epsilon", cfg.epsilon)->capture_default_str();
  bound->add_option("--trials", cfg.trials)->capture_default_str();

  auto* eval = app.add_subcommand("eval-pairs", "Pairwise preference evaluation");
  eval->add_option_function<std::string>(
          "--pairs", [&](const std::string& v) { cfg.pairs = v; }, "Pairs CSV")
      ->required();
  eval->add_option_function<std::string>(
      "--items", [&](const std::string& v) { cfg.items = v; }, "JSON id -> text");
  eval->add_option_function<std::string>(
      "--nutrition", [&](const std::string& v) { cfg.nutrition = v; }, "Nutrition CSV");
  eval->add_option("--predictor", cfg.predictor)
      ->check(CLI::IsMember({"ground-truth", "always-first", "nutrition", "remote"}))
      ->capture_default_str();
  eval->add_option("--dimension", cfg.dimension, "Sensory dimension");
  eval->add_option("--m-tests", cfg.m_tests, "Tests for Bonferroni")->capture_default_str();
  eval->add_option("--alpha", cfg.alpha)->capture_default_str();

  auto* generate = app.add_subcommand("generate", "Generate recipes from the menu");
  auto* score = app.add_subcommand("score", "Rate the recipes of a menu");
  auto* similarity = app.add_subcommand("similarity", "Pairwise similarity matrix");

  auto* mine = app.add_subcommand("mine-pairs", "Mine significant pairs from a corpus");
  mine->add_option_function<std::string>(
          "--corpus", [&](const std::string& v) { cfg.corpus = v; }, "Corpus JSON")
      ->required();
  mine->add_option("--min-pairs", cfg.min_pairs)->capture_default_str();
  mine->add_option("--alpha", cfg.alpha)->capture_default_str();

  auto* transform = app.add_subcommand("baseline-transform", "Rule-based menu rewrite");
  transform->add_option("--transform", cfg.transform)
      ->required()
      ->check(CLI::IsMember(
          {"remove_beef", "vegetarian_subset", "vegetarian_first", "beef_to_chicken"}));

  CLI11_PARSE(app, argc, argv);

  try {
    Services svc;
    const auto finish = attach_chat(cfg, tf, svc);
    int status = 0;
    if (optimize->parsed()) {
      const auto r = cmd_optimize(cfg, svc);
      std::cout << optimize_report(cfg, r);
    } else if (bound->parsed()) {
      status = cmd_verify_bound(cfg, svc) ? 0 : 2;
    } else if (eval->parsed()) {
      const auto r = cmd_eval_pairs(cfg, svc);
      std::cout << analytics::to_json(r).dump(2) << "\n";
    } else if (generate->parsed()) {
      std::cout << cmd_generate(cfg, svc).size() << " recipes written\n";
    } else if (score->parsed()) {
      std::cout << cmd_score(cfg, svc).size() << " scores written\n";
    } else if (similarity->parsed()) {
      {
        const auto n = cmd_similarity(cfg, svc).size();
        std::cout << n << "x" << n << " similarity matrix written\n";
      }
    } else if (mine->parsed()) {
      std::cout << cmd_mine_pairs(cfg, svc).size() << " pairs written\n";
    } else if (transform->parsed()) {
      const auto m = cmd_baseline_transform(cfg, svc);
      std::cout << m.name() << ": " << m.size() << " recipes\n";
    }
    finish();
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
