#pragma once

#include <algorithm>
#include <charconv>
#include <future>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "menuopt/domain.hpp"
#include "menuopt/errors.hpp"
#include "menuopt/llm/chat.hpp"
#include "menuopt/llm/prompts.hpp"
#include "menuopt/text.hpp"

namespace menuopt::llm {

/// Reads a comma-separated list of `expected` ratings in [1,10]. Accepts a
/// leading wrapper ending in ':' and a trailing '.'; when the text spans
/// several lines, the line with the most commas is used.
inline std::vector<double> parse_ratings(std::string_view response,
                                         std::size_t expected) {
  if (expected < 1) throw ArgumentError("expected rating count must be >= 1");
  const auto all = text::split_lines(response);
  std::string_view pick;
  std::size_t best_commas = 0;
  bool found = false;
  for (const auto& l : all) {
    const auto t = text::trim(l);
    if (t.empty()) continue;
    const auto commas = static_cast<std::size_t>(std::count(t.begin(), t.end(), ','));
    if (!found || commas > best_commas || (commas == best_commas && commas == 0)) {
      pick = t;
      best_commas = commas;
      found = true;
    }
  }
  if (!found) throw ParseError("empty rating response");
  std::string line(pick);
  if (auto colon = line.rfind(':'); colon != std::string::npos) {
    line = line.substr(colon + 1);
  }
  std::string_view body = text::trim(line);
  if (!body.empty() && body.back() == '.') body.remove_suffix(1);
  std::vector<double> out;
  for (const auto& token : text::split(body, ',')) {
    const auto t = text::trim(token);
    double v = 0.0;
    const auto* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (t.empty() || ec != std::errc() || ptr != end) {
      throw ParseError("non-numeric rating '" + std::string(t) + "'");
    }
    out.push_back(v);
  }
  if (out.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " ratings, got " +
                     std::to_string(out.size()));
  }
  for (double v : out) {
    if (!(v >= 1.0 && v <= 10.0)) {
      throw ValidationError("rating " + std::to_string(v) + " outside [1,10]");
    }
  }
  return out;
}

class ScorerBackend {
 public:
  virtual ~ScorerBackend() = default;
  /// One rating in [1,10] per recipe, in input order.
  virtual std::vector<double> score(const std::vector<Recipe>& recipes) = 0;
  virtual std::string name() const = 0;
};

/// rating = 1 + fnv1a64(id) mod 10.
class HashScorer : public ScorerBackend {
 public:
  static double rating_for(std::string_view id) {
    return 1.0 + static_cast<double>(text::fnv1a64(id) % 10);
  }

  std::vector<double> score(const std::vector<Recipe>& recipes) override {
    std::vector<double> out;
    out.reserve(recipes.size());
    for (const auto& r : recipes) out.push_back(rating_for(r.id));
    return out;
  }

  std::string name() const override { return "mock-hash"; }
};

/// Ratings looked up by recipe id.
class TableScorer : public ScorerBackend {
 public:
  explicit TableScorer(ScoreVector table) : table_(std::move(table)) {}

  std::vector<double> score(const std::vector<Recipe>& recipes) override {
    std::vector<double> out;
    out.reserve(recipes.size());
    for (const auto& r : recipes) out.push_back(table_.rating(r.id));
    return out;
  }

  std::string name() const override { return "mock-table"; }

 private:
  ScoreVector table_;
};

/// Asks a chat model with the rating prompt. Recipes are listed one per line.
class RemoteScorer : public ScorerBackend {
 public:
  RemoteScorer(std::shared_ptr<ChatClient> client, std::string model,
               double temperature = 0.0, bool include_description = false)
      : client_(std::move(client)),
        model_(std::move(model)),
        temperature_(temperature),
        include_description_(include_description) {}

  ChatRequest request_for(const std::vector<Recipe>& recipes) const {
    std::string lines;
    for (std::size_t i = 0; i < recipes.size(); ++i) {
      if (i > 0) lines += "\n";
      lines += recipes[i].title;
      if (include_description_) lines += ": " + recipes[i].description;
    }
    ChatRequest req;
    req.model = model_;
    req.temperature = temperature_;
    req.messages.push_back(
        {"user", render(TemplateName::rate_recipes,
                        {{"r", std::to_string(recipes.size())}, {"recipes", lines}})});
    return req;
  }

  std::vector<double> score(const std::vector<Recipe>& recipes) override {
    const auto response = client_->complete(request_for(recipes));
    return parse_ratings(response.content, recipes.size());
  }

  std::string name() const override { return "remote:" + model_; }

 private:
  std::shared_ptr<ChatClient> client_;
  std::string model_;
  double temperature_;
  bool include_description_;
};

struct ScoringOptions {
  /// Recipes per request; 0 sends everything at once.
  std::size_t chunk_size = 0;
  /// Requests in flight at once.
  std::size_t concurrency = 1;
};

/// Scores recipes chunk by chunk and reassembles results in input order.
inline ScoreVector score_recipes(ScorerBackend& backend,
                                 const std::vector<Recipe>& recipes,
                                 const ScoringOptions& options = {}) {
  if (recipes.empty()) throw ArgumentError("no recipes to score");
  const std::size_t size = options.chunk_size == 0 ? recipes.size() : options.chunk_size;
  std::vector<std::vector<Recipe>> chunks;
  for (std::size_t i = 0; i < recipes.size(); i += size) {
    const auto end = std::min(recipes.size(), i + size);
    chunks.emplace_back(recipes.begin() + static_cast<long>(i),
                        recipes.begin() + static_cast<long>(end));
  }
  std::vector<std::vector<double>> results(chunks.size());
  auto run = [&](std::size_t c) {
    try {
      auto r = backend.score(chunks[c]);
      if (r.size() != chunks[c].size()) {
        throw ParseError("backend returned " + std::to_string(r.size()) +
                         " ratings for " + std::to_string(chunks[c].size()) +
                         " recipes");
      }
      results[c] = std::move(r);
    } catch (const Error& e) {
      const std::string where = "chunk " + std::to_string(c + 1) + "/" +
                                std::to_string(chunks.size()) + " (" +
                                chunks[c].front().id + ".." + chunks[c].back().id +
                                "): ";
      if (dynamic_cast<const ValidationError*>(&e)) {
        throw ValidationError(where + e.what());
      }
      if (dynamic_cast<const ParseError*>(&e)) throw ParseError(where + e.what());
      throw LlmError(where + e.what());
    }
  };
  const std::size_t width = std::max<std::size_t>(1, options.concurrency);
  for (std::size_t start = 0; start < chunks.size(); start += width) {
    const auto stop = std::min(chunks.size(), start + width);
    if (width == 1) {
      run(start);
      continue;
    }
    std::vector<std::future<void>> inflight;
    for (std::size_t c = start; c < stop; ++c) {
      inflight.push_back(std::async(std::launch::async, run, c));
    }
    for (auto& f : inflight) f.get();
  }
  std::map<std::string, double> ratings;
  std::size_t k = 0;
  for (const auto& chunk : results) {
    for (double v : chunk) ratings[recipes[k++].id] = v;
  }
  return ScoreVector(std::move(ratings));
}

}  // namespace menuopt::llm
