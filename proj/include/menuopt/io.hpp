#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "menuopt/domain.hpp"
#include "menuopt/errors.hpp"
#include "menuopt/text.hpp"

namespace menuopt::io {

using json = nlohmann::json;
namespace fs = std::filesystem;

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

inline json parse_json(std::string_view content, const std::string& source) {
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ":" +
                     std::to_string(text::line_of_offset(content, e.byte)) +
                     ": " + e.what());
  }
}

/// Splits one CSV record. Double-quoted fields may contain commas; "" is an
/// escaped quote.
inline std::vector<std::string> parse_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field");
  fields.push_back(std::move(cur));
  for (auto& f : fields) f = std::string(text::trim(f));
  return fields;
}

struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

/// Reads a CSV document whose header must equal `expected_header`.
/// Blank lines and lines starting with '#' are skipped.
inline std::vector<CsvRow> read_csv(std::string_view content,
                                    const std::vector<std::string>& expected_header,
                                    const std::string& source) {
  const auto lines = text::split_lines(content);
  std::vector<CsvRow> rows;
  bool header_seen = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto trimmed = text::trim(lines[i]);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<std::string> fields;
    try {
      fields = parse_csv_line(lines[i]);
    } catch (const ParseError& e) {
      throw ParseError(source + ":" + std::to_string(i + 1) + ": " + e.what());
    }
    if (!header_seen) {
      if (fields != expected_header) {
        throw ParseError(source + ":" + std::to_string(i + 1) +
                         ": expected header '" +
                         text::join(expected_header, ",") + "'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != expected_header.size()) {
      throw ParseError(source + ":" + std::to_string(i + 1) + ": expected " +
                       std::to_string(expected_header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    rows.push_back({i + 1, std::move(fields)});
  }
  if (!header_seen) {
    throw ParseError(source + ": missing header '" +
                     text::join(expected_header, ",") + "'");
  }
  return rows;
}

inline double parse_double(std::string_view s, const std::string& context) {
  s = text::trim(s);
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw ParseError(context + ": not a number: '" + std::string(s) + "'");
  }
  return v;
}

// ---- menus ---------------------------------------------------------------

inline Recipe recipe_from_json(const json& j, std::size_t index) {
  const std::string where = "recipe #" + std::to_string(index);
  if (!j.is_object()) throw ValidationError(where + " is not an object");
  const std::string id =
      j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>() : "";
  const std::string label = id.empty() ? where : "recipe '" + id + "'";
  auto field = [&](const char* name) -> const json& {
    if (!j.contains(name)) {
      throw ValidationError(label + ": missing field '" + name + "'");
    }
    return j[name];
  };
  try {
    Recipe r;
    r.id = field("id").get<std::string>();
    r.title = field("title").get<std::string>();
    r.description = field("description").get<std::string>();
    r.ingredients = field("ingredients").get<std::vector<std::string>>();
    r.origin = parse_origin(field("origin").get<std::string>());
    r.vegetarian = field("vegetarian").get<bool>();
    r.vegan = field("vegan").get<bool>();
    return r;
  } catch (const json::type_error& e) {
    throw ValidationError(label + ": " + e.what());
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    if (msg.starts_with(label)) throw;
    throw ValidationError(label + ": " + msg);
  }
}

inline json recipe_to_json(const Recipe& r) {
  json j = json::object();
  j["id"] = r.id;
  j["title"] = r.title;
  j["description"] = r.description;
  j["ingredients"] = r.ingredients;
  j["origin"] = to_string(r.origin);
  j["vegetarian"] = r.vegetarian;
  j["vegan"] = r.vegan;
  return j;
}

inline Menu menu_from_json(const json& j, std::string name) {
  if (!j.is_array()) throw ValidationError("menu document must be an array");
  if (j.empty()) throw ValidationError("menu '" + name + "' has no recipes");
  std::vector<Recipe> recipes;
  recipes.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    recipes.push_back(recipe_from_json(j[i], i));
  }
  return Menu(std::move(name), std::move(recipes));
}

inline json menu_to_json(const Menu& menu) {
  json arr = json::array();
  for (const auto& r : menu.recipes()) arr.push_back(recipe_to_json(r));
  return arr;
}

inline std::string serialize_menu(const Menu& menu) {
  return menu_to_json(menu).dump(2) + "\n";
}

/// Loads a menu JSON file. The menu is named after the file stem.
inline Menu load_menu(const fs::path& path) {
  const auto content = read_file(path);
  const auto j = parse_json(content, path.string());
  return menu_from_json(j, path.stem().string());
}

// ---- impacts -------------------------------------------------------------

inline ImpactTable parse_impact_table(std::string_view impacts_csv,
                                      std::string_view imputations_csv,
                                      const std::string& source = "impacts") {
  std::map<std::string, ImpactValues> entries;
  for (const auto& row :
       read_csv(impacts_csv, {"ingredient", "kg_co2e_per_kg", "animals_per_kg"},
                source)) {
    const auto ctx = source + ":" + std::to_string(row.line);
    ImpactValues v{parse_double(row.fields[1], ctx),
                   parse_double(row.fields[2], ctx)};
    if (v.emissions < 0.0 || v.animals < 0.0) {
      throw ValidationError(ctx + ": negative impact for '" + row.fields[0] +
                            "'");
    }
    entries[text::normalize_ingredient(row.fields[0])] = v;
  }
  std::map<std::string, std::string> imputations;
  if (!text::trim(imputations_csv).empty()) {
    for (const auto& row : read_csv(imputations_csv, {"ingredient", "donor"},
                                    source + " imputations")) {
      imputations[row.fields[0]] = row.fields[1];
    }
  }
  return ImpactTable(std::move(entries), std::move(imputations));
}

/// Loads the impact CSV and, when given, the imputation CSV.
inline ImpactTable load_impact_table(const fs::path& impacts,
                                     const fs::path& imputations = {}) {
  const auto a = read_file(impacts);
  const auto b = imputations.empty() ? std::string() : read_file(imputations);
  return parse_impact_table(a, b, impacts.string());
}

// ---- scores --------------------------------------------------------------

inline ScoreVector scores_from_json(const json& j, const Menu& menu) {
  if (!j.is_object()) throw ValidationError("scores document must be an object");
  std::map<std::string, double> ratings;
  for (const auto& [id, value] : j.items()) {
    if (!menu.contains(id)) {
      throw ValidationError("score for unknown recipe id '" + id + "'");
    }
    if (!value.is_number()) {
      throw ValidationError("score for '" + id + "' is not a number");
    }
    ratings[id] = value.get<double>();
  }
  return ScoreVector(std::move(ratings));
}

inline ScoreVector load_scores(const fs::path& path, const Menu& menu) {
  const auto content = read_file(path);
  return scores_from_json(parse_json(content, path.string()), menu);
}

/// Scores as a JSON object in menu order.
inline std::string serialize_scores(const ScoreVector& scores, const Menu& menu) {
  json j = json::object();
  for (const auto& r : menu.recipes()) {
    if (scores.contains(r.id)) j[r.id] = scores.rating(r.id);
  }
  return j.dump(2) + "\n";
}

// ---- choices, nutrition, lexicon -------------------------------------------

inline ChoiceLog load_choices(const fs::path& path,
                              const std::map<std::string, Menu>& menus) {
  std::vector<ChoiceRecord> records;
  for (const auto& row : read_csv(read_file(path),
                                  {"participant_id", "menu", "recipe_id"},
                                  path.string())) {
    records.push_back({row.fields[0], row.fields[1], row.fields[2]});
  }
  return ChoiceLog(std::move(records), menus);
}

inline std::vector<NutritionFacts> parse_nutrition(std::string_view content,
                                                   const std::string& source) {
  std::vector<NutritionFacts> out;
  for (const auto& row :
       read_csv(content,
                {"product_id", "serving_size_g", "fat_g", "protein_g", "sugar_g",
                 "sodium_mg"},
                source)) {
    const auto ctx = source + ":" + std::to_string(row.line);
    out.push_back(NutritionFacts::make(
        row.fields[0], parse_double(row.fields[1], ctx),
        parse_double(row.fields[2], ctx), parse_double(row.fields[3], ctx),
        parse_double(row.fields[4], ctx), parse_double(row.fields[5], ctx)));
  }
  return out;
}

inline std::vector<NutritionFacts> load_nutrition(const fs::path& path) {
  return parse_nutrition(read_file(path), path.string());
}

/// Lexicon file: one term per line under "[meat]" and "[animal_products]"
/// section headers. '#' starts a comment.
inline Lexicon parse_lexicon(std::string_view content) {
  Lexicon lex;
  std::set<std::string>* section = nullptr;
  for (const auto& raw : text::split_lines(content)) {
    auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line == "[meat]") {
      section = &lex.meat;
    } else if (line == "[animal_products]") {
      section = &lex.animal_products;
    } else if (section == nullptr) {
      throw ParseError("lexicon term before any section header");
    } else {
      section->insert(text::normalize_ingredient(line));
    }
  }
  return lex;
}

inline Lexicon load_lexicon(const fs::path& path) {
  return parse_lexicon(read_file(path));
}

/// Directory holding the bundled data assets.
inline fs::path data_dir() {
#ifdef MENUOPT_DATA_DIR
  return fs::path(MENUOPT_DATA_DIR);
#else
  return fs::path("data");
#endif
}

}  // namespace menuopt::io
