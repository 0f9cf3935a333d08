// src/config.cpp
#include "fonorico/config.h"

#include <cctype>
#include <charconv>
#include <fstream>

#include "fonorico/triphone.h"
#include "fonorico/util.h"

namespace fonorico {

namespace {

std::uint64_t parse_uint(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("config key '" + std::string(key) +
                      "': expected integer, got '" + std::string(value) + "'");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  try {
    std::size_t pos = 0;
    double out = std::stod(std::string(value), &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing chars");
    return out;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + std::string(key) +
                      "': expected number, got '" + std::string(value) + "'");
  }
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config key '" + std::string(key) +
                    "': expected boolean, got '" + std::string(value) + "'");
}

CalendarDate parse_date(std::string_view key, std::string_view value) {
  auto date = CalendarDate::parse(value);
  if (!date) {
    throw ConfigError("config key '" + std::string(key) +
                      "': expected YYYY-MM-DD date, got '" +
                      std::string(value) + "'");
  }
  return *date;
}

}  // namespace

PipelineConfig parse_config(std::istream& in) {
  PipelineConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    std::string key{trim(body.substr(0, eq))};
    std::string value{trim(body.substr(eq + 1))};

    SelectionConfig& sel = cfg.selection;
    ExclusionCriteria& exc = cfg.exclusion;
    if (key == "batch_size") {
      sel.batch_size = static_cast<std::uint32_t>(parse_uint(key, value));
    } else if (key == "phoneme_min_count") {
      sel.phoneme_min_count =
          static_cast<std::uint32_t>(parse_uint(key, value));
    } else if (key == "target_sentences") {
      sel.target_sentences =
          static_cast<std::uint32_t>(parse_uint(key, value));
    } else if (key == "reserve_sentences") {
      sel.reserve_sentences =
          static_cast<std::uint32_t>(parse_uint(key, value));
    } else if (key == "word_min") {
      sel.word_min = static_cast<std::uint32_t>(parse_uint(key, value));
    } else if (key == "word_max") {
      sel.word_max = static_cast<std::uint32_t>(parse_uint(key, value));
    } else if (key == "threshold_percentile") {
      sel.threshold_percentile = parse_double(key, value);
    } else if (key == "quota_declarative") {
      sel.type_quotas[0] = parse_double(key, value);
    } else if (key == "quota_interrogative") {
      sel.type_quotas[1] = parse_double(key, value);
    } else if (key == "quota_exclamative") {
      sel.type_quotas[2] = parse_double(key, value);
    } else if (key == "quotas_per_source") {
      sel.quotas_per_source = parse_bool(key, value);
    } else if (key == "weights_preset") {
      if (value == "uniform") {
        sel.category_weights = {1, 1, 1, 1, 1, 1, 1, 1};
      } else if (value == "rare_boosted") {
        sel.category_weights = SelectionConfig::rare_boosted_weights();
      } else {
        throw ConfigError(
            "config key 'weights_preset': expected uniform or rare_boosted");
      }
    } else if (key.starts_with("weight_")) {
      std::string name = key.substr(7);
      for (char& c : name) c = static_cast<char>(std::toupper(c));
      TriphoneCategory cat = category_from_name(name);
      sel.category_weights[static_cast<std::size_t>(cat)] =
          parse_double(key, value);
    } else if (key == "veto_patterns") {
      sel.veto_patterns.clear();
      for (std::string_view p : split(value, ',')) {
        std::string_view t = trim(p);
        if (!t.empty()) sel.veto_patterns.emplace_back(t);
      }
    } else if (key == "min_corpus_tokens") {
      exc.min_corpus_tokens = parse_uint(key, value);
    } else if (key == "max_nonstandard_ratio") {
      exc.max_nonstandard_ratio = parse_double(key, value);
    } else if (key == "date_start") {
      exc.date_start = parse_date(key, value);
    } else if (key == "date_end") {
      exc.date_end = parse_date(key, value);
    } else if (key == "workers") {
      cfg.workers = static_cast<unsigned>(parse_uint(key, value));
      if (cfg.workers == 0) {
        throw ConfigError("config key 'workers': must be at least 1");
      }
    } else {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
  }
  cfg.selection.validate();
  return cfg;
}

PipelineConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  return parse_config(in);
}

}  // namespace fonorico
