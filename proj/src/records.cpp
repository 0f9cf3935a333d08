// src/records.cpp
#include "fonorico/records.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fonorico/util.h"

namespace fonorico {

using nlohmann::json;

namespace {

json parse_line(const std::string& line, std::size_t line_no) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw SchemaError("malformed JSON record", line_no);
  }
  return j;
}

template <typename T>
T field(const json& j, const char* name, std::size_t line_no) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw SchemaError(std::string("missing field '") + name + "'", line_no);
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("bad value for field '") + name + "'",
                      line_no);
  }
}

std::string phonemes_to_string(std::span<const PhonemeId> phonemes,
                               const PhonemeInventory& inv) {
  std::string out;
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += inv.symbol_of(phonemes[i]);
  }
  return out;
}

std::vector<PhonemeId> phonemes_from_string(const std::string& s,
                                            const PhonemeInventory& inv,
                                            std::size_t line_no) {
  std::vector<PhonemeId> out;
  for (std::string_view sym : split(s, ' ')) {
    if (sym.empty()) continue;
    try {
      out.push_back(inv.id_of(sym));
    } catch (const UnknownSymbolError& e) {
      throw SchemaError(e.what(), line_no);
    }
  }
  return out;
}

json categories_to_json(const std::array<std::uint32_t, kCategoryCount>& v) {
  json out = json::object();
  for (std::size_t c = 0; c < kCategoryCount; ++c) {
    out[std::string(category_name(static_cast<TriphoneCategory>(c)))] = v[c];
  }
  return out;
}

std::array<std::uint32_t, kCategoryCount> categories_from_json(
    const json& j, std::size_t line_no) {
  std::array<std::uint32_t, kCategoryCount> out{};
  if (!j.is_object()) {
    throw SchemaError("category map must be an object", line_no);
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t c;
    try {
      c = static_cast<std::size_t>(category_from_name(it.key()));
    } catch (const ConfigError&) {
      throw SchemaError("unknown category '" + it.key() + "'", line_no);
    }
    out[c] = it.value().get<std::uint32_t>();
  }
  return out;
}

}  // namespace

std::string to_jsonl(const SentenceRecord& rec) {
  json j;
  j["id"] = rec.id;
  j["text"] = rec.text;
  j["tokens"] = rec.tokens;
  j["sentence_type"] = std::string(to_string(rec.sentence_type));
  j["source"] = rec.source;
  return j.dump();
}

SentenceRecord sentence_record_from_json(const std::string& line,
                                         std::size_t line_no) {
  json j = parse_line(line, line_no);
  SentenceRecord rec;
  rec.id = field<std::string>(j, "id", line_no);
  rec.text = field<std::string>(j, "text", line_no);
  rec.tokens = field<std::vector<std::string>>(j, "tokens", line_no);
  try {
    rec.sentence_type = sentence_type_from_string(
        field<std::string>(j, "sentence_type", line_no));
  } catch (const ConfigError& e) {
    throw SchemaError(e.what(), line_no);
  }
  rec.source = field<std::string>(j, "source", line_no);
  return rec;
}

std::string to_jsonl(const TranscribedRecord& rec,
                     const PhonemeInventory& inv) {
  json j;
  j["id"] = rec.id;
  j["text"] = rec.text;
  j["tokens"] = rec.tokens;
  j["sentence_type"] = std::string(to_string(rec.sentence_type));
  j["source"] = rec.source;
  j["phonemes"] = phonemes_to_string(rec.phonemes, inv);
  j["syllable_count"] = rec.syllable_count;
  j["failed_tokens"] = rec.failed_tokens;
  return j.dump();
}

TranscribedRecord transcribed_record_from_json(const std::string& line,
                                               std::size_t line_no,
                                               const PhonemeInventory& inv) {
  json j = parse_line(line, line_no);
  TranscribedRecord rec;
  rec.id = field<std::string>(j, "id", line_no);
  rec.text = field<std::string>(j, "text", line_no);
  rec.tokens = field<std::vector<std::string>>(j, "tokens", line_no);
  try {
    rec.sentence_type = sentence_type_from_string(
        field<std::string>(j, "sentence_type", line_no));
  } catch (const ConfigError& e) {
    throw SchemaError(e.what(), line_no);
  }
  rec.source = field<std::string>(j, "source", line_no);
  rec.phonemes = phonemes_from_string(
      field<std::string>(j, "phonemes", line_no), inv, line_no);
  rec.syllable_count = field<std::uint32_t>(j, "syllable_count", line_no);
  rec.failed_tokens =
      field<std::vector<std::string>>(j, "failed_tokens", line_no);
  return rec;
}

std::string to_jsonl(const SelectedRecord& rec, const PhonemeInventory& inv) {
  json j;
  j["id"] = rec.id;
  j["text"] = rec.text;
  j["sentence_type"] = std::string(to_string(rec.sentence_type));
  j["source"] = rec.source;
  j["phonemes"] = phonemes_to_string(rec.phonemes, inv);
  j["new_triphones_by_category"] = categories_to_json(rec.new_by_category);
  j["reserve"] = rec.reserve;
  return j.dump();
}

std::string to_jsonl(const TraceEntry& entry) {
  json j;
  j["seq"] = entry.seq;
  j["id"] = entry.id;
  j["sentence_type"] = std::string(to_string(entry.sentence_type));
  j["new_by_category"] = categories_to_json(entry.new_by_category);
  j["new_total"] = entry.new_total;
  j["triphone_total"] = entry.triphone_total;
  j["score"] = entry.score;
  j["reserve"] = entry.reserve;
  return j.dump();
}

TraceEntry trace_entry_from_json(const std::string& line,
                                 std::size_t line_no) {
  json j = parse_line(line, line_no);
  TraceEntry entry;
  entry.seq = field<std::uint32_t>(j, "seq", line_no);
  entry.id = field<std::string>(j, "id", line_no);
  try {
    entry.sentence_type = sentence_type_from_string(
        field<std::string>(j, "sentence_type", line_no));
  } catch (const ConfigError& e) {
    throw SchemaError(e.what(), line_no);
  }
  auto it = j.find("new_by_category");
  if (it == j.end()) throw SchemaError("missing field 'new_by_category'",
                                       line_no);
  entry.new_by_category = categories_from_json(*it, line_no);
  entry.new_total = field<std::uint32_t>(j, "new_total", line_no);
  entry.triphone_total = field<std::uint32_t>(j, "triphone_total", line_no);
  entry.score = field<double>(j, "score", line_no);
  entry.reserve = field<bool>(j, "reserve", line_no);
  return entry;
}

void for_each_line(std::istream& in,
                   const std::function<void(const std::string&, std::size_t)>&
                       on_line) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    on_line(line, line_no);
  }
}

std::vector<TraceEntry> load_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trace file: " + path);
  std::vector<TraceEntry> out;
  for_each_line(in, [&](const std::string& line, std::size_t line_no) {
    out.push_back(trace_entry_from_json(line, line_no));
  });
  return out;
}

JsonlSource::JsonlSource(std::string path, const PhonemeInventory& inv)
    : path_(std::move(path)), inv_(&inv) {
  rewind();
}

JsonlSource::~JsonlSource() = default;

void JsonlSource::rewind() {
  in_ = std::make_unique<std::ifstream>(path_);
  if (!*in_) throw IoError("cannot open records file: " + path_);
  line_no_ = 0;
}

bool JsonlSource::next(TranscribedRecord& out) {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_no_;
    if (trim(line).empty()) continue;
    out = transcribed_record_from_json(line, line_no_, *inv_);
    return true;
  }
  return false;
}

std::string report_to_json(const RichnessReport& report,
                           const SaturationResult* saturation,
                           const DurationEstimate* avg4,
                           const DurationEstimate* phonemic,
                           std::uint64_t selected_sentences) {
  json j;
  j["name"] = report.name;
  j["distinct"] = report.distinct;
  j["total"] = report.total;
  j["ratio_percent"] =
      report.defined() ? json(render_percent(report.distinct, report.total))
                       : json(nullptr);
  json per_category = json::object();
  for (std::size_t c = 0; c < kCategoryCount; ++c) {
    const CategoryRichness& counts = report.per_category[c];
    json cat;
    cat["distinct"] = counts.distinct;
    cat["total"] = counts.total;
    cat["ratio_percent"] =
        counts.total > 0 ? json(render_percent(counts.distinct, counts.total))
                         : json(nullptr);
    per_category[std::string(category_name(static_cast<TriphoneCategory>(c)))] =
        cat;
  }
  j["per_category"] = per_category;
  j["selected_sentences"] = selected_sentences;
  if (saturation != nullptr) {
    json s;
    s["statistic"] = saturation->statistic;
    s["critical_value"] = saturation->critical_value;
    s["series_length"] = saturation->series_length;
    s["changepoint_index"] = saturation->changepoint_index.has_value()
                                 ? json(*saturation->changepoint_index)
                                 : json(nullptr);
    j["saturation"] = s;
  }
  if (avg4 != nullptr || phonemic != nullptr) {
    json d = json::object();
    if (avg4 != nullptr) d["average_four_hours"] = avg4->hours;
    if (phonemic != nullptr) d["phonemic_hours"] = phonemic->hours;
    j["duration"] = d;
  }
  return j.dump(2);
}

RichnessReport report_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open report file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j = json::parse(buffer.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw SchemaError("malformed report JSON in " + path, 1);
  }
  RichnessReport report;
  report.name = field<std::string>(j, "name", 1);
  report.distinct = field<std::uint64_t>(j, "distinct", 1);
  report.total = field<std::uint64_t>(j, "total", 1);
  auto it = j.find("per_category");
  if (it != j.end() && it->is_object()) {
    for (auto cat = it->begin(); cat != it->end(); ++cat) {
      std::size_t c;
      try {
        c = static_cast<std::size_t>(category_from_name(cat.key()));
      } catch (const ConfigError&) {
        throw SchemaError("unknown category '" + cat.key() + "'", 1);
      }
      report.per_category[c].distinct =
          field<std::uint64_t>(cat.value(), "distinct", 1);
      report.per_category[c].total =
          field<std::uint64_t>(cat.value(), "total", 1);
    }
  }
  return report;
}

}  // namespace fonorico
