// tools/fonorico.cpp
//
// Pipeline driver. Stages hand data off through files so any stage can
// be rerun or inspected in isolation:
//
//   fonorico ingest     raw text/JSONL -> sentence records
//   fonorico transcribe sentence records -> phoneme records
//   fonorico select     phoneme records -> selected corpus + trace
//   fonorico analyze    selected corpus -> report + plot data
//   fonorico compare    reports -> relative richness table
//
// Progress and statistics go to stderr; data goes to files.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fonorico/analyze.h"
#include "fonorico/config.h"
#include "fonorico/g2p.h"
#include "fonorico/ingest.h"
#include "fonorico/records.h"
#include "fonorico/select.h"
#include "fonorico/util.h"

namespace fs = std::filesystem;
using namespace fonorico;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitSchema = 4;

struct CommonPaths {
  std::string config;
  std::string ruleset;
  std::string inventory;
};

PipelineConfig load_pipeline_config(const std::string& path) {
  if (path.empty()) return PipelineConfig{};
  return load_config_file(path);
}

// The inventory must outlive every transcriber and state derived from
// it; commands keep it in a stable holder.
struct InventoryHolder {
  std::unique_ptr<PhonemeInventory> custom;
  const PhonemeInventory& get() const {
    return custom ? *custom : default_inventory();
  }
};

InventoryHolder load_inventory_arg(const std::string& path) {
  InventoryHolder holder;
  if (!path.empty()) {
    holder.custom =
        std::make_unique<PhonemeInventory>(load_inventory_file(path));
  }
  return holder;
}

std::shared_ptr<const Ruleset> load_ruleset_arg(
    const std::string& path, const PhonemeInventory& inv) {
  if (path.empty()) {
    if (&inv == &default_inventory()) return Ruleset::builtin();
    return std::make_shared<const Ruleset>(Ruleset::builtin_for(inv));
  }
  return std::make_shared<const Ruleset>(Ruleset::load_file(path, inv));
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path.string());
  return out;
}

void require_readable(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw IoError("cannot open input file: " + path);
}

// --- ingest ---------------------------------------------------------

struct IngestArgs {
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::string output;
  std::string blocklist;
  CommonPaths common;
};

RawDocument document_from_json(const std::string& line, std::size_t line_no,
                               const std::string& fallback_source,
                               std::uint64_t offset) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw SchemaError("malformed JSON document", line_no);
  }
  auto it = j.find("text");
  if (it == j.end() || !it->is_string()) {
    throw SchemaError("missing field 'text'", line_no);
  }
  RawDocument doc;
  doc.text = it->get<std::string>();
  doc.source = j.value("source", fallback_source);
  doc.genre = j.value("genre", std::string{});
  doc.offset = offset;
  if (auto date = j.find("date"); date != j.end() && date->is_string()) {
    doc.date = CalendarDate::parse(date->get<std::string>());
    if (!doc.date) {
      throw SchemaError("bad value for field 'date'", line_no);
    }
  }
  return doc;
}

bool is_jsonl_input(const IngestArgs& args, const std::string& path) {
  if (args.format == "jsonl") return true;
  if (args.format == "text") return false;
  return fs::path(path).extension() == ".jsonl";
}

// Source labels come from file stems; two inputs with the same stem
// get numeric suffixes so record ids stay unique across the run.
std::vector<std::string> source_labels(const std::vector<std::string>& paths) {
  std::vector<std::string> labels;
  labels.reserve(paths.size());
  std::unordered_map<std::string, int> used;
  for (const std::string& path : paths) {
    std::string stem = fs::path(path).stem().string();
    int n = used[stem]++;
    labels.push_back(n == 0 ? stem : stem + "-" + std::to_string(n + 1));
  }
  return labels;
}

void for_each_document(const IngestArgs& args, const std::string& path,
                       const std::string& source,
                       const std::function<void(RawDocument&&)>& fn) {
  if (is_jsonl_input(args, path)) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input file: " + path);
    std::string line;
    std::size_t line_no = 0;
    std::uint64_t offset = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::uint64_t line_offset = offset;
      offset += line.size() + 1;
      if (trim(line).empty()) continue;
      fn(document_from_json(line, line_no, source, line_offset));
    }
  } else {
    read_plaintext_documents(path, source, fn);
  }
}

int cmd_ingest(const IngestArgs& args) {
  PipelineConfig cfg = load_pipeline_config(args.common.config);
  InventoryHolder inventory = load_inventory_arg(args.common.inventory);
  Transcriber transcriber(load_ruleset_arg(args.common.ruleset,
                                           inventory.get()),
                          inventory.get());
  ExclusionCriteria criteria = cfg.exclusion;
  if (!args.blocklist.empty()) {
    criteria.blocklist = load_blocklist(args.blocklist);
  }
  for (const std::string& input : args.inputs) require_readable(input);

  std::ofstream out = open_output(args.output);
  std::uint64_t documents = 0;
  std::uint64_t written = 0;
  DropCounts totals;
  std::vector<std::string> labels = source_labels(args.inputs);

  for (std::size_t input_idx = 0; input_idx < args.inputs.size();
       ++input_idx) {
    const std::string& input = args.inputs[input_idx];
    const std::string& label = labels[input_idx];
    // First pass: the corpus-size criterion needs the token count over
    // the whole source corpus before anything is emitted.
    std::uint64_t corpus_tokens = 0;
    for_each_document(args, input, label, [&](RawDocument&& doc) {
      corpus_tokens += tokenize(clean(doc.text)).size();
    });

    ExclusionFilter filter(criteria, [&](std::string_view token) {
      return transcriber.can_transcribe(token);
    });
    if (!filter.corpus_admissible(corpus_tokens)) {
      std::cerr << "ingest: " << input << ": corpus rejected (" << corpus_tokens
                << " tokens < " << criteria.min_corpus_tokens << ")\n";
      totals.corpus_too_small += 1;
      continue;
    }

    for_each_document(args, input, label, [&](RawDocument&& doc) {
      ++documents;
      if (!filter.document_admissible(doc)) return;
      doc.text = clean(doc.text);
      for (SentenceRecord& rec : segment(doc)) {
        if (!filter.record_admissible(rec)) continue;
        out << to_jsonl(rec) << '\n';
        ++written;
      }
    });

    const DropCounts& drops = filter.drops();
    totals.date_out_of_range += drops.date_out_of_range;
    totals.blocklisted += drops.blocklisted;
    totals.nonstandard += drops.nonstandard;
    totals.empty += drops.empty;
    totals.kept += drops.kept;
    std::cerr << "ingest: " << input << ": " << corpus_tokens << " tokens, "
              << drops.kept << " sentences kept\n";
  }

  std::cerr << "ingest: documents=" << documents << " kept=" << written
            << " dropped_corpus_too_small=" << totals.corpus_too_small
            << " dropped_date=" << totals.date_out_of_range
            << " dropped_blocklist=" << totals.blocklisted
            << " dropped_nonstandard=" << totals.nonstandard
            << " dropped_empty=" << totals.empty << '\n';
  return kExitOk;
}

// --- transcribe -----------------------------------------------------

struct TranscribeArgs {
  std::string input;
  std::string output;
  unsigned workers = 0;  // 0 = from config (default 1)
  CommonPaths common;
};

int cmd_transcribe(const TranscribeArgs& args) {
  PipelineConfig cfg = load_pipeline_config(args.common.config);
  unsigned workers = args.workers != 0 ? args.workers : cfg.workers;
  if (workers == 0) workers = 1;

  InventoryHolder inventory = load_inventory_arg(args.common.inventory);
  const PhonemeInventory& inv = inventory.get();
  std::shared_ptr<const Ruleset> rules =
      load_ruleset_arg(args.common.ruleset, inv);

  require_readable(args.input);
  std::ifstream in(args.input);
  std::ofstream out = open_output(args.output);

  std::uint64_t sentences = 0;
  std::uint64_t incomplete = 0;

  // Chunked parallel transcription: workers share the immutable
  // ruleset, each owns a transcriber (the token cache is per-thread),
  // and results are written back in input order.
  const std::size_t chunk_target = std::max<std::size_t>(512, 256 * workers);
  std::vector<std::pair<std::string, std::size_t>> chunk;  // line, line_no
  std::vector<Transcriber> transcribers;
  transcribers.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    transcribers.emplace_back(rules, inv);
  }

  auto flush_chunk = [&] {
    if (chunk.empty()) return;
    std::vector<std::string> results(chunk.size());
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned worker) {
      try {
        for (std::size_t i = worker; i < chunk.size(); i += workers) {
          SentenceRecord rec =
              sentence_record_from_json(chunk[i].first, chunk[i].second);
          Transcription t = transcribers[worker].transcribe(rec.tokens);
          TranscribedRecord full;
          full.id = std::move(rec.id);
          full.text = std::move(rec.text);
          full.tokens = std::move(rec.tokens);
          full.sentence_type = rec.sentence_type;
          full.source = std::move(rec.source);
          full.phonemes = std::move(t.phonemes);
          full.syllable_count = t.syllable_count;
          full.failed_tokens = std::move(t.failed_tokens);
          results[i] = to_jsonl(full, inv);
        }
      } catch (...) {
        errors[worker] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    for (const std::exception_ptr& error : errors) {
      if (error) std::rethrow_exception(error);
    }
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      out << results[i] << '\n';
      ++sentences;
      // Cheap check: serialized failed_tokens array is empty.
      if (results[i].find("\"failed_tokens\":[]") == std::string::npos) {
        ++incomplete;
      }
    }
    chunk.clear();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    chunk.emplace_back(line, line_no);
    if (chunk.size() >= chunk_target) flush_chunk();
  }
  flush_chunk();

  std::cerr << "transcribe: sentences=" << sentences
            << " incomplete=" << incomplete << " workers=" << workers << '\n';
  return kExitOk;
}

// --- select ---------------------------------------------------------

struct SelectArgs {
  std::string input;
  std::string output_dir;
  bool random_baseline = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;  // total triphones for --random-baseline
  CommonPaths common;
};

void write_selected(const fs::path& dir,
                    const std::vector<SelectedRecord>& records,
                    const std::vector<TraceEntry>& trace,
                    const PhonemeInventory& inv) {
  std::ofstream selected = open_output(dir / "selected.jsonl");
  for (const SelectedRecord& rec : records) {
    selected << to_jsonl(rec, inv) << '\n';
  }
  std::ofstream trace_out = open_output(dir / "trace.jsonl");
  for (const TraceEntry& entry : trace) {
    trace_out << to_jsonl(entry) << '\n';
  }
}

int cmd_select(const SelectArgs& args) {
  PipelineConfig cfg = load_pipeline_config(args.common.config);
  InventoryHolder inventory = load_inventory_arg(args.common.inventory);
  const PhonemeInventory& inv = inventory.get();
  require_readable(args.input);

  if (args.random_baseline) {
    if (args.budget == 0) {
      throw ConfigError("--random-baseline requires --budget (total "
                        "triphones)");
    }
    // Uniform draw from the eligible pool until the triphone budget is
    // crossed; seeded Fisher-Yates over the eligible line numbers.
    JsonlSource scan(args.input, inv);
    std::vector<std::uint64_t> eligible;
    DropReasons drops;
    {
      TranscribedRecord rec;
      std::uint64_t index = 0;
      while (scan.next(rec)) {
        if (rec.tokens.size() >= cfg.selection.word_min &&
            rec.tokens.size() <= cfg.selection.word_max &&
            phonotactic_postfilter(rec, cfg.selection, &drops)) {
          eligible.push_back(index);
        }
        ++index;
      }
    }
    std::mt19937_64 rng(args.seed);
    for (std::size_t i = eligible.size(); i > 1; --i) {
      std::swap(eligible[i - 1], eligible[rng() % i]);
    }

    // Load records by original index, then emit in shuffled order.
    std::unordered_map<std::uint64_t, std::size_t> order;
    for (std::size_t i = 0; i < eligible.size(); ++i) order[eligible[i]] = i;
    std::vector<TranscribedRecord> pool(eligible.size());
    {
      JsonlSource reread(args.input, inv);
      TranscribedRecord rec;
      std::uint64_t index = 0;
      while (reread.next(rec)) {
        auto it = order.find(index);
        if (it != order.end()) pool[it->second] = rec;
        ++index;
      }
    }

    TriphoneInventory counts(inv);
    std::vector<SelectedRecord> records;
    std::vector<TraceEntry> trace;
    for (const TranscribedRecord& rec : pool) {
      if (counts.total_count() >= args.budget) break;
      auto triphones = extract(rec.phonemes);
      NewContribution c = counts.add(triphones);
      SelectedRecord sel;
      sel.id = rec.id;
      sel.text = rec.text;
      sel.sentence_type = rec.sentence_type;
      sel.source = rec.source;
      sel.phonemes = rec.phonemes;
      sel.new_by_category = c.by_category;
      records.push_back(std::move(sel));
      TraceEntry entry;
      entry.seq = static_cast<std::uint32_t>(trace.size());
      entry.id = rec.id;
      entry.sentence_type = rec.sentence_type;
      entry.new_by_category = c.by_category;
      entry.new_total = c.total();
      entry.triphone_total = static_cast<std::uint32_t>(triphones.size());
      trace.push_back(std::move(entry));
    }
    write_selected(args.output_dir, records, trace, inv);
    std::cerr << "select: random baseline seed=" << args.seed << " sentences="
              << records.size() << " distinct=" << counts.distinct_count()
              << " total=" << counts.total_count() << '\n';
    return kExitOk;
  }

  JsonlSource source(args.input, inv);
  SelectionResult result = run_selection(source, inv, cfg.selection);
  write_selected(args.output_dir, result.records, result.trace, inv);

  if (!result.coverage.covered) {
    std::cerr << "select: warning: phoneme coverage unreachable, missing:";
    for (const std::string& symbol : result.coverage.uncovered_symbols) {
      std::cerr << " /" << symbol << "/";
    }
    std::cerr << '\n';
  }
  if (result.shortfall > 0) {
    std::cerr << "select: warning: target not reached, short by "
              << result.shortfall << " sentences\n";
  }
  std::cerr << "select: sentences=" << result.records.size()
            << " distinct=" << result.distinct_triphones
            << " total=" << result.total_triphones << " ratio="
            << render_percent(result.distinct_triphones,
                              result.total_triphones)
            << " dropped_length=" << result.ineligible_length
            << " dropped_untranscribable="
            << result.postfilter_drops.untranscribable
            << " dropped_proper_noun=" << result.postfilter_drops.proper_noun
            << " dropped_veto=" << result.postfilter_drops.veto_pattern
            << '\n';
  return kExitOk;
}

// --- analyze --------------------------------------------------------

struct AnalyzeArgs {
  std::string input;      // selected.jsonl
  std::string trace;      // trace.jsonl
  std::string triphones;  // alternative input: triphone dump
  std::string name = "corpus";
  std::string output_dir;
  CommonPaths common;
};

void write_series_csv(const fs::path& path, std::span<const double> values) {
  std::ofstream out = open_output(path);
  out << "index,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i + 1) << ',' << values[i] << '\n';
  }
}

int cmd_analyze(const AnalyzeArgs& args) {
  InventoryHolder inventory = load_inventory_arg(args.common.inventory);
  const PhonemeInventory& inv = inventory.get();
  fs::path dir(args.output_dir);

  TriphoneInventory counts(inv);
  std::vector<TraceEntry> trace;
  std::uint64_t token_count = 0;
  std::uint64_t selected_sentences = 0;
  std::vector<std::uint32_t> syllable_counts;

  if (!args.triphones.empty()) {
    require_readable(args.triphones);
    std::ifstream in(args.triphones);
    counts = TriphoneInventory::load(in, inv);
  } else {
    if (args.input.empty()) {
      throw ConfigError("analyze needs --input or --triphones");
    }
    require_readable(args.input);
    std::ifstream in(args.input);
    for_each_line(in, [&](const std::string& line, std::size_t line_no) {
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) {
        throw SchemaError("malformed selected record", line_no);
      }
      if (!j.contains("phonemes") || !j["phonemes"].is_string()) {
        throw SchemaError("missing field 'phonemes'", line_no);
      }
      std::string phoneme_str = j["phonemes"].get<std::string>();
      std::vector<PhonemeId> phonemes;
      for (std::string_view symbol : split(phoneme_str, ' ')) {
        if (symbol.empty()) continue;
        try {
          phonemes.push_back(inv.id_of(symbol));
        } catch (const UnknownSymbolError& e) {
          throw SchemaError(e.what(), line_no);
        }
      }
      counts.add(extract(phonemes));
      syllable_counts.push_back(count_syllables(phonemes, inv));
      if (j.contains("text") && j["text"].is_string()) {
        token_count += tokenize(j["text"].get<std::string>()).size();
      }
      ++selected_sentences;
    });
    if (!args.trace.empty()) {
      trace = load_trace_file(args.trace);
    }
  }

  RichnessReport report = richness(counts, args.name);

  SaturationResult saturation;
  bool have_saturation = false;
  if (trace.size() >= 3) {
    saturation = saturation_point(trace);
    have_saturation = true;
    NewTriphoneSeries series = new_triphone_series(trace);
    write_series_csv(dir / "new_triphones.csv", series.per_sentence);
    write_series_csv(dir / "cumulative_mean.csv", series.cumulative_mean);
    write_series_csv(dir / "saturation_drift.csv",
                     cusum_drift(series.per_sentence));
  }

  {
    // Per-category distinct counts, histogram style.
    std::ofstream hist = open_output(dir / "category_histogram.csv");
    hist << "category,distinct,total\n";
    for (std::size_t c = 0; c < kCategoryCount; ++c) {
      hist << category_name(static_cast<TriphoneCategory>(c)) << ','
           << report.per_category[c].distinct << ','
           << report.per_category[c].total << '\n';
    }
  }
  {
    std::ofstream dump = open_output(dir / "triphones.tsv");
    counts.save(dump);
  }

  DurationEstimate avg4 =
      estimate_duration(token_count, SyllableBasis::kAverageFour);
  DurationEstimate phonemic = estimate_duration(
      token_count, SyllableBasis::kPhonemicCount, syllable_counts);
  bool have_duration = token_count > 0;

  {
    std::ofstream json_out = open_output(dir / "report.json");
    json_out << report_to_json(report,
                               have_saturation ? &saturation : nullptr,
                               have_duration ? &avg4 : nullptr,
                               have_duration ? &phonemic : nullptr,
                               selected_sentences)
             << '\n';
  }
  {
    std::ofstream text_out = open_output(dir / "report.txt");
    std::array<RichnessReport, 1> reports = {report};
    text_out << render_richness_table(reports) << '\n'
             << render_category_table(report);
    if (have_saturation) {
      text_out << "\nsaturation: statistic=" << saturation.statistic
               << " critical=" << saturation.critical_value;
      if (saturation.changepoint_index.has_value()) {
        text_out << " changepoint=" << *saturation.changepoint_index
                 << " (recommended batch size)";
      } else {
        text_out << " no changepoint at the critical value";
      }
      text_out << '\n';
    }
    if (have_duration) {
      char buf[128];
      std::snprintf(buf, sizeof buf,
                    "\nduration: tokens=%llu avg4=%.2fh phonemic=%.2fh\n",
                    static_cast<unsigned long long>(token_count), avg4.hours,
                    phonemic.hours);
      text_out << buf;
    }
  }

  std::cerr << "analyze: " << args.name << " distinct=" << report.distinct
            << " total=" << report.total << " ratio="
            << render_percent(report.distinct, report.total) << '\n';
  return kExitOk;
}

// --- compare --------------------------------------------------------

struct CompareArgs {
  std::vector<std::string> reports;
  std::string baseline;
};

int cmd_compare(const CompareArgs& args) {
  std::vector<RichnessReport> reports;
  for (const std::string& path : args.reports) {
    require_readable(path);
    reports.push_back(report_from_json_file(path));
  }
  auto rows = compare(reports, args.baseline);
  std::cout << render_comparison(rows);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phonetically rich corpus construction toolkit"};
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand("ingest",
                                    "clean, segment and filter raw corpora");
  ingest->add_option("--input", ingest_args.inputs, "input files")
      ->required()
      ->expected(-1);
  ingest->add_option("--format", ingest_args.format,
                     "input format: auto, text, jsonl");
  ingest->add_option("--output", ingest_args.output, "sentence-record file")
      ->required();
  ingest->add_option("--config", ingest_args.common.config, "config file");
  ingest->add_option("--blocklist", ingest_args.blocklist, "blocklist file");
  ingest->add_option("--ruleset", ingest_args.common.ruleset, "G2P ruleset");
  ingest->add_option("--inventory", ingest_args.common.inventory,
                     "phoneme inventory override");

  TranscribeArgs transcribe_args;
  auto* transcribe =
      app.add_subcommand("transcribe", "grapheme-to-phoneme conversion");
  transcribe->add_option("--input", transcribe_args.input, "sentence records")
      ->required();
  transcribe->add_option("--output", transcribe_args.output,
                         "transcribed-record file")
      ->required();
  transcribe->add_option("--workers", transcribe_args.workers,
                         "parallel transcription threads");
  transcribe->add_option("--config", transcribe_args.common.config,
                         "config file");
  transcribe->add_option("--ruleset", transcribe_args.common.ruleset,
                         "G2P ruleset");
  transcribe->add_option("--inventory", transcribe_args.common.inventory,
                         "phoneme inventory override");

  SelectArgs select_args;
  auto* select = app.add_subcommand("select",
                                    "greedy triphone-coverage selection");
  select->add_option("--input", select_args.input, "transcribed records")
      ->required();
  select->add_option("--output", select_args.output_dir, "output directory")
      ->required();
  select->add_option("--config", select_args.common.config, "config file");
  select->add_option("--inventory", select_args.common.inventory,
                     "phoneme inventory override");
  select->add_flag("--random-baseline", select_args.random_baseline,
                   "uniform random selection instead of the algorithm");
  select->add_option("--seed", select_args.seed,
                     "random-baseline seed (baseline mode only)");
  select->add_option("--budget", select_args.budget,
                     "random-baseline total-triphone budget");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "richness report and series");
  analyze->add_option("--input", analyze_args.input, "selected corpus");
  analyze->add_option("--trace", analyze_args.trace, "selection trace");
  analyze->add_option("--triphones", analyze_args.triphones,
                      "triphone dump instead of a selected corpus");
  analyze->add_option("--name", analyze_args.name, "corpus name in reports");
  analyze->add_option("--output", analyze_args.output_dir, "output directory")
      ->required();
  analyze->add_option("--inventory", analyze_args.common.inventory,
                      "phoneme inventory override");

  CompareArgs compare_args;
  auto* cmp = app.add_subcommand("compare", "relative richness of reports");
  cmp->add_option("reports", compare_args.reports, "report.json files")
      ->required()
      ->expected(-1);
  cmp->add_option("--baseline", compare_args.baseline, "baseline report name")
      ->required();

  try {
    app.parse(argc, argv);
    if (*ingest) return cmd_ingest(ingest_args);
    if (*transcribe) return cmd_transcribe(transcribe_args);
    if (*select) return cmd_select(select_args);
    if (*analyze) return cmd_analyze(analyze_args);
    if (*cmp) return cmd_compare(compare_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnknownSymbolError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}
