// include/fonorico/records.h
//
// Line-delimited JSON record formats used for stage handoff between
// the CLI commands. Readers throw SchemaError with the 1-based line
// number of the offending record.
#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "fonorico/analyze.h"
#include "fonorico/ingest.h"
#include "fonorico/select.h"

namespace fonorico {

std::string to_jsonl(const SentenceRecord& rec);
SentenceRecord sentence_record_from_json(const std::string& line,
                                         std::size_t line_no);

std::string to_jsonl(const TranscribedRecord& rec,
                     const PhonemeInventory& inv);
TranscribedRecord transcribed_record_from_json(const std::string& line,
                                               std::size_t line_no,
                                               const PhonemeInventory& inv);

std::string to_jsonl(const SelectedRecord& rec, const PhonemeInventory& inv);
std::string to_jsonl(const TraceEntry& entry);
TraceEntry trace_entry_from_json(const std::string& line, std::size_t line_no);

// Streams a JSONL file record by record; bounded memory.
void for_each_line(std::istream& in,
                   const std::function<void(const std::string&, std::size_t)>&
                       on_line);

std::vector<TraceEntry> load_trace_file(const std::string& path);

// Rewindable JSONL source for run_selection; reopens the file on
// rewind so memory stays bounded.
class JsonlSource final : public TranscribedSource {
 public:
  JsonlSource(std::string path, const PhonemeInventory& inv);
  ~JsonlSource() override;
  void rewind() override;
  bool next(TranscribedRecord& out) override;

 private:
  std::string path_;
  const PhonemeInventory* inv_;
  std::unique_ptr<std::ifstream> in_;
  std::size_t line_no_ = 0;
};

std::string report_to_json(const RichnessReport& report,
                           const SaturationResult* saturation,
                           const DurationEstimate* avg4,
                           const DurationEstimate* phonemic,
                           std::uint64_t selected_sentences);
RichnessReport report_from_json_file(const std::string& path);

}  // namespace fonorico
