// tests/test_cli.cpp
//
// End-to-end runs of the pipeline binary. Each stage writes files into
// a scratch directory; reruns must be byte-identical.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fonorico/records.h"
#include "fonorico/triphone.h"
#include "fonorico/util.h"
#include "support/golden.h"
#include "support/pipeline.h"

using namespace fonorico;
namespace fs = std::filesystem;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("fonorico-test-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter()++));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
  fs::path operator/(const std::string& name) const { return dir / name; }
};

int run(const std::string& command) {
  int status = std::system(command.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string binary() { return FONORICO_BIN; }

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string quiet() { return " 2>/dev/null"; }

}  // namespace

TEST_CASE("ingest produces records and honors the corpus minimum") {
  Scratch scratch;
  write_file(scratch / "docs.txt",
             "Pesquisa é uma coisa que muda toda hora. Isso é muito "
             "extremo.\n\nEm Florianópolis, fez dois graus celsius no "
             "domingo.\n");
  write_file(scratch / "permissive.conf", "min_corpus_tokens = 1\n");

  SUBCASE("two documents in, records out") {
    int code = run(binary() + " ingest --input " +
                   (scratch / "docs.txt").string() + " --output " +
                   (scratch / "records.jsonl").string() + " --config " +
                   (scratch / "permissive.conf").string() + quiet());
    CHECK(code == 0);
    std::string records = read_file(scratch / "records.jsonl");
    CHECK(std::count(records.begin(), records.end(), '\n') == 3);
  }

  SUBCASE("default 5000-token minimum rejects the tiny corpus") {
    int code = run(binary() + " ingest --input " +
                   (scratch / "docs.txt").string() + " --output " +
                   (scratch / "records.jsonl").string() + quiet());
    CHECK(code == 0);
    CHECK(read_file(scratch / "records.jsonl").empty());
  }

  SUBCASE("missing input path exits 3") {
    int code = run(binary() + " ingest --input " +
                   (scratch / "missing.txt").string() + " --output " +
                   (scratch / "records.jsonl").string() + quiet());
    CHECK(code == 3);
  }

  SUBCASE("ingest reruns byte-identically") {
    std::string cmd = binary() + " ingest --input " +
                      (scratch / "docs.txt").string() + " --output " +
                      (scratch / "records.jsonl").string() + " --config " +
                      (scratch / "permissive.conf").string() + quiet();
    REQUIRE(run(cmd) == 0);
    std::string first = read_file(scratch / "records.jsonl");
    REQUIRE(run(cmd) == 0);
    CHECK(read_file(scratch / "records.jsonl") == first);
  }

  SUBCASE("same-stem inputs keep ids unique") {
    fs::create_directories(scratch / "a");
    fs::create_directories(scratch / "b");
    write_file(scratch / "a" / "same.txt", "Uma frase igual aqui.\n");
    write_file(scratch / "b" / "same.txt", "Uma frase igual aqui.\n");
    REQUIRE(run(binary() + " ingest --input " +
                (scratch / "a" / "same.txt").string() + " " +
                (scratch / "b" / "same.txt").string() + " --output " +
                (scratch / "records.jsonl").string() + " --config " +
                (scratch / "permissive.conf").string() + quiet()) == 0);
    std::istringstream lines(read_file(scratch / "records.jsonl"));
    std::string line;
    std::set<std::string> ids;
    int count = 0;
    while (std::getline(lines, line)) {
      ids.insert(sentence_record_from_json(line, 1).id);
      ++count;
    }
    CHECK(count == 2);
    CHECK(ids.size() == 2);
  }
}

TEST_CASE("transcription output is independent of worker count") {
  Scratch scratch;
  std::string docs;
  for (const auto& golden : testing::kGoldenSentences) {
    docs += std::string(golden.text);
    docs += "\n\n";
  }
  write_file(scratch / "docs.txt", docs);
  write_file(scratch / "permissive.conf", "min_corpus_tokens = 1\n");

  REQUIRE(run(binary() + " ingest --input " + (scratch / "docs.txt").string() +
              " --output " + (scratch / "records.jsonl").string() +
              " --config " + (scratch / "permissive.conf").string() +
              quiet()) == 0);

  REQUIRE(run(binary() + " transcribe --input " +
              (scratch / "records.jsonl").string() + " --output " +
              (scratch / "t1.jsonl").string() + " --workers 1" + quiet()) ==
          0);
  REQUIRE(run(binary() + " transcribe --input " +
              (scratch / "records.jsonl").string() + " --output " +
              (scratch / "t4.jsonl").string() + " --workers 4" + quiet()) ==
          0);
  CHECK(read_file(scratch / "t1.jsonl") == read_file(scratch / "t4.jsonl"));
}

TEST_CASE("full pipeline covers all categories and reruns bit-exactly") {
  Scratch scratch;
  std::string docs;
  for (const auto& golden : testing::kGoldenSentences) {
    docs += std::string(golden.text);
    docs += "\n\n";
  }
  write_file(scratch / "docs.txt", docs);
  write_file(scratch / "pipeline.conf",
             "min_corpus_tokens = 1\n"
             "word_min = 1\n"
             "word_max = 100\n"
             "phoneme_min_count = 1\n"
             "target_sentences = 20\n"
             "reserve_sentences = 0\n"
             "batch_size = 10\n"
             "threshold_percentile = 0\n");

  std::string config = (scratch / "pipeline.conf").string();
  REQUIRE(run(binary() + " ingest --input " + (scratch / "docs.txt").string() +
              " --output " + (scratch / "records.jsonl").string() +
              " --config " + config + quiet()) == 0);
  REQUIRE(run(binary() + " transcribe --input " +
              (scratch / "records.jsonl").string() + " --output " +
              (scratch / "transcribed.jsonl").string() + quiet()) == 0);

  std::string select_cmd = binary() + " select --input " +
                           (scratch / "transcribed.jsonl").string() +
                           " --output " + (scratch / "sel").string() +
                           " --config " + config + quiet();
  REQUIRE(run(select_cmd) == 0);
  std::string selected_once = read_file(scratch / "sel" / "selected.jsonl");
  std::string trace_once = read_file(scratch / "sel" / "trace.jsonl");
  REQUIRE(run(select_cmd) == 0);
  CHECK(read_file(scratch / "sel" / "selected.jsonl") == selected_once);
  CHECK(read_file(scratch / "sel" / "trace.jsonl") == trace_once);

  REQUIRE(run(binary() + " analyze --input " +
              (scratch / "sel" / "selected.jsonl").string() + " --trace " +
              (scratch / "sel" / "trace.jsonl").string() + " --name golden " +
              "--output " + (scratch / "report").string() + quiet()) == 0);

  std::string report = read_file(scratch / "report" / "report.json");
  // All eight categories reached a nonzero distinct count.
  std::string histogram =
      read_file(scratch / "report" / "category_histogram.csv");
  std::istringstream lines(histogram);
  std::string line;
  std::getline(lines, line);  // header
  int categories_with_distinct = 0;
  while (std::getline(lines, line)) {
    auto cols = split(line, ',');
    REQUIRE(cols.size() == 3);
    if (std::stoull(std::string(cols[1])) > 0) ++categories_with_distinct;
  }
  CHECK(categories_with_distinct == 8);
}

TEST_CASE("compare prints the published gains") {
  Scratch scratch;
  struct Row {
    const char* name;
    std::uint64_t distinct, total;
  };
  for (Row row : std::initializer_list<Row>{{"alana", 9088, 45360},
                                            {"globo", 5832, 45504}}) {
    TriphoneInventory ti =
        testing::make_synthetic_inventory(row.distinct, row.total);
    std::ofstream dump(scratch / (std::string(row.name) + ".tsv"));
    ti.save(dump);
    dump.close();
    REQUIRE(run(binary() + " analyze --triphones " +
                (scratch / (std::string(row.name) + ".tsv")).string() +
                " --name " + row.name + " --output " +
                (scratch / row.name).string() + quiet()) == 0);
  }

  std::string out_path = (scratch / "compare.txt").string();
  int code = run(binary() + " compare --baseline globo " +
                 (scratch / "alana" / "report.json").string() + " " +
                 (scratch / "globo" / "report.json").string() + " > " +
                 out_path + quiet());
  CHECK(code == 0);
  std::string table = read_file(out_path);
  CHECK(table.find("+55.8%") != std::string::npos);
  CHECK(table.find("(baseline)") != std::string::npos);
  CHECK(table.find("20.04%") != std::string::npos);

  // Unknown baseline is a config error.
  CHECK(run(binary() + " compare --baseline nope " +
            (scratch / "alana" / "report.json").string() + " " +
            (scratch / "globo" / "report.json").string() + quiet()) == 2);
}

TEST_CASE("schema violations exit 4") {
  Scratch scratch;
  write_file(scratch / "bad.jsonl", "{\"id\": \"only-an-id\"}\n");
  int code = run(binary() + " transcribe --input " +
                 (scratch / "bad.jsonl").string() + " --output " +
                 (scratch / "out.jsonl").string() + quiet());
  CHECK(code == 4);

  // Same behavior when the failure happens on a worker thread.
  code = run(binary() + " transcribe --workers 4 --input " +
             (scratch / "bad.jsonl").string() + " --output " +
             (scratch / "out.jsonl").string() + quiet());
  CHECK(code == 4);
}
