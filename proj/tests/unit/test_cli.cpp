#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "mt/cli/pipeline.hpp"
#include "mt/error.hpp"

using namespace mt;

TEST_CASE("builtin groups and class labels") {
  auto a5 = load_group("A5");
  CHECK(a5.group->order() == 60);
  auto labels = class_labels(*a5.group);
  CHECK(labels == std::vector<std::string>{"1A", "2A", "3A", "5A", "5B"});
  CHECK(parse_classes(*a5.group, "3a, 3A") == std::vector<std::size_t>{2, 2});
  CHECK_THROWS_AS(parse_classes(*a5.group, "4A"), Error);
  CHECK(load_group("A4").group->order() == 12);
  CHECK(load_group("K4").group->order() == 4);
  CHECK(load_group("D7").group->order() == 14);
  CHECK_THROWS_AS(load_group("no-such-group"), Error);
}

TEST_CASE("group files") {
  auto path = std::filesystem::temp_directory_path() / "mt_test_s4.txt";
  std::ofstream(path) << "# S4\n(1 2 3 4)\n(1 2)\n";
  auto g = load_group(path.string());
  CHECK(g.group->order() == 24);
  std::filesystem::remove(path);
}

TEST_CASE("jobs are deterministic across thread counts") {
  JobSpec job{"level", "A5", "3A,3A,3A,3A", 2, 0};
  auto one = run_job(job).report.dump();
  job.threads = 4;
  CHECK(run_job(job).report.dump() == one);
  CHECK(job_key_text(job) == job_key_text(JobSpec{"level", "A5", "3A,3A,3A,3A", 2, 0}));
  auto r = run_job(job).report;
  CHECK(r["components"].size() == 1);
  CHECK(r["components"][0]["genus"] == 0);
}

TEST_CASE("cache round trip and corruption") {
  auto dir = std::filesystem::temp_directory_path() / "mt_test_cache";
  std::filesystem::remove_all(dir);
  Cache c(dir);
  CHECK_FALSE(c.get("k").has_value());
  c.put("k", "payload bytes");
  CHECK(c.get("k") == std::optional<std::string>("payload bytes"));
  {
    std::fstream f(c.entry_path("k"), std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(-1, std::ios::end);
    f << 'X';
  }
  try {
    (void)c.get("k");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CorruptCache);
  }
  std::filesystem::remove_all(dir);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("error families map to exit codes") {
  CHECK(exit_code(ErrorKind::Budget) == 2);
  CHECK(exit_code(ErrorKind::EmptyNielsenClass) == 3);
  CHECK(exit_code(ErrorKind::InvariantViolation) == 4);
  CHECK(exit_code(ErrorKind::Parse) == 1);
}
