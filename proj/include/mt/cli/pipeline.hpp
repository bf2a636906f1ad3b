#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mt/groups/presentation.hpp"

namespace mt {

/// Builtins A4, A5, K4, D<n>; anything else is read as a file of
/// permutation generators in cycle notation, one per line.
PresentedGroup load_group(const std::string& source);

/// "<order><letter>" per class, letters running through classes of equal
/// order in the library's class order (smaller classes first).
std::vector<std::string> class_labels(const FiniteGroup& g);
/// Comma separated labels to class indices.
std::vector<std::size_t> parse_classes(const FiniteGroup& g, const std::string& csv);

struct JobSpec {
  std::string command;  // level, dihedral, schur, gcomplete, frattini-verify
  std::string group = "A5";
  std::string classes;
  unsigned p = 2;
  unsigned k = 0;
  bool hm = false;
  std::size_t threads = 1;
  std::size_t budget_elements = 50'000'000;
  std::size_t budget_cosets = 2'000'000;
};

/// Canonical text of everything that affects the report (not threads).
std::string job_key_text(const JobSpec& job);

struct JobOutput {
  nlohmann::ordered_json report;
  /// Extra files for the report directory, by name.
  std::vector<std::pair<std::string, std::string>> files;
};

JobOutput run_job(const JobSpec& job);

std::string sha256_hex(const std::string& bytes);

/// Content-addressed store of job outputs. Each entry carries the SHA-256
/// of its payload; a mismatch on read throws CorruptCache.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& payload) const;
  std::filesystem::path entry_path(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace mt
