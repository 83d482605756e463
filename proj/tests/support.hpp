#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "prosopo/prosopo.hpp"

namespace prosopo::test {

inline std::filesystem::path data_dir() { return PROSOPO_TEST_DATA; }

inline Corpus load_dir(const std::string& name) {
  return ingest_corpus(InputPaths::in_directory(data_dir() / name));
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() / ("prosopo-" + tag + "-" + std::to_string(rng()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline const Mention* mention(const Corpus& c, std::string_view article, std::string_view key) {
  for (const auto& m : c.mentions_of(article)) {
    if (m.key == key) return &m;
  }
  return nullptr;
}

}  // namespace prosopo::test
