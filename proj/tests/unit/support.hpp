// Shared helpers for the unit tests.

#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "artinkms/presentation.hpp"
#include "artinkms/word_engine.hpp"

namespace test {

inline artinkms::MonoidPresentation fixture(const std::string& name) {
  return artinkms::load_presentation(std::string(ARTINKMS_FIXTURE_DIR) + "/" + name + ".json");
}

// Engines are expensive to warm up, so each fixture gets one per process.
inline const artinkms::WordEngine& engine(const std::string& name) {
  static std::vector<std::pair<std::string, std::unique_ptr<artinkms::WordEngine>>> cache;
  for (const auto& [n, e] : cache) {
    if (n == name) return *e;
  }
  cache.emplace_back(name, std::make_unique<artinkms::WordEngine>(fixture(name)));
  return *cache.back().second;
}

inline artinkms::Word w(const std::string& name, const std::string& text) {
  if (text == "e") return {};
  return artinkms::parse_word(engine(name).presentation(), text);
}

inline artinkms::Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_length,
                                  std::size_t min_length = 0) {
  std::uniform_int_distribution<std::size_t> len(min_length, max_length);
  std::uniform_int_distribution<std::size_t> letter(0, rank - 1);
  artinkms::Word out(len(rng));
  for (auto& x : out) x = static_cast<artinkms::Letter>(letter(rng));
  return out;
}

}  // namespace test
