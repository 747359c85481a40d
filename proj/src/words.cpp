#include "tmbench/words.hpp"

#include <limits>

#include "tmbench/errors.hpp"

namespace tmbench {

std::vector<std::string> words_of_length(std::string_view alphabet, std::size_t length) {
  if (alphabet.empty()) return length == 0 ? std::vector<std::string>{""} : std::vector<std::string>{};
  std::vector<std::string> out;
  std::vector<std::size_t> digits(length, 0);
  std::string w(length, alphabet[0]);
  while (true) {
    out.push_back(w);
    // Odometer increment, least significant symbol last.
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++digits[i] < alphabet.size()) {
        w[i] = alphabet[digits[i]];
        break;
      }
      digits[i] = 0;
      w[i] = alphabet[0];
      if (i == 0) return out;
    }
    if (length == 0) return out;
  }
}

std::vector<std::string> words_up_to(std::string_view alphabet, std::size_t max_length) {
  std::vector<std::string> out;
  for (std::size_t l = 0; l <= max_length; ++l) {
    auto chunk = words_of_length(alphabet, l);
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  }
  return out;
}

std::uint64_t count_words_up_to(std::size_t alphabet_size, std::size_t max_length) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (std::size_t l = 0; l <= max_length; ++l) {
    if (total > kMax - layer) return kMax;
    total += layer;
    if (alphabet_size > 1 && layer > kMax / alphabet_size) {
      if (l < max_length) return kMax;
      break;
    }
    layer *= alphabet_size;
    if (alphabet_size == 0) layer = 0;
  }
  return total;
}

std::string random_word(std::string_view alphabet, std::size_t length, std::mt19937_64& rng) {
  if (alphabet.empty() && length > 0) throw DomainError("random_word: empty alphabet");
  std::string w(length, '\0');
  for (auto& c : w) c = alphabet[rng() % alphabet.size()];
  return w;
}

std::string display_word(std::string_view w) { return w.empty() ? std::string("eps") : std::string(w); }

std::string parse_word_argument(std::string_view text) {
  if (text == "eps") return {};
  return std::string(text);
}

}  // namespace tmbench
