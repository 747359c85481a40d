#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace tmbench {

// Words over `alphabet` of exactly `length` symbols, lexicographic in the
// alphabet's order.
std::vector<std::string> words_of_length(std::string_view alphabet, std::size_t length);

// All words of length <= max_length in length-then-lexicographic order.
std::vector<std::string> words_up_to(std::string_view alphabet, std::size_t max_length);

// sum_{l=0..max_length} |alphabet|^l, saturating at UINT64_MAX.
std::uint64_t count_words_up_to(std::size_t alphabet_size, std::size_t max_length) noexcept;

// Uniform word drawn from raw engine output, so the sequence is identical on
// every standard library.
std::string random_word(std::string_view alphabet, std::size_t length, std::mt19937_64& rng);

// "eps" for the empty word, the word itself otherwise.
std::string display_word(std::string_view w);

// Inverse of display_word on the command line: "eps" and "" denote λ.
std::string parse_word_argument(std::string_view text);

}  // namespace tmbench
