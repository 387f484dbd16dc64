#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "emph/corpus.hpp"

namespace emph::features {

// Coarse POS tagset: the seven analysis categories plus NUM and OTHER.
enum class Pos { NOUN, VERB, ADJ, DET, ADV, PRON, PUNCT, NUM, OTHER };
inline constexpr int kPosCount = 9;

std::string to_string(Pos p);

struct TokenFeatures {
  bool is_punct = false;
  bool upper_start = false;
  bool has_digit = false;
  bool all_upper = false;
  bool in_brackets = false;
  bool keyphrase = false;
  Pos pos = Pos::OTHER;
  bool operator==(const TokenFeatures&) const = default;
};

// Encoded width: six binary flags then a one-hot POS over the 9-tag set.
inline constexpr int kFeatureDim = 6 + kPosCount;

std::vector<TokenFeatures> extract_shape_features(
    const corpus::Slide& slide,
    const std::optional<std::vector<bool>>& keyphrase_flags = std::nullopt);

Pos pos_tag_token(const std::string& surface);
std::vector<Pos> pos_tag(const corpus::Slide& slide);

std::vector<double> encode_features(const TokenFeatures& f);  // length kFeatureDim

struct FeatureReportRow {
  std::string name;
  std::size_t count = 0;
  std::optional<double> mean_gold;  // absent when count == 0
};

// One row per binary feature plus an "Overall" row; corpus must be annotated.
std::vector<FeatureReportRow> feature_emphasis_report(
    const corpus::Corpus& c, const std::vector<std::vector<TokenFeatures>>& features);

// Keyphrase flag file: TSV slide_id, token_index, flag (0/1).
// Result is aligned 1:1 with the corpus; missing rows default to false.
std::vector<std::vector<bool>> read_keyphrase_flags(std::istream& in, const corpus::Corpus& c);
std::vector<std::vector<bool>> read_keyphrase_flags_file(const std::string& path,
                                                         const corpus::Corpus& c);

}  // namespace emph::features
