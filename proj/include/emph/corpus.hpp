#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace emph::corpus {

// The annotation scheme is tied to exactly 8 annotators; other counts are
// rejected at parse time.
inline constexpr int kAnnotatorCount = 8;

enum class BioTag : std::uint8_t { B, I, O };

char to_char(BioTag t);
BioTag tag_from_char(char c);  // throws ValidationError on anything but B/I/O

struct Token {
  std::string surface;
  int sentence_index = 0;  // position of the containing sentence within the slide
  int token_index = 0;     // position within the slide, 0-based
};

// One token's tags from the 8 annotators, in annotator order A1..A8.
struct AnnotationSet {
  std::array<BioTag, kAnnotatorCount> tags{};
  bool operator==(const AnnotationSet&) const = default;
};

struct Slide {
  std::string id;
  std::vector<Token> tokens;
  std::optional<std::vector<AnnotationSet>> annotations;  // aligned 1:1 with tokens
};

enum class Split { train, dev, test, synthetic };
std::string to_string(Split s);
Split split_from_string(const std::string& s);

struct Corpus {
  std::vector<Slide> slides;
  Split split = Split::train;
};

// Per-token probability sequence for one slide; gold (aggregated) or predicted.
struct EmphasisScores {
  std::string slide_id;
  std::vector<double> scores;  // each in [0,1], one per token
};

struct CorpusStats {
  std::size_t slide_count = 0;
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;
  std::size_t min_tokens = 0;
  std::size_t max_tokens = 0;
  double mean_tokens = 0.0;  // exact mean, not rounded
};

enum class Format { tsv, json };

Format format_from_string(const std::string& s);

// Throws ParseError (syntax) or ValidationError (invariant breach).
Corpus parse_corpus(std::istream& in, Format format);
Corpus parse_corpus_string(const std::string& text, Format format);
Corpus parse_corpus_file(const std::string& path, Format format);

std::string serialize_corpus(const Corpus& c, Format format);
void write_corpus_file(const std::string& path, const Corpus& c, Format format);

void validate(const Corpus& c);

// Fraction of the 8 annotators that tagged the token B or I.
double aggregate_annotations(const AnnotationSet& a);

EmphasisScores gold_scores(const Slide& s);  // requires annotations
std::vector<EmphasisScores> gold_scores(const Corpus& c);

CorpusStats corpus_stats(const Corpus& c);

// One output slide per (slide, sentence_index) group; ids become
// "<slide_id>#<sentence_index>", token_index re-based from 0.
Corpus split_into_sentences(const Corpus& c);

// Deterministic synthetic corpus with a planted annotation rule:
// all-uppercase tokens get B from 6 of 8 annotators (gold 0.75),
// digit-bearing tokens from 2 of 8 (gold 0.25), everything else O.
Corpus generate_synthetic_corpus(std::uint64_t seed, int n_slides, int tokens_per_slide);

// Score files: TSV columns slide_id, token_index, score (6 decimal places).
std::vector<EmphasisScores> read_scores(std::istream& in);
std::vector<EmphasisScores> read_scores_file(const std::string& path);
std::string serialize_scores(const std::vector<EmphasisScores>& scores);
void write_scores_file(const std::string& path, const std::vector<EmphasisScores>& scores);

}  // namespace emph::corpus
