#include "emph/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "emph/errors.hpp"
#include "emph/rng.hpp"

namespace emph::corpus {

using nlohmann::json;

char to_char(BioTag t) {
  switch (t) {
    case BioTag::B: return 'B';
    case BioTag::I: return 'I';
    case BioTag::O: return 'O';
  }
  return '?';
}

BioTag tag_from_char(char c) {
  switch (c) {
    case 'B': return BioTag::B;
    case 'I': return BioTag::I;
    case 'O': return BioTag::O;
    default:
      throw ValidationError(std::string("tag outside {B,I,O}: '") + c + "'");
  }
}

std::string to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::dev: return "dev";
    case Split::test: return "test";
    case Split::synthetic: return "synthetic";
  }
  return "train";
}

Split split_from_string(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "dev") return Split::dev;
  if (s == "test") return Split::test;
  if (s == "synthetic") return Split::synthetic;
  throw ValidationError("unknown split label: '" + s + "'");
}

Format format_from_string(const std::string& s) {
  if (s == "tsv") return Format::tsv;
  if (s == "json") return Format::json;
  throw ValidationError("unknown corpus format: '" + s + "' (expected tsv or json)");
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

AnnotationSet parse_tags(const std::string& field, std::size_t line) {
  std::vector<std::string> parts;
  for (const auto& p : split_on(field, ' '))
    if (!p.empty()) parts.push_back(p);
  if (parts.size() != kAnnotatorCount)
    throw ValidationError("line " + std::to_string(line) + ": expected " +
                          std::to_string(kAnnotatorCount) + " tags, got " +
                          std::to_string(parts.size()));
  AnnotationSet a;
  for (int i = 0; i < kAnnotatorCount; ++i) {
    if (parts[static_cast<std::size_t>(i)].size() != 1)
      throw ValidationError("line " + std::to_string(line) + ": tag outside {B,I,O}: '" +
                            parts[static_cast<std::size_t>(i)] + "'");
    try {
      a.tags[static_cast<std::size_t>(i)] = tag_from_char(parts[static_cast<std::size_t>(i)][0]);
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return a;
}

constexpr const char* kSlideHeader = "# slide: ";
constexpr const char* kSplitHeader = "# split: ";

Corpus parse_tsv(std::istream& in) {
  Corpus c;
  Slide current;
  std::vector<AnnotationSet> annotations;
  bool in_slide = false;
  bool saw_split = false;
  std::size_t line_no = 0;

  auto flush = [&](std::size_t line) {
    if (!in_slide) return;
    if (current.tokens.empty())
      throw ValidationError("line " + std::to_string(line) + ": slide '" + current.id +
                            "' has no tokens");
    if (!annotations.empty()) {
      if (annotations.size() != current.tokens.size())
        throw ValidationError("slide '" + current.id + "': " +
                              std::to_string(annotations.size()) + " annotations for " +
                              std::to_string(current.tokens.size()) + " tokens");
      current.annotations = std::move(annotations);
    }
    c.slides.push_back(std::move(current));
    current = Slide{};
    annotations.clear();
    in_slide = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush(line_no);
      continue;
    }
    if (line.rfind(kSplitHeader, 0) == 0) {
      if (saw_split || in_slide || !c.slides.empty())
        throw ParseError("split header must appear once, before any slide", line_no);
      c.split = split_from_string(line.substr(std::string(kSplitHeader).size()));
      saw_split = true;
      continue;
    }
    if (line.rfind(kSlideHeader, 0) == 0) {
      flush(line_no);
      current.id = line.substr(std::string(kSlideHeader).size());
      if (current.id.empty()) throw ParseError("empty slide id", line_no);
      in_slide = true;
      continue;
    }
    if (!in_slide) throw ParseError("token row before any '# slide:' header", line_no);

    std::vector<std::string> cols = split_on(line, '\t');
    if (cols.size() != 3)
      throw ParseError("expected 3 tab-separated columns, got " + std::to_string(cols.size()),
                       line_no);
    if (cols[0].empty()) throw ValidationError("line " + std::to_string(line_no) + ": empty surface");

    Token tok;
    tok.surface = cols[0];
    tok.token_index = static_cast<int>(current.tokens.size());
    try {
      std::size_t used = 0;
      tok.sentence_index = std::stoi(cols[2], &used);
      if (used != cols[2].size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw ParseError("bad sentence index '" + cols[2] + "'", line_no);
    }
    if (tok.sentence_index < 0)
      throw ValidationError("line " + std::to_string(line_no) + ": negative sentence index");

    const bool annotated = cols[1] != "-";
    const bool slide_annotated = !annotations.empty();
    if (!current.tokens.empty() && annotated != slide_annotated)
      throw ValidationError("line " + std::to_string(line_no) + ": slide '" + current.id +
                            "' mixes annotated and unannotated tokens");
    if (annotated) annotations.push_back(parse_tags(cols[1], line_no));
    current.tokens.push_back(std::move(tok));
  }
  flush(line_no + 1);
  validate(c);
  return c;
}

Corpus parse_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");

  Corpus c;
  if (doc.contains("split")) c.split = split_from_string(doc.at("split").get<std::string>());
  if (!doc.contains("slides") || !doc.at("slides").is_array())
    throw ParseError("missing 'slides' array");

  for (const auto& js : doc.at("slides")) {
    Slide s;
    s.id = js.at("id").get<std::string>();
    const auto& sentences = js.at("sentences");
    if (!sentences.is_array()) throw ParseError("slide '" + s.id + "': 'sentences' must be an array");
    int sent_idx = 0;
    for (const auto& sent : sentences) {
      for (const auto& tok : sent) {
        Token t;
        t.surface = tok.get<std::string>();
        t.sentence_index = sent_idx;
        t.token_index = static_cast<int>(s.tokens.size());
        s.tokens.push_back(std::move(t));
      }
      ++sent_idx;
    }
    if (js.contains("annotations")) {
      std::vector<AnnotationSet> anns;
      for (const auto& sent : js.at("annotations")) {
        for (const auto& tok_tags : sent) {
          if (!tok_tags.is_array() || tok_tags.size() != kAnnotatorCount)
            throw ValidationError("slide '" + s.id + "': expected " +
                                  std::to_string(kAnnotatorCount) + " tags per token");
          AnnotationSet a;
          for (int i = 0; i < kAnnotatorCount; ++i) {
            const std::string tag = tok_tags[static_cast<std::size_t>(i)].get<std::string>();
            if (tag.size() != 1)
              throw ValidationError("slide '" + s.id + "': tag outside {B,I,O}: '" + tag + "'");
            a.tags[static_cast<std::size_t>(i)] = tag_from_char(tag[0]);
          }
          anns.push_back(a);
        }
      }
      if (anns.size() != s.tokens.size())
        throw ValidationError("slide '" + s.id + "': " + std::to_string(anns.size()) +
                              " annotations for " + std::to_string(s.tokens.size()) + " tokens");
      s.annotations = std::move(anns);
    }
    c.slides.push_back(std::move(s));
  }
  validate(c);
  return c;
}

std::string serialize_tsv(const Corpus& c) {
  std::string out = std::string(kSplitHeader) + to_string(c.split) + "\n";
  for (const auto& s : c.slides) {
    out += '\n';
    out += kSlideHeader;
    out += s.id;
    out += '\n';
    for (std::size_t t = 0; t < s.tokens.size(); ++t) {
      out += s.tokens[t].surface;
      out += '\t';
      if (s.annotations) {
        const auto& tags = (*s.annotations)[t].tags;
        for (int i = 0; i < kAnnotatorCount; ++i) {
          if (i) out += ' ';
          out += to_char(tags[static_cast<std::size_t>(i)]);
        }
      } else {
        out += '-';
      }
      out += '\t';
      out += std::to_string(s.tokens[t].sentence_index);
      out += '\n';
    }
  }
  return out;
}

json slide_to_json(const Slide& s) {
  json sentences = json::array();
  json annotations = json::array();
  json cur_sent = json::array();
  json cur_anns = json::array();
  int cur_idx = s.tokens.empty() ? 0 : s.tokens[0].sentence_index;
  for (std::size_t t = 0; t < s.tokens.size(); ++t) {
    if (s.tokens[t].sentence_index != cur_idx) {
      sentences.push_back(std::move(cur_sent));
      annotations.push_back(std::move(cur_anns));
      cur_sent = json::array();
      cur_anns = json::array();
      cur_idx = s.tokens[t].sentence_index;
    }
    cur_sent.push_back(s.tokens[t].surface);
    if (s.annotations) {
      json tags = json::array();
      for (BioTag tag : (*s.annotations)[t].tags) tags.push_back(std::string(1, to_char(tag)));
      cur_anns.push_back(std::move(tags));
    }
  }
  if (!cur_sent.empty()) {
    sentences.push_back(std::move(cur_sent));
    annotations.push_back(std::move(cur_anns));
  }
  json js{{"id", s.id}, {"sentences", std::move(sentences)}};
  if (s.annotations) js["annotations"] = std::move(annotations);
  return js;
}

}  // namespace

Corpus parse_corpus(std::istream& in, Format format) {
  return format == Format::tsv ? parse_tsv(in) : parse_json(in);
}

Corpus parse_corpus_string(const std::string& text, Format format) {
  std::istringstream in(text);
  return parse_corpus(in, format);
}

Corpus parse_corpus_file(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path);
  return parse_corpus(in, format);
}

std::string serialize_corpus(const Corpus& c, Format format) {
  if (format == Format::tsv) return serialize_tsv(c);
  json doc{{"split", to_string(c.split)}, {"slides", json::array()}};
  for (const auto& s : c.slides) doc["slides"].push_back(slide_to_json(s));
  return doc.dump(2) + "\n";
}

void write_corpus_file(const std::string& path, const Corpus& c, Format format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write corpus file: " + path);
  out << serialize_corpus(c, format);
}

void validate(const Corpus& c) {
  std::unordered_set<std::string> ids;
  for (const auto& s : c.slides) {
    if (s.id.empty()) throw ValidationError("slide with empty id");
    if (!ids.insert(s.id).second) throw ValidationError("duplicate slide id '" + s.id + "'");
    int prev_sentence = -1;
    for (std::size_t t = 0; t < s.tokens.size(); ++t) {
      const Token& tok = s.tokens[t];
      if (tok.surface.empty())
        throw ValidationError("slide '" + s.id + "': empty token surface at index " +
                              std::to_string(t));
      if (tok.token_index != static_cast<int>(t))
        throw ValidationError("slide '" + s.id + "': token_index not consecutive from 0");
      if (tok.sentence_index < prev_sentence)
        throw ValidationError("slide '" + s.id + "': sentence_index decreases at token " +
                              std::to_string(t));
      prev_sentence = tok.sentence_index;
    }
    if (s.annotations && s.annotations->size() != s.tokens.size())
      throw ValidationError("slide '" + s.id + "': annotation count " +
                            std::to_string(s.annotations->size()) + " != token count " +
                            std::to_string(s.tokens.size()));
  }
}

double aggregate_annotations(const AnnotationSet& a) {
  int emphasized = 0;
  for (BioTag t : a.tags)
    if (t != BioTag::O) ++emphasized;
  return static_cast<double>(emphasized) / kAnnotatorCount;
}

EmphasisScores gold_scores(const Slide& s) {
  if (!s.annotations)
    throw ValidationError("slide '" + s.id + "' has no annotations; cannot compute gold scores");
  EmphasisScores out;
  out.slide_id = s.id;
  out.scores.reserve(s.tokens.size());
  for (const auto& a : *s.annotations) out.scores.push_back(aggregate_annotations(a));
  return out;
}

std::vector<EmphasisScores> gold_scores(const Corpus& c) {
  std::vector<EmphasisScores> out;
  out.reserve(c.slides.size());
  for (const auto& s : c.slides) out.push_back(gold_scores(s));
  return out;
}

CorpusStats corpus_stats(const Corpus& c) {
  CorpusStats st;
  st.slide_count = c.slides.size();
  st.min_tokens = c.slides.empty() ? 0 : std::numeric_limits<std::size_t>::max();
  for (const auto& s : c.slides) {
    st.token_count += s.tokens.size();
    st.min_tokens = std::min(st.min_tokens, s.tokens.size());
    st.max_tokens = std::max(st.max_tokens, s.tokens.size());
    int prev = -1;
    for (const auto& t : s.tokens) {
      if (t.sentence_index != prev) {
        ++st.sentence_count;
        prev = t.sentence_index;
      }
    }
  }
  if (st.slide_count > 0)
    st.mean_tokens = static_cast<double>(st.token_count) / static_cast<double>(st.slide_count);
  return st;
}

Corpus split_into_sentences(const Corpus& c) {
  Corpus out;
  out.split = c.split;
  for (const auto& s : c.slides) {
    Slide* cur = nullptr;
    int cur_idx = -1;
    for (std::size_t t = 0; t < s.tokens.size(); ++t) {
      const Token& tok = s.tokens[t];
      if (cur == nullptr || tok.sentence_index != cur_idx) {
        cur_idx = tok.sentence_index;
        out.slides.push_back(Slide{s.id + "#" + std::to_string(cur_idx), {}, std::nullopt});
        cur = &out.slides.back();
        if (s.annotations) cur->annotations.emplace();
      }
      Token copy = tok;
      copy.sentence_index = 0;
      copy.token_index = static_cast<int>(cur->tokens.size());
      cur->tokens.push_back(std::move(copy));
      if (s.annotations) cur->annotations->push_back((*s.annotations)[t]);
    }
  }
  return out;
}

namespace {

// fixed vocabulary for the synthetic generator
const std::vector<std::string>& synth_lower() {
  static const std::vector<std::string> v = {
      "population", "species",  "growth",   "impact",   "model",   "result",
      "change",     "climate",  "carbon",   "energy",   "market",  "trend",
      "analysis",   "forecast", "estimate", "increase", "decline", "share",
      "value",      "margin",   "region",   "sample",   "method",  "signal",
      "feature",    "baseline", "measure",  "survey",   "report",  "summary",
      "quarter",    "revenue",  "profit",   "demand",   "supply",  "policy",
      "strategy",   "outcome",  "process",  "system",   "network", "cluster",
      "segment",    "customer", "product",  "service",  "channel", "the",
      "of",         "and",      "for",      "with",     "from",    "over"};
  return v;
}

const std::vector<std::string>& synth_upper() {
  static const std::vector<std::string> v = {"TOTAL", "KEY", "GDP",  "NASA", "ROI",
                                             "AI",    "CPU", "HIGH", "NET",  "EU"};
  return v;
}

const std::vector<std::string>& synth_digit() {
  static const std::vector<std::string> v = {"2021", "42",   "3.5", "100", "7",
                                             "1990", "x86",  "12%", "0.5", "24"};
  return v;
}

const std::vector<std::string>& synth_punct() {
  static const std::vector<std::string> v = {".", ",", ":", "-", ";"};
  return v;
}

}  // namespace

Corpus generate_synthetic_corpus(std::uint64_t seed, int n_slides, int tokens_per_slide) {
  if (n_slides < 1) throw ValidationError("n_slides must be >= 1");
  if (tokens_per_slide < 1) throw ValidationError("tokens_per_slide must be >= 1");
  Rng rng(seed);
  Corpus c;
  c.split = Split::synthetic;
  c.slides.reserve(static_cast<std::size_t>(n_slides));
  for (int si = 0; si < n_slides; ++si) {
    Slide s;
    char buf[32];
    std::snprintf(buf, sizeof buf, "synth-%04d", si);
    s.id = buf;
    s.annotations.emplace();
    int sentence = 0;
    int sentence_len = 0;
    int next_break = rng.range(5, 9);
    for (int ti = 0; ti < tokens_per_slide; ++ti) {
      if (sentence_len == next_break) {
        ++sentence;
        sentence_len = 0;
        next_break = rng.range(5, 9);
      }
      Token tok;
      tok.sentence_index = sentence;
      tok.token_index = ti;
      const double r = rng.uniform();
      AnnotationSet ann;
      ann.tags.fill(BioTag::O);
      if (r < 0.12) {
        tok.surface = synth_upper()[rng.below(synth_upper().size())];
        // 6 of 8 annotators mark B: choose which two abstain
        std::array<int, kAnnotatorCount> order{0, 1, 2, 3, 4, 5, 6, 7};
        for (std::size_t i = kAnnotatorCount; i > 1; --i)
          std::swap(order[i - 1], order[rng.below(i)]);
        for (int i = 0; i < 6; ++i) ann.tags[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = BioTag::B;
      } else if (r < 0.24) {
        tok.surface = synth_digit()[rng.below(synth_digit().size())];
        std::array<int, kAnnotatorCount> order{0, 1, 2, 3, 4, 5, 6, 7};
        for (std::size_t i = kAnnotatorCount; i > 1; --i)
          std::swap(order[i - 1], order[rng.below(i)]);
        for (int i = 0; i < 2; ++i) ann.tags[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = BioTag::B;
      } else if (r < 0.32) {
        tok.surface = synth_punct()[rng.below(synth_punct().size())];
      } else {
        tok.surface = synth_lower()[rng.below(synth_lower().size())];
      }
      s.tokens.push_back(std::move(tok));
      s.annotations->push_back(ann);
      ++sentence_len;
    }
    c.slides.push_back(std::move(s));
  }
  return c;
}

std::vector<EmphasisScores> read_scores(std::istream& in) {
  std::vector<EmphasisScores> out;
  std::unordered_map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cols = split_on(line, '\t');
    if (cols.size() != 3)
      throw ParseError("expected 3 tab-separated columns, got " + std::to_string(cols.size()),
                       line_no);
    int token_index = 0;
    double score = 0.0;
    try {
      std::size_t used = 0;
      token_index = std::stoi(cols[1], &used);
      if (used != cols[1].size()) throw std::invalid_argument("");
      score = std::stod(cols[2], &used);
      if (used != cols[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad token index or score", line_no);
    }
    if (score < 0.0 || score > 1.0)
      throw ValidationError("line " + std::to_string(line_no) + ": score outside [0,1]");
    auto it = index.find(cols[0]);
    if (it == index.end()) {
      index.emplace(cols[0], out.size());
      out.push_back(EmphasisScores{cols[0], {}});
      it = index.find(cols[0]);
    }
    EmphasisScores& es = out[it->second];
    if (token_index != static_cast<int>(es.scores.size()))
      throw ValidationError("line " + std::to_string(line_no) + ": slide '" + cols[0] +
                            "' token_index not consecutive from 0");
    es.scores.push_back(score);
  }
  return out;
}

std::vector<EmphasisScores> read_scores_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open score file: " + path);
  return read_scores(in);
}

std::string serialize_scores(const std::vector<EmphasisScores>& scores) {
  std::string out;
  char buf[64];
  for (const auto& es : scores) {
    for (std::size_t t = 0; t < es.scores.size(); ++t) {
      std::snprintf(buf, sizeof buf, "%s\t%zu\t%.6f\n", es.slide_id.c_str(), t, es.scores[t]);
      out += buf;
    }
  }
  return out;
}

void write_scores_file(const std::string& path, const std::vector<EmphasisScores>& scores) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write score file: " + path);
  out << serialize_scores(scores);
}

}  // namespace emph::corpus
