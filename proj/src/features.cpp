#include "emph/features.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "emph/errors.hpp"
#include "emph/text.hpp"

namespace emph::features {

namespace detail {
const std::unordered_map<std::string, Pos>& pos_lexicon();
}

std::string to_string(Pos p) {
  switch (p) {
    case Pos::NOUN: return "NOUN";
    case Pos::VERB: return "VERB";
    case Pos::ADJ: return "ADJ";
    case Pos::DET: return "DET";
    case Pos::ADV: return "ADV";
    case Pos::PRON: return "PRON";
    case Pos::PUNCT: return "PUNCT";
    case Pos::NUM: return "NUM";
    case Pos::OTHER: return "OTHER";
  }
  return "OTHER";
}

namespace {

struct CharProfile {
  bool all_punct = true;
  bool upper_start = false;
  bool has_digit = false;
  bool has_alpha = false;
  bool all_alpha_upper = true;
  int open_brackets = 0;
  int close_brackets = 0;
  bool all_bracket_chars = true;
};

CharProfile profile(const std::string& surface) {
  CharProfile p;
  const auto cps = text::decode_utf8(surface);
  bool first = true;
  for (char32_t c : cps) {
    if (first) {
      p.upper_start = text::is_upper(c);
      first = false;
    }
    if (!text::is_punct(c)) p.all_punct = false;
    if (text::is_digit(c)) p.has_digit = true;
    if (text::is_alpha(c)) {
      p.has_alpha = true;
      if (!text::is_upper(c)) p.all_alpha_upper = false;
    }
    if (text::is_open_bracket(c))
      ++p.open_brackets;
    else if (text::is_close_bracket(c))
      ++p.close_brackets;
    else
      p.all_bracket_chars = false;
  }
  return p;
}

}  // namespace

Pos pos_tag_token(const std::string& surface) {
  const CharProfile p = profile(surface);
  if (p.all_punct && !surface.empty()) return Pos::PUNCT;
  if (p.has_digit && !p.has_alpha) return Pos::NUM;

  const std::string lower = text::lower_ascii(surface);
  const auto& lex = detail::pos_lexicon();
  if (auto it = lex.find(lower); it != lex.end()) return it->second;

  auto ends = [&lower](const char* suffix) {
    const std::size_t n = std::string_view(suffix).size();
    return lower.size() > n + 2 && lower.compare(lower.size() - n, n, suffix) == 0;
  };
  if (ends("ly")) return Pos::ADV;
  if (ends("tion") || ends("sion") || ends("ment") || ends("ness") || ends("ity") ||
      ends("ance") || ends("ence") || ends("ship") || ends("ism") || ends("ist") ||
      ends("ers") || ends("er") || ends("or"))
    return Pos::NOUN;
  if (ends("ize") || ends("ise") || ends("ify") || ends("ing") || ends("ed"))
    return Pos::VERB;
  if (ends("ous") || ends("ful") || ends("less") || ends("able") || ends("ible") ||
      ends("ive") || ends("ical") || ends("al") || ends("ic") || ends("ish"))
    return Pos::ADJ;
  if (p.has_alpha && lower.size() > 3 && lower.back() == 's') return Pos::NOUN;
  return Pos::OTHER;
}

std::vector<Pos> pos_tag(const corpus::Slide& slide) {
  std::vector<Pos> tags;
  tags.reserve(slide.tokens.size());
  for (const auto& t : slide.tokens) tags.push_back(pos_tag_token(t.surface));
  return tags;
}

std::vector<TokenFeatures> extract_shape_features(
    const corpus::Slide& slide, const std::optional<std::vector<bool>>& keyphrase_flags) {
  if (keyphrase_flags && keyphrase_flags->size() != slide.tokens.size())
    throw ValidationError("slide '" + slide.id + "': " +
                          std::to_string(keyphrase_flags->size()) + " keyphrase flags for " +
                          std::to_string(slide.tokens.size()) + " tokens");
  std::vector<TokenFeatures> out;
  out.reserve(slide.tokens.size());
  int depth = 0;  // open brackets seen in preceding tokens, clamped at 0
  for (std::size_t t = 0; t < slide.tokens.size(); ++t) {
    const CharProfile p = profile(slide.tokens[t].surface);
    TokenFeatures f;
    f.is_punct = p.all_punct;
    f.upper_start = p.upper_start;
    f.has_digit = p.has_digit;
    f.all_upper = p.has_alpha && p.all_alpha_upper;
    f.in_brackets = depth > 0 && !p.all_bracket_chars;
    f.keyphrase = keyphrase_flags ? (*keyphrase_flags)[t] : false;
    f.pos = pos_tag_token(slide.tokens[t].surface);
    out.push_back(f);
    depth += p.open_brackets - p.close_brackets;
    if (depth < 0) depth = 0;
  }
  return out;
}

std::vector<double> encode_features(const TokenFeatures& f) {
  std::vector<double> v(kFeatureDim, 0.0);
  v[0] = f.is_punct ? 1.0 : 0.0;
  v[1] = f.upper_start ? 1.0 : 0.0;
  v[2] = f.has_digit ? 1.0 : 0.0;
  v[3] = f.all_upper ? 1.0 : 0.0;
  v[4] = f.in_brackets ? 1.0 : 0.0;
  v[5] = f.keyphrase ? 1.0 : 0.0;
  v[6 + static_cast<int>(f.pos)] = 1.0;
  return v;
}

std::vector<FeatureReportRow> feature_emphasis_report(
    const corpus::Corpus& c, const std::vector<std::vector<TokenFeatures>>& features) {
  if (features.size() != c.slides.size())
    throw ValidationError("feature rows not aligned with corpus slides");

  constexpr int kFlags = 6;
  const char* names[kFlags] = {"Punctuation",    "UpperCase start", "Contain numbers",
                               "All Upper Case", "Inside Brackets", "Keyphrase Tags"};
  std::array<std::size_t, kFlags> counts{};
  std::array<double, kFlags> sums{};
  std::size_t total = 0;
  double total_sum = 0.0;

  for (std::size_t s = 0; s < c.slides.size(); ++s) {
    const auto& slide = c.slides[s];
    if (!slide.annotations)
      throw ValidationError("slide '" + slide.id + "' has no annotations; report needs gold scores");
    if (features[s].size() != slide.tokens.size())
      throw ValidationError("slide '" + slide.id + "': features not aligned with tokens");
    for (std::size_t t = 0; t < slide.tokens.size(); ++t) {
      const double gold = corpus::aggregate_annotations((*slide.annotations)[t]);
      const TokenFeatures& f = features[s][t];
      const bool flags[kFlags] = {f.is_punct, f.upper_start, f.has_digit,
                                  f.all_upper, f.in_brackets, f.keyphrase};
      for (int i = 0; i < kFlags; ++i) {
        if (flags[i]) {
          ++counts[static_cast<std::size_t>(i)];
          sums[static_cast<std::size_t>(i)] += gold;
        }
      }
      ++total;
      total_sum += gold;
    }
  }

  std::vector<FeatureReportRow> rows;
  for (int i = 0; i < kFlags; ++i) {
    FeatureReportRow r;
    r.name = names[i];
    r.count = counts[static_cast<std::size_t>(i)];
    if (r.count > 0) r.mean_gold = sums[static_cast<std::size_t>(i)] / static_cast<double>(r.count);
    rows.push_back(std::move(r));
  }
  FeatureReportRow overall;
  overall.name = "Overall";
  overall.count = total;
  if (total > 0) overall.mean_gold = total_sum / static_cast<double>(total);
  rows.push_back(std::move(overall));
  return rows;
}

std::vector<std::vector<bool>> read_keyphrase_flags(std::istream& in, const corpus::Corpus& c) {
  std::unordered_map<std::string, std::size_t> slide_index;
  for (std::size_t i = 0; i < c.slides.size(); ++i) slide_index.emplace(c.slides[i].id, i);

  std::vector<std::vector<bool>> flags;
  flags.reserve(c.slides.size());
  for (const auto& s : c.slides) flags.emplace_back(s.tokens.size(), false);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string slide_id, idx_str, flag_str;
    if (!std::getline(ls, slide_id, '\t') || !std::getline(ls, idx_str, '\t') ||
        !std::getline(ls, flag_str))
      throw ParseError("expected 3 tab-separated columns", line_no);
    auto it = slide_index.find(slide_id);
    if (it == slide_index.end())
      throw ValidationError("line " + std::to_string(line_no) + ": unknown slide id '" +
                            slide_id + "'");
    int idx = 0;
    try {
      idx = std::stoi(idx_str);
    } catch (const std::exception&) {
      throw ParseError("bad token index '" + idx_str + "'", line_no);
    }
    if (idx < 0 || idx >= static_cast<int>(flags[it->second].size()))
      throw ValidationError("line " + std::to_string(line_no) + ": token index " + idx_str +
                            " out of range for slide '" + slide_id + "'");
    if (flag_str != "0" && flag_str != "1")
      throw ValidationError("line " + std::to_string(line_no) + ": flag must be 0 or 1");
    flags[it->second][static_cast<std::size_t>(idx)] = flag_str == "1";
  }
  return flags;
}

std::vector<std::vector<bool>> read_keyphrase_flags_file(const std::string& path,
                                                         const corpus::Corpus& c) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open keyphrase flag file: " + path);
  return read_keyphrase_flags(in, c);
}

}  // namespace emph::features
