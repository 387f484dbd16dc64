#include "emph/features.hpp"

#include <unordered_map>

namespace emph::features::detail {

// Small closed-class + high-frequency lexicon for the coarse tagger.
// Open-class words not listed here fall through to the suffix rules.
const std::unordered_map<std::string, Pos>& pos_lexicon() {
  static const std::unordered_map<std::string, Pos> lex = {
      // determiners
      {"the", Pos::DET}, {"a", Pos::DET}, {"an", Pos::DET}, {"this", Pos::DET},
      {"that", Pos::DET}, {"these", Pos::DET}, {"those", Pos::DET}, {"each", Pos::DET},
      {"every", Pos::DET}, {"some", Pos::DET}, {"any", Pos::DET}, {"no", Pos::DET},
      {"all", Pos::DET}, {"both", Pos::DET}, {"either", Pos::DET}, {"neither", Pos::DET},
      {"another", Pos::DET}, {"such", Pos::DET},
      // pronouns
      {"i", Pos::PRON}, {"you", Pos::PRON}, {"he", Pos::PRON}, {"she", Pos::PRON},
      {"it", Pos::PRON}, {"we", Pos::PRON}, {"they", Pos::PRON}, {"me", Pos::PRON},
      {"him", Pos::PRON}, {"her", Pos::PRON}, {"us", Pos::PRON}, {"them", Pos::PRON},
      {"my", Pos::PRON}, {"your", Pos::PRON}, {"his", Pos::PRON}, {"its", Pos::PRON},
      {"our", Pos::PRON}, {"their", Pos::PRON}, {"mine", Pos::PRON}, {"yours", Pos::PRON},
      {"who", Pos::PRON}, {"whom", Pos::PRON}, {"whose", Pos::PRON}, {"which", Pos::PRON},
      {"what", Pos::PRON}, {"someone", Pos::PRON}, {"anyone", Pos::PRON},
      {"everyone", Pos::PRON}, {"something", Pos::PRON}, {"anything", Pos::PRON},
      {"everything", Pos::PRON}, {"nothing", Pos::PRON}, {"itself", Pos::PRON},
      {"themselves", Pos::PRON}, {"myself", Pos::PRON}, {"yourself", Pos::PRON},
      // number words
      {"one", Pos::NUM}, {"two", Pos::NUM}, {"three", Pos::NUM}, {"four", Pos::NUM},
      {"five", Pos::NUM}, {"six", Pos::NUM}, {"seven", Pos::NUM}, {"eight", Pos::NUM},
      {"nine", Pos::NUM}, {"ten", Pos::NUM}, {"eleven", Pos::NUM}, {"twelve", Pos::NUM},
      {"twenty", Pos::NUM}, {"thirty", Pos::NUM}, {"forty", Pos::NUM}, {"fifty", Pos::NUM},
      {"hundred", Pos::NUM}, {"thousand", Pos::NUM}, {"million", Pos::NUM},
      {"billion", Pos::NUM}, {"first", Pos::NUM}, {"second", Pos::NUM}, {"third", Pos::NUM},
      // common verbs (incl. auxiliaries and frequent irregular forms)
      {"be", Pos::VERB}, {"is", Pos::VERB}, {"are", Pos::VERB}, {"was", Pos::VERB},
      {"were", Pos::VERB}, {"been", Pos::VERB}, {"being", Pos::VERB}, {"am", Pos::VERB},
      {"have", Pos::VERB}, {"has", Pos::VERB}, {"had", Pos::VERB}, {"having", Pos::VERB},
      {"do", Pos::VERB}, {"does", Pos::VERB}, {"did", Pos::VERB}, {"done", Pos::VERB},
      {"doing", Pos::VERB}, {"will", Pos::VERB}, {"would", Pos::VERB}, {"can", Pos::VERB},
      {"could", Pos::VERB}, {"should", Pos::VERB}, {"may", Pos::VERB}, {"might", Pos::VERB},
      {"must", Pos::VERB}, {"shall", Pos::VERB}, {"make", Pos::VERB}, {"makes", Pos::VERB},
      {"made", Pos::VERB}, {"get", Pos::VERB}, {"gets", Pos::VERB}, {"got", Pos::VERB},
      {"go", Pos::VERB}, {"goes", Pos::VERB}, {"went", Pos::VERB}, {"gone", Pos::VERB},
      {"say", Pos::VERB}, {"says", Pos::VERB}, {"said", Pos::VERB}, {"see", Pos::VERB},
      {"sees", Pos::VERB}, {"saw", Pos::VERB}, {"seen", Pos::VERB}, {"take", Pos::VERB},
      {"takes", Pos::VERB}, {"took", Pos::VERB}, {"taken", Pos::VERB}, {"come", Pos::VERB},
      {"comes", Pos::VERB}, {"came", Pos::VERB}, {"use", Pos::VERB}, {"uses", Pos::VERB},
      {"used", Pos::VERB}, {"find", Pos::VERB}, {"finds", Pos::VERB}, {"found", Pos::VERB},
      {"give", Pos::VERB}, {"gives", Pos::VERB}, {"gave", Pos::VERB}, {"given", Pos::VERB},
      {"tell", Pos::VERB}, {"told", Pos::VERB}, {"ask", Pos::VERB}, {"asked", Pos::VERB},
      {"need", Pos::VERB}, {"needs", Pos::VERB}, {"feel", Pos::VERB}, {"felt", Pos::VERB},
      {"become", Pos::VERB}, {"became", Pos::VERB}, {"leave", Pos::VERB}, {"left", Pos::VERB},
      {"put", Pos::VERB}, {"mean", Pos::VERB}, {"means", Pos::VERB}, {"meant", Pos::VERB},
      {"keep", Pos::VERB}, {"kept", Pos::VERB}, {"let", Pos::VERB}, {"begin", Pos::VERB},
      {"began", Pos::VERB}, {"begun", Pos::VERB}, {"show", Pos::VERB}, {"shows", Pos::VERB},
      {"showed", Pos::VERB}, {"shown", Pos::VERB}, {"hear", Pos::VERB}, {"heard", Pos::VERB},
      {"run", Pos::VERB}, {"runs", Pos::VERB}, {"ran", Pos::VERB}, {"grow", Pos::VERB},
      {"grows", Pos::VERB}, {"grew", Pos::VERB}, {"grown", Pos::VERB}, {"know", Pos::VERB},
      {"knows", Pos::VERB}, {"knew", Pos::VERB}, {"known", Pos::VERB}, {"think", Pos::VERB},
      {"thinks", Pos::VERB}, {"thought", Pos::VERB}, {"bring", Pos::VERB},
      {"brought", Pos::VERB}, {"hold", Pos::VERB}, {"held", Pos::VERB}, {"write", Pos::VERB},
      {"writes", Pos::VERB}, {"wrote", Pos::VERB}, {"written", Pos::VERB}, {"sit", Pos::VERB},
      {"sat", Pos::VERB}, {"stand", Pos::VERB}, {"stood", Pos::VERB}, {"lose", Pos::VERB},
      {"lost", Pos::VERB}, {"pay", Pos::VERB}, {"paid", Pos::VERB}, {"meet", Pos::VERB},
      {"met", Pos::VERB}, {"set", Pos::VERB}, {"learn", Pos::VERB}, {"learned", Pos::VERB},
      {"lead", Pos::VERB}, {"leads", Pos::VERB}, {"led", Pos::VERB}, {"speak", Pos::VERB},
      {"spoke", Pos::VERB}, {"spoken", Pos::VERB}, {"read", Pos::VERB}, {"spend", Pos::VERB},
      {"spent", Pos::VERB}, {"win", Pos::VERB}, {"won", Pos::VERB}, {"buy", Pos::VERB},
      {"bought", Pos::VERB}, {"send", Pos::VERB}, {"sent", Pos::VERB}, {"build", Pos::VERB},
      {"built", Pos::VERB}, {"fall", Pos::VERB}, {"fell", Pos::VERB}, {"fallen", Pos::VERB},
      {"cut", Pos::VERB}, {"reach", Pos::VERB}, {"sell", Pos::VERB}, {"sold", Pos::VERB},
      // common adverbs
      {"very", Pos::ADV}, {"also", Pos::ADV}, {"just", Pos::ADV}, {"now", Pos::ADV},
      {"then", Pos::ADV}, {"here", Pos::ADV}, {"there", Pos::ADV}, {"well", Pos::ADV},
      {"only", Pos::ADV}, {"even", Pos::ADV}, {"still", Pos::ADV}, {"too", Pos::ADV},
      {"quite", Pos::ADV}, {"rather", Pos::ADV}, {"almost", Pos::ADV}, {"always", Pos::ADV},
      {"never", Pos::ADV}, {"often", Pos::ADV}, {"sometimes", Pos::ADV}, {"usually", Pos::ADV},
      {"really", Pos::ADV}, {"already", Pos::ADV}, {"soon", Pos::ADV}, {"perhaps", Pos::ADV},
      {"maybe", Pos::ADV}, {"however", Pos::ADV}, {"therefore", Pos::ADV}, {"thus", Pos::ADV},
      {"not", Pos::ADV}, {"more", Pos::ADV}, {"most", Pos::ADV}, {"less", Pos::ADV},
      {"again", Pos::ADV}, {"ever", Pos::ADV}, {"far", Pos::ADV}, {"away", Pos::ADV},
      {"together", Pos::ADV}, {"yet", Pos::ADV}, {"instead", Pos::ADV}, {"once", Pos::ADV},
      // common adjectives
      {"good", Pos::ADJ}, {"new", Pos::ADJ}, {"long", Pos::ADJ}, {"great", Pos::ADJ},
      {"little", Pos::ADJ}, {"own", Pos::ADJ}, {"other", Pos::ADJ}, {"old", Pos::ADJ},
      {"right", Pos::ADJ}, {"big", Pos::ADJ}, {"high", Pos::ADJ}, {"different", Pos::ADJ},
      {"small", Pos::ADJ}, {"large", Pos::ADJ}, {"next", Pos::ADJ}, {"early", Pos::ADJ},
      {"young", Pos::ADJ}, {"important", Pos::ADJ}, {"few", Pos::ADJ}, {"public", Pos::ADJ},
      {"bad", Pos::ADJ}, {"same", Pos::ADJ}, {"able", Pos::ADJ}, {"key", Pos::ADJ},
      {"low", Pos::ADJ}, {"best", Pos::ADJ}, {"better", Pos::ADJ}, {"free", Pos::ADJ},
      {"full", Pos::ADJ}, {"main", Pos::ADJ}, {"real", Pos::ADJ}, {"sure", Pos::ADJ},
      {"last", Pos::ADJ}, {"late", Pos::ADJ}, {"hard", Pos::ADJ}, {"major", Pos::ADJ},
      {"strong", Pos::ADJ}, {"possible", Pos::ADJ}, {"whole", Pos::ADJ}, {"short", Pos::ADJ},
      // common nouns
      {"time", Pos::NOUN}, {"year", Pos::NOUN}, {"years", Pos::NOUN}, {"people", Pos::NOUN},
      {"way", Pos::NOUN}, {"day", Pos::NOUN}, {"days", Pos::NOUN}, {"man", Pos::NOUN},
      {"thing", Pos::NOUN}, {"things", Pos::NOUN}, {"woman", Pos::NOUN}, {"life", Pos::NOUN},
      {"child", Pos::NOUN}, {"children", Pos::NOUN}, {"world", Pos::NOUN},
      {"school", Pos::NOUN}, {"state", Pos::NOUN}, {"family", Pos::NOUN},
      {"student", Pos::NOUN}, {"students", Pos::NOUN}, {"group", Pos::NOUN},
      {"country", Pos::NOUN}, {"problem", Pos::NOUN}, {"hand", Pos::NOUN},
      {"part", Pos::NOUN}, {"place", Pos::NOUN}, {"case", Pos::NOUN}, {"week", Pos::NOUN},
      {"company", Pos::NOUN}, {"system", Pos::NOUN}, {"program", Pos::NOUN},
      {"question", Pos::NOUN}, {"work", Pos::NOUN}, {"government", Pos::NOUN},
      {"number", Pos::NOUN}, {"night", Pos::NOUN}, {"point", Pos::NOUN}, {"home", Pos::NOUN},
      {"water", Pos::NOUN}, {"room", Pos::NOUN}, {"mother", Pos::NOUN}, {"area", Pos::NOUN},
      {"money", Pos::NOUN}, {"story", Pos::NOUN}, {"fact", Pos::NOUN}, {"month", Pos::NOUN},
      {"lot", Pos::NOUN}, {"study", Pos::NOUN}, {"book", Pos::NOUN}, {"eye", Pos::NOUN},
      {"job", Pos::NOUN}, {"word", Pos::NOUN}, {"words", Pos::NOUN}, {"business", Pos::NOUN},
      {"issue", Pos::NOUN}, {"side", Pos::NOUN}, {"kind", Pos::NOUN}, {"head", Pos::NOUN},
      {"house", Pos::NOUN}, {"service", Pos::NOUN}, {"friend", Pos::NOUN},
      {"father", Pos::NOUN}, {"power", Pos::NOUN}, {"hour", Pos::NOUN}, {"game", Pos::NOUN},
      {"line", Pos::NOUN}, {"end", Pos::NOUN}, {"member", Pos::NOUN}, {"law", Pos::NOUN},
      {"car", Pos::NOUN}, {"city", Pos::NOUN}, {"community", Pos::NOUN}, {"name", Pos::NOUN},
      {"team", Pos::NOUN}, {"minute", Pos::NOUN}, {"idea", Pos::NOUN}, {"body", Pos::NOUN},
      {"level", Pos::NOUN}, {"office", Pos::NOUN}, {"door", Pos::NOUN}, {"health", Pos::NOUN},
      {"person", Pos::NOUN}, {"art", Pos::NOUN}, {"war", Pos::NOUN}, {"history", Pos::NOUN},
      {"party", Pos::NOUN}, {"result", Pos::NOUN}, {"results", Pos::NOUN},
      {"change", Pos::NOUN}, {"morning", Pos::NOUN}, {"reason", Pos::NOUN},
      {"research", Pos::NOUN}, {"girl", Pos::NOUN}, {"guy", Pos::NOUN}, {"moment", Pos::NOUN},
      {"air", Pos::NOUN}, {"teacher", Pos::NOUN}, {"force", Pos::NOUN},
      {"population", Pos::NOUN}, {"count", Pos::NOUN}, {"counts", Pos::NOUN},
      {"species", Pos::NOUN}, {"data", Pos::NOUN}, {"model", Pos::NOUN},
      {"growth", Pos::NOUN}, {"market", Pos::NOUN}, {"energy", Pos::NOUN},
      {"climate", Pos::NOUN}, {"slide", Pos::NOUN}, {"slides", Pos::NOUN},
      {"text", Pos::NOUN}, {"design", Pos::NOUN}, {"value", Pos::NOUN},
      {"impact", Pos::NOUN}, {"food", Pos::NOUN}, {"land", Pos::NOUN}, {"cost", Pos::NOUN},
      {"price", Pos::NOUN}, {"share", Pos::NOUN}, {"size", Pos::NOUN}, {"type", Pos::NOUN},
      {"rate", Pos::NOUN}, {"trend", Pos::NOUN}, {"goal", Pos::NOUN}, {"plan", Pos::NOUN},
  };
  return lex;
}

}  // namespace emph::features::detail
