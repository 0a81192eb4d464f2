#pragma once

#include <string_view>
#include <utility>

// Bundled word lists for the default English text pipeline. Lists are plain
// lowercase terms; replacements can be loaded from one-term-per-line files.

namespace aicnet::lexicon {

inline constexpr std::string_view kStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "also", "am", "an",
    "and", "any", "are", "aren't", "as", "at", "be", "because", "been", "before",
    "being", "below", "between", "both", "but", "by", "can", "cannot", "can't",
    "could", "couldn't", "did", "didn't", "do", "does", "doesn't", "doing", "don't",
    "down", "during", "each", "either", "else", "even", "ever", "every", "few",
    "for", "from", "further", "get", "gets", "got", "had", "hadn't", "has",
    "hasn't", "have", "haven't", "having", "he", "her", "here", "hers", "herself",
    "him", "himself", "his", "how", "however", "i", "i'm", "i've", "if", "in",
    "into", "is", "isn't", "it", "it's", "its", "itself", "just", "let's", "like",
    "many", "may", "me", "might", "more", "most", "much", "must", "my", "myself",
    "neither", "no", "nor", "not", "now", "of", "off", "often", "on", "once",
    "one", "only", "or", "other", "others", "ought", "our", "ours", "ourselves",
    "out", "over", "own", "perhaps", "quite", "rather", "really", "same", "shall",
    "she", "should", "shouldn't", "since", "so", "some", "still", "such", "than",
    "that", "that's", "the", "their", "theirs", "them", "themselves", "then",
    "there", "there's", "these", "they", "they're", "this", "those", "though",
    "through", "thus", "to", "too", "under", "until", "up", "upon", "us", "very",
    "was", "wasn't", "we", "we're", "were", "weren't", "what", "when", "where",
    "whether", "which", "while", "who", "whom", "whose", "why", "will", "with",
    "within", "without", "won't", "would", "wouldn't", "yet", "you", "you're",
    "your", "yours", "yourself", "yourselves", "thing", "things", "lot", "way",
    "something", "anything", "everything", "nothing", "someone", "anyone",
    "everyone", "somebody", "anybody", "everybody", "kind", "sort",
};

// Common nouns (singular lemma form). Kept disjoint from kStopwords.
inline constexpr std::string_view kNouns[] = {
    "ability", "access", "account", "act", "action", "activity", "actor", "age",
    "agency", "agreement", "aim", "air", "analysis", "answer", "approach", "area",
    "argument", "art", "article", "artist", "aspect", "assignment", "attention",
    "audience", "author", "background", "balance", "ballet", "base", "basis",
    "beauty", "beginning", "behavior", "belief", "body", "book", "boundary",
    "brain", "care", "career", "case", "category", "cause", "center", "century",
    "challenge", "chance", "change", "chapter", "character", "child", "choice",
    "choreographer", "choreography", "church", "city", "claim", "class",
    "classroom", "code", "colleague", "comment", "community", "company",
    "comparison", "concept", "concern", "conclusion", "condition", "conflict",
    "connection", "consequence", "content", "context", "control", "conversation",
    "costume", "country", "course", "court", "creativity", "critic", "criticism",
    "culture", "dance", "dancer", "data", "datum", "day", "debate", "decade",
    "decision", "definition", "degree", "design", "desire", "detail",
    "development", "dialogue", "difference", "direction", "discipline",
    "discourse", "discussion", "distinction", "diversity", "document", "drama",
    "economy", "education", "effect", "effort", "element", "emotion", "emphasis",
    "end", "energy", "environment", "era", "essay", "event", "evidence",
    "example", "experience", "explanation", "expression", "eye", "face", "fact",
    "factor", "family", "feature", "feeling", "field", "figure", "film", "floor",
    "focus", "foot", "force", "form", "foundation", "framework", "freedom",
    "friend", "function", "future", "game", "gender", "generation", "genre",
    "gesture", "goal", "government", "grace", "group", "growth", "hand", "head",
    "heart", "history", "home", "hope", "idea", "identity", "image", "impact",
    "importance", "individual", "influence", "information", "insight",
    "institution", "instructor", "interaction", "interest", "interpretation",
    "issue", "job", "journey", "judgment", "key", "knowledge", "language", "law",
    "leader", "learner", "learning", "leg", "lesson", "level", "life", "light",
    "line", "link", "list", "literature", "man", "material", "matter", "meaning",
    "measure", "medium", "member", "memory", "message", "method",
    "mind", "minute", "mode", "model", "moment", "money", "month", "motion",
    "movement", "music", "musician", "nation", "nature", "need", "network",
    "norm", "notion", "number", "object", "observation", "opinion",
    "opportunity", "order", "organization", "origin", "outcome", "page", "pair",
    "paper", "part", "participant", "partner", "passage", "past", "pattern", "pedagogy",
    "peer", "performance", "performer", "period", "person",
    "perspective", "phrase", "piece", "place", "plan", "point", "policy",
    "politics", "position", "posture", "power", "practice", "presence",
    "pressure", "principle", "problem", "process", "product", "production",
    "professor", "program", "project", "purpose", "quality", "question", "quote",
    "race", "rate", "reader", "reading", "reality", "reason", "reference",
    "reflection", "relation", "relationship", "religion", "reply", "report",
    "representation", "research", "resource", "response", "result", "rhythm",
    "right", "ritual", "role", "room", "rule", "scene", "school", "science",
    "section", "sense", "sentence", "series", "set", "shape", "sign",
    "significance", "situation", "skill", "society", "song", "source", "space",
    "speaker", "stage", "standard", "state", "step", "story", "strategy",
    "strength", "structure", "student", "study", "style", "subject", "success",
    "summary", "support", "symbol", "system", "task", "teacher", "technique",
    "technology", "tempo", "tension", "term", "text", "theater", "theatre",
    "theme", "theory", "thought", "time", "tool", "topic", "tradition",
    "training", "truth", "type", "understanding", "unit", "value", "version",
    "video", "view", "viewer", "voice", "war", "week", "woman", "word", "work",
    "world", "writer", "writing", "year", "youth",
};

// Base forms that are not nouns but must be recognised as lemma stems.
inline constexpr std::string_view kOtherBaseForms[] = {
    "accept", "achieve", "add", "agree", "allow", "appear", "apply", "argue",
    "ask", "assume", "attend", "become", "begin", "believe", "belong", "bring",
    "build", "call", "carry", "challenge", "choose", "claim", "come", "compare",
    "connect", "consider", "contain", "continue", "create", "dance", "deal",
    "decide", "define", "describe", "develop", "die", "discuss", "draw",
    "emphasize", "enjoy", "establish", "examine", "exist", "expect", "explain",
    "explore", "express", "fall", "feel", "find", "focus", "follow", "form",
    "give", "go", "grow", "happen", "hear", "help", "highlight", "hold",
    "identify", "imagine", "include", "increase", "indicate", "influence",
    "interest", "interpret", "involve", "join", "keep", "know", "lead", "learn",
    "leave", "like", "listen", "live", "look", "lose", "love", "make", "mean",
    "meet", "mention", "move", "need", "notice", "observe", "offer", "open",
    "perform", "place", "plan", "play", "point", "practice", "prefer",
    "present", "produce", "provide", "put", "question", "reach", "read",
    "realize", "receive", "reflect", "relate", "remain", "remember", "reply",
    "represent", "require", "see", "seem", "sell", "send", "serve", "set",
    "share", "show", "speak", "spend", "stand", "start", "stay", "stop",
    "study", "suggest", "support", "take", "talk", "teach", "tell", "tend",
    "think", "train", "try", "turn", "understand", "use", "view", "wait",
    "walk", "want", "watch", "wonder", "work", "write",
};

// Irregular inflections: surface -> lemma.
inline constexpr std::pair<std::string_view, std::string_view> kIrregular[] = {
    {"children", "child"},  {"men", "man"},           {"women", "woman"},
    {"people", "person"},   {"mice", "mouse"},        {"feet", "foot"},
    {"teeth", "tooth"},     {"geese", "goose"},       {"lives", "life"},
    {"wives", "wife"},      {"knives", "knife"},      {"leaves", "leaf"},
    {"selves", "self"},     {"halves", "half"},       {"wolves", "wolf"},
    {"analyses", "analysis"}, {"theses", "thesis"},   {"hypotheses", "hypothesis"},
    {"crises", "crisis"},   {"bases", "basis"},       {"criteria", "criterion"},
    {"phenomena", "phenomenon"}, {"media", "medium"}, {"curricula", "curriculum"},
    {"went", "go"},         {"gone", "go"},           {"goes", "go"},
    {"does", "do"},         {"was", "be"},
    {"were", "be"},         {"is", "be"},             {"are", "be"},
    {"been", "be"},         {"has", "have"},          {"had", "have"},
    {"did", "do"},          {"done", "do"},           {"made", "make"},
    {"saw", "see"},         {"seen", "see"},          {"took", "take"},
    {"taken", "take"},      {"gave", "give"},         {"given", "give"},
    {"brought", "bring"},     {"felt", "feel"},
    {"found", "find"},      {"knew", "know"},         {"known", "know"},
    {"wrote", "write"},     {"written", "write"},     {"spoke", "speak"},
    {"spoken", "speak"},    {"taught", "teach"},      {"began", "begin"},
    {"begun", "begin"},     {"became", "become"},     {"came", "come"},
    {"told", "tell"},       {"said", "say"},          {"held", "hold"},
    {"led", "lead"},        {"meant", "mean"},
    {"met", "meet"},        {"stood", "stand"},       {"understood", "understand"},
    {"chose", "choose"},    {"chosen", "choose"},     {"grew", "grow"},
    {"grown", "grow"},      {"drew", "draw"},         {"drawn", "draw"},
};

// Derivational suffixes that mark a noun under the default tagger.
inline constexpr std::string_view kNounSuffixes[] = {
    "tion", "sion", "ment", "ness", "ity", "ance", "ence", "ism", "ist",
    "ship", "hood", "dom", "logy", "graphy",
};

}  // namespace aicnet::lexicon
