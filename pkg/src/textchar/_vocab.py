"""Curated English base vocabulary shared by the bundled lexicon data and the
synthetic corpus generator.

The word lists here are the single source the committed data files under
``textchar/data/`` are generated from (see ``tools/build_data.py``).  They are
deliberately modest in size: large enough to exercise every metric, small
enough to audit by hand.
"""

from __future__ import annotations

# --- open-class base words ---------------------------------------------------

CONCRETE_NOUNS = (
    "apple", "arm", "baby", "bag", "ball", "banana", "barn", "basket", "beach",
    "bed", "bell", "bird", "blanket", "boat", "bone", "book", "bottle", "bowl",
    "box", "boy", "branch", "bread", "brick", "bridge", "broom", "bucket",
    "bus", "butter", "button", "cake", "camera", "candle", "car", "carpet",
    "cat", "chair", "cheese", "chicken", "child", "church", "city", "cloud",
    "coat", "coin", "cow", "cup", "curtain", "desk", "dog", "door", "dress",
    "drum", "duck", "ear", "egg", "engine", "eye", "face", "farm", "fence",
    "field", "finger", "fire", "fish", "flag", "floor", "flower", "foot",
    "forest", "fork", "fox", "frog", "garden", "gate", "girl", "glass",
    "glove", "goat", "grass", "hammer", "hand", "hat", "head", "hill",
    "horse", "house", "island", "jacket", "jar", "key", "king", "kitchen",
    "kite", "knife", "ladder", "lake", "lamp", "leaf", "leg", "lemon",
    "letter", "lion", "lips", "map", "market", "meat", "milk", "mirror",
    "moon", "mountain", "mouse", "mouth", "nail", "neck", "nest", "nose",
    "ocean", "office", "onion", "oven", "page", "paper", "path", "pen",
    "pencil", "piano", "picture", "pillow", "pocket", "pond", "potato",
    "quilt", "rabbit", "radio", "rain", "river", "road", "rock", "roof",
    "rope", "salt", "sand", "school", "sheep", "shelf", "ship",
    "shirt", "shoe", "shoulder", "snow", "sock", "spoon", "stone", "street",
    "sugar", "sun", "table", "tail", "teacher", "tent", "ticket", "tiger",
    "tooth", "tower", "train", "tree", "truck", "valley", "village", "wall",
    "watch", "water", "wheel", "window", "wolf", "worker",
)

ABSTRACT_NOUNS = (
    "ability", "advice", "agreement", "answer", "argument", "attention",
    "balance", "beauty", "belief", "benefit", "chance", "change", "choice",
    "comfort", "concept", "concern", "courage", "culture", "curiosity",
    "danger", "decision", "desire", "difference", "difficulty", "direction",
    "doubt", "dream", "duty", "effect", "effort", "emotion", "energy",
    "evidence", "example", "experience", "fact", "failure", "faith", "fear",
    "feeling", "freedom", "future", "goal", "growth", "habit", "harmony",
    "history", "honor", "hope", "idea", "impact", "importance", "impression",
    "instinct", "intention", "interest", "issue", "joy", "judgment",
    "justice", "knowledge", "language", "logic", "loss", "luck", "meaning",
    "memory", "mercy", "method", "mind", "moment", "mood", "mystery",
    "nature", "notion", "opinion", "order", "patience", "peace",
    "plan", "pleasure", "power", "pride", "principle", "problem", "progress",
    "promise", "proof", "purpose", "quality", "question", "reason", "respect",
    "result", "risk", "sense", "silence", "skill", "sorrow", "spirit",
    "story", "strength", "success", "surprise", "talent", "theory", "thought",
    "trust", "truth", "value", "virtue", "wisdom", "wonder",
)

NOUNS = CONCRETE_NOUNS + ABSTRACT_NOUNS

IRREGULAR_PLURALS = {
    "child": "children",
    "foot": "feet",
    "goose": "geese",
    "knife": "knives",
    "leaf": "leaves",
    "life": "lives",
    "man": "men",
    "mouse": "mice",
    "person": "people",
    "shelf": "shelves",
    "tooth": "teeth",
    "wolf": "wolves",
    "woman": "women",
}

# lemma -> simple past; all other forms follow the regular rules
IRREGULAR_PAST = {
    "become": "became", "begin": "began", "bring": "brought", "build": "built",
    "buy": "bought", "catch": "caught", "choose": "chose", "come": "came",
    "do": "did", "draw": "drew", "drink": "drank", "drive": "drove",
    "eat": "ate", "fall": "fell", "feel": "felt", "find": "found",
    "fly": "flew", "forget": "forgot", "get": "got", "give": "gave",
    "go": "went", "grow": "grew", "hear": "heard", "hide": "hid",
    "hold": "held", "keep": "kept", "know": "knew", "leave": "left",
    "lose": "lost", "make": "made", "meet": "met", "read": "read",
    "ride": "rode", "ring": "rang", "rise": "rose", "run": "ran",
    "say": "said", "see": "saw", "sell": "sold", "send": "sent",
    "sing": "sang", "sit": "sat", "sleep": "slept", "speak": "spoke",
    "stand": "stood", "swim": "swam", "take": "took", "teach": "taught",
    "tell": "told", "think": "thought", "throw": "threw", "win": "won",
    "write": "wrote",
}

REGULAR_VERBS = (
    "accept", "admire", "agree", "allow", "answer", "appear", "arrive",
    "ask", "bake", "bark", "believe", "belong", "borrow", "bounce", "call",
    "carry", "chase", "chat", "clap", "clean", "climb", "close", "collect",
    "consider", "cook", "count", "cover", "cross", "cry", "dance", "decide",
    "deliver", "describe", "discover", "discuss", "drop", "enjoy",
    "enter", "expect", "explain", "explore", "fill", "finish", "fix",
    "follow", "gather", "grab", "greet", "guess", "happen", "help", "hop",
    "hope", "hunt", "hurry", "imagine", "improve", "invite", "jog", "join",
    "jump", "kick", "laugh", "learn", "lift", "listen", "live", "look",
    "love", "manage", "measure", "mention", "move", "need", "nod", "notice",
    "obey", "observe", "offer", "open", "paint", "pass", "pat", "pick",
    "plan", "plant", "play", "point", "prefer", "prepare", "pretend",
    "promise", "pull", "push", "question", "rain", "reach", "realize",
    "remain", "remember", "repair", "repeat", "reply", "rest", "return",
    "roll", "rub", "rush", "save", "scan", "scrub", "seem", "share", "shout",
    "skip", "slip", "smile", "solve", "sort", "start", "stay", "stir",
    "stop", "study", "succeed", "suggest", "talk", "test", "touch", "travel",
    "trust", "try", "turn", "visit", "wait", "walk", "want", "wash", "watch",
    "whisper", "wonder", "work", "worry", "wrap",
)

VERBS = tuple(sorted(REGULAR_VERBS + tuple(IRREGULAR_PAST)))

# verbs whose final consonant doubles before -ed / -ing
DOUBLING_VERBS = {
    "chat", "clap", "drop", "grab", "hop", "jog", "nod", "pat", "plan",
    "rub", "scan", "scrub", "skip", "slip", "stir", "stop", "wrap",
}

ADJECTIVES = (
    "able", "afraid", "ancient", "angry", "bitter", "black", "blue", "brave",
    "bright", "broad", "brown", "busy", "calm", "careful", "cheap", "clean",
    "clear", "clever", "cold", "common", "cool", "curious", "damp", "dark",
    "deep", "dirty", "dry", "dull", "eager", "early", "easy", "empty",
    "exact", "fair", "famous", "fast", "fierce", "fine", "flat", "fresh",
    "friendly", "full", "gentle", "glad", "golden", "gray", "great", "green",
    "happy", "hard", "heavy", "high", "hollow", "honest", "hot", "huge",
    "humble", "hungry", "kind", "large", "late", "lazy", "light", "little",
    "lonely", "long", "loud", "lovely", "low", "lucky", "mild", "modern",
    "narrow", "neat", "new", "nice", "noble", "noisy", "odd", "old", "pale",
    "patient", "plain", "pleasant", "polite", "poor", "proud", "pure",
    "quick", "quiet", "rare", "red", "rich", "ripe", "rough", "round", "sad",
    "sharp", "shiny", "short", "shy", "silent", "silver", "simple", "slow",
    "small", "smooth", "soft", "sour", "steep", "sticky", "strange",
    "strong", "sweet", "tall", "thick", "thin", "tiny", "tired", "warm",
    "weak", "wet", "white", "wide", "wild", "wise", "wooden", "young",
)

ADVERBS = (
    "again", "almost", "already", "always", "anywhere", "away", "badly",
    "barely", "bravely", "briefly", "calmly", "carefully", "certainly",
    "clearly", "closely", "deeply", "early", "easily", "eagerly",
    "everywhere", "exactly", "finally", "gently", "gladly", "here", "kindly",
    "lately", "loudly", "mostly", "nearly", "neatly", "never", "now",
    "often", "only", "patiently", "politely", "proudly", "quickly",
    "quietly", "rarely", "sadly", "simply", "slowly", "softly", "sometimes",
    "soon", "still", "suddenly", "there", "today", "together", "tomorrow",
    "usually", "very", "warmly", "wisely", "yesterday",
)

# --- closed-class words ------------------------------------------------------

PRONOUNS = (
    "i", "me", "my", "mine", "myself",
    "we", "us", "our", "ours", "ourselves",
    "you", "your", "yours", "yourself", "yourselves",
    "he", "him", "his", "himself",
    "she", "her", "hers", "herself",
    "it", "its", "itself",
    "they", "them", "their", "theirs", "themselves",
    "who", "whom", "whose", "which", "what",
    "anyone", "anything", "everyone", "everything", "nobody", "nothing",
    "somebody", "someone", "something", "this", "that", "these", "those",
)

DETERMINERS = (
    "a", "an", "the", "each", "every", "some", "any", "no", "all", "both",
    "few", "many", "much", "most", "other", "another", "such", "either",
    "neither", "several",
)

PREPOSITIONS = (
    "about", "above", "across", "after", "against", "along", "among",
    "around", "at", "before", "behind", "below", "beneath", "beside",
    "between", "beyond", "by", "down", "during", "for", "from", "in",
    "inside", "into", "near", "of", "off", "on", "onto", "out", "outside",
    "over", "past", "since", "through", "toward", "under", "until", "up",
    "upon", "with", "within", "without",
)

CONJUNCTIONS = (
    "and", "because", "but", "if", "nor", "or", "so", "than", "though",
    "unless", "whereas", "while", "yet", "although", "when", "whenever",
    "where", "wherever",
)

AUXILIARIES = (
    "am", "are", "be", "been", "being", "is", "was", "were",
    "do", "does", "did", "done",
    "have", "has", "had", "having",
    "can", "could", "may", "might", "must", "shall", "should", "will",
    "would", "ought",
)

PARTICLES = ("not", "to", "n't")

# --- inflection rules ----------------------------------------------------

_VOWELS = set("aeiou")
_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")


def _ends_sibilant(word: str) -> bool:
    return word.endswith(_SIBILANT_ENDINGS)


def noun_plural(noun: str) -> str:
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in _VOWELS:
        return noun[:-1] + "ies"
    if _ends_sibilant(noun):
        return noun + "es"
    return noun + "s"


def verb_3sg(verb: str) -> str:
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in _VOWELS:
        return verb[:-1] + "ies"
    if _ends_sibilant(verb) or verb.endswith("o"):
        return verb + "es"
    return verb + "s"


def verb_past(verb: str) -> str:
    if verb in IRREGULAR_PAST:
        return IRREGULAR_PAST[verb]
    if verb in DOUBLING_VERBS:
        return verb + verb[-1] + "ed"
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in _VOWELS:
        return verb[:-1] + "ied"
    return verb + "ed"


def verb_gerund(verb: str) -> str:
    if verb in DOUBLING_VERBS:
        return verb + verb[-1] + "ing"
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith("e") and not verb.endswith("ee"):
        return verb[:-1] + "ing"
    return verb + "ing"


def verb_forms(verb: str) -> tuple[str, str, str, str]:
    """Base, third-person singular, simple past, gerund."""
    return verb, verb_3sg(verb), verb_past(verb), verb_gerund(verb)
