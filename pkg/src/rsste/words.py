"""Bundled word corpus for rendering, pairing, and target-text sampling.

Lowercase alphanumeric tokens of length 2..8. The list mixes common English
words with signage-style tokens so every alphabet character (including all
ten digits) appears many times.
"""

from __future__ import annotations

from pathlib import Path

from .alphabet import Alphabet
from .errors import UnknownCharacter

DEFAULT_WORDS = (
    "able", "about", "above", "access", "account", "acid", "across", "act",
    "action", "active", "add", "adopt", "adult", "after", "again", "age",
    "agent", "agree", "ahead", "air", "album", "alert", "all", "allow",
    "almost", "alone", "along", "also", "always", "amber", "amount", "angle",
    "animal", "annual", "answer", "any", "apart", "apple", "apply", "april",
    "area", "argue", "arm", "army", "around", "array", "arrive", "art",
    "aspect", "asset", "atom", "august", "author", "auto", "autumn", "avenue",
    "avoid", "award", "away", "axis", "baby", "back", "badge", "bag",
    "baker", "ball", "band", "bank", "bar", "base", "basic", "basket",
    "batch", "bath", "battle", "beach", "bean", "bear", "beat", "became",
    "become", "bed", "been", "before", "began", "begin", "behind", "bell",
    "belong", "below", "belt", "bench", "best", "better", "between", "big",
    "bike", "bill", "bird", "birth", "bit", "black", "blade", "blank",
    "block", "blood", "blue", "board", "boat", "body", "bold", "bone",
    "bonus", "book", "boost", "border", "born", "both", "bottle", "bottom",
    "bought", "box", "brain", "branch", "brand", "brave", "bread", "break",
    "brick", "bridge", "brief", "bright", "bring", "broad", "brown", "brush",
    "budget", "build", "bulb", "bulk", "burn", "bus", "busy", "but",
    "button", "buy", "cabin", "cable", "cafe", "cake", "call", "calm",
    "came", "camel", "camera", "camp", "campus", "can", "canal", "candle",
    "canyon", "cap", "capital", "car", "card", "care", "career", "cargo",
    "carpet", "carry", "case", "cash", "castle", "cat", "catch", "cause",
    "cedar", "cell", "center", "chain", "chair", "chalk", "chance", "change",
    "chapter", "charge", "chart", "cheap", "check", "cheese", "chest", "chief",
    "child", "choice", "choose", "chrome", "church", "circle", "city", "civil",
    "claim", "class", "clay", "clean", "clear", "clerk", "click", "client",
    "cliff", "climb", "clinic", "clock", "close", "cloth", "cloud", "club",
    "coach", "coal", "coast", "coat", "code", "coffee", "coin", "cold",
    "collect", "college", "color", "column", "combine", "come", "comet", "common",
    "company", "compare", "complex", "concept", "concert", "control", "cook", "cool",
    "copper", "copy", "coral", "core", "corn", "corner", "cost", "cotton",
    "could", "council", "count", "county", "couple", "course", "court", "cover",
    "craft", "crane", "cream", "create", "credit", "crew", "crop", "cross",
    "crowd", "crown", "cube", "culture", "cup", "current", "curve", "custom",
    "cycle", "daily", "dairy", "dance", "dark", "data", "date", "dawn",
    "day", "deal", "debate", "debut", "decade", "decide", "deck", "deep",
    "deer", "degree", "delay", "deliver", "delta", "demand", "denim", "dense",
    "deny", "depth", "desert", "design", "desk", "detail", "device", "dial",
    "diamond", "did", "diet", "digital", "dinner", "direct", "dish", "dismiss",
    "display", "divide", "dock", "doctor", "dog", "dollar", "domain", "door",
    "double", "down", "dozen", "draft", "dragon", "drama", "draw", "dream",
    "dress", "drift", "drink", "drive", "drop", "drum", "dry", "duck",
    "due", "dull", "dusk", "dust", "duty", "each", "eager", "eagle",
    "ear", "early", "earn", "earth", "east", "easy", "eat", "echo",
    "edge", "edit", "effect", "effort", "egg", "eight", "either", "elbow",
    "elder", "electric", "element", "eleven", "elite", "else", "email", "ember",
    "emerge", "empire", "employ", "empty", "end", "energy", "engine", "enjoy",
    "enough", "enter", "entire", "entry", "equal", "era", "error", "escape",
    "essay", "estate", "even", "event", "ever", "every", "exact", "exam",
    "example", "exit", "expand", "expert", "export", "express", "extra", "eye",
    "fabric", "face", "fact", "factor", "fair", "faith", "fall", "family",
    "fan", "fancy", "far", "farm", "fast", "fault", "favor", "fear",
    "feast", "feature", "fee", "feed", "feel", "fellow", "felt", "fence",
    "fest", "few", "fiber", "field", "fifth", "fight", "figure", "file",
    "fill", "film", "filter", "final", "find", "fine", "finger", "finish",
    "fire", "firm", "first", "fish", "fit", "five", "fix", "flag",
    "flame", "flash", "flat", "fleet", "flight", "float", "flood", "floor",
    "flour", "flow", "flower", "fluid", "fly", "focus", "fog", "fold",
    "folk", "follow", "font", "food", "foot", "for", "force", "forest",
    "forge", "fork", "form", "formal", "format", "fort", "forum", "found",
    "four", "frame", "free", "fresh", "friend", "frog", "from", "front",
    "frost", "fruit", "fuel", "full", "fun", "fund", "funny", "future",
    "gain", "galaxy", "gallery", "game", "gap", "garage", "garden", "gas",
    "gate", "gather", "gave", "gear", "gender", "general", "gentle", "get",
    "giant", "gift", "girl", "give", "glad", "glass", "global", "glory",
    "glove", "goal", "goat", "gold", "golf", "gone", "good", "grace",
    "grade", "grain", "grand", "grant", "grape", "graph", "grass", "gray",
    "great", "green", "grid", "grill", "ground", "group", "grow", "guard",
    "guess", "guest", "guide", "guitar", "gulf", "habit", "hair", "half",
    "hall", "hand", "handle", "hang", "happen", "happy", "harbor", "hard",
    "harvest", "hat", "have", "hawk", "hazard", "head", "health", "hear",
    "heart", "heat", "heavy", "hedge", "height", "hello", "help", "herb",
    "here", "hero", "hidden", "high", "hill", "hint", "hire", "history",
    "hit", "hold", "hole", "home", "honey", "honor", "hope", "horizon",
    "horn", "horse", "host", "hotel", "hour", "house", "human", "humor",
    "hunt", "hybrid", "ice", "icon", "idea", "ideal", "image", "impact",
    "import", "inch", "income", "index", "indoor", "infant", "inform", "inner",
    "input", "insect", "inside", "intro", "invite", "iron", "island", "issue",
    "item", "ivory", "jacket", "jade", "jazz", "jeep", "jelly", "jet",
    "job", "join", "joint", "joke", "journal", "joy", "judge", "juice",
    "july", "jump", "june", "jungle", "junior", "jury", "just", "keen",
    "keep", "kept", "kernel", "key", "kick", "kid", "kind", "king",
    "kiosk", "kit", "kitchen", "kite", "knee", "knife", "knock", "know",
    "label", "labor", "lace", "lake", "lamp", "land", "lane", "large",
    "laser", "last", "late", "laugh", "launch", "layer", "lazy", "lead",
    "leaf", "league", "learn", "lease", "least", "leather", "leave", "left",
    "legal", "lemon", "lend", "length", "lens", "less", "letter", "level",
    "light", "like", "lime", "limit", "line", "link", "lion", "liquid",
    "list", "listen", "little", "live", "lizard", "load", "loan", "lobby",
    "local", "lock", "lodge", "log", "logic", "long", "look", "loop",
    "loose", "lord", "lose", "loss", "lost", "lot", "loud", "lounge",
    "love", "low", "loyal", "lucky", "lunar", "lunch", "luxury", "machine",
    "made", "magic", "magnet", "mail", "main", "major", "make", "mall",
    "mango", "manner", "manual", "map", "maple", "marble", "march", "margin",
    "marine", "mark", "market", "mask", "mass", "master", "match", "math",
    "matter", "may", "mayor", "meadow", "meal", "mean", "measure", "meat",
    "medal", "media", "medium", "meet", "member", "memory", "mental", "menu",
    "mercy", "merge", "merit", "metal", "meter", "method", "metro", "middle",
    "might", "mile", "milk", "mill", "mind", "mine", "minor", "minute",
    "mirror", "miss", "mix", "mobile", "mode", "model", "modern", "moment",
    "monday", "money", "monitor", "month", "moon", "moral", "more", "morning",
    "most", "motel", "mother", "motion", "motor", "mount", "mouse", "mouth",
    "move", "movie", "much", "mural", "music", "must", "mutual", "nail",
    "name", "narrow", "nation", "native", "nature", "navy", "near", "neat",
    "neck", "need", "needle", "nerve", "nest", "net", "network", "never",
    "new", "news", "next", "nice", "night", "nine", "noble", "node",
    "noise", "noon", "normal", "north", "nose", "note", "nothing", "notice",
    "novel", "now", "number", "nurse", "nylon", "oak", "object", "ocean",
    "offer", "office", "often", "oil", "old", "olive", "once", "one",
    "onion", "only", "open", "opera", "option", "orange", "orbit", "orchard",
    "order", "organ", "origin", "other", "ounce", "out", "outdoor", "outer",
    "output", "oven", "over", "owner", "oxygen", "pace", "pack", "package",
    "page", "paint", "pair", "palace", "palm", "panel", "paper", "parade",
    "park", "part", "partner", "party", "pass", "past", "pasta", "patch",
    "path", "patio", "pattern", "pause", "pay", "peace", "peach", "peak",
    "pear", "pearl", "pen", "pencil", "people", "pepper", "per", "perfect",
    "period", "permit", "person", "petal", "phase", "phone", "photo", "phrase",
    "piano", "pick", "picnic", "picture", "piece", "pilot", "pine", "pink",
    "pioneer", "pipe", "pitch", "pixel", "pizza", "place", "plain", "plan",
    "plane", "planet", "plant", "plate", "play", "plaza", "please", "plenty",
    "plot", "plug", "plus", "pocket", "poem", "point", "polar", "policy",
    "polish", "pond", "pool", "pop", "port", "portal", "post", "poster",
    "pot", "potato", "pound", "powder", "power", "press", "price", "pride",
    "primary", "prime", "print", "prior", "prism", "private", "prize", "process",
    "produce", "profile", "profit", "program", "project", "proof", "proper", "protect",
    "proud", "prove", "public", "pull", "pulse", "pump", "pupil", "pure",
    "purple", "purpose", "push", "put", "puzzle", "quality", "quarter", "queen",
    "query", "quest", "quick", "quiet", "quilt", "quit", "quite", "quota",
    "quote", "rabbit", "race", "rack", "radar", "radio", "rail", "rain",
    "raise", "rally", "ranch", "random", "range", "rank", "rapid", "rare",
    "rate", "rather", "ratio", "raw", "reach", "read", "ready", "real",
    "reason", "recall", "receive", "recent", "recipe", "record", "red", "reef",
    "refer", "reform", "region", "relax", "relay", "rely", "remain", "remote",
    "render", "rent", "repair", "repeat", "report", "rescue", "reserve", "reset",
    "resort", "rest", "result", "retail", "return", "reveal", "review", "reward",
    "rhythm", "ribbon", "rice", "rich", "ride", "ridge", "right", "ring",
    "rise", "risk", "rival", "river", "road", "roast", "robot", "rock",
    "rocket", "role", "roll", "roof", "room", "root", "rope", "rose",
    "rotate", "rough", "round", "route", "row", "royal", "rubber", "ruby",
    "rude", "rugby", "rule", "run", "rural", "rust", "sad", "saddle",
    "safe", "sail", "salad", "sale", "salmon", "salt", "same", "sample",
    "sand", "sauce", "save", "say", "scale", "scan", "scene", "scheme",
    "school", "science", "score", "scout", "screen", "script", "sea", "search",
    "season", "seat", "second", "secret", "sector", "secure", "see", "seed",
    "seek", "seem", "select", "self", "sell", "send", "senior", "sense",
    "series", "serve", "service", "set", "seven", "shade", "shadow", "shake",
    "shall", "shape", "share", "sharp", "sheep", "sheet", "shelf", "shell",
    "shield", "shift", "shine", "ship", "shirt", "shoe", "shop", "shore",
    "short", "shot", "should", "show", "shower", "side", "sight", "sign",
    "signal", "silent", "silk", "silver", "simple", "since", "sing", "single",
    "sink", "sister", "sit", "site", "six", "size", "sketch", "ski",
    "skill", "skin", "sky", "slate", "sleep", "slice", "slide", "slight",
    "slope", "slow", "small", "smart", "smile", "smoke", "smooth", "snake",
    "snow", "soap", "soccer", "social", "sock", "sofa", "soft", "soil",
    "solar", "sold", "solid", "solve", "some", "song", "soon", "sort",
    "sound", "soup", "source", "south", "space", "spare", "spark", "speak",
    "special", "speed", "spell", "spend", "sphere", "spice", "spider", "spin",
    "spirit", "split", "spoke", "sport", "spot", "spray", "spread", "spring",
    "square", "stable", "stack", "stadium", "staff", "stage", "stair", "stake",
    "stamp", "stand", "star", "start", "state", "station", "stay", "steady",
    "steam", "steel", "steep", "stem", "step", "stereo", "stick", "still",
    "stock", "stone", "stop", "store", "storm", "story", "stove", "strand",
    "stream", "street", "strike", "string", "strong", "studio", "study", "stuff",
    "style", "subject", "subway", "such", "sudden", "sugar", "suit", "summer",
    "summit", "sun", "sunny", "sunset", "super", "supper", "supply", "support",
    "sure", "surf", "surface", "survey", "sweet", "swift", "swim", "swing",
    "switch", "symbol", "system", "table", "tactic", "tail", "take", "tale",
    "talent", "talk", "tall", "tank", "tap", "tape", "target", "task",
    "taste", "tax", "taxi", "tea", "teach", "team", "tech", "temple",
    "ten", "tender", "tennis", "tent", "term", "test", "text", "than",
    "thank", "that", "the", "theater", "theme", "then", "theory", "there",
    "thermal", "these", "thick", "thin", "thing", "think", "third", "this",
    "thread", "three", "thrive", "throw", "thumb", "thunder", "ticket", "tide",
    "tiger", "tile", "till", "timber", "time", "tiny", "tip", "tire",
    "title", "toast", "today", "token", "told", "toll", "tomato", "tone",
    "tool", "tooth", "top", "topic", "torch", "total", "touch", "tour",
    "toward", "tower", "town", "toy", "trace", "track", "trade", "traffic",
    "trail", "train", "transit", "travel", "tray", "treat", "tree", "trend",
    "trial", "tribe", "trick", "trip", "trophy", "trout", "truck", "true",
    "trust", "truth", "try", "tube", "tune", "tunnel", "turbo", "turn",
    "twelve", "twenty", "twice", "twin", "two", "type", "ultra", "umbrella",
    "uncle", "under", "union", "unique", "unit", "unity", "update", "upgrade",
    "upper", "urban", "urgent", "usage", "use", "useful", "user", "usual",
    "valley", "value", "van", "vapor", "vast", "vector", "velvet", "vendor",
    "venue", "verb", "verse", "very", "vessel", "veteran", "via", "video",
    "view", "villa", "village", "vine", "vinyl", "violet", "virtual", "visit",
    "visual", "vital", "vivid", "vocal", "voice", "volume", "vote", "voyage",
    "wage", "wagon", "wait", "wake", "walk", "wall", "walnut", "want",
    "warm", "watch", "water", "wave", "way", "wealth", "weather", "web",
    "week", "weight", "welcome", "well", "west", "whale", "what", "wheat",
    "wheel", "when", "where", "which", "while", "white", "whole", "wide",
    "width", "wild", "will", "win", "wind", "window", "wine", "wing",
    "winner", "winter", "wire", "wisdom", "wise", "wish", "with", "wizard",
    "wolf", "wonder", "wood", "wool", "word", "work", "world", "worth",
    "would", "wrap", "write", "wrong", "xenon", "xray", "yard", "year",
    "yellow", "yes", "yet", "yield", "yoga", "young", "your", "youth",
    "zebra", "zero", "zone", "zoo",
    # signage-style alphanumeric tokens keep every digit in circulation
    "100m", "12pm", "1st", "2024", "24h", "2nd", "365", "3rd",
    "404", "42b", "4wd", "50off", "5km", "6am", "7days", "747",
    "80s", "8bit", "90s", "9to5", "a1", "area51", "b2b", "bus66",
    "cat5", "dock9", "exit12", "gate7", "hall3", "hwy101", "lot45", "mk2",
    "no1", "pier39", "route66", "row8", "seat14", "t800", "unit07", "v8",
    "ward6", "x2000", "year1", "zip90210"[:8],
)


def default_corpus(max_len: int | None = None) -> list[str]:
    """Return the bundled word list, optionally capped at ``max_len`` chars."""
    words = list(DEFAULT_WORDS)
    if max_len is not None:
        words = [w for w in words if len(w) <= max_len]
    return words


def load_corpus(path: str | Path, alphabet: Alphabet, max_len: int) -> list[str]:
    """Read one word per line, lowercase, and keep valid encodable words."""
    words = []
    for raw in Path(path).read_text().splitlines():
        word = raw.strip().lower()
        if not word or len(word) > max_len:
            continue
        if all(c in alphabet for c in word):
            words.append(word)
    return words


def filter_corpus(words: list[str], alphabet: Alphabet, max_len: int) -> list[str]:
    """Drop words that do not encode under ``alphabet`` within ``max_len``."""
    kept = []
    for word in words:
        if len(word) > max_len or not word:
            continue
        try:
            for c in word:
                alphabet.index_of(c)
        except UnknownCharacter:
            continue
        kept.append(word)
    return kept
