"""Character alphabet, text/index encoding, and edit distance.

Labels are fixed-length int64 arrays. Index ``pad_index == len(chars)`` pads
the suffix; once it appears every later entry must also be padding, which
makes greedy decoding (truncate at first pad) well defined.
"""

from __future__ import annotations

import numpy as np

from .errors import MalformedLabel, TextTooLong, UnknownCharacter

# 36 lowercase alphanumerics, the standard comparison protocol for scene text
# recognition. All ingested text is lowercased to match.
DEFAULT_CHARS = "abcdefghijklmnopqrstuvwxyz0123456789"


class Alphabet:
    """Ordered character set plus a padding symbol at index ``len(chars)``."""

    def __init__(self, chars: str = DEFAULT_CHARS):
        if len(set(chars)) != len(chars):
            raise ValueError("alphabet characters must be distinct")
        if not chars:
            raise ValueError("alphabet must not be empty")
        self.chars = str(chars)
        self.pad_index = len(chars)
        self._index = {c: i for i, c in enumerate(chars)}

    @property
    def num_classes(self) -> int:
        """Size of the embedding/probability axis: ``len(chars) + 1``."""
        return len(self.chars) + 1

    def __contains__(self, ch: str) -> bool:
        return ch in self._index

    def __len__(self) -> int:
        return len(self.chars)

    def index_of(self, ch: str) -> int:
        try:
            return self._index[ch]
        except KeyError:
            raise UnknownCharacter(f"character {ch!r} is not in the alphabet") from None

    def normalize_for_match(self, text: str) -> str:
        """Lowercase and drop characters outside the alphabet.

        This is the comparison protocol used for recognition-accuracy style
        string matching.
        """
        return "".join(c for c in text.lower() if c in self._index)

    def to_json(self) -> str:
        return self.chars

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and other.chars == self.chars

    def __repr__(self) -> str:
        return f"Alphabet({self.chars!r})"


def encode_text(text: str, alphabet: Alphabet, length: int) -> np.ndarray:
    """Encode ``text`` as a fixed-length index array padded with ``pad_index``."""
    if len(text) > length:
        raise TextTooLong(f"text of length {len(text)} exceeds max length {length}")
    label = np.full(length, alphabet.pad_index, dtype=np.int64)
    for i, ch in enumerate(text):
        label[i] = alphabet.index_of(ch)
    return label


def validate_label(label: np.ndarray, alphabet: Alphabet) -> None:
    """Raise :class:`MalformedLabel` unless ``label`` is a valid index array."""
    arr = np.asarray(label)
    if arr.ndim != 1:
        raise MalformedLabel(f"label must be 1-d, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() > alphabet.pad_index):
        raise MalformedLabel("label contains indices outside [0, pad_index]")
    pads = np.flatnonzero(arr == alphabet.pad_index)
    if pads.size and not (arr[pads[0]:] == alphabet.pad_index).all():
        raise MalformedLabel("padding must form a contiguous suffix")


def decode_text(label: np.ndarray, alphabet: Alphabet) -> str:
    """Inverse of :func:`encode_text`; validates the padding-suffix rule."""
    validate_label(label, alphabet)
    arr = np.asarray(label)
    out = []
    for idx in arr:
        if idx == alphabet.pad_index:
            break
        out.append(alphabet.chars[int(idx)])
    return "".join(out)


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance with unit insert/delete/substitute costs."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a):
        current = [i + 1]
        for j, cb in enumerate(b):
            current.append(min(previous[j + 1] + 1,      # deletion
                               current[j] + 1,           # insertion
                               previous[j] + (ca != cb)))  # substitution
        previous = current
    return previous[-1]
