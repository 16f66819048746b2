"""Token-level text representation, perturbation, and diffing.

Tokenization is intentionally simple: split on whitespace, then peel
terminal punctuation characters (``. , ! ? ; :``) off the end of each
chunk into their own tokens. Detokenization joins tokens with single
spaces and reattaches peeled punctuation to the preceding token, so the
round trip is exact modulo whitespace collapsing (and lowercasing when
requested). Byte-exact reconstruction of arbitrary input is a non-goal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple, Sequence

from .errors import ConflictingSwaps, EmptyInput, LengthMismatch

TERMINAL_PUNCTUATION = frozenset(".,!?;:")


@dataclass(frozen=True)
class TokenizedText:
    """A text sample as an ordered token sequence with a recoverable surface form.

    ``attributes`` carries sample metadata; the ground-truth class id lives
    under the ``"label"`` key. Instances are immutable and safe to share
    across concurrent attack workers.
    """

    original_text: str
    tokens: tuple[str, ...]
    lowercased: bool = True
    attributes: Mapping[str, object] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    @property
    def text(self) -> str:
        """Surface form reconstructed from the tokens."""
        return detokenize(self.tokens)

    def label(self) -> int:
        return int(self.attributes["label"])  # type: ignore[arg-type]


class SwapRecord(NamedTuple):
    """A single word substitution at a token position."""

    index: int
    original_word: str
    replacement_word: str


def _validate_swap(swap: SwapRecord, token_count: int) -> None:
    if not 0 <= swap.index < token_count:
        raise IndexError(f"swap index {swap.index} out of range for {token_count} tokens")
    if swap.original_word == swap.replacement_word:
        raise ValueError(f"swap at index {swap.index} replaces a word with itself")


def tokenize(text: str, lowercase: bool = True) -> TokenizedText:
    """Split ``text`` into tokens, peeling terminal punctuation.

    Raises EmptyInput for empty or whitespace-only text.
    """
    if not text.strip():
        raise EmptyInput("cannot tokenize empty or whitespace-only text")
    source = text.lower() if lowercase else text
    tokens: list[str] = []
    for chunk in source.split():
        peeled: list[str] = []
        while len(chunk) > 1 and chunk[-1] in TERMINAL_PUNCTUATION:
            peeled.append(chunk[-1])
            chunk = chunk[:-1]
        tokens.append(chunk)
        tokens.extend(reversed(peeled))
    return TokenizedText(original_text=text, tokens=tuple(tokens), lowercased=lowercase)


def detokenize(tokens: Sequence[str]) -> str:
    """Join tokens with single spaces, attaching punctuation-only tokens."""
    parts: list[str] = []
    for token in tokens:
        if parts and all(c in TERMINAL_PUNCTUATION for c in token):
            parts[-1] += token
        else:
            parts.append(token)
    return " ".join(parts)


def apply_swaps(x: TokenizedText, swaps: Sequence[SwapRecord]) -> TokenizedText:
    """Return a copy of ``x`` with the given word substitutions applied.

    Swap indices must be distinct and in range, and each swap's
    ``original_word`` must match the token currently at its index.
    Attributes are preserved. An empty swap list returns an equal text.
    """
    seen: set[int] = set()
    for swap in swaps:
        _validate_swap(swap, len(x.tokens))
        if swap.index in seen:
            raise ConflictingSwaps(f"multiple swaps target index {swap.index}")
        seen.add(swap.index)
        if x.tokens[swap.index] != swap.original_word:
            raise ValueError(
                f"swap at index {swap.index} expects {swap.original_word!r}, "
                f"text has {x.tokens[swap.index]!r}"
            )
    tokens = list(x.tokens)
    for swap in swaps:
        tokens[swap.index] = swap.replacement_word
    new_tokens = tuple(tokens)
    return TokenizedText(
        original_text=detokenize(new_tokens),
        tokens=new_tokens,
        lowercased=x.lowercased,
        attributes=dict(x.attributes),
    )


class WordDiff(NamedTuple):
    indices: frozenset[int]
    percent: float


def word_diff(x: TokenizedText, x_adv: TokenizedText) -> WordDiff:
    """Differing token positions and the perturbed-word percentage.

    Requires equal token counts (synonym substitution preserves length).
    """
    if len(x.tokens) != len(x_adv.tokens):
        raise LengthMismatch(
            f"token counts differ: {len(x.tokens)} vs {len(x_adv.tokens)}"
        )
    indices = frozenset(
        i for i, (a, b) in enumerate(zip(x.tokens, x_adv.tokens)) if a != b
    )
    percent = 100.0 * len(indices) / len(x.tokens)
    return WordDiff(indices=indices, percent=percent)


def swaps_between(x: TokenizedText, x_adv: TokenizedText) -> tuple[SwapRecord, ...]:
    """SwapRecords reconstructing ``x_adv`` from ``x``, in index order."""
    diff = word_diff(x, x_adv)
    return tuple(
        SwapRecord(i, x.tokens[i], x_adv.tokens[i]) for i in sorted(diff.indices)
    )


def levenshtein(a: str, b: str) -> int:
    """Character edit distance with unit-cost insert/delete/substitute."""
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (ca != cb),
                )
            )
        previous = current
    return previous[-1]
