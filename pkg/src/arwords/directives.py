"""Directive sequences, standard word prefixes, letter frequencies, and the
Arnoux-Rauzy subtractive continued-fraction expansion.

A directive names a composition of the substitutions SIGMA[1..3].  The text
format is a string over '1','2','3' with an optional trailing '*' meaning
"repeat the finite part forever" (e.g. "123*" is the Tribonacci directive).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .words import ALPHABET, SIGMA, check_letter, incidence_of, row_times_mat

Rational = Union[int, Fraction]


class UnstabilizedError(ValueError):
    """The directive does not determine as many letters as requested."""


@dataclass(frozen=True)
class Directive:
    """A finite sequence of substitution indices, optionally repeated forever."""

    indices: Tuple[int, ...]
    periodic: bool = False

    def __post_init__(self):
        for i in self.indices:
            check_letter(i)

    @classmethod
    def parse(cls, text: str) -> "Directive":
        periodic = text.endswith("*")
        body = text[:-1] if periodic else text
        if body.strip("123") != "":
            raise ValueError(f"directive may only contain '1','2','3' and a trailing '*': {text!r}")
        return cls(tuple(int(c) for c in body), periodic)

    def __str__(self) -> str:
        return "".join(map(str, self.indices)) + ("*" if self.periodic else "")

    def __len__(self) -> int:
        return len(self.indices)

    def take(self, n: int) -> Tuple[int, ...]:
        """First n indices, cycling through the period when periodic."""
        if n <= len(self.indices):
            return self.indices[:n]
        if not self.periodic:
            raise UnstabilizedError(
                f"directive {self} has only {len(self.indices)} substitutions, {n} requested"
            )
        if not self.indices:
            raise UnstabilizedError("empty periodic directive")
        reps = -(-n // len(self.indices))
        return (self.indices * reps)[:n]


def as_directive(d: Union[Directive, str, Sequence[int]]) -> Directive:
    if isinstance(d, Directive):
        return d
    if isinstance(d, str):
        return Directive.parse(d)
    return Directive(tuple(d))


def _expansions(indices: Sequence[int], budget: int) -> List[str]:
    """Images of the three seed letters under s_0 o ... o s_{n-1}, truncated.

    Truncating to `budget` letters at every step is sound because a morphism
    image of a prefix is a prefix of the image.
    """
    words = ["1", "2", "3"]
    for i in reversed(indices):
        words = [SIGMA[i](w)[:budget] for w in words]
    return words


def _common_prefix_len(words: List[str]) -> int:
    n = min(len(w) for w in words)
    a, b, c = words
    for k in range(n):
        if not (a[k] == b[k] == c[k]):
            return k
    return n


def standard_prefix(directive: Union[Directive, str, Sequence[int]], budget: int) -> str:
    """First `budget` letters of the standard word named by the directive.

    For a finite directive this is the prefix of s_0 o ... o s_{n-1}('1').
    For a periodic directive the period is unfolded until the first `budget`
    letters agree across all three seed letters, which makes them final for
    every continuation.  Raises UnstabilizedError when the directive cannot
    determine that many letters.
    """
    d = as_directive(directive)
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    if budget == 0:
        return ""
    if not d.indices:
        raise UnstabilizedError("empty directive cannot generate a word")

    if not d.periodic:
        word = _expansions(d.indices, budget)[0]
        if len(word) < budget:
            raise UnstabilizedError(
                f"directive {d} determines only {len(word)} letters, {budget} requested"
            )
        return word[:budget]

    period = len(d.indices)
    depth = 0
    stable = 0
    stalled = 0
    # One period per round; a period containing every letter always makes progress.
    while True:
        depth += period
        words = _expansions(d.take(depth), budget)
        now = _common_prefix_len(words)
        if now >= budget:
            return words[0][:budget]
        stalled = stalled + 1 if now == stable else 0
        stable = now
        if stalled > 3:
            raise UnstabilizedError(
                f"directive {d} stabilizes only {stable} letters, {budget} requested"
            )


def frequency_estimate(
    directive: Union[Directive, str, Sequence[int]], depth: int
) -> Tuple[Fraction, Fraction, Fraction]:
    """Normalized row vector (1,1,1) * M_{s_{depth-1}} * ... * M_{s_0}.

    Converges to the letter-frequency vector of the standard word as depth
    grows, provided each substitution occurs infinitely often.  Exact.
    """
    d = as_directive(directive)
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    v = row_times_mat((1, 1, 1), incidence_of(d.take(depth)))
    total = sum(v)
    return tuple(Fraction(x, total) for x in v)  # type: ignore[return-value]


HALT_ZERO = "zero entry"
HALT_NO_CONDITION = "no condition"
HALT_MAX_STEPS = "max steps"


def ar_expand(
    v: Sequence[Rational], max_steps: int = 1000
) -> Tuple[List[int], Tuple[Fraction, Fraction, Fraction], str]:
    """Arnoux-Rauzy subtractive expansion of a nonnegative triple.

    While some entry is >= the sum of the other two (tested in order 1,2,3,
    equality counts), emit that index and subtract the other two from it.
    Halts with "zero entry" when the pending step would subtract zero (the
    other two entries vanished), with "no condition" when no entry dominates,
    or with "max steps".  Returns (emitted indices, remainder, halt reason).
    """
    x = [Fraction(t) for t in v]
    if any(t < 0 for t in x):
        raise ValueError(f"entries must be nonnegative, got {v!r}")
    emitted: List[int] = []
    while True:
        if len(emitted) >= max_steps:
            return emitted, tuple(x), HALT_MAX_STEPS  # type: ignore[return-value]
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            if x[i] >= x[j] + x[k]:
                if x[j] + x[k] == 0:
                    return emitted, tuple(x), HALT_ZERO  # type: ignore[return-value]
                x[i] -= x[j] + x[k]
                emitted.append(i + 1)
                break
        else:
            return emitted, tuple(x), HALT_NO_CONDITION  # type: ignore[return-value]


def letter_frequencies_observed(word: str) -> Tuple[Fraction, Fraction, Fraction]:
    """Empirical letter proportions of a nonempty finite word."""
    n = len(word)
    if n == 0:
        raise ValueError("empty word has no letter proportions")
    return tuple(Fraction(word.count(str(i)), n) for i in ALPHABET)  # type: ignore[return-value]
