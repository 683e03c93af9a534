"""Finite words over {1,2,3}, abelianization, substitutions, incidence matrices.

Words are plain strings over the characters '1', '2', '3'.  All counts and
matrix entries are Python integers, so nothing ever overflows silently.
Every function here is pure; values are immutable.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

ALPHABET = (1, 2, 3)

Vec = Tuple[int, int, int]
Mat = Tuple[Vec, Vec, Vec]

IDENTITY: Mat = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def check_letter(i: int) -> int:
    if i not in (1, 2, 3):
        raise ValueError(f"letter must be 1, 2 or 3, got {i!r}")
    return i


def check_word(u: str) -> str:
    if u.strip("123") != "":
        raise ValueError(f"word may only contain '1','2','3': {u!r}")
    return u


def abelianize(u: str) -> Vec:
    """Letter-occurrence counts (n1, n2, n3) of a word; sums to len(u)."""
    return (u.count("1"), u.count("2"), u.count("3"))


class Substitution:
    """A nonerasing map letter -> word, extended to words by concatenation."""

    __slots__ = ("images", "_table")

    def __init__(self, image1: str, image2: str, image3: str):
        self.images = (check_word(image1), check_word(image2), check_word(image3))
        if any(len(im) == 0 for im in self.images):
            raise ValueError("substitution must be nonerasing")
        # str.translate maps one character to a whole image string in C.
        self._table = str.maketrans({"1": image1, "2": image2, "3": image3})

    def __call__(self, u: str) -> str:
        return u.translate(self._table)

    def image(self, i: int) -> str:
        return self.images[check_letter(i) - 1]

    def incidence(self) -> Mat:
        return tuple(abelianize(im) for im in self.images)  # type: ignore[return-value]

    def __repr__(self) -> str:
        return f"Substitution({self.images[0]!r}, {self.images[1]!r}, {self.images[2]!r})"


# The three Arnoux-Rauzy substitutions: i -> i, j -> ij for j != i.
SIGMA = {
    1: Substitution("1", "12", "13"),
    2: Substitution("21", "2", "23"),
    3: Substitution("31", "32", "3"),
}

AR_MATRIX = {i: SIGMA[i].incidence() for i in ALPHABET}


def abelianize(u: str) -> Vec:
    """Letter-occurrence counts (n1, n2, n3) of a word; sums to len(u)."""
    return (u.count("1"), u.count("2"), u.count("3"))


def apply_substitution(s: Substitution, u: str) -> str:
    """Image of u under s, letter images concatenated in order."""
    return s(check_word(u))


def apply_directive_word(directive: Sequence[int], u: str) -> str:
    """s_0 o s_1 o ... o s_{n-1} applied to u, for directive (s_0,...,s_{n-1})."""
    for i in reversed(directive):
        u = SIGMA[check_letter(i)](u)
    return u


def mat_mul(a: Mat, b: Mat) -> Mat:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )  # type: ignore[return-value]


def row_times_mat(v: Sequence[int], m: Mat) -> Vec:
    """Row-vector action v -> v * m."""
    return tuple(sum(v[k] * m[k][j] for k in range(3)) for j in range(3))  # type: ignore[return-value]


def mat_times_col(m: Mat, v: Sequence[int]) -> Vec:
    """Column-vector action v -> m * v (used by the spread machinery)."""
    return tuple(sum(m[i][k] * v[k] for k in range(3)) for i in range(3))  # type: ignore[return-value]


def mat_det(m: Mat) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def mat_inverse_unimodular(m: Mat) -> Mat:
    """Exact integer inverse of a determinant-1 matrix (the adjugate)."""
    d = mat_det(m)
    if d != 1:
        raise ValueError(f"matrix has determinant {d}, expected 1")
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
            cof[j][i] = (-1) ** (i + j) * minor
    return tuple(tuple(row) for row in cof)  # type: ignore[return-value]


def incidence_of(directive: Iterable[int]) -> Mat:
    """Incidence matrix M of the composition s_0 o ... o s_{n-1}.

    Satisfies abelianize(apply_directive_word(d, u)) == abelianize(u) * M,
    i.e. M = M_{s_{n-1}} * ... * M_{s_0} under the row-vector action.
    """
    m = IDENTITY
    for i in directive:
        m = mat_mul(AR_MATRIX[check_letter(i)], m)
    return m


def directive_word_length(directive: Sequence[int], seed: str = "1") -> int:
    """len(apply_directive_word(directive, seed)) without materializing it."""
    return sum(row_times_mat(abelianize(seed), incidence_of(directive)))


def find_factor(u: str, host: str) -> Optional[List[int]]:
    """All starting indices of u in host, or None when u never occurs.

    The empty word occurs at every position 0..len(host).
    """
    check_word(u)
    check_word(host)
    if u == "":
        return list(range(len(host) + 1))
    positions = []
    start = host.find(u)
    while start != -1:
        positions.append(start)
        start = host.find(u, start + 1)
    return positions or None
