"""The difference graph on integer triples.

An edge (i, delta) replaces coordinate i of a triple by the coordinate sum
plus delta, with delta in {-2,...,2}.  Every integer triple is reachable from
the origin; `accessibility_path` constructs an explicit edge path, built from
anchor paths to (a,-a,-a), unit ramps, and a two-letter descent.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .words import AR_MATRIX, Vec, row_times_mat

Edge = Tuple[int, int]
Path = List[Edge]

ORIGIN: Vec = (0, 0, 0)

DELTAS = (-2, -1, 0, 1, 2)


def check_edge(e: Edge) -> Edge:
    i, delta = e
    if i not in (1, 2, 3):
        raise ValueError(f"edge index must be 1, 2 or 3, got {i!r}")
    if delta not in DELTAS:
        raise ValueError(f"edge offset must lie in {DELTAS}, got {delta!r}")
    return e


def apply_edge(x: Sequence[int], e: Edge) -> Vec:
    """Replace coordinate e[0] of x by x1+x2+x3+e[1]; other coordinates keep."""
    i, delta = check_edge(e)
    s = x[0] + x[1] + x[2] + delta
    y = list(x)
    y[i - 1] = s
    return tuple(y)  # type: ignore[return-value]


def simulate(path: Sequence[Edge], start: Vec = ORIGIN) -> Vec:
    """Left fold of apply_edge from the origin (or a given start)."""
    x = start
    for e in path:
        x = apply_edge(x, e)
    return x


def trace(path: Sequence[Edge], start: Vec = ORIGIN) -> List[Vec]:
    """All intermediate triples visited by a path, start included."""
    out = [start]
    for e in path:
        out.append(apply_edge(out[-1], e))
    return out


@dataclass(frozen=True)
class SymmetryTransform:
    """Relabel edge indices by a permutation and optionally negate offsets.

    perm is given as a tuple (s(1), s(2), s(3)).  Transforming a path this
    way permutes and optionally negates its endpoint: if the original path
    reaches x, the transformed path reaches y with y[s(i)] = +-x[i].
    """

    negate: bool = False
    perm: Tuple[int, int, int] = (1, 2, 3)

    def __post_init__(self):
        if sorted(self.perm) != [1, 2, 3]:
            raise ValueError(f"perm must be a permutation of (1,2,3), got {self.perm!r}")

    def on_edge(self, e: Edge) -> Edge:
        i, delta = e
        return (self.perm[i - 1], -delta if self.negate else delta)

    def on_value(self, x: Sequence[int]) -> Vec:
        y = [0, 0, 0]
        for i in (1, 2, 3):
            y[self.perm[i - 1] - 1] = -x[i - 1] if self.negate else x[i - 1]
        return tuple(y)  # type: ignore[return-value]

    def inverse(self) -> "SymmetryTransform":
        inv = [0, 0, 0]
        for i in (1, 2, 3):
            inv[self.perm[i - 1] - 1] = i
        return SymmetryTransform(self.negate, tuple(inv))  # type: ignore[arg-type]


NEGATE = SymmetryTransform(negate=True)
SWAP12 = SymmetryTransform(perm=(2, 1, 3))


def transform_path(path: Sequence[Edge], t: SymmetryTransform) -> Path:
    """Edge-wise relabeling; simulate(result) == t.on_value(simulate(path))."""
    return [t.on_edge(e) for e in path]


def anchor_path(a: int) -> Path:
    """A path from the origin to (a,-a,-a).

    Unfolds the recurrence "prepend stage paths, flip by negate+swap(1,2)":
    stage k contributes the block (2,-1), (3,2)x(2k+1), (1,1), transformed
    once per remaining stage.  Length obeys L(0)=0, L(a+1)=L(a)+2a+3.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    path: Path = []
    for k in range(a):
        if (a - k) % 2 == 1:
            path += [(1, 1)] + [(3, -2)] * (2 * k + 1) + [(2, -1)]
        else:
            path += [(2, -1)] + [(3, 2)] * (2 * k + 1) + [(1, 1)]
    return path


def _normalization(target: Vec) -> SymmetryTransform:
    """Transform moving a maximum-absolute coordinate first, made positive.

    Ties pick the lowest index; the permutation is the plain swap (1 j).
    """
    best = max(abs(t) for t in target)
    j = next(k for k in range(3) if abs(target[k]) == best)
    perm = [1, 2, 3]
    perm[0], perm[j] = perm[j], perm[0]
    t = SymmetryTransform(perm=tuple(perm))  # type: ignore[arg-type]
    moved = t.on_value(target)
    return SymmetryTransform(negate=moved[0] < 0, perm=t.perm)


def accessibility_path(target: Sequence[int]) -> Path:
    """An explicit edge path from the origin to any integer triple.

    Normalize so the first coordinate a is the largest absolute value and
    positive; walk the target down to a ramp-reachable form (a,b,-a),
    (a,-a,c) or (a,c,c) with offset-0 inverse edges; emit the anchor path,
    the unit ramp, and the recorded descent reversed; finally map the whole
    path back through the normalization.
    """
    target = tuple(target)
    if target == ORIGIN:
        return []
    norm = _normalization(target)
    a, b, c = norm.on_value(target)

    descent: Path = []
    guard = 10 * a * a + 100
    while b != c and b != -a and c != -a:
        guard -= 1
        if guard <= 0:
            raise AssertionError(f"descent failed to terminate for target {target!r}")
        if b > c:
            descent.append((2, 0))
            b = b - a - c
        else:
            descent.append((3, 0))
            c = c - a - b

    if c == -a:
        path = anchor_path(a) + [(2, 1)] * (a + b)
    elif b == -a:
        path = anchor_path(a) + [(3, 1)] * (a + c)
    else:  # b == c, reached through (a,-a,c)
        path = anchor_path(a) + [(3, 1)] * (a + c) + [(2, 0)]
    path += reversed(descent)

    # norm maps target to the point this path reaches; undo it.
    out = transform_path(path, norm.inverse())
    if simulate(out) != target:
        raise AssertionError(f"accessibility construction broke for target {target!r}")
    return out


def edge_matrix_consistent(x: Sequence[int], i: int) -> bool:
    """apply_edge(x, (i,0)) equals the row action x * M_i."""
    return apply_edge(x, (i, 0)) == row_times_mat(x, AR_MATRIX[i])


def path_to_json(path: Sequence[Edge]) -> List[List[int]]:
    return [[i, delta] for (i, delta) in path]


def path_from_json(data: Sequence[Sequence[int]]) -> Path:
    return [check_edge((int(i), int(delta))) for (i, delta) in data]
