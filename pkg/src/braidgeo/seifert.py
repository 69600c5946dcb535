"""Seifert matrices of braid closures via the Bennequin surface.

The Bennequin surface of a braid word on ``n`` strands consists of ``n``
parallel disks joined by one band per letter (a positively or negatively
half-twisted band between disks ``i`` and ``i+1`` for ``sigma_i^{+-1}``).
Its first homology is generated by one cycle per pair of consecutive bands
in the same column; the Seifert pairing of these cycles is local, so the
matrix can be read off the word:

* a cycle through bands with signs ``(e1, e2)`` has self-pairing
  ``-(e1 + e2) / 2``;
* consecutive cycles in one column share a band of sign ``e`` and pair as
  ``(e+1)/2`` one way and ``(e-1)/2`` the other;
* cycles in adjacent columns pair as ``+-1``/``0`` exactly when their
  letter intervals interleave, independently of the band signs (the
  linking there comes from arcs crossing on the shared disk, away from any
  band);
* all other pairs are unlinked.

The orientation conventions are pinned down by the classical anchor values
(the right-handed trefoil ``sigma_1^3`` has signature -2, positive torus
words are negative definite at ``omega = -1``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidError, BraidWord

# Pairing of consecutive cycles x (lower) and y (upper) in one column
# sharing a band of sign e: (V[x][y], V[y][x]).
_SAME_COLUMN = {
    1: (1, 0),
    -1: (0, -1),
}
# Pairing of interleaved cycles x (column i, interval starting first) and
# y (column i+1): (V[x][y], V[y][x]); the mirrored interleaving transposes.
_CROSS_COLUMN_X_FIRST = (0, -1)
_CROSS_COLUMN_Y_FIRST = (0, 1)


@dataclass(frozen=True)
class SeifertData:
    """An integer Seifert matrix together with the number of connected
    components of the underlying Seifert surface."""

    matrix: tuple[tuple[int, ...], ...]
    b0: int

    @property
    def genus_rank(self) -> int:
        return len(self.matrix)

    def mirror(self) -> "SeifertData":
        """Seifert data of the mirror link: ``A -> -A^T``."""
        g = len(self.matrix)
        return SeifertData(
            tuple(
                tuple(-self.matrix[j][i] for j in range(g)) for i in range(g)
            ),
            self.b0,
        )


def bennequin_seifert(word: BraidWord) -> SeifertData:
    """Seifert data of the Bennequin surface of ``word``'s closure."""
    n = word.strands
    columns: dict[int, list[tuple[int, int]]] = {}
    for pos, v in enumerate(word.letters):
        columns.setdefault(abs(v), []).append((pos, 1 if v > 0 else -1))

    # cycles: (column, start position, start sign, end position, end sign)
    cycles: list[tuple[int, int, int, int, int]] = []
    for col in sorted(columns):
        hits = columns[col]
        for (p1, s1), (p2, s2) in zip(hits, hits[1:]):
            cycles.append((col, p1, s1, p2, s2))

    g = len(cycles)
    m = [[0] * g for _ in range(g)]
    for x, (cx, ax, sa, bx, sb) in enumerate(cycles):
        m[x][x] = -(sa + sb) // 2
        for y in range(x + 1, g):
            cy, ay, _, by, _ = cycles[y]
            if cy == cx:
                if ay == bx:  # consecutive, sharing the band at bx
                    m[x][y], m[y][x] = _SAME_COLUMN[sb]
            elif cy == cx + 1:
                if ax < ay < bx < by:
                    m[x][y], m[y][x] = _CROSS_COLUMN_X_FIRST
                elif ay < ax < by < bx:
                    m[x][y], m[y][x] = _CROSS_COLUMN_Y_FIRST

    # components of the surface: disks joined whenever a column is used
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for col in columns:
        ra, rb = find(col - 1), find(col)
        if ra != rb:
            parent[ra] = rb
    b0 = len({find(i) for i in range(n)})
    return SeifertData(tuple(tuple(row) for row in m), b0)


def parse_seifert(text: str) -> SeifertData:
    """Parse the text format: first line ``g b0``, then ``g`` rows of ``g``
    integers."""
    lines = [
        ln for ln in (raw.split("#", 1)[0].strip() for raw in text.splitlines()) if ln
    ]
    if not lines:
        raise BraidError("empty Seifert matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise BraidError("first line must be 'g b0'")
    g, b0 = int(head[0]), int(head[1])
    if b0 < 1 or g < 0:
        raise BraidError(f"bad Seifert header g={g} b0={b0}")
    if len(lines) != g + 1:
        raise BraidError(f"expected {g} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = tuple(int(t) for t in ln.split())
        if len(row) != g:
            raise BraidError(f"matrix row has {len(row)} entries, expected {g}")
        rows.append(row)
    return SeifertData(tuple(rows), b0)


def format_seifert(data: SeifertData) -> str:
    lines = [f"{data.genus_rank} {data.b0}"]
    for row in data.matrix:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
