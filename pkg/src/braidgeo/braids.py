"""Braid words, the word problem, and closure bookkeeping.

A braid word on ``n`` strands is a finite sequence of Artin generators
``sigma_1 .. sigma_{n-1}`` and their inverses, stored as signed integers
(``+i`` for ``sigma_i``, ``-i`` for its inverse).  Words are read left to
right; the letter ``sigma_i`` crosses strand ``i`` over strand ``i+1``.

Equality in the braid group is decided through the Garside left normal
form: every braid is written uniquely as ``Delta^p . f_1 ... f_k`` where
``Delta`` is the positive half twist, each ``f_j`` is a permutation braid
(a positive braid in which any two strands cross at most once) that is
neither trivial nor ``Delta``, and each consecutive pair is left-weighted.
Two words are equal in the group iff these normal forms coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple


class BraidError(ValueError):
    """Base class for malformed braid data."""


class ParseError(BraidError):
    """Raised when a braid-word string cannot be parsed; carries the
    1-based token position in ``token_index``."""

    def __init__(self, message: str, token_index: int):
        super().__init__(f"token {token_index}: {message}")
        self.token_index = token_index


class StrandMismatchError(BraidError):
    """Raised when an operation mixes words on different strand counts."""


class BraidLetter(NamedTuple):
    """One Artin generator occurrence: ``index >= 1`` and ``sign = +-1``."""

    index: int
    sign: int

    @classmethod
    def from_signed(cls, value: int) -> "BraidLetter":
        if value == 0:
            raise BraidError("letter value 0 is not a generator")
        return cls(abs(value), 1 if value > 0 else -1)

    @property
    def signed(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    """An immutable braid word.

    ``letters`` holds signed generator indices; ``strands`` is fixed at
    construction so that stabilisation/destabilisation are explicit
    operations rather than implicit re-interpretations.
    """

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise BraidError(f"strand count must be >= 1, got {self.strands}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for k, v in enumerate(self.letters):
            if not isinstance(v, int) or v == 0 or abs(v) >= self.strands:
                raise BraidError(
                    f"letter {k + 1} is {v!r}; expected a nonzero integer "
                    f"with |value| < {self.strands}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.letters) or "<empty>"

    # -- group operations --------------------------------------------------

    def concat(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise StrandMismatchError(
                f"cannot concatenate words on {self.strands} and {other.strands} strands"
            )
        return BraidWord(self.strands, self.letters + other.letters)

    __mul__ = concat

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-v for v in reversed(self.letters)))

    def rotated(self, k: int) -> "BraidWord":
        """Cyclic shift: move ``k`` letters from the tail to the head
        (negative ``k`` moves letters from the head to the tail).  The
        result is conjugate to ``self``, so the closures agree."""
        if not self.letters:
            return self
        k %= len(self.letters)
        if k == 0:
            return self
        return BraidWord(self.strands, self.letters[-k:] + self.letters[:-k])

    def free_reduced(self) -> "BraidWord":
        """Cancel adjacent inverse pairs until none remain."""
        out: list[int] = []
        for v in self.letters:
            if out and out[-1] == -v:
                out.pop()
            else:
                out.append(v)
        return BraidWord(self.strands, tuple(out))

    def exponent_sum(self) -> int:
        return sum(1 if v > 0 else -1 for v in self.letters)

    def generator_indices(self) -> set[int]:
        return {abs(v) for v in self.letters}

    def is_positive(self) -> bool:
        return all(v > 0 for v in self.letters)

    def shifted(self, offset: int) -> "BraidWord":
        """Re-index every letter by ``offset`` and adjust the strand count
        accordingly (used by bottom stabilisation/destabilisation)."""
        return BraidWord(
            self.strands + offset,
            tuple(v + offset if v > 0 else v - offset for v in self.letters),
        )


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    return u.concat(v)


def invert(u: BraidWord) -> BraidWord:
    return u.inverse()


def conjugate_by(c: BraidWord, u: BraidWord) -> BraidWord:
    """Return ``c u c^{-1}``."""
    return c.concat(u).concat(c.inverse())


def rotate(u: BraidWord, k: int) -> BraidWord:
    return u.rotated(k)


def free_reduce(u: BraidWord) -> BraidWord:
    return u.free_reduced()


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse a whitespace-separated list of signed generator indices.

    Raises :class:`ParseError` naming the offending 1-based token."""
    letters: list[int] = []
    for k, tok in enumerate(text.split(), start=1):
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"{tok!r} is not an integer", k) from None
        if v == 0:
            raise ParseError("0 is not a generator index", k)
        if abs(v) >= strands:
            raise ParseError(
                f"generator index {abs(v)} needs at least {abs(v) + 1} strands, "
                f"word declares {strands}",
                k,
            )
        letters.append(v)
    return BraidWord(strands, tuple(letters))


def torus_braid(p: int, q: int) -> BraidWord:
    """The standard ``(p, q)`` torus word ``(sigma_1 ... sigma_{p-1})^q``
    on ``p`` strands, whose closure is the torus link ``T(p, q)``."""
    if p < 2:
        raise BraidError(f"torus words need p >= 2, got p={p}")
    if q < 1:
        raise BraidError(f"torus words need q >= 1, got q={q}")
    return BraidWord(p, tuple(range(1, p)) * q)


# -- permutation helpers ---------------------------------------------------
#
# Permutations on {0, .., n-1} are tuples with perm[i] = image of i.
# compose(f, g) applies f first, matching the left-to-right reading of
# braid words: perm(uv) = compose(perm(u), perm(v)).


def _identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _gen_perm(n: int, i: int) -> tuple[int, ...]:
    # transposition of positions i, i+1 (0-based)
    p = list(range(n))
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def _compose(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(g[f[i]] for i in range(len(f)))


def _inverse_perm(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _half_twist(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _tau(p: tuple[int, ...], w0: tuple[int, ...]) -> tuple[int, ...]:
    # conjugation by Delta; w0 is an involution, so tau is its own inverse
    return _compose(_compose(w0, p), w0)


def _descents(p: tuple[int, ...]) -> list[int]:
    # i in the starting set of the permutation braid of p  <=>  p[i] > p[i+1]
    return [i for i in range(len(p) - 1) if p[i] > p[i + 1]]


def _left_weight_pair(
    a: tuple[int, ...], b: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Slide generators from the head of ``b`` into the tail of ``a`` until
    the permutation-braid pair (a, b) is left-weighted (starting set of b
    contained in the finishing set of a).  The product a.b is preserved."""
    while True:
        inv_a = _inverse_perm(a)
        moved = False
        for i in _descents(b):
            if inv_a[i] < inv_a[i + 1]:  # i not in the finishing set of a
                la, lb = list(a), list(b)
                # a <- a . s_i swaps the values i, i+1; b <- s_i . b swaps
                # the entries at positions i, i+1
                la[inv_a[i]], la[inv_a[i + 1]] = i + 1, i
                lb[i], lb[i + 1] = lb[i + 1], lb[i]
                a, b = tuple(la), tuple(lb)
                moved = True
                break
        if not moved:
            return a, b


@dataclass(frozen=True)
class GarsideNormalForm:
    """Left normal form ``Delta^delta_power . factors`` of a braid word.

    ``factors`` holds the permutations of the canonical factors, each a
    nontrivial permutation braid distinct from the half twist."""

    strands: int
    delta_power: int
    factors: tuple[tuple[int, ...], ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_trivial(self) -> bool:
        return self.delta_power == 0 and not self.factors


@lru_cache(maxsize=200_000)
def _normal_form(strands: int, letters: tuple[int, ...]) -> GarsideNormalForm:
    n = strands
    if n == 1:
        return GarsideNormalForm(1, 0, ())
    w0 = _half_twist(n)
    ident = _identity(n)
    power = 0
    factors: list[tuple[int, ...]] = []
    for v in letters:
        i = abs(v) - 1
        if v > 0:
            factors.append(_gen_perm(n, i))
        else:
            # sigma_i^{-1} = Delta^{-1} . (Delta sigma_i^{-1}); pushing the
            # Delta^{-1} to the front conjugates the accumulated factors
            power -= 1
            factors = [_tau(f, w0) for f in factors]
            factors.append(_compose(w0, _gen_perm(n, i)))
    factors = [f for f in factors if f != ident]
    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1):
            a, b = _left_weight_pair(factors[k], factors[k + 1])
            if (a, b) != (factors[k], factors[k + 1]):
                factors[k], factors[k + 1] = a, b
                changed = True
        if changed:
            factors = [f for f in factors if f != ident]
    while factors and factors[0] == w0:
        power += 1
        factors.pop(0)
    return GarsideNormalForm(n, power, tuple(factors))


def left_normal_form(u: BraidWord) -> GarsideNormalForm:
    return _normal_form(u.strands, u.letters)


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    """Decide equality in the braid group on a fixed strand count."""
    if u.strands != v.strands:
        raise StrandMismatchError(
            f"cannot compare words on {u.strands} and {v.strands} strands"
        )
    return left_normal_form(u) == left_normal_form(v)


def conjugate_by_rotation(u: BraidWord, v: BraidWord) -> int | None:
    """Return some ``k`` with ``rotate(u, k) == v`` in the group, or ``None``."""
    if u.strands != v.strands:
        raise StrandMismatchError(
            f"cannot compare words on {u.strands} and {v.strands} strands"
        )
    for k in range(max(1, len(u))):
        if words_equal(u.rotated(k), v):
            return k
    return None


# -- closure bookkeeping ---------------------------------------------------


@dataclass(frozen=True)
class ClosureStats:
    """Combinatorics of the closed braid and its band surface.

    ``band_count`` is the number of bands of a band presentation carried by
    the word (for a positive word, one band per letter).  The Euler
    characteristic of the band surface is ``strands - band_count`` and the
    self-linking number of the closure is ``exponent_sum - strands``."""

    strands: int
    exponent_sum: int
    band_count: int

    @property
    def self_linking(self) -> int:
        return self.exponent_sum - self.strands

    @property
    def band_euler_characteristic(self) -> int:
        return self.strands - self.band_count


def closure_stats(
    u: BraidWord,
    band_count: int | None = None,
    quasipositive: bool = False,
) -> ClosureStats:
    """Closure statistics of ``u``.

    For a positive word the band count defaults to the letter count.  A
    word with inverse letters only carries a band surface when it is a
    product of conjugated generators; the caller must assert that by
    passing ``quasipositive=True`` (the band count then defaults to the
    exponent sum) or supply ``band_count`` explicitly."""
    e = u.exponent_sum()
    if band_count is None:
        if u.is_positive():
            band_count = len(u)
        elif quasipositive:
            band_count = e
        else:
            raise BraidError(
                "word has inverse letters; pass band_count or quasipositive=True"
            )
    return ClosureStats(u.strands, e, band_count)


def permutation_of(u: BraidWord) -> tuple[int, ...]:
    """Underlying permutation of the word (0-based images)."""
    p = _identity(u.strands)
    for v in u.letters:
        p = _compose(p, _gen_perm(u.strands, abs(v) - 1))
    return p


def closure_components(u: BraidWord) -> int:
    """Number of components of the closed braid (cycles of the permutation)."""
    p = permutation_of(u)
    seen = [False] * u.strands
    cycles = 0
    for i in range(u.strands):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return cycles


def format_normal_form(nf: GarsideNormalForm) -> str:
    """Human-readable rendering, e.g. ``D^-1 . [2 1 3] [1 3 2]`` with
    permutations shown as 1-based image rows."""
    parts = [f"D^{nf.delta_power}"]
    for f in nf.factors:
        parts.append("[" + " ".join(str(i + 1) for i in f) + "]")
    return " . ".join(parts)
