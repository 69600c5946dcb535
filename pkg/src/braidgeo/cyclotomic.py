"""Exact arithmetic in the cyclotomic fields Q(zeta_r) for r in {2, 3, 4}.

For these orders the field is at most a quadratic extension of Q, so every
element is ``a + b*zeta`` with rational ``a, b`` and multiplication closes
via ``zeta^2 = -1 - zeta`` (r = 3) or ``zeta^2 = -1`` (r = 4); for r = 2
``zeta = -1`` and the field is Q itself.  Elements fixed by complex
conjugation are rational, which is what makes exact sign decisions (and
hence exact signatures) possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

SUPPORTED_ORDERS = (2, 3, 4)


class CyclotomicError(ValueError):
    pass


@dataclass(frozen=True)
class Cyclo:
    """The element ``a + b * zeta_order`` of Q(zeta_order)."""

    order: int
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        if self.order not in SUPPORTED_ORDERS:
            raise CyclotomicError(f"unsupported root-of-unity order {self.order}")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.order == 2 and self.b != 0:
            # zeta_2 = -1 already lies in Q; fold it away
            object.__setattr__(self, "a", self.a - self.b)
            object.__setattr__(self, "b", Fraction(0))

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "Cyclo":
        if isinstance(other, Cyclo):
            if other.order != self.order:
                raise CyclotomicError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, Rational):
            return Cyclo(self.order, Fraction(other), Fraction(0))
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyclo(self.order, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.order, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        cross = a1 * b2 + a2 * b1
        sq = b1 * b2  # coefficient of zeta^2
        if self.order == 2:
            return Cyclo(2, a1 * a2, Fraction(0))
        if self.order == 3:  # zeta^2 = -1 - zeta
            return Cyclo(3, a1 * a2 - sq, cross - sq)
        return Cyclo(4, a1 * a2 - sq, cross)  # zeta^2 = -1

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero cyclotomic element")
        inv = o.conjugate() * Cyclo(self.order, Fraction(1, 1) / n, Fraction(0))
        return self * inv

    # -- structure ---------------------------------------------------------

    def conjugate(self) -> "Cyclo":
        if self.order == 3:
            # conj(zeta) = zeta^2 = -1 - zeta
            return Cyclo(3, self.a - self.b, -self.b)
        if self.order == 4:
            return Cyclo(4, self.a, -self.b)
        return self

    def norm(self) -> Fraction:
        """``self * conj(self)`` as a rational (it always is one)."""
        p = self * self.conjugate()
        assert p.b == 0
        return p.a

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise CyclotomicError(f"{self} is not rational")
        return self.a

    def sign(self) -> int:
        """Sign of a rational element (exact)."""
        v = self.rational_value()
        return (v > 0) - (v < 0)

    def to_complex(self) -> complex:
        if self.order == 2:
            z = -1.0
        elif self.order == 3:
            z = complex(-0.5, 3 ** 0.5 / 2)
        else:
            z = 1j
        return float(self.a) + float(self.b) * z

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*zeta_{self.order}"


def rational(order: int, value) -> Cyclo:
    return Cyclo(order, Fraction(value), Fraction(0))


def zeta(order: int) -> Cyclo:
    if order == 2:
        return Cyclo(2, Fraction(-1), Fraction(0))
    return Cyclo(order, Fraction(0), Fraction(1))


def root_of_unity(order: int, k: int) -> Cyclo:
    """``zeta_order ** k`` for ``0 <= k < order``."""
    if order not in SUPPORTED_ORDERS:
        raise CyclotomicError(f"unsupported root-of-unity order {order}")
    k %= order
    out = rational(order, 1)
    for _ in range(k):
        out = out * zeta(order)
    return out


def hermitian_signature_nullity(matrix: list[list[Cyclo]]) -> tuple[int, int]:
    """Exact signature and nullity of a Hermitian matrix over Q(zeta_r).

    Diagonalises by simultaneous row/column congruence.  When every
    remaining diagonal entry vanishes but some off-diagonal entry ``a`` is
    nonzero, the basis change ``e_j <- e_j + conj(a) e_k`` produces the
    positive diagonal entry ``2|a|^2`` and the elimination continues; the
    iteration therefore terminates with a genuine diagonal matrix.
    """
    size = len(matrix)
    m = [list(row) for row in matrix]
    for i in range(size):
        if len(m[i]) != size:
            raise CyclotomicError("matrix is not square")
        for j in range(size):
            if not (m[i][j] - m[j][i].conjugate()).is_zero():
                raise CyclotomicError(f"matrix is not Hermitian at ({i}, {j})")

    def add_multiple(dst: int, src: int, c: Cyclo) -> None:
        # basis change e_dst <- e_dst + c * e_src for the sesquilinear form
        # H(u, v) = sum conj(u_i) m[i][j] v_j
        cc = c.conjugate()
        for x in range(size):
            m[dst][x] = m[dst][x] + cc * m[src][x]
        for x in range(size):
            m[x][dst] = m[x][dst] + c * m[x][src]

    active = list(range(size))
    pos = neg = 0
    while active:
        piv = next((k for k in active if not m[k][k].is_zero()), None)
        if piv is None:
            pair = next(
                (
                    (j, k)
                    for j in active
                    for k in active
                    if j < k and not m[j][k].is_zero()
                ),
                None,
            )
            if pair is None:
                break  # all that remains is the kernel
            j, k = pair
            add_multiple(j, k, m[j][k].conjugate())
            continue
        d = m[piv][piv].rational_value()
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for x in active:
            if not m[x][piv].is_zero():
                add_multiple(x, piv, -(m[piv][x] / m[piv][piv]))
    nullity = size - pos - neg
    return pos - neg, nullity
