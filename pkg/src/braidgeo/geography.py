"""Geography of exact fillings of cyclic branched covers of braid closures.

Everything here is integer arithmetic on five numbers attached to a closed
braid: the cover order r, the strand count n, the band count m, and the
Levine-Tristram sums S = sum sigma_L(zeta^k) and H = sum eta_L(zeta^k) over
k = 1..r-1.  The quantity X = (r-1)(1-n+m) is b2 - b1 of the branched cover
of the 4-ball over the Bennequin surface.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from .braids import BraidWord
from .seifert import bennequin_seifert
from .signatures import lt_sums


class GeographyError(ValueError):
    pass


class GateError(GeographyError):
    """A prediction was requested although the gate inequalities fail."""


def surface_excess(r: int, n: int, m: int) -> int:
    """X = (r-1)(1-n+m)."""
    return (r - 1) * (1 - n + m)


@dataclass(frozen=True)
class GateReport:
    r: int
    n: int
    m: int
    sigma_sum: int  # S
    eta_sum: int  # H
    x: int  # X = (r-1)(1-n+m)

    @property
    def t11_a(self) -> int:
        return self.x + 2 * self.eta_sum + self.sigma_sum  # threshold 3

    @property
    def t11_b(self) -> int:
        return self.x + 2 * self.eta_sum - self.sigma_sum  # threshold 25

    @property
    def t12_a(self) -> int:
        return self.x + self.sigma_sum  # threshold 2

    @property
    def t12_b(self) -> int:
        return self.x  # threshold 15

    @property
    def eta_zero(self) -> bool:
        return self.eta_sum == 0

    @property
    def t11_ok(self) -> bool:
        return self.t11_a <= 3 and self.t11_b <= 25

    @property
    def t12_ok(self) -> bool:
        return self.eta_zero and self.t12_a <= 2 and self.t12_b <= 15


def gates(r: int, n: int, m: int, sigma_sum: int, eta_sum: int) -> GateReport:
    if r < 1:
        raise GeographyError(f"cover order must be positive, got {r}")
    return GateReport(r, n, m, sigma_sum, eta_sum, surface_excess(r, n, m))


CAVEAT_NEGDEF = "negative definite alternative"


@dataclass(frozen=True)
class FillingPrediction:
    spin: bool
    chi: int
    sigma: int
    b1_low: int
    b1_high: int
    caveat: str | None = None


def euler_characteristic(r: int, n: int, m: int) -> int:
    """chi of any exact filling: r - (r-1)(n-m)."""
    return r - (r - 1) * (n - m)


def predict(
    r: int,
    n: int,
    m: int,
    sigma_sum: int,
    eta_sum: int,
    theorem: str = "T12",
) -> FillingPrediction:
    """Constraints on an exact filling of the r-fold branched cover.

    ``theorem`` selects which gate applies: "T12" needs vanishing nullity
    sum and pins b1 = 0; "T11" only bounds b1 by the nullity sum.  When the
    T12 gate fails by exactly X + S = 4 the cap loses one positive
    eigenvalue and the conclusion weakens to "... or the filling is
    negative definite"; this is reported as a caveat, never dropped.
    """
    chi = euler_characteristic(r, n, m)
    if r == 1:
        return FillingPrediction(True, 1, 0, 0, 0)
    g = gates(r, n, m, sigma_sum, eta_sum)
    if theorem == "T11":
        if not g.t11_ok:
            raise GateError(
                f"t11 gate fails: {g.t11_a} <= 3 and {g.t11_b} <= 25 required"
            )
        return FillingPrediction(True, chi, sigma_sum, 0, eta_sum)
    if theorem != "T12":
        raise GeographyError(f"unknown theorem selector {theorem!r}")
    if not g.eta_zero:
        raise GateError("T12 applies only when the nullity sum vanishes")
    if g.t12_ok:
        return FillingPrediction(True, chi, sigma_sum, 0, 0)
    if g.t12_b <= 15 and g.t12_a == 4:
        # the cap only has b2+ = 1; a negative definite filling sneaks by
        return FillingPrediction(True, chi, sigma_sum, 0, 0, CAVEAT_NEGDEF)
    raise GateError(
        f"t12 gate fails: {g.t12_a} <= 2 and {g.t12_b} <= 15 required"
    )


@dataclass(frozen=True)
class CapBounds:
    b2_lower: int
    b2plus_lower: int
    b2minus_lower: int


def cap_bounds(r: int, n: int, m: int, sigma_sum: int, eta_sum: int) -> CapBounds:
    """Betti-number lower bounds for the Calabi-Yau cap complementary to
    the branched cover of the 4-ball inside the K3 surface."""
    x = surface_excess(r, n, m)
    h, s = eta_sum, sigma_sum
    return CapBounds(
        22 - x - h,
        -((x + 2 * h + s - 6) // 2),  # ceil((6 - x - 2h - s)/2)
        -((x + 2 * h - s - 38) // 2),  # ceil((38 - x - 2h + s)/2)
    )


class BettiError(GeographyError):
    pass


def betti_resolution(
    chi: int, sigma: int, b1: int, assume_b2zero_0: bool = True
) -> tuple[int, int, int]:
    """Split b2 = chi - 1 + b1 into (b2+, b2-, b20), assuming b0 = 1 and
    b3 = 0.  With b2_0 = 0 the split is forced by the signature."""
    if not assume_b2zero_0:
        raise BettiError("only the b2_0 = 0 resolution is implemented")
    b2 = chi - 1 + b1
    if b1 < 0 or b2 < abs(sigma):
        raise BettiError(f"inconsistent Betti data: b1={b1}, b2={b2}, sigma={sigma}")
    if (b2 + sigma) % 2:
        raise BettiError(f"parity mismatch: b2={b2}, sigma={sigma}")
    return (b2 + sigma) // 2, (b2 - sigma) // 2, 0


# -- whole-theorem reproduction ------------------------------------------------

#: theorem id -> (cover order, gate selector)
THEOREM_TABLE = {
    "1.3": (2, "T12"),
    "1.4": (3, "T12"),
    "1.5": (4, "T12"),
    "1.6": (2, "T11"),
    "1.7": (3, "T11"),
    "1.8": (4, "T11"),
}


@dataclass(frozen=True)
class TableRow:
    name: str
    r: int
    n: int
    m: int
    sigma_sum: int
    eta_sum: int
    gate_t11: bool
    gate_t12: bool
    chi: int
    sigma: int
    b1: str  # "0" or "0..H"
    b2plus: int | None
    b2minus: int | None
    caveat: bool
    match: bool
    detail: str = ""


def _check_row(entry, r: int, mode: str, expect) -> TableRow:
    word: BraidWord = entry.word
    n, m = word.strands, word.exponent_sum()
    s, h = lt_sums(bennequin_seifert(word), r)
    g = gates(r, n, m, s, h)
    problems = []
    try:
        pred = predict(r, n, m, s, h, mode)
    except GateError as exc:
        return TableRow(
            entry.name, r, n, m, s, h, g.t11_ok, g.t12_ok,
            euler_characteristic(r, n, m), s, "?", None, None, False,
            False, str(exc),
        )
    if pred.chi != expect.chi:
        problems.append(f"chi {pred.chi} != {expect.chi}")
    if pred.sigma != expect.sigma:
        problems.append(f"sigma {pred.sigma} != {expect.sigma}")
    caveat = pred.caveat is not None
    if caveat != (expect.caveat is not None):
        problems.append(f"caveat {pred.caveat!r} vs {expect.caveat!r}")
    b2p = b2m = None
    if expect.b1 is not None:
        if not pred.b1_low <= expect.b1 <= pred.b1_high:
            problems.append(
                f"b1 {expect.b1} outside [{pred.b1_low}, {pred.b1_high}]"
            )
        else:
            try:
                b2p, b2m, b2z = betti_resolution(pred.chi, pred.sigma, expect.b1)
            except BettiError as exc:
                problems.append(str(exc))
            else:
                for got, want, tag in (
                    (b2p, expect.b2plus, "b2+"),
                    (b2m, expect.b2minus, "b2-"),
                    (b2z, expect.b2zero, "b2_0"),
                ):
                    if want is not None and got != want:
                        problems.append(f"{tag} {got} != {want}")
    b1_text = "0" if pred.b1_high == 0 else f"0..{pred.b1_high}"
    return TableRow(
        entry.name, r, n, m, s, h, g.t11_ok, g.t12_ok, pred.chi, pred.sigma,
        b1_text, b2p, b2m, caveat, not problems, "; ".join(problems),
    )


def reproduce_table(theorem: str, entries, jobs: int = 1) -> list[TableRow]:
    """One row per catalog entry the theorem lists, each recomputed from
    the braid word alone and compared with the stored expectation.  Rows
    come back sorted by name regardless of ``jobs``."""
    if theorem not in THEOREM_TABLE:
        raise GeographyError(f"unknown theorem id {theorem!r}")
    r, mode = THEOREM_TABLE[theorem]
    listed = [e for e in entries if theorem in e.expected]
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(
                lambda e: _check_row(e, r, mode, e.expected[theorem]), listed
            ))
    else:
        rows = [_check_row(e, r, mode, e.expected[theorem]) for e in listed]
    rows.sort(key=lambda row: row.name)
    return rows


CSV_COLUMNS = (
    "name,r,n,m,sigma_sum,eta_sum,gateT11,gateT12,chi,sigma,b1,b2plus,"
    "b2minus,caveat,match"
)


def rows_to_csv(rows) -> str:
    out = io.StringIO()
    print(CSV_COLUMNS, file=out)
    for row in rows:
        print(
            f"{row.name},{row.r},{row.n},{row.m},{row.sigma_sum},"
            f"{row.eta_sum},{int(row.gate_t11)},{int(row.gate_t12)},"
            f"{row.chi},{row.sigma},{row.b1},"
            f"{'' if row.b2plus is None else row.b2plus},"
            f"{'' if row.b2minus is None else row.b2minus},"
            f"{int(row.caveat)},{int(row.match)}",
            file=out,
        )
    return out.getvalue()


def rows_to_text(rows) -> str:
    header = ("name", "r", "S", "H", "chi", "sigma", "b1", "caveat", "match")
    cells = [header]
    for row in rows:
        cells.append((
            row.name, str(row.r), str(row.sigma_sum), str(row.eta_sum),
            str(row.chi), str(row.sigma), row.b1,
            "negdef" if row.caveat else "",
            "ok" if row.match else f"MISMATCH ({row.detail})",
        ))
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    return "\n".join(
        "  ".join(c[i].ljust(widths[i]) for i in range(len(header))).rstrip()
        for c in cells
    )
