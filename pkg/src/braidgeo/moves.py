"""Certified rewriting chains between braid closures.

A chain starts from a band presentation of a link and applies a sequence of
elementary moves, each of which either preserves the closure (conjugation,
group-level equality, Markov stabilisation/destabilisation) or realises a
cobordism (insertion of positive generators).  Each step records the word
the verifier must reach, so a chain file is a machine-checkable certificate
that the source closure is cobordant to the closure of the target torus
word.

Step kinds
----------
``eq``              the current word equals the expected word in the group
``rot k``           cyclic shift by ``k`` tail letters, then compare
``conj c``          conjugate by the word ``c``, then compare
``insert p1:g1,..`` insert positive generators sequentially (``p`` is the
                    0-based position in the word as built so far)
``destab top|bot``  Markov destabilisation: after free reduction the
                    boundary generator occurs exactly once with the given
                    sign; it is removed (bottom removal re-indexes all
                    letters down by one) and the result must agree with the
                    expected word up to rotation
``stab top|bot``    Markov stabilisation; verified as the inverse of the
                    corresponding destabilisation
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .braids import (
    BraidError,
    BraidWord,
    conjugate_by,
    parse_word,
    torus_braid,
    words_equal,
)


class ChainError(ValueError):
    """Raised for malformed chains or certificate files."""


class StepFailure(ChainError):
    """A step whose claim does not verify; carries the 1-based step index."""

    def __init__(self, index: int, message: str):
        super().__init__(f"step {index}: {message}")
        self.index = index


@dataclass(frozen=True)
class ChainStep:
    op: str  # "eq" | "rot" | "conj" | "insert" | "destab" | "stab"
    expected: BraidWord
    rotation: int = 0
    conjugator: BraidWord | None = None
    insertions: tuple[tuple[int, int], ...] = ()  # (position, generator)
    end: str = "top"  # for (de)stabilisation: "top" | "bot"
    sign: int = 1


@dataclass(frozen=True)
class CobordismChain:
    name: str
    source: BraidWord
    steps: tuple[ChainStep, ...]
    target: tuple[int, int]  # (p, q) torus word
    declared_sl: int | None = None


@dataclass
class VerificationReport:
    name: str
    ok: bool
    steps_checked: int
    insertions: int
    messages: list[str] = field(default_factory=list)


def _match_up_to_rotation(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        return False
    return any(words_equal(u.rotated(k), v) for k in range(max(1, len(u))))


def _destabilised(current: BraidWord, end: str, sign: int, index: int) -> BraidWord:
    w = current.free_reduced()
    if current.strands < 2:
        raise StepFailure(index, "cannot destabilise a 1-strand word")
    g = current.strands - 1 if end == "top" else 1
    hits = [k for k, v in enumerate(w.letters) if abs(v) == g]
    if len(hits) != 1 or (w.letters[hits[0]] > 0) != (sign > 0):
        raise StepFailure(
            index,
            f"{end} destabilisation needs exactly one occurrence of "
            f"generator {g} with sign {sign:+d}; found "
            f"{[w.letters[k] for k in hits]}",
        )
    letters = w.letters[: hits[0]] + w.letters[hits[0] + 1 :]
    out = BraidWord(current.strands, letters)
    if end == "bot":
        return out.shifted(-1)
    return BraidWord(current.strands - 1, letters)


def verify_step(current: BraidWord, step: ChainStep, index: int = 1) -> BraidWord:
    """Check a single step against ``current`` and return the expected word
    as the new current word.  Raises :class:`StepFailure` on any mismatch."""
    exp = step.expected
    if step.op == "eq":
        if current.strands != exp.strands or not words_equal(current, exp):
            raise StepFailure(index, f"'{current}' != '{exp}' in the braid group")
    elif step.op == "rot":
        if current.strands != exp.strands or not words_equal(
            current.rotated(step.rotation), exp
        ):
            raise StepFailure(
                index, f"rotation by {step.rotation} of '{current}' != '{exp}'"
            )
    elif step.op == "conj":
        assert step.conjugator is not None
        got = conjugate_by(step.conjugator, current)
        if current.strands != exp.strands or not words_equal(got, exp):
            raise StepFailure(
                index,
                f"conjugate of '{current}' by '{step.conjugator}' != '{exp}'",
            )
    elif step.op == "insert":
        if not step.insertions:
            raise StepFailure(index, "insert step with no insertions")
        letters = list(current.letters)
        for pos, gen in step.insertions:
            if gen < 1 or gen >= current.strands:
                raise StepFailure(index, f"inserted generator {gen} out of range")
            if not 0 <= pos <= len(letters):
                raise StepFailure(index, f"insertion position {pos} out of range")
            letters.insert(pos, gen)
        got = BraidWord(current.strands, tuple(letters))
        if exp.strands != current.strands or not words_equal(got, exp):
            raise StepFailure(
                index, f"insertion result '{got}' != expected '{exp}'"
            )
    elif step.op == "destab":
        if exp.strands != current.strands - 1:
            raise StepFailure(
                index,
                f"destabilisation must drop one strand "
                f"({current.strands} -> {exp.strands})",
            )
        got = _destabilised(current, step.end, step.sign, index)
        if not _match_up_to_rotation(got, exp):
            raise StepFailure(index, f"destabilised word '{got}' != '{exp}'")
    elif step.op == "stab":
        if exp.strands != current.strands + 1:
            raise StepFailure(
                index,
                f"stabilisation must add one strand "
                f"({current.strands} -> {exp.strands})",
            )
        got = _destabilised(exp, step.end, step.sign, index)
        if not _match_up_to_rotation(got, current):
            raise StepFailure(
                index, f"'{exp}' does not destabilise back to '{current}'"
            )
    else:
        raise StepFailure(index, f"unknown step kind {step.op!r}")
    return exp


def verify_chain(chain: CobordismChain) -> VerificationReport:
    """Verify every step of the chain and the global bookkeeping.

    The report records: per-step verification, the self-linking number of
    the source against the declared value, the exponent-sum ledger (each
    insertion and positive stabilisation adds one positive letter, each
    positive destabilisation removes one), and that the final word is the
    standard target torus word up to rotation."""
    report = VerificationReport(chain.name, ok=True, steps_checked=0, insertions=0)

    def fail(msg: str) -> VerificationReport:
        report.ok = False
        report.messages.append(msg)
        return report

    current = chain.source
    e = current.exponent_sum()
    if chain.declared_sl is not None:
        sl = e - current.strands
        if sl != chain.declared_sl:
            return fail(
                f"source self-linking {sl} != declared {chain.declared_sl}"
            )
    expected_e = e
    for k, step in enumerate(chain.steps, start=1):
        try:
            current = verify_step(current, step, k)
        except StepFailure as exc:
            return fail(str(exc))
        report.steps_checked = k
        if step.op == "insert":
            report.insertions += len(step.insertions)
            expected_e += len(step.insertions)
        elif step.op == "destab":
            expected_e -= step.sign
        elif step.op == "stab":
            expected_e += step.sign
        if current.exponent_sum() != expected_e:
            return fail(
                f"step {k}: exponent-sum ledger {expected_e} != "
                f"{current.exponent_sum()}"
            )
    p, q = chain.target
    target = torus_braid(p, q)
    if current.strands != p:
        return fail(
            f"final word has {current.strands} strands, target torus word needs {p}"
        )
    if not _match_up_to_rotation(current, target):
        return fail(f"final word '{current}' is not T({p},{q}) up to rotation")
    return report


# -- certificate files -----------------------------------------------------


def parse_chain(text: str, name_hint: str = "<chain>") -> CobordismChain:
    """Parse the certificate format.

    Header lines: ``name =``, ``strands =``, ``source = <signed ints>``,
    optional ``sl = <int>``, ``target = torus <p> <q>``.  Step lines:
    ``<op>[ <args>] => <signed ints>``.  ``#`` starts a comment."""
    name = name_hint
    strands: int | None = None
    source: BraidWord | None = None
    sl: int | None = None
    target: tuple[int, int] | None = None
    steps: list[ChainStep] = []

    def err(lineno: int, msg: str) -> ChainError:
        return ChainError(f"{name_hint}:{lineno}: {msg}")

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=>" in line:
            if strands is None:
                raise err(lineno, "step before 'strands =' header")
            head, _, word_text = line.partition("=>")
            toks = head.split()
            op = toks[0]
            n_now = strands + sum(
                (1 if s.op == "stab" else -1 if s.op == "destab" else 0)
                for s in steps
            )
            n_exp = n_now + (1 if op == "stab" else -1 if op == "destab" else 0)
            try:
                expected = parse_word(word_text, n_exp)
            except BraidError as exc:
                raise err(lineno, f"bad expected word: {exc}") from exc
            try:
                if op == "eq":
                    steps.append(ChainStep("eq", expected))
                elif op == "rot":
                    steps.append(ChainStep("rot", expected, rotation=int(toks[1])))
                elif op == "conj":
                    conj = parse_word(" ".join(toks[1:]), n_now)
                    steps.append(ChainStep("conj", expected, conjugator=conj))
                elif op == "insert":
                    pairs = []
                    for item in toks[1].split(","):
                        pos_s, _, gen_s = item.partition(":")
                        pairs.append((int(pos_s), int(gen_s)))
                    steps.append(ChainStep("insert", expected, insertions=tuple(pairs)))
                elif op in ("destab", "stab"):
                    end = toks[1]
                    if end not in ("top", "bot"):
                        raise err(lineno, f"bad boundary {end!r}")
                    sign = 1
                    if len(toks) > 2:
                        sign = {"+": 1, "-": -1}[toks[2]]
                    steps.append(ChainStep(op, expected, end=end, sign=sign))
                else:
                    raise err(lineno, f"unknown step kind {op!r}")
            except (IndexError, ValueError, KeyError) as exc:
                raise err(lineno, f"bad step arguments: {exc}") from exc
            continue
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key == "name":
            name = value
        elif key == "strands":
            strands = int(value)
        elif key == "source":
            if strands is None:
                raise err(lineno, "'source =' before 'strands ='")
            source = parse_word(value, strands)
        elif key == "sl":
            sl = int(value)
        elif key == "target":
            toks = value.split()
            if len(toks) != 3 or toks[0] != "torus":
                raise err(lineno, f"bad target {value!r}")
            target = (int(toks[1]), int(toks[2]))
        else:
            raise err(lineno, f"unknown header key {key!r}")
    if source is None or target is None:
        raise ChainError(f"{name_hint}: missing 'source =' or 'target =' header")
    return CobordismChain(name, source, tuple(steps), target, sl)


def load_chain(path: str | Path) -> CobordismChain:
    path = Path(path)
    return parse_chain(path.read_text(), name_hint=path.name)


def format_chain(chain: CobordismChain) -> str:
    lines = [
        f"name = {chain.name}",
        f"strands = {chain.source.strands}",
        f"source = {chain.source}",
    ]
    if chain.declared_sl is not None:
        lines.append(f"sl = {chain.declared_sl}")
    lines.append(f"target = torus {chain.target[0]} {chain.target[1]}")
    for s in chain.steps:
        if s.op == "eq":
            head = "eq"
        elif s.op == "rot":
            head = f"rot {s.rotation}"
        elif s.op == "conj":
            head = f"conj {s.conjugator}"
        elif s.op == "insert":
            head = "insert " + ",".join(f"{p}:{g}" for p, g in s.insertions)
        else:
            head = f"{s.op} {s.end} {'+' if s.sign > 0 else '-'}"
        lines.append(f"{head} => {s.expected}")
    return "\n".join(lines) + "\n"


# -- hats ------------------------------------------------------------------
#
# A "hat" records which closed symplectic surface the target torus link
# extends to; the geography gates need to know which hats a target wears.
# Base facts for specific torus links, a monotonicity rule (inserting
# positive generators raises q at fixed p, so a hat on T(p, q') transfers
# to T(p, q) for q <= q'), and explicit certified bridges between strand
# counts generate everything else.

PROJECTIVE_DEGREE_6 = "proj6"
PROJECTIVE_DEGREE_4 = "proj4"
HIRZEBRUCH_3_3 = "hirz33"

_BASE_HATS: dict[str, frozenset[tuple[int, int]]] = {
    PROJECTIVE_DEGREE_6: frozenset({(5, 6), (3, 11)}),
    PROJECTIVE_DEGREE_4: frozenset({(3, 4), (2, 7)}),
    HIRZEBRUCH_3_3: frozenset({(3, 5)}),
}

# certified chains between torus links on different strand counts
# (see the bundled bridge_* certificates)
_BRIDGES: dict[tuple[int, int], tuple[int, int]] = {
    (2, 8): (3, 5),
    (2, 9): (3, 6),
    (2, 10): (3, 7),
}

_MAX_Q = 16  # beyond every base fact and bridge endpoint


def reachable_torus_links(p: int, q: int) -> frozenset[tuple[int, int]]:
    """Torus links reachable from T(p, q) by positive-generator insertion
    and the certified bridges."""
    seen: set[tuple[int, int]] = set()
    stack = [(p, q)]
    while stack:
        sp, sq = stack.pop()
        if (sp, sq) in seen or sq > _MAX_Q:
            continue
        seen.add((sp, sq))
        stack.append((sp, sq + 1))
        if (sp, sq) in _BRIDGES:
            stack.append(_BRIDGES[(sp, sq)])
    return frozenset(seen)


def infer_hats(p: int, q: int) -> frozenset[str]:
    """Hats worn by T(p, q), hence by anything cobordant into T(p, q)."""
    targets = reachable_torus_links(p, q)
    return frozenset(
        hat for hat, spots in _BASE_HATS.items() if targets & spots
    )
