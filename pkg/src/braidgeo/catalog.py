"""Catalog of braid-closure entries with attached cobordism certificates.

Each ``*.entry`` file names a link by a braid word, records which auxiliary
manifolds ("hats") its cyclic branched covers embed into, lists expected
filling invariants per theorem, and points at certificate files proving the
claimed cobordism chains.  ``audit_catalog`` recomputes everything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .braids import BraidWord, parse_word
from .moves import infer_hats, load_chain, verify_chain
from .seifert import bennequin_seifert

DATA_DIR = Path(__file__).parent / "data" / "catalog"

#: self-linking number each transfer lemma requires of its inputs
LEMMA_SELF_LINKING = {"3.2": 1, "3.3": 3, "3.4": 5, "3.5": 7}


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class Expectation:
    chi: int
    sigma: int
    b1: int | None = None
    b2plus: int | None = None
    b2minus: int | None = None
    b2zero: int | None = None
    caveat: str | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    strands: int
    word: BraidWord
    lemma: str | None = None
    hats: tuple[str, ...] = ()
    expected: dict[str, Expectation] = field(default_factory=dict)
    chain_files: tuple[Path, ...] = ()
    torus: tuple[int, int] | None = None
    path: Path | None = None

    @property
    def band_count(self) -> int:
        return self.word.exponent_sum()

    @property
    def self_linking(self) -> int:
        return self.word.exponent_sum() - self.word.strands


def _parse_expect(text: str, where: str) -> tuple[str, Expectation]:
    parts = text.split()
    if not parts:
        raise CatalogError(f"{where}: empty expect line")
    theorem, fields = parts[0], {}
    for item in parts[1:]:
        key, _, value = item.partition("=")
        if not value:
            raise CatalogError(f"{where}: malformed expect field {item!r}")
        fields[key] = value
    caveat = fields.pop("caveat", None)
    try:
        numbers = {k: int(v) for k, v in fields.items()}
    except ValueError as exc:
        raise CatalogError(f"{where}: {exc}") from None
    known = {"chi", "sigma", "b1", "b2p", "b2m", "b2z"}
    if set(numbers) - known or "chi" not in numbers or "sigma" not in numbers:
        raise CatalogError(f"{where}: bad expect fields {sorted(numbers)}")
    return theorem, Expectation(
        numbers["chi"], numbers["sigma"], numbers.get("b1"),
        numbers.get("b2p"), numbers.get("b2m"), numbers.get("b2z"), caveat,
    )


def parse_entry(text: str, path: Path | None = None) -> CatalogEntry:
    where = path.name if path else "<entry>"
    fields: dict[str, str] = {}
    expected: dict[str, Expectation] = {}
    chains: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, value = (part.strip() for part in line.partition("="))
        if not eq or not value:
            raise CatalogError(f"{where}:{lineno}: expected 'key = value'")
        if key == "expect":
            theorem, exp = _parse_expect(value, f"{where}:{lineno}")
            if theorem in expected:
                raise CatalogError(f"{where}:{lineno}: duplicate expect {theorem}")
            expected[theorem] = exp
        elif key == "chain":
            chains.append(value)
        elif key in fields:
            raise CatalogError(f"{where}:{lineno}: duplicate field {key!r}")
        else:
            fields[key] = value
    for required in ("name", "strands", "word"):
        if required not in fields:
            raise CatalogError(f"{where}: missing field {required!r}")
    strands = int(fields["strands"])
    word = parse_word(fields["word"], strands)
    torus = None
    if "torus" in fields:
        p, q = (int(v) for v in fields["torus"].split())
        torus = (p, q)
    hats = tuple(fields.get("hats", "").split())
    base = path.parent if path else Path(".")
    return CatalogEntry(
        fields["name"], strands, word, fields.get("lemma"), hats, expected,
        tuple(base / c for c in chains), torus, path,
    )


def load_catalog(directory: str | Path | None = None) -> list[CatalogEntry]:
    directory = Path(directory) if directory else DATA_DIR
    entries = []
    seen: dict[str, Path] = {}
    for path in sorted(directory.glob("*.entry")):
        entry = parse_entry(path.read_text(), path)
        if entry.name in seen:
            raise CatalogError(
                f"duplicate name {entry.name!r} in {path.name} and "
                f"{seen[entry.name].name}"
            )
        seen[entry.name] = path
        for chain in entry.chain_files:
            if not chain.is_file():
                raise CatalogError(f"{path.name}: missing chain file {chain}")
        entries.append(entry)
    if not entries:
        raise CatalogError(f"no .entry files under {directory}")
    return entries


def entry_by_name(entries, name: str) -> CatalogEntry:
    for entry in entries:
        if entry.name == name:
            return entry
    raise CatalogError(f"no catalog entry named {name!r}")


@dataclass(frozen=True)
class AuditReport:
    entries: int
    chains: int
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


def audit_entry(entry: CatalogEntry) -> list[str]:
    problems = []
    sl = entry.self_linking
    want_sl = LEMMA_SELF_LINKING.get(entry.lemma)
    if want_sl is not None and sl != want_sl:
        problems.append(f"{entry.name}: self-linking {sl}, lemma needs {want_sl}")
    if entry.lemma == "3.6" and bennequin_seifert(entry.word).b0 != 1:
        problems.append(f"{entry.name}: Bennequin surface is disconnected")
    reachable: set[str] = set()
    for chain_path in entry.chain_files:
        chain = load_chain(chain_path)
        report = verify_chain(chain)
        if not report.ok:
            problems.append(
                f"{entry.name}: chain {chain_path.name} fails: "
                + "; ".join(report.messages)
            )
            continue
        src = chain.source
        if (src.strands, tuple(src.letters)) != (
            entry.strands, tuple(entry.word.letters)
        ):
            problems.append(
                f"{entry.name}: chain {chain_path.name} starts from a "
                "different braid word"
            )
        if chain.declared_sl is not None and chain.declared_sl != sl:
            problems.append(
                f"{entry.name}: chain {chain_path.name} declares "
                f"self-linking {chain.declared_sl}, word has {sl}"
            )
        reachable |= infer_hats(*chain.target)
    if entry.torus is not None:
        reachable |= infer_hats(*entry.torus)
    missing = set(entry.hats) - reachable
    if missing:
        problems.append(
            f"{entry.name}: claimed hats {sorted(missing)} not reachable"
        )
    return problems


def audit_catalog(entries) -> AuditReport:
    problems: list[str] = []
    chains = 0
    for entry in entries:
        chains += len(entry.chain_files)
        problems.extend(audit_entry(entry))
    return AuditReport(len(entries), chains, tuple(problems))
