"""Walk through one cobordism certificate step by step.

A certificate records how a braid closure grows into a torus link by
element-preserving rewrites (equalities, rotations, conjugations), Markov
(de)stabilisations, and positive band insertions.  Each insertion is a
symplectic handle attachment; everything else leaves the closure alone.
The verifier replays the whole file with exact braid-group arithmetic.
"""

from braidgeo import load_chain, verify_chain, verify_step
from braidgeo.catalog import DATA_DIR

path = DATA_DIR / "chains" / "lemma3_1_T28_to_T35.cert"
chain = load_chain(path)

print(f"certificate: {path.name}")
print(f"source: {chain.source}  (closure T(2,8), self-linking "
      f"{chain.source.exponent_sum() - chain.source.strands})")
print(f"target: T{chain.target}\n")

current = chain.source
for index, step in enumerate(chain.steps, 1):
    current = verify_step(current, step, index)
    extra = ""
    if step.op == "insert":
        extra = f"  bands at {step.insertions}"
    elif step.op in ("stab", "destab"):
        extra = f"  ({step.end})"
    print(f"step {index}: {step.op:7s} -> {current}{extra}")

report = verify_chain(chain)
print(f"\nverified: {report.ok} "
      f"({report.steps_checked} steps, {report.insertions} bands added)")

print("\nnow the whole bundled corpus:")
total = 0
for cert in sorted((DATA_DIR / "chains").glob("*.cert")):
    rep = verify_chain(load_chain(cert))
    assert rep.ok, (cert.name, rep.messages)
    total += rep.steps_checked
print(f"all certificates verify: {total} steps checked")
