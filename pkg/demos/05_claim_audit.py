"""Run the claim catalog over the corpus and summarize the verdicts.

A failing claim is a result: the catalog is audited in its literal printed
form, and several of its items are internally inconsistent.  Exit status
of the CLI equivalent (`symlie audit --all`) is 0 either way.
"""

from symlie import audit_all, render_text

reports = audit_all()

print("verdict matrix (rows: claims, columns: corpus algebras)\n")
ids = []
for rec in reports[0].claims:
    key = (rec.claim_id, rec.mode)
    if key not in ids:
        ids.append(key)

header = " " * 34 + "  ".join(f"{r.algebra[:9]:>9s}" for r in reports)
print(header)
for claim_id, mode in ids:
    tag = f"{claim_id}[{mode}]" if mode else claim_id
    cells = []
    for rep in reports:
        verdict = rep.claim(claim_id, mode).verdict
        cells.append({"holds": "ok", "fails": "FAIL", "vacuous": "vac"}[verdict])
    print(f"{tag:34s}" + "  ".join(f"{c:>9s}" for c in cells))

print("\nfull text report for the worked 2-dimensional example:\n")
print(render_text(reports[0]))
