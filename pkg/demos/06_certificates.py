"""Certificates: what a search claims, and how to check it again.

A witness is re-checked by the independent checker.  An exhaustion claim is
re-derived by rerunning the search, optionally with no symmetry reduction.
Worker processes split the search at the first levels and give the same
answer as a single process.
"""
import json

from vramsey import Domain, SearchConfig, find_good_coloring, make_v, verify_certificate

V12 = make_v(1, 2)
for n in (4, 5):
    cert = find_good_coloring(Domain.full(n), 2, [V12, V12], SearchConfig(workers=2))
    doc = cert.to_json()
    print(f"B_{n}: {cert.outcome}, {cert.nodes_visited} nodes, {len(json.dumps(doc))} bytes of JSON")
    print("    re-check:", verify_certificate(doc).detail)

# A forged witness does not survive.
doc = find_good_coloring(Domain.full(4), 2, [V12, V12]).to_json()
doc["witness"]["colors"] = {k: 1 for k in doc["witness"]["colors"]}
print("forged witness:", verify_certificate(doc).detail)

# A tight node budget never turns into a yes/no answer.
cert = find_good_coloring(Domain.full(5), 2, [V12, V12], SearchConfig(node_budget=200))
print("budget 200:", cert.outcome)
