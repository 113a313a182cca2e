"""
Verifying every small triple
============================

``run_scan`` walks every valid ``(m, n, r)`` with ``m n`` up to a bound and
checks the counting formulas, the chain test, distributivity of the normal
lattice, and, in ``all`` mode, compares everything with a brute-force search.
The ``zmgroups scan`` command does the same and writes CSV.
"""

import io

from zmgroups.scan import run_scan, write_csv

buf = io.StringIO()
failed = write_csv(run_scan(60, "all"), buf)
rows = buf.getvalue().splitlines()
print(len(rows) - 1, "triples checked,", len(failed), "failures")
print("\n".join(rows[:8]))
