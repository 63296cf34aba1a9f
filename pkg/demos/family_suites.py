"""Run the seeded random suites for each family and print a one-line summary per family."""
import sys

from rosenlin.verify import FAMILIES, run_family_suite

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 20
for fam in FAMILIES:
    s = run_family_suite(fam, trials, seed=1)
    print(f"{fam:<13} passed {s.passed}/{trials}  failed {s.failed}  rejected {s.rejected}")
