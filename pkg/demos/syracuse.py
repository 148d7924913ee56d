"""Syracuse orbits, small and astronomically large.

    python demos/syracuse.py > trace.csv
"""

import sys

from hbn import best_case, nsyr, term, trace_to_csv, value

orbit = nsyr(term(2014), 100)
print("orbit of 2014:", ",".join(str(value(e.term)) for e in orbit), file=sys.stderr)

# bestCase(100) is 2^2^...^2 - 1 with a hundred 2s; only its shape is ever built
trace = nsyr(best_case(term(100)), 200)
print("tsize along the first 200 steps from bestCase(100):", file=sys.stderr)
print(" ".join(str(int(e.tsize_value)) for e in trace[:20]), "...", file=sys.stderr)
sys.stdout.write(trace_to_csv(trace))
