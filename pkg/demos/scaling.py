"""
Runtime growth of the category dynamic programs
===============================================

With two distinct weights the weight-type table has about n**2 states per
job, so the total should grow roughly like n**3 (times a log factor for the
heap updates). Pass larger sizes on the command line to stretch the fit,
e.g. ``python demos/scaling.py 50 100 200 400``.
"""

import sys

from tardy.harness import bench

sizes = [int(a) for a in sys.argv[1:]] or [25, 50, 100, 200]

for algo, nu in (("dp-w", {"nu_w": 2}), ("dp-p", {"nu_p": 2})):
    report = bench(algo, sizes, seed=1, **nu)
    for row in report.rows:
        print(f"{algo} n={row['n']:4d} {row['seconds']:8.3f}s objective={row['objective']}")
    print(f"{algo} log-log slope {report.loglog_slope:.2f}")

# the oracle, by contrast, doubles with every extra job
report = bench("oracle", list(range(12, 19)), repeat=3)
print(f"oracle log2(time) per job {report.log2_per_job:.2f}")
