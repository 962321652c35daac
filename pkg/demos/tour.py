"""
Every solver on one small instance
==================================

"""

from tardy import Instance, evaluate_early_set, stats
from tardy.solvers import ALGORITHMS, applicable, solve

# three jobs as (processing time, due date, weight)
instance = Instance.from_tuples([(2, 2, 3), (2, 3, 1), (1, 3, 2)], name="tour")
print(stats(instance))

# jobs 0 and 1 cannot both finish on time; 0 and 2 can
print(evaluate_early_set(instance, {0, 1}))
print(evaluate_early_set(instance, {0, 2}))

for algo in ALGORITHMS:
    if not applicable(algo, instance):
        print(f"{algo:13s} skipped (needs equal weights)")
        continue
    sol = solve(instance, algo)
    print(f"{algo:13s} objective={sol.objective} early={sorted(sol.early)} order={sol.result.order}")

# the formulation solvers also run on the lattice engine
for algo in ("fpt-dp", "fpt-dw", "fpt-pw"):
    print(algo, "lattice", solve(instance, algo, "lattice").objective)
