"""
Class formulations, their optima, and the rounding step
=======================================================

"""

from tardy import ClassKind, partition_classes, round_pw_solution, solve_lp, solve_mip
from tardy.generate import generate_instance
from tardy.model import build_dp_model, build_pw_model

instance = generate_instance(8, 2, 2, 3, seed=3, name="demo")
for job in instance.jobs:
    print(job)

# jobs sharing a due date and processing time form one class,
# members listed lightest first
part = partition_classes(instance, ClassKind.DUE_PROC)
for c in part.classes:
    print("class d=%d p=%d members=%s weights=%s" % (c.d, c.p, c.members, c.values))

model = build_dp_model(part)
print(model.to_lp())

# the LP bound, then the integral optimum
print("LP bound", solve_lp(model).objective)
sol = solve_mip(model)
print("MILP optimum", sol.objective, "after", sol.nodes, "nodes")
# each z equals the weight of the y lightest members of its class
for i, c in enumerate(part.classes):
    y = sol[f"y{i + 1}"]
    print(f"y{i + 1}={y} z{i + 1}={sol[f'z{i + 1}']} prefix={sum(c.values[:int(y)])}")

# proc+weight: solve with fractional per-level counts, then round
part = partition_classes(instance, ClassKind.PROC_WEIGHT)
relaxed = build_pw_model(part, relax_x=True)
sol = solve_mip(relaxed)
trace = round_pw_solution(part, relaxed, sol)
print("due levels", part.due_levels)
for i, (delta, row) in enumerate(zip(part.delta, trace.rows)):
    print(f"class {i + 1}: delta={delta} rounded={row} pivot={trace.pivots[i]}")
print("objective before and after rounding:", sol.objective, trace.objective)
