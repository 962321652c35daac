"""JSON instance files and result records.

Instance file::

    {"name": "optional", "jobs": [{"p": 2, "d": 2, "w": 3}, ...]}

Keys are written in a fixed order (``name``, ``jobs``; ``p``, ``d``, ``w``)
so that files are byte-stable.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import Instance, Job
from .errors import InvalidInstance
from .oracle import OptimalSolution


def parse_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInstance(f"not valid JSON: {exc}") from exc
    return instance_from_dict(doc)


def instance_from_dict(doc) -> Instance:
    if not isinstance(doc, dict) or not isinstance(doc.get("jobs"), list):
        raise InvalidInstance('instance must be an object with a "jobs" array')
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InvalidInstance('"name" must be a string')
    jobs = []
    for i, rec in enumerate(doc["jobs"]):
        if not isinstance(rec, dict):
            raise InvalidInstance(f"job {i} is not an object")
        missing = {"p", "d", "w"} - rec.keys()
        if missing:
            raise InvalidInstance(f"job {i} lacks {sorted(missing)}")
        jobs.append(Job(i, rec["p"], rec["d"], rec["w"]))
    return Instance(tuple(jobs), name)


def dumps_instance(instance: Instance) -> str:
    head = "{\n"
    if instance.name is not None:
        head += f'  "name": {json.dumps(instance.name)},\n'
    if not instance.jobs:
        return head + '  "jobs": []\n}\n'
    rows = ",\n".join(
        f'    {{"p": {j.p}, "d": {j.d}, "w": {j.w}}}' for j in instance.jobs
    )
    return head + '  "jobs": [\n' + rows + "\n  ]\n}\n"


def load_instance(path: str | Path) -> Instance:
    return parse_instance(Path(path).read_text())


def save_instance(instance: Instance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(instance))


def result_record(solution: OptimalSolution, wall_ms: float) -> dict:
    res = solution.result
    return {
        "algorithm": solution.algorithm,
        "objective": solution.objective,
        "early": sorted(res.early),
        "order": list(res.order),
        "completions": list(res.completion),
        "wall_ms": round(wall_ms, 3),
    }
