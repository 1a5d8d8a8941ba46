"""Exact local cohomology and Frobenius computations."""

import json

from ._lclab import InvalidInput, VerdictWithheld, big_binomial, binom_mod_p, is_prime, normalize_poly
from ._lclab import run_job as _run_job

__all__ = [
    "InvalidInput",
    "VerdictWithheld",
    "big_binomial",
    "binom_mod_p",
    "is_prime",
    "normalize_poly",
    "run",
]

_FIELDS = ("mode", "family", "ideal_file", "complex", "field", "matrix_file", "matrix_text", "method", "output")


def run(command, *, ideal=None, cm=False, crosscheck=False, **kwargs):
    """Run one job and return (exit_code, report dict).

    String options (family, complex, field, ...) go to the job fields; integer
    options become parameters. `ideal` is a dict with char, vars and generators.
    """
    job = {"command": command, "params": {}}
    for key, value in kwargs.items():
        if key in _FIELDS:
            job[key] = value
        else:
            job["params"][key] = int(value)
    if ideal is not None:
        job["ideal"] = ideal
    if cm:
        job["cm"] = True
    if crosscheck:
        job["crosscheck"] = True
    code, text = _run_job(json.dumps(job))
    return code, json.loads(text)
