"""Exact computations with connected Hopf algebras and coassociative Lie algebras.

Presentations and CLAs are C++ objects; reports come back as plain dicts.
"""

import json

from . import _core
from ._core import CLA, Hopf, InputError, StructuralError, catalog, enveloping

__all__ = [
    "CLA",
    "Hopf",
    "InputError",
    "StructuralError",
    "build",
    "catalog",
    "cohomology",
    "enveloping",
    "lantern",
    "replicate",
    "verify",
]


def build(tag, *params):
    """Catalog object by tag, e.g. build("A", 1, 0, 0) or build("cla35h", 2, 0).

    Parameters may be ints, strings like "1/2", or fractions.Fraction.
    """
    return _core.build_family(tag, list(params))


def verify(obj, antipode_degree=4):
    """Verification report as a dict with "passed" and "checks"."""
    if isinstance(obj, CLA):
        return json.loads(obj.verify())
    return json.loads(obj.verify(antipode_degree))


def lantern(obj, degree_bound=3):
    if isinstance(obj, CLA):
        return json.loads(obj.lantern())
    return json.loads(obj.lantern(degree_bound))


def cohomology(hopf, bound, by_bidegree=False):
    return json.loads(hopf.h2_report(bound, by_bidegree))


def replicate(only=()):
    return json.loads(_core.replicate(list(only)))
