"""Python bindings for the bergehit C++ core.

Functions returning JSON documents are wrapped so callers get dicts.
"""

import json

from . import _bergehit
from ._bergehit import (
    CapacityError,
    GenerationError,
    Hypergraph,
    NoHitError,
    NoRootError,
    ParseError,
    binomial,
    complete,
    degree_condition_random,
    exact_longest_path_length,
    regular_p0,
    sigma,
    tau_min_degree,
    theorem_condition_holds,
    two_cliques,
    two_cliques_matching,
)


def exact_hamiltonian(h):
    cert = _bergehit.exact_hamiltonian(h)
    return None if cert is None else json.loads(cert)


def decide(h, budget=200000, seed=0, fallback=False):
    return json.loads(_bergehit.decide(h, budget, seed, fallback))


def absorb(h, d0, budget=200000, seed=0):
    return json.loads(_bergehit.absorb(h, d0, budget, seed))


def run_trials(h, trials, seed_base, full=False, jobs=0):
    """Returns (csv_text, summary_dict)."""
    csv, summary = _bergehit.run_trials(h, trials, seed_base, full, jobs)
    return csv, json.loads(summary)


def thresholds(h, eps, c_gamma=1.0):
    return json.loads(_bergehit.thresholds(h, eps, c_gamma))


def properties(h, eps, sampled=False, trials=1000, seed=0):
    return json.loads(_bergehit.properties(h, eps, sampled, trials, seed))
