import random

import pytest

from amdeg.polyring import Ring, Polynomial
from amdeg.groebner import GradedIdeal
from amdeg.amdcheck import analyze
from amdeg.fixtures import FIXTURES


class ReportCache:
    """Lazily analyze named fixtures once per session."""

    def __init__(self):
        self._reports = {}
        self._ideals = {}

    def ideal(self, name):
        if name not in self._ideals:
            self._ideals[name] = FIXTURES[name].build_ideal()
        return self._ideals[name]

    def report(self, name):
        if name not in self._reports:
            fx = FIXTURES[name]
            self._reports[name] = analyze(self.ideal(name),
                                          non_normal=fx.non_normal)
        return self._reports[name]


@pytest.fixture(scope="session")
def reports():
    return ReportCache()


def random_homogeneous(ring, degree, terms, rng):
    """Random nonzero homogeneous polynomial with at most `terms` terms."""
    nv = ring.nvars
    p = ring.prime
    d = {}
    for _ in range(terms):
        exps = [0] * nv
        for _ in range(degree):
            exps[rng.randrange(nv)] += 1
        d[ring.pack(tuple(exps))] = rng.randrange(1, p)
    return Polynomial(ring, d)


def random_ideal(rng, nvars=None, prime=101, max_gens=4, max_deg=3):
    if nvars is None:
        nvars = rng.choice((3, 3, 4))
    ring = Ring(tuple(f"x{i}" for i in range(nvars)), prime)
    gens = []
    for _ in range(rng.randrange(1, max_gens + 1)):
        deg = rng.randrange(1, max_deg + 1)
        g = random_homogeneous(ring, deg, rng.randrange(1, 5), rng)
        if not g.is_zero():
            gens.append(g)
    if not gens:
        gens = [random_homogeneous(ring, 2, 2, rng)]
    return GradedIdeal(ring, gens)


def seeded_rng(seed):
    return random.Random(seed)
