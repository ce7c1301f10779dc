"""Random elements of T and its extensions, built as words in the builder elements."""

from __future__ import annotations

import random
import re

from .extensions import EPrimeElem, TTildeElem
from .plcircle import PLMap, builder_a, builder_b, builder_t_n, compose


def generators(max_orbit: int = 5) -> dict[str, PLMap]:
    gens = {"a": builder_a(), "b": builder_b()}
    for n in range(2, max_orbit + 1):
        gens[f"t{n}"] = builder_t_n(n)
    return gens


def random_t(rng: random.Random, max_len: int = 3, max_orbit: int = 5) -> PLMap:
    gens = list(generators(max_orbit).values())
    x = PLMap.identity()
    for _ in range(rng.randint(0, max_len)):
        g = rng.choice(gens)
        x = compose(x, g if rng.random() < 0.5 else g.inverse)
    return x


def random_ttilde(rng: random.Random, max_len: int = 3, max_z: int = 2) -> TTildeElem:
    return TTildeElem(rng.randint(-max_z, max_z), random_t(rng, max_len))


def random_eprime(rng: random.Random, max_len: int = 3, max_z: int = 2) -> EPrimeElem:
    return EPrimeElem(rng.randint(-max_z, max_z), rng.randint(-max_z, max_z), random_t(rng, max_len))


_TOKEN = re.compile(r"^(id|a|b|t\d+)(?:\^(-?\d+))?$")


def parse_t_word(s: str) -> PLMap:
    """Words like ``"a*b^-1*t3^2"`` in the builder elements; ``"id"`` is the identity."""
    x = PLMap.identity()
    for tok in s.replace(" ", "").split("*"):
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad token {tok!r}")
        name, exp = m.group(1), int(m.group(2) or 1)
        if name == "id":
            g = PLMap.identity()
        elif name == "a":
            g = builder_a()
        elif name == "b":
            g = builder_b()
        else:
            g = builder_t_n(int(name[1:]))
        x = compose(x, g ** exp)
    return x
