"""Degree budgets and size bounds for arcs of deficiency t."""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import BadParams
from .gf import is_prime


def floor_log(p, t):
    """Largest e with p**e <= t."""
    e = 0
    while p ** (e + 1) <= t:
        e += 1
    return e


def bounded_degree_size(q, p, d):
    """The strict upper bound d/(d+1) (q + 1 + q/p) + 1 on an arc lying on a degree-d curve."""
    return Fraction(d, d + 1) * (q + 1 + Fraction(q, p)) + 1


@dataclass(frozen=True)
class Bounds:
    q: int
    p: int
    t: int
    eps: int
    pe: int
    d: int
    cond_ok: bool
    curve_degree: int = None
    boundeddeg: Fraction = None

    @property
    def max_arc_on_curve(self):
        """Largest arc size allowed on a curve of degree ``curve_degree``."""
        if self.boundeddeg is None:
            return None
        return ceil(self.boundeddeg) - 1

    def to_json(self):
        doc = {"q": self.q, "p": self.p, "t": self.t, "eps": self.eps, "pe": self.pe, "d": self.d,
               "cond_ok": self.cond_ok}
        if self.boundeddeg is not None:
            doc["curve_degree"] = self.curve_degree
            doc["boundeddeg"] = str(self.boundeddeg)
            doc["max_arc_on_curve"] = self.max_arc_on_curve
        return doc


def compute_bounds(q, p, t=1, curve_degree=None) -> Bounds:
    if not is_prime(p):
        raise BadParams(f"{p} is not prime")
    n, h = q, 0
    while n % p == 0:
        n //= p
        h += 1
    if n != 1 or h == 0:
        raise BadParams(f"{q} is not a power of {p}")
    if t < 1:
        raise BadParams(f"deficiency must be >= 1, got {t}")
    eps = floor_log(p, t)
    pe = p**eps
    cond = pe * (t + Fraction(pe, 2) + Fraction(3, 2)) <= Fraction((t + 2) * (t + 1), 2)
    bd = None
    if curve_degree is not None:
        if curve_degree < 1:
            raise BadParams("curve degree must be positive")
        bd = bounded_degree_size(q, p, curve_degree)
    return Bounds(q, p, t, eps, pe, t + pe, cond, curve_degree, bd)
