"""Exact verification of the six-inequality chain and the implied edge bound.

All sides are evaluated in exact integer/rational arithmetic; the fractional
binomial convention is C(x, 2) = x(x-1)/2 so that averages can be plugged in.
Combining the chain gives the quadratic 10E^2 - 25nE - n^2(n-1) <= 0 in the
edge count E, whose largest root n(25 + sqrt(40n + 585))/20 is carried
exactly as a quadratic surd.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from bergec4.berge import BergeCycleWitness, find_berge_cycle
from bergec4.blocks import block_degrees, decompose
from bergec4.hypergraph import Hypergraph, degree_profile


class HypothesisError(ValueError):
    """Input violates a standing hypothesis (Berge C4 present, isolated vertex)."""

    def __init__(self, reason: str, message: str, witness: BergeCycleWitness | None = None):
        super().__init__(message)
        self.reason = reason
        self.witness = witness


def binom2(x: Fraction | int) -> Fraction:
    """C(x, 2) = x(x-1)/2, defined for fractional x."""
    x = Fraction(x)
    return x * (x - 1) / 2


@dataclass(frozen=True)
class InequalityCheck:
    label: str
    lhs: Fraction
    rhs: Fraction
    relation: str  # "<=" or ">="
    passed: bool


def _check(label: str, lhs, rhs, relation: str) -> InequalityCheck:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    ok = lhs <= rhs if relation == "<=" else lhs >= rhs
    return InequalityCheck(label, lhs, rhs, relation, ok)


class EdgeBound:
    """Largest E with n*C(4E/n,2) + 4n*C(E/n,2) <= 2*C(n,2) + 21E, kept exact.

    The value is n(25 + sqrt(D))/20 with D = 40n + 585. Comparisons against
    rationals, the integer floor, and decimal rendering all go through integer
    square roots, so no floating point is involved.
    """

    __slots__ = ("n", "discriminant")

    def __init__(self, n: int):
        if n < 3:
            raise ValueError(f"edge bound requires n >= 3, got {n}")
        self.n = n
        self.discriminant = 40 * n + 585

    def is_rational(self) -> bool:
        s = isqrt(self.discriminant)
        return s * s == self.discriminant

    def as_fraction(self) -> Fraction:
        """Exact value when the discriminant is a perfect square."""
        s = isqrt(self.discriminant)
        if s * s != self.discriminant:
            raise ValueError("bound is irrational for this n")
        return Fraction(self.n * (25 + s), 20)

    def compare(self, other: Fraction | int) -> int:
        """Sign of (self - other): -1, 0, or +1, exactly."""
        q = Fraction(other)
        # self >= q  <=>  sqrt(D) >= 20q/n - 25
        rhs = 20 * q / self.n - 25
        if rhs <= 0:
            return 1  # sqrt(D) > 0 >= rhs, and equality is impossible there
        lhs_sq = self.discriminant * rhs.denominator**2
        rhs_sq = rhs.numerator**2
        if lhs_sq > rhs_sq:
            return 1
        if lhs_sq < rhs_sq:
            return -1
        return 0

    def __float__(self) -> float:
        return self.n * (25 + self.discriminant**0.5) / 20

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __eq__(self, other) -> bool:
        if isinstance(other, EdgeBound):
            return self.n == other.n
        if isinstance(other, (int, Fraction)):
            return self.compare(other) == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("EdgeBound", self.n))

    def __repr__(self) -> str:
        return f"EdgeBound(n={self.n}, value={self.n}*(25+sqrt({self.discriminant}))/20)"

    def _scaled_floor(self, scale: int) -> int:
        # floor(value * scale) via floor((25*n*scale + sqrt(D*(n*scale)^2)) / 20)
        t = self.n * scale
        return (25 * t + isqrt(self.discriminant * t * t)) // 20

    def floor(self) -> int:
        return self._scaled_floor(1)

    def enclosure(self, places: int = 12) -> tuple[Fraction, Fraction]:
        """Rational lo <= value <= hi with hi - lo = 10**-places."""
        scale = 10**places
        lo = Fraction(self._scaled_floor(scale), scale)
        return lo, lo + Fraction(1, scale)

    def decimal(self, places: int) -> str:
        """Decimal rendering, round-to-nearest (ties, only possible for
        rational values, round half up)."""
        scale = 10**places
        if self.is_rational():
            return decimal_str(_round_half_up(self.as_fraction(), places), places)
        digits = self._scaled_floor(scale * 10)
        rounded = (digits + 5) // 10  # irrational: never exactly at half
        return decimal_str(Fraction(rounded, scale), places)


def upper_bound(n: int) -> EdgeBound:
    """Exact largest edge count satisfying the combined chain inequality."""
    return EdgeBound(n)


def combined_inequality_sides(n: int, m: Fraction | int) -> tuple[Fraction, Fraction]:
    """Both sides of the combined inequality in its original binomial form."""
    m = Fraction(m)
    lhs = n * binom2(4 * m / n) + 4 * n * binom2(Fraction(m, n))
    rhs = 2 * binom2(n) + 21 * m
    return lhs, rhs


def combined_inequality_holds(n: int, m: Fraction | int) -> bool:
    """The combined inequality, via the expanded quadratic (exact)."""
    m = Fraction(m)
    return 10 * m * m <= 25 * n * m + Fraction(n * n * (n - 1))


def _round_half_up(x: Fraction, places: int) -> Fraction:
    scale = 10**places
    return Fraction((x * scale * 2 + 1) // 2, scale)


def decimal_str(x: Fraction, places: int | None = None) -> str:
    """Exact decimal string of a fraction whose denominator divides a power of 10.

    With places given, pads/uses exactly that many digits after the point.
    """
    sign = "-" if x < 0 else ""
    x = abs(x)
    den = x.denominator
    k = 0
    while den % 2 == 0:
        den //= 2
        k += 1
    j = 0
    while den % 5 == 0:
        den //= 5
        j += 1
    if den != 1:
        raise ValueError(f"{x} has no finite decimal expansion")
    digits = max(k, j)
    if places is not None:
        if places < digits:
            raise ValueError(f"{x} needs {digits} decimal places, got {places}")
        digits = places
    scaled = x * 10**digits
    assert scaled.denominator == 1
    text = str(scaled.numerator).rjust(digits + 1, "0")
    if digits == 0:
        return sign + text
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def edge_ratio(n: int, m: int) -> Fraction:
    """m / n^(3/2) rounded to nearest at 12 significant digits (ties round up).

    Exact: the value is sqrt(m^2 n)/n^2 and all rounding goes through integer
    square roots.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m == 0:
        return Fraction(0)
    big = m * m * n
    # leading decimal exponent via a generous fixed-point probe
    probe_places = 30
    probe = isqrt(big * 10 ** (2 * probe_places)) // (n * n)
    exponent = len(str(probe)) - 1 - probe_places
    shift = exponent - 11  # 12 significant digits
    if shift <= 0:
        a = big * 10 ** (-2 * shift)
        b = n * n
    else:
        a = big
        b = n * n * 10**shift
    mantissa = (isqrt(4 * a) + b) // (2 * b)  # round half up on sqrt(a)/b
    if shift <= 0:
        return Fraction(mantissa, 10 ** (-shift))
    return Fraction(mantissa * 10**shift)


@dataclass(frozen=True)
class BoundReport:
    """Both sides of every inequality in the chain, plus the edge bound for n."""

    n: int
    edge_count: int
    three_path_bound: InequalityCheck
    excess_total: InequalityCheck
    block_total: InequalityCheck
    jensen_shadow: InequalityCheck
    jensen_block: InequalityCheck
    combined: InequalityCheck
    upper_bound_n: EdgeBound

    def checks(self) -> tuple[InequalityCheck, ...]:
        return (
            self.three_path_bound,
            self.excess_total,
            self.block_total,
            self.jensen_shadow,
            self.jensen_block,
            self.combined,
        )

    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks())


def verify_chain(h: Hypergraph) -> BoundReport:
    """Evaluate the full inequality chain on a BC4-free hypergraph.

    Refuses (HypothesisError) when the input has an isolated vertex or
    contains a Berge C4, carrying the witness in the latter case; the chain
    is only claimed under those hypotheses.
    """
    if h.n < 3:
        raise ValueError(f"chain verification requires n >= 3, got {h.n}")
    profile = degree_profile(h)
    isolated = [v for v in range(h.n) if profile.hyper[v] == 0]
    if isolated:
        raise HypothesisError(
            "isolated_vertices",
            f"hypergraph has isolated vertices {isolated}",
        )
    witness = find_berge_cycle(h, 4)
    if witness is not None:
        raise HypothesisError(
            "berge_c4_present",
            f"hypergraph contains a Berge C4 on vertices {witness.vertices}",
            witness,
        )
    n, m = h.n, h.edge_count
    db = block_degrees(h, decompose(h))
    three_paths = sum(binom2(d) for d in profile.shadow)
    db_binom = sum(binom2(d) for d in db)
    report = BoundReport(
        n=n,
        edge_count=m,
        three_path_bound=_check(
            "three_path_bound", three_paths, 2 * binom2(n) - 4 * db_binom + 21 * m, "<="
        ),
        excess_total=_check("excess_total", sum(profile.excess), m, ">="),
        block_total=_check("block_total", sum(db), m, ">="),
        jensen_shadow=_check("jensen_shadow", n * binom2(Fraction(4 * m, n)), three_paths, "<="),
        jensen_block=_check("jensen_block", n * binom2(Fraction(m, n)), db_binom, "<="),
        combined=_check(
            "combined",
            n * binom2(Fraction(4 * m, n)) + 4 * n * binom2(Fraction(m, n)),
            2 * binom2(n) + 21 * m,
            "<=",
        ),
        upper_bound_n=EdgeBound(n),
    )
    return report
