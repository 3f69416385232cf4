"""Eventually periodic continued fractions with exact values.

The text form is ``[a0; a1, a2, (b1, b2)]``: a finite list of partial
quotients with an optional parenthesized repeating block at the end.
Whitespace is insignificant on input; rendering is canonical.  Values,
convergents, Lagrange constants and tail equivalence are all computed
exactly over :class:`~sturmian_spectra.quadreal.QuadReal`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, NamedTuple

from .quadreal import QuadReal

__all__ = [
    "ContinuedFraction",
    "Convergent",
    "CFSyntaxError",
    "parse_cf",
    "render_cf",
    "value_of",
    "convergents",
    "lagrange_constant",
    "are_equivalent",
]


class CFSyntaxError(ValueError):
    """Malformed continued fraction text."""


class Convergent(NamedTuple):
    t: int
    p: int
    q: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)


_CF_OUTER = re.compile(r"\[(-?\d+)(?:;(.+))?\]")
_CF_TAIL = re.compile(r"(?:(\d+(?:,\d+)*),)?\((\d+(?:,\d+)*)\)|(\d+(?:,\d+)*)")


def _primitive_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    n = len(cycle)
    for length in range(1, n + 1):
        if n % length == 0 and cycle[:length] * (n // length) == cycle:
            return cycle[:length]
    return cycle


class ContinuedFraction:
    """Canonical eventually periodic continued fraction.

    ``preperiod`` always holds at least the integer part a0; ``period`` is
    empty exactly for rational values.  Construction canonicalizes: the
    period is reduced to its primitive cycle and rotated out of the
    preperiod as far as possible, and rational expansions never end in 1
    (except for [1] itself).
    """

    __slots__ = ("preperiod", "period")

    def __init__(self, preperiod: Iterable[int], period: Iterable[int] = ()):
        pre = [int(a) for a in preperiod]
        per = [int(b) for b in period]
        if not pre:
            raise ValueError("continued fraction needs an integer part")
        if any(a < 1 for a in pre[1:]) or any(b < 1 for b in per):
            raise ValueError("partial quotients beyond a0 must be >= 1")
        if per:
            per = list(_primitive_cycle(tuple(per)))
            while len(pre) >= 2 and pre[-1] == per[-1]:
                pre.pop()
                per = [per[-1]] + per[:-1]
        elif len(pre) >= 2 and pre[-1] == 1:
            pre.pop()
            pre[-1] += 1
        object.__setattr__(self, "preperiod", tuple(pre))
        object.__setattr__(self, "period", tuple(per))

    def __setattr__(self, name, value):
        raise AttributeError("ContinuedFraction is immutable")

    # -- basics ----------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return not self.period

    def partial_quotient(self, t: int) -> int:
        """a_t, with the period unrolled for t past the preperiod."""
        if t < 0:
            raise IndexError("negative index")
        if t < len(self.preperiod):
            return self.preperiod[t]
        if not self.period:
            raise IndexError(f"rational expansion has no term a_{t}")
        return self.period[(t - len(self.preperiod)) % len(self.period)]

    def __eq__(self, other):
        if not isinstance(other, ContinuedFraction):
            return NotImplemented
        return self.preperiod == other.preperiod and self.period == other.period

    def __hash__(self):
        return hash((self.preperiod, self.period))

    def __repr__(self):
        return f"ContinuedFraction({self.render()!r})"

    # -- text form ---------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        compact = re.sub(r"\s+", "", text)
        m = _CF_OUTER.fullmatch(compact)
        if not m:
            raise CFSyntaxError(f"not a continued fraction: {text!r}")
        pre = [int(m.group(1))]
        tail = m.group(2)
        per: list[int] = []
        if tail is not None:
            tm = _CF_TAIL.fullmatch(tail)
            if not tm:
                raise CFSyntaxError(f"malformed quotient list in {text!r}")
            if tm.group(3) is not None:
                pre += [int(x) for x in tm.group(3).split(",")]
            else:
                if tm.group(1):
                    pre += [int(x) for x in tm.group(1).split(",")]
                per = [int(x) for x in tm.group(2).split(",")]
        if any(a < 1 for a in pre[1:]) or any(b < 1 for b in per):
            raise CFSyntaxError(f"partial quotients beyond a0 must be >= 1: {text!r}")
        return cls(pre, per)

    def render(self) -> str:
        parts = [str(a) for a in self.preperiod[1:]]
        if self.period:
            parts.append("(" + ", ".join(str(b) for b in self.period) + ")")
        if not parts:
            return f"[{self.preperiod[0]}]"
        return f"[{self.preperiod[0]}; " + ", ".join(parts) + "]"

    __str__ = render

    # -- value ---------------------------------------------------------------

    def value(self) -> QuadReal:
        """Exact value as a QuadReal (rational values have q == 0)."""
        if self.is_rational:
            v = Fraction(self.preperiod[-1])
            for a in reversed(self.preperiod[:-1]):
                v = a + 1 / v
            return QuadReal.from_fraction(v)
        x = _purely_periodic_value(self.period)
        for a in reversed(self.preperiod):
            x = a + 1 / x
        return x

    # -- convergents -----------------------------------------------------

    def convergents(self, t_max: int) -> list[Convergent]:
        """Convergents p_t/q_t for t = 0..t_max via the standard recurrence."""
        if t_max < 0:
            raise ValueError("t_max must be >= 0")
        out = []
        p_prev, q_prev = 1, 0
        p_cur, q_cur = self.partial_quotient(0), 1
        out.append(Convergent(0, p_cur, q_cur))
        for t in range(1, t_max + 1):
            a = self.partial_quotient(t)
            p_cur, p_prev = a * p_cur + p_prev, p_cur
            q_cur, q_prev = a * q_cur + q_prev, q_cur
            out.append(Convergent(t, p_cur, q_cur))
        return out

    # -- Lagrange constant -------------------------------------------------

    def lagrange_constant(self) -> QuadReal:
        """limsup_t ( [a_{t+1}; a_{t+2}, ...] + [0; a_t, ..., a_1] ), exact.

        Along the periodic tail the forward term is purely periodic and the
        backward term converges to the purely periodic value of the reversed
        cycle, so the limsup is the maximum over cycle offsets of
        forward + 1/backward, both evaluated exactly.
        """
        if self.is_rational:
            raise ValueError("Lagrange constant needs an irrational value")
        cycle = self.period
        best: QuadReal | None = None
        for j in range(len(cycle)):
            rot = cycle[j:] + cycle[:j]
            fwd = _purely_periodic_value(rot)
            bwd = _purely_periodic_value(tuple(reversed(rot)))
            cand = fwd + 1 / bwd
            if best is None or cand.compare(best) > 0:
                best = cand
        return best

    # -- equivalence -------------------------------------------------------

    def equivalent(self, other: "ContinuedFraction") -> bool:
        """True when the expansions eventually share a common tail."""
        if self.is_rational or other.is_rational:
            raise ValueError("tail equivalence is defined for periodic expansions")
        a, b = self.period, other.period
        if len(a) != len(b):
            return False
        doubled = a + a
        return any(doubled[i : i + len(b)] == b for i in range(len(a)))


def _purely_periodic_value(cycle: tuple[int, ...]) -> QuadReal:
    """Value of the purely periodic expansion [c0; c1, ..., c0, c1, ...].

    The repeating block acts as a Moebius map z -> (az + b)/(cz + d); the
    value is the positive fixed point.
    """
    a, b, c, d = 1, 0, 0, 1
    for x in cycle:
        a, b, c, d = a * x + b, a, c * x + d, c
    disc = (a - d) * (a - d) + 4 * b * c
    return QuadReal(a - d, 1, disc, 2 * c)


# Operation-style aliases; the methods above carry the behavior.

def parse_cf(text: str) -> ContinuedFraction:
    return ContinuedFraction.parse(text)


def render_cf(cf: ContinuedFraction) -> str:
    return cf.render()


def value_of(cf: ContinuedFraction) -> QuadReal:
    return cf.value()


def convergents(cf: ContinuedFraction, t_max: int) -> list[Convergent]:
    return cf.convergents(t_max)


def lagrange_constant(cf: ContinuedFraction) -> QuadReal:
    return cf.lagrange_constant()


def are_equivalent(a: ContinuedFraction, b: ContinuedFraction) -> bool:
    return a.equivalent(b)
