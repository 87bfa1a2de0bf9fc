"""Subtractive continued-fraction calculus.

A list [c1, c2, ..., cn] stands for the nested fraction

    1 / (c1 - 1/(c2 - ... - 1/cn))

All values are exact rationals.  Besides plain evaluation this module
implements the five rewriting identities used when normalizing tangle
fractions, and conversion of a reduced fraction into the two normal forms
consumed by the genus formulas:

* strict form  [2a1, b1, 2a2, b2, ...]  (odd-position entries even; whenever
  |a_j| = 1 the pair must satisfy a_j * b_j < 0), and
* even form    [2c1, 2c2, ..., 2cm]     (every entry even).

Neither normal form is unique; correctness is defined by round-trip
evaluation plus the structural invariants, never by entry-list equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

from .errors import DivisionByZero, InvalidInput, PatternMismatch

__all__ = [
    "ContinuedFraction",
    "StrictCF",
    "EvenCF",
    "evaluate",
    "rewrite_identity",
    "to_strict_cf",
    "to_even_cf",
    "cf_to_text",
    "parse_cf_text",
]


def _evaluate_entries(entries):
    """Exact value of the subtractive CF; raises DivisionByZero(position)."""
    if not entries:
        raise InvalidInput("empty continued fraction")
    tail = Fraction(entries[-1])
    # walk inside-out: E_i = c_i - 1/E_{i+1}
    for pos in range(len(entries) - 2, -1, -1):
        if tail == 0:
            raise DivisionByZero(pos + 2)
        tail = Fraction(entries[pos]) - 1 / tail
    if tail == 0:
        raise DivisionByZero(1)
    return 1 / tail


@dataclass(frozen=True)
class ContinuedFraction:
    entries: tuple

    def __init__(self, entries):
        entries = tuple(int(c) for c in entries)
        _evaluate_entries(entries)  # validates at construction
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def value(self):
        return _evaluate_entries(self.entries)


def evaluate(cf) -> Fraction:
    if isinstance(cf, (ContinuedFraction, StrictCF, EvenCF)):
        return _evaluate_entries(tuple(cf.entries))
    return _evaluate_entries(tuple(cf))


@dataclass(frozen=True)
class StrictCF:
    """[2a1, b1, ..., 2aq, bq] with the sign condition on |a_j| = 1."""

    pairs: tuple  # of (2a_j, b_j)

    def __init__(self, pairs):
        pairs = tuple((int(a), int(b)) for a, b in pairs)
        if not pairs:
            raise InvalidInput("empty strict continued fraction")
        for two_a, b in pairs:
            if two_a % 2 != 0 or two_a == 0:
                raise InvalidInput(f"even-position entry {two_a} must be even nonzero")
            if b == 0:
                raise InvalidInput("b_j entries must be nonzero")
            if abs(two_a) == 2 and (two_a // 2) * b > 0:
                raise InvalidInput(f"strictness violated: a_j={two_a//2}, b_j={b}")
        object.__setattr__(self, "pairs", pairs)

    @property
    def entries(self):
        out = []
        for two_a, b in self.pairs:
            out.extend((two_a, b))
        return tuple(out)

    def value(self):
        return _evaluate_entries(self.entries)

    def b_total(self):
        """sum of |b_j| — the quantity the odd-type genus formula consumes."""
        return sum(abs(b) for _, b in self.pairs)


@dataclass(frozen=True)
class EvenCF:
    entries: tuple

    def __init__(self, entries):
        entries = tuple(int(c) for c in entries)
        if not entries:
            raise InvalidInput("empty even continued fraction")
        for c in entries:
            if c % 2 != 0 or c == 0:
                raise InvalidInput(f"entry {c} must be even and nonzero")
        _evaluate_entries(entries)
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def value(self):
        return _evaluate_entries(self.entries)

    def leading_run(self, value):
        """Length of the initial run of entries equal to `value`."""
        n = 0
        for c in self.entries:
            if c != value:
                break
            n += 1
        return n


# ---------------------------------------------------------------------------
# rewrite identities


def rewrite_identity(cf: ContinuedFraction, rule: str, position: int):
    """Apply one of the five rewrite rules at a 1-based position.

    Rules "3.1"-"3.3" return a ContinuedFraction; "3.4"/"3.5" return
    (offset, ContinuedFraction) since they produce an additive constant.
    Raises PatternMismatch when the rule's pattern is absent.
    """
    c = list(cf.entries)
    n = len(c)
    if rule == "3.1":
        # [..., c_{n-1}, +-2] = [..., c_{n-1} -+ 1, -+2]
        if position != n or n < 2 or abs(c[-1]) != 2:
            raise PatternMismatch(f"rule 3.1 needs trailing +-2 at position {n}")
        s = c[-1] // 2
        return ContinuedFraction(c[:-2] + [c[-2] - s, -c[-1]])
    if rule == "3.2":
        # interior +-1 folds into both neighbours
        i = position - 1
        if not (1 <= i <= n - 2) or abs(c[i]) != 1:
            raise PatternMismatch("rule 3.2 needs an interior +-1 with i >= 2")
        s = c[i]
        return ContinuedFraction(c[: i - 1] + [c[i - 1] - s] + [c[i + 1] - s] + c[i + 2 :])
    if rule == "3.3":
        # trailing +-1 folds into its neighbour
        if position != n or n < 2 or abs(c[-1]) != 1:
            raise PatternMismatch("rule 3.3 needs trailing +-1")
        return ContinuedFraction(c[:-2] + [c[-2] - c[-1]])
    if rule == "3.4":
        k = position
        if k < 1 or k > n or any(v != 2 for v in c[:k]):
            raise PatternMismatch("rule 3.4 needs a leading run of 2's of length k")
        rest = c[k:]
        if rest:
            return 1, ContinuedFraction([-(k + 1), rest[0] - 1] + rest[1:])
        return 1, ContinuedFraction([-(k + 1)])
    if rule == "3.5":
        k = position
        if k < 1 or k > n or any(v != -2 for v in c[:k]):
            raise PatternMismatch("rule 3.5 needs a leading run of -2's of length k")
        rest = c[k:]
        if rest:
            return -1, ContinuedFraction([k + 1, rest[0] + 1] + rest[1:])
        return -1, ContinuedFraction([k + 1])
    raise ValueError(f"unknown rule {rule!r}")


# ---------------------------------------------------------------------------
# normal forms via bounded backtracking expansion
#
# Greedy nearest-entry expansion terminates (each step keeps |entry - target|
# <= 1 so the fraction height never grows and usually shrinks), but parity and
# the strictness sign condition occasionally rule the nearest choice out, so a
# small DFS over the 2-3 closest admissible entries is used instead.


def _expansion_candidates(target: Fraction, parity):
    """Admissible next entries near `target`, closest first.

    parity: "even" or "any".  Entries of value 0 are never admissible.
    """
    out = []
    if parity == "even":
        base = 2 * (target / 2).__floor__()
        cand = [base, base + 2, base - 2, base + 4]
    else:
        base = target.__floor__()
        cand = [base, base + 1, base - 1, base + 2]
    for v in cand:
        if v != 0 and v not in out:
            out.append(v)
    out.sort(key=lambda v: (abs(Fraction(v) - target), abs(v)))
    return out[:3]


def _expand(target, parity_cycle, phase, prefix, out, depth, max_depth=40):
    """DFS for an entry list with the requested parity pattern.

    target is E_j (the value the remaining tail must represent, as
    c_j - 1/E_{j+1}); termination requires hitting an exact integer at an
    allowed phase.  Appends the first full solution to `out`.
    """
    if out or depth > max_depth:
        return
    parity, may_end = parity_cycle[phase]
    for e in _expansion_candidates(target, parity):
        if e == target:
            if may_end:
                sol = prefix + [e]
                out.append(sol)
                return
            continue
        nxt = 1 / (e - target)
        # keep expansions contracting: the classical height argument needs
        # |e - target| <= 1; allow a little slack for the backtracker
        if abs(e - Fraction(target)) > 2:
            continue
        _expand(nxt, parity_cycle, 1 - phase if len(parity_cycle) == 2 else 0, prefix + [e], out, depth + 1, max_depth)
        if out:
            return


def to_strict_cf(x) -> StrictCF:
    """Strict continued fraction of x = beta/alpha (alpha odd, |x| < 1/2).

    The strict form's leading entry is a nonzero even integer, which forces
    |value| < 1/2; fractions in (1/2, 1) have no strict expansion (exhaustively
    checked), so callers must first absorb a unit into the surrounding twist
    count gamma to reach the half-range representative.
    """
    x = Fraction(x)
    alpha, beta = x.denominator, x.numerator
    if alpha <= 1 or alpha % 2 == 0 or beta == 0 or 2 * abs(beta) >= alpha:
        raise InvalidInput(f"{x} is not a half-range odd-denominator tangle fraction")
    target = 1 / x  # E_1
    out = []
    # positions alternate: even entry (no stop), then free entry (may stop)
    _expand(target, (("even", False), ("any", True)), 0, [], out, 0, max_depth=2 * alpha + 4)
    sols = []
    if out:
        entries = out[0]
        pairs = list(zip(entries[0::2], entries[1::2]))
        try:
            sols.append(StrictCF(pairs))
        except InvalidInput:
            pass
    if not sols:
        # wider search: explore all candidate branches, not just the first hit
        sols = _strict_search(target)
    for s in sols:
        if s.value() == x:
            return s
    raise InvalidInput(f"no strict continued fraction found for {x}")


def _strict_search(target):
    """Exhaustive bounded search used when the greedy DFS output violates
    the strictness sign condition."""
    results = []

    def rec(t, phase, prefix):
        if len(prefix) > 16 or results:
            return
        parity = "even" if phase == 0 else "any"
        for e in _expansion_candidates(t, parity):
            if phase == 0 and abs(e) == 2:
                pass  # allowed; sign condition checked on the finished list
            if e == t:
                if phase == 1:
                    entries = prefix + [e]
                    try:
                        results.append(StrictCF(list(zip(entries[0::2], entries[1::2]))))
                        return
                    except InvalidInput:
                        continue
                continue
            if abs(Fraction(e) - t) > 2:
                continue
            rec(1 / (e - t), 1 - phase, prefix + [e])

    rec(target, 0, [])
    return results


def to_even_cf(x) -> EvenCF:
    """Even continued fraction of x = beta/alpha (exactly one of them even)."""
    x = Fraction(x)
    alpha, beta = x.denominator, x.numerator
    if alpha <= 1 or not (-alpha < beta < alpha) or beta == 0:
        raise InvalidInput(f"{x} is not a normalized tangle fraction")
    if (alpha + beta) % 2 == 0:
        raise InvalidInput(f"{x}: exactly one of numerator/denominator must be even")
    out = []
    _expand(1 / x, (("even", True),), 0, [], out, 0, max_depth=2 * alpha + 4)
    if not out:
        raise InvalidInput(f"no even continued fraction found for {x}")
    cf = EvenCF(out[0])
    assert cf.value() == x
    return cf


# ---------------------------------------------------------------------------
# text form: "[c1,...,cn]" with optional additive prefix, e.g. "1+[-3,2]"

_CF_RE = re.compile(r"^\s*(?:(-?\d+)\s*\+\s*)?\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*$")


def cf_to_text(cf, offset=0):
    body = "[" + ",".join(str(c) for c in cf.entries) + "]"
    return body if offset == 0 else f"{offset}+{body}"


def parse_cf_text(text):
    """-> (offset, ContinuedFraction)."""
    m = _CF_RE.match(text)
    if m is None:
        raise InvalidInput(f"not a continued-fraction literal: {text!r}")
    offset = int(m.group(1)) if m.group(1) else 0
    entries = [int(t) for t in m.group(2).split(",")]
    return offset, ContinuedFraction(entries)
