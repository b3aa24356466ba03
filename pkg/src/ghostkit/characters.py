"""Doubly truncated graded dimensions (ghost weight x conformal weight).

A character here is a table ``(j, h) -> dim`` of simultaneous weight-space
dimensions, truncated in two directions: conformal weights up to a bound
and ghost weights inside a window.  Both truncations are necessary because
fixed-``h`` slices are infinite in the ghost direction (the vacuum module
has ground states at every nonpositive ghost weight).

Two independent routes compute the untwisted simple characters:

* :func:`pbw_character_oracle` literally enumerates monomials of negative
  modes over the ground states -- the ground truth;
* :func:`character` uses a generating-function count of the free monoid
  and regrades columns through the spectral-flow weight map.

Characters of non-simple indecomposables are the sums of their composition
factors' characters (graded dimension ignores the filtration), and
characters of formal sums are linear.

Transformed series keep a per-column certified bound ``col_hmax``: entries
at or below the bound are complete, nothing is claimed above it.  All
comparisons in tests intersect certified regions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .modules import Module, Typ, Vac, composition_factors
from .weights import flow_weight, weight


class TruncationError(ValueError):
    """Raised when a transform leaves no certified entries at all."""


@dataclass(frozen=True, eq=False)
class CharSeries:
    """A truncated character table with per-column certified bounds."""

    col_hmax: Mapping[Fraction, Fraction]
    coeffs: Mapping[tuple[Fraction, Fraction], int]

    def columns(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self.col_hmax))

    def bound(self, j) -> Fraction:
        return self.col_hmax[Fraction(j)]

    def coeff(self, j, h) -> int:
        jj, hh = Fraction(j), Fraction(h)
        if jj not in self.col_hmax:
            raise KeyError(f"ghost column {jj} outside the computed window")
        if hh > self.col_hmax[jj]:
            raise TruncationError(f"h={hh} above certified bound in column {jj}")
        return self.coeffs.get((jj, hh), 0)

    def entries(self) -> Iterator[tuple[Fraction, Fraction, int]]:
        for (j, h), d in sorted(self.coeffs.items()):
            yield j, h, d

    def column_profile(self, j) -> dict[Fraction, int]:
        jj = Fraction(j)
        return {h: d for (c, h), d in self.coeffs.items() if c == jj}

    def __add__(self, other: "CharSeries") -> "CharSeries":
        cols = set(self.col_hmax) & set(other.col_hmax)
        bounds = {j: min(self.col_hmax[j], other.col_hmax[j]) for j in cols}
        coeffs: dict[tuple[Fraction, Fraction], int] = {}
        for src in (self.coeffs, other.coeffs):
            for (j, h), d in src.items():
                if j in bounds and h <= bounds[j]:
                    coeffs[(j, h)] = coeffs.get((j, h), 0) + d
        return CharSeries(bounds, coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, CharSeries)
                and dict(self.col_hmax) == dict(other.col_hmax)
                and dict(self.coeffs) == dict(other.coeffs))

    def agrees_with(self, other: "CharSeries", *, min_points: int = 1) -> bool:
        """Exact agreement on the intersection of certified regions."""
        cols = set(self.col_hmax) & set(other.col_hmax)
        compared = 0
        for j in cols:
            bound = min(self.col_hmax[j], other.col_hmax[j])
            mine = {h: d for h, d in self.column_profile(j).items() if h <= bound}
            theirs = {h: d for h, d in other.column_profile(j).items() if h <= bound}
            if mine != theirs:
                return False
            compared += len(mine)
        return compared >= min_points


def _parse_window(jwindow) -> tuple[Fraction, Fraction]:
    jmin, jmax = Fraction(jwindow[0]), Fraction(jwindow[1])
    if jmin > jmax:
        raise ValueError(f"empty ghost window {jwindow}")
    return jmin, jmax


def free_monomial_counts(max_weight: int) -> dict[tuple[int, int], int]:
    """Count monomials in the free negative modes by (ghost, weight).

    Generators: one ghost-raising and one ghost-lowering mode at every
    positive integer weight, each of unbounded multiplicity.
    """
    if max_weight < 0:
        return {}
    width = max_weight
    table = [[0] * (2 * width + 1) for _ in range(max_weight + 1)]
    table[0][width] = 1
    for n in range(1, max_weight + 1):
        for s in (1, -1):
            for w in range(n, max_weight + 1):
                row, prev = table[w], table[w - n]
                for g in range(2 * width + 1):
                    gp = g - s
                    if 0 <= gp <= 2 * width and prev[gp]:
                        row[g] += prev[gp]
    out = {}
    for w in range(max_weight + 1):
        for g in range(-width, width + 1):
            c = table[w][g + width]
            if c:
                out[(g, w)] = c
    return out


def _enumerate_free_monomials(max_weight: int) -> dict[tuple[int, int], int]:
    # Independent route: explicit recursive enumeration, one monomial at a time.
    counts: dict[tuple[int, int], int] = {}
    gens = [(n, s) for n in range(1, max_weight + 1) for s in (1, -1)]

    def rec(idx: int, ghost: int, wt: int):
        counts[(ghost, wt)] = counts.get((ghost, wt), 0) + 1
        for i in range(idx, len(gens)):
            n, s = gens[i]
            if wt + n <= max_weight:
                rec(i, ghost + s, wt + n)

    rec(0, 0, 0)
    return counts


def _vacuum_column(free: Mapping[tuple[int, int], int], j: int, h: int) -> int:
    # Ground states sit at ghost weights 0, -1, -2, ...; a monomial of ghost
    # charge g on ground state -k lands at ghost weight g - k.
    if h < 0:
        return 0
    return sum(free.get((g, h), 0) for g in range(j, h + 1))


def _relaxed_column(free: Mapping[tuple[int, int], int], h: int) -> int:
    # Ground states exist at every ghost weight in the coset line, so every
    # column has the same profile.
    if h < 0:
        return 0
    return sum(free.get((g, h), 0) for g in range(-h, h + 1))


def pbw_character_oracle(mod: Module, hmax, jwindow) -> CharSeries:
    """Brute-force character of an untwisted simple by monomial enumeration."""
    if not isinstance(mod, (Vac, Typ)) or (isinstance(mod, Vac) and mod.ell != 0) \
            or (isinstance(mod, Typ) and mod.ell != 0):
        raise ValueError(f"oracle only handles untwisted simples, got {mod}")
    jmin, jmax = _parse_window(jwindow)
    hmax = Fraction(hmax)
    wmax = int(hmax) if hmax >= 0 else -1
    free = _enumerate_free_monomials(max(wmax, 0))
    coeffs: dict[tuple[Fraction, Fraction], int] = {}
    bounds: dict[Fraction, Fraction] = {}
    for j in _columns_in_window(mod, 0, jmin, jmax):
        bounds[j] = hmax
        for h in range(0, wmax + 1):
            if isinstance(mod, Vac):
                d = _vacuum_column(free, int(j), h)
            else:
                d = _relaxed_column(free, h)
            if d:
                coeffs[(j, Fraction(h))] = d
    return CharSeries(bounds, coeffs)


def _columns_in_window(base: Module, ell: int, jmin: Fraction, jmax: Fraction):
    """Ghost columns of ``flow(base, ell)`` inside the window."""
    if isinstance(base, Vac):
        offset = Fraction(0)
    else:
        offset = base.coset
    # columns are offset + Z shifted by the flow
    lo = jmin - offset + ell
    first = Fraction(math.ceil(lo))
    col = offset - ell + first
    out = []
    while col <= jmax:
        if col >= jmin:
            out.append(col)
        col += 1
    return out


def _simple_character(base: Module, ell: int, hmax: Fraction,
                      jmin: Fraction, jmax: Fraction) -> dict:
    """Character columns of ``flow(base, ell)`` for untwisted simple ``base``.

    A state of weight ``(j', h')`` in the untwisted module appears at
    ``(j' - ell, h' + ell*j' - ell(ell+1)/2)`` after flowing, so the target
    column ``j`` is fed by source column ``j + ell`` with the conformal
    weight shifted by a per-column offset.
    """
    coeffs: dict[tuple[Fraction, Fraction], int] = {}
    cols = _columns_in_window(base, ell, jmin, jmax)
    half = Fraction(ell * (ell + 1), 2)
    needed = 0
    plans = []
    for j in cols:
        src_j = j + ell
        offset = ell * src_j - half  # target h = source h' + offset
        top_src = hmax - offset
        if top_src >= 0:
            needed = max(needed, int(top_src))
        plans.append((j, src_j, offset, top_src))
    free = free_monomial_counts(needed)
    for j, src_j, offset, top_src in plans:
        if top_src < 0:
            continue
        for hp in range(0, int(top_src) + 1):
            if isinstance(base, Vac):
                d = _vacuum_column(free, int(src_j), hp)
            else:
                d = _relaxed_column(free, hp)
            if d:
                coeffs[(j, hp + offset)] = d
    return cols, coeffs


def character(x, hmax=8, jwindow=(-6, 6)) -> CharSeries:
    """Character of a module or formal sum on the requested truncation."""
    jmin, jmax = _parse_window(jwindow)
    hmax = Fraction(hmax)
    total: dict[tuple[Fraction, Fraction], int] = {}
    bounds: dict[Fraction, Fraction] = {}

    def add_simple(base: Module, ell: int, mult: int):
        cols, coeffs = _simple_character(base, ell, hmax, jmin, jmax)
        for j in cols:
            bounds[j] = hmax
        for key, d in coeffs.items():
            total[key] = total.get(key, 0) + mult * d

    for simple, k in composition_factors(x).items():
        if isinstance(simple, Vac):
            add_simple(Vac(0), simple.ell, k)
        else:
            add_simple(Typ(simple.coset, 0), simple.ell, k)
    return CharSeries(bounds, total)


def char_flow(ch: CharSeries, ell: int, *, require=None) -> CharSeries:
    """Regrade a character by spectral flow, tracking certified bounds.

    Each entry ``(j, h, d)`` moves to ``flow_weight((j, h), ell)``, and the
    certified bound of a target column is the image of the source bound, so
    the result reports exactly which region is determined.  Passing
    ``require = (hmax, (jmin, jmax))`` asserts that the certified image
    covers that region and raises :class:`TruncationError` if the source
    truncation was too shallow for it.
    """
    half = Fraction(ell * (ell + 1), 2)
    bounds: dict[Fraction, Fraction] = {}
    for j_src, b in ch.col_hmax.items():
        j_tgt = j_src - ell
        bounds[j_tgt] = b + ell * j_src - half
    coeffs: dict[tuple[Fraction, Fraction], int] = {}
    for (j, h), d in ch.coeffs.items():
        jt, ht = flow_weight(weight(j, h), ell)
        coeffs[(jt, ht)] = d
    out = CharSeries(bounds, coeffs)
    if require is not None:
        want_hmax = Fraction(require[0])
        jmin, jmax = _parse_window(require[1])
        for j, b in bounds.items():
            if jmin <= j <= jmax and b < want_hmax:
                raise TruncationError(
                    f"column {j} certified only to h <= {b}, need {want_hmax}; "
                    "recompute the source with a larger truncation")
    return out


def char_dual(ch: CharSeries) -> CharSeries:
    """Regrade by the restricted dual: ``(j, h) -> (1 - j, h)``."""
    bounds = {1 - j: b for j, b in ch.col_hmax.items()}
    coeffs = {(1 - j, h): d for (j, h), d in ch.coeffs.items()}
    return CharSeries(bounds, coeffs)
