"""The fusion product engine and the Grothendieck fusion ring.

Fusion is computed on canonical labels.  The algorithm:

1. the vacuum flows are invertible units: ``V[l] x M = flow(M, l)``;
2. flow reduction: both factors are reduced to base flow 0 and the total
   flow is re-applied to the result;
3. relaxed simples fuse additively in the coset, with a staggered module
   appearing exactly when the cosets cancel;
4. projectives form a tensor ideal: fusing a projective with M only sees
   M's composition factors;
5. string times string follows twelve closed decomposition formulas whose
   projective parts are the sums ``S[m,n;k]`` expanded by
   :func:`expand_projsum`.

The string formulas are stated for ordered length parameters (``m >= n``
after commutative reordering).  Where no ordering meets that guard the same
formula shape is applied and the result is flagged ``guard_extended``; with
``strict_guards`` such products raise :class:`GuardExtensionError` instead.
Every guard-extended product is still required (and tested) to satisfy the
Grothendieck ring homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modules import (
    BStr, FormalSum, Module, Proj, TStr, Typ, Vac, as_sum, bstr,
    composition_factors, sort_key, tstr,
)
from .functors import flow


class GuardExtensionError(ValueError):
    """Raised in strict mode when a fusion product needs the guard extension."""


@dataclass(frozen=True)
class ProjSum:
    """The compact projective sum ``S[m,n;k]``.

    Expands to ``sum_r N_r * P[k + 2r - 1]`` over ``r = 1..m+n-1`` with
    ``N_r = min(r, m, n, m+n-r)``; total multiplicity is ``m*n``.
    """

    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"S[m,n;k] requires m, n >= 1, got m={self.m}, n={self.n}")

    def expand(self) -> FormalSum:
        return _projsum(self.m, self.n, self.k)

    def __str__(self):
        return f"S[{self.m},{self.n};{self.k}]"


def _projsum(m: int, n: int, k: int) -> FormalSum:
    # Internal form: m or n may be 0, giving the empty sum.
    if m <= 0 or n <= 0:
        return FormalSum()
    terms = []
    for r in range(1, m + n):
        mult = min(r, m, n, m + n - r)
        terms.append((Proj(k + 2 * r - 1), mult))
    return FormalSum(terms)


def expand_projsum(m: int, n: int, k: int) -> FormalSum:
    """Expanded form of ``S[m,n;k]``; rejects nonpositive ``m`` or ``n``."""
    return ProjSum(int(m), int(n), int(k)).expand()


@dataclass(frozen=True)
class FusionResult:
    """A fusion decomposition plus display metadata.

    ``total`` is the full expansion.  ``projective_part`` collects the
    staggered summands, with ``compact`` giving their ``S[m,n;k]`` forms
    where the string formulas produced them.
    """

    total: FormalSum
    guard_extended: bool
    projective_part: FormalSum
    compact: tuple[str, ...]


def _base(mod: Module) -> tuple[Module, int]:
    if isinstance(mod, Vac):
        return Vac(0), mod.ell
    if isinstance(mod, Typ):
        return Typ(mod.coset, 0), mod.ell
    if isinstance(mod, BStr):
        return BStr(mod.n, 0), mod.m
    if isinstance(mod, TStr):
        return TStr(mod.n, 0), mod.m
    if isinstance(mod, Proj):
        return Proj(0), mod.m
    raise TypeError(f"not a canonical module: {mod!r}")


def _string_fuse(a: Module, b: Module) -> tuple[FormalSum, bool, tuple[ProjSum, ...]]:
    """Fusion of two base-flow-0 strings via the closed formulas."""
    same_letter = type(a) is type(b)
    cls = type(a)
    la, lb = a.n, b.n
    if same_letter:
        if la % 2 == 1 and lb % 2 == 1:
            p, q = sorted(((la - 1) // 2, (lb - 1) // 2), reverse=True)
            body = FormalSum.of(cls(la + lb - 1, 0))
            s = ProjSum(p, q, 1) if min(p, q) >= 1 else None
        elif la % 2 == 0 and lb % 2 == 0:
            p, q = sorted((la // 2, lb // 2), reverse=True)
            body = FormalSum.of(cls(2 * q, 2 * p - 1)) + FormalSum.of(cls(2 * q, 0))
            s = ProjSum(p - 1, q, 1) if p - 1 >= 1 else None
            return _with_sum(body, s, guard=False)
        else:
            odd, even = (a, b) if la % 2 == 1 else (b, a)
            p, q = (odd.n - 1) // 2, even.n // 2
            body = FormalSum.of(cls(even.n, 0))
            body_s = ProjSum(p, q, 1)
            return _with_sum(body, body_s, guard=p < q)
        return _with_sum(body, s, guard=False)

    tmod, bmod = (a, b) if isinstance(a, TStr) else (b, a)
    lt, lbm = tmod.n, bmod.n
    if lt % 2 == 1 and lbm % 2 == 1:
        p, q = (lt - 1) // 2, (lbm - 1) // 2
        if p >= q:
            body = FormalSum.of(tstr(2 * (p - q) + 1, 2 * q))
            s = ProjSum(p + 1, q, 0) if q >= 1 else None
        else:
            body = FormalSum.of(bstr(2 * (q - p) + 1, 2 * p))
            s = ProjSum(q + 1, p, 0) if p >= 1 else None
        return _with_sum(body, s, guard=False)
    if lt % 2 == 0 and lbm % 2 == 1:
        p, q = lt // 2, (lbm - 1) // 2
        body = FormalSum.of(TStr(lt, 2 * q))
        s = ProjSum(p, q, 0) if q >= 1 else None
        return _with_sum(body, s, guard=p < q and q >= 1)
    if lt % 2 == 1 and lbm % 2 == 0:
        p, q = lbm // 2, (lt - 1) // 2
        body = FormalSum.of(BStr(lbm, 2 * q))
        s = ProjSum(p, q, 0) if q >= 1 else None
        return _with_sum(body, s, guard=p < q and q >= 1)
    p, q = sorted((lt // 2, lbm // 2), reverse=True)
    return _with_sum(FormalSum(), ProjSum(p, q, 0), guard=False)


def _with_sum(body: FormalSum, s: ProjSum | None, *, guard: bool):
    if s is None:
        return body, guard, ()
    return body + s.expand(), guard, (s,)


_BASE_CACHE: dict[tuple, tuple[FormalSum, bool, tuple[ProjSum, ...]]] = {}


def _fuse_base(a: Module, b: Module) -> tuple[FormalSum, bool, tuple[ProjSum, ...]]:
    """Fusion of two modules at base flow 0."""
    if sort_key(a) > sort_key(b):
        a, b = b, a
    key = (a, b)
    hit = _BASE_CACHE.get(key)
    if hit is not None:
        return hit

    if isinstance(a, Vac):
        out = (FormalSum.of(b), False, ())
    elif isinstance(a, Typ) and isinstance(b, Typ):
        s = (a.coset + b.coset) % 1
        if s == 0:
            out = (FormalSum.of(Proj(-1)), False, ())
        else:
            out = (FormalSum.of(Typ(s, 0)) + FormalSum.of(Typ(s, -1)), False, ())
    elif isinstance(a, Typ) and isinstance(b, (BStr, TStr)):
        out = (FormalSum((Typ(a.coset, j), 1) for j in range(b.n)), False, ())
    elif isinstance(a, Typ) and isinstance(b, Proj):
        out = (FormalSum(((Typ(a.coset, -1), 1), (Typ(a.coset, 0), 2),
                          (Typ(a.coset, 1), 1))), False, ())
    elif isinstance(b, Proj) and isinstance(a, (BStr, TStr)):
        out = (FormalSum((Proj(j), 1) for j in range(a.n)), False, ())
    elif isinstance(a, Proj) and isinstance(b, Proj):
        out = (FormalSum(((Proj(-1), 1), (Proj(0), 2), (Proj(1), 1))), False, ())
    elif isinstance(a, (BStr, TStr)) and isinstance(b, (BStr, TStr)):
        out = _string_fuse(a, b)
    else:  # pragma: no cover - dispatch is exhaustive
        raise TypeError(f"cannot fuse {a!r} with {b!r}")

    _BASE_CACHE[key] = out
    return out


_PAIR_CACHE: dict[tuple, tuple[FormalSum, bool, tuple[ProjSum, ...]]] = {}


def _fuse_modules(a: Module, b: Module) -> tuple[FormalSum, bool, tuple[ProjSum, ...]]:
    key = (a, b) if sort_key(a) <= sort_key(b) else (b, a)
    hit = _PAIR_CACHE.get(key)
    if hit is not None:
        return hit
    a0, fa = _base(a)
    b0, fb = _base(b)
    total, guard, sums = _fuse_base(a0, b0)
    shift = fa + fb
    if shift:
        total = flow(total, shift)
        sums = tuple(ProjSum(s.m, s.n, s.k + shift) for s in sums)
    out = (total, guard, sums)
    _PAIR_CACHE[key] = out
    return out


def fuse_detailed(a, b, *, strict_guards: bool = False) -> FusionResult:
    """Fusion with guard flag and compact projective-part display."""
    terms_a, terms_b = as_sum(a).terms, as_sum(b).terms
    collected: list[tuple[Module, int]] = []
    guard_any = False
    compact: list[str] = []
    for ma, ka in terms_a:
        for mb, kb in terms_b:
            part, guard, sums = _fuse_modules(ma, mb)
            if guard:
                guard_any = True
                if strict_guards:
                    raise GuardExtensionError(
                        f"fusion {ma} x {mb} falls outside the stated length guard")
            mult = ka * kb
            collected.extend((m, mult * k) for m, k in part.terms)
            for s in sums:
                compact.extend([str(s)] * mult)
    total = FormalSum(collected)
    projective = FormalSum((m, k) for m, k in total if isinstance(m, (Typ, Proj)))
    return FusionResult(total, guard_any, projective, tuple(compact))


def fuse(a, b, *, strict_guards: bool = False) -> FormalSum:
    """Fusion product of modules or formal sums, fully expanded."""
    return fuse_detailed(a, b, strict_guards=strict_guards).total


@dataclass(frozen=True)
class GrothClass:
    """An element of the Grothendieck fusion ring: an integer combination of
    simple classes with multiplication induced by fusion."""

    terms: tuple[tuple[Module, int], ...]

    @classmethod
    def from_dict(cls, d: dict[Module, int]) -> "GrothClass":
        items = tuple(sorted(((m, c) for m, c in d.items() if c),
                             key=lambda t: sort_key(t[0])))
        for m, _ in items:
            if not isinstance(m, (Vac, Typ)):
                raise ValueError(f"Grothendieck classes live on simples, got {m}")
        return cls(items)

    def __add__(self, other: "GrothClass") -> "GrothClass":
        d = dict(self.terms)
        for m, c in other.terms:
            d[m] = d.get(m, 0) + c
        return GrothClass.from_dict(d)

    def __mul__(self, other: "GrothClass") -> "GrothClass":
        d: dict[Module, int] = {}

        def bump(mod, c):
            d[mod] = d.get(mod, 0) + c

        for s1, c1 in self.terms:
            for s2, c2 in other.terms:
                c = c1 * c2
                if isinstance(s1, Vac) and isinstance(s2, Vac):
                    bump(Vac(s1.ell + s2.ell), c)
                elif isinstance(s1, Vac) and isinstance(s2, Typ):
                    bump(Typ(s2.coset, s1.ell + s2.ell), c)
                elif isinstance(s1, Typ) and isinstance(s2, Vac):
                    bump(Typ(s1.coset, s1.ell + s2.ell), c)
                else:
                    sco = (s1.coset + s2.coset) % 1
                    k = s1.ell + s2.ell
                    if sco == 0:
                        bump(Vac(k - 2), c)
                        bump(Vac(k - 1), 2 * c)
                        bump(Vac(k), c)
                    else:
                        bump(Typ(sco, k), c)
                        bump(Typ(sco, k - 1), c)
        return GrothClass.from_dict(d)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"[{m}]" if c == 1 else f"{c}*[{m}]" for m, c in self.terms)


def groth_class(x) -> GrothClass:
    """Image of a module or formal sum in the Grothendieck group."""
    return GrothClass.from_dict(composition_factors(x))


def groth_product(a: GrothClass, b: GrothClass) -> GrothClass:
    """Product in the Grothendieck fusion ring."""
    return a * b


def unit_class() -> GrothClass:
    return groth_class(Vac(0))


def clear_cache():
    _BASE_CACHE.clear()
    _PAIR_CACHE.clear()
