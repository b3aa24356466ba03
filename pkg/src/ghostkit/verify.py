"""Property suites behind the ``verify`` command.

Each suite returns a list of :class:`Check` results; a suite passes when
every check does.  The sweeps run over a configurable pool of canonical
modules (all five families, bounded string length and flow, a few cosets).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import characters, homalg, rigidity
from .config import Config
from .functors import dual_restricted, dual_star, dual_tensor, flow
from .fusion import (
    expand_projsum, fuse, fuse_detailed, groth_class, groth_product,
)
from .modules import (
    BStr, FormalSum, Module, Proj, TStr, Typ, Vac, bstr, composition_factors,
    is_projective, proj, sequence_catalog, tstr, typ, vac,
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok" if self.passed else "FAIL"
        suffix = f" ({self.detail})" if self.detail else ""
        return f"{status:4s} {self.name}{suffix}"


def pool_modules(max_length: int = 7, max_flow: int = 3,
                 cosets=(Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))) -> list[Module]:
    flows = range(-max_flow, max_flow + 1)
    pool: list[Module] = [vac(l) for l in flows]
    pool += [typ(c, l) for c in cosets for l in flows]
    pool += [bstr(n, m) for n in range(2, max_length + 1) for m in flows]
    pool += [tstr(n, m) for n in range(2, max_length + 1) for m in flows]
    pool += [proj(m) for m in flows]
    return pool


def _pair_cache(pool):
    cache: dict[tuple[Module, Module], FormalSum] = {}
    guard_pairs = []
    mismatches = 0
    for a, b in itertools.combinations_with_replacement(pool, 2):
        res = fuse_detailed(a, b)
        if res.total != fuse(b, a):
            mismatches += 1
        cache[(a, b)] = cache[(b, a)] = res.total
        if res.guard_extended:
            guard_pairs.append((a, b))
    return cache, guard_pairs, mismatches


def fusion_suite(cfg: Config | None = None) -> list[Check]:
    cfg = cfg or Config()
    pool = pool_modules(cfg.pool_max_length, cfg.pool_max_flow, cfg.pool_cosets)
    checks: list[Check] = []

    pairs, guard_pairs, mismatches = _pair_cache(pool)
    npairs = len(pool) * (len(pool) + 1) // 2
    checks.append(Check(
        "commutativity", mismatches == 0,
        f"{npairs} unordered pairs, {len(guard_pairs)} guard-extended"))

    sum_cache: dict[tuple[FormalSum, Module], FormalSum] = {}

    def fuse_sum(s: FormalSum, c: Module) -> FormalSum:
        key = (s, c)
        hit = sum_cache.get(key)
        if hit is None:
            hit = fuse(s, c)
            sum_cache[key] = hit
        return hit

    bad = 0
    total = 0
    example = ""
    for a, b, c in itertools.combinations_with_replacement(pool, 3):
        total += 1
        left = fuse_sum(pairs[(a, b)], c)
        right = fuse_sum(pairs[(b, c)], a)
        if left != right:
            bad += 1
            if not example:
                example = f"({a}) x ({b}) x ({c})"
    checks.append(Check("associativity", bad == 0,
                        f"{total} unordered triples" + (f"; first failure {example}" if bad else "")))

    bad = 0
    for a, b in itertools.combinations_with_replacement(pool, 2):
        for k, l in ((1, 0), (-2, 1), (3, -1)):
            if fuse(flow(a, k), flow(b, l)) != flow(pairs[(a, b)], k + l):
                bad += 1
    checks.append(Check("flow compatibility", bad == 0, "shifts (1,0), (-2,1), (3,-1)"))

    bad = sum(1 for a, b in itertools.combinations_with_replacement(pool, 2)
              if fuse(dual_star(a), dual_star(b)) != dual_star(pairs[(a, b)]))
    checks.append(Check("star-dual compatibility", bad == 0, f"{npairs} pairs"))

    bad = 0
    for a, b in itertools.combinations_with_replacement(pool, 2):
        if groth_class(pairs[(a, b)]) != groth_product(groth_class(a), groth_class(b)):
            bad += 1
    checks.append(Check("Grothendieck homomorphism", bad == 0,
                        f"{npairs} pairs incl. {len(guard_pairs)} guard-extended"))

    bad = sum(1 for m in range(1, 13) for n in range(1, 13)
              if expand_projsum(m, n, 0).total() != m * n)
    checks.append(Check("projective sum totals", bad == 0, "m, n <= 12"))

    bad = 0
    for mod in pool:
        if isinstance(mod, Vac):
            expected = FormalSum.of(vac(0))
        elif isinstance(mod, Typ):
            expected = FormalSum.of(proj(0))
        else:
            continue
        if fuse(dual_tensor(mod), mod) != expected:
            bad += 1
    checks.append(Check("rigidity trace on simples", bad == 0))
    return checks


def _delta(i: int, j: int) -> int:
    return 1 if i == j else 0


def hom_table_expected(row: Module, col: Module) -> int | None:
    """Closed-form Hom dimensions for the four short families, by flow."""
    def kind(m):
        if isinstance(m, Vac):
            return "V", m.ell
        if isinstance(m, TStr) and m.n == 2:
            return "T2", m.m
        if isinstance(m, BStr) and m.n == 2:
            return "B2", m.m
        if isinstance(m, Proj):
            return "P", m.m
        return None, 0

    rk, n = kind(row)
    ck, m = kind(col)
    if rk is None or ck is None:
        return None
    table = {
        ("V", "V"): _delta(n, m),
        ("V", "T2"): _delta(n, m + 1),
        ("V", "B2"): _delta(n, m),
        ("V", "P"): _delta(n, m),
        ("T2", "V"): _delta(n, m),
        ("T2", "T2"): _delta(n, m) + _delta(n, m + 1),
        ("T2", "B2"): _delta(n, m),
        ("T2", "P"): _delta(n, m - 1) + _delta(n, m),
        ("B2", "V"): _delta(n, m - 1),
        ("B2", "T2"): _delta(n, m),
        ("B2", "B2"): _delta(n, m - 1) + _delta(n, m),
        ("B2", "P"): _delta(n, m - 1) + _delta(n, m),
        ("P", "V"): _delta(n, m),
        ("P", "T2"): _delta(n, m) + _delta(n, m + 1),
        ("P", "B2"): _delta(n, m) + _delta(n, m + 1),
        ("P", "P"): _delta(n, m - 1) + 2 * _delta(n, m) + _delta(n, m + 1),
    }
    return table[(rk, ck)]


def ext_table_expected(row: Module, col: Module) -> int | None:
    def kind(m):
        if isinstance(m, Vac):
            return "V", m.ell
        if isinstance(m, TStr) and m.n == 2:
            return "T2", m.m
        if isinstance(m, BStr) and m.n == 2:
            return "B2", m.m
        return None, 0

    rk, n = kind(row)
    ck, m = kind(col)
    if rk is None or ck is None:
        return None
    table = {
        ("V", "V"): _delta(n, m - 1) + _delta(n, m + 1),
        ("V", "T2"): _delta(n, m + 2),
        ("V", "B2"): _delta(n, m - 1),
        ("T2", "V"): _delta(n, m + 1),
        ("T2", "T2"): _delta(n, m + 1) + _delta(n, m + 2),
        ("T2", "B2"): 0,
        ("B2", "V"): _delta(n, m - 2),
        ("B2", "T2"): 0,
        ("B2", "B2"): _delta(n, m - 2) + _delta(n, m - 1),
    }
    return table[(rk, ck)]


def _short_family(flow_idx: int) -> list[Module]:
    return [vac(flow_idx), tstr(2, flow_idx), bstr(2, flow_idx), proj(flow_idx)]


def homalg_suite(cfg: Config | None = None) -> list[Check]:
    cfg = cfg or Config()
    checks: list[Check] = []

    bad = 0
    for off in range(-4, 5):
        for row in _short_family(0):
            for col in _short_family(off):
                want = hom_table_expected(row, col)
                if want is not None and homalg.hom_dim(row, col) != want:
                    bad += 1
    checks.append(Check("hom table", bad == 0, "flow offsets -4..4"))

    bad = 0
    for off in range(-4, 5):
        for row in _short_family(0)[:3]:
            for col in _short_family(off)[:3]:
                want = ext_table_expected(row, col)
                if want is not None and homalg.ext_dim(row, col) != want:
                    bad += 1
    checks.append(Check("ext table", bad == 0, "flow offsets -4..4"))

    bad = 0
    for k in range(-4, 5):
        for l in range(-4, 5):
            want = 1 if abs(k - l) == 1 else 0
            if homalg.ext_dim(vac(k), vac(l)) != want:
                bad += 1
        if homalg.ext_dim(typ(Fraction(1, 3), k), vac(0)) != 0:
            bad += 1
        if homalg.ext_dim(bstr(3, 0), typ(Fraction(1, 3), k)) != 0:
            bad += 1
    checks.append(Check("simple ext dimensions", bad == 0))

    bad = 0
    for n in range(1, 4):
        for m in range(1, 8):
            if homalg.ext_dim(tstr(2 * n + 1, 0), bstr(m, 2 * n + 1)) != 1:
                bad += 1
            if homalg.ext_dim(bstr(2 * n, 0), bstr(m, 2 * n)) != 1:
                bad += 1
    checks.append(Check("string extension lemma", bad == 0, "n <= 3, m <= 7"))

    bad = 0
    for k in range(1, 5):
        for m in (-2, 0, 3):
            cover = homalg.projective_cover
            hull = homalg.injective_hull
            if cover(bstr(2 * k + 1, m)) != FormalSum(
                    (proj(m + 2 * i + 1), 1) for i in range(k)):
                bad += 1
            if cover(bstr(2 * k, m)) != FormalSum(
                    (proj(m + 2 * i + 1), 1) for i in range(k)):
                bad += 1
            if cover(tstr(2 * k + 1, m)) != FormalSum(
                    (proj(m + 2 * i), 1) for i in range(k + 1)):
                bad += 1
            if cover(tstr(2 * k, m)) != FormalSum(
                    (proj(m + 2 * i), 1) for i in range(k)):
                bad += 1
            if hull(bstr(2 * k + 1, m)) != FormalSum(
                    (proj(m + 2 * i), 1) for i in range(k + 1)):
                bad += 1
            if hull(bstr(2 * k, m)) != FormalSum(
                    (proj(m + 2 * i), 1) for i in range(k)):
                bad += 1
            if hull(tstr(2 * k + 1, m)) != FormalSum(
                    (proj(m + 2 * i + 1), 1) for i in range(k)):
                bad += 1
            if hull(tstr(2 * k, m)) != FormalSum(
                    (proj(m + 2 * i + 1), 1) for i in range(k)):
                bad += 1
    checks.append(Check("covers and hulls", bad == 0, "k <= 4"))

    pool = pool_modules(cfg.pool_max_length, cfg.pool_max_flow, cfg.pool_cosets)
    bad = 0
    for mod in pool:
        if is_projective(mod):
            continue
        cover = homalg.projective_cover(mod)
        kernel = homalg.presentation_kernel(mod)
        lhs = composition_factors(cover)
        rhs = composition_factors(FormalSum.of(mod) + FormalSum.of(kernel))
        if lhs != rhs:
            bad += 1
        hull = homalg.injective_hull(mod)
        coker = homalg.presentation_cokernel(mod)
        lhs = composition_factors(hull)
        rhs = composition_factors(FormalSum.of(mod) + FormalSum.of(coker))
        if lhs != rhs:
            bad += 1
    checks.append(Check("presentation balance", bad == 0,
                        "factors(cover) = factors(M) + factors(kernel), and dually"))

    catalog = sequence_catalog(cfg.catalog_bound)
    bad = sum(0 if seq.factors_balance() else 1 for seq in catalog)
    checks.append(Check("catalog factor balance", bad == 0, f"{len(catalog)} sequences"))

    probes = [m for m in pool if is_projective(m)]
    bad = 0
    for seq in catalog:
        for probe in probes:
            if not homalg.euler_check(seq, probe):
                bad += 1
    checks.append(Check("Euler characteristic vs projective probes", bad == 0,
                        f"{len(catalog)} sequences x {len(probes)} probes"))

    bad = 0
    for seq in catalog:
        if seq.tag in {"b-odd-grow", "b-even-grow", "t-odd-grow", "t-even-grow"}:
            quots = list(seq.quotient.modules())
            subs = list(seq.sub.modules())
            if homalg.ext_dim(quots[0], subs[0]) != 1:
                bad += 1
    checks.append(Check("defining extensions are unique", bad == 0))

    rng = random.Random(7)
    sample = rng.sample(pool, min(len(pool), 25))
    bad = 0
    for a in sample:
        for b in sample:
            h = homalg.hom_dim(a, b)
            if h != homalg.hom_dim(dual_star(b), dual_star(a)):
                bad += 1
            if h != homalg.hom_dim(flow(a, 2), flow(b, 2)):
                bad += 1
            e = homalg.ext_dim(a, b)
            if e != homalg.ext_dim(dual_star(b), dual_star(a)):
                bad += 1
            if e != homalg.ext_dim(flow(a, -3), flow(b, -3)):
                bad += 1
            if is_projective(a) or is_projective(b):
                if e != 0:
                    bad += 1
    checks.append(Check("duality and flow symmetry of hom/ext", bad == 0,
                        f"{len(sample)}^2 sampled pairs"))
    return checks


def characters_suite(cfg: Config | None = None) -> list[Check]:
    cfg = cfg or Config()
    checks: list[Check] = []
    hmax, window = cfg.hmax, cfg.jwindow

    bad = 0
    for mod in (vac(0), typ(Fraction(1, 3), 0)):
        oracle = characters.pbw_character_oracle(mod, hmax, window)
        fast = characters.character(mod, hmax, window)
        if not oracle.agrees_with(fast, min_points=10):
            bad += 1
    checks.append(Check("oracle agreement", bad == 0,
                        "enumeration vs generating function"))

    catalog = sequence_catalog(cfg.catalog_bound)
    bad = 0
    for seq in catalog:
        mid = characters.character(seq.middle, hmax, window)
        parts = characters.character(seq.sub, hmax, window) \
            + characters.character(seq.quotient, hmax, window)
        if mid != parts:
            bad += 1
    checks.append(Check("additivity on the catalog", bad == 0,
                        f"{len(catalog)} sequences"))

    probe_mods = [vac(0), typ(Fraction(1, 3), 0), bstr(3, 0), tstr(4, -2), proj(1)]
    wide = (window[0] - 3, window[1] + 3)
    deep = hmax + 3 * (abs(window[1]) + 6) + 6
    bad = 0
    for mod in probe_mods:
        src = characters.character(mod, deep, wide)
        for ell in range(-3, 4):
            direct = characters.character(flow(mod, ell), hmax, window)
            moved = characters.char_flow(src, ell)
            if not moved.agrees_with(direct, min_points=5):
                bad += 1
    checks.append(Check("flow transform", bad == 0, "|ell| <= 3 on certified regions"))

    bad = 0
    for mod in probe_mods:
        src = characters.character(mod, hmax, wide)
        direct = characters.character(dual_restricted(mod), hmax, window)
        if not characters.char_dual(src).agrees_with(direct, min_points=5):
            bad += 1
    checks.append(Check("dual transform", bad == 0))
    return checks


def numerics_suite(cfg: Config | None = None) -> list[Check]:
    checks = []
    identities_ok, nonvanishing_ok, min_abs = rigidity.sweep(50)
    checks.append(Check("hypergeometric and beta identities", identities_ok,
                        "50-point grid at 1e-10"))
    checks.append(Check("rigidity constant non-vanishing", nonvanishing_ok,
                        f"min |I| = {min_abs:.3e}"))
    return checks


SUITES = {
    "fusion": fusion_suite,
    "homalg": homalg_suite,
    "characters": characters_suite,
    "numerics": numerics_suite,
}


def run_suites(names, cfg: Config | None = None) -> dict[str, list[Check]]:
    out = {}
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
        out[name] = SUITES[name](cfg)
    return out
