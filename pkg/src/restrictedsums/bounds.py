"""Bound formulas, theorem verification on concrete instances, equality
classification, and deterministic sweeps.

Every checker compares an engine-computed cardinality against an exact bound
formula and returns a ``VerificationReport``.  Bounds that evaluate <= 0 are
clamped to 0 for verdict purposes but reported raw.  Verdicts:

* ``holds``     actual above the (clamped) bound, or the bound is vacuous,
* ``equality``  actual meets a positive bound exactly,
* ``violated``  actual below the bound -- always a build-failing event,
* ``skipped``   the statement's hypotheses are not met (with a reason).

``run_sweep`` enumerates instance families exhaustively while a cell stays
under the configured cap and falls back to seeded rank-unranked sampling
above it, so repeated runs with one seed are byte-identical.
"""

import itertools
import math
import random
import time
from collections import Counter
from dataclasses import dataclass, field

from .domain import IntegerLattice, PrimeField, is_arithmetic_progression
from .engine import SetFamily, _cardinality, sumset
from .errors import InputError, TheoremViolation

BOUND_KINDS = (
    "conjecture-linear",
    "conjecture-cyclic",
    "l3",
    "even-cyclic",
    "odd-linear",
    "torsionfree-linear",
    "torsionfree-cyclic",
    "pair-distinct",
)

SWEEP_CHECKS = ("conjecture", "l3", "even-cyclic", "odd-linear",
                "torsionfree", "equality", "corollary")


def _cyclic_offset(n: int) -> int:
    # (-1)^n * (1 + (n mod 2)): +1 for even n, -2 for odd n
    return 1 if n % 2 == 0 else -2


def eval_bound(kind: str, sizes, torsion=math.inf) -> int:
    """Exact bound value for one formula kind; may be <= 0.

    The min with the torsion bound is applied for the kinds whose formula
    includes it (the conjectured bounds, the three-set theorem and the
    distinct-pair bound); the parity theorems state theirs unconditionally
    under their hypotheses.
    """
    sizes = tuple(sizes)
    n = len(sizes)
    total = sum(sizes)
    if kind in ("conjecture-linear", "torsionfree-linear"):
        raw = total - 2 * n + 1 + n % 2
    elif kind in ("conjecture-cyclic", "torsionfree-cyclic"):
        raw = total - 2 * n + _cyclic_offset(n)
    elif kind == "l3":
        if n != 3:
            raise InputError("l3 bound needs exactly three sizes")
        raw = total - 4
    elif kind == "even-cyclic":
        if n % 2:
            raise InputError("even-cyclic bound needs even n")
        return total - 2 * n + 1
    elif kind == "odd-linear":
        if n % 2 == 0:
            raise InputError("odd-linear bound needs odd n")
        return total - 2 * n + 2
    elif kind == "pair-distinct":
        if n != 2:
            raise InputError("pair-distinct bound needs exactly two sizes")
        raw = total - 2
    else:
        raise InputError(f"unknown bound kind {kind!r}")
    if torsion != math.inf and torsion < raw:
        return torsion
    return raw


@dataclass
class VerificationReport:
    """One theorem-instance outcome."""

    check: str
    domain: str
    kind: str
    family: tuple
    bound: int
    actual: int
    verdict: str
    witness: tuple = ()
    reason: str = ""
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict != "violated"

    def record(self) -> dict:
        """Serializable record; excludes timing so reports are reproducible."""
        rec = {
            "check": self.check,
            "domain": self.domain,
            "kind": self.kind,
            "family": [list(a) for a in self.family],
            "bound": self.bound,
            "actual": self.actual,
            "verdict": self.verdict,
            "witness": list(self.witness),
        }
        if self.reason:
            rec["reason"] = self.reason
        return rec


def _verdict(bound: int, actual: int) -> str:
    effective = max(0, bound)
    if actual < effective:
        return "violated"
    if bound > 0 and actual == bound:
        return "equality"
    return "holds"


def _report(check, domain, kind, members, bound, actual, witness, t0,
            verdict=None, reason=""):
    return VerificationReport(
        check=check, domain=domain.name, kind=kind, family=members,
        bound=bound, actual=actual,
        verdict=verdict if verdict is not None else _verdict(bound, actual),
        witness=witness, reason=reason, elapsed=time.perf_counter() - t0)


def _skipped(check, domain, kind, members, reason):
    return VerificationReport(
        check=check, domain=domain.name, kind=kind, family=members,
        bound=0, actual=-1, verdict="skipped", reason=reason)


# ---------------------------------------------------------------------------
# single-instance checkers


def verify_l3_theorem(field: PrimeField, a1, a2, a3) -> VerificationReport:
    """|L(A_1,A_2,A_3)| >= min{p, |A_1|+|A_2|+|A_3|-4} over F_p.

    Hypotheses: |A_1|, |A_3| >= 2 and |A_2| - |A_1| in {0, 1}; instances
    outside them come back marked skipped, never violated.
    """
    t0 = time.perf_counter()
    fam = SetFamily(field, [a1, a2, a3])
    k1, k2, k3 = fam.sizes
    if k1 < 2 or k3 < 2 or k2 - k1 not in (0, 1):
        return _skipped("l3", field, "linear", fam.members, "hypotheses not met")
    bound = eval_bound("l3", fam.sizes, field.torsion_bound())
    res = sumset(fam, "linear").elements
    return _report("l3", field, "linear", fam.members, bound, len(res), res, t0)


def verify_even_cyclic_theorem(field: PrimeField, sets) -> VerificationReport:
    """|C| >= sum|A_i| - 2n + 1 for even n, equal sizes, p large enough."""
    t0 = time.perf_counter()
    fam = SetFamily(field, sets)
    n = fam.n
    sizes = fam.sizes
    if n % 2 or n < 2:
        return _skipped("even-cyclic", field, "cyclic", fam.members, "n must be even")
    if len(set(sizes)) != 1 or sizes[0] < 2:
        return _skipped("even-cyclic", field, "cyclic", fam.members,
                        "sizes must be equal and >= 2")
    if field.p <= sum(sizes) - 2 * n:
        return _skipped("even-cyclic", field, "cyclic", fam.members,
                        "characteristic too small")
    bound = eval_bound("even-cyclic", sizes)
    c_card = _cardinality(field, fam.members, "cyclic")
    l_card = _cardinality(field, fam.members, "linear")
    verdict = _verdict(bound, c_card)
    if l_card < c_card:
        verdict = "violated"  # containment L >= C broken: engine bug territory
    return _report("even-cyclic", field, "cyclic", fam.members, bound, c_card,
                   (), t0, verdict=verdict)


def verify_odd_linear_theorem(field: PrimeField, sets) -> VerificationReport:
    """|L| >= sum|A_i| - 2n + 2 for odd n, equal sizes, p large enough."""
    t0 = time.perf_counter()
    fam = SetFamily(field, sets)
    n = fam.n
    sizes = fam.sizes
    if n % 2 == 0:
        return _skipped("odd-linear", field, "linear", fam.members, "n must be odd")
    if len(set(sizes)) != 1 or sizes[0] < 2:
        return _skipped("odd-linear", field, "linear", fam.members,
                        "sizes must be equal and >= 2")
    if field.p <= sum(sizes) - 2 * n + 1:
        return _skipped("odd-linear", field, "linear", fam.members,
                        "characteristic too small")
    bound = eval_bound("odd-linear", sizes)
    card = _cardinality(field, fam.members, "linear")
    return _report("odd-linear", field, "linear", fam.members, bound, card, (), t0)


def verify_torsionfree(a, n: int, kind: str, dim: int = 1) -> VerificationReport:
    """Lower bound for the n-fold linear/cyclic sumset of one set over Z^r."""
    t0 = time.perf_counter()
    if kind not in ("linear", "cyclic"):
        raise InputError(f"kind must be linear or cyclic, got {kind!r}")
    if n < 2:
        raise InputError("need n >= 2")
    domain = IntegerLattice(dim)
    fam = SetFamily(domain, [a] * n)
    if fam.sizes[0] < 2:
        raise InputError("need |A| >= 2")
    bound = eval_bound(f"torsionfree-{kind}", fam.sizes)
    res = sumset(fam, kind).elements
    return _report("torsionfree", domain, kind, fam.members, bound, len(res), res, t0)


def classify_equality(a, n: int, kind: str) -> str:
    """Classify whether the n-fold restricted sumset of A over Z meets its bound.

    Returns ``ap-equality`` (equality, A an AP), ``exceptional-k3n5``
    (cyclic equality with |A| = 3, n = 5, A not an AP) or ``strict``.  Any
    other equality pattern contradicts the classification theorem and raises
    TheoremViolation loudly.
    """
    if kind not in ("linear", "cyclic"):
        raise InputError(f"kind must be linear or cyclic, got {kind!r}")
    if n <= 2:
        raise InputError("classification needs n > 2")
    domain = IntegerLattice(1)
    fam = SetFamily(domain, [a] * n)
    k = fam.sizes[0]
    if k < 3:
        raise InputError("classification needs |A| >= 3")
    bound = eval_bound(f"torsionfree-{kind}", fam.sizes)
    actual = _cardinality(domain, fam.members, kind)
    ap, _ = is_arithmetic_progression(fam.members[0])
    if actual < bound:
        raise TheoremViolation(
            f"lower bound broken: |{n}x{kind} {list(fam.members[0])}| = {actual} < {bound}")
    if actual == bound:
        if ap:
            return "ap-equality"
        if kind == "cyclic" and k == 3 and n == 5:
            return "exceptional-k3n5"
        raise TheoremViolation(
            f"equality without an AP: {list(fam.members[0])}, n={n}, kind={kind}")
    if ap:
        raise TheoremViolation(
            f"AP missed equality: {list(fam.members[0])}, n={n}, kind={kind}, "
            f"actual={actual}, bound={bound}")
    return "strict"


def verify_corollary_coverage(field: PrimeField, a):
    """Does L(A, A, A) cover all of F_p?  Requires |A| >= floor(p/3) + 2.

    Returns True/False, or None when the size hypothesis is not met.
    """
    fam = SetFamily(field, [a] * 3)
    if fam.sizes[0] < field.p // 3 + 2:
        return None
    return _cardinality(field, fam.members, "linear") == field.p


# ---------------------------------------------------------------------------
# deterministic sweeps


@dataclass(frozen=True)
class SweepConfig:
    """Instance space and sampling policy for one sweep."""

    check: str = "conjecture"
    domain: str = "zp"                      # "zp" | "int"
    primes: tuple = (5,)
    dim: int = 1
    kinds: tuple = ("linear", "cyclic")
    n_values: tuple = (2, 3)
    sizes: tuple = (2, 3)
    window: tuple = (0, 9)                  # inclusive value range over Z
    cell_cap: int = 200_000
    sample_size: int = 10_000
    seed: int = 20240601

    def as_dict(self) -> dict:
        return {
            "check": self.check, "domain": self.domain,
            "primes": list(self.primes), "dim": self.dim,
            "kinds": list(self.kinds), "n_values": list(self.n_values),
            "sizes": list(self.sizes), "window": list(self.window),
            "cell_cap": self.cell_cap, "sample_size": self.sample_size,
            "seed": self.seed,
        }


@dataclass
class SweepSummary:
    """Aggregated sweep outcome; violations carry their full witness family."""

    check: str
    config: dict
    instances: int = 0
    verdicts: Counter = field(default_factory=Counter)
    cells: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    elapsed: float = 0.0

    MAX_STORED_VIOLATIONS = 200

    @property
    def violation_count(self) -> int:
        return self.verdicts.get("violated", 0)

    def record(self) -> dict:
        return {
            "record": "summary",
            "check": self.check,
            "config": self.config,
            "instances": self.instances,
            "verdicts": {k: self.verdicts[k] for k in sorted(self.verdicts)},
            "cells": self.cells,
            "violations": self.violations,
        }


def unrank_combination(rank: int, n: int, k: int) -> tuple:
    """The rank-th k-subset of range(n) in lexicographic order."""
    if not 0 <= rank < math.comb(n, k):
        raise InputError(f"rank {rank} out of range for C({n},{k})")
    out = []
    x = 0
    for slots in range(k, 0, -1):
        while math.comb(n - 1 - x, slots - 1) <= rank:
            rank -= math.comb(n - 1 - x, slots - 1)
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


class _Cell:
    """One block of the instance space: a fixed universe and size tuple.

    Enumerates families exhaustively up to ``cap`` and otherwise samples
    ``sample`` distinct ranks with a seed derived from the cell key, so the
    instance stream is a pure function of the config.
    """

    def __init__(self, key, universe, size_tuple, cap, sample, seed,
                 identical=False):
        self.key = key
        self.universe = tuple(universe)
        self.sizes = tuple(size_tuple)
        self.identical = identical
        u = len(self.universe)
        if identical:
            self.counts = (math.comb(u, self.sizes[0]),)
        else:
            self.counts = tuple(math.comb(u, k) for k in self.sizes)
        self.total = math.prod(self.counts)
        if self.total <= cap:
            self.mode = "exhaustive"
            self.ranks = range(self.total)
        else:
            self.mode = "sampled"
            rng = random.Random(f"{seed}/{key}")
            m = min(sample, self.total)
            self.ranks = sorted(rng.sample(range(self.total), m))
        self.evaluated = len(self.ranks)

    def meta(self) -> dict:
        return {"cell": self.key, "total": self.total,
                "evaluated": self.evaluated, "mode": self.mode}

    def _unrank_set(self, idx, k):
        return tuple(self.universe[j]
                     for j in unrank_combination(idx, len(self.universe), k))

    def families(self):
        n = len(self.sizes)
        for r in self.ranks:
            if self.identical:
                a = self._unrank_set(r, self.sizes[0])
                yield (a,) * n
            else:
                sets = []
                for c, k in zip(self.counts, self.sizes):
                    r, idx = divmod(r, c)
                    sets.append(self._unrank_set(idx, k))
                yield tuple(sets)


def _window_universe(window):
    lo, hi = window
    if hi < lo:
        raise InputError(f"empty window {window!r}")
    return tuple(range(lo, hi + 1))


def _sweep_conjecture(cfg):
    """Conjectured bounds on |L| and |C| over arbitrary families."""
    if cfg.domain == "zp":
        carriers = [(PrimeField(p), tuple(range(p)), p) for p in sorted(cfg.primes)]
    else:
        carriers = [(IntegerLattice(1), _window_universe(cfg.window), math.inf)]
    for domain, universe, torsion in carriers:
        for n in sorted(cfg.n_values):
            if n < 2:
                yield "report", _skipped("conjecture", domain, ",".join(cfg.kinds),
                                         (), f"n={n} outside conjecture scope (n > 1)")
                continue
            sizes_ok = [k for k in sorted(cfg.sizes) if 2 <= k <= len(universe)]
            for st in itertools.product(sizes_ok, repeat=n):
                key = f"{domain.name},n={n},sizes={'-'.join(map(str, st))}"
                cell = _Cell(key, universe, st, cfg.cell_cap, cfg.sample_size, cfg.seed)
                yield "cell", cell.meta()
                for members in cell.families():
                    for kind in cfg.kinds:
                        t0 = time.perf_counter()
                        bound = eval_bound(f"conjecture-{kind}", st, torsion)
                        actual = _cardinality(domain, members, kind)
                        yield "report", _report("conjecture", domain, kind, members,
                                                bound, actual, (), t0)


def _sweep_l3(cfg):
    """Exhaustive three-set check over F_p under the theorem's size pattern."""
    for p in sorted(cfg.primes):
        field = PrimeField(p)
        universe = tuple(range(p))
        for k1 in range(2, p + 1):
            for delta in (0, 1):
                k2 = k1 + delta
                if k2 > p:
                    continue
                for k3 in range(2, p + 1):
                    key = f"F_{p},sizes={k1}-{k2}-{k3}"
                    cell = _Cell(key, universe, (k1, k2, k3),
                                 cfg.cell_cap, cfg.sample_size, cfg.seed)
                    yield "cell", cell.meta()
                    bound = eval_bound("l3", (k1, k2, k3), p)
                    for members in cell.families():
                        t0 = time.perf_counter()
                        actual = _cardinality(field, members, "linear")
                        yield "report", _report("l3", field, "linear", members,
                                                bound, actual, (), t0)


def _sweep_parity(cfg, check):
    """Equal-size families under the even-cyclic / odd-linear theorems.

    Cells above the cap get seeded sampling plus a guaranteed exhaustive
    identical-set slice (A, ..., A), where the equality cases live.
    """
    parity = 0 if check == "even-cyclic" else 1
    kind = "cyclic" if parity == 0 else "linear"
    slack = 0 if parity == 0 else 1
    for p in sorted(cfg.primes):
        field = PrimeField(p)
        universe = tuple(range(p))
        for n in sorted(cfg.n_values):
            if n < 2 or n % 2 != parity:
                continue
            for k in sorted(cfg.sizes):
                if k < 2 or k > p:
                    continue
                if p <= n * k - 2 * n + slack:
                    yield "cell", {"cell": f"F_{p},n={n},k={k}", "total": 0,
                                   "evaluated": 0, "mode": "skipped-hypothesis"}
                    continue
                bound = eval_bound(check, (k,) * n)
                general = _Cell(f"F_{p},n={n},k={k}", universe, (k,) * n,
                                cfg.cell_cap, cfg.sample_size, cfg.seed)
                cells = [general]
                if general.mode == "sampled":
                    cells.append(_Cell(f"F_{p},n={n},k={k},identical", universe,
                                       (k,) * n, cfg.cell_cap, cfg.sample_size,
                                       cfg.seed, identical=True))
                for cell in cells:
                    yield "cell", cell.meta()
                    for members in cell.families():
                        t0 = time.perf_counter()
                        actual = _cardinality(field, members, kind)
                        yield "report", _report(check, field, kind, members,
                                                bound, actual, (), t0)


def _sweep_torsionfree(cfg):
    """Single-set lower bounds over Z for both kinds."""
    domain = IntegerLattice(1)
    universe = _window_universe(cfg.window)
    for n in sorted(cfg.n_values):
        if n < 2:
            yield "report", _skipped("torsionfree", domain, ",".join(cfg.kinds),
                                     (), f"n={n} needs n >= 2")
            continue
        for k in sorted(cfg.sizes):
            if k < 2 or k > len(universe):
                continue
            key = f"Z,n={n},k={k}"
            cell = _Cell(key, universe, (k,) * n, cfg.cell_cap, cfg.sample_size,
                         cfg.seed, identical=True)
            yield "cell", cell.meta()
            for members in cell.families():
                for kind in cfg.kinds:
                    t0 = time.perf_counter()
                    bound = eval_bound(f"torsionfree-{kind}", (k,) * n)
                    actual = _cardinality(domain, members, kind)
                    yield "report", _report("torsionfree", domain, kind, members,
                                            bound, actual, (), t0)


def _sweep_equality(cfg):
    """Equality classification over Z; verdicts are the class labels."""
    domain = IntegerLattice(1)
    universe = _window_universe(cfg.window)
    for n in sorted(cfg.n_values):
        if n <= 2:
            yield "report", _skipped("equality", domain, ",".join(cfg.kinds),
                                     (), f"n={n} needs n > 2")
            continue
        for k in sorted(cfg.sizes):
            if k < 3:
                yield "report", _skipped("equality", domain, ",".join(cfg.kinds),
                                         (), f"k={k} needs |A| >= 3")
                continue
            if k > len(universe):
                continue
            key = f"Z,n={n},k={k}"
            cell = _Cell(key, universe, (k,) * n, cfg.cell_cap, cfg.sample_size,
                         cfg.seed, identical=True)
            yield "cell", cell.meta()
            for members in cell.families():
                for kind in cfg.kinds:
                    t0 = time.perf_counter()
                    bound = eval_bound(f"torsionfree-{kind}", (k,) * n)
                    actual = _cardinality(domain, members, kind)
                    try:
                        label = classify_equality(members[0], n, kind)
                        yield "report", _report("equality", domain, kind, members,
                                                bound, actual, members[0], t0,
                                                verdict=label)
                    except TheoremViolation as exc:
                        yield "report", _report("equality", domain, kind, members,
                                                bound, actual, members[0], t0,
                                                verdict="violated", reason=str(exc))


def _sweep_corollary(cfg):
    """Whole-field coverage by L(A, A, A) for every large-enough A."""
    for p in sorted(cfg.primes):
        field = PrimeField(p)
        universe = tuple(range(p))
        kmin = p // 3 + 2
        for k in range(kmin, p + 1):
            key = f"F_{p},k={k}"
            cell = _Cell(key, universe, (k,) * 3, cfg.cell_cap, cfg.sample_size,
                         cfg.seed, identical=True)
            yield "cell", cell.meta()
            for members in cell.families():
                t0 = time.perf_counter()
                actual = _cardinality(field, members, "linear")
                yield "report", _report("corollary", field, "linear", members,
                                        p, actual, (), t0)


_SWEEPS = {
    "conjecture": _sweep_conjecture,
    "l3": _sweep_l3,
    "even-cyclic": lambda cfg: _sweep_parity(cfg, "even-cyclic"),
    "odd-linear": lambda cfg: _sweep_parity(cfg, "odd-linear"),
    "torsionfree": _sweep_torsionfree,
    "equality": _sweep_equality,
    "corollary": _sweep_corollary,
}


def run_sweep(config: SweepConfig, sink=None) -> SweepSummary:
    """Drive one sweep; feed each report to ``sink`` and aggregate verdicts.

    Reports stream through without being retained (sweeps can be large);
    violations are kept on the summary up to a fixed count.
    """
    try:
        gen = _SWEEPS[config.check]
    except KeyError:
        raise InputError(f"unknown sweep check {config.check!r}") from None
    t0 = time.perf_counter()
    summary = SweepSummary(check=config.check, config=config.as_dict())
    for what, payload in gen(config):
        if what == "cell":
            summary.cells.append(payload)
            continue
        summary.instances += 1
        summary.verdicts[payload.verdict] += 1
        if payload.verdict == "violated" and \
                len(summary.violations) < SweepSummary.MAX_STORED_VIOLATIONS:
            summary.violations.append(payload.record())
        if sink is not None:
            sink(payload)
    summary.elapsed = time.perf_counter() - t0
    return summary


def collect_sweep(config: SweepConfig):
    """Small-sweep convenience: returns (reports list, summary)."""
    reports = []
    summary = run_sweep(config, sink=reports.append)
    return reports, summary
