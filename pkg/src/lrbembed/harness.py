"""Census over all small bands and fuzzing over random subbands of free bands."""
from __future__ import annotations

import csv
import io
import logging
import random
from dataclasses import dataclass, field

from .band import NotRightHereditary
from .embedder import Embeddable, decide_embeddable
from .iso import enumerate_bands, find_isomorphism
from .localorder import (
    NoLocalLinearOrder,
    analyze,
    base_constraints,
    fast_path_order,
    search_local_linear_order,
    subband_local_order,
    verify_local_linear_order,
)
from .qvar import qvar_membership
from .words import ClosureTooLarge, close_under_product

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusConfig:
    max_size: int = 4
    seed: int = 0
    qvar: bool = True


@dataclass
class CensusRow:
    index: int
    size: int
    right_hereditary: bool
    fast_path: bool | None
    search: bool | None
    verdict: str
    rounds: int | None
    rank: int | None
    qvar: bool | None

    FIELDS = ("index", "size", "right_hereditary", "fast_path", "search", "verdict", "rounds", "rank", "qvar")


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def census_row(i: int, band, with_qvar: bool = True) -> CensusRow:
    size = band.n - 1
    fast = found = None
    try:
        st = analyze(band)
        rh = True
    except NotRightHereditary:
        rh = False
    if rh:
        try:
            cons = base_constraints(st)
            fast = fast_path_order(st, cons) is not None
        except NoLocalLinearOrder:
            cons, fast = None, False
        found = cons is not None and search_local_linear_order(st, cons) is not None
        if fast != found:
            log.warning("band %d: fast path %s but complete search %s", i, fast, found)
        if not found:
            log.warning("band %d: right hereditary without a local linear order", i)
    verdict = decide_embeddable(band)
    rounds = len(verdict.rounds) if isinstance(verdict, Embeddable) else None
    rank = verdict.rank if isinstance(verdict, Embeddable) else None
    q = qvar_membership(band).member if with_qvar else None
    return CensusRow(i, size, rh, fast, found, verdict.kind, rounds, rank, q)


def run_census(cfg: CensusConfig) -> list[CensusRow]:
    """Classify one representative of every isomorphism class.

    Enumeration order is canonical, so the seed only labels the run.
    """
    bands = enumerate_bands(cfg.max_size)
    return [census_row(i, b, cfg.qvar) for i, b in enumerate(bands)]


def census_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CensusRow.FIELDS)
    for r in rows:
        w.writerow([_fmt(getattr(r, f)) for f in CensusRow.FIELDS])
    return buf.getvalue()


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 42
    count: int = 200
    max_generators: int = 5
    max_seeds: int = 4
    cap: int = 512
    qvar: bool = True


@dataclass
class FuzzCase:
    case_seed: int
    seeds: list
    size: int | None = None
    rounds: int | None = None
    skipped: bool = False
    failure: str | None = None


@dataclass
class FuzzSummary:
    config: FuzzConfig
    cases: list[FuzzCase] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if not c.skipped and c.failure is None)

    @property
    def skipped(self) -> int:
        return sum(1 for c in self.cases if c.skipped)

    @property
    def failure(self) -> FuzzCase | None:
        return next((c for c in self.cases if c.failure), None)

    @property
    def ok(self) -> bool:
        return self.failure is None


def case_seed(seed: int, i: int) -> int:
    return seed * 1_000_003 + i


def random_seeds(rng: random.Random, max_generators: int, max_seeds: int) -> list[tuple[int, ...]]:
    letters = list(range(1, max_generators + 1))
    return [tuple(rng.sample(letters, rng.randint(1, max_generators))) for _ in range(rng.randint(1, max_seeds))]


def check_subband(seeds, cap: int = 512, with_qvar: bool = True) -> FuzzCase:
    """Run every check on the closure of ``seeds``; failures are recorded, not raised."""
    case = FuzzCase(-1, [list(s) for s in seeds])
    try:
        band, words = close_under_product(seeds, cap=cap)
    except ClosureTooLarge:
        case.skipped = True
        return case
    case.size = band.n
    try:
        st = analyze(band)
    except NotRightHereditary as err:
        case.failure = f"closure is not right hereditary: {err}"
        return case
    bad = verify_local_linear_order(st, subband_local_order(st, words))
    if bad is not None:
        case.failure = f"word order violates condition {bad.condition}: {bad}"
        return case
    verdict = decide_embeddable(band)
    if not isinstance(verdict, Embeddable):
        case.failure = f"decision procedure answered {verdict.kind}"
        return case
    case.rounds = len(verdict.rounds)
    image_band, image_words = close_under_product(verdict.final.images, cap=max(cap, band.n))
    if find_isomorphism(image_band, band) is None:
        case.failure = "closure of the witness is not isomorphic to the input"
        return case
    bad = verify_local_linear_order(analyze(image_band), subband_local_order(analyze(image_band), image_words))
    if bad is not None:
        case.failure = f"word order on the witness closure violates condition {bad.condition}"
        return case
    if with_qvar and not qvar_membership(band).member:
        case.failure = "embeddable band failed the H-separation test"
    return case


def fuzz_subbands(cfg: FuzzConfig) -> FuzzSummary:
    """Stops at the first failing case; its ``case_seed`` replays it."""
    summary = FuzzSummary(cfg)
    for i in range(cfg.count):
        cs = case_seed(cfg.seed, i)
        seeds = random_seeds(random.Random(cs), cfg.max_generators, cfg.max_seeds)
        try:
            case = check_subband(seeds, cfg.cap, cfg.qvar)
        except Exception as err:  # an internal assertion is a finding too
            case = FuzzCase(cs, [list(s) for s in seeds], failure=f"{type(err).__name__}: {err}")
        case.case_seed = cs
        summary.cases.append(case)
        if case.skipped:
            log.info("case %d skipped: closure exceeds %d elements", cs, cfg.cap)
        if case.failure:
            break
    return summary


def replay_case(case_seed_value: int, max_generators: int = 5, max_seeds: int = 4, cap: int = 512) -> FuzzCase:
    seeds = random_seeds(random.Random(case_seed_value), max_generators, max_seeds)
    case = check_subband(seeds, cap)
    case.case_seed = case_seed_value
    return case
