"""
Exhaustive and sampled surveys of complexity over S_n.

The exhaustive scan splits S_n by the first letter of the one-line word;
each chunk is scanned in lexicographic order and summarized, and the
summaries merge with an associative, commutative fold.  Witnesses are the
lexicographically smallest permutation of each complexity, so the result
does not depend on the number of workers.
"""

from __future__ import annotations

import enum
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from itertools import permutations
from math import factorial
from pathlib import Path
from typing import Iterator

from .complexity import ComplexityReport, _counts, analyze
from .constructions import achievable_complexities, max_complexity
from .perm_core import Permutation, adjacent_transposition, longest_element, multiply

__all__ = [
    "DEFAULT_MAX_N",
    "WORKERS_ENV",
    "SurveyLimitError",
    "CacheError",
    "SpectrumResult",
    "TheoremId",
    "VerificationOutcome",
    "SplitMix64",
    "enumerate_reports",
    "spectrum",
    "verify",
    "random_permutation",
    "sample_reports",
    "save_cache",
    "load_cache",
    "cache_file",
]

DEFAULT_MAX_N = 11
WORKERS_ENV = "MSV_COMPLEXITY_WORKERS"
CACHE_SCHEMA = 1


class SurveyLimitError(ValueError):
    """Requested n is beyond the exhaustive limit."""


class CacheError(ValueError):
    """A cache file is malformed or its witnesses do not check out."""


def _check_limit(n: int, max_n: int):
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise SurveyLimitError(
            f"exhaustive enumeration of S_{n} ({factorial(n)} permutations) is over the "
            f"limit n <= {max_n}; raise the limit or use sampling instead"
        )


def enumerate_reports(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[ComplexityReport]:
    """One report per permutation of S_n, in lexicographic order."""
    _check_limit(n, max_n)
    for word in permutations(range(1, n + 1)):
        yield analyze(Permutation(word))


@dataclass
class _Partial:
    witnesses: dict[int, tuple[int, ...]] = field(default_factory=dict)
    counts: dict[int, int] = field(default_factory=dict)
    best: int = -1
    maximizers: list[tuple[int, ...]] = field(default_factory=list)
    total: int = 0


def _merge(a: _Partial, b: _Partial) -> _Partial:
    out = _Partial(total=a.total + b.total)
    for d in a.witnesses.keys() | b.witnesses.keys():
        cands = [p.witnesses[d] for p in (a, b) if d in p.witnesses]
        out.witnesses[d] = min(cands)
        out.counts[d] = a.counts.get(d, 0) + b.counts.get(d, 0)
    out.best = max(a.best, b.best)
    out.maximizers = sorted(
        ([*a.maximizers] if a.best == out.best else [])
        + ([*b.maximizers] if b.best == out.best else [])
    )
    return out


def _scan_prefix(args) -> _Partial:
    n, first = args
    rest = [x for x in range(1, n + 1) if x != first]
    part = _Partial()
    witnesses, counts = part.witnesses, part.counts
    best = -1
    maximizers: list[tuple[int, ...]] = []
    total = 0
    for tail in permutations(rest):
        word = (first, *tail)
        card_d, card_dom, _, card_l, _, v, c = _counts(word)
        d = card_l + card_dom - card_d - v + c
        total += 1
        if d in counts:
            counts[d] += 1
        else:
            counts[d] = 1
            witnesses[d] = word  # first seen is lexicographically smallest
        if d > best:
            best = d
            maximizers = [word]
        elif d == best:
            maximizers.append(word)
    part.best = best
    part.maximizers = maximizers
    part.total = total
    return part


@dataclass(frozen=True)
class SpectrumResult:
    n: int
    achieved: tuple[int, ...]
    witnesses: dict[int, Permutation]
    max_complexity: int
    maximizers: tuple[Permutation, ...]
    total_enumerated: int
    counts: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "schema": CACHE_SCHEMA,
            "n": self.n,
            "achieved": list(self.achieved),
            "witnesses": {str(d): self.witnesses[d].one_line() for d in self.achieved},
            "counts": {str(d): self.counts[d] for d in self.achieved if d in self.counts},
            "max_complexity": self.max_complexity,
            "maximizers": [w.one_line() for w in self.maximizers],
            "total_enumerated": self.total_enumerated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, data: dict) -> SpectrumResult:
        from .perm_core import parse_permutation

        if data.get("schema") != CACHE_SCHEMA:
            raise CacheError(f"unsupported cache schema {data.get('schema')!r}")
        try:
            achieved = tuple(int(d) for d in data["achieved"])
            witnesses = {int(d): parse_permutation(t) for d, t in data["witnesses"].items()}
            counts = {int(d): int(c) for d, c in data.get("counts", {}).items()}
            result = cls(
                n=int(data["n"]),
                achieved=achieved,
                witnesses=witnesses,
                max_complexity=int(data["max_complexity"]),
                maximizers=tuple(parse_permutation(t) for t in data["maximizers"]),
                total_enumerated=int(data["total_enumerated"]),
                counts=counts,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CacheError(f"malformed cache entry: {exc}") from exc
        if set(result.witnesses) != set(result.achieved):
            raise CacheError("witness keys do not match the achieved set")
        if result.achieved and result.max_complexity != max(result.achieved):
            raise CacheError("max_complexity is not the largest achieved value")
        return result


def _result_from_partial(n: int, part: _Partial) -> SpectrumResult:
    achieved = tuple(sorted(part.witnesses))
    return SpectrumResult(
        n=n,
        achieved=achieved,
        witnesses={d: Permutation(part.witnesses[d]) for d in achieved},
        max_complexity=part.best,
        maximizers=tuple(Permutation(w) for w in sorted(part.maximizers)),
        total_enumerated=part.total,
        counts={d: part.counts[d] for d in achieved},
    )


def default_workers() -> int:
    value = os.environ.get(WORKERS_ENV)
    if value:
        return max(1, int(value))
    return 1


def spectrum(n: int, workers: int | None = None, max_n: int = DEFAULT_MAX_N) -> SpectrumResult:
    """
    Scan all of S_n and collect the achieved complexities with witnesses.

    ``workers`` defaults to the ``MSV_COMPLEXITY_WORKERS`` environment
    variable, else 1 (serial, in-process).
    """
    _check_limit(n, max_n)
    if workers is None:
        workers = default_workers()
    jobs = [(n, first) for first in range(1, n + 1)]
    if workers <= 1:
        parts = [_scan_prefix(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_prefix, jobs))
    return _result_from_partial(n, reduce(_merge, parts))


class TheoremId(str, enum.Enum):
    MAX_VALUE = "max_value"
    UNIQUE_MAXIMIZER = "unique_maximizer"
    FULL_SPECTRUM = "full_spectrum"
    NO_COMPLEXITY_ONE = "no_complexity_one"


@dataclass(frozen=True)
class VerificationOutcome:
    theorem_id: TheoremId
    n: int
    passed: bool
    detail: str | None = None
    observed: str = ""

    def __post_init__(self):
        if not self.passed and not self.detail:
            raise ValueError("a failed verification must say why")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.theorem_id.value} n={self.n}: {self.observed}"
        if self.detail:
            out += f" ({self.detail})"
        return out


def verify(
    theorem_id: TheoremId | str,
    n: int,
    result: SpectrumResult | None = None,
    workers: int | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> VerificationOutcome:
    """Check one classification statement against an exhaustive scan of S_n."""
    tid = TheoremId(theorem_id)
    if tid is not TheoremId.NO_COMPLEXITY_ONE and n < 4:
        raise ValueError(f"{tid.value} is only stated for n >= 4")
    if result is None:
        result = spectrum(n, workers=workers, max_n=max_n)
    elif result.n != n:
        raise ValueError(f"result is for n={result.n}, not {n}")

    if tid is TheoremId.MAX_VALUE:
        expected = max_complexity(n)
        ok = result.max_complexity == expected
        return VerificationOutcome(
            tid, n, ok,
            None if ok else f"expected {expected}, found {result.witnesses[result.max_complexity]}",
            f"d_max={result.max_complexity}",
        )
    if tid is TheoremId.UNIQUE_MAXIMIZER:
        expected = multiply(longest_element(n), adjacent_transposition(n, n - 1))
        ok = result.maximizers == (expected,)
        found = ",".join(w.one_line() for w in result.maximizers[:5])
        return VerificationOutcome(
            tid, n, ok,
            None if ok else f"expected only {expected}, maximizers {found}",
            f"maximizer={found}",
        )
    if tid is TheoremId.FULL_SPECTRUM:
        expected = set(achievable_complexities(n))
        got = set(result.achieved)
        ok = got == expected
        detail = None
        if not ok:
            extra = sorted(got - expected)
            missing = sorted(expected - got)
            detail = f"missing {missing}, unexpected {[(d, str(result.witnesses[d])) for d in extra]}"
        return VerificationOutcome(tid, n, ok, detail, f"achieved={sorted(got)}")
    # no complexity one
    ok = 1 not in result.witnesses
    return VerificationOutcome(
        tid, n, ok,
        None if ok else f"{result.witnesses[1]} has complexity 1",
        f"{result.total_enumerated} permutations scanned",
    )


class SplitMix64:
    """Small seeded 64-bit generator, reproducible across platforms."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


def random_permutation(n: int, rng: SplitMix64) -> Permutation:
    """Fisher-Yates shuffle of the identity."""
    word = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        word[i], word[j] = word[j], word[i]
    return Permutation(tuple(word))


def sample_reports(
    n: int, count: int, seed: int, check_rank: bool = False
) -> Iterator[ComplexityReport]:
    """Reports for ``count`` uniformly random permutations; deterministic in ``seed``."""
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = SplitMix64(seed)
    for _ in range(count):
        yield analyze(random_permutation(n, rng), check_rank=check_rank)


def cache_file(n: int, path) -> Path:
    """``path`` is a directory holding one ``spectrum_n{n}.json`` per n."""
    return Path(path) / f"spectrum_n{n}.json"


def save_cache(result: SpectrumResult, path) -> Path:
    target = cache_file(result.n, path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(result.to_json() + "\n")
    return target


def load_cache(n: int, path) -> SpectrumResult:
    """Load and re-verify every witness; raises FileNotFoundError or CacheError."""
    target = cache_file(n, path)
    if not target.exists():
        raise FileNotFoundError(f"no cached spectrum for n={n} at {target}")
    try:
        data = json.loads(target.read_text())
    except json.JSONDecodeError as exc:
        raise CacheError(f"{target} is not valid JSON: {exc}") from exc
    result = SpectrumResult.from_dict(data)
    if result.n != n:
        raise CacheError(f"{target} holds n={result.n}, expected {n}")
    for d, w in result.witnesses.items():
        if w.n != n:
            raise CacheError(f"witness {w} for d={d} is not in S_{n}")
        got = analyze(w).complexity
        if got != d:
            raise CacheError(f"witness {w} claims complexity {d} but analyzes to {got}")
    for w in result.maximizers:
        if analyze(w).complexity != result.max_complexity:
            raise CacheError(f"maximizer {w} does not reach {result.max_complexity}")
    return result
