"""
Cross-checks between brute force, constructive enumeration, the
recurrences and the closed forms. Each check compares values that come from
different computations; nothing is compared against itself.
"""
import logging
from dataclasses import dataclass
from typing import Iterator

from .cache import CountsCache
from .core import compose, decompose
from .enumeration import CountByDet, count_by_det, enumerate_naive, iter_cnats, iter_decompositions
from .linalg import Sign, cnat_det, cnat_matrix, det_int
from .records import Quantity, Source
from .sequences import (ab_seq, d_closed, d_rec, d_rec_reduced, eo_counts, eo_diff_closed,
                        eo_row, t_seq)

ORACLE_N = 4
ORACLE_N_SLOW = 5
COUNT_N = 7
COUNT_N_SLOW = 8
ROUND_TRIP_N = 5
DET_BRIDGE_N = 6
IDENTITY_CHECK_N = 20
RECURRENCE_CHECK_N = 40
LEMMA_CHECK_M = 25


@dataclass(frozen=True)
class Check:
    label: str
    values: tuple[tuple[str, object], ...]
    passed: bool

    @classmethod
    def agreement(cls, label: str, *values: tuple[str, object]) -> "Check":
        """Passes when every source reports the same value."""
        sources = [source for source, _ in values]
        if len(set(sources)) != len(sources):
            raise ValueError(f"Check {label} compares a source against itself")
        return cls(label, values, len({value for _, value in values}) == 1)

    def line(self) -> str:
        shown = ", ".join(f"{source} {value}" for source, value in self.values)
        return f"{self.label}: {shown} {'PASS' if self.passed else 'FAIL'}"


def format_report(checks: list[Check]) -> str:
    return "\n".join(check.line() for check in checks)


def _collect(enumerate_fn, n: int) -> set:
    found = set()
    enumerate_fn(n, found.add)
    return found


def check_oracle(n: int) -> Check:
    """Brute-force and constructive enumeration produce the same set."""
    naive = _collect(enumerate_naive, n)
    constructive = set(iter_cnats(n))
    check = Check.agreement(f"CNATs_{n}", ("naive", len(naive)), ("enum", len(constructive)))
    if naive != constructive:
        return Check(check.label, check.values, False)
    return check


def check_round_trip(n: int) -> Check:
    """compose and decompose invert each other on every object of size n."""
    cnats = list(iter_cnats(n))
    decompositions = list(iter_decompositions(n))
    good_cnats = sum(1 for cnat in cnats if compose(decompose(cnat)) == cnat)
    good_decompositions = sum(1 for d in decompositions if decompose(compose(d)) == d)
    return Check(f"round_trip_{n}",
                 (("cnats", f"{good_cnats}/{len(cnats)}"),
                  ("decompositions", f"{good_decompositions}/{len(decompositions)}")),
                 good_cnats == len(cnats) and good_decompositions == len(decompositions))


def check_det_bridge(n: int) -> Check:
    """Full 0/1 determinant equals the leaf-matrix sign for every CNAT of size n."""
    by_matrix = CountByDet(n)
    by_leaves = CountByDet(n)
    mismatches = 0
    for cnat in iter_cnats(n):
        full = det_int(cnat_matrix(cnat))
        leaf = cnat_det(cnat)
        by_matrix += CountByDet(n, int(full == 1), int(full == -1))
        by_leaves += CountByDet(n, int(leaf is Sign.POSITIVE), int(leaf is Sign.NEGATIVE))
        if full != leaf:
            mismatches += 1
    return Check(f"det_bridge_{n}",
                 (("matrix", f"{by_matrix.a}/{by_matrix.b}"), ("leaf", f"{by_leaves.a}/{by_leaves.b}")),
                 mismatches == 0)


def _enumerated_counts(n: int, cache: CountsCache | None, jobs: int) -> tuple[int, int]:
    if cache is not None:
        a = cache.get(Quantity.A, n, Source.ENUMERATION)
        b = cache.get(Quantity.B, n, Source.ENUMERATION)
        if a is not None and b is not None:
            return a, b

    counts = count_by_det(n, jobs=jobs)
    if cache is not None:
        cache.put(Quantity.A, n, Source.ENUMERATION, counts.a)
        cache.put(Quantity.B, n, Source.ENUMERATION, counts.b)
    return counts.a, counts.b


def check_counts(max_n: int, cache: CountsCache | None = None, jobs: int = 1) -> Iterator[Check]:
    """T, A, B, D from enumeration against the recurrences and the closed form."""
    t = t_seq(max_n)
    a_rec, b_rec = ab_seq(max_n)
    d = d_rec(max_n)
    for n in range(1, max_n + 1):
        a_enum, b_enum = _enumerated_counts(n, cache, jobs)
        d_cl = d_closed(n)
        yield Check.agreement(f"T_{n}", ("enum", a_enum + b_enum), ("rec", t[n]))
        yield Check.agreement(f"A_{n}", ("enum", a_enum), ("rec", a_rec[n]), ("closed", (t[n] + d_cl) // 2))
        yield Check.agreement(f"B_{n}", ("enum", b_enum), ("rec", b_rec[n]), ("closed", (t[n] - d_cl) // 2))
        yield Check.agreement(f"D_{n}", ("enum", a_enum - b_enum), ("rec", d[n]), ("closed", d_cl))


def check_identities(max_n: int) -> Iterator[Check]:
    """A + B = T and A - B = D across the three recurrences."""
    t = t_seq(max_n)
    a, b = ab_seq(max_n)
    d = d_rec(max_n)
    for n in range(1, max_n + 1):
        yield Check.agreement(f"A_{n}+B_{n}", ("ab", a[n] + b[n]), ("t", t[n]))
        yield Check.agreement(f"A_{n}-B_{n}", ("ab", a[n] - b[n]), ("d", d[n]))


def check_defect(first_n: int, max_n: int) -> Iterator[Check]:
    """The defect recurrence against the closed form, and against the inductive-step recurrence."""
    d = d_rec(max_n)
    reduced = d_rec_reduced(max_n)
    for n in range(first_n, max_n + 1):
        yield Check.agreement(f"D_{n}", ("rec", d[n]), ("closed", d_closed(n)))
    for n in range(1, max_n + 1):
        yield Check.agreement(f"D_{n} inductive", ("reduced", reduced[n]), ("rec", d[n]))


def check_parity_lemma(max_m: int) -> Iterator[Check]:
    """Closed-form e - o against the DP for every odd m and every j."""
    for m in range(1, max_m + 1, 2):
        failures = [
            Check(f"e-o_{m}[{j}]", (("closed", closed), ("dp", count.diff)), False)
            for j, count in enumerate(eo_row(m))
            if (closed := eo_diff_closed(m, j)) != count.diff
        ]
        if failures:
            yield from failures
        else:
            yield Check(f"e-o_{m}", (("closed", f"{m + 1} values"), ("dp", f"{m + 1} values")), True)


def check_odd_cancellations(max_n: int) -> Iterator[Check]:
    """For odd n, 1-subsets and (n - 2)-subsets of {1..n-1} split evenly by parity."""
    for n in range(3, max_n + 1, 2):
        for k in sorted({1, n - 2}):
            count = eo_counts(n - 1, k)
            yield Check.agreement(f"eo_{n - 1}[{k}]", ("even", count.even), ("odd", count.odd))


def run_verification(max_n: int, slow: bool = False, cache: CountsCache | None = None,
                     jobs: int = 1) -> list[Check]:
    """
    Run the whole cross-check matrix. max_n bounds the enumeration-based
    checks; the recurrence-only checks always run to their fixed ceilings.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")

    oracle_n = min(max_n, ORACLE_N_SLOW if slow else ORACLE_N)
    count_n = min(max_n, COUNT_N_SLOW if slow else COUNT_N)
    checks: list[Check] = []

    logging.debug(f"Oracle comparison up to n={oracle_n}")
    checks += [check_oracle(n) for n in range(1, oracle_n + 1)]

    logging.debug("Bijection round trip")
    checks += [check_round_trip(n) for n in range(2, min(max_n, ROUND_TRIP_N) + 1)]

    logging.debug("Determinant bridge")
    checks += [check_det_bridge(n) for n in range(1, min(max_n, DET_BRIDGE_N) + 1)]

    logging.debug(f"Enumerated counts up to n={count_n}")
    checks += list(check_counts(count_n, cache, jobs))

    logging.debug("Recurrence identities")
    checks += list(check_identities(IDENTITY_CHECK_N))
    checks += list(check_defect(count_n + 1, RECURRENCE_CHECK_N))

    logging.debug("Parity lemma")
    checks += list(check_parity_lemma(LEMMA_CHECK_M))
    checks += list(check_odd_cancellations(LEMMA_CHECK_M))

    failed = sum(1 for check in checks if not check.passed)
    logging.info(f"{len(checks)} checks run, {failed} failed")
    return checks
