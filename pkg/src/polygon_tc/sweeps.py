"""Batch computations over families of genetic codes.

Sweeps return plain rows so the CLI and the test-suite share one code path.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable

from .cohomology import CohContext
from .combinatorics import as_mask, lg
from .monogenic import abar_reduce, gaps_from_gee
from .polygons import GeneticCode, Unrealizable, enumerate_codes, format_gene, is_realizable
from .tc_bounds import TcReport, tc_report


@dataclass(frozen=True)
class SweepRow:
    code: str
    n: int
    dims: str
    rm_zero: bool
    tc_lower: int
    tc_upper: int
    method: str
    special_case: str | None
    exceptional: bool

    def to_dict(self) -> dict:
        return asdict(self)


def sweep_row(code: GeneticCode, top_degree: bool = False) -> tuple[SweepRow, TcReport]:
    report = tc_report(code, top_degree=top_degree)
    dims = CohContext(code).dims()
    row = SweepRow(
        code=str(code),
        n=code.n,
        dims="-".join(map(str, dims)),
        rm_zero=report.phi_Rm == 0,
        tc_lower=report.tc_lower,
        tc_upper=report.tc_upper,
        method=report.method,
        special_case=report.special_case,
        exceptional=report.exceptional,
    )
    return row, report


def run_rows(codes: Iterable[GeneticCode], jobs: int = 1, top_degree: bool = False) -> list[tuple[SweepRow, TcReport]]:
    """Reports for each code, in the order given, independent of ``jobs``."""
    codes = list(codes)
    if jobs <= 1:
        return [sweep_row(c, top_degree) for c in codes]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda c: sweep_row(c, top_degree), codes))


def sweep(n: int, jobs: int = 1, top_degree: bool = False) -> list[tuple[SweepRow, TcReport]]:
    return run_rows(enumerate_codes(n), jobs, top_degree)


def exceptional_codes(rows: Iterable[tuple[SweepRow, TcReport]]) -> list[str]:
    return [row.code for row, _ in rows if row.exceptional]


# --- single-gene families -------------------------------------------------------


def monogenic_codes(k: int, n: int) -> list[GeneticCode]:
    """Realizable codes on ``n`` sides whose only gee has ``k`` elements."""
    out = []
    for items in combinations(range(1, n), k):
        try:
            code = GeneticCode(n, (as_mask(items),))
        except Unrealizable:
            continue
        if is_realizable(code):
            out.append(code)
    return sorted(out, key=GeneticCode.sort_key)


def explicit_bound(k: int) -> int:
    """Largest ``n`` not covered by the general theorem for gees of size ``k``.

    For ``m >= k + 2^lg(k)`` every code with a single gee of size ``k`` has a
    degree ``2m - 1`` certificate: the minimal nonzero top monomial has
    ``r <= k`` factors, so the ``R^m = 0`` construction applies, and the
    ``R^m != 0`` constructions only need supports of size ``<= k <= m``.
    """
    return k + (1 << lg(k)) - 1 + 3


@dataclass
class MonogenicSweep:
    gene_size: int
    rows: list[tuple[SweepRow, TcReport]]
    tail: list[tuple[SweepRow, TcReport]]

    @property
    def exceptional(self) -> list[str]:
        """Genes whose certified zero-divisor cup length is below ``2n - 7`` (torus included)."""
        return [row.code for row, _ in self.rows + self.tail if row.tc_lower < 2 * row.n - 6]

    def residues(self) -> dict[str, tuple[int, ...]]:
        out = {}
        for row, _ in self.rows + self.tail:
            code = GeneticCode.parse(row.code)
            out[row.code] = abar_reduce(gaps_from_gee(code.gees[0]))
        return out


def monogenic_sweep(gene_size: int, jobs: int = 1, tail: int = 1) -> MonogenicSweep:
    """Every single-gene code with genes of ``gene_size`` elements below the theorem's range.

    ``tail`` extra values of ``n`` past the explicit range are also computed
    for the gees whose reduced gaps are all one, as a spot check of the
    general argument.
    """
    k = gene_size - 1
    hi = explicit_bound(k)
    codes = [c for n in range(k + 1, hi + 1) for c in monogenic_codes(k, n)]
    rows = run_rows(codes, jobs)
    extra = []
    for n in range(hi + 1, hi + 1 + tail):
        extra.extend(
            c for c in monogenic_codes(k, n) if all(x == 1 for x in abar_reduce(gaps_from_gee(c.gees[0])))
        )
    return MonogenicSweep(gene_size, rows, run_rows(extra, jobs))


def gene_name(code: GeneticCode) -> str:
    return format_gene(code.n, code.gees[0])
