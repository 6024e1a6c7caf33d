"""Exact spectra of the point-line graphs.

Every eigenvalue is +/- sqrt(q * N) where N is the number of roots of one
weight polynomial, so the whole spectrum is carried as (sign, radicand)
pairs with exact integer radicands and multiplicities.  No floats enter the
bookkeeping; the expander bound exposes a float only for display.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, ThetaNotInjective, UnsupportedRegime
from .fields import fq_rank
from .graphs import FamilySpec, Graph
from .linearized import count_roots, rank_count

DEFAULT_EVAL_BUDGET = 10**8


@dataclass(frozen=True)
class SpectrumEntry:
    """One eigenvalue class: sign * sqrt(radicand) with its multiplicity.

    sign is +1, -1, or 0 (the zero eigenvalue carries sign 0, radicand 0)."""

    sign: int
    radicand: int
    multiplicity: int

    def eigenvalue_str(self) -> str:
        if self.sign == 0:
            return "0"
        mark = "+" if self.sign > 0 else "-"
        r = self.radicand
        root = _isqrt_exact(r)
        return f"{mark}{root}" if root is not None else f"{mark}sqrt({r})"


def _isqrt_exact(n: int) -> int | None:
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


@dataclass(frozen=True)
class SpectrumReport:
    """Full spectrum of one graph, entries in canonical order: radicand
    descending, + before -, the zero class last.  Multiplicities over both
    sides sum to 2 q^(m+1); the zero entry counts both halves."""

    spec: FamilySpec
    entries: tuple[SpectrumEntry, ...]
    provenance: str

    @property
    def total_multiplicity(self) -> int:
        return sum(en.multiplicity for en in self.entries)

    def histogram(self) -> dict[int, int]:
        """Root-count histogram {N: number of weight vectors with N roots}."""
        q = self.spec.q
        hist: dict[int, int] = {}
        for en in self.entries:
            if en.sign == 1:
                hist[en.radicand // q] = en.multiplicity
            elif en.sign == 0:
                hist[0] = en.multiplicity // 2
        return hist

    def multiplicity_of(self, sign: int, radicand: int) -> int:
        for en in self.entries:
            if en.sign == sign and en.radicand == radicand:
                return en.multiplicity
        return 0

    def second_largest_radicand(self) -> int | None:
        radicands = sorted({en.radicand for en in self.entries}, reverse=True)
        return radicands[1] if len(radicands) > 1 else None

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.to_json_dict(),
            "entries": [
                {
                    "sign": en.sign,
                    "radicand": str(en.radicand),
                    "multiplicity": str(en.multiplicity),
                }
                for en in self.entries
            ],
            "total": str(self.total_multiplicity),
            "provenance": self.provenance,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SpectrumReport":
        sp = data["spec"]
        spec = FamilySpec(
            sp["p"],
            sp["e"],
            sp["m"],
            sp["family"],
            tuple(sp["modulus"]) if sp.get("modulus") else None,
            tuple(tuple(x) for x in sp["f_list"]) if sp.get("f_list") else None,
        )
        entries = tuple(
            SpectrumEntry(int(en["sign"]), int(en["radicand"]), int(en["multiplicity"]))
            for en in data["entries"]
        )
        return cls(spec, entries, data["provenance"])

    def same_spectrum(self, other: "SpectrumReport") -> bool:
        mine = {(en.sign, en.radicand): en.multiplicity for en in self.entries}
        them = {(en.sign, en.radicand): en.multiplicity for en in other.entries}
        return mine == them


def _report_from_histogram(spec: FamilySpec, hist: dict[int, int], provenance: str) -> SpectrumReport:
    q = spec.q
    entries = []
    for n_roots in sorted((k for k in hist if k > 0), reverse=True):
        count = hist[n_roots]
        entries.append(SpectrumEntry(1, q * n_roots, count))
        entries.append(SpectrumEntry(-1, q * n_roots, count))
    zero = hist.get(0, 0)
    if zero:
        entries.append(SpectrumEntry(0, 0, 2 * zero))
    return SpectrumReport(spec, tuple(entries), provenance)


def spectrum_enumerate(spec: FamilySpec, max_evals: int = DEFAULT_EVAL_BUDGET) -> SpectrumReport:
    """Spectrum by sweeping every weight vector and counting its roots.

    The Frobenius family uses the structured root count per weight vector;
    other families sweep the field, so the cost is q^(m+1) * q evaluations
    and is guarded by max_evals.
    """
    if not spec.theta_injective:
        raise ThetaNotInjective(
            "spectrum bookkeeping assumes distinct generator tuples; "
            "this custom family repeats one"
        )
    q = spec.q
    total_w = q ** (spec.m + 1)
    if total_w * q > max_evals:
        raise BudgetExceeded(
            f"{total_w * q} evaluations exceed the budget {max_evals}"
        )
    hist: dict[int, int] = {}
    for widx in range(total_w):
        w = spec.weight_tuple(widx)
        n = count_roots(spec.lin_poly(w))
        hist[n] = hist.get(n, 0) + 1
    return _report_from_histogram(spec, hist, "enumerated")


@dataclass(frozen=True)
class MultiplicityTable:
    """Closed-form root-count multiplicities for the Frobenius family with
    m >= e.  root_mults[i] counts weight vectors with p^i roots; zero_mult
    counts those with none.  Both already include the q^(m-e) scale."""

    p: int
    e: int
    m: int
    root_mults: dict[int, int]
    zero_mult: int

    @property
    def scale(self) -> int:
        return (self.p**self.e) ** (self.m - self.e)

    def histogram(self) -> dict[int, int]:
        hist = {self.p**i: n for i, n in self.root_mults.items()}
        if self.zero_mult:
            hist[0] = self.zero_mult
        return hist

    def to_report(self, spec: FamilySpec) -> SpectrumReport:
        return _report_from_histogram(spec, self.histogram(), "closed_form")


def closed_form_linearized(p: int, e: int, m: int) -> MultiplicityTable:
    """Multiplicity table for the Frobenius family when m >= e.

    With m = e the weight-to-linear-map correspondence is a bijection, so the
    number of weight vectors whose linear part has kernel dimension i equals
    the number of e x e matrices over F_p of rank e - i; each contributes
    p^(e-i) admissible constants (image membership) and p^e - p^(e-i)
    non-members.  For m > e everything scales by q^(m-e)."""
    if m < e:
        raise UnsupportedRegime(
            f"closed form requires m >= e; m={m}, e={e} is enumeration-only"
        )
    q = p**e
    scale = q ** (m - e)
    root_mults = {}
    zero = 0
    for i in range(e + 1):
        kernels = rank_count(e, e, e - i, p)
        root_mults[i] = p ** (e - i) * kernels * scale
        if i >= 1:
            zero += (p**e - p ** (e - i)) * kernels * scale
    return MultiplicityTable(p, e, m, root_mults, zero)


def component_count_formula(spec: FamilySpec) -> int:
    """q^(m+1-r) where r is the rank over the field of the functions
    (1, f_2, ..., f_(m+1)) on their q evaluation points."""
    F = spec.field
    rows = [[F.one] * F.q]
    for k in range(2, spec.m + 2):
        rows.append([spec.f_eval(k, u) for u in F.elements()])
    r = fq_rank(F, rows)
    return F.q ** (spec.m + 1 - r)


def walk_trace(graph: Graph, k: int) -> int:
    """trace(A^(2k)) as an exact integer, 1 <= k <= 4.

    A is symmetric, so trace(A^(2k)) is the sum of squared entries of A^k;
    the sparse power stays in int64 under the size guard below, otherwise a
    pure-python accumulation takes over."""
    if not 1 <= k <= 4:
        raise ValueError(f"walk exponent k must be in [1, 4], got {k}")
    graph.materialize()
    n, q = graph.n, graph.spec.q
    if n * q ** (2 * k) < 2**62:
        import numpy as np

        A = graph.csr()
        M = A.astype(np.int64)
        for _ in range(k - 1):
            M = M @ A
        return int(np.sum(M.data.astype(object) ** 2))
    total = 0
    adj = graph.adjacency
    for v in range(n):
        weights = {v: 1}
        for _ in range(k):
            nxt: dict[int, int] = {}
            for u, c in weights.items():
                for nb in adj[u]:
                    nxt[nb] = nxt.get(nb, 0) + c
            weights = nxt
        total += sum(c * c for c in weights.values())
    return total


@dataclass(frozen=True)
class ExpansionBound:
    """Edge-expansion lower bound (q - sqrt(radicand)) / divisor, kept as an
    exact radicand pair; radicand is also the second-largest squared
    eigenvalue q * p^(e-1) for the connected Frobenius-family graphs."""

    q: int
    radicand: int
    divisor: int = 2

    @property
    def approx(self) -> float:
        import math

        return (self.q - math.sqrt(self.radicand)) / self.divisor


def expansion_bound(p: int, e: int) -> ExpansionBound:
    q = p**e
    return ExpansionBound(q=q, radicand=q * p ** (e - 1))
