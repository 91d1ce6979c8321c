"""Separability criteria: moment inequalities, Hankel positivity, baselines.

Every criterion is one-sided: a violation certifies entanglement, while
passing says nothing. Reports share one shape: the tested quantity, the
separable bound, the raw margin quantity - bound, and a violated flag
that applies the tolerance (margin > tol for inequality tests).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod, sqrt

import numpy as np

from .bloch import correlation_tensor, unfold
from .errors import NotBipartite
from .linalg import (
    DensityMatrix,
    hermitian_eigenvalues,
    partial_transpose,
    realign,
    singular_values,
    trace_norm,
)
from .moments import hankel_matrices, moments_of_state

DEFAULT_TOL = 1e-9

BIPARTITE_ORDER = (
    "ppt",
    "ccnr",
    "dv",
    "li",
    "thm1-plain",
    "thm1-canonical",
    "thm2-plain",
    "thm2-canonical",
    "thm3-plain",
    "thm3-canonical",
)
MULTIPARTITE_ORDER = ("dv", "li", "thm3-plain", "thm3-canonical")


@dataclass(frozen=True)
class CriterionReport:
    name: str
    quantity: float
    bound: float
    violated: bool
    margin: float
    detail: dict | None = field(default=None)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "quantity": self.quantity,
            "bound": self.bound,
            "violated": self.violated,
            "margin": self.margin,
            "detail": self.detail,
        }


def dv_bound(d1: int, d2: int) -> float:
    return sqrt((d1 * d1 - d1) * (d2 * d2 - d2)) / (2 * d1 * d2)


def li_bound(d1: int, d2: int) -> float:
    return sqrt((2 + d1 * d1 - d1) * (2 + d2 * d2 - d2)) / (2 * d1 * d2)


def multi_plain_bound(dims) -> float:
    return prod(sqrt((d - 1) / (2 * d)) for d in dims)


def multi_canonical_bound(dims) -> float:
    return prod(sqrt((d * d - d + 2) / (2 * d * d)) for d in dims)


def _ineq_report(name, quantity, bound, tol, detail=None) -> CriterionReport:
    margin = quantity - bound
    return CriterionReport(
        name=name,
        quantity=float(quantity),
        bound=float(bound),
        violated=bool(margin > tol),
        margin=float(margin),
        detail=detail,
    )


def theorem1(
    rho: DensityMatrix, tol: float = DEFAULT_TOL
) -> tuple[CriterionReport, CriterionReport]:
    """Moment inequalities a2^2 <= dv_bound * a3 and b2^2 <= li_bound * b3."""
    if rho.n_parties != 2:
        raise NotBipartite("theorem1 applies to bipartite states")
    d1, d2 = rho.dims
    a = moments_of_state(rho, canonical=False, K=3)
    b = moments_of_state(rho, canonical=True, K=3)
    plain = _ineq_report("thm1-plain", a[2] ** 2, dv_bound(d1, d2) * a[3], tol)
    canon = _ineq_report("thm1-canonical", b[2] ** 2, li_bound(d1, d2) * b[3], tol)
    return plain, canon


def _hankel_report(name, pair, tol, include_hk) -> CriterionReport:
    def min_eigs(mats):
        out = []
        for m in mats:
            scale = max(1.0, float(np.max(np.abs(m))))
            out.append((float(hermitian_eigenvalues(m)[-1]), scale))
        return out

    b_eigs = min_eigs(pair.b_hat)
    h_eigs = min_eigs(pair.h_hat)
    considered = b_eigs + (h_eigs if include_hk else [])
    margin = max(-lam - tol * scale for lam, scale in considered)
    quantity = max(-lam for lam, _ in considered)
    detail = {
        "b_min_eigenvalues": [lam for lam, _ in b_eigs],
        "h_min_eigenvalues": [lam for lam, _ in h_eigs],
        "include_hk": include_hk,
        "substituted_a1": pair.substituted_a1,
    }
    return CriterionReport(
        name=name,
        quantity=float(quantity),
        bound=float(quantity - margin),
        violated=bool(margin > 0),
        margin=float(margin),
        detail=detail,
    )


def theorem2(
    rho: DensityMatrix, tol: float = DEFAULT_TOL, include_hk: bool = False
) -> tuple[CriterionReport, CriterionReport]:
    """Positivity of the bound-substituted Hankel matrices.

    By default only the B_hat family is decisive: substituting the
    separable bound for a_1 enlarges a diagonal entry of B_l (PSD is
    preserved for separables) but sits off-diagonal in H_k, where the
    substitution is not monotone; H_k results are reported in the detail
    and only count toward `violated` with include_hk=True.
    """
    if rho.n_parties != 2:
        raise NotBipartite("theorem2 applies to bipartite states")
    d1, d2 = rho.dims
    a = moments_of_state(rho, canonical=False)
    b = moments_of_state(rho, canonical=True)
    pair_a = hankel_matrices(a, dv_bound(d1, d2))
    pair_b = hankel_matrices(b, li_bound(d1, d2))
    return (
        _hankel_report("thm2-plain", pair_a, tol, include_hk),
        _hankel_report("thm2-canonical", pair_b, tol, include_hk),
    )


def _unfolding_moment_test(tensor, bound, tol):
    """Per-mode test of m2^2 <= bound * m3 over all unfoldings."""
    modes = []
    for mode in range(1, tensor.n + 1):
        s = singular_values(unfold(tensor, mode))
        m2 = float(np.sum(s**2))
        m3 = float(np.sum(s**3))
        quantity = m2 * m2
        rhs = bound * m3
        modes.append(
            {
                "mode": mode,
                "quantity": quantity,
                "bound": rhs,
                "margin": quantity - rhs,
            }
        )
    worst = max(modes, key=lambda m: m["margin"])
    return worst, modes


def theorem3(
    rho: DensityMatrix, tol: float = DEFAULT_TOL
) -> tuple[CriterionReport, CriterionReport]:
    """Multipartite moment inequalities over every mode-k unfolding.

    The tensor moments are evaluated per unfolding; the state is flagged
    if the inequality fails in at least one mode (each unfolding's trace
    norm obeys the separable bound, so per-mode evaluation stays sound).
    """
    reports = []
    for extended, name, bound in (
        (False, "thm3-plain", multi_plain_bound(rho.dims)),
        (True, "thm3-canonical", multi_canonical_bound(rho.dims)),
    ):
        t = correlation_tensor(rho, extended=extended)
        worst, modes = _unfolding_moment_test(t, bound, tol)
        reports.append(
            _ineq_report(
                name, worst["quantity"], worst["bound"], tol, detail={"modes": modes}
            )
        )
    return reports[0], reports[1]


def _tensor_trace_norm(tensor) -> float:
    """Max over mode-k unfoldings of the trace norm."""
    return max(
        trace_norm(unfold(tensor, mode)) for mode in range(1, tensor.n + 1)
    )


def dv_criterion(rho: DensityMatrix, tol: float = DEFAULT_TOL) -> CriterionReport:
    """Trace-norm bound on the plain correlation tensor."""
    t = correlation_tensor(rho, extended=False)
    return _ineq_report("dv", _tensor_trace_norm(t), multi_plain_bound(rho.dims), tol)


def li_criterion(rho: DensityMatrix, tol: float = DEFAULT_TOL) -> CriterionReport:
    """Trace-norm bound on the extended (canonical) correlation tensor."""
    t = correlation_tensor(rho, extended=True)
    return _ineq_report(
        "li", _tensor_trace_norm(t), multi_canonical_bound(rho.dims), tol
    )


def ppt_criterion(rho: DensityMatrix, tol: float = DEFAULT_TOL) -> CriterionReport:
    """Negative eigenvalue of the partial transpose certifies entanglement."""
    if rho.n_parties != 2:
        raise NotBipartite("ppt applies to bipartite states")
    lam_min = float(hermitian_eigenvalues(partial_transpose(rho))[-1])
    quantity = -lam_min
    margin = quantity - tol
    return CriterionReport(
        name="ppt",
        quantity=quantity,
        bound=tol,
        violated=bool(margin > 0),
        margin=margin,
        detail={"min_eigenvalue": lam_min},
    )


def ccnr_criterion(rho: DensityMatrix, tol: float = DEFAULT_TOL) -> CriterionReport:
    """Trace norm of the realigned matrix exceeding 1 certifies entanglement."""
    if rho.n_parties != 2:
        raise NotBipartite("ccnr applies to bipartite states")
    return _ineq_report("ccnr", trace_norm(realign(rho)), 1.0, tol)


def evaluate_all(
    rho: DensityMatrix, tol: float = DEFAULT_TOL, include_hk: bool = False
) -> list[CriterionReport]:
    """Run every applicable criterion; errors become per-report markers."""
    bipartite = rho.n_parties == 2
    order = BIPARTITE_ORDER if bipartite else MULTIPARTITE_ORDER
    results: dict[str, CriterionReport] = {}

    def run(names, fn):
        try:
            out = fn()
        except Exception as exc:  # pragma: no cover - defensive batch path
            for nm in names:
                results[nm] = CriterionReport(
                    name=nm, quantity=0.0, bound=0.0, violated=False,
                    margin=0.0, detail={"error": str(exc)},
                )
        else:
            if isinstance(out, CriterionReport):
                out = (out,)
            for rep in out:
                results[rep.name] = rep

    if bipartite:
        run(["ppt"], lambda: ppt_criterion(rho, tol))
        run(["ccnr"], lambda: ccnr_criterion(rho, tol))
        run(["thm1-plain", "thm1-canonical"], lambda: theorem1(rho, tol))
        run(
            ["thm2-plain", "thm2-canonical"],
            lambda: theorem2(rho, tol, include_hk=include_hk),
        )
    run(["dv"], lambda: dv_criterion(rho, tol))
    run(["li"], lambda: li_criterion(rho, tol))
    run(["thm3-plain", "thm3-canonical"], lambda: theorem3(rho, tol))
    return [results[name] for name in order]
