"""Fractional matching and transversal LPs for deletion hypergraphs.

The float path uses scipy's HiGHS backend and certifies the result
afterwards with exact rational arithmetic: the returned primal is scaled
into exact feasibility, the dual marginals are scaled the other way, and
the optimum is thereby enclosed in a rational interval whose width is a
solver-accuracy artifact (reported, never hidden).

The exact path is a dense tableau simplex over `fractions.Fraction` with
Bland's anti-cycling rule, for instances small enough to afford it.  It
solves the matching LP and reads the optimal transversal off the final
tableau (slack reduced costs), so both optima come out as one rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy import sparse
from scipy.optimize import linprog

from .errors import ResourceLimitError
from .hypergraph import DeletionHypergraph, verify_matching, verify_transversal

EXACT_VARIABLE_CAP = 1 << 10


@dataclass(frozen=True)
class LpProblem:
    """A set-packing ('max', '<=') or set-covering ('min', '>=') LP.

    Every constraint coefficient is 1, every right-hand side is 1, and
    variables are nonnegative; `rows` lists the variable indices of each
    constraint.
    """

    name: str
    sense: str  # "max" or "min"
    num_vars: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.sense not in ("max", "min"):
            raise ValueError(f"sense must be 'max' or 'min', got {self.sense!r}")


@dataclass
class LpSolution:
    status: str  # "optimal" | "infeasible" | "resource-limit"
    value: float
    weights: list
    exact: Fraction | None = None
    certified_lower: Fraction | None = None
    certified_upper: Fraction | None = None
    gap: float | None = None

    def floor(self, tol: float = 1e-6) -> int:
        """Floor of the optimum with a tolerance for float wobble below integers."""
        import math

        if self.exact is not None:
            return math.floor(self.exact)
        return math.floor(self.value + tol)


def matching_problem(hg: DeletionHypergraph) -> LpProblem:
    return LpProblem(
        name=f"matching_q{hg.q}_s{hg.s}_n{hg.n}",
        sense="max",
        num_vars=hg.num_edges,
        rows=hg.covering_edges(),
    )


def transversal_problem(hg: DeletionHypergraph) -> LpProblem:
    return LpProblem(
        name=f"transversal_q{hg.q}_s{hg.s}_n{hg.n}",
        sense="min",
        num_vars=hg.num_vertices,
        rows=hg.incidence,
    )


def _constraint_matrix(problem: LpProblem) -> sparse.csr_matrix:
    indptr = [0]
    indices: list[int] = []
    for row in problem.rows:
        indices.extend(row)
        indptr.append(len(indices))
    data = np.ones(len(indices))
    return sparse.csr_matrix(
        (data, indices, indptr), shape=(len(problem.rows), problem.num_vars)
    )


def solve_float(problem: LpProblem) -> LpSolution:
    """Solve with HiGHS and attach exact rational certificates.

    For a packing LP the scaled primal is a true lower bound and the
    scaled dual a true upper bound on the optimum (and vice versa for a
    covering LP), so `certified_lower <= optimum <= certified_upper`
    holds unconditionally.
    """
    a = _constraint_matrix(problem)
    m = len(problem.rows)
    if problem.sense == "max":
        res = linprog(
            c=-np.ones(problem.num_vars),
            A_ub=a,
            b_ub=np.ones(m),
            bounds=(0, None),
            method="highs-ipm",
        )
    else:
        res = linprog(
            c=np.ones(problem.num_vars),
            A_ub=-a,
            b_ub=-np.ones(m),
            bounds=(0, None),
            method="highs-ipm",
        )
    if res.status != 0:
        return LpSolution(status="infeasible", value=float("nan"), weights=[])

    primal = [max(0.0, float(v)) for v in res.x]
    duals = [max(0.0, float(v)) for v in np.abs(res.ineqlin.marginals)]
    value = -res.fun if problem.sense == "max" else res.fun

    if problem.sense == "max":
        lower = _certify_packing(problem.rows, problem.num_vars, primal)
        upper = _certify_covering_from_dual(problem.rows, problem.num_vars, duals)
    else:
        upper = _certify_covering(problem.rows, problem.num_vars, primal)
        lower = _certify_packing_from_dual(problem.rows, problem.num_vars, duals)

    gap = float(upper - lower) if (upper is not None and lower is not None) else None
    return LpSolution(
        status="optimal",
        value=float(value),
        weights=primal,
        certified_lower=lower,
        certified_upper=upper,
        gap=gap,
    )


def _row_sums(rows, num_vars, values) -> tuple[list[Fraction], list[Fraction]]:
    vals = [Fraction(v) for v in values]
    return [sum((vals[j] for j in row), Fraction(0)) for row in rows], vals


def _certify_packing(rows, num_vars, values) -> Fraction:
    """Scale a nonnegative vector into exact packing feasibility; return its weight."""
    sums, vals = _row_sums(rows, num_vars, values)
    worst = max(sums, default=Fraction(0))
    total = sum(vals, Fraction(0))
    if worst > 1:
        total = total / worst
    return total

def _certify_covering(rows, num_vars, values) -> Fraction | None:
    """Scale a nonnegative vector into exact covering feasibility; return its weight."""
    sums, vals = _row_sums(rows, num_vars, values)
    worst = min(sums, default=Fraction(1))
    if worst <= 0:
        return None
    total = sum(vals, Fraction(0))
    if worst < 1:
        total = total / worst
    return total


def _certify_covering_from_dual(rows, num_vars, duals) -> Fraction | None:
    # dual of a packing LP is the covering LP on the transposed incidence
    cols = _transpose(rows, num_vars)
    return _certify_covering(cols, len(rows), duals)


def _certify_packing_from_dual(rows, num_vars, duals) -> Fraction:
    cols = _transpose(rows, num_vars)
    return _certify_packing(cols, len(rows), duals)


def _transpose(rows, num_vars) -> list[tuple[int, ...]]:
    cols: list[list[int]] = [[] for _ in range(num_vars)]
    for i, row in enumerate(rows):
        for j in row:
            cols[j].append(i)
    return [tuple(c) for c in cols]


# ---------------------------------------------------------------------------
# Exact rational simplex
# ---------------------------------------------------------------------------


def _simplex_packing_exact(rows, num_vars) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Maximize 1'x subject to (0,1)-rows summing to <= 1, x >= 0.

    Returns (value, primal x, dual y).  Dense tableau, Bland's rule; the
    all-slack basis is feasible so no phase one is needed.
    """
    m = len(rows)
    n = num_vars
    width = n + m + 1
    zero, one = Fraction(0), Fraction(1)
    tableau = []
    for i, row in enumerate(rows):
        t = [zero] * width
        for j in row:
            t[j] = one
        t[n + i] = one
        t[-1] = one
        tableau.append(t)
    # objective row carries z_j - c_j
    obj = [-one] * n + [zero] * m + [zero]
    basis = [n + i for i in range(m)]

    while True:
        enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        ratio_best = None
        leave = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                r = tableau[i][-1] / a
                if ratio_best is None or r < ratio_best or (
                    r == ratio_best and basis[i] < basis[leave]
                ):
                    ratio_best = r
                    leave = i
        if leave is None:
            raise ArithmeticError("packing LP is bounded; unbounded pivot indicates a bug")
        piv = tableau[leave][enter]
        prow = [v / piv for v in tableau[leave]]
        tableau[leave] = prow
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [v - f * p for v, p in zip(tableau[i], prow)]
        f = obj[enter]
        if f != 0:
            obj = [v - f * p for v, p in zip(obj, prow)]
        basis[leave] = enter

    x = [zero] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tableau[i][-1]
    y = [obj[n + i] for i in range(m)]
    value = sum(x, zero)
    return value, x, y


def solve_exact(problem: LpProblem) -> LpSolution:
    """Exact rational optimum via the tableau simplex (small instances only)."""
    if problem.num_vars > EXACT_VARIABLE_CAP:
        raise ResourceLimitError(
            f"{problem.num_vars} variables exceeds exact-mode cap {EXACT_VARIABLE_CAP}"
        )
    if problem.sense == "max":
        value, x, _ = _simplex_packing_exact(problem.rows, problem.num_vars)
        weights = x
    else:
        # covering optimum = packing optimum on the transposed incidence;
        # its optimal solution is the packing dual
        cols = _transpose(problem.rows, problem.num_vars)
        value, _, y = _simplex_packing_exact(cols, len(problem.rows))
        weights = y
    return LpSolution(
        status="optimal",
        value=float(value),
        weights=weights,
        exact=value,
        certified_lower=value,
        certified_upper=value,
        gap=0.0,
    )


def solve(problem: LpProblem, mode: str = "float") -> LpSolution:
    if mode == "float":
        return solve_float(problem)
    if mode == "exact":
        return solve_exact(problem)
    raise ValueError(f"mode must be 'float' or 'exact', got {mode!r}")


def solve_fractional_matching(
    hg: DeletionHypergraph, mode: str = "float"
) -> LpSolution:
    """Optimal fractional matching value of the hypergraph (the LP-UB quantity)."""
    sol = solve(matching_problem(hg), mode)
    if sol.status == "optimal":
        ok, _ = verify_matching(hg, sol.weights, tol=0 if sol.exact is not None else 1e-9)
        assert ok, "solver returned an infeasible matching"
    return sol


def solve_fractional_transversal(
    hg: DeletionHypergraph, mode: str = "float"
) -> LpSolution:
    sol = solve(transversal_problem(hg), mode)
    if sol.status == "optimal":
        ok, _ = verify_transversal(hg, sol.weights, tol=0 if sol.exact is not None else 1e-9)
        assert ok, "solver returned an infeasible transversal"
    return sol


# ---------------------------------------------------------------------------
# MPS interchange
# ---------------------------------------------------------------------------


def read_mps(text: str) -> LpProblem:
    """Parse the MPS dialect written by `hypergraph.to_mps`.

    Accepts OBJSENSE MAX/MIN, N/L/G rows, unit coefficients and unit
    right-hand sides, which is exactly the packing/covering shape this
    package trades in.
    """
    sense = "min"
    section = None
    row_order: list[str] = []
    row_types: dict[str, str] = {}
    col_entries: dict[str, list[str]] = {}
    col_order: list[str] = []
    name = "mps"
    for raw in text.splitlines():
        line = raw.rstrip()
        if not line or line.startswith("*"):
            continue
        if not raw[0].isspace():
            parts = line.split()
            keyword = parts[0].upper()
            if keyword == "NAME":
                name = parts[1] if len(parts) > 1 else name
                continue
            section = keyword
            if section == "ENDATA":
                break
            continue
        parts = line.split()
        if section == "OBJSENSE":
            sense = parts[0].lower()
        elif section == "ROWS":
            rtype, rname = parts[0].upper(), parts[1]
            if rtype != "N":
                row_order.append(rname)
                row_types[rname] = rtype
        elif section == "COLUMNS":
            cname = parts[0]
            if cname not in col_entries:
                col_entries[cname] = []
                col_order.append(cname)
            for rname, val in zip(parts[1::2], parts[2::2]):
                if rname == "OBJ":
                    if Fraction(val) != 1:
                        raise ValueError("only unit objectives are supported")
                    continue
                if Fraction(val) != 1:
                    raise ValueError("only unit coefficients are supported")
                col_entries[cname].append(rname)
        elif section == "RHS":
            for rname, val in zip(parts[1::2], parts[2::2]):
                if Fraction(val) != 1:
                    raise ValueError("only unit right-hand sides are supported")
    types = set(row_types.values())
    if types - {"L", "G"} or len(types) != 1:
        raise ValueError(f"expected uniform L or G rows, got {sorted(types)}")
    col_index = {c: j for j, c in enumerate(col_order)}
    rows_by_name: dict[str, list[int]] = {r: [] for r in row_order}
    for cname, rnames in col_entries.items():
        for rname in rnames:
            rows_by_name[rname].append(col_index[cname])
    rows = tuple(tuple(sorted(rows_by_name[r])) for r in row_order)
    expected = "max" if types == {"L"} else "min"
    if sense != expected:
        raise ValueError(f"OBJSENSE {sense} inconsistent with {types} rows")
    return LpProblem(name=name, sense=sense, num_vars=len(col_order), rows=rows)
