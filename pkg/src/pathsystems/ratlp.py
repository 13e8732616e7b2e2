"""Exact rational linear feasibility with Farkas infeasibility certificates.

Constraints are <a,x> >= rhs (inequalities) and <a,x> = rhs (equalities)
over free variables by default; `nonnegative_vars=True` constrains every
variable to be >= 0 natively (the certificate then carries one extra
non-negative multiplier per variable bound).

Two solution strategies, both exact and both using Bland's anti-cycling
pivot rule:

* direct phase-1 simplex on the standard form (used when the system has
  few rows, or when variables are non-negative);
* phase-1 simplex on the Farkas certificate system (used when rows far
  outnumber variables; its dual vector yields a primal witness).

Either way the verdict is identical: every returned witness is re-checked
against all constraints exactly, and every certificate is re-verified,
before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rational import Q, ZERO, ONE

__all__ = [
    "LinearSystem",
    "FarkasCertificate",
    "FeasibilityResult",
    "OptimizeResult",
    "solve_feasibility",
    "maximize",
    "verify_certificate",
]


def _qvec(values, length=None):
    vec = tuple(Q(v) for v in values)
    if length is not None and len(vec) != length:
        raise ValueError(f"expected vector of length {length}, got {len(vec)}")
    return vec


@dataclass(frozen=True)
class LinearSystem:
    """Exact linear constraint system.

    equalities: (coeffs, rhs) meaning <coeffs, x> = rhs
    inequalities: (coeffs, rhs) meaning <coeffs, x> >= rhs
    """

    num_vars: int
    equalities: tuple = ()
    inequalities: tuple = ()
    objective: tuple | None = None
    nonnegative_vars: bool = False

    def __post_init__(self):
        eqs = tuple((_qvec(a, self.num_vars), Q(b)) for a, b in self.equalities)
        ineqs = tuple((_qvec(a, self.num_vars), Q(b)) for a, b in self.inequalities)
        object.__setattr__(self, "equalities", eqs)
        object.__setattr__(self, "inequalities", ineqs)
        if self.objective is not None:
            object.__setattr__(self, "objective", _qvec(self.objective, self.num_vars))


@dataclass(frozen=True)
class FarkasCertificate:
    """Multipliers proving infeasibility.

    lam (one per inequality, >= 0) and beta (one per equality, free)
    combine the constraint rows to the zero vector while combining the
    right-hand sides to something positive.  For systems declared with
    nonnegative_vars, `bound` holds one multiplier >= 0 per variable
    bound x_j >= 0.
    """

    lam: tuple = ()
    beta: tuple = ()
    bound: tuple | None = None


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    solution: tuple | None = None
    certificate: FarkasCertificate | None = None


@dataclass(frozen=True)
class OptimizeResult:
    status: str  # "optimal" | "unbounded" | "infeasible"
    value: object = None
    solution: tuple | None = None
    certificate: FarkasCertificate | None = None


# ---------------------------------------------------------------------------
# Tableau simplex core (min, equality standard form, Bland's rule)
# ---------------------------------------------------------------------------


class _Tableau:
    """Dense tableau for min c.z s.t. A z = b, z >= 0 with b >= 0.

    m artificial columns are appended and form the initial basis.
    """

    def __init__(self, rows, rhs):
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.width = self.n + self.m  # artificials appended
        self.T = []
        for i, row in enumerate(rows):
            art = [ZERO] * self.m
            art[i] = ONE
            self.T.append(list(row) + art + [rhs[i]])
        self.basis = [self.n + i for i in range(self.m)]
        # Phase-1 reduced costs: c = (0..0, 1..1); y = all-ones.
        self.cost = [ZERO] * (self.width + 1)
        for j in range(self.n):
            s = ZERO
            for i in range(self.m):
                s += self.T[i][j]
            self.cost[j] = -s
        self.cost[self.width] = -sum((r[self.width] for r in self.T), ZERO)

    @property
    def objective(self):
        return -self.cost[self.width]

    def pivot(self, r, c):
        T = self.T
        row = T[r]
        piv = row[c]
        if piv != ONE:
            inv = ONE / piv
            T[r] = row = [x * inv for x in row]
        for other in T:
            if other is row:
                continue
            f = other[c]
            if f:
                for j, rv in enumerate(row):
                    if rv:
                        other[j] -= f * rv
        f = self.cost[c]
        if f:
            for j, rv in enumerate(row):
                if rv:
                    self.cost[j] -= f * rv
        self.basis[r] = c

    def run(self, allowed):
        """Bland's rule over columns < allowed; returns "optimal" or "unbounded"."""
        T, cost = self.T, self.cost
        while True:
            enter = -1
            for j in range(allowed):
                if cost[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave = -1
            best = None
            for i in range(self.m):
                a = T[i][enter]
                if a > 0:
                    ratio = T[i][self.width] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return "unbounded"
            self.pivot(leave, enter)

    def phase1(self):
        """Minimize the artificial sum; returns the optimum (>= 0)."""
        status = self.run(self.n)
        assert status == "optimal"  # phase-1 objective is bounded below by 0
        return self.objective

    def duals(self):
        """Phase-1 dual vector y (length m), from artificial reduced costs."""
        return [ONE - self.cost[self.n + i] for i in range(self.m)]

    def solution(self):
        z = [ZERO] * self.n
        for i, bv in enumerate(self.basis):
            if bv < self.n:
                z[bv] = self.T[i][self.width]
        return z

    def drive_out_artificials(self):
        """Pivot artificials out of the basis; drop redundant rows."""
        keep = []
        for i in range(self.m):
            if self.basis[i] < self.n:
                keep.append(i)
                continue
            piv_col = -1
            for j in range(self.n):
                if self.T[i][j]:
                    piv_col = j
                    break
            if piv_col >= 0:
                self.pivot(i, piv_col)
                keep.append(i)
            # else: redundant all-zero row, drop it
        self.T = [self.T[i] for i in keep]
        self.basis = [self.basis[i] for i in keep]
        self.m = len(self.T)

    def set_objective(self, c):
        """Install reduced costs for a new objective vector (length n)."""
        cost = list(c) + [ZERO] * (self.width - self.n) + [ZERO]
        for i, bv in enumerate(self.basis):
            cb = cost[bv] if bv < self.n else ZERO
            if cb:
                for j, rv in enumerate(self.T[i]):
                    if rv:
                        cost[j] -= cb * rv
        # Zero out reduced costs of basic columns exactly.
        for bv in self.basis:
            cost[bv] = ZERO
        self.cost = cost


# ---------------------------------------------------------------------------
# Standard-form construction
# ---------------------------------------------------------------------------


def _standard_form(system, with_objective=False):
    """Equality standard form with non-negative variables and rhs >= 0.

    Returns (rows, rhs, signs, col_info, obj) where signs[i] is the +-1
    applied to original row i, and col_info maps structural columns back
    to variables for solution extraction.
    """
    V = system.num_vars
    nn = system.nonnegative_vars
    nx = V if nn else 2 * V
    n_ineq = len(system.inequalities)
    width = nx + n_ineq
    rows, rhs, signs = [], [], []
    originals = list(system.equalities) + list(system.inequalities)
    for idx, (a, b) in enumerate(originals):
        surplus = idx - len(system.equalities)  # >= 0 for inequality rows
        row = [ZERO] * width
        for v in range(V):
            if nn:
                row[v] = a[v]
            else:
                row[v] = a[v]
                row[V + v] = -a[v]
        if surplus >= 0:
            row[nx + surplus] = -ONE
        if b < 0:
            row = [-x for x in row]
            b = -b
            signs.append(-ONE)
        else:
            signs.append(ONE)
        rows.append(row)
        rhs.append(b)
    obj = None
    if with_objective and system.objective is not None:
        obj = [ZERO] * width
        for v in range(V):
            if nn:
                obj[v] = system.objective[v]
            else:
                obj[v] = system.objective[v]
                obj[V + v] = -system.objective[v]
    return rows, rhs, signs, nx, obj


def _extract_x(system, z):
    V = system.num_vars
    if system.nonnegative_vars:
        return tuple(z[:V])
    return tuple(z[v] - z[V + v] for v in range(V))


def _check_solution(system, x):
    for a, b in system.equalities:
        if sum((ai * xi for ai, xi in zip(a, x)), ZERO) != b:
            return False
    for a, b in system.inequalities:
        if sum((ai * xi for ai, xi in zip(a, x)), ZERO) < b:
            return False
    if system.nonnegative_vars and any(xi < 0 for xi in x):
        return False
    return True


def verify_certificate(system, cert):
    """Exact Farkas check, independent of how the certificate was found."""
    n_eq, n_ineq = len(system.equalities), len(system.inequalities)
    if len(cert.lam) != n_ineq or len(cert.beta) != n_eq:
        return False
    if any(l < 0 for l in cert.lam):
        return False
    bound = cert.bound
    if bound is not None:
        if not system.nonnegative_vars or len(bound) != system.num_vars:
            return False
        if any(m < 0 for m in bound):
            return False
    combo = [ZERO] * system.num_vars
    total = ZERO
    for (a, b), beta in zip(system.equalities, cert.beta):
        if beta:
            for v in range(system.num_vars):
                combo[v] += beta * a[v]
            total += beta * b
    for (a, b), lam in zip(system.inequalities, cert.lam):
        if lam:
            for v in range(system.num_vars):
                combo[v] += lam * a[v]
            total += lam * b
    if bound is not None:
        for v in range(system.num_vars):
            combo[v] += bound[v]
    if any(c != 0 for c in combo):
        return False
    return total > 0


def _feasibility_direct(system):
    rows, rhs, signs, nx, _ = _standard_form(system)
    if not rows:
        x = tuple(ZERO for _ in range(system.num_vars))
        return FeasibilityResult(True, solution=x)
    tab = _Tableau(rows, rhs)
    opt = tab.phase1()
    if opt == 0:
        x = _extract_x(system, tab.solution())
        assert _check_solution(system, x)
        return FeasibilityResult(True, solution=x)
    y = tab.duals()
    n_eq = len(system.equalities)
    u = [signs[i] * y[i] for i in range(len(y))]
    beta = tuple(u[:n_eq])
    lam = tuple(u[n_eq:])
    bound = None
    if system.nonnegative_vars:
        # Sum of rows is <= 0 componentwise; bound multipliers close the gap.
        combo = [ZERO] * system.num_vars
        for (a, _), m in zip(system.equalities, beta):
            for v in range(system.num_vars):
                combo[v] += m * a[v]
        for (a, _), m in zip(system.inequalities, lam):
            for v in range(system.num_vars):
                combo[v] += m * a[v]
        bound = tuple(-c for c in combo)
    cert = FarkasCertificate(lam=lam, beta=beta, bound=bound)
    assert verify_certificate(system, cert)
    return FeasibilityResult(False, certificate=cert)


def _feasibility_via_dual(system):
    """Search for a Farkas certificate; its absence yields a primal witness.

    The certificate system has num_vars+1 rows, so this route is the fast
    one when constraints vastly outnumber variables.
    """
    V = system.num_vars
    n_eq, n_ineq = len(system.equalities), len(system.inequalities)
    m = V + 1
    cols = []  # each: length-m column vector
    for a, b in system.inequalities:
        cols.append(list(a) + [b])
    for a, b in system.equalities:
        cols.append(list(a) + [b])
        cols.append([-x for x in a] + [-b])
    rows = [[col[i] for col in cols] for i in range(m)]
    rhs = [ZERO] * V + [ONE]
    tab = _Tableau(rows, rhs)
    opt = tab.phase1()
    if opt == 0:
        z = tab.solution()
        lam = tuple(z[:n_ineq])
        beta = tuple(
            z[n_ineq + 2 * j] - z[n_ineq + 2 * j + 1] for j in range(n_eq)
        )
        cert = FarkasCertificate(lam=lam, beta=beta)
        assert verify_certificate(system, cert)
        return FeasibilityResult(False, certificate=cert)
    y = tab.duals()
    t = y[V]
    assert t > 0
    x = tuple(-y[v] / t for v in range(V))
    assert _check_solution(system, x)
    return FeasibilityResult(True, solution=x)


def solve_feasibility(system):
    """Exact feasibility verdict with witness or Farkas certificate."""
    n_rows = len(system.equalities) + len(system.inequalities)
    if not system.nonnegative_vars and n_rows > system.num_vars + 1:
        return _feasibility_via_dual(system)
    return _feasibility_direct(system)


def maximize(system):
    """Exact maximum of the objective over the constraint set."""
    if system.objective is None:
        raise ValueError("system has no objective")
    rows, rhs, signs, nx, obj = _standard_form(system, with_objective=True)
    if not rows:
        # Unconstrained: bounded only if the objective is identically zero.
        if any(c != 0 for c in system.objective):
            return OptimizeResult("unbounded")
        x = tuple(ZERO for _ in range(system.num_vars))
        return OptimizeResult("optimal", value=ZERO, solution=x)
    tab = _Tableau(rows, rhs)
    if tab.phase1() != 0:
        res = solve_feasibility(system)
        assert not res.feasible
        return OptimizeResult("infeasible", certificate=res.certificate)
    tab.drive_out_artificials()
    tab.set_objective([-c for c in obj])  # maximize = minimize the negation
    status = tab.run(tab.n)
    if status == "unbounded":
        return OptimizeResult("unbounded")
    x = _extract_x(system, tab.solution())
    assert _check_solution(system, x)
    value = sum((c * xi for c, xi in zip(system.objective, x)), ZERO)
    return OptimizeResult("optimal", value=value, solution=x)
