"""Exact two-phase simplex method with Bland's rule.

Solves ``max c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``,
``x >= 0`` over the rationals.  Bland's rule (lowest index enters, lowest
basic index leaves on ties) guarantees termination; the fixed variable order
makes results reproducible.
"""

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: list = field(default_factory=list)
    objective: Fraction = None
    pivots: int = 0

    @property
    def optimal(self):
        return self.status == "optimal"


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.T = [r + [b] for r, b in zip(rows, rhs)]
        self.basis = basis
        self.pivots = 0

    def pivot(self, r, c, obj):
        T = self.T
        row = T[r]
        p = row[c]
        if p != 1:
            row = [v / p for v in row]
            T[r] = row
        for i, other in enumerate(T):
            if i != r and other[c] != 0:
                f = other[c]
                T[i] = [a - f * b for a, b in zip(other, row)]
        if obj[c] != 0:
            f = obj[c]
            obj[:] = [a - f * b for a, b in zip(obj, row)]
        self.basis[r] = c
        self.pivots += 1

    def reduced_costs(self, cost):
        obj = list(cost) + [Fraction(0)]
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                obj = [a - cb * t for a, t in zip(obj, self.T[i])]
        return obj

    def run(self, obj, allowed):
        """Maximize; ``obj[j]`` are reduced costs.  Returns "optimal" or "unbounded"."""
        while True:
            enter = next((j for j in allowed if obj[j] > 0), None)
            if enter is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.T):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter, obj)


def solve_lp(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), maximize=True):
    """Solve the LP exactly; all inputs are converted to Fractions."""
    n = len(c)
    c = [Fraction(v) for v in c]
    if not maximize:
        c = [-v for v in c]
    m_ub, m_eq = len(A_ub), len(A_eq)
    n_slack = m_ub
    rows, rhs, need_art = [], [], []
    for i, (a, b) in enumerate(zip(A_ub, b_ub)):
        row = [Fraction(v) for v in a] + [Fraction(0)] * n_slack
        row[n + i] = Fraction(1)
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
            need_art.append(True)
        else:
            need_art.append(False)
        rows.append(row)
        rhs.append(b)
    for a, b in zip(A_eq, b_eq):
        row = [Fraction(v) for v in a] + [Fraction(0)] * n_slack
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)
        need_art.append(True)
    art_rows = [i for i, f in enumerate(need_art) if f]
    n_real = n + n_slack
    n_art = len(art_rows)
    for row in rows:
        row.extend([Fraction(0)] * n_art)
    basis = []
    k = 0
    for i in range(len(rows)):
        if need_art[i]:
            rows[i][n_real + k] = Fraction(1)
            basis.append(n_real + k)
            k += 1
        else:
            basis.append(n + i)
    tab = _Tableau(rows, rhs, basis)
    total = n_real + n_art

    if n_art:
        cost1 = [Fraction(0)] * n_real + [Fraction(-1)] * n_art
        obj = tab.reduced_costs(cost1)
        tab.run(obj, range(total))
        # obj[-1] is the remaining artificial mass
        if obj[-1] != 0:
            return LPResult("infeasible", pivots=tab.pivots)
        # drive zero-valued artificials out of the basis; drop redundant rows
        i = 0
        while i < len(tab.T):
            if tab.basis[i] >= n_real:
                j = next((j for j in range(n_real) if tab.T[i][j] != 0), None)
                if j is None:
                    del tab.T[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, j, [Fraction(0)] * (total + 1))
            i += 1

    cost2 = c + [Fraction(0)] * (n_slack + n_art)
    obj = tab.reduced_costs(cost2)
    status = tab.run(obj, range(n_real))
    if status == "unbounded":
        return LPResult("unbounded", pivots=tab.pivots)
    x = [Fraction(0)] * total
    for i, b in enumerate(tab.basis):
        x[b] = tab.T[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return LPResult("optimal", x[:n], value if maximize else -value, tab.pivots)


def in_convex_hull(point, vertices):
    """Exact membership test: is ``point`` a convex combination of ``vertices``?

    Returns the weights when it is, else None.
    """
    if not vertices:
        return None
    k = len(vertices)
    A_eq = [[v[j] for v in vertices] for j in range(len(point))]
    A_eq.append([1] * k)
    b_eq = list(point) + [1]
    res = solve_lp([0] * k, A_eq=A_eq, b_eq=b_eq)
    return res.x if res.optimal else None
