"""Small exact simplex over Fractions.

Solves  max c.x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0
with Bland's rule (no cycling).  Problem sizes here are tiny (tens of
variables), so a dense two-phase tableau is plenty.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def solve_lp(c, a_ub, b_ub, a_eq, b_eq):
    """Returns (status, x, objective).  All inputs are Fraction matrices;
    b_ub / b_eq entries must be >= 0 (callers arrange this)."""
    n = len(c)
    rows = []
    for coeffs, rhs in zip(a_ub, b_ub):
        if rhs < 0:
            raise ValueError("b_ub entries must be nonnegative")
        rows.append((list(coeffs), rhs, "ub"))
    for coeffs, rhs in zip(a_eq, b_eq):
        if rhs < 0:
            raise ValueError("b_eq entries must be nonnegative")
        rows.append((list(coeffs), rhs, "eq"))

    m = len(rows)
    n_slack = sum(1 for _, _, kind in rows if kind == "ub")
    total = n + n_slack + m  # artificials for every row keep phase 1 simple

    tableau = [[ZERO] * (total + 1) for _ in range(m)]
    basis = [0] * m
    slack_at = 0
    for i, (coeffs, rhs, kind) in enumerate(rows):
        for j, v in enumerate(coeffs):
            tableau[i][j] = Fraction(v)
        if kind == "ub":
            tableau[i][n + slack_at] = ONE
            slack_at += 1
        tableau[i][n + n_slack + i] = ONE
        tableau[i][total] = Fraction(rhs)
        basis[i] = n + n_slack + i

    def pivot(row, col):
        piv = tableau[row][col]
        tableau[row] = [v / piv for v in tableau[row]]
        for r in range(m):
            if r != row and tableau[r][col] != 0:
                factor = tableau[r][col]
                tableau[r] = [
                    v - factor * w for v, w in zip(tableau[r], tableau[row])
                ]
        basis[row] = col

    def run_simplex(obj, allowed):
        # obj: row of reduced costs to MINIMIZE, length total+1
        while True:
            col = None
            for j in range(total):
                if j in allowed and obj[j] < 0:
                    col = j  # Bland: first improving column
                    break
            if col is None:
                return OPTIMAL, obj
            row = None
            best = None
            for r in range(m):
                if tableau[r][col] > 0:
                    ratio = tableau[r][total] / tableau[r][col]
                    key = (ratio, basis[r])  # Bland tie-break on basis index
                    if best is None or key < best:
                        best = key
                        row = r
            if row is None:
                return UNBOUNDED, obj
            pivot(row, col)
            piv_factor = obj[col]
            obj[:] = [v - piv_factor * w for v, w in zip(obj, tableau[row])]

    # phase 1: minimize sum of artificials
    art_range = range(n + n_slack, total)
    obj1 = [ZERO] * (total + 1)
    for j in art_range:
        obj1[j] = ONE
    for r in range(m):
        obj1 = [v - w for v, w in zip(obj1, tableau[r])]  # price out basics
    status, obj1 = run_simplex(obj1, set(range(total)))
    if -obj1[total] > 0:  # objective value = -obj1[total]
        return INFEASIBLE, None, None

    # drive remaining artificials out of the basis where possible
    for r in range(m):
        if basis[r] in art_range:
            for j in range(n + n_slack):
                if tableau[r][j] != 0:
                    pivot(r, j)
                    break

    # phase 2: maximize c.x  ==  minimize -c.x, artificials frozen
    allowed = set(range(n + n_slack))
    obj2 = [ZERO] * (total + 1)
    for j in range(n):
        obj2[j] = -Fraction(c[j])
    for r in range(m):
        if obj2[basis[r]] != 0:
            factor = obj2[basis[r]]
            obj2 = [v - factor * w for v, w in zip(obj2, tableau[r])]
    status, obj2 = run_simplex(obj2, allowed)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None

    x = [ZERO] * n
    for r in range(m):
        if basis[r] < n:
            x[basis[r]] = tableau[r][total]
    # the objective cell tracks -(current value of the minimized -c.x)
    objective = obj2[total]
    return OPTIMAL, x, objective
