# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Dense dictionary simplex over fractions.Fraction for

    maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0,

so the origin is a feasible start and no first phase is needed. Bland's
rule (smallest entering index, ties in the ratio test by smallest basic
index) guarantees termination on degenerate problems.
"""
from fractions import Fraction


class SimplexTableau(object):

    def __init__(self, c, A, b):
        self.m = len(A)
        self.n = len(c)
        self.A = [[Fraction(v) for v in row] for row in A]
        self.b = [Fraction(v) for v in b]
        self.c = [Fraction(v) for v in c]
        self.z = Fraction(0)
        assert all(v >= 0 for v in self.b), "initial dictionary must be feasible"
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i, j):
        piv = self.A[i][j]
        row = self.A[i]
        row_new = [v / piv for v in row]
        row_new[j] = 1 / piv
        b_i = self.b[i] / piv
        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if f == 0:
                continue
            rk = self.A[k]
            for l in range(self.n):
                rk[l] -= f * row_new[l]
            rk[j] = -f / piv
            self.b[k] -= f * b_i
        cj = self.c[j]
        self.z += cj * b_i
        for l in range(self.n):
            self.c[l] -= cj * row_new[l]
        self.c[j] = -cj / piv
        self.A[i] = row_new
        self.b[i] = b_i
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_primal_step(self):
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return 'optimal'
        try:
            _, _, i = min((self.b[i] / self.A[i][j], self.b_vars[i], i)
                          for i in range(self.m) if self.A[i][j] > 0)
        except ValueError:
            return 'unbounded'
        self.pivot(i, j)
        return 'go_on'

    def bland_primal(self):
        while True:
            ret = self.bland_primal_step()
            if ret in ('optimal', 'unbounded'):
                return ret

    def primal_solution(self):
        x = [Fraction(0)] * self.n
        for i, v in enumerate(self.b_vars):
            if v < self.n:
                x[v] = self.b[i]
        return x


def simplex_max(c, A, b):
    """Returns (status, value, x)."""
    tab = SimplexTableau(c, A, b)
    status = tab.bland_primal()
    if status != 'optimal':
        return status, None, None
    return status, tab.z, tab.primal_solution()
