"""Affine connections: Levi-Civita via the Koszul formula on coordinate
frames, and the semi-symmetric non-metric (ssnm) connection built from a
distinguished vector field P."""

from __future__ import annotations

import sympy

from .geometry import InvariantViolation, VectorField, lie_bracket
from .graded import SuperScalar, swap_sign

HALF = sympy.Rational(1, 2)


class UnsupportedCombination(Exception):
    """Connection request violates a structural gate (e.g. |g| + |P| != 0)."""


class Connection:
    """Christoffel data Γ_{IJ}^K over the coordinate frame, with the sign
    convention  ∇_{∂_I} ∂_J = Γ_{IJ}^K ∂_K  (coefficients on the left)."""

    def __init__(self, manifold, gamma, tag="custom", P=None, validate=True):
        self.manifold = manifold
        self.gamma = gamma  # (i, j) -> [SuperScalar] * dim
        self.tag = tag
        self.P = P
        if validate:
            self._check_parity()

    def _check_parity(self):
        chart = self.manifold.chart
        for (i, j), row in self.gamma.items():
            for k, g in enumerate(row):
                want = (chart.parity(i) + chart.parity(j) + chart.parity(k)) % 2
                for m in g.terms:
                    if len(m) % 2 != want:
                        raise InvariantViolation(
                            f"Christoffel parity fails at ({i},{j})^{k}")

    def christoffel(self, i, j):
        return self.gamma[(i, j)]

    def covariant_derivative(self, X, Y):
        """∇_X Y; X, Y homogeneous vector fields in the coordinate frame."""
        chart = self.manifold.chart
        d = chart.dim
        comps = [SuperScalar.zero() for _ in range(d)]
        for i in range(d):
            xi = X.comps[i]
            if not xi.terms:
                continue
            pi = chart.parity(i)
            for k in range(d):
                inner = chart.partial(Y.comps[k], i)
                for j in range(d):
                    yj = Y.comps[j]
                    gk = self.gamma[(i, j)][k]
                    if yj.terms and gk.terms:
                        inner = inner + yj.sign_by_degree(pi) * gk
                if inner.terms:
                    comps[k] = comps[k] + xi * inner
        return VectorField(comps, (X.parity + Y.parity) % 2)


def levi_civita(manifold):
    """Unique torsion-free metric connection, from the Koszul formula applied
    to the coordinate frame (where all brackets vanish)."""
    chart = manifold.chart
    d = chart.dim
    ginv = manifold.inverse_metric()
    gamma = {}
    for i in range(d):
        pi = chart.parity(i)
        for j in range(d):
            pj = chart.parity(j)
            row = [SuperScalar.zero() for _ in range(d)]
            for k in range(d):
                pk = chart.parity(k)
                b = (chart.partial(manifold.metric[j][k], i)
                     + chart.partial(manifold.metric[k][i], j).scale(
                         swap_sign(pi, pj + pk))
                     - chart.partial(manifold.metric[i][j], k).scale(
                         swap_sign(pk, pi + pj)))
                if not b.terms:
                    continue
                b = b.scale(HALF)
                for m in range(d):
                    gk = ginv[k][m]
                    if gk.terms:
                        row[m] = row[m] + b * gk
            gamma[(i, j)] = [c.canonical() for c in row]
    return Connection(manifold, gamma, tag="levi_civita")


def ssnm(manifold, P, base=None):
    """Semi-symmetric non-metric connection
    ∇̂_X Y = ∇^L_X Y + (-1)^{|X||Y|} g(Y, P) X, gated on |g| + |P| = 0."""
    if not P.is_homogeneous(manifold.chart):
        raise UnsupportedCombination("P must be parity-homogeneous")
    if (manifold.metric_parity + P.parity) % 2 != 0:
        raise UnsupportedCombination(
            "semi-symmetric non-metric connection needs |g| + |P| = 0")
    lc = base if base is not None else levi_civita(manifold)
    chart = manifold.chart
    d = chart.dim
    pi_form = [manifold.metric_eval(VectorField.frame(chart, j), P)
               for j in range(d)]
    gamma = {}
    for i in range(d):
        for j in range(d):
            row = list(lc.gamma[(i, j)])
            extra = pi_form[j].scale(swap_sign(chart.parity(i), chart.parity(j)))
            row[i] = (row[i] + extra).canonical()
            gamma[(i, j)] = row
    return Connection(manifold, gamma, tag="ssnm", P=P)


def torsion(conn, X, Y):
    """T(X, Y) = ∇_X Y - (-1)^{|X||Y|} ∇_Y X - [X, Y]."""
    chart = conn.manifold.chart
    a = conn.covariant_derivative(X, Y)
    b = conn.covariant_derivative(Y, X)
    if swap_sign(X.parity, Y.parity) > 0:
        out = a - b
    else:
        out = a + b
    return out - lie_bracket(chart, X, Y)


def expected_ssnm_torsion(manifold, P, X, Y):
    """Closed form X · g(Y, P) - (-1)^{|X||Y|} Y · g(X, P)."""
    t1 = X.dot_scalar(manifold.metric_eval(Y, P))
    t2 = Y.dot_scalar(manifold.metric_eval(X, P))
    if swap_sign(X.parity, Y.parity) > 0:
        return t1 - t2
    return t1 + t2


def nonmetricity_residual(conn, X, Y, Z):
    """X g(Y, Z) - g(∇_X Y, Z) - (-1)^{|X||Y|} g(Y, ∇_X Z); zero iff the
    connection preserves the metric along these arguments."""
    man = conn.manifold
    chart = man.chart
    s1 = man.metric_eval(conn.covariant_derivative(X, Y), Z)
    s2 = man.metric_eval(Y, conn.covariant_derivative(X, Z)).scale(
        swap_sign(X.parity, Y.parity))
    return X.apply(chart, man.metric_eval(Y, Z)) - s1 - s2


def expected_ssnm_nonmetricity(manifold, P, X, Y, Z):
    """Closed form of the ssnm metric defect:
    -[(-1)^{|X||Y|} g(Y,P) g(X,Z) + (-1)^{|X||Y|+|Z|(|X|+|Y|)} g(Z,P) g(Y,X)]."""
    sxy = swap_sign(X.parity, Y.parity)
    t1 = (manifold.metric_eval(Y, P) * manifold.metric_eval(X, Z)).scale(sxy)
    t2 = (manifold.metric_eval(Z, P) * manifold.metric_eval(Y, X)).scale(
        sxy * swap_sign(Z.parity, (X.parity + Y.parity) % 2))
    return -(t1 + t2)
