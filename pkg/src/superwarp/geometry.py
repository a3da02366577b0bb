"""Charts, vector fields, graded metrics and first-order operators."""

from __future__ import annotations

from random import Random

import sympy

from . import scalars
from .graded import (EVEN, ODD, SuperScalar, left_odd_derivative, swap_sign)
from .scalars import Assumptions, ZERO, canonicalize, is_zero


class InvariantViolation(Exception):
    """A manifold spec failed one of the metric/parity invariants."""


class Coordinate:
    __slots__ = ("name", "parity", "symbol", "odd_index")

    def __init__(self, name, parity, odd_index=None):
        self.name = name
        self.parity = parity
        self.symbol = scalars.coordinate(name) if parity == EVEN else None
        self.odd_index = odd_index

    def __repr__(self):
        return f"Coordinate({self.name!r}, {'odd' if self.parity else 'even'})"


class Chart:
    """Single global coordinate chart: an ordered list of (name, parity)."""

    def __init__(self, coords):
        self.coords = []
        odd = 0
        for name, parity in coords:
            if parity == ODD:
                self.coords.append(Coordinate(name, ODD, odd_index=odd))
                odd += 1
            else:
                self.coords.append(Coordinate(name, EVEN))
        self.n_odd = odd
        self.n_even = len(self.coords) - odd
        self._by_name = {c.name: i for i, c in enumerate(self.coords)}
        if len(self._by_name) != len(self.coords):
            raise ValueError("duplicate coordinate name")

    @property
    def dim(self):
        return len(self.coords)

    def index(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown coordinate {name!r}") from None

    def parity(self, i):
        return self.coords[i].parity

    def partial(self, f, i):
        """Left partial derivative by the i-th coordinate."""
        c = self.coords[i]
        if c.parity == EVEN:
            return f.map_coefficients(lambda e: sympy.diff(e, c.symbol))
        return left_odd_derivative(f, c.odd_index)

    def odd_symbol(self, name):
        return SuperScalar.odd_coordinate(self.coords[self.index(name)].odd_index)

    def even_symbol(self, name):
        return self.coords[self.index(name)].symbol


class VectorField:
    """Graded derivation X = sum_I X^I ∂_I (coefficients on the left)."""

    __slots__ = ("comps", "parity")

    def __init__(self, comps, parity):
        self.comps = list(comps)
        self.parity = parity % 2

    @classmethod
    def frame(cls, chart, i):
        comps = [SuperScalar.zero() for _ in range(chart.dim)]
        comps[i] = SuperScalar.from_scalar(1)
        return cls(comps, chart.parity(i))

    @classmethod
    def zero(cls, chart, parity=EVEN):
        return cls([SuperScalar.zero() for _ in range(chart.dim)], parity)

    def component(self, i):
        return self.comps[i]

    def apply(self, chart, f):
        """X(f) = sum_I X^I ∂_I f."""
        out = SuperScalar.zero()
        for i, xi in enumerate(self.comps):
            if xi.terms:
                out = out + xi * chart.partial(f, i)
        return out

    def scale_left(self, f):
        """(fX)^K = f X^K."""
        f = f if isinstance(f, SuperScalar) else SuperScalar.from_scalar(f)
        return VectorField([f * c for c in self.comps],
                           (_parity_of(f) + self.parity) % 2)

    def dot_scalar(self, f):
        """X · f = (-1)^{|X||f|} f X, the scalar-from-the-right primitive."""
        f = f if isinstance(f, SuperScalar) else SuperScalar.from_scalar(f)
        return self.scale_left(f.sign_by_degree(self.parity))

    def __add__(self, other):
        return VectorField([a + b for a, b in zip(self.comps, other.comps)],
                           self.parity if any(c.terms for c in self.comps)
                           else other.parity)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return VectorField([-c for c in self.comps], self.parity)

    def is_zero(self):
        return all(c.is_zero() for c in self.comps)

    def canonical(self):
        return VectorField([c.canonical() for c in self.comps], self.parity)

    def equals(self, other, **kw):
        return all(a.equals(b, **kw) for a, b in zip(self.comps, other.comps))

    def is_homogeneous(self, chart):
        for i, c in enumerate(self.comps):
            for m in c.terms:
                if (len(m) + chart.parity(i)) % 2 != self.parity:
                    return False
        return True

    def __repr__(self):
        bits = [f"({c})∂{i}" for i, c in enumerate(self.comps) if c.terms]
        return " + ".join(bits) or "0"


def _parity_of(f):
    try:
        return f.parity()
    except ValueError:
        raise ValueError("scalar multiplier must be parity-homogeneous")


def lie_bracket(chart, X, Y):
    """[X, Y] = XY - (-1)^{|X||Y|} YX on coefficients."""
    sign = swap_sign(X.parity, Y.parity)
    comps = []
    for k in range(chart.dim):
        a = X.apply(chart, Y.comps[k])
        b = Y.apply(chart, X.comps[k])
        comps.append(a - b if sign > 0 else a + b)
    return VectorField(comps, (X.parity + Y.parity) % 2)


class Manifold:
    """Chart plus graded metric; operations cache the inverse metric."""

    def __init__(self, chart, metric, metric_parity=EVEN, assumptions=None,
                 name="", validate=True):
        self.chart = chart
        self.metric = metric  # dim x dim nested lists of SuperScalar
        self.metric_parity = metric_parity
        self.assumptions = assumptions or Assumptions()
        self.name = name
        self._inverse = None
        self._levi_civita = None
        if validate:
            self.validate()

    # -- invariants ---------------------------------------------------------

    def validate(self):
        d = self.chart.dim
        for i in range(d):
            for j in range(d):
                gij, gji = self.metric[i][j], self.metric[j][i]
                sign = swap_sign(self.chart.parity(i), self.chart.parity(j))
                if not (gij - gji.sign_by_degree(0).scale(sign)).is_zero():
                    raise InvariantViolation(
                        f"graded symmetry fails at ({self.chart.coords[i].name},"
                        f" {self.chart.coords[j].name})")
                want = (self.metric_parity + self.chart.parity(i)
                        + self.chart.parity(j)) % 2
                for m in gij.terms:
                    if len(m) % 2 != want:
                        raise InvariantViolation(
                            f"metric parity homogeneity fails at "
                            f"({self.chart.coords[i].name},"
                            f" {self.chart.coords[j].name})")
        self._check_body_nondegenerate()

    def _check_body_nondegenerate(self, seed=scalars.DEFAULT_SEED):
        import numpy as np
        d = self.chart.dim
        body = [[self.metric[i][j].body() for j in range(d)] for i in range(d)]
        atoms = set()
        for row in body:
            for e in row:
                dv, fn, sy = scalars._atoms_for_sampling(sympy.sympify(e))
                atoms.update(dv + fn + sy)
        rng = Random(seed)
        subs = {}
        for atom in sorted(atoms, key=str):
            name = scalars._base_name(atom)
            lo, hi = self.assumptions.interval(name)
            subs[atom] = rng.uniform(lo, hi)
        num = np.array([[float(sympy.sympify(e).xreplace(subs)) for e in row]
                        for row in body])
        if not np.isfinite(np.linalg.cond(num)) or abs(np.linalg.det(num)) < 1e-12:
            raise InvariantViolation("metric body is numerically degenerate")

    # -- metric evaluation --------------------------------------------------

    def metric_entry(self, i, j):
        return self.metric[i][j]

    def metric_eval(self, X, Y):
        """<X, Y>_g, every sign from reordering graded symbols term by term."""
        chart = self.chart
        out = SuperScalar.zero()
        for i, xi in enumerate(X.comps):
            if not xi.terms:
                continue
            inner = SuperScalar.zero()
            for j, yj in enumerate(Y.comps):
                gij = self.metric[i][j]
                if yj.terms and gij.terms:
                    inner = inner + yj.sign_by_degree(chart.parity(i)) * gij
            out = out + xi * inner
        return out

    # -- inverse metric -----------------------------------------------------

    def inverse_metric(self):
        """g^{IJ} with sum_K g_{IK} g^{KJ} = δ_I^J, via body inversion plus a
        terminating Neumann series in the nilpotent part."""
        if self._inverse is not None:
            return self._inverse
        d = self.chart.dim
        body = sympy.Matrix(d, d, lambda i, j: self.metric[i][j].body())
        try:
            body_inv = body.inv()
        except (ValueError, sympy.matrices.exceptions.NonInvertibleMatrixError):
            raise InvariantViolation("metric body is symbolically singular")
        body_inv = body_inv.applyfunc(canonicalize)
        b_inv = [[SuperScalar.from_scalar(body_inv[i, j]) for j in range(d)]
                 for i in range(d)]
        nil = [[SuperScalar({m: c for m, c in self.metric[i][j].terms.items() if m})
                for j in range(d)] for i in range(d)]
        if all(not nil[i][j].terms for i in range(d) for j in range(d)):
            self._inverse = b_inv
            return b_inv
        m_step = _mat_neg(_mat_mul(b_inv, nil))
        series = _mat_identity(d)
        power = _mat_identity(d)
        for _ in range(self.chart.n_odd):
            power = _mat_mul(power, m_step)
            if all(not power[i][j].terms for i in range(d) for j in range(d)):
                break
            series = _mat_add(series, power)
        inv = _mat_mul(series, b_inv)
        self._inverse = [[inv[i][j].canonical() for j in range(d)] for i in range(d)]
        return self._inverse

    # -- first-order operators ----------------------------------------------

    def gradient(self, f):
        """grad_g f: the unique X with Y(f) = (-1)^{|f||g|} <Y, grad f>_g."""
        fp = f.parity()
        chart = self.chart
        ginv = self.inverse_metric()
        sign0 = swap_sign(fp, self.metric_parity)
        r = [chart.partial(f, i).scale(sign0) for i in range(chart.dim)]
        a = (fp + self.metric_parity) % 2
        comps = []
        for j in range(chart.dim):
            u = SuperScalar.zero()
            for i in range(chart.dim):
                u = u + ginv[j][i] * r[i]
            s = swap_sign(a + chart.parity(j), self.metric_parity + chart.parity(j))
            comps.append(u.scale(s))
        return VectorField(comps, a)

    def laplacian(self, f):
        from .connections import levi_civita
        if self._levi_civita is None:
            self._levi_civita = levi_civita(self)
        return divergence(self._levi_civita, self.gradient(f))

    def frames(self):
        return [VectorField.frame(self.chart, i) for i in range(self.chart.dim)]


def divergence(conn, X):
    """Div(X) = sum_I (-1)^{|∂_I|(|∂_I| + |X|)} (∇_{∂_I} X)^I."""
    man = conn.manifold
    out = SuperScalar.zero()
    for i in range(man.chart.dim):
        pi = man.chart.parity(i)
        nab = conn.covariant_derivative(VectorField.frame(man.chart, i), X)
        sign = swap_sign(pi, (pi + X.parity) % 2)
        out = out + nab.component(i).scale(sign)
    return out


def hessian(conn, f, X, Y):
    """H^f(X, Y) = XY(f) - (∇_X Y)(f)."""
    chart = conn.manifold.chart
    return X.apply(chart, Y.apply(chart, f)) - conn.covariant_derivative(X, Y).apply(chart, f)


# -- small SuperScalar matrix helpers (order-preserving products) ------------

def _mat_identity(d):
    return [[SuperScalar.from_scalar(1 if i == j else 0) for j in range(d)]
            for i in range(d)]


def _mat_mul(A, B):
    d = len(A)
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            s = SuperScalar.zero()
            for k in range(d):
                if A[i][k].terms and B[k][j].terms:
                    s = s + A[i][k] * B[k][j]
            row.append(s)
        out.append(row)
    return out


def _mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _mat_neg(A):
    return [[-a for a in row] for row in A]
