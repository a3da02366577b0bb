"""Super warped products M1 x_h M2 and verification of the block closed
forms for their connections, curvature and Ricci tensors.

Every statement has two independent evaluations: the mechanical one (assemble
the product metric, run the generic connection/curvature machinery) and the
closed form (assembled from base-intrinsic and fiber-intrinsic quantities
only).  verify_statement reports the residual for every admissible frame
tuple."""

from __future__ import annotations

import sympy

from .connections import Connection, levi_civita, ssnm
from .curvature import CurvatureCache, ricci, ricci_frame, riemann
from .geometry import Chart, Manifold, VectorField, hessian
from .graded import EVEN, SuperScalar, swap_sign
from .report import VerificationReport
from .scalars import canonicalize


class HypothesisError(Exception):
    """Statement hypotheses (P location, parity conditions) are violated."""


class WarpedProduct:
    """Product chart of base then fiber coordinates with metric g1 + h^2 g2.

    The distinguished field P, when present, lives wholly in the base or
    wholly in the fiber (given in that factor's own frame)."""

    def __init__(self, base, fiber, h, p_location=None, P=None, name=""):
        if base.metric_parity != fiber.metric_parity:
            raise HypothesisError("base and fiber metric parities differ")
        h = h if isinstance(h, SuperScalar) else SuperScalar.from_scalar(h)
        if any(m for m in h.terms):
            raise HypothesisError("warping function must be Grassmann-free")
        self.base = base
        self.fiber = fiber
        self.h = h
        self.h_expr = h.body()
        self.inv_h = SuperScalar.from_scalar(1 / self.h_expr)
        self.p_location = p_location
        self.P = P
        self.name = name
        if (p_location is None) != (P is None):
            raise HypothesisError("P and its location must be given together")
        if P is not None:
            factor = base if p_location == "base" else fiber
            if not P.is_homogeneous(factor.chart):
                raise HypothesisError("P must be parity-homogeneous")

        self._shift = base.chart.n_odd
        coords = [(c.name, c.parity) for c in base.chart.coords]
        coords += [(c.name, c.parity) for c in fiber.chart.coords]
        chart = Chart(coords)
        d1, d2 = base.chart.dim, fiber.chart.dim
        Z = SuperScalar.zero()
        h_sq = h * h
        metric = [[Z for _ in range(d1 + d2)] for _ in range(d1 + d2)]
        for i in range(d1):
            for j in range(d1):
                metric[i][j] = base.metric[i][j]
        for i in range(d2):
            for j in range(d2):
                gij = self.lift_fiber_scalar(fiber.metric[i][j])
                metric[d1 + i][d1 + j] = h_sq * gij
        self.product = Manifold(
            chart, metric, metric_parity=base.metric_parity,
            assumptions=base.assumptions.merged(fiber.assumptions),
            name=name or f"{base.name}x{fiber.name}")

        self._base_lc = None
        self._fiber_lc = None
        self._product_lc = None
        self._product_ssnm = None
        self._base_ssnm = None
        self._grad_h = None

    # -- dimensions ----------------------------------------------------------

    @property
    def p(self):
        return self.base.chart.n_even

    @property
    def m(self):
        return self.base.chart.n_odd

    @property
    def q(self):
        return self.fiber.chart.n_even

    @property
    def n(self):
        return self.fiber.chart.n_odd

    # -- lifts ---------------------------------------------------------------

    def lift_fiber_scalar(self, s):
        if self._shift == 0:
            return s
        return s.reindex({i: i + self._shift for i in range(self.fiber.chart.n_odd)})

    def lift_base_vector(self, X):
        Z = SuperScalar.zero()
        return VectorField(list(X.comps) + [Z] * self.fiber.chart.dim, X.parity)

    def lift_fiber_vector(self, U):
        Z = SuperScalar.zero()
        comps = [Z] * self.base.chart.dim + [self.lift_fiber_scalar(c)
                                             for c in U.comps]
        return VectorField(comps, U.parity)

    def lift_p(self):
        if self.P is None:
            raise HypothesisError("no distinguished field P on this product")
        if self.p_location == "base":
            return self.lift_base_vector(self.P)
        return self.lift_fiber_vector(self.P)

    # -- cached intrinsic structure -----------------------------------------

    @property
    def base_lc(self):
        if self._base_lc is None:
            self._base_lc = levi_civita(self.base)
        return self._base_lc

    @property
    def fiber_lc(self):
        if self._fiber_lc is None:
            self._fiber_lc = levi_civita(self.fiber)
        return self._fiber_lc

    @property
    def product_lc(self):
        if self._product_lc is None:
            self._product_lc = levi_civita(self.product)
        return self._product_lc

    @property
    def product_ssnm(self):
        if self._product_ssnm is None:
            self._product_ssnm = ssnm(self.product, self.lift_p(),
                                      base=self.product_lc)
        return self._product_ssnm

    @property
    def base_ssnm(self):
        if self.p_location != "base":
            raise HypothesisError("this statement requires P in the base")
        if self._base_ssnm is None:
            self._base_ssnm = ssnm(self.base, self.P, base=self.base_lc)
        return self._base_ssnm

    @property
    def grad_h(self):
        if self._grad_h is None:
            self._grad_h = self.base.gradient(self.h)
        return self._grad_h

    # -- intrinsic scalar helpers -------------------------------------------

    def xh(self, X):
        """X(h) for a base field X."""
        return X.apply(self.base.chart, self.h)

    def hess_h(self, X, Y):
        return hessian(self.base_lc, self.h, X, Y)

    def grad_h_of_h(self):
        """(grad h)(h), the gradient field applied to h."""
        return self.grad_h.apply(self.base.chart, self.h)

    def lap_h(self):
        return self.base.laplacian(self.h)

    def g1(self, X, Y):
        return self.base.metric_eval(X, Y)

    def g2(self, U, W):
        """Fiber inner product, lifted to product odd indices."""
        return self.lift_fiber_scalar(self.fiber.metric_eval(U, W))

    def gmu(self, A, B):
        return self.product.metric_eval(A, B)

    def pi(self, V):
        """The one-form g_mu(V, P) on a lifted product field V."""
        return self.gmu(V, self.lift_p())

    def frame_name(self, which, i):
        chart = self.base.chart if which == "b" else self.fiber.chart
        return chart.coords[i].name


# --------------------------------------------------------------------------
# Closed forms.  Each item function receives factor-intrinsic frame fields
# (base args in the base frame, fiber args in the fiber frame) and returns
# the product-level value as a lifted VectorField or SuperScalar.
# --------------------------------------------------------------------------

def _zero_product(ctx):
    return VectorField.zero(ctx.product.chart)


# connection, Levi-Civita

def _lcc1(ctx, X, Y):
    return ctx.lift_base_vector(ctx.base_lc.covariant_derivative(X, Y))


def _lcc2(ctx, X, U):
    s = ctx.xh(X) * ctx.inv_h
    return ctx.lift_fiber_vector(U).scale_left(s)


def _lcc3(ctx, U, X):
    s = (ctx.xh(X) * ctx.inv_h).scale(swap_sign(U.parity, X.parity))
    return ctx.lift_fiber_vector(U).scale_left(s)


def _lcc4(ctx, U, W):
    c = (ctx.h * ctx.g2(U, W)).scale(-1)
    t1 = ctx.lift_base_vector(ctx.grad_h).scale_left(c)
    t2 = ctx.lift_fiber_vector(ctx.fiber_lc.covariant_derivative(U, W))
    return t1 + t2


# connection, ssnm with P in the base

def _sbc1(ctx, X, Y):
    return ctx.lift_base_vector(ctx.base_ssnm.covariant_derivative(X, Y))


def _sbc3(ctx, U, X):
    s = ctx.xh(X) * ctx.inv_h + ctx.g1(X, ctx.P)
    return ctx.lift_fiber_vector(U).scale_left(
        s.scale(swap_sign(U.parity, X.parity)))


# connection, ssnm with P in the fiber

def _sfc1(ctx, X, Y):
    t1 = ctx.lift_base_vector(ctx.base_lc.covariant_derivative(X, Y))
    t2 = ctx.lift_fiber_vector(ctx.P).scale_left(-ctx.g1(X, Y))
    return t1 + t2


def _sfc2(ctx, X, U):
    extra = ctx.lift_base_vector(X).dot_scalar(
        ctx.gmu(ctx.lift_fiber_vector(U), ctx.lift_p()))
    return _lcc2(ctx, X, U) + extra


def _sfc4(ctx, U, W):
    extra = ctx.lift_fiber_vector(U).dot_scalar(
        ctx.gmu(ctx.lift_fiber_vector(W), ctx.lift_p()))
    return _lcc4(ctx, U, W) + extra


# curvature, Levi-Civita

def _lcr1(ctx, X, Y, Z):
    return ctx.lift_base_vector(riemann(ctx.base_lc, X, Y, Z))


def _lcr2(ctx, V, X, Y):
    c = (ctx.hess_h(X, Y) * ctx.inv_h).scale(
        -swap_sign(V.parity, (X.parity + Y.parity) % 2))
    return ctx.lift_fiber_vector(V).scale_left(c)


def _lcr5(ctx, X, V, W):
    g = ctx.product.metric_parity
    c = (ctx.gmu(ctx.lift_fiber_vector(V), ctx.lift_fiber_vector(W))
         * ctx.inv_h).scale(
        -swap_sign(X.parity, (V.parity + W.parity + g) % 2))
    vec = ctx.lift_base_vector(
        ctx.base_lc.covariant_derivative(X, ctx.grad_h))
    return vec.scale_left(c)


def _lcr6(ctx, V, W, U):
    gh = ctx.grad_h_of_h()
    t0 = ctx.lift_fiber_vector(riemann(ctx.fiber_lc, V, W, U))
    t1 = ctx.lift_fiber_vector(V).scale_left(
        (ctx.g2(W, U) * gh).scale(-swap_sign(V.parity,
                                             (W.parity + U.parity) % 2)))
    t2 = ctx.lift_fiber_vector(W).scale_left(
        (ctx.g2(V, U) * gh).scale(swap_sign(W.parity, U.parity)))
    return t0 + t1 + t2


# curvature, ssnm with P in the base

def _sbr1(ctx, X, Y, Z):
    return ctx.lift_base_vector(riemann(ctx.base_ssnm, X, Y, Z))


def _sbr2(ctx, V, X, Y):
    s = (ctx.hess_h(X, Y) * ctx.inv_h
         + ctx.g1(Y, ctx.base_lc.covariant_derivative(X, ctx.P)).scale(
             swap_sign(X.parity, Y.parity))
         - ctx.g1(X, ctx.P) * ctx.g1(Y, ctx.P))
    c = s.scale(-swap_sign(V.parity, (X.parity + Y.parity) % 2))
    return ctx.lift_fiber_vector(V).scale_left(c)


def _sbr5(ctx, X, V, W):
    g = ctx.product.metric_parity
    ph = ctx.P.apply(ctx.base.chart, ctx.h)
    bracket = (ctx.lift_base_vector(
        ctx.base_lc.covariant_derivative(X, ctx.grad_h)).scale_left(ctx.inv_h)
        + ctx.lift_base_vector(X).scale_left(
            (ph * ctx.inv_h).scale(
                swap_sign((X.parity + ctx.P.parity) % 2, g))))
    c = ctx.gmu(ctx.lift_fiber_vector(V), ctx.lift_fiber_vector(W)).scale(
        -swap_sign(X.parity, (V.parity + W.parity + g) % 2))
    return bracket.scale_left(c)


def _sbr6(ctx, U, V, W):
    g = ctx.product.metric_parity
    pp = ctx.P.parity
    ph = ctx.P.apply(ctx.base.chart, ctx.h)
    s = ((ctx.grad_h_of_h() * ctx.inv_h * ctx.inv_h).scale(
            swap_sign(g, (W.parity + g) % 2))
         + (ph * ctx.inv_h).scale(swap_sign(pp, (W.parity + g) % 2)))
    lu, lv, lw = (ctx.lift_fiber_vector(F) for F in (U, V, W))
    combo = (lv.scale_left(ctx.gmu(lu, lw).scale(
                swap_sign(V.parity, W.parity) * swap_sign(pp, U.parity)))
             - lu.scale_left(ctx.gmu(lv, lw).scale(
                swap_sign(U.parity, (V.parity + W.parity) % 2)
                * swap_sign(pp, V.parity))))
    return ctx.lift_fiber_vector(riemann(ctx.fiber_lc, U, V, W)) \
        + combo.scale_left(s)


# curvature, ssnm with P in the fiber

def _sfr1(ctx, X, Y, Z):
    return ctx.lift_base_vector(riemann(ctx.base_lc, X, Y, Z))


def _sfr2(ctx, V, X, Y):
    g = ctx.product.metric_parity
    t1 = ctx.lift_fiber_vector(V).scale_left(
        (ctx.hess_h(X, Y) * ctx.inv_h).scale(
            -swap_sign(V.parity, (X.parity + Y.parity) % 2)))
    g2vp = ctx.g2(V, ctx.P)
    t2 = ctx.lift_base_vector(X).scale_left(
        (ctx.h * g2vp * ctx.g1(Y, ctx.grad_h)).scale(
            -swap_sign(X.parity, Y.parity)))
    bracket = (ctx.lift_fiber_vector(
        ctx.fiber_lc.covariant_derivative(V, ctx.P))
        - ctx.lift_base_vector(ctx.grad_h).scale_left(ctx.h * g2vp))
    t3 = bracket.scale_left(ctx.g1(X, Y).scale(
        -swap_sign((X.parity + Y.parity + g) % 2, V.parity)))
    return t1 + t2 + t3


def _sfr3(ctx, X, Y, V):
    inner = (ctx.lift_base_vector(Y).scale_left(ctx.xh(X) * ctx.inv_h)
             - ctx.lift_base_vector(X).scale_left(
                 (ctx.xh(Y) * ctx.inv_h).scale(
                     swap_sign(X.parity, Y.parity))))
    piv = ctx.pi(ctx.lift_fiber_vector(V))
    return inner.scale_left(piv.scale(
        swap_sign((X.parity + Y.parity) % 2, V.parity)))


def _sfr4(ctx, V, W, X):
    gx = ctx.g1(X, ctx.grad_h)
    t1 = ctx.lift_fiber_vector(W).scale_left(
        (ctx.h * ctx.g2(V, ctx.P) * gx).scale(
            -swap_sign(X.parity, W.parity)))
    t2 = ctx.lift_fiber_vector(V).scale_left(
        (ctx.h * ctx.g2(W, ctx.P) * gx).scale(
            swap_sign((V.parity + X.parity) % 2, W.parity)))
    return t1 + t2


def _sfr5(ctx, X, V, W):
    g = ctx.product.metric_parity
    lv, lw = ctx.lift_fiber_vector(V), ctx.lift_fiber_vector(W)
    t1 = ctx.lift_base_vector(
        ctx.base_lc.covariant_derivative(X, ctx.grad_h)).scale_left(
        (ctx.gmu(lv, lw) * ctx.inv_h).scale(
            -swap_sign(X.parity, (V.parity + W.parity + g) % 2)))
    pre = swap_sign((X.parity + V.parity) % 2, W.parity)
    t2 = lv.scale_left(
        ((ctx.xh(X) * ctx.inv_h)
         * ctx.gmu(lw, ctx.lift_p())).scale(
            pre * swap_sign(X.parity, W.parity)))
    gw_nvp = ctx.gmu(lw, ctx.lift_fiber_vector(
        ctx.fiber_lc.covariant_derivative(V, ctx.P)))
    t3 = ctx.lift_base_vector(X).scale_left(
        gw_nvp.scale(-pre * swap_sign(X.parity, V.parity)))
    t4 = ctx.lift_base_vector(X).scale_left(
        (ctx.pi(lw) * ctx.pi(lv)).scale(pre * swap_sign(X.parity, V.parity)))
    return t1 + t2 + t3 + t4


def _sfr6(ctx, U, V, W):
    gh = ctx.grad_h_of_h()
    lu, lv, lw = (ctx.lift_fiber_vector(F) for F in (U, V, W))
    t0 = ctx.lift_fiber_vector(riemann(ctx.fiber_lc, U, V, W))
    t1 = lu.scale_left((ctx.g2(V, W) * gh).scale(
        -swap_sign(U.parity, (V.parity + W.parity) % 2)))
    t2 = lv.scale_left((ctx.g2(U, W) * gh).scale(
        swap_sign(V.parity, W.parity)))
    pre = swap_sign((U.parity + V.parity) % 2, W.parity)
    nup = ctx.lift_fiber_vector(ctx.fiber_lc.covariant_derivative(U, ctx.P))
    nvp = ctx.lift_fiber_vector(ctx.fiber_lc.covariant_derivative(V, ctx.P))
    t3 = (lv.scale_left(ctx.gmu(lw, nup).scale(pre))
          - lu.scale_left(ctx.gmu(lw, nvp).scale(
              pre * swap_sign(U.parity, V.parity))))
    t4 = (lu.scale_left((ctx.pi(lw) * ctx.pi(lv)).scale(
              pre * swap_sign(U.parity, V.parity)))
          - lv.scale_left((ctx.pi(lw) * ctx.pi(lu)).scale(pre)))
    return t0 + t1 + t2 + t3 + t4


# Ricci closed forms (frame pairs; statements are stated on the natural frame)

def _lc_ric_bb(ctx, X, Y):
    l = ctx.q - ctx.n
    return (ricci(ctx.base_lc, X, Y)
            - (ctx.hess_h(X, Y) * ctx.inv_h).scale(l))


def _lc_ric_ff(ctx, U, W):
    l = ctx.q - ctx.n
    bracket = (ctx.lap_h() * ctx.inv_h
               + (ctx.grad_h_of_h() * ctx.inv_h * ctx.inv_h).scale(l - 1))
    lu, lw = ctx.lift_fiber_vector(U), ctx.lift_fiber_vector(W)
    return (ctx.lift_fiber_scalar(ricci(ctx.fiber_lc, U, W))
            - ctx.gmu(lu, lw) * bracket)


def _sb_ric_bb(ctx, X, Y):
    l = ctx.q - ctx.n
    half = sympy.Rational(1, 2)
    pi_x = ctx.g1(X, ctx.P)
    pi_y = ctx.g1(Y, ctx.P)
    bracket = (ctx.hess_h(X, Y) * ctx.inv_h
               - pi_x * pi_y
               + (ctx.g1(Y, ctx.base_lc.covariant_derivative(X, ctx.P))
                  .scale(swap_sign(X.parity, Y.parity) * half))
               + ctx.g1(X, ctx.base_lc.covariant_derivative(Y, ctx.P))
               .scale(half))
    return ricci(ctx.base_ssnm, X, Y) - bracket.scale(l)


def _sb_ric_ff(ctx, U, W):
    if ctx.product.metric_parity != EVEN or ctx.P.parity != EVEN:
        raise HypothesisError("fiber-block Ricci closed form needs "
                              "|g| = |P| = 0")
    l = ctx.q - ctx.n
    pm = ctx.p - ctx.m
    ph = ctx.P.apply(ctx.base.chart, ctx.h)
    bracket = (ctx.lap_h() * ctx.inv_h
               + (ctx.grad_h_of_h() * ctx.inv_h * ctx.inv_h).scale(l - 1)
               + (ph * ctx.inv_h).scale(l - 1 + pm))
    lu, lw = ctx.lift_fiber_vector(U), ctx.lift_fiber_vector(W)
    return (ctx.lift_fiber_scalar(ricci(ctx.fiber_lc, U, W))
            - ctx.gmu(lu, lw) * bracket)


# --------------------------------------------------------------------------
# Statement registry and verification driver
# --------------------------------------------------------------------------

def _item(item_id, pattern, fn):
    return {"id": item_id, "pattern": pattern, "fn": fn}


STATEMENTS = {
    "warped-lc-connection": {
        "kind": "connection", "conn": "lc", "requires_p": None,
        "items": [
            _item(1, "bb", _lcc1),
            _item(2, "bf", _lcc2),
            _item(3, "fb", _lcc3),
            _item(4, "ff", _lcc4),
        ]},
    "warped-ssnm-connection-base-p": {
        "kind": "connection", "conn": "ssnm", "requires_p": "base",
        "items": [
            _item(1, "bb", _sbc1),
            _item(2, "bf", _lcc2),
            _item(3, "fb", _sbc3),
            _item(4, "ff", _lcc4),
        ]},
    "warped-ssnm-connection-fiber-p": {
        "kind": "connection", "conn": "ssnm", "requires_p": "fiber",
        "items": [
            _item(1, "bb", _sfc1),
            _item(2, "bf", _sfc2),
            _item(3, "fb", _lcc3),
            _item(4, "ff", _sfc4),
        ]},
    "warped-lc-curvature": {
        "kind": "curvature", "conn": "lc", "requires_p": None,
        "items": [
            _item(1, "bbb", _lcr1),
            _item(2, "fbb", _lcr2),
            _item(3, "bbf", lambda ctx, *a: _zero_product(ctx)),
            _item(4, "ffb", lambda ctx, *a: _zero_product(ctx)),
            _item(5, "bff", _lcr5),
            _item(6, "fff", _lcr6),
        ]},
    "warped-ssnm-curvature-base-p": {
        "kind": "curvature", "conn": "ssnm", "requires_p": "base",
        "items": [
            _item(1, "bbb", _sbr1),
            _item(2, "fbb", _sbr2),
            _item(3, "bbf", lambda ctx, *a: _zero_product(ctx)),
            _item(4, "ffb", lambda ctx, *a: _zero_product(ctx)),
            _item(5, "bff", _sbr5),
            _item(6, "fff", _sbr6),
        ]},
    "warped-ssnm-curvature-fiber-p": {
        "kind": "curvature", "conn": "ssnm", "requires_p": "fiber",
        "items": [
            _item(1, "bbb", _sfr1),
            _item(2, "fbb", _sfr2),
            _item(3, "bbf", _sfr3),
            _item(4, "ffb", _sfr4),
            _item(5, "bff", _sfr5),
            _item(6, "fff", _sfr6),
        ]},
    "warped-lc-ricci": {
        "kind": "ricci", "conn": "lc", "requires_p": None,
        "items": [
            _item(1, "bb", _lc_ric_bb),
            _item(2, "bf", lambda ctx, *a: SuperScalar.zero()),
            _item(2, "fb", lambda ctx, *a: SuperScalar.zero()),
            _item(3, "ff", _lc_ric_ff),
        ]},
    "warped-ssnm-ricci-base-p": {
        "kind": "ricci", "conn": "ssnm", "requires_p": "base",
        "items": [
            _item(1, "bb", _sb_ric_bb),
            _item(2, "bf", lambda ctx, *a: SuperScalar.zero()),
            _item(2, "fb", lambda ctx, *a: SuperScalar.zero()),
            _item(3, "ff", _sb_ric_ff),
        ]},
}


def closed_form(ctx, statement_id, item_id, args):
    """Evaluate one closed-form right-hand side on factor-intrinsic args."""
    stmt = _lookup(ctx, statement_id)
    for item in stmt["items"]:
        if item["id"] == item_id and len(item["pattern"]) == len(args):
            return item["fn"](ctx, *args)
    raise KeyError(f"statement {statement_id} has no item {item_id} "
                   f"with {len(args)} arguments")


def _lookup(ctx, statement_id):
    if statement_id not in STATEMENTS:
        raise KeyError(f"unknown statement {statement_id!r}")
    stmt = STATEMENTS[statement_id]
    need = stmt["requires_p"]
    if need is not None and ctx.p_location != need:
        raise HypothesisError(
            f"statement {statement_id} requires P in the {need}, "
            f"got {ctx.p_location or 'none'}")
    return stmt


def _frames(ctx, which):
    factor = ctx.base if which == "b" else ctx.fiber
    return [(which, i, VectorField.frame(factor.chart, i))
            for i in range(factor.chart.dim)]


def _tuples(ctx, pattern):
    pools = [_frames(ctx, w) for w in pattern]
    out = [[]]
    for pool in pools:
        out = [prev + [item] for prev in out for item in pool]
    return out


def verify_statement(ctx, statement_id, report=None):
    """Compare the mechanical product-level computation against the closed
    form for every admissible frame tuple; returns a VerificationReport."""
    stmt = _lookup(ctx, statement_id)
    conn = ctx.product_lc if stmt["conn"] == "lc" else ctx.product_ssnm
    report = report or VerificationReport(title=statement_id)
    cache = CurvatureCache(conn)
    d1 = ctx.base.chart.dim
    for item in stmt["items"]:
        for tup in _tuples(ctx, item["pattern"]):
            intrinsic = [vf for (_, _, vf) in tup]
            names = ",".join(ctx.frame_name(w, i) for (w, i, _) in tup)
            lifted = [ctx.lift_base_vector(vf) if w == "b"
                      else ctx.lift_fiber_vector(vf)
                      for (w, i, vf) in tup]
            if stmt["kind"] == "connection":
                lhs = conn.covariant_derivative(*lifted)
            elif stmt["kind"] == "curvature":
                lhs = riemann(conn, *lifted)
            else:
                idx = [i + (0 if w == "b" else d1) for (w, i, _) in tup]
                lhs = ricci_frame(conn, idx[0], idx[1], cache=cache)
            rhs = item["fn"](ctx, *intrinsic)
            report.add(f"{statement_id}.{item['id']}", statement_id,
                       f"({names})", lhs - rhs)
    return report
