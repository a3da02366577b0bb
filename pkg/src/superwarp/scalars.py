"""Even (Grassmann-free) scalar algebra on top of sympy.

A ScalarExpr is a sympy expression built from exact rationals, even-coordinate
symbols, named functions of one even coordinate together with their unevaluated
derivatives (h(t), h'(t), h''(t), ...), and the elementary functions
exp/sin/cos/sqrt.  Derivatives of a named function are independent atoms related
only through `differentiate`.  Floating point enters only through the numeric
evaluation fallback of `expr_equal`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from random import Random

import sympy
from sympy.core.function import AppliedUndef

ScalarExpr = sympy.Expr

ZERO = sympy.Integer(0)
ONE = sympy.Integer(1)

DEFAULT_SEED = 20240817
DEFAULT_INTERVAL = (0.5, 2.0)
_EQUAL_POINTS = 8
_EQUAL_RTOL = 1e-9

_FUNCTIONS = {
    "exp": sympy.exp,
    "sin": sympy.sin,
    "cos": sympy.cos,
    "sqrt": sympy.sqrt,
}


class UndecidedEqualityError(Exception):
    """Raised when neither canonicalization nor sampling can decide equality."""


def coordinate(name):
    return sympy.Symbol(name, real=True)


def named_function(name, coord, order=0):
    """Atom for the k-th derivative of a declared positive function of coord."""
    f = sympy.Function(name, positive=True)(coord)
    if order == 0:
        return f
    return sympy.Derivative(f, (coord, order))


def differentiate(e, coord):
    return sympy.diff(sympy.sympify(e), coord)


def canonicalize(e):
    """Normal form: a single cancelled fraction, atoms treated as opaque."""
    e = sympy.sympify(e)
    try:
        return sympy.cancel(sympy.together(e))
    except sympy.PolynomialError:
        return sympy.simplify(e)


def is_zero(e):
    """Decide e == 0 by staged canonicalization (exact, no sampling)."""
    e = sympy.sympify(e)
    if e.is_zero is True:
        return True
    c = canonicalize(e)
    if c.is_zero is True:
        return True
    if not _has_opaque(c):
        return False
    # exp/sin/cos/sqrt atoms interacting: one (more expensive) rewrite pass
    return sympy.simplify(sympy.expand(c)).is_zero is True


def _has_opaque(e):
    if e.atoms(sympy.exp, sympy.sin, sympy.cos):
        return True
    return any(p.exp.is_Rational and p.exp.q != 1 for p in e.atoms(sympy.Pow))


class Assumptions:
    """Open-interval sampling constraints per base symbol / function name.

    h > 0 is mandatory for warping functions; anything else is declarable.
    Unconstrained names sample inside the default window (0.5, 2.0).
    """

    def __init__(self, intervals=None):
        self.intervals = dict(intervals or {})

    def declare(self, name, lo, hi):
        self.intervals[name] = (float(lo), float(hi))

    def interval(self, name):
        lo, hi = self.intervals.get(name, DEFAULT_INTERVAL)
        lo = max(lo, DEFAULT_INTERVAL[0]) if lo is not None else DEFAULT_INTERVAL[0]
        hi = min(hi, DEFAULT_INTERVAL[1]) if hi is not None else DEFAULT_INTERVAL[1]
        if lo >= hi:  # constraint window outside the default: sample the constraint
            lo, hi = self.intervals[name]
        return lo, hi

    def merged(self, other):
        out = Assumptions(self.intervals)
        if other is not None:
            out.intervals.update(other.intervals)
        return out


def _atoms_for_sampling(e):
    derivs = sorted(e.atoms(sympy.Derivative), key=sympy.count_ops, reverse=True)
    funcs = list(e.atoms(AppliedUndef))
    syms = list(e.free_symbols)
    return derivs, funcs, syms


def _base_name(atom):
    if isinstance(atom, sympy.Derivative):
        return atom.expr.func.__name__
    if isinstance(atom, AppliedUndef):
        return atom.func.__name__
    return str(atom)


def numeric_eval(e, rng, assumptions=None):
    """Evaluate with every atom (symbols, h(t), h'(t), ...) drawn independently
    from its assumption interval.  Returns a float or raises on a bad point."""
    assumptions = assumptions or Assumptions()
    derivs, funcs, syms = _atoms_for_sampling(e)
    subs = {}
    for atom in derivs + funcs + syms:
        name = _base_name(atom)
        if isinstance(atom, sympy.Derivative):
            lo, hi = DEFAULT_INTERVAL  # only the function itself is constrained
        else:
            lo, hi = assumptions.interval(name)
        subs[atom] = rng.uniform(lo, hi)
    val = complex(sympy.sympify(e.xreplace(subs)).evalf())
    if abs(val.imag) > 1e-12:
        raise ValueError("complex value at sampled point")
    return val.real


def expr_equal(a, b, assumptions=None, seed=DEFAULT_SEED, points=_EQUAL_POINTS):
    """True iff canonicalize(a - b) is zero, with a seeded numeric fallback for
    opaque-atom identities (e.g. sin^2 + cos^2 = 1)."""
    a = sympy.sympify(a)
    b = sympy.sympify(b)
    d = canonicalize(a - b)
    if d.is_zero is True:
        return True
    if is_zero(d):
        return True
    rng = Random(seed)
    ok_points = 0
    for _ in range(points):
        try:
            da = numeric_eval(a - b, Random(rng.random()), assumptions)
            va = numeric_eval(a, Random(rng.random()), assumptions)
        except (ValueError, TypeError, ZeroDivisionError):
            continue
        ok_points += 1
        if abs(da) >= _EQUAL_RTOL * (1.0 + abs(va)):
            return False
    if ok_points == 0:
        raise UndecidedEqualityError(
            "canonicalization failed and every sampled point violated assumptions")
    return True


_PRIME_RE = re.compile(r"([A-Za-z_]\w*)('+)\(")


def _expand_primes(text):
    # h''(t) -> __deriv2__h(t); resolved to Derivative after parsing
    return _PRIME_RE.sub(lambda m: f"__deriv{len(m.group(2))}__{m.group(1)}(", text)


_DERIV_RE = re.compile(r"__deriv(\d+)__(\w+)")


def parse_scalar(text, even_names=()):
    """Parse infix text with `+ - * / ^`, rationals, h(t) / h'(t) / h''(t)."""
    text = _expand_primes(str(text).replace("^", "**"))
    names = set(re.findall(r"[A-Za-z_]\w*", text))
    local = {}
    for n in names:
        if n in _FUNCTIONS:
            local[n] = _FUNCTIONS[n]
        elif re.match(r"__deriv\d+__", n):
            pass  # handled below
        elif re.search(rf"\b{re.escape(n)}\s*\(", text):
            local[n] = sympy.Function(n, positive=True)
        else:
            local[n] = coordinate(n)
    for n in names:
        m = _DERIV_RE.fullmatch(n)
        if m:
            order, fname = int(m.group(1)), m.group(2)
            base = sympy.Function(fname, positive=True)
            arg = sympy.Dummy("x")
            local[n] = sympy.Lambda(arg, sympy.Derivative(base(arg), (arg, order)))
    try:
        expr = sympy.parse_expr(text, local_dict=local, evaluate=True)
    except (SyntaxError, TypeError, sympy.SympifyError) as exc:
        raise ValueError(f"cannot parse expression {text!r}: {exc}") from None
    return sympy.nsimplify(expr, rational=True) if expr.atoms(sympy.Float) else expr


def rational(num, den=1):
    return sympy.Rational(Fraction(num, den))
