"""Z2-graded commutative algebra: even scalars tensored with a Grassmann
algebra of odd coordinates.

A SuperScalar is a finite map {odd monomial -> ScalarExpr}; an odd monomial is
a strictly increasing tuple of odd-coordinate indices (ξ² = 0).  Every sign in
the package descends from the single rule st = (-1)^{|s||t|} ts, mechanized
here as the permutation sign of sorting graded symbol strings.
"""

from __future__ import annotations

import sympy

from .scalars import ZERO, ONE, canonicalize, is_zero

EVEN = 0
ODD = 1


def swap_sign(p, q):
    """Sign picked up when two homogeneous symbols of parities p, q swap."""
    return -1 if (p % 2) and (q % 2) else 1


def parity_sign(p, q):
    """(-1)^{pq} as used in the displayed formulas."""
    return swap_sign(p, q)


def merge_sign(left, right):
    """Sign of sorting the concatenation of two increasing odd-index tuples;
    None when an index repeats (nilpotency)."""
    if set(left) & set(right):
        return None
    # each right index moves past the left indices greater than it
    inversions = sum(1 for a in left for b in right if a > b)
    return -1 if inversions % 2 else 1


def sort_indices_sign(indices):
    """Sort an arbitrary odd-index word; returns (tuple, sign) or (None, 0)."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return None, 0
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return tuple(idx), sign


class SuperScalar:
    """Element of C∞(M) over a chart with a fixed list of odd coordinates."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = sympy.sympify(coeff)
                if coeff != 0:
                    self.terms[tuple(mono)] = self.terms.get(tuple(mono), ZERO) + coeff
            self.terms = {m: c for m, c in self.terms.items() if c != 0}

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_scalar(cls, e):
        return cls({(): e})

    @classmethod
    def odd_coordinate(cls, index):
        return cls({(index,): ONE})

    @classmethod
    def zero(cls):
        return cls()

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return all(is_zero(c) for c in self.terms.values())

    def body(self):
        """Grassmann-degree-0 part."""
        return self.terms.get((), ZERO)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), ZERO)

    def is_homogeneous(self):
        return len({len(m) % 2 for m in self.terms}) <= 1

    def parity(self):
        """Parity of a homogeneous element; 0 for the zero element."""
        ps = {len(m) % 2 for m in self.terms}
        if len(ps) > 1:
            raise ValueError("inhomogeneous SuperScalar has no parity")
        return ps.pop() if ps else EVEN

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return SuperScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return SuperScalar({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sign = merge_sign(m1, m2)
                if sign is None:
                    continue
                mono = tuple(sorted(m1 + m2))
                out[mono] = out.get(mono, ZERO) + sign * c1 * c2
        return SuperScalar(out)

    __rmul__ = __mul__

    def scale(self, e):
        """Multiply every coefficient by an even ScalarExpr."""
        e = sympy.sympify(e)
        return SuperScalar({m: e * c for m, c in self.terms.items()})

    def sign_by_degree(self, p):
        """Multiply each term by (-1)^{p * degree}; the sign-rule workhorse for
        moving a parity-p symbol across this element term by term."""
        if p % 2 == 0:
            return self
        return SuperScalar({m: (c if len(m) % 2 == 0 else -c)
                            for m, c in self.terms.items()})

    def map_coefficients(self, fn):
        return SuperScalar({m: fn(c) for m, c in self.terms.items()})

    def reindex(self, index_map):
        """Rename odd-coordinate indices (e.g. lifting fiber scalars)."""
        out = {}
        for m, c in self.terms.items():
            mono, sign = sort_indices_sign([index_map[i] for i in m])
            out[mono] = out.get(mono, ZERO) + sign * c
        return SuperScalar(out)

    def canonical(self):
        return SuperScalar({m: canonicalize(c) for m, c in self.terms.items()})

    # -- comparison / display ------------------------------------------------

    def equals(self, other, **kw):
        from .scalars import expr_equal
        other = _coerce(other)
        monos = set(self.terms) | set(other.terms)
        return all(expr_equal(self.coefficient(m), other.coefficient(m), **kw)
                   for m in monos)

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset((m, sympy.sympify(c)) for m, c in self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[m]
            mono = "".join(f"o{i}" for i in m) or "1"
            bits.append(f"({c})*{mono}" if m else f"({c})")
        return " + ".join(bits)


def _coerce(x):
    if isinstance(x, SuperScalar):
        return x
    if isinstance(x, (int, sympy.Expr)):
        return SuperScalar.from_scalar(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to SuperScalar")


def left_odd_derivative(f, index):
    """Left partial derivative by the odd coordinate with the given index."""
    out = {}
    for m, c in f.terms.items():
        if index not in m:
            continue
        pos = m.index(index)
        mono = m[:pos] + m[pos + 1:]
        sign = -1 if pos % 2 else 1
        out[mono] = out.get(mono, ZERO) + sign * c
    return SuperScalar(out)
