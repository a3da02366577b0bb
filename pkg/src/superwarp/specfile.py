"""Loading manifolds and warped products from TOML spec files.

Metric entries are expression strings; odd coordinates appear as
non-commutative symbols so that products keep their order until they are
converted into ordered odd monomials with the correct permutation sign."""

from __future__ import annotations

import sys

import sympy

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .geometry import Chart, InvariantViolation, Manifold, VectorField
from .graded import EVEN, ODD, SuperScalar, sort_indices_sign, swap_sign
from .scalars import Assumptions, parse_scalar


class SpecError(Exception):
    """Spec file is syntactically or structurally invalid."""


def parse_super(text, chart):
    """Parse an expression that may mention odd coordinates into a
    SuperScalar over the chart's odd indices."""
    odd_names = {c.name: c.odd_index for c in chart.coords if c.parity == ODD}
    if not odd_names:
        return SuperScalar.from_scalar(parse_scalar(text))
    local = {n: sympy.Symbol(n, commutative=False) for n in odd_names}
    try:
        expr = sympy.expand(sympy.sympify(str(text).replace("^", "**"),
                                          locals=dict(local)))
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise SpecError(f"cannot parse metric entry {text!r}: {exc}") from None
    nc_syms = set(local.values())
    out = SuperScalar.zero()
    terms = expr.args if expr.is_Add else (expr,)
    for term in terms:
        factors = term.args if term.is_Mul else (term,)
        word = []
        even_factors = []
        for f in factors:
            if f in nc_syms:
                word.append(odd_names[str(f)])
            elif f.is_Pow and f.base in nc_syms:
                word.extend([odd_names[str(f.base)]] * int(f.exp))
            elif f.free_symbols & nc_syms:
                raise SpecError(f"odd coordinates nested inside {f} "
                                f"in entry {text!r}")
            else:
                even_factors.append(f)
        mono, sign = sort_indices_sign(word)
        if sign == 0:
            continue  # square of an odd coordinate
        coeff = parse_scalar(sympy.Mul(*even_factors)) if even_factors \
            else sympy.Integer(1)
        out = out + SuperScalar({mono: sign * coeff})
    return out


def _load_chart(data):
    coords = []
    for c in data.get("coordinates", []):
        try:
            coords.append((c["name"], int(c["parity"])))
        except (KeyError, TypeError, ValueError):
            raise SpecError(f"bad coordinate entry {c!r}") from None
    if not coords:
        raise SpecError("spec has no coordinates")
    return Chart(coords)


def _load_assumptions(data):
    a = Assumptions()
    for name, window in data.get("assumptions", {}).items():
        try:
            a.declare(name, window[0], window[1])
        except (TypeError, IndexError, ValueError):
            raise SpecError(f"bad assumption window for {name!r}") from None
    return a


def load_manifold(data, name=""):
    """Build a Manifold from a parsed TOML table.  Missing symmetric metric
    entries are completed by the graded sign rule; when both of a pair are
    present they must agree with it."""
    chart = _load_chart(data)
    d = chart.dim
    entries = {}
    for key, text in data.get("metric", {}).items():
        parts = [p.strip() for p in key.split(",")]
        if len(parts) != 2:
            raise SpecError(f"metric key {key!r} is not 'name,name'")
        try:
            i, j = chart.index(parts[0]), chart.index(parts[1])
        except KeyError as exc:
            raise SpecError(str(exc)) from None
        entries[(i, j)] = parse_super(text, chart)
    parity = int(data.get("metric_parity", 0))
    metric = [[SuperScalar.zero() for _ in range(d)] for _ in range(d)]
    for (i, j), val in entries.items():
        metric[i][j] = val
        if (j, i) not in entries:
            metric[j][i] = val.sign_by_degree(0).scale(
                swap_sign(chart.parity(i), chart.parity(j)))
    try:
        return Manifold(chart, metric, metric_parity=parity,
                        assumptions=_load_assumptions(data),
                        name=name or data.get("name", ""))
    except InvariantViolation:
        raise


def load_vector_field(data, chart):
    """Components table {coordinate name: expression} plus declared parity."""
    comps = [SuperScalar.zero() for _ in range(chart.dim)]
    parity = None
    for name, text in data.items():
        if name == "parity":
            parity = int(text)
            continue
        try:
            i = chart.index(name)
        except KeyError as exc:
            raise SpecError(str(exc)) from None
        comps[i] = parse_super(text, chart)
    if parity is None:
        parities = set()
        for i, c in enumerate(comps):
            for m in c.terms:
                parities.add((len(m) + chart.parity(i)) % 2)
        if len(parities) > 1:
            raise SpecError("vector field needs an explicit parity")
        parity = parities.pop() if parities else EVEN
    vf = VectorField(comps, parity)
    if not vf.is_homogeneous(chart):
        raise SpecError("vector field components are not parity-homogeneous")
    return vf


def load_spec(path):
    """Load a manifold or warped-product spec file.  Returns a dict with
    keys kind ('manifold' | 'warped'), manifold or product, and optional P."""
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from None
    except tomllib.TOMLDecodeError as exc:
        raise SpecError(f"cannot parse {path}: {exc}") from None
    return load_spec_data(data)


def load_spec_data(data):
    from .warped import WarpedProduct
    kind = data.get("kind", "manifold")
    if kind == "manifold":
        man = load_manifold(data)
        P = None
        if "P" in data:
            P = load_vector_field(data["P"], man.chart)
        return {"kind": "manifold", "manifold": man, "P": P,
                "info": data.get("info", {})}
    if kind == "warped":
        base = load_manifold(data.get("base", {}), name="base")
        fiber = load_manifold(data.get("fiber", {}), name="fiber")
        if "h" not in data:
            raise SpecError("warped spec needs a warping function h")
        h = SuperScalar.from_scalar(parse_scalar(data["h"]))
        p_location = P = None
        if "P" in data:
            p = dict(data["P"])
            p_location = p.pop("location", None)
            if p_location not in ("base", "fiber"):
                raise SpecError("P.location must be 'base' or 'fiber'")
            factor = base if p_location == "base" else fiber
            P = load_vector_field(p.pop("components", p), factor.chart)
        product = WarpedProduct(base, fiber, h, p_location=p_location, P=P,
                                name=data.get("name", ""))
        return {"kind": "warped", "product": product,
                "info": data.get("info", {})}
    raise SpecError(f"unknown spec kind {kind!r}")
