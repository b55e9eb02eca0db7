"""Classification and closed-form verification for projected varieties.

analyze() computes the numeric profile of a graded quotient (dimension,
degree, depth, regularity, genus invariants) and classifies it as minimal
degree / almost minimal degree (AMD) / arithmetically Cohen-Macaulay (ACM) /
Gorenstein.  The check_* functions compare the computed data against the
closed-form predictions valid for AMD varieties.
"""

import math
import random
from dataclasses import dataclass, field

from .polyring import Ring, LinearForm, Polynomial, apply_linear_change
from .groebner import GradedIdeal, saturate, normal_form
from .resolve import (free_resolution, minimalize, hilbert_series,
                      ext_deficiency, _poly_sub, _poly_mul, _poly_trim)
from .varieties import reindex_to, _default_names


def _binom(n, k):
    if k < 0 or n < 0 or n < k:
        return 0
    return math.comb(n, k)


@dataclass
class AnalysisReport:
    r: int                     # ambient projective dimension
    d: int                     # dimension of the variety
    codim: int
    degree: int
    t: int                     # arithmetic depth
    reg: int
    is_AMD: bool
    is_minimal_degree: bool
    is_ACM: bool
    is_Gorenstein: bool
    delta_genus: int
    sectional_genus: object
    quadric_count: int
    secant_cone_dim: object    # t-1 in the AMD regime, else None
    formula_checks: dict = field(default_factory=dict)
    # attached computation artifacts (not serialized)
    hilbert: object = None
    betti: object = None
    min_complex: object = None

    def to_json(self):
        return {
            "r": self.r, "d": self.d, "codim": self.codim,
            "degree": self.degree, "t": self.t, "reg": self.reg,
            "is_AMD": self.is_AMD,
            "is_minimal_degree": self.is_minimal_degree,
            "is_ACM": self.is_ACM, "is_Gorenstein": self.is_Gorenstein,
            "delta_genus": self.delta_genus,
            "sectional_genus": self.sectional_genus,
            "quadric_count": self.quadric_count,
            "secant_cone_dim": self.secant_cone_dim,
            "formula_checks": dict(sorted(self.formula_checks.items())),
        }

    def render_text(self):
        j = self.to_json()
        lines = []
        for k, v in j.items():
            if k == "formula_checks":
                for name, ok in v.items():
                    lines.append(f"check {name:<24} : {'pass' if ok else 'FAIL'}")
            else:
                lines.append(f"{k:<18} : {v}")
        return "\n".join(lines)


def analyze(ideal, non_normal=False, progress=None):
    """Full numeric profile of S/I, including depth via a minimal free
    resolution and genus invariants via the canonical/deficiency modules."""
    if not ideal.generators:
        raise ValueError("zero ideal: nothing to analyze")
    if any(g.degree() == 0 for g in ideal.generators):
        raise ValueError("unit ideal")
    ring = ideal.ring
    nv = ring.nvars
    r = nv - 1
    h = hilbert_series(ideal)
    d, codim, degree = h.dim, h.codim, h.degree
    res = free_resolution(ideal, progress=progress)
    tab, mini = minimalize(res, return_complex=True, progress=progress)
    t = tab.depth
    reg = tab.reg
    quadric_count = _binom(r + 2, 2) - h.hilbert_function(2)
    is_amd = degree == codim + 2
    is_min = degree == codim + 1
    is_acm = t == d + 1
    final_betti = sum(v for (i, j), v in tab.entries.items() if i == tab.pd)
    is_gor = is_acm and final_betti == 1

    K1 = ext_deficiency(mini, 1, window=(-1, -1))
    h1_1 = K1.hilbert_function[-1]
    delta = degree - codim - 1 - h1_1
    if d >= 1:
        chis = h.binomial_basis()
        gs = 1 - chis[d - 1]
        gs = int(gs) if gs.denominator == 1 else gs
    else:
        gs = None
    secant = t - 1 if (is_amd and (t <= d or (is_acm and non_normal))) else None

    report = AnalysisReport(
        r=r, d=d, codim=codim, degree=degree, t=t, reg=reg,
        is_AMD=is_amd, is_minimal_degree=is_min, is_ACM=is_acm,
        is_Gorenstein=is_gor, delta_genus=delta, sectional_genus=gs,
        quadric_count=quadric_count, secant_cone_dim=secant,
        hilbert=h, betti=tab, min_complex=mini,
    )
    if is_amd:
        ok, _ = check_hilbert_formula(report, h)
        report.formula_checks["hilbert_formula"] = ok
        ok, _ = check_quadric_count(report)
        report.formula_checks["quadric_count"] = ok
    if is_acm:
        ok, _ = check_gorenstein(report, tab)
        report.formula_checks["gorenstein"] = ok
    return report


def _one_minus_lambda_pow(k):
    return [(-1) ** i * math.comb(k, i) for i in range(k + 1)]


def expected_amd_numerator(r, d, t):
    """Series numerator over (1-lambda)^(r+1) predicted for an AMD quotient
    with ambient dimension r, variety dimension d, arithmetic depth t."""
    first = _poly_mul([1, r + 1 - d], _one_minus_lambda_pow(r - d))
    second = _poly_mul([0, 1], _one_minus_lambda_pow(r - t + 2))
    return _poly_trim(_poly_sub(first, second))


def check_hilbert_formula(report, series=None):
    """(pass, residual): computed numerator against the AMD closed form."""
    if not report.is_AMD:
        raise ValueError("hilbert formula check requires an AMD variety")
    series = series or report.hilbert
    expected = expected_amd_numerator(report.r, report.d, report.t)
    residual = _poly_trim(_poly_sub(list(series.numerator), expected))
    return (not residual), residual


def check_quadric_count(report):
    """(pass, expected): dim I_2 against t + C(r+1-d,2) - d - 2."""
    if not report.is_AMD:
        raise ValueError("quadric count check requires an AMD variety")
    expected = report.t + _binom(report.r + 1 - report.d, 2) - report.d - 2
    return report.quadric_count == expected, expected


def check_betti_bounds(report, betti=None):
    """Per-index checks of the u/v window bounds for AMD scroll projections
    with t <= d.  Returns {name: True/False}; vacuous ranges are skipped."""
    if not report.is_AMD or report.t > report.d:
        raise ValueError("betti bounds require an AMD variety with t <= d")
    tab = betti or report.betti
    r, d, t = report.r, report.d, report.t
    pd = tab.pd

    def u(i):
        return tab.get(i, i + 1)

    def v(i):
        return tab.get(i, i + 2)

    def b(i):
        return (r + 1 - d) * _binom(r - d, i) - _binom(r - d, i + 1)

    def c(i):
        return i * _binom(r - d, i + 1)

    out = {}
    out["u_1"] = u(1) == t + _binom(r + 1 - d, 2) - d - 2
    for i in range(2, max(2, r - 2 * d + t - 1)):
        if i <= pd:
            out[f"u_{i}_bounds"] = c(i) <= u(i) <= b(i)
    for i in range(max(1, r - 2 * d + t - 1), r - d):
        out[f"u_{i}_exact"] = u(i) == c(i)
    for i in range(r - d, pd + 1):
        out[f"u_{i}_zero"] = u(i) == 0
    for i in range(1, max(1, r - 2 * d + t - 2)):
        lo = max(0, _binom(r - t + 2, i + 1) - (i + 2) * _binom(r - d, i + 1))
        out[f"v_{i}_bounds"] = lo <= v(i) <= _binom(r - t + 2, i + 1)
    for i in range(max(1, r - 2 * d + t - 2), r - d):
        out[f"v_{i}_exact"] = v(i) == (_binom(r - t + 2, i + 1)
                                       - (i + 2) * _binom(r - d, i + 1))
    for i in range(r - d, r - t + 2):
        out[f"v_{i}_top"] = v(i) == _binom(r - t + 2, i + 1)
    for i in range(1, r - d):
        ident = (_binom(r - t + 2, i + 1) - (r - d + 1) * _binom(r - d, i + 1)
                 + _binom(r - d, i + 2))
        out[f"v_u_identity_{i}"] = (v(i) - u(i + 1)) == ident
    return out


def deficiency_window_data(report, window=(-6, 4)):
    """K^i data for i = 0..d+1 on the window, from the minimal complex."""
    return {i: ext_deficiency(report.min_complex, i, window=window)
            for i in range(report.d + 2)}


def expected_kt_hilbert(t, n):
    """Thm-predicted Hilbert function of K^t: a polynomial ring in t-1
    variables twisted by 2-t (for t = 1: the field twisted by 1)."""
    if t == 1:
        return 1 if n == -1 else 0
    e = n + 2 - t
    if e < 0:
        return 0
    return math.comb(e + t - 2, t - 2)


def check_deficiency_shapes(report, ext_data):
    """Pass/fail set: vanishing outside {t, d+1}, K^t shape + annihilator,
    and the beginning degree of the canonical module."""
    if not report.is_AMD or report.t > report.d:
        raise ValueError("deficiency shape checks require AMD with t <= d")
    t, d, r = report.t, report.d, report.r
    out = {}
    for i, data in ext_data.items():
        if i in (t, d + 1):
            continue
        out[f"K{i}_vanishes"] = data.is_zero_on_window()
    kt = ext_data[t]
    lo, hi = kt.window
    out["Kt_hilbert"] = all(kt.hilbert_function[n] == expected_kt_hilbert(t, n)
                            for n in range(lo, hi + 1))
    out["Kt_annihilator"] = len(kt.annihilator_linear) == r - t + 2
    out["beg_canonical"] = ext_data[d + 1].beg() == d
    return out


def check_gorenstein(report, betti=None, ext=None):
    """(pass, details): final Betti number 1 and canonical module Hilbert
    function equal to the quotient's, shifted by 1-d."""
    if not report.is_ACM:
        raise ValueError("Gorenstein check requires an ACM variety")
    tab = betti or report.betti
    d = report.d
    final = sum(vv for (i, j), vv in tab.entries.items() if i == tab.pd)
    details = {"final_betti": final}
    ok = final == 1
    if ok and report.min_complex is not None:
        window = (d - 2, d + 3)
        K = ext or ext_deficiency(report.min_complex, d + 1, window=window)
        lo, hi = K.window
        match = all(K.hilbert_function[n]
                    == report.hilbert.hilbert_function(n + 1 - d)
                    for n in range(lo, hi + 1))
        details["canonical_shift_match"] = match
        ok = ok and match
    return ok, details


def genus_invariants(report):
    return report.delta_genus, report.sectional_genus


def depth_of(ideal, progress=None):
    """Arithmetic depth via a minimal resolution."""
    tab = minimalize(free_resolution(ideal, progress=progress))
    return tab.depth


def saturate_last_variable(ideal):
    """(I : x_last^inf) read off a degrevlex Groebner basis: dividing each
    basis element by the largest power of the last (order-smallest) variable
    yields a basis of the saturation."""
    ring = ideal.ring
    last = ring.nvars - 1
    cur = ideal
    while True:
        gb = cur.groebner_basis()
        newg = []
        changed = False
        for g in gb:
            k = min(ring.unpack(key)[last] for key in g.d)
            if k:
                changed = True
                d = {}
                for key, c in g.d.items():
                    e = list(ring.unpack(key))
                    e[last] -= k
                    d[ring.pack(tuple(e))] = c
                newg.append(Polynomial(ring, d))
            else:
                newg.append(g)
        if not changed:
            return cur
        cur = GradedIdeal(ring, newg)


def _generic_last_change(ring, rng):
    """Substitution matrix making the last coordinate a seeded-generic
    linear form while fixing all other coordinates."""
    p = ring.prime
    nv = ring.nvars
    last = nv - 1
    b = [rng.randrange(p) for _ in range(nv)]
    b[last] = rng.randrange(1, p)
    inv = pow(b[last], p - 2, p)
    change = [[(1 if i == j else 0) for j in range(nv)] for i in range(nv)]
    change[last] = [(-b[j] * inv) % p for j in range(nv)]
    change[last][last] = inv
    return change


def depth_estimate(ideal, seed=0):
    """Arithmetic depth by cutting with seeded-generic hyperplanes: depth is
    the number of successive generic linear quotients that stay saturated
    (saturation tested on a degrevlex Groebner basis via the last-variable
    division criterion).  Much cheaper than a free resolution; correct with
    overwhelming probability over a large prime field."""
    rng = random.Random(seed)
    J = ideal
    t = 0
    while J.ring.nvars >= 1:
        ring = J.ring
        if not J.generators:
            return t + ring.nvars
        change = _generic_last_change(ring, rng)
        moved = GradedIdeal(ring, [apply_linear_change(g, change)
                                   for g in J.generators])
        gb = moved.groebner_basis()
        last = ring.nvars - 1
        if any(g.degree() == 0 for g in gb):
            # quotient has become zero: the previous form was a unit modulo J
            return t
        saturated = all(min(ring.unpack(k)[last] for k in g.d) == 0 for g in gb)
        if not saturated:
            return t
        # quotient by the generic form (the new last coordinate) and drop it
        small = Ring(_default_names(ring.nvars - 1), ring.prime)
        newgens = []
        for g in gb:
            d = {}
            for k, c in g.d.items():
                e = ring.unpack(k)
                if e[last]:
                    continue
                d[small.pack(e[:-1])] = c
            if d:
                newgens.append(Polynomial(small, d))
        t += 1
        if not newgens:
            # the quotient is a polynomial ring: full depth remaining
            return t + small.nvars
        J = GradedIdeal(small, newgens)
    return t


def saturate_irrelevant(ideal, seed=0):
    """Saturation with respect to the irrelevant maximal ideal: a seeded
    coordinate change makes the last variable a generic linear form (only
    one coordinate is touched, keeping the generators sparse), then the
    last-variable saturation applies."""
    rng = random.Random(seed)
    ring = ideal.ring
    p = ring.prime
    nv = ring.nvars
    last = nv - 1
    # substitution x_i -> x_i (i < last), x_last -> solved from the generic
    # form b . x becoming the new last coordinate
    b = [rng.randrange(p) for _ in range(nv)]
    b[last] = rng.randrange(1, p)
    inv = pow(b[last], p - 2, p)
    change = [[(1 if i == j else 0) for j in range(nv)] for i in range(nv)]
    change[last] = [(-b[j] * inv) % p for j in range(nv)]
    change[last][last] = inv
    moved = GradedIdeal(ring, [apply_linear_change(g, change)
                               for g in ideal.generators])
    return saturate_last_variable(moved)


def hyperplane_section(ideal, lform=None, seed=0, max_retries=8):
    """Quotient by a generic hyperplane: substitute the form away, saturate
    the image with respect to the irrelevant ideal, and report the depth drop.

    Returns (section ideal in one fewer variable, depth_delta).
    """
    ring = ideal.ring
    p = ring.prime
    nv = ring.nvars
    h = hilbert_series(ideal)
    t_before = depth_estimate(ideal, seed=seed + 500)
    rng = random.Random(seed)
    tries = max_retries if lform is None else 1
    last_error = None
    for attempt in range(tries):
        if lform is not None:
            lf = lform
        else:
            lf = LinearForm([rng.randrange(p) for _ in range(nv)])
        if lf.is_zero():
            if lform is not None:
                raise ValueError("zero linear form")
            continue
        fpoly = lf.to_polynomial(ring)
        if normal_form(fpoly, ideal.groebner_basis()).is_zero():
            if lform is not None:
                raise ValueError("linear form lies in the ideal")
            continue
        coeffs = [c % p for c in lf.coeffs]
        pivot = max(i for i, c in enumerate(coeffs) if c)
        inv = pow(coeffs[pivot], p - 2, p)
        # substitute: x_pivot -> -(1/c_pivot) * sum of the other terms
        sub = [[(1 if i == j else 0) for j in range(nv)] for i in range(nv)]
        for j in range(nv):
            sub[pivot][j] = (-inv * coeffs[j]) % p if j != pivot else 0
        small = Ring(_default_names(nv - 1), p)
        surviving = [i for i in range(nv) if i != pivot]
        newgens = []
        for g in ideal.generators:
            d = {}
            for k, cval in _substitute(g, sub).d.items():
                exps = g.ring.unpack(k)
                if exps[pivot]:
                    raise AssertionError("pivot variable not eliminated")
                kk = small.pack(tuple(exps[i] for i in surviving))
                w = (d.get(kk, 0) + cval) % p
                if w:
                    d[kk] = w
                elif kk in d:
                    del d[kk]
            if d:
                newgens.append(Polynomial(small, d))
        if not newgens:
            last_error = "section is the whole space"
            continue
        section = saturate_irrelevant(GradedIdeal(small, newgens), seed=seed + 1000)
        hs = hilbert_series(section)
        if hs.dim != h.dim - 1:
            last_error = f"dimension did not drop (got {hs.dim})"
            continue
        t_after = depth_estimate(section, seed=seed + 600)
        return section, t_before - t_after
    raise RuntimeError(f"no valid hyperplane section found: {last_error}")


def _substitute(g, matrix):
    """apply_linear_change allowing a singular substitution matrix."""
    ring = g.ring
    p = ring.prime
    images = []
    for i in range(ring.nvars):
        row = matrix[i]
        images.append(Polynomial(ring, {ring.var_keys[j]: row[j] % p
                                        for j in range(ring.nvars)
                                        if row[j] % p}))
    cache = {}

    def power(i, e):
        key = (i, e)
        if key not in cache:
            if e == 0:
                cache[key] = ring.one()
            else:
                cache[key] = power(i, e - 1) * images[i]
        return cache[key]

    out = ring.zero()
    for k, c in g.d.items():
        term = ring.constant(c)
        for i, e in enumerate(ring.unpack(k)):
            if e:
                term = term * power(i, e)
        out = out + term
    return out
