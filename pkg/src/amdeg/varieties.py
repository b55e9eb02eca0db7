"""Constructors for minimal-degree varieties and point projections.

Rational normal scrolls (optionally cones over them), the Veronese surface,
a Pfaffian Gorenstein fixture, linear projection from a point, the
containing-scroll construction for projected scrolls, and normal-form /
1-genericity utilities for 2-row matrices of linear forms.
"""

import itertools
import random
import re
from dataclasses import dataclass, field

from . import linalg
from .polyring import Ring, LinearForm, Polynomial
from .groebner import (GradedIdeal, eliminate, normal_form,
                       minimal_generators)


def _default_names(count):
    return tuple(f"x{i}" for i in range(count))


def evaluate_poly(f, coords):
    """Value of a polynomial at a coordinate vector over F_p."""
    ring = f.ring
    p = ring.prime
    total = 0
    for k, c in f.d.items():
        exps = ring.unpack(k)
        v = c
        for e, x in zip(exps, coords):
            if e:
                v = (v * pow(x % p, e, p)) % p
        total = (total + v) % p
    return total


def reindex_to(f, ring2):
    """Positional transfer of a polynomial between rings of equal nvars."""
    if ring2.nvars != f.ring.nvars:
        raise ValueError("variable count mismatch")
    d = {}
    for k, c in f.d.items():
        d[ring2.pack(f.ring.unpack(k))] = c
    return Polynomial(ring2, d)


# -- scroll specifications ---------------------------------------------------

@dataclass(frozen=True)
class ScrollSpec:
    """S(d_1,...,d_l), optionally a cone with a vertex of dimension h."""

    degrees: tuple
    vertex_dim: int = -1

    def __post_init__(self):
        ds = tuple(self.degrees)
        object.__setattr__(self, "degrees", ds)
        if not ds or any(d < 1 for d in ds):
            raise ValueError("invalid degree sequence")
        if list(ds) != sorted(ds):
            raise ValueError("degree sequence must be non-decreasing")
        if self.vertex_dim < -1:
            raise ValueError("vertex dimension must be >= -1")

    @property
    def l(self):
        return len(self.degrees)

    @property
    def n(self):
        return sum(self.degrees) + self.l - 1

    @property
    def ambient_dim(self):
        return self.n + self.vertex_dim + 1

    @property
    def nvars(self):
        return self.ambient_dim + 1

    @property
    def dim(self):
        """Dimension of the (cone over the) scroll as a projective variety."""
        return self.l + self.vertex_dim + 1

    def block_starts(self):
        """a_0 = -1 convention: block i occupies columns a_{i-1}+1 .. a_i - 1
        of the variable range; returns the skipped indices a_1..a_{l-1}."""
        a = []
        acc = 0
        for i, d in enumerate(self.degrees, start=1):
            acc += d
            a.append(i - 1 + acc)
        return a[:-1]

    @staticmethod
    def parse(text):
        m = re.fullmatch(r"S\(([\d,\s]+)\)(?:\+vertex:(-?\d+))?", text.strip())
        if not m:
            raise ValueError(f"cannot parse scroll spec: {text!r}")
        degrees = tuple(int(t) for t in m.group(1).split(","))
        h = int(m.group(2)) if m.group(2) is not None else -1
        return ScrollSpec(degrees, h)

    def __str__(self):
        s = "S(" + ",".join(str(d) for d in self.degrees) + ")"
        if self.vertex_dim >= 0:
            s += f"+vertex:{self.vertex_dim}"
        return s


@dataclass
class ScrollMatrix:
    """2 x c matrix of linear forms; vertex variables appear in no entry."""

    ring: Ring
    rows: list                       # [top, bottom], each a list of LinearForm
    vertex_vars: tuple = ()

    @property
    def ncols(self):
        return len(self.rows[0])

    def entry_poly(self, i, j):
        return self.rows[i][j].to_polynomial(self.ring)

    def minors(self):
        out = []
        for a, b in itertools.combinations(range(self.ncols), 2):
            f = (self.entry_poly(0, a) * self.entry_poly(1, b)
                 - self.entry_poly(1, a) * self.entry_poly(0, b))
            if not f.is_zero():
                out.append(f)
        return out

    def render(self):
        cells = [[str(self.entry_poly(i, j)) for j in range(self.ncols)]
                 for i in range(2)]
        widths = [max(len(cells[0][j]), len(cells[1][j])) for j in range(self.ncols)]
        return "\n".join("[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]"
                         for row in cells)


@dataclass(frozen=True)
class ProjectionPoint:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if not any(self.coords):
            raise ValueError("projection point must be nonzero")

    @staticmethod
    def unit(index, nvars):
        return ProjectionPoint(tuple(1 if i == index else 0 for i in range(nvars)))

    @staticmethod
    def parse(text, nvars):
        text = text.strip()
        m = re.fullmatch(r"e(\d+)", text)
        if m:
            idx = int(m.group(1))
            if idx >= nvars:
                raise ValueError(f"unit point e{idx} out of range for {nvars} variables")
            return ProjectionPoint.unit(idx, nvars)
        coords = tuple(int(t) for t in text.split(","))
        if len(coords) != nvars:
            raise ValueError(f"expected {nvars} coordinates")
        return ProjectionPoint(coords)


def random_point_off_variety(ideal, seed, max_tries=200):
    """Seeded random point not on V(ideal)."""
    rng = random.Random(seed)
    p = ideal.ring.prime
    nv = ideal.ring.nvars
    for _ in range(max_tries):
        coords = tuple(rng.randrange(p) for _ in range(nv))
        if not any(coords):
            continue
        if any(evaluate_poly(g, coords) for g in ideal.generators):
            return ProjectionPoint(coords)
    raise RuntimeError("could not sample a point off the variety")


# -- constructors ------------------------------------------------------------

def scroll_ideal(spec, prime=None, names=None):
    """(ScrollMatrix, GradedIdeal) of the (cone over the) rational normal
    scroll: 2x2 minors of the 2-row block matrix of consecutive variables."""
    from .polyring import DEFAULT_PRIME
    p = prime or DEFAULT_PRIME
    nv = spec.nvars
    names = names or _default_names(nv)
    ring = Ring(tuple(names), p)
    skipped = set(spec.block_starts())
    cols = [a for a in range(spec.n) if a not in skipped]
    rows = [[], []]
    for a in cols:
        rows[0].append(LinearForm.unit(a, nv))
        rows[1].append(LinearForm.unit(a + 1, nv))
    vertex = tuple(names[spec.n + 1:])
    mat = ScrollMatrix(ring, rows, vertex)
    return mat, GradedIdeal(ring, mat.minors())


def veronese_ideal(prime=None):
    """2x2 minors of the generic symmetric 3x3 matrix: the Veronese surface."""
    from .polyring import DEFAULT_PRIME
    ring = Ring(_default_names(6), prime or DEFAULT_PRIME)
    x = [ring.variable(f"x{i}") for i in range(6)]
    M = [[x[0], x[1], x[2]], [x[1], x[3], x[4]], [x[2], x[4], x[5]]]
    gens = []
    pairs = list(itertools.combinations(range(3), 2))
    for ri, rp in enumerate(pairs):
        for cp in pairs[ri:]:
            f = M[rp[0]][cp[0]] * M[rp[1]][cp[1]] - M[rp[0]][cp[1]] * M[rp[1]][cp[0]]
            gens.append(f)
    return GradedIdeal(ring, gens)


def pfaffian_fixture(prime=None):
    """The five 4x4 Pfaffians of a generic skew 5x5 matrix in 10 variables."""
    from .polyring import DEFAULT_PRIME
    ring = Ring(_default_names(10), prime or DEFAULT_PRIME)
    x = [ring.variable(f"x{i}") for i in range(10)]
    a = [[None] * 5 for _ in range(5)]
    it = iter(range(10))
    for i in range(5):
        for j in range(i + 1, 5):
            a[i][j] = x[next(it)]
            a[j][i] = -a[i][j]
    gens = []
    for omit in range(5):
        j, k, l, m = [t for t in range(5) if t != omit]
        pf = a[j][k] * a[l][m] - a[j][l] * a[k][m] + a[j][m] * a[k][l]
        gens.append(pf if omit % 2 == 0 else -pf)
    return GradedIdeal(ring, gens)


# -- projection --------------------------------------------------------------

def _move_point_to_unit(ideal, point):
    """Coordinate change sending the unit vector at the pivot to the point;
    returns (transformed ideal, pivot index)."""
    ring = ideal.ring
    p = ring.prime
    coords = [c % p for c in point.coords]
    if len(coords) != ring.nvars:
        raise ValueError("point length does not match variable count")
    pivot = max(i for i, c in enumerate(coords) if c)
    from .polyring import apply_linear_change
    mat = [[(1 if i == j else 0) for j in range(ring.nvars)] for i in range(ring.nvars)]
    for i in range(ring.nvars):
        mat[i][pivot] = coords[i]
    newgens = [apply_linear_change(g, mat) for g in ideal.generators]
    return GradedIdeal(ring, newgens), pivot


def project_from_point(ideal, point):
    """Linear projection of V(ideal) from a point not on it: move the point
    to a coordinate point, eliminate that variable, renumber the rest."""
    ring = ideal.ring
    coords = [c % ring.prime for c in point.coords]
    if not any(coords):
        raise ValueError("projection point must be nonzero")
    if all(evaluate_poly(g, coords) == 0 for g in ideal.generators):
        raise ValueError("projection point lies on the variety")
    moved, pivot = _move_point_to_unit(ideal, point)
    elim = eliminate(moved, {ring.variable_names[pivot]})
    target = Ring(_default_names(ring.nvars - 1), ring.prime)
    gens = minimal_generators([reindex_to(g, target)
                               for g in elim.generators])
    return GradedIdeal(target, gens)


# -- containing scroll -------------------------------------------------------

@dataclass
class ScrollCertificate:
    minors_contained: bool
    dim_Y: int
    dim_source: int
    vertex_dim_Y: int
    vertex_dim_source: int
    pair: tuple
    block_degrees: tuple

    @property
    def vertex_gap(self):
        return self.vertex_dim_Y - self.vertex_dim_source


def containing_scroll(mat, point, source_ideal=None, projected=None):
    """Scroll (or cone over one) through the projection of the scroll of mat
    from the point, built by explicit row/column operations; certifies that
    the 2x2 minors of the output lie in the projected ideal.

    Returns (ScrollMatrix in the target ring, ScrollCertificate).
    """
    ring = mat.ring
    p = ring.prime
    nv = ring.nvars
    coords = [c % p for c in point.coords]
    if len(coords) != nv:
        raise ValueError("point length does not match variable count")
    if source_ideal is None:
        source_ideal = GradedIdeal(ring, mat.minors())
    if all(evaluate_poly(g, coords) == 0 for g in source_ideal.generators):
        raise ValueError("projection point lies on the variety")

    def lf_value(lf):
        return sum(a * b for a, b in zip(lf.coeffs, coords)) % p

    top = [lf_value(lf) for lf in mat.rows[0]]
    bot = [lf_value(lf) for lf in mat.rows[1]]
    c = mat.ncols
    pair = None
    for i in range(c):
        if not bot[i]:
            continue
        for j in range(c):
            if j == i:
                continue
            delta = (top[i] * bot[j] - bot[i] * top[j]) % p
            if delta:
                pair = (i, j)
                break
        if pair:
            break
    if pair is None:
        raise AssertionError("no independent column pair though point is off the variety")
    i, j = pair

    # move the point to the coordinate point at its pivot
    pivot = max(k for k, v in enumerate(coords) if v)
    change = [[(1 if a == b else 0) for b in range(nv)] for a in range(nv)]
    for a in range(nv):
        change[a][pivot] = coords[a]

    def transform(lf):
        out = [0] * nv
        for a, coef in enumerate(lf.coeffs):
            if coef:
                for b in range(nv):
                    out[b] = (out[b] + coef * change[a][b]) % p
        return LinearForm(out)

    rows = [[transform(lf) for lf in mat.rows[0]],
            [transform(lf) for lf in mat.rows[1]]]

    def col_sub(rows_, k, src, factor):
        """column_k -= factor * column_src"""
        for r in range(2):
            rows_[r][k] = rows_[r][k].sub_scaled(rows_[r][src], factor, p)

    # row operation: kill the pivot coefficient in the top entry of column i
    w = bot[i]
    winv = pow(w, p - 2, p)
    f = (top[i] * winv) % p
    rows[0] = [rows[0][k].sub_scaled(rows[1][k], f, p) for k in range(c)]
    # column operation: kill the pivot coefficient in the bottom of column j
    col_sub(rows, j, i, (bot[j] * winv) % p)

    gamma = rows[1][i].coeffs[pivot] % p
    theta = rows[0][j].coeffs[pivot] % p
    if not gamma or not theta or rows[0][i].coeffs[pivot] % p or rows[1][j].coeffs[pivot] % p:
        raise AssertionError("pivot-clearing preconditions failed")
    ginv = pow(gamma, p - 2, p)
    tinv = pow(theta, p - 2, p)
    for k in range(c):
        if k == i:
            continue
        mu = rows[1][k].coeffs[pivot] % p
        if mu:
            col_sub(rows, k, i, (mu * ginv) % p)
    for k in range(c):
        if k in (i, j):
            continue
        nu = rows[0][k].coeffs[pivot] % p
        if nu:
            col_sub(rows, k, j, (nu * tinv) % p)
    keep = [k for k in range(c) if k not in (i, j)]
    for k in keep:
        if rows[0][k].coeffs[pivot] % p or rows[1][k].coeffs[pivot] % p:
            raise AssertionError("pivot variable not cleared")

    # drop the pivot variable, renumber the remaining ones
    target = Ring(_default_names(nv - 1), p)
    surviving = [a for a in range(nv) if a != pivot]

    def restrict(lf):
        return LinearForm([lf.coeffs[a] % p for a in surviving])

    out_rows = [[restrict(rows[0][k]) for k in keep],
                [restrict(rows[1][k]) for k in keep]]
    N = ScrollMatrix(target, out_rows, ())

    if projected is None:
        projected = project_from_point(source_ideal, point)
    gb = projected.groebner_basis()
    contained = all(normal_form(m, gb).is_zero() for m in N.minors())

    from .resolve import hilbert_series
    dim_src = hilbert_series(source_ideal).dim
    NY = GradedIdeal(target, N.minors())
    dim_Y = hilbert_series(NY).dim
    nf = scroll_normal_form(N)
    cert = ScrollCertificate(
        minors_contained=contained,
        dim_Y=dim_Y,
        dim_source=dim_src,
        vertex_dim_Y=nf.vertex_dim,
        vertex_dim_source=len(mat.vertex_vars) - 1,
        pair=pair,
        block_degrees=nf.block_degrees,
    )
    return N, cert


# -- normal form and 1-genericity --------------------------------------------

@dataclass
class ScrollNormalForm:
    basis: list            # LinearForms y_0..y_m spanning the entries
    block_degrees: tuple   # scroll block degrees, ascending
    vertex_dim: int        # ambient_dim - m - 1
    m: int


def scroll_normal_form(mat):
    """Block structure of a 1-generic 2-row matrix of linear forms, via the
    polynomial left kernels of the associated matrix pencil.

    Returns the adapted basis of the entry span (ordered block by block so
    that consecutive basis vectors form the columns) and the block degrees.
    """
    ring = mat.ring
    p = ring.prime
    nv = ring.nvars
    c = mat.ncols
    vecs = []
    for r in range(2):
        for lf in mat.rows[r]:
            vecs.append([x % p for x in lf.coeffs])
    red, pivots = linalg.rref(vecs, p)
    m1 = len(pivots)          # dimension of the entry span
    if m1 < 2:
        raise ValueError("entries span too small a space")
    span_basis = red[:m1]     # rows: coordinates in the ambient variables
    # coordinates of each entry in the span basis (rref => read off pivots)
    def span_coords(lf):
        v = [x % p for x in lf.coeffs]
        out = []
        for row, pc in zip(span_basis, pivots):
            coef = v[pc] % p
            out.append(coef)
            if coef:
                v = [(a - coef * b) % p for a, b in zip(v, row)]
        if any(v):
            raise AssertionError("entry outside computed span")
        return out

    A = [span_coords(lf) for lf in mat.rows[0]]   # c rows of length m1
    B = [span_coords(lf) for lf in mat.rows[1]]

    def kernel_solutions(e):
        """Stacked (w_0..w_e) with sum s^{e-j} t^j w_j in the left kernel."""
        ncols = (e + 1) * m1
        rows = []
        for jj in range(e + 2):
            for col in range(c):
                row = [0] * ncols
                if jj <= e:
                    for q in range(m1):
                        row[jj * m1 + q] = A[col][q]
                if jj >= 1:
                    for q in range(m1):
                        row[(jj - 1) * m1 + q] = (row[(jj - 1) * m1 + q] + B[col][q]) % p
                rows.append(row)
        return linalg.nullspace(rows, p, ncols)

    nblocks_expected = m1 - c
    if nblocks_expected < 1:
        raise ValueError("matrix is not of scroll type (too many columns)")
    generators = []      # (degree, [w_0..w_e] as lists)
    e = 1
    while len(generators) < nblocks_expected and e <= m1:
        sols = kernel_solutions(e)
        # span of (s,t)-multiples of the already-chosen lower-degree generators
        known = []
        for d0, ws in generators:
            for shift in range(e - d0 + 1):
                # multiply by s^{e-d0-shift} t^{shift}
                v = [0] * ((e + 1) * m1)
                for jj, wj in enumerate(ws):
                    tgt = jj + shift
                    for q in range(m1):
                        v[tgt * m1 + q] = wj[q]
                known.append(v)
        kred, kpiv = linalg.rref(known, p)
        kset = set(kpiv)
        for sol in sols:
            v = list(sol)
            for row, pc in zip(kred, kpiv):
                coef = v[pc] % p
                if coef:
                    v = [(a - coef * b) % p for a, b in zip(v, row)]
            if any(v):
                ws = [v[jj * m1:(jj + 1) * m1] for jj in range(e + 1)]
                generators.append((e, ws))
                kred.append(v)
                krr, kpiv = linalg.rref(kred, p)
                kred = krr[:len(kpiv)]
                if len(generators) == nblocks_expected:
                    break
        e += 1
    if len(generators) != nblocks_expected:
        raise ValueError("matrix is not conjugate to a scroll matrix")
    generators.sort(key=lambda t: t[0])
    # dual functionals phi_{(block, q)} = (-1)^q w_q; invert for the basis
    funcs = []
    for d0, ws in generators:
        for q, wq in enumerate(ws):
            sign = 1 if q % 2 == 0 else p - 1
            funcs.append([(sign * x) % p for x in wq])
    inv = linalg.inverse(funcs, p)
    if inv is None:
        raise ValueError("matrix is not conjugate to a scroll matrix"
                         " (degenerate kernel functionals)")
    basis = []
    for col in range(m1):
        coords = [inv[row][col] for row in range(m1)]
        amb = [0] * nv
        for coef, row in zip(coords, span_basis):
            if coef:
                for t in range(nv):
                    amb[t] = (amb[t] + coef * row[t]) % p
        basis.append(LinearForm(amb))
    block_degrees = tuple(d0 for d0, _ in generators)
    return ScrollNormalForm(basis, block_degrees, (nv - 1) - (m1 - 1) - 1, m1 - 1)


def one_generic_test(mat, samples=10000, seed=0):
    """Sampling falsifier for 1-genericity: for sampled nonzero row mixes v
    (coordinate vectors first, then seeded-random), solve exactly for a
    nonzero column mix w with v*M*w identically zero.  Returns ("falsified",
    (v, w)) or ("plausible", None)."""
    ring = mat.ring
    p = ring.prime
    c = mat.ncols
    rng = random.Random(seed)

    def try_v(v):
        # rows of the system: one per ambient variable; columns: the c mixes
        rows = [[0] * c for _ in range(ring.nvars)]
        for k in range(c):
            for t in range(ring.nvars):
                rows[t][k] = (v[0] * mat.rows[0][k].coeffs[t]
                              + v[1] * mat.rows[1][k].coeffs[t]) % p
        ker = linalg.nullspace(rows, p, c)
        if ker:
            return tuple(ker[0])
        return None

    if samples >= p + 1:
        # full sweep over projective row mixes: the test becomes exact
        for v in [(0, 1)] + [(1, a) for a in range(p)]:
            w = try_v(v)
            if w is not None:
                return "falsified", (v, w)
        return "plausible", None

    tried = 0
    for v in ((1, 0), (0, 1)):
        w = try_v(v)
        if w is not None:
            return "falsified", (v, w)
        tried += 1
    while tried < samples:
        v = (rng.randrange(p), rng.randrange(p))
        if v == (0, 0):
            continue
        w = try_v(v)
        if w is not None:
            return "falsified", (v, w)
        tried += 1
    return "plausible", None
