"""Graded free resolutions, Betti tables, Hilbert data, deficiency modules.

free_resolution iterates Schreyer syzygies: at every level the current
generators are a Groebner basis (for the induced Schreyer order), and only
the minimal generators of the lead-term colon ideals spawn syzygies, whose
division-to-zero quotients are recorded directly as the next level.  The
non-minimal result is minimalized by unit-entry Gaussian cancellation.
"""

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .polyring import Polynomial, LinearForm
from .groebner import (MAXC, FreeModule, FreeModuleElement, GradedIdeal,
                       GradedSubmodule, ModuleOrder, _lead_info,
                       _normal_form_dict, buchberger, syzygies)


class FreeComplex:
    """Chain of free-module maps d_i: F_i -> F_{i-1} with twist data.

    maps[i] (i >= 1) is a dict {(row, col): Polynomial}; twists[i] lists the
    generator degrees of F_i.  maps[0] is unused (None).
    """

    def __init__(self, ring, twists, maps):
        self.ring = ring
        self.twists = [tuple(t) for t in twists]
        self.maps = maps

    @property
    def length(self):
        return len(self.twists) - 1

    def rank(self, i):
        if i < 0 or i >= len(self.twists):
            return 0
        return len(self.twists[i])

    def check_homogeneous(self):
        for i in range(1, len(self.twists)):
            for (r, c), f in self.maps[i].items():
                want = self.twists[i][c] - self.twists[i - 1][r]
                if not f.is_zero() and (not f.is_homogeneous() or f.degree() != want):
                    return False
        return True

    def check_composition(self):
        """Consecutive maps compose to zero."""
        for i in range(2, len(self.twists)):
            lo = self.maps[i - 1]
            hi = self.maps[i]
            by_col_lo = {}
            for (r, c), f in lo.items():
                by_col_lo.setdefault(c, []).append((r, f))
            by_col_hi = {}
            for (r, c), f in hi.items():
                by_col_hi.setdefault(c, []).append((r, f))
            for v, col in by_col_hi.items():
                acc = {}
                for mid, g in col:
                    for r, f in by_col_lo.get(mid, ()):
                        cur = acc.get(r)
                        acc[r] = f * g if cur is None else cur + f * g
                if any(not h.is_zero() for h in acc.values()):
                    return False
        return True


def _resolve_input(target):
    """Normalize to (F_0 FreeModule, generator FreeModuleElements)."""
    if isinstance(target, GradedIdeal):
        mod = FreeModule(target.ring, (0,))
        gens = [mod.element([g]) for g in target.generators]
        return mod, gens
    if isinstance(target, GradedSubmodule):
        return target.module, list(target.generators)
    raise TypeError("expected a GradedIdeal or GradedSubmodule")


def free_resolution(target, progress=None):
    """Schreyer resolution of the cokernel F_0 / <generators>.

    Returns a (generally non-minimal) exact FreeComplex of length <= nvars.
    """
    mod0, gens = _resolve_input(target)
    ring = mod0.ring
    twists = [list(mod0.twists)]
    maps = [None]
    if not gens:
        return FreeComplex(ring, twists, maps)

    cur_mod = FreeModule(ring, mod0.twists, mod0.order)
    cur = [dict(hd) for hd in buchberger(gens, cur_mod)]
    level = 1
    while cur:
        # record this level's map and twists
        degs = []
        entries = {}
        for col, hd in enumerate(cur):
            el = FreeModuleElement(cur_mod, hd)
            degs.append(el.degree())
            for row, f in enumerate(el.entries()):
                if not f.is_zero():
                    entries[(row, col)] = f
        twists.append(degs)
        maps.append(entries)
        if progress:
            progress(f"resolution level {level}: rank {len(cur)}")

        # Schreyer syzygies of the current Groebner basis
        leads = []
        byc = {}
        for idx, hd in enumerate(cur):
            k, c, lm = _lead_info(cur_mod, hd)
            leads.append((k, c, lm))
            byc.setdefault(c, []).append((lm, idx))
        next_mod = FreeModule(ring, tuple(degs),
                              ModuleOrder.schreyer([k for k, _, _ in leads],
                                                   cur_mod.order.mono_shift))
        nxt = []
        one = ring._one_key
        p = ring.prime
        for i, (ki, ci, lmi) in enumerate(leads):
            ei = ring.unpack(lmi)
            quots = []
            for lmj, j in byc[ci]:
                if j <= i:
                    continue
                ej = ring.unpack(lmj)
                quots.append(ring.pack(tuple(max(b - a, 0) for a, b in zip(ei, ej))))
            quots = sorted(set(quots), key=lambda u: (ring.key_degree(u), u))
            minimal = []
            for u in quots:
                if not any(ring.key_divides(v, u) for v in minimal):
                    minimal.append(u)
            for u in minimal:
                delta = (u - one) << (cur_mod.order.mono_shift + 16)
                hd = {k + delta: v for k, v in cur[i].items()}
                rec = {}
                rem = _normal_form_dict(hd, cur, byc, cur_mod,
                                        quotients=rec, first_min_index=i)
                if rem:
                    raise AssertionError("Schreyer division did not reach zero")
                syz = {next_mod.encode(i, u): 1}
                for j, qd in rec.items():
                    for qk, qv in qd.items():
                        mk = next_mod.encode(j, qk)
                        w = (syz.get(mk, 0) - qv) % p
                        if w:
                            syz[mk] = w
                        elif mk in syz:
                            del syz[mk]
                nxt.append(syz)
        nxt.sort(key=lambda hd: (FreeModuleElement(next_mod, hd).degree(), max(hd)))
        cur_mod = next_mod
        cur = nxt
        level += 1
        # Non-minimal resolutions may run past the variable count; the
        # overshoot cancels in minimalize().  Guard only against runaway.
        if level > 4 * ring.nvars + 16:
            raise AssertionError("resolution failed to terminate")
    return FreeComplex(ring, twists, maps)


# -- minimalization ----------------------------------------------------------

class BettiTable:
    """Minimal graded Betti numbers with derived pd, reg, depth."""

    def __init__(self, nvars, entries):
        self.nvars = nvars
        self.entries = {k: v for k, v in entries.items() if v}

    @property
    def pd(self):
        return max((i for i, _ in self.entries), default=0)

    @property
    def reg(self):
        return max((j - i for i, j in self.entries), default=0)

    @property
    def depth(self):
        return self.nvars - self.pd

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def row(self, offset, length=None):
        """(beta_{i,i+offset})_i for i = 1..pd (paper-style u/v rows)."""
        n = length if length is not None else self.pd
        return tuple(self.get(i, i + offset) for i in range(1, n + 1))

    def to_json(self):
        return {
            "nvars": self.nvars,
            "entries": sorted([i, j, b] for (i, j), b in self.entries.items()),
            "pd": self.pd,
            "reg": self.reg,
            "depth": self.depth,
        }

    def render_text(self):
        """Two-row u/v table when reg = 2, full grid otherwise."""
        lines = []
        if self.reg == 2 and self.get(0, 0) == 1:
            u = self.row(1)
            v = self.row(2)
            lines.append("i : " + " ".join(f"{i:>5d}" for i in range(1, self.pd + 1)))
            lines.append("u : " + " ".join(f"{x:>5d}" for x in u))
            lines.append("v : " + " ".join(f"{x:>5d}" for x in v))
        else:
            js = sorted({j - i for i, j in self.entries})
            lines.append("j-i \\ i : " + " ".join(f"{i:>5d}" for i in range(self.pd + 1)))
            for off in js:
                row = [self.get(i, i + off) for i in range(self.pd + 1)]
                lines.append(f"{off:>7d} : " + " ".join(f"{x:>5d}" for x in row))
        return "\n".join(lines)

    def __eq__(self, other):
        return (isinstance(other, BettiTable) and self.nvars == other.nvars
                and self.entries == other.entries)

    def __repr__(self):
        return f"BettiTable(pd={self.pd}, reg={self.reg}, depth={self.depth})"


def minimalize(complex_, return_complex=False, progress=None):
    """Minimal Betti table (and optionally the minimal complex) of an exact
    complex, by iterated Gaussian cancellation of unit (constant) entries."""
    ring = complex_.ring
    p = ring.prime
    L = complex_.length
    twists = [list(t) for t in complex_.twists]
    alive = [[True] * len(t) for t in twists]
    ent = [None] + [dict(m) for m in complex_.maps[1:]]
    by_row = [None] + [{} for _ in range(L)]
    by_col = [None] + [{} for _ in range(L)]
    units = []
    for i in range(1, L + 1):
        for (r, c), f in ent[i].items():
            by_row[i].setdefault(r, set()).add(c)
            by_col[i].setdefault(c, set()).add(r)
            cv = f.constant_value()
            if cv:
                heapq.heappush(units, (i, c, r))

    def setentry(i, r, c, f):
        if f.is_zero():
            if (r, c) in ent[i]:
                del ent[i][(r, c)]
                by_row[i][r].discard(c)
                by_col[i][c].discard(r)
        else:
            fresh = (r, c) not in ent[i]
            ent[i][(r, c)] = f
            if fresh:
                by_row[i].setdefault(r, set()).add(c)
                by_col[i].setdefault(c, set()).add(r)
            if f.constant_value():
                heapq.heappush(units, (i, c, r))

    done = 0
    while units:
        i, c, r = heapq.heappop(units)
        f = ent[i].get((r, c))
        if f is None or not alive[i][c] or not alive[i - 1][r]:
            continue
        lam = f.constant_value()
        if not lam:
            continue
        inv = pow(lam, p - 2, p)
        # clear row r across other columns (basis change in F_i)
        for c2 in list(by_row[i].get(r, ())):
            if c2 == c:
                continue
            factor = ent[i][(r, c2)].scale(inv)
            for r2 in list(by_col[i].get(c, ())):
                cur = ent[i].get((r2, c2), ring.zero())
                setentry(i, r2, c2, cur - factor * ent[i][(r2, c)])
            if i + 1 <= L:
                for v in list(by_row[i + 1].get(c2, ())):
                    cur = ent[i + 1].get((c, v), ring.zero())
                    setentry(i + 1, c, v, cur + factor * ent[i + 1][(c2, v)])
        # clear column c across other rows (basis change in F_{i-1})
        for r2 in list(by_col[i].get(c, ())):
            if r2 == r:
                continue
            factor = ent[i][(r2, c)].scale(inv)
            setentry(i, r2, c, ring.zero())
            if i - 1 >= 1:
                for w in list(by_col[i - 1].get(r2, ())):
                    cur = ent[i - 1].get((w, r), ring.zero())
                    setentry(i - 1, w, r, cur + factor * ent[i - 1][(w, r2)])
        # remove the cancelled pair; adjacent strands are provably zero
        for c2 in list(by_row[i].get(r, ())):
            setentry(i, r, c2, ring.zero())
        if i + 1 <= L:
            for v in list(by_row[i + 1].get(c, ())):
                setentry(i + 1, c, v, ring.zero())
        if i - 1 >= 1:
            for w in list(by_col[i - 1].get(r, ())):
                setentry(i - 1, w, r, ring.zero())
        alive[i][c] = False
        alive[i - 1][r] = False
        done += 1
        if progress and done % 500 == 0:
            progress(f"minimalization: {done} cancellations")

    counts = {}
    for i, t in enumerate(twists):
        for c, deg in enumerate(t):
            if alive[i][c]:
                counts[(i, deg)] = counts.get((i, deg), 0) + 1
    table = BettiTable(ring.nvars, counts)
    if not return_complex:
        return table
    # compact the surviving generators into a fresh complex
    newidx = []
    newtwists = []
    for i, t in enumerate(twists):
        idx = {}
        tw = []
        for c, deg in enumerate(t):
            if alive[i][c]:
                idx[c] = len(tw)
                tw.append(deg)
        newidx.append(idx)
        newtwists.append(tw)
    newmaps = [None]
    for i in range(1, L + 1):
        m = {}
        for (r, c), f in ent[i].items():
            if alive[i][c] and alive[i - 1][r] and not f.is_zero():
                m[(newidx[i - 1][r], newidx[i][c])] = f
        newmaps.append(m)
    while len(newtwists) > 1 and not newtwists[-1]:
        newtwists.pop()
        newmaps.pop()
    return table, FreeComplex(ring, newtwists, newmaps)


# -- Hilbert data ------------------------------------------------------------

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                       for i in range(n)])


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                       for i in range(n)])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _shift(a, k):
    return [0] * k + list(a) if a else []


def _minimalize_monomials(gens):
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for m in gens:
        if not any(all(x >= y for x, y in zip(m, g)) for g in out):
            out.append(m)
    return out


def monomial_quotient_numerator(gens, nvars):
    """Numerator of the Hilbert series of S/(monomial ideal) over (1-t)^n,
    by the standard variable-pivot recursion."""
    gens = _minimalize_monomials(gens)
    if not gens:
        return [1]
    # base case: supports pairwise disjoint
    counts = [0] * nvars
    for m in gens:
        for v, e in enumerate(m):
            if e:
                counts[v] += 1
    if max(counts) <= 1:
        out = [1]
        for m in gens:
            out = _poly_mul(out, _poly_sub([1], _shift([1], sum(m))))
        return out
    piv = max(range(nvars), key=lambda v: counts[v])
    # S/I via 0 -> S/(I:x)(-1) -> S/I -> S/(I+x) -> 0
    plus = [m for m in gens if m[piv] == 0]
    plus.append(tuple(1 if v == piv else 0 for v in range(nvars)))
    colon = [tuple(e - 1 if v == piv and e else e for v, e in enumerate(m)) for m in gens]
    return _poly_add(monomial_quotient_numerator(plus, nvars),
                     _shift(monomial_quotient_numerator(colon, nvars), 1))


def _binom_poly(a, b):
    """C(x + a, b) as a coefficient list over Fraction (ascending powers):
    the product (x+a)(x+a-1)...(x+a-b+1)/b!."""
    out = [Fraction(1)]
    for k in range(b):
        const = Fraction(a - k)
        shifted = [Fraction(0)] + out
        scaled = [c * const for c in out] + [Fraction(0)]
        out = [s + t for s, t in zip(shifted, scaled)]
    fact = math.factorial(b)
    return [c / fact for c in out]


class HilbertData:
    """Hilbert series numerator, reduced form, polynomial, dim and degree."""

    def __init__(self, numerator, nvars):
        self.numerator = list(numerator)
        self.nvars = nvars
        h = list(numerator)
        e = 0
        while h and sum(h) == 0:
            # divide by (1 - t)
            q = [0] * (len(h) - 1)
            acc = 0
            for k in range(len(h) - 1):
                acc += h[k]
                q[k] = acc
            h = _poly_trim(q)
            e += 1
        self.reduced_numerator = h
        self.dim_ring = nvars - e          # Krull dimension of the quotient
        self.degree = sum(h) if h else 0
        self.dim = self.dim_ring - 1       # projective dimension of the variety
        self.codim = (nvars - 1) - self.dim

    def hilbert_function(self, n):
        if n < 0:
            return 0
        nv = self.nvars
        total = 0
        for k, c in enumerate(self.numerator):
            if c and n - k >= 0:
                total += c * math.comb(n - k + nv - 1, nv - 1)
        return total

    def hilbert_polynomial(self):
        """Coefficient list (Fractions, ascending powers) of P(x)."""
        D = self.dim_ring
        if D <= 0:
            return [Fraction(0)]
        out = [Fraction(0)] * D
        for k, c in enumerate(self.reduced_numerator):
            bp = _binom_poly(D - 1 - k, D - 1)
            for i, v in enumerate(bp):
                out[i] += c * v
        return out

    def hilbert_polynomial_value(self, n):
        coeffs = self.hilbert_polynomial()
        total = Fraction(0)
        for i, c in enumerate(coeffs):
            total += c * (Fraction(n) ** i)
        return total

    def binomial_basis(self):
        """chi_i with P(x) = sum chi_i * C(x+i-1, i), i = 0..dim_ring-1."""
        D = self.dim_ring
        coeffs = list(self.hilbert_polynomial())
        chis = [Fraction(0)] * max(D, 1)
        for i in range(D - 1, -1, -1):
            top = coeffs[i] if i < len(coeffs) else Fraction(0)
            chi = top * math.factorial(i)
            chis[i] = chi
            bp = _binom_poly(i - 1, i)
            for k, v in enumerate(bp):
                coeffs[k] -= chi * v
        if any(c != 0 for c in coeffs):
            raise AssertionError("binomial-basis expansion failed")
        return chis

    def __repr__(self):
        return (f"HilbertData(dim={self.dim}, codim={self.codim}, "
                f"degree={self.degree})")


def hilbert_series(ideal):
    """HilbertData of S/I from the lead-term ideal (pivot recursion)."""
    ring = ideal.ring
    gb = ideal.groebner_basis()
    gens = [ring.unpack(g.lead_key()) for g in gb]
    return HilbertData(monomial_quotient_numerator(gens, ring.nvars), ring.nvars)


def dimension_degree(h):
    """(dim X, codim X, deg X) from HilbertData."""
    if h.dim_ring <= 0 and h.degree == 0:
        raise ValueError("zero or irrelevant quotient")
    return h.dim, h.codim, h.degree


def depth_from_betti(b, nvars=None):
    if not b.entries:
        raise ValueError("empty Betti table")
    n = nvars if nvars is not None else b.nvars
    return n - b.pd


def regularity(b):
    return b.reg


def betti_numerator(b):
    """Alternating sum over the Betti table, as a series numerator."""
    out = []
    for (i, j), v in b.entries.items():
        out = _poly_add(out, _shift([v if i % 2 == 0 else -v], j))
    return out


# -- deficiency modules ------------------------------------------------------

@dataclass
class GradedModuleData:
    """Observable data of a graded module: Hilbert function on a window,
    annihilating linear forms, and (when available) a presentation."""

    window: tuple
    hilbert_function: dict
    annihilator_linear: list = field(default_factory=list)
    presentation: object = None
    label: str = ""

    def is_zero_on_window(self):
        return all(v == 0 for v in self.hilbert_function.values())

    def beg(self):
        nz = [n for n, v in sorted(self.hilbert_function.items()) if v]
        return nz[0] if nz else None

    def to_json(self):
        return {
            "label": self.label,
            "window": list(self.window),
            "hilbert_function": {str(n): v for n, v in sorted(self.hilbert_function.items())},
            "annihilator_linear_forms": [list(lf.coeffs) for lf in self.annihilator_linear],
        }


def _submodule_hf(gb_elements, module):
    """Degree -> dimension function of a submodule from its lead module."""
    ring = module.ring
    nv = ring.nvars
    percomp = {}
    for el in gb_elements:
        c, m, _ = el.lead()
        percomp.setdefault(c, []).append(ring.unpack(m))
    numerators = {c: monomial_quotient_numerator(gens, nv)
                  for c, gens in percomp.items()}

    def hf(n):
        total = 0
        for c, num in numerators.items():
            e = n - module.twists[c]
            if e < 0:
                continue
            full = math.comb(e + nv - 1, nv - 1)
            quot = 0
            for k, coef in enumerate(num):
                if coef and e - k >= 0:
                    quot += coef * math.comb(e - k + nv - 1, nv - 1)
            total += full - quot
        return total
    return hf


def _free_hf(module):
    ring = module.ring
    nv = ring.nvars

    def hf(n):
        total = 0
        for t in module.twists:
            if n - t >= 0:
                total += math.comb(n - t + nv - 1, nv - 1)
        return total
    return hf


def ext_deficiency(res, i, window=None, label=None):
    """Deficiency module K^i = Ext^{nvars-i}(coker, S(-nvars)) of the module
    resolved by the minimal complex res, reported as Hilbert-function data.

    window defaults to [-dim-2, reg+2] of the resolved quotient.
    """
    ring = res.ring
    nv = ring.nvars
    if i < 0 or i > nv:
        raise ValueError(f"deficiency index {i} out of range")
    if window is None:
        reg_guess = max((d - lvl for lvl in range(len(res.twists))
                         for d in res.twists[lvl]), default=0)
        window = (-(nv + 2), reg_guess + 2)
    lo, hi = window
    lab = label or f"K^{i}"
    pos = nv - i
    pd = res.length
    if pos > pd or pos < 0:
        return GradedModuleData((lo, hi), {n: 0 for n in range(lo, hi + 1)}, [], None, lab)

    dual_twists = [tuple(nv - t for t in res.twists[q]) if q <= pd else ()
                   for q in range(pd + 1)]
    Gpos = FreeModule(ring, dual_twists[pos])

    # kernel of the transposed differential out of position pos
    if pos == pd:
        ker_gens = [Gpos.unit(c) for c in range(Gpos.rank)]
        hf_ker = _free_hf(Gpos)
    else:
        Gnext = FreeModule(ring, dual_twists[pos + 1])
        images = []
        for c in range(Gpos.rank):
            entries = [res.maps[pos + 1].get((c, v), None) for v in range(Gnext.rank)]
            images.append(Gnext.element(entries))
        live = [c for c in range(Gpos.rank) if not images[c].is_zero()]
        ker_gens = [Gpos.unit(c) for c in range(Gpos.rank) if images[c].is_zero()]
        if live:
            syz = syzygies([images[c] for c in live], Gnext)
            for s in syz.generators:
                d = {}
                for mk, v in s.d.items():
                    cc, m = s.module.decode(mk)
                    d[Gpos.encode(live[cc], m)] = v
                ker_gens.append(FreeModuleElement(Gpos, d))
        ker_gb = [FreeModuleElement(Gpos, hd) for hd in buchberger(ker_gens, Gpos)]
        hf_ker = _submodule_hf(ker_gb, Gpos)

    # image of the transposed differential into position pos
    if pos == 0:
        im_gens = []
    else:
        im_gens = []
        for w in range(len(dual_twists[pos - 1])):
            entries = [res.maps[pos].get((w, c), None) for c in range(Gpos.rank)]
            el = Gpos.element([e if e is not None else ring.zero() for e in entries])
            if not el.is_zero():
                im_gens.append(el)
    im_gb_dicts = buchberger(im_gens, Gpos) if im_gens else []
    im_gb = [FreeModuleElement(Gpos, hd) for hd in im_gb_dicts]
    hf_im = _submodule_hf(im_gb, Gpos) if im_gb else (lambda n: 0)

    hf = {n: hf_ker(n) - hf_im(n) for n in range(lo, hi + 1)}

    ann = _annihilating_linear_forms(ker_gens if pos == pd else ker_gb,
                                     im_gb_dicts, Gpos)
    pres = (GradedSubmodule(Gpos, ker_gens), GradedSubmodule(Gpos, im_gens))
    return GradedModuleData((lo, hi), hf, ann, pres, lab)


def _annihilating_linear_forms(ker_gens, im_gb_dicts, module):
    """Basis of {linear l : l * ker subset im}, exact linear algebra."""
    from . import linalg
    ring = module.ring
    p = ring.prime
    byc = {}
    for pos_, hd in enumerate(im_gb_dicts):
        _, c, lm = _lead_info(module, hd)
        byc.setdefault(c, []).append((lm, pos_))
    rows = {}
    ncols = ring.nvars
    for gi, g in enumerate(ker_gens):
        for v in range(ring.nvars):
            prod = g.term_mul(ring.var_keys[v], 1)
            rem = _normal_form_dict(dict(prod.d), im_gb_dicts, byc, module)
            for k, coef in rem.items():
                rows.setdefault((gi, k), [0] * ncols)[v] = coef
    mat = [rows[key] for key in sorted(rows)]
    basis = linalg.nullspace(mat, p, ncols)
    return [LinearForm(v) for v in basis]


# -- restrict-scalars presentation -------------------------------------------

def restrict_scalars_presentation(extended_ideal, adjoined_var, window=(0, 6)):
    """Present R[y]/J as a module over R = ring minus adjoined_var, on the
    generators {1, y-bar}; relations computed by module elimination of y.

    Raises ValueError when {1, y-bar} do not generate (the quotient's Hilbert
    function exceeds what the two generators can reach).
    """
    from .polyring import Ring, TermOrder
    from .groebner import map_to_ring
    big = extended_ideal.ring
    if adjoined_var not in big._name_index:
        raise ValueError(f"unknown variable {adjoined_var}")
    back = [nm for nm in big.variable_names if nm != adjoined_var]
    # kernel of (f, g) -> f + g*y  mod J, via tagged syzygies
    gens = [big.one(), big.variable(adjoined_var)] + list(extended_ideal.generators)
    syz = syzygies(gens)
    pairs = []
    for s in syz.generators:
        ent = s.entries()
        pairs.append((ent[0], ent[1]))
    # eliminate y: block order with y in front, term-over-position module GB
    elim_ring = Ring(tuple([adjoined_var] + back), big.prime, TermOrder("block", 1))
    elim_mod = FreeModule(elim_ring, (0, 1))
    elems = [elim_mod.element([map_to_ring(f, elim_ring), map_to_ring(g, elim_ring)])
             for f, g in pairs]
    gb = buchberger([e for e in elems if not e.is_zero()], elim_mod,
                    product_criterion=False)
    small = Ring(tuple(back), big.prime)
    small_mod = FreeModule(small, (0, 1))
    relations = []
    for hd in gb:
        el = FreeModuleElement(elim_mod, hd)
        _, m, _ = el.lead()
        if elim_ring.front_degree(m) != 0:
            continue
        f, g = el.entries()
        relations.append(small_mod.element([map_to_ring(f, small),
                                            map_to_ring(g, small)]))
    pres = GradedSubmodule(small_mod, relations)
    # surjectivity check on a degree window
    hdata = hilbert_series(extended_ideal)
    rel_gb = [FreeModuleElement(small_mod, hd) for hd in
              buchberger(relations, small_mod)] if relations else []
    hf_rel = _submodule_hf(rel_gb, small_mod) if rel_gb else (lambda n: 0)
    hf_free = _free_hf(small_mod)
    lo, hi = window
    hf = {}
    for n in range(lo, hi + 1):
        have = hf_free(n) - hf_rel(n)
        want = hdata.hilbert_function(n)
        if have != want:
            raise ValueError("quotient is not generated by {1, y} over the subring")
        hf[n] = want
    return GradedModuleData((lo, hi), hf, [], pres, "restrict-scalars")
