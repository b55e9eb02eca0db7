"""Buchberger Groebner bases for ideals and submodules of free modules.

Module terms (component, monomial) are encoded into single integers:

    modkey = (anchor[c] + ((mono - one) << mono_shift)) << 16  |  (0xFFFF - c)

Integer comparison of modkeys realizes the module order: term-over-position
for anchor 0, component-block elimination for anchors level << ring bits, and
Schreyer orders when anchor[c] is the lead modkey of the previous-level
generator g_c (then comparing modkeys compares u*lt(g_c) in the previous
level's order, with ties broken by the lower current component).
"""

import heapq

MAXC = 0xFFFF


class ModuleOrder:
    __slots__ = ("anchors", "mono_shift")

    def __init__(self, anchors, mono_shift=0):
        self.anchors = list(anchors)
        self.mono_shift = mono_shift

    @staticmethod
    def top(rank):
        """Term-over-position extension of the ring order."""
        return ModuleOrder([0] * rank)

    @staticmethod
    def component_blocks(levels, ring):
        """Higher level components dominate; used to eliminate components."""
        return ModuleOrder([lev << ring._total_bits for lev in levels])

    @staticmethod
    def schreyer(prev_lead_modkeys, prev_mono_shift):
        return ModuleOrder(list(prev_lead_modkeys), prev_mono_shift + 16)


class FreeModule:
    """Graded free module over a Ring with generator degrees (twists)."""

    __slots__ = ("ring", "twists", "order", "rank")

    def __init__(self, ring, twists, order=None):
        self.ring = ring
        self.twists = tuple(twists)
        self.rank = len(self.twists)
        if self.rank > MAXC:
            raise ValueError("free module rank too large")
        self.order = order or ModuleOrder.top(self.rank)

    def encode(self, comp, monokey):
        sh = self.order.mono_shift
        return ((self.order.anchors[comp]
                 + ((monokey - self.ring._one_key) << sh)) << 16) | (MAXC - comp)

    def decode(self, modkey):
        comp = MAXC - (modkey & MAXC)
        x = (modkey >> 16) - self.order.anchors[comp]
        return comp, (x >> self.order.mono_shift) + self.ring._one_key

    def term_delta(self, monokey):
        """Additive modkey shift for multiplication by a monomial."""
        return (monokey - self.ring._one_key) << (self.order.mono_shift + 16)

    def zero(self):
        return FreeModuleElement(self, {})

    def unit(self, comp):
        return FreeModuleElement(self, {self.encode(comp, self.ring._one_key): 1})

    def element(self, entries):
        """Build an element from a list of per-component Polynomials."""
        if len(entries) != self.rank:
            raise ValueError("entry count mismatch")
        d = {}
        p = self.ring.prime
        for c, f in enumerate(entries):
            if f is None:
                continue
            for k, v in f.d.items():
                mk = self.encode(c, k)
                w = (d.get(mk, 0) + v) % p
                if w:
                    d[mk] = w
                elif mk in d:
                    del d[mk]
        return FreeModuleElement(self, d)

    def same_shape(self, other):
        return (self.ring == other.ring and self.twists == other.twists)

    def __repr__(self):
        return f"FreeModule(rank={self.rank}, twists={list(self.twists)})"


class FreeModuleElement:
    __slots__ = ("module", "d")

    def __init__(self, module, d):
        self.module = module
        self.d = d

    def is_zero(self):
        return not self.d

    def lead_modkey(self):
        return max(self.d)

    def lead(self):
        """(component, monomial key, coefficient) of the lead term."""
        k = max(self.d)
        c, m = self.module.decode(k)
        return c, m, self.d[k]

    def degree(self):
        if not self.d:
            return -1
        mod = self.module
        degs = set()
        for k in self.d:
            c, m = mod.decode(k)
            degs.add(mod.ring.key_degree(m) + mod.twists[c])
        if len(degs) != 1:
            raise ValueError("inhomogeneous module element")
        return degs.pop()

    def is_homogeneous(self):
        if not self.d:
            return True
        try:
            self.degree()
            return True
        except ValueError:
            return False

    def __add__(self, other):
        p = self.module.ring.prime
        d = dict(self.d)
        for k, c in other.d.items():
            v = (d.get(k, 0) + c) % p
            if v:
                d[k] = v
            elif k in d:
                del d[k]
        return FreeModuleElement(self.module, d)

    def __neg__(self):
        p = self.module.ring.prime
        return FreeModuleElement(self.module, {k: p - c for k, c in self.d.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        p = self.module.ring.prime
        c %= p
        if not c:
            return FreeModuleElement(self.module, {})
        return FreeModuleElement(self.module, {k: (v * c) % p for k, v in self.d.items()})

    def term_mul(self, monokey, coeff):
        p = self.module.ring.prime
        delta = self.module.term_delta(monokey)
        return FreeModuleElement(self.module,
                                 {k + delta: (v * coeff) % p for k, v in self.d.items()})

    def poly_mul(self, f):
        out = self.module.zero()
        for k, c in f.d.items():
            out = out + self.term_mul(k, c)
        return out

    def monic(self):
        if not self.d:
            return self
        p = self.module.ring.prime
        inv = pow(self.d[max(self.d)], p - 2, p)
        return self.scale(inv)

    def entries(self):
        """Per-component Polynomials."""
        from .polyring import Polynomial
        mod = self.module
        cols = [{} for _ in range(mod.rank)]
        for k, v in self.d.items():
            c, m = mod.decode(k)
            cols[c][m] = v
        return [Polynomial(mod.ring, col) for col in cols]

    def __eq__(self, other):
        return (isinstance(other, FreeModuleElement)
                and self.module.same_shape(other.module) and self.d == other.d)

    def __repr__(self):
        ents = self.entries()
        return "(" + ", ".join(str(e) for e in ents) + ")"


# -- reduction ---------------------------------------------------------------

def _lead_info(mod, d):
    k = max(d)
    c = MAXC - (k & MAXC)
    x = (k >> 16) - mod.order.anchors[c]
    return k, c, (x >> mod.order.mono_shift) + mod.ring._one_key


def _normal_form_dict(hd, basis, byc, mod, quotients=None, first_min_index=None):
    """Fully reduce dict hd against monic basis elements; hd is consumed.

    quotients: optional dict index -> {quotient monokey: coeff} recording the
    standard representation.  first_min_index: restrict the divisor for the
    very first reduction step to basis indices > first_min_index.
    """
    ring = mod.ring
    p = ring.prime
    one = ring._one_key
    high = ring._high_mask
    anchors = mod.order.anchors
    sh = mod.order.mono_shift
    dsh = sh + 16
    out = {}
    first = first_min_index is not None
    while hd:
        k = max(hd)
        c = MAXC - (k & MAXC)
        mono = (((k >> 16) - anchors[c]) >> sh) + one
        hit = -1
        q = 0
        for lm, idx in byc.get(c, ()):
            if first and idx <= first_min_index:
                continue
            qq = mono - lm + one
            if not (qq & high):
                hit = idx
                q = qq
                break
        first = False
        if hit < 0:
            out[k] = hd.pop(k)
            continue
        coef = hd[k]
        delta = (q - one) << dsh
        for bk, bv in basis[hit].items():
            kk = bk + delta
            v = (hd.get(kk, 0) - coef * bv) % p
            if v:
                hd[kk] = v
            elif kk in hd:
                del hd[kk]
        if quotients is not None:
            qd = quotients.setdefault(hit, {})
            w = (qd.get(q, 0) + coef) % p
            if w:
                qd[q] = w
            elif q in qd:
                del qd[q]
    return out


def _degree_of(mod, d):
    k = max(d)
    c, m = mod.decode(k)
    return mod.ring.key_degree(m) + mod.twists[c]


def buchberger(elements, mod, product_criterion=None):
    """Reduced Groebner basis of the submodule generated by the elements.

    Deterministic: normal (degree-first) pair strategy, ties by lcm key then
    pair indices; Gebauer-Moeller pair elimination; final interreduction.
    Returns a list of monic term dicts sorted by (degree, lead modkey).
    """
    ring = mod.ring
    p = ring.prime
    if product_criterion is None:
        product_criterion = (mod.rank == 1)
    basis = []      # term dicts, monic
    leads = []      # (comp, lead monokey)
    byc = {}        # comp -> list of (lead monokey, index)
    pairs = []      # heap of (sdeg, lcmkey, i, j)
    pairset = {}    # (i,j) -> lcm monokey
    alive = []

    def push_pair(i, j, lcm):
        sdeg = ring.key_degree(lcm) + mod.twists[leads[i][0]]
        heapq.heappush(pairs, (sdeg, lcm, i, j))
        pairset[(i, j)] = lcm

    def add_element(hd):
        t = len(basis)
        basis.append(hd)
        k, c, lm = _lead_info(mod, hd)
        leads.append((c, lm))
        alive.append(True)
        byc.setdefault(c, []).append((lm, t))
        # Gebauer-Moeller update
        cand = []
        for i in range(t):
            if leads[i][0] == c:
                cand.append((i, ring.key_lcm(leads[i][1], lm)))
        kept = []
        for i, lcm in sorted(cand, key=lambda x: (ring.key_degree(x[1]), x[1], x[0])):
            redundant = False
            for j, lcm2 in kept:
                if lcm2 != lcm and ring.key_divides(lcm2, lcm):
                    redundant = True
                    break
            if not redundant:
                for j, lcm2 in cand:
                    if j != i and lcm2 == lcm and any(jj == j for jj, _ in kept):
                        redundant = True
                        break
            if not redundant:
                kept.append((i, lcm))
        # chain criterion on old pairs
        for (i, j), lcm in list(pairset.items()):
            if leads[i][0] == c and ring.key_divides(lm, lcm):
                li = ring.key_lcm(leads[i][1], lm)
                lj = ring.key_lcm(leads[j][1], lm)
                if li != lcm and lj != lcm:
                    del pairset[(i, j)]
        for i, lcm in kept:
            if product_criterion and ring.key_coprime(leads[i][1], lm):
                continue
            push_pair(i, t, lcm)

    start = sorted((dict(e.d) for e in elements if e.d),
                   key=lambda d: (_degree_of(mod, d), max(d)))
    for hd in start:
        r = _normal_form_dict(dict(hd), basis, byc, mod)
        if r:
            inv = pow(r[max(r)], p - 2, p)
            add_element({k: (v * inv) % p for k, v in r.items()})

    while pairs:
        sdeg, lcm, i, j = heapq.heappop(pairs)
        if pairset.pop((i, j), None) is None:
            continue
        ci, lmi = leads[i]
        _, lmj = leads[j]
        ui = lcm - lmi + ring._one_key
        uj = lcm - lmj + ring._one_key
        di = (ui - ring._one_key) << (mod.order.mono_shift + 16)
        dj = (uj - ring._one_key) << (mod.order.mono_shift + 16)
        hd = {}
        for k, v in basis[i].items():
            hd[k + di] = v
        for k, v in basis[j].items():
            kk = k + dj
            w = (hd.get(kk, 0) - v) % p
            if w:
                hd[kk] = w
            elif kk in hd:
                del hd[kk]
        r = _normal_form_dict(hd, basis, byc, mod)
        if r:
            inv = pow(r[max(r)], p - 2, p)
            add_element({k: (v * inv) % p for k, v in r.items()})

    return _interreduce(basis, mod)


def _interreduce(basis, mod):
    """Minimal reduced form: drop divisible leads, tail-reduce, sort."""
    ring = mod.ring
    p = ring.prime
    infos = []
    for idx, hd in enumerate(basis):
        if hd:
            k, c, lm = _lead_info(mod, hd)
            infos.append((_degree_of(mod, hd), k, c, lm, idx))
    infos.sort()
    kept = []
    kept_leads = {}
    for deg, k, c, lm, idx in infos:
        if any(ring.key_divides(lm2, lm) for lm2 in kept_leads.get(c, ())):
            continue
        kept.append((deg, k, c, lm, idx))
        kept_leads.setdefault(c, []).append(lm)
    out = []
    byc = {}
    elems = []
    for pos, (deg, k, c, lm, idx) in enumerate(kept):
        elems.append(basis[idx])
        byc.setdefault(c, []).append((lm, pos))
    for pos, (deg, k, c, lm, idx) in enumerate(kept):
        hd = dict(elems[pos])
        lead_coeff = hd.pop(max(hd))
        others = {cc: [(l, i) for l, i in lst if i != pos] for cc, lst in byc.items()}
        tail = _normal_form_dict(hd, elems, others, mod)
        res = dict(tail)
        res[k] = lead_coeff
        # lead might itself be reducible by another kept lead only if equal; skip
        inv = pow(res[max(res)], p - 2, p)
        out.append({kk: (v * inv) % p for kk, v in res.items()})
    # tail reduction can change elements used by later reductions; iterate to fix
    changed = True
    while changed:
        changed = False
        byc2 = {}
        for pos, hd in enumerate(out):
            k, c, lm = _lead_info(mod, hd)
            byc2.setdefault(c, []).append((lm, pos))
        for pos in range(len(out)):
            hd = dict(out[pos])
            k = max(hd)
            lc = hd.pop(k)
            others = {cc: [(l, i) for l, i in lst if i != pos] for cc, lst in byc2.items()}
            tail = _normal_form_dict(hd, out, others, mod)
            res = dict(tail)
            res[k] = lc
            if res != out[pos]:
                out[pos] = res
                changed = True
    out.sort(key=lambda hd: (_degree_of(mod, hd), max(hd)))
    return out


# -- ideal-level API ---------------------------------------------------------

class GradedIdeal:
    """Homogeneous ideal with per-order cached reduced Groebner bases."""

    def __init__(self, ring, generators):
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator ring mismatch")
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
        self.ring = ring
        self.generators = gens
        self._gb_cache = {}

    def groebner_basis(self, order=None):
        order = order or self.ring.order
        if order not in self._gb_cache:
            ring = self.ring if order == self.ring.order else self.ring.with_order(order)
            gens = [map_to_ring(g, ring) for g in self.generators]
            self._gb_cache[order] = groebner_basis(gens, ring)
        return self._gb_cache[order]

    def contains(self, f):
        return normal_form(f, self.groebner_basis()).is_zero()

    def __eq__(self, other):
        if not isinstance(other, GradedIdeal) or self.ring != other.ring:
            return False
        a = [str(f) for f in self.groebner_basis()]
        b = [str(f) for f in other.groebner_basis()]
        return a == b

    def __repr__(self):
        return f"GradedIdeal({len(self.generators)} generators in {self.ring!r})"


class GradedSubmodule:
    """Submodule of a free module with a cached module Groebner basis."""

    def __init__(self, module, generators):
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
        self.module = module
        self.generators = gens
        self._gb = None

    def groebner_basis(self):
        if self._gb is None:
            dicts = buchberger(self.generators, self.module)
            self._gb = [FreeModuleElement(self.module, hd) for hd in dicts]
        return self._gb

    def __repr__(self):
        return f"GradedSubmodule({len(self.generators)} generators of {self.module!r})"


def map_to_ring(f, ring2):
    """Transport a polynomial into a ring matching variables by name."""
    from .polyring import Polynomial
    r1 = f.ring
    if r1.variable_names == ring2.variable_names and r1.prime == ring2.prime:
        if r1.order == ring2.order:
            return Polynomial(ring2, dict(f.d))
        d = {ring2.pack(r1.unpack(k)): v for k, v in f.d.items()}
        return Polynomial(ring2, d)
    idx = []
    for nm in r1.variable_names:
        idx.append(ring2._name_index.get(nm, -1))
    d = {}
    for k, v in f.d.items():
        exps = r1.unpack(k)
        new = [0] * ring2.nvars
        for i, e in enumerate(exps):
            if e:
                if idx[i] < 0:
                    raise ValueError(f"variable {r1.variable_names[i]} absent from target ring")
                new[idx[i]] = e
        d[ring2.pack(tuple(new))] = v % ring2.prime
    return Polynomial(ring2, d)


def _poly_to_m1(f, mod):
    return mod.element([f])


def _m1_to_poly(el):
    return el.entries()[0]


def groebner_basis(gens, ring=None):
    """Reduced Groebner basis of an ideal, as a list of Polynomials."""
    gens = [g for g in gens if not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValueError("empty generator list with no ring")
        ring = gens[0].ring
    mod = FreeModule(ring, (0,))
    dicts = buchberger([_poly_to_m1(g, mod) for g in gens], mod)
    return [_m1_to_poly(FreeModuleElement(mod, hd)) for hd in dicts]


def normal_form(f, gb):
    """Remainder of f on full division by a reduced Groebner basis."""
    if not gb:
        return f
    ring = gb[0].ring
    if f.ring != ring:
        raise ValueError("order mismatch between polynomial and basis")
    mod = FreeModule(ring, (0,))
    basis = []
    byc = {0: []}
    for i, g in enumerate(gb):
        gm = _poly_to_m1(g.monic(), mod)
        basis.append(gm.d)
        byc[0].append((g.lead_key(), i))
    hd = dict(_poly_to_m1(f, mod).d)
    out = _normal_form_dict(hd, basis, byc, mod)
    return _m1_to_poly(FreeModuleElement(mod, out))


def eliminate(ideal, front_vars):
    """Intersect with the subring omitting front_vars (block-order GB)."""
    from .polyring import Ring, TermOrder
    ring = ideal.ring
    front = [nm for nm in ring.variable_names if nm in set(front_vars)]
    back = [nm for nm in ring.variable_names if nm not in set(front_vars)]
    if not front:
        raise ValueError("empty elimination set")
    if not back:
        raise ValueError("cannot eliminate every variable")
    if len(front) != len(set(front_vars)):
        raise ValueError("unknown variable in elimination set")
    elim_ring = Ring(tuple(front + back), ring.prime, TermOrder("block", len(front)))
    gens = [map_to_ring(g, elim_ring) for g in ideal.generators]
    gb = groebner_basis(gens, elim_ring)
    back_ring = Ring(tuple(back), ring.prime)
    kept = [map_to_ring(g, back_ring) for g in gb
            if elim_ring.front_degree(g.lead_key()) == 0]
    return GradedIdeal(back_ring, kept)


def syzygies(gens, module=None):
    """First syzygy module of the given generators (Schreyer-style, via a
    component-elimination Groebner basis of tagged generators)."""
    if isinstance(gens, GradedSubmodule):
        module = gens.module
        gens = list(gens.generators)
    gens = list(gens)
    if module is None:
        if not gens:
            raise ValueError("empty generator list with no module")
        if hasattr(gens[0], "module"):
            module = gens[0].module
        else:
            ring = gens[0].ring
            module = FreeModule(ring, (0,))
            gens = [_poly_to_m1(g, module) for g in gens]
    elif gens and not hasattr(gens[0], "module"):
        gens = [_poly_to_m1(g, module) for g in gens]
    ring = module.ring
    r0 = module.rank
    k = len(gens)
    degs = [g.degree() for g in gens]
    big = FreeModule(ring, tuple(module.twists) + tuple(degs),
                     ModuleOrder.component_blocks([1] * r0 + [0] * k, ring))
    tagged = []
    for i, g in enumerate(gens):
        d = {}
        for mk, v in g.d.items():
            c, m = module.decode(mk)
            d[big.encode(c, m)] = v
        d[big.encode(r0 + i, ring._one_key)] = 1
        tagged.append(FreeModuleElement(big, d))
    gb = buchberger(tagged, big, product_criterion=False)
    syz_mod = FreeModule(ring, tuple(degs))
    out = []
    for hd in gb:
        kmax = max(hd)
        c, _ = big.decode(kmax)
        if c < r0:
            continue
        d = {}
        for mk, v in hd.items():
            cc, m = big.decode(mk)
            d[syz_mod.encode(cc - r0, m)] = v
        out.append(FreeModuleElement(syz_mod, d))
    return GradedSubmodule(syz_mod, out)


def apply_gens(syz, gens):
    """Image of a syzygy-module element under the generator map."""
    out = None
    for c, q in enumerate(syz.entries()):
        if q.is_zero():
            continue
        piece = gens[c].poly_mul(q) if hasattr(gens[c], "module") else gens[c] * q
        out = piece if out is None else out + piece
    if out is None:
        if hasattr(gens[0], "module"):
            return gens[0].module.zero()
        return gens[0].ring.zero()
    return out


def ideal_quotient_single(ideal, f):
    """(I : f) via syzygies of [f, generators of I]."""
    if f.is_zero():
        raise ValueError("quotient by zero")
    ring = ideal.ring
    gens = [f] + list(ideal.generators)
    syz = syzygies(gens)
    quot = [s.entries()[0] for s in syz.generators]
    quot = [q for q in quot if not q.is_zero()]
    return GradedIdeal(ring, groebner_basis(quot, ring) if quot else [])


def ideal_quotient(I, J):
    """(I : J) = intersection over generators g of J of (I : g)."""
    gens = [g for g in J.generators if not g.is_zero()]
    if not gens:
        raise ValueError("quotient by the zero ideal")
    out = ideal_quotient_single(I, gens[0])
    for g in gens[1:]:
        out = intersect(out, ideal_quotient_single(I, g))
    return out


def intersect(I, J):
    """Ideal intersection via syzygies of the concatenated generators."""
    gi = list(I.generators)
    gj = list(J.generators)
    if not gi or not gj:
        return GradedIdeal(I.ring, [])
    syz = syzygies(gi + gj)
    out = []
    for s in syz.generators:
        ent = s.entries()
        f = I.ring.zero()
        for c in range(len(gi)):
            f = f + gi[c] * ent[c]
        if not f.is_zero():
            out.append(f)
    return GradedIdeal(I.ring, groebner_basis(out, I.ring) if out else [])


def saturate(ideal, f):
    """Stabilized iterated quotient (I : f^infinity)."""
    if f.is_zero():
        raise ValueError("saturation by zero")
    cur = GradedIdeal(ideal.ring, groebner_basis(list(ideal.generators), ideal.ring)
                      if ideal.generators else [])
    while True:
        nxt = ideal_quotient_single(cur, f)
        if [str(g) for g in nxt.groebner_basis()] == [str(g) for g in cur.groebner_basis()]:
            return cur
        cur = nxt


def minimal_generators(gens, module=None):
    """Subset of the given homogeneous generators that minimally generates.

    Processes by increasing degree; a generator is dropped when it reduces to
    zero against the Groebner basis of the previously accepted ones.
    """
    if isinstance(gens, GradedSubmodule):
        module = gens.module
        gens = list(gens.generators)
    gens = list(gens)
    if not gens:
        return []
    if not hasattr(gens[0], "module"):
        ring = gens[0].ring
        module = FreeModule(ring, (0,))
        wrapped = [_poly_to_m1(g, module) for g in gens]
        kept = minimal_generators(wrapped, module)
        return [_m1_to_poly(e) for e in kept]
    order = sorted(range(len(gens)), key=lambda i: (gens[i].degree(), max(gens[i].d)))
    kept = []
    for i in order:
        if not kept:
            kept.append(gens[i])
            continue
        gb = buchberger(kept, module)
        byc = {}
        for pos, hd in enumerate(gb):
            _, c, lm = _lead_info(module, hd)
            byc.setdefault(c, []).append((lm, pos))
        r = _normal_form_dict(dict(gens[i].d), gb, byc, module)
        if r:
            kept.append(gens[i])
    return kept
