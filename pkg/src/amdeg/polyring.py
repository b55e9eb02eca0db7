"""Sparse multivariate polynomial arithmetic over a prime field F_p.

Monomials are packed into Python integers so that plain integer comparison
realizes the term order and ``max()`` over a dict of terms finds the lead
term at C speed.  Layout, most significant first, one group per order block:

    [block degree : 16 bits][K - e_last : 8 bits]...[K - e_first : 8 bits]

with K = 127 and exponents capped at MAX_EXP = 63.  Storing complemented
exponents makes integer comparison agree with degrevlex inside each block
(higher degree first, ties broken by the smaller exponent on the last
differing variable), and makes monomial quotients a single subtraction with
a bit-mask validity test.
"""

from dataclasses import dataclass

DEFAULT_PRIME = 32003
MAX_EXP = 63
_K = 127
_FIELD_BITS = 8
_DEG_BITS = 16


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class TermOrder:
    """Term-order descriptor: plain degrevlex or a block elimination order.

    A block order splits the variables into [front | back] (front = first
    ``front`` variables); the front block dominates, degrevlex within each.
    """

    def __init__(self, kind="degrevlex", front=0):
        if kind not in ("degrevlex", "block"):
            raise ValueError(f"unknown order kind {kind!r}")
        if kind == "block" and front <= 0:
            raise ValueError("block order needs a positive front size")
        self.kind = kind
        self.front = front if kind == "block" else 0

    def __eq__(self, other):
        return (isinstance(other, TermOrder)
                and (self.kind, self.front) == (other.kind, other.front))

    def __hash__(self):
        return hash((self.kind, self.front))

    def __repr__(self):
        if self.kind == "degrevlex":
            return "TermOrder('degrevlex')"
        return f"TermOrder('block', front={self.front})"


DEGREVLEX = TermOrder()


@dataclass(frozen=True)
class Monomial:
    """Exponent vector with cached total degree (API-boundary type)."""

    exponents: tuple

    @property
    def degree(self):
        return sum(self.exponents)


class Ring:
    """Graded polynomial ring F_p[x_0, ..., x_{n-1}] with a term order."""

    def __init__(self, variable_names, prime=DEFAULT_PRIME, order=None):
        names = tuple(variable_names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        if not names:
            raise ValueError("need at least one variable")
        if not (2 < prime < 2**31) or not _is_prime(prime):
            raise ValueError(f"modulus {prime} is not an odd prime below 2^31")
        order = order or DEGREVLEX
        if order.kind == "block" and not (0 < order.front < len(names)):
            raise ValueError("block split must be a proper prefix/suffix partition")
        self.variable_names = names
        self.prime = prime
        self.order = order
        self.nvars = len(names)
        self._name_index = {nm: i for i, nm in enumerate(names)}
        self._build_layout()

    def _build_layout(self):
        n = self.nvars
        front = self.order.front if self.order.kind == "block" else 0
        # blocks listed most-significant first: front block then back block
        blocks = [range(0, front), range(front, n)] if front else [range(0, n)]
        shift = 0
        self._var_shift = [0] * n
        self._deg_shift = [0] * n  # per-variable: shift of its block's degree field
        for blk in reversed(blocks):
            for i in blk:
                self._var_shift[i] = shift
                shift += _FIELD_BITS
            for i in blk:
                self._deg_shift[i] = shift
            shift += _DEG_BITS
        self._total_bits = shift
        one = 0
        for i in range(n):
            one |= _K << self._var_shift[i]
        self._one_key = one
        high = 0
        bit6 = 0
        for i in range(n):
            high |= 0x80 << self._var_shift[i]
            bit6 |= 0x40 << self._var_shift[i]
        self._high_mask = high
        self._bit6_mask = bit6
        self.var_keys = [self.pack(tuple(1 if j == i else 0 for j in range(n)))
                         for i in range(n)]

    # -- packed-key primitives ------------------------------------------

    def pack(self, exponents):
        if len(exponents) != self.nvars:
            raise ValueError("exponent length mismatch")
        key = self._one_key
        for i, e in enumerate(exponents):
            if not 0 <= e <= MAX_EXP:
                raise OverflowError(f"exponent {e} outside [0, {MAX_EXP}]")
            key -= e << self._var_shift[i]
            key += e << self._deg_shift[i]
        return key

    def unpack(self, key):
        return tuple(_K - ((key >> self._var_shift[i]) & 0xFF)
                     for i in range(self.nvars))

    def key_degree(self, key):
        return sum(_K - ((key >> self._var_shift[i]) & 0xFF)
                   for i in range(self.nvars))

    def key_mul(self, a, b):
        m = a + b - self._one_key
        if (~m) & self._bit6_mask:
            raise OverflowError("monomial exponent overflow in product")
        return m

    def key_div(self, b, a):
        """Quotient key b/a, or None when a does not divide b."""
        q = b - a + self._one_key
        if q & self._high_mask:
            return None
        return q

    def key_divides(self, a, b):
        return not ((b - a + self._one_key) & self._high_mask)

    def key_lcm(self, a, b):
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ea, eb)))

    def key_coprime(self, a, b):
        ea, eb = self.unpack(a), self.unpack(b)
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))

    def front_degree(self, key):
        """Total degree in the elimination (front) block; 0 for degrevlex."""
        if self.order.kind != "block":
            return 0
        return sum(_K - ((key >> self._var_shift[i]) & 0xFF)
                   for i in range(self.order.front))

    # -- element constructors -------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {self._one_key: 1})

    def constant(self, c):
        c %= self.prime
        return Polynomial(self, {self._one_key: c} if c else {})

    def variable(self, i):
        if isinstance(i, str):
            i = self._name_index[i]
        return Polynomial(self, {self.var_keys[i]: 1})

    def monomial(self, exponents, coeff=1):
        c = coeff % self.prime
        return Polynomial(self, {self.pack(tuple(exponents)): c} if c else {})

    def with_order(self, order):
        return Ring(self.variable_names, self.prime, order)

    def __eq__(self, other):
        return (isinstance(other, Ring)
                and self.variable_names == other.variable_names
                and self.prime == other.prime
                and self.order == other.order)

    def __hash__(self):
        return hash((self.variable_names, self.prime, self.order))

    def __repr__(self):
        return f"Ring({list(self.variable_names)}, p={self.prime}, {self.order!r})"


def compare(m1, m2, ring):
    """Total order on monomials in the ring's term order: -1, 0 or +1."""
    if len(m1.exponents) != len(m2.exponents):
        raise ValueError("exponent length mismatch")
    k1, k2 = ring.pack(m1.exponents), ring.pack(m2.exponents)
    return (k1 > k2) - (k1 < k2)


class Polynomial:
    """Element of a Ring: dict mapping packed monomial key -> coefficient.

    Treated as immutable after construction; all operations return fresh
    polynomials.  The empty dict is the zero polynomial.
    """

    __slots__ = ("ring", "d")

    def __init__(self, ring, d):
        self.ring = ring
        self.d = d

    # -- basic queries ----------------------------------------------------

    def is_zero(self):
        return not self.d

    def lead_key(self):
        return max(self.d)

    def lead_coeff(self):
        return self.d[max(self.d)]

    def lead_monomial(self):
        return Monomial(self.ring.unpack(max(self.d)))

    def degree(self):
        """Total degree (-1 for the zero polynomial)."""
        if not self.d:
            return -1
        return max(self.ring.key_degree(k) for k in self.d)

    def is_homogeneous(self):
        if not self.d:
            return True
        degs = {self.ring.key_degree(k) for k in self.d}
        return len(degs) == 1

    def terms(self):
        """Terms as (Monomial, coefficient), descending in the term order."""
        r = self.ring
        return [(Monomial(r.unpack(k)), self.d[k]) for k in sorted(self.d, reverse=True)]

    def constant_value(self):
        """Coefficient if this is a constant, else None."""
        if not self.d:
            return 0
        if len(self.d) == 1 and self.ring._one_key in self.d:
            return self.d[self.ring._one_key]
        return None

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        self._check(other)
        p = self.ring.prime
        d = dict(self.d)
        for k, c in other.d.items():
            v = (d.get(k, 0) + c) % p
            if v:
                d[k] = v
            elif k in d:
                del d[k]
        return Polynomial(self.ring, d)

    def __neg__(self):
        p = self.ring.prime
        return Polynomial(self.ring, {k: p - c for k, c in self.d.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        r = self.ring
        p = r.prime
        one = r._one_key
        d = {}
        for k1, c1 in self.d.items():
            for k2, c2 in other.d.items():
                m = k1 + k2 - one
                if (~m) & r._bit6_mask:
                    raise OverflowError("monomial exponent overflow in product")
                v = (d.get(m, 0) + c1 * c2) % p
                if v:
                    d[m] = v
                elif m in d:
                    del d[m]
        return Polynomial(r, d)

    def scale(self, c):
        p = self.ring.prime
        c %= p
        if c == 0:
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {k: (v * c) % p for k, v in self.d.items()})

    def term_mul(self, key, coeff):
        """Multiply by the single term coeff * (monomial of packed key)."""
        r = self.ring
        p = r.prime
        delta = key - r._one_key
        d = {}
        for k, v in self.d.items():
            m = k + delta
            if (~m) & r._bit6_mask:
                raise OverflowError("monomial exponent overflow in product")
            d[m] = (v * coeff) % p
        return Polynomial(r, d)

    def monic(self):
        if not self.d:
            return self
        inv = pow(self.lead_coeff(), self.ring.prime - 2, self.ring.prime)
        return self.scale(inv)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.d == other.d)

    def __pow__(self, n):
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.d:
            return "0"
        names = self.ring.variable_names
        parts = []
        for k in sorted(self.d, reverse=True):
            c = self.d[k]
            exps = self.ring.unpack(k)
            factors = []
            for nm, e in zip(names, exps):
                if e == 1:
                    factors.append(nm)
                elif e > 1:
                    factors.append(f"{nm}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self}>"


class LinearForm:
    """Homogeneous degree-1 form given by its coefficient vector."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    @staticmethod
    def unit(index, length):
        return LinearForm(tuple(1 if i == index else 0 for i in range(length)))

    def sub_scaled(self, other, factor, p):
        """self - factor * other, coefficients reduced mod p."""
        return LinearForm(tuple((a - factor * b) % p
                                for a, b in zip(self.coeffs, other.coeffs)))

    def to_polynomial(self, ring):
        if len(self.coeffs) != ring.nvars:
            raise ValueError("length mismatch")
        p = ring.prime
        d = {}
        for i, c in enumerate(self.coeffs):
            c %= p
            if c:
                d[ring.var_keys[i]] = c
        return Polynomial(ring, d)

    @staticmethod
    def from_polynomial(f):
        r = f.ring
        coeffs = [0] * r.nvars
        for k, c in f.d.items():
            exps = r.unpack(k)
            if sum(exps) != 1:
                raise ValueError("not a linear form")
            coeffs[exps.index(1)] = c
        return LinearForm(coeffs)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"LinearForm({list(self.coeffs)})"


def apply_linear_change(f, matrix):
    """Substitute x_i -> sum_j matrix[i][j] * x_j for every variable.

    The matrix must be invertible mod p; degrees are preserved.
    """
    from . import linalg

    r = f.ring
    p = r.prime
    n = r.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError("matrix shape mismatch")
    if linalg.rank([[c % p for c in row] for row in matrix], p) != n:
        raise ValueError("singular change-of-coordinates matrix")
    images = [LinearForm(row).to_polynomial(r) for row in matrix]
    # memoized powers of each image
    pows = [[r.one()] for _ in range(n)]
    out = r.zero()
    for k, c in f.d.items():
        exps = r.unpack(k)
        term = r.constant(c)
        for i, e in enumerate(exps):
            while len(pows[i]) <= e:
                pows[i].append(pows[i][-1] * images[i])
            if e:
                term = term * pows[i][e]
        out = out + term
    return out


# -- text grammar ----------------------------------------------------------

def parse_polynomial(text, ring):
    """Parse `3*x0^2*x1 - x2 + 5` style text into a Polynomial."""
    import re

    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise ValueError("empty polynomial text")
    # split into signed addends
    tokens = re.findall(r"[+-]?[^+-]+", s)
    p = ring.prime
    out = ring.zero()
    for tok in tokens:
        sign = 1
        body = tok
        while body and body[0] in "+-":
            if body[0] == "-":
                sign = -sign
            body = body[1:]
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = 1
        exps = [0] * ring.nvars
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            m = re.fullmatch(r"(\d+)|([A-Za-z_]\w*)(?:\^(\d+))?", factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if m.group(1) is not None:
                coeff = coeff * int(m.group(1))
            else:
                name = m.group(2)
                if name not in ring._name_index:
                    raise ValueError(f"unknown variable {name!r}")
                exps[ring._name_index[name]] += int(m.group(3) or 1)
        out = out + ring.monomial(exps, sign * coeff % p)
    return out
