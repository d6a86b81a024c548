"""Exact arithmetic in finite fields GF(p^k).

Elements are coefficient vectors over GF(p), little-endian in a generator g
of GF(p^k) = GF(p)[z] / (modulus).  All choices are deterministic so that
classification output is reproducible across runs:

* the modulus is the lexicographically smallest monic irreducible of the
  requested degree (coefficients compared constant-term-first);
* the primitive r-th root of unity is the lexicographically smallest element
  of multiplicative order exactly r;
* subfield embeddings send g to the lexicographically smallest root of the
  small modulus in the big field.

Root finding is an exhaustive scan over the field, O(p^k * deg).  That is
deliberate: the fields used here are tiny (a few thousand elements), and the
scan is exact and trivially correct.  These fields approximate an
algebraically closed field of characteristic p; whether a polynomial fully
splits in the chosen field is reported, never silently assumed.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence


class FieldError(ValueError):
    """Invalid field construction or arithmetic (e.g. inverting zero)."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficients as int lists (constant first)

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    # m must be monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _ptrim(a)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        monic_b = [(c * inv_lead) % p for c in b]
        a, b = monic_b, _pmod(a, monic_b, p)
    return a


def _ppowmod_x(e: int, m: Sequence[int], p: int) -> list[int]:
    """z^e mod m over GF(p), by square and multiply."""
    result = [1]
    base = _pmod([0, 1], m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """Rabin test: m (monic, degree k) is irreducible over GF(p)."""
    k = len(m) - 1
    if k < 1:
        return False
    z = _pmod([0, 1], m, p)
    # z^{p^k} == z mod m
    zq = _ppowmod_x(p**k, m, p)
    if _ptrim([(a - b) % p for a, b in itertools.zip_longest(zq, z, fillvalue=0)]):
        return False
    # gcd(z^{p^{k/q}} - z, m) == 1 for every prime divisor q of k
    for q in _prime_divisors(k):
        zr = _ppowmod_x(p ** (k // q), m, p)
        diff = _ptrim([(a - b) % p for a, b in itertools.zip_longest(zr, z, fillvalue=0)])
        g = _pgcd(diff, m, p)
        if len(g) != 1:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# field context and elements

class FieldCtx:
    """The field GF(p^k) presented as GF(p)[z] / (modulus).

    modulus is a monic irreducible of degree k, stored constant-term-first
    with its leading 1 included (length k+1).  Instances are immutable and
    safe to share across threads.
    """

    __slots__ = ("p", "k", "modulus", "_red", "_zero", "_one")

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        modulus = tuple(int(c) % p for c in modulus[:-1]) + (1,)
        if len(modulus) != k + 1:
            raise FieldError(f"modulus must have degree {k}")
        if not _is_irreducible(list(modulus), p):
            raise FieldError("modulus is not irreducible")
        self.p = p
        self.k = k
        self.modulus = modulus
        # reduction table: z^m mod modulus for m = k .. 2k-2
        red = []
        cur = list(modulus[:-1])  # z^k = -(low part)
        cur = [(-c) % p for c in cur]
        for _ in range(k - 1):
            red.append(tuple(cur))
            # multiply by z
            cur = [0] + cur
            lead = cur.pop()  # coefficient of z^k
            if lead:
                cur = [(c + lead * r) % p for c, r in zip(cur, red[0])]
        red.append(tuple(cur))
        self._red = tuple(red)
        self._zero = FieldElem(self, (0,) * k)
        self._one = FieldElem(self, (1,) + (0,) * (k - 1))

    @property
    def order(self) -> int:
        return self.p**self.k

    def zero(self) -> "FieldElem":
        return self._zero

    def one(self) -> "FieldElem":
        return self._one

    def gen(self) -> "FieldElem":
        """The class of z (the vector generator g); equals 0 when k = 1."""
        if self.k == 1:
            return self._zero
        return FieldElem(self, (0, 1) + (0,) * (self.k - 2))

    def elem(self, value) -> "FieldElem":
        """Coerce an int (prime-subfield constant) or coefficient list."""
        if isinstance(value, FieldElem):
            if value.ctx != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElem(self, ((value % self.p),) + (0,) * (self.k - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.k:
            raise FieldError(f"too many coefficients for GF({self.p}^{self.k})")
        return FieldElem(self, coeffs + (0,) * (self.k - len(coeffs)))

    def elements(self) -> Iterator["FieldElem"]:
        """All field elements, in lexicographic order of coefficient vectors."""
        for coeffs in itertools.product(range(self.p), repeat=self.k):
            yield FieldElem(self, coeffs)

    def random_element(self, rng) -> "FieldElem":
        return FieldElem(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, k={self.k})"

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(data: dict) -> "FieldCtx":
        return FieldCtx(int(data["p"]), int(data["k"]), [int(c) for c in data["modulus"]])


class FieldElem:
    """An element of GF(p^k): a length-k residue vector, little-endian in g."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem) or other.ctx != self.ctx:
            raise FieldError("operands belong to different fields")

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElem":
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        ctx = self.ctx
        p, k = ctx.p, ctx.k
        if k == 1:
            return FieldElem(ctx, ((self.coeffs[0] * other.coeffs[0]) % p,))
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    prod[i + j] += ai * bj
        low = prod[:k]
        for m in range(k, 2 * k - 1):
            c = prod[m]
            if c:
                row = ctx._red[m - k]
                for i in range(k):
                    low[i] += c * row[i]
        return FieldElem(ctx, tuple(c % p for c in low))

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.inv()

    def __pow__(self, e: int) -> "FieldElem":
        if e < 0:
            return self.inv() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> "FieldElem":
        if self.is_zero():
            raise FieldError("inversion of zero")
        return self ** (self.ctx.order - 2)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElem)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElem({format_elem(self)!r} in GF({self.ctx.p}^{self.ctx.k}))"


# ---------------------------------------------------------------------------
# constructors and canonical choices

def make_field(p: int, k: int) -> FieldCtx:
    """GF(p^k) with the lexicographically smallest monic irreducible modulus.

    Coefficient vectors are compared constant-term-first, so make_field is
    reproducible: two calls with the same (p, k) yield identical moduli.
    """
    if not _is_prime(p):
        raise FieldError(f"p = {p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    for low in itertools.product(range(p), repeat=k):
        candidate = list(low) + [1]
        if _is_irreducible(candidate, p):
            return FieldCtx(p, k, candidate)
    raise AssertionError("unreachable: irreducibles of every degree exist")


def min_ext_degree(p: int, r: int) -> int:
    """Smallest k with r | p^k - 1, i.e. GF(p^k) contains r-th roots of unity."""
    if not _is_prime(p):
        raise FieldError(f"p = {p} is not prime")
    import math

    if math.gcd(p, r) != 1:
        raise FieldError(f"p = {p} and r = {r} are not coprime")
    k = 1
    pk = p % r
    while pk != 1 % r:
        k += 1
        pk = (pk * p) % r
    return k


def primitive_root_of_unity(ctx: FieldCtx, r: int) -> FieldElem:
    """The lexicographically smallest element of multiplicative order exactly r."""
    if r < 1:
        raise FieldError("r must be positive")
    if (ctx.order - 1) % r != 0:
        raise FieldError(f"GF({ctx.p}^{ctx.k}) has no element of order {r}")
    if r == 1:
        return ctx.one()
    proper = [r // q for q in _prime_divisors(r)]
    for x in ctx.elements():
        if x.is_zero():
            continue
        if (x**r) == ctx.one() and all((x**d) != ctx.one() for d in proper):
            return x
    raise FieldError(f"no element of order {r} found")  # pragma: no cover


def artin_schreier(z: FieldElem) -> FieldElem:
    """z^p - z; vanishes exactly on the prime subfield."""
    return z ** z.ctx.p - z


# ---------------------------------------------------------------------------
# polynomials with FieldElem coefficients (constant term first)

def poly_eval(coeffs: Sequence[FieldElem], x: FieldElem) -> FieldElem:
    """Horner evaluation."""
    acc = x.ctx.zero()
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_mul(a: Sequence[FieldElem], b: Sequence[FieldElem]) -> list[FieldElem]:
    ctx = a[0].ctx
    out = [ctx.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai.is_zero():
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return out


def poly_normalize(coeffs: Sequence[FieldElem]) -> list[FieldElem]:
    # keep at least the constant term so the zero polynomial stays representable
    out = list(coeffs)
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return out


def poly_is_zero(coeffs: Sequence[FieldElem]) -> bool:
    return all(c.is_zero() for c in coeffs)


def poly_roots(ctx: FieldCtx, coeffs: Sequence[FieldElem]) -> list[FieldElem]:
    """All roots of the polynomial lying in ctx, without multiplicity.

    Exhaustive scan over the field in lexicographic order; cost is
    O(p^k * deg), fine for the desk-scale fields this library targets.
    """
    if poly_is_zero(coeffs):
        raise FieldError("zero polynomial has every element as a root")
    return [x for x in ctx.elements() if poly_eval(coeffs, x).is_zero()]


def poly_deflate(coeffs: Sequence[FieldElem], root: FieldElem) -> list[FieldElem]:
    """Synthetic division by (z - root); the division must be exact."""
    coeffs = poly_normalize(coeffs)
    ctx = root.ctx
    quot = [ctx.zero()] * (len(coeffs) - 1)
    carry = ctx.zero()
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry * root
        quot[i - 1] = carry
    rem = coeffs[0] + carry * root
    if not rem.is_zero():
        raise FieldError("deflation by a non-root")
    return quot if quot else [ctx.zero()]


def root_multiplicities(ctx: FieldCtx, coeffs: Sequence[FieldElem]) -> dict[FieldElem, int]:
    """Roots in ctx with multiplicities, found by scan plus repeated deflation."""
    result: dict[FieldElem, int] = {}
    work = poly_normalize(coeffs)
    for x in poly_roots(ctx, coeffs):
        mult = 0
        while len(work) > 1 and poly_eval(work, x).is_zero():
            work = poly_deflate(work, x)
            mult += 1
        result[x] = mult
    return result


# ---------------------------------------------------------------------------
# subfield embedding

def embed(src: FieldCtx, dst: FieldCtx):
    """A field embedding GF(p^k0) -> GF(p^k), k0 | k.

    Maps the generator of src to the lexicographically smallest root of
    src's modulus in dst, which makes the embedding deterministic.  Returns
    a callable on FieldElem.
    """
    if src.p != dst.p:
        raise FieldError("different characteristics")
    if dst.k % src.k != 0:
        raise FieldError(f"GF(p^{src.k}) does not embed in GF(p^{dst.k})")
    if src == dst:
        return lambda x: x
    modulus = [dst.elem(c) for c in src.modulus]
    roots = poly_roots(dst, modulus)
    if not roots:
        raise FieldError("modulus has no root in target field")  # pragma: no cover
    rho = roots[0]
    powers = [dst.one()]
    for _ in range(src.k - 1):
        powers.append(powers[-1] * rho)

    def _map(x: FieldElem) -> FieldElem:
        if x.ctx != src:
            raise FieldError("element not in source field")
        acc = dst.zero()
        for c, pw in zip(x.coeffs, powers):
            if c:
                acc = acc + dst.elem(c) * pw
        return acc

    return _map


# ---------------------------------------------------------------------------
# literals: comma-separated residues, little-endian in g  (e.g. "2,1" = 2 + g)

def parse_elem(ctx: FieldCtx, text: str) -> FieldElem:
    parts = [s.strip() for s in text.split(",")]
    try:
        residues = [int(s) for s in parts]
    except ValueError as exc:
        raise FieldError(f"bad field element literal {text!r}") from exc
    if len(residues) > ctx.k:
        raise FieldError(
            f"literal {text!r} has {len(residues)} components; field GF({ctx.p}^{ctx.k}) allows {ctx.k}"
        )
    if any(c < 0 or c >= ctx.p for c in residues):
        raise FieldError(f"literal {text!r} has residues outside [0, {ctx.p})")
    return ctx.elem(residues)


def format_elem(x: FieldElem) -> str:
    return ",".join(str(c) for c in x.coeffs)
