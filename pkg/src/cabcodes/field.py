"""Finite fields GF(p^m) with log/antilog tables.

Elements are plain ints.  The residue polynomial c_0 + c_1 x + ... + c_{m-1} x^{m-1}
is stored as the integer c_0 + c_1 p + ... + c_{m-1} p^{m-1}, so the prime subfield
is always 0..p-1 and the zero/one elements are 0 and 1.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

MAX_FIELD_SIZE = 1 << 20

# add/sub tables as nested lists below this size; digit arithmetic above
_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
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
# Polynomials over GF(p), coefficient lists low-to-high
# ---------------------------------------------------------------------------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_sub(f, g, p):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return _trim([(a - b) % p for a, b in zip(f, g)])


def _poly_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def _poly_divmod(f, g, p):
    f = _trim(list(f))
    g = _trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(g[-1], p - 2, p)
    quot = [0] * max(len(f) - len(g) + 1, 0)
    while len(f) >= len(g) and f:
        shift = len(f) - len(g)
        c = f[-1] * inv_lead % p
        quot[shift] = c
        for i, b in enumerate(g):
            f[i + shift] = (f[i + shift] - c * b) % p
        _trim(f)
    return _trim(quot), f


def _poly_mod(f, g, p):
    return _poly_divmod(f, g, p)[1]


def _poly_gcd(f, g, p):
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _poly_mod(f, g, p)
    return f


def _poly_powmod(base, e, mod, p):
    result = [1]
    base = _poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), mod, p)
        base = _poly_mod(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Irreducibility of a polynomial over GF(p) (coefficients low-to-high).

    Degree <= 3 uses root-freeness; higher degrees use the Ben-Or test
    gcd(x^(p^i) - x, f) = 1 for i <= deg/2.
    """
    f = _trim([c % p for c in poly])
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if deg <= 3:
        for x in range(p):
            acc = 0
            for c in reversed(f):
                acc = (acc * x + c) % p
            if acc == 0:
                return False
        return True
    h = [0, 1]
    for _ in range(deg // 2):
        h = _poly_powmod(h, p, f, p)
        if len(_poly_gcd(f, _poly_sub(h, [0, 1], p), p)) != 1:
            return False
    return True


def _digits(v: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(v % p)
        v //= p
    return out


def _undigits(cs: Iterable[int], p: int) -> int:
    v = 0
    for c in reversed(list(cs)):
        v = v * p + c
    return v


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m with the smallest base-p integer encoding."""
    for v in range(p ** m, 2 * p ** m):
        cs = _digits(v, p, m + 1)
        if is_irreducible(cs, p):
            return tuple(cs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


_ELEM_RE = re.compile(r"^(-)?\s*(?:(a|α)(?:\^(-?\d+))?|(\d+))$")


class GF:
    """The field GF(p^m) for a fixed modulus and primitive element.

    ``modulus`` is the list of m+1 coefficients (low-to-high) of a monic
    irreducible polynomial; ``generator`` is an element of multiplicative
    order p^m - 1.  When omitted, both are the smallest valid choice under
    the base-p integer encoding (for GF(8): x^3 + x + 1 and x).
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None,
                 generator: int | None = None) -> None:
        if not is_prime(p):
            raise ValidationError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValidationError(f"extension degree must be >= 1, got {m}")
        if p ** m > MAX_FIELD_SIZE:
            raise ValidationError(f"field size {p}^{m} exceeds {MAX_FIELD_SIZE}")
        self.p = p
        self.m = m
        self.q = p ** m
        if modulus is None:
            modulus = smallest_irreducible(p, m)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValidationError("modulus must be monic of degree m")
            if any(not 0 <= c < p for c in modulus):
                raise ValidationError("modulus coefficients must lie in [0, p)")
            if not is_irreducible(modulus, p):
                raise ValidationError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = tuple(modulus)
        self._pows = [p ** i for i in range(m)]
        if generator is None:
            generator = self._smallest_primitive()
        elif not (0 < generator < self.q) or not self._is_primitive(generator):
            raise ValidationError(f"element {generator} is not primitive")
        self.generator = generator
        self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        prod = _poly_mul(_digits(a, self.p, self.m), _digits(b, self.p, self.m), self.p)
        return _undigits(_poly_mod(prod, self.modulus, self.p), self.p)

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    def _is_primitive(self, g: int) -> bool:
        n = self.q - 1
        return all(self._pow_slow(g, n // r) != 1 for r in _prime_factors(n)) and \
            self._pow_slow(g, n) == 1

    def _smallest_primitive(self) -> int:
        for g in range(1, self.q):
            if self._is_primitive(g):
                return g
        raise AssertionError("no primitive element")  # unreachable

    def _build_tables(self) -> None:
        q, p, m = self.q, self.p, self.m
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        gen_digits = _digits(self.generator, p, m)
        while len(gen_digits) > 1 and gen_digits[-1] == 0:
            gen_digits.pop()
        cur = 1
        digits = _digits(1, p, m)
        for k in range(q - 1):
            exp[k] = cur
            log[cur] = k
            if m == 1:
                cur = cur * self.generator % p
                continue
            # generator * v = sum_i g_i * (x^i v), each x^i v by repeated shifting
            acc = [0] * m
            shifted = digits
            for i, g in enumerate(gen_digits):
                if i:
                    top = shifted[-1]
                    shifted = [0] + shifted[:-1]
                    if top:
                        shifted = [(d - top * c) % p for d, c in zip(shifted, self.modulus)]
                if g:
                    acc = [(s_ + g * d) % p for s_, d in zip(acc, shifted)]
            digits = acc
            cur = _undigits(digits, p)
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        self._add_table = None
        self._neg_list = [self._neg_digits(a) for a in range(q)]
        if q <= _TABLE_LIMIT:
            self._add_table = [[self._add_digits(a, b) for b in range(q)] for a in range(q)]

    def _add_digits(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        for pw in self._pows:
            out += ((a // pw + b // pw) % p) * pw
        return out

    def _neg_digits(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        return sum(((-(a // pw)) % p) * pw for pw in self._pows)

    # -- scalar arithmetic ---------------------------------------------------

    zero = 0
    one = 1

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        return self._neg_list[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg_list[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_list[(self._log_list[a] + self._log_list[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp_list[(-self._log_list[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self._exp_list[(self._log_list[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def power(self, k: int) -> int:
        """The element generator^k."""
        return self._exp_list[k % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log_list[a]

    def sum(self, values: Iterable[int]) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    # -- vectorised arithmetic on integer arrays -----------------------------

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pw in self._pows:
            out += ((a // pw + b // pw) % self.p) * pw
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        out = np.zeros(a.shape, dtype=np.int64)
        for pw in self._pows:
            out += ((-(a // pw)) % self.p) * pw
        return out

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, r)

    # -- enumeration and representation --------------------------------------

    def elements(self) -> list[int]:
        """All elements: 0, then generator^0 .. generator^(q-2)."""
        return [0] + self._exp_list

    def canonical_index(self, a: int) -> int:
        return 0 if a == 0 else self._log_list[a] + 1

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(_digits(a, self.p, self.m))

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) != self.m:
            raise ValidationError(f"expected {self.m} coefficients, got {len(cs)}")
        return _undigits([c % self.p for c in cs], self.p)

    def check(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.q:
            raise ValidationError(f"{a!r} is not an element of GF({self.q})")
        return int(a)

    def format(self, a: int) -> str:
        if a == 0:
            return "0"
        k = self._log_list[a]
        return "1" if k == 0 else f"a^{k}"

    def parse(self, text: str) -> int:
        """Parse "0", "1", "a", "a^k", "-a^k" or an integer (prime-subfield image)."""
        mo = _ELEM_RE.match(text.strip())
        if not mo:
            raise ValidationError(f"cannot parse field element {text!r}")
        neg, sym, k, num = mo.groups()
        if sym:
            val = self.power(int(k) if k is not None else 1)
        else:
            val = self.from_int(int(num))
        return self.neg(val) if neg else val

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj: dict) -> "GF":
        try:
            return cls(int(obj["p"]), int(obj["m"]), obj.get("modulus"))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad field description: {obj!r}") from exc

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.m, self.modulus, self.generator) == \
            (other.p, other.m, other.modulus, other.generator)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus, self.generator))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"


_FIELD_CACHE: dict[tuple[int, int], GF] = {}


def make_field(p: int, m: int = 1) -> GF:
    """GF(p^m) with the default modulus and generator (cached)."""
    key = (p, m)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = GF(p, m)
    return _FIELD_CACHE[key]


def parse_field(text: str) -> GF:
    """Parse "p^m" or "p" (e.g. "2^3")."""
    mo = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*", text)
    if not mo:
        raise ValidationError(f"cannot parse field {text!r}; expected p^m")
    return make_field(int(mo.group(1)), int(mo.group(2) or 1))


def evaluate_poly(field: GF, poly: Sequence[int], xs):
    """Horner evaluation of a univariate polynomial (low-to-high) on an array."""
    xs = np.asarray(xs, dtype=np.int64)
    acc = np.zeros(xs.shape, dtype=np.int64)
    for c in reversed(poly):
        acc = field.vadd(field.vmul(acc, xs), c)
    return acc


def univariate_roots(field: GF, poly: Sequence[int]) -> list[int]:
    """All roots in the field by exhaustive evaluation, in canonical order."""
    if not any(poly):
        raise ValidationError("zero polynomial has every element as a root")
    elems = np.array(field.elements(), dtype=np.int64)
    vals = evaluate_poly(field, poly, elems)
    return [int(e) for e in elems[vals == 0]]


def embed_field(small: GF, big: GF) -> list[int]:
    """Embedding table small -> big as a list indexed by element of ``small``.

    The image of x is the first root (canonical order) of the modulus of
    ``small`` inside ``big``; requires small.p == big.p and small.m | big.m.
    """
    if small.p != big.p or big.m % small.m:
        raise ValidationError(f"{small!r} does not embed in {big!r}")
    if small.m == 1:
        return list(range(small.q))
    root = univariate_roots(big, list(small.modulus))[0]
    powers = [1]
    for _ in range(small.m - 1):
        powers.append(big.mul(powers[-1], root))
    table = []
    for a in range(small.q):
        acc = 0
        for c, pw in zip(small.coeffs(a), powers):
            acc = big.add(acc, big.mul(c, pw))
        table.append(acc)
    return table
