"""Exact scalar arithmetic: prime fields GF(p), extension fields GF(p^k)
and arbitrary-precision rationals.

Finite-field values are stored *encoded* as Python ints in [0, q): a prime
field element is its representative, an extension element is the base-p
digit encoding of its coefficient vector (low degree first).  Rationals are
``fractions.Fraction``.  Every descriptor also acts as an array kernel: it
knows how to add, multiply and exactly matrix-multiply numpy arrays of
encoded values, which is what the linear-algebra layer builds on.

Exactness of the fast paths:

* prime fields use int64 / float64 arithmetic only while every intermediate
  integer is provably below 2**63 / 2**53, otherwise they fall back to
  Python integers;
* extension fields evaluate coefficient vectors at a power-of-two base X
  (Kronecker substitution), multiply matrices of these integer values, and
  read the product polynomial back off the base-X digits.  The base is
  chosen per call so that digits cannot collide and float64 stays exact.

Descriptors and scalars are immutable after construction (lookup tables are
built once and only read), so they are safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidField,
    NoSuchOrder,
    ScalarFormatError,
)

_MAX_PRIME = 2**31          # keeps int64 row operations overflow-free
_MAX_EXT_ORDER = 1024       # extension tables are q x q; desk-scale guard
_F64_EXACT = 2**53
_I64_SAFE = 2**62


def _is_prime(n: int) -> bool:
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
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class FieldDescriptor:
    """Base class; concrete kinds are prime, extension and rational."""

    kind: str

    # -- identity ------------------------------------------------------------

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, FieldDescriptor) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def check_same(self, other: "FieldDescriptor"):
        if self != other:
            raise FieldMismatch(f"cannot mix elements of {self} and {other}")

    # -- scalar interface (encoded values) ------------------------------------

    zero_enc = 0
    one_enc = 1
    order: int | None = None          # q for finite fields, None for Q
    characteristic: int = 0

    def from_int(self, i: int):
        raise NotImplementedError

    def s_add(self, a, b):
        raise NotImplementedError

    def s_sub(self, a, b):
        raise NotImplementedError

    def s_neg(self, a):
        raise NotImplementedError

    def s_mul(self, a, b):
        raise NotImplementedError

    def s_inv(self, a):
        raise NotImplementedError

    def s_div(self, a, b):
        if b == self.zero_enc:
            raise DivisionByZero("division by zero")
        return self.s_mul(a, self.s_inv(b))

    def s_pow(self, a, e: int):
        if e < 0:
            return self.s_pow(self.s_inv(a), -e)
        result = self.one_enc
        base = a
        while e:
            if e & 1:
                result = self.s_mul(result, base)
            base = self.s_mul(base, base)
            e >>= 1
        return result

    # -- literals --------------------------------------------------------------

    def parse_enc(self, text: str):
        raise NotImplementedError

    def format_enc(self, enc) -> str:
        raise NotImplementedError

    # -- array kernel ------------------------------------------------------------

    dtype = np.int64

    def arr(self, values) -> np.ndarray:
        """Encode a (nested) sequence of ints / Fractions / FieldScalars."""
        def conv(v):
            if isinstance(v, FieldScalar):
                self.check_same(v.field)
                return v.value
            if isinstance(v, Fraction):
                return self._from_fraction(v)
            if isinstance(v, (list, tuple, np.ndarray)):
                return [conv(x) for x in v]
            if isinstance(v, float):
                raise ScalarFormatError("floating-point values are not exact")
            return self.from_int(int(v))
        data = conv(list(values))
        return np.array(data, dtype=self.dtype)

    def _from_fraction(self, f: Fraction):
        return self.s_div(self.from_int(f.numerator), self.from_int(f.denominator))

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n: int) -> np.ndarray:
        m = self.zeros((n, n))
        for i in range(n):
            m[i, i] = self.one_enc
        return m

    def a_add(self, a, b):
        raise NotImplementedError

    def a_sub(self, a, b):
        raise NotImplementedError

    def a_neg(self, a):
        raise NotImplementedError

    def a_mul(self, a, b):
        """Elementwise product with numpy broadcasting; scalars allowed."""
        raise NotImplementedError

    def elim(self, m, f, row):
        """Row elimination m - outer(f, row), vectorised over all rows."""
        return self.a_sub(m, self.a_mul(f[:, None], row[None, :]))

    def matmul2(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Exact product of 2-D encoded arrays."""
        raise NotImplementedError

    def tensordot_lf(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Contract the last axis of ``a`` with the first axis of ``b``."""
        m = a.shape[-1]
        if b.shape[0] != m:
            raise ValueError("contraction length mismatch")
        a2 = a.reshape(-1, m)
        b2 = b.reshape(m, -1)
        out = self.matmul2(a2, b2)
        return out.reshape(a.shape[:-1] + b.shape[1:])

    def random_enc(self, rng: np.random.Generator, shape) -> np.ndarray:
        raise NotImplementedError

    # -- convenience -------------------------------------------------------------

    def scalar(self, v) -> "FieldScalar":
        if isinstance(v, FieldScalar):
            self.check_same(v.field)
            return v
        if isinstance(v, Fraction):
            return FieldScalar(self, self._from_fraction(v))
        return FieldScalar(self, self.from_int(v))

    def zero(self) -> "FieldScalar":
        return FieldScalar(self, self.zero_enc)

    def one(self) -> "FieldScalar":
        return FieldScalar(self, self.one_enc)


class PrimeField(FieldDescriptor):
    """GF(p) with elements stored canonically in [0, p)."""

    kind = "prime"

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise InvalidField(f"{p} is not prime")
        if p >= _MAX_PRIME:
            raise InvalidField(f"prime {p} exceeds the desk-scale cap {_MAX_PRIME}")
        self.p = p
        self.order = p
        self.characteristic = p

    def _key(self):
        return ("prime", self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def from_int(self, i: int) -> int:
        return int(i) % self.p

    def s_add(self, a, b):
        return (a + b) % self.p

    def s_sub(self, a, b):
        return (a - b) % self.p

    def s_neg(self, a):
        return (-a) % self.p

    def s_mul(self, a, b):
        return (a * b) % self.p

    def s_inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(int(a), -1, self.p)

    def parse_enc(self, text: str) -> int:
        try:
            return int(text.strip(), 10) % self.p
        except ValueError:
            raise ScalarFormatError(f"bad GF({self.p}) literal {text!r}") from None

    def format_enc(self, enc) -> str:
        return str(int(enc))

    def a_add(self, a, b):
        return (a + b) % self.p

    def a_sub(self, a, b):
        return (a - b) % self.p

    def a_neg(self, a):
        return (-a) % self.p

    def a_mul(self, a, b):
        return (a * b) % self.p

    def matmul2(self, a, b):
        r, m = a.shape
        c = b.shape[1]
        if r == 0 or m == 0 or c == 0:
            return self.zeros((r, c))
        bound = m * (self.p - 1) ** 2
        if bound < _F64_EXACT:
            prod = a.astype(np.float64) @ b.astype(np.float64)
            return prod.astype(np.int64) % self.p
        if bound < _I64_SAFE:
            return (a @ b) % self.p
        # huge p: fall back to exact Python integers
        ao = a.astype(object)
        bo = b.astype(object)
        return (np.dot(ao, bo) % self.p).astype(np.int64)

    def random_enc(self, rng, shape):
        return rng.integers(0, self.p, size=shape, dtype=np.int64)


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of polynomial division over GF(p); den is monic."""
    num = [x % p for x in num]
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            for j in range(d + 1):
                num[i - d + j] = (num[i - d + j] - c * den[j]) % p
    rem = num[:d]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


class ExtensionField(FieldDescriptor):
    """GF(p^k) presented by a monic irreducible modulus over GF(p).

    Elements are encoded as base-p digit strings of their coefficient
    vectors; q x q lookup tables drive elementwise arithmetic.
    """

    kind = "extension"

    def __init__(self, p: int, modulus):
        p = int(p)
        if not _is_prime(p):
            raise InvalidField(f"{p} is not prime")
        mod = [int(c) % p for c in modulus]
        mod = list(mod)
        while mod and mod[-1] == 0:
            mod.pop()
        k = len(mod) - 1
        if k < 2:
            raise InvalidField("modulus must have degree >= 2")
        if mod[-1] != 1:
            raise InvalidField("modulus must be monic")
        q = p**k
        if q > _MAX_EXT_ORDER:
            raise InvalidField(
                f"GF({p}^{k}) has order {q}, beyond the desk-scale cap {_MAX_EXT_ORDER}"
            )
        self._verify_irreducible(mod, p)
        self.p = p
        self.degree = k
        self.modulus = tuple(mod)
        self.order = q
        self.characteristic = p
        self._build_tables()

    @staticmethod
    def _verify_irreducible(mod: list[int], p: int):
        k = len(mod) - 1
        # trial division by every monic polynomial of degree <= k//2
        for d in range(1, k // 2 + 1):
            for idx in range(p**d):
                cand = []
                t = idx
                for _ in range(d):
                    cand.append(t % p)
                    t //= p
                cand.append(1)  # monic
                if not _poly_mod(list(mod), cand, p):
                    raise InvalidField(
                        "modulus is reducible: divisible by "
                        f"{cand} over GF({p})"
                    )

    def _build_tables(self):
        p, k, q = self.p, self.degree, self.order
        digits = np.zeros((q, k), dtype=np.int64)
        t = np.arange(q)
        for i in range(k):
            digits[:, i] = t % p
            t = t // p
        self._digits = digits
        self._digits_f64 = digits.astype(np.float64)
        self._p_pows = p ** np.arange(k, dtype=np.int64)
        # reduction matrix: row t = coefficients of X^t mod the modulus
        red = np.zeros((2 * k - 1, k), dtype=np.int64)
        rep = [0] * k
        rep[0] = 1
        for t in range(2 * k - 1):
            red[t] = rep
            # multiply by X and reduce once (modulus is monic)
            lead = rep[k - 1]
            rep = [0] + rep[:-1]
            if lead:
                for j in range(k):
                    rep[j] = (rep[j] - lead * self.modulus[j]) % p
        self._red = red
        # full product coefficient cube via k^2 outer products
        conv = np.zeros((q, q, 2 * k - 1), dtype=np.int64)
        for u in range(k):
            for v in range(k):
                conv[:, :, u + v] += np.multiply.outer(digits[:, u], digits[:, v])
        coeffs = (conv % p) @ red % p
        self._mul_table = coeffs @ self._p_pows
        self._add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ self._p_pows
        self._neg_table = ((-digits) % p) @ self._p_pows
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(self._mul_table == 1)
        inv[rows] = cols
        self._inv_table = inv
        self._sub_table = self._add_table[:, self._neg_table]

    def _key(self):
        return ("extension", self.p, self.modulus)

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"

    def from_int(self, i: int) -> int:
        return int(i) % self.p

    def coeffs_to_enc(self, coeffs) -> int:
        vals = [int(c) % self.p for c in coeffs]
        if len(vals) > self.degree:
            raise ScalarFormatError(
                f"coefficient list longer than degree {self.degree}"
            )
        vals += [0] * (self.degree - len(vals))
        return int(sum(c * int(pw) for c, pw in zip(vals, self._p_pows)))

    def enc_to_coeffs(self, enc: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self._digits[enc])

    def s_add(self, a, b):
        return int(self._add_table[a, b])

    def s_sub(self, a, b):
        return int(self._sub_table[a, b])

    def s_neg(self, a):
        return int(self._neg_table[a])

    def s_mul(self, a, b):
        return int(self._mul_table[a, b])

    def s_inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self._inv_table[a])

    def parse_enc(self, text: str) -> int:
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ScalarFormatError(f"unterminated coefficient list {text!r}")
            body = text[1:-1].strip()
            parts = [s.strip() for s in body.split(",")] if body else []
            try:
                return self.coeffs_to_enc([int(s, 10) for s in parts])
            except ValueError:
                raise ScalarFormatError(f"bad {self} literal {text!r}") from None
        try:
            return self.from_int(int(text, 10))
        except ValueError:
            raise ScalarFormatError(f"bad {self} literal {text!r}") from None

    def format_enc(self, enc) -> str:
        return "[" + ",".join(str(c) for c in self.enc_to_coeffs(int(enc))) + "]"

    def a_add(self, a, b):
        return self._add_table[a, b]

    def a_sub(self, a, b):
        return self._sub_table[a, b]

    def a_neg(self, a):
        return self._neg_table[a]

    def a_mul(self, a, b):
        return self._mul_table[a, b]

    def matmul2(self, a, b):
        r, m = a.shape
        c = b.shape[1]
        if r == 0 or m == 0 or c == 0:
            return self.zeros((r, c))
        p, k = self.p, self.degree
        x = 1 << (m * k * (p - 1) ** 2 + 1).bit_length()
        v_max = (p - 1) * (x**k - 1) // (x - 1)
        bound = m * v_max * v_max
        if bound < _F64_EXACT:
            cf = (self._kron_f64(a, x) @ self._kron_f64(b, x)).astype(np.int64)
        elif bound < _I64_SAFE:
            xpow64 = x ** np.arange(k, dtype=np.int64)
            cf = (self._digits[a] @ xpow64) @ (self._digits[b] @ xpow64)
        else:
            # coefficient-plane fallback: k^2 int64 matmuls, never overflows
            # at desk scale since m * (p-1)^2 is tiny
            da, db = self._digits[a], self._digits[b]
            planes = np.zeros((r, c, 2 * k - 1), dtype=np.int64)
            for u in range(k):
                for v in range(k):
                    planes[:, :, u + v] += da[:, :, u] @ db[:, :, v]
            coeffs = (planes % p) @ self._red % p
            return coeffs @ self._p_pows
        # read the product polynomial off the base-x digits and reduce
        shift = x.bit_length() - 1
        mask = x - 1
        acc = [None] * k
        for t in range(2 * k - 1):
            d = cf & mask
            cf >>= shift
            for j in range(k):
                rj = int(self._red[t, j])
                if rj:
                    term = d if rj == 1 else rj * d
                    acc[j] = term if acc[j] is None else acc[j] + term
        out = None
        ppow = 1
        for j in range(k):
            plane = (acc[j] % p) if acc[j] is not None else None
            if plane is not None:
                part = plane if ppow == 1 else plane * ppow
                out = part if out is None else out + part
            ppow *= p
        return self.zeros((r, c)) if out is None else out

    def _kron_f64(self, enc: np.ndarray, x: int) -> np.ndarray:
        """Evaluate coefficient vectors at the integer base x, as float64."""
        dig = self._digits_f64[enc]
        out = dig[..., 0].copy()
        scale = 1.0
        for j in range(1, self.degree):
            scale *= x
            out += dig[..., j] * scale
        return out

    def random_enc(self, rng, shape):
        return rng.integers(0, self.order, size=shape, dtype=np.int64)


class RationalField(FieldDescriptor):
    """The rationals with arbitrary-precision Fraction arithmetic."""

    kind = "rational"
    dtype = object
    zero_enc = Fraction(0)
    one_enc = Fraction(1)
    order = None
    characteristic = 0

    def _key(self):
        return ("rational",)

    def __repr__(self):
        return "QQ"

    def from_int(self, i: int) -> Fraction:
        return Fraction(i)

    def _from_fraction(self, f: Fraction) -> Fraction:
        return f

    def s_add(self, a, b):
        return a + b

    def s_sub(self, a, b):
        return a - b

    def s_neg(self, a):
        return -a

    def s_mul(self, a, b):
        return a * b

    def s_inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return Fraction(1) / a

    def parse_enc(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ScalarFormatError(f"bad rational literal {text!r}") from None

    def format_enc(self, enc) -> str:
        return str(enc)

    def zeros(self, shape):
        return np.full(shape, Fraction(0), dtype=object)

    def a_add(self, a, b):
        return a + b

    def a_sub(self, a, b):
        return a - b

    def a_neg(self, a):
        return -a

    def a_mul(self, a, b):
        return a * b

    def matmul2(self, a, b):
        r, m = a.shape
        c = b.shape[1]
        if r == 0 or m == 0 or c == 0:
            return self.zeros((r, c))
        return np.dot(a, b)

    def random_enc(self, rng, shape):
        num = rng.integers(-3, 4, size=shape)
        den = rng.integers(1, 4, size=shape)
        out = np.empty(shape, dtype=object)
        flat_out = out.reshape(-1)
        flat_num = num.reshape(-1)
        flat_den = den.reshape(-1)
        for i in range(flat_out.size):
            flat_out[i] = Fraction(int(flat_num[i]), int(flat_den[i]))
        return out


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def gf25() -> ExtensionField:
    """The shipped default GF(25) = GF(5)[t]/(t^2 + 2)."""
    return ExtensionField(5, [2, 0, 1])


class FieldScalar:
    """An exact field element: a descriptor plus a canonical encoded value."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldScalar):
            self.field.check_same(other.field)
            return other.value
        if isinstance(other, int) or isinstance(other, Fraction):
            return self.field.scalar(other).value
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.s_add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.s_sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.s_sub(v, self.value))

    def __neg__(self):
        return FieldScalar(self.field, self.field.s_neg(self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.s_mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.s_div(self.value, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.s_div(v, self.value))

    def __pow__(self, e: int):
        return FieldScalar(self.field, self.field.s_pow(self.value, e))

    def inverse(self) -> "FieldScalar":
        return FieldScalar(self.field, self.field.s_inv(self.value))

    def __bool__(self):
        return self.value != self.field.zero_enc

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.scalar(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return self.field.format_enc(self.value)

    def multiplicative_order(self) -> int:
        """Exact order in the unit group; finite fields only."""
        if self.field.order is None:
            raise NoSuchOrder("multiplicative order is only computed in finite fields")
        if not self:
            raise DivisionByZero("zero has no multiplicative order")
        n = 1
        acc = self.value
        while acc != self.field.one_enc:
            acc = self.field.s_mul(acc, self.value)
            n += 1
        return n


def element_of_order(field: FieldDescriptor, n: int) -> FieldScalar:
    """Smallest element (in encoded enumeration order) of exact order ``n``.

    Requires a finite field with n dividing q - 1; the scan is exhaustive,
    so the result is deterministic.
    """
    if field.order is None:
        raise NoSuchOrder("the rationals are not scanned for torsion elements")
    n = int(n)
    if n <= 0:
        raise NoSuchOrder("order must be positive")
    q = field.order
    if (q - 1) % n != 0:
        raise NoSuchOrder(f"{n} does not divide {q - 1}")
    cofs = [n // ell for ell in _prime_factors(n)]
    for enc in range(1, q):
        if field.s_pow(enc, n) != field.one_enc:
            continue
        if all(field.s_pow(enc, c) != field.one_enc for c in cofs):
            return FieldScalar(field, enc)
    raise NoSuchOrder(f"no element of order {n} found")  # unreachable: group is cyclic
