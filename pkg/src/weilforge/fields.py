"""Exact arithmetic in prime fields and their Galois extensions.

Field elements are encoded as integers.  In GF(p) the code of an element is
its canonical representative in [0, p).  In an extension K of degree n over a
base field k of order B, an element with power-basis coordinates
(c_0, ..., c_{n-1})  (i.e. x = c_0 + c_1*a + ... + c_{n-1}*a^{n-1} for the
generator a)  is encoded as the integer c_0 + c_1*B + ... + c_{n-1}*B^{n-1},
where each c_i is itself a base-field code.  The encoding is independent of
any user-declared basis; basis coordinates are recovered by a precomputed
change-of-basis matrix.

Multiplication uses discrete-log tables when the field is small enough
(order <= 65536, which covers everything this package runs at), otherwise
schoolbook convolution reduced by the modulus.  Field descriptors are
immutable after construction and all element operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BasisNotUnital,
    DependentBasis,
    FieldSpecError,
    ReducibleModulus,
)

_LOG_TABLE_LIMIT = 65536


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


# ---------------------------------------------------------------------------
# univariate polynomial helpers over an arbitrary field (little-endian code
# lists, used only for modulus validation and reduction-table setup)
# ---------------------------------------------------------------------------

def _poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mul(field, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b == 0:
                continue
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    return _poly_trim(out)


def _poly_mod(field, f, m):
    # m monic
    f = list(f)
    dm = len(m) - 1
    while len(f) - 1 >= dm and f:
        lead = f[-1]
        shift = len(f) - 1 - dm
        if lead != 0:
            for i in range(dm + 1):
                f[shift + i] = field.sub(f[shift + i], field.mul(lead, m[i]))
        f.pop()
    return _poly_trim(f)


def _poly_powmod_x(field, e, m):
    """x^e mod m, by square and multiply on the exponent bits."""
    result = [1]
    base = _poly_mod(field, [0, 1], m)
    while e:
        if e & 1:
            result = _poly_mod(field, _poly_mul(field, result, base), m)
        e >>= 1
        if e:
            base = _poly_mod(field, _poly_mul(field, base, base), m)
    return result


def _poly_gcd(field, f, g):
    f, g = list(f), list(g)
    while g:
        # reduce f mod g (g need not be monic)
        inv_lead = field.inv(g[-1])
        gm = [field.mul(c, inv_lead) for c in g]
        f = _poly_mod(field, f, gm)
        f, g = g, f
    return f


def _is_irreducible(field, m) -> bool:
    """Rabin test for a monic polynomial m over a finite field."""
    n = len(m) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    q = field.order
    x_itself = [0, 1]
    xq = _poly_powmod_x(field, q ** n, m)
    if _poly_sub(field, xq, x_itself):
        return False
    for ell in _prime_factors(n):
        xe = _poly_powmod_x(field, q ** (n // ell), m)
        diff = _poly_sub(field, xe, x_itself)
        g = _poly_gcd(field, m, diff)
        if len(g) - 1 != 0:
            return False
    return True


def _poly_sub(field, f, g):
    out = [0] * max(len(f), len(g))
    for i, a in enumerate(f):
        out[i] = a
    for i, b in enumerate(g):
        out[i] = field.sub(out[i], b)
    return _poly_trim(out)


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class PrimeField:
    """GF(p) with elements encoded as canonical representatives in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldSpecError(f"{p} is not prime")
        self.p = p

    # -- descriptor ----------------------------------------------------
    @property
    def order(self) -> int:
        return self.p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    # -- raw code arithmetic --------------------------------------------
    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_int(self, n: int) -> int:
        return n % self.p

    # -- elements --------------------------------------------------------
    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldSpecError("element belongs to a different field")
            return value
        return FieldElement(self, value % self.p)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        for c in range(self.p):
            yield FieldElement(self, c)

    def decompose_code(self, a: int) -> tuple:
        return (a,)

    def render_code(self, a: int) -> str:
        return str(a)


class ExtensionField:
    """K = k[a]/(modulus), a finite Galois extension with a fixed basis.

    The declared basis {alpha_1, ..., alpha_n} must start with alpha_1 = 1;
    the default is the power basis 1, a, ..., a^(n-1).  All Galois
    automorphisms are powers of the Frobenius x -> x^|k|.
    """

    __slots__ = (
        "base", "degree", "modulus", "basis", "order", "characteristic",
        "gen_name", "_red", "_exp", "_log", "_binv", "_qexp",
    )

    def __init__(self, base, modulus, basis=None, gen_name: str = "a"):
        self.base = base
        mod = [c.code if isinstance(c, FieldElement) else c % base.order if isinstance(c, int) else c
               for c in modulus]
        if len(mod) < 2:
            raise FieldSpecError("modulus must have degree >= 1")
        if mod[-1] != 1:
            raise FieldSpecError("modulus must be monic")
        n = len(mod) - 1
        self.degree = n
        self.modulus = tuple(mod)
        self.gen_name = gen_name
        self.order = base.order ** n
        self.characteristic = base.characteristic
        if n > 1 and not _is_irreducible(base, list(mod)):
            raise ReducibleModulus(
                f"modulus is reducible over GF({base.order})")

        # reduction rows: power coordinates of a^(n+k), k = 0..n-2
        red = []
        cur = [base.neg(c) for c in mod[:-1]]  # a^n
        red.append(tuple(cur))
        for _ in range(n - 2):
            cur = self._shift_reduce(cur)
            red.append(tuple(cur))
        self._red = tuple(red)

        self._exp = None
        self._log = None
        if self.order <= _LOG_TABLE_LIMIT:
            self._build_log_tables()
        self._qexp = [pow(base.order, i) for i in range(n)]

        if basis is None:
            B = base.order
            self.basis = tuple(B ** i for i in range(n))
            self._binv = None  # power basis: decompose == digits
        else:
            codes = tuple(self._coerce_code(b) for b in basis)
            if len(codes) != n:
                raise DependentBasis(f"basis must have {n} elements")
            if codes[0] != 1:
                raise BasisNotUnital("first basis element must be 1")
            self.basis = codes
            self._binv = self._basis_inverse(codes)

    # -- construction helpers ---------------------------------------------
    def _coerce_code(self, v) -> int:
        if isinstance(v, FieldElement):
            if v.field != self:
                raise FieldSpecError("basis element from a different field")
            return v.code
        return int(v) % self.order

    def _shift_reduce(self, coords):
        # multiply a power-coordinate vector by a, reduce mod modulus
        n = self.degree
        out = [0] * n
        for i in range(n - 1):
            out[i + 1] = coords[i]
        top = coords[n - 1]
        if top != 0:
            for i in range(n):
                out[i] = self.base.add(out[i], self.base.mul(top, self.base.neg(self.modulus[i])))
        return out

    def _basis_inverse(self, codes):
        """Inverse of the matrix whose columns are the basis power-coordinates."""
        n = self.degree
        k = self.base
        cols = [self.digits(c) for c in codes]
        mat = [[cols[j][i] for j in range(n)] for i in range(n)]  # rows over k
        aug = [mat[i] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise DependentBasis("basis is linearly dependent over the base field")
            aug[col], aug[piv] = aug[piv], aug[col]
            ic = k.inv(aug[col][col])
            aug[col] = [k.mul(ic, v) for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [k.sub(aug[r][j], k.mul(f, aug[col][j])) for j in range(2 * n)]
        return tuple(tuple(row[n:]) for row in aug)

    def _build_log_tables(self):
        q1 = self.order - 1
        factors = _prime_factors(q1) if q1 > 1 else []
        g = None
        for cand in range(2, self.order):
            if all(self._pow_schoolbook(cand, q1 // f) != 1 for f in factors):
                g = cand
                break
        if g is None:  # order 2
            g = 1
        exp = [0] * q1
        log = [0] * self.order
        acc = 1
        for i in range(q1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_schoolbook(acc, g)
        self._exp = exp
        self._log = log

    # -- descriptor ---------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
            and other.basis == self.basis
        )

    def __hash__(self):
        return hash(("ExtensionField", self.base, self.modulus, self.basis))

    def __repr__(self):
        mod = _render_univariate(self.base, self.modulus, self.gen_name)
        return f"GF({self.base.order})[{self.gen_name}]/({mod})"

    # -- digit conversion ---------------------------------------------------
    def digits(self, code: int) -> list[int]:
        B = self.base.order
        out = []
        for _ in range(self.degree):
            code, d = divmod(code, B)
            out.append(d)
        return out

    def from_digits(self, digits) -> int:
        B = self.base.order
        code = 0
        for d in reversed(digits):
            code = code * B + d
        return code

    # -- raw code arithmetic --------------------------------------------------
    def add(self, a: int, b: int) -> int:
        k = self.base
        B = k.order
        code = 0
        mult = 1
        for _ in range(self.degree):
            a, da = divmod(a, B)
            b, db = divmod(b, B)
            code += k.add(da, db) * mult
            mult *= B
        return code

    def sub(self, a: int, b: int) -> int:
        k = self.base
        B = k.order
        code = 0
        mult = 1
        for _ in range(self.degree):
            a, da = divmod(a, B)
            b, db = divmod(b, B)
            code += k.sub(da, db) * mult
            mult *= B
        return code

    def neg(self, a: int) -> int:
        k = self.base
        B = k.order
        code = 0
        mult = 1
        for _ in range(self.degree):
            a, da = divmod(a, B)
            code += k.neg(da) * mult
            mult *= B
        return code

    def _mul_schoolbook(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        k = self.base
        n = self.degree
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y == 0:
                    continue
                conv[i + j] = k.add(conv[i + j], k.mul(x, y))
        out = conv[:n]
        for kk in range(n, 2 * n - 1):
            c = conv[kk]
            if c != 0:
                row = self._red[kk - n]
                for i in range(n):
                    if row[i] != 0:
                        out[i] = k.add(out[i], k.mul(c, row[i]))
        return self.from_digits(out)

    def _pow_schoolbook(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul_schoolbook(result, base)
            e >>= 1
            if e:
                base = self._mul_schoolbook(base, base)
        return result

    def mul(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            q1 = self.order - 1
            return self._exp[(self._log[a] + self._log[b]) % q1]
        return self._mul_schoolbook(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            q1 = self.order - 1
            return self._exp[(q1 - self._log[a]) % q1]
        return self._pow_schoolbook(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        if e < 0:
            return self.pow_(self.inv(a), -e)
        if self._exp is not None:
            q1 = self.order - 1
            return self._exp[(self._log[a] * e) % q1]
        return self._pow_schoolbook(a, e)

    def from_int(self, n: int) -> int:
        return n % self.characteristic

    def embed_base(self, c: int) -> int:
        """Embed a base-field code into K (c maps to c * 1)."""
        return c

    # -- basis and Galois action -----------------------------------------------
    def decompose_code(self, a: int) -> tuple:
        """Coordinates of a with respect to the declared basis."""
        d = self.digits(a)
        if self._binv is None:
            return tuple(d)
        k = self.base
        out = []
        for row in self._binv:
            acc = 0
            for c, x in zip(row, d):
                if c != 0 and x != 0:
                    acc = k.add(acc, k.mul(c, x))
            out.append(acc)
        return tuple(out)

    def recompose_code(self, coords) -> int:
        acc = 0
        for c, b in zip(coords, self.basis):
            cc = c.code if isinstance(c, FieldElement) else c
            if cc != 0:
                acc = self.add(acc, self.mul(self.embed_base(cc), b))
        return acc

    def frobenius_code(self, a: int, power: int = 1) -> int:
        return self.pow_(a, self.base.order ** (power % self.degree))

    def galois_group(self) -> tuple:
        return tuple(GaloisAutomorphism(self, i) for i in range(self.degree))

    # -- elements -----------------------------------------------------------------
    def element(self, value) -> "FieldElement":
        """Wrap a code (int in [0, order)) or adopt a base-field element."""
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            if value.field == self.base:
                return FieldElement(self, self.embed_base(value.code))
            raise FieldSpecError("element belongs to a different field")
        if not 0 <= value < self.order:
            raise FieldSpecError(f"code {value} out of range for order {self.order}")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> "FieldElement":
        return FieldElement(self, self.base.order if self.degree > 1 else
                            self.neg(self.modulus[0]))

    def elements(self):
        for c in range(self.order):
            yield FieldElement(self, c)

    def render_code(self, a: int) -> str:
        return _render_univariate(self.base, self.digits(a), self.gen_name)


def _render_univariate(base, coeffs, name: str) -> str:
    """Render little-endian base-field coefficients as a polynomial in name."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        cs = base.render_code(c)
        if any(op in cs for op in "+-*^") and i > 0:
            cs = f"({cs})"
        if i == 0:
            parts.append(cs)
        else:
            var = name if i == 1 else f"{name}^{i}"
            parts.append(var if cs == "1" else f"{cs}*{var}")
    return "+".join(parts) if parts else "0"


class FieldElement:
    """An element of a field, wrapping its integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field, code: int):
        self.field = field
        self.code = code

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldSpecError("mixed-field arithmetic")
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.code, c))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(c, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_(self.code, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.field == self.field and other.code == self.code
        if isinstance(other, int):
            return self.code == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return self.field.render_code(self.code)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def coords(self) -> tuple:
        return vec_decompose(self)


@dataclass(frozen=True)
class GaloisAutomorphism:
    """sigma_i : x -> x^(q^i) for the extension K over k of order q."""

    field: ExtensionField
    power: int

    def __post_init__(self):
        object.__setattr__(self, "power", self.power % self.field.degree)

    def apply(self, x):
        if isinstance(x, FieldElement):
            if x.field != self.field:
                raise FieldSpecError("element not in this automorphism's field")
            return FieldElement(self.field, self.field.frobenius_code(x.code, self.power))
        return self.field.frobenius_code(x, self.power)

    def __call__(self, x):
        return self.apply(x)

    def compose(self, other: "GaloisAutomorphism") -> "GaloisAutomorphism":
        if other.field != self.field:
            raise FieldSpecError("automorphisms of different fields")
        return GaloisAutomorphism(self.field, self.power + other.power)

    @property
    def is_identity(self) -> bool:
        return self.power == 0


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

def vec_decompose(x: FieldElement) -> tuple:
    """Coordinates of x over the base field with respect to the fixed basis.

    Returns a tuple of base-field elements (length 1 for prime fields).
    """
    f = x.field
    if isinstance(f, PrimeField):
        return (x,)
    return tuple(FieldElement(f.base, c) for c in f.decompose_code(x.code))


def vec_recompose(field, coords) -> FieldElement:
    """Inverse of vec_decompose."""
    if isinstance(field, PrimeField):
        (c,) = tuple(coords)
        return field.element(c)
    return FieldElement(field, field.recompose_code(coords))


def frobenius_apply(x: FieldElement, sigma: GaloisAutomorphism) -> FieldElement:
    return sigma.apply(x)


def ext_field_create(base, modulus, basis=None, gen_name: str = "a") -> ExtensionField:
    """Build the extension field base[gen]/(modulus) with an optional basis."""
    return ExtensionField(base, modulus, basis=basis, gen_name=gen_name)


# ---------------------------------------------------------------------------
# field specification grammar:  GF(p)  |  GF(p)[a]/(modulus)  [basis=[...]]
# ---------------------------------------------------------------------------

def parse_field_spec(text: str):
    """Parse a field specification string into a field object."""
    parser = _FieldSpecParser(text)
    return parser.parse()


def render_field_spec(field) -> str:
    if isinstance(field, PrimeField):
        return f"GF({field.p})"
    mod = _render_univariate(field.base, field.modulus, field.gen_name)
    spec = f"GF({field.base.order})[{field.gen_name}]/({mod})"
    B = field.base.order
    power_basis = tuple(B ** i for i in range(field.degree))
    if field.basis != power_basis:
        rendered = ", ".join(field.render_code(b) for b in field.basis)
        spec += f" basis=[{rendered}]"
    return spec


class _FieldSpecParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise FieldSpecError(f"{msg} at position {self.pos} in {self.text!r}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, s: str):
        self.skip_ws()
        if not self.text.startswith(s, self.pos):
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def peek(self, s: str) -> bool:
        self.skip_ws()
        return self.text.startswith(s, self.pos)

    def read_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def read_name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            self.error("expected a name")
        return self.text[start:self.pos]

    def parse(self):
        self.expect("GF")
        self.expect("(")
        p = self.read_int()
        self.expect(")")
        base = PrimeField(p)
        self.skip_ws()
        if self.pos >= len(self.text) or not self.peek("["):
            if self.pos < len(self.text):
                self.error("trailing characters")
            return base
        self.expect("[")
        gen = self.read_name()
        self.expect("]")
        self.expect("/")
        self.expect("(")
        modulus = self._read_univariate(base, gen, stop=")")
        self.expect(")")
        basis = None
        if self.peek("basis"):
            self.expect("basis")
            self.expect("=")
            self.expect("[")
            field_tmp = ExtensionField(base, modulus, gen_name=gen)
            basis_elems = []
            while True:
                coeffs = self._read_univariate(base, gen, stop=",]")
                code = 0
                B = base.order
                for i, c in enumerate(coeffs):
                    code += c * B ** i
                basis_elems.append(code % field_tmp.order)
                if self.peek("]"):
                    self.expect("]")
                    break
                self.expect(",")
            basis = basis_elems
        self.skip_ws()
        if self.pos < len(self.text):
            self.error("trailing characters")
        return ExtensionField(base, modulus, basis=basis, gen_name=gen)

    def _read_univariate(self, base, gen, stop: str):
        """Read a +/- separated univariate polynomial in gen, little-endian codes."""
        coeffs = {}
        sign = 1
        self.skip_ws()
        if self.peek("-"):
            self.expect("-")
            sign = -1
        while True:
            c, e = self._read_monomial(base, gen)
            coeffs[e] = base.add(coeffs.get(e, 0), base.from_int(sign * c))
            self.skip_ws()
            if self.pos >= len(self.text) or self.text[self.pos] in stop:
                break
            if self.peek("+"):
                self.expect("+")
                sign = 1
            elif self.peek("-"):
                self.expect("-")
                sign = -1
            else:
                self.error("expected + or -")
        deg = max(coeffs) if coeffs else 0
        return [coeffs.get(i, 0) for i in range(deg + 1)]

    def _read_monomial(self, base, gen):
        self.skip_ws()
        coeff = 1
        exp = 0
        saw = False
        while True:
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                coeff *= self.read_int()
                saw = True
            elif self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
                name = self.read_name()
                if name != gen:
                    self.error(f"unknown symbol {name!r}")
                e = 1
                if self.peek("^"):
                    self.expect("^")
                    e = self.read_int()
                exp += e
                saw = True
            else:
                break
            if self.peek("*"):
                self.expect("*")
                continue
            break
        if not saw:
            self.error("expected a term")
        return coeff, exp
