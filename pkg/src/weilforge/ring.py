"""Sparse multivariate polynomials under degree reverse lexicographic order.

Monomials are plain exponent tuples (one entry per ring variable).
Polynomials keep their terms as a tuple of (monomial, coefficient-code)
pairs sorted strictly decreasing in the ring's order, with no zero
coefficients; this canonical form makes equality and hashing structural.
Coefficient codes are the integer encodings from the fields module.

Rings may flag a suffix of their variables as homogenization variables
(t, or t_1..t_n); those are always placed last.  Degrevlex is the only
public order; an elimination order over a leading block exists for
internal ideal computations.
"""

from __future__ import annotations

import itertools

from .errors import (
    ParseError,
    RingMismatch,
    UnboundVariable,
    UnknownVariable,
    ZeroPolynomial,
)
from .fields import FieldElement

# ---------------------------------------------------------------------------
# monomials: exponent tuples
# ---------------------------------------------------------------------------

def mono_deg(m) -> int:
    return sum(m)


def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u, v) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mono_div(v, u):
    return tuple(a - b for a, b in zip(v, u))


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def grevlex_key(m):
    """Sort key: ascending degrevlex (1 is minimal)."""
    return (sum(m), tuple(-e for e in reversed(m)))


def degrevlex_cmp(m1, m2) -> int:
    """-1, 0 or 1 according to m1 < m2, m1 == m2, m1 > m2 in degrevlex."""
    d1, d2 = sum(m1), sum(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    for a, b in zip(reversed(m1), reversed(m2)):
        if a != b:
            # rightmost nonzero entry of m1 - m2 negative means m1 > m2
            return 1 if a < b else -1
    return 0


class Ring:
    """A polynomial ring descriptor: coefficient field plus ordered variables.

    ``n_homog`` trailing variables are homogenization variables.  ``order``
    is "degrevlex" or ("elim", k) where the first k variables form the
    eliminated block (internal use only).
    """

    __slots__ = ("field", "names", "n_homog", "order", "_index")

    def __init__(self, field, names, n_homog: int = 0, order="degrevlex"):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise RingMismatch("variable names must be unique")
        self.field = field
        self.names = names
        self.n_homog = n_homog
        self.order = order
        self._index = {n: i for i, n in enumerate(names)}

    # -- descriptor -------------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and other.field == self.field
            and other.names == self.names
            and other.n_homog == self.n_homog
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.n_homog, self.order))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"

    # -- monomial order -----------------------------------------------------
    def key(self, m):
        if self.order == "degrevlex":
            return grevlex_key(m)
        _, k = self.order
        return (sum(m[:k]),) + grevlex_key(m)

    def cmp(self, m1, m2) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return -1 if k1 < k2 else (0 if k1 == k2 else 1)

    # -- construction helpers --------------------------------------------------
    def variable(self, name_or_index) -> "Polynomial":
        if isinstance(name_or_index, str):
            idx = self._index.get(name_or_index)
            if idx is None:
                raise RingMismatch(f"no variable {name_or_index!r} in {self!r}")
        else:
            idx = name_or_index
        expo = tuple(1 if i == idx else 0 for i in range(self.nvars))
        return Polynomial(self, ((expo, 1),))

    def variables(self):
        return [self.variable(i) for i in range(self.nvars)]

    def constant(self, value) -> "Polynomial":
        code = self._coerce_code(value)
        return self.constant_code(code)

    def constant_code(self, code: int) -> "Polynomial":
        """Constant polynomial from a raw coefficient code."""
        if code == 0:
            return self.zero
        return Polynomial(self, (((0,) * self.nvars, code),))

    def _coerce_code(self, value) -> int:
        if isinstance(value, FieldElement):
            if value.field != self.field:
                raise RingMismatch("coefficient from a different field")
            return value.code
        if isinstance(value, int):
            return self.field.from_int(value)
        raise RingMismatch(f"cannot coerce {value!r} into {self.field!r}")

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def from_dict(self, d) -> "Polynomial":
        """Build a polynomial from {exponent tuple: coefficient}."""
        terms = {}
        for m, c in d.items():
            code = self._coerce_code(c)
            if code:
                terms[tuple(m)] = code
        return Polynomial(self, self._sorted_terms(terms))

    def from_code_dict(self, d) -> "Polynomial":
        """Build a polynomial from {exponent tuple: raw coefficient code}."""
        return Polynomial(self, self._sorted_terms(
            {tuple(m): c for m, c in d.items() if c}))

    def _sorted_terms(self, d):
        return tuple(sorted(d.items(), key=lambda t: self.key(t[0]), reverse=True))

    # -- monomial enumeration ----------------------------------------------------
    def monomials_of_degree(self, d: int):
        """All monomials of total degree exactly d, degrevlex-descending."""
        out = []
        for bars in itertools.combinations_with_replacement(range(self.nvars), d):
            expo = [0] * self.nvars
            for b in bars:
                expo[b] += 1
            out.append(tuple(expo))
        out.sort(key=self.key, reverse=True)
        return out

    def monomials_up_to(self, d: int):
        """All monomials of total degree <= d, degrevlex-descending."""
        out = []
        for e in range(d, -1, -1):
            out.extend(self.monomials_of_degree(e))
        return out

    # -- derived rings ----------------------------------------------------------
    def extend_homogenized(self, tname: str = "t") -> "Ring":
        """Append one homogenization variable in last position."""
        if tname in self._index:
            raise RingMismatch(f"name {tname!r} already taken")
        return Ring(self.field, self.names + (tname,), n_homog=self.n_homog + 1,
                    order=self.order)

    def drop_last(self) -> "Ring":
        return Ring(self.field, self.names[:-1],
                    n_homog=max(0, self.n_homog - 1), order=self.order)

    def with_order(self, order) -> "Ring":
        return Ring(self.field, self.names, n_homog=self.n_homog, order=order)

    def permuted(self, perm) -> "Ring":
        """Ring with variables reordered: position i holds old variable perm[i]."""
        return Ring(self.field, tuple(self.names[p] for p in perm), n_homog=0,
                    order=self.order)


class Polynomial:
    """Immutable sparse polynomial in canonical descending term order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms):
        self.ring = ring
        self.terms = tuple(terms)

    # -- inspection ----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("degree of the zero polynomial is undefined")
        return max(mono_deg(m) for m, _ in self.terms)

    def leading_monomial(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def leading_coefficient(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = mono_deg(self.terms[0][0])
        return all(mono_deg(m) == d for m, _ in self.terms)

    def coefficient(self, mono) -> int:
        for m, c in self.terms:
            if m == mono:
                return c
        return 0

    def constant_code(self) -> int:
        zero_mono = (0,) * self.ring.nvars
        return self.coefficient(zero_mono)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return render_polynomial(self)

    # -- arithmetic --------------------------------------------------------------
    def _check(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            raise RingMismatch(f"expected a polynomial, got {other!r}")
        if other.ring != self.ring:
            raise RingMismatch("polynomials from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        field = self.ring.field
        acc = dict(self.terms)
        for m, c in other.terms:
            s = field.add(acc.get(m, 0), c)
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Polynomial(self.ring, self.ring._sorted_terms(acc))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, tuple((m, field.neg(c)) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        other = self._check(other)
        field = self.ring.field
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                s = field.add(acc.get(m, 0), field.mul(c1, c2))
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Polynomial(self.ring, self.ring._sorted_terms(acc))

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def scale(self, value) -> "Polynomial":
        return self.scale_code(self.ring._coerce_code(value))

    def scale_code(self, code: int) -> "Polynomial":
        if code == 0:
            return self.ring.zero
        field = self.ring.field
        return Polynomial(self.ring, tuple((m, field.mul(c, code)) for m, c in self.terms))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self.scale_code(self.ring.field.inv(lc))

    def term_mul(self, mono, code) -> "Polynomial":
        """Multiply by a single term code * x^mono."""
        field = self.ring.field
        return Polynomial(self.ring, tuple(
            (mono_mul(m, mono), field.mul(c, code)) for m, c in self.terms))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def map_coefficients(self, func, target_ring: Ring | None = None) -> "Polynomial":
        """Apply func to every coefficient code; optionally change rings.

        The target ring must share this ring's variable list.
        """
        ring = target_ring or self.ring
        if ring.names != self.ring.names:
            raise RingMismatch("coefficient maps need identical variables")
        acc = {}
        for m, c in self.terms:
            nc = func(c)
            if nc:
                acc[m] = nc
        return Polynomial(ring, ring._sorted_terms(acc))

    def evaluate(self, point) -> int:
        """Evaluate at a tuple of field codes, returning a code."""
        field = self.ring.field
        acc = 0
        for m, c in self.terms:
            v = c
            for x, e in zip(point, m):
                if e:
                    v = field.mul(v, field.pow_(x, e))
                    if v == 0:
                        break
            acc = field.add(acc, v)
        return acc


class PolySystem:
    """An ordered system of polynomials sharing one ring."""

    __slots__ = ("ring", "polys")

    def __init__(self, ring: Ring, polys):
        polys = tuple(polys)
        for f in polys:
            if f.ring != ring:
                raise RingMismatch("system members must share the ring")
        self.ring = ring
        self.polys = polys

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return (
            isinstance(other, PolySystem)
            and other.ring == self.ring
            and other.polys == self.polys
        )

    def __hash__(self):
        return hash((self.ring, self.polys))

    def __repr__(self):
        return "{" + ", ".join(render_polynomial(f) for f in self.polys) + "}"

    def nonzero(self) -> "PolySystem":
        return PolySystem(self.ring, [f for f in self.polys if not f.is_zero])

    def is_homogeneous(self) -> bool:
        return all(f.is_homogeneous() for f in self.polys)

    def concat(self, other: "PolySystem") -> "PolySystem":
        if other.ring != self.ring:
            raise RingMismatch("systems from different rings")
        return PolySystem(self.ring, self.polys + other.polys)


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------

def homogenize(f: Polynomial, target: Ring) -> Polynomial:
    """Homogenize with respect to the last variable of target.

    ``target`` must be f's ring extended by one homogenization variable.
    The zero polynomial homogenizes to zero.
    """
    src = f.ring
    if target.names[:-1] != src.names or target.field != src.field:
        raise RingMismatch("target must extend the source ring by one last variable")
    if f.is_zero:
        return target.zero
    d = f.degree()
    acc = {}
    for m, c in f.terms:
        acc[m + (d - mono_deg(m),)] = c
    return Polynomial(target, target._sorted_terms(acc))


def dehomogenize(f: Polynomial, target: Ring) -> Polynomial:
    """Set the last variable to 1, mapping into target (the ring without it)."""
    src = f.ring
    if src.names[:-1] != target.names or target.field != src.field:
        raise RingMismatch("target must be the source ring without its last variable")
    field = src.field
    acc = {}
    for m, c in f.terms:
        mm = m[:-1]
        s = field.add(acc.get(mm, 0), c)
        if s:
            acc[mm] = s
        else:
            acc.pop(mm, None)
    return Polynomial(target, target._sorted_terms(acc))


def top_part(f: Polynomial) -> Polynomial:
    """The homogeneous part of highest degree."""
    if f.is_zero:
        raise ZeroPolynomial("top part of the zero polynomial is undefined")
    d = f.degree()
    return Polynomial(f.ring, tuple((m, c) for m, c in f.terms if mono_deg(m) == d))


def substitute(f: Polynomial, target: Ring, images: dict) -> Polynomial:
    """Apply the ring homomorphism sending each variable to its image.

    ``images`` maps variable names to polynomials over ``target`` (or to
    field elements / ints, read as constants).  Variables without an image
    default to the target variable of the same name; if the target has no
    such variable the substitution raises UnboundVariable.
    """
    if target.field != f.ring.field:
        raise RingMismatch("substitution cannot change the coefficient field")
    imgs: list[Polynomial | None] = []
    for name in f.ring.names:
        img = images.get(name)
        if img is None:
            if name in target._index:
                img = target.variable(name)
            else:
                img = None
        elif isinstance(img, (int, FieldElement)):
            img = target.constant(img)
        elif isinstance(img, Polynomial):
            if img.ring != target:
                raise RingMismatch(f"image of {name!r} lives in the wrong ring")
        else:
            raise RingMismatch(f"bad image for {name!r}")
        imgs.append(img)

    pow_cache: dict = {}

    def img_pow(i: int, e: int) -> Polynomial:
        key = (i, e)
        got = pow_cache.get(key)
        if got is None:
            got = imgs[i] ** e
            pow_cache[key] = got
        return got

    total = target.zero
    for m, c in f.terms:
        part = target.constant_code(c)
        for i, e in enumerate(m):
            if e:
                if imgs[i] is None:
                    raise UnboundVariable(
                        f"variable {f.ring.names[i]!r} has no image")
                part = part * img_pow(i, e)
                if part.is_zero:
                    break
        total = total + part
    return total


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def render_polynomial(f: Polynomial) -> str:
    """Canonical text form: degrevlex-descending terms joined by '+'."""
    if f.is_zero:
        return "0"
    ring = f.ring
    field = ring.field
    parts = []
    for m, c in f.terms:
        factors = []
        for name, e in zip(ring.names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        cs = field.render_code(c)
        if not factors:
            parts.append(f"({cs})" if any(op in cs for op in "+-") else cs)
            continue
        if cs == "1":
            parts.append("*".join(factors))
        else:
            if any(op in cs for op in "+-*^"):
                cs = f"({cs})"
            parts.append("*".join([cs] + factors))
    return "+".join(parts)


def render_system(F: PolySystem) -> str:
    return "\n".join(render_polynomial(f) for f in F)


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col


def _tokenize(text: str, line_offset: int = 1):
    tokens = []
    line, col = line_offset, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in "+-*^()":
            tokens.append(_Token(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(_Token("end", None, line, col))
    return tokens


class _PolyParser:
    """Recursive-descent parser for the polynomial grammar.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := INT | NAME | '(' expr ')'
    """

    def __init__(self, tokens, ring: Ring):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring
        field = ring.field
        self.gen_name = getattr(field, "gen_name", None)

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind) -> _Token:
        t = self.next()
        if t.kind != kind:
            raise ParseError(f"expected {kind!r}, found {t.value!r}", t.line, t.col)
        return t

    def parse(self) -> Polynomial:
        f = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected {t.value!r}", t.line, t.col)
        return f

    def expr(self) -> Polynomial:
        t = self.peek()
        negate = False
        if t.kind in "+-":
            self.next()
            negate = t.kind == "-"
        f = self.term()
        if negate:
            f = -f
        while self.peek().kind in "+-":
            op = self.next().kind
            g = self.term()
            f = f - g if op == "-" else f + g
        return f

    def term(self) -> Polynomial:
        f = self.factor()
        while self.peek().kind == "*":
            self.next()
            f = f * self.factor()
        return f

    def factor(self) -> Polynomial:
        f = self.atom()
        if self.peek().kind == "^":
            self.next()
            t = self.expect("int")
            f = f ** t.value
        return f

    def atom(self) -> Polynomial:
        t = self.next()
        if t.kind == "int":
            return self.ring.constant(t.value)
        if t.kind == "name":
            if t.value in self.ring._index:
                return self.ring.variable(t.value)
            if t.value == self.gen_name:
                gen = self.ring.field.generator
                return self.ring.constant(gen)
            raise UnknownVariable(f"unknown symbol {t.value!r}", t.line, t.col)
        if t.kind == "(":
            f = self.expr()
            self.expect(")")
            return f
        if t.kind == "-":
            return -self.factor()
        if t.kind == "+":
            return self.factor()
        raise ParseError(f"unexpected {t.value!r}", t.line, t.col)


def parse_polynomial(text: str, ring: Ring, line_offset: int = 1) -> Polynomial:
    """Parse the polynomial grammar against a ring's variables."""
    return _PolyParser(_tokenize(text, line_offset), ring).parse()
