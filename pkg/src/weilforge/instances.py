"""Seeded random instance generation.

The generator is fully specified so a system can be reproduced from its
InstanceSpec alone, with no reference to this implementation:

  * PRNG: splitmix64.  State s (64 bits) starts at the seed; each draw is
    s += 0x9E3779B97F4A7C15, then z = s; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
    z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31; all mod 2^64.
  * below(n) = next() % n.
  * The coefficient field K = GF(q^n) is built over GF(q) with the
    canonical modulus: the monic irreducible polynomial of degree n whose
    little-endian coefficient vector (c_0, ..., c_{n-1}) encodes the
    smallest integer sum(c_i * q^i); the basis is the power basis.
  * Generator number t (0-based) has target degree degrees[t mod len].
    Its eligible monomials are those of degree exactly d (homogeneous) or
    <= d (otherwise), enumerated degrevlex-descending.  For each eligible
    monomial one draw below(1000) keeps it when < 1000*density, and a kept
    monomial consumes one draw below(q^n - 1) for its coefficient code
    1 + draw.  An empty result is retried (same stream) up to 16 times,
    then the degrevlex-largest eligible monomial is used with coefficient 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import InfeasibleSpec
from .fields import ExtensionField, PrimeField
from .ring import PolySystem, Ring
from .weil import field_equations

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 mixing PRNG (public-domain constants)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return (z ^ (z >> 31)) & _MASK

    def below(self, n: int) -> int:
        return self.next() % n


def canonical_modulus(q: int, n: int) -> list[int]:
    """Smallest monic irreducible degree-n polynomial over GF(q).

    Candidates are ordered by the integer sum(c_i q^i) of their non-leading
    little-endian coefficients.
    """
    base = PrimeField(q)
    if n == 1:
        return [0, 1]
    from .fields import _is_irreducible
    for code in range(q ** n):
        coeffs = []
        c = code
        for _ in range(n):
            c, d = divmod(c, q)
            coeffs.append(d)
        mod = coeffs + [1]
        if _is_irreducible(base, mod):
            return mod
    raise InfeasibleSpec(f"no irreducible polynomial of degree {n} over GF({q})")


def build_extension(q: int, n: int) -> ExtensionField:
    """GF(q^n) over GF(q) with the canonical modulus and power basis."""
    return ExtensionField(PrimeField(q), canonical_modulus(q, n))


@dataclass(frozen=True)
class InstanceSpec:
    """Deterministic description of one generated system."""

    seed: int
    q: int
    n: int
    m: int
    r: int
    degrees: tuple = (2,)
    homogeneous: bool = False
    field_equations: bool = False
    density: float = 0.5
    label: str = ""

    def describe(self) -> str:
        if self.label:
            return self.label
        kind = "homog" if self.homogeneous else "affine"
        fe = "+fe" if self.field_equations else ""
        degs = ",".join(str(d) for d in self.degrees)
        return (f"seed={self.seed} q={self.q} n={self.n} m={self.m} "
                f"r={self.r} deg={degs} {kind}{fe}")


@dataclass
class InstanceBundle:
    """A generated system together with its field tower and ring."""

    spec: InstanceSpec
    base: PrimeField
    ext: ExtensionField
    ring: Ring
    system: PolySystem


def random_system_gen(spec: InstanceSpec) -> InstanceBundle:
    """Deterministically generate the system described by spec."""
    if spec.r < 1:
        raise InfeasibleSpec("generator count must be positive")
    if not spec.degrees or min(spec.degrees) < 1:
        raise InfeasibleSpec("degree bounds must be positive")
    if not 0.0 < spec.density <= 1.0:
        raise InfeasibleSpec("density must lie in (0, 1]")
    ext = build_extension(spec.q, spec.n)
    ring = Ring(ext, [f"x{i + 1}" for i in range(spec.m)])
    rng = SplitMix64(spec.seed)
    thousand_density = int(round(spec.density * 1000))
    Q = ext.order
    polys = []
    for t in range(spec.r):
        d = spec.degrees[t % len(spec.degrees)]
        if spec.homogeneous:
            eligible = ring.monomials_of_degree(d)
        else:
            eligible = ring.monomials_up_to(d)
        poly = None
        for _ in range(16):
            terms = {}
            for mono in eligible:
                if rng.below(1000) < thousand_density:
                    terms[mono] = 1 + rng.below(Q - 1)
            if terms:
                poly = ring.from_code_dict(terms)
                break
        if poly is None:
            poly = ring.from_code_dict({eligible[0]: 1})
        polys.append(poly)
    system = PolySystem(ring, polys)
    if spec.field_equations:
        system = system.concat(field_equations(ring, Q))
    return InstanceBundle(spec, ext.base, ext, ring, system)
