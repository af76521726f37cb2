"""Weil restriction of polynomials and systems along a Galois extension.

Given K over k of degree n with fixed basis {alpha_1 = 1, ..., alpha_n} and
a source ring R = K[x_1, ..., x_m], the restriction context carries:

  * the target ring S = k[x<i>_<j>] with variables ordered
    x1_1 > x1_2 > ... > xm_n (homogenization variables, when the source has
    one, become t1 > ... > tn and stay last);
  * the mixed ring K[x<i>_<j>] used to expand the substitution
    x_i -> x<i>_1 * alpha_1 + ... + x<i>_n * alpha_n.

Restricting f means expanding f under that substitution and splitting each
K-coefficient into its basis coordinates: component j collects the alpha_j
coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import RingMismatch
from .fields import ExtensionField, GaloisAutomorphism, PrimeField
from .ring import (
    Polynomial,
    PolySystem,
    Ring,
    homogenize,
    substitute,
    top_part,
)


class WeilContext:
    """Everything needed to restrict polynomials from R = K[x..] to S = k[x i_j]."""

    __slots__ = ("ext", "source", "target", "mixed", "psi", "n", "m")

    def __init__(self, ext: ExtensionField, source: Ring):
        if source.field != ext:
            raise RingMismatch("source ring must be defined over the extension field")
        self.ext = ext
        self.source = source
        n = ext.degree
        self.n = n
        n_x = source.nvars - source.n_homog
        self.m = n_x

        target_names = []
        for i in range(n_x):
            target_names.extend(f"x{i + 1}_{j + 1}" for j in range(n))
        for h in range(source.n_homog):
            # a single source homogenization variable restricts to t1..tn;
            # further ones (unused in practice) get u1.. names
            prefix = "t" if h == source.n_homog - 1 else f"u{h + 1}"
            target_names.extend(f"{prefix}{j + 1}" for j in range(n))

        self.target = Ring(ext.base, target_names, n_homog=source.n_homog * n)
        self.mixed = Ring(ext, target_names, n_homog=source.n_homog * n)

        psi = {}
        for i, name in enumerate(source.names):
            form = self.mixed.zero
            for j in range(n):
                var = self.mixed.variable(i * n + j)
                form = form + var.scale(ext.element(ext.basis[j]))
            psi[name] = form
        self.psi = psi

    def embed(self, f: Polynomial) -> Polynomial:
        """Embed a target-ring polynomial into the mixed ring (k into K)."""
        if f.ring != self.target:
            raise RingMismatch("embed expects a target-ring polynomial")
        emb = self.ext.embed_base
        return f.map_coefficients(emb, self.mixed)

    def components(self, g: Polynomial) -> list[Polynomial]:
        """Split a mixed-ring polynomial into its n basis-coordinate parts."""
        if g.ring != self.mixed:
            raise RingMismatch("components expects a mixed-ring polynomial")
        parts: list[dict] = [dict() for _ in range(self.n)]
        for mono, code in g.terms:
            for j, cj in enumerate(self.ext.decompose_code(code)):
                if cj:
                    parts[j][mono] = cj
        return [self.target.from_code_dict(p) for p in parts]


def weil_context(ext: ExtensionField, source: Ring) -> WeilContext:
    return WeilContext(ext, source)


def weil_restrict_poly(ctx: WeilContext, f: Polynomial) -> list[Polynomial]:
    """The n components (f_1, ..., f_n) over k with sum f_j alpha_j = psi(f)."""
    if f.ring != ctx.source:
        raise RingMismatch("polynomial does not live in the context's source ring")
    expanded = substitute(f, ctx.mixed, ctx.psi)
    return ctx.components(expanded)


def weil_restrict_system(ctx: WeilContext, F: PolySystem) -> PolySystem:
    """Concatenated per-generator restriction, order preserving."""
    if F.ring != ctx.source:
        raise RingMismatch("system does not live in the context's source ring")
    out = []
    for f in F:
        out.extend(weil_restrict_poly(ctx, f))
    return PolySystem(ctx.target, out)


def field_equations(ring: Ring, q: int) -> PolySystem:
    """The system x_i^q - x_i for every variable of the ring."""
    polys = []
    neg_one = ring.field.neg(1)
    for i in range(ring.nvars):
        e_hi = tuple(q if j == i else 0 for j in range(ring.nvars))
        e_lo = tuple(1 if j == i else 0 for j in range(ring.nvars))
        polys.append(ring.from_code_dict({e_hi: 1, e_lo: neg_one}))
    return PolySystem(ring, polys)


def galois_conjugate_poly(f: Polynomial, sigma: GaloisAutomorphism) -> Polynomial:
    """f with every coefficient moved by sigma; monomials unchanged."""
    ext = f.ring.field
    if not isinstance(ext, ExtensionField) or sigma.field != ext:
        raise RingMismatch("automorphism does not act on this ring's field")
    return f.map_coefficients(lambda c: ext.frobenius_code(c, sigma.power))


def galois_conjugate_system(F: PolySystem, sigma: GaloisAutomorphism) -> PolySystem:
    return PolySystem(F.ring, [galois_conjugate_poly(f, sigma) for f in F])


# ---------------------------------------------------------------------------
# structural checks (report-valued)
# ---------------------------------------------------------------------------

@dataclass
class PsiIsoReport:
    """Per-automorphism verdicts for the conjugate-substitution identity."""

    per_sigma: list = dc_field(default_factory=list)  # (power, bool)

    @property
    def ok(self) -> bool:
        return all(flag for _, flag in self.per_sigma)


def psi_iso_check(ctx: WeilContext, f: Polynomial) -> PsiIsoReport:
    """Check, for every sigma, that substituting the sigma-twisted linear
    forms into the conjugate of f equals the matching combination
    sigma(alpha_1) f_1 + ... + sigma(alpha_n) f_n of the restriction.
    """
    comps = weil_restrict_poly(ctx, f)
    ext = ctx.ext
    report = PsiIsoReport()
    for sigma in ext.galois_group():
        twisted = {}
        for i, name in enumerate(ctx.source.names):
            form = ctx.mixed.zero
            for j in range(ctx.n):
                var = ctx.mixed.variable(i * ctx.n + j)
                form = form + var.scale(ext.element(sigma.apply(ext.basis[j])))
            twisted[name] = form
        lhs = substitute(galois_conjugate_poly(f, sigma), ctx.mixed, twisted)
        rhs = ctx.mixed.zero
        for j, comp in enumerate(comps):
            rhs = rhs + ctx.embed(comp).scale(ext.element(sigma.apply(ext.basis[j])))
        report.per_sigma.append((sigma.power, lhs == rhs))
    return report


@dataclass
class CompatReport:
    """Outcome of a restriction/homogenization (or top-part) compatibility check."""

    vacuous: bool = False
    pairs: list = dc_field(default_factory=list)  # (gen index, component, bool)

    @property
    def ok(self) -> bool:
        return all(flag for _, _, flag in self.pairs) if self.pairs else True


def weil_homog_compat_check(ctx: WeilContext, F: PolySystem) -> CompatReport:
    """Homogenize-then-restrict versus restrict-then-homogenize.

    Restricting the homogenized system and setting t1 = t, t2 = ... = tn = 0
    must reproduce, generator by generator and component by component, the
    homogenization of the restricted system.  Vacuous when F is homogeneous.
    """
    if F.ring != ctx.source:
        raise RingMismatch("system does not live in the context's source ring")
    if F.is_homogeneous():
        return CompatReport(vacuous=True)

    src_h = ctx.source.extend_homogenized("t")
    ctx_h = WeilContext(ctx.ext, src_h)
    target_h = ctx.target.extend_homogenized("t")

    spec_images = {}
    for i in range(ctx.m * ctx.n):
        spec_images[ctx_h.target.names[i]] = target_h.variable(i)
    for j in range(ctx.n):
        tj = ctx_h.target.names[ctx.m * ctx.n + j]
        spec_images[tj] = target_h.variable("t") if j == 0 else target_h.zero

    report = CompatReport()
    for gidx, f in enumerate(F):
        g_comps = weil_restrict_poly(ctx_h, homogenize(f, src_h))
        h_comps = [homogenize(w, target_h) for w in weil_restrict_poly(ctx, f)]
        for ell in range(ctx.n):
            specialized = substitute(g_comps[ell], target_h, spec_images)
            report.pairs.append((gidx, ell, specialized == h_comps[ell]))
    return report


def weil_top_compat_check(ctx: WeilContext, F: PolySystem) -> CompatReport:
    """Restriction of the top parts versus top parts of the restriction."""
    if F.ring != ctx.source:
        raise RingMismatch("system does not live in the context's source ring")
    report = CompatReport()
    for gidx, f in enumerate(F):
        top_comps = weil_restrict_poly(ctx, top_part(f))
        full_comps = weil_restrict_poly(ctx, f)
        for ell in range(ctx.n):
            w = full_comps[ell]
            if w.is_zero:
                equal = top_comps[ell].is_zero
            else:
                # a component of lower degree than f makes the two sides
                # genuinely differ; report it, don't patch it
                equal = top_comps[ell] == top_part(w)
            report.pairs.append((gidx, ell, equal))
    return report
