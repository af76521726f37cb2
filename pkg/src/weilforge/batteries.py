"""Frozen instance families for the verification suite.

Every family is deterministic (fixed seeds) and sized so the whole battery
runs on one desktop core in minutes.  The parameter grid is
q in {2, 3}, n in {2, 3}, m in {2, 3}, r <= 3, degrees <= 3; degree
profiles shrink as n*m grows because restriction multiplies the variable
count by n and the homological computations grow quickly with it.
"""

from __future__ import annotations

from dataclasses import replace

from .fields import ExtensionField, PrimeField
from .instances import InstanceBundle, InstanceSpec, random_system_gen
from .ring import PolySystem, Ring, parse_polynomial
from .verify import explicit_bundle
from .weil import field_equations


def _specs(cells, base_seed, **common):
    out = []
    for idx, (q, n, m, r, degrees) in enumerate(cells):
        out.append(InstanceSpec(seed=base_seed + idx, q=q, n=n, m=m, r=r,
                                degrees=tuple(degrees), **common))
    return out


def battery_homogeneous_core():
    """>= 50 homogeneous ideals across the full grid."""
    cells = []
    # n*m = 4: free rein within the degree cap
    for q in (2, 3):
        cells += [
            (q, 2, 2, 1, (2,)), (q, 2, 2, 1, (3,)),
            (q, 2, 2, 2, (2, 2)), (q, 2, 2, 2, (2, 3)),
            (q, 2, 2, 2, (3, 3)), (q, 2, 2, 3, (2, 2, 2)),
            (q, 2, 2, 3, (3, 2, 2)), (q, 2, 2, 3, (3, 3, 2)),
            (q, 2, 2, 2, (3, 2)),
            # repeated cells draw fresh seeds (seed = base + list index)
            (q, 2, 2, 2, (2, 2)), (q, 2, 2, 3, (2, 2, 2)),
            (q, 2, 2, 2, (3, 3)),
        ]
    # n*m = 6: cubics are affordable except in pairs over GF(27)
    for q in (2, 3):
        cells += [
            (q, 3, 2, 1, (2,)), (q, 3, 2, 1, (3,)),
            (q, 3, 2, 2, (2, 2)), (q, 3, 2, 2, (2, 3)),
            (q, 3, 2, 3, (2, 2, 2)),
            (q, 2, 3, 1, (2,)), (q, 2, 3, 2, (2, 2)),
            (q, 2, 3, 2, (2, 3)), (q, 2, 3, 3, (2, 2, 2)),
            (q, 2, 3, 2, (3, 2)), (q, 3, 2, 2, (3, 2)),
        ]
    # n*m = 9: restriction lives in 9 variables; stay linear-heavy
    for q in (2, 3):
        cells += [
            (q, 3, 3, 2, (1, 1)), (q, 3, 3, 2, (1, 2)),
            (q, 3, 3, 3, (1, 1, 2)), (q, 3, 3, 3, (1, 1, 1)),
        ]
    return _specs(cells, base_seed=1000, homogeneous=True)


def battery_artinian():
    """Homogeneous m = 2 instances, most with Artinian quotients."""
    cells = []
    for q in (2, 3):
        for n in (2, 3):
            cells += [
                (q, n, 2, 2, (2, 2)), (q, n, 2, 2, (2, 3)),
                (q, n, 2, 2, (3, 3)), (q, n, 2, 3, (2, 2, 2)),
                (q, n, 2, 3, (2, 2, 3)), (q, n, 2, 3, (3, 2, 2)),
                (q, n, 2, 2, (3, 2)), (q, n, 2, 3, (2, 3, 2)),
            ]
    return _specs(cells, base_seed=2000, homogeneous=True, density=0.7)


def battery_inhomogeneous():
    """>= 25 affine systems for the homogenization/top-part relations."""
    cells = []
    for q in (2, 3):
        for n in (2, 3):
            cells += [
                (q, n, 2, 1, (2,)), (q, n, 2, 2, (2, 2)),
                (q, n, 2, 2, (2, 3)), (q, n, 2, 2, (3, 3)),
                (q, n, 2, 3, (2, 2, 2)),
            ]
        cells += [(q, 2, 3, 2, (2, 2)), (q, 2, 3, 2, (2, 3))]
    return _specs(cells, base_seed=3000, homogeneous=False, density=0.6)


def battery_t_regular():
    """Small affine systems for the homogenized-restriction equalities.

    Kept lean: the left side of the solving-degree equality lives in
    n*m + n variables.
    """
    cells = []
    for q in (2, 3):
        cells += [
            (q, 2, 2, 1, (2,)), (q, 2, 2, 1, (3,)),
            (q, 2, 2, 2, (2, 2)), (q, 2, 2, 2, (2, 3)),
            (q, 2, 2, 2, (3, 3)), (q, 2, 2, 3, (2, 2, 2)),
            (q, 2, 2, 2, (2, 2)),
            (q, 3, 2, 1, (2,)), (q, 3, 2, 2, (1, 2)),
            (q, 3, 2, 2, (2, 2)),
        ]
    specs = _specs(cells, base_seed=4000, homogeneous=False, density=0.6)
    # shift seeds for the duplicated cell so instances differ
    return [replace(s, seed=s.seed + 100 * i) for i, s in enumerate(specs)]


def battery_engineered_zero_divisors():
    """Affine systems whose homogenization makes t divide zero."""
    out = []
    for q, n in ((2, 2), (3, 2), (2, 3)):
        ext = _ext(q, n)
        ring = Ring(ext, ["x1", "x2"])
        P = lambda s: parse_polynomial(s, ring)
        out.append(explicit_bundle(
            ext, ring, [P("x1*x2+x1"), P("x1*x2")],
            label=f"engineered-zd q={q} n={n} (x1*x2+x1, x1*x2)"))
        out.append(explicit_bundle(
            ext, ring, [P("x1^2*x2+x2"), P("x1^2*x2")],
            label=f"engineered-zd q={q} n={n} (x1^2*x2+x2, x1^2*x2)"))
    return out


def battery_field_equations():
    """F_4 over F_2, m = 2, extension field equations included."""
    cells = [
        (2, 2, 2, 1, (2,)), (2, 2, 2, 1, (3,)),
        (2, 2, 2, 2, (2, 2)), (2, 2, 2, 2, (2, 3)),
        (2, 2, 2, 2, (3, 3)), (2, 2, 2, 1, (2,)),
        (2, 2, 2, 2, (2, 2)), (2, 2, 2, 1, (3,)),
        (2, 2, 2, 2, (3, 2)), (2, 2, 2, 1, (2,)),
        (2, 2, 2, 2, (2, 2)), (2, 2, 2, 1, (3,)),
    ]
    specs = _specs(cells, base_seed=5000, homogeneous=False,
                   field_equations=True, density=0.6)
    return [replace(s, seed=s.seed + 137 * i) for i, s in enumerate(specs)]


def battery_prime_with_extension_equations():
    """Systems over GF(q) carrying the field equations of GF(q^n)."""
    out = []
    idx = 0
    for q, n in ((2, 2), (2, 2), (2, 2), (3, 2), (2, 2), (3, 2)):
        spec = InstanceSpec(seed=6000 + idx, q=q, n=1, m=2, r=2,
                            degrees=(2,), density=0.6)
        bundle = random_system_gen(spec)
        fe = field_equations(bundle.ring, q ** n)
        system = bundle.system.concat(fe)
        out.append(InstanceBundle(
            replace(spec, label=f"prime-fe seed={spec.seed} q={q} Q={q ** n} m=2"),
            bundle.base, bundle.ext, bundle.ring, system))
        idx += 1
    return out


def battery_complete_intersection():
    """Affine pairs whose homogenization tends to be a CI in 3 variables."""
    cells = []
    for q in (2, 3):
        for n in (2, 3):
            cells += [
                (q, n, 2, 2, (2, 2)), (q, n, 2, 2, (2, 3)),
                (q, n, 2, 2, (3, 3)),
            ]
    return _specs(cells, base_seed=7000, homogeneous=False, density=0.7)


def battery_bijection():
    """Small enough for exhaustive point enumeration: q^(n*m) <= 2^20."""
    cells = [
        (2, 2, 2, 1, (2,)), (2, 2, 2, 2, (2, 2)), (2, 2, 2, 2, (2, 3)),
        (2, 2, 2, 3, (2, 2, 2)), (2, 2, 2, 1, (3,)),
        (3, 2, 2, 1, (2,)), (3, 2, 2, 2, (2, 2)), (3, 2, 2, 2, (2, 3)),
        (3, 2, 2, 1, (3,)),
        (2, 3, 2, 1, (2,)), (2, 3, 2, 2, (2, 2)), (2, 3, 2, 2, (2, 3)),
        (2, 3, 2, 1, (3,)), (2, 3, 2, 3, (2, 2, 2)),
        (2, 2, 3, 1, (2,)), (2, 2, 3, 2, (2, 2)), (2, 2, 3, 2, (2, 2)),
        (3, 2, 2, 2, (3, 3)), (2, 3, 2, 2, (3, 3)), (2, 2, 2, 2, (3, 3)),
        (2, 3, 3, 1, (2,)),
    ]
    specs = _specs(cells, base_seed=8000, homogeneous=False, density=0.5)
    return [replace(s, seed=s.seed + 31 * i) for i, s in enumerate(specs)]


_EXT_CACHE: dict = {}


def _ext(q: int, n: int) -> ExtensionField:
    key = (q, n)
    if key not in _EXT_CACHE:
        from .instances import build_extension
        _EXT_CACHE[key] = build_extension(q, n)
    return _EXT_CACHE[key]


def worked_example_bundle() -> InstanceBundle:
    """The F_8 over F_2 quadratic used as the golden fixture."""
    ext = _ext(2, 3)
    ring = Ring(ext, ["x", "y"])
    f = parse_polynomial("y^2+x*y+a*x+a^2", ring)
    return explicit_bundle(ext, ring, [f], label="worked-example F8 quadratic")


def default_battery() -> dict:
    """check id -> instance sources, as exercised by the acceptance suite."""
    hom = battery_homogeneous_core()
    art = battery_artinian()
    inhom = battery_inhomogeneous()
    treg = battery_t_regular()
    zd = battery_engineered_zero_divisors()
    fe = battery_field_equations()
    prime_fe = battery_prime_with_extension_equations()
    ci = battery_complete_intersection()
    bij = battery_bijection()
    we = [worked_example_bundle()]
    return {
        "THM-2.7": hom[:12] + we,
        "LEM-3.2": hom,
        "THM-3.3-i": hom, "THM-3.3-ii": hom, "THM-3.3-iii": hom,
        "THM-3.3-iv": hom, "THM-3.3-v": hom, "THM-3.3-vi": hom,
        "THM-3.3-vii": hom,
        "COR-3.4-1": art, "COR-3.4-2": art,
        "LEM-4.2": inhom + we, "LEM-4.3": inhom + zd,
        "THM-4.4": treg, "LEM-4.5": treg,
        "THM-4.6": fe, "COR-4.7": fe, "COR-4.10": fe,
        "PROP-4.9": prime_fe,
        "COR-4.8": ci,
        "PROP-4.11": inhom + we,
        "BIJ-SOL": bij + we,
    }


def smoke_battery() -> dict:
    """A fast subset used as the CLI default."""
    full = default_battery()
    return {cid: sources[:3] for cid, sources in full.items()}
