"""The weilforge-v1 system file format.

Layout (one item per line, '#' comments and blank lines ignored):

    weilforge-v1
    field GF(2)[a]/(a^3+a+1)
    vars x, y
    option field-equations          # optional
    option extension GF(2)[a]/(a^2+a+1)   # optional
    y^2+x*y+a*x+a^2                 # one polynomial per line

``field`` uses the field sub-grammar GF(p) or GF(p)[a]/(modulus) with an
optional basis=[...] clause.  ``option field-equations`` marks that the
field equations of the coefficient field should be appended when the
system is used; ``option extension`` declares an extension field relevant
to the system (for restriction semantics when the system itself lives
over the base).  Files round-trip: parse then render is the identity on
canonical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import ParseError
from .fields import parse_field_spec, render_field_spec
from .ring import PolySystem, Ring, parse_polynomial, render_polynomial
from .weil import field_equations

HEADER = "weilforge-v1"


@dataclass
class SystemFile:
    field: object
    ring: Ring
    system: PolySystem
    add_field_equations: bool = False
    extension: object | None = None

    def effective_system(self) -> PolySystem:
        """The declared system, with field equations appended when flagged."""
        if not self.add_field_equations:
            return self.system
        return self.system.concat(field_equations(self.ring, self.field.order))


def parse_system_file(text: str) -> SystemFile:
    lines = text.split("\n")
    field = None
    ring = None
    polys = []
    add_fe = False
    extension = None
    saw_header = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not saw_header:
            if line != HEADER:
                raise ParseError(f"expected header {HEADER!r}", lineno, 1)
            saw_header = True
            continue
        if line.startswith("field "):
            try:
                field = parse_field_spec(line[len("field "):].strip())
            except Exception as exc:
                raise ParseError(f"bad field spec: {exc}", lineno, 7) from exc
            continue
        if line.startswith("vars "):
            if field is None:
                raise ParseError("vars before field", lineno, 1)
            names = [v.strip() for v in line[len("vars "):].split(",")]
            if any(not n for n in names):
                raise ParseError("empty variable name", lineno, 6)
            ring = Ring(field, names)
            continue
        if line.startswith("option "):
            opt = line[len("option "):].strip()
            if opt == "field-equations":
                add_fe = True
            elif opt.startswith("extension "):
                try:
                    extension = parse_field_spec(opt[len("extension "):].strip())
                except Exception as exc:
                    raise ParseError(f"bad extension spec: {exc}", lineno, 8) from exc
            else:
                raise ParseError(f"unknown option {opt!r}", lineno, 8)
            continue
        if ring is None:
            raise ParseError("polynomial before field/vars declarations", lineno, 1)
        polys.append(parse_polynomial(line, ring, line_offset=lineno))
    if not saw_header:
        raise ParseError(f"missing header {HEADER!r}", max(1, len(lines)), 1)
    if field is None or ring is None:
        raise ParseError("missing field or vars declaration", max(1, len(lines)), 1)
    return SystemFile(field, ring, PolySystem(ring, polys), add_fe, extension)


def render_system_file(sf: SystemFile) -> str:
    lines = [HEADER, f"field {render_field_spec(sf.field)}",
             f"vars {', '.join(sf.ring.names)}"]
    if sf.add_field_equations:
        lines.append("option field-equations")
    if sf.extension is not None:
        lines.append(f"option extension {render_field_spec(sf.extension)}")
    lines.extend(render_polynomial(f) for f in sf.system)
    return "\n".join(lines) + "\n"
