"""Module input formats: plain text and an equivalent JSON document.

Text format (one item per line, '#' comments allowed):

    ring F5[x,y]
    generators 0 -1
    relation x^2, x*y
    relation y^2, 0

Each `relation` row lists one polynomial per generator (a presentation-matrix
column). The JSON form carries the same data under stable keys. Both parse to
the same FgGradedModule and both serializers round-trip exactly.
"""

import json

from ..errors import InputError
from ..exactnum.rings import QQ
from .ring import RingDescriptor, Poly
from .modules import FreeModuleElement, FgGradedModule

FORMAT_NAME = "torcomp-module"
FORMAT_VERSION = 1


def _ring_to_text(ring):
    f = "Q" if ring.field is QQ else f"F{ring.p}"
    base = f"{f}[{','.join(ring.variables)}]"
    if any(w != 1 for w in ring.weights):
        base += f",w=({','.join(str(w) for w in ring.weights)})"
    return base


def _relation_to_polys(ring, rel, ngens):
    cols = []
    for i in range(ngens):
        cols.append(str(rel.component(i)).replace(" ", ""))
    return cols


def module_to_text(M):
    lines = [f"ring {_ring_to_text(M.ring)}",
             "generators " + " ".join(str(d) for d in M.gen_degs)]
    for rel in M.relations:
        lines.append("relation " + ", ".join(_relation_to_polys(M.ring, rel, M.ngens)))
    return "\n".join(lines) + "\n"


def module_from_text(text):
    ring = None
    gen_degs = None
    relations = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "ring":
            ring = RingDescriptor.parse(rest.strip())
        elif head == "generators":
            gen_degs = tuple(int(x) for x in rest.split())
        elif head == "relation":
            if ring is None or gen_degs is None:
                raise InputError("relation before ring/generators header")
            polys = [Poly.parse(ring, chunk.strip() or "0")
                     for chunk in rest.split(",")]
            if len(polys) != len(gen_degs):
                raise InputError(
                    f"relation row has {len(polys)} entries for {len(gen_degs)} generators")
            terms = {}
            for i, p in enumerate(polys):
                for m, c in p.terms.items():
                    terms[(i, m)] = c
            relations.append(FreeModuleElement(ring, len(gen_degs), terms))
        else:
            raise InputError(f"unknown directive {head!r}")
    if ring is None or gen_degs is None:
        raise InputError("module file needs 'ring' and 'generators' lines")
    return FgGradedModule(ring, gen_degs, relations)


def module_to_json(M):
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "ring": {
            "field": "Q" if M.ring.field is QQ else f"F{M.ring.p}",
            "variables": list(M.ring.variables),
            "weights": list(M.ring.weights),
        },
        "generator_degrees": list(M.gen_degs),
        "relations": [_relation_to_polys(M.ring, rel, M.ngens)
                      for rel in M.relations],
    }
    return json.dumps(doc, sort_keys=True, indent=1)


def module_from_json(text):
    doc = json.loads(text)
    if doc.get("format") != FORMAT_NAME:
        raise InputError(f"not a {FORMAT_NAME} document")
    rd = doc["ring"]
    ring_text = f"{rd['field']}[{','.join(rd['variables'])}]"
    ring = RingDescriptor.parse(ring_text)
    if rd.get("weights"):
        ring = RingDescriptor(ring.field, ring.variables, rd["weights"])
    gen_degs = tuple(doc["generator_degrees"])
    relations = []
    for row in doc["relations"]:
        terms = {}
        for i, s in enumerate(row):
            p = Poly.parse(ring, s or "0")
            for m, c in p.terms.items():
                terms[(i, m)] = c
        relations.append(FreeModuleElement(ring, len(gen_degs), terms))
    return FgGradedModule(ring, gen_degs, relations)


def parse_module_expr(ring, text):
    """Inline module expressions for the CLI: 'A', 'k', 'A(-3)',
    'A/(x^2,x*y)', or a quotient with an explicit twist 'A(-1)/(x^2)'."""
    text = text.strip()
    import re
    m = re.match(r"^(A|k)(?:\((-?\d+)\))?(?:/\(([^)]*)\))?$", text)
    if not m:
        raise InputError(f"cannot parse module expression {text!r}")
    head, twist, ideal = m.groups()
    twist = int(twist) if twist else 0
    if head == "k":
        gens = [Poly.variable(ring, i) for i in range(ring.nvars)]
        M = FgGradedModule.quotient_ring(ring, gens)
    elif ideal is not None:
        gens = [Poly.parse(ring, chunk) for chunk in ideal.split(",") if chunk.strip()]
        M = FgGradedModule.quotient_ring(ring, gens)
    else:
        M = FgGradedModule.ring_module(ring)
    return M.twist(twist) if twist else M
