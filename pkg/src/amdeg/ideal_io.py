"""Diff-friendly text and JSON serialization of graded ideals.

Text format: a header line `ring <vars...> mod <p> order <name>`, then one
polynomial per line; `#` starts a comment; blank lines are ignored.
"""

import json

from .polyring import Ring, TermOrder, parse_polynomial
from .groebner import GradedIdeal


def render_ideal_text(ideal, comment=None):
    ring = ideal.ring
    lines = []
    if comment:
        for ln in comment.splitlines():
            lines.append(f"# {ln}")
    lines.append(f"ring {' '.join(ring.variable_names)} mod {ring.prime} "
                 f"order {ring.order.kind}")
    for g in ideal.generators:
        lines.append(str(g))
    return "\n".join(lines) + "\n"


def write_ideal(ideal, path, comment=None):
    with open(path, "w") as fp:
        fp.write(render_ideal_text(ideal, comment))


def parse_ideal_text(text):
    header = None
    polys = []
    ring = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            toks = line.split()
            if toks[0] != "ring" or "mod" not in toks or "order" not in toks:
                raise ValueError(f"bad header line: {raw!r}")
            mi = toks.index("mod")
            oi = toks.index("order")
            names = tuple(toks[1:mi])
            prime = int(toks[mi + 1])
            order_name = toks[oi + 1]
            if order_name != "degrevlex":
                raise ValueError(f"unsupported order {order_name!r}")
            if not names:
                raise ValueError("no variables in header")
            ring = Ring(names, prime, TermOrder(order_name))
            header = True
            continue
        polys.append(parse_polynomial(line, ring))
    if ring is None:
        raise ValueError("missing header line")
    return GradedIdeal(ring, polys)


def read_ideal(path):
    with open(path) as fp:
        return parse_ideal_text(fp.read())


def ideal_to_json(ideal):
    return {
        "ring": {
            "variables": list(ideal.ring.variable_names),
            "prime": ideal.ring.prime,
            "order": ideal.ring.order.kind,
        },
        "generators": [str(g) for g in ideal.generators],
    }


def ideal_from_json(data):
    ring_info = data["ring"]
    if ring_info.get("order", "degrevlex") != "degrevlex":
        raise ValueError("unsupported order")
    ring = Ring(tuple(ring_info["variables"]), int(ring_info["prime"]))
    return GradedIdeal(ring, [parse_polynomial(s, ring)
                              for s in data["generators"]])


def dump_json(obj):
    """Byte-stable JSON rendering."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
