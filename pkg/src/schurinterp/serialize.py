"""Wire formats: problems, rational functions and matrices as JSON, with
deterministic float formatting so identical inputs give byte-identical
reports."""

from __future__ import annotations

import numpy as np

from .interp import InterpProblem
from .ratfun import Poly, RatFun, ratfun_reduce


def _fmt_float(x):
    if x != x:
        return "NaN"
    if x in (float("inf"), float("-inf")):
        return '"Infinity"' if x > 0 else '"-Infinity"'
    if x == int(x) and abs(x) < 1e16:
        return repr(int(x)) + ".0"
    return format(x, ".17g")


def dumps(obj, indent=0):
    """Deterministic JSON text: insertion-ordered keys, 17-significant-digit
    floats, complex numbers as [re, im] pairs."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return repr(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return dumps([float(obj.real), float(obj.imag)])
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist())
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f'{inner}"{k}": {dumps(v, indent + 1)}' for k, v in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        flat = all(
            isinstance(v, (int, float, complex, np.integer, np.floating, np.complexfloating))
            for v in obj
        )
        parts = [dumps(v, indent + 1) for v in obj]
        if flat:
            return "[" + ", ".join(parts) + "]"
        return "[\n" + ",\n".join(inner + p for p in parts) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def complex_to_pair(z):
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(p):
    return complex(float(p[0]), float(p[1]))


def poly_to_json(p):
    return [complex_to_pair(c) for c in p.coeffs]


def poly_from_json(data):
    return Poly([pair_to_complex(c) for c in data])


def ratfun_to_json(f):
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfun_from_json(data):
    return ratfun_reduce(poly_from_json(data["num"]), poly_from_json(data["den"]))


def matrix_to_json(m):
    m = np.atleast_2d(np.asarray(m, dtype=complex))
    return [[complex_to_pair(v) for v in row] for row in m]


def vector_to_json(v):
    return [complex_to_pair(x) for x in np.asarray(v, dtype=complex).ravel()]


def problem_from_json(data):
    nodes = []
    for entry in data["nodes"]:
        z = pair_to_complex(entry["z"])
        values = [pair_to_complex(v) for v in entry["values"]]
        nodes.append((z, len(values), tuple(values)))
    return InterpProblem.make(nodes, kappa=data.get("kappa"))


def problem_to_json(problem):
    return {
        "nodes": [
            {"z": complex_to_pair(z), "values": [complex_to_pair(v) for v in vals]}
            for z, _, vals in problem.nodes
        ],
        "kappa": problem.kappa,
    }


def ratfun_pretty(f):
    """Short human-readable form for text reports."""

    def poly_str(p):
        terms = []
        for k, c in enumerate(p.coeffs):
            if c == 0 and p.degree > 0:
                continue
            cs = f"({c.real:.6g}{c.imag:+.6g}j)" if c.imag else f"{c.real:.6g}"
            terms.append(cs if k == 0 else f"{cs}*z^{k}" if k > 1 else f"{cs}*z")
        return " + ".join(terms) or "0"

    if f.den.degree == 0 and f.den.coeffs[0] == 1.0:
        return poly_str(f.num)
    return f"({poly_str(f.num)}) / ({poly_str(f.den)})"
