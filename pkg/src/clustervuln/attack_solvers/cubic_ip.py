"""Plain-text emitter for the cubic 0/1 program behind CSA.

Grammar (one item per line)::

    # <free-text comment lines>
    # vars <N>
    # budget <k>
    var <id>                  one per alive vertex, in id order
    <c> <u> <i> <j>           objective monomial c * z_u * z_i * z_j, i < j, c = p/q
    sum z >= <N - k>          survivor constraint (equivalently sum x <= k)

``z_v = 1 - x_v`` marks survivors. The objective keeps the original degrees
``d_u`` and the normaliser ``N - k``; each unordered triangle pair ``{i, j}``
around a centre ``u`` folds the two ordered terms into one coefficient
``2 / (d_u (d_u - 1) (N - k))``.
"""

from __future__ import annotations

from fractions import Fraction

from clustervuln.attack_solvers.result import check_budget
from clustervuln.clustering_metrics import list_triangles
from clustervuln.graph_core import Graph


def cubic_ip_monomials(g: Graph, k: int) -> list[tuple[Fraction, int, int, int]]:
    check_budget(g, k)
    n = g.n_alive
    out = []
    for a, b, c in list_triangles(g).tolist():
        for u, i, j in ((a, b, c), (b, a, c), (c, a, b)):
            du = int(g.degree[u])
            out.append((Fraction(2, du * (du - 1) * (n - k)), u, i, j))
    out.sort(key=lambda m: (m[1], m[2], m[3]))
    return out


def emit_cubic_ip(g: Graph, k: int) -> str:
    n = g.n_alive
    lines = [
        "# cubic 0/1 program: minimize sum c * z_u * z_i * z_j",
        "# z_v = 1 - x_v, x_v = 1 iff v is removed",
        f"# vars {n}",
        f"# budget {k}",
    ]
    lines += [f"var {u}" for u in g.alive_vertices().tolist()]
    lines += [f"{c} {u} {i} {j}" for c, u, i, j in cubic_ip_monomials(g, k)]
    lines.append(f"sum z >= {n - k}")
    return "\n".join(lines) + "\n"
