"""Catalog of cycle-formula transcription errors and their fixes.

While validating the classical explicit cycle listings for these
families against exhaustive search, several of the commonly printed
forms turned out not to trace valid cycles as written.  Each record
below renders the printed form literally, shows why it fails
validation, and gives the corrected form the builders use.  The test
suite asserts both halves, so the catalog stays honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .families import LabeledInstance, gen_a_graph, gen_bicycle, gen_h1, gen_h2, gen_mobius
from .graph import Graph
from .oracle import SeqCheck, validate_cycle, validate_path


def walk_edge_word(
    inst: LabeledInstance, roles: Sequence[str]
) -> tuple[Optional[list[int]], str]:
    """Trace an edge word (list of edge role names) into a vertex cycle.

    Starts at the common endpoint of the first and last edges and
    follows each named edge in turn.  Returns (vertex sequence, "") on
    a closed walk, or (None, reason) when an edge is missing, not
    incident to the walk, or the walk fails to close.
    """
    by_role = {r: e for e, r in inst.edge_roles.items()}
    try:
        edges = [by_role[r] for r in roles]
    except KeyError as exc:
        return None, f"no edge with role {exc.args[0]!r}"
    common = set(edges[0]) & set(edges[-1])
    if not common:
        return None, "first and last edges share no vertex"
    start = min(common)
    seq = [start]
    cur = start
    for role, e in zip(roles, edges):
        if cur not in e:
            return None, f"edge {role} = {e} is not incident to vertex {cur}"
        cur = e[0] if e[1] == cur else e[1]
        seq.append(cur)
    if cur != start:
        return None, "walk does not close"
    return seq[:-1], ""


@dataclass(frozen=True)
class DemoOutcome:
    """Concrete rendering of one correction on a fixed instance."""

    graph: Graph
    literal: SeqCheck
    corrected: SeqCheck
    kind: str  # "cycle" or "path"
    length: int
    endpoints: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class FormulaCorrection:
    """One printed formula, its literal failure, and the working fix."""

    key: str
    family: str
    summary: str
    literal_form: str
    corrected_form: str
    demo: Callable[[], DemoOutcome]


def _demo_mobius_even() -> DemoOutcome:
    # k = 5, target length 8 (t = 4).  The printed index bound t/2 yields
    # half the vertices the cycle needs.
    k, t = 5, 4
    g = gen_mobius(k).graph
    literal = list(range(1, t // 2 + 1)) + list(range(k + t // 2, k, -1))
    corrected = list(range(1, t + 1)) + list(range(k + t, k, -1))
    return DemoOutcome(
        g,
        validate_cycle(g, literal, 2 * t),
        validate_cycle(g, corrected, 2 * t),
        "cycle",
        2 * t,
    )


def _demo_mobius_odd_max() -> DemoOutcome:
    # k = 8, target length 2k-1 = 15.  The printed maximal odd cycle
    # ends "..., k-2, k-1, 2k" and skips vertex k before closing.
    k = 8
    g = gen_mobius(k).graph
    literal = [1, 9, 10, 2, 3, 11, 12, 4, 5, 13, 14, 6, 7, 16]
    corrected = literal + [k]
    return DemoOutcome(
        g,
        validate_cycle(g, literal, 2 * k - 1),
        validate_cycle(g, corrected, 2 * k - 1),
        "cycle",
        2 * k - 1,
    )


def _demo_bicycle_nonadjacent_path() -> DemoOutcome:
    # B_7, rim pair (1, 4).  The printed spanning path visits j-1 twice.
    n, i, j = 7, 1, 4
    g = gen_bicycle(n).graph
    literal = (
        list(range(i, j))            # i .. j-1
        + [n, n - 1]
        + list(range(n - 2, j - 2, -1))  # n-2 .. j-1 again
        + [j]
    )
    corrected = list(range(i, j)) + [n, n - 1] + list(range(n - 2, j - 1, -1))
    return DemoOutcome(
        g,
        validate_path(g, literal, n),
        validate_path(g, corrected, n),
        "path",
        n,
        endpoints=(i, j),
    )


def _demo_a_even_ham() -> DemoOutcome:
    # A_8.  The printed spanning cycle, read as an edge word, is
    # s1 r1 t2 t6 r6 r5 r4 r3 s3; rim edge r6 returns to vertex 1 and
    # the walk jams.  The rim descent has to start at r5.
    inst = gen_a_graph(8)
    g = inst.graph
    literal_word = ["s1", "r1", "t2", "t6", "r6", "r5", "r4", "r3", "s3"]
    corrected_word = ["s1", "r1", "t2", "t6", "r5", "r4", "r3", "s3"]
    lit_seq, lit_note = walk_edge_word(inst, literal_word)
    if lit_seq is None:
        lit = SeqCheck(False, lit_note)
    else:
        lit = validate_cycle(g, lit_seq, 8)
    cor_seq, _ = walk_edge_word(inst, corrected_word)
    cor = (
        SeqCheck(False, "corrected walk broke")
        if cor_seq is None
        else validate_cycle(g, cor_seq, 8)
    )
    return DemoOutcome(g, lit, cor, "cycle", 8)


def _demo_h1_pq1_row() -> DemoOutcome:
    # H1(2,2,2) minus all chords; the p+q+1 table row lists p+q+2
    # vertices.  Dropping x1 fixes it.
    inst = gen_h1(2, 2, 2, ("ab", "bc", "ac"))
    rv = inst.role_to_vertex
    g = inst.graph
    length = 2 + 2 + 1
    literal = [rv["b"], rv["x1"], rv["x2"], rv["a"], rv["y1"], rv["y2"]]
    corrected = [rv["b"], rv["x2"], rv["a"], rv["y1"], rv["y2"]]
    return DemoOutcome(
        g,
        validate_cycle(g, literal, length),
        validate_cycle(g, corrected, length),
        "cycle",
        length,
    )


def _demo_h2_j_avoidance() -> DemoOutcome:
    # H2(2,3,2) minus all chords, avoiding j = 2 leading y vertices.
    # The printed cycle descends to y_{j-1}, which skips nothing; the
    # descent has to stop at y_{j+1}.
    p, q, r, j = 2, 3, 2, 2
    inst = gen_h2(p, q, r, ("ab", "bc", "ac"))
    rv = inst.role_to_vertex
    g = inst.graph
    n = p + q + r + 3
    length = n - j
    literal = (
        [rv["a"], rv["z2"], rv["z1"], rv["c"]]
        + [rv[f"y{t}"] for t in range(q, j - 2, -1)]  # y_q .. y_{j-1}
        + [rv["b"], rv["x1"], rv["x2"]]
    )
    corrected = (
        [rv["a"], rv["z2"], rv["z1"], rv["c"]]
        + [rv[f"y{t}"] for t in range(q, j, -1)]  # y_q .. y_{j+1}
        + [rv["b"], rv["x1"], rv["x2"]]
    )
    return DemoOutcome(
        g,
        validate_cycle(g, literal, length),
        validate_cycle(g, corrected, length),
        "cycle",
        length,
    )


CORRECTIONS: tuple[FormulaCorrection, ...] = (
    FormulaCorrection(
        key="mobius-even-cycle-index-bound",
        family="mobius",
        summary=(
            "The even-cycle listing for V_2k walks the rail only to vertex "
            "t/2 before crossing, producing t vertices instead of 2t; the "
            "rail walk must reach vertex t."
        ),
        literal_form="1, 2, ..., t/2, k+t/2, ..., k+1  (claimed length 2t)",
        corrected_form="1, 2, ..., t, k+t, k+t-1, ..., k+1",
        demo=_demo_mobius_even,
    ),
    FormulaCorrection(
        key="mobius-odd-max-cycle-skips-k",
        family="mobius",
        summary=(
            "The maximal odd cycle (length 2k-1, even k) closes from 2k "
            "straight back to 1, skipping vertex k; the closing run is "
            "..., k-1, 2k, k."
        ),
        literal_form="1, k+1, k+2, 2, 3, ..., k-2, k-1, 2k  (claimed length 2k-1)",
        corrected_form="1, k+1, k+2, 2, 3, ..., k-2, k-1, 2k, k",
        demo=_demo_mobius_odd_max,
    ),
    FormulaCorrection(
        key="bicycle-nonadjacent-rim-path",
        family="bicycle",
        summary=(
            "The spanning path between nonadjacent rim vertices i and j "
            "lists j-1 twice (once in the ascent, once in the descent); "
            "the descent must stop at j after starting from i-1."
        ),
        literal_form="i, i+1, ..., j-1, n, n-1, n-2, ..., j-1, j",
        corrected_form="i, i+1, ..., j-1, n, n-1, i-1 (wrapping), ..., j",
        demo=_demo_bicycle_nonadjacent_path,
    ),
    FormulaCorrection(
        key="a-even-hamiltonian-descent",
        family="bicycle",
        summary=(
            "The spanning cycle of A_n (even n), read as an edge word, "
            "starts its rim descent with r_{n-2}, which wraps back to "
            "vertex 1; the descent starts at r_{n-3}."
        ),
        literal_form="s1 r1 t2 t_{n-2} r_{n-2} ... r3 s3",
        corrected_form="s1 r1 t2 t_{n-2} r_{n-3} ... r3 s3",
        demo=_demo_a_even_ham,
    ),
    FormulaCorrection(
        key="h1-p-plus-q-plus-1-row",
        family="h1",
        summary=(
            "The p+q+1 row of the missing-lengths table keeps x1 and so "
            "lists p+q+2 vertices; dropping x1 gives the right length."
        ),
        literal_form="b, x1, x2, ..., xp, a, y1, y2, ..., yq",
        corrected_form="b, x2, ..., xp, a, y1, y2, ..., yq",
        demo=_demo_h1_pq1_row,
    ),
    FormulaCorrection(
        key="h2-j-avoidance-endpoint",
        family="h2",
        summary=(
            "The cycle avoiding j leading y vertices descends to y_{j-1}, "
            "so it avoids nothing and has the wrong length; the descent "
            "stops at y_{j+1}.  (The same passage names the surviving "
            "z-fan edge a z1 with a stray label.)"
        ),
        literal_form="a, z_r, ..., z_1, c, y_q, ..., y_{j-1}, b, x_1, ..., x_p",
        corrected_form="a, z_r, ..., z_1, c, y_q, ..., y_{j+1}, b, x_1, ..., x_p",
        demo=_demo_h2_j_avoidance,
    ),
)
