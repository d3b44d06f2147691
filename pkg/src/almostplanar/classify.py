"""Recognizer for 3-connected almost-planar graphs.

Pipeline: planarity gate, 3-connectivity gate, almost-planarity gate,
then a generate-and-match sweep over every family instance on the same
vertex count (prefiltered by edge count and degree sequence, matched by
exact isomorphism).  A graph that passes all three gates but matches no
family would contradict the classification theorem for this class, so
that case raises instead of returning quietly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .constructive import predicted_lengths
from .errors import FalsificationError, OracleCapError
from .families import (
    H1,
    H2,
    Bicycle,
    FamilySpec,
    K33Chain,
    Mobius,
    Wheel,
    enumerate_b_minors,
    gen_k33_chain,
    gen_mobius,
    generate,
    spec_to_json,
)
from .graph import Graph, is_k_connected, isomorphism, refinement_signature
from .oracle import CycleSpectrum
from .planarity import is_almost_planar, is_planar

DEFAULT_CLASSIFY_CAP = 12

GATE_PLANAR = "planar"
GATE_NOT_3_CONNECTED = "not-3-connected"
GATE_NOT_ALMOST_PLANAR = "not-almost-planar"
GATE_ALMOST_PLANAR = "almost-planar"


def spec_vertex_count(spec: FamilySpec) -> int:
    if isinstance(spec, Mobius):
        return 2 * spec.k
    if isinstance(spec, (Bicycle, Wheel)):
        return spec.n
    if isinstance(spec, K33Chain):
        return 6
    if isinstance(spec, (H1, H2)):
        return spec.p + spec.q + spec.r + 3
    raise TypeError(f"not a family spec: {spec!r}")


def predict_spectrum(spec: FamilySpec) -> Optional[CycleSpectrum]:
    """Theorem-predicted spectrum, or None when no exact claim exists."""
    lengths = predicted_lengths(spec)
    if lengths is None:
        return None
    return CycleSpectrum(spec_vertex_count(spec), lengths)


@dataclass(frozen=True)
class Prediction:
    pancyclic: bool
    hamiltonian: bool
    hamiltonian_connected: Optional[bool]
    spectrum: Optional[CycleSpectrum]

    def to_json(self) -> dict:
        return {
            "pancyclic": self.pancyclic,
            "hamiltonian": self.hamiltonian,
            "hamiltonian_connected": self.hamiltonian_connected,
            "spectrum": (
                sorted(self.spectrum.lengths) if self.spectrum is not None else None
            ),
        }


@dataclass(frozen=True)
class Classification:
    gate: str
    matched_spec: Optional[FamilySpec] = None
    iso_map: Optional[dict[int, int]] = None
    predicted: Optional[Prediction] = None
    all_matches: tuple[FamilySpec, ...] = ()
    evidence: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "gate": self.gate,
            "spec": (
                spec_to_json(self.matched_spec)
                if self.matched_spec is not None
                else None
            ),
            "iso_map": (
                {str(k): v for k, v in sorted(self.iso_map.items())}
                if self.iso_map is not None
                else None
            ),
            "predicted": self.predicted.to_json() if self.predicted else None,
            "all_matches": [spec_to_json(s) for s in self.all_matches],
            "evidence": list(self.evidence),
        }


@lru_cache(maxsize=None)
def _candidates(
    n: int, include_bicycle: bool = True
) -> tuple[tuple[FamilySpec, Graph, tuple, int], ...]:
    """Every 3-connected non-planar family instance on n vertices with
    its refinement signature, in match-priority order: Möbius, bicycle
    minors, H1, H2, K33 chains.
    """
    out: list[tuple[FamilySpec, Graph]] = []
    if n >= 6 and n % 2 == 0:
        out.append((Mobius(n // 2), gen_mobius(n // 2).graph))
    if n >= 5 and include_bicycle:
        for spec in enumerate_b_minors(n, cap=max(n, 12)):
            out.append((spec, generate(spec).graph))
    if n >= 6:
        for cls in (H1, H2):
            for p in range(1, n - 4):
                for q in range(1, n - 3 - p):
                    r = n - 3 - p - q
                    if r < 1:
                        continue
                    for size in range(4):
                        for deleted in itertools.combinations(
                            ("ab", "bc", "ac"), size
                        ):
                            spec = cls(p, q, r, frozenset(deleted))
                            g = generate(spec).graph
                            if is_planar(g) or not is_k_connected(g, 3):
                                continue
                            out.append((spec, g))
    if n == 6:
        for size in range(4):
            for extras in itertools.combinations(("ab", "bc", "ac"), size):
                spec = K33Chain(frozenset(extras))
                out.append((spec, gen_k33_chain(extras).graph))
    enriched = []
    for spec, g in out:
        sig = refinement_signature(g)
        enriched.append((spec, g, sig, hash(sig)))
    return tuple(enriched)


def classify(g: Graph, cap: int = DEFAULT_CLASSIFY_CAP) -> Classification:
    """Gate checks plus family matching for an arbitrary graph."""
    if g.n > cap:
        raise OracleCapError(f"classification capped at n <= {cap}, got {g.n}")

    if is_planar(g):
        return Classification(GATE_PLANAR, evidence=("graph is planar",))
    if not is_k_connected(g, 3):
        return Classification(
            GATE_NOT_3_CONNECTED, evidence=("graph is not 3-connected",)
        )
    ev = is_almost_planar(g)
    if not ev.verdict:
        notes = ["graph is non-planar but not almost-planar"]
        if ev.failing_edge is not None:
            notes.append(
                f"edge {ev.failing_edge} fails both deletion and contraction"
            )
        return Classification(GATE_NOT_ALMOST_PLANAR, evidence=tuple(notes))

    sig = refinement_signature(g)
    sig_hash = hash(sig)
    # Spoke-deleted bicycle minors keep a hub of degree >= ceil((n-2)/2)+1,
    # so lower-degree inputs skip that (large) sweep entirely.
    max_degree = g.degree_sequence()[-1] if g.n else 0
    include_bicycle = g.n <= 12 or max_degree >= (g.n - 1) // 2 + 1
    matches: list[tuple[FamilySpec, dict[int, int]]] = []
    for spec, cand, cand_sig, cand_hash in _candidates(g.n, include_bicycle):
        if cand_hash != sig_hash or cand_sig != sig:
            continue
        mapping = isomorphism(cand, g)
        if mapping is not None:
            matches.append((spec, mapping))
    if not matches:
        raise FalsificationError(
            "3-connected almost-planar graph matched no family instance; "
            "this contradicts the classification of the class "
            f"(n={g.n}, m={g.m}, degrees={sig[1]})"
        )

    matched_spec, iso_map = matches[0]
    lengths = predicted_lengths(matched_spec)
    assert lengths is not None  # matched specs always carry a prediction
    spectrum = CycleSpectrum(g.n, lengths)
    predicted = Prediction(
        pancyclic=spectrum.pancyclic,
        hamiltonian=spectrum.hamiltonian,
        hamiltonian_connected=True if is_k_connected(g, 4) else None,
        spectrum=spectrum,
    )
    return Classification(
        GATE_ALMOST_PLANAR,
        matched_spec=matched_spec,
        iso_map=iso_map,
        predicted=predicted,
        all_matches=tuple(spec for spec, _ in matches),
        evidence=(f"{len(matches)} candidate instance(s) matched",),
    )
