"""Each cataloged formula correction must demonstrate both halves:

the literal printed form fails validation, and the corrected form the
builders use passes.  An extra oracle check confirms the corrected
length genuinely exists in the graph, so a correction can never
overclaim.
"""

import pytest

from almostplanar.errata import CORRECTIONS, walk_edge_word
from almostplanar.families import gen_a_graph
from almostplanar.oracle import cycle_spectrum, hamiltonian_path


@pytest.mark.parametrize("record", CORRECTIONS, ids=lambda r: r.key)
def test_literal_fails_and_correction_passes(record):
    outcome = record.demo()
    assert not outcome.literal.ok, f"{record.key}: literal form unexpectedly valid"
    assert outcome.literal.reason
    assert outcome.corrected.ok, (
        f"{record.key}: corrected form invalid ({outcome.corrected.reason})"
    )


@pytest.mark.parametrize("record", CORRECTIONS, ids=lambda r: r.key)
def test_corrected_claim_confirmed_by_oracle(record):
    outcome = record.demo()
    if outcome.kind == "cycle":
        assert outcome.length in cycle_spectrum(outcome.graph).lengths
    else:
        u, v = outcome.endpoints
        assert hamiltonian_path(outcome.graph, u, v) is not None


def test_corrections_cover_required_formulas():
    keys = {record.key for record in CORRECTIONS}
    assert {
        "mobius-even-cycle-index-bound",
        "bicycle-nonadjacent-rim-path",
        "a-even-hamiltonian-descent",
        "h1-p-plus-q-plus-1-row",
        "h2-j-avoidance-endpoint",
    } <= keys


def test_failure_reasons_are_specific():
    by_key = {record.key: record.demo() for record in CORRECTIONS}
    assert by_key["mobius-even-cycle-index-bound"].literal.reason == "wrong length"
    # the printed path lists n+2 entries for an n-vertex spanning path
    assert by_key["bicycle-nonadjacent-rim-path"].literal.reason == "wrong length"
    assert "not incident" in by_key["a-even-hamiltonian-descent"].literal.reason
    assert by_key["h1-p-plus-q-plus-1-row"].literal.reason == "wrong length"
    assert by_key["h2-j-avoidance-endpoint"].literal.reason == "wrong length"


def test_walk_edge_word():
    inst = gen_a_graph(8)
    seq, note = walk_edge_word(inst, ["s1", "r1", "t2", "t6", "r5", "r4", "r3", "s3"])
    assert note == ""
    assert seq == [8, 1, 2, 7, 6, 5, 4, 3]
    seq, note = walk_edge_word(inst, ["s1", "r2", "s3"])
    assert seq is None and "not incident" in note
    seq, note = walk_edge_word(inst, ["s1", "r2"])
    assert seq is None and "share no vertex" in note
    seq, note = walk_edge_word(inst, ["s1", "nope"])
    assert seq is None and "no edge with role" in note
