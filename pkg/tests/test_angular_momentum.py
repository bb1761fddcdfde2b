"""Clebsch-Gordan coefficients against a ladder-operator oracle and the
textbook pair-coupling fixture."""

import numpy as np
import pytest

from spinhier.angular_momentum import (
    InvalidLabelError,
    MultipletLabel,
    SpinLabel,
    cg,
    couple_pair_matrix,
    multiplet_content,
)

SQ2 = 1.0 / np.sqrt(2.0)

HALF = SpinLabel(1)
ONE = SpinLabel(2)


# ---------------------------------------------------------------------------
# Independent oracle: build every coupled state by lowering from the stretched
# state and Gram-Schmidt for the tops of lower J, with the Condon-Shortley
# sign fix (component at m1 = j1 positive).  No factorial formula involved.
# ---------------------------------------------------------------------------

def _ladder_coupled_states(tj1, tj2):
    m1s = list(range(-tj1, tj1 + 1, 2))
    m2s = list(range(-tj2, tj2 + 1, 2))
    index = {(a, b): i for i, (a, b) in enumerate((a, b) for a in m1s for b in m2s)}
    dim = len(index)

    def lower(vec):
        out = np.zeros(dim)
        for (tm1, tm2), i in index.items():
            if vec[i] == 0.0:
                continue
            if tm1 > -tj1:
                amp = np.sqrt(tj1 / 2 * (tj1 / 2 + 1) - tm1 / 2 * (tm1 / 2 - 1))
                out[index[(tm1 - 2, tm2)]] += amp * vec[i]
            if tm2 > -tj2:
                amp = np.sqrt(tj2 / 2 * (tj2 / 2 + 1) - tm2 / 2 * (tm2 / 2 - 1))
                out[index[(tm1, tm2 - 2)]] += amp * vec[i]
        return out

    coupled = {}
    for tj in range(tj1 + tj2, abs(tj1 - tj2) - 1, -2):
        if tj == tj1 + tj2:
            top = np.zeros(dim)
            top[index[(tj1, tj2)]] = 1.0
        else:
            # Top of a lower multiplet: the one-dimensional orthogonal
            # complement of the higher-J states inside the M = J sector.
            sector = [i for (tm1, tm2), i in index.items() if tm1 + tm2 == tj]
            higher = np.array([
                coupled[(h, tj)][sector]
                for h in range(tj + 2, tj1 + tj2 + 1, 2)
            ])
            _, _, vh = np.linalg.svd(higher)
            top = np.zeros(dim)
            top[sector] = vh[-1]
            top /= np.linalg.norm(top)
            if top[index[(tj1, tj - tj1)]] < 0:
                top = -top
        coupled[(tj, tj)] = top
        vec = top
        for tm in range(tj, -tj, -2):
            vec = lower(vec) / np.sqrt(tj / 2 * (tj / 2 + 1) - tm / 2 * (tm / 2 - 1))
            coupled[(tj, tm - 2)] = vec
    return index, coupled


@pytest.mark.parametrize("tj1,tj2", [(1, 1), (2, 1), (2, 2), (3, 2), (4, 3), (4, 4)])
def test_cg_matches_ladder_oracle(tj1, tj2):
    j1, j2 = SpinLabel(tj1), SpinLabel(tj2)
    index, coupled = _ladder_coupled_states(tj1, tj2)
    for (tj, tm), vec in coupled.items():
        for (tm1, tm2), i in index.items():
            got = cg(j1, tm1, j2, tm2, MultipletLabel(tj, tm))
            assert got == pytest.approx(vec[i], abs=1e-12)


def test_cg_textbook_pair_entries():
    assert cg(HALF, 1, HALF, 1, MultipletLabel(2, 2)) == 1.0
    assert cg(HALF, -1, HALF, 1, MultipletLabel(0, 0)) == pytest.approx(-SQ2, abs=1e-15)
    assert cg(HALF, -1, HALF, 1, MultipletLabel(2, 2)) == 0.0


def test_cg_racah_cross_check_value():
    # <1 1; 1 -1 | 0 0> = 1/sqrt(3), cross-checked against the ladder oracle
    got = cg(ONE, 2, ONE, -2, MultipletLabel(0, 0))
    assert got == pytest.approx(1.0 / np.sqrt(3.0), abs=1e-14)


def test_cg_selection_rules():
    assert cg(HALF, 1, HALF, -1, MultipletLabel(2, 2)) == 0.0  # m1+m2 != M
    assert cg(HALF, 1, HALF, 1, MultipletLabel(4, 4)) == 0.0  # J > j1+j2
    assert cg(ONE, 2, SpinLabel(4), -2, MultipletLabel(0, 0)) == 0.0  # J < |j1-j2|


def test_stretched_state_exactly_one():
    for tj1 in range(0, 9):
        for tj2 in range(0, 9):
            top = MultipletLabel(tj1 + tj2, tj1 + tj2)
            assert cg(SpinLabel(tj1), tj1, SpinLabel(tj2), tj2, top) == 1.0


def test_cg_invalid_labels():
    with pytest.raises(InvalidLabelError):
        cg(HALF, 0, HALF, 1, MultipletLabel(2, 2))  # parity mismatch
    with pytest.raises(InvalidLabelError):
        cg(HALF, 3, HALF, -1, MultipletLabel(2, 2))  # |m| > j
    with pytest.raises(InvalidLabelError):
        MultipletLabel(2, 3)
    with pytest.raises(InvalidLabelError):
        MultipletLabel(2, -4)
    with pytest.raises(InvalidLabelError):
        SpinLabel(-1)
    with pytest.raises(InvalidLabelError):
        SpinLabel(18)  # beyond the supported j range


def test_orthogonality_and_completeness():
    labels = [SpinLabel(t) for t in range(0, 5)]
    for j1 in labels:
        for j2 in labels:
            pairs = [(m1, m2) for m1 in j1.twice_m_values() for m2 in j2.twice_m_values()]
            targets = [
                MultipletLabel(s.twice_j, tm)
                for s in multiplet_content(j1, j2)
                for tm in s.twice_m_values()
            ]
            table = np.array([
                [cg(j1, m1, j2, m2, t) for t in targets] for (m1, m2) in pairs
            ])
            gram = table.T @ table  # orthogonality over (m1, m2)
            comp = table @ table.T  # completeness over (J, M)
            assert np.max(np.abs(gram - np.eye(len(targets)))) < 1e-12
            assert np.max(np.abs(comp - np.eye(len(pairs)))) < 1e-12


def test_multiplet_content_examples():
    assert [s.twice_j for s in multiplet_content(HALF, HALF)] == [2, 0]
    assert [s.twice_j for s in multiplet_content(ONE, ONE)] == [4, 2, 0]
    assert [s.twice_j for s in multiplet_content(ONE, SpinLabel(0))] == [2]


def test_multiplet_content_dimension_sum():
    for tj1 in range(0, 5):
        for tj2 in range(0, 5):
            content = multiplet_content(SpinLabel(tj1), SpinLabel(tj2))
            assert sum(s.multiplicity for s in content) == (tj1 + 1) * (tj2 + 1)


def test_couple_pair_matrix_half_half_textbook_fixture():
    a = couple_pair_matrix(HALF, HALF)
    expected = np.array([
        [0.0, 1.0, 0.0, 0.0],
        [-SQ2, 0.0, SQ2, 0.0],
        [SQ2, 0.0, SQ2, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
    assert np.max(np.abs(a - expected)) < 1e-12


def test_couple_pair_matrix_trivial_cases():
    assert np.array_equal(couple_pair_matrix(HALF, SpinLabel(0)), np.eye(2))
    # stretched column of (1, 1/2): unit vector on the (m1=1, m2=+1/2) row
    a = couple_pair_matrix(ONE, HALF)
    col = a[:, -1]  # ascending ordering puts (J=3/2, M=3/2) last
    expected = np.zeros(6)
    expected[-1] = 1.0  # m1 slowest ascending puts (1, +1/2) last
    assert np.array_equal(col, expected)


def test_couple_pair_matrix_orthogonal():
    for tj1 in range(0, 5):
        for tj2 in range(0, 5):
            a = couple_pair_matrix(SpinLabel(tj1), SpinLabel(tj2))
            assert np.max(np.abs(a.T @ a - np.eye(a.shape[0]))) < 1e-12
