from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from effnv.discrepancy import solve_discrepancies
from effnv.dual_graph import DualGraph
from effnv.errors import HypothesisViolation
from effnv.exact_arith import ceil_rational
from effnv.riemann_roch import (
    EXCEEDS_CAP,
    SurfaceData,
    chi_anti_pluricanonical,
    chi_table,
    proof_objects,
    tau,
)


def chi_on_lattice(lab, alphas, n):
    """chi(O_Y(D~)) with D~ = -nK_Y + sum ceil((n+1) a_i) E_i, evaluated in Pic(Y).

    Independent of the dual graph: uses the blow-up classes directly and the
    smooth Riemann-Roch formula D(D - K)/2 + 1.
    """
    lattice = lab.lattice
    canon = lattice.canonical_class()
    classes = lab.by_name()
    d = [-n * k for k in canon]
    for name, a in alphas.items():
        c = ceil_rational((n + 1) * a)
        d = [x + c * y for x, y in zip(d, classes[name].coefficients)]
    return Fraction(lattice.form(d, [x - y for x, y in zip(d, canon)]), 2) + 1


def test_n_zero_gives_chi_oy(surface7):
    assert chi_anti_pluricanonical(surface7, 0) == 1
    s = SurfaceData.from_graph(DualGraph.chain([-3, -2]), ky_squared=3, chi_oy=1)
    assert chi_anti_pluricanonical(s, 0) == 1


def test_example7_table(surface7):
    assert [chi for _, chi in chi_table(surface7, 6)] == [1, 0, 0, 0, 0, 0, 1]
    assert tau(surface7, 10) == 6
    assert tau(surface7, 5) == EXCEEDS_CAP


def test_example7_matches_lattice_evaluation(surface7, lab7):
    for n in range(0, 40):
        assert chi_anti_pluricanonical(surface7, n) == chi_on_lattice(lab7, surface7.report.alphas, n)


def test_example7_correction_is_periodic(surface7):
    # chi(-nK) - n(n+1)/2 K_S^2 - 1 depends only on n mod 703
    ks2 = surface7.ks_squared
    assert ks2 == Fraction(8, 703)

    def correction(n):
        return chi_anti_pluricanonical(surface7, n) - Fraction(n * (n + 1), 2) * ks2 - 1

    for n in range(0, 30):
        assert correction(n) == correction(n + 703)


def test_example7_is_not_monotone_after_six(surface7):
    values = [chi for _, chi in chi_table(surface7, 12)]
    assert values[6:9] == [1, 1, 0]


def test_proof_objects(surface7):
    for n in range(0, 12):
        po = proof_objects(surface7, n)
        assert po.fractional_in_unit_interval
        assert po.rounded.is_integral()
    assert proof_objects(surface7, 0).rounded == {}


def test_canonical_degree_one():
    s = SurfaceData.from_graph(DualGraph.chain([-2] * 8), ky_squared=1)
    assert [chi for _, chi in chi_table(s, 5)] == [n * (n + 1) // 2 + 1 for n in range(6)]
    assert [chi for _, chi in chi_table(s, 3)] == [1, 2, 4, 7]


def test_projective_plane():
    s = SurfaceData.from_graph(DualGraph(()), ky_squared=9)
    assert chi_anti_pluricanonical(s, 1) == 10
    assert tau(s, 10) == 1


def test_single_a1_point():
    s = SurfaceData.from_graph(DualGraph((("E", -2),)), ky_squared=8)
    assert chi_anti_pluricanonical(s, 1) == 9
    assert tau(s, 10) == 1


def test_hypothesis_violation():
    with pytest.raises(HypothesisViolation):
        SurfaceData.from_graph(DualGraph((("E", -1),)), ky_squared=8)
    g = DualGraph((("a", -3), ("b", -3), ("c", -3)), {("a", "b"): 1, ("b", "c"): 1, ("a", "c"): 1})
    with pytest.raises(HypothesisViolation):
        SurfaceData.from_graph(g, ky_squared=0)


def test_tau_flags_negative_chi():
    s = SurfaceData.from_graph(DualGraph(()), ky_squared=-3)
    with pytest.raises(HypothesisViolation):
        tau(s, 5)


def test_argument_checks(surface7):
    with pytest.raises(ValueError):
        chi_anti_pluricanonical(surface7, -1)
    with pytest.raises(ValueError):
        chi_table(surface7, 0)


@st.composite
def log_terminal_surfaces(draw):
    chains = draw(st.lists(st.lists(st.integers(-6, -2), min_size=1, max_size=5), min_size=0, max_size=3))
    verts, edges = [], {}
    for ci, weights in enumerate(chains):
        names = [f"C{ci}_{k}" for k in range(len(weights))]
        verts += list(zip(names, weights))
        edges.update({(names[k], names[k + 1]): 1 for k in range(len(names) - 1)})
    g = DualGraph(tuple(verts), edges)
    return SurfaceData.from_graph(g, draw(st.integers(-10, 9)), draw(st.integers(-2, 2)))


@settings(max_examples=150, deadline=None)
@given(log_terminal_surfaces(), st.integers(0, 30))
def test_chi_is_always_integral(s, n):
    # chi_anti_pluricanonical raises InternalInconsistency on a non-integral value
    assert isinstance(chi_anti_pluricanonical(s, n), int)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.just(-2), min_size=1, max_size=6), max_size=4), st.integers(1, 9), st.integers(0, 10))
def test_canonical_inputs_reduce_to_smooth_formula(chains, ky2, n):
    verts, edges = [], {}
    for ci, weights in enumerate(chains):
        names = [f"C{ci}_{k}" for k in range(len(weights))]
        verts += list(zip(names, weights))
        edges.update({(names[k], names[k + 1]): 1 for k in range(len(names) - 1)})
    g = DualGraph(tuple(verts), edges)
    s = SurfaceData(g, solve_discrepancies(g), ky2)
    assert s.ks_squared == ky2
    assert chi_anti_pluricanonical(s, n) == n * (n + 1) // 2 * ky2 + 1
