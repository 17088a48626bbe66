import pytest
from hypothesis import given, settings, strategies as st

from chevkit.folding import closed_form_sign, delta4, folded_sign, folding_data, lift_pair, lifts
from chevkit.orientation import SignAssignment, orientation, rho, special_orientations
from chevkit.rootsys import CartanType, RootError, build_root_system

from conftest import DESK_TYPES

COVERS = {"B4": ("D5", 2), "C3": ("A5", 2), "F4": ("E6", 2), "G2": ("D4", 3), "E6": ("E6", 1), "A3": ("A3", 1)}


@pytest.mark.parametrize("name", sorted(COVERS))
def test_cover_type_and_order(name):
    rs = build_root_system(name)
    fd = folding_data(name, orientation(rs, "plus"))
    cover, e = COVERS[name]
    assert str(fd.source.ctype) == cover
    assert fd.e == e


@pytest.mark.parametrize("name", ["A4", "D5", "E7"])
def test_simply_laced_cover_is_identity(name):
    rs = build_root_system(name)
    fd = folding_data(name, orientation(rs, "plus"))
    assert fd.tau == fd.eta == tuple(range(rs.rank))
    for a, b in rs.composable_pairs():
        assert lift_pair(fd, a, b) == lifts(fd, a, b)[0]
        assert lifts(fd, a, b)[0].alpha_src == a and lifts(fd, a, b)[0].beta_src == b


@pytest.mark.parametrize("r", [2, 3, 5])
def test_b_fibre_sizes(r):
    rs = build_root_system(f"B{r}")
    fd = folding_data(rs.ctype, orientation(rs, "plus"))
    for a in rs.roots:
        assert len(fd.fibre(a)) == (2 if abs(a[0]) == 1 else 1)
    assert set(fd.fibre(rs.simple_roots[0])) == {fd.source.simple_roots[0], fd.source.simple_roots[1]}


@pytest.mark.parametrize("r", [2, 3, 4, 6])
def test_c_long_roots_lift_to_central_intervals(r):
    rs = build_root_system(f"C{r}")
    fd = folding_data(rs.ctype, orientation(rs, "plus"))
    n = 2 * r - 1
    for j in range(1, r + 1):
        gamma = tuple(0 if k < j - 1 else (2 if k < r - 1 else 1) for k in range(r))
        lift = tuple(1 if j - 1 <= k <= n - j else 0 for k in range(n))
        assert fd.project(lift) == gamma
        assert fd.fibre(gamma) == (lift,)


def test_c_case_two_lift_is_in_s():
    r = 4
    rs = build_root_system(f"C{r}")
    fd = folding_data(rs.ctype, orientation(rs, "plus"))
    n = 2 * r - 1
    interval = lambda i, j: tuple(1 if i - 1 <= k < j - 1 else 0 for k in range(n))  # noqa: E731
    # alpha_{13} = a1 + a2, gamma_{34} = a3 + gamma_4
    a, b = (1, 1, 0, 0), (0, 0, 1, 1)
    pair = (interval(1, 3), interval(3, 2 * r - 4 + 1))
    assert (pair[0], pair[1]) in {(p.alpha_src, p.beta_src) for p in lifts(fd, a, b)}


def test_lift_pair_rejects_non_composable():
    rs = build_root_system("F4")
    fd = folding_data(rs.ctype, orientation(rs, "plus"))
    with pytest.raises(RootError):
        lift_pair(fd, (1, 0, 0, 0), (0, 0, 1, 0))


@pytest.mark.parametrize("name", DESK_TYPES)
def test_folded_equals_closed_form(name):
    rs = build_root_system(name)
    for signs in special_orientations(rs):
        fd = folding_data(name, signs)
        for a, b in rs.composable_pairs():
            assert folded_sign(fd, a, b) == closed_form_sign(rs, signs, a, b)


def test_frozen_signs():
    f4 = build_root_system("F4")
    f4_signs = SignAssignment((-1, 1, -1, 1))
    assert folded_sign(folding_data("F4", f4_signs), (0, 0, 1, 0), (0, 0, 0, 1)) == -1
    assert closed_form_sign(f4, f4_signs, (0, 0, 1, 1), (0, 1, 1, 1)) == -1
    assert rho(f4, f4_signs, (0, 0, 1, 1), (0, 1, 1, 1)) == -3
    c4 = build_root_system("C4")
    plus = orientation(c4, "plus")
    assert folded_sign(folding_data("C4", plus), (1, 0, 0, 0), (0, 1, 0, 0)) == 1
    assert closed_form_sign(c4, plus, (0, 1, 0, 0), (0, 1, 2, 1)) == -1


def test_delta4_values():
    assert [delta4(n) for n in range(-4, 5)] == [1, -1, -1, 1, 1, -1, -1, 1, 1]


@pytest.mark.parametrize("r", range(2, 7))
def test_b_rho_even_on_all_root_pairs(r):
    rs = build_root_system(f"B{r}")
    for signs in special_orientations(rs):
        assert all(rho(rs, signs, a, b) % 2 == 0 for a in rs.roots for b in rs.roots)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(["B3", "C3", "C4", "F4", "G2"]), st.booleans(), st.data())
def test_cover_sign_constant_on_lift_set(name, flip, data):
    rs = build_root_system(name)
    signs = orientation(rs, "minus" if flip else "plus")
    fd = folding_data(name, signs)
    a, b = data.draw(st.sampled_from(list(rs.composable_pairs())))
    vals = {fd.eps0(p.alpha_src, p.beta_src) for p in lifts(fd, a, b)}
    assert len(vals) == 1
    for p in lifts(fd, a, b):
        assert fd.project(p.alpha_src) == a and fd.project(p.beta_src) == b
        assert fd.tau_root(p.alpha_src) in fd.fibre(a)
