"""Polynomial arithmetic, rational interpolation, and the reconstructed
integer-polynomial eigenvectors for small chains."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xyzchain import polyalg, polyvec
from xyzchain.solver import collect_samples

coeff = st.fractions(min_value=-9, max_value=9, max_denominator=6)
polys = st.lists(coeff, max_size=6)


@given(polys, polys)
def test_mul_degree_and_commutativity(a, b):
    assert polyalg.mul(a, b) == polyalg.mul(b, a)
    da, db = polyalg.degree(a), polyalg.degree(b)
    dp = polyalg.degree(polyalg.mul(a, b))
    if da < 0 or db < 0:
        assert dp < 0
    else:
        assert dp == da + db


@given(polys, polys)
def test_divmod_round_trip(a, b):
    if polyalg.degree(b) < 0:
        return
    q, r = polyalg.divmod_poly(a, b)
    assert polyalg.add(polyalg.mul(q, b), r) == polyalg.trim(a)
    assert polyalg.degree(r) < polyalg.degree(b)


@given(polys)
def test_interpolation_recovers_polynomial(p):
    xs = [Fraction(i) for i in range(len(p) + 1)]
    ys = [polyalg.evaluate(p, x) for x in xs]
    assert polyalg.interpolate(xs, ys) == polyalg.trim(p)


@given(polys, polys)
@settings(max_examples=40)
def test_rational_interpolation_recovers_ratio(num, den):
    num, den = polyalg.trim(num), polyalg.trim(den)
    if polyalg.degree(den) < 0 or polyalg.degree(num) < 0:
        return
    dn, dd = polyalg.degree(num), polyalg.degree(den)
    xs, ys = [], []
    x = Fraction(0)
    while len(xs) < dn + dd + 2:
        if polyalg.evaluate(den, x) != 0:
            xs.append(x)
            ys.append(polyalg.evaluate(num, x) / polyalg.evaluate(den, x))
        x += 1
    res = polyalg.rational_interpolate(xs, ys, dn, dd)
    assert res is not None
    got_num, got_den = res
    # same rational function: cross-multiplied polynomial identity
    assert polyalg.mul(num, got_den) == polyalg.mul(got_num, den)


def test_moebius_numerator_involution():
    """The substitution t -> (t+3)/(t-1) is an involution, so applying the
    numerator transform twice returns 4^bound times the original."""
    p = [Fraction(3), Fraction(-1), Fraction(2)]
    bound = 2
    once = polyalg.mobius_numerator(p, bound)
    twice = polyalg.mobius_numerator(once, bound)
    assert twice == polyalg.scale(p, Fraction(4) ** bound)


@pytest.mark.parametrize("n,expected", [(1, 0), (3, 1), (5, 3), (7, 6),
                                        (9, 10), (11, 15), (13, 21)])
def test_degree_bound_table(n, expected):
    assert polyvec.degree_bound(n) == expected


KNOWN_COMPONENTS = {
    1: {"-": [1]},
    3: {"---": [0, 1], "-++": [1]},
    5: {"-----": [0, 1, 0, 1], "---++": [1, 0, 1],
        "--+-+": [2], "-++++": [0, 2]},
    7: {"-------": [0, 0, 4, 0, 3, 0, 1],
        "-----++": [0, 4, 0, 3, 0, 1],
        "----+-+": [0, 7, 0, 1],
        "---+--+": [0, 7, 0, 1],
        "---++++": [1, 0, 5, 0, 2],
        "--+-+++": [3, 0, 5],
        "--++-++": [4, 0, 3, 0, 1],
        "--+++-+": [3, 0, 5],
        "-+-+-++": [7, 0, 1],
        "-++++++": [0, 3, 0, 5]},
}


def compute(n, jobs=1):
    vec, _ = polyvec.compute_ground_state(n, jobs=jobs)
    return vec


@pytest.mark.parametrize("n", sorted(KNOWN_COMPONENTS))
def test_small_chain_component_tables(n):
    vec = compute(n)
    got = {str(polyvec.state_string(rep, n)): p
           for (rep, _), p in zip(vec.orbits, vec.entries)}
    assert got == KNOWN_COMPONENTS[n]


def test_reconstruction_rejects_too_few_samples():
    samples, _ = collect_samples(5, "even", 3)
    with pytest.raises(ValueError):
        polyvec.reconstruct(samples, 5)


def test_reconstruction_detects_corrupted_sample():
    samples, _ = collect_samples(5, "even", polyvec.samples_needed(5))
    bad = samples[2]
    bad.components[1] += 1
    with pytest.raises(ValueError):
        polyvec.reconstruct(samples, 5)


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_conjecture_suite_small(n):
    vec = compute(n)
    for report in polyvec.verify_conjectures(vec):
        assert report.ok, (report.name, report.details)


def test_eigen_identity_catches_tampering():
    vec = compute(5)
    vec.entries[2][0] += 1
    assert not polyvec.verify_eigen_identity(vec).ok


def test_save_load_round_trip(tmp_path):
    vec = compute(7)
    path = tmp_path / "vec.json"
    polyvec.save(vec, path, provenance={"sample_points": ["2"]})
    back = polyvec.load(path)
    assert back == vec
    # byte-exact determinism of the serialization itself
    path2 = tmp_path / "vec2.json"
    polyvec.save(vec, path2, provenance={"sample_points": ["2"]})
    assert path.read_bytes() == path2.read_bytes()


def test_load_rejects_unknown_schema(tmp_path):
    vec = compute(3)
    doc = polyvec.to_document(vec)
    doc["schema"] = "something-else/9"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(ValueError):
        polyvec.load(path)


def test_evaluate_sectors_are_disjoint():
    vec = compute(5)
    even = polyvec.evaluate(vec, Fraction(2), "even")
    odd = polyvec.evaluate(vec, Fraction(2), "odd")
    both = polyvec.evaluate(vec, Fraction(2), "both")
    assert all(e == 0 or o == 0 for e, o in zip(even, odd))
    assert both == [e + o for e, o in zip(even, odd)]
