import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import L, poly_matrices, scalar
from rosenlin import serialize as ser
from rosenlin.constructors import PreconditionError, RecurrenceBasis, build_frobenius, monomial_cork_spec
from rosenlin.exactalg import ONE, RatFunc, UniPoly
from rosenlin.families import random_bk_spec, random_cork_spec
from rosenlin.polymat import Pencil, RatMatrix


@given(poly_matrices())
def test_poly_roundtrip(M):
    assert ser.loads(ser.dumps(M)) == M


def test_system_roundtrip():
    sm = build_frobenius(scalar(UniPoly((1, 2, 3))))
    doc = json.loads(ser.dumps(sm, role="forward"))
    assert doc["role"] == "forward" and doc["n"] == 1
    assert ser.from_doc(doc) == sm


def test_rat_and_pencil_roundtrip():
    R = RatMatrix([[RatFunc(UniPoly((1, 0, 0, 1)), L), RatFunc(ONE)]])
    assert ser.loads(ser.dumps(R)) == R
    P = Pencil([[1, 2]], [[0, Fraction(1, 3)]])
    assert ser.loads(ser.dumps(P)) == P


def test_rationals_are_exact_strings():
    assert ser.enc_q(Fraction(-7, 3)) == ["-7", "3"]
    assert ser.dec_q(["10000000000000000000001", "3"]) == Fraction(10 ** 22 + 1, 3)
    for bad in ([1, 0], 0.5, ["a", "1"], [True, 1], None):
        with pytest.raises(ser.ParseError):
            ser.dec_q(bad)


def test_family_roundtrips():
    rng = random.Random(5)
    specs = [("cork", random_cork_spec(rng, 2, 1, 3)), ("cork", monomial_cork_spec(scalar(UniPoly((1, 0, 1))))),
             ("blockkron", random_bk_spec(rng)), ("extblockkron", random_bk_spec(rng, extended=True))]
    for fam, data in specs:
        back = ser.from_doc(json.loads(json.dumps(ser.family_doc(fam, data))))
        assert back.family == fam
        assert ser.family_doc(fam, back.data) == ser.family_doc(fam, data)
    cheb = RecurrenceBasis.chebyshev(3)
    coeffs = [((Fraction(1),),), ((Fraction(0),),), ((Fraction(2),),)]
    back = ser.from_doc(ser.family_doc("comrade", (coeffs, cheb)))
    assert back.data[1].alphas == cheb.alphas


def test_structural_errors():
    cases = [
        {"kind": "nope"},
        {"kind": "poly_matrix", "rows": 1, "cols": 1},
        {"kind": "poly_matrix", "rows": 1, "cols": 1, "coeffs": [[["1", "1"], ["2", "1"]]]},
        {"kind": "pencil", "rows": 1, "cols": 1, "coeffs": [[[["1", "1"]]]]},
        {"kind": "system_matrix", "rows": 1, "cols": 1, "coeffs": [[[["0", "1"]]], [[["0", "1"]]]],
         "state_rows": [0], "state_cols": [0]},
        {"kind": "system_matrix", "rows": 2, "cols": 2, "coeffs": [[[["1", "1"], ["0", "1"]], [["0", "1"], ["1", "1"]]]],
         "state_rows": [0], "state_cols": [0], "n": 2},
        [1, 2],
    ]
    for doc in cases:
        with pytest.raises(ser.ParseError):
            ser.from_doc(doc)


def test_bad_json():
    with pytest.raises(ser.ParseError):
        ser.loads("{not json")


def test_precondition_passes_through():
    doc = ser.family_doc("frobenius", scalar(UniPoly((1, 1))))
    back = ser.from_doc(doc)
    with pytest.raises(PreconditionError):
        build_frobenius(back.data)


json_values = st.recursive(
    st.none() | st.booleans() | st.integers(-3, 3) | st.floats(allow_nan=False) | st.text(max_size=3),
    lambda inner: st.lists(inner, max_size=3) | st.dictionaries(st.text(max_size=6), inner, max_size=3),
    max_leaves=12)


@st.composite
def mutated_docs(draw):
    base = json.loads(ser.dumps(build_frobenius(scalar(UniPoly((1, 2, 3))))))
    if draw(st.booleans()):
        base = json.loads(ser.dumps(RatMatrix([[RatFunc(ONE, L)]])))
    key = draw(st.sampled_from(sorted(base)))
    if draw(st.booleans()):
        del base[key]
    else:
        base[key] = draw(json_values)
    return base


@given(mutated_docs())
def test_fuzzed_documents_only_raise_parse_errors(doc):
    try:
        ser.from_doc(doc)
    except (ser.ParseError, PreconditionError):
        pass


@given(json_values)
def test_arbitrary_json_only_raises_parse_errors(doc):
    try:
        ser.from_doc(doc)
    except (ser.ParseError, PreconditionError):
        pass
