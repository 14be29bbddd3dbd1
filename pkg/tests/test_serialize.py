import math

import numpy as np
import pytest

import gen
from lpsums import components as C
from lpsums import serialize as ser
from lpsums import sums as S
from lpsums.errors import ValidationError


def test_dumps_formats():
    assert ser.dumps({"a": 1, "b": True, "c": None}) == '{"a": 1, "b": true, "c": null}'
    assert ser.dumps(5.0) == "5"
    assert ser.dumps(0.1) == "0.10000000000000001"
    assert ser.dumps([1.5, "x"]) == '[1.5, "x"]'
    with pytest.raises(ValidationError):
        ser.dumps(float("nan"))
    with pytest.raises(ValidationError):
        ser.dumps(object())


def test_dumps_17_digit_round_trip():
    import json
    rng = np.random.default_rng(8)
    values = list(rng.normal(size=200) * 10.0 ** rng.integers(-8, 8, size=200))
    text = ser.dumps(values)
    assert json.loads(text) == values  # 17 significant digits round-trip


def test_component_space_round_trip():
    rng = np.random.default_rng(11)
    for _ in range(30):
        space = gen.random_component(rng)
        back = ser.component_space_from_jsonable(ser.component_space_to_jsonable(space))
        assert back.kind == space.kind and back.dim == space.dim
        if space.kind == "lr":
            assert back.r == space.r
        if space.kind == "polygon":
            np.testing.assert_allclose(back.vertices, space.vertices)


def test_sum_space_round_trip():
    rng = np.random.default_rng(13)
    for k in range(20):
        p = (0.0, 1.0, 1.5, 2.0, 3.0)[k % 5]
        space = gen.random_sum_space(rng, p)
        back = ser.sum_space_from_jsonable(ser.sum_space_to_jsonable(space))
        assert back.p == space.p
        assert len(back.components) == len(space.components)
    # the sup-norm dual container uses the string "inf"
    dual = S.dual_sum_space(S.sum_space(1, [C.linf(2)]))
    data = ser.sum_space_to_jsonable(dual)
    assert data["p"] == "inf"
    assert ser.sum_space_from_jsonable(data).p == math.inf


def test_vector_round_trip():
    x = S.sum_vector({1: [0.125, -3.0], 4: [2.5]})
    data = ser.vector_to_jsonable(x)
    back = ser.vector_from_jsonable(data)
    assert [(i, list(v)) for i, v in back.entries] == [(i, list(v)) for i, v in x.entries]


def test_validation_errors():
    with pytest.raises(ValidationError):
        ser.component_space_from_jsonable({"kind": "mystery", "dim": 2})
    with pytest.raises(ValidationError):
        ser.component_space_from_jsonable({"kind": "lr", "dim": 2})
    with pytest.raises(ValidationError):
        ser.sum_space_from_jsonable({"p": "two", "components": []})
    with pytest.raises(ValidationError):
        ser.sum_space_from_jsonable({"p": 2, "components": []})
    with pytest.raises(ValidationError):
        ser.vector_from_jsonable({"entries": [{"index": 1.5, "coords": [1]}]})
    with pytest.raises(ValidationError):
        ser.vector_from_jsonable({"entries": [{"index": 2, "coords": [1]},
                                              {"index": 1, "coords": [1]}]})


def test_support_set_jsonable():
    X = S.sum_space(1, [C.euclidean(2), C.euclidean(2)])
    sset = S.support_functionals(X, S.sum_vector({1: [1, 0]}))
    data = ser.support_set_to_jsonable(sset)
    assert data["free_indices"] == [2]
    assert data["parts"][0]["singleton"] is True
