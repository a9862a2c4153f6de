import random

import pytest

from conftest import random_quaternion, random_valid_triple
from gmonogenic import (LAPLACE_T0, ExpScaled, GMonogenicMap, IjkQuaternion,
                        LinearCombination, Polynomial, PowerSeries,
                        QuaternionSeries, Side, example5, laplace3d)
from gmonogenic.jsonio import (FormatError, function_from_json,
                               function_to_json, map_from_json, map_to_json,
                               operator_from_json, operator_to_json,
                               point_from_json, quaternion_from_json,
                               quaternion_to_json, series_from_json,
                               series_to_json, triple_from_json,
                               triple_to_json)


class TestQuaternionCodec:
    def test_round_trip(self):
        rng = random.Random(71)
        q = random_quaternion(rng)
        assert quaternion_from_json(quaternion_to_json(q)) == q

    def test_ijk_encoding(self):
        q = IjkQuaternion(1, 0, 0, 0)
        decoded = quaternion_from_json(quaternion_to_json(q))
        assert decoded == q.to_quaternion()
        assert quaternion_to_json(q) == \
            {"ijk": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]}

    def test_explicit_payload(self):
        q = quaternion_from_json({"e": [[1, 0], [0, 2], [0, 0], [-1, 0]]})
        assert q.coefficients == (1, 2j, 0, -1)

    @pytest.mark.parametrize("payload", [
        [], {"e": [[1, 0]]}, {"q": []}, {"e": [[1], [2], [3], [4]]},
    ])
    def test_malformed(self, payload):
        with pytest.raises(FormatError):
            quaternion_from_json(payload)


class TestTripleCodec:
    def test_round_trip(self):
        rng = random.Random(72)
        t = random_valid_triple(rng)
        assert triple_from_json(triple_to_json(t)) == t

    def test_preset_name(self):
        assert triple_from_json("laplace-t0") == LAPLACE_T0

    def test_unknown_preset(self):
        with pytest.raises(FormatError):
            triple_from_json("no-such-triple")

    def test_missing_key(self):
        with pytest.raises(FormatError):
            triple_from_json({"a1": [0, 0], "a2": [0, 1], "b1": [0, 1]})


class TestPointCodec:
    def test_valid(self):
        assert point_from_json([1, 2.5, -3]) == (1.0, 2.5, -3.0)

    def test_invalid(self):
        with pytest.raises(FormatError):
            point_from_json([1, 2])


class TestFunctionCodec:
    @pytest.mark.parametrize("fn", [
        Polynomial((1, 2j, -0.5)),
        PowerSeries(1j, (1, 0.5, 0.25), 3.0),
        ExpScaled(2, -1j),
        LinearCombination(((0.5, Polynomial((0, 1))), (1j, ExpScaled(1, 1)))),
    ])
    def test_round_trip(self, fn):
        assert function_from_json(function_to_json(fn)) == fn

    def test_tagged_shapes(self):
        assert function_to_json(Polynomial((1,)))["poly"] == [[1.0, 0.0]]
        assert "series" in function_to_json(PowerSeries(0, (1,), 1.0))
        assert "exp" in function_to_json(ExpScaled(1, 1))

    @pytest.mark.parametrize("payload", [
        {"poly": [[1, 0]], "exp": {}}, {"sin": []}, {"series": {"center": [0, 0]}},
        {"lincomb": [[1, 2, 3]]}, 42,
    ])
    def test_malformed(self, payload):
        with pytest.raises(FormatError):
            function_from_json(payload)


class TestMapAndSeriesCodec:
    def test_map_round_trip(self):
        rng = random.Random(73)
        m = GMonogenicMap(Side.LEFT, random_valid_triple(rng),
                          Polynomial((1, 2)), ExpScaled(1, 0.5),
                          Polynomial(()), Polynomial((3j,)))
        assert map_from_json(map_to_json(m)) == m

    def test_map_with_preset_triple(self):
        payload = {"side": "right", "triple": "laplace-t0",
                   "F1": {"poly": [[0, 0], [1, 0]]}, "F2": {"poly": [[0, 0], [1, 0]]},
                   "F3": {"poly": []}, "F4": {"poly": []}}
        m = map_from_json(payload)
        assert m.side is Side.RIGHT
        assert m.triple == LAPLACE_T0

    def test_bad_side(self):
        with pytest.raises(FormatError):
            map_from_json({"side": "up", "triple": "laplace-t0",
                           "F1": {"poly": []}, "F2": {"poly": []},
                           "F3": {"poly": []}, "F4": {"poly": []}})

    def test_series_round_trip(self):
        rng = random.Random(74)
        s = QuaternionSeries(Side.RIGHT, random_valid_triple(rng),
                             tuple(random_quaternion(rng) for _ in range(3)))
        assert series_from_json(series_to_json(s)) == s


class TestOperatorCodec:
    def test_round_trip(self):
        op = laplace3d()
        assert operator_from_json(operator_to_json(op)) == op

    def test_presets(self):
        assert operator_from_json("laplace3d") == laplace3d()
        assert operator_from_json("example5") == example5()

    def test_unknown_preset(self):
        with pytest.raises(FormatError):
            operator_from_json("biharmonic")

    def test_malformed_terms(self):
        with pytest.raises(FormatError):
            operator_from_json({"n": 2, "terms": [{"a": 2, "b": 0}]})
