import json

import pytest

from acta import io
from acta.congruence import all_congruences
from acta.errors import NotAssociative, ParseError
from conftest import DATA


def test_load_example_act():
    A = io.load_act(DATA / "act_ef0.json")
    assert A.names == ("e", "f", "0") and A.monoid.names == ("1", "0", "e", "f")
    assert isinstance(io.load_any(DATA / "act_ef0.json"), type(A))
    assert io.load_any(DATA / "semilattice_1oef.json").size == 4


def test_round_trips(tmp_path):
    A = io.load_act(DATA / "act_ef0.json")
    text = io.dumps(io.act_to_json(A))
    path = tmp_path / "a.json"
    path.write_text(text)
    B = io.load_act(path)
    assert B.action.tolist() == A.action.tolist() and B.names == A.names
    M = io.monoid_from_json(json.loads(io.dumps(io.monoid_to_json(A.monoid))))
    assert M.table.tolist() == A.monoid.table.tolist()
    for c in all_congruences(A):
        assert io.congruence_from_json(A, io.congruence_to_json(c)) == c


def test_dumps_layout():
    text = io.dumps({"t": [[0, 1], [1, 0]], "s": "x"})
    assert '[0, 1]' in text and text.endswith("\n")
    assert json.loads(text) == {"t": [[0, 1], [1, 0]], "s": "x"}


@pytest.mark.parametrize(
    "obj, msg",
    [
        ([1, 2], "table"),
        ({"table": [[0, 1]]}, "not 1×1"),
        ({"table": [[0, "a"], [1, 0]]}, "integers"),
        ({"table": [[0, 1], [1, 0]], "names": ["a", "a"]}, "distinct"),
        ({"table": [[0, 1], [1, 0]], "names": ["a"]}, "list of 2"),
    ],
)
def test_monoid_parse_errors(obj, msg):
    with pytest.raises(ParseError, match=msg):
        io.monoid_from_json(obj)


def test_act_parse_errors(tmp_path):
    M = io.monoid_to_json(io.load_monoid(DATA / "chain3_max.json"))
    with pytest.raises(ParseError, match="monoid"):
        io.act_from_json({"action": [[0, 0, 0]]})
    with pytest.raises(ParseError, match="m = 2"):
        io.act_from_json({"monoid": M, "m": 2, "action": [[0, 0, 0]]})
    with pytest.raises(ParseError, match="one entry per"):
        io.act_from_json({"monoid": M, "action": [[0, 0]]})
    with pytest.raises(ParseError, match="cannot read"):
        io.load_act(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(ParseError, match="invalid JSON"):
        io.load_any(bad)


def test_invalid_monoid_is_not_a_parse_error():
    with pytest.raises(NotAssociative):
        io.load_monoid(DATA / "bad_assoc.json")
