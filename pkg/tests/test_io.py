import json

import pytest

from tutteconv import io as mio
from tutteconv import matroid as mt
from tutteconv.matroid import BasesSpec, GF2Spec, GraphicSpec, UniformSpec

SPECS = [
    UniformSpec(2, 4),
    GraphicSpec(3, ((0, 1), (1, 2), (2, 0))),
    GF2Spec(((1, 0, 1), (0, 1, 1))),
    BasesSpec(2, ((0,), (1,))),
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: type(s).__name__)
def test_round_trip(spec, tmp_path):
    path = tmp_path / "m.json"
    mio.save_spec(spec, path)
    assert mio.load_spec(path) == spec
    assert mio.load_matroid(path) == mt.build(spec)


def test_file_keys_are_exact(tmp_path):
    path = tmp_path / "g.json"
    mio.save_spec(SPECS[1], path)
    assert json.loads(path.read_text()) == {"type": "graphic", "vertices": 3,
                                            "edges": [[0, 1], [1, 2], [2, 0]]}


@pytest.mark.parametrize("doc", [
    [],
    {"type": "uniform", "rank": "2", "size": 4},
    {"type": "uniform", "rank": True, "size": 4},
    {"type": "graphic", "vertices": 3, "edges": [[0, 1, 2]]},
    {"type": "gf2", "matrix": [[1, 0], "01"]},
    {"type": "bases", "size": 2},
    {"rank": 1},
])
def test_malformed(doc):
    with pytest.raises(mio.ParseError):
        mio.spec_from_dict(doc)


def test_invalid_spec_becomes_parse_error(tmp_path):
    path = tmp_path / "b.json"
    path.write_text(json.dumps({"type": "bases", "size": 4, "bases": [[0, 1], [2, 3]]}))
    with pytest.raises(mio.ParseError):
        mio.load_matroid(path)
