"""Tests for the JSON interchange format."""

from __future__ import annotations

import json

import pytest

from tanglekit.diagram import build as B
from tanglekit.errors import PerfectMatchingError, SchemaError
from tanglekit.jsonio import diagram_from_json, diagram_to_dict, diagram_to_json
from tanglekit.testkit import GenConfig, gen_ball, gen_link, gen_punctured, gen_spherical


def test_t1_serialization():
    expect = {
        "crossings": 0,
        "arcs": [[["b", 0, "NW"], ["b", 0, "SW"]], [["b", 0, "NE"], ["b", 0, "SE"]]],
        "free_loops": 0,
        "boundaries": 1,
    }
    assert json.loads(diagram_to_json(B.fundamental_tangle(1))) == expect


def test_round_trip_generated():
    for seed in range(125):
        cfg = GenConfig(seed=seed, max_crossings=10)
        for d in (gen_ball(cfg), gen_spherical(cfg), gen_punctured(cfg, 2), gen_link(cfg)):
            back = diagram_from_json(diagram_to_json(d))
            assert back == d
            assert not back.planarity_verified


def test_port_reuse_rejected():
    obj = diagram_to_dict(B.fundamental_tangle(1))
    obj["arcs"][1][0] = ["b", 0, "NW"]
    with pytest.raises(PerfectMatchingError):
        diagram_from_json(json.dumps(obj))


def test_schema_errors():
    with pytest.raises(SchemaError):
        diagram_from_json("{")
    with pytest.raises(SchemaError):
        diagram_from_json('{"crossings": 0}')
    obj = diagram_to_dict(B.htwist(1))
    obj["arcs"][0][0] = ["q", 0, 0]
    with pytest.raises(SchemaError):
        diagram_from_json(json.dumps(obj))
    obj = diagram_to_dict(B.htwist(1))
    obj["extra"] = 1
    with pytest.raises(SchemaError):
        diagram_from_json(json.dumps(obj))
