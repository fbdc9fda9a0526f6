""" Tests for the command line interface and the figures, see fundom.cli.

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.


import json
import pathlib
import re

import matplotlib.pyplot as plt
import pytest

from .cli import SCHEMA_VERSION, configurations, main
from .family import regular_family
from .figures import FIGURES, _region_boundaries, symbolic_vertex
from .weyl import RootValuation, WeylElem

DATA = pathlib.Path(__file__).parent / "test_data"


def _run(capsys, argv):
    status = main(argv)
    out = capsys.readouterr().out
    return status, out


def _json(capsys, argv):
    status, out = _run(capsys, argv)
    return status, json.loads(out)


def _exit_code(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    return info.value.code


# ==============================================================================
# Commands
# ==============================================================================

def test_poincare_both(capsys):
    status, doc = _json(capsys, ["poincare", "1", "1", "--mode", "both"])
    assert status == 0
    assert doc["schema_version"] == SCHEMA_VERSION
    payload = doc["payload"]
    assert payload["equal"] is True
    assert payload["closed"]["t"] == [1, 0, 1, 0, 4, 0, 1]
    assert payload["pipeline"]["total"] == payload["closed"]
    assert payload["closed"]["text"] == "1 + t^2 + 4t^4 + t^6"
    assert doc["metadata"]["sign_zero"] == 1
    assert doc["metadata"]["v_priority"] == "V1"


def test_poincare_symmetry(capsys):
    _, swapped = _json(capsys, ["poincare", "2", "1"])
    _, direct = _json(capsys, ["poincare", "1", "2"])
    assert swapped["metadata"]["swapped"] is True
    assert direct["metadata"]["swapped"] is False
    assert swapped["payload"]["closed"] == direct["payload"]["closed"]
    assert direct["payload"]["pipeline"]["triangle"]["q"] == [1, 1, 5, 7, 1]
    assert direct["payload"]["pipeline"]["complement"]["q"] == [0, 0, 2, 3]


@pytest.mark.parametrize("argv", [
    ["poincare", "0", "1"],
    ["poincare", "1"],
    ["poincare", "1", "x"],
    ["series", "0"],
    ["series", "1"],
    ["vertices", "1", "1", "1", "1", "1", "1"],
    ["fixed-points", "2", "1"],
    ["svg", "circle", "1", "1", "out.svg"],
    ["--format", "xml", "poincare", "1", "1"],
])
def test_invalid_arguments(argv):
    assert _exit_code(argv) == 2


def test_fixed_points(capsys):
    _, doc = _json(capsys, ["fixed-points", "1", "1"])
    assert doc["payload"]["count"] == 7
    points = [p["point"] for p in doc["payload"]["points"]]
    assert points == sorted(points)

    _, doc = _json(capsys, ["fixed-points", "1", "2", "--regions", "triangle"])
    assert doc["payload"]["count"] == 15
    regions = set(p["region"] for p in doc["payload"]["points"])
    assert regions <= {'R1', 'R1p', 'R2', 'R2p', 'R3', 'R4', 'R4p'}
    outside = [p for p in doc["payload"]["points"] if p["complement"]]
    assert len(outside) == 5

    _, doc = _json(capsys, ["fixed-points", "1", "2", "--regions", "v"])
    assert doc["payload"]["count"] == 10
    assert doc["payload"]["overlap"] == []

    _, doc = _json(capsys, ["fixed-points", "1", "2", "--regions", "ak"])
    assert set(p["region"] for p in doc["payload"]["points"]) == {"Full"}
    assert doc["metadata"]["tie_scale"] > 4


def test_series(capsys):
    status, doc = _json(capsys, ["series", "4"])
    assert status == 0
    assert doc["payload"]["equal"] is True
    assert doc["payload"]["mismatch"] is None

    _, doc = _json(capsys, ["series", "2"])
    coeffs = doc["payload"]["coefficients"]
    assert [c["index"] for c in coeffs] == [[1, 1]]
    assert coeffs[0]["direct"]["t"] == [1, 0, 1, 0, 4, 0, 1]

    status, doc = _json(capsys, ["series", "5", "--form", "literal"])
    assert status == 0
    assert doc["payload"]["equal"] is True


def test_series_mismatch_exits_one(capsys, monkeypatch):
    from . import cli
    monkeypatch.setattr(cli, "symmetric_expression", cli.corollary_expression)
    status, doc = _json(capsys, ["series", "4"])
    assert status == 1
    assert doc["payload"]["mismatch"]["index"] == [1, 2]


def test_vertices(capsys):
    _, doc = _json(capsys, ["vertices", "1", "2"])
    payload = doc["payload"]
    assert payload["vertices"]["123"] == [0, 1, 3]
    assert payload["vertices"]["321"] == [2, 2, 0]
    assert payload["level"] == 4
    assert {tuple(f["block"]): f["distance"]
            for f in payload["face_distances"]}[(1,)] == "2"

    _, doc = _json(capsys, ["vertices", "1", "2", "1", "3"])
    assert len(doc["payload"]["vertices"]) == 120


def test_classify(capsys):
    _, doc = _json(capsys, ["classify", "1", "1", "10", "-4", "-3"])
    assert doc["payload"]["label"] == "Maximal({1}|{2,3})"
    assert doc["payload"]["nu"] == [10, -7]
    assert doc["payload"]["varpi"] == "9"

    _, doc = _json(capsys, ["classify", "1", "2", "2", "2", "0"])
    assert doc["payload"]["label"] == "Full"
    assert doc["metadata"]["boundary"] == "outward"


@pytest.mark.parametrize("mu", [
    ["1000", "7", "-1004"],
    ["1000000000", "7", "-999999994"],
    ["100000000000000000000", "7", "-99999999999999999994"],
])
def test_classify_large_coordinates(capsys, mu):
    status, doc = _json(capsys, ["classify", "1", "1"] + mu)
    assert status == 0
    assert doc["payload"]["label"] == "Borel(321)"
    magnitude = max(abs(int(c)) for c in mu)
    assert doc["metadata"]["tie_scale"] == 6 * (magnitude + 1)


def test_classify_failure(monkeypatch, capsys):
    from . import cli
    from .util import ClassificationError

    def fail(*args, **kwargs):
        raise ClassificationError("no region")

    monkeypatch.setattr(cli, "ak_classify", fail)
    assert main(["classify", "1", "1", "1", "1", "1"]) == 1
    assert "ClassificationError" in capsys.readouterr().err


def test_strata_csv(capsys):
    status, out = _run(capsys, ["--format", "csv", "strata", "1", "1",
                                "--bound", "4"])
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "mu1,mu2,mu3,label,nu,varpi"
    assert lines[1].split(",")[3] == "Full"
    assert len(lines) == 1 + 52


def test_table_format(capsys):
    status, out = _run(capsys, ["--format", "table", "poincare", "1", "2"])
    assert status == 0
    assert "degree_t" in out
    assert "closed" in out


def test_out_file(tmp_path, capsys):
    path = tmp_path / "p.json"
    assert main(["--out", str(path), "poincare", "1", "2"]) == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(path.read_text())
    assert doc["payload"]["closed"]["q"] == [1, 1, 3, 4, 1]


def test_verbosity(capsys, monkeypatch):
    monkeypatch.setenv("FUNDOM_VERBOSE", "1")
    main(["poincare", "1", "1"])
    assert "configuration of poincare" in capsys.readouterr().err
    monkeypatch.setenv("FUNDOM_VERBOSE", "7")
    assert _exit_code(["poincare", "1", "1"]) == 2


def test_configurations():
    conf = configurations(mode="closed")
    assert conf.mode == "closed"
    assert conf.format == "json"
    assert "mode = 'closed'" in str(conf)
    with pytest.raises(ValueError):
        configurations(colour=True)


# ==============================================================================
# Determinism
# ==============================================================================

@pytest.mark.parametrize("argv", [
    ["poincare", "1", "2", "--mode", "both"],
    ["fixed-points", "1", "1"],
    ["series", "4"],
    ["--format", "csv", "strata", "1", "2"],
])
def test_output_is_deterministic(capsys, argv):
    _, first = _run(capsys, argv)
    _, second = _run(capsys, argv)
    assert first == second


@pytest.mark.parametrize("argv", [
    ["poincare", "3", "5", "--mode", "both"],
    ["fixed-points", "2", "3", "--regions", "v"],
    ["series", "3", "--form", "literal"],
    ["classify", "2", "3", "9", "-1", "-1"],
])
def test_payload_recomputes_from_echo(capsys, argv):
    _, doc = _json(capsys, argv)
    cmd = doc["command"]
    echo = [cmd["name"]]
    for key in ("n1", "n2", "order"):
        if key in cmd:
            echo.append(str(cmd[key]))
    echo.extend(str(c) for c in cmd.get("mu", []))
    for key in ("mode", "regions", "form"):
        if key in cmd:
            echo.extend(["--" + key, cmd[key]])
    _, again = _json(capsys, echo)
    assert again == doc


# ==============================================================================
# Golden files
# ==============================================================================

@pytest.mark.parametrize("argv, name", [
    (["poincare", "1", "2", "--mode", "both"], "poincare_1_2_both.json"),
    (["--format", "csv", "poincare", "1", "2"], "poincare_1_2_both.csv"),
    (["fixed-points", "1", "1"], "fixed_points_1_1.json"),
    (["series", "4"], "series_4.json"),
])
def test_output_matches_golden_file(capsys, argv, name):
    status, out = _run(capsys, argv)
    assert status == 0
    assert out.encode() == (DATA / name).read_bytes()


def test_svg_text_matches_golden_file(tmp_path, capsys):
    path = tmp_path / "hexagon.svg"
    assert main(["svg", "hexagon", "1", "2", str(path)]) == 0
    texts = re.findall(r"<text\b[^>]*>([^<]*)</text>", path.read_text())
    expected = (DATA / "svg_hexagon_1_2.txt").read_text().splitlines()
    assert sorted(texts) == sorted(expected)


# ==============================================================================
# Figures
# ==============================================================================

@pytest.mark.parametrize("figure", FIGURES)
def test_svg_is_deterministic(tmp_path, capsys, figure):
    first = tmp_path / "a.svg"
    second = tmp_path / "b.svg"
    assert main(["svg", figure, "1", "2", str(first)]) == 0
    assert main(["svg", figure, "1", "2", str(second)]) == 0
    capsys.readouterr()
    data = first.read_bytes()
    assert data == second.read_bytes()
    assert b"<svg" in data


def test_svg_write_error(tmp_path, capsys):
    path = tmp_path / "missing" / "out.svg"
    assert main(["svg", "hexagon", "1", "2", str(path)]) == 1


def test_hexagon_labels(tmp_path, capsys):
    path = tmp_path / "hexagon.svg"
    main(["svg", "hexagon", "1", "2", str(path)])
    text = path.read_text()
    for label in ["(2n1, n2, 0)", "(n1, n1+n2, 0)", "(0, n1+n2, n1)",
                  "(0, n1, n1+n2)", "(n1, 0, n1+n2)", "(2n1, 0, n2)"]:
        assert label in text


def test_symbolic_vertex():
    assert symbolic_vertex(WeylElem((1, 2, 3))) == "(0, n1, n1+n2)"
    assert symbolic_vertex(WeylElem((3, 2, 1))) == "(2n1, n2, 0)"


def test_partition_walls():
    fig, ax = plt.subplots()
    try:
        _region_boundaries(ax, regular_family(RootValuation((1, 2))), 4)
        assert len(ax.lines) == 12
    finally:
        plt.close(fig)
