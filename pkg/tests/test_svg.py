"""Tests for the deterministic chord-diagram renderer."""

from __future__ import annotations

import pytest

from ncpverify.apartments import NCSpanningTree
from ncpverify.chains import Chain
from ncpverify.core import Partition
from ncpverify.svg import render_svg, render_to_file


def test_render_partition_chords_and_hulls():
    svg = render_svg(Partition.from_text(7, "12,46"))
    assert svg.startswith("<svg ")
    assert svg.count("<circle ") == 1 + 7  # outline plus 7 vertex dots
    assert svg.count("<line ") == 2  # two size-2 parts
    assert svg.count("<polygon ") == 0
    svg2 = render_svg(Partition.from_text(7, "123,46"))
    assert svg2.count("<polygon ") == 1  # size-3 part becomes a hull
    assert svg2.count("<line ") == 1


def test_render_chain_one_panel_per_member():
    svg = render_svg(Chain.from_text(7, "12<12346"))
    assert svg.count('stroke="#b0b0b0"') == 2  # two member circles
    # each panel is captioned with its member's text
    assert ">12</text>" in svg
    assert ">12346</text>" in svg


def test_render_tree():
    svg = render_svg(NCSpanningTree.from_text(7, "1-2,2-3,3-4,4-5,5-6,6-7"))
    assert svg.count("<line ") == 6


def test_render_deterministic():
    obj = Chain.from_text(7, "12<12,34<123456")
    assert render_svg(obj) == render_svg(obj)


def test_render_rejects_unknown_type():
    with pytest.raises(TypeError):
        render_svg("12,46")


def test_render_to_file(tmp_path):
    out = tmp_path / "diagram.svg"
    render_to_file(Partition.from_text(7, "123,46"), str(out))
    content = out.read_text(encoding="ascii")
    assert content.startswith("<svg ")
    assert content.endswith("</svg>\n") or content.endswith("</svg>")
