import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from pairforge.catalog import STANDARD_CATALOG, catalog_pair
from pairforge.cli import main
from pairforge.errors import AxiomError, ParseError
from pairforge.fileformat import digest, parse_pair_file, serialize
from pairforge.report import REPORT_ALL

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_name(name):
    return name.replace("(", "_").replace(",", "_").replace(")", "") + ".pair"


@pytest.mark.parametrize("name", STANDARD_CATALOG)
def test_golden_fixtures(name):
    entry = catalog_pair(name)
    text = (FIXTURES / fixture_name(name)).read_text()
    assert serialize(entry.pair, entry.involution, entry.module) == text
    parsed = parse_pair_file(text)
    assert serialize(parsed.pair, parsed.involution, parsed.module) == text
    assert digest(parsed.pair, parsed.involution, parsed.module) == digest(entry.pair, entry.involution, entry.module)


@pytest.mark.parametrize("text,line,col", [
    ("pairforge-pair 1\nfield Q\ndims 1 1\nproduct + 0 0 0 0 x\n", 4, 19),
    ("pairforge-pair 1\nfield Q\ndims 1 1\nfrobnicate\n", 4, 1),
    ("pairforge-pair 1\nfield Q\ndims 1 1\nproduct + 0 0 0 0 1\nproduct + 0 0 0 0 2\n", 5, None),
    ("pairforge-pair 2\n", 1, None),
])
def test_parse_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_pair_file(text)
    assert info.value.line == line
    if col is not None:
        assert info.value.column == col


def test_bad_index_fixture():
    with pytest.raises(ParseError, match="line 5, column 13"):
        parse_pair_file((FIXTURES / "bad_index.pair").read_text())


def test_axiom_failure_names_tuple():
    with pytest.raises(AxiomError) as info:
        parse_pair_file((FIXTURES / "nonassoc.pair").read_text())
    assert "(+, 0, 0, 0, 0, 0)" in str(info.value)


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)),
                       st.fractions(min_value=-3, max_value=3, max_denominator=4), max_size=4))
def test_serialize_is_idempotent(entries):
    # random (mostly non-associative) tensors exercise the writer, not the axioms
    lines = ["pairforge-pair 1", "field Q", "dims 2 2"]
    for (i, j, k), v in sorted(entries.items()):
        lines.append(f"product - {i} {j} {k} 1 {v}")
    once = serialize(parse_pair_file("\n".join(lines) + "\n", check_axioms=False).pair)
    twice = serialize(parse_pair_file(once, check_axioms=False).pair)
    assert once == twice


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exit_codes(capsys, tmp_path):
    assert run(["validate", "--catalog", "rect(2,3)"], capsys)[0] == 0
    code, _, err = run(["validate", "--pair", str(FIXTURES / "nonassoc.pair")], capsys)
    assert code == 1 and "pair axioms fail" in err
    assert run(["validate", "--pair", str(tmp_path / "missing.pair")], capsys)[0] == 1
    code, out, _ = run(["closure", "--catalog", "split(2)"], capsys)
    assert code == 2 and "error.kind = precondition" in out
    code, out, _ = run(["identity", "--catalog", "rect(2,2)", "--standard", "4", "--budget", "10"], capsys)
    assert code == 3 and "error.kind = budget" in out
    code, out, _ = run(["identity", "--catalog", "rect(2,2)", "--standard", "3"], capsys)
    assert code == 0 and "S3 = false" in out and "S3.witness.args = (0, 1, 2)" in out


def test_report_all_sections(capsys, tmp_path):
    target = tmp_path / "r.txt"
    assert main(["report-all", "--catalog", "gauss", "--out", str(target)]) == 0
    text = target.read_text()
    assert text.startswith("pairforge-report 1\n")
    for name in REPORT_ALL:
        assert f"[{name}]" in text
    # split(2) hits preconditions in some sections but the batch still completes
    code, out, _ = run(["report-all", "--catalog", "split(2)"], capsys)
    assert code == 0 and "[martindale]" in out and "error.kind = precondition" in out


def test_pair_file_and_catalog_agree(capsys):
    _, a, _ = run(["rank", "--catalog", "rect(2,3)"], capsys)
    _, b, _ = run(["rank", "--pair", str(FIXTURES / "rect_2_3.pair")], capsys)
    body = lambda t: [l for l in t.splitlines() if not l.startswith("input =")]
    assert body(a) == body(b)


def test_subprocess_determinism():
    cmd = [sys.executable, "-m", "pairforge.cli", "report-all", "--catalog", "rect(2,2)"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd + ["--jobs", "2"], capture_output=True, text=True, check=True).stdout
    assert a == b
