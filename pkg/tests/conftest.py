import io
import json
from pathlib import Path

import pytest

from gausschain.cli import run

SCHEMA_PATH = Path(__file__).resolve().parents[1] / "schema" / "output_record.schema.json"


@pytest.fixture(scope="session")
def record_validator():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA_PATH.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


@pytest.fixture
def cli():
    """Run the CLI in-process; returns (exit status, stdout, stderr)."""

    def invoke(*argv):
        out, err = io.StringIO(), io.StringIO()
        status = run(list(argv), out, err)
        return status, out.getvalue(), err.getvalue()

    return invoke


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, line = RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n}. {line}")
