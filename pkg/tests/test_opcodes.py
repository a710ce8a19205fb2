"""Each instruction against wasmtime, with constant and with symbolic operands."""

import pytest

import opcode_harness as H
from symwasm.binary import opcodes as oc


@pytest.mark.parametrize("code", H.NUMERIC, ids=[oc.OPCODES[c].name for c in H.NUMERIC])
def test_numeric_opcode(code):
    report = H.Report()
    H.exercise_numeric(code, report)
    assert not report.mismatches
    assert not report.stack_errors
    assert code in report.concrete_ops
    assert code in report.symbolic_ops
    assert report.checked > 0


@pytest.mark.parametrize("factory", H.CONTROL_CASES, ids=[f.__name__[6:] for f in H.CONTROL_CASES])
def test_control_case(factory):
    report = H.Report()
    H.exercise_control(factory, report)
    assert not report.mismatches
    assert report.checked > 0
