import pytest
from hypothesis import given, settings, strategies as st

from rskeychain.channel import ChannelSpec, derive_seed, inject_errors, sweep_decode_failure_rate

from vectors import CODE1


def test_zero_errors_is_identity():
    out, pos = inject_errors(CODE1, ChannelSpec(errors_per_codeword=0, seed=1))
    assert out == CODE1 and pos == frozenset()


def test_full_corruption():
    out, pos = inject_errors(CODE1, ChannelSpec(errors_per_codeword=127, seed=1))
    assert pos == frozenset(range(127))
    assert all(a != b for a, b in zip(out, CODE1))
    assert all(b < 128 for b in out)


def test_deterministic():
    spec = ChannelSpec(errors_per_codeword=32, seed=12345)
    assert inject_errors(CODE1, spec) == inject_errors(CODE1, spec)
    assert inject_errors(CODE1, spec) != inject_errors(CODE1, spec.with_seed(12346))


@given(st.integers(0, 127), st.integers(0, 2**64 - 1))
def test_changes_exactly_e_positions(e, seed):
    out, pos = inject_errors(CODE1, ChannelSpec(errors_per_codeword=e, seed=seed))
    changed = {i for i, (a, b) in enumerate(zip(out, CODE1)) if a != b}
    assert changed == pos and len(pos) == e


def test_probability_mode():
    out, pos = inject_errors(CODE1, ChannelSpec(symbol_error_prob=0.0, seed=3))
    assert out == CODE1 and not pos
    out, pos = inject_errors(CODE1, ChannelSpec(symbol_error_prob=1.0, seed=3))
    assert len(pos) == 127
    _, pos = inject_errors(CODE1, ChannelSpec(symbol_error_prob=0.25, seed=3))
    assert 0 < len(pos) < 127
    assert inject_errors(CODE1, ChannelSpec(symbol_error_prob=0.25, seed=3))[1] == pos


@pytest.mark.parametrize(
    "kwargs",
    [
        {},
        {"errors_per_codeword": 128},
        {"errors_per_codeword": -1},
        {"symbol_error_prob": 1.5},
        {"errors_per_codeword": 3, "symbol_error_prob": 0.1},
        {"errors_per_codeword": 3, "seed": 2**64},
    ],
)
def test_invalid_spec(kwargs):
    with pytest.raises(ValueError):
        ChannelSpec(**kwargs)


def test_derive_seed_stable():
    assert derive_seed(1, 0) == derive_seed(1, 0)
    assert len({derive_seed(1, i) for i in range(100)}) == 100
    assert 0 <= derive_seed(2**64 - 1, 7) < 2**64


def test_sweep():
    grid = [ChannelSpec(errors_per_codeword=e) for e in (0, 32, 40)]
    rows = sweep_decode_failure_rate(grid, trials=100, seed=4)
    assert [r.parameter for r in rows] == [0, 32, 40]
    assert rows[0].failure_rate == 0 and rows[1].failure_rate == 0
    assert rows[2].failures + rows[2].miscorrections == 100
    assert rows[0].miscorrections == rows[1].miscorrections == 0
    assert sweep_decode_failure_rate(grid, trials=100, seed=4) == rows


def test_sweep_needs_trials():
    with pytest.raises(ValueError):
        sweep_decode_failure_rate([ChannelSpec(errors_per_codeword=1)], trials=0)
