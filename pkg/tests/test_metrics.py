import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcube.exceptions import AllZeroWeights
from lcube.metrics import EvalRecord, accuracy_forced, audrc, summarize
from lcube.score import Direction
from oracles import audrc_by_definition

X, Y, U = Direction.X_TO_Y, Direction.Y_TO_X, Direction.UNDECIDED


def rec(pid, decision, conf, truth=X, weight=1.0):
    return EvalRecord(pid, decision, conf, truth, weight)


class TestAccuracy:

    def test_unweighted(self):
        records = [rec("a", X, 1), rec("b", X, 1), rec("c", X, 1), rec("d", Y, 1)]
        assert accuracy_forced(records) == 0.75

    def test_weighted(self):
        records = [rec("a", X, 1, weight=3), rec("b", Y, 1, weight=1)]
        assert accuracy_forced(records) == 0.75

    def test_undecided_counts_wrong(self):
        base = [rec("a", X, 1), rec("b", Y, 1, truth=Y)]
        assert accuracy_forced(base) == 1.0
        assert accuracy_forced(base + [rec("c", U, 0)]) < 1.0

    def test_all_zero_weights(self):
        with pytest.raises(AllZeroWeights):
            accuracy_forced([rec("a", X, 1, weight=0)])
        with pytest.raises(AllZeroWeights):
            accuracy_forced([])

    @given(st.lists(st.booleans(), min_size=1, max_size=40))
    def test_equal_weights_give_plain_fraction(self, hits):
        records = [rec(str(i), X if h else Y, 1, weight=2.5) for i, h in enumerate(hits)]
        assert accuracy_forced(records) == pytest.approx(np.mean(hits), abs=1e-15)


class TestAudrc:

    def test_all_correct(self):
        assert audrc([rec(str(i), X, i) for i in range(7)]) == 1.0

    def test_confident_correct(self):
        assert audrc([rec("a", X, 2.0), rec("b", Y, 1.0)]) == 0.75

    def test_confident_wrong(self):
        assert audrc([rec("a", Y, 2.0), rec("b", X, 1.0)]) == 0.25

    def test_ties_broken_by_id(self):
        a = [rec("b", Y, 1.0), rec("a", X, 1.0)]
        assert audrc(a) == audrc(a[::-1]) == 0.75

    def test_weights_ignored(self):
        assert audrc([rec("a", X, 2.0, weight=9), rec("b", Y, 1.0, weight=0)]) == 0.75

    def test_empty(self):
        with pytest.raises(ValueError):
            audrc([])

    @given(st.lists(st.tuples(st.sampled_from([X, Y, U]), st.integers(0, 5), st.sampled_from([X, Y])),
                    min_size=1, max_size=30), st.randoms())
    def test_matches_definition_and_bounds(self, rows, rnd):
        records = [rec(f"p{i:03d}", d, float(c), t) for i, (d, c, t) in enumerate(rows)]
        ordered = sorted(records, key=lambda r: (-r.confidence, r.pair_id))
        expected = audrc_by_definition([r.decision == r.truth for r in ordered])
        value = audrc(records)
        assert value == pytest.approx(expected, abs=1e-12)
        assert 0.0 <= value <= 1.0
        shuffled = records[:]
        rnd.shuffle(shuffled)
        assert audrc(shuffled) == value
        n_correct = sum(r.correct for r in records)
        assert (value == 1.0) == (n_correct == len(records))
        assert (value == 0.0) == (n_correct == 0)


def test_summarize():
    s = summarize([rec("a", X, 2.0), rec("b", U, 0.0), rec("c", Y, 1.0, truth=Y)])
    assert s.n_pairs == 3 and s.n_undecided == 1
    assert s.accuracy == pytest.approx(2 / 3)
    assert s.audrc == pytest.approx((1 + 1 + 2 / 3) / 3)


def test_record_validation():
    with pytest.raises(ValueError):
        rec("a", X, -1.0)
    with pytest.raises(ValueError):
        rec("a", X, 1.0, weight=-2)
