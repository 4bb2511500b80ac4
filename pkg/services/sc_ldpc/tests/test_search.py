"""Test suite for the minimum-L_h searches (exhaustive and Montecarlo)."""
import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

import json
from io import StringIO

import pytest
from services.sc_ldpc.bounds import bound_g6, lower_bound_for_search
from services.sc_ldpc.errors import BudgetExceededError, InvalidParamsError
from services.sc_ldpc.girth import supports_girth
from services.sc_ldpc.search import (
    DEFAULT_SEED,
    JsonLinesProgress,
    SearchSpec,
    batch_generator,
    canonical_rows,
    draw_candidate,
    exhaustive_min_lh,
    has_4cycle,
    montecarlo_search,
    naive_min_lh,
    run_search,
)

# (a, c, w, g, width of the reference code, published m_h of the found code)
REFERENCE_TARGETS = [
    (6, 3, 3, 10, 258, 38),
    (5, 3, 3, 12, 558, 52),
]


def assert_girth_at_least(outcome, g):
    assert outcome.found
    girth = supports_girth(outcome.best.supports, outcome.best.c, g - 2)
    assert girth is None


class TestSearchSpec:
    """Search parameters and their validation."""

    def test_defaults(self):
        """Default budgets and L_h range."""
        spec = SearchSpec(3, 1, 2, 8)
        assert spec.row_weights == (2, 2, 2)
        assert spec.budget == 20_000_000
        assert spec.lh_range() == (6, 6 + 256)
        assert SearchSpec(3, 1, 2, 8, mode="random").budget == 100_000

    def test_infeasible_range(self):
        """No range when the target cannot be met."""
        assert SearchSpec(4, 1, 3, 8).lh_range() is None

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"mode": "greedy"},
            {"budget": 0},
            {"workers": 0},
            {"seed": -1},
            {"lh_min": 9, "lh_max": 8},
        ],
    )
    def test_invalid(self, kwargs):
        """Rejected mode, budget, workers, seed and range."""
        with pytest.raises(InvalidParamsError):
            SearchSpec(3, 1, 2, 8, **kwargs)

    def test_canonical_rows(self):
        """Rows start on a level < c."""
        assert canonical_rows(4, 2, 2) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]


class TestExhaustive:
    """Exhaustive minimum-L_h search."""

    def test_sum_free_rows(self):
        """Girth 8 with three weight-2 rows."""
        outcome = exhaustive_min_lh(SearchSpec(3, 1, 2, 8))
        assert outcome.complete
        assert outcome.L_h == 6
        assert outcome.m_h == 5
        assert outcome.v_s == 18
        assert sorted(outcome.best.supports) == [(0, 1), (0, 3), (0, 5)]
        assert outcome.girth is None or outcome.girth >= 8

    def test_smallest_girth_six(self):
        """Two rows, one level."""
        outcome = exhaustive_min_lh(SearchSpec(2, 1, 2, 6))
        assert outcome.L_h == 3
        assert outcome.best.supports == ((0, 1), (0, 2))

    def test_weight_two_meets_the_bound(self):
        """Weight 2, girth 6: minimum equals the bound."""
        for c in range(1, 5):
            for a in range(max(2, c + 1), 9):
                outcome = exhaustive_min_lh(SearchSpec(a, c, 2, 6))
                assert outcome.L_h == bound_g6(a, c, 2).lower_bound, (a, c)
                assert_girth_at_least(outcome, 6)

    @pytest.mark.parametrize("a", range(2, 11))
    def test_single_level_girth_eight(self, a):
        """2a is minimal: nothing at 2a - 1."""
        below = exhaustive_min_lh(SearchSpec(a, 1, 2, 8, lh_min=2 * a - 1, lh_max=2 * a - 1))
        assert not below.found
        assert below.complete
        outcome = exhaustive_min_lh(SearchSpec(a, 1, 2, 8))
        assert outcome.L_h == 2 * a

    @pytest.mark.parametrize("a,c", [(a, c) for a in range(2, 6) for c in range(2, 5) if a > c])
    def test_weight_three_stays_close_to_the_bound(self, a, c):
        """Weight 3 lands within 3 of the bound."""
        outcome = exhaustive_min_lh(SearchSpec(a, c, 3, 6))
        bound = bound_g6(a, c, 3).lower_bound
        assert bound <= outcome.L_h <= bound + 3
        assert_girth_at_least(outcome, 6)

    def test_row_order_is_preserved(self):
        """Mixed weights come back in input order."""
        outcome = exhaustive_min_lh(SearchSpec(3, 1, (3, 2, 2), 6))
        assert [len(row) for row in outcome.best.supports] == [3, 2, 2]
        assert_girth_at_least(outcome, 6)

    @pytest.mark.parametrize("a,c", [(2, 1), (3, 1), (3, 2)])
    @pytest.mark.parametrize("g", [6, 8])
    def test_matches_naive_enumeration(self, a, c, g):
        """Symmetry reduction loses no minimum."""
        spec = SearchSpec(a, c, 2, g, lh_max=8)
        fast = exhaustive_min_lh(spec)
        slow = naive_min_lh(spec)
        assert fast.L_h == slow.L_h
        assert fast.found

    @pytest.mark.parametrize("a", [2, 3, 4])
    def test_girth_four_matches_naive_enumeration(self, a):
        """Target 4 keeps configurations with repeated differences."""
        spec = SearchSpec(a, 1, 2, 4, lh_max=6)
        fast = exhaustive_min_lh(spec)
        assert fast.L_h == naive_min_lh(spec).L_h == 2
        assert fast.complete
        assert fast.best.supports == ((0, 1),) * a

    def test_girth_four_starts_at_the_floor(self):
        """With c > 1 the answer for target 4 is the c + 1 floor."""
        outcome = exhaustive_min_lh(SearchSpec(3, 2, 2, 4))
        assert outcome.L_h == 3
        assert outcome.m_h == 1

    def test_infeasible_target(self):
        """Infeasible targets are a complete negative result."""
        outcome = exhaustive_min_lh(SearchSpec(4, 1, 3, 8))
        assert not outcome.found
        assert outcome.complete
        assert outcome.summary()["proof"] == "complete"

    def test_girth_target_is_monotone(self):
        """A larger girth never needs a smaller L_h."""
        g6 = exhaustive_min_lh(SearchSpec(3, 1, 2, 6))
        g8 = exhaustive_min_lh(SearchSpec(3, 1, 2, 8))
        assert g6.L_h == 4
        assert g6.L_h <= g8.L_h

    def test_budget_exceeded(self):
        """Progress survives in the exception."""
        with pytest.raises(BudgetExceededError) as exc:
            exhaustive_min_lh(SearchSpec(3, 1, 2, 8, budget=3))
        assert exc.value.progress["L_h"] == 6
        assert exc.value.progress["proven_empty_below"] == 6
        assert exc.value.progress["nodes"] > 3

    def test_workers_do_not_change_the_outcome(self):
        """Same hit and count with a process pool."""
        serial = exhaustive_min_lh(SearchSpec(4, 2, 2, 8))
        parallel = exhaustive_min_lh(SearchSpec(4, 2, 2, 8, workers=2))
        assert serial.best == parallel.best
        assert serial.candidates == parallel.candidates

    def test_progress_log(self):
        """One JSON record per width."""
        buffer = StringIO()
        exhaustive_min_lh(SearchSpec(3, 1, 2, 8), progress=JsonLinesProgress(buffer))
        records = [json.loads(line) for line in buffer.getvalue().splitlines()]
        assert records[-1]["L_h"] == 6
        assert records[-1]["best_mh"] == 5
        assert records[-1]["mode"] == "exhaustive"
        assert set(records[-1]) == {"mode", "L_h", "candidates", "best_mh", "elapsed_s"}


class TestMontecarlo:
    """Seeded random search."""

    def test_streams_are_reproducible(self):
        """One stream per (seed, batch)."""
        first = batch_generator(2011, 3).integers(0, 1000, size=10)
        again = batch_generator(2011, 3).integers(0, 1000, size=10)
        other = batch_generator(2011, 4).integers(0, 1000, size=10)
        assert first.tolist() == again.tolist()
        assert first.tolist() != other.tolist()

    def test_draw_candidate_shape(self):
        """Weights, shifts and a non-empty last block."""
        rng = batch_generator(7, 0)
        for _ in range(50):
            rows = draw_candidate(rng, 12, (2, 3, 3), 3)
            if rows is None:
                continue
            assert [len(r) for r in rows] == [2, 3, 3]
            assert all(r[0] < 3 for r in rows)
            assert max(r[-1] for r in rows) >= 9

    def test_has_4cycle(self):
        """Repeated (level, delta) pairs."""
        assert has_4cycle([(0, 2), (1, 3)], 1)
        assert not has_4cycle([(0, 2), (1, 3)], 2)

    def test_girth_four_random_search(self):
        """Random search for target 4 is not filtered on 4-cycles."""
        outcome = montecarlo_search(SearchSpec(3, 1, 2, 4, mode="random", budget=500, seed=3))
        assert outcome.found
        assert outcome.L_h >= 2

    def test_single_candidate_budget(self):
        """Budget 1 draws exactly one candidate."""
        outcome = montecarlo_search(SearchSpec(3, 1, 2, 6, mode="random", budget=1))
        assert outcome.candidates == 1
        assert not outcome.complete

    def test_same_seed_same_outcome(self):
        """Seed fixes the outcome."""
        spec = SearchSpec(3, 1, 2, 6, mode="random", budget=2000, seed=5)
        first = montecarlo_search(spec)
        again = montecarlo_search(spec)
        assert first.best == again.best
        assert first.candidates == again.candidates
        assert_girth_at_least(first, 6)
        assert first.L_h >= lower_bound_for_search(3, 1, 2, 6)

    def test_workers_do_not_change_the_outcome(self):
        """Rounds make the outcome worker-independent."""
        serial = montecarlo_search(SearchSpec(4, 2, 2, 6, mode="random", budget=3000, seed=9))
        parallel = montecarlo_search(SearchSpec(4, 2, 2, 6, mode="random", budget=3000, seed=9, workers=2))
        assert serial.best == parallel.best
        assert serial.candidates == parallel.candidates

    def test_progress_every(self):
        """Records every progress_every candidates."""
        buffer = StringIO()
        montecarlo_search(
            SearchSpec(3, 1, 2, 6, mode="random", budget=2000),
            progress=JsonLinesProgress(buffer),
            progress_every=100,
        )
        records = [json.loads(line) for line in buffer.getvalue().splitlines()]
        assert records
        assert all(r["mode"] == "random" for r in records)

    @pytest.mark.parametrize("a,c,w,g,lh_max,published_mh", REFERENCE_TARGETS)
    def test_reference_target_smoke(self, a, c, w, g, lh_max, published_mh):
        """Short runs on the published parameters only emit verified codes."""
        outcome = run_search(SearchSpec(a, c, w, g, mode="random", budget=200, lh_max=lh_max))
        summary = outcome.summary()
        assert summary["proof"] == "heuristic"
        assert summary["candidates"] <= 200
        if outcome.found:
            assert lower_bound_for_search(a, c, w, g) <= outcome.L_h <= lh_max
            assert outcome.girth is None or outcome.girth >= g


@pytest.mark.slow
class TestMontecarloReferenceTargets:
    """Seeded long runs logged against the published memory orders (non-gating, `pytest -m slow`)."""

    @pytest.mark.parametrize("a,c,w,g,lh_max,published_mh", REFERENCE_TARGETS)
    def test_reference_target(self, tmp_path, a, c, w, g, lh_max, published_mh):
        """Default budget and seed, proposals starting from the reference code's width."""
        spec = SearchSpec(a, c, w, g, mode="random", lh_max=lh_max, seed=DEFAULT_SEED, workers=4)
        log = tmp_path / "progress.jsonl"
        with open(log, "w", encoding="ascii") as stream:
            outcome = montecarlo_search(spec, progress=JsonLinesProgress(stream))
        print(
            f"✓ a={a} c={c} w={w} g={g} seed={spec.seed} budget={spec.budget} lh_max={lh_max}: "
            f"best m_h={outcome.m_h} (published {published_mh}), {outcome.candidates} candidates"
        )
        print(log.read_text(encoding="ascii"), end="")
        assert outcome.candidates <= spec.budget
        if outcome.found:
            assert spec.bound <= outcome.L_h <= lh_max
            assert outcome.girth is None or outcome.girth >= g


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
