import json

import pytest

from conftest import rec, tab
from superrsk import (
    DUAL_DUAL,
    REGULAR_DUAL,
    REGULAR_REGULAR,
    Alphabet,
    PendingAction,
    Sample,
    Word,
    align_traces,
    all_shuffles,
    insert_word,
    parse_shuffle,
    parse_word,
    states_equivalent,
    t,
    u,
)
from superrsk.verify import (
    check_cell_monotonicity,
    check_cell_monotonicity_grid,
    check_counting_identity,
    check_dual_regular_agreement,
    check_dual_regular_agreement_grid,
    check_hook_schur_invariance,
    check_path_monotonicity,
    check_path_monotonicity_grid,
    check_region1_agreement,
    check_region1_agreement_grid,
    check_restriction_subtableau,
    check_restriction_subtableau_grid,
    check_round_trip_grid,
    check_shape_invariance,
    check_trace_alignment_grid,
    check_weight_preserving_bijection,
    check_weight_preserving_bijection_grid,
    region2_stats,
)

ALPH32 = Alphabet(3, 2)
ORDER_A = parse_shuffle("t1<u1<t2<u2<t3", ALPH32)
ORDER_B = parse_shuffle("t1<u1<u2<t2<t3", ALPH32)
WORD7 = parse_word("u1,t3,t2,u2,t2,u1,t1", ALPH32)
P_A = tab("t1 u1 t2 / u1 t2 u2 / t3")
P_B = tab("t1 u1 u2 / u1 t2 t2 / t3")


class TestStatesEquivalent:
    def test_final_states_of_seven_letter_word(self):
        assert states_equivalent((P_A, None), (P_B, None), ORDER_A, ORDER_B)

    def test_symmetric(self):
        assert states_equivalent((P_B, None), (P_A, None), ORDER_B, ORDER_A)

    def test_first_states_are_equal(self):
        ta = insert_word(WORD7, ORDER_A, REGULAR_REGULAR).trace
        tb = insert_word(WORD7, ORDER_B, REGULAR_REGULAR).trace
        assert ta.state_after(1) == tb.state_after(1)
        pending = PendingAction(t(3), "row", 1)
        assert states_equivalent(
            (ta.state_after(1), pending), (tb.state_after(1), pending), ORDER_A, ORDER_B
        )

    def test_changed_low_region_entry_breaks_equivalence(self):
        mutated = tab("u1 u1 u2 / u1 t2 t2 / t3")
        assert not states_equivalent((P_A, None), (mutated, None), ORDER_A, ORDER_B)

    def test_mismatched_pending_breaks_equivalence(self):
        one = PendingAction(u(1), "column", 1)
        other = PendingAction(u(1), "column", 2)
        assert not states_equivalent((P_A, one), (P_B, other), ORDER_A, ORDER_B)
        assert not states_equivalent((P_A, one), (P_B, None), ORDER_A, ORDER_B)

    def test_component_census_matters(self):
        # same pair-region cells, same component, but different t-counts
        left = tab("t2 t2")
        right = tab("t2 u2")
        assert not states_equivalent((left, None), (right, None), ORDER_A, ORDER_B)
        # and same census with mirrored entries is accepted
        mirrored = tab("u2 t2")  # census (1, 1) either way round
        assert states_equivalent((right, None), (mirrored, None), ORDER_A, ORDER_B)

    def test_requires_adjacent_orders(self, a22, order_ttuu, order_uutt):
        with pytest.raises(ValueError):
            states_equivalent((P_A, None), (P_B, None), order_ttuu, order_uutt)


class TestRegion2Stats:
    def test_census_of_seven_letter_word(self):
        stats = region2_stats(P_A, ORDER_A, (t(2), u(2)))
        assert stats == {frozenset({(1, 3), (2, 2), (2, 3)}): (2, 1)}
        stats_b = region2_stats(P_B, ORDER_B, (t(2), u(2)))
        assert stats_b == {frozenset({(1, 3), (2, 2), (2, 3)}): (2, 1)}


class TestAlignTraces:
    def test_two_letter_word(self):
        alph = Alphabet(1, 1)
        A, B = all_shuffles(alph)
        word = Word((t(1), u(1)))
        trace_a = insert_word(word, A, REGULAR_REGULAR).trace
        trace_b = insert_word(word, B, REGULAR_REGULAR).trace
        assert (trace_a.total, trace_b.total) == (2, 3)
        alignment = align_traces(trace_a, A, trace_b, B)
        assert alignment.pairs == ((1, 1), (2, 3))
        assert alignment.witness_count == 1

    def test_endpoints_and_matched_pairs(self):
        trace_a = insert_word(WORD7, ORDER_A, REGULAR_REGULAR).trace
        trace_b = insert_word(WORD7, ORDER_B, REGULAR_REGULAR).trace
        alignment = align_traces(trace_a, ORDER_A, trace_b, ORDER_B)
        assert alignment.pairs[0] == (1, 1)
        assert alignment.pairs[-1] == (trace_a.total, trace_b.total)
        for (p, q), (np_, nq) in zip(alignment.pairs, alignment.pairs[1:]):
            assert (np_ - p, nq - q) in ((1, 1), (1, 2), (2, 1))

    def test_matched_pairs_all_equivalent(self, a22):
        # rebuild each matched state and confirm equivalence independently
        shuffles = all_shuffles(a22)
        adjacent = [
            (a, b)
            for i, a in enumerate(shuffles)
            for b in shuffles[i + 1 :]
            if align_pair_ok(a, b)
        ]
        from superrsk.verify import _states

        for word in (parse_word("u2,t1,t2,u1", a22), parse_word("t1,u1,u1", a22)):
            for a, b in adjacent:
                trace_a = insert_word(word, a, REGULAR_REGULAR).trace
                trace_b = insert_word(word, b, REGULAR_REGULAR).trace
                alignment = align_traces(trace_a, a, trace_b, b)
                states_a = _states(trace_a)
                states_b = _states(trace_b)
                for p, q in alignment.pairs:
                    assert states_equivalent(states_a[p - 1], states_b[q - 1], a, b)

    def test_rejects_non_adjacent(self, a22, order_ttuu, order_uutt):
        word = parse_word("t1,u1", a22)
        trace_a = insert_word(word, order_ttuu, REGULAR_REGULAR).trace
        trace_b = insert_word(word, order_uutt, REGULAR_REGULAR).trace
        with pytest.raises(ValueError):
            align_traces(trace_a, order_ttuu, trace_b, order_uutt)

    def test_empty_word(self):
        alph = Alphabet(1, 1)
        A, B = all_shuffles(alph)
        empty_a = insert_word(Word(), A, REGULAR_REGULAR).trace
        empty_b = insert_word(Word(), B, REGULAR_REGULAR).trace
        alignment = align_traces(empty_a, A, empty_b, B)
        assert alignment.pairs == ()


def align_pair_ok(a, b):
    from superrsk import adjacent_transposition

    return adjacent_transposition(a, b) is not None


class TestSingleCasePredicates:
    def test_path_monotonicity_on_worked_example(self):
        result = insert_word(WORD7, ORDER_A, REGULAR_REGULAR)
        assert check_path_monotonicity(result)

    def test_cell_monotonicity_on_worked_example(self):
        result = insert_word(WORD7, ORDER_A, REGULAR_REGULAR)
        assert check_cell_monotonicity(result, ORDER_A)

    def test_restriction_subtableau_cases(self, a22, order_ttuu):
        word = parse_word("u2,t1,t2,u1", a22)
        assert check_restriction_subtableau(word, order_ttuu, t(2))
        assert check_restriction_subtableau(word, order_ttuu, u(2))  # maximum letter

    def test_region1_agreement_cases(self):
        assert check_region1_agreement(WORD7, ORDER_A, ORDER_B)
        pair_only = parse_word("t2,u2,t2", ALPH32)
        assert check_region1_agreement(pair_only, ORDER_A, ORDER_B)

    def test_region1_agreement_requires_adjacent(self, a22, order_ttuu, order_uutt):
        with pytest.raises(ValueError):
            check_region1_agreement(parse_word("t1", a22), order_ttuu, order_uutt)

    def test_dual_regular_agreement_cases(self, a22, order_ttuu):
        assert check_dual_regular_agreement(parse_word("u2,t1,t2,u1", a22), order_ttuu)
        assert check_dual_regular_agreement(parse_word("t1,t1", a22), order_ttuu)
        with pytest.raises(ValueError):
            check_dual_regular_agreement(parse_word("u1,u1", a22), order_ttuu)


class TestReports:
    def test_shape_invariance_small(self, a22):
        report = check_shape_invariance(a22, 4)
        assert report.passed
        assert report.cases_run == 256 * 15
        assert report.parameters["variant"] == "reg-reg"

    def test_shape_invariance_trivial_length_one(self, a22):
        report = check_shape_invariance(a22, 1)
        assert report.passed and report.cases_run == 4 * 15

    def test_variant_reports_match_for_regular_rules(self, a22):
        base = check_shape_invariance(a22, 3, REGULAR_REGULAR)
        again = check_shape_invariance(a22, 3, REGULAR_REGULAR)
        assert base.cases_run == again.cases_run
        assert base.failures == again.failures == ()

    def test_variant_shapes_agree_on_dual_example(self):
        alph = Alphabet(2, 1)
        word = parse_word("u1,t1,t2,u1", alph)
        shapes = {
            insert_word(word, s, REGULAR_DUAL).p.shape for s in all_shuffles(alph)
        }
        assert len(shapes) == 1

    def test_report_json_layout(self, a22):
        report = check_shape_invariance(a22, 2)
        payload = report.to_json_dict()
        assert set(payload) == {"check", "params", "cases", "failures", "stats", "elapsed_ms"}
        assert payload["check"] == "shape-invariance"
        assert payload["failures"] == []
        json.dumps(payload)  # serializable

    def test_sampling_is_reproducible(self, a22):
        first = check_shape_invariance(a22, 6, REGULAR_REGULAR, Sample(25, 7))
        second = check_shape_invariance(a22, 6, REGULAR_REGULAR, Sample(25, 7))
        a_json = first.to_json_dict()
        b_json = second.to_json_dict()
        a_json.pop("elapsed_ms")
        b_json.pop("elapsed_ms")
        assert a_json == b_json
        assert first.parameters["mode"] == "sample"
        assert first.cases_run == 25 * 15

    def test_trace_alignment_grid_records_witnesses(self, a22):
        report = check_trace_alignment_grid(a22, 2)
        assert report.passed
        assert "witness_counts" in report.stats

    def test_round_trip_grid(self, a22):
        report = check_round_trip_grid(a22, 2, DUAL_DUAL)
        assert report.passed and report.cases_run == 16 * 6

    def test_other_grids_small(self, a22):
        assert check_path_monotonicity_grid(a22, 3).passed
        assert check_cell_monotonicity_grid(a22, 3).passed
        assert check_restriction_subtableau_grid(a22, 2).passed
        assert check_region1_agreement_grid(a22, 3).passed
        assert check_dual_regular_agreement_grid(a22, 3).passed
        assert check_hook_schur_invariance(a22, 3).passed
        assert check_counting_identity(a22, 3).passed


class TestWeightPreservingBijection:
    def test_single_shape_report(self, a22, order_ttuu, order_uutt):
        report = check_weight_preserving_bijection(
            (3, 1), a22, order_ttuu, order_uutt, rec("1 2 3 / 4")
        )
        assert report.passed
        assert report.cases_run > 0

    def test_identity_when_orders_equal(self, a22, order_ttuu):
        report = check_weight_preserving_bijection(
            (2, 1), a22, order_ttuu, order_ttuu, rec("1 2 / 3")
        )
        assert report.passed

    def test_rejects_mismatched_recorder(self, a22, order_ttuu, order_uutt):
        with pytest.raises(ValueError):
            check_weight_preserving_bijection(
                (3, 1), a22, order_ttuu, order_uutt, rec("1 2 / 3")
            )
        with pytest.raises(ValueError):
            check_weight_preserving_bijection(
                (2, 1), a22, order_ttuu, order_uutt, rec("1 3 / 2 4")
            )

    def test_grid_reports_distinct_maps(self, a22):
        report = check_weight_preserving_bijection_grid(a22, 2)
        assert report.passed
        assert "distinct_maps_by_shape" in report.stats
