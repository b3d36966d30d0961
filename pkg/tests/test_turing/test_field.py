# -*- coding: utf-8 -*-
"""Tests for the Turing field search and the four-squares search."""

import math

import pytest

from src.diophantine.decision import classical_oracle
from src.diophantine.domain import SearchDomain
from src.diophantine.polynomial import parse_polynomial
from src.turing.field import FieldStatus, TuringFieldConfig, emulate_infinite_field, field_search, halt_latency
from src.turing.four_squares import four_squares_demo, sums_of_squares
from src.turing.machine import RunStatus


class TestFieldSearch:
    def test_circle(self, circle25):
        result = field_search(circle25, SearchDomain(2, 10), TuringFieldConfig(machine_count=4, message_rate=1))
        assert result.status is FieldStatus.FIRST_SOLUTION
        assert result.solution == (0, 5)
        assert result.global_halt_tick == result.discovery_tick + 3

    def test_no_root(self, no_root):
        result = field_search(no_root, SearchDomain(1, 100), TuringFieldConfig())
        assert result.status is FieldStatus.EXHAUSTED
        assert result.inputs_evaluated == 100

    def test_single_machine_scans_in_order(self, circle25):
        result = field_search(circle25, SearchDomain(2, 10), TuringFieldConfig(machine_count=1))
        dom = SearchDomain(2, 10)
        assert result.solution == (0, 5)
        assert result.inputs_evaluated == dom.index_of((0, 5)) + 1
        assert result.discovery_tick == (dom.index_of((0, 5)) + 1) * circle25.term_count
        assert result.global_halt_tick == result.discovery_tick

    def test_matches_oracle_on_random_polynomials(self, rng, random_polynomial):
        for _ in range(500):
            D = random_polynomial()
            cutoff = int(rng.integers(1, {1: 33, 2: 33, 3: 17}[D.arity]))
            cfg = TuringFieldConfig(machine_count=int(rng.integers(1, 9)), steps_per_tick=int(rng.integers(1, 4)))
            ours = field_search(D, SearchDomain(D.arity, cutoff), cfg)
            oracle = classical_oracle(D, cutoff)
            assert ours.found == oracle.found, str(D)
            assert ours.solution == oracle.solution, str(D)

    def test_halt_latency_closed_form(self, rng):
        D = parse_polynomial("x0 + x1 - 3")
        for _ in range(50):
            m, v = int(rng.integers(1, 40)), int(rng.integers(1, 10))
            result = field_search(D, SearchDomain(2, 6), TuringFieldConfig(machine_count=m, message_rate=v))
            assert result.global_halt_tick - result.discovery_tick == math.ceil((m - 1) / v)
            assert halt_latency(m, v) == math.ceil((m - 1) / v)

    def test_deterministic(self, circle25):
        cfg = TuringFieldConfig(machine_count=3, message_rate=2, steps_per_tick=2)
        a = field_search(circle25, SearchDomain(2, 12), cfg).to_dict()
        b = field_search(circle25, SearchDomain(2, 12), cfg).to_dict()
        assert a == b

    def test_tick_budget(self, no_root):
        result = field_search(no_root, SearchDomain(1, 100), TuringFieldConfig(tick_budget=5))
        assert result.status is FieldStatus.EXHAUSTED
        assert result.ticks_used == 5

    def test_memory_overflow_is_reported(self):
        D = parse_polynomial("x^10 + 1")
        result = field_search(D, SearchDomain(1, 8), TuringFieldConfig(tape_bound=8))
        assert result.status is FieldStatus.EXHAUSTED
        assert result.memory_overflows == [(x,) for x in range(2, 8)]
        assert field_search(D, SearchDomain(1, 64), TuringFieldConfig(tape_bound=8, machine_count=1)).memory_overflows

    def test_invalid_config(self):
        with pytest.raises(ValueError):
            TuringFieldConfig(machine_count=0)


class TestInfiniteField:
    def test_finds_root_by_growing(self):
        D = parse_polynomial("x - 40")
        out = emulate_infinite_field(D, TuringFieldConfig(machine_count=2), max_rounds=8)
        assert out.result.solution == (40,)
        assert out.rounds[-1]["cutoff"] > 40
        assert [r["status"] for r in out.rounds[:-1]] == ["exhausted"] * (len(out.rounds) - 1)

    def test_gives_up_after_max_rounds(self, no_root):
        out = emulate_infinite_field(no_root, TuringFieldConfig(), max_rounds=3)
        assert len(out.rounds) == 3
        assert not out.result.found


class TestFourSquares:
    def test_one_square(self):
        result = four_squares_demo(1)
        assert result.status is RunStatus.HALTED and result.output == 2

    def test_two_squares(self):
        assert four_squares_demo(2).output == 3

    def test_three_squares(self):
        assert four_squares_demo(3).output == 7

    def test_four_squares_never_halts(self):
        result = four_squares_demo(4, budget=10 ** 6)
        assert result.status is RunStatus.EXHAUSTED
        assert result.steps == 10 ** 6

    def test_sumset_table(self):
        reachable = sums_of_squares(2, 30)
        assert [k for k in range(30) if not reachable[k]] == [3, 6, 7, 11, 12, 14, 15, 19, 21, 22, 23, 24, 27, 28]

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            four_squares_demo(0)
