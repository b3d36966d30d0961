# -*- coding: utf-8 -*-
"""
Canonical program strings and the program enumeration.

An n-state program is written as the unary header ``1^(n-1) 0`` followed by
the rank of its transition table in a fixed number of bits. The rank reads
the table as a mixed-radix number, one digit per (state, symbol) pair in
order, the first pair most significant, with digit
(write * 2 + move) * (n + 1) + next. Header lengths differ per state count,
so the strings form a prefix-free set. Program indices count the valid
strings in length-then-lex order, which makes every natural number a program.
"""

from functools import lru_cache
from typing import Optional, Tuple

from src.errors import InvalidProgramIndex
from src.turing.machine import MachineProgram, Transition


@lru_cache(maxsize=None)
def table_count(states: int) -> int:
    """Number of distinct n-state transition tables, (6 (n + 1))^(3 n)."""
    return (6 * (states + 1)) ** (3 * states)


@lru_cache(maxsize=None)
def rank_bits(states: int) -> int:
    return (table_count(states) - 1).bit_length()


def code_length(states: int) -> int:
    return states + rank_bits(states)


def table_rank(p: MachineProgram) -> int:
    base = p.states + 1
    rank = 0
    for t in p.transitions:
        rank = rank * 6 * base + (t.write * 2 + t.move) * base + t.next
    return rank


def table_from_rank(states: int, rank: int) -> MachineProgram:
    if not 0 <= rank < table_count(states):
        raise ValueError(f"rank {rank} out of range for {states}-state tables")
    base = states + 1
    digits = []
    for _ in range(3 * states):
        rank, d = divmod(rank, 6 * base)
        digits.append(d)
    transitions = []
    for d in reversed(digits):
        write_move, nxt = divmod(d, base)
        write, move = divmod(write_move, 2)
        transitions.append(Transition(write, move, nxt))
    return MachineProgram(states, tuple(transitions))


def encode(p: MachineProgram) -> str:
    """Canonical bit string of p."""
    return "1" * (p.states - 1) + "0" + format(table_rank(p), f"0{rank_bits(p.states)}b")


def split_header(bits: str) -> Optional[Tuple[int, str]]:
    """(state count, rank field) of a string whose header is complete, else None."""
    zero = bits.find("0")
    if zero < 0:
        return None
    return zero + 1, bits[zero + 1:]


def decode_bits(bits: str) -> Optional[MachineProgram]:
    """Program of a canonical string; None when the rank field is past the table count."""
    header = split_header(bits)
    if header is None:
        raise ValueError(f"{bits!r} has no complete state-count header")
    states, field = header
    if len(field) != rank_bits(states):
        raise ValueError(f"{states}-state programs carry {rank_bits(states)} rank bits, got {len(field)}")
    rank = int(field, 2)
    if rank >= table_count(states):
        return None
    return table_from_rank(states, rank)


def _locate(index: int) -> Tuple[int, int]:
    states = 1
    while index >= table_count(states):
        index -= table_count(states)
        states += 1
    return states, index


def program_from_index(index: int) -> MachineProgram:
    if isinstance(index, bool) or not isinstance(index, int) or index < 0:
        raise InvalidProgramIndex(f"program index must be a natural number, got {index!r}")
    states, rank = _locate(index)
    return table_from_rank(states, rank)


def program_index(p: MachineProgram) -> int:
    return sum(table_count(k) for k in range(1, p.states)) + table_rank(p)
