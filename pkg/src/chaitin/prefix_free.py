# -*- coding: utf-8 -*-
"""
Prefix-free program codewords.

Codewords are the canonical program strings of ``src.turing.enumeration``:
the unary state-count header fixes the length of the rank field, so no
codeword extends another. Every rank field is a codeword, including those past
the table count; they decode to the null machine, which halts after one step.
"""

from typing import Iterable, List

from src.config import MAX_PREFIX_FREE_L
from src.turing.enumeration import code_length, decode_bits, rank_bits
from src.turing.machine import LEFT, HALT, MachineProgram, Transition

NULL_MACHINE = MachineProgram(1, tuple(Transition(s, LEFT, HALT) for s in (0, 1, 2)))


def codeword_count(L: int) -> int:
    """Number of codewords of length <= L, counted from the header/rank grammar."""
    total, states = 0, 1
    while code_length(states) <= L:
        total += 1 << rank_bits(states)
        states += 1
    return total


def enumerate_prefix_free(L: int) -> List[str]:
    """All codewords of length <= L, shortest first, then in lexicographic order."""
    if not 1 <= L <= MAX_PREFIX_FREE_L:
        raise ValueError(f"L must lie in [1, {MAX_PREFIX_FREE_L}], got {L}")
    codes: List[str] = []
    states = 1
    while code_length(states) <= L:
        header = "1" * (states - 1) + "0"
        width = rank_bits(states)
        codes.extend(header + format(rank, f"0{width}b") for rank in range(1 << width))
        states += 1
    return codes


def decode_codeword(bits: str) -> MachineProgram:
    program = decode_bits(bits)
    return NULL_MACHINE if program is None else program


def is_prefix_free(codes: Iterable[str]) -> bool:
    # after sorting, a prefix sits directly before some string it prefixes
    ordered = sorted(codes)
    return all(not b.startswith(a) for a, b in zip(ordered, ordered[1:]))
