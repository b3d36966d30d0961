# -*- coding: utf-8 -*-
"""
The Diophantine observable and evolution over a finite search domain.

The observable is diagonal on the domain basis with eigenvalue D(x)^2 at the
enumeration index of x. The evolution relabels |x> as |D(x)^2, x> in the
product basis tag * N + index(x) of an energy-tag register and the position
register, N being the domain size.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from src.config import TAG_WIDTH
from src.diophantine.domain import Point, SearchDomain
from src.diophantine.polynomial import DiophantinePolynomial
from src.errors import DimensionMismatch, TagOverflow
from src.state.statevec import DiagonalObservable, StateVector, apply_unitary
from src.state.unitary import Permutation

logger = logging.getLogger(__name__)

INT64_LIMIT = 1 << 62


def value_bound(D: DiophantinePolynomial, cutoff: int) -> int:
    """Upper bound on |D(x)| over {0..cutoff-1}^n."""
    top = cutoff - 1
    return sum(abs(c) * top ** sum(exps) for c, exps in D.terms)


def domain_values(D: DiophantinePolynomial, dom: SearchDomain) -> np.ndarray:
    """D(x) at every domain point, in enumeration order.

    Uses int64 when the squared values provably fit, Python integers otherwise.
    """
    if D.arity != dom.arity:
        raise DimensionMismatch(f"polynomial arity {D.arity} does not match domain arity {dom.arity}")
    bound = value_bound(D, dom.cutoff)
    dtype = np.int64 if bound * bound < INT64_LIMIT else object
    points = np.array(dom.points, dtype=dtype).reshape(dom.size, dom.arity)
    values = np.zeros(dom.size, dtype=dtype)
    for coeff, exps in D.terms:
        term = np.full(dom.size, coeff, dtype=dtype)
        for i, e in enumerate(exps):
            if e:
                term = term * points[:, i] ** e
        values = values + term
    return values


def squared_values(D: DiophantinePolynomial, dom: SearchDomain) -> np.ndarray:
    values = domain_values(D, dom)
    return values * values


def build_observable(D: DiophantinePolynomial, dom: SearchDomain) -> DiagonalObservable:
    """Diagonal observable with eigenvalue D(x)^2 at index(x)."""
    energies = squared_values(D, dom)
    return DiagonalObservable({i: Fraction(int(e)) for i, e in enumerate(energies)})


def diophantine_evolution(D: DiophantinePolynomial, dom: SearchDomain, tag_width: int = TAG_WIDTH,
                          support: Optional[Iterable[int]] = None) -> Permutation:
    """Relabeling |x> -> |D(x)^2, x> as a permutation of the extended basis.

    Index i with a nonzero tag swaps with tag * N + i; since tag * N + i >= N
    for every nonzero tag the swaps are disjoint and the map is a bijection.
    With ``support`` given, only those indices are relabeled and only their
    tags must fit the register.
    """
    energies = squared_values(D, dom)
    indices = range(dom.size) if support is None else sorted(support)
    n = dom.size
    mapping: Dict[int, int] = {}
    for i in indices:
        e = int(energies[i])
        if e >= 1 << tag_width:
            raise TagOverflow(f"D(x)^2 = {e} at index {i} does not fit a {tag_width}-bit tag register")
        if e:
            target = e * n + i
            mapping[i] = target
            mapping[target] = i
    return Permutation(mapping)


def extended_dimension(dom: SearchDomain, tag_width: int = TAG_WIDTH) -> int:
    return (1 << tag_width) * dom.size


def apply_U_D(s: StateVector, D: DiophantinePolynomial, dom: SearchDomain,
              tag_width: int = TAG_WIDTH) -> StateVector:
    """Tag every domain component with its energy; amplitudes are carried unchanged."""
    if s.dimension != dom.size:
        raise DimensionMismatch(f"state dimension {s.dimension} is not the domain size {dom.size}")
    u = diophantine_evolution(D, dom, tag_width, support=s.amplitudes)
    embedded = StateVector(extended_dimension(dom, tag_width), s.amplitudes, s.resolution)
    out = apply_unitary(embedded, u)
    logger.debug("U_D on %d components over a %d-point domain", s.support, dom.size)
    return out


def extended_label(index: int, dom: SearchDomain) -> Tuple[int, Point]:
    """Split an extended basis index into (energy tag, domain point)."""
    tag, position = divmod(index, dom.size)
    return tag, dom.point(position)
